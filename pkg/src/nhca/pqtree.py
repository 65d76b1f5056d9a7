"""A small PQ-tree for the consecutive-ones property.

Each ``reduce`` walks the whole tree once, so a sequence of ``r``
constraints over ``k`` leaves costs O(r * k).  It is the exact fallback
behind the LBFS sweeps and is also used to cross-check them in tests.
"""

from __future__ import annotations

from typing import Iterable

LEAF, PNODE, QNODE = "L", "P", "Q"
EMPTY, FULL, PARTIAL = 0, 1, 2


class _Node:
    __slots__ = ("kind", "children", "leaf")

    def __init__(self, kind, children=None, leaf=None):
        self.kind = kind
        self.children = children or []
        self.leaf = leaf


class ReductionFailed(Exception):
    pass


def _group(nodes):
    return nodes[0] if len(nodes) == 1 else _Node(PNODE, list(nodes))


def _qnode(nodes):
    if len(nodes) == 1:
        return nodes[0]
    if len(nodes) == 2:
        return _Node(PNODE, list(nodes))
    return _Node(QNODE, list(nodes))


class PQTree:
    def __init__(self, leaves: Iterable):
        leaves = list(leaves)
        self.size = len(leaves)
        kids = [_Node(LEAF, leaf=x) for x in leaves]
        self.root = _group(kids) if kids else None

    def frontier(self) -> list:
        out = []
        stack = [self.root] if self.root is not None else []
        while stack:
            node = stack.pop()
            if node.kind == LEAF:
                out.append(node.leaf)
            else:
                stack.extend(reversed(node.children))
        return out

    # bookkeeping ----------------------------------------------------------

    def _count(self, s):
        cnt, tot = {}, {}

        def walk(node):
            if node.kind == LEAF:
                c, t = (1 if node.leaf in s else 0), 1
            else:
                c = t = 0
                for ch in node.children:
                    a, b = walk(ch)
                    c += a
                    t += b
            cnt[id(node)] = c
            tot[id(node)] = t
            return c, t

        walk(self.root)
        return cnt, tot

    def reduce(self, s) -> bool:
        """Restrict the tree so the leaves in ``s`` are consecutive."""
        s = set(s)
        if len(s) <= 1 or self.root is None:
            return True
        cnt, tot = self._count(s)
        self._cnt, self._tot = cnt, tot
        path = [self.root]
        while True:
            node = path[-1]
            nxt = None
            for ch in node.children:
                if cnt[id(ch)] == len(s):
                    nxt = ch
                    break
            if nxt is None:
                break
            path.append(nxt)
        try:
            new = self._root_reduce(path[-1])
        except ReductionFailed:
            return False
        if len(path) == 1:
            self.root = new
        else:
            parent = path[-2]
            i = next(j for j, ch in enumerate(parent.children) if ch is path[-1])
            parent.children[i] = new
        return True

    def _status(self, node):
        c = self._cnt[id(node)]
        if c == 0:
            return EMPTY
        if c == self._tot[id(node)]:
            return FULL
        return PARTIAL

    # templates ------------------------------------------------------------

    def _partial(self, node):
        """Sequence (empties ... fulls) replacing a partial non-root node."""
        if node.kind == PNODE:
            e, f, parts = [], [], []
            for ch in node.children:
                st = self._status(ch)
                if st == EMPTY:
                    e.append(ch)
                elif st == FULL:
                    f.append(ch)
                else:
                    parts.append(ch)
            if len(parts) > 1:
                raise ReductionFailed
            seq = []
            if e:
                seq.append(_group(e))
            if parts:
                seq.extend(self._partial(parts[0]))
            if f:
                seq.append(_group(f))
            return seq
        # Q-node: children must read E* [partial] F* in one of two directions
        for kids in (node.children, node.children[::-1]):
            seq = self._q_sequence(kids)
            if seq is not None:
                return seq
        raise ReductionFailed

    def _q_sequence(self, kids):
        stage = 0  # 0: empties, 1: after partial, 2: fulls
        seq = []
        for ch in kids:
            st = self._status(ch)
            if st == EMPTY:
                if stage != 0:
                    return None
                seq.append(ch)
            elif st == PARTIAL:
                if stage != 0:
                    return None
                stage = 1
                seq.extend(self._partial(ch))
            else:
                stage = 2
                seq.append(ch)
        return seq

    def _root_reduce(self, node):
        if node.kind == LEAF or self._status(node) == FULL:
            return node
        if node.kind == PNODE:
            e, f, parts = [], [], []
            for ch in node.children:
                st = self._status(ch)
                (e if st == EMPTY else f if st == FULL else parts).append(ch)
            if len(parts) > 2:
                raise ReductionFailed
            if not parts:
                return _Node(PNODE, e + [_group(f)])
            mid = list(self._partial(parts[0]))
            if f:
                mid.append(_group(f))
            if len(parts) == 2:
                mid.extend(reversed(self._partial(parts[1])))
            q = _Node(QNODE, mid) if len(mid) > 2 else _qnode(mid)
            return _Node(PNODE, e + [q]) if e else q
        kids = node.children
        st = [self._status(ch) for ch in kids]
        idx = [i for i, x in enumerate(st) if x != EMPTY]
        lo, hi = idx[0], idx[-1]
        if hi - lo + 1 != len(idx):
            raise ReductionFailed
        if any(st[i] != FULL for i in range(lo + 1, hi)):
            raise ReductionFailed
        out = list(kids[:lo])
        if st[lo] == PARTIAL:
            out.extend(self._partial(kids[lo]))
        else:
            out.append(kids[lo])
        out.extend(kids[lo + 1:hi])
        if hi != lo:
            if st[hi] == PARTIAL:
                out.extend(reversed(self._partial(kids[hi])))
            else:
                out.append(kids[hi])
        out.extend(kids[hi + 1:])
        return _Node(QNODE, out)


def consecutive_order(universe, sets) -> list | None:
    """An ordering of ``universe`` in which every set is consecutive, or None."""
    tree = PQTree(universe)
    for s in sets:
        if not tree.reduce(s):
            return None
    return tree.frontier()
