"""Disjoint set forest over tuple ids.

Union by rank with full path compression on find, giving near-constant
amortized cost per operation. Tids are mapped to dense slots and the
parent/rank tables are flat C-int arrays, which keeps the hot loops cache
friendly even for millions of elements.
"""

from array import array


class DisjointSetForest:

    def __init__(self, tids=()):
        self._slot = {}
        self._tids = []
        self._parent = array("i")
        self._rank = array("b")
        self.class_count = 0
        for tid in tids:
            self.makeset(tid)

    def __len__(self):
        return len(self._tids)

    def __contains__(self, tid):
        return tid in self._slot

    def makeset(self, tid):
        if tid in self._slot:
            raise ValueError("tid %r already registered" % (tid,))
        slot = len(self._tids)
        self._slot[tid] = slot
        self._tids.append(tid)
        self._parent.append(slot)
        self._rank.append(0)
        self.class_count += 1

    def _find_slot(self, slot):
        parent = self._parent
        root = parent[slot]
        while parent[root] != root:
            root = parent[root]
        while parent[slot] != root:  # path compression
            parent[slot], slot = root, parent[slot]
        return root

    def find(self, tid):
        return self._tids[self._find_slot(self._slot[tid])]

    def union(self, tid1, tid2):
        """Merge the classes of tid1 and tid2; False if already merged."""
        r1 = self._find_slot(self._slot[tid1])
        r2 = self._find_slot(self._slot[tid2])
        if r1 == r2:
            return False
        rank = self._rank
        if rank[r1] < rank[r2]:
            r1, r2 = r2, r1
        self._parent[r2] = r1
        if rank[r1] == rank[r2]:
            rank[r1] += 1
        self.class_count -= 1
        return True

    def classes(self):
        """Partition of registered tids, ordered by minimal member tid."""
        by_root = {}
        find, tids = self._find_slot, self._tids
        for slot in range(len(tids)):
            by_root.setdefault(find(slot), []).append(tids[slot])
        members = [sorted(group) for group in by_root.values()]
        members.sort(key=lambda group: group[0])
        return members
