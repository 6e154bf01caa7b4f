"""Hash-consing table for canonical trees.

Every distinct canonical tree gets a small integer id the first time it is
built. Children are stored in canonical order (smaller encoding first), so two
trees are isomorphic iff they have the same id. The kernels work on these ids
and on sorted id tuples (forests) only.

The table is append-only. Writers take a lock; readers never see a
half-built row because the lookup dicts are updated last.
"""
import threading

LEAF = -1


class TreeTable:
    def __init__(self):
        self.left = []
        self.right = []
        self.label = []
        self.nleaves = []
        self.twins = []  # internal nodes whose two children are identical
        self.enc = []
        self.pairs = {}  # (min id, max id) -> id
        self.leaves = {}  # label -> id
        self._lock = threading.Lock()

    def __len__(self):
        return len(self.enc)

    def new_leaf(self, label):
        with self._lock:
            t = self.leaves.get(label)
            if t is not None:
                return t
            t = len(self.enc)
            self.left.append(LEAF)
            self.right.append(LEAF)
            self.label.append(label)
            self.nleaves.append(1)
            self.twins.append(0)
            self.enc.append("L:" + label)
            self.leaves[label] = t
            return t

    def new_node(self, a, b):
        key = (a, b) if a <= b else (b, a)
        with self._lock:
            t = self.pairs.get(key)
            if t is not None:
                return t
            enc = self.enc
            if enc[b] < enc[a]:
                a, b = b, a
            t = len(enc)
            self.left.append(a)
            self.right.append(b)
            self.label.append(None)
            self.nleaves.append(self.nleaves[a] + self.nleaves[b])
            self.twins.append(self.twins[a] + self.twins[b] + (a == b))
            enc.append("(" + enc[a] + "," + enc[b] + ")")
            self.pairs[key] = t
            return t


TABLE = TreeTable()
