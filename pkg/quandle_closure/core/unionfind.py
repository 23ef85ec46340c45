from typing import List, Tuple


class DisjointSet:
    """Union by rank with path compression over {0..n-1}."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of x and y; False if they were already merged."""
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        return True

    def labels(self) -> Tuple[Tuple[int, ...], int]:
        """Class index per element, classes numbered by their smallest member."""
        index: dict[int, int] = {}
        class_of: List[int] = []
        for x in range(len(self.parent)):
            root = self.find(x)
            if root not in index:
                index[root] = len(index)
            class_of.append(index[root])
        return tuple(class_of), len(index)
