"""Simple undirected graphs on vertices ``0..n-1``, labelings, and the
edge-list text format."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised for malformed edge-list input. Carries the 1-based line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class NotSupportedError(ValueError):
    """The graph does not belong to the class an operation requires."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = norm_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, tuple(sorted(seen)), tuple(tuple(sorted(a)) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def relabel(self, image: Sequence[int]) -> "Graph":
        """The graph with vertex ``v`` renamed to ``image[v]``."""
        return Graph.from_edges(self.n, ((image[u], image[v]) for u, v in self.edges))


@dataclass(frozen=True)
class VertexLabeling:
    labels: tuple[int, ...]
    k: int = 0

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if not self.k:
            object.__setattr__(self, "k", max(labels, default=1))
        bad = [x for x in labels if not 1 <= x <= self.k]
        if bad:
            raise ValueError(f"labels must lie in 1..{self.k}, got {bad[0]}")

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __len__(self) -> int:
        return len(self.labels)

    def used(self) -> int:
        return len(set(self.labels))


@dataclass(frozen=True)
class EdgeLabeling:
    labels: Mapping[Edge, int]
    k: int = 0

    def __post_init__(self):
        labels = {norm_edge(*e): int(x) for e, x in self.labels.items()}
        object.__setattr__(self, "labels", labels)
        if not self.k:
            object.__setattr__(self, "k", max(labels.values(), default=1))
        bad = [x for x in labels.values() if not 1 <= x <= self.k]
        if bad:
            raise ValueError(f"labels must lie in 1..{self.k}, got {bad[0]}")

    @classmethod
    def from_sequence(cls, g: Graph, seq: Sequence[int], k: int = 0) -> "EdgeLabeling":
        """Labels given in the order of ``g.edges``."""
        if len(seq) != g.m:
            raise ValueError(f"expected {g.m} edge labels, got {len(seq)}")
        return cls(dict(zip(g.edges, seq)), k)

    def __getitem__(self, e: Edge) -> int:
        return self.labels[norm_edge(*e)]

    def __len__(self) -> int:
        return len(self.labels)

    def sequence(self, g: Graph) -> tuple[int, ...]:
        return tuple(self.labels[e] for e in g.edges)

    def used(self) -> int:
        return len(set(self.labels.values()))

    def check_domain(self, g: Graph) -> None:
        if set(self.labels) != set(g.edges):
            raise ValueError("edge labeling domain differs from the graph's edge set")


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError("image is not a permutation")

    def __call__(self, v: int) -> int:
        return self.image[v]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(v) = self(other(v))
        return Permutation(tuple(self.image[x] for x in other.image))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for v, x in enumerate(self.image):
            inv[x] = v
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == x for v, x in enumerate(self.image))


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: a header ``n m`` followed by ``m`` lines
    ``u v`` with ``u < v``. Lines starting with ``#`` are comments."""
    header: Optional[tuple[int, int]] = None
    n = m = 0
    edges: list[Edge] = []
    seen: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 1 or b < 0:
                raise GraphFormatError(f"invalid header {line!r}", lineno)
            header = (a, b)
            n, m = header
            continue
        if len(edges) == m:
            raise GraphFormatError(f"edge count mismatch: header declares {m} edges", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"vertex index out of range 0..{n - 1}", lineno)
        a, b = norm_edge(a, b)
        if (a, b) in seen:
            raise GraphFormatError(f"duplicate edge ({a}, {b}), first on line {seen[a, b]}", lineno)
        seen[a, b] = lineno
        edges.append((a, b))
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != m:
        raise GraphFormatError(f"edge count mismatch: header declares {m}, found {len(edges)}")
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def is_connected(g: Graph) -> bool:
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    return g.m == g.n and is_connected(g)


def unicyclic_cycle(g: Graph) -> Optional[tuple[int, ...]]:
    """The unique cycle of a connected graph with ``m == n``, or ``None``.

    Leaves are stripped until only the cycle remains. The result starts at
    the smallest cycle vertex and walks toward its smaller cycle neighbour,
    which makes it the lexicographically smallest rotation/reflection.
    """
    if not is_unicyclic(g):
        return None
    deg = [len(a) for a in g.adjacency]
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive[v] = False
        for u in g.adjacency[v]:
            if alive[u]:
                deg[u] -= 1
                if deg[u] == 1:
                    stack.append(u)
    on_cycle = [v for v in range(g.n) if alive[v]]
    start = on_cycle[0]
    prev, cur = start, min(u for u in g.adjacency[start] if alive[u])
    cycle = [start]
    while cur != start:
        cycle.append(cur)
        nxt = next(u for u in g.adjacency[cur] if alive[u] and u != prev)
        prev, cur = cur, nxt
    return tuple(cycle)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))
