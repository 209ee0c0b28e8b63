"""Non-isomorphic trees and connected unicyclic graphs, and a census that
classifies them."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice, product
from typing import Callable, Iterator, Optional

from .graph import Graph
from .report import classify_graph, oracle_check
from .trees import center, free_tree_code, root_at

MAX_TREE_ORDER = 16
MAX_UNICYCLIC_ORDER = 12

# A rooted shape is the sorted tuple of its children's shapes; () is a leaf.
Shape = tuple


@lru_cache(maxsize=None)
def rooted_shapes(size: int) -> tuple[Shape, ...]:
    """All rooted trees with ``size`` vertices, each once, in sorted order."""
    if size == 1:
        return ((),)
    out = set()
    for s in rooted_shapes(size - 1):
        out.update(_grow(s))
    return tuple(sorted(out))


def _grow(s: Shape) -> Iterator[Shape]:
    """Every shape obtained by hanging one new leaf somewhere in ``s``."""
    yield tuple(sorted(s + ((),)))
    for i, c in enumerate(s):
        if i and s[i - 1] == c:
            continue
        for grown in _grow(c):
            yield tuple(sorted(s[:i] + (grown,) + s[i + 1:]))


def _attach(edges: list, shape: Shape, root: int, nxt: int) -> int:
    for child in shape:
        edges.append((root, nxt))
        nxt = _attach(edges, child, nxt, nxt + 1)
    return nxt


def _canonical_numbering(g: Graph) -> Graph:
    """Renumber a tree breadth-first from its centre in canonical child
    order, so equal shapes always give equal graphs."""
    c = center(g)
    if c.bicentric:
        v, w = c.vertices
        a, b = root_at(g, v, exclude=(w,)), root_at(g, w, exclude=(v,))
        if (a.codes[v], v) > (b.codes[w], w):
            a, b = b, a
        queue = [a.root, b.root]
        kids = {**a.children, **b.children}
    else:
        r = root_at(g, c.vertices[0])
        queue = [r.root]
        kids = r.children
    order = []
    while queue:
        order.extend(queue)
        queue = [x for v in queue for x in kids[v]]
    index = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(g.n, ((index[u], index[v]) for u, v in g.edges))


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.from_edges(1, []),)
    found: dict[bytes, Graph] = {}
    for t in _trees(n - 1):
        for v in range(t.n):
            g = Graph.from_edges(n, t.edges + ((v, n - 1),))
            code = free_tree_code(g)
            if code not in found:
                found[code] = g
    return tuple(_canonical_numbering(found[c]) for c in sorted(found))


def all_trees(n: int, start: int = 0) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices; ``start`` skips
    ahead (resume cursor)."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise ValueError(f"tree order must be in 1..{MAX_TREE_ORDER}")
    return islice(_trees(n), start, None)


def _dihedral_images(seq: tuple) -> Iterator[tuple]:
    t = len(seq)
    for r in range(t):
        rot = seq[r:] + seq[:r]
        yield rot
        yield rot[::-1]


@lru_cache(maxsize=None)
def _unicyclic(n: int) -> tuple[Graph, ...]:
    found = set()
    for t in range(3, n + 1):
        for sizes in _compositions(n, t):
            for shapes in product(*(rooted_shapes(s) for s in sizes)):
                if shapes == min(_dihedral_images(shapes)):
                    found.add(shapes)
    out = []
    for shapes in sorted(found, key=lambda s: (len(s), s)):
        t = len(shapes)
        edges = [(i, (i + 1) % t) for i in range(t)]
        nxt = t
        for i, s in enumerate(shapes):
            nxt = _attach(edges, s, i, nxt)
        out.append(Graph.from_edges(n, edges))
    return tuple(out)


def _compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def all_unicyclic(n: int, start: int = 0) -> Iterator[Graph]:
    """One connected unicyclic graph per isomorphism class on ``n``
    vertices. The cycle is ``0, 1, ..., t-1``."""
    if not 3 <= n <= MAX_UNICYCLIC_ORDER:
        raise ValueError(f"unicyclic order must be in 3..{MAX_UNICYCLIC_ORDER}")
    return islice(_unicyclic(n), start, None)


@dataclass
class GeneratorConfig:
    max_n: int
    family: str = "tree"  # "tree" | "unicyclic"
    min_n: int = 3
    filters: list[Callable[[Graph, object], bool]] = field(default_factory=list)
    oracle_max_n: int = 0

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        if self.family not in ("tree", "unicyclic"):
            raise ValueError(f"unknown family {self.family!r}")


def bicentric_only(g: Graph, report) -> bool:
    return report.bicentric


def in_T_only(g: Graph, report) -> bool:
    return bool(report.in_family_T)


def cycle_length(lo: int, hi: int) -> Callable[[Graph, object], bool]:
    def accept(g: Graph, report) -> bool:
        return lo <= len(report.cycle) <= hi
    return accept


def instances(family: str, min_n: int, max_n: int) -> Iterator[Graph]:
    gen = all_trees if family == "tree" else all_unicyclic
    low = max(min_n, 1 if family == "tree" else 3)
    for n in range(low, max_n + 1):
        yield from gen(n)


def census(config: GeneratorConfig, classify: Optional[Callable] = None) -> Iterator[tuple[Graph, object]]:
    """Classify every generated instance in generation order, keeping those
    accepted by all filters.

    ``classify`` defaults to the fast classifier for the family; with
    ``oracle_max_n`` set, instances up to that order are re-checked by brute
    force and a mismatch raises ``AssertionError``.
    """
    classify = classify or classify_graph
    for g in instances(config.family, config.min_n, config.max_n):
        report = classify(g)
        if g.n <= config.oracle_max_n:
            problems = oracle_check(g, report)
            if problems:
                raise AssertionError(f"oracle disagreement on {g.edges}: {problems}")
        if all(f(g, report) for f in config.filters):
            yield g, report
