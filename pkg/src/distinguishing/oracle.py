"""Brute-force reference implementations.

Nothing here uses tree structure: automorphisms are found by backtracking
over an iteratively refined vertex partition, and distinguishing numbers by
trying every labeling up to renaming of the labels. Slow, exact, and the
yardstick for the fast algorithms.
"""

from __future__ import annotations

import math
from itertools import product
from typing import Iterator, Optional, Sequence, Union

from .graph import EdgeLabeling, Graph, NotSupportedError, Permutation, VertexLabeling, norm_edge
from .trees import RootedTree, labeled_code

MAX_ORDER = 20
DEFAULT_BUDGET = 20_000_000
_EXPLICIT_GROUP_LIMIT = 512


class OracleBudgetExceeded(RuntimeError):
    pass


class _Structure:
    """A graph with optional edge colours, as neighbour/colour lists."""

    __slots__ = ("n", "nbrs", "ecolor")

    def __init__(self, g: Graph, edge_colors: Optional[dict] = None):
        self.n = g.n
        if edge_colors is None:
            self.nbrs = [tuple((u, 0) for u in g.adjacency[v]) for v in range(g.n)]
            self.ecolor = {e: 0 for e in g.edges}
        else:
            self.nbrs = [tuple((u, edge_colors[norm_edge(u, v)]) for u in g.adjacency[v])
                         for v in range(g.n)]
            self.ecolor = dict(edge_colors)


def _refine_pair(s1: _Structure, c1: list[int], s2: _Structure, c2: list[int]):
    """Refine two colourings in lockstep; ``None`` if they become
    incompatible (different colour-class statistics)."""
    k = len(set(c1))
    while True:
        sig1 = [(c1[v], tuple(sorted((e, c1[u]) for u, e in s1.nbrs[v]))) for v in range(s1.n)]
        sig2 = sig1 if s2 is s1 and c2 is c1 else \
            [(c2[v], tuple(sorted((e, c2[u]) for u, e in s2.nbrs[v]))) for v in range(s2.n)]
        if sig2 is not sig1 and sorted(sig1) != sorted(sig2):
            return None
        names = {s: i for i, s in enumerate(sorted(set(sig1)))}
        new1 = [names[s] for s in sig1]
        new2 = new1 if sig2 is sig1 else [names[s] for s in sig2]
        if len(names) == k:
            return new1, new2
        k = len(names)
        c1, c2 = new1, new2


def _target_cell(c: list[int]) -> Optional[list[int]]:
    cells: dict[int, list[int]] = {}
    for v, x in enumerate(c):
        cells.setdefault(x, []).append(v)
    best = None
    for x in sorted(cells):
        cell = cells[x]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def _individualize(c: list[int], v: int) -> list[int]:
    out = list(c)
    out[v] = len(set(c))
    return out


def _check_map(s1: _Structure, s2: _Structure, image: Sequence[int]) -> bool:
    ec2 = s2.ecolor
    for (u, v), col in s1.ecolor.items():
        if ec2.get(norm_edge(image[u], image[v])) != col:
            return False
    return True


def _isomorphisms(s1: _Structure, c1: list[int], s2: _Structure, c2: list[int]) -> Iterator[tuple[int, ...]]:
    """All colour-preserving isomorphisms from (s1, c1) onto (s2, c2)."""
    if len(c1) != len(c2):
        return
    refined = _refine_pair(s1, c1, s2, c2)
    if refined is None:
        return
    c1, c2 = refined
    cell = _target_cell(c1)
    if cell is None:
        where = {x: u for u, x in enumerate(c2)}
        image = tuple(where[x] for x in c1)
        if _check_map(s1, s2, image):
            yield image
        return
    v = cell[0]
    left = _individualize(c1, v)
    for w in (u for u, x in enumerate(c2) if x == c1[v]):
        yield from _isomorphisms(s1, left, s2, _individualize(c2, w))


def _nontrivial(s: _Structure, c: list[int]) -> Optional[tuple[int, ...]]:
    """Some non-identity colour-preserving automorphism, or ``None``."""
    c, _ = _refine_pair(s, c, s, c)
    cell = _target_cell(c)
    if cell is None:
        return None
    v = cell[0]
    fixed = _individualize(c, v)
    for w in cell[1:]:
        for image in _isomorphisms(s, fixed, s, _individualize(c, w)):
            return image
    return _nontrivial(s, fixed)


def _check_order(g: Graph, max_order: int) -> None:
    if g.n > max_order:
        raise OracleBudgetExceeded(f"order {g.n} exceeds the oracle bound {max_order}")


def automorphisms(g: Graph, colors: Optional[Sequence[int]] = None, *,
                  max_order: int = MAX_ORDER, max_group: int = 1_000_000) -> list[Permutation]:
    """Every automorphism of ``g`` (preserving ``colors`` if given)."""
    _check_order(g, max_order)
    s = _Structure(g)
    c = list(colors) if colors is not None else [0] * g.n
    out = []
    for image in _isomorphisms(s, c, s, c):
        out.append(Permutation(image))
        if len(out) > max_group:
            raise OracleBudgetExceeded(f"automorphism group larger than {max_group}")
    return out


def rooted_automorphisms(r: RootedTree) -> list[Permutation]:
    """Root-fixing automorphisms of ``r``, on its own vertices renumbered
    in BFS order (see :func:`rooted_local`)."""
    local, _ = rooted_local(r)
    return automorphisms(local, [1] + [0] * (local.n - 1))


def rooted_local(r: RootedTree) -> tuple[Graph, dict[int, int]]:
    """The tree ``r`` as a standalone graph with the root renumbered 0."""
    index = {v: i for i, v in enumerate(r.order)}
    local = Graph.from_edges(len(r.order), ((index[u], index[v]) for u, v in r.edges())) \
        if r.size > 1 else Graph.from_edges(1, [])
    return local, index


def isomorphic(g: Graph, h: Graph) -> bool:
    if (g.n, g.m) != (h.n, h.m):
        return False
    if sorted(map(len, g.adjacency)) != sorted(map(len, h.adjacency)):
        return False
    for _ in _isomorphisms(_Structure(g), [0] * g.n, _Structure(h), [0] * h.n):
        return True
    return False


Labeling = Union[VertexLabeling, EdgeLabeling]


def _vertex_check(g: Graph, labels: Sequence[int], fixed: Sequence[int] = ()) -> bool:
    c = list(labels)
    for i, v in enumerate(fixed):
        c[v] = -1 - i
    return _nontrivial(_Structure(g), c) is None


def _edge_check(g: Graph, labels: dict, fixed: Sequence[int] = ()) -> bool:
    c = [0] * g.n
    for i, v in enumerate(fixed):
        c[v] = -1 - i
    return _nontrivial(_Structure(g, labels), c) is None


def is_distinguishing(g: Graph, lab: Labeling, *, max_order: int = MAX_ORDER) -> bool:
    """True iff no non-identity automorphism of ``g`` preserves ``lab``.

    Decided by searching for a label-preserving non-identity automorphism
    directly rather than filtering a precomputed group.
    """
    _check_order(g, max_order)
    if isinstance(lab, VertexLabeling):
        if len(lab.labels) != g.n:
            raise ValueError("vertex labeling does not cover the graph")
        return _vertex_check(g, lab.labels)
    lab.check_domain(g)
    return _edge_check(g, lab.labels)


def is_distinguishing_explicit(g: Graph, lab: Labeling, auts: Optional[list[Permutation]] = None) -> bool:
    """The same predicate, evaluated over an explicit automorphism list."""
    auts = automorphisms(g) if auts is None else auts
    if isinstance(lab, VertexLabeling):
        f = lab.labels
        return not any(not p.is_identity() and all(f[p.image[v]] == f[v] for v in range(g.n))
                       for p in auts)
    f = lab.labels
    return not any(not p.is_identity()
                   and all(f[norm_edge(p.image[u], p.image[v])] == f[u, v] for u, v in g.edges)
                   for p in auts)


def restricted_growth(length: int, k: int) -> Iterator[list[int]]:
    """Labelings of ``length`` positions using exactly the labels 1..k, each
    label first appearing after all smaller ones (one per renaming class)."""
    if k > length or (k == 0 and length > 0):
        return
    seq = [0] * length

    def rec(i: int, used: int):
        if length - i < k - used:
            return
        if i == length:
            yield seq
            return
        for x in range(1, min(used + 1, k) + 1):
            seq[i] = x
            yield from rec(i + 1, max(used, x))

    yield from rec(0, 0)


class _Counter:
    def __init__(self, budget: int):
        self.left = budget

    def spend(self, amount: int = 1) -> None:
        self.left -= amount
        if self.left < 0:
            raise OracleBudgetExceeded("labeling enumeration budget exhausted")


def _min_labels(length: int, search, budget: int, upper: int) -> int:
    """Smallest k for which some labeling of ``length`` positions survives
    ``search`` (which returns a label-preserving non-identity permutation of
    the positions, or ``None``)."""
    spent = _Counter(budget)
    killers: list[list[tuple[int, int]]] = []
    for k in range(1, upper + 1):
        for seq in restricted_growth(length, k):
            spent.spend()
            # automorphisms that already broke earlier labelings are tried first
            for idx, moved in enumerate(killers):
                if all(seq[i] == seq[j] for i, j in moved):
                    if idx > 4:
                        killers.insert(0, killers.pop(idx))
                    break
            else:
                image = search(seq)
                if image is None:
                    return k
                killers.insert(0, [(i, j) for i, j in enumerate(image) if i != j])
                del killers[256:]
    raise NotSupportedError("no distinguishing labeling exists")


def brute_D(g: Graph, *, budget: int = DEFAULT_BUDGET, max_order: int = MAX_ORDER) -> int:
    _check_order(g, max_order)
    s = _Structure(g)
    return _min_labels(g.n, lambda f: _nontrivial(s, list(f)), budget, g.n)


def brute_Dprime(g: Graph, *, budget: int = DEFAULT_BUDGET, max_order: int = MAX_ORDER) -> int:
    _check_order(g, max_order)
    edges = g.edges
    index = {e: i for i, e in enumerate(edges)}

    def search(f):
        image = _nontrivial(_Structure(g, dict(zip(edges, f))), [0] * g.n)
        if image is None:
            return None
        return [index[norm_edge(image[u], image[v])] for u, v in edges]

    return _min_labels(len(edges), search, budget, max(len(edges), 1))


def brute_class_count(r: RootedTree, k: int, *, budget: int = DEFAULT_BUDGET) -> int:
    """Number of rooted-isomorphism classes of distinguishing edge
    k-labelings of ``r``, by enumerating all ``k ** (|r| - 1)`` labelings."""
    edges = r.edges()
    if k ** len(edges) > budget:
        raise OracleBudgetExceeded(f"{k}^{len(edges)} labelings exceed the budget")
    local, index = rooted_local(r)
    local_edges = [norm_edge(index[u], index[v]) for u, v in edges]
    group = _explicit_group_rooted(local)
    if group is not None:
        pos = {e: i for i, e in enumerate(local_edges)}
        perms = [[pos[norm_edge(p[u], p[v])] for u, v in local_edges] for p in group]
    seen = set()
    for seq in product(range(1, k + 1), repeat=len(edges)):
        if group is not None:
            ok = not any(all(seq[q[i]] == seq[i] for i in range(len(seq))) for q in perms)
        else:
            ok = _edge_check(local, dict(zip(local_edges, seq)), fixed=(0,))
        if ok:
            seen.add(labeled_code(r, EdgeLabeling(dict(zip(edges, seq)), k)))
    return len(seen)


def _explicit_group_rooted(local: Graph) -> Optional[list[tuple[int, ...]]]:
    try:
        auts = automorphisms(local, [1] + [0] * (local.n - 1), max_group=_EXPLICIT_GROUP_LIMIT)
    except OracleBudgetExceeded:
        return None
    return [p.image for p in auts if not p.is_identity()]


def labeling_space(length: int, k: int) -> int:
    """Number of labelings :func:`restricted_growth` produces (a Stirling
    number of the second kind)."""
    return sum((-1) ** j * math.comb(k, j) * (k - j) ** length for j in range(k + 1)) // math.factorial(k)
