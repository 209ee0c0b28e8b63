"""Distinguishing number and index of connected unicyclic graphs.

Every automorphism maps the unique cycle C = v_0 ... v_{t-1} onto itself and
so acts on it as an element of the dihedral group; the elements that occur
are exactly those that map each hanging tree T_i onto an isomorphic one.
A labeling is distinguishing iff each T_i is labeled distinguishingly as a
rooted tree and no non-identity such element maps the sequence of labeled
classes (and, for edge labelings, the cycle edge labels) onto itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

from .colabel import from_colabel, is_rooted_distinguishing
from .graph import EdgeLabeling, Graph, NotSupportedError, VertexLabeling, norm_edge, unicyclic_cycle
from .tree_dist import count_edge_classes, edge_class_labelings
from .trees import RootedTree, labeled_codes, root_at, rooted_isomorphism


@dataclass(frozen=True)
class Dihedral:
    """Rotation (``reflect=False``: i -> i + shift) or reflection
    (``reflect=True``: i -> shift - i) of the positions ``0..t-1``.

    Cycle edge j joins positions j and j+1; it goes to j + shift under a
    rotation and to shift - 1 - j under a reflection.
    """

    t: int
    shift: int
    reflect: bool

    def vertex(self, i: int) -> int:
        return (self.shift - i if self.reflect else self.shift + i) % self.t

    def edge(self, j: int) -> int:
        return (self.shift - 1 - j if self.reflect else self.shift + j) % self.t

    def __mul__(self, other: "Dihedral") -> "Dihedral":
        # (self * other)(i) = self(other(i))
        if self.reflect:
            return Dihedral(self.t, (self.shift - other.shift) % self.t, not other.reflect)
        return Dihedral(self.t, (self.shift + other.shift) % self.t, other.reflect)

    def inverse(self) -> "Dihedral":
        return self if self.reflect else Dihedral(self.t, -self.shift % self.t, False)

    @property
    def is_identity(self) -> bool:
        return not self.reflect and self.shift == 0

    def act(self, seq: Sequence, edges: bool = False) -> tuple:
        """The sequence moved by this element: out[g(i)] = seq[i]."""
        move = self.edge if edges else self.vertex
        out = [None] * self.t
        for i, x in enumerate(seq):
            out[move(i)] = x
        return tuple(out)


@lru_cache(maxsize=None)
def dihedral_group(t: int) -> tuple[Dihedral, ...]:
    return tuple(Dihedral(t, s, f) for f in (False, True) for s in range(t))


def stabilizer(seq: Sequence, edges: bool = False) -> frozenset[Dihedral]:
    seq = tuple(seq)
    return frozenset(g for g in dihedral_group(len(seq)) if g.act(seq, edges) == seq)


@dataclass(frozen=True)
class UnicyclicDecomposition:
    graph: Graph
    cycle: tuple[int, ...]
    hanging: tuple[RootedTree, ...]

    @property
    def t(self) -> int:
        return len(self.cycle)

    def cycle_edge(self, j: int) -> tuple[int, int]:
        return norm_edge(self.cycle[j], self.cycle[(j + 1) % self.t])


def decompose(g: Graph) -> UnicyclicDecomposition:
    cycle = unicyclic_cycle(g)
    if cycle is None:
        raise NotSupportedError("not a connected unicyclic graph")
    hanging = tuple(root_at(g, v, exclude=[u for u in cycle if u != v]) for v in cycle)
    return UnicyclicDecomposition(g, cycle, hanging)


@dataclass(frozen=True)
class CycleSymmetryGroup:
    t: int
    elements: tuple[Dihedral, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def cycle_symmetries(d: UnicyclicDecomposition) -> CycleSymmetryGroup:
    codes = [h.codes[h.root] for h in d.hanging]
    elements = tuple(s for s in dihedral_group(d.t) if s.act(codes) == tuple(codes))
    return CycleSymmetryGroup(d.t, elements)


# -- exact search --------------------------------------------------------------

def _trivial_stabilizer_assignment(group: CycleSymmetryGroup, vertex_domains: list[int],
                                   edge_domain: int) -> Optional[tuple[list[int], list[int]]]:
    """Values x_i < vertex_domains[i] (and y_j < edge_domain for each cycle
    edge, if edge_domain > 0) such that no non-identity group element maps
    (x, y) onto itself; ``None`` if impossible."""
    t = group.t
    nvars = t + (t if edge_domain else 0)
    domains = vertex_domains + [edge_domain] * (nvars - t)
    if min(domains) == 0:
        return None
    order = sorted(range(nvars), key=lambda v: (domains[v], v))
    depth_of = {v: i for i, v in enumerate(order)}
    checks: list[list[list[tuple[int, int]]]] = [[] for _ in range(nvars)]
    for s in group.elements:
        if s.is_identity:
            continue
        pairs = [(i, s.vertex(i)) for i in range(t)]
        if edge_domain:
            pairs += [(t + j, t + s.edge(j)) for j in range(t)]
        pairs = [(a, b) for a, b in pairs if a != b]
        done = max(max(depth_of[a], depth_of[b]) for a, b in pairs)
        checks[done].append(pairs)
    value = [0] * nvars

    def fixed(pairs) -> bool:
        return all(value[a] == value[b] for a, b in pairs)

    def rec(depth: int) -> bool:
        if depth == nvars:
            return True
        var = order[depth]
        for x in range(domains[var]):
            value[var] = x
            if any(fixed(p) for p in checks[depth]):
                continue
            if rec(depth + 1):
                return True
        return False

    if not rec(0):
        return None
    return value[:t], value[t:]


def _types(d: UnicyclicDecomposition) -> list[int]:
    """Index of the first position whose hanging tree is isomorphic to T_i."""
    first: dict[bytes, int] = {}
    return [first.setdefault(h.codes[h.root], i) for i, h in enumerate(d.hanging)]


def _class_options(d: UnicyclicDecomposition, k: int) -> list[int]:
    cap = max(d.graph.n, 2)
    return [min(count_edge_classes(h, k, cap).value, d.t) for h in d.hanging]


def _position_classes(d: UnicyclicDecomposition, k: int, need: list[int]) -> list[list[dict[int, int]]]:
    """For each position, its first ``need[i]`` edge classes, computed once
    per isomorphism type and carried over by rooted isomorphisms."""
    types = _types(d)
    reps = {}
    for i, ty in enumerate(types):
        reps[ty] = max(reps.get(ty, 0), need[i])
    lists = {ty: edge_class_labelings(d.hanging[ty], k, n) for ty, n in reps.items()}
    out = []
    for i, ty in enumerate(types):
        iso = rooted_isomorphism(d.hanging[ty], d.hanging[i])
        out.append([{iso[x]: y for x, y in lab.items()} for lab in lists[ty]])
    return out


def distinguishing_vertex_labeling(g: Graph, k: int, d: Optional[UnicyclicDecomposition] = None
                                   ) -> Optional[VertexLabeling]:
    d = d or decompose(g)
    group = cycle_symmetries(d)
    domains = [min(k * n, d.t) for n in _class_options(d, k)]
    found = _trivial_stabilizer_assignment(group, domains, 0)
    if found is None:
        return None
    xs, _ = found
    classes = _position_classes(d, k, [x // k + 1 for x in xs])
    labels = [1] * g.n
    for h, x, cls in zip(d.hanging, xs, classes):
        colab = cls[x // k]
        labels[h.root] = x % k + 1
        for v, y in colab.items():
            labels[v] = y
    return VertexLabeling(tuple(labels), k)


def distinguishing_edge_labeling(g: Graph, k: int, d: Optional[UnicyclicDecomposition] = None
                                 ) -> Optional[EdgeLabeling]:
    d = d or decompose(g)
    group = cycle_symmetries(d)
    found = _trivial_stabilizer_assignment(group, _class_options(d, k), min(k, d.t))
    if found is None:
        return None
    xs, ys = found
    classes = _position_classes(d, k, [x + 1 for x in xs])
    labels = {}
    for h, x, cls in zip(d.hanging, xs, classes):
        for v, y in cls[x].items():
            labels[h.parent_edge(v)] = y
    for j, y in enumerate(ys):
        labels[d.cycle_edge(j)] = y + 1
    return EdgeLabeling(labels, k)


def _minimum(solve, g: Graph):
    d = decompose(g)
    for k in range(1, g.n + 1):
        lab = solve(g, k, d)
        if lab is not None:
            return k, lab
    raise AssertionError("no distinguishing labeling with at most n labels")


def unicyclic_D(g: Graph) -> int:
    return _minimum(distinguishing_vertex_labeling, g)[0]


def unicyclic_Dprime(g: Graph) -> int:
    return _minimum(distinguishing_edge_labeling, g)[0]


def is_distinguishing_unicyclic(g: Graph, lab, d: Optional[UnicyclicDecomposition] = None) -> bool:
    """Structural distinguishing test (no automorphism enumeration)."""
    d = d or decompose(g)
    codes = []
    for h in d.hanging:
        if not is_rooted_distinguishing(h, lab):
            return False
        codes.append(labeled_codes(h, lab)[h.root])
    group = cycle_symmetries(d)
    seq = tuple(codes)
    ring = tuple(lab[d.cycle_edge(j)] for j in range(d.t)) if isinstance(lab, EdgeLabeling) else None
    for s in group.elements:
        if s.is_identity or s.act(seq) != seq:
            continue
        if ring is None or s.act(ring, edges=True) == ring:
            return False
    return True


@dataclass(frozen=True)
class UnicyclicReport:
    D: int
    Dprime: int
    cycle: tuple[int, ...]
    symmetry_order: int
    witness_vertex: VertexLabeling
    witness_edge: EdgeLabeling


def classify_unicyclic(g: Graph) -> UnicyclicReport:
    d = decompose(g)
    D, fv = _minimum(distinguishing_vertex_labeling, g)
    Dp, fe = _minimum(distinguishing_edge_labeling, g)
    return UnicyclicReport(D, Dp, d.cycle, cycle_symmetries(d).order, fv, fe)


# -- cycle tables and the two constructions ---------------------------------------

@lru_cache(maxsize=None)
def cycle_distinguishing(t: int, k: int, edges: bool = False) -> Optional[tuple[int, ...]]:
    """Lexicographically first k-labeling of the vertices (or edges) of C_t
    fixed by no non-identity dihedral element."""
    group = [s for s in dihedral_group(t) if not s.is_identity]
    for seq in product(range(1, k + 1), repeat=t):
        if all(s.act(seq, edges) != seq for s in group):
            return seq
    return None


def _class_rep(seq: tuple, edges: bool) -> tuple:
    return min(s.act(seq, edges) for s in dihedral_group(len(seq)))


@dataclass(frozen=True)
class CycleTransformTable:
    """For t in {3, 4, 5}: class representative of a 2-labeling of C_t on
    one side -> a 2-labeling on the other side whose dihedral stabilizer is
    contained in the stabilizer of the input."""

    edge_to_vertex: dict[int, dict[tuple, tuple]]
    vertex_to_edge: dict[int, dict[tuple, tuple]]


def _derive(t: int, from_edges: bool) -> dict[tuple, tuple]:
    table = {}
    candidates = list(product((1, 2), repeat=t))
    for seq in candidates:
        rep = _class_rep(seq, from_edges)
        if rep in table:
            continue
        allowed = stabilizer(rep, from_edges)
        for out in candidates:
            if stabilizer(out, not from_edges) <= allowed:
                table[rep] = out
                break
        else:
            raise AssertionError(f"no valid image for {rep} on C_{t}")
    return table


@lru_cache(maxsize=None)
def derive_cycle_tables() -> CycleTransformTable:
    return CycleTransformTable(
        edge_to_vertex={t: _derive(t, True) for t in (3, 4, 5)},
        vertex_to_edge={t: _derive(t, False) for t in (3, 4, 5)},
    )


def _normalize(seq: Sequence[int]) -> tuple[int, ...]:
    rank = {x: i + 1 for i, x in enumerate(sorted(set(seq)))}
    return tuple(rank[x] for x in seq)


def _lookup(table: dict[tuple, tuple], seq: Sequence[int], from_edges: bool) -> tuple:
    seq = _normalize(seq)
    rep = _class_rep(seq, from_edges)
    move = next(s for s in dihedral_group(len(seq)) if s.act(rep, from_edges) == seq)
    return move.act(table[rep], not from_edges)


def _cycle_part(t: int, seq: Sequence[int], d_labels: int, to_edges: bool) -> tuple[int, ...]:
    used = len(set(seq))
    if t >= 6:
        out = cycle_distinguishing(t, 2, to_edges)
    elif used >= 3:
        out = cycle_distinguishing(t, 3, to_edges)
    else:
        tables = derive_cycle_tables()
        table = (tables.vertex_to_edge if to_edges else tables.edge_to_vertex)[t]
        out = _lookup(table, seq, not to_edges)
    if max(out) > d_labels:
        raise AssertionError(f"construction needs {max(out)} labels, only {d_labels} available")
    return out


def edge_to_vertex(g: Graph, f: EdgeLabeling) -> VertexLabeling:
    """A distinguishing vertex labeling with no more labels than ``f``."""
    f.check_domain(g)
    d = decompose(g)
    if not is_distinguishing_unicyclic(g, f, d):
        raise ValueError("input edge labeling is not distinguishing")
    k = f.k
    labels = [1] * g.n
    for h in d.hanging:
        for x in h.order[1:]:
            labels[x] = f.labels[h.parent_edge(x)]
    if f.used() > 1:
        ring = [f.labels[d.cycle_edge(j)] for j in range(d.t)]
        for v, y in zip(d.cycle, _cycle_part(d.t, ring, k, to_edges=False)):
            labels[v] = y
    else:
        # a constant labeling distinguishes only graphs without symmetry
        labels = [1] * g.n
    return VertexLabeling(tuple(labels), k)


def vertex_to_edge(g: Graph, f: VertexLabeling) -> EdgeLabeling:
    """A distinguishing edge labeling with no more labels than ``f``."""
    d = decompose(g)
    if not is_distinguishing_unicyclic(g, f, d):
        raise ValueError("input vertex labeling is not distinguishing")
    k = f.k
    if f.used() == 1:
        return EdgeLabeling({e: 1 for e in g.edges}, k)
    labels = {}
    for h in d.hanging:
        for x in h.order[1:]:
            labels[h.parent_edge(x)] = f.labels[x]
    ring = [f.labels[v] for v in d.cycle]
    for j, y in enumerate(_cycle_part(d.t, ring, k, to_edges=True)):
        labels[d.cycle_edge(j)] = y
    return EdgeLabeling(labels, k)
