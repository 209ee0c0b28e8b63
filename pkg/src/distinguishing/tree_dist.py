"""Distinguishing number and index of trees.

Everything reduces to N(R, k), the number of rooted-isomorphism classes of
distinguishing edge k-labelings of a rooted tree R. For a vertex with a run
of m isomorphic children of shape S, each child independently picks an edge
label and a class of S, and the m picks must differ:

    N(R, k) = prod over child shapes S (multiplicity m) of C(k * N(S, k), m)

For a tree T with centre c, or central edge vw and halves T_v, T_w:

* unicentric:            D = D' = min k with N(T_c, k) >= 1
* bicentric, T_v != T_w: D = D' = max of the rooted values of the halves
* bicentric, T_v == T_w: D  = min k with k * N(T_v, k) >= 2
                         D' = min k with N(T_v, k) >= 2
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, islice, product
from typing import Optional

from .colabel import from_colabel
from .graph import EdgeLabeling, Graph, NotSupportedError, VertexLabeling, is_tree
from .trees import CenterInfo, RootedTree, center, halves, root_at, rooted_isomorphic, rooted_isomorphism


@dataclass(frozen=True)
class SatCount:
    """A non-negative count clipped at ``cap``.

    ``saturated`` means the true value is at least ``cap``; unsaturated
    values are exact. ``cap`` is at least 2, so 0, 1 and "two or more" are
    always told apart.
    """

    value: int
    cap: int
    saturated: bool = False

    @classmethod
    def of(cls, x: int, cap: int) -> "SatCount":
        cap = max(cap, 2)
        return cls(cap, cap, True) if x >= cap else cls(x, cap)

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other):
        if isinstance(other, SatCount):
            return (self.value, self.saturated) == (other.value, other.saturated)
        if isinstance(other, int):
            return not self.saturated and self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.saturated))

    def __lt__(self, other: "SatCount") -> bool:
        # saturation order 0 < 1 < ... < cap
        if not isinstance(other, SatCount):
            return NotImplemented
        return self.value < other.value

    def scale(self, k: int) -> "SatCount":
        if self.value == 0:
            return self
        if self.saturated:
            return self
        return SatCount.of(self.value * k, self.cap)

    def choose(self, m: int) -> "SatCount":
        """C(self, m) for 1 <= m < cap."""
        if self.saturated:
            # C(x, m) >= x >= cap whenever 1 <= m < cap <= x
            return self
        return SatCount.of(math.comb(self.value, m), self.cap)

    def times(self, other: "SatCount") -> "SatCount":
        if self.value == 0 or other.value == 0:
            return SatCount(0, self.cap)
        if self.saturated or other.saturated:
            return SatCount(self.cap, self.cap, True)
        return SatCount.of(self.value * other.value, self.cap)

    def __repr__(self) -> str:
        return f"SatCount({'>=' if self.saturated else ''}{self.value})"


def count_edge_classes(r: RootedTree, k: int, cap: Optional[int] = None) -> SatCount:
    """N(r, k) in saturating arithmetic (default cap: the order of ``r``)."""
    if k < 1:
        raise ValueError("k must be positive")
    cap = max(cap or r.size, r.size, 2)
    memo: dict[bytes, SatCount] = {}
    for v in reversed(r.order):
        code = r.codes[v]
        if code in memo:
            continue
        acc = SatCount(1, cap)
        for group in r.child_groups(v):
            acc = acc.times(memo[r.codes[group[0]]].scale(k).choose(len(group)))
        memo[code] = acc
    return memo[r.codes[r.root]]


def count_edge_classes_exact(r: RootedTree, k: int) -> int:
    """N(r, k) as an exact integer."""
    memo: dict[bytes, int] = {}
    for v in reversed(r.order):
        code = r.codes[v]
        if code not in memo:
            memo[code] = math.prod(math.comb(k * memo[r.codes[g[0]]], len(g))
                                   for g in r.child_groups(v))
    return memo[r.codes[r.root]]


def _min_k(pred, bound: int) -> int:
    for k in range(1, bound + 1):
        if pred(k):
            return k
    raise AssertionError(f"no k <= {bound} satisfies the condition")


def rooted_D(r: RootedTree) -> int:
    return _min_k(lambda k: count_edge_classes(r, k).value >= 1, max(r.size, 1))


@dataclass(frozen=True)
class _Shape:
    center: CenterInfo
    rooted: tuple[RootedTree, ...]
    isomorphic: Optional[bool]


def _shape(t: Graph) -> _Shape:
    if not is_tree(t):
        raise NotSupportedError("not a tree")
    c = center(t)
    if not c.bicentric:
        return _Shape(c, (root_at(t, c.vertices[0]),), None)
    tv, tw = halves(t, c)
    return _Shape(c, (tv, tw), rooted_isomorphic(tv, tw))


def _tree_D(s: _Shape, n: int) -> int:
    if s.isomorphic:
        tv = s.rooted[0]
        return _min_k(lambda k: count_edge_classes(tv, k, n).scale(k).value >= 2, n)
    return max(rooted_D(r) for r in s.rooted)


def _tree_Dprime(s: _Shape, n: int) -> int:
    if s.isomorphic:
        tv = s.rooted[0]
        return _min_k(lambda k: count_edge_classes(tv, k, n).value >= 2, n)
    return max(rooted_D(r) for r in s.rooted)


def tree_D(t: Graph) -> int:
    if t.n < 2:
        raise NotSupportedError("tree_D needs order at least 2")
    return _tree_D(_shape(t), t.n)


@dataclass(frozen=True)
class FamilyMembership:
    """Outcome of the three membership conditions for the extremal family."""

    bicentric: bool
    halves_isomorphic: Optional[bool] = None  # None: not reached
    unique_labeling: Optional[bool] = None
    classes_at_D: Optional[SatCount] = None

    def __bool__(self) -> bool:
        return bool(self.bicentric and self.halves_isomorphic and self.unique_labeling)

    @property
    def failed(self) -> tuple[int, ...]:
        flags = (self.bicentric, self.halves_isomorphic, self.unique_labeling)
        return tuple(i + 1 for i, ok in enumerate(flags) if ok is False)


def _membership(s: _Shape, n: int, d: int) -> FamilyMembership:
    if not s.center.bicentric:
        return FamilyMembership(False)
    if not s.isomorphic:
        return FamilyMembership(True, False)
    count = count_edge_classes(s.rooted[0], d, n)
    return FamilyMembership(True, True, count == 1, count)


def _check_order3(t: Graph) -> None:
    if t.n < 3:
        raise NotSupportedError("order at least 3 required")


def in_family_T(t: Graph) -> FamilyMembership:
    _check_order3(t)
    s = _shape(t)
    return _membership(s, t.n, _tree_D(s, t.n))


def tree_Dprime(t: Graph) -> int:
    """D'(t), via the family test; cross-checked against the direct
    formula for the bicentric case with isomorphic halves."""
    _check_order3(t)
    s = _shape(t)
    d = _tree_D(s, t.n)
    via_family = d + 1 if _membership(s, t.n, d) else d
    direct = _tree_Dprime(s, t.n)
    if via_family != direct:
        raise AssertionError(f"D' disagreement: {via_family} (family) vs {direct} (direct)")
    return direct


# -- witnesses ---------------------------------------------------------------

def edge_class_labelings(r: RootedTree, k: int, limit: int, v: Optional[int] = None) -> list[dict[int, int]]:
    """Up to ``limit`` pairwise non-isomorphic distinguishing edge
    k-labelings of the subtree of ``r`` at ``v``.

    A labeling is returned in co-label form: non-root vertex -> label of the
    edge to its parent. The output depends only on the shape of the subtree,
    so isomorphic subtrees yield corresponding lists.
    """
    v = r.root if v is None else v
    if limit <= 0:
        return []
    groups = []
    for group in r.child_groups(v):
        m, rep = len(group), group[0]
        need = m + limit - 1
        subs = edge_class_labelings(r, k, -(-need // k), rep)
        options = [(lab, sub) for sub in subs for lab in range(1, k + 1)][:need]
        if len(options) < m:
            return []
        maps = [rooted_isomorphism(r, r, rep, c) for c in group]
        combos = list(islice(combinations(range(len(options)), m), limit))
        groups.append((group, options, maps, combos))
    out = []
    for choice in islice(product(*(g[3] for g in groups)), limit):
        lab: dict[int, int] = {}
        for (group, options, maps, _), combo in zip(groups, choice):
            for child, iso, idx in zip(group, maps, combo):
                label, sub = options[idx]
                lab[child] = label
                for x, y in sub.items():
                    lab[iso[x]] = y
        out.append(lab)
    return out


def _edge_labeling(r: RootedTree, colab: dict[int, int], k: int) -> EdgeLabeling:
    return EdgeLabeling({r.parent_edge(x): y for x, y in colab.items()}, k)


def _vertex_witness(s: _Shape, n: int, d: int) -> VertexLabeling:
    labels = [1] * n
    if s.isomorphic:
        tv, tw = s.rooted
        classes = edge_class_labelings(tv, d, 2)
        if len(classes) >= 2:
            parts = [(tv, classes[0], 1), (tw, _transfer(tv, tw, classes[1]), 1)]
        else:
            parts = [(tv, classes[0], 1), (tw, _transfer(tv, tw, classes[0]), 2)]
    else:
        parts = [(r, edge_class_labelings(r, d, 1)[0], 1) for r in s.rooted]
    for r, colab, root_label in parts:
        f = from_colabel(r, _edge_labeling(r, colab, d), root_label)
        for x in r.order:
            labels[x] = f.labels[x]
    return VertexLabeling(tuple(labels), d)


def _transfer(a: RootedTree, b: RootedTree, colab: dict[int, int]) -> dict[int, int]:
    iso = rooted_isomorphism(a, b)
    return {iso[x]: y for x, y in colab.items()}


def _edge_witness(t: Graph, s: _Shape, d: int, dprime: int) -> EdgeLabeling:
    labels: dict[tuple[int, int], int] = {}
    if s.center.bicentric:
        labels[s.center.vertices] = 1
    if s.isomorphic:
        tv, tw = s.rooted
        classes = edge_class_labelings(tv, d, 2)
        second = classes[1] if len(classes) >= 2 else classes[0]
        parts = [(tv, classes[0]), (tw, _transfer(tv, tw, second))]
    else:
        parts = [(r, edge_class_labelings(r, d, 1)[0]) for r in s.rooted]
    for r, colab in parts:
        labels.update(_edge_labeling(r, colab, d).labels)
    if dprime > d:
        # the halves carry the same class: a fresh label on one edge of T_v breaks the swap
        tv = s.rooted[0]
        labels[tv.parent_edge(tv.children[tv.root][0])] = d + 1
    return EdgeLabeling(labels, dprime)


def witness_labelings(t: Graph) -> tuple[VertexLabeling, EdgeLabeling]:
    _check_order3(t)
    s = _shape(t)
    d = _tree_D(s, t.n)
    dprime = d + 1 if _membership(s, t.n, d) else d
    return _vertex_witness(s, t.n, d), _edge_witness(t, s, d, dprime)


@dataclass(frozen=True)
class ClassificationReport:
    D: int
    Dprime: int
    in_family_T: bool
    center: CenterInfo
    halves_isomorphic: Optional[bool]
    N_at_D: Optional[SatCount]
    witness_vertex: VertexLabeling
    witness_edge: EdgeLabeling
    failed_conditions: tuple[int, ...] = field(default=())


def classify_tree(t: Graph) -> ClassificationReport:
    _check_order3(t)
    s = _shape(t)
    d = _tree_D(s, t.n)
    member = _membership(s, t.n, d)
    dprime = d + 1 if member else d
    direct = _tree_Dprime(s, t.n)
    if direct != dprime:
        raise AssertionError(f"D' disagreement: {dprime} (family) vs {direct} (direct)")
    return ClassificationReport(
        D=d,
        Dprime=dprime,
        in_family_T=bool(member),
        center=s.center,
        halves_isomorphic=s.isomorphic,
        N_at_D=member.classes_at_D,
        witness_vertex=_vertex_witness(s, t.n, d),
        witness_edge=_edge_witness(t, s, d, dprime),
        failed_conditions=member.failed,
    )
