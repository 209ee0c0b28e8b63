"""Tree centres, rooted trees and their canonical (AHU-style) byte codes.

Codes are length-prefixed nested byte strings: a node's body is its optional
label followed by the sorted codes of its children, and the whole is prefixed
by the body length. The encoding parses back uniquely, so equal codes mean
isomorphic (labeled) rooted trees and vice versa.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Optional, Union

from .graph import EdgeLabeling, Graph, NotSupportedError, VertexLabeling, is_tree, norm_edge

_W = 4  # bytes per length prefix / label


def _wrap(body: bytes) -> bytes:
    return len(body).to_bytes(_W, "big") + body


LEAF_CODE = _wrap(b"")


@dataclass(frozen=True)
class CenterInfo:
    vertices: tuple[int, ...]

    @property
    def bicentric(self) -> bool:
        return len(self.vertices) == 2

    @property
    def kind(self) -> str:
        return "bicentric" if self.bicentric else "unicentric"

    def __repr__(self) -> str:
        if self.bicentric:
            return f"Bicentric{self.vertices}"
        return f"Unicentric({self.vertices[0]})"


def Unicentric(c: int) -> CenterInfo:
    return CenterInfo((c,))


def Bicentric(v: int, w: int) -> CenterInfo:
    return CenterInfo((min(v, w), max(v, w)))


def center(t: Graph) -> CenterInfo:
    """Centre by repeated removal of all current leaves."""
    if not is_tree(t):
        raise NotSupportedError("not a tree")
    if t.n <= 2:
        return CenterInfo(tuple(range(t.n)))
    deg = [len(a) for a in t.adjacency]
    layer = [v for v in range(t.n) if deg[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in t.adjacency[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return CenterInfo(tuple(sorted(layer)))


def eccentricities(g: Graph) -> list[int]:
    out = []
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        out.append(max(dist))
    return out


@dataclass(frozen=True, eq=False)
class RootedTree:
    """A tree (or a component of a forest obtained by deleting vertices)
    hanging from ``root``.

    ``order`` lists the vertices breadth-first from the root; ``children``
    are sorted by subtree code, then by vertex index.
    """

    graph: Graph
    root: int
    parent: dict[int, Optional[int]]
    children: dict[int, tuple[int, ...]]
    order: tuple[int, ...]
    codes: dict[int, bytes]

    @property
    def size(self) -> int:
        return len(self.order)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.order)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as normalised pairs, one per non-root vertex, in BFS order."""
        return [norm_edge(x, self.parent[x]) for x in self.order[1:]]

    def parent_edge(self, x: int) -> tuple[int, int]:
        return norm_edge(x, self.parent[x])

    def subtree(self, v: int) -> list[int]:
        out, stack = [], [v]
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(self.children[x])
        return out

    def child_groups(self, v: int) -> list[tuple[int, ...]]:
        """Children of ``v`` split into runs of isomorphic subtrees."""
        groups: list[list[int]] = []
        last = None
        for c in self.children[v]:
            code = self.codes[c]
            if code != last:
                groups.append([])
                last = code
            groups[-1].append(c)
        return [tuple(g) for g in groups]


def root_at(g: Graph, r: int, exclude: Iterable[int] = ()) -> RootedTree:
    """Root the component of ``g - exclude`` that contains ``r`` at ``r``.

    With ``exclude`` empty, ``g`` must be a tree; otherwise the reachable part
    must be acyclic.
    """
    blocked = set(exclude)
    if r in blocked:
        raise ValueError("root is excluded")
    parent: dict[int, Optional[int]] = {r: None}
    order = [r]
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for v in g.adjacency[u]:
            if v in blocked or v == parent[u]:
                continue
            if v in parent:
                raise NotSupportedError("the component contains a cycle")
            parent[v] = u
            order.append(v)
    if not blocked and len(order) != g.n:
        raise NotSupportedError("not a tree")
    kids: dict[int, list[int]] = {v: [] for v in order}
    for v in order[1:]:
        kids[parent[v]].append(v)
    codes: dict[int, bytes] = {}
    children: dict[int, tuple[int, ...]] = {}
    for v in reversed(order):
        cs = sorted(kids[v], key=lambda c: (codes[c], c))
        children[v] = tuple(cs)
        codes[v] = _wrap(b"".join(codes[c] for c in cs))
    return RootedTree(g, r, parent, children, tuple(order), codes)


def ahu_code(r: RootedTree) -> bytes:
    return r.codes[r.root]


Labeling = Union[VertexLabeling, EdgeLabeling]


def labeled_codes(r: RootedTree, lab: Labeling) -> dict[int, bytes]:
    """Labeled code of every subtree of ``r``.

    Vertex labels are stored at their vertex (the root included); an edge
    label is stored at the child end of the edge, so the root carries none.
    """
    if isinstance(lab, VertexLabeling):
        if len(lab.labels) != r.graph.n:
            raise ValueError("vertex labeling does not cover the tree")
        own = {v: lab.labels[v].to_bytes(_W, "big") for v in r.order}
    else:
        try:
            own = {v: lab.labels[r.parent_edge(v)].to_bytes(_W, "big") for v in r.order[1:]}
        except KeyError as exc:
            raise ValueError(f"edge labeling misses edge {exc.args[0]}") from None
        own[r.root] = b""
    codes: dict[int, bytes] = {}
    for v in reversed(r.order):
        codes[v] = _wrap(own[v] + b"".join(sorted(codes[c] for c in r.children[v])))
    return codes


def labeled_code(r: RootedTree, lab: Labeling) -> bytes:
    return labeled_codes(r, lab)[r.root]


def rooted_isomorphic(a: RootedTree, b: RootedTree) -> bool:
    return ahu_code(a) == ahu_code(b)


def rooted_isomorphism(a: RootedTree, b: RootedTree, va: Optional[int] = None,
                       vb: Optional[int] = None) -> Optional[dict[int, int]]:
    """A root-preserving isomorphism from the subtree of ``a`` at ``va`` onto
    the subtree of ``b`` at ``vb`` (defaults: the roots), or ``None``."""
    va = a.root if va is None else va
    vb = b.root if vb is None else vb
    if a.codes[va] != b.codes[vb]:
        return None
    mapping = {}
    stack = [(va, vb)]
    while stack:
        x, y = stack.pop()
        mapping[x] = y
        # equal codes and code-sorted children: pairing in order is an isomorphism
        stack.extend(zip(a.children[x], b.children[y]))
    return mapping


def halves(t: Graph, c: Optional[CenterInfo] = None) -> tuple[RootedTree, RootedTree]:
    """The components ``T_v`` and ``T_w`` of a bicentric tree minus its
    central edge, rooted at ``v`` and ``w``."""
    c = c or center(t)
    if not c.bicentric:
        raise NotSupportedError("tree is unicentric")
    v, w = c.vertices
    return root_at(t, v, exclude=(w,)), root_at(t, w, exclude=(v,))


def rooted_aut_order(r: RootedTree) -> int:
    total = 1
    for v in r.order:
        for mult in Counter(r.codes[c] for c in r.children[v]).values():
            total *= factorial(mult)
    return total


def tree_aut_order(t: Graph) -> int:
    c = center(t)
    if not c.bicentric:
        return rooted_aut_order(root_at(t, c.vertices[0]))
    tv, tw = halves(t, c)
    swap = 2 if rooted_isomorphic(tv, tw) else 1
    return rooted_aut_order(tv) * rooted_aut_order(tw) * swap


def free_tree_code(t: Graph) -> bytes:
    """Isomorphism invariant of a free tree, anchored at its centre."""
    c = center(t)
    if not c.bicentric:
        return b"U" + ahu_code(root_at(t, c.vertices[0]))
    a, b = sorted(ahu_code(h) for h in halves(t, c))
    return b"B" + a + b
