"""Vertex/edge co-labelings of rooted trees.

Pushing each non-root vertex's label onto the edge to its parent turns a
vertex labeling into an edge labeling; the map is invertible once a root
label is chosen, and it preserves being distinguishing.
"""

from __future__ import annotations

from .graph import EdgeLabeling, VertexLabeling
from .trees import Labeling, RootedTree, labeled_codes


def to_colabel(r: RootedTree, f: VertexLabeling) -> EdgeLabeling:
    if len(f.labels) != r.graph.n:
        raise ValueError("vertex labeling does not cover the tree")
    return EdgeLabeling({r.parent_edge(x): f.labels[x] for x in r.order[1:]}, f.k)


def from_colabel(r: RootedTree, g: EdgeLabeling, root_label: int,
                 fill: int = 1) -> VertexLabeling:
    """Inverse of :func:`to_colabel`.

    The result is a labeling of the whole underlying graph; vertices outside
    ``r`` get ``fill``.
    """
    k = max(g.k, root_label, fill)
    labels = [fill] * r.graph.n
    labels[r.root] = root_label
    for x in r.order[1:]:
        e = r.parent_edge(x)
        if e not in g.labels:
            raise ValueError(f"edge labeling misses edge {e}")
        labels[x] = g.labels[e]
    return VertexLabeling(tuple(labels), k)


def is_rooted_distinguishing(r: RootedTree, lab: Labeling) -> bool:
    """True iff only the identity among root-fixing automorphisms preserves
    ``lab``: at every vertex the labeled child subtrees must be pairwise
    non-isomorphic."""
    codes = labeled_codes(r, lab)
    for v in r.order:
        kids = r.children[v]
        if len(kids) > 1 and len({codes[c] for c in kids}) != len(kids):
            return False
    return True
