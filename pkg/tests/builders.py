"""Named graphs and independent helpers shared by the tests."""

from __future__ import annotations

import heapq
import random
from itertools import product

from distinguishing.graph import Graph, cycle_graph, path_graph, star_graph

__all__ = ["paired_spiders", "double_star", "sun", "prufer_tree", "random_tree", "path_graph",
           "cycle_graph", "star_graph", "all_labelings"]


def paired_spiders() -> Graph:
    """Central edge 0-1 with four paths of length 2 hanging from each end."""
    edges = [(0, 1)]
    nxt = 2
    for c in (0, 1):
        for _ in range(4):
            edges += [(c, nxt), (nxt, nxt + 1)]
            nxt += 2
    return Graph.from_edges(nxt, edges)


def double_star(a: int, b: int) -> Graph:
    """Central edge 0-1, ``a`` leaves on 0 and ``b`` leaves on 1."""
    edges = [(0, 1)] + [(0, 2 + i) for i in range(a)] + [(1, 2 + a + i) for i in range(b)]
    return Graph.from_edges(2 + a + b, edges)


def sun(t: int) -> Graph:
    """C_t with one pendant leaf per cycle vertex."""
    edges = [(i, (i + 1) % t) for i in range(t)] + [(i, t + i) for i in range(t)]
    return Graph.from_edges(2 * t, edges)


def prufer_tree(seq: list[int], n: int) -> Graph:
    """Decode a Prüfer sequence of length n - 2."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return path_graph(2)
    return prufer_tree([rng.randrange(n) for _ in range(n - 2)], n)


def all_labelings(length: int, k: int):
    return product(range(1, k + 1), repeat=length)


class ExplicitGroup:
    """The oracle's automorphism list, reduced to moved-point pairs on
    vertices and on edges, for fast bulk checks of many labelings."""

    def __init__(self, g: Graph):
        from distinguishing import oracle
        from distinguishing.graph import norm_edge
        self.edges = g.edges
        pos = {e: i for i, e in enumerate(g.edges)}
        self.vertex_moves, self.edge_moves = [], []
        for p in oracle.automorphisms(g):
            if p.is_identity():
                continue
            img = p.image
            self.vertex_moves.append([(i, img[i]) for i in range(g.n) if img[i] != i])
            eimg = [pos[norm_edge(img[u], img[v])] for u, v in g.edges]
            self.edge_moves.append([(i, j) for i, j in enumerate(eimg) if i != j])

    @staticmethod
    def _survives(seq, moves) -> bool:
        for idx, pairs in enumerate(moves):
            if all(seq[i] == seq[j] for i, j in pairs):
                if idx:
                    moves.insert(0, moves.pop(idx))
                return False
        return True

    def vertex_distinguishing(self, seq) -> bool:
        return self._survives(seq, self.vertex_moves)

    def edge_distinguishing(self, seq) -> bool:
        return self._survives(seq, self.edge_moves)
