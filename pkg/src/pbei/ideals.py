"""Edge ideals of graphs and the x/y swap automorphism relating them.

Both ideal families live in the full ring on 2n variables even when the
graph has isolated vertices: unused variables leave Betti numbers unchanged
and keep induced-subgraph comparisons in one ambient ring.
"""

from __future__ import annotations

from .algebra import DEFAULT_PRIME, Poly, Ring
from .graphs import Graph
from .groebner import Ideal


def graph_ring(g: Graph, p: int = DEFAULT_PRIME) -> Ring:
    return Ring(g.n, p)


def parity_ideal(g: Graph, p: int = DEFAULT_PRIME) -> Ideal:
    """One generator x_i*x_j - y_i*y_j per edge {i,j}, i < j."""
    ring = graph_ring(g, p)
    gens = []
    for i, j in sorted(g.edges):
        xx = ring.var_mono(ring.x(i))
        gens.append(
            Poly(
                ring,
                {
                    tuple(a + b for a, b in zip(xx, ring.var_mono(ring.x(j)))): 1,
                    tuple(
                        a + b
                        for a, b in zip(ring.var_mono(ring.y(i)), ring.var_mono(ring.y(j)))
                    ): -1,
                },
            )
        )
    return Ideal(ring, gens)


def binomial_edge_ideal(g: Graph, p: int = DEFAULT_PRIME) -> Ideal:
    """One 2x2-minor generator x_i*y_j - x_j*y_i per edge {i,j}, i < j."""
    ring = graph_ring(g, p)
    gens = []
    for i, j in sorted(g.edges):
        m1 = tuple(
            a + b for a, b in zip(ring.var_mono(ring.x(i)), ring.var_mono(ring.y(j)))
        )
        m2 = tuple(
            a + b for a, b in zip(ring.var_mono(ring.x(j)), ring.var_mono(ring.y(i)))
        )
        gens.append(Poly(ring, {m1: 1, m2: -1}))
    return Ideal(ring, gens)


def bipartite_swap(ideal: Ideal, part) -> Ideal:
    """Image under the ring automorphism exchanging x_i and y_i for i in part.

    An involution; applied to the binomial edge ideal of a bipartite graph
    with part one side of the bipartition, it yields the parity ideal.
    """
    ring = ideal.ring
    if ring.aux:
        raise ValueError("swap is defined on graph rings only")
    part = set(part)
    for v in part:
        if not 1 <= v <= ring.n:
            raise ValueError(f"vertex {v} out of range")
    swap_pos = {}
    for v in part:
        swap_pos[ring.x(v)] = ring.y(v)
        swap_pos[ring.y(v)] = ring.x(v)

    def swap_mono(m):
        e = list(m)
        for a, b in swap_pos.items():
            e[b] = m[a]
        return tuple(e)

    gens = [Poly(ring, {swap_mono(m): c for m, c in f.terms.items()}) for f in ideal.gens]
    return Ideal(ring, gens)
