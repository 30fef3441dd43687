"""Buchberger's algorithm with reduced output, elimination and intersections.

Division is deterministic: the largest reducible term is always rewritten by
the first eligible divisor in basis order.  Pair selection uses the normal
strategy (smallest lcm degree, ties broken by the monomial order on the lcm)
together with the coprime and chain criteria, so repeated runs produce
byte-identical reduced bases.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .algebra import (
    DEGREVLEX,
    BlockElim,
    Mono,
    Order,
    Poly,
    Ring,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    poly_from_str,
    poly_to_str,
)


def normal_form(f: Poly, basis: Sequence[Poly], order: Order = DEGREVLEX) -> Poly:
    """Remainder of f on division by basis; no remainder term is reducible."""
    for g in basis:
        if not g:
            raise ValueError("zero polynomial in division basis")
    if not basis:
        return f
    p = f.ring.p
    leads = [(g.leading(order)[0], g) for g in basis]
    work = dict(f.terms)
    remainder: dict[Mono, int] = {}
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        for lm, g in leads:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                glm, glc = g.leading(order)
                scale = (c * pow(glc, -1, p)) % p
                for gm, gc in g.terms.items():
                    if gm == glm:
                        continue
                    mm = mono_mul(gm, q)
                    v = (work.get(mm, 0) - scale * gc) % p
                    if v:
                        work[mm] = v
                    elif mm in work:
                        del work[mm]
                break
        else:
            remainder[m] = c
    return Poly(f.ring, remainder)


def s_polynomial(f: Poly, g: Poly, order: Order = DEGREVLEX) -> Poly:
    """S-pair of f and g after normalising both to be monic."""
    if not f or not g:
        raise ValueError("s_polynomial needs nonzero inputs")
    f = f.monic(order)
    g = g.monic(order)
    lf, _ = f.leading(order)
    lg, _ = g.leading(order)
    lcm = mono_lcm(lf, lg)
    return f.mul_term(mono_div(lcm, lf)) - g.mul_term(mono_div(lcm, lg))


def _reduce_basis(basis: list[Poly], order: Order) -> tuple[Poly, ...]:
    """Minimalise and tail-reduce; output is monic and sorted by leading term."""
    basis = sorted((g.monic(order) for g in basis if g), key=lambda g: order.key(g.leading(order)[0]))
    minimal: list[Poly] = []
    for g in basis:
        lm = g.leading(order)[0]
        if not any(mono_divides(h.leading(order)[0], lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(normal_form(g, others, order).monic(order))
    reduced.sort(key=lambda g: order.key(g.leading(order)[0]))
    return tuple(reduced)


def buchberger(gens: Iterable[Poly], order: Order = DEGREVLEX) -> tuple[Poly, ...]:
    """Reduced Groebner basis of the ideal generated by gens."""
    G: list[Poly] = [g.monic(order) for g in gens if g]
    if not G:
        return ()
    leads: list[Mono] = [g.leading(order)[0] for g in G]

    heap: list = []
    pending: set[tuple[int, int]] = set()

    def push_pair(i: int, j: int) -> None:
        lcm = mono_lcm(leads[i], leads[j])
        heapq.heappush(heap, (sum(lcm), order.key(lcm), i, j))
        pending.add((i, j))

    for j in range(len(G)):
        for i in range(j):
            push_pair(i, j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        lcm = mono_lcm(li, lj)
        # coprime leading terms reduce to zero
        if all(min(a, b) == 0 for a, b in zip(li, lj)):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j) or not mono_divides(leads[k], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pending and b not in pending:
                skip = True
                break
        if skip:
            continue
        r = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if r:
            G.append(r.monic(order))
            leads.append(G[-1].leading(order)[0])
            new = len(G) - 1
            for k in range(new):
                push_pair(k, new)
    return _reduce_basis(G, order)


class Ideal:
    """Generator list with cached reduced Groebner bases per order."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: Ring, gens: Iterable[Poly] = ()):
        self.ring = ring
        gens = tuple(g for g in gens if g)
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        self.gens = gens
        self._gb: dict[Order, tuple[Poly, ...]] = {}

    def groebner_basis(self, order: Order = DEGREVLEX) -> tuple[Poly, ...]:
        if order not in self._gb:
            self._gb[order] = buchberger(self.gens, order)
        return self._gb[order]

    def contains(self, f: Poly, order: Order = DEGREVLEX) -> bool:
        return not normal_form(f, self.groebner_basis(order), order)

    def same_ideal(self, other: "Ideal", order: Order = DEGREVLEX) -> bool:
        if self.ring != other.ring:
            raise ValueError("ring mismatch")
        return self.groebner_basis(order) == other.groebner_basis(order)

    def is_zero(self) -> bool:
        return not self.gens

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.groebner_basis())

    def __repr__(self) -> str:
        return f"Ideal({len(self.gens)} gens, n={self.ring.n}, p={self.ring.p})"


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise ValueError("ring mismatch")
    return Ideal(a.ring, a.gens + b.gens)


def eliminate(ideal: Ideal, drop: Iterable[int]) -> Ideal:
    """Generators of the contraction to the subring without the drop variables.

    drop contains variable positions; internally a block order with those
    variables leading is used, and basis elements free of them are kept.
    """
    drop = tuple(sorted(set(drop)))
    ring = ideal.ring
    for pos in drop:
        if not 0 <= pos < ring.nvars:
            raise ValueError(f"variable position {pos} out of range")
    order = BlockElim(drop, ring.nvars)
    basis = buchberger(ideal.gens, order)
    kept = [g for g in basis if all(not any(m[i] for i in drop) for m in g.terms)]
    return Ideal(ring, kept)


def ideal_intersection(a: Ideal, b: Ideal) -> Ideal:
    """Intersection via one auxiliary variable: eliminate t from t*a + (1-t)*b."""
    if a.ring != b.ring:
        raise ValueError("ring mismatch")
    ring = a.ring
    ext = ring.with_aux(1)
    tpos = ext.t(ring.aux + 1)
    t = Poly.variable(ext, tpos)
    one_minus_t = Poly.constant(ext, 1) - t

    def lift(f: Poly) -> Poly:
        return Poly(ext, {m + (0,): c for m, c in f.terms.items()})

    gens = [t * lift(f) for f in a.gens] + [one_minus_t * lift(g) for g in b.gens]
    order = BlockElim((tpos,), ext.nvars)
    basis = buchberger(gens, order)
    kept = []
    for g in basis:
        if any(m[tpos] for m in g.terms):
            continue
        kept.append(Poly(ring, {m[:-1]: c for m, c in g.terms.items()}))
    return Ideal(ring, kept)


def min_generator_degrees(ideal: Ideal) -> list[int]:
    """Degrees of a minimal homogeneous generating set, sorted ascending.

    Works greedily on the reduced basis in increasing degree, discarding any
    element already generated by the ones kept so far.
    """
    basis = ideal.groebner_basis(DEGREVLEX)
    if not basis:
        return []
    for g in basis:
        if not g.is_homogeneous():
            raise ValueError("ideal is not homogeneous")
    ordered = sorted(basis, key=lambda g: (g.total_degree(), DEGREVLEX.key(g.leading()[0])))
    kept: list[Poly] = []
    kept_gb: tuple[Poly, ...] = ()
    degrees: list[int] = []
    for g in ordered:
        if kept and not normal_form(g, kept_gb, DEGREVLEX):
            continue
        kept.append(g)
        kept_gb = buchberger(kept, DEGREVLEX)
        degrees.append(g.total_degree())
    return sorted(degrees)


# ---------------------------------------------------------------------------
# golden-basis files: header line, then one polynomial per line


def basis_to_text(ideal_or_basis, ring: Ring | None = None, order: Order = DEGREVLEX) -> str:
    if isinstance(ideal_or_basis, Ideal):
        ring = ideal_or_basis.ring
        basis = ideal_or_basis.groebner_basis(order)
    else:
        basis = tuple(ideal_or_basis)
        if ring is None:
            if not basis:
                raise ValueError("cannot infer ring from an empty basis")
            ring = basis[0].ring
    lines = [f"# order={order.name} p={ring.p} n={ring.n}"]
    lines.extend(poly_to_str(g, order) for g in basis)
    return "\n".join(lines) + "\n"


def basis_from_text(text: str) -> tuple[Ring, tuple[Poly, ...]]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise ValueError("missing basis file header")
    header = dict(
        kv.split("=", 1) for kv in lines[0].lstrip("#").split() if "=" in kv
    )
    if header.get("order", "degrevlex") != "degrevlex":
        raise ValueError("only degrevlex basis files are supported")
    ring = Ring(int(header["n"]), int(header["p"]))
    return ring, tuple(poly_from_str(ring, ln) for ln in lines[1:])
