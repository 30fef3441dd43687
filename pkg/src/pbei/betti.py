"""Graded Betti tables via Koszul homology with exact mod-p linear algebra.

beta_{i,j}(R/I) is the homology dimension of the degree-j slice of the Koszul
complex on all ring variables tensored with R/I.  Quotient pieces are spanned
by standard monomials, boundary images are reduced to standard form through a
memoised normal-form table, and every slice splits into independent blocks
under the vertex multidegree (deg x_v = deg y_v = e_v), so ranks are taken on
many small dense matrices instead of one huge sparse one.  Vertex symmetries
of the underlying graph may be supplied to collapse multidegree orbits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from .algebra import DEGREVLEX, Mono, mono_div, mono_divides, mono_mul
from .errors import DEFAULT_MAX_COLUMNS, ResourceCapExceeded
from .groebner import Ideal


# ---------------------------------------------------------------------------
# tables


@dataclass(frozen=True)
class PurityVerdict:
    pure: bool
    degree_sequence: tuple[int, ...] = ()
    witnesses: tuple[tuple[int, int], ...] = ()
    window: tuple[int, int] = (0, 0)

    def describe(self) -> str:
        w = f"within window {self.window}"
        if self.pure:
            degs = ",".join(map(str, self.degree_sequence))
            return f"pure {w}; degree sequence ({degs})"
        pairs = ", ".join(f"({i},{j})" for i, j in self.witnesses)
        return f"impure; witnesses {pairs}"


@dataclass(frozen=True)
class BettiTable:
    """Sparse map (i, j) -> beta with an explicit computed window.

    Queries outside the window return None ("uncomputed"), never 0.  complete
    marks tables known to have no entries beyond the window (closed formulas).
    """

    entries: dict[tuple[int, int], int]
    i_max: int
    j_max: int
    complete: bool = False

    @property
    def window(self) -> tuple[int, int]:
        return (self.i_max, self.j_max)

    def get(self, i: int, j: int) -> int | None:
        if i < 0 or j < 0:
            return 0
        if i <= self.i_max and j <= self.j_max:
            return self.entries.get((i, j), 0)
        if self.complete:
            return self.entries.get((i, j), 0)
        return None

    def nonzero(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, b) for (i, j), b in self.entries.items() if b)

    def max_homological_degree(self) -> int:
        return max((i for (i, _j) in self.entries), default=0)

    def purity(self) -> PurityVerdict:
        columns: dict[int, list[int]] = {}
        for (i, j), b in self.entries.items():
            if i >= 1 and b:
                columns.setdefault(i, []).append(j)
        witnesses: list[tuple[int, int]] = []
        for i in sorted(columns):
            js = sorted(columns[i])
            if len(js) > 1:
                witnesses.extend((i, j) for j in js[:2])
        if witnesses:
            return PurityVerdict(False, (), tuple(witnesses), self.window)
        degs = tuple(columns[i][0] for i in sorted(columns))
        return PurityVerdict(True, degs, (), self.window)

    def to_json(self) -> dict:
        return {
            "window": [self.i_max, self.j_max],
            "entries": [[i, j, b] for i, j, b in self.nonzero()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BettiTable":
        i_max, j_max = data["window"]
        entries = {(int(i), int(j)): int(b) for i, j, b in data["entries"]}
        return cls(entries, int(i_max), int(j_max))

    def render(self) -> str:
        """Text diagram, row r = j - i, column i."""
        max_row = max((j - i for (i, j) in self.entries), default=0)
        cols = range(self.i_max + 1)
        width = max(
            [len(str(b)) for b in self.entries.values()] + [len(str(self.i_max)), 1]
        )
        lines = ["     " + " ".join(f"{i:>{width}}" for i in cols)]
        for r in range(max_row + 1):
            cells = []
            for i in cols:
                j = i + r
                if j > self.j_max:
                    cells.append(" " * width)
                    continue
                b = self.entries.get((i, j), 0)
                cells.append(f"{b if b else '.':>{width}}")
            lines.append(f"{r:>3}: " + " ".join(cells).rstrip())
        return "\n".join(lines)


def ci_betti(k: int) -> BettiTable:
    """Table of a quotient by a regular sequence of k quadrics: beta_{i,2i} = C(k,i)."""
    if k < 0:
        raise ValueError("need k >= 0")
    entries = {(i, 2 * i): comb(k, i) for i in range(k + 1)}
    return BettiTable(entries, k, 2 * k, complete=True)


def tensor_betti(a: BettiTable, b: BettiTable) -> BettiTable:
    """Convolution table; the window shrinks to what both factors can support."""
    if a.complete and b.complete:
        i_max, j_max = a.i_max + b.i_max, a.j_max + b.j_max
        complete = True
    else:
        i_max = min(x.i_max for x in (a, b) if not x.complete)
        j_max = min(x.j_max for x in (a, b) if not x.complete)
        complete = False
    entries: dict[tuple[int, int], int] = {}
    for (i1, j1), v1 in a.entries.items():
        for (i2, j2), v2 in b.entries.items():
            i, j = i1 + i2, j1 + j2
            if i <= i_max and j <= j_max:
                entries[(i, j)] = entries.get((i, j), 0) + v1 * v2
    return BettiTable(entries, i_max, j_max, complete=complete)


# ---------------------------------------------------------------------------
# quotient data: standard monomials and normal forms


class QuotientCache:
    """Standard-monomial bases of R/I up to a degree bound, plus a memoised
    monomial normal-form table (values are combinations of standard monomials)."""

    def __init__(self, ideal: Ideal, max_degree: int):
        ring = ideal.ring
        self.ring = ring
        self.p = ring.p
        self.max_degree = max_degree
        basis = ideal.groebner_basis(DEGREVLEX)
        self.lt: list[Mono] = [g.leading()[0] for g in basis]
        self.tails: list[tuple[tuple[Mono, int], ...]] = []
        for g, lt in zip(basis, self.lt):
            self.tails.append(tuple((m, c) for m, c in g.sorted_terms() if m != lt))
        nv = ring.nvars
        self._by_var: list[list[Mono]] = [
            [lt for lt in self.lt if lt[q]] for q in range(nv)
        ]
        self._nf: dict[Mono, tuple[tuple[Mono, int], ...]] = {}
        self._products: dict[Mono, tuple[Mono, ...]] = {}
        self._build_std()

    def _build_std(self) -> None:
        ring = self.ring
        nv = ring.nvars
        unit = ring.unit_mono()
        self.std: list[list[Mono]] = []
        self.std_mdeg: list[dict[tuple[int, ...], list[Mono]]] = []
        # (monomial, last nonzero position) per degree
        if unit in self.lt:
            level: list[tuple[Mono, int]] = []
        else:
            level = [(unit, 0)]
        for d in range(self.max_degree + 1):
            monos = [m for m, _ in level]
            self.std.append(monos)
            buckets: dict[tuple[int, ...], list[Mono]] = {}
            for m in monos:
                buckets.setdefault(ring.mono_multidegree(m), []).append(m)
            self.std_mdeg.append(buckets)
            if d == self.max_degree:
                break
            nxt: list[tuple[Mono, int]] = []
            for m, last in level:
                for q in range(last, nv):
                    e = list(m)
                    e[q] += 1
                    cand = tuple(e)
                    mq = cand[q]
                    if any(
                        lt[q] == mq and mono_divides(lt, cand)
                        for lt in self._by_var[q]
                    ):
                        continue
                    nxt.append((cand, q))
            level = nxt

    def hilbert(self, d: int) -> int:
        if d < 0:
            return 0
        if d > self.max_degree:
            raise ValueError(f"degree {d} beyond cached bound {self.max_degree}")
        return len(self.std[d])

    def _first_divisor(self, m: Mono):
        for lt, tail in zip(self.lt, self.tails):
            if mono_divides(lt, m):
                return lt, tail
        return None

    def nf_items(self, w: Mono) -> tuple[tuple[Mono, int], ...]:
        """Normal form of a monomial as ((standard monomial, coeff), ...)."""
        cached = self._nf.get(w)
        if cached is not None:
            return cached
        p = self.p
        stack = [w]
        while stack:
            m = stack[-1]
            if m in self._nf:
                stack.pop()
                continue
            div = self._first_divisor(m)
            if div is None:
                self._nf[m] = ((m, 1),)
                stack.pop()
                continue
            lt, tail = div
            q = mono_div(m, lt)
            deps = [mono_mul(tm, q) for tm, _ in tail]
            missing = [dep for dep in deps if dep not in self._nf]
            if missing:
                stack.extend(missing)
                continue
            acc: dict[Mono, int] = {}
            for (_, tc), dep in zip(tail, deps):
                s = (-tc) % p
                for v, c in self._nf[dep]:
                    nv = (acc.get(v, 0) + s * c) % p
                    if nv:
                        acc[v] = nv
                    elif v in acc:
                        del acc[v]
            self._nf[m] = tuple(acc.items())
            stack.pop()
        return self._nf[w]

    def var_products(self, u: Mono) -> tuple[Mono, ...]:
        out = self._products.get(u)
        if out is None:
            out = tuple(
                u[:q] + (u[q] + 1,) + u[q + 1 :] for q in range(len(u))
            )
            self._products[u] = out
        return out


def quotient_basis(ideal: Ideal, d: int) -> list[Mono]:
    """All degree-d monomials not divisible by a leading term of the basis."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    cache = QuotientCache(ideal, d)
    return sorted(cache.std[d], key=DEGREVLEX.key, reverse=True)


# ---------------------------------------------------------------------------
# mod-p ranks


def rank_modp(a: np.ndarray, p: int) -> int:
    """Rank over F_p by in-place Gaussian elimination on an int64 matrix."""
    a = np.array(a, dtype=np.int64) % p
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        col = a[r:, c]
        i0 = int(col.argmax())
        if col[i0] == 0:
            continue
        if i0:
            a[[r, r + i0]] = a[[r + i0, r]]
        inv = pow(int(a[r, c]), -1, p)
        piv = a[r, c:] * inv % p
        a[r, c:] = piv
        rest = a[r + 1 :, c:]
        below = rest[:, 0].nonzero()[0]
        if below.size:
            sub = rest[below]
            sub -= sub[:, :1] * piv
            sub %= p
            rest[below] = sub
        r += 1
    return r


# ---------------------------------------------------------------------------
# Koszul homology


def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative ints summing to total."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def _subset_data(nvars: int, n: int, size: int):
    """(mask, multidegree, boundary) for every size-subset of the variables;
    boundary lists (variable, submask, sign) with the alternating sign."""
    out = []
    for combo in itertools.combinations(range(nvars), size):
        mask = 0
        md = [0] * n
        for k in combo:
            mask |= 1 << k
            md[k % n] += 1
        boundary = tuple(
            (k, mask ^ (1 << k), -1 if t % 2 else 1) for t, k in enumerate(combo)
        )
        out.append((mask, tuple(md), boundary))
    return out


def _mdeg_orbit(d: tuple[int, ...], perms: list[tuple[int, ...]]):
    images = set()
    for perm in perms:
        img = [0] * len(d)
        for v0, val in enumerate(d):
            img[perm[v0] - 1] = val
        images.add(tuple(img))
    return min(images), len(images)


def koszul_betti(
    ideal: Ideal,
    i_max: int,
    j_max: int,
    *,
    max_columns: int = DEFAULT_MAX_COLUMNS,
    vertex_symmetries: list[tuple[int, ...]] | None = None,
) -> BettiTable:
    """Exact beta_{i,j}(R/I) for all i <= i_max, j <= j_max.

    vertex_symmetries may list vertex permutations known to fix the ideal
    (e.g. graph automorphisms); isomorphic multidegree blocks are then
    computed once per orbit.
    """
    ring = ideal.ring
    if ring.aux:
        raise ValueError("Betti computation expects a plain graph ring")
    nvars = ring.nvars
    n = ring.n
    if not 1 <= i_max <= nvars:
        raise ValueError(f"need 1 <= i_max <= {nvars} (got {i_max})")
    if j_max < i_max:
        raise ValueError("need j_max >= i_max")
    identity = tuple(range(1, n + 1))
    perms = [identity]
    if vertex_symmetries:
        for perm in vertex_symmetries:
            if sorted(perm) != list(identity):
                raise ValueError(f"bad vertex permutation {perm}")
        perms = sorted(set(vertex_symmetries) | {identity})

    cache = QuotientCache(ideal, j_max)
    top = min(nvars, i_max + 1)
    subsets = {i: _subset_data(nvars, n, i) for i in range(top + 1)}
    boundary_of = {
        mask: boundary for data in subsets.values() for mask, _, boundary in data
    }
    p = ring.p
    ranks: dict[tuple[int, int], int] = {}

    for j in range(j_max + 1):
        for d in _compositions(j, n):
            if len(perms) > 1:
                rep, orbit = _mdeg_orbit(d, perms)
                if rep != d:
                    continue
            else:
                orbit = 1
            # bases of the multidegree-d slice per homological degree
            bases: dict[int, list[tuple[int, Mono]]] = {}
            index: dict[int, dict[tuple[int, Mono], int]] = {}
            for i in range(min(top, j) + 1):
                deg_u = j - i
                lst: list[tuple[int, Mono]] = []
                for mask, md, _ in subsets[i]:
                    rem = tuple(a - b for a, b in zip(d, md))
                    if any(x < 0 for x in rem):
                        continue
                    for u in cache.std_mdeg[deg_u].get(rem, ()):
                        lst.append((mask, u))
                bases[i] = lst
                index[i] = {pair: t for t, pair in enumerate(lst)}
            for i in range(1, min(top, j) + 1):
                cols = bases[i]
                rows = index[i - 1]
                if not cols or not rows:
                    continue
                # cap applies to matrices actually materialised (one per
                # multidegree block), not to the nominal full slice
                if max(len(cols), len(rows)) > max_columns:
                    raise ResourceCapExceeded(
                        f"multidegree block at (i={i}, j={j}) is "
                        f"{len(rows)}x{len(cols)}, cap is {max_columns}"
                    )
                ri: list[int] = []
                ci: list[int] = []
                vals: list[int] = []
                for t, (mask, u) in enumerate(cols):
                    prods = cache.var_products(u)
                    for k, submask, sign in boundary_of[mask]:
                        for v, c in cache.nf_items(prods[k]):
                            ri.append(rows[(submask, v)])
                            ci.append(t)
                            vals.append(c if sign > 0 else p - c)
                if not vals:
                    continue
                mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
                mat[ri, ci] = vals
                r = rank_modp(mat, p)
                if r:
                    ranks[(i, j)] = ranks.get((i, j), 0) + orbit * r

    entries: dict[tuple[int, int], int] = {}
    for i in range(i_max + 1):
        for j in range(j_max + 1):
            dim = comb(nvars, i) * cache.hilbert(j - i) if j >= i else 0
            beta = dim - ranks.get((i, j), 0) - ranks.get((i + 1, j), 0)
            if beta < 0:
                raise RuntimeError(f"negative beta at ({i},{j}): internal error")
            if beta:
                entries[(i, j)] = beta
    if cache.hilbert(0) == 1:
        if entries.get((0, 0)) != 1 or any(
            i == 0 and j > 0 for (i, j) in entries
        ):
            raise RuntimeError("inconsistent zeroth homology: internal error")
    return BettiTable(entries, i_max, j_max)


# ---------------------------------------------------------------------------
# Hilbert-function cross-check


def hilbert_consistency(
    ideal: Ideal, table: BettiTable, d_max: int
) -> tuple[bool, int | None]:
    """Check dim(R/I)_d against the alternating Betti sum for all d <= d_max.

    Meaningful when the table covers every nonzero entry with j <= d_max.
    Returns (ok, first failing degree or None).
    """
    nv = ideal.ring.nvars
    cache = QuotientCache(ideal, d_max)
    for d in range(d_max + 1):
        lhs = cache.hilbert(d)
        rhs = 0
        for (i, j), b in table.entries.items():
            if j <= d:
                rhs += (-1) ** i * b * comb(d - j + nv - 1, nv - 1)
        if lhs != rhs:
            return False, d
    return True, None
