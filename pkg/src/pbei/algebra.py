"""Exact polynomial arithmetic over an odd-prime field.

The ambient ring for a graph on n vertices is K[x_1..x_n, y_1..y_n] with
coefficients in F_p.  Monomials are plain exponent tuples; polynomials are
sparse dicts mapping monomial -> coefficient in [1, p).  Besides the usual
total degree, every monomial carries a vertex multidegree: coordinate i is
the x_i exponent plus the y_i exponent.  Auxiliary variables (used for
elimination) sit after the y block and have no multidegree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

Mono = tuple[int, ...]

DEFAULT_PRIME = 32003
MAX_EXPONENT = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_modulus(p: int) -> None:
    """Reject non-primes and characteristic 2."""
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if p == 2:
        raise ValueError("characteristic 2 is not supported")


# ---------------------------------------------------------------------------
# monomials


def mono_mul(a: Mono, b: Mono) -> Mono:
    if len(a) != len(b):
        raise ValueError("monomials live in different rings")
    m = tuple(x + y for x, y in zip(a, b))
    if any(e > MAX_EXPONENT for e in m):
        raise OverflowError("exponent overflow")
    return m


def mono_divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Mono, a: Mono) -> Mono:
    """Quotient b / a; caller must ensure a divides b."""
    q = tuple(y - x for x, y in zip(a, b))
    if any(e < 0 for e in q):
        raise ValueError("quotient has negative exponent")
    return q


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(m: Mono) -> int:
    return sum(m)


# ---------------------------------------------------------------------------
# monomial orders
#
# Orders expose key(m); larger key = larger monomial.  Variable positions are
# ordered x_1 > ... > x_n > y_1 > ... > y_n > aux.


def _drl_key(m: Mono):
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class DegRevLex:
    name: str = field(default="degrevlex", init=False)

    def key(self, m: Mono):
        return _drl_key(m)


@dataclass(frozen=True)
class Lex:
    name: str = field(default="lex", init=False)

    def key(self, m: Mono):
        return m


@dataclass(frozen=True)
class BlockElim:
    """Elimination order: degrevlex on the leading block, then on the rest."""

    first: tuple[int, ...]
    nvars: int
    rest: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        first = tuple(sorted(set(self.first)))
        object.__setattr__(self, "first", first)
        fs = set(first)
        object.__setattr__(
            self, "rest", tuple(i for i in range(self.nvars) if i not in fs)
        )

    @property
    def name(self) -> str:
        return "elim[" + ",".join(map(str, self.first)) + "]"

    def key(self, m: Mono):
        return (
            _drl_key(tuple(m[i] for i in self.first)),
            _drl_key(tuple(m[i] for i in self.rest)),
        )


DEGREVLEX = DegRevLex()
LEX = Lex()

Order = DegRevLex | Lex | BlockElim


# ---------------------------------------------------------------------------
# ring context


@dataclass(frozen=True)
class Ring:
    """Variable layout plus the coefficient modulus.

    n vertices give variables x_1..x_n (positions 0..n-1) and y_1..y_n
    (positions n..2n-1); aux variables t_1..t_aux follow.
    """

    n: int
    p: int = DEFAULT_PRIME
    aux: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ring needs at least one vertex")
        if self.aux < 0:
            raise ValueError("negative aux variable count")
        check_modulus(self.p)

    @property
    def nvars(self) -> int:
        return 2 * self.n + self.aux

    def x(self, v: int) -> int:
        """Position of x_v, v in 1..n."""
        self._check_vertex(v)
        return v - 1

    def y(self, v: int) -> int:
        self._check_vertex(v)
        return self.n + v - 1

    def t(self, k: int = 1) -> int:
        if not 1 <= k <= self.aux:
            raise ValueError(f"aux variable t{k} not present")
        return 2 * self.n + k - 1

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")

    def var_name(self, pos: int) -> str:
        n = self.n
        if 0 <= pos < n:
            return f"x{pos + 1}"
        if n <= pos < 2 * n:
            return f"y{pos - n + 1}"
        if 2 * n <= pos < self.nvars:
            return f"t{pos - 2 * n + 1}"
        raise ValueError(f"variable position {pos} out of range")

    def var_position(self, name: str) -> int:
        m = re.fullmatch(r"([xyt])(\d+)", name)
        if not m:
            raise ValueError(f"bad variable name {name!r}")
        kind, idx = m.group(1), int(m.group(2))
        if kind == "x":
            return self.x(idx)
        if kind == "y":
            return self.y(idx)
        return self.t(idx)

    def unit_mono(self) -> Mono:
        return (0,) * self.nvars

    def var_mono(self, pos: int) -> Mono:
        e = [0] * self.nvars
        e[pos] = 1
        return tuple(e)

    def with_aux(self, k: int = 1) -> "Ring":
        return Ring(self.n, self.p, self.aux + k)

    def drop_aux(self) -> "Ring":
        return Ring(self.n, self.p, 0)

    def lift_mono(self, m: Mono, extra: int) -> Mono:
        return m + (0,) * extra

    def mono_multidegree(self, m: Mono) -> tuple[int, ...]:
        """Vertex multidegree: coordinate v-1 is exp(x_v) + exp(y_v)."""
        n = self.n
        if any(m[2 * n :]):
            raise ValueError("multidegree undefined for aux variables")
        return tuple(m[i] + m[n + i] for i in range(n))

    def mono_vsupport(self, m: Mono) -> frozenset[int]:
        n = self.n
        return frozenset(v for v in range(1, n + 1) if m[v - 1] or m[n + v - 1])


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Sparse polynomial: dict monomial -> coefficient in [1, p)."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms=None):
        self.ring = ring
        p = ring.p
        out: dict[Mono, int] = {}
        if terms:
            for m, c in terms.items() if isinstance(terms, dict) else terms:
                c = (out.get(m, 0) + c) % p
                if c:
                    out[m] = c
                elif m in out:
                    del out[m]
        self.terms = out

    # construction helpers

    @classmethod
    def zero(cls, ring: Ring) -> "Poly":
        return cls(ring)

    @classmethod
    def constant(cls, ring: Ring, c: int) -> "Poly":
        return cls(ring, {ring.unit_mono(): c})

    @classmethod
    def monomial(cls, ring: Ring, m: Mono, c: int = 1) -> "Poly":
        return cls(ring, {m: c})

    @classmethod
    def variable(cls, ring: Ring, pos: int) -> "Poly":
        return cls(ring, {ring.var_mono(pos): 1})

    # predicates / views

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    __hash__ = None  # mutable dict inside

    def __len__(self) -> int:
        return len(self.terms)

    def leading(self, order: Order = DEGREVLEX) -> tuple[Mono, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def sorted_terms(self, order: Order = DEGREVLEX) -> list[tuple[Mono, int]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def multidegree(self) -> tuple[int, ...] | None:
        """Shared vertex multidegree of all terms, or None if mixed."""
        if not self.terms:
            raise ValueError("zero polynomial has no multidegree")
        mds = {self.ring.mono_multidegree(m) for m in self.terms}
        if len(mds) > 1:
            return None
        return next(iter(mds))

    def is_multihomogeneous(self) -> bool:
        return self.multidegree() is not None

    def vsupport(self) -> frozenset[int]:
        if not self.terms:
            raise ValueError("zero polynomial has no support")
        out: set[int] = set()
        for m in self.terms:
            out |= self.ring.mono_vsupport(m)
        return frozenset(out)

    # arithmetic

    def _check_ring(self, other: "Poly") -> None:
        if self.ring != other.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_ring(other)
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            c = (out.get(m, 0) + c) % p
            if c:
                out[m] = c
            elif m in out:
                del out[m]
        return self._raw(out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_ring(other)
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            c = (out.get(m, 0) - c) % p
            if c:
                out[m] = c
            elif m in out:
                del out[m]
        return self._raw(out)

    def __neg__(self) -> "Poly":
        p = self.ring.p
        return self._raw({m: p - c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check_ring(other)
        p = self.ring.p
        out: dict[Mono, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = (out.get(m, 0) + c1 * c2) % p
                if c:
                    out[m] = c
                elif m in out:
                    del out[m]
        return self._raw(out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Poly":
        p = self.ring.p
        c %= p
        if c == 0:
            return Poly.zero(self.ring)
        return self._raw({m: (v * c) % p for m, v in self.terms.items()})

    def mul_term(self, m: Mono, c: int = 1) -> "Poly":
        """Multiply by the single term c * x^m."""
        p = self.ring.p
        c %= p
        if c == 0:
            return Poly.zero(self.ring)
        return self._raw({mono_mul(mm, m): (v * c) % p for mm, v in self.terms.items()})

    def monic(self, order: Order = DEGREVLEX) -> "Poly":
        if not self.terms:
            return self
        _, lc = self.leading(order)
        if lc == 1:
            return self
        return self.scale(pow(lc, -1, self.ring.p))

    def _raw(self, terms: dict[Mono, int]) -> "Poly":
        out = Poly.__new__(Poly)
        out.ring = self.ring
        out.terms = terms
        return out

    def __repr__(self) -> str:
        return f"Poly({poly_to_str(self)})"

    def __str__(self) -> str:
        return poly_to_str(self)


# ---------------------------------------------------------------------------
# text format: "3*x1*x2^2*y3 - y1*y2"

_TERM_RE = re.compile(r"([+-])?\s*([0-9a-zA-Z*^]+)")
_FACTOR_RE = re.compile(r"([xyt]\d+)(?:\^(\d+))?$")


def poly_to_str(f: Poly, order: Order = DEGREVLEX) -> str:
    if not f.terms:
        return "0"
    p = f.ring.p
    parts: list[str] = []
    for m, c in f.sorted_terms(order):
        neg = c > p // 2
        mag = p - c if neg else c
        factors = []
        for pos, e in enumerate(m):
            if e == 0:
                continue
            name = f.ring.var_name(pos)
            factors.append(name if e == 1 else f"{name}^{e}")
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def poly_from_str(ring: Ring, text: str) -> Poly:
    text = text.strip()
    if text in ("", "0"):
        return Poly.zero(ring)
    terms: list[tuple[Mono, int]] = []
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or not m.group(2):
            raise ValueError(f"cannot parse polynomial at ...{text[pos:]!r}")
        sign, body = m.group(1), m.group(2)
        if sign is None and not first:
            raise ValueError(f"missing sign before {body!r}")
        coeff = -1 if sign == "-" else 1
        exps = [0] * ring.nvars
        saw_coeff = False
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {body!r}")
            if factor.isdigit():
                if saw_coeff:
                    raise ValueError(f"two numeric factors in {body!r}")
                coeff *= int(factor)
                saw_coeff = True
                continue
            fm = _FACTOR_RE.fullmatch(factor)
            if not fm:
                raise ValueError(f"bad factor {factor!r}")
            vp = ring.var_position(fm.group(1))
            exps[vp] += int(fm.group(2) or 1)
        terms.append((tuple(exps), coeff))
        pos = m.end()
        first = False
        while pos < len(text) and text[pos] == " ":
            pos += 1
    return Poly(ring, terms)
