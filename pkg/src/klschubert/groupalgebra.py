"""Sparse exact arithmetic in Z[t, t^-1][L] for a rank-n lattice L.

Terms are keyed by exponent tuples (t_exp, l_1, ..., l_n): an integer power
of t times the formal exponential e^l of the lattice vector l = (l_1,...,l_n)
written in a fixed basis.  Coefficients are plain Python integers and zero
coefficients are never stored.  Instances are immutable once built and safe
to share between threads.

The fraction field built on top of this ring lives in `field`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Iterable

Exponent = tuple[int, ...]


class LaurentT:
    """Integer Laurent polynomial in the single variable t."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    @classmethod
    def zero(cls) -> "LaurentT":
        return cls()

    @classmethod
    def one(cls) -> "LaurentT":
        return cls({0: 1})

    @classmethod
    def term(cls, exp: int = 0, coeff: int = 1) -> "LaurentT":
        return cls({exp: coeff})

    @classmethod
    def from_dense(cls, lo: int, coeffs: Iterable[int]) -> "LaurentT":
        return cls({lo + i: c for i, c in enumerate(coeffs)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        return isinstance(other, LaurentT) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __neg__(self) -> "LaurentT":
        return LaurentT({e: -c for e, c in self.coeffs.items()})

    def __add__(self, other: "LaurentT") -> "LaurentT":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentT(out)

    def __sub__(self, other: "LaurentT") -> "LaurentT":
        return self + (-other)

    def __mul__(self, other) -> "LaurentT":
        if isinstance(other, int):
            return LaurentT({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentT(out)

    __rmul__ = __mul__

    def dense_pair(self) -> tuple[int, list[int]]:
        """Return (lo, coeffs) with coeffs listed from exponent lo upward."""
        if not self.coeffs:
            return 0, []
        lo = min(self.coeffs)
        hi = max(self.coeffs)
        return lo, [self.coeffs.get(e, 0) for e in range(lo, hi + 1)]

    def evaluate(self, tval: Fraction) -> Fraction:
        return sum((c * tval**e for e, c in self.coeffs.items()), Fraction(0))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                bits.append(str(c))
            else:
                head = "" if c == 1 else "-" if c == -1 else f"{c}*"
                bits.append(f"{head}t^{e}" if e != 1 else f"{head}t")
        return " + ".join(bits).replace("+ -", "- ")


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _sub_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


class GroupAlgebra:
    """Element of Z[t, t^-1][L]: sparse map from exponent tuples to integers.

    The first exponent slot is the power of t, the remaining `rank` slots are
    the lattice vector of the exponential.  The zero element is the empty map.
    """

    __slots__ = ("rank", "terms", "_hash")

    def __init__(self, rank: int, terms: dict[Exponent, int]):
        # Takes ownership of `terms`; callers must not mutate it afterwards.
        self.rank = rank
        self.terms = terms
        self._hash: int | None = None

    @classmethod
    def zero(cls, rank: int) -> "GroupAlgebra":
        return cls(rank, {})

    @classmethod
    def one(cls, rank: int) -> "GroupAlgebra":
        return cls(rank, {(0,) * (rank + 1): 1})

    @classmethod
    def monomial(cls, rank: int, coeff: int = 1, t_exp: int = 0,
                 lattice: Exponent | None = None) -> "GroupAlgebra":
        if not coeff:
            return cls.zero(rank)
        lat = tuple(lattice) if lattice is not None else (0,) * rank
        if len(lat) != rank:
            raise ValueError(f"lattice vector of length {len(lat)} in rank {rank}")
        return cls(rank, {(t_exp, *lat): coeff})

    @classmethod
    def from_terms(cls, rank: int, items: Iterable[tuple[Exponent, int]]) -> "GroupAlgebra":
        out: dict[Exponent, int] = {}
        for e, c in items:
            if len(e) != rank + 1:
                raise ValueError("exponent tuple has wrong length")
            out[e] = out.get(e, 0) + c
        return cls(rank, {e: c for e, c in out.items() if c})

    @classmethod
    def from_lattice_parts(cls, rank: int, parts: dict[Exponent, LaurentT]) -> "GroupAlgebra":
        out: dict[Exponent, int] = {}
        for lat, poly in parts.items():
            for te, c in poly.coeffs.items():
                if c:
                    out[(te, *lat)] = out.get((te, *lat), 0) + c
        return cls(rank, {e: c for e, c in out.items() if c})

    def by_lattice(self) -> dict[Exponent, LaurentT]:
        """View as a map lattice vector -> Laurent polynomial in t."""
        out: dict[Exponent, dict[int, int]] = {}
        for (te, *lat), c in self.terms.items():
            out.setdefault(tuple(lat), {})[te] = c
        return {lat: LaurentT(d) for lat, d in out.items()}

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * (self.rank + 1): 1}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupAlgebra) and self.rank == other.rank
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self.terms.items())))
        return self._hash

    def __neg__(self) -> "GroupAlgebra":
        return GroupAlgebra(self.rank, {e: -c for e, c in self.terms.items()})

    def __add__(self, other: "GroupAlgebra") -> "GroupAlgebra":
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return GroupAlgebra(self.rank, out)

    def __sub__(self, other: "GroupAlgebra") -> "GroupAlgebra":
        return self + (-other)

    def __mul__(self, other) -> "GroupAlgebra":
        if isinstance(other, int):
            if other == 0:
                return GroupAlgebra.zero(self.rank)
            if other == 1:
                return self
            return GroupAlgebra(self.rank, {e: c * other for e, c in self.terms.items()})
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Exponent, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return GroupAlgebra(self.rank, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "GroupAlgebra":
        if k < 0:
            raise ValueError("GroupAlgebra supports nonnegative powers only")
        out = GroupAlgebra.one(self.rank)
        for _ in range(k):
            out = out * self
        return out

    def mul_term(self, coeff: int, exp: Exponent) -> "GroupAlgebra":
        """Multiply by the single term coeff * t^exp[0] * e^exp[1:]."""
        if not coeff:
            return GroupAlgebra.zero(self.rank)
        return GroupAlgebra(self.rank, {
            _add_exp(e, exp): c * coeff for e, c in self.terms.items()})

    def normalized(self) -> tuple[int, Exponent, "GroupAlgebra"]:
        """Split off the unit content: self = content * t^shift * primitive.

        The primitive part has componentwise-minimal exponent 0, integer
        content 1, and a positive coefficient on its largest exponent tuple.
        Must not be called on zero.
        """
        if not self.terms:
            raise ValueError("normalized() on the zero element")
        exps = list(self.terms)
        shift = tuple(min(col) for col in zip(*exps))
        content = 0
        for c in self.terms.values():
            content = gcd(content, c)
        if self.terms[max(exps)] < 0:
            content = -content
        if shift == (0,) * (self.rank + 1) and content == 1:
            return 1, shift, self
        prim = GroupAlgebra(self.rank, {
            _sub_exp(e, shift): c // content for e, c in self.terms.items()})
        return content, shift, prim

    def divide_exact(self, g: "GroupAlgebra") -> "GroupAlgebra | None":
        """Return self / g if g divides self exactly in the ring, else None."""
        if not g.terms:
            raise ZeroDivisionError("division by the zero element")
        if not self.terms:
            return self
        fexps = list(self.terms)
        gexps = list(g.terms)
        fshift = tuple(min(col) for col in zip(*fexps))
        gshift = tuple(min(col) for col in zip(*gexps))
        f = {_sub_exp(e, fshift): c for e, c in self.terms.items()}
        gt = {_sub_exp(e, gshift): c for e, c in g.terms.items()}
        glead = max(gt)
        glc = gt[glead]
        q: dict[Exponent, int] = {}
        while f:
            flead = max(f)
            fc = f[flead]
            qe = _sub_exp(flead, glead)
            if any(x < 0 for x in qe) or fc % glc:
                return None
            qc = fc // glc
            q[qe] = qc
            for ge, gc in gt.items():
                e = _add_exp(qe, ge)
                s = f.get(e, 0) - qc * gc
                if s:
                    f[e] = s
                elif e in f:
                    del f[e]
        delta = _sub_exp(fshift, gshift)
        return GroupAlgebra(self.rank, {_add_exp(e, delta): c for e, c in q.items()})

    def map_lattice(self, fn: Callable[[Exponent], Exponent]) -> "GroupAlgebra":
        """Apply an injective linear map to the lattice part of every exponent."""
        return GroupAlgebra(self.rank, {
            (e[0], *fn(e[1:])): c for e, c in self.terms.items()})

    def evaluate(self, tval: Fraction, zvals: tuple[Fraction, ...]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c * tval ** e[0]
            for z, k in zip(zvals, e[1:]):
                if k:
                    v *= z**k
            total += v
        return total

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms ordered by lattice vector (lex), then ascending t exponent."""
        return sorted(self.terms.items(), key=lambda item: (item[0][1:], item[0][0]))

    def as_laurent(self) -> LaurentT | None:
        """Return the t-Laurent polynomial if lattice-free, else None."""
        zero_lat = (0,) * self.rank
        out = {}
        for e, c in self.terms.items():
            if tuple(e[1:]) != zero_lat:
                return None
            out[e[0]] = c
        return LaurentT(out)

    def __repr__(self) -> str:
        return format_terms(self.sorted_terms())


def format_terms(terms: list[tuple[Exponent, int]]) -> str:
    """Deterministic human-readable form, e.g. '3*t^-1*e[1,0,-1] + 2'."""
    if not terms:
        return "0"
    bits = []
    for e, c in terms:
        parts = []
        if e[0] == 1:
            parts.append("t")
        elif e[0]:
            parts.append(f"t^{e[0]}")
        if any(e[1:]):
            parts.append("e[" + ",".join(str(x) for x in e[1:]) + "]")
        mag = abs(c)
        if mag != 1 or not parts:
            parts.insert(0, str(mag))
        body = "*".join(parts)
        bits.append(("- " if c < 0 else "+ ") + body)
    first = bits[0]
    first = "-" + first[2:] if first.startswith("- ") else first[2:]
    return " ".join([first] + bits[1:])
