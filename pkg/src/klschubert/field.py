"""The fraction field of Z[t, t^-1][L] with factored denominators.

A FieldElement is stored as

    unit * t^mono[0] * e^mono[1:] * num / prod(f^m for f, m in den)

where `unit` is a nonzero rational, `num` is a primitive GroupAlgebra
(componentwise-minimal exponent 0, integer content 1, positive leading
coefficient), and `den` maps primitive non-unit GroupAlgebra factors to
positive multiplicities with no factor dividing `num`.  Keeping denominators
factored lets sums use least-common-multiple denominators and lets products
cancel by exact trial division, which is what keeps the arithmetic compact;
no multivariate gcd is ever computed.  Equality is semantic (cross
multiplication), not a normal form.

All values are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from .groupalgebra import Exponent, GroupAlgebra, LaurentT, format_terms


class FieldElement:
    __slots__ = ("rank", "unit", "mono", "num", "den")

    def __init__(self, rank: int, unit: Fraction, mono: Exponent,
                 num: GroupAlgebra, den: dict[GroupAlgebra, int]):
        # Internal: use the constructors below, which normalize.
        self.rank = rank
        self.unit = unit
        self.mono = mono
        self.num = num
        self.den = den

    # -- construction -----------------------------------------------------

    @classmethod
    def _make(cls, rank: int, unit: Fraction, mono: Exponent,
              num: GroupAlgebra, den: dict[GroupAlgebra, int]) -> "FieldElement":
        if not unit or num.is_zero():
            return zero(rank)
        c, shift, num = num.normalized()
        unit *= c
        mono = tuple(a + b for a, b in zip(mono, shift))
        clean: dict[GroupAlgebra, int] = {}
        for f, m in den.items():
            if m < 0:
                raise ValueError("negative denominator multiplicity")
            if not m:
                continue
            fc, fshift, f = f.normalized()
            unit /= fc**m
            mono = tuple(a - m * b for a, b in zip(mono, fshift))
            if f.is_one():
                continue
            clean[f] = clean.get(f, 0) + m
        for f in list(clean):
            while clean[f]:
                q = num.divide_exact(f)
                if q is None:
                    break
                clean[f] -= 1
                c, shift, num = q.normalized()
                unit *= c
                mono = tuple(a + b for a, b in zip(mono, shift))
            if not clean[f]:
                del clean[f]
        return cls(rank, unit, mono, num, clean)

    @classmethod
    def from_ga(cls, ga: GroupAlgebra) -> "FieldElement":
        return cls._make(ga.rank, Fraction(1), (0,) * (ga.rank + 1), ga, {})

    @classmethod
    def from_int(cls, rank: int, n: int) -> "FieldElement":
        return cls._make(rank, Fraction(n), (0,) * (rank + 1), GroupAlgebra.one(rank), {})

    @classmethod
    def from_fraction(cls, rank: int, q: Fraction) -> "FieldElement":
        return cls._make(rank, q, (0,) * (rank + 1), GroupAlgebra.one(rank), {})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return (self.unit == 1 and not any(self.mono) and self.num.is_one()
                and not self.den)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- ring/field operations ---------------------------------------------

    def __add__(self, other: "FieldElement") -> "FieldElement":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        lcm: dict[GroupAlgebra, int] = dict(self.den)
        for f, m in other.den.items():
            if lcm.get(f, 0) < m:
                lcm[f] = m
        ext_a = GroupAlgebra.one(self.rank)
        ext_b = GroupAlgebra.one(self.rank)
        for f, m in lcm.items():
            da = m - self.den.get(f, 0)
            db = m - other.den.get(f, 0)
            for _ in range(da):
                ext_a = ext_a * f
            for _ in range(db):
                ext_b = ext_b * f
        q = _lcm_int(self.unit.denominator, other.unit.denominator)
        ca = int(self.unit * q)
        cb = int(other.unit * q)
        common = tuple(min(a, b) for a, b in zip(self.mono, other.mono))
        num = ((self.num * ext_a).mul_term(ca, _sub(self.mono, common))
               + (other.num * ext_b).mul_term(cb, _sub(other.mono, common)))
        return FieldElement._make(self.rank, Fraction(1, q), common, num, lcm)

    def __neg__(self) -> "FieldElement":
        if self.is_zero():
            return self
        return FieldElement(self.rank, -self.unit, self.mono, self.num, self.den)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def __mul__(self, other) -> "FieldElement":
        if isinstance(other, int):
            other = FieldElement.from_int(self.rank, other)
        elif not isinstance(other, FieldElement):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return zero(self.rank)
        den = dict(self.den)
        for f, m in other.den.items():
            den[f] = den.get(f, 0) + m
        return FieldElement._make(
            self.rank, self.unit * other.unit,
            tuple(a + b for a, b in zip(self.mono, other.mono)),
            self.num * other.num, den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero field element")
        num = GroupAlgebra.one(self.rank)
        for f, m in self.den.items():
            for _ in range(m):
                num = num * f
        den = {} if self.num.is_one() else {self.num: 1}
        return FieldElement._make(
            self.rank, 1 / self.unit, tuple(-x for x in self.mono), num, den)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        if other.is_zero():
            raise ZeroDivisionError("division by a semantic zero")
        return self * other.inverse()

    def __pow__(self, k: int) -> "FieldElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = one(self.rank)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if self is other:
            return True
        if (self.unit == other.unit and self.mono == other.mono
                and self.num == other.num and self.den == other.den):
            return True
        return (self - other).is_zero()

    __hash__ = None  # semantic equality is incompatible with hashing

    # -- structure ----------------------------------------------------------

    def numerator_ga(self) -> GroupAlgebra:
        """Integer numerator of the full fraction (may have Laurent exponents)."""
        return self.num.mul_term(self.unit.numerator, self.mono)

    def denominator_ga(self) -> GroupAlgebra:
        den = GroupAlgebra.one(self.rank) * self.unit.denominator
        for f, m in self.den.items():
            for _ in range(m):
                den = den * f
        return den

    def map_lattice(self, fn: Callable[[Exponent], Exponent]) -> "FieldElement":
        """Apply a linear lattice map to every exponential (t is fixed)."""
        if self.is_zero():
            return self
        num = self.num.map_lattice(fn)
        den = {f.map_lattice(fn): m for f, m in self.den.items()}
        mono = (self.mono[0], *fn(self.mono[1:]))
        return FieldElement._make(self.rank, self.unit, mono, num, den)

    def as_t_laurent(self) -> LaurentT | None:
        """The element as a Laurent polynomial in t, or None if not one."""
        if self.is_zero():
            return LaurentT.zero()
        if self.den or any(self.mono[1:]) or self.unit.denominator != 1:
            return None
        poly = self.num.as_laurent()
        if poly is None:
            return None
        return poly * int(self.unit) * LaurentT.term(self.mono[0])

    def evaluate(self, tval: Fraction, zvals: tuple[Fraction, ...]) -> Fraction:
        """Evaluate at numeric t and exponential values; raises on a pole."""
        denval = Fraction(1)
        for f, m in self.den.items():
            denval *= f.evaluate(tval, zvals) ** m
        if not denval:
            raise ZeroDivisionError("evaluation point lies on a pole")
        val = self.unit * self.num.evaluate(tval, zvals) / denval
        val *= tval ** self.mono[0]
        for z, k in zip(zvals, self.mono[1:]):
            if k:
                val *= z**k
        return val

    # -- serialization -------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"num": _ga_json(self.numerator_ga()),
                "den": _ga_json(self.denominator_ga())}

    @classmethod
    def from_json_obj(cls, rank: int, obj: dict) -> "FieldElement":
        num = _ga_from_json(rank, obj["num"])
        den = _ga_from_json(rank, obj["den"])
        return cls.from_ga(num) / cls.from_ga(den)

    def to_text(self) -> str:
        num = format_terms(self.numerator_ga().sorted_terms())
        den_ga = self.denominator_ga()
        if den_ga.is_one():
            return num
        return f"({num}) / ({format_terms(den_ga.sorted_terms())})"

    def __repr__(self) -> str:
        return self.to_text()


def _sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def _lcm_int(a: int, b: int) -> int:
    from math import gcd
    return a // gcd(a, b) * b


def _ga_json(ga: GroupAlgebra) -> list[dict]:
    groups: dict[Exponent, dict[int, int]] = {}
    for (te, *lat), c in ga.terms.items():
        groups.setdefault(tuple(lat), {})[te] = c
    out = []
    for lat in sorted(groups):
        lo, coeffs = LaurentT(groups[lat]).dense_pair()
        out.append({"exp": list(lat), "t": {"lo": lo, "coeffs": coeffs}})
    return out


def _ga_from_json(rank: int, items: list[dict]) -> GroupAlgebra:
    terms = []
    for item in items:
        lat = tuple(item["exp"])
        lo = item["t"]["lo"]
        for i, c in enumerate(item["t"]["coeffs"]):
            if c:
                terms.append(((lo + i, *lat), c))
    return GroupAlgebra.from_terms(rank, terms)


# -- constants and named constructors ----------------------------------------

_ZERO: dict[int, FieldElement] = {}
_ONE: dict[int, FieldElement] = {}


def zero(rank: int) -> FieldElement:
    fe = _ZERO.get(rank)
    if fe is None:
        fe = FieldElement(rank, Fraction(0), (0,) * (rank + 1),
                          GroupAlgebra.zero(rank), {})
        _ZERO[rank] = fe
    return fe


def one(rank: int) -> FieldElement:
    fe = _ONE.get(rank)
    if fe is None:
        fe = FieldElement(rank, Fraction(1), (0,) * (rank + 1),
                          GroupAlgebra.one(rank), {})
        _ONE[rank] = fe
    return fe


def from_int(rank: int, n: int) -> FieldElement:
    return FieldElement.from_int(rank, n)


def t_power(rank: int, k: int = 1) -> FieldElement:
    return FieldElement(rank, Fraction(1), (k,) + (0,) * rank,
                        GroupAlgebra.one(rank), {})


def exp_lattice(rank: int, lam: Exponent) -> FieldElement:
    """The exponential e^lam as a field element."""
    return FieldElement(rank, Fraction(1), (0, *lam), GroupAlgebra.one(rank), {})


def mu(rank: int) -> FieldElement:
    """mu = t + t^-1."""
    return t_power(rank, 1) + t_power(rank, -1)


def x_mult(rank: int, lam: Exponent) -> FieldElement:
    """Multiplicative first Chern class 1 - e^{-lam}."""
    lam = tuple(lam)
    if not any(lam):
        return zero(rank)
    neg = tuple(-x for x in lam)
    ga = GroupAlgebra.from_terms(rank, [((0,) * (rank + 1), 1), ((0, *neg), -1)])
    return FieldElement.from_ga(ga)


def x_hyp(rank: int, lam: Exponent) -> FieldElement:
    """Hyperbolic first Chern class (t^2+1)(1 - e^{-lam}) / (t^2 - e^{-lam}).

    This realizes the hyperbolic class inside the same fraction field: it is
    the preimage of 1 - e^{-lam} under the formal-group-law map
    g(x) = (1 - t^2) x / (x - (t^2 + 1)).
    """
    lam = tuple(lam)
    if not any(lam):
        return zero(rank)
    neg = tuple(-x for x in lam)
    zero_exp = (0,) * (rank + 1)
    num = GroupAlgebra.from_terms(
        rank, [((2, *((0,) * rank)), 1), (zero_exp, 1)])  # t^2 + 1
    num = num * GroupAlgebra.from_terms(rank, [(zero_exp, 1), ((0, *neg), -1)])
    den = GroupAlgebra.from_terms(rank, [((2, *((0,) * rank)), 1), ((0, *neg), -1)])
    return FieldElement.from_ga(num) / FieldElement.from_ga(den)


def chern(rank: int, lam: Exponent, theory: str) -> FieldElement:
    """First Chern class of e^lam in the requested theory ('m' or 'h')."""
    if theory == "m":
        return x_mult(rank, lam)
    if theory == "h":
        return x_hyp(rank, lam)
    raise ValueError(f"unknown theory {theory!r}")


def fgl_mult(x: FieldElement, y: FieldElement) -> FieldElement:
    """Multiplicative formal group law x + y - x*y."""
    return x + y - x * y


def fgl_hyp(x: FieldElement, y: FieldElement) -> FieldElement:
    """Hyperbolic formal group law (x + y - x*y) / (1 - mu^-2 x*y)."""
    rank = x.rank
    m = mu(rank)
    return (x + y - x * y) / (one(rank) - (x * y) / (m * m))


def fgl_map(x: FieldElement) -> FieldElement:
    """The map g(x) = (1 - t^2) x / (x - (t^2 + 1)) from F_hyp to F_mult."""
    rank = x.rank
    t2 = t_power(rank, 2)
    return (one(rank) - t2) * x / (x - t2 - one(rank))


def weyl_act(root_system, w, a: FieldElement) -> FieldElement:
    """Field automorphism e^lam -> e^{w lam} with t fixed."""
    return a.map_lattice(lambda v: root_system.act(w, v))


def x_parabolic(root_system, J: Iterable[int], theory: str) -> FieldElement:
    """x_J: the product of Chern classes of the negative roots inside J."""
    rank = root_system.rank
    out = one(rank)
    for alpha in root_system.positive_roots_of(J):
        out = out * chern(rank, tuple(-x for x in alpha), theory)
    return out


def x_full(root_system, theory: str) -> FieldElement:
    """x_Pi: the product over all negative roots."""
    return x_parabolic(root_system, range(1, root_system.rank + 1), theory)


def x_relative(root_system, J: Iterable[int], theory: str) -> FieldElement:
    """x_{Pi/J} = x_Pi / x_J."""
    return x_full(root_system, theory) / x_parabolic(root_system, J, theory)
