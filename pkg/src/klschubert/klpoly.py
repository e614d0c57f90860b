"""Kazhdan-Lusztig polynomials P_{u,v}(q) via the classical recursion.

For a right descent s of v the recursion is

    P_{u,v} = q^{1-c} P_{us,vs} + q^c P_{u,vs}
              - sum_z mu(z, vs) q^{(l(v)-l(z))/2} P_{u,z}

with c = 1 if us < u else 0, the sum over u <= z <= vs with zs < z, and
mu(z, w) the coefficient of q^{(l(w)-l(z)-1)/2} in P_{z,w}.  Results are
memoized per Weyl group; recomputation of a key is idempotent, so the cache
follows a write-once publication discipline.
"""

from __future__ import annotations

from . import field
from .field import FieldElement
from .weyl import Perm, WeylGroup


class KLPolynomial:
    """Dense integer polynomial in one variable q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "KLPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "KLPolynomial":
        return cls((1,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = KLPolynomial((other,))
        return isinstance(other, KLPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "KLPolynomial") -> "KLPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return KLPolynomial(tuple(self[k] + other[k] for k in range(n)))

    def __neg__(self) -> "KLPolynomial":
        return KLPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "KLPolynomial") -> "KLPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "KLPolynomial":
        if isinstance(other, int):
            return KLPolynomial(tuple(c * other for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return KLPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "KLPolynomial":
        """Multiply by q^k."""
        return KLPolynomial((0,) * k + self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                bits.append(str(c))
            else:
                head = "" if c == 1 else "-" if c == -1 else f"{c}*"
                bits.append(f"{head}q" + (f"^{k}" if k > 1 else ""))
        return " + ".join(bits).replace("+ -", "- ")


_TABLES: dict[int, dict[tuple[Perm, Perm], KLPolynomial]] = {}


def kl_polynomial(W: WeylGroup, u: Perm, v: Perm) -> KLPolynomial:
    """The Kazhdan-Lusztig polynomial P_{u,v}(q)."""
    table = _TABLES.setdefault(W.rank, {})
    return _kl(W, table, u, v)


def _kl(W, table, u, v) -> KLPolynomial:
    if u == v:
        return KLPolynomial.one()
    if not W.bruhat_leq(u, v):
        return KLPolynomial.zero()
    key = (u, v)
    out = table.get(key)
    if out is not None:
        return out
    s = min(W.right_descents(v))
    vs = W.rmul_s(v, s)
    us = W.rmul_s(u, s)
    c = 1 if W.length(us) < W.length(u) else 0
    out = _kl(W, table, us, vs).shift(1 - c) + _kl(W, table, u, vs).shift(c)
    lv = W.length(v)
    for z in W.bruhat_lower(vs):
        if W.length(W.rmul_s(z, s)) > W.length(z):
            continue
        if not W.bruhat_leq(u, z):
            continue
        m = mu_coefficient(W, z, vs)
        if m:
            out = out - (m * _kl(W, table, u, z)).shift((lv - W.length(z)) // 2)
    table[key] = out
    return out


def mu_coefficient(W: WeylGroup, z: Perm, w: Perm) -> int:
    """mu(z, w): top-degree coefficient of P_{z,w} when the bound is attained."""
    d = W.length(w) - W.length(z)
    if d <= 0 or d % 2 == 0:
        return 0
    return kl_polynomial(W, z, w)[(d - 1) // 2]


def substitute(P: KLPolynomial, arg: FieldElement) -> FieldElement:
    """Evaluate P at q = arg inside the field."""
    out = field.zero(arg.rank)
    power = field.one(arg.rank)
    for c in P.coeffs:
        if c:
            out = out + power * c
        power = power * arg
    return out


def substitute_t_power(rank: int, P: KLPolynomial, e: int) -> FieldElement:
    """Evaluate P at q = t^e (fast path used by the KL basis definitions)."""
    out = field.zero(rank)
    for k, c in enumerate(P.coeffs):
        if c:
            out = out + field.t_power(rank, e * k) * c
    return out


def verify_pdual(W: WeylGroup) -> tuple[bool, str]:
    """Check P_{u,v} = P_{u^-1,v^-1} and the inversion identity

        sum_v eps_u eps_v P_{v,w} P_{w0 v, w0 u} = delta_{w,u}

    over all pairs; returns (ok, first failing pair description).
    """
    for u in W.elements:
        ui = W.inverse(u)
        for v in W.elements:
            if kl_polynomial(W, u, v) != kl_polynomial(W, ui, W.inverse(v)):
                return False, f"P_{{u,v}} != P_{{u^-1,v^-1}} at u={u}, v={v}"
    w0 = W.w0
    for w in W.elements:
        for u in W.elements:
            total = KLPolynomial.zero()
            eu = W.sign(u)
            for v in W.elements:
                p1 = kl_polynomial(W, v, w)
                if p1.is_zero():
                    continue
                p2 = kl_polynomial(W, W.mult(w0, v), W.mult(w0, u))
                if p2.is_zero():
                    continue
                total = total + eu * W.sign(v) * p1 * p2
            expected = KLPolynomial.one() if w == u else KLPolynomial.zero()
            if total != expected:
                return False, f"inversion identity fails at w={w}, u={u}"
    return True, ""
