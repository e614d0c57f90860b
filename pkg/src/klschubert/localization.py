"""Localization model of equivariant K-theory and its hyperbolic analogue.

Classes live in the dual (Q_W)* with basis f_w (restriction at the fixed
point w), carry a componentwise product f_w f_v = delta_{w,v} f_w, and admit
two commuting actions of the twisted group algebra:

    a d_w . b f_v   = b (v w^-1)(a) f_{v w^-1}     (bullet)
    a d_w o b f_v   = a w(b) f_{w v}               (odot)

Pushforwards are modeled by acting with the push-pull elements Y_J.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable

from . import field
from .field import FieldElement, weyl_act
from .hecke import Hecke, TwistedElement
from .weyl import Perm, WeylGroup


class DualClass:
    """Total map W -> Q in the fixed-point basis; zero values not stored."""

    __slots__ = ("W", "theory", "coeffs")

    def __init__(self, W: WeylGroup, coeffs: dict[Perm, FieldElement], theory: str = "m"):
        self.W = W
        self.theory = theory
        self.coeffs = {w: c for w, c in coeffs.items() if not c.is_zero()}

    def restriction(self, w: Perm) -> FieldElement:
        """The coefficient at the fixed point w."""
        return self.coeffs.get(w, field.zero(self.W.rank))

    def support(self) -> list[Perm]:
        return sorted(self.coeffs, key=lambda p: (self.W.length(p), p))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "DualClass"):
        if self.W is not other.W or self.theory != other.theory:
            raise ValueError("mixed contexts or theories in dual arithmetic")

    def __add__(self, other: "DualClass") -> "DualClass":
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, field.zero(self.W.rank)) + c
        return DualClass(self.W, out, self.theory)

    def __neg__(self) -> "DualClass":
        return DualClass(self.W, {w: -c for w, c in self.coeffs.items()}, self.theory)

    def __sub__(self, other: "DualClass") -> "DualClass":
        return self + (-other)

    def __mul__(self, other) -> "DualClass":
        if isinstance(other, (FieldElement, int)):
            c = other if isinstance(other, FieldElement) else field.from_int(self.W.rank, other)
            return DualClass(self.W, {w: c * a for w, a in self.coeffs.items()},
                             self.theory)
        self._check(other)
        out = {}
        for w, a in self.coeffs.items():
            b = other.coeffs.get(w)
            if b is not None:
                out[w] = a * b
        return DualClass(self.W, out, self.theory)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, DualClass):
            return NotImplemented
        if self.W is not other.W or self.theory != other.theory:
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.restriction(w) == other.restriction(w) for w in keys)

    __hash__ = None

    def constant_value(self) -> FieldElement | None:
        """The common coefficient if the class is a multiple of the unit."""
        if not self.coeffs:
            return field.zero(self.W.rank)
        if len(self.coeffs) < len(self.W.elements):
            return None
        vals = iter(self.coeffs.values())
        first = next(vals)
        return first if all(v == first for v in vals) else None

    def __repr__(self) -> str:
        bits = [f"f[{','.join(map(str, w))}]: {self.restriction(w).to_text()}"
                for w in self.support()]
        return "{" + "; ".join(bits) + "}"


def unit_class(W: WeylGroup, theory: str = "m") -> DualClass:
    one = field.one(W.rank)
    return DualClass(W, {w: one for w in W.elements}, theory)


def point_class(H: Hecke, w: Perm, theory: str = "m") -> DualClass:
    """pt_w = d_w . pt_e, supported at w with coefficient w(x_Pi)."""
    val = weyl_act(H.rs, w, H.x_pi(theory))
    return DualClass(H.W, {w: val}, theory)


def act(z: TwistedElement, f: DualClass, mode: str) -> DualClass:
    """Apply a twisted-algebra element to a dual class ('bullet' or 'odot')."""
    if z.W is not f.W or z.theory != f.theory:
        raise ValueError("action requires matching context and theory")
    W = z.W
    rs = W.root_system
    zero = field.zero(W.rank)
    out: dict[Perm, FieldElement] = {}
    if mode == "bullet":
        for w, a in z.terms.items():
            wi = W.inverse(w)
            for v, b in f.coeffs.items():
                x = W.mult(v, wi)
                out[x] = out.get(x, zero) + b * weyl_act(rs, x, a)
    elif mode == "odot":
        for w, a in z.terms.items():
            for v, b in f.coeffs.items():
                x = W.mult(w, v)
                out[x] = out.get(x, zero) + a * weyl_act(rs, w, b)
    else:
        raise ValueError(f"unknown action mode {mode!r}")
    return DualClass(W, out, f.theory)


def is_wj_invariant(H: Hecke, f: DualClass, J: Iterable[int]) -> bool:
    """delta_w . f = f for all w in W_J (checked on the simple generators)."""
    for j in H.W._jkey(J):
        if act(H.delta(H.W.simple(j), theory=f.theory), f, "bullet") != f:
            return False
    return True


def pushforward(H: Hecke, f: DualClass, J: Iterable[int] | None = None,
                mode: str = "to-point") -> DualClass:
    """Y_J . f (to-parabolic), Y_Pi . f (to-point), or Y_{Pi/J} . f (relative).

    Relative mode requires a W_J-invariant input, matching its geometric
    meaning as a pushforward from the parabolic quotient.
    """
    if mode == "to-point":
        return act(H.y_pi(f.theory), f, "bullet")
    if J is None:
        raise ValueError(f"mode {mode!r} needs a parabolic subset J")
    if mode == "to-parabolic":
        return act(H.push_pull(J, "full", f.theory), f, "bullet")
    if mode == "relative":
        if not is_wj_invariant(H, f, J):
            raise ValueError("relative pushforward requires a W_J-invariant class")
        return act(H.push_pull(J, "relative", f.theory), f, "bullet")
    raise ValueError(f"unknown pushforward mode {mode!r}")


def invariant_basis(H: Hecke, J: Iterable[int], theory: str = "m"
                    ) -> dict[Perm, DualClass]:
    """The classes g_u = sum_{v in W_J} f_{uv}, u in W^J, spanning invariants."""
    jt = H.W._jkey(J)
    one = field.one(H.rank)
    out = {}
    for u in H.W.min_coset_reps(jt):
        out[u] = DualClass(H.W, {
            H.W.mult(u, v): one for v in H.W.subgroup_elements(jt)}, theory)
    return out


def invariant_span_coefficients(H: Hecke, f: DualClass, J: Iterable[int]
                                ) -> dict[Perm, FieldElement] | None:
    """Coefficients of f over the g_u basis, or None if f is outside the span.

    The system is exactly solvable coset by coset: f lies in the span iff its
    restrictions are constant along each coset u W_J.
    """
    jt = H.W._jkey(J)
    out = {}
    for u in H.W.min_coset_reps(jt):
        c = f.restriction(u)
        for v in H.W.subgroup_elements(jt):
            if f.restriction(H.W.mult(u, v)) != c:
                return None
        if not c.is_zero():
            out[u] = c
    return out


# -- duality and identity reports ----------------------------------------------


@dataclass
class PairingReport:
    """Outcome of a Poincare-type pairing computation over a set of pairs."""

    rows: list[Perm]
    cols: list[Perm]
    expected: FieldElement
    values: dict[tuple[Perm, Perm], FieldElement]
    failures: list[str] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def k_duality_check(H: Hecke, J: Iterable[int] | None = None,
                    pairs: list[tuple[Perm, Perm]] | None = None) -> PairingReport:
    """Pairing of the two K-theory KL class families.

    With J=None this checks, for pairs (w, v),

        Y_Pi . ((gamma^-_w o pt_e) (gamma^+_{v^-1 w0} . pt_{w0}))
            = delta_{w,v} prod_{a>0}(t - t^-1 e^-a) 1.

    With J it checks the parabolic variant over W^J with Y_J and Y_{Pi/J}.
    """
    W = H.W
    expected = H.kdual_scalar()
    pt_e = point_class(H, W.identity)
    pt_w0 = point_class(H, W.w0)
    if J is None:
        row_set = col_set = W.elements
    else:
        row_set = col_set = W.min_coset_reps(J)
    if pairs is None:
        pairs = [(w, v) for w in row_set for v in col_set]
    minus_cache: dict[Perm, DualClass] = {}
    plus_cache: dict[Perm, DualClass] = {}
    values = {}
    failures = []
    for w, v in pairs:
        if w not in minus_cache:
            cls = act(H.gamma(w, "-"), pt_e, "odot")
            if J is not None:
                cls = pushforward(H, cls, J, "to-parabolic")
            minus_cache[w] = cls
        if v not in plus_cache:
            plus_cache[v] = act(
                H.gamma(W.mult(W.inverse(v), W.w0), "+"), pt_w0, "bullet")
        product = minus_cache[w] * plus_cache[v]
        if J is None:
            total = pushforward(H, product, None, "to-point")
        else:
            total = act(H.push_pull(J, "relative"), product, "bullet")
        val = total.constant_value()
        if val is None:
            failures.append(f"pairing at ({w},{v}) is not a multiple of the unit")
            continue
        values[(w, v)] = val
        want = expected if w == v else field.zero(H.rank)
        if val != want:
            failures.append(f"pairing at ({w},{v}) = {val.to_text()}, expected "
                            f"{'the duality scalar' if w == v else '0'}")
    return PairingReport(list(row_set), list(col_set), expected, values, failures)


def verify_inv_identities(H: Hecke, zs: list[TwistedElement],
                          fgs: list[tuple[DualClass, DualClass]]
                          ) -> tuple[bool, list[str]]:
    """Check z . pt_e = iota(z) o pt_e, the adjunction under Y_Pi, and that
    Y_J o pt_e = Y_J . pt_e for every parabolic subset J."""
    W = H.W
    pt_e = point_class(H, W.identity)
    failures = []
    for k, z in enumerate(zs):
        if act(z, pt_e, "bullet") != act(H.iota(z), pt_e, "odot"):
            failures.append(f"z . pt_e != iota(z) o pt_e for sample z #{k}")
    for k, z in enumerate(zs):
        for f, g in fgs:
            lhs = pushforward(H, act(z, f, "bullet") * g)
            rhs = pushforward(H, f * act(H.iota(z), g, "bullet"))
            if lhs != rhs:
                failures.append(f"Y_Pi adjunction fails for sample z #{k}")
                break
    import itertools as _it
    for r in range(1, W.rank + 1):
        for jt in _it.combinations(range(1, W.rank + 1), r):
            yj = H.push_pull(jt, "full")
            if act(yj, pt_e, "odot") != act(yj, pt_e, "bullet"):
                failures.append(f"Y_J o pt_e != Y_J . pt_e at J={jt}")
    return not failures, failures
