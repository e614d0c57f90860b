"""Hyperbolic cohomology layer: divided differences and KL-Schubert classes.

The hyperbolic theory is realized inside the same fraction field by the
embedded Chern classes `field.x_hyp`, under which the Hecke-to-Demazure
homomorphism psi fixes every scalar; psi on twisted elements is therefore a
re-tag.  Its content survives as operator identities (psi(tau) = mu Y - t,
the X/Y images of the KL generators) which the test suite checks exactly.

Conventions:
    X_i = (1/x_i)(d_{s_i} - 1),  Y_i = 1 + X_i,  X_i^2 = -X_i,
    C_w      = mu_w^-1 psi(gamma^-_w) o pt_e,
    Ctilde_u = mu_{u^-1 w0}^-1 psi(gamma^+_{u^-1 w0}) . pt_{w0},
    C^J_w    = mu_w^-1 Y^h_J . (psi(gamma^-_w) o pt_e),
    Ctilde^J_u = Ctilde_u.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import field
from .field import FieldElement
from .hecke import Hecke, TwistedElement
from .localization import (DualClass, PairingReport, act, is_wj_invariant,
                           point_class, pushforward, unit_class)
from .weyl import Perm, Word

VARIANTS = ("c", "ctilde", "cj", "ctildej", "dual")


def x_op(H: Hecke, i: int) -> TwistedElement:
    """Divided difference operator X_i in the hyperbolic twisted algebra."""
    inv = field.x_hyp(H.rank, H.rs.simple(i)).inverse()
    return H.from_terms({H.W.simple(i): inv, H.W.identity: -inv}, theory="h")


def y_op(H: Hecke, i: int) -> TwistedElement:
    """Push-pull operator Y_i = 1 + X_i."""
    return H.one("h") + x_op(H, i)


def op_word(H: Hecke, word: Word, kind: str = "X") -> TwistedElement:
    """Ordered product X_{i_1} ... X_{i_k} (or the Y version)."""
    make = x_op if kind == "X" else y_op
    out = H.one("h")
    for i in word:
        out = out * make(H, i)
    return out


def psi(z: TwistedElement) -> TwistedElement:
    """The algebra map from the multiplicative to the hyperbolic theory.

    Under the embedded Chern classes it fixes all scalars, so on elements it
    only changes the theory tag.
    """
    if z.theory != "m":
        raise ValueError("psi expects a multiplicative-theory element")
    return z.retag("h")


def mu_power(H: Hecke, k: int) -> FieldElement:
    return H.mu_power(k)


# -- KL-Schubert classes ------------------------------------------------------


@dataclass
class KLSchubertClass:
    """A localized KL-Schubert class together with its provenance."""

    cls: DualClass
    element: Perm
    variant: str
    J: tuple[int, ...] | None = None

    def restriction(self, w: Perm) -> FieldElement:
        return self.cls.restriction(w)


def kl_class(H: Hecke, w: Perm, variant: str,
             J: Iterable[int] | None = None) -> KLSchubertClass:
    """Build a KL-Schubert class; parabolic variants require w in W^J."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    W = H.W
    jt: tuple[int, ...] | None = None
    if variant in ("cj", "ctildej"):
        if J is None:
            raise ValueError(f"variant {variant!r} needs a parabolic subset J")
        jt = W.check_grassmannian(J)
        if w not in W.min_coset_reps(jt):
            raise ValueError(f"{w} is not a minimal coset representative for J={jt}")
    if variant == "c":
        out = act(psi(H.gamma(w, "-")), point_class(H, W.identity, "h"), "odot")
        out = H.mu_power(-W.length(w)) * out
    elif variant in ("ctilde", "ctildej"):
        v = W.mult(W.inverse(w), W.w0)
        out = act(psi(H.gamma(v, "+")), point_class(H, W.w0, "h"), "bullet")
        out = H.mu_power(-W.length(v)) * out
    elif variant == "cj":
        out = act(psi(H.gamma(w, "-")), point_class(H, W.identity, "h"), "odot")
        out = pushforward(H, out, jt, "to-parabolic")
        out = H.mu_power(-W.length(w)) * out
    else:  # dual basis element psi(gamma^-_w)*
        out = gamma_dual_class(H, w)
    return KLSchubertClass(out, w, variant, jt)


def gamma_dual_class(H: Hecke, u: Perm) -> DualClass:
    """The dual basis class psi(gamma^-_u)* = sum_v b_{v,u} f_v.

    The matrix (b_{w,v}) inverts (a_{w,v}) where psi(gamma^-_w) has delta
    expansion sum_v a_{w,v} d_v; the inversion is the cached Bruhat-triangular
    solve from the Hecke context.
    """
    table = H.delta_expansion_table("gamma-minus")
    coeffs = {v: table[v][u] for v in H.W.elements if u in table[v]}
    return DualClass(H.W, coeffs, "h")


def b_coefficients(H: Hecke, w: Perm, basis: str = "gamma-minus",
                   J: Iterable[int] | None = None) -> dict[Perm, FieldElement]:
    """Coefficients of d_w over {psi(gamma^-_u)} or {psi(gamma-hat^-_{I_u})}.

    Under the embedding these coincide with the multiplicative-theory
    coefficients, which is how the triangular solve computes them.
    """
    if basis not in ("gamma-minus", "gamma-hat-minus"):
        raise ValueError(f"unsupported basis {basis!r} for b-coefficients")
    return H.delta_expansion_table(basis, J)[w]


_XWORD_BASES: dict[tuple[int, tuple[int, ...]], dict[Perm, TwistedElement]] = {}


def x_word_basis(H: Hecke, J: Iterable[int]) -> dict[Perm, TwistedElement]:
    """The honest twisted-algebra elements X_{I_u} over J-compatible words."""
    key = (H.rank, H.W._jkey(J))
    out = _XWORD_BASES.get(key)
    if out is None:
        words = H.W.j_compatible_words(key[1])
        out = {u: op_word(H, words[u]) for u in H.W.elements}
        _XWORD_BASES[key] = out
    return out


def x_basis_coefficients(H: Hecke, w: Perm, J: Iterable[int]
                         ) -> dict[Perm, FieldElement]:
    """Triangular solve of d^h_w over the twisted X_{I_u} basis.

    This is the honest (twisted) counterpart of the root-polynomial expansion;
    the two must agree even though the root polynomial treats its coefficients
    as central.  It differs from the gamma-hat expansion by mu_u on the u-th
    coefficient, via psi(gamma-hat^-_{I_u}) = mu_u X_{I_u}.
    """
    return H.expand_over(H.delta(w, theory="h"), x_word_basis(H, J))


# -- duality checks -------------------------------------------------------------


def hyperbolic_duality_check(H: Hecke,
                             pairs: list[tuple[Perm, Perm]] | None = None
                             ) -> PairingReport:
    """Y^h_Pi . (C_w Ctilde_u) = delta_{w,u} 1 over the requested pairs."""
    W = H.W
    if pairs is None:
        pairs = [(w, u) for w in W.elements for u in W.elements]
    c_cache: dict[Perm, DualClass] = {}
    ct_cache: dict[Perm, DualClass] = {}
    one = field.one(H.rank)
    values = {}
    failures = []
    for w, u in pairs:
        if w not in c_cache:
            c_cache[w] = kl_class(H, w, "c").cls
        if u not in ct_cache:
            ct_cache[u] = kl_class(H, u, "ctilde").cls
        total = pushforward(H, c_cache[w] * ct_cache[u])
        val = total.constant_value()
        if val is None:
            failures.append(f"pairing at ({w},{u}) is not a multiple of the unit")
            continue
        values[(w, u)] = val
        want = one if w == u else field.zero(H.rank)
        if val != want:
            failures.append(f"pairing at ({w},{u}) = {val.to_text()}")
    return PairingReport(sorted({w for w, _ in pairs}), sorted({u for _, u in pairs}),
                         one, values, failures)


def dual_basis_pairing_check(H: Hecke,
                             pairs: list[tuple[Perm, Perm]] | None = None
                             ) -> tuple[bool, list[str]]:
    """Y^h_Pi . (C_w psi(gamma^-_u)*) = delta_{w,u} mu_w^-1 1."""
    W = H.W
    if pairs is None:
        pairs = [(w, u) for w in W.elements for u in W.elements]
    c_cache: dict[Perm, DualClass] = {}
    d_cache: dict[Perm, DualClass] = {}
    failures = []
    for w, u in pairs:
        if w not in c_cache:
            c_cache[w] = kl_class(H, w, "c").cls
        if u not in d_cache:
            d_cache[u] = gamma_dual_class(H, u)
        val = pushforward(H, c_cache[w] * d_cache[u]).constant_value()
        if val is None:
            failures.append(f"pairing at ({w},{u}) is not a multiple of the unit")
            continue
        want = H.mu_power(-W.length(w)) if w == u else field.zero(H.rank)
        if val != want:
            failures.append(f"dual-basis pairing at ({w},{u}) = {val.to_text()}")
    return not failures, failures


def dual_class_identity_check(H: Hecke, ws: list[Perm] | None = None
                              ) -> tuple[bool, list[str]]:
    """mu_w psi(gamma^-_w)* = Ctilde_w, element by element."""
    failures = []
    for w in (ws if ws is not None else H.W.elements):
        lhs = H.mu_power(H.W.length(w)) * gamma_dual_class(H, w)
        if lhs != kl_class(H, w, "ctilde").cls:
            failures.append(f"mu_w psi(gamma^-_w)* != Ctilde_w at w={w}")
    return not failures, failures


def grassmannian_duality_check(H: Hecke, J: Iterable[int],
                               pairs: list[tuple[Perm, Perm]] | None = None
                               ) -> PairingReport:
    """Y^h_{Pi/J} . (C^J_w Ctilde^J_u) = delta_{w,u} 1 over W^J x W^J."""
    jt = H.W.check_grassmannian(J)
    reps = H.W.min_coset_reps(jt)
    if pairs is None:
        pairs = [(w, u) for w in reps for u in reps]
    cj_cache: dict[Perm, DualClass] = {}
    ct_cache: dict[Perm, DualClass] = {}
    one = field.one(H.rank)
    values = {}
    failures = []
    for w, u in pairs:
        if w not in cj_cache:
            cj_cache[w] = kl_class(H, w, "cj", jt).cls
        if u not in ct_cache:
            ct_cache[u] = kl_class(H, u, "ctildej", jt).cls
        product = cj_cache[w] * ct_cache[u]
        val = pushforward(H, product, jt, "relative").constant_value()
        if val is None:
            failures.append(f"pairing at ({w},{u}) is not a multiple of the unit")
            continue
        values[(w, u)] = val
        want = one if w == u else field.zero(H.rank)
        if val != want:
            failures.append(f"Grassmannian pairing at ({w},{u}) = {val.to_text()}")
    return PairingReport(list(reps), list(reps), one, values, failures)


def wj_invariance_check(H: Hecke, J: Iterable[int]) -> tuple[bool, list[str]]:
    """Both parabolic class families are W_J-invariant."""
    jt = H.W.check_grassmannian(J)
    failures = []
    for u in H.W.min_coset_reps(jt):
        for variant in ("cj", "ctildej"):
            if not is_wj_invariant(H, kl_class(H, u, variant, jt).cls, jt):
                failures.append(f"{variant} class at u={u} is not W_J-invariant")
    return not failures, failures
