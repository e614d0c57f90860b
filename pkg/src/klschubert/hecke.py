"""The twisted group algebra Q_W and its Hecke subalgebra.

Elements are finite maps w -> coefficient in the delta basis, with the
twisted product (a d_w)(b d_v) = a w(b) d_{wv}.  On top of that sit the
Demazure-Lusztig generators tau_i, both Kazhdan-Lusztig bases gamma^+/-,
their word-wise products gamma-hat, the push-pull elements Y_J, the two
involutions, basis expansions, and the Temperley-Lieb projection.

A `Hecke` instance owns all per-rank caches; entries are computed once and
then only read, so instances can be shared between threads after warm-up.
"""

from __future__ import annotations

from typing import Iterable

from . import field
from .field import FieldElement, weyl_act
from .groupalgebra import GroupAlgebra, LaurentT
from .klpoly import kl_polynomial, substitute_t_power
from .weyl import Perm, WeylGroup, Word, weyl_group

BASIS_TAGS = ("delta", "tau", "gamma-minus", "gamma-plus", "gamma-hat-minus")


class NotInHeckeError(ValueError):
    """Raised when an operation needs a Hecke-subalgebra element and gets none."""


class TwistedElement:
    """An element of Q_W: sparse map from group elements to field coefficients."""

    __slots__ = ("W", "theory", "terms")

    def __init__(self, W: WeylGroup, terms: dict[Perm, FieldElement], theory: str = "m"):
        self.W = W
        self.theory = theory
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    def coefficient(self, w: Perm) -> FieldElement:
        return self.terms.get(w, field.zero(self.W.rank))

    def support(self) -> list[Perm]:
        return sorted(self.terms, key=lambda p: (self.W.length(p), p))

    def is_zero(self) -> bool:
        return not self.terms

    def retag(self, theory: str) -> "TwistedElement":
        return TwistedElement(self.W, self.terms, theory)

    def _check(self, other: "TwistedElement"):
        if self.W is not other.W or self.theory != other.theory:
            raise ValueError("mixed contexts or theories in twisted arithmetic")

    def __add__(self, other: "TwistedElement") -> "TwistedElement":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, field.zero(self.W.rank)) + c
        return TwistedElement(self.W, out, self.theory)

    def __neg__(self) -> "TwistedElement":
        return TwistedElement(self.W, {w: -c for w, c in self.terms.items()}, self.theory)

    def __sub__(self, other: "TwistedElement") -> "TwistedElement":
        return self + (-other)

    def __mul__(self, other) -> "TwistedElement":
        if isinstance(other, (FieldElement, int)):
            # right multiplication by a scalar twists it past each delta
            c = _as_field(self.W.rank, other)
            rs = self.W.root_system
            return TwistedElement(self.W, {
                w: a * weyl_act(rs, w, c) for w, a in self.terms.items()}, self.theory)
        self._check(other)
        W = self.W
        rs = W.root_system
        out: dict[Perm, FieldElement] = {}
        zero = field.zero(W.rank)
        for w, a in self.terms.items():
            for v, b in other.terms.items():
                key = W.mult(w, v)
                out[key] = out.get(key, zero) + a * weyl_act(rs, w, b)
        return TwistedElement(W, out, self.theory)

    def __rmul__(self, other) -> "TwistedElement":
        # left multiplication by a scalar is plain rescaling
        c = _as_field(self.W.rank, other)
        return TwistedElement(self.W, {w: c * a for w, a in self.terms.items()},
                              self.theory)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwistedElement):
            return NotImplemented
        if self.W is not other.W or self.theory != other.theory:
            return False
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(w) == other.coefficient(w) for w in keys)

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = [f"({self.terms[w].to_text()}) d[{','.join(map(str, w))}]"
                for w in self.support()]
        return " + ".join(bits)


def _as_field(rank: int, c) -> FieldElement:
    if isinstance(c, FieldElement):
        return c
    if isinstance(c, int):
        return FieldElement.from_int(rank, c)
    return FieldElement.from_fraction(rank, c)


def _from_laurent(rank: int, poly: LaurentT) -> FieldElement:
    ga = GroupAlgebra.from_terms(
        rank, [((e, *((0,) * rank)), c) for e, c in poly.coeffs.items()])
    return FieldElement.from_ga(ga)


class Hecke:
    """Per-rank context for twisted-algebra computations."""

    def __init__(self, W: WeylGroup):
        self.W = W
        self.rank = W.rank
        self.rs = W.root_system
        self._tau: dict[int, TwistedElement] = {}
        self._tau_of: dict[Perm, TwistedElement] = {W.identity: self.one()}
        self._gamma: dict[tuple[Perm, str], TwistedElement] = {}
        self._x: dict[tuple, FieldElement] = {}
        self._basis: dict[tuple, dict[Perm, TwistedElement]] = {}
        self._tables: dict[tuple, dict[Perm, dict[Perm, FieldElement]]] = {}
        self._a_w0: FieldElement | None = None
        self._kdual: FieldElement | None = None

    # -- building blocks -------------------------------------------------------

    def zero_elem(self, theory: str = "m") -> TwistedElement:
        return TwistedElement(self.W, {}, theory)

    def one(self, theory: str = "m") -> TwistedElement:
        return self.delta(self.W.identity, theory=theory)

    def delta(self, w: Perm | None = None, coeff=1, theory: str = "m") -> TwistedElement:
        w = w if w is not None else self.W.identity
        return TwistedElement(self.W, {w: _as_field(self.rank, coeff)}, theory)

    def from_terms(self, terms: dict[Perm, FieldElement], theory: str = "m") -> TwistedElement:
        return TwistedElement(self.W, terms, theory)

    def mu_power(self, k: int) -> FieldElement:
        return field.mu(self.rank) ** k

    def tau(self, i: int) -> TwistedElement:
        """Demazure-Lusztig generator for the simple root alpha_i."""
        out = self._tau.get(i)
        if out is None:
            alpha = self.rs.simple(i)
            x = field.x_mult(self.rank, alpha)
            a = (field.t_power(self.rank, -1) - field.t_power(self.rank, 1)) / x
            b = (field.t_power(self.rank, 1)
                 - field.t_power(self.rank, -1) * field.exp_lattice(
                     self.rank, tuple(-c for c in alpha))) / x
            out = TwistedElement(self.W, {self.W.identity: a, self.W.simple(i): b})
            self._tau[i] = out
        return out

    def tau_of(self, w: Perm) -> TwistedElement:
        """tau_w along the canonical reduced word (braid relations hold)."""
        out = self._tau_of.get(w)
        if out is None:
            i = self.W.canonical_word(w)[0]
            out = self.tau(i) * self.tau_of(self.W.lmul_s(i, w))
            self._tau_of[w] = out
        return out

    def tau_word(self, word: Word) -> TwistedElement:
        out = self.one()
        for i in word:
            out = out * self.tau(i)
        return out

    # -- Kazhdan-Lusztig bases ---------------------------------------------------

    def gamma(self, v: Perm, sign: str) -> TwistedElement:
        """KL basis element gamma^+_v or gamma^-_v.

        gamma^+_v = sum_{w<=v} t^{l(v)-l(w)} P_{w,v}(t^-2) tau_w
        gamma^-_v = sum_{w<=v} (-1)^{l(w)+l(v)} t^{l(w)-l(v)} P_{w,v}(t^2) tau_w
        """
        if sign not in ("+", "-"):
            raise ValueError(f"sign must be '+' or '-', got {sign!r}")
        key = (v, sign)
        out = self._gamma.get(key)
        if out is None:
            W = self.W
            lv = W.length(v)
            total = self.zero_elem()
            for w in W.bruhat_lower(v):
                P = kl_polynomial(W, w, v)
                lw = W.length(w)
                if sign == "+":
                    c = field.t_power(self.rank, lv - lw) * substitute_t_power(
                        self.rank, P, -2)
                else:
                    c = (W.sign(w) * W.sign(v)) * field.t_power(
                        self.rank, lw - lv) * substitute_t_power(self.rank, P, 2)
                total = total + c * self.tau_of(w)
            self._gamma[key] = total
            out = total
        return out

    def gamma_simple(self, i: int, sign: str) -> TwistedElement:
        return self.gamma(self.W.simple(i), sign)

    def gamma_hat(self, word: Word, sign: str) -> TwistedElement:
        """Word-wise product of simple KL basis elements (word must be reduced)."""
        if not self.W.is_reduced(tuple(word)):
            raise ValueError(f"word {word} is not reduced")
        out = self.one()
        for i in word:
            out = out * self.gamma_simple(i, sign)
        return out

    def a_w0(self) -> FieldElement:
        """Leading coefficient prod_{a>0} (t - t^-1 e^-a)/(1 - e^-a)."""
        if self._a_w0 is None:
            out = field.one(self.rank)
            for alpha in self.rs.positive_roots:
                neg = tuple(-c for c in alpha)
                num = (field.t_power(self.rank, 1)
                       - field.t_power(self.rank, -1) * field.exp_lattice(self.rank, neg))
                out = out * num / field.x_mult(self.rank, alpha)
            self._a_w0 = out
        return self._a_w0

    def kdual_scalar(self) -> FieldElement:
        """The duality pairing value prod_{a>0} (t - t^-1 e^-a)."""
        if self._kdual is None:
            out = field.one(self.rank)
            for alpha in self.rs.positive_roots:
                neg = tuple(-c for c in alpha)
                out = out * (field.t_power(self.rank, 1)
                             - field.t_power(self.rank, -1)
                             * field.exp_lattice(self.rank, neg))
            self._kdual = out
        return self._kdual

    # -- x products and push-pull elements ------------------------------------------

    def x_j(self, J: Iterable[int], theory: str = "m") -> FieldElement:
        key = ("J", self.W._jkey(J), theory)
        if key not in self._x:
            self._x[key] = field.x_parabolic(self.rs, J, theory)
        return self._x[key]

    def x_pi(self, theory: str = "m") -> FieldElement:
        return self.x_j(range(1, self.rank + 1), theory)

    def x_rel(self, J: Iterable[int], theory: str = "m") -> FieldElement:
        key = ("rel", self.W._jkey(J), theory)
        if key not in self._x:
            self._x[key] = self.x_pi(theory) / self.x_j(J, theory)
        return self._x[key]

    def push_pull(self, J: Iterable[int], mode: str = "full", theory: str = "m",
                  reps: list[Perm] | None = None) -> TwistedElement:
        """Y_J (mode 'full') or Y_{Pi/J} (mode 'relative', default reps W^J)."""
        jt = self.W._jkey(J)
        if mode == "full":
            members = self.W.subgroup_elements(jt)
            x = self.x_j(jt, theory)
        elif mode == "relative":
            members = reps if reps is not None else self.W.min_coset_reps(jt)
            x = self.x_rel(jt, theory)
        else:
            raise ValueError(f"unknown push-pull mode {mode!r}")
        inv = x.inverse()
        return TwistedElement(self.W, {
            w: weyl_act(self.rs, w, inv) for w in members}, theory)

    def y_pi(self, theory: str = "m") -> TwistedElement:
        return self.push_pull(range(1, self.rank + 1), "full", theory)

    # -- involutions ----------------------------------------------------------------

    def iota(self, z: TwistedElement, theory: str | None = None) -> TwistedElement:
        """The anti-involution p d_w -> d_{w^-1} p w(x_Pi)/x_Pi."""
        theory = theory or z.theory
        xp = self.x_pi(theory)
        W, rs = self.W, self.rs
        out = {}
        for w, p in z.terms.items():
            wi = W.inverse(w)
            out[wi] = weyl_act(rs, wi, p * weyl_act(rs, w, xp) / xp)
        return TwistedElement(W, out, z.theory)

    def tau_coefficients(self, z: TwistedElement) -> dict[Perm, LaurentT]:
        """Expansion of a Hecke-subalgebra element over the tau basis.

        Raises NotInHeckeError when some coefficient fails to lie in Z[t, t^-1].
        """
        out = {}
        for w, c in self.expand(z, "tau").items():
            poly = c.as_t_laurent()
            if poly is None:
                raise NotInHeckeError(
                    f"tau coefficient at {w} is not a Laurent polynomial in t: {c}")
            if poly:
                out[w] = poly
        return out

    def anti_involution(self, z: TwistedElement) -> TwistedElement:
        """tau_w -> tau_{w^-1} with t fixed, on the Hecke subalgebra."""
        coeffs = self.tau_coefficients(z)
        out = self.zero_elem(z.theory)
        for w, poly in coeffs.items():
            out = out + _from_laurent(self.rank, poly) * self.tau_of(
                self.W.inverse(w)).retag(z.theory)
        return out

    # -- basis expansions --------------------------------------------------------------

    def basis_elements(self, basis: str, J: Iterable[int] | None = None
                       ) -> dict[Perm, TwistedElement]:
        if basis not in BASIS_TAGS:
            raise ValueError(f"unknown basis {basis!r}")
        jt = self.W._jkey(J) if J is not None else None
        if basis == "gamma-hat-minus" and jt is None:
            raise ValueError("gamma-hat basis needs a parabolic subset J")
        key = (basis, jt)
        out = self._basis.get(key)
        if out is None:
            W = self.W
            if basis == "delta":
                out = {w: self.delta(w) for w in W.elements}
            elif basis == "tau":
                out = {w: self.tau_of(w) for w in W.elements}
            elif basis == "gamma-minus":
                out = {w: self.gamma(w, "-") for w in W.elements}
            elif basis == "gamma-plus":
                out = {w: self.gamma(w, "+") for w in W.elements}
            else:
                words = W.j_compatible_words(jt)
                out = {w: self.gamma_hat(words[w], "-") for w in W.elements}
            self._basis[key] = out
        return out

    def expand(self, z: TwistedElement, basis: str,
               J: Iterable[int] | None = None) -> dict[Perm, FieldElement]:
        """Exact coefficients of z over the chosen basis (triangular peeling)."""
        if basis == "delta":
            return dict(z.terms)
        return self.expand_over(z, self.basis_elements(basis, J))

    def expand_over(self, z: TwistedElement, els: dict[Perm, TwistedElement]
                    ) -> dict[Perm, FieldElement]:
        """Peel z over any family with Bruhat-triangular delta support."""
        W = self.W
        zero = field.zero(self.rank)
        rem = dict(z.terms)
        coeffs: dict[Perm, FieldElement] = {}
        while rem:
            w = max(rem, key=lambda p: (W.length(p), p))
            g = els[w]
            c = rem.pop(w) / g.terms[w]
            coeffs[w] = c
            for v, a in g.terms.items():
                if v == w:
                    continue
                newv = rem.get(v, zero) - c * a
                if newv.is_zero():
                    rem.pop(v, None)
                else:
                    rem[v] = newv
        return coeffs

    def recombine(self, coeffs: dict[Perm, FieldElement], basis: str,
                  J: Iterable[int] | None = None,
                  theory: str = "m") -> TwistedElement:
        els = self.basis_elements(basis, J)
        out = self.zero_elem(theory)
        for w, c in coeffs.items():
            out = out + c * els[w].retag(theory)
        return out

    def delta_expansion_table(self, basis: str, J: Iterable[int] | None = None
                              ) -> dict[Perm, dict[Perm, FieldElement]]:
        """For every w the expansion of d_w over the basis; cached."""
        jt = self.W._jkey(J) if J is not None else None
        key = (basis, jt)
        out = self._tables.get(key)
        if out is None:
            out = {w: self.expand(self.delta(w), basis, J) for w in self.W.elements}
            self._tables[key] = out
        return out

    # -- Temperley-Lieb projection -------------------------------------------------------

    def tl_project(self, z: TwistedElement) -> dict[Perm, FieldElement]:
        """Image in the Temperley-Lieb quotient, as surviving gamma^- coefficients.

        The two-sided ideal being quotiented is spanned by gamma^-_w for w not
        fully commutative, so the image is the gamma^- expansion restricted to
        fully commutative indices.  Requires z in the Hecke subalgebra.
        """
        coeffs = self.expand(z, "gamma-minus")
        for w, c in coeffs.items():
            if c.as_t_laurent() is None:
                raise NotInHeckeError(
                    f"gamma^- coefficient at {w} is not a Laurent polynomial in t")
        fc = self.W.fully_commutative()
        return {w: c for w, c in coeffs.items() if w in fc and not c.is_zero()}

    def grassmannian_annihilation(self, J: Iterable[int]) -> tuple[bool, list[str]]:
        """Check gamma^-_w gamma^+_{w_J} = 0 off W_c and the W^J collapse.

        Returns (ok, failures); failures name the first offending elements.
        """
        jt = self.W.check_grassmannian(J)
        g_plus = self.gamma(self.W.longest_in(jt), "+")
        failures = []
        fc = self.W.fully_commutative()
        for w in self.W.elements:
            if w in fc:
                continue
            if not (self.gamma(w, "-") * g_plus).is_zero():
                failures.append(f"gamma^-_{w} gamma^+_wJ != 0")
                break
        words = self.W.j_compatible_words(jt)
        for u in self.W.min_coset_reps(jt):
            lhs = self.gamma(u, "-") * g_plus
            rhs = self.gamma_hat(words[u], "-") * g_plus
            if lhs != rhs:
                failures.append(f"gamma^-_u gamma^+_wJ != gamma-hat collapse at u={u}")
                break
        return not failures, failures

    # -- linear solvers -------------------------------------------------------------------

    def solve_right_factor(self, y: TwistedElement, g: TwistedElement
                           ) -> TwistedElement | None:
        """Some z with z g = y, or None.  Right multiplication by g is linear
        over the field in the left (delta-basis) coefficients of z."""
        W, rs = self.W, self.rs
        order = W.elements
        pos = W.index
        m = len(order)
        zero = field.zero(self.rank)
        matrix = [[zero] * m for _ in range(m)]
        for j, w in enumerate(order):
            for v, b in g.terms.items():
                matrix[pos[W.mult(w, v)]][j] = weyl_act(rs, w, b)
        rhs = [y.coefficient(x) for x in order]
        sol = _solve_linear(self.rank, matrix, rhs)
        if sol is None:
            return None
        return TwistedElement(W, dict(zip(order, sol)), y.theory)

    def solve_left_factor(self, y: TwistedElement, g: TwistedElement
                          ) -> TwistedElement | None:
        """Some z with g z = y, or None.  Uses right-coefficient coordinates
        (a d_w = d_w w^-1(a)), in which left multiplication by g is linear."""
        W, rs = self.W, self.rs
        order = W.elements
        pos = W.index
        m = len(order)
        zero = field.zero(self.rank)
        matrix = [[zero] * m for _ in range(m)]
        for v, b in g.terms.items():
            for j, w in enumerate(order):
                x = W.mult(v, w)
                matrix[pos[x]][j] = weyl_act(rs, W.inverse(x), b)
        rhs = [weyl_act(rs, W.inverse(x), y.coefficient(x)) for x in order]
        sol = _solve_linear(self.rank, matrix, rhs)
        if sol is None:
            return None
        return TwistedElement(W, {
            w: weyl_act(rs, w, c) for w, c in zip(order, sol)}, y.theory)


def _solve_linear(rank: int, matrix: list[list[FieldElement]],
                  rhs: list[FieldElement]) -> list[FieldElement] | None:
    """Gaussian elimination over the field; one solution or None."""
    m = len(matrix)
    ncols = len(matrix[0]) if m else 0
    rows = [row[:] + [b] for row, b in zip(matrix, rhs)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, m) if not rows[i][col].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        for i in range(m):
            if i != r and not rows[i][col].is_zero():
                factor = rows[i][col] / pv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append((r, col))
        r += 1
    for i in range(r, m):
        if not rows[i][ncols].is_zero():
            return None
    sol = [field.zero(rank)] * ncols
    for row, col in pivots:
        sol[col] = rows[row][ncols] / rows[row][col]
    return sol


_HECKE: dict[int, Hecke] = {}


def hecke(rank: int) -> Hecke:
    """Shared per-rank Hecke context."""
    ctx = _HECKE.get(rank)
    if ctx is None:
        ctx = Hecke(weyl_group(rank))
        _HECKE[rank] = ctx
    return ctx
