"""Root polynomials and the restriction formula for opposite KL classes.

Works in the free module over the field with basis X_{I_v}, v in W, indexed
by a fixed J-compatible choice of reduced words; coefficients are treated as
central scalars.  Arbitrary X-words are rewritten into this basis using

    X_i X_i = -X_i
    X_j X_i X_j = X_i X_j X_i + mu^-2 (X_j - X_i)   for |i - j| = 1
    X_i X_j = X_j X_i                               for |i - j| > 1.

Equal adjacent letters are removed leftmost-first; otherwise a breadth-first
search over commutation and braid moves drives the word to the chosen basis
word (when reduced) or to a word with an equal adjacent pair (when not).
Braid moves emit mu^-2 corrections of strictly smaller length, so the
recursion terminates; results are memoized per word.

The coefficient of X_{I_u} in the root polynomial of I_w equals the
basis-change coefficient of d_w over {psi(gamma-hat^-_{I_u})}, and
mu^{l(u)} times it is the fixed-point restriction of the opposite
KL-Schubert class for the Grassmannian of J.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from . import field
from .field import FieldElement
from .hecke import Hecke
from .weyl import Perm, Word


class FreeDemazureElement:
    """Finite combination of basis words X_{I_v} with central coefficients."""

    __slots__ = ("module", "coeffs")

    def __init__(self, module: "FreeDemazureModule", coeffs: dict[Perm, FieldElement]):
        self.module = module
        self.coeffs = {v: c for v, c in coeffs.items() if not c.is_zero()}

    def coefficient(self, v: Perm) -> FieldElement:
        return self.coeffs.get(v, field.zero(self.module.rank))

    def __add__(self, other: "FreeDemazureElement") -> "FreeDemazureElement":
        out = dict(self.coeffs)
        for v, c in other.coeffs.items():
            out[v] = out.get(v, field.zero(self.module.rank)) + c
        return FreeDemazureElement(self.module, out)

    def __sub__(self, other: "FreeDemazureElement") -> "FreeDemazureElement":
        return self + (-1) * other

    def __mul__(self, other) -> "FreeDemazureElement":
        if isinstance(other, (FieldElement, int)):
            c = other if isinstance(other, FieldElement) else field.from_int(
                self.module.rank, other)
            return FreeDemazureElement(self.module, {
                v: c * a for v, a in self.coeffs.items()})
        mod = self.module
        out: dict[Perm, FieldElement] = {}
        zero = field.zero(mod.rank)
        for v, c in self.coeffs.items():
            for u, d in other.coeffs.items():
                cd = c * d
                for x, e in mod.expand_word(mod.words[v] + mod.words[u]).items():
                    out[x] = out.get(x, zero) + cd * e
        return FreeDemazureElement(mod, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeDemazureElement):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coefficient(v) == other.coefficient(v) for v in keys)

    __hash__ = None

    def __repr__(self) -> str:
        bits = [f"({self.coeffs[v].to_text()}) X[{','.join(map(str, self.module.words[v]))}]"
                for v in sorted(self.coeffs, key=lambda p: (self.module.W.length(p), p))]
        return " + ".join(bits) if bits else "0"


class FreeDemazureModule:
    """Rewriting context for one choice of J-compatible basis words."""

    def __init__(self, H: Hecke, J: Iterable[int]):
        self.H = H
        self.W = H.W
        self.rank = H.rank
        self.jt = self.W._jkey(J)
        self.words = self.W.j_compatible_words(self.jt)
        self._memo: dict[Word, dict[Perm, FieldElement]] = {}
        self._mu_inv_sq = H.mu_power(-2)

    def one(self) -> FreeDemazureElement:
        return FreeDemazureElement(self, {self.W.identity: field.one(self.rank)})

    def element(self, coeffs: dict[Perm, FieldElement]) -> FreeDemazureElement:
        return FreeDemazureElement(self, coeffs)

    # -- rewriting ---------------------------------------------------------

    def expand_word(self, word: Word) -> dict[Perm, FieldElement]:
        """Coefficients of an arbitrary X-word over the chosen basis.

        Returned dicts are shared cache entries; callers must not mutate them.
        """
        word = tuple(word)
        out = self._memo.get(word)
        if out is None:
            out = self._expand(word)
            self._memo[word] = out
        return out

    def _expand(self, word: Word) -> dict[Perm, FieldElement]:
        W = self.W
        if not word:
            return {W.identity: field.one(self.rank)}
        for k in range(len(word) - 1):
            if word[k] == word[k + 1]:
                return {v: -c for v, c in
                        self.expand_word(word[:k] + word[k + 1:]).items()}
        v = W.word_to_perm(word)
        reduced = W.length(v) == len(word)
        target = self.words[v] if reduced else None
        if reduced and word == target:
            return {v: field.one(self.rank)}
        moves = self._path(word, target)
        corrections: list[tuple[int, Word]] = []
        cur = word
        for kind, pos, nxt in moves:
            if kind == "braid":
                corrections.append((1, cur[:pos] + (cur[pos],) + cur[pos + 3:]))
                corrections.append((-1, cur[:pos] + (cur[pos + 1],) + cur[pos + 3:]))
            cur = nxt
        total = dict(self.expand_word(cur))
        zero = field.zero(self.rank)
        for sign, cword in corrections:
            scale = self._mu_inv_sq if sign > 0 else -self._mu_inv_sq
            for x, c in self.expand_word(cword).items():
                total[x] = total.get(x, zero) + scale * c
        return {x: c for x, c in total.items() if not c.is_zero()}

    def _path(self, word: Word, target: Word | None
              ) -> list[tuple[str, int, Word]]:
        """Shortest commutation/braid move sequence to the goal word.

        Goal: `target` when given, else any word with an equal adjacent pair.
        Reachability holds because braid and commutation moves connect all
        reduced words of an element, and any non-reduced word can be driven
        to an equal adjacent pair by such moves.
        """
        def done(w: Word) -> bool:
            if target is not None:
                return w == target
            return any(w[k] == w[k + 1] for k in range(len(w) - 1))

        parents: dict[Word, tuple[Word, tuple[str, int, Word]] | None] = {word: None}
        queue = deque([word])
        while queue:
            cur = queue.popleft()
            if done(cur):
                path = []
                node = cur
                while parents[node] is not None:
                    node, move = parents[node]
                    path.append(move)
                path.reverse()
                return path
            for move in self._moves(cur):
                nxt = move[2]
                if nxt not in parents:
                    parents[nxt] = (cur, move)
                    queue.append(nxt)
        raise RuntimeError(f"no rewriting path found from word {word}")

    @staticmethod
    def _moves(word: Word):
        for p in range(len(word) - 1):
            a, b = word[p], word[p + 1]
            if abs(a - b) > 1:
                yield ("comm", p, word[:p] + (b, a) + word[p + 2:])
        for p in range(len(word) - 2):
            a, b, c = word[p:p + 3]
            if a == c and abs(a - b) == 1:
                yield ("braid", p, word[:p] + (b, a, b) + word[p + 3:])

    # -- root polynomials -----------------------------------------------------

    def root_polynomial(self, word: Word) -> FreeDemazureElement:
        """Ordered product of (1 + x_{beta_j} X_{i_j}) along a reduced word."""
        word = tuple(word)
        if not self.W.is_reduced(word):
            raise ValueError(f"root polynomials need a reduced word, got {word}")
        betas = self.W.prefix_roots(word)
        zero = field.zero(self.rank)
        res: dict[Perm, FieldElement] = {self.W.identity: field.one(self.rank)}
        for i, beta in zip(word, betas):
            xb = field.x_hyp(self.rank, beta)
            new = dict(res)
            for v, c in res.items():
                cx = c * xb
                for u, d in self.expand_word(self.words[v] + (i,)).items():
                    new[u] = new.get(u, zero) + cx * d
            res = {v: c for v, c in new.items() if not c.is_zero()}
        return FreeDemazureElement(self, res)

    def subword_contributions(self, word: Word, u: Perm
                              ) -> dict[tuple[int, ...], FieldElement]:
        """Per-subword summands of the X_{I_u} coefficient of the root polynomial.

        Keys are the picked positions (0-based) of the word; values are the
        product of the corresponding x_{beta_j} times the basis coefficient of
        the picked X-letters at u.  Zero contributions are omitted; the values
        sum to billey_coefficient.
        """
        word = tuple(word)
        betas = self.W.prefix_roots(word)
        out = {}
        for mask in range(1 << len(word)):
            picked = tuple(k for k in range(len(word)) if mask >> k & 1)
            sub = tuple(word[k] for k in picked)
            coeff = self.expand_word(sub).get(u)
            if coeff is None or coeff.is_zero():
                continue
            val = coeff
            for k in picked:
                val = val * field.x_hyp(self.rank, betas[k])
            if not val.is_zero():
                out[picked] = val
        return out

    def billey_coefficient(self, w: Perm, u: Perm) -> FieldElement:
        """Coefficient of X_{I_u} in the root polynomial of I_w (u in W^J)."""
        if u not in self.W.min_coset_reps(self.jt):
            raise ValueError(f"{u} is not a minimal coset representative for J={self.jt}")
        return self.root_polynomial(self.words[w]).coefficient(u)

    def restriction(self, u: Perm, w: Perm) -> FieldElement:
        """Fixed-point restriction of the opposite KL class: mu_u * coefficient."""
        return self.H.mu_power(self.W.length(u)) * self.billey_coefficient(w, u)


_MODULES: dict[tuple[int, tuple[int, ...]], FreeDemazureModule] = {}


def demazure_module(H: Hecke, J: Iterable[int]) -> FreeDemazureModule:
    """Shared rewriting context per (rank, J)."""
    key = (H.rank, H.W._jkey(J))
    mod = _MODULES.get(key)
    if mod is None:
        mod = FreeDemazureModule(H, key[1])
        _MODULES[key] = mod
    return mod


def billey_coefficient(H: Hecke, w: Perm, u: Perm, J: Iterable[int]) -> FieldElement:
    return demazure_module(H, J).billey_coefficient(w, u)


def restriction(H: Hecke, u: Perm, w: Perm, J: Iterable[int]) -> FieldElement:
    return demazure_module(H, J).restriction(u, w)
