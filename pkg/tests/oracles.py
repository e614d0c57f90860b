"""Independent oracles the main code paths are checked against.

Everything here is deliberately written from first principles (brute-force
enumeration, a different recursion, a different rewriting system) and stays
independent of the implementation it validates.
"""

from __future__ import annotations

from klschubert import field
from klschubert.field import FieldElement
from klschubert.hecke import Hecke
from klschubert.weyl import Perm, WeylGroup, Word

# -- Kazhdan-Lusztig polynomials via R-polynomials ------------------------------

_R_MEMO: dict[tuple, tuple[int, ...]] = {}
_P_MEMO: dict[tuple, tuple[int, ...]] = {}


def r_polynomial(W: WeylGroup, u: Perm, v: Perm) -> tuple[int, ...]:
    """Dense coefficients of the R-polynomial (two-case recursion)."""
    if u == v:
        return (1,)
    if not W.bruhat_leq(u, v):
        return ()
    key = (W.rank, u, v)
    out = _R_MEMO.get(key)
    if out is not None:
        return out
    s = min(W.right_descents(v))
    vs = W.rmul_s(v, s)
    us = W.rmul_s(u, s)
    if W.length(us) < W.length(u):
        out = r_polynomial(W, us, vs)
    else:
        a = r_polynomial(W, u, vs)
        b = r_polynomial(W, us, vs)
        res = [0] * (max(len(a), len(b)) + 1)
        for i, c in enumerate(a):  # (q - 1) * a
            res[i + 1] += c
            res[i] -= c
        for i, c in enumerate(b):  # q * b
            res[i + 1] += c
        while res and res[-1] == 0:
            res.pop()
        out = tuple(res)
    _R_MEMO[key] = out
    return out


def kl_via_r(W: WeylGroup, u: Perm, v: Perm) -> tuple[int, ...]:
    """KL polynomial from R-polynomials by degree truncation.

    q^d conj(P_{u,v}) = sum_{u<=w<=v} R_{u,w} P_{w,v} forces P to be minus the
    low-degree part (degree <= (d-1)/2) of the sum over w > u.
    """
    if u == v:
        return (1,)
    if not W.bruhat_leq(u, v):
        return ()
    key = (W.rank, u, v)
    out = _P_MEMO.get(key)
    if out is not None:
        return out
    d = W.length(v) - W.length(u)
    acc: dict[int, int] = {}
    for w in W.bruhat_lower(v):
        if w == u or not W.bruhat_leq(u, w):
            continue
        r = r_polynomial(W, u, w)
        p = kl_via_r(W, w, v)
        for i, a in enumerate(r):
            if a:
                for j, b in enumerate(p):
                    if b:
                        acc[i + j] = acc.get(i + j, 0) + a * b
    res = [-acc.get(k, 0) for k in range((d - 1) // 2 + 1)]
    while res and res[-1] == 0:
        res.pop()
    out = tuple(res)
    _P_MEMO[key] = out
    return out


# -- Bruhat order by counting ------------------------------------------------------


def bruhat_by_counting(u: Perm, w: Perm) -> bool:
    """Type-A criterion: u <= w iff #{k<=i : u(k)>=j} <= the same count for w,
    for all (i, j)."""
    n = len(u)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cu = sum(1 for k in range(i) if u[k] >= j)
            cw = sum(1 for k in range(i) if w[k] >= j)
            if cu > cw:
                return False
    return True


# -- fully commutative elements by word search ----------------------------------------


def fully_commutative_by_words(W: WeylGroup, w: Perm) -> bool:
    """No reduced word of w contains a factor (i, j, i) with |i - j| = 1."""
    for word in W.reduced_words(w):
        for k in range(len(word) - 2):
            if word[k] == word[k + 2] and abs(word[k] - word[k + 1]) == 1:
                return False
    return True


def lexmin_reduced_word(W: WeylGroup, w: Perm) -> Word:
    return min(W.reduced_words(w))


# -- Temperley-Lieb algebra via generator-relation rewriting -------------------------

_TL_MEMO: dict[tuple, dict[Perm, FieldElement]] = {}


def tl_word_product(H: Hecke, word: Word) -> dict[Perm, FieldElement]:
    """Expand a word in the TL generators over the basis indexed by fully
    commutative elements, using only the quotient relations

        E_i E_i = -(t + t^-1) E_i,  E_i E_j E_i = E_i (|i-j|=1),
        E_i E_j = E_j E_i (|i-j|>1).

    Patterns are searched across the whole commutation class, mirroring how
    normal forms for the quotient algebra are computed by hand.
    """
    word = tuple(word)
    key = (H.rank, word)
    out = _TL_MEMO.get(key)
    if out is not None:
        return out
    W = H.W
    seen = {word}
    frontier = [word]
    hit = None
    while frontier and hit is None:
        nxt = []
        for cur in frontier:
            for k in range(len(cur) - 1):
                if cur[k] == cur[k + 1]:
                    hit = ("square", cur[:k] + cur[k + 1:])
                    break
                if (k + 2 < len(cur) and cur[k] == cur[k + 2]
                        and abs(cur[k] - cur[k + 1]) == 1):
                    hit = ("sandwich", cur[:k + 1] + cur[k + 3:])
                    break
            if hit:
                break
            for k in range(len(cur) - 1):
                if abs(cur[k] - cur[k + 1]) > 1:
                    moved = cur[:k] + (cur[k + 1], cur[k]) + cur[k + 2:]
                    if moved not in seen:
                        seen.add(moved)
                        nxt.append(moved)
        frontier = nxt
    if hit is None:
        v = W.word_to_perm(word)
        assert W.length(v) == len(word) and W.is_fully_commutative(v)
        out = {v: field.one(H.rank)}
    elif hit[0] == "square":
        factor = -field.mu(H.rank)
        out = {v: factor * c for v, c in tl_word_product(H, hit[1]).items()}
    else:
        out = tl_word_product(H, hit[1])
    _TL_MEMO[key] = out
    return out


def tl_multiply(H: Hecke, a: dict[Perm, FieldElement],
                b: dict[Perm, FieldElement]) -> dict[Perm, FieldElement]:
    """Product of two TL elements given over the fully commutative basis."""
    W = H.W
    zero = field.zero(H.rank)
    out: dict[Perm, FieldElement] = {}
    for w, c in a.items():
        for v, d in b.items():
            cd = c * d
            for x, e in tl_word_product(
                    H, W.canonical_word(w) + W.canonical_word(v)).items():
                out[x] = out.get(x, zero) + cd * e
    return {x: c for x, c in out.items() if not c.is_zero()}
