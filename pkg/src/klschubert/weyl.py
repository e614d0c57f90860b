"""Type A_n root system and Weyl group combinatorics.

Group elements are permutations of {1, ..., n+1} in one-line notation,
stored as tuples.  Products compose as functions: (u*v)(i) = u(v(i)).
Lattice vectors are integer tuples in simple-root coordinates.

>>> W = weyl_group(2)
>>> W.canonical_word(W.w0)
(1, 2, 1)
>>> W.length((2, 3, 1))
2
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator

Perm = tuple[int, ...]
Vector = tuple[int, ...]
Word = tuple[int, ...]

MAX_RANK = 5  # desk scale: |W| <= 720


class RootSystem:
    """Root data for type A_n in simple-root coordinates."""

    def __init__(self, rank: int):
        self.rank = rank
        self.zero = (0,) * rank
        self.simple_roots: list[Vector] = [
            tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
        # positive roots alpha_i + ... + alpha_j as interval vectors
        self.positive_roots: list[Vector] = [
            tuple(1 if i <= k <= j else 0 for k in range(rank))
            for i in range(rank) for j in range(i, rank)]
        self.cartan = [[2 if i == j else -1 if abs(i - j) == 1 else 0
                        for j in range(rank)] for i in range(rank)]
        self._act_cache: dict[tuple[Perm, Vector], Vector] = {}

    def simple(self, i: int) -> Vector:
        """Simple root alpha_i, 1-indexed."""
        return self.simple_roots[i - 1]

    def act(self, w: Perm, vec: Vector) -> Vector:
        """Apply w to a lattice vector (simple-root coordinates)."""
        key = (w, vec)
        out = self._act_cache.get(key)
        if out is None:
            # to epsilon coordinates, permute, back to partial sums
            n1 = self.rank + 1
            eps = [0] * n1
            prev = 0
            for k in range(self.rank):
                eps[k] = vec[k] - prev
                prev = vec[k]
            eps[self.rank] = -prev
            img = [0] * n1
            for k in range(n1):
                img[w[k] - 1] = eps[k]
            acc = 0
            coords = []
            for k in range(self.rank):
                acc += img[k]
                coords.append(acc)
            out = tuple(coords)
            self._act_cache[key] = out
        return out

    def positive_roots_of(self, J: Iterable[int]) -> list[Vector]:
        """Positive roots supported on the simple roots indexed by J."""
        jset = set(J)
        return [alpha for alpha in self.positive_roots
                if all(k + 1 in jset for k, c in enumerate(alpha) if c)]

    def interval(self, vec: Vector) -> tuple[int, int] | None:
        """Return (i, j) if vec = alpha_i + ... + alpha_j, else None."""
        support = [k + 1 for k, c in enumerate(vec) if c]
        if not support or any(vec[k - 1] != 1 for k in support):
            return None
        i, j = support[0], support[-1]
        if support != list(range(i, j + 1)):
            return None
        return i, j


class WeylGroup:
    """The symmetric group S_{n+1} as the type A_n Weyl group, with caches.

    Caches are built once and then only read; instances are safe to share
    between threads after warm-up.
    """

    def __init__(self, rank: int):
        if not 1 <= rank <= MAX_RANK:
            raise ValueError(f"rank must be between 1 and {MAX_RANK}, got {rank}")
        self.rank = rank
        self.n = rank + 1
        self.root_system = RootSystem(rank)
        self.identity: Perm = tuple(range(1, self.n + 1))
        self.elements: list[Perm] = sorted(
            itertools.permutations(range(1, self.n + 1)),
            key=lambda p: (_inversions(p), p))
        self.index = {w: i for i, w in enumerate(self.elements)}
        self._length = {w: _inversions(w) for w in self.elements}
        self.w0: Perm = tuple(range(self.n, 0, -1))
        self._canonical: dict[Perm, Word] = {self.identity: ()}
        self._bruhat: dict[tuple[Perm, Perm], bool] = {}
        self._lower: dict[Perm, list[Perm]] = {}
        self._jwords: dict[tuple[int, ...], dict[Perm, Word]] = {}
        self._subgroup: dict[tuple[int, ...], list[Perm]] = {}
        self._fully_commutative: set[Perm] | None = None

    # -- basic group operations ---------------------------------------------

    def simple(self, i: int) -> Perm:
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple reflection index {i} out of range")
        p = list(self.identity)
        p[i - 1], p[i] = p[i], p[i - 1]
        return tuple(p)

    def mult(self, u: Perm, v: Perm) -> Perm:
        return tuple(u[x - 1] for x in v)

    def product(self, perms: Iterable[Perm]) -> Perm:
        out = self.identity
        for p in perms:
            out = self.mult(out, p)
        return out

    def inverse(self, w: Perm) -> Perm:
        out = [0] * self.n
        for i, x in enumerate(w):
            out[x - 1] = i + 1
        return tuple(out)

    def length(self, w: Perm) -> int:
        return self._length[w]

    def sign(self, w: Perm) -> int:
        return -1 if self._length[w] % 2 else 1

    def rmul_s(self, w: Perm, i: int) -> Perm:
        """w * s_i (swap positions i, i+1)."""
        p = list(w)
        p[i - 1], p[i] = p[i], p[i - 1]
        return tuple(p)

    def lmul_s(self, i: int, w: Perm) -> Perm:
        """s_i * w (swap values i, i+1)."""
        swap = {i: i + 1, i + 1: i}
        return tuple(swap.get(x, x) for x in w)

    def right_descents(self, w: Perm) -> list[int]:
        return [i for i in range(1, self.n) if w[i - 1] > w[i]]

    def left_descents(self, w: Perm) -> list[int]:
        return self.right_descents(self.inverse(w))

    # -- words ----------------------------------------------------------------

    def word_to_perm(self, word: Iterable[int]) -> Perm:
        out = self.identity
        for i in word:
            out = self.rmul_s(out, i)
        return out

    def is_reduced(self, word: Word) -> bool:
        return self._length[self.word_to_perm(word)] == len(word)

    def canonical_word(self, w: Perm) -> Word:
        """Lexicographically smallest reduced word; fixed once per group."""
        out = self._canonical.get(w)
        if out is None:
            i = min(self.left_descents(w))
            out = (i,) + self.canonical_word(self.lmul_s(i, w))
            self._canonical[w] = out
        return out

    def reduced_words(self, w: Perm) -> Iterator[Word]:
        """All reduced words of w (exponentially many; test scale only)."""
        if w == self.identity:
            yield ()
            return
        for i in self.left_descents(w):
            for rest in self.reduced_words(self.lmul_s(i, w)):
                yield (i,) + rest

    def prefix_roots(self, word: Word) -> list[Vector]:
        """The roots s_{i_1}...s_{i_{j-1}}(alpha_{i_j}) along a reduced word."""
        rs = self.root_system
        out = []
        w = self.identity
        for i in word:
            out.append(rs.act(w, rs.simple(i)))
            w = self.rmul_s(w, i)
        return out

    # -- Bruhat order ----------------------------------------------------------

    def bruhat_leq(self, u: Perm, w: Perm) -> bool:
        if u == w:
            return True
        if self._length[u] >= self._length[w]:
            return False
        key = (u, w)
        out = self._bruhat.get(key)
        if out is None:
            # lifting property along the smallest left descent of w
            i = min(self.left_descents(w))
            sw = self.lmul_s(i, w)
            su = self.lmul_s(i, u)
            if self._length[su] < self._length[u]:
                out = self.bruhat_leq(su, sw)
            else:
                out = self.bruhat_leq(u, sw)
            self._bruhat[key] = out
        return out

    def bruhat_lower(self, w: Perm) -> list[Perm]:
        """All u <= w, in (length, lex) order."""
        out = self._lower.get(w)
        if out is None:
            out = [u for u in self.elements
                   if self._length[u] <= self._length[w] and self.bruhat_leq(u, w)]
            self._lower[w] = out
        return out

    # -- parabolic subgroups and cosets -----------------------------------------

    def _jkey(self, J: Iterable[int]) -> tuple[int, ...]:
        jt = tuple(sorted(set(J)))
        if any(not 1 <= j <= self.rank for j in jt):
            raise ValueError(f"parabolic subset {jt} out of range for rank {self.rank}")
        return jt

    def subgroup_elements(self, J: Iterable[int]) -> list[Perm]:
        """W_J, in (length, lex) order."""
        jt = self._jkey(J)
        out = self._subgroup.get(jt)
        if out is None:
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for w in frontier:
                    for j in jt:
                        x = self.rmul_s(w, j)
                        if x not in seen:
                            seen.add(x)
                            nxt.append(x)
                frontier = nxt
            out = sorted(seen, key=lambda p: (self._length[p], p))
            self._subgroup[jt] = out
        return out

    def longest_in(self, J: Iterable[int]) -> Perm:
        """w_J, the longest element of W_J."""
        return self.subgroup_elements(J)[-1]

    def min_coset_reps(self, J: Iterable[int]) -> list[Perm]:
        """W^J: minimal-length representatives of left cosets w W_J."""
        jt = self._jkey(J)
        return [w for w in self.elements
                if all(w[j - 1] < w[j] for j in jt)]

    def min_right_coset_reps(self, J: Iterable[int]) -> list[Perm]:
        """The set of minimal-length representatives of right cosets W_J w."""
        return [self.inverse(w) for w in self.min_coset_reps(J)]

    def coset_decompose(self, w: Perm, J: Iterable[int]) -> tuple[Perm, Perm]:
        """The unique w = u v with u in W^J, v in W_J, l(w) = l(u) + l(v)."""
        jt = self._jkey(J)
        u = w
        while True:
            for j in jt:
                if u[j - 1] > u[j]:
                    u = self.rmul_s(u, j)
                    break
            else:
                break
        return u, self.mult(self.inverse(u), w)

    def check_grassmannian(self, J: Iterable[int]) -> tuple[int, ...]:
        jt = self._jkey(J)
        if len(jt) != self.rank - 1:
            raise ValueError(
                f"J = {jt} is not maximal proper in rank {self.rank}; "
                "this operation is restricted to Grassmannian mode")
        return jt

    # -- fully commutative elements ----------------------------------------------

    def is_fully_commutative(self, w: Perm) -> bool:
        """True iff w is 321-avoiding (no reduced word contains s_i s_j s_i)."""
        return w in self.fully_commutative()

    def fully_commutative(self) -> set[Perm]:
        if self._fully_commutative is None:
            self._fully_commutative = {
                w for w in self.elements if not _has_321(w)}
        return self._fully_commutative

    # -- J-compatible reduced words ------------------------------------------------

    def j_compatible_words(self, J: Iterable[int]) -> dict[Perm, Word]:
        """Reduced words with I_{uv} = I_u + I_v along the coset factorization.

        For u in W^J and v in W_J the canonical (lex-min) words are used, so
        the assignment is deterministic and self-consistent.
        """
        jt = self._jkey(J)
        out = self._jwords.get(jt)
        if out is None:
            out = {}
            for w in self.elements:
                u, v = self.coset_decompose(w, jt)
                out[w] = self.canonical_word(u) + self.canonical_word(v)
            self._jwords[jt] = out
        return out

    # -- parsing and printing --------------------------------------------------------

    def perm_str(self, w: Perm) -> str:
        return ",".join(str(x) for x in w)

    def parse_perm(self, text: str) -> Perm:
        w = tuple(int(x) for x in text.split(","))
        if sorted(w) != list(range(1, self.n + 1)):
            raise ValueError(f"{text!r} is not a permutation of 1..{self.n}")
        return w

    def word_str(self, word: Word) -> str:
        return ",".join(str(i) for i in word)

    def parse_word(self, text: str) -> Word:
        text = text.strip()
        if text in ("", "e"):
            return ()
        word = tuple(int(x) for x in text.split(","))
        if any(not 1 <= i <= self.rank for i in word):
            raise ValueError(f"word {text!r} has letters outside 1..{self.rank}")
        return word


def _inversions(p: Perm) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def _has_321(p: Perm) -> bool:
    n = len(p)
    for j in range(1, n - 1):
        if any(p[i] > p[j] for i in range(j)):
            if any(p[k] < p[j] for k in range(j + 1, n)):
                return True
    return False


@lru_cache(maxsize=None)
def weyl_group(rank: int) -> WeylGroup:
    """Shared per-rank WeylGroup instance."""
    return WeylGroup(rank)
