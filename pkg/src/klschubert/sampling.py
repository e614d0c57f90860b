"""Seeded random inputs for identity checks.

Everything here is driven by an explicit random.Random instance so that a
fixed seed reproduces the exact same elements, keeping check output
byte-identical across runs.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import field
from .field import FieldElement
from .groupalgebra import GroupAlgebra
from .hecke import Hecke, TwistedElement
from .localization import DualClass


def random_field_element(rng: random.Random, rank: int,
                         terms: int = 3, denominators: bool = True) -> FieldElement:
    """A small random field element; denominators come from Chern classes."""
    while True:
        items = []
        for _ in range(rng.randint(1, terms)):
            coeff = rng.randint(-3, 3)
            t_exp = rng.randint(-2, 2)
            lat = tuple(rng.randint(-1, 1) for _ in range(rank))
            items.append(((t_exp, *lat), coeff))
        ga = GroupAlgebra.from_terms(rank, items)
        if not ga.is_zero():
            break
    out = FieldElement.from_ga(ga)
    if denominators and rng.random() < 0.5:
        i = rng.randint(1, rank)
        alpha = tuple(1 if k == i - 1 else 0 for k in range(rank))
        den = field.x_mult(rank, alpha) if rng.random() < 0.5 else field.x_hyp(rank, alpha)
        out = out / den
    return out


def random_twisted(rng: random.Random, H: Hecke, theory: str = "m",
                   terms: int = 2) -> TwistedElement:
    """A sparse random twisted-algebra element."""
    supp = rng.sample(H.W.elements, rng.randint(1, terms))
    return H.from_terms({
        w: random_field_element(rng, H.rank) for w in supp}, theory)


def random_dual(rng: random.Random, H: Hecke, theory: str = "m",
                terms: int = 3) -> DualClass:
    """A sparse random localized class."""
    supp = rng.sample(H.W.elements, rng.randint(1, terms))
    return DualClass(H.W, {
        w: random_field_element(rng, H.rank) for w in supp}, theory)


def random_point(rng: random.Random, rank: int
                 ) -> tuple[Fraction, tuple[Fraction, ...]]:
    """A random rational evaluation point with t and all e^{a_i} nonzero."""
    def frac() -> Fraction:
        while True:
            num = rng.randint(-19, 19)
            den = rng.randint(2, 13)
            q = Fraction(num, den)
            if q not in (0, 1, -1):
                return q
    return frac(), tuple(frac() for _ in range(rank))
