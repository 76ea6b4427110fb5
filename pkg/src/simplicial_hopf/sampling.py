"""Seeded random generators for words, Gamma elements, loop words and simplices."""
from __future__ import annotations

import random
from typing import Optional

from . import gamma
from . import loop_group as lg
from . import operators as ops
from . import twisting
from .gamma import ChainComplex, GammaElement, Z2
from .loop_group import LoopWord
from .ptcp import TotalSimplex

EXPONENTS = (-2, -1, 1, 2)


def random_operator_word(rng: random.Random, source_degree: int, length: int, max_degree: int) -> ops.OperatorWord:
    """A degree-valid word of the given length that never leaves [0, max_degree]."""
    built = []
    n = source_degree
    for _ in range(length):
        choices = []
        if n >= 1:
            choices.append(ops.FACE)
        if n < max_degree:
            choices.append(ops.DEGENERACY)
        kind = rng.choice(choices)
        built.append(ops.Operator(kind, rng.randint(0, n)))
        n += -1 if kind == ops.FACE else 1
    return ops.OperatorWord(tuple(reversed(built)), source_degree)


def random_gamma_element(rng: random.Random, n: int, complex: ChainComplex = Z2,
                         max_terms: int = 3, bound: int = 3) -> GammaElement:
    basis = gamma.gamma_basis(complex, n)
    if not basis:
        return GammaElement.zero(n)
    x = GammaElement.zero(n)
    for _ in range(rng.randint(1, max_terms)):
        c = 0
        while c == 0:
            c = rng.randint(-bound, bound)
        x = x + c * gamma.basis_element(complex, n, rng.choice(basis))
    return x


def random_generator(rng: random.Random, n: int, complex: ChainComplex = Z2, bound: int = 3) -> Optional[GammaElement]:
    """A random element of Gamma_{n+1} that is not an s_0-image, or None if none exist."""
    for _ in range(100):
        x = random_gamma_element(rng, n + 1, complex, bound=bound)
        if x and not lg.is_s0_image(x):
            return x
    return None


def random_loop_word(rng: random.Random, n: int, complex: ChainComplex = Z2,
                     max_factors: int = 3, bound: int = 3) -> LoopWord:
    w = LoopWord.identity(n)
    for _ in range(rng.randint(0, max_factors)):
        x = random_generator(rng, n, complex, bound)
        if x is None:
            break
        w = lg.multiply(w, LoopWord(n, ((x, rng.choice(EXPONENTS)),)))
    return w


def random_base_simplex(rng: random.Random, n: int) -> twisting.BaseSimplex:
    return rng.choice(twisting.s2_simplices(n))


def random_total_simplex(rng: random.Random, n: int, max_factors: int = 3, bound: int = 3) -> TotalSimplex:
    return TotalSimplex(random_loop_word(rng, n, max_factors=max_factors, bound=bound), random_base_simplex(rng, n))
