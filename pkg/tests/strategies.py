"""Hypothesis strategies shared by the property tests."""
import random

from hypothesis import strategies as st

from simplicial_hopf import operators as ops
from simplicial_hopf import sampling


@st.composite
def operator_words(draw, max_degree=7, max_length=8):
    src = draw(st.integers(0, max_degree))
    n = src
    built = []
    for _ in range(draw(st.integers(0, max_length))):
        kinds = ([ops.FACE] if n >= 1 else []) + ([ops.DEGENERACY] if n < max_degree else [])
        kind = draw(st.sampled_from(kinds))
        built.append(ops.Operator(kind, draw(st.integers(0, n))))
        n += -1 if kind == ops.FACE else 1
    return ops.OperatorWord(tuple(reversed(built)), src)


def seeded(builder):
    """Lift a ``builder(rng)`` from the sampling module to a strategy."""
    return st.integers(0, 2**32 - 1).map(lambda s: builder(random.Random(s)))


def loop_words(n):
    return seeded(lambda rng: sampling.random_loop_word(rng, n))
