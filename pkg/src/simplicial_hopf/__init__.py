"""Exact simplicial model of the Hopf fibration G Gamma Z(2) x_eta S^2 -> S^2."""
from . import gamma, loop_group, operators


def clear_caches():
    """Flush every memo table (needed after swapping a rule at runtime)."""
    operators.clear_caches()
    gamma.clear_caches()
    loop_group.clear_caches()


from .exceptions import CompatibilityError, ValidationError, VerificationError  # noqa: E402
from .gamma import ChainComplex, GammaElement, Z2, gamma_basis, gamma_degeneracy, gamma_face, normalized_chains, sphere_complex  # noqa: E402
from .loop_group import (  # noqa: E402
    LoopWord, class_of, degree_invariant, fill_horn, invert, is_moore_cycle, loop_degeneracy, loop_face, multiply,
)
from .operators import Operator, OperatorWord, enumerate_degeneracy_words, normalize  # noqa: E402
from .ptcp import HOPF, TotalSimplex, TwistedProduct, UniversalTotalSimplex  # noqa: E402
from .twisting import (  # noqa: E402
    BaseSimplex, HopfTwisting, Y, alpha, check_twisting, eta, s2_degeneracy, s2_face, s2_simplices, universal_zeta,
)

__version__ = "0.1.0"
