"""
The principal twisted cartesian product G Gamma Z(2) x_eta S^2, whose
projection to S^2 models the Hopf map, and the universal product
G Gamma Z(2) x_zeta Gamma Z(2) it maps into.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from . import gamma
from . import loop_group as lg
from . import twisting
from .exceptions import CompatibilityError, ValidationError, VerificationError
from .gamma import GammaElement, Z2
from .loop_group import LoopWord
from .twisting import BaseSimplex


@dataclass(frozen=True)
class TotalSimplex:
    fiber: LoopWord
    base: BaseSimplex

    def __post_init__(self):
        if self.fiber.degree != self.base.degree:
            raise ValidationError(
                f"fiber has degree {self.fiber.degree} but base has degree {self.base.degree}"
            )

    @property
    def degree(self) -> int:
        return self.base.degree

    def __str__(self):
        return f"({self.fiber}, {self.base})"

    def to_json(self, m: int = 1) -> dict:
        return {"fiber": self.fiber.to_json(), "base": self.base.to_json(), "class": m}

    @classmethod
    def from_json(cls, data: dict) -> Tuple["TotalSimplex", int]:
        """Decode a total simplex; returns it together with its bundle class."""
        try:
            t = cls(LoopWord.from_json(data["fiber"]), BaseSimplex.from_json(data["base"]))
            m = int(data.get("class", 1))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed total simplex: {data!r}") from exc
        return t, m


@dataclass(frozen=True)
class UniversalTotalSimplex:
    fiber: LoopWord
    base: GammaElement

    def __post_init__(self):
        if self.fiber.degree != self.base.degree:
            raise ValidationError(
                f"fiber has degree {self.fiber.degree} but base has degree {self.base.degree}"
            )

    @property
    def degree(self) -> int:
        return self.base.degree

    def to_json(self) -> dict:
        return {"fiber": self.fiber.to_json(), "base": self.base.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "UniversalTotalSimplex":
        try:
            return cls(LoopWord.from_json(data["fiber"]), GammaElement.from_json(data["base"]))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed universal total simplex: {data!r}") from exc


def universal_face(i: int, t: UniversalTotalSimplex) -> UniversalTotalSimplex:
    """Faces of G Gamma Z(2) x_zeta Gamma Z(2)."""
    fiber = lg.loop_face(i, t.fiber)
    if i == 0:
        fiber = lg.multiply(twisting.universal_zeta(t.base), fiber)
    return UniversalTotalSimplex(fiber, gamma.gamma_face(Z2, i, t.base))


def universal_degeneracy(i: int, t: UniversalTotalSimplex) -> UniversalTotalSimplex:
    return UniversalTotalSimplex(lg.loop_degeneracy(i, t.fiber), gamma.gamma_degeneracy(Z2, i, t.base))


class TwistedProduct:
    """G Gamma Z(2) x_eta S^2 for the twisting ``eta_m``.

    ``m = 1`` gives the Hopf fibration; other ``m`` give the remaining circle
    bundles over S^2.  The principal action multiplies the fiber coordinate on
    the right, which is what commutes with the twisted d_0.
    """

    def __init__(self, m: int = 1):
        self.m = int(m)

    def __repr__(self):
        return f"TwistedProduct(m={self.m})"

    def twist(self, b: BaseSimplex) -> LoopWord:
        return twisting.eta(self.m, b)

    def face(self, i: int, t: TotalSimplex) -> TotalSimplex:
        n = t.degree
        if n < 1 or not (0 <= i <= n):
            raise ValidationError(f"face d_{i} is not defined in degree {n}")
        fiber = lg.loop_face(i, t.fiber)
        if i == 0:
            fiber = self._twisted_fiber(t.base, fiber)
        return TotalSimplex(fiber, twisting.s2_face(i, t.base))

    def _twisted_fiber(self, b: BaseSimplex, face0: LoopWord) -> LoopWord:
        return lg.multiply(self.twist(b), face0)

    def degeneracy(self, i: int, t: TotalSimplex) -> TotalSimplex:
        n = t.degree
        if not (0 <= i <= n):
            raise ValidationError(f"degeneracy s_{i} is not defined in degree {n}")
        return TotalSimplex(lg.loop_degeneracy(i, t.fiber), twisting.s2_degeneracy(i, t.base))

    @staticmethod
    def project(t: TotalSimplex) -> BaseSimplex:
        return t.base

    def act(self, h: LoopWord, t: TotalSimplex) -> TotalSimplex:
        if h.degree != t.degree:
            raise ValidationError(f"group element of degree {h.degree} cannot act in degree {t.degree}")
        return TotalSimplex(lg.multiply(t.fiber, h), t.base)

    def check_horn(self, n: int, k: int, horn: Mapping[int, TotalSimplex], base_filler: BaseSimplex):
        if n < 1 or not (0 <= k <= n):
            raise ValidationError(f"no horn Lambda^{n}_{k}")
        expected = set(range(n + 1)) - {k}
        if set(horn) != expected:
            raise ValidationError(f"horn Lambda^{n}_{k} needs faces {sorted(expected)}, got {sorted(horn)}")
        if base_filler.degree != n:
            raise ValidationError(f"base filler has degree {base_filler.degree}, expected {n}")
        for i, t in horn.items():
            if t.base != twisting.s2_face(i, base_filler):
                raise ValidationError(f"face {i} of the horn lies over {t.base}, not over d_{i} of the base filler")
        if n < 2:
            return
        idx = sorted(horn)
        for a, i in enumerate(idx):
            for j in idx[a + 1 :]:
                if self.face(i, horn[j]) != self.face(j - 1, horn[i]):
                    raise CompatibilityError(f"faces {i} and {j} of the horn are incompatible", (i, j))

    def lift_horn(self, n: int, k: int, horn: Mapping[int, TotalSimplex], base_filler: BaseSimplex) -> TotalSimplex:
        """Lift a horn over a given base simplex.

        The fiber coordinates give a horn in G (face 0 untwisted by eta of the
        base filler), which ``fill_horn`` solves; the lift is re-checked here.
        """
        horn = {int(i): t for i, t in horn.items()}
        self.check_horn(n, k, horn, base_filler)
        group_horn: Dict[int, LoopWord] = {}
        for i, t in horn.items():
            if i == 0:
                group_horn[0] = lg.multiply(lg.invert(self.twist(base_filler)), t.fiber)
            else:
                group_horn[i] = t.fiber
        g = lg.fill_horn(n, k, group_horn)
        lift = TotalSimplex(g, base_filler)
        for i, t in horn.items():
            if self.face(i, lift) != t:
                raise VerificationError(f"lifted simplex fails face {i}")
        return lift

    def to_universal(self, t: TotalSimplex) -> UniversalTotalSimplex:
        return UniversalTotalSimplex(t.fiber, twisting.alpha(self.m, t.base))


HOPF = TwistedProduct(1)
