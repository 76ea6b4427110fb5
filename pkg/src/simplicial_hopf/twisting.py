"""
The minimal simplicial 2-sphere, twisting functions, and the Hopf twisting.

S^2 has a basepoint ``pt`` and one nondegenerate 2-simplex ``y``; every other
simplex is a canonical degeneracy of one of them.  The class-``m`` twisting
``eta_m: S^2_n -> G_{n-1}(Gamma Z(2))`` is the composite of the classifying
map ``alpha_m: S^2 -> Gamma Z(2)`` (y -> m) with the universal twisting
``zeta = class_of``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, List, Optional

from . import gamma
from . import loop_group
from . import operators as ops
from .exceptions import ValidationError
from .gamma import GammaElement, Z2
from .loop_group import LoopWord

POINT = "pt"
CELL = "y"


@dataclass(frozen=True)
class BaseSimplex:
    cell: str
    word: tuple
    degree: int

    def __post_init__(self):
        word = tuple(int(j) for j in self.word)
        object.__setattr__(self, "word", word)
        if self.cell not in (POINT, CELL):
            raise ValidationError(f"cell must be 'pt' or 'y', got {self.cell!r}")
        base = 0 if self.cell == POINT else 2
        if self.degree - base != len(word):
            raise ValidationError(
                f"a degree-{self.degree} simplex over {self.cell} needs {self.degree - base} degeneracies"
            )
        if any(not (0 <= j < self.degree) for j in word) or any(a <= b for a, b in zip(word, word[1:])):
            raise ValidationError(f"{list(word)} is not a canonical degeneracy word")

    @classmethod
    def point(cls, n: int) -> "BaseSimplex":
        """The n-fold degeneracy s_{n-1} ... s_0 of the basepoint."""
        return cls(POINT, tuple(range(n - 1, -1, -1)), n)

    @classmethod
    def on_cell(cls, word=()) -> "BaseSimplex":
        word = tuple(word)
        return cls(CELL, word, 2 + len(word))

    def __str__(self):
        prefix = " ".join(f"s{j}" for j in self.word)
        return f"{prefix} {self.cell}".strip() if prefix else self.cell

    def to_json(self) -> dict:
        return {"cell": self.cell, "word": list(self.word), "deg": self.degree}

    @classmethod
    def from_json(cls, data: dict) -> "BaseSimplex":
        try:
            return cls(data["cell"], tuple(data["word"]), int(data["deg"]))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed base simplex: {data!r}") from exc


Y = BaseSimplex.on_cell()


def s2_simplices(n: int) -> List[BaseSimplex]:
    if n < 0:
        raise ValidationError("degree must be nonnegative")
    out = [BaseSimplex.point(n)]
    if n >= 2:
        out.extend(BaseSimplex(CELL, w.degeneracy_indices, n) for w in ops.enumerate_degeneracy_words(2, n))
    return out


def s2_face(i: int, b: BaseSimplex) -> BaseSimplex:
    n = b.degree
    if n < 1 or not (0 <= i <= n):
        raise ValidationError(f"face d_{i} is not defined in degree {n}")
    if b.cell == POINT:
        return BaseSimplex.point(n - 1)
    canon = ops.normalize(ops.OperatorWord((ops.face(i),) + tuple(ops.degeneracy(j) for j in b.word), 2))
    if canon.face_indices:
        # every face of y is the unique 1-simplex s_0 pt
        return BaseSimplex.point(n - 1)
    return BaseSimplex(CELL, canon.degeneracy_indices, n - 1)


def s2_degeneracy(i: int, b: BaseSimplex) -> BaseSimplex:
    n = b.degree
    if not (0 <= i <= n):
        raise ValidationError(f"degeneracy s_{i} is not defined in degree {n}")
    if b.cell == POINT:
        return BaseSimplex.point(n + 1)
    canon = ops.normalize(ops.OperatorWord((ops.degeneracy(i),) + tuple(ops.degeneracy(j) for j in b.word), 2))
    return BaseSimplex(CELL, canon.degeneracy_indices, n + 1)


def alpha(m: int, b: BaseSimplex) -> GammaElement:
    """Classifying map S^2 -> Gamma Z(2): y -> m, pt -> 0."""
    if b.cell == POINT:
        return GammaElement.zero(b.degree)
    return GammaElement.symbol(b.degree, b.word, m)


def universal_zeta(x: GammaElement) -> LoopWord:
    if x.degree < 1:
        raise ValidationError("twisting functions start in degree 1")
    return loop_group.class_of(x)


def eta(m: int, b: BaseSimplex) -> LoopWord:
    """The class-``m`` twisting; ``m = 1`` is the Hopf twisting."""
    n = b.degree
    if n < 1:
        raise ValidationError("eta is defined on simplices of degree >= 1")
    if b.cell == POINT or (b.word and b.word[-1] == 0):
        return LoopWord.identity(n - 1)
    return loop_group.class_of(GammaElement.symbol(n, b.word, m))


@dataclass(frozen=True)
class HopfTwisting:
    """eta_m as a callable; the class parameter defaults to the Hopf class."""

    m: int = 1

    def __call__(self, b: BaseSimplex) -> LoopWord:
        return eta(self.m, b)


@dataclass
class TwistingViolation:
    identity: str
    simplex: Any
    index: Optional[int]
    got: LoopWord
    expected: LoopWord

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "simplex": self.simplex.to_json(),
            "index": self.index,
            "got": self.got.to_json(),
            "expected": self.expected.to_json(),
        }


@dataclass
class TwistingReport:
    checks: int = 0
    violations: List[TwistingViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_twisting(
    twist: Callable[[Any], LoopWord],
    max_degree: int,
    simplices: Optional[Iterable[Any]] = None,
    face: Callable[[int, Any], Any] = s2_face,
    degeneracy: Callable[[int, Any], Any] = s2_degeneracy,
    complex=Z2,
) -> TwistingReport:
    """Check the four twisting identities of ``twist`` on every given simplex.

    Without ``simplices`` all of S^2 through ``max_degree`` is used.  The
    same checker handles eta, zeta on Gamma Z(2) (pass ``gamma`` faces), and
    deliberately broken twistings.
    """
    if max_degree < 1:
        raise ValidationError("max degree must be at least 1")
    if simplices is None:
        simplices = [b for n in range(max_degree + 1) for b in s2_simplices(n)]
    report = TwistingReport()

    def record(name, b, i, got, expected):
        report.checks += 1
        if got != expected:
            report.violations.append(TwistingViolation(name, b, i, got, expected))

    for b in simplices:
        n = b.degree
        if n > max_degree:
            continue
        record("t(s0 b) = e", b, 0, twist(degeneracy(0, b)), LoopWord.identity(n))
        if n < 1:
            continue
        tb = twist(b)
        for i in range(n):
            record("s_i t(b) = t(s_{i+1} b)", b, i,
                   loop_group.loop_degeneracy(i, tb, complex), twist(degeneracy(i + 1, b)))
        if n < 2:
            continue
        record("d_0 t(b) = t(d_0 b)^-1 t(d_1 b)", b, 0, loop_group.loop_face(0, tb, complex),
               loop_group.multiply(loop_group.invert(twist(face(0, b))), twist(face(1, b))))
        for i in range(1, n):
            record("d_i t(b) = t(d_{i+1} b)", b, i, loop_group.loop_face(i, tb, complex), twist(face(i + 1, b)))
    return report
