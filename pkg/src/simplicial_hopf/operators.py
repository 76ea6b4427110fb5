"""
Words in the face operators d_i and degeneracy operators s_i.

A word is written left to right and acts right to left, so ``s3 s1 d0 d2``
at source degree ``r`` first applies ``d2`` to an ``r``-simplex.  Every word
rewrites, using only the simplicial identities, to a unique canonical form

    s_{h_k} ... s_{h_1} d_{j_1} ... d_{j_l},   h_k > ... > h_1,  j_1 < ... < j_l.

The identity is the empty word.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from .exceptions import ValidationError

FACE = "d"
DEGENERACY = "s"

_TOKEN = re.compile(r"^([ds])(\d+)$")


@dataclass(frozen=True, order=True)
class Operator:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in (FACE, DEGENERACY):
            raise ValidationError(f"unknown operator kind {self.kind!r}")
        if not isinstance(self.index, int) or self.index < 0:
            raise ValidationError(f"operator index must be a nonnegative integer, got {self.index!r}")

    @property
    def is_face(self) -> bool:
        return self.kind == FACE

    def __str__(self):
        return f"{self.kind}{self.index}"


def face(i: int) -> Operator:
    return Operator(FACE, i)


def degeneracy(i: int) -> Operator:
    return Operator(DEGENERACY, i)


def _as_operator(op) -> Operator:
    if isinstance(op, Operator):
        return op
    kind, index = op
    return Operator(kind, index)


def check_word(ops: Sequence[Operator], source_degree: int) -> int:
    """Check degree validity of ``ops`` and return the target degree.

    Positions in error messages count from the left, as the word is written.
    """
    if not isinstance(source_degree, int) or source_degree < 0:
        raise ValidationError(f"source degree must be a nonnegative integer, got {source_degree!r}")
    n = source_degree
    for pos in range(len(ops) - 1, -1, -1):
        op = ops[pos]
        if op.is_face:
            if n < 1 or op.index > n:
                raise ValidationError(
                    f"operator {op} at position {pos} is not applicable in degree {n}"
                )
            n -= 1
        else:
            if op.index > n:
                raise ValidationError(
                    f"operator {op} at position {pos} is not applicable in degree {n}"
                )
            n += 1
    return n


@dataclass(frozen=True)
class OperatorWord:
    ops: Tuple[Operator, ...]
    source_degree: int

    def __post_init__(self):
        ops = tuple(_as_operator(op) for op in self.ops)
        object.__setattr__(self, "ops", ops)
        object.__setattr__(self, "_target", check_word(ops, self.source_degree))

    @property
    def target_degree(self) -> int:
        return self._target

    @classmethod
    def identity(cls, degree: int) -> "OperatorWord":
        return cls((), degree)

    @classmethod
    def parse(cls, text: str, source_degree: int) -> "OperatorWord":
        """Parse the text syntax ``"s3 s1 d0 d2"``; ``""`` or ``"id"`` is the identity."""
        tokens = text.replace(",", " ").split()
        if tokens == ["id"]:
            tokens = []
        ops = []
        for pos, tok in enumerate(tokens):
            match = _TOKEN.match(tok)
            if match is None:
                raise ValidationError(f"cannot parse operator {tok!r} at position {pos}")
            ops.append(Operator(match.group(1), int(match.group(2))))
        return cls(tuple(ops), source_degree)

    def compose(self, other: "OperatorWord") -> "OperatorWord":
        """``self`` after ``other``."""
        if other.target_degree != self.source_degree:
            raise ValidationError(
                f"cannot compose: {other} lands in degree {other.target_degree}, "
                f"{self} starts in degree {self.source_degree}"
            )
        return OperatorWord(self.ops + other.ops, other.source_degree)

    def __matmul__(self, other: "OperatorWord") -> "OperatorWord":
        return self.compose(other)

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    @property
    def degeneracy_indices(self) -> Tuple[int, ...]:
        return tuple(op.index for op in self.ops if not op.is_face)

    @property
    def face_indices(self) -> Tuple[int, ...]:
        return tuple(op.index for op in self.ops if op.is_face)

    def is_canonical(self) -> bool:
        nfaces = len(self.face_indices)
        if any(op.is_face for op in self.ops[: len(self.ops) - nfaces]):
            return False
        h = self.degeneracy_indices
        j = self.face_indices
        return all(a > b for a, b in zip(h, h[1:])) and all(a < b for a, b in zip(j, j[1:]))

    def __str__(self):
        return " ".join(str(op) for op in self.ops) if self.ops else "id"

    def to_json(self) -> dict:
        return {"src": self.source_degree, "ops": [[op.kind, op.index] for op in self.ops]}

    @classmethod
    def from_json(cls, data: dict) -> "OperatorWord":
        try:
            return cls(tuple(Operator(k, int(i)) for k, i in data["ops"]), int(data["src"]))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed operator word: {data!r}") from exc


def _rewrite_pair(a: Operator, b: Operator) -> Optional[Tuple[Operator, ...]]:
    """One simplicial identity applied to ``a b`` (``b`` acts first), or None."""
    i, j = a.index, b.index
    if a.is_face and b.is_face:
        # d_i d_j = d_{j-1} d_i for i < j, read right to left
        if i >= j:
            return (face(j), face(i + 1))
        return None
    if not a.is_face and not b.is_face:
        if i <= j:
            return (degeneracy(j + 1), degeneracy(i))
        return None
    if a.is_face:
        if i < j:
            return (degeneracy(j - 1), face(i))
        if i == j or i == j + 1:
            return ()
        return (degeneracy(j), face(i - 1))
    return None


@lru_cache(maxsize=None)
def _normalize_ops(ops: Tuple[Operator, ...]) -> Tuple[Operator, ...]:
    # Terminates: each face/degeneracy rule lowers the number of
    # (face left of degeneracy) pairs; the face/face and degeneracy/degeneracy
    # rules keep that count and raise sum(index + position), which is bounded.
    work = list(ops)
    changed = True
    while changed:
        changed = False
        for p in range(len(work) - 1):
            repl = _rewrite_pair(work[p], work[p + 1])
            if repl is not None:
                work[p : p + 2] = repl
                changed = True
                break
    return tuple(work)


def normalize(w: OperatorWord) -> OperatorWord:
    """Rewrite ``w`` to canonical form with the five simplicial identities."""
    return OperatorWord(_normalize_ops(w.ops), w.source_degree)


def enumerate_degeneracy_words(r: int, n: int) -> List[OperatorWord]:
    """All canonical pure-degeneracy words from degree ``r`` to degree ``n``.

    Ordered lexicographically by the increasing index sequence (j_1, ..., j_k).
    """
    if r < 0 or n < r:
        raise ValidationError(f"need 0 <= r <= n, got r={r}, n={n}")
    return [
        OperatorWord(tuple(degeneracy(j) for j in reversed(js)), r)
        for js in combinations(range(n), n - r)
    ]


def degeneracy_word(indices: Iterable[int], source_degree: int) -> OperatorWord:
    """Word ``s_{j_k} ... s_{j_1}`` from indices listed left to right."""
    return OperatorWord(tuple(degeneracy(j) for j in indices), source_degree)


def clear_caches():
    _normalize_ops.cache_clear()
