"""
Chain complexes of free abelian groups and the functor Gamma to simplicial
abelian groups.

An element of Gamma_n(C) is a finite sum of symbols ``sigma_J x`` where ``J``
is a canonical degeneracy word from degree ``r`` to ``n`` and ``x`` is an
integer vector in C_r.  ``J`` is stored as its index tuple read left to
right, e.g. ``(3, 1)`` for sigma_3 sigma_1, so ``r = n - len(J)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from . import intlinalg
from . import operators as ops
from .exceptions import ValidationError

Symbol = Tuple[int, ...]


class ChainComplex:
    """A bounded chain complex of finitely generated free abelian groups.

    ``differentials[n]`` is the integer matrix of C_n -> C_{n-1}, with shape
    ``rank(n-1) x rank(n)``.  Missing differentials are zero.
    """

    __slots__ = ("_ranks", "_diffs", "_hash")

    def __init__(self, ranks: Mapping[int, int], differentials: Optional[Mapping[int, Sequence[Sequence[int]]]] = None):
        rk = {}
        for n, r in ranks.items():
            n, r = int(n), int(r)
            if n < 0 or r < 0:
                raise ValidationError(f"bad rank {r} in degree {n}")
            if r:
                rk[n] = r
        diffs = {}
        for n, mat in (differentials or {}).items():
            n = int(n)
            mat = tuple(tuple(int(x) for x in row) for row in mat)
            rows_expected = rk.get(n - 1, 0)
            cols_expected = rk.get(n, 0)
            if len(mat) != rows_expected or any(len(row) != cols_expected for row in mat):
                raise ValidationError(
                    f"differential in degree {n} must have shape {rows_expected}x{cols_expected}"
                )
            if any(x for row in mat for x in row):
                diffs[n] = mat
        self._ranks = tuple(sorted(rk.items()))
        self._diffs = tuple(sorted(diffs.items()))
        self._hash = hash((self._ranks, self._diffs))

    @property
    def ranks(self) -> Dict[int, int]:
        return dict(self._ranks)

    @property
    def differentials(self) -> Dict[int, Tuple[Tuple[int, ...], ...]]:
        return dict(self._diffs)

    def rank(self, n: int) -> int:
        return dict(self._ranks).get(n, 0)

    def differential(self, n: int) -> List[List[int]]:
        mat = dict(self._diffs).get(n)
        if mat is None:
            return intlinalg.zeros(self.rank(n - 1), self.rank(n))
        return [list(row) for row in mat]

    @property
    def top_degree(self) -> int:
        return max((n for n, _ in self._ranks), default=-1)

    def validate(self):
        """Raise ValidationError unless consecutive differentials compose to zero."""
        for n, _ in self._diffs:
            prod = intlinalg.matmul(self.differential(n - 1), self.differential(n),
                                    self.rank(n - 1), self.rank(n))
            if not intlinalg.is_zero(prod):
                raise ValidationError(f"d_{n - 1} d_{n} is not zero")

    def __eq__(self, other):
        return isinstance(other, ChainComplex) and self._ranks == other._ranks and self._diffs == other._diffs

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"ChainComplex(ranks={self.ranks}, differentials={self.differentials})"

    def to_json(self) -> dict:
        return {
            "ranks": {str(n): r for n, r in self._ranks},
            "differentials": {str(n): [list(row) for row in m] for n, m in self._diffs},
        }

    @classmethod
    def from_json(cls, data: dict) -> "ChainComplex":
        try:
            c = cls(data["ranks"], data.get("differentials", {}))
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValidationError(f"malformed chain complex: {data!r}") from exc
        c.validate()
        return c


def sphere_complex(k: int) -> ChainComplex:
    """Z(k): one copy of Z in degree ``k``."""
    if k < 0:
        raise ValidationError("degree must be nonnegative")
    return ChainComplex({k: 1})


Z2 = sphere_complex(2)


class GammaElement:
    """An element of Gamma_n(C); immutable and hashable."""

    __slots__ = ("degree", "_terms", "_hash")

    def __init__(self, degree: int, terms: Optional[Mapping[Symbol, Sequence[int]]] = None):
        if not isinstance(degree, int) or degree < 0:
            raise ValidationError(f"degree must be a nonnegative integer, got {degree!r}")
        clean = {}
        for J, vec in (terms or {}).items():
            J = tuple(J)
            _check_symbol(J, degree)
            vec = tuple(int(x) for x in vec)
            if any(vec):
                clean[J] = vec
        self.degree = degree
        self._terms = tuple(sorted(clean.items()))
        self._hash = hash((degree, self._terms))

    @classmethod
    def zero(cls, degree: int) -> "GammaElement":
        return cls(degree)

    @classmethod
    def symbol(cls, degree: int, J: Sequence[int], coeffs) -> "GammaElement":
        """``sigma_J x`` in degree ``degree``; an int ``coeffs`` means a rank one chain group."""
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        return cls(degree, {tuple(J): coeffs})

    @property
    def terms(self) -> Dict[Symbol, Tuple[int, ...]]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Symbol, Tuple[int, ...]]]:
        return iter(self._terms)

    def source_degree(self, J: Symbol) -> int:
        return self.degree - len(J)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, GammaElement) and self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        return self._hash

    def _combine(self, other: "GammaElement", sign: int) -> "GammaElement":
        if self.degree != other.degree:
            raise ValidationError(f"cannot add elements of degrees {self.degree} and {other.degree}")
        acc = dict(self._terms)
        for J, vec in other._terms:
            acc[J] = _vadd(acc.get(J), vec, sign)
        return GammaElement(self.degree, acc)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return GammaElement(self.degree, {J: tuple(-x for x in v) for J, v in self._terms})

    def __rmul__(self, k: int):
        return GammaElement(self.degree, {J: tuple(k * x for x in v) for J, v in self._terms})

    def __repr__(self):
        return f"GammaElement({self.degree}, {dict(self._terms)})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for J, vec in self._terms:
            word = "".join(f"σ{j}" for j in J)
            coeff = str(vec[0]) if len(vec) == 1 else "(" + ",".join(map(str, vec)) + ")"
            parts.append(f"{word} {coeff}" if word else coeff)
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "deg": self.degree,
            "terms": [
                {"word": list(J), "r": self.degree - len(J), "coeffs": list(vec)} for J, vec in self._terms
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GammaElement":
        try:
            n = int(data["deg"])
            terms: Dict[Symbol, Tuple[int, ...]] = {}
            for t in data.get("terms", []):
                J = tuple(int(j) for j in t["word"])
                if "r" in t and int(t["r"]) != n - len(J):
                    raise ValidationError(f"term {t!r}: r must equal deg - len(word)")
                terms[J] = _vadd(terms.get(J), tuple(int(x) for x in t["coeffs"]), 1)
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed Gamma element: {data!r}") from exc
        return cls(n, terms)


def _check_symbol(J: Symbol, n: int):
    if len(J) > n or any(not (0 <= j < n) for j in J) or any(a <= b for a, b in zip(J, J[1:])):
        raise ValidationError(f"{list(J)} is not a canonical degeneracy word into degree {n}")


def _vadd(a: Optional[Tuple[int, ...]], b: Tuple[int, ...], sign: int) -> Tuple[int, ...]:
    if a is None:
        return tuple(sign * x for x in b)
    if len(a) != len(b):
        raise ValidationError("coefficient vectors of one symbol must have equal length")
    return tuple(x + sign * y for x, y in zip(a, b))


def check_element(C: ChainComplex, x: GammaElement):
    """Raise unless every coefficient vector fits the rank of C in its source degree."""
    for J, vec in x.items():
        r = x.degree - len(J)
        if len(vec) != C.rank(r):
            raise ValidationError(
                f"symbol {list(J)} carries {len(vec)} coefficients, rank of C_{r} is {C.rank(r)}"
            )


@lru_cache(maxsize=None)
def _face_symbol(i: int, J: Symbol, n: int) -> Tuple[str, Symbol]:
    """Classify d_i sigma_J: ("deg", H), ("diff", H) for s_H d_r, or ("zero", ())."""
    r = n - len(J)
    word = ops.OperatorWord((ops.face(i),) + tuple(ops.degeneracy(j) for j in J), r)
    canon = ops.normalize(word)
    H = canon.degeneracy_indices
    faces = canon.face_indices
    if not faces:
        return ("deg", H)
    (j,) = faces
    if j == r:
        return ("diff", H)
    return ("zero", ())


@lru_cache(maxsize=None)
def _degeneracy_symbol(i: int, J: Symbol, n: int) -> Symbol:
    r = n - len(J)
    word = ops.OperatorWord((ops.degeneracy(i),) + tuple(ops.degeneracy(j) for j in J), r)
    return ops.normalize(word).degeneracy_indices


def gamma_face(C: ChainComplex, i: int, x: GammaElement) -> GammaElement:
    n = x.degree
    if n < 1 or not (0 <= i <= n):
        raise ValidationError(f"face d_{i} is not defined in degree {n}")
    acc: Dict[Symbol, Tuple[int, ...]] = {}
    for J, vec in x.items():
        kind, H = _face_symbol(i, J, n)
        if kind == "deg":
            acc[H] = _vadd(acc.get(H), vec, 1)
        elif kind == "diff":
            r = n - len(J)
            acc[H] = _vadd(acc.get(H), tuple(intlinalg.matvec(C.differential(r), vec)), 1)
    return GammaElement(n - 1, acc)


def gamma_degeneracy(C: ChainComplex, i: int, x: GammaElement) -> GammaElement:
    n = x.degree
    if not (0 <= i <= n):
        raise ValidationError(f"degeneracy s_{i} is not defined in degree {n}")
    acc: Dict[Symbol, Tuple[int, ...]] = {}
    for J, vec in x.items():
        H = _degeneracy_symbol(i, J, n)
        acc[H] = _vadd(acc.get(H), vec, 1)
    return GammaElement(n + 1, acc)


def apply_word(C: ChainComplex, w: ops.OperatorWord, x: GammaElement) -> GammaElement:
    """Apply ``w`` to ``x`` one operator at a time, rightmost first."""
    if w.source_degree != x.degree:
        raise ValidationError(f"word starts in degree {w.source_degree}, element has degree {x.degree}")
    for op in reversed(w.ops):
        x = gamma_face(C, op.index, x) if op.is_face else gamma_degeneracy(C, op.index, x)
    return x


def gamma_basis(C: ChainComplex, n: int) -> List[Tuple[Symbol, int, int]]:
    """Free basis of Gamma_n(C) as ``(J, r, generator index)`` triples."""
    if n < 0:
        raise ValidationError("degree must be nonnegative")
    basis = []
    for r in range(n, -1, -1):
        rank = C.rank(r)
        if not rank:
            continue
        for w in ops.enumerate_degeneracy_words(r, n):
            J = w.degeneracy_indices
            basis.extend((J, r, g) for g in range(rank))
    return basis


def basis_element(C: ChainComplex, n: int, entry: Tuple[Symbol, int, int]) -> GammaElement:
    J, r, g = entry
    vec = [0] * C.rank(r)
    vec[g] = 1
    return GammaElement(n, {J: vec})


def coordinates(C: ChainComplex, x: GammaElement) -> List[int]:
    index = {(J, g): k for k, (J, _, g) in enumerate(gamma_basis(C, x.degree))}
    out = [0] * len(index)
    for J, vec in x.items():
        for g, c in enumerate(vec):
            if c:
                out[index[(J, g)]] = c
    return out


def from_coordinates(C: ChainComplex, n: int, coords: Sequence[int]) -> GammaElement:
    acc: Dict[Symbol, List[int]] = {}
    for c, (J, r, g) in zip(coords, gamma_basis(C, n)):
        if c:
            acc.setdefault(J, [0] * C.rank(r))[g] = c
    return GammaElement(n, acc)


def face_matrix(C: ChainComplex, i: int, n: int) -> List[List[int]]:
    """Matrix of d_i: Gamma_n -> Gamma_{n-1} in ``gamma_basis`` coordinates."""
    cols = [coordinates(C, gamma_face(C, i, basis_element(C, n, e))) for e in gamma_basis(C, n)]
    nrows = len(gamma_basis(C, n - 1))
    return [[col[r] for col in cols] for r in range(nrows)]


def degeneracy_matrix(C: ChainComplex, i: int, n: int) -> List[List[int]]:
    cols = [coordinates(C, gamma_degeneracy(C, i, basis_element(C, n, e))) for e in gamma_basis(C, n)]
    nrows = len(gamma_basis(C, n + 1))
    return [[col[r] for col in cols] for r in range(nrows)]


def moore_basis(C: ChainComplex, n: int) -> List[GammaElement]:
    """Z-basis of the normalized chains N_n = intersection of ker d_i, i >= 1."""
    size = len(gamma_basis(C, n))
    stacked: List[List[int]] = []
    for i in range(1, n + 1):
        stacked.extend(face_matrix(C, i, n))
    kernel = intlinalg.integer_kernel(stacked, size)
    return [from_coordinates(C, n, v) for v in kernel]


def canonical_moore_basis(C: ChainComplex, n: int) -> List[GammaElement]:
    """Basis of N_n matched to the standard basis of C_n.

    Gamma_n splits as N_n plus the span of the nonempty-word symbols, so
    reading off the empty-word coefficients is an isomorphism N_n -> C_n.
    The k-th element is the preimage of e_k, scaled by (-1)^(n(n+1)/2) so
    that d_0 becomes the differential of C on the nose.
    """
    raw = moore_basis(C, n)
    if not raw:
        return []
    width = C.rank(n)
    proj = [list(x.terms.get((), (0,) * width)) for x in raw]
    sign = -1 if (n * (n + 1) // 2) % 2 else 1
    out = []
    for k in range(width):
        coeffs = intlinalg.solve_in_basis(proj, [int(i == k) for i in range(width)])
        x = GammaElement.zero(n)
        for c, b in zip(coeffs, raw):
            x = x + (sign * c) * b
        out.append(x)
    return out


def normalized_chains(C: ChainComplex, D: int) -> ChainComplex:
    """The Moore complex of Gamma(C) through degree ``D``, with differential d_0."""
    if D < 0:
        raise ValidationError("max degree must be nonnegative")
    bases = [canonical_moore_basis(C, n) for n in range(D + 1)]
    ranks = {n: len(b) for n, b in enumerate(bases)}
    diffs = {}
    for n in range(1, D + 1):
        target = [coordinates(C, y) for y in bases[n - 1]]
        cols = [intlinalg.solve_in_basis(target, coordinates(C, gamma_face(C, 0, x))) for x in bases[n]]
        diffs[n] = [[col[r] for col in cols] for r in range(len(target))]
    return ChainComplex(ranks, diffs)


def clear_caches():
    _face_symbol.cache_clear()
    _degeneracy_symbol.cache_clear()
