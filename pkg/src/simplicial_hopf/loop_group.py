"""
Kan's loop group G(K) for K = Gamma(C).

G_n(K) is the free group on the elements of K_{n+1}, with the images of s_0
set to the identity.  A generator is therefore any element of Gamma_{n+1}(C)
that is not an s_0-image; ``zeta(x)`` in the docs below is its class.
Faces and degeneracies act on generators by

    d_0 zeta(x) = zeta(d_0 x)^-1 zeta(d_1 x)
    d_i zeta(x) = zeta(d_{i+1} x)      (i > 0)
    s_i zeta(x) = zeta(s_{i+1} x)

and extend to words as homomorphisms.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import gamma
from .exceptions import CompatibilityError, ValidationError, VerificationError
from .gamma import ChainComplex, GammaElement, Z2

Factor = Tuple[GammaElement, int]


@dataclass(frozen=True)
class LoopWord:
    """A reduced word in G_n. The empty word is the identity."""

    degree: int
    factors: Tuple[Factor, ...] = ()

    def __post_init__(self):
        factors = tuple((x, int(e)) for x, e in self.factors)
        object.__setattr__(self, "factors", factors)
        if self.degree < 0:
            raise ValidationError("loop words live in degrees >= 0")
        prev = None
        for x, e in factors:
            if x.degree != self.degree + 1:
                raise ValidationError(
                    f"generator of G_{self.degree} must have degree {self.degree + 1}, got {x.degree}"
                )
            if e == 0:
                raise ValidationError("exponents of a reduced word are nonzero")
            if x == prev:
                raise ValidationError("adjacent factors of a reduced word must differ")
            prev = x

    @classmethod
    def identity(cls, degree: int) -> "LoopWord":
        return cls(degree)

    @classmethod
    def generator(cls, x: GammaElement, exponent: int = 1) -> "LoopWord":
        """The word ``zeta(x)^exponent``; raises if ``x`` is an s_0-image."""
        if is_s0_image(x):
            raise ValidationError(f"{x} is an s_0-image and denotes the identity")
        return cls(x.degree - 1, ((x, exponent),) if exponent else ())

    @property
    def is_identity(self) -> bool:
        return not self.factors

    def __len__(self):
        return len(self.factors)

    def __mul__(self, other: "LoopWord") -> "LoopWord":
        return multiply(self, other)

    def __invert__(self) -> "LoopWord":
        return invert(self)

    def __pow__(self, k: int) -> "LoopWord":
        return power(self, k)

    def __str__(self):
        if not self.factors:
            return "e"
        return " · ".join(f"ζ({x})" + (f"^{e}" if e != 1 else "") for x, e in self.factors)

    def to_json(self) -> dict:
        return {"deg": self.degree, "factors": [{"gen": x.to_json(), "exp": e} for x, e in self.factors]}

    @classmethod
    def from_json(cls, data: dict) -> "LoopWord":
        try:
            n = int(data["deg"])
            word = cls.identity(n)
            for f in data.get("factors", []):
                x = GammaElement.from_json(f["gen"])
                if x.degree != n + 1:
                    raise ValidationError(f"generator degree {x.degree} does not match G_{n}")
                word = multiply(word, power(cls.generator(x), int(f["exp"])))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed loop word: {data!r}") from exc
        return word


def s0_preimage(x: GammaElement) -> Optional[GammaElement]:
    """The ``y`` with ``s_0 y == x``, or None if ``x`` is not an s_0-image.

    s_0 sends the symbol sigma_J bijectively to the symbol whose index tuple is
    ``J`` shifted up by one followed by 0, so the candidate is read off the
    support and then checked.
    """
    if x.degree < 1:
        return None
    pre = {}
    for J, vec in x.items():
        if not J or J[-1] != 0:
            return None
        pre[tuple(j - 1 for j in J[:-1])] = vec
    y = GammaElement(x.degree - 1, pre)
    if gamma.gamma_degeneracy(Z2, 0, y) != x:
        return None
    return y


def is_s0_image(x: GammaElement) -> bool:
    return s0_preimage(x) is not None


def class_of(x: GammaElement) -> LoopWord:
    """The class of ``x`` in G_{n-1}: e for s_0-images (including 0)."""
    if x.degree < 1:
        raise ValidationError("class_of needs an element of degree >= 1")
    if is_s0_image(x):
        return LoopWord(x.degree - 1)
    return LoopWord(x.degree - 1, ((x, 1),))


def _push(stack: List[List], x: GammaElement, e: int):
    if stack and stack[-1][0] == x:
        stack[-1][1] += e
        if stack[-1][1] == 0:
            stack.pop()
    elif e:
        stack.append([x, e])


def multiply(u: LoopWord, v: LoopWord) -> LoopWord:
    if u.degree != v.degree:
        raise ValidationError(f"cannot multiply words of degrees {u.degree} and {v.degree}")
    if not u.factors:
        return v
    if not v.factors:
        return u
    stack = [list(f) for f in u.factors]
    for x, e in v.factors:
        _push(stack, x, e)
    return LoopWord(u.degree, tuple((x, e) for x, e in stack))


def product(words: Sequence[LoopWord], degree: int) -> LoopWord:
    stack: List[List] = []
    for w in words:
        if w.degree != degree:
            raise ValidationError(f"cannot multiply words of degrees {w.degree} and {degree}")
        for x, e in w.factors:
            _push(stack, x, e)
    return LoopWord(degree, tuple((x, e) for x, e in stack))


def invert(u: LoopWord) -> LoopWord:
    return LoopWord(u.degree, tuple((x, -e) for x, e in reversed(u.factors)))


def power(u: LoopWord, k: int) -> LoopWord:
    if k < 0:
        return power(invert(u), -k)
    if not u.factors or k == 1:
        return u
    if len(u.factors) == 1:
        x, e = u.factors[0]
        return LoopWord(u.degree, ((x, e * k),) if k else ())
    return product([u] * k, u.degree)


def _face_generator(i: int, x: GammaElement, C: ChainComplex) -> LoopWord:
    if i == 0:
        return multiply(invert(class_of(gamma.gamma_face(C, 0, x))), class_of(gamma.gamma_face(C, 1, x)))
    return class_of(gamma.gamma_face(C, i + 1, x))


def _degeneracy_generator(i: int, x: GammaElement, C: ChainComplex) -> LoopWord:
    return class_of(gamma.gamma_degeneracy(C, i + 1, x))


@lru_cache(maxsize=1 << 16)
def _cached_face(i, x, C):
    return _face_generator(i, x, C)


@lru_cache(maxsize=1 << 16)
def _cached_degeneracy(i, x, C):
    return _degeneracy_generator(i, x, C)


def loop_face(i: int, w: LoopWord, complex: ChainComplex = Z2) -> LoopWord:
    n = w.degree
    if n < 1 or not (0 <= i <= n):
        raise ValidationError(f"face d_{i} is not defined on G_{n}")
    return product([power(_cached_face(i, x, complex), e) for x, e in w.factors], n - 1)


def loop_degeneracy(i: int, w: LoopWord, complex: ChainComplex = Z2) -> LoopWord:
    n = w.degree
    if not (0 <= i <= n):
        raise ValidationError(f"degeneracy s_{i} is not defined on G_{n}")
    return product([power(_cached_degeneracy(i, x, complex), e) for x, e in w.factors], n + 1)


def check_horn(n: int, k: int, faces: Mapping[int, LoopWord], complex: ChainComplex = Z2):
    """Raise unless ``faces`` is a compatible horn Lambda^n_k in G."""
    if n < 1 or not (0 <= k <= n):
        raise ValidationError(f"no horn Lambda^{n}_{k}")
    expected = set(range(n + 1)) - {k}
    if set(faces) != expected:
        raise ValidationError(f"horn Lambda^{n}_{k} needs faces {sorted(expected)}, got {sorted(faces)}")
    for i, f in faces.items():
        if f.degree != n - 1:
            raise ValidationError(f"face {i} has degree {f.degree}, expected {n - 1}")
    if n < 2:
        return
    idx = sorted(faces)
    for a, i in enumerate(idx):
        for j in idx[a + 1 :]:
            if loop_face(i, faces[j], complex) != loop_face(j - 1, faces[i], complex):
                raise CompatibilityError(f"faces {i} and {j} are incompatible: d_{i} y_{j} != d_{j - 1} y_{i}", (i, j))


def fill_horn(n: int, k: int, faces: Mapping[int, LoopWord], complex: ChainComplex = Z2) -> LoopWord:
    """Fill a compatible horn in G by degeneracy correction.

    Sweep i = 0..k-1 with w <- w s_i(d_i(w)^-1 y_i), then i = n..k+1 with
    w <- w s_{i-1}(d_i(w)^-1 y_i).  The result is checked face by face.
    """
    faces = {int(i): f for i, f in faces.items()}
    check_horn(n, k, faces, complex)
    w = LoopWord.identity(n)
    for i in range(k):
        gap = multiply(invert(loop_face(i, w, complex)), faces[i])
        w = multiply(w, loop_degeneracy(i, gap, complex))
    for i in range(n, k, -1):
        gap = multiply(invert(loop_face(i, w, complex)), faces[i])
        w = multiply(w, loop_degeneracy(i - 1, gap, complex))
    for i, f in faces.items():
        if loop_face(i, w, complex) != f:
            raise VerificationError(f"horn filler fails face {i}: got {loop_face(i, w, complex)}, wanted {f}")
    return w


def is_moore_cycle(g: LoopWord, complex: ChainComplex = Z2) -> bool:
    """True when d_i g = e for every i >= 1."""
    return all(loop_face(i, g, complex).is_identity for i in range(1, g.degree + 1))


def degree_invariant(w: LoopWord) -> int:
    """The homomorphism G_1(Gamma Z(2)) -> Z sending the class of m to m."""
    if w.degree != 1:
        raise ValidationError(f"degree invariant is defined on G_1, got a word in G_{w.degree}")
    total = 0
    for x, e in w.factors:
        terms = x.terms
        if set(terms) != {()} or len(terms[()]) != 1:
            raise ValidationError(f"{x} is not a multiple of the generator of Gamma_2 Z(2)")
        total += e * terms[()][0]
    return total


def single_symbol_generators(n: int, complex: ChainComplex = Z2) -> List[Tuple[int, ...]]:
    """Basis symbols of Gamma_{n+1} whose classes are nontrivial in G_n."""
    out = []
    for entry in gamma.gamma_basis(complex, n + 1):
        if not is_s0_image(gamma.basis_element(complex, n + 1, entry)):
            out.append(entry[0])
    return out


def clear_caches():
    _cached_face.cache_clear()
    _cached_degeneracy.cache_clear()
