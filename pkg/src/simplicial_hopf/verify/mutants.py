"""
Negative controls: deliberately broken rules that the suites must catch.

Each mutant is a context manager that swaps one rule in place through
``unittest.mock.patch`` and flushes every memo table on entry and exit.
"""
from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable, ContextManager, Dict, List
from unittest import mock

from .. import clear_caches
from .. import gamma
from .. import loop_group as lg
from .. import operators as ops
from .. import ptcp
from .. import twisting as tw

_correct_rewrite = ops._rewrite_pair
_correct_face_generator = lg._face_generator
_correct_eta = tw.eta


def _rewrite_override(override: Callable):
    def rewrite(a, b):
        result = override(a, b)
        return _correct_rewrite(a, b) if result is NotImplemented else result
    return rewrite


def _bad_ss(a, b):
    # s_i s_j -> s_j s_i for i < j: forgets the index shift
    if not a.is_face and not b.is_face and a.index < b.index:
        return (ops.degeneracy(b.index), ops.degeneracy(a.index))
    return NotImplemented


def _bad_dd(a, b):
    if a.is_face and b.is_face and a.index > b.index:
        return (ops.face(b.index), ops.face(a.index))
    return NotImplemented


def _bad_ds_low(a, b):
    if a.is_face and not b.is_face and a.index < b.index:
        return (ops.degeneracy(b.index), ops.face(a.index))
    return NotImplemented


def _bad_cancel(a, b):
    # d_{j+1} s_j is no longer the identity
    if a.is_face and not b.is_face and a.index == b.index + 1:
        return (ops.degeneracy(b.index), ops.face(b.index))
    return NotImplemented


def _bad_ds_high(a, b):
    if a.is_face and not b.is_face and a.index > b.index + 1:
        return (ops.degeneracy(b.index), ops.face(a.index - 2))
    return NotImplemented


def _face_symbol_unnormalized(i, J, n):
    # drop sigma_i from the symbol without applying the simplicial identities
    if i in J:
        return ("deg", tuple(j for j in J if j != i))
    return ("zero", ())


def _face_generator_swapped(i, x, C):
    if i == 0:
        return lg.multiply(lg.class_of(gamma.gamma_face(C, 1, x)), lg.invert(lg.class_of(gamma.gamma_face(C, 0, x))))
    return _correct_face_generator(i, x, C)


def _face_generator_unshifted(i, x, C):
    if i > 0:
        return lg.class_of(gamma.gamma_face(C, i, x))
    return _correct_face_generator(i, x, C)


def _degeneracy_generator_unshifted(i, x, C):
    return lg.class_of(gamma.gamma_degeneracy(C, i, x))


def _class_of_keeps_s0(x):
    if x.degree < 1:
        raise ValueError("class_of needs an element of degree >= 1")
    return lg.LoopWord(x.degree - 1, ((x, 1),) if x else ())


def _eta_trivial_on_y(m, b):
    if b.cell == tw.CELL and not b.word:
        return lg.LoopWord.identity(1)
    return _correct_eta(m, b)


def _twisted_fiber_on_right(self, b, face0):
    return lg.multiply(face0, self.twist(b))


@dataclass(frozen=True)
class Mutant:
    name: str
    description: str
    patch: Callable[[], ContextManager]


@contextmanager
def _patched(target, attribute, replacement):
    clear_caches()
    try:
        with mock.patch.object(target, attribute, replacement):
            yield
    finally:
        clear_caches()


MUTANTS: List[Mutant] = [
    Mutant("rewrite-ss", "s_i s_j rewritten without the index shift",
           lambda: _patched(ops, "_rewrite_pair", _rewrite_override(_bad_ss))),
    Mutant("rewrite-dd", "d_i d_j rewritten without the index shift",
           lambda: _patched(ops, "_rewrite_pair", _rewrite_override(_bad_dd))),
    Mutant("rewrite-ds-low", "d_i s_j (i < j) keeps the degeneracy index",
           lambda: _patched(ops, "_rewrite_pair", _rewrite_override(_bad_ds_low))),
    Mutant("rewrite-cancel", "d_(j+1) s_j no longer cancels",
           lambda: _patched(ops, "_rewrite_pair", _rewrite_override(_bad_cancel))),
    Mutant("rewrite-ds-high", "d_i s_j (i > j+1) shifts the face index by two",
           lambda: _patched(ops, "_rewrite_pair", _rewrite_override(_bad_ds_high))),
    Mutant("gamma-face-unnormalized", "Gamma faces skip the canonical-form renormalization",
           lambda: _patched(gamma, "_face_symbol", _face_symbol_unnormalized)),
    Mutant("twist-d0-order", "d_0 of a loop generator multiplies its two classes in the wrong order",
           lambda: _patched(lg, "_face_generator", _face_generator_swapped)),
    Mutant("twist-di-shift", "d_i of a loop generator uses d_i instead of d_(i+1)",
           lambda: _patched(lg, "_face_generator", _face_generator_unshifted)),
    Mutant("twist-si-shift", "s_i of a loop generator uses s_i instead of s_(i+1)",
           lambda: _patched(lg, "_degeneracy_generator", _degeneracy_generator_unshifted)),
    Mutant("twist-s0-relation", "s_0-images are no longer killed in the loop group",
           lambda: _patched(lg, "class_of", _class_of_keeps_s0)),
    Mutant("eta-trivial-on-y", "eta sends the 2-cell to the identity but keeps its degeneracies",
           lambda: _patched(tw, "eta", _eta_trivial_on_y)),
    Mutant("tcp-d0-side", "the twisted d_0 multiplies eta(b) on the wrong side",
           lambda: _patched(ptcp.TwistedProduct, "_twisted_fiber", _twisted_fiber_on_right)),
]


def mutant(name: str) -> Mutant:
    for m in MUTANTS:
        if m.name == name:
            return m
    raise KeyError(name)
