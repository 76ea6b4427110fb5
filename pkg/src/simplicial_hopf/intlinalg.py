"""Exact integer linear algebra on lists of lists. No floating point."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

Matrix = List[List[int]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], inner: int, cols: int) -> Matrix:
    # inner and cols are explicit because empty matrices lose their shape
    return [[sum(row[k] * b[k][c] for k in range(inner)) for c in range(cols)] for row in a]


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def is_zero(a: Sequence[Sequence[int]]) -> bool:
    return all(x == 0 for row in a for x in row)


def integer_kernel(a: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Z-basis of ``{v in Z^ncols : a v = 0}``, one basis vector per entry.

    Row-reduce ``[a^T | I]`` with unimodular integer row operations; rows whose
    left block vanishes carry a basis of the kernel lattice.
    """
    m = len(a)
    rows = [[a[r][c] for r in range(m)] + [int(c == k) for k in range(ncols)] for c in range(ncols)]
    pivot = 0
    for col in range(m):
        while pivot < ncols:
            live = [r for r in range(pivot, ncols) if rows[r][col] != 0]
            if not live:
                break
            best = min(live, key=lambda r: abs(rows[r][col]))
            rows[pivot], rows[best] = rows[best], rows[pivot]
            p = rows[pivot][col]
            clean = True
            for r in range(pivot + 1, ncols):
                if rows[r][col]:
                    q = rows[r][col] // p
                    rows[r] = [x - q * y for x, y in zip(rows[r], rows[pivot])]
                    if rows[r][col]:
                        clean = False
            if clean:
                pivot += 1
                break
    return [row[m:] for row in rows[pivot:]]


def solve_in_basis(basis: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    """Integer coefficients ``c`` with ``sum(c[k] * basis[k]) == v``.

    ``basis`` must be linearly independent. Raises ValueError if ``v`` is not
    an integer combination.
    """
    k = len(basis)
    length = len(v)
    if k == 0:
        if any(v):
            raise ValueError("nonzero vector is not in the span of an empty basis")
        return []
    # columns of the system are the basis vectors
    aug = [[Fraction(basis[c][r]) for c in range(k)] + [Fraction(v[r])] for r in range(length)]
    where = []
    row = 0
    for col in range(k):
        sel = next((r for r in range(row, length) if aug[r][col] != 0), None)
        if sel is None:
            raise ValueError("basis vectors are linearly dependent")
        aug[row], aug[sel] = aug[sel], aug[row]
        piv = aug[row][col]
        aug[row] = [x / piv for x in aug[row]]
        for r in range(length):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        where.append(row)
        row += 1
    if any(aug[r][k] != 0 for r in range(row, length)):
        raise ValueError("vector is not in the span of the basis")
    coeffs = [aug[where[c]][k] for c in range(k)]
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("vector is a rational but not an integer combination")
    return [int(c) for c in coeffs]


def smith_invariants(a: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero diagonal entries of the Smith normal form of ``a``, ascending."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(m[r][c]), r, c) for r in range(t, rows) for c in range(t, cols) if m[r][c]]
        if not nz:
            break
        _, r0, c0 = min(nz)
        m[t], m[r0] = m[r0], m[t]
        for row in m:
            row[t], row[c0] = row[c0], row[t]
        while True:
            p = m[t][t]
            done = True
            for r in range(t + 1, rows):
                if m[r][t]:
                    q = m[r][t] // p
                    m[r] = [x - q * y for x, y in zip(m[r], m[t])]
                    if m[r][t]:
                        done = False
            for c in range(t + 1, cols):
                if m[t][c]:
                    q = m[t][c] // p
                    for row in m:
                        row[c] -= q * row[t]
                    if m[t][c]:
                        done = False
            if not done:
                nz = [(abs(m[r][c]), r, c) for r in range(t, rows) for c in range(t, cols)
                      if m[r][c] and (r == t or c == t)]
                _, r0, c0 = min(nz)
                m[t], m[r0] = m[r0], m[t]
                for row in m:
                    row[t], row[c0] = row[c0], row[t]
                continue
            # the pivot must divide the rest of the block
            bad = next(((r, c) for r in range(t + 1, rows) for c in range(t + 1, cols)
                        if m[r][c] % p), None)
            if bad is None:
                break
            m[t] = [x + y for x, y in zip(m[t], m[bad[0]])]
        diag.append(abs(m[t][t]))
        t += 1
    return diag
