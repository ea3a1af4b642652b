# Copyright (C) 2023 - 2024 ANSYS, Inc. and/or its affiliates.
# SPDX-License-Identifier: MIT
#
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""
Provides exact integer and rational linear algebra.

Matrices are lists of rows. Integer routines never round; rational routines
work with :class:`fractions.Fraction`. The module also holds the ``Lattice``
class together with LLL reduction and short-vector enumeration.
"""

from __future__ import annotations

from fractions import Fraction
import logging
import math
from typing import Iterator, Optional, Sequence

from ansys.ordomax._constants import _lll_delta

logger = logging.getLogger(__name__)


def identity(n: int) -> list[list[int]]:
    """Return the ``n`` by ``n`` identity matrix."""
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence]) -> list[list]:
    """Return the transpose of ``m``."""
    return [list(col) for col in zip(*m)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    """Return the product ``a * b``."""
    cols = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def vec_mat(v: Sequence, m: Sequence[Sequence]) -> list:
    """Return the row vector ``v * m``."""
    width = len(m[0]) if m else 0
    out = [0] * width
    for coefficient, row in zip(v, m):
        if coefficient:
            for j, x in enumerate(row):
                out[j] += coefficient * x
    return out


def format_matrix(m: Sequence[Sequence]) -> str:
    """Render a matrix as one row per line of space separated entries."""
    return "\n".join(" ".join(str(x) for x in row) for row in m)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """
    Extended Euclidean algorithm.

    Returns
    -------
    tuple
        ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``x*a + y*b = g``.
    """
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _row_combine(h: list, u: Optional[list], k: int, i: int, j: int):
    """Unimodular 2x2 step on rows ``k`` and ``i`` clearing ``h[i][j]``."""
    a, b = h[k][j], h[i][j]
    if a == 0:
        h[k], h[i] = h[i], h[k]
        if u is not None:
            u[k], u[i] = u[i], u[k]
        return
    g, x, y = xgcd(a, b)
    a1, b1 = a // g, b // g
    for mat in (h, u):
        if mat is None:
            continue
        rk, ri = mat[k], mat[i]
        mat[k] = [x * p + y * q for p, q in zip(rk, ri)]
        mat[i] = [a1 * q - b1 * p for p, q in zip(rk, ri)]


def _col_combine(a: list, v: list, t: int, j: int, row: int):
    """Unimodular 2x2 step on columns ``t`` and ``j`` clearing ``a[row][j]``."""
    p, q = a[row][t], a[row][j]
    if p == 0:
        for mat in (a, v):
            for r in mat:
                r[t], r[j] = r[j], r[t]
        return
    g, x, y = xgcd(p, q)
    p1, q1 = p // g, q // g
    for mat in (a, v):
        for r in mat:
            ct, cj = r[t], r[j]
            r[t] = x * ct + y * cj
            r[j] = p1 * cj - q1 * ct


def hnf(m: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """
    Row Hermite normal form with transform.

    The result ``h`` is upper echelon with positive pivots, entries above each
    pivot reduced into ``[0, pivot)`` and zero rows last.

    Elimination is over the integers without modular reduction, since the
    transform is exact. Use :func:`lattice_hnf` when only the form is needed.

    Parameters
    ----------
    m : list of list of int
        Integer matrix.

    Returns
    -------
    tuple
        ``(h, u)`` with ``u`` unimodular and ``u * m = h``.

    Examples
    --------
    >>> hnf([[2, 4], [1, 3]])[0]
    [[1, 1], [0, 2]]
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    h = [[int(x) for x in r] for r in m]
    u = identity(rows)
    k = 0
    for j in range(cols):
        if k == rows:
            break
        for i in range(k + 1, rows):
            if h[i][j]:
                _row_combine(h, u, k, i, j)
        pivot = h[k][j]
        if pivot == 0:
            continue
        if pivot < 0:
            h[k] = [-x for x in h[k]]
            u[k] = [-x for x in u[k]]
            pivot = -pivot
        for i in range(k):
            q = h[i][j] // pivot
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[k])]
                u[i] = [x - q * y for x, y in zip(u[i], u[k])]
        k += 1
    return h, u


def hnf_rank(h: Sequence[Sequence[int]]) -> int:
    """Number of nonzero rows of an echelon matrix."""
    return sum(1 for row in h if any(row))


def hnf_mod(m: Sequence[Sequence[int]], d: int) -> list[list[int]]:
    """
    Square Hermite normal form of a lattice containing ``d * Z^n``.

    Entries stay bounded by ``d`` throughout. The caller guarantees
    ``d * Z^n`` lies in the row lattice of ``m``; the result is then the
    HNF basis of that lattice.

    Parameters
    ----------
    m : list of list of int
        Generators, one per row, each of length ``n``.
    d : int
        Nonzero multiple of the lattice determinant.

    Returns
    -------
    list of list of int
        ``n`` by ``n`` upper triangular basis.
    """
    d = abs(d)
    if d == 0:
        raise ValueError("hnf_mod requires a nonzero modulus.")
    n = len(m[0]) if m else 0
    rows = [[x % d for x in r] for r in m]
    rows += [[d if c == j else 0 for c in range(n)] for j in range(n)]
    basis = []
    for j in range(n):
        pivot = None
        rest = []
        for r in rows:
            if r[j] == 0:
                if any(r):
                    rest.append(r)
                continue
            if pivot is None:
                pivot = r
                continue
            g, x, y = xgcd(pivot[j], r[j])
            a1, b1 = pivot[j] // g, r[j] // g
            new_pivot = [x * p + y * q for p, q in zip(pivot, r)]
            other = [a1 * q - b1 * p for p, q in zip(pivot, r)]
            for c in range(j + 1, n):
                new_pivot[c] %= d
                other[c] %= d
            pivot = new_pivot
            if any(other):
                rest.append(other)
        basis.append(pivot)
        rows = rest
    for j in range(n):
        for i in range(j):
            q = basis[i][j] // basis[j][j]
            if q:
                basis[i] = [x - q * y for x, y in zip(basis[i], basis[j])]
    return basis


def snf(
    m: Sequence[Sequence[int]],
) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """
    Smith normal form with both transforms.

    Like :func:`hnf` this works on unreduced integers so the transforms are
    exact. Use :func:`elementary_divisors` when only the invariants are needed.

    Parameters
    ----------
    m : list of list of int
        Integer matrix with ``r`` rows and ``c`` columns.

    Returns
    -------
    tuple
        ``(d, u, v)`` where ``u * m * v`` is diagonal with entries ``d``,
        ``d[i]`` divides ``d[i + 1]``, entries are nonnegative and zeros
        come last.

    Examples
    --------
    >>> snf([[4, 0], [0, 6]])[0]
    [2, 12]
    """
    r = len(m)
    c = len(m[0]) if r else 0
    a = [[int(x) for x in row] for row in m]
    u = identity(r)
    v = identity(c)
    t = 0
    while t < min(r, c):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                if a[i][j] and (
                    best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])
                ):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        u[t], u[i] = u[i], u[t]
        for mat in (a, v):
            for row in mat:
                row[t], row[j] = row[j], row[t]
        while True:
            for i in range(t + 1, r):
                if a[i][t]:
                    _row_combine(a, u, t, i, t)
            for j in range(t + 1, c):
                if a[t][j]:
                    _col_combine(a, v, t, j, t)
            if any(a[i][t] for i in range(t + 1, r)):
                continue
            pivot = a[t][t]
            bad = next(
                (
                    i
                    for i in range(t + 1, r)
                    for j in range(t + 1, c)
                    if a[i][j] % pivot
                ),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            u[t] = [x + y for x, y in zip(u[t], u[bad])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    diagonal = [a[i][i] for i in range(min(r, c))]
    return diagonal, u, v


_RANK_PRIME = 2**61 - 1


def lattice_hnf(m: Sequence[Sequence[int]]) -> list[list[int]]:
    """
    Nonzero rows of the Hermite normal form of ``m``.

    When ``m`` has full column rank the form is computed by :func:`hnf_mod`
    modulo the determinant ``D`` of ``n`` independent rows, so no entry ever
    exceeds ``D``. Other inputs go through :func:`hnf`.

    Examples
    --------
    >>> lattice_hnf([[2, 4], [1, 3], [0, 6]])
    [[1, 1], [0, 2]]
    """
    rows = [[int(x) for x in r] for r in m]
    n = len(rows[0]) if rows else 0
    if n and len(rows) >= n:
        # rows independent modulo a prime are independent over Q
        _, chosen = echelon_mod(_RANK_PRIME, transpose(rows))
        if len(chosen) == n:
            d = det_int([rows[i] for i in chosen])
            logger.debug("hnf of %d rows modulo %d", len(rows), abs(d))
            return hnf_mod(rows, d)
    return [r for r in hnf(rows)[0] if any(r)]


def elementary_divisors(m: Sequence[Sequence[int]]) -> list[int]:
    """
    Smith invariants of an integer matrix, zeros last.

    A nonsingular square matrix is first put in Hermite form modulo its
    determinant, so the Smith elimination starts from entries below it.

    Examples
    --------
    >>> elementary_divisors([[4, 0], [0, 6]])
    [2, 12]
    """
    rows = [[int(x) for x in r] for r in m]
    if rows and len(rows) == len(rows[0]):
        d = det_int(rows)
        if d:
            return snf(hnf_mod(rows, d))[0]
    return snf(rows)[0]


def kernel_int(m: Sequence[Sequence[int]]) -> list[list[int]]:
    """
    Basis of the integer left kernel ``{y : y * m = 0}``.

    The rows of the HNF transform matching the zero rows of the HNF.
    """
    if not m:
        return []
    h, u = hnf(m)
    return [u[i] for i, row in enumerate(h) if not any(row)]


def solve_int_left(m: Sequence[Sequence[int]], w: Sequence[int]) -> list[int]:
    """
    Find an integer row vector ``y`` with ``y * m = w``.

    Raises
    ------
    NoSolution
        If ``w`` is not in the row lattice of ``m``.
    """
    h, u = hnf(m)
    rank = hnf_rank(h)
    rem = list(w)
    z = [0] * len(h)
    for i in range(rank):
        col = next(j for j, x in enumerate(h[i]) if x)
        q, r = divmod(rem[col], h[i][col])
        if r:
            raise NoSolution("the target is not in the row lattice")
        z[i] = q
        if q:
            rem = [x - q * y for x, y in zip(rem, h[i])]
    if any(rem):
        raise NoSolution("the target is not in the row lattice")
    return vec_mat(z, u)


def _to_field(x):
    return Fraction(x) if isinstance(x, int) else x


def det(m: Sequence[Sequence]) -> object:
    """
    Determinant over a field by Gaussian elimination.

    Integer input is promoted to ``Fraction``; any field element type with
    arithmetic and truthiness works, number field elements included.
    """
    n = len(m)
    if n == 0:
        return Fraction(1)
    a = [[_to_field(x) for x in row] for row in m]
    result = _to_field(1)
    for j in range(n):
        pivot = next((i for i in range(j, n) if a[i][j]), None)
        if pivot is None:
            return a[0][0] * 0
        if pivot != j:
            a[j], a[pivot] = a[pivot], a[j]
            result = -result
        p = a[j][j]
        result = result * p
        for i in range(j + 1, n):
            if a[i][j]:
                f = a[i][j] / p
                a[i] = [x - f * y for x, y in zip(a[i], a[j])]
    return result


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Fraction free Bareiss determinant of an integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rref(m: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over a field; returns rows and pivot columns."""
    a = [[_to_field(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    k = 0
    for j in range(cols):
        pivot = next((i for i in range(k, rows) if a[i][j]), None)
        if pivot is None:
            continue
        a[k], a[pivot] = a[pivot], a[k]
        p = a[k][j]
        a[k] = [x / p for x in a[k]]
        for i in range(rows):
            if i != k and a[i][j]:
                f = a[i][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
        pivots.append(j)
        k += 1
        if k == rows:
            break
    return a[:k], pivots


def rank(m: Sequence[Sequence]) -> int:
    """Rank over the rationals."""
    return len(rref(m)[1]) if m else 0


def kernel_rational(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of ``{x : m * x = 0}`` over the rationals."""
    cols = len(m[0]) if m else 0
    reduced, pivots = rref(m) if m else ([], [])
    free = [j for j in range(cols) if j not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * cols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def inverse(m: Sequence[Sequence]) -> list[list]:
    """Inverse of a square matrix over a field."""
    n = len(m)
    aug = [
        list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)
    ]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(reduced) < n:
        raise NoSolution("the matrix is singular")
    return [row[n:] for row in reduced]


def solve_left(m: Sequence[Sequence], b: Sequence) -> list:
    """Solve ``x * m = b`` for a square nonsingular ``m``."""
    inv = inverse(m)
    return vec_mat([_to_field(x) for x in b], inv)


def common_denominator(values) -> int:
    """Least common multiple of the denominators of ``values``."""
    den = 1
    for x in values:
        den = math.lcm(den, Fraction(x).denominator)
    return den


def lattice_sum(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of the sum of two full rank rational lattices."""
    rows = [list(r) for r in a] + [list(r) for r in b]
    den = common_denominator(x for r in rows for x in r)
    h = lattice_hnf([[int(x * den) for x in r] for r in rows])
    return [[Fraction(x, den) for x in r] for r in h]


def dual_basis(a: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of the dual of a full rank lattice under the standard pairing."""
    return transpose(inverse(a))


def lattice_intersection(
    a: Sequence[Sequence], b: Sequence[Sequence]
) -> list[list[Fraction]]:
    """Basis of the intersection of two full rank rational lattices."""
    return dual_basis(lattice_sum(dual_basis(a), dual_basis(b)))


class ModRing:
    """
    Arithmetic in ``Z/qZ``.

    Division by a non-unit raises ``ZeroDivisorFound`` carrying a proper
    divisor of ``q``, which callers use to split the modulus.

    Parameters
    ----------
    q : int
        Modulus, at least 2.
    """

    def __init__(self, q: int):
        if q < 2:
            raise ValueError(f"`{q}` is not a valid modulus.")
        self.q = q

    def reduce(self, a: int) -> int:
        """Canonical residue in ``[0, q)``."""
        return a % self.q

    def inverse(self, a: int) -> int:
        """Inverse of ``a`` modulo ``q``."""
        a %= self.q
        if a == 0:
            raise ZeroDivisionError(f"0 is not invertible modulo {self.q}.")
        g = math.gcd(a, self.q)
        if g != 1:
            raise ZeroDivisorFound(g, self.q)
        return pow(a, -1, self.q)

    def __repr__(self):
        return f"ModRing({self.q})"


def echelon_mod(
    q: int, m: Sequence[Sequence[int]], ncols: Optional[int] = None
) -> tuple[list[list[int]], list[int]]:
    """
    Reduced row echelon form over ``Z/qZ`` with unit pivots.

    Only the first ``ncols`` columns are used as pivot columns.

    Raises
    ------
    ZeroDivisorFound
        When a column has nonzero entries but none of them is a unit.
    """
    ring = ModRing(q)
    a = [[x % q for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    limit = cols if ncols is None else ncols
    pivots = []
    k = 0
    for j in range(limit):
        if k == rows:
            break
        candidates = [i for i in range(k, rows) if a[i][j]]
        if not candidates:
            continue
        unit = next((i for i in candidates if math.gcd(a[i][j], q) == 1), None)
        if unit is None:
            raise ZeroDivisorFound(math.gcd(a[candidates[0]][j], q), q)
        a[k], a[unit] = a[unit], a[k]
        inv = ring.inverse(a[k][j])
        a[k] = [x * inv % q for x in a[k]]
        for i in range(rows):
            if i != k and a[i][j]:
                f = a[i][j]
                a[i] = [(x - f * y) % q for x, y in zip(a[i], a[k])]
        pivots.append(j)
        k += 1
    return a, pivots


def kernel_mod(q: int, m: Sequence[Sequence[int]]) -> list[list[int]]:
    """
    Basis of ``{x : m * x = 0 (mod q)}`` for column vectors ``x``.

    Examples
    --------
    >>> kernel_mod(7, [[1, 2], [2, 4]])
    [[5, 1]]
    """
    cols = len(m[0]) if m else 0
    reduced, pivots = echelon_mod(q, m)
    basis = []
    for f in range(cols):
        if f in pivots:
            continue
        x = [0] * cols
        x[f] = 1
        for row, p in zip(reduced, pivots):
            x[p] = -row[f] % q
        basis.append(x)
    return basis


def left_kernel_mod(q: int, m: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of ``{y : y * m = 0 (mod q)}``."""
    if not m:
        return []
    if not m[0]:
        return [[1 if i == j else 0 for j in range(len(m))] for i in range(len(m))]
    return kernel_mod(q, transpose(m))


class ModSolution:
    """Particular solution and kernel basis of a linear system modulo ``q``."""

    def __init__(self, particular: list[int], kernel: list[list[int]]):
        self.particular = particular
        self.kernel = kernel

    def __repr__(self):
        return f"ModSolution(particular={self.particular}, kernel={self.kernel})"


def solve_mod(q: int, m: Sequence[Sequence[int]], b: Sequence[int]) -> ModSolution:
    """
    Solve ``m * x = b`` over ``Z/qZ``.

    Raises
    ------
    ZeroDivisorFound
        If elimination needs to invert a non-unit.
    NoSolution
        If the system is inconsistent.
    """
    cols = len(m[0]) if m else 0
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    reduced, pivots = echelon_mod(q, aug, ncols=cols)
    for row in reduced[len(pivots) :]:
        if row[cols] % q:
            raise NoSolution(f"the system is inconsistent modulo {q}")
    x = [0] * cols
    for row, p in zip(reduced, pivots):
        x[p] = row[cols]
    return ModSolution(x, kernel_mod(q, m))


class Lattice:
    """
    A lattice given by a basis and an optional Gram matrix.

    Without a Gram matrix the standard inner product of the ambient
    coordinates is used.

    Parameters
    ----------
    basis : list of list
        Basis vectors as rows.
    gram : list of list, optional
        Symmetric positive definite matrix of the ambient inner product.
    """

    def __init__(self, basis: Sequence[Sequence], gram: Optional[Sequence] = None):
        self._basis = tuple(tuple(row) for row in basis)
        self._gram = (
            None if gram is None else tuple(tuple(Fraction(x) for x in r) for r in gram)
        )

    @property
    def basis(self) -> tuple:
        """Basis vectors."""
        return self._basis

    @property
    def gram(self) -> Optional[tuple]:
        """Ambient Gram matrix, or None for the standard inner product."""
        return self._gram

    @property
    def rank(self) -> int:
        """Number of basis vectors."""
        return len(self._basis)

    def inner(self, x: Sequence, y: Sequence):
        """Inner product of two ambient vectors."""
        if self._gram is None:
            return sum(a * b for a, b in zip(x, y))
        return sum(
            xi * gij * yj
            for xi, row in zip(x, self._gram)
            if xi
            for gij, yj in zip(row, y)
        )

    def gram_matrix(self) -> list[list]:
        """Gram matrix of the basis."""
        return [[self.inner(x, y) for y in self._basis] for x in self._basis]

    def __eq__(self, other):
        return (
            isinstance(other, Lattice)
            and self._basis == other._basis
            and self._gram == other._gram
        )

    def __hash__(self):
        return hash(self._basis)

    def __repr__(self):
        return f"Lattice({[list(r) for r in self._basis]})"


def lll(
    basis: Sequence[Sequence], inner=None, delta: Optional[Fraction] = None
) -> tuple[list[list], list[list[int]]]:
    """
    Exact integral LLL reduction with transform.

    Parameters
    ----------
    basis : list of list
        Linearly independent vectors as rows.
    inner : callable, optional
        Inner product on the ambient space; defaults to the dot product.
    delta : Fraction, optional
        Lovasz constant in ``(1/4, 1]``.

    Returns
    -------
    tuple
        ``(reduced, t)`` with ``reduced = t * basis`` and ``t`` unimodular.

    Raises
    ------
    NotPositiveDefinite
        If a Gram-Schmidt norm is not positive.
    """
    delta = _lll_delta if delta is None else Fraction(delta)
    if inner is None:

        def inner(x, y):
            return sum(a * b for a, b in zip(x, y))

    n = len(basis)
    b = [list(v) for v in basis]
    t = identity(n)
    if n == 0:
        return b, t
    mu = [[Fraction(0)] * n for _ in range(n)]
    bb = [Fraction(0)] * n
    bb[0] = Fraction(inner(b[0], b[0]))
    if bb[0] <= 0:
        raise NotPositiveDefinite()

    def size_reduce(k, l):
        if abs(mu[k][l]) > Fraction(1, 2):
            q = math.floor(mu[k][l] + Fraction(1, 2))
            b[k] = [x - q * y for x, y in zip(b[k], b[l])]
            t[k] = [x - q * y for x, y in zip(t[k], t[l])]
            mu[k][l] -= q
            for i in range(l):
                mu[k][i] -= q * mu[l][i]

    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k):
                mu[k][j] = (
                    Fraction(inner(b[k], b[j]))
                    - sum(mu[j][i] * mu[k][i] * bb[i] for i in range(j))
                ) / bb[j]
            bb[k] = Fraction(inner(b[k], b[k])) - sum(
                mu[k][j] ** 2 * bb[j] for j in range(k)
            )
            if bb[k] <= 0:
                raise NotPositiveDefinite()
        size_reduce(k, k - 1)
        if bb[k] < (delta - mu[k][k - 1] ** 2) * bb[k - 1]:
            b[k], b[k - 1] = b[k - 1], b[k]
            t[k], t[k - 1] = t[k - 1], t[k]
            for j in range(k - 1):
                mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
            m = mu[k][k - 1]
            big = bb[k] + m * m * bb[k - 1]
            mu[k][k - 1] = m * bb[k - 1] / big
            bb[k] = bb[k - 1] * bb[k] / big
            bb[k - 1] = big
            for i in range(k + 1, kmax + 1):
                tmp = mu[i][k]
                mu[i][k] = mu[i][k - 1] - m * tmp
                mu[i][k - 1] = tmp + mu[k][k - 1] * mu[i][k]
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
    return b, t


def lll_reduce(lattice: Lattice, delta: Optional[Fraction] = None) -> Lattice:
    """
    LLL-reduce a lattice.

    Returns
    -------
    Lattice
        Same lattice and Gram matrix with a reduced basis.
    """
    reduced, _ = lll(lattice.basis, lattice.inner, delta)
    return Lattice(reduced, lattice.gram)


def _integer_range(center: Fraction, radius_sq: Fraction) -> range:
    """Integers ``x`` with ``(x - center)**2 <= radius_sq``."""
    if radius_sq < 0:
        return range(0)
    s = math.isqrt(radius_sq.numerator // radius_sq.denominator) + 1
    lo = math.floor(center - s)
    hi = math.ceil(center + s)
    while lo <= hi and (lo - center) ** 2 > radius_sq:
        lo += 1
    while hi >= lo and (hi - center) ** 2 > radius_sq:
        hi -= 1
    return range(lo, hi + 1)


def _fincke_pohst(gram: Sequence[Sequence[Fraction]], bound: Fraction) -> Iterator:
    n = len(gram)
    q = [[Fraction(x) for x in row] for row in gram]
    for i in range(n):
        if q[i][i] <= 0:
            raise NotPositiveDefinite()
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    x = [0] * n

    def walk(i, remaining):
        center = -sum(q[i][j] * x[j] for j in range(i + 1, n))
        for xi in _integer_range(center, remaining / q[i][i]):
            x[i] = xi
            left = remaining - q[i][i] * (xi - center) ** 2
            if i == 0:
                yield tuple(x)
            else:
                yield from walk(i - 1, left)
        x[i] = 0

    if n:
        yield from walk(n - 1, Fraction(bound))


def enumerate_ellipsoid(
    gram: Sequence[Sequence], bound
) -> Iterator[tuple[int, ...]]:
    """
    Enumerate integer vectors ``x`` with ``x * gram * x^T <= bound``.

    The coefficient lattice is LLL-reduced first; Fincke-Pohst then walks
    the reduced coordinates.

    Raises
    ------
    NotPositiveDefinite
        If ``gram`` is not positive definite.
    """
    n = len(gram)
    g = [[Fraction(x) for x in row] for row in gram]
    coefficient_lattice = Lattice(identity(n), g)
    reduced, _ = lll(coefficient_lattice.basis, coefficient_lattice.inner)
    reduced_gram = [[coefficient_lattice.inner(x, y) for y in reduced] for x in reduced]
    for y in _fincke_pohst(reduced_gram, Fraction(bound)):
        yield tuple(vec_mat(y, reduced))


def enumerate_box(lattice: Lattice, radii: Sequence) -> Iterator[tuple]:
    """
    Enumerate lattice vectors inside an axis aligned box.

    Parameters
    ----------
    lattice : Lattice
        Full rank lattice; its ambient coordinates are boxed.
    radii : list
        Positive half widths, one per ambient coordinate.

    Yields
    ------
    tuple
        Each vector ``v`` with ``|v_i| <= radii[i]`` exactly once.
    """
    r = [Fraction(x) for x in radii]
    if any(x <= 0 for x in r):
        raise ValueError("Box radii must be positive.")
    basis = [[Fraction(x) for x in row] for row in lattice.basis]
    gram = [
        [sum(a * b / (ri * ri) for a, b, ri in zip(x, y, r)) for y in basis]
        for x in basis
    ]
    for coefficients in enumerate_ellipsoid(gram, len(r)):
        v = vec_mat(coefficients, lattice.basis)
        if all(abs(vi) <= ri for vi, ri in zip(v, r)):
            yield tuple(v)


class NoSolution(ValueError):
    """Raised when a linear system has no solution."""

    def __init__(self, reason: str):
        super().__init__(f"No solution: {reason}.")


class NotPositiveDefinite(ValueError):
    """Raised when a quadratic form is not positive definite."""

    def __init__(self):
        super().__init__("The quadratic form is not positive definite.")


class ZeroDivisorFound(ArithmeticError):
    """
    Raised when arithmetic modulo ``q`` meets a non-unit.

    ``divisor`` is a proper nontrivial divisor of ``q``.
    """

    def __init__(self, divisor: int, modulus: int):
        self.divisor = divisor
        self.modulus = modulus
        super().__init__(f"Found the zero divisor {divisor} of {modulus}.")
