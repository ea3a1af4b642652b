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

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest
from util.oracles import lattice_points

from ansys.ordomax import linalg
from ansys.ordomax.linalg import (
    Lattice,
    ModRing,
    NoSolution,
    NotPositiveDefinite,
    ZeroDivisorFound,
    det,
    det_int,
    echelon_mod,
    elementary_divisors,
    enumerate_box,
    enumerate_ellipsoid,
    hnf,
    hnf_mod,
    hnf_rank,
    inverse,
    kernel_int,
    kernel_mod,
    lattice_hnf,
    lattice_sum,
    lll,
    lll_reduce,
    mat_mul,
    snf,
    solve_int_left,
    solve_mod,
    vec_mat,
)

WIKI = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]

small_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda cols: st.lists(
        st.lists(
            st.integers(min_value=-20, max_value=20), min_size=cols, max_size=cols
        ),
        min_size=1,
        max_size=4,
    )
)


def _is_echelon(h):
    last = -1
    seen_zero = False
    for row in h:
        if not any(row):
            seen_zero = True
            continue
        assert not seen_zero
        col = next(j for j, x in enumerate(row) if x)
        assert col > last and row[col] > 0
        last = col
    return True


def test_hnf_example():
    h, u = hnf([[2, 4], [1, 3]])
    assert h == [[1, 1], [0, 2]]
    assert mat_mul(u, [[2, 4], [1, 3]]) == h
    assert abs(det_int(u)) == 1


@settings(max_examples=60, deadline=None, derandomize=True)
@given(small_matrices)
def test_hnf_properties(m):
    h, u = hnf(m)
    assert mat_mul(u, m) == h
    assert abs(det_int(u)) == 1
    assert _is_echelon(h)
    for i, row in enumerate(h[: hnf_rank(h)]):
        col = next(j for j, x in enumerate(row) if x)
        assert all(0 <= h[k][col] < row[col] for k in range(i))


def test_hnf_mod_matches_hnf():
    m = [[2, 4], [1, 3]]
    assert hnf_mod(m, 2) == [[1, 1], [0, 2]]
    with pytest.raises(ValueError):
        hnf_mod(m, 0)


def test_snf():
    d, u, v = snf(WIKI)
    assert d == [2, 6, 12]
    assert mat_mul(mat_mul(u, WIKI), v) == [
        [d[i] if i == j else 0 for j in range(3)] for i in range(3)
    ]
    assert snf([[4, 0], [0, 6]])[0] == [2, 12]
    assert snf([[0, 0], [0, 0]])[0] == [0, 0]
    assert abs(det_int(WIKI)) == 144


@settings(max_examples=60, deadline=None, derandomize=True)
@given(small_matrices)
def test_lattice_hnf_matches_hnf(m):
    h, _ = hnf(m)
    reduced = lattice_hnf(m)
    assert reduced == [r for r in h if any(r)]
    if len(reduced) == len(m[0]):
        d = abs(det_int(reduced))
        assert all(0 <= x <= d for r in reduced for x in r)


def test_lattice_hnf_reduces_modulo_determinant(mocker):
    big = 10**30
    m = [[big + 1, 7, 3], [2, big, 5], [1, 1, 1], [4, 9, big - 3]]
    spy = mocker.spy(linalg, "hnf_mod")
    reduced = lattice_hnf(m)
    assert spy.call_count == 1
    assert reduced == [r for r in hnf(m)[0] if any(r)]
    assert lattice_hnf([[1, 2], [2, 4]]) == [[1, 2]]
    assert spy.call_count == 1


def test_elementary_divisors():
    assert elementary_divisors(WIKI) == [2, 6, 12]
    assert elementary_divisors([[4, 0], [0, 6]]) == [2, 12]
    assert elementary_divisors([[0, 0], [0, 0]]) == [0, 0]
    wide = [[2, 4, 4], [-6, 6, 12]]
    assert elementary_divisors(wide) == snf(wide)[0]
    big = [[10**20, 3], [7, 10**20 + 1]]
    assert elementary_divisors(big) == [1, abs(det_int(big))]


def test_kernel_and_solve():
    m = [[1, 2], [2, 4], [3, 6]]
    kernel = kernel_int(m)
    assert len(kernel) == 2
    for y in kernel:
        assert vec_mat(y, m) == [0, 0]

    assert solve_int_left([[2, 0], [0, 3]], [4, 9]) == [2, 3]
    with pytest.raises(NoSolution):
        solve_int_left([[2, 0], [0, 3]], [1, 0])


def test_rational_helpers():
    assert det([[1, 2], [3, 4]]) == -2
    assert inverse([[2, 0], [0, 4]]) == [[Fraction(1, 2), 0], [0, Fraction(1, 4)]]
    with pytest.raises(NoSolution):
        inverse([[1, 2], [2, 4]])
    assert lattice_sum([[2, 0], [0, 2]], [[1, 1], [0, 2]]) == [[1, 1], [0, 2]]


def test_lll():
    basis = [[1, 1, 1], [-1, 0, 2], [3, 5, 6]]
    reduced, t = lll(basis)
    assert mat_mul(t, basis) == reduced
    assert abs(det_int(t)) == 1
    assert sum(x * x for x in reduced[0]) <= 4
    assert abs(det_int(reduced)) == 3

    lattice = lll_reduce(Lattice(basis))
    assert lattice.rank == 3
    assert lattice.basis == tuple(tuple(r) for r in reduced)

    with pytest.raises(NotPositiveDefinite):
        lll([[1, 0], [2, 0]])


def test_enumerate_ellipsoid_against_brute_force():
    gram = [[2, 1], [1, 3]]
    points = list(enumerate_ellipsoid(gram, 6))
    assert len(points) == len(set(points))
    assert set(points) == lattice_points(gram, 6, 3)

    gram = [[3, 1, 0], [1, 2, 1], [0, 1, 4]]
    assert set(enumerate_ellipsoid(gram, 5)) == lattice_points(gram, 5, 3)

    with pytest.raises(NotPositiveDefinite):
        list(enumerate_ellipsoid([[1, 2], [2, 1]], 3))


def test_enumerate_box():
    found = list(enumerate_box(Lattice([[1, 1], [0, 2]]), [2, 2]))
    assert len(found) == 13
    assert all(abs(a) <= 2 and abs(b) <= 2 and (a - b) % 2 == 0 for a, b in found)
    with pytest.raises(ValueError):
        list(enumerate_box(Lattice([[1]]), [0]))


def test_modular_arithmetic():
    with pytest.raises(ZeroDivisorFound) as exc:
        echelon_mod(6, [[2], [4]])
    assert exc.value.divisor == 2 and exc.value.modulus == 6

    with pytest.raises(ZeroDivisorFound) as exc:
        ModRing(6).inverse(3)
    assert exc.value.divisor == 3
    assert ModRing(7).inverse(3) == 5

    assert kernel_mod(7, [[1, 2], [2, 4]]) == [[5, 1]]

    m, b = [[1, 2], [3, 4]], [5, 6]
    solution = solve_mod(7, m, b)
    x = solution.particular
    assert [sum(a * c for a, c in zip(row, x)) % 7 for row in m] == b
    assert solution.kernel == []

    with pytest.raises(NoSolution):
        solve_mod(7, [[1, 1], [1, 1]], [0, 1])
