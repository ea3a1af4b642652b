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

import pytest

from ansys.ordomax.number_field import (
    NotAField,
    NotARing,
    Reducible,
    charpoly,
    field_from_poly,
    homs,
    primitive_element,
    rationals,
    validate_field,
)
from ansys.ordomax.polynomial import Poly, parse_poly

GAUSSIAN_TABLE = [
    [[1, 0], [0, 1]],
    [[0, 1], [-1, 0]],
]


def test_arithmetic():
    K = field_from_poly("x^2 + 1")
    i = K.gen
    assert i * i == -1
    assert (1 + i) * (1 - i) == 2
    assert (1 + i).norm() == 2
    assert (1 + i).trace() == 2
    assert (1 + i) ** -1 == (1 - i) / 2
    assert 1 / (1 + i) == (1 + i).inverse()
    assert K.from_poly(Poly([0, 0, 1])) == -1
    assert (3 * i + 2).to_poly() == Poly([2, 3])
    with pytest.raises(ZeroDivisionError):
        K.zero.inverse()
    with pytest.raises(ZeroDivisionError):
        i / 0


def test_min_poly_and_integrality():
    K = field_from_poly("x^2 + 1")
    i = K.gen
    assert i.min_poly() == parse_poly("x^2 + 1")
    assert K.scalar(3).min_poly() == parse_poly("x - 3")
    assert (1 + i).charpoly() == parse_poly("x^2 - 2*x + 2")
    assert i.is_integral()
    assert not (i / 2).is_integral()

    L = field_from_poly("x^3 - 2")
    cube = L.gen
    assert (cube**2).min_poly() == parse_poly("x^3 - 4")
    assert (cube**3) == 2


def test_charpoly():
    assert charpoly([[0, 1], [-1, 0]]) == parse_poly("x^2 + 1")
    assert charpoly([[2, 0], [0, 3]]) == parse_poly("x^2 - 5*x + 6")


def test_signature():
    assert field_from_poly("x^2 + 1").signature() == (0, 1)
    assert field_from_poly("x^2 - 2").signature() == (2, 0)
    assert field_from_poly("x^3 - 2").signature() == (1, 1)
    assert field_from_poly("x^4 + 1").signature() == (0, 2)
    assert field_from_poly("x^3 - 3*x + 1").signature() == (3, 0)
    assert rationals().signature() == (1, 0)


def test_field_from_poly_checks():
    with pytest.raises(Reducible) as exc:
        field_from_poly("x^2 - 1")
    assert exc.value.factor.degree() == 1
    with pytest.raises(ValueError):
        field_from_poly("5")
    K = field_from_poly("2*x^2 + 4")
    assert K.defining_poly == parse_poly("x^2 + 2")


def test_validate_field():
    K = validate_field(2, GAUSSIAN_TABLE)
    assert K.degree == 2
    assert K.defining_poly == parse_poly("x^2 + 1")
    assert K.gen * K.gen == -1
    assert K.signature() == (0, 1)


def test_validate_field_not_a_ring():
    table = [
        [[0, 1], [0, 1]],
        [[0, 1], [-1, 0]],
    ]
    with pytest.raises(NotARing) as exc:
        validate_field(2, table)
    assert exc.value.indices == (0, 0)

    unit = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    table = [
        unit,
        [[0, 1, 0], [0, 0, 0], [0, 0, 0]],
        [[0, 0, 1], [1, 0, 0], [0, 0, 0]],
    ]
    with pytest.raises(NotARing) as exc:
        validate_field(3, table)
    assert exc.value.indices == (1, 2)

    with pytest.raises(NotARing):
        validate_field(2, [[[1, 0]]])


def test_validate_field_not_a_field():
    # Q[x]/(x^2): nilpotent generator
    table = [
        [[1, 0], [0, 1]],
        [[0, 1], [0, 0]],
    ]
    with pytest.raises(NotAField) as exc:
        validate_field(2, table)
    assert exc.value.zero_divisor == (0, 1)

    # Q[x]/(x^2 - x) is Q x Q
    table = [
        [[1, 0], [0, 1]],
        [[0, 1], [0, 1]],
    ]
    with pytest.raises(NotAField) as exc:
        validate_field(2, table)
    assert exc.value.zero_divisor == (Fraction(-1), Fraction(1))


def test_primitive_element():
    K = field_from_poly("x^3 - 2")
    theta = primitive_element(K)
    assert theta.min_poly().degree() == 3


def test_homs():
    K = field_from_poly("x^2 - 2")
    maps = homs(K, K)
    assert len(maps) == 2
    assert {phi(K.gen) for phi in maps} == {K.gen, -K.gen}
    for phi in maps:
        assert phi.is_isomorphism()
        assert phi(K.gen) ** 2 == 2
        assert phi.compose(phi)(K.gen) == K.gen

    assert homs(field_from_poly("x^2 + 1"), K) == []

    L = field_from_poly("x^4 + 1")
    G = field_from_poly("x^2 + 1")
    maps = homs(G, L)
    assert len(maps) == 2
    assert all(phi(G.gen) ** 2 == -1 for phi in maps)
    assert not maps[0].is_isomorphism()

    C = field_from_poly("x^3 - 2")
    assert len(homs(C, C)) == 1
