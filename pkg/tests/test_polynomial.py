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

from ansys.ordomax.polynomial import (
    Poly,
    PolynomialSyntaxError,
    discriminant,
    interpolate,
    parse_poly,
    resultant,
    sturm_count,
)


def test_parse():
    assert parse_poly("x^2 - 2") == Poly([-2, 0, 1])
    assert parse_poly("  x^3 - 3*x + 1 ") == Poly([1, -3, 0, 1])
    assert parse_poly("-x^2 + 1/2*x") == Poly([0, Fraction(1, 2), -1])
    assert parse_poly("x + x") == Poly([0, 2])
    assert parse_poly("7") == Poly([7])
    assert str(parse_poly("x^3 - 3*x + 1")) == "x^3 - 3*x + 1"


@pytest.mark.parametrize(
    "text, offset",
    [("3x", 1), ("x^2 +", 5), ("", 0), ("x^", 2), ("1/0*x", 3), ("x $ 1", 2)],
)
def test_parse_errors(text, offset):
    with pytest.raises(PolynomialSyntaxError) as exc:
        parse_poly(text)
    assert exc.value.offset == offset
    assert isinstance(exc.value, ValueError)


def test_arithmetic():
    x = Poly.x()
    f = x**2 + 1
    g = x - 1
    q, r = divmod(f, g)
    assert q == x + 1 and r == 2
    assert (x**2).compose(x + 1) == x**2 + 2 * x + 1
    assert f(3) == 10
    assert f.gcd(g) == 1
    assert (f * g).gcd(f) == f
    assert Poly([Fraction(1, 2), Fraction(3, 2)]).primitive() == (
        Fraction(1, 2),
        [1, 3],
    )


def test_squarefree():
    x = Poly.x()
    f = (x - 1) ** 2 * (x + 2)
    assert not f.is_squarefree()
    assert f.squarefree_decomposition() == [(x + 2, 1), (x - 1, 2)]
    assert f.squarefree_part() == (x - 1) * (x + 2)


def test_resultant_and_discriminant():
    x = Poly.x()
    assert resultant(x**2 + 1, x - 1) == 2
    assert discriminant(x**2 + 1) == -4
    assert discriminant(x**2 - 2) == 8
    assert discriminant(x**3 - 2) == -108
    assert discriminant(x**3 - 3 * x + 1) == 81
    with pytest.raises(ValueError):
        discriminant(Poly([5]))


def test_sturm_count():
    x = Poly.x()
    assert sturm_count(x**3 - 3 * x + 1) == 3
    assert sturm_count(x**3 - 2) == 1
    assert sturm_count(x**2 + 1) == 0
    assert sturm_count(x**4 - 10 * x**2 + 1) == 4


def test_interpolate():
    assert interpolate([0, 1, 2], [1, 2, 5]) == Poly([1, 0, 1])
    assert interpolate([5], [3]) == Poly([3])
