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

import math

import pytest
from sympy import galois_group, isprime, symbols, sympify

from ansys.ordomax.factorization import factor_q
from ansys.ordomax.galois import (
    TowerBudgetExceeded,
    automorphisms,
    frobenius_certificate,
    galois_bounded,
    is_abelian,
    is_solvable,
    palfy_bound,
    poly_disc,
    sn_an_test,
    splitting_tower,
)
from ansys.ordomax.number_field import Reducible, field_from_poly
from ansys.ordomax.polynomial import parse_poly


def test_poly_disc():
    assert poly_disc("x^3 - x - 1") == -23
    assert poly_disc("x^2 + 1") == -4
    assert poly_disc("x^2 - 1/4") == 1
    with pytest.raises(ValueError):
        poly_disc("3")


def test_splitting_tower():
    tower = splitting_tower("x^3 - 2")
    assert tower.degree == 6
    assert tower.degrees == [3, 2]
    assert len(tower.roots) == 3
    assert all(r**3 == 2 for r in tower.roots)

    tower = splitting_tower("x^2 - 2")
    assert automorphisms(tower) == [(0, 1), (1, 0)]

    with pytest.raises(TowerBudgetExceeded) as exc:
        splitting_tower("x^3 - 2", budget=3)
    assert exc.value.degree == 6


@pytest.mark.parametrize(
    "poly, order, abelian",
    [
        ("x - 1", 1, True),
        ("x^2 + 1", 2, True),
        ("x^3 - 2", 6, False),
        ("x^3 - 3*x + 1", 3, True),
        ("x^4 + 1", 4, True),
        ("x^4 - 2", 8, False),
        ("x^4 - x^2 - 2", 4, True),
    ],
)
def test_galois_bounded(poly, order, abelian):
    result = galois_bounded(poly)
    assert result.order == order
    assert len(result.elements) == order
    assert result.abelian is abelian
    assert result.solvable is True
    assert result.group.order() == order
    assert not result.exceeds_budget


def test_galois_flags():
    result = galois_bounded("x^3 - 2", 6)
    assert result.is_sn is True and result.is_an is False
    assert result.prime_divisors == [2, 3]

    result = galois_bounded("x^3 - 3*x + 1")
    assert result.is_an is True and result.is_sn is False

    out = galois_bounded("x^2 + 1").to_json()
    assert out["order"] == 2
    assert out["generators"] == [[[1, 2]]]
    assert out["abelian"] == "yes"
    assert out["prime_divisors"] == [2]


def test_galois_budget_exceeded():
    result = galois_bounded("x^5 - x - 1", 10)
    assert result.exceeds_budget
    assert result.order is None
    assert result.abelian is False
    assert result.solvable is False
    assert result.is_sn is True
    out = result.to_json()
    assert out["order"] == "exceeds budget 10"
    assert out["generators"] == []


def test_galois_over_number_field():
    K = field_from_poly("x^2 + 1")
    assert galois_bounded("x^2 + 1", field=K).order == 1
    result = galois_bounded("x^4 - 2", field=K)
    assert result.order == 4
    assert result.abelian is True


def test_is_abelian():
    assert is_abelian("x^3 - 2").abelian is False
    assert is_abelian("x^4 + 1").abelian is True
    result = is_abelian("x^4 - x^2 - 2")
    assert result.abelian is True and result.method == "factors"
    assert is_abelian("x^5 - x - 1").abelian is False


def test_is_solvable():
    assert is_solvable("x^5 - x - 1").solvable is False
    assert is_solvable("x^4 - 2").solvable is True


@pytest.mark.slow
def test_is_solvable_metacyclic_quintic():
    result = is_solvable("x^5 - 2")
    assert result.solvable is True
    assert result.order == 20


def test_sn_an_test():
    result = sn_an_test("x^5 - x - 1")
    assert result.is_sn is True and result.order == 120
    assert result.method == "frobenius"

    result = sn_an_test("x^3 - 3*x + 1")
    assert result.is_an is True and result.order == 3

    assert sn_an_test("x^4 + 1").is_sn is False

    with pytest.raises(Reducible):
        sn_an_test("x^2 - 1")


def test_frobenius_certificate():
    certificate = frobenius_certificate("x^5 - x - 1")
    assert certificate.contains_alternating
    assert certificate.symmetric
    assert certificate.order_lower_bound % 5 == 0

    certificate = frobenius_certificate("x^4 + 1")
    assert certificate.cycle_types <= {(1, 1, 1, 1), (2, 2)}
    assert not certificate.contains_alternating


def test_palfy_bound():
    assert palfy_bound(5) >= 20
    assert palfy_bound(9) > palfy_bound(8)


def _sympy_group(text):
    group, _ = galois_group(sympify(text.replace("^", "**")), symbols("x"))
    return group


@pytest.mark.slow
@pytest.mark.parametrize("text", ["x^6 + x^2 + 1", "x^6 - 2", "x^6 + 3", "x^6 + x + 1"])
def test_is_solvable_sextics(text):
    result = is_solvable(text)
    assert result.solvable is _sympy_group(text).is_solvable


def test_is_solvable_through_subfields():
    # The root field has a cubic subfield and both steps are small.
    result = is_solvable("x^6 + x^2 + 1")
    assert result.solvable is True
    assert result.method == "chain"
    assert result.order is None


def test_is_solvable_reducible():
    f = parse_poly("x^2 - 2") * parse_poly("x^5 - x - 1")
    result = is_solvable(f)
    assert result.method == "factors"
    assert result.solvable is False


@pytest.mark.slow
def test_galois_bounded_sextic():
    result = galois_bounded("x^6 - 2", 24)
    assert result.order == 12
    assert result.order == _sympy_group("x^6 - 2").order()
    assert result.abelian is False
    assert result.solvable is True


def _composition_solvable(group):
    series = group.composition_series()
    return all(
        isprime(series[i].order() // series[i + 1].order())
        for i in range(len(series) - 1)
    )


GALOIS_SUITE = [
    ("x^2 - 2", 2),
    ("x^2 + 3", 2),
    ("x^3 - 2", 6),
    ("x^3 - 3*x + 1", 3),
    ("x^3 - x - 1", 6),
    ("x^3 + x^2 - 2*x - 1", 3),
    ("x^4 + 1", 4),
    ("x^4 - 2", 8),
    ("x^4 - x^2 - 2", 4),
    ("x^4 + x^3 + x^2 + x + 1", 4),
    ("x^4 - 10*x^2 + 1", 4),
    ("x^4 - 5", 8),
    ("x^5 - 5*x + 12", 10),
    ("x^5 + x^4 - 4*x^3 - 3*x^2 + 3*x + 1", 5),
    ("x^5 - x - 1", None),
]


@pytest.mark.slow
@pytest.mark.parametrize("text, order", GALOIS_SUITE)
def test_galois_suite(text, order):
    f = parse_poly(text)
    n = f.degree()
    _, parts = factor_q(f)
    result = galois_bounded(text, 24)
    assert result.order == order
    solvable = is_solvable(text).solvable
    abelian = is_abelian(text).abelian
    if order is None:
        assert result.exceeds_budget
        assert result.solvable is solvable is False
        assert abelian is False
    else:
        assert splitting_tower(text).degree == order
        group = result.group
        assert group.order() == order
        orbits = sorted(len(orbit) for orbit in group.orbits())
        assert orbits == sorted(g.degree() for g, _ in parts)
        assert result.abelian is abelian is group.is_abelian
        assert result.solvable is solvable is _composition_solvable(group)
    if len(parts) == 1:
        verdict = sn_an_test(text)
        assert verdict.is_sn is (verdict.order == math.factorial(n))
        if order is not None:
            assert verdict.order == order
            assert verdict.is_an is (2 * order == math.factorial(n))
        else:
            assert verdict.is_sn is result.is_sn is True
