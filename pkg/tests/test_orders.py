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
from util.fields import ring_of_integers
from util.oracles import squarefree

from ansys.ordomax.number_field import field_from_poly
from ansys.ordomax.orders import (
    BadFactorization,
    NotAnOrder,
    Order,
    OrderIdeal,
    SmallPrimeFactor,
    closure_with_certificate,
    equation_order,
    maximal_order,
    multiplier_ring,
    p_maximal_closure,
    radical_mod_p,
    trace_radical,
)


def test_equation_order():
    order = equation_order("x^2 + 1")
    assert order.discriminant == -4
    assert order.field.one in order
    assert order.field.gen in order
    assert order.field.gen / 2 not in order
    assert order.basis[0] == 1

    assert equation_order("x^3 - 2").discriminant == -108
    assert equation_order("x^3 - 3*x + 1").discriminant == 81

    # non integral polynomial: the basis uses 4*alpha
    order = equation_order("x^2 + 1/4")
    assert order.discriminant == -16
    assert 4 * order.field.gen in order


def test_order_checks():
    K = field_from_poly("x^2 + 1")
    with pytest.raises(NotAnOrder):
        Order(K, [[1, 0], [0, Fraction(1, 2)]])
    with pytest.raises(NotAnOrder):
        Order(K, [[2, 0], [0, 1]])
    with pytest.raises(NotAnOrder):
        Order(K, [[1, 0]])

    a = Order(K, [[1, 0], [0, 2]])
    b = Order(K, [[1, 0], [1, 2], [0, 4]])
    assert a == b
    assert a.discriminant == -16
    assert a <= equation_order("x^2 + 1")
    assert a.index_in(equation_order("x^2 + 1")) == 2


@pytest.mark.parametrize(
    "poly, factors, disc",
    [
        ("x^2 + 1", {2: 2}, -4),
        ("x^2 - 5", {2: 2, 5: 1}, 5),
        ("x^2 + 3", {2: 2, 3: 1}, -3),
        ("x^2 - 45", {2: 2, 3: 2, 5: 1}, 5),
        ("x^3 - 2", {2: 2, 3: 3}, -108),
        ("x^2 + 5", {2: 2, 5: 1}, -20),
    ],
)
def test_maximal_order(poly, factors, disc):
    order = equation_order(poly)
    ring = maximal_order(order, factors)
    assert ring.discriminant == disc
    index = order.index_in(ring)
    assert order.discriminant == disc * index * index
    assert order <= ring


def test_maximal_order_contents():
    ring = ring_of_integers("x^2 - 5")
    golden = (1 + ring.field.gen) / 2
    assert golden in ring
    assert ring.contains(golden * golden)
    assert ring.multiplication_table()[1][1] == [1, 1]

    with pytest.raises(BadFactorization):
        maximal_order(equation_order("x^2 - 5"), {2: 1})


def test_p_maximal_closure():
    order = equation_order("x^2 - 5")
    closure = p_maximal_closure(order, 2)
    assert closure.discriminant == 5
    assert p_maximal_closure(closure, 2) == closure
    assert p_maximal_closure(order, 5) == order


def test_radical_and_multiplier_ring():
    gaussian = equation_order("x^2 + 1")
    i = gaussian.field.gen
    assert radical_mod_p(gaussian, 2) == gaussian.ideal([1 + i])

    order = equation_order("x^2 - 5")
    radical = radical_mod_p(order, 2)
    assert radical.norm == 2
    assert multiplier_ring(order, radical) == ring_of_integers("x^2 - 5")
    assert multiplier_ring(order, order.unit_ideal()) == order

    with pytest.raises(SmallPrimeFactor):
        trace_radical(order, 4)


def test_closure_with_certificate():
    for poly in ("x^2 - 5", "x^2 - 45", "x^3 - 2", "x^2 + 1"):
        order = equation_order(poly)
        ring, certificate = closure_with_certificate(order)
        assert order <= ring
        assert certificate >= 1
        assert ring.discriminant % certificate == 0
        index = order.index_in(ring)
        assert order.discriminant == ring.discriminant * index * index
        if certificate == 1 or squarefree(certificate):
            assert ring == ring_of_integers(poly)


def test_ideals():
    order = equation_order("x^2 + 1")
    i = order.field.gen
    two = order.ideal([2])
    p = order.ideal([1 + i])
    assert two.norm == 4
    assert p.norm == 2
    assert p * p == two
    assert p**2 == two
    assert p**0 == order.unit_ideal()
    assert p + order.ideal([3]) == order.unit_ideal()
    assert 1 + i in p and order.field.scalar(3) not in p
    assert two * Fraction(1, 2) == order.unit_ideal()
    assert (two * Fraction(1, 4)).norm == Fraction(1, 4)
    assert not (two * Fraction(1, 4)).is_integral()
    assert OrderIdeal.principal(order, 2 + i).norm == 5
    assert p.to_json() == {"denominator": 1, "hnf": [[1, 1], [0, 2]], "norm": "2"}
    with pytest.raises(ValueError):
        p * 0


def test_order_json():
    ring = ring_of_integers("x^2 - 5")
    out = ring.to_json()
    assert out["discriminant"] == 5
    assert out["basis"][0] == ["1", "0"]


def _sqrt_poly(m: int) -> str:
    return f"x^2 - {m}" if m > 0 else f"x^2 + {-m}"


def test_quadratic_maximal_orders():
    for m in range(-200, 201):
        if not squarefree(m):
            continue
        ring = ring_of_integers(_sqrt_poly(m))
        half = (1 + ring.field.gen) / 2
        if m % 4 == 1:
            assert ring.discriminant == m
            assert half in ring
        else:
            assert ring.discriminant == 4 * m
            assert half not in ring
            assert ring == equation_order(_sqrt_poly(m))


def _certificate_family():
    cases = []
    for p in (5, 7, 11, 13):
        ms = [m for m in range(-40, 41) if m == -1 or squarefree(m)]
        cases += [(p, m) for m in ms if m % p][:13]
    return cases


@pytest.mark.parametrize("p, m", _certificate_family())
def test_certificate_on_scaled_quadratics(p, m):
    order = equation_order(_sqrt_poly(p * p * m))
    ring, certificate = closure_with_certificate(order)
    maximal = ring == ring_of_integers(_sqrt_poly(p * p * m))
    assert maximal == (certificate == 1 or squarefree(certificate))
    assert (certificate % (p * p) == 0) == (not maximal)
    index = order.index_in(ring)
    assert order.discriminant == ring.discriminant * index * index
