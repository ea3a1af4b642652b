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
from itertools import product

import pytest
from sympy import primerange
from util.fields import ring_of_integers

from ansys.ordomax.finite_field import FpPoly, factorization_type
from ansys.ordomax.number_field import ZeroElement
from ansys.ordomax.orders import OrderIdeal, equation_order, radical_mod_p
from ansys.ordomax.prime_ideal import _gamma, primes_above, split_prime, valuation


def _shape(primes):
    return [(P.e, P.f) for P in primes]


@pytest.mark.parametrize(
    "poly, p, shape",
    [
        ("x^2 + 1", 2, [(2, 1)]),
        ("x^2 + 1", 3, [(1, 2)]),
        ("x^2 + 1", 5, [(1, 1), (1, 1)]),
        ("x^2 + 5", 2, [(2, 1)]),
        ("x^2 + 5", 3, [(1, 1), (1, 1)]),
        ("x^2 - 5", 2, [(1, 2)]),
        ("x^3 - 2", 2, [(3, 1)]),
        ("x^3 - 2", 3, [(3, 1)]),
        ("x^3 - 2", 5, [(1, 1), (1, 2)]),
        ("x^3 - 3*x + 1", 3, [(3, 1)]),
    ],
)
def test_decomposition_shape(poly, p, shape):
    ring = ring_of_integers(poly)
    primes = split_prime(ring, p)
    assert sorted(_shape(primes)) == sorted(shape)
    assert sum(P.e * P.f for P in primes) == ring.degree
    assert all(P.norm == p**P.f for P in primes)
    assert all(P.ideal.norm == P.norm for P in primes)


def test_valuations():
    ring = ring_of_integers("x^2 + 1")
    i = ring.field.gen
    primes = split_prime(ring, 5)
    assert sorted(P.valuation(2 + i) for P in primes) == [0, 1]
    assert [P.valuation(5) for P in primes] == [1, 1]
    assert [valuation(P, Fraction(1, 25)) for P in primes] == [-2, -2]

    (two,) = split_prime(ring, 2)
    assert two.valuation(2) == 2
    assert two.valuation(1 + i) == 1
    assert two.valuation(Fraction(1, 2)) == -2
    assert two.valuation((1 + i) ** 3 / 5) == 3
    with pytest.raises(ZeroElement):
        two.valuation(0)


def test_two_element():
    ring = ring_of_integers("x^2 + 5")
    for p in (2, 3, 7):
        for P in split_prime(ring, p):
            beta = P.two_element()
            assert beta in P.ideal
            assert OrderIdeal.from_generators(ring, [p, beta]) == P.ideal


def test_split_is_seed_independent():
    ring = ring_of_integers("x^3 - 2")
    assert split_prime(ring, 5, seed=0) == split_prime(ring, 5, seed=9)
    assert split_prime(ring, 31, seed=1) == split_prime(ring, 31, seed=2)


def test_contraction_to_non_maximal_order():
    order = equation_order("x^2 - 5")
    (prime,) = split_prime(order, 2)
    assert prime.order == ring_of_integers("x^2 - 5")
    assert prime.contraction.order == order
    assert prime.contraction == radical_mod_p(order, 2)
    assert primes_above(order, 2) == [radical_mod_p(order, 2)]


def test_prime_json():
    ring = ring_of_integers("x^2 + 1")
    (P,) = split_prime(ring, 2)
    out = P.to_json()
    assert out["p"] == 2 and out["e"] == 2 and out["f"] == 1
    assert out["two_generators"][0] == 2


@pytest.mark.parametrize(
    "poly",
    ["x^2 + 1", "x^2 - 10", "x^2 - x + 6", "x^3 - 2", "x^3 - 3*x + 1", "x^4 + 1"],
)
def test_splitting_identity(poly):
    ring = ring_of_integers(poly)
    order = equation_order(poly)
    index = order.index_in(ring)
    coeffs = [int(c) for c in order.field.defining_poly.coeffs]
    for p in primerange(2, 50):
        p = int(p)
        primes = split_prime(ring, p)
        assert sum(P.e * P.f for P in primes) == ring.degree
        product = ring.unit_ideal()
        for P in primes:
            product = product * P.ideal**P.e
        assert product == ring.ideal([p])
        if index % p:
            expected = factorization_type(FpPoly([c % p for c in coeffs], p))
            assert sorted((P.f, P.e) for P in primes) == list(expected)


def test_inverse_element_is_least_kernel_vector():
    for P in split_prime(ring_of_integers("x^3 - 2"), 5):
        order, rows = P.order, [list(r) for r in P.ideal.hnf]
        kernel = [
            v
            for v in product(range(5), repeat=3)
            if any(v)
            and all(
                c % 5 == 0 for r in rows for c in order.mul_coords(list(v), r)
            )
        ]
        assert len(kernel) == 5**P.f - 1
        least = min(kernel)
        expected = order.element([Fraction(c, 5) for c in least])
        assert _gamma(order, P.ideal, 5) == expected
