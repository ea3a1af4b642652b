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

"""Provides the ``PrimeIdeal`` class and prime decomposition."""

from __future__ import annotations

from collections import deque
from fractions import Fraction
import logging
import random
from typing import Optional

from ansys.ordomax._constants import _orders
from ansys.ordomax.finite_field import FpPoly, factor
from ansys.ordomax.linalg import (
    common_denominator,
    echelon_mod,
    lattice_intersection,
    left_kernel_mod,
)
from ansys.ordomax.number_field import NfElement, ZeroElement
from ansys.ordomax.orders import Order, OrderIdeal, p_maximal_closure, radical_mod_p

logger = logging.getLogger(__name__)


class _Quotient:
    """The ``F_p``-algebra ``B/J`` for an ideal ``J`` containing ``pB``."""

    def __init__(self, order: Order, ideal: OrderIdeal, p: int):
        self.order = order
        self.ideal = ideal
        self.p = p
        rows = [[x % p for x in r] for r in ideal.hnf]
        reduced, pivots = echelon_mod(p, rows)
        self.rows = reduced[: len(pivots)]
        self.pivots = pivots
        self.free = [j for j in range(order.degree) if j not in pivots]

    @property
    def dimension(self) -> int:
        return len(self.free)

    def reduce(self, v: list[int]) -> list[int]:
        """Residue of ``v`` with zeros in the pivot columns."""
        p = self.p
        v = [x % p for x in v]
        for row, j in zip(self.rows, self.pivots):
            c = v[j]
            if c:
                v = [(x - c * y) % p for x, y in zip(v, row)]
        return v

    def min_poly(self, x: list[int]) -> FpPoly:
        """Minimal polynomial of ``x`` over ``F_p`` in the quotient."""
        p = self.p
        one = [1] + [0] * (self.order.degree - 1)
        powers = [self.reduce(one)]
        while True:
            powers.append(self.reduce(self.order.mul_coords(powers[-1], x)))
            rows = [[v[j] for j in self.free] for v in powers]
            kernel = left_kernel_mod(p, rows)
            if kernel:
                c = kernel[0]
                inv = pow(c[-1], -1, p)
                return FpPoly([a * inv for a in c], p)

    def evaluate(self, g: FpPoly, x: list[int]) -> list[int]:
        """``g(x)`` in ``B/pB``."""
        p = self.p
        n = self.order.degree
        acc = [0] * n
        for c in reversed(g.coeffs):
            acc = [a % p for a in self.order.mul_coords(acc, x)]
            acc[0] = (acc[0] + c) % p
        return acc


def _extend(order: Order, ideal: OrderIdeal, element: list[int], p: int) -> OrderIdeal:
    n = order.degree
    rows = [list(r) for r in ideal.hnf]
    for i in range(n):
        w = [1 if k == i else 0 for k in range(n)]
        rows.append([x % p for x in order.mul_coords(w, element)])
    return OrderIdeal(order, rows, modulus=p)


def _maximal_ideals(
    order: Order, radical: OrderIdeal, p: int, rng: random.Random
) -> list:
    """Split the reduced algebra ``B/radical`` into its residue fields."""
    attempts = int(_orders["split_attempts"])
    n = order.degree
    found = {}
    work = deque([radical])
    while work:
        ideal = work.popleft()
        quotient = _Quotient(order, ideal, p)
        if quotient.dimension == 1:
            found[ideal] = 1
            continue
        for _ in range(attempts):
            x = quotient.reduce([rng.randrange(p) for _ in range(n)])
            mp = quotient.min_poly(x)
            _, parts = factor(mp, rng.randrange(2**32))
            if len(parts) > 1:
                logger.debug(
                    "split a residue algebra of dimension %d into %d parts",
                    quotient.dimension,
                    len(parts),
                )
                for g, _ in parts:
                    work.append(_extend(order, ideal, quotient.evaluate(g, x), p))
                break
            if mp.degree() == quotient.dimension:
                found[ideal] = quotient.dimension
                break
        else:
            raise SplittingFailed(p, attempts)
    return sorted(found.items(), key=lambda item: (item[1], item[0].hnf))


class PrimeIdeal:
    """
    A prime ideal of a ``p``-maximal order above a rational prime.

    Parameters
    ----------
    order : Order
        The ``p``-maximal order ``B`` the prime lives in.
    p : int
        Rational prime below.
    ideal : OrderIdeal
        The prime as an ideal of ``order``.
    f : int
        Residue degree.
    gamma : NfElement
        Element of ``P^-1`` outside ``order``, so that ``v(x)`` is the largest
        ``m`` with ``gamma^m * x`` in ``order`` for ``x`` in ``order``.
    base_order : Order, optional
        The order the decomposition was requested for.
    """

    def __init__(
        self,
        order: Order,
        p: int,
        ideal: OrderIdeal,
        f: int,
        gamma: NfElement,
        base_order: Optional[Order] = None,
    ):
        self.order = order
        self.p = p
        self.ideal = ideal
        self.f = f
        self.gamma = gamma
        self.base_order = base_order or order
        self.e = self._integral_valuation(order.field.scalar(p))
        self._contraction = None
        self._two_element = None

    @property
    def norm(self) -> int:
        """Absolute norm ``p^f``."""
        return self.p**self.f

    def _integral_valuation(self, x: NfElement) -> int:
        v = 0
        y = x * self.gamma
        while self.order.contains(y):
            v += 1
            y = y * self.gamma
        return v

    def valuation(self, x) -> int:
        """
        Normalized valuation of a nonzero field element.

        Raises
        ------
        ZeroElement
            If ``x`` is zero.
        """
        x = self.order.field.convert(x)
        if not x:
            raise ZeroElement()
        den = common_denominator(self.order.coordinates(x))
        vp = 0
        while den % self.p == 0:
            den //= self.p
            vp += 1
        scaled = x * (self.p**vp * den)
        return self._integral_valuation(scaled) - self.e * vp

    @property
    def contraction(self) -> OrderIdeal:
        """The prime ``P ∩ A`` of the base order."""
        if self._contraction is None:
            base = self.base_order
            if base == self.order:
                self._contraction = self.ideal
            else:
                rows = [b.coords for b in self.ideal.basis]
                meet = lattice_intersection(rows, base.basis_coords)
                rows = [base.coordinates(r) for r in meet]
                self._contraction = OrderIdeal(base, rows)
        return self._contraction

    def two_element(self, seed: int = 0) -> NfElement:
        """
        An element ``beta`` with ``P = p*B + beta*B``.

        Raises
        ------
        SplittingFailed
            If no generator turns up within the configured attempts.
        """
        if self._two_element is None:
            order = self.order
            rows = [list(r) for r in self.ideal.hnf]
            candidates = [order.element(r) for r in rows]
            rng = random.Random(seed)
            attempts = int(_orders["two_element_attempts"])
            for k in range(len(candidates) + attempts):
                if k < len(candidates):
                    beta = candidates[k]
                else:
                    coeffs = [rng.randrange(self.p) for _ in rows]
                    beta = order.element(
                        [
                            sum(c * r[j] for c, r in zip(coeffs, rows))
                            for j in range(order.degree)
                        ]
                    )
                if not beta:
                    continue
                if OrderIdeal.from_generators(order, [self.p, beta]) == self.ideal:
                    self._two_element = beta
                    break
            else:
                raise SplittingFailed(self.p, attempts)
        return self._two_element

    def to_json(self) -> dict:
        """Deterministic JSON form."""
        return {
            "p": self.p,
            "e": self.e,
            "f": self.f,
            "two_generators": [self.p, str(self.two_element())],
        }

    def __eq__(self, other):
        return isinstance(other, PrimeIdeal) and self.ideal == other.ideal

    def __hash__(self):
        return hash(self.ideal)

    def __repr__(self):
        return f"PrimeIdeal(p={self.p}, e={self.e}, f={self.f})"


def _gamma(order: Order, ideal: OrderIdeal, p: int) -> NfElement:
    """
    ``x / p`` for the least ``x`` with ``x * P`` in ``pB`` and ``x`` not in ``pB``.

    Coordinates of ``x`` are taken in ``[0, p)`` and compared lexicographically.
    The least one is the last row of the reduced echelon form of the kernel.
    """
    n = order.degree
    pi = [list(r) for r in ideal.hnf]
    matrix = []
    for a in range(n):
        w = [1 if k == a else 0 for k in range(n)]
        row = []
        for r in pi:
            row.extend(x % p for x in order.mul_coords(w, r))
        matrix.append(row)
    reduced, pivots = echelon_mod(p, left_kernel_mod(p, matrix))
    x = reduced[len(pivots) - 1]
    return order.element([Fraction(c, p) for c in x])


def split_prime(order: Order, p: int, seed: int = 0) -> list[PrimeIdeal]:
    """
    Decompose a rational prime.

    Parameters
    ----------
    order : Order
        Any order of the field.
    p : int
        Rational prime.
    seed : int, optional
        Seed of the random splitting elements.

    Returns
    -------
    list of PrimeIdeal
        The primes of the ``p``-maximal closure of ``order`` above ``p``,
        ordered by residue degree and HNF. Each carries its contraction to
        ``order``.
    """
    rng = random.Random(seed)
    closure = p_maximal_closure(order, p)
    radical = radical_mod_p(closure, p)
    primes = []
    for ideal, f in _maximal_ideals(closure, radical, p, rng):
        gamma = _gamma(closure, ideal, p)
        primes.append(PrimeIdeal(closure, p, ideal, f, gamma, base_order=order))
    logger.debug(
        "p=%d splits as %s", p, [(prime.e, prime.f) for prime in primes]
    )
    return primes


def valuation(prime: PrimeIdeal, x) -> int:
    """Normalized valuation of ``x`` at ``prime``."""
    return prime.valuation(x)


def primes_above(order: Order, p: int, seed: int = 0) -> list[OrderIdeal]:
    """Distinct primes of ``order`` itself above ``p``."""
    seen = {}
    for prime in split_prime(order, p, seed):
        seen.setdefault(prime.contraction, None)
    return list(seen)


class SplittingFailed(RuntimeError):
    """Raised when random splitting elements keep failing."""

    def __init__(self, p: int, attempts: int):
        super().__init__(
            f"Could not split the residue algebra at p={p} in {attempts} attempts."
        )
