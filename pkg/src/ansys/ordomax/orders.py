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
Provides the ``Order`` and ``OrderIdeal`` classes and the maximal order
algorithms.

An order is stored as a denominator together with the lower triangular
Hermite normal form of its scaled basis in field coordinates, so equal orders
compare equal and ``basis[0]`` is always ``1``.
"""

from __future__ import annotations

from fractions import Fraction
import logging
import math
from typing import Optional, Sequence, Union

from sympy import integer_nthroot, primerange

from ansys.ordomax.factorization import factor_nf
from ansys.ordomax.linalg import (
    ZeroDivisorFound,
    common_denominator,
    det_int,
    elementary_divisors,
    hnf_mod,
    kernel_int,
    kernel_mod,
    lattice_hnf,
    left_kernel_mod,
    vec_mat,
)
from ansys.ordomax.number_field import NfElement, NumberField, _as_poly, field_from_poly
from ansys.ordomax.polynomial import Poly

logger = logging.getLogger(__name__)


def _lower_hnf(rows: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    nonzero = lattice_hnf([list(reversed(r)) for r in rows])
    if len(nonzero) != n:
        raise NotAnOrder("the generators do not span a full rank lattice")
    return [list(reversed(r)) for r in reversed(nonzero)]


def small_primes(n: int) -> list[int]:
    """Rational primes up to ``n``."""
    return list(primerange(2, n + 1))


class Order:
    """
    An order of a number field.

    Parameters
    ----------
    field : NumberField
        Ambient field.
    rows : list
        Field coordinates of ring generators spanning the order as a lattice.
    check : bool, optional
        Whether to verify ``1`` lies in the lattice and that it is closed
        under multiplication.

    Raises
    ------
    NotAnOrder
        If ``check`` is set and the lattice is not a ring.
    """

    def __init__(
        self, field: NumberField, rows: Sequence[Sequence], *, check: bool = True
    ):
        n = field.degree
        den = common_denominator(x for r in rows for x in r)
        ints = [[int(Fraction(x) * den) for x in r] for r in rows]
        h = _lower_hnf(ints, n)
        g = 0
        for r in h:
            for x in r:
                g = math.gcd(g, x)
        g = math.gcd(g, den)
        self._field = field
        self._den = den // g
        self._hnf = tuple(tuple(x // g for x in r) for r in h)
        self._basis_coords = [[Fraction(x, self._den) for x in r] for r in self._hnf]
        self._table = None
        self._disc = None
        self._traces = None
        if check:
            self._check()

    def _check(self):
        if self.coordinates(self._field.one) != [1] + [0] * (self.degree - 1):
            raise NotAnOrder("1 is not the first basis element")
        try:
            self.multiplication_table()
        except ValueError:
            raise NotAnOrder("the lattice is not closed under multiplication") from None

    @property
    def field(self) -> NumberField:
        """Ambient field."""
        return self._field

    @property
    def degree(self) -> int:
        """Rank over ``Z``."""
        return self._field.degree

    @property
    def denominator(self) -> int:
        """Common denominator of the basis."""
        return self._den

    @property
    def hnf(self) -> tuple:
        """Lower triangular HNF of ``denominator * basis``."""
        return self._hnf

    @property
    def basis_coords(self) -> list[list[Fraction]]:
        """Field coordinates of the basis."""
        return self._basis_coords

    @property
    def basis(self) -> list[NfElement]:
        """Basis elements."""
        return [self._field.element(r) for r in self._basis_coords]

    def element(self, coords: Sequence) -> NfElement:
        """Element with the given coordinates on this basis."""
        return self._field.element(vec_mat(list(coords), self._basis_coords))

    def coordinates(self, x: Union[NfElement, Sequence]) -> list[Fraction]:
        """Rational coordinates of a field element on this basis."""
        v = x.coords if isinstance(x, NfElement) else [Fraction(c) for c in x]
        b = self._basis_coords
        n = self.degree
        c = [Fraction(0)] * n
        for j in range(n - 1, -1, -1):
            s = v[j] - sum(c[i] * b[i][j] for i in range(j + 1, n))
            c[j] = s / b[j][j]
        return c

    def contains(self, x: NfElement) -> bool:
        """Whether ``x`` lies in the order."""
        return all(c.denominator == 1 for c in self.coordinates(x))

    __contains__ = contains

    def multiplication_table(self) -> list:
        """Integer coordinates of ``basis[i] * basis[j]``."""
        if self._table is None:
            basis = self.basis
            n = self.degree
            table = [[None] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    coords = self.coordinates(basis[i] * basis[j])
                    if any(c.denominator != 1 for c in coords):
                        raise ValueError("product outside the lattice")
                    table[i][j] = table[j][i] = [int(c) for c in coords]
            self._table = table
        return self._table

    def mul_coords(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        """Product of two elements given by integer coordinates."""
        table = self.multiplication_table()
        n = self.degree
        out = [0] * n
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        xy = x * y
                        for k, v in enumerate(table[i][j]):
                            if v:
                                out[k] += xy * v
        return out

    def traces(self) -> list[int]:
        """Traces of the basis elements."""
        if self._traces is None:
            self._traces = [int(w.trace()) for w in self.basis]
        return self._traces

    def trace_matrix(self) -> list[list[int]]:
        """Integer matrix ``Tr(basis[i] * basis[j])``."""
        table = self.multiplication_table()
        tr = self.traces()
        n = self.degree
        return [
            [sum(c * t for c, t in zip(table[i][j], tr)) for j in range(n)]
            for i in range(n)
        ]

    @property
    def discriminant(self) -> int:
        """Discriminant of the order."""
        if self._disc is None:
            self._disc = det_int(self.trace_matrix())
        return self._disc

    def _volume(self) -> Fraction:
        v = Fraction(1)
        for i, r in enumerate(self._hnf):
            v *= Fraction(r[i], self._den)
        return v

    def index_in(self, other: Order) -> int:
        """Index ``[other : self]`` for ``self`` contained in ``other``."""
        ratio = self._volume() / other._volume()
        if ratio.denominator != 1:
            raise ValueError("The order is not contained in the other order.")
        return int(ratio)

    def __le__(self, other: Order) -> bool:
        return all(other.contains(w) for w in self.basis)

    def join(self, other: Order) -> Order:
        """Smallest order containing both orders."""
        rows = [w.coords for w in self.basis] + [w.coords for w in other.basis]
        rows += [(a * b).coords for a in self.basis for b in other.basis]
        return Order(self._field, rows)

    def unit_ideal(self) -> OrderIdeal:
        """The order as an ideal of itself."""
        n = self.degree
        identity = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        return OrderIdeal(self, identity)

    def ideal(self, generators: Sequence) -> OrderIdeal:
        """Ideal generated by field elements or integers."""
        return OrderIdeal.from_generators(self, generators)

    def to_json(self) -> dict:
        """Deterministic JSON form."""
        return {
            "basis": [[str(x) for x in r] for r in self._basis_coords],
            "discriminant": self.discriminant,
        }

    def __eq__(self, other):
        return (
            isinstance(other, Order)
            and self._field == other._field
            and self._den == other._den
            and self._hnf == other._hnf
        )

    def __hash__(self):
        return hash((self._den, self._hnf))

    def __repr__(self):
        return f"Order(disc={self.discriminant}, basis={[str(w) for w in self.basis]})"


class OrderIdeal:
    """
    A nonzero fractional ideal of an order.

    Stored as a denominator with the upper triangular HNF of its scaled basis
    in the coordinates of the order.

    Parameters
    ----------
    order : Order
    rows : list
        Order coordinates of lattice generators.
    modulus : int, optional
        For integral ideals, a positive integer ``d`` with ``d * order``
        inside the ideal; the HNF is then computed modulo ``d``.
    """

    def __init__(
        self, order: Order, rows: Sequence[Sequence], modulus: Optional[int] = None
    ):
        n = order.degree
        den = common_denominator(x for r in rows for x in r)
        ints = [[int(Fraction(x) * den) for x in r] for r in rows]
        if modulus is not None and den == 1:
            h = hnf_mod(ints, modulus)
        else:
            h = lattice_hnf(ints)
            if len(h) != n:
                raise ValueError("An ideal must have full rank.")
        g = 0
        for r in h:
            for x in r:
                g = math.gcd(g, x)
        g = math.gcd(g, den)
        self.order = order
        self.denominator = den // g
        self.hnf = tuple(tuple(x // g for x in r) for r in h)

    @classmethod
    def from_generators(cls, order: Order, generators: Sequence) -> OrderIdeal:
        """Ideal generated by elements of the field."""
        field = order.field
        rows = []
        for g in generators:
            g = field.convert(g)
            rows.extend(order.coordinates(g * w) for w in order.basis)
        return cls(order, rows)

    @classmethod
    def principal(cls, order: Order, x) -> OrderIdeal:
        """The ideal ``x * order``."""
        return cls.from_generators(order, [x])

    @property
    def basis_coords(self) -> list[list[Fraction]]:
        """Order coordinates of the basis."""
        return [[Fraction(x, self.denominator) for x in r] for r in self.hnf]

    @property
    def basis(self) -> list[NfElement]:
        """Basis elements."""
        return [self.order.element(r) for r in self.basis_coords]

    @property
    def norm(self) -> Fraction:
        """Index norm, a positive rational."""
        v = Fraction(1)
        for i, r in enumerate(self.hnf):
            v *= r[i]
        return v / Fraction(self.denominator) ** self.order.degree

    def is_integral(self) -> bool:
        """Whether the ideal lies inside its order."""
        return self.denominator == 1

    def ideal_coordinates(self, coords: Sequence) -> list[Fraction]:
        """Coordinates on the ideal basis of an element given in order coordinates."""
        w = [Fraction(x) * self.denominator for x in coords]
        h = self.hnf
        n = len(h)
        c = [Fraction(0)] * n
        for j in range(n):
            s = w[j] - sum(c[i] * h[i][j] for i in range(j))
            c[j] = s / h[j][j]
        return c

    def contains(self, x: NfElement) -> bool:
        """Whether ``x`` lies in the ideal."""
        coords = self.order.coordinates(x)
        return all(c.denominator == 1 for c in self.ideal_coordinates(coords))

    __contains__ = contains

    def _integral_norm(self) -> Optional[int]:
        if not self.is_integral():
            return None
        return int(self.norm)

    def __add__(self, other: OrderIdeal) -> OrderIdeal:
        a, b = self._integral_norm(), other._integral_norm()
        modulus = math.gcd(a, b) if a and b else None
        return OrderIdeal(self.order, self.basis_coords + other.basis_coords, modulus)

    def __mul__(self, other):
        if not isinstance(other, OrderIdeal):
            x = self.order.field.convert(other)
            if not x:
                raise ValueError("An ideal must be nonzero.")
            return OrderIdeal(
                self.order, [self.order.coordinates(x * b) for b in self.basis]
            )
        a, b = self._integral_norm(), other._integral_norm()
        modulus = a * b if a and b else None
        order = self.order
        if modulus is not None:
            left = [list(r) for r in self.hnf]
            right = [list(r) for r in other.hnf]
            rows = [order.mul_coords(x, y) for x in left for y in right]
            return OrderIdeal(order, rows, modulus)
        rows = [order.coordinates(x * y) for x in self.basis for y in other.basis]
        return OrderIdeal(order, rows)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> OrderIdeal:
        if k < 0:
            raise ValueError("Negative ideal powers are not supported.")
        result = self.order.unit_ideal()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, OrderIdeal)
            and self.order == other.order
            and self.denominator == other.denominator
            and self.hnf == other.hnf
        )

    def __hash__(self):
        return hash((self.denominator, self.hnf))

    def to_json(self) -> dict:
        """Deterministic JSON form."""
        return {
            "denominator": self.denominator,
            "hnf": [list(r) for r in self.hnf],
            "norm": str(self.norm),
        }

    def __repr__(self):
        return f"OrderIdeal(norm={self.norm}, hnf={[list(r) for r in self.hnf]})"


def equation_order(
    f: Union[Poly, str, Sequence], field: Optional[NumberField] = None
) -> Order:
    """
    Equation order of a monic rational polynomial.

    With ``g = m * f`` the primitive integer multiple of ``f``, written
    ``g = a_n X^n + ... + a_0``, the basis is ``1`` and
    ``sum_{j < i} a_{n-j} alpha^{i-j}`` for ``i = 1, ..., n-1``. For integral
    ``f`` this is ``Z[alpha]``.

    Parameters
    ----------
    f : Poly, str or list
        Monic irreducible polynomial over ``QQ``.
    field : NumberField, optional
        Field containing a root of ``f``; defaults to ``QQ[X]/(f)``.
    """
    f = _as_poly(f).monic()
    if field is None:
        field = field_from_poly(f)
    if field.defining_poly == f:
        alpha = field.gen
    else:
        _, parts = factor_nf(f.to_domain(field), field)
        roots = [-g.coeffs[0] for g, _ in parts if g.degree() == 1]
        if not roots:
            raise ValueError(f"`{f}` has no root in the given field.")
        alpha = roots[0]
    n = f.degree()
    m = common_denominator(f.coeffs)
    a = [int(c * m) for c in f.coeffs]
    powers = [field.one]
    for _ in range(n - 1):
        powers.append(powers[-1] * alpha)
    basis = [field.one]
    for i in range(1, n):
        w = field.zero
        for j in range(i):
            w = w + powers[i - j] * a[n - j]
        basis.append(w)
    return Order(field, [w.coords for w in basis])


def _pow_mod(order: Order, v: list[int], e: int, p: int) -> list[int]:
    result = [1] + [0] * (order.degree - 1)
    base = [x % p for x in v]
    while e:
        if e & 1:
            result = [x % p for x in order.mul_coords(result, base)]
        base = [x % p for x in order.mul_coords(base, base)]
        e >>= 1
    return result


def _closed_ideal(
    order: Order, generators: Sequence[Sequence[int]], q: int
) -> OrderIdeal:
    """Ideal generated by ``generators`` and ``q``, reduced modulo ``q``."""
    n = order.degree
    rows = []
    for g in generators:
        for i in range(n):
            w = [1 if k == i else 0 for k in range(n)]
            rows.append([x % q for x in order.mul_coords(w, g)])
    return OrderIdeal(order, rows or [[0] * n], modulus=q)


def radical_mod_p(order: Order, p: int) -> OrderIdeal:
    """
    The ideal ``{x : x^(p^t) in p*order}`` for ``p^t >= n``, the radical of ``p``.
    """
    n = order.degree
    e = p
    while e < n:
        e *= p
    rows = [
        _pow_mod(order, [1 if k == i else 0 for k in range(n)], e, p) for i in range(n)
    ]
    kernel = left_kernel_mod(p, rows)
    return _closed_ideal(order, kernel, p)


def trace_radical(order: Order, q: int) -> OrderIdeal:
    """
    The ideal ``{x : Tr(x * order) in qZ}`` closed under the order.

    Raises
    ------
    SmallPrimeFactor
        If a prime up to the degree divides ``q``.
    ZeroDivisorFound
        If elimination modulo ``q`` meets a non-unit.
    """
    for p in small_primes(order.degree):
        if q % p == 0:
            raise SmallPrimeFactor(p, q)
    trace = [[x % q for x in row] for row in order.trace_matrix()]
    return _closed_ideal(order, kernel_mod(q, trace), q)


def _to_field_rows(
    order: Order, rows: Sequence[Sequence], scale: int
) -> list[list[Fraction]]:
    basis = order.basis_coords
    return [[Fraction(x, scale) for x in vec_mat(list(r), basis)] for r in rows]


def _multiplier_ring_mod(order: Order, ideal: OrderIdeal, q: int) -> Order:
    """``(1/q){x : x * ideal in q * ideal}`` for an integral ideal containing ``q``."""
    n = order.degree
    rho = [list(r) for r in ideal.hnf]
    matrix = []
    for a in range(n):
        w = [1 if k == a else 0 for k in range(n)]
        row = []
        for r in rho:
            coords = ideal.ideal_coordinates(order.mul_coords(w, r))
            row.extend(int(c) % q for c in coords)
        matrix.append(row)
    kernel = left_kernel_mod(q, matrix)
    gens = kernel + [[q if k == i else 0 for k in range(n)] for i in range(n)]
    return Order(order.field, _to_field_rows(order, gens, q))


def multiplier_ring(order: Order, ideal: OrderIdeal) -> Order:
    """
    The ring ``{x in K : x * ideal in ideal}``.

    Computed exactly with integer kernels, so any nonzero ideal works.
    """
    n = order.degree
    ideal = OrderIdeal(order, [[x for x in r] for r in ideal.hnf])
    big = int(ideal.norm)
    if big == 1:
        return order
    rho = [list(r) for r in ideal.hnf]
    matrix = []
    for a in range(n):
        w = [1 if k == a else 0 for k in range(n)]
        row = []
        for r in rho:
            row.extend(int(c) for c in ideal.ideal_coordinates(order.mul_coords(w, r)))
        matrix.append(row)
    width = n * n
    stacked = matrix + [
        [big if k == j else 0 for k in range(width)] for j in range(width)
    ]
    gens = [v[:n] for v in kernel_int(stacked)]
    gens += [[big if k == i else 0 for k in range(n)] for i in range(n)]
    return Order(order.field, _to_field_rows(order, gens, big))


def _check_enlargement(small: Order, big: Order):
    index = small.index_in(big)
    if small.discriminant != big.discriminant * index * index:
        raise DiscriminantMismatch(small.discriminant, big.discriminant, index)
    logger.debug(
        "enlarged order by index %d to discriminant %d", index, big.discriminant
    )


def p_maximal_closure(order: Order, p: int) -> Order:
    """Smallest ``p``-maximal order containing ``order``, by radical iteration."""
    while True:
        radical = radical_mod_p(order, p)
        ring = _multiplier_ring_mod(order, radical, p)
        if ring == order:
            return order
        _check_enlargement(order, ring)
        order = ring


def _join_split(order: Order, q1: int, q2: int) -> Order:
    logger.debug("splitting %d as %d * %d", q1 * q2, q1, q2)
    return q_closure(order, q1).join(q_closure(order, q2))


def q_closure(order: Order, q: int) -> Order:
    """
    An order containing the ``p``-maximal closure of ``order`` for every
    prime ``p`` exactly dividing ``q``.

    Small prime factors are split off and handled by radical iteration;
    the rest iterate the trace radical modulo ``q``, splitting ``q``
    whenever a zero divisor turns up.
    """
    if q <= 1:
        return order
    for p in small_primes(order.degree):
        if q % p == 0:
            if q == p:
                return p_maximal_closure(order, p)
            return _join_split(order, p, q // p)
    current = order
    try:
        while True:
            radical = trace_radical(current, q)
            ring = _multiplier_ring_mod(current, radical, q)
            if ring == current:
                return current
            _check_enlargement(current, ring)
            current = ring
    except ZeroDivisorFound as exc:
        g = exc.divisor
        return _join_split(current, g, q // g)


def maximal_order(order: Order, disc_factors: dict[int, int]) -> Order:
    """
    The maximal order, from a complete factorization of the discriminant.

    Parameters
    ----------
    order : Order
    disc_factors : dict
        Prime to exponent map of ``|disc(order)|``.

    Raises
    ------
    BadFactorization
        If the factors do not multiply out to ``|disc(order)|``.
    """
    product = 1
    for p, e in disc_factors.items():
        product *= p**e
    if product != abs(order.discriminant):
        raise BadFactorization(product, order.discriminant)
    q = 1
    for p, e in sorted(disc_factors.items()):
        if e >= 2:
            q *= p
    return q_closure(order, q)


def _strip(n: int, primes: Sequence[int]) -> int:
    for p in primes:
        while n % p == 0:
            n //= p
    return n


def _perfect_root(n: int) -> int:
    k = 2
    while 2**k <= n:
        root, exact = integer_nthroot(n, k)
        if exact:
            return _perfect_root(int(root))
        k += 1
    return n


def _coprime_base(numbers: Sequence[int]) -> list[int]:
    """Factor refinement into pairwise coprime numbers above 1."""
    base = sorted({abs(x) for x in numbers if abs(x) > 1})
    changed = True
    while changed:
        changed = False
        for i in range(len(base)):
            for j in range(i + 1, len(base)):
                g = math.gcd(base[i], base[j])
                if g > 1:
                    a, b = base[i] // g, base[j] // g
                    rest = [x for k, x in enumerate(base) if k not in (i, j)]
                    base = sorted({x for x in rest + [a, b, g] if x > 1})
                    changed = True
                    break
            if changed:
                break
    return base


def _tame_closure(order: Order, q: int) -> Order:
    while True:
        radical = trace_radical(order, q)
        ring = _multiplier_ring_mod(order, radical, q)
        if ring == order:
            return order
        _check_enlargement(order, ring)
        order = ring


def closure_with_certificate(order: Order) -> tuple[Order, int]:
    """
    Enlarge ``order`` without factoring its discriminant.

    Returns
    -------
    tuple
        ``(B, q)``: an order ``B`` containing ``order`` and a positive
        integer ``q`` dividing ``disc(B)`` such that ``B`` is ``p``-maximal
        at every prime ``p`` exactly dividing ``q`` and at every prime
        coprime to ``q``. If ``q`` is squarefree then ``B`` is maximal.
    """
    n = order.degree
    small = small_primes(n)
    current = order
    for p in small:
        if current.discriminant % (p * p) == 0:
            current = p_maximal_closure(current, p)
    elementary = elementary_divisors(current.trace_matrix())
    seeds = [_strip(abs(current.discriminant), small)]
    seeds += [_strip(d, small) for d in elementary if d]
    base = _coprime_base(seeds)
    while True:
        base = _coprime_base([_perfect_root(b) for b in base])
        restart = False
        for b in base:
            try:
                ring = _tame_closure(current, b)
            except ZeroDivisorFound as exc:
                logger.debug("certificate base element %d splits", b)
                base = _coprime_base(base + [exc.divisor, b // exc.divisor])
                restart = True
                break
            if ring != current:
                current = ring
                base = _coprime_base(base + [_strip(abs(current.discriminant), small)])
                restart = True
                break
        if not restart:
            break
    certificate = 1
    for b in base:
        if abs(current.discriminant) % b == 0:
            certificate *= b
    logger.debug(
        "certificate %d for discriminant %d", certificate, current.discriminant
    )
    return current, certificate


class NotAnOrder(ValueError):
    """Raised when a lattice is not a subring containing 1."""

    def __init__(self, reason: str):
        super().__init__(f"Not an order: {reason}.")


class SmallPrimeFactor(ValueError):
    """Raised when the trace radical is requested modulo a small prime multiple."""

    def __init__(self, p: int, q: int):
        self.p = p
        super().__init__(f"The modulus {q} has the small prime factor {p}.")


class BadFactorization(ValueError):
    """Raised when a claimed discriminant factorization does not multiply out."""

    def __init__(self, product: int, disc: int):
        super().__init__(
            f"The factors multiply to {product}, not to |disc| = {abs(disc)}."
        )


class DiscriminantMismatch(ArithmeticError):
    """Raised when an enlargement breaks ``disc(A) = disc(B) * [B:A]^2``."""

    def __init__(self, small: int, big: int, index: int):
        super().__init__(
            f"Discriminant check failed: {small} != {big} * {index}^2."
        )


