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
Provides the ``NumberField`` and ``NfElement`` classes.

A number field is a finite dimensional commutative ``QQ``-algebra given by a
multiplication table on a basis ``e_1, ..., e_n`` with ``e_1 = 1``. Elements
are rational coordinate vectors on that basis.
"""

from __future__ import annotations

from fractions import Fraction
import logging
from typing import Iterator, Optional, Sequence, Union

from ansys.ordomax._constants import default_precision
from ansys.ordomax.archimedean import field_embeddings
from ansys.ordomax.factorization import factor_nf, factor_q
from ansys.ordomax.linalg import det, inverse, kernel_rational, solve_left, vec_mat
from ansys.ordomax.polynomial import QQ, Poly, parse_poly, sturm_count

logger = logging.getLogger(__name__)


def charpoly(m: Sequence[Sequence]) -> Poly:
    """Characteristic polynomial of a square rational matrix (Faddeev-LeVerrier)."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    prev = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        current = [
            [
                sum(a[i][t] * prev[t][j] for t in range(n) if a[i][t])
                + (c[n - k + 1] if i == j else 0)
                for j in range(n)
            ]
            for i in range(n)
        ]
        trace = sum(
            a[i][t] * current[t][i] for i in range(n) for t in range(n) if a[i][t]
        )
        c[n - k] = -trace / k
        prev = current
    return Poly(c)


class _TableAlgebra:
    """Commutative algebra arithmetic from a multiplication table."""

    def _set_table(self, table):
        self._degree = len(table)
        self._table = tuple(
            tuple(tuple(Fraction(x) for x in entry) for entry in row) for row in table
        )
        self._power = False

    @property
    def degree(self) -> int:
        """Dimension over ``QQ``."""
        return self._degree

    @property
    def table(self) -> tuple:
        """Structure constants: ``table[i][j]`` holds the coordinates of ``e_i e_j``."""
        return self._table

    def _mul_coords(self, x: Sequence, y: Sequence) -> list[Fraction]:
        n = self._degree
        if self._power:
            product = [Fraction(0)] * (2 * n - 1)
            for i, a in enumerate(x):
                if a:
                    for j, b in enumerate(y):
                        if b:
                            product[i + j] += a * b
            out = product[:n]
            for k in range(n, 2 * n - 1):
                c = product[k]
                if c:
                    out = [o + c * r for o, r in zip(out, self._reduction[k - n])]
            return out
        out = [Fraction(0)] * n
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        ab = a * b
                        for k, v in enumerate(self._table[i][j]):
                            if v:
                                out[k] += ab * v
        return out

    def _matrix(self, x: Sequence) -> list[list[Fraction]]:
        n = self._degree
        return [
            self._mul_coords(x, [1 if k == i else 0 for k in range(n)])
            for i in range(n)
        ]

    def _charpoly(self, x: Sequence) -> Poly:
        return charpoly(self._matrix(x))


class NumberField(_TableAlgebra):
    """
    A number field given by structure constants.

    Build instances with :func:`field_from_poly` or :func:`validate_field`
    rather than directly.

    Parameters
    ----------
    table : list
        Structure constants, ``table[i][j]`` the coordinates of ``e_i e_j``.
    defining_poly : Poly
        Monic minimal polynomial of ``generator``.
    generator : list
        Coordinates of a primitive element.
    power_basis : bool, optional
        Whether the basis is ``1, theta, ..., theta^(n-1)``.
    """

    def __init__(
        self,
        table: Sequence,
        defining_poly: Poly,
        generator: Sequence,
        *,
        power_basis: bool = False,
    ):
        self._set_table(table)
        n = self._degree
        self._defining = defining_poly
        self._generator = tuple(Fraction(x) for x in generator)
        if power_basis:
            self._reduction = [
                list(self._table[n - 1][k - n + 1]) for k in range(n, 2 * n - 1)
            ]
            self._power = True
        rows = [[Fraction(1 if k == 0 else 0) for k in range(n)]]
        for _ in range(1, n):
            rows.append(self._mul_coords(rows[-1], self._generator))
        self._from_power = rows
        self._to_power = inverse(rows)
        self._signature = None
        self._embeddings = {}

    @property
    def defining_poly(self) -> Poly:
        """Minimal polynomial of the generator."""
        return self._defining

    @property
    def power_basis(self) -> bool:
        """Whether the basis is a power basis of the generator."""
        return self._power

    @property
    def zero(self) -> NfElement:
        """Additive identity."""
        return NfElement(self, [0] * self._degree)

    @property
    def one(self) -> NfElement:
        """Multiplicative identity."""
        return self.scalar(1)

    @property
    def gen(self) -> NfElement:
        """Primitive element whose minimal polynomial is ``defining_poly``."""
        return NfElement(self, self._generator)

    @property
    def basis(self) -> list[NfElement]:
        """Basis elements ``e_1, ..., e_n``."""
        n = self._degree
        return [
            NfElement(self, [1 if k == i else 0 for k in range(n)]) for i in range(n)
        ]

    def scalar(self, c) -> NfElement:
        """The rational ``c`` as a field element."""
        return NfElement(self, [c] + [0] * (self._degree - 1))

    def element(self, coords: Sequence) -> NfElement:
        """Element with the given basis coordinates."""
        if len(coords) != self._degree:
            raise ValueError(f"Expected {self._degree} coordinates.")
        return NfElement(self, coords)

    def convert(self, c) -> NfElement:
        """Coerce a rational or an element of this field."""
        if isinstance(c, NfElement):
            if c.field != self:
                raise ValueError("The element belongs to another field.")
            return c
        if isinstance(c, (int, Fraction)):
            return self.scalar(c)
        if isinstance(c, str):
            return self.scalar(Fraction(c))
        raise TypeError(f"Cannot convert {c!r} into {self!r}.")

    def from_poly(self, g: Poly) -> NfElement:
        """Evaluate a rational polynomial at the generator."""
        r = g % self._defining if g.degree() >= self._degree else g
        if not r:
            return self.zero
        return NfElement(self, vec_mat(list(r.coeffs), self._from_power))

    def signature(self) -> tuple[int, int]:
        """Pair ``(r, s)`` of real and complex place counts."""
        if self._signature is None:
            r = sturm_count(self._defining)
            self._signature = (r, (self._degree - r) // 2)
        return self._signature

    def embeddings(self, precision: Optional[int] = None) -> list:
        """Certified infinite places, real ones first."""
        precision = precision or default_precision()
        if precision not in self._embeddings:
            self._embeddings[precision] = field_embeddings(self, precision)
        return self._embeddings[precision]

    def __eq__(self, other):
        if other is self:
            return True
        return (
            isinstance(other, NumberField)
            and self._table == other._table
            and self._generator == other._generator
        )

    def __hash__(self):
        return hash((self._degree, self._defining.coeffs))

    def __repr__(self):
        return f"NumberField({self._defining})"


class NfElement:
    """
    An element of a number field.

    Supports ring arithmetic with other elements of the same field and with
    rationals, division by nonzero elements and integer powers.
    """

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: Sequence):
        self.field = field
        self.coords = tuple(Fraction(c) for c in coords)

    def _coerce(self, other):
        if isinstance(other, NfElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("Elements belong to different fields.")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NfElement(self.field, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return NfElement(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NfElement(self.field, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NfElement(self.field, [a * other for a in self.coords])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NfElement(self.field, self.field._mul_coords(self.coords, other.coords))

    __rmul__ = __mul__

    def inverse(self) -> NfElement:
        """Multiplicative inverse."""
        if not self:
            raise ZeroDivisionError("The zero element is not invertible.")
        one = [1] + [0] * (self.field.degree - 1)
        return NfElement(self.field, solve_left(self.matrix(), one))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("Division by zero.")
            return NfElement(self.field, [a / other for a in self.coords])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        if not isinstance(other, NfElement):
            return NotImplemented
        same_field = self.field is other.field or self.field == other.field
        return same_field and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def matrix(self) -> list[list[Fraction]]:
        """Rows are the coordinates of ``self * e_i``."""
        return self.field._matrix(self.coords)

    def trace(self) -> Fraction:
        """Trace down to ``QQ``."""
        m = self.matrix()
        return sum((m[i][i] for i in range(len(m))), Fraction(0))

    def norm(self) -> Fraction:
        """Norm down to ``QQ``."""
        return det(self.matrix())

    def charpoly(self) -> Poly:
        """Characteristic polynomial of multiplication by ``self``."""
        return charpoly(self.matrix())

    def min_poly(self) -> Poly:
        """Minimal polynomial over ``QQ``."""
        chi = self.charpoly()
        return chi.squarefree_part()

    def is_integral(self) -> bool:
        """Whether the minimal polynomial has integer coefficients."""
        return all(c.denominator == 1 for c in self.min_poly().coeffs)

    def to_poly(self) -> Poly:
        """Representation as a rational polynomial in the generator."""
        return Poly(vec_mat(list(self.coords), self.field._to_power))

    def __repr__(self):
        return f"NfElement({[str(c) for c in self.coords]})"

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coords) + "]"


def _power_table(f: Poly) -> list:
    n = f.degree()
    powers = [[Fraction(1 if k == i else 0) for k in range(n)] for i in range(n)]
    for _ in range(n, 2 * n - 1):
        last = powers[-1]
        top = last[-1]
        nxt = [Fraction(0)] + last[:-1]
        nxt = [a - top * c for a, c in zip(nxt, f.coeffs[:n])]
        powers.append(nxt)
    return [[powers[i + j] for j in range(n)] for i in range(n)]


def _as_poly(f: Union[Poly, str, Sequence]) -> Poly:
    if isinstance(f, Poly):
        return f
    if isinstance(f, str):
        return parse_poly(f)
    return Poly(f)


def field_from_poly(
    f: Union[Poly, str, Sequence], *, check: bool = True
) -> NumberField:
    """
    Number field ``QQ[X]/(f)`` with the power basis of a root.

    Parameters
    ----------
    f : Poly, str or list
        Irreducible rational polynomial of degree at least 1.
    check : bool, optional
        Whether to prove irreducibility first.

    Raises
    ------
    Reducible
        If ``f`` factors over ``QQ``.

    Examples
    --------
    >>> field_from_poly("x^2 + 1").signature()
    (0, 1)
    """
    f = _as_poly(f)
    if f.degree() < 1:
        raise ValueError("A defining polynomial needs degree at least 1.")
    f = f.monic()
    if check:
        _, parts = factor_q(f)
        if len(parts) != 1 or parts[0][1] != 1:
            raise Reducible(f, parts[0][0])
    n = f.degree()
    generator = [Fraction(0)] * n
    if n == 1:
        generator[0] = -f.coeffs[0]
    else:
        generator[1] = Fraction(1)
    return NumberField(_power_table(f), f, generator, power_basis=True)


def rationals() -> NumberField:
    """The field ``QQ`` as a degree one number field."""
    return field_from_poly(Poly([0, 1]), check=False)


def _candidate_coords(n: int) -> Iterator[list]:
    def unit(i):
        return [1 if k == i else 0 for k in range(n)]

    for i in range(n):
        yield unit(i)
    for c in range(1, n + 1):
        for sign in (c, -c):
            for i in range(1, n):
                for j in range(i + 1, n):
                    v = unit(i)
                    v[j] = sign
                    yield v
    c = 2
    while True:
        yield [c**k for k in range(n)]
        c += 1


def _find_primitive(algebra: _TableAlgebra) -> tuple[list, Poly]:
    for coords in _candidate_coords(algebra.degree):
        chi = algebra._charpoly(coords)
        if chi.is_squarefree():
            return coords, chi


def validate_field(n: int, table: Sequence) -> NumberField:
    """
    Check structure constants and return the field they define.

    Parameters
    ----------
    n : int
        Dimension.
    table : list
        ``n`` by ``n`` by ``n`` rational structure constants.

    Raises
    ------
    NotARing
        If ``e_1`` is not the identity, or commutativity or associativity fails.
    NotAField
        If the algebra has a zero divisor; the witness is attached.
    """
    if n < 1 or len(table) != n or any(
        len(row) != n or any(len(entry) != n for entry in row) for row in table
    ):
        raise NotARing("the table does not have shape n x n x n", ())
    algebra = _TableAlgebra()
    algebra._set_table(table)
    t = algebra.table

    def unit(i):
        return tuple(Fraction(1 if k == i else 0) for k in range(n))

    for j in range(n):
        if t[0][j] != unit(j) or t[j][0] != unit(j):
            raise NotARing("e_1 is not the identity", (0, j))
    for i in range(n):
        for j in range(i + 1, n):
            if t[i][j] != t[j][i]:
                raise NotARing("multiplication is not commutative", (i, j))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = algebra._mul_coords(t[i][j], unit(k))
                right = algebra._mul_coords(unit(i), t[j][k])
                if left != right:
                    raise NotARing("multiplication is not associative", (i, j, k))
    trace_form = [
        [sum(algebra._matrix(t[i][j])[k][k] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    if det(trace_form) == 0:
        witness = kernel_rational(trace_form)[0]
        raise NotAField("the algebra has a nilpotent element", witness)
    coords, chi = _find_primitive(algebra)
    _, parts = factor_q(chi)
    if len(parts) > 1:
        g = parts[0][0]
        acc = [Fraction(0)] * n
        power = list(unit(0))
        for c in g.coeffs:
            acc = [a + c * b for a, b in zip(acc, power)]
            power = algebra._mul_coords(power, coords)
        raise NotAField("the algebra is a product of fields", acc)
    logger.debug("validated a degree %d field with generator %s", n, coords)
    return NumberField(t, chi, coords)


def primitive_element(field: NumberField) -> NfElement:
    """First element of the standard sweep whose minimal polynomial has degree n."""
    coords, _ = _find_primitive(field)
    return field.element(coords)


def min_poly(x: NfElement) -> Poly:
    """Minimal polynomial of ``x`` over ``QQ``."""
    return x.min_poly()


class FieldHomomorphism:
    """
    A field embedding fixed by the image of the source generator.

    Parameters
    ----------
    source : NumberField
    target : NumberField
    image : NfElement
        Image of ``source.gen``; a root of the source defining polynomial.
    """

    def __init__(self, source: NumberField, target: NumberField, image: NfElement):
        self.source = source
        self.target = target
        self.image = image

    def __call__(self, x: NfElement) -> NfElement:
        return x.to_poly()(self.image) + self.target.zero

    def compose(self, other: FieldHomomorphism) -> FieldHomomorphism:
        """The map ``x -> self(other(x))``."""
        if other.target != self.source:
            raise ValueError("The maps cannot be composed.")
        return FieldHomomorphism(other.source, self.target, self(other.image))

    def is_isomorphism(self) -> bool:
        """Whether source and target have equal degree."""
        return self.source.degree == self.target.degree

    def __eq__(self, other):
        return (
            isinstance(other, FieldHomomorphism)
            and self.source == other.source
            and self.image == other.image
        )

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"FieldHomomorphism(gen -> {self.image})"


def homs(source: NumberField, target: NumberField) -> list[FieldHomomorphism]:
    """
    All field homomorphisms from ``source`` into ``target``.

    The images of the source generator are the roots of its defining
    polynomial in ``target``.
    """
    f = source.defining_poly.to_domain(target)
    _, parts = factor_nf(f, target)
    images = [-g.coeffs[0] for g, _ in parts if g.degree() == 1]
    return [FieldHomomorphism(source, target, beta) for beta in images]


class Reducible(ValueError):
    """Raised when a defining polynomial factors over ``QQ``."""

    def __init__(self, poly: Poly, factor: Poly):
        self.poly = poly
        self.factor = factor
        super().__init__(f"`{poly}` is reducible; `{factor}` divides it.")


class NotARing(ValueError):
    """Raised when structure constants do not define a commutative unital ring."""

    def __init__(self, reason: str, indices: tuple):
        self.reason = reason
        self.indices = indices
        super().__init__(f"Not a commutative ring: {reason} at {indices}.")


class NotAField(ValueError):
    """Raised when a valid algebra is not a field; carries a zero divisor."""

    def __init__(self, reason: str, zero_divisor: Sequence):
        self.reason = reason
        self.zero_divisor = tuple(Fraction(x) for x in zero_divisor)
        super().__init__(
            f"Not a field: {reason}; witness "
            f"{[str(x) for x in self.zero_divisor]}."
        )


class ZeroElement(ValueError):
    """Raised when an operation needs a nonzero element."""

    def __init__(self):
        super().__init__("The element must be nonzero.")
