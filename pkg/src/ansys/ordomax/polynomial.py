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
Provides the ``Poly`` class for univariate polynomials over a field.

The coefficient field is any object with ``zero``, ``one`` and ``convert``;
``QQ`` covers the rationals and a ``NumberField`` covers algebraic
coefficients.
"""

from __future__ import annotations

from fractions import Fraction
import math
from typing import Sequence

from ansys.ordomax.linalg import det


class RationalField:
    """The field of rational numbers as a coefficient domain."""

    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, c) -> Fraction:
        """Coerce an int, Fraction or numeric string."""
        return Fraction(c)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class Poly:
    """
    Immutable univariate polynomial.

    Parameters
    ----------
    coeffs : list
        Coefficients from the constant term upward.
    domain : optional
        Coefficient field, ``QQ`` by default.

    Examples
    --------
    >>> str(Poly([-2, 0, 1]))
    'x^2 - 2'
    """

    __slots__ = ("coeffs", "domain")

    def __init__(self, coeffs: Sequence = (), domain=QQ):
        c = [domain.convert(a) for a in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)
        self.domain = domain

    @classmethod
    def x(cls, domain=QQ) -> Poly:
        """The indeterminate."""
        return cls([0, 1], domain)

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        """Leading coefficient."""
        return self.coeffs[-1] if self.coeffs else self.domain.zero

    def __bool__(self):
        return bool(self.coeffs)

    def _new(self, coeffs) -> Poly:
        return Poly(coeffs, self.domain)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.domain != self.domain:
                raise ValueError("Polynomials are over different domains.")
            return other
        try:
            return self._new([self.domain.convert(other)])
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return self._new([x + b[i] if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return self._new([-x for x in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return self._new([])
        out = [self.domain.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return self._new(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("Polynomial division by zero.")
        rem = list(self.coeffs)
        d = other.degree()
        dq = len(rem) - 1 - d
        if dq < 0:
            return self._new([]), self
        inv = self.domain.one / other.lc
        quo = [self.domain.zero] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + d] * inv
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    if b:
                        rem[k + j] = rem[k + j] - c * b
        return self._new(quo), self._new(rem[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("Negative powers are not supported.")
        result = self._new([self.domain.one])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = self._coerce(other)
            if other is NotImplemented:
                return False
        return self.domain == other.domain and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, a):
        """Evaluate by Horner's rule at any element the coefficients act on."""
        acc = self.domain.zero
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def compose(self, g: Poly) -> Poly:
        """Return ``self(g)``."""
        acc = self._new([])
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def monic(self) -> Poly:
        """Divide by the leading coefficient."""
        if not self.coeffs:
            return self
        inv = self.domain.one / self.lc
        return self._new([c * inv for c in self.coeffs])

    def derivative(self) -> Poly:
        """Formal derivative."""
        return self._new([c * i for i, c in enumerate(self.coeffs)][1:])

    def gcd(self, other: Poly) -> Poly:
        """Monic greatest common divisor, zero for two zero inputs."""
        a, b = self, self._coerce(other)
        while b:
            a, b = b, a % b
        return a.monic()

    def is_squarefree(self) -> bool:
        """Whether ``self`` has no repeated factor."""
        if self.degree() < 1:
            return True
        return self.gcd(self.derivative()).degree() == 0

    def squarefree_decomposition(self) -> list[tuple[Poly, int]]:
        """
        Yun's algorithm in characteristic zero.

        Returns
        -------
        list
            Pairs ``(g_i, i)`` with ``self`` equal to ``lc * prod g_i**i``.
        """
        a = self.monic()
        if a.degree() < 1:
            return []
        c = a.gcd(a.derivative())
        w = a // c
        result = []
        i = 1
        while w.degree() > 0:
            y = w.gcd(c)
            z = w // y
            if z.degree() > 0:
                result.append((z.monic(), i))
            i += 1
            w = y
            c = c // y
        return result

    def squarefree_part(self) -> Poly:
        """Monic product of the distinct irreducible factors."""
        if self.degree() < 1:
            return self._new([self.domain.one])
        return (self // self.gcd(self.derivative())).monic()

    def content(self) -> Fraction:
        """Positive rational content of a ``QQ`` polynomial."""
        if not self.coeffs:
            return Fraction(0)
        den = 1
        for c in self.coeffs:
            den = math.lcm(den, c.denominator)
        num = 0
        for c in self.coeffs:
            num = math.gcd(num, int(c * den))
        return Fraction(num, den)

    def primitive(self) -> tuple[Fraction, list[int]]:
        """
        Split a ``QQ`` polynomial into content and primitive integer part.

        The integer part has a positive leading coefficient.
        """
        cont = self.content()
        if self.lc < 0:
            cont = -cont
        return cont, [int(c / cont) for c in self.coeffs]

    def to_domain(self, domain) -> Poly:
        """Coerce every coefficient into another domain."""
        return Poly(self.coeffs, domain)

    def sort_key(self) -> tuple:
        """Key ordering polynomials by degree, then coefficients from the top."""
        key = tuple(_coefficient_key(c) for c in reversed(self.coeffs))
        return (self.degree(), key)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]}, {self.domain!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if isinstance(c, Fraction):
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                if mono and mag == 1:
                    body = mono
                elif mono:
                    body = f"{mag}*{mono}"
                else:
                    body = str(mag)
            else:
                sign, body = "+", f"({c})" + (f"*{mono}" if mono else "")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coefficient_key(c):
    coords = getattr(c, "coords", None)
    if coords is not None:
        return tuple(coords)
    return (c,)


def interpolate(xs: Sequence, ys: Sequence) -> Poly:
    """Newton interpolation over ``QQ`` through the points ``(xs[i], ys[i])``."""
    xs = [Fraction(x) for x in xs]
    table = [Fraction(y) for y in ys]
    n = len(xs)
    coefficients = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(n - level)
        ]
        coefficients.append(table[0])
    result = Poly([coefficients[-1]])
    for k in range(n - 2, -1, -1):
        result = result * Poly([-xs[k], 1]) + coefficients[k]
    return result


def sylvester_matrix(f: Poly, g: Poly) -> list[list]:
    """Sylvester matrix of two nonconstant polynomials, top coefficients first."""
    m, n = f.degree(), g.degree()
    size = m + n
    zero = f.domain.zero
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(f.coeffs)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(g.coeffs)):
            row[i + k] = c
        rows.append(row)
    return rows


def resultant(f: Poly, g: Poly):
    """Resultant as the determinant of the Sylvester matrix."""
    if not f or not g:
        return f.domain.zero
    if f.degree() == 0:
        return f.lc ** g.degree()
    if g.degree() == 0:
        return g.lc ** f.degree()
    return det(sylvester_matrix(f, g))


def discriminant(f: Poly):
    """
    Discriminant ``(-1)**(n(n-1)/2) * Res(f, f') / lc(f)``.

    Examples
    --------
    >>> discriminant(Poly([1, 0, 1]))
    Fraction(-4, 1)
    """
    n = f.degree()
    if n < 1:
        raise ValueError("The discriminant needs a nonconstant polynomial.")
    if n == 1:
        return f.domain.one
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return resultant(f, f.derivative()) * sign / f.lc


def _sign_changes(values: Sequence[int]) -> int:
    signs = [v for v in values if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(f: Poly) -> int:
    """Number of distinct real roots of a nonzero ``QQ`` polynomial."""
    if f.degree() < 1:
        return 0
    sequence = [f, f.derivative()]
    while sequence[-1].degree() > 0:
        r = sequence[-2] % sequence[-1]
        if not r:
            break
        sequence.append(-r)

    def sign(c):
        return (c > 0) - (c < 0)

    at_plus = [sign(p.lc) for p in sequence]
    at_minus = [sign(p.lc) * (-1) ** p.degree() for p in sequence]
    return _sign_changes(at_minus) - _sign_changes(at_plus)


def parse_poly(text: str) -> Poly:
    """
    Parse a rational polynomial in ``x``.

    Multiplication must be explicit, as in ``3*x^2 - 1/2*x + 7``. Whitespace
    is ignored.

    Raises
    ------
    PolynomialSyntaxError
        On malformed input, with the offending byte offset.

    Examples
    --------
    >>> parse_poly("x^2 - 2").coeffs
    (Fraction(-2, 1), Fraction(0, 1), Fraction(1, 1))
    """
    return _PolyParser(text).parse()


class _PolyParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        offset = len(self.text[: self.pos].encode("utf-8"))
        raise PolynomialSyntaxError(self.text, offset, message)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            self.fail("expected a digit")
        return int(self.text[start : self.pos])

    def parse(self) -> Poly:
        terms = {}
        if not self.peek():
            self.fail("empty polynomial")
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            coefficient, power = self.term()
            terms[power] = terms.get(power, Fraction(0)) + sign * coefficient
            nxt = self.peek()
            if not nxt:
                break
            if nxt not in ("+", "-"):
                self.fail(f"unexpected character {nxt!r}")
            sign = -1 if nxt == "-" else 1
            self.pos += 1
        degree = max(terms)
        coeffs = [terms.get(i, Fraction(0)) for i in range(degree + 1)]
        return Poly(coeffs)

    def term(self) -> tuple[Fraction, int]:
        nxt = self.peek()
        if nxt in ("x", "X"):
            return Fraction(1), self.monomial()
        if not nxt or nxt not in "0123456789":
            self.fail("expected a coefficient or x")
        coefficient = Fraction(self.integer())
        if self.peek() == "/":
            self.pos += 1
            den = self.integer()
            if den == 0:
                self.fail("zero denominator")
            coefficient /= den
        nxt = self.peek()
        if nxt in ("x", "X"):
            self.fail("expected '*' between coefficient and x")
        if nxt == "*":
            self.pos += 1
            if self.peek() not in ("x", "X") or not self.peek():
                self.fail("expected x after '*'")
            return coefficient, self.monomial()
        return coefficient, 0

    def monomial(self) -> int:
        self.pos += 1
        if self.peek() == "^":
            self.pos += 1
            return self.integer()
        return 1


class PolynomialSyntaxError(ValueError):
    """Raised when a polynomial string cannot be parsed."""

    def __init__(self, text: str, offset: int, message: str):
        self.text = text
        self.offset = offset
        super().__init__(f"Cannot parse `{text}` at byte {offset}: {message}.")
