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
Provides the ``PrimeField`` and ``FpPoly`` classes.

Polynomials over ``F_p`` are factored with the classical pipeline: squarefree
decomposition, distinct degree factorization and Cantor-Zassenhaus equal
degree splitting.
"""

from __future__ import annotations

import math
import random
from typing import Sequence, Union

from ansys.ordomax.linalg import ZeroDivisorFound


class PrimeField:
    """
    The field ``Z/pZ``.

    Primality of ``p`` is not checked; a composite modulus surfaces as
    ``ZeroDivisorFound`` on the first failed inversion.
    """

    def __init__(self, p: int):
        if p < 2:
            raise ValueError(f"`{p}` is not a valid characteristic.")
        self.p = p

    def __call__(self, a: int) -> int:
        return a % self.p

    def inverse(self, a: int) -> int:
        """Inverse of ``a``."""
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 is not invertible in F_{self.p}.")
        g = math.gcd(a, self.p)
        if g != 1:
            raise ZeroDivisorFound(g, self.p)
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class FpPoly:
    """
    Immutable polynomial over a prime field.

    Coefficients are stored from the constant term upward with trailing zeros
    removed.

    Parameters
    ----------
    coeffs : list of int
        Coefficients, lowest degree first.
    field : PrimeField or int
        Coefficient field or its characteristic.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs: Sequence[int], field: Union[PrimeField, int]):
        if isinstance(field, int):
            field = PrimeField(field)
        p = field.p
        c = [int(a) % p for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def x(cls, field) -> FpPoly:
        """The indeterminate."""
        return cls([0, 1], field)

    @classmethod
    def constant(cls, c: int, field) -> FpPoly:
        """Constant polynomial ``c``."""
        return cls([c], field)

    @property
    def p(self) -> int:
        """Characteristic."""
        return self.field.p

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        """Leading coefficient."""
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def _new(self, coeffs) -> FpPoly:
        return FpPoly(coeffs, self.field)

    def _coerce(self, other) -> FpPoly:
        if isinstance(other, FpPoly):
            if other.field != self.field:
                raise ValueError("Polynomials are over different fields.")
            return other
        if isinstance(other, int):
            return self._new([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return self._new([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

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
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return self._new(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("Polynomial division by zero.")
        p = self.p
        inv = self.field.inverse(other.lc)
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return self._new([]), self
        quo = [0] * (dq + 1)
        d = other.degree()
        for k in range(dq, -1, -1):
            c = rem[k + d] * inv % p
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = (rem[k + j] - c * b) % p
        return self._new(quo), self._new(rem[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("Negative powers are not supported.")
        result = self._new([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def powmod(self, e: int, modulus: FpPoly) -> FpPoly:
        """``self ** e`` reduced modulo ``modulus``."""
        result = self._new([1]) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._new([other])
        return (
            isinstance(other, FpPoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __call__(self, a: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.p
        return acc

    def monic(self) -> tuple[int, FpPoly]:
        """Split off the leading coefficient: ``(lc, monic part)``."""
        if not self.coeffs:
            return 0, self
        lc = self.lc
        inv = self.field.inverse(lc)
        return lc, self._new([c * inv for c in self.coeffs])

    def derivative(self) -> FpPoly:
        """Formal derivative."""
        return self._new([i * c for i, c in enumerate(self.coeffs)][1:])

    def gcd(self, other: FpPoly) -> FpPoly:
        """Monic greatest common divisor."""
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()[1] if a else a

    def gcdex(self, other: FpPoly) -> tuple[FpPoly, FpPoly, FpPoly]:
        """
        Extended Euclidean algorithm.

        Returns
        -------
        tuple
            ``(s, t, g)`` with ``s*self + t*other = g`` and ``g`` monic.
        """
        r0, r1 = self, other
        s0, s1 = self._new([1]), self._new([])
        t0, t1 = self._new([]), self._new([1])
        while r1:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if not r0:
            return s0, t0, r0
        inv = self.field.inverse(r0.lc)
        return s0 * inv, t0 * inv, r0 * inv

    def sort_key(self) -> tuple:
        """Key ordering polynomials by degree, then coefficients from the top."""
        return (self.degree(), tuple(reversed(self.coeffs)))

    def __repr__(self):
        return f"FpPoly({list(self.coeffs)}, {self.p})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "X" if i == 1 else f"X^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def squarefree_decomposition(f: FpPoly) -> tuple[int, list[tuple[FpPoly, int]]]:
    """
    Squarefree decomposition over ``F_p``.

    Returns
    -------
    tuple
        ``(lc, [(g_i, i), ...])`` with ``f = lc * prod g_i**i`` and the
        ``g_i`` monic, squarefree and pairwise coprime.
    """
    if not f:
        raise ValueError("The zero polynomial has no squarefree decomposition.")
    p = f.p
    lc, f = f.monic()
    if f.degree() < 1:
        return lc, []
    n, sqf, factors = 1, False, []
    one = FpPoly([1], f.field)
    while True:
        F = f.derivative()
        if F:
            g = f.gcd(F)
            h = f // g
            i = 1
            while h != one:
                G = h.gcd(g)
                H = h // G
                if H.degree() > 0:
                    factors.append((H, i * n))
                g, h, i = g // G, G, i + 1
            if g == one:
                sqf = True
            else:
                f = g
        if not sqf:
            d = f.degree() // p
            f = FpPoly([f.coeffs[i * p] for i in range(d + 1)], f.field)
            n *= p
        else:
            break
    return lc, factors


def squarefree_part(f: FpPoly) -> FpPoly:
    """Product of the distinct monic irreducible factors of ``f``."""
    _, factors = squarefree_decomposition(f)
    result = FpPoly([1], f.field)
    for g, _ in factors:
        result = result * g
    return result


def distinct_degree(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """
    Distinct degree factorization of a monic squarefree polynomial.

    Returns
    -------
    list
        Pairs ``(g, d)`` where ``g`` is the product of all irreducible
        factors of degree ``d``.
    """
    x = FpPoly.x(f.field)
    result = []
    rest = f
    h = x % rest
    d = 1
    while 2 * d <= rest.degree():
        h = h.powmod(f.p, rest)
        g = rest.gcd(h - x)
        if g.degree() > 0:
            result.append((g, d))
            rest = rest // g
            h = h % rest
        d += 1
    if rest.degree() > 0:
        result.append((rest, rest.degree()))
    return result


def equal_degree(f: FpPoly, d: int, rng: random.Random) -> list[FpPoly]:
    """
    Cantor-Zassenhaus splitting of a product of degree ``d`` irreducibles.

    Characteristic 2 uses the trace map in place of the quadratic character.
    """
    n = f.degree()
    if n <= d:
        return [f]
    p = f.p
    while True:
        r = FpPoly([rng.randrange(p) for _ in range(n)], f.field)
        if r.degree() < 1:
            continue
        if p == 2:
            term = r
            acc = r
            for _ in range(d - 1):
                term = (term * term) % f
                acc = acc + term
            g = f.gcd(acc)
        else:
            g = f.gcd(r)
            if not 0 < g.degree() < n:
                g = f.gcd(r.powmod((p**d - 1) // 2, f) - 1)
        if 0 < g.degree() < n:
            return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def factor(f: FpPoly, seed: int = 0) -> tuple[int, list[tuple[FpPoly, int]]]:
    """
    Complete factorization over ``F_p``.

    Parameters
    ----------
    f : FpPoly
        Nonzero polynomial.
    seed : int, optional
        Seed of the equal degree splitting.

    Returns
    -------
    tuple
        ``(lc, [(g, e), ...])`` with monic irreducible ``g`` in canonical
        order.
    """
    rng = random.Random(seed)
    lc, parts = squarefree_decomposition(f)
    factors = []
    for h, multiplicity in parts:
        for g, d in distinct_degree(h):
            for irreducible in equal_degree(g, d, rng):
                factors.append((irreducible, multiplicity))
    factors.sort(key=lambda item: (item[0].sort_key(), item[1]))
    return lc, factors


def factorization_type(f: FpPoly) -> tuple[tuple[int, int], ...]:
    """
    Multiset of ``(degree, multiplicity)`` pairs, sorted.

    Needs no equal degree splitting, so it is deterministic.

    Examples
    --------
    >>> factorization_type(FpPoly([1, 0, 1], 2))
    ((1, 2),)
    """
    _, parts = squarefree_decomposition(f)
    shape = []
    for h, multiplicity in parts:
        for g, d in distinct_degree(h):
            shape.extend([(d, multiplicity)] * (g.degree() // d))
    return tuple(sorted(shape))


def is_irreducible(f: FpPoly) -> bool:
    """Whether ``f`` is irreducible over ``F_p``."""
    if f.degree() < 1:
        return False
    return factorization_type(f) == ((f.degree(), 1),)
