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
Provides certified numerics for the infinite places.

Complex roots are located with ``mpmath.polyroots`` and then certified with
disjoint inclusion discs; evaluation uses ``mpmath.iv`` interval arithmetic so
every returned quantity is an interval containing the true value.
"""

from __future__ import annotations

import contextlib
from fractions import Fraction
import logging
import threading
from typing import Iterator, Union

import mpmath
from mpmath import iv, mp
from mpmath.libmp.libhyper import NoConvergence

from ansys.ordomax._constants import _max_precision
from ansys.ordomax.polynomial import Poly, sturm_count

logger = logging.getLogger(__name__)

_precision_lock = threading.RLock()


@contextlib.contextmanager
def working_precision(bits: int) -> Iterator[None]:
    """
    Temporarily set the precision of both ``mp`` and ``iv``.

    Both contexts are process globals. The block holds a reentrant lock, so
    threads run their certified numerics one at a time and never see each
    other's precision. Interval code outside such a block uses whatever
    precision is current.
    """
    with _precision_lock:
        old_mp, old_iv = mp.prec, iv.prec
        mp.prec = bits
        iv.prec = bits
        try:
            yield
        finally:
            mp.prec = old_mp
            iv.prec = old_iv


def to_interval(c: Union[int, Fraction]) -> iv.mpf:
    """Smallest outward rounded interval containing a rational."""
    c = Fraction(c)
    return iv.mpf(c.numerator) / iv.mpf(c.denominator)


def _raw_to_fraction(raw: tuple) -> Fraction:
    sign, man, exp, _ = raw
    if man == 0:
        if exp != 0:
            raise ArithmeticError("The interval has an infinite endpoint.")
        return Fraction(0)
    value = Fraction(int(man)) * (Fraction(2) ** int(exp))
    return -value if sign else value


def to_fraction(x: mpmath.mpf) -> Fraction:
    """Exact value of a finite ``mpf``."""
    return _raw_to_fraction(x._mpf_)


def lower(x: iv.mpf) -> Fraction:
    """Exact lower endpoint."""
    return _raw_to_fraction(x._mpi_[0])


def upper(x: iv.mpf) -> Fraction:
    """Exact upper endpoint."""
    return _raw_to_fraction(x._mpi_[1])


def width(x: iv.mpf) -> Fraction:
    """Exact width."""
    return upper(x) - lower(x)


def midpoint(x: iv.mpf) -> Fraction:
    """Exact midpoint."""
    return (lower(x) + upper(x)) / 2


def hull(lo: Fraction, hi: Fraction) -> iv.mpf:
    """Interval containing ``[lo, hi]``."""
    a = to_interval(lo)
    return a + (to_interval(hi) - a) * iv.mpf([0, 1])


def interval_max(x: iv.mpf, c: Union[int, Fraction]) -> iv.mpf:
    """Interval enclosure of ``max(x, c)``."""
    lo, hi = lower(x), upper(x)
    return hull(max(lo, Fraction(c)), max(hi, Fraction(c)))


def interval_pow(x: iv.mpf, k: int) -> iv.mpf:
    """``x**k`` with ``x**0 = 1``."""
    if k == 0:
        return iv.mpf(1)
    return x**k


class ComplexInterval:
    """
    A rectangle in the complex plane.

    Parameters
    ----------
    re : iv.mpf
        Real part.
    im : iv.mpf, optional
        Imaginary part, exactly zero by default.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: iv.mpf, im: iv.mpf = None):
        self.re = re
        self.im = iv.mpf(0) if im is None else im

    @classmethod
    def coerce(cls, x) -> ComplexInterval:
        """Wrap rationals and real intervals."""
        if isinstance(x, ComplexInterval):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(to_interval(x))
        return cls(x)

    def __add__(self, other):
        other = ComplexInterval.coerce(other)
        return ComplexInterval(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = ComplexInterval.coerce(other)
        return ComplexInterval(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ComplexInterval(-self.re, -self.im)

    def __mul__(self, other):
        other = ComplexInterval.coerce(other)
        return ComplexInterval(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> ComplexInterval:
        """Complex conjugate."""
        return ComplexInterval(self.re, -self.im)

    def abs_squared(self) -> iv.mpf:
        """Enclosure of ``|z|**2``."""
        return _square(self.re) + _square(self.im)

    def abs(self) -> iv.mpf:
        """Enclosure of ``|z|``."""
        return iv.sqrt(self.abs_squared())

    def log_abs(self) -> iv.mpf:
        """Enclosure of ``log |z|``; fails when zero is not excluded."""
        sq = self.abs_squared()
        if lower(sq) <= 0:
            raise ArithmeticError("Cannot take the logarithm near zero.")
        return iv.log(sq) / 2

    def __repr__(self):
        return f"ComplexInterval({self.re}, {self.im})"


def _square(x: iv.mpf) -> iv.mpf:
    lo, hi = lower(x), upper(x)
    if lo >= 0 or hi <= 0:
        return x * x
    return hull(Fraction(0), max(lo * lo, hi * hi))


def evaluate(f: Poly, z: ComplexInterval) -> ComplexInterval:
    """Horner evaluation of a rational polynomial on a complex interval."""
    acc = ComplexInterval(iv.mpf(0))
    for c in reversed(f.coeffs):
        acc = acc * z + to_interval(c)
    return acc


class RootBox:
    """
    Certified enclosure of a single root.

    The rectangle ``re x im`` contains exactly one root of the polynomial;
    real roots have ``im`` exactly zero.
    """

    def __init__(self, re: iv.mpf, im: iv.mpf, real: bool):
        self.re = re
        self.im = im
        self.real = real

    @property
    def interval(self) -> ComplexInterval:
        """The enclosure as a complex interval."""
        return ComplexInterval(self.re, self.im)

    def __repr__(self):
        return f"RootBox({self.re}, {self.im}, real={self.real})"


def _disc_radius(f: Poly, df: Poly, z) -> Union[Fraction, None]:
    point = ComplexInterval(iv.mpf(z.real), iv.mpf(z.imag))
    value = evaluate(f, point).abs_squared()
    slope = evaluate(df, point).abs_squared()
    if lower(slope) <= 0:
        return None
    ratio = upper(iv.sqrt(value / slope))
    return f.degree() * ratio


def _certify(f: Poly, bits: int, precision: int):
    n = f.degree()
    r = sturm_count(f)
    df = f.derivative()
    coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(f.coeffs)]
    try:
        roots = mpmath.polyroots(coeffs, maxsteps=100 + 20 * n, extraprec=bits)
    except NoConvergence:
        return None
    roots = sorted(roots, key=lambda z: abs(mpmath.mpc(z).imag))
    centers = [mpmath.mpc(z.real, 0) for z in roots[:r]]
    upper_half = [mpmath.mpc(z) for z in roots[r:] if mpmath.mpc(z).imag > 0]
    if len(upper_half) != (n - r) // 2:
        return None
    discs = []
    for z in centers + upper_half:
        rho = _disc_radius(f, df, z)
        if rho is None or rho >= Fraction(1, 2**precision):
            return None
        discs.append((z, rho))
    every = discs + [(mpmath.conj(z), rho) for z, rho in discs[r:]]
    for z, rho in discs[r:]:
        if abs(to_fraction(z.imag)) <= rho:
            return None
    for i in range(len(every)):
        for j in range(i + 1, len(every)):
            (zi, ri), (zj, rj) = every[i], every[j]
            d = ComplexInterval(iv.mpf(zi.real), iv.mpf(zi.imag)) - ComplexInterval(
                iv.mpf(zj.real), iv.mpf(zj.imag)
            )
            if lower(d.abs_squared()) <= (ri + rj) ** 2:
                return None
    boxes = []
    for k, (z, rho) in enumerate(discs):
        re = hull(to_fraction(z.real) - rho, to_fraction(z.real) + rho)
        if k < r:
            boxes.append(RootBox(re, iv.mpf(0), True))
        else:
            im = hull(to_fraction(z.imag) - rho, to_fraction(z.imag) + rho)
            boxes.append(RootBox(re, im, False))
    reals = sorted(boxes[:r], key=lambda b: midpoint(b.re))
    complexes = sorted(boxes[r:], key=lambda b: (midpoint(b.re), midpoint(b.im)))
    return reals, complexes


def certified_roots(f: Poly, precision: int) -> tuple[list[RootBox], list[RootBox]]:
    """
    Certified roots of a squarefree rational polynomial.

    Parameters
    ----------
    f : Poly
        Squarefree polynomial over ``QQ``.
    precision : int
        Target enclosure radius is ``2**-precision``.

    Returns
    -------
    tuple
        Real roots in increasing order, then one root from each complex
        conjugate pair, the one with positive imaginary part.

    Raises
    ------
    PrecisionExceeded
        If certification fails below the configured maximum precision.
    """
    if f.degree() == 1:
        root = to_interval(-f.coeffs[0] / f.coeffs[1])
        return [RootBox(root, iv.mpf(0), True)], []
    bits = max(precision, 32)
    while bits <= _max_precision:
        with working_precision(bits + 32):
            result = _certify(f, bits, precision)
        if result is not None:
            return result
        logger.debug("root certification failed at %d bits, doubling", bits)
        bits *= 2
    raise PrecisionExceeded(precision)


class Embedding:
    """
    An infinite place of a number field.

    Parameters
    ----------
    field : NumberField
    kind : str
        ``"real"`` or ``"complex"``.
    index : int
        Position among places of the same kind.
    root : RootBox
        Enclosure of the image of the field generator.
    """

    def __init__(self, field, kind: str, index: int, root: RootBox):
        self.field = field
        self.kind = kind
        self.index = index
        self.root = root

    @property
    def weight(self) -> int:
        """Local degree: 1 for real places and 2 for complex ones."""
        return 1 if self.kind == "real" else 2

    def __call__(self, x) -> ComplexInterval:
        return evaluate(x.to_poly(), self.root.interval)

    def abs(self, x) -> iv.mpf:
        """Enclosure of ``|sigma(x)|``."""
        return self(x).abs()

    def __repr__(self):
        return f"Embedding({self.kind}, {self.index})"


def field_embeddings(field, precision: int) -> list[Embedding]:
    """Certified embeddings of a field, real places first."""
    reals, complexes = certified_roots(field.defining_poly, precision)
    places = [Embedding(field, "real", i, box) for i, box in enumerate(reals)]
    places += [Embedding(field, "complex", i, box) for i, box in enumerate(complexes)]
    return places


def format_interval(x: iv.mpf, digits: int = 15) -> dict:
    """Deterministic JSON form of an interval: midpoint and radius strings."""
    mid = midpoint(x)
    radius = width(x) / 2
    with working_precision(max(64, 4 * digits)):
        return {
            "mid": mpmath.nstr(mpmath.mpf(mid.numerator) / mid.denominator, digits),
            "radius": mpmath.nstr(
                mpmath.mpf(radius.numerator) / radius.denominator, 3
            ),
        }


class PrecisionExceeded(ArithmeticError):
    """Raised when certified numerics need more than the maximum precision."""

    def __init__(self, precision: int):
        super().__init__(
            f"Could not certify a result at {precision} bits within the "
            f"maximum of {_max_precision} bits."
        )
