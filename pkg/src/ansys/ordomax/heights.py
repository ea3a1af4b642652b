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
Provides places, heights and the class number bounds of a number field.

Absolute values are normalized so that the product formula holds: a real
place uses ``|x|``, a complex place ``|x|^2`` and a finite place ``P`` the
value ``N(P)^(-v_P(x))``.
"""

from __future__ import annotations

from fractions import Fraction
import logging
import math
from typing import Optional

from mpmath import iv

from ansys.ordomax._constants import _max_precision, default_precision
from ansys.ordomax.archimedean import (
    Embedding,
    PrecisionExceeded,
    format_interval,
    interval_max,
    interval_pow,
    lower,
    to_interval,
    upper,
    width,
    working_precision,
)
from ansys.ordomax.number_field import NfElement, NumberField, ZeroElement
from ansys.ordomax.orders import Order, OrderIdeal
from ansys.ordomax.prime_ideal import PrimeIdeal

logger = logging.getLogger(__name__)


class Place:
    """
    A place of a number field.

    Parameters
    ----------
    kind : str
        ``"real"``, ``"complex"`` or ``"finite"``.
    embedding : Embedding, optional
        For infinite places.
    prime : PrimeIdeal, optional
        For finite places.
    """

    def __init__(
        self,
        kind: str,
        *,
        embedding: Optional[Embedding] = None,
        prime: Optional[PrimeIdeal] = None,
    ):
        if kind not in ("real", "complex", "finite"):
            raise ValueError(f"`{kind}` is not a kind of place.")
        self.kind = kind
        self.embedding = embedding
        self.prime = prime

    @property
    def is_infinite(self) -> bool:
        return self.kind != "finite"

    @property
    def weight(self) -> int:
        """Local degree over the completion of ``QQ``: 1, 2, or ``e*f``."""
        if self.kind == "finite":
            return self.prime.e * self.prime.f
        return self.embedding.weight

    @property
    def norm(self) -> Optional[int]:
        """``N(P)`` for finite places."""
        return self.prime.norm if self.prime is not None else None

    def abs(self, x: NfElement):
        """
        Normalized absolute value: an interval at infinite places and an
        exact ``Fraction`` at finite ones.
        """
        if self.kind == "finite":
            return Fraction(self.prime.norm) ** (-self.prime.valuation(x))
        if self.kind == "complex":
            return self.embedding(x).abs_squared()
        return self.embedding.abs(x)

    def to_json(self) -> dict:
        if self.kind == "finite":
            return {"kind": "finite", "p": self.prime.p, "norm": self.norm}
        return {"kind": self.kind, "index": self.embedding.index}

    def __repr__(self):
        if self.kind == "finite":
            return f"Place(finite, p={self.prime.p}, norm={self.norm})"
        return f"Place({self.kind}, {self.embedding.index})"


def infinite_places(field: NumberField, precision: Optional[int] = None) -> list[Place]:
    """Real places first, then one place per conjugate pair of complex embeddings."""
    return [Place(e.kind, embedding=e) for e in field.embeddings(precision)]


def denominator_index(x: NfElement, order: Order) -> int:
    """``[O + Ox : O]``, the norm of the denominator ideal of ``x``."""
    ideal = OrderIdeal.from_generators(order, [1, x])
    return int(1 / ideal.norm)


def _settled(value: iv.mpf, precision: int) -> bool:
    scale = max(Fraction(1), abs(upper(value)))
    return width(value) < scale / 2**precision


def height(x, order: Order, precision: Optional[int] = None) -> iv.mpf:
    """
    Multiplicative height ``prod max(1, |x|_P)`` over all places.

    The finite part is the exact index ``[O + Ox : O]``; the infinite part is
    an interval refined until its width falls below ``2^-precision`` times
    ``max(1, H)``.

    Parameters
    ----------
    x : NfElement, int or Fraction
        Nonzero element.
    order : Order
        Maximal order of the field.
    precision : int, optional
        Target precision in bits.

    Raises
    ------
    ZeroElement
        If ``x`` is zero.
    """
    field = order.field
    x = field.convert(x)
    if not x:
        raise ZeroElement()
    precision = precision or default_precision()
    index = to_interval(denominator_index(x, order))
    bits = precision
    while bits <= _max_precision:
        with working_precision(bits + 32):
            value = iv.mpf(1)
            for place in field.embeddings(bits):
                local = interval_max(place.abs(x), 1)
                value = value * interval_pow(local, place.weight)
            value = value * index
        if _settled(value, precision):
            return value
        logger.debug("height not settled at %d bits", bits)
        bits *= 2
    raise PrecisionExceeded(precision)


def log_embedding(x: NfElement, precision: Optional[int] = None) -> list:
    """
    The vector ``(n_i log|sigma_i(x)|)`` over the infinite places.

    Raises
    ------
    ArithmeticError
        If an embedding cannot be separated from zero.
    """
    precision = precision or default_precision()
    out = []
    with working_precision(precision + 32):
        for place in x.field.embeddings(precision):
            out.append(place.weight * place(x).log_abs())
    return out


class Bounds:
    """
    The constants ``d`` and Minkowski's, with the class number bounds they give.

    Every value is an interval.

    Attributes
    ----------
    d : iv.mpf
        ``(2/pi)^s |disc|^(1/2)``.
    minkowski : iv.mpf
        ``(n!/n^n) (4/pi)^s |disc|^(1/2)``.
    h_bound : iv.mpf
        ``d (n-1+log d)^(n-1) / (n-1)!``.
    h_bound_minkowski : iv.mpf
        The same expression with ``d`` replaced by the Minkowski constant.
    hR_bound : iv.mpf
        ``d (log d)^(n-1-s) (n-1+log d)^s / (n-1)!``.
    bach : iv.mpf
        ``12 (log |disc|)^2``.
    """

    def __init__(self, d, minkowski, h_bound, h_bound_minkowski, hR_bound, bach):
        self.d = d
        self.minkowski = minkowski
        self.h_bound = h_bound
        self.h_bound_minkowski = h_bound_minkowski
        self.hR_bound = hR_bound
        self.bach = bach

    def to_json(self) -> dict:
        return {
            "d": format_interval(self.d),
            "minkowski": format_interval(self.minkowski),
            "h_bound": format_interval(self.h_bound),
            "h_bound_minkowski": format_interval(self.h_bound_minkowski),
            "hR_bound": format_interval(self.hR_bound),
            "bach": format_interval(self.bach),
        }

    def __repr__(self):
        return f"Bounds(d={self.d}, h_bound={self.h_bound})"


def _class_number_bound(c, n: int):
    log_c = iv.log(c)
    return c * interval_pow(n - 1 + log_c, n - 1) / math.factorial(n - 1)


def compute_bounds(order: Order, precision: Optional[int] = None) -> Bounds:
    """
    Bounds for the class number and regulator of a maximal order.

    Examples
    --------
    >>> from ansys.ordomax.archimedean import lower
    >>> from ansys.ordomax.orders import equation_order
    >>> b = compute_bounds(equation_order("x^2 + 1"))
    >>> round(float(lower(b.d)), 4)
    1.2732
    """
    precision = precision or default_precision()
    field = order.field
    n = field.degree
    _, s = field.signature()
    disc = abs(order.discriminant)
    with working_precision(precision + 32):
        root = iv.sqrt(to_interval(disc))
        d = interval_pow(2 / iv.pi, s) * root
        minkowski = (
            to_interval(Fraction(math.factorial(n), n**n))
            * interval_pow(4 / iv.pi, s)
            * root
        )
        log_d = iv.log(d)
        h_bound = _class_number_bound(d, n)
        h_minkowski = _class_number_bound(minkowski, n)
        hR_bound = (
            d
            * interval_pow(log_d, n - 1 - s)
            * interval_pow(n - 1 + log_d, s)
            / math.factorial(n - 1)
        )
        bach = 12 * interval_pow(iv.log(to_interval(disc)), 2)
    if upper(d) < 1:
        raise ArithmeticError("The constant d came out below 1.")
    logger.debug("d in [%s, %s]", float(lower(d)), float(upper(d)))
    return Bounds(d, minkowski, h_bound, h_minkowski, hR_bound, bach)
