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
Provides polynomial factorization over the rationals and over number fields.

Rational polynomials go through Hensel lifting and Zassenhaus recombination of
small subsets, with an LLL based search taking over when many modular
factors remain. Number field polynomials use the norm method.
"""

from __future__ import annotations

from fractions import Fraction
import itertools
import logging
import math
from typing import Optional

from sympy import nextprime

from ansys.ordomax._constants import _factorization
from ansys.ordomax.finite_field import FpPoly
from ansys.ordomax.finite_field import factor as factor_fp
from ansys.ordomax.linalg import lll
from ansys.ordomax.polynomial import QQ, Poly, interpolate

logger = logging.getLogger(__name__)


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    return _trim([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])


def _sub(a: list, b: list) -> list:
    return _add(a, [-x for x in b])


def _mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _trunc(a: list, m: int) -> list:
    """Centered reduction of every coefficient modulo ``m``."""
    half = m // 2
    out = []
    for c in a:
        r = c % m
        if r > half:
            r -= m
        out.append(r)
    return _trim(out)


def _divmod_monic(a: list, b: list) -> tuple[list, list]:
    """Division over the integers by a monic ``b``."""
    rem = list(a)
    d = len(b) - 1
    if len(rem) - 1 < d:
        return [], _trim(rem)
    quo = [0] * (len(rem) - d)
    for k in range(len(rem) - 1 - d, -1, -1):
        c = rem[k + d]
        quo[k] = c
        if c:
            for j, y in enumerate(b):
                rem[k + j] -= c * y
    return _trim(quo), _trim(rem[:d])


def _primitive(a: list) -> list:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _l1(a: list) -> int:
    return sum(abs(c) for c in a)


def _hensel_step(m: int, f: list, g: list, h: list, s: list, t: list) -> tuple:
    """One quadratic lifting step from modulus ``m`` to ``m**2``."""
    big = m * m
    e = _trunc(_sub(f, _mul(g, h)), big)
    q, r = _divmod_monic(_mul(s, e), h)
    q, r = _trunc(q, big), _trunc(r, big)
    u = _add(_mul(t, e), _mul(q, g))
    G = _trunc(_add(g, u), big)
    H = _trunc(_add(h, r), big)
    b = _trunc(_sub(_add(_mul(s, G), _mul(t, H)), [1]), big)
    c, d = _divmod_monic(_mul(s, b), H)
    c, d = _trunc(c, big), _trunc(d, big)
    u = _add(_mul(t, b), _mul(c, G))
    S = _trunc(_sub(s, d), big)
    T = _trunc(_sub(t, u), big)
    return G, H, S, T


def hensel_lift(p: int, f: list, factors: list, exponent: int) -> list[list[int]]:
    """
    Lift a modular factorization to ``p**exponent``.

    Parameters
    ----------
    p : int
        Prime not dividing the leading coefficient of ``f``.
    f : list of int
        Integer polynomial, squarefree modulo ``p``.
    factors : list
        Monic pairwise coprime factors with ``f = lc(f) * prod`` mod ``p``.
    exponent : int
        Target exponent.

    Returns
    -------
    list
        Monic integer polynomials, centered modulo ``p**exponent``.
    """
    pl = p**exponent
    lc = f[-1]
    if len(factors) == 1:
        return [_trunc([c * pow(lc, -1, pl) for c in f], pl)]
    k = len(factors) // 2
    g = FpPoly([lc], p)
    for fi in factors[:k]:
        g = g * FpPoly(fi, p)
    h = FpPoly(factors[k], p)
    for fi in factors[k + 1 :]:
        h = h * FpPoly(fi, p)
    s, t, _ = g.gcdex(h)
    g, h, s, t = (list(x.coeffs) for x in (g, h, s, t))
    m = p
    for _ in range((exponent - 1).bit_length()):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m *= m
    return hensel_lift(p, g, factors[:k], exponent) + hensel_lift(
        p, h, factors[k:], exponent
    )


def _choose_prime(f: list, candidates: int, seed: int) -> tuple[int, list]:
    lc = f[-1]
    found = []
    p = 2
    while len(found) < candidates:
        p = nextprime(p)
        if lc % p == 0:
            continue
        fp = FpPoly(f, p)
        if fp.gcd(fp.derivative()).degree() > 0:
            continue
        _, modular = factor_fp(fp, seed)
        found.append((p, [list(g.coeffs) for g, _ in modular]))
        if len(modular) == 1:
            break
    return min(found, key=lambda item: len(item[1]))


def _lattice_exponent(f: list, p: int, d: int, m: int) -> int:
    """
    Least ``k`` for which a lattice of degree ``m`` multiples finds the factor.

    ``p**(k d)`` must exceed ``2**(nm/2) binom(2m, m)**(n/2) |f|**(m + n)``;
    both sides are squared to stay in integers.
    """
    n = len(f) - 1
    norm_sq = sum(c * c for c in f)
    target = 2 ** (n * m) * math.comb(2 * m, m) ** n * norm_sq ** (m + n)
    step = p ** (2 * d)
    k, power = 1, step
    while power <= target:
        k += 1
        power *= step
    return k


def _lll_search(f: list, p: int, modular: list) -> list[list[int]]:
    """Split ``f`` one irreducible factor at a time with lattice reduction."""
    factors = []
    while True:
        n = len(f) - 1
        if len(modular) <= 1 or n <= 1:
            factors.append(f)
            return factors
        u = modular[0]
        d = len(u) - 1
        rest = FpPoly([1], p)
        for v in modular[1:]:
            rest = rest * FpPoly(v, p)
        lifted, uk = 0, None
        found = None
        for m in range(d, n):
            k = _lattice_exponent(f, p, d, m)
            if k > lifted:
                uk = hensel_lift(p, f, [u, list(rest.coeffs)], k)[0]
                lifted = k
            pk = p**lifted
            rows = []
            for i in range(d):
                row = [0] * (m + 1)
                row[i] = pk
                rows.append(row)
            for j in range(m - d + 1):
                row = [0] * (m + 1)
                for t, c in enumerate(uk):
                    row[t + j] = c
                rows.append(row)
            reduced, _ = lll(rows)
            g = Poly(f).gcd(Poly(reduced[0]))
            if g.degree() < 1:
                continue
            _, gi = g.primitive()
            if not FpPoly(gi, p) % FpPoly(u, p):
                found = gi
                logger.debug("lattice of dimension %d found a factor", m + 1)
                break
        if found is None or len(found) == len(f):
            factors.append(f)
            return factors
        factors.append(found)
        _, f = (Poly(f) // Poly(found)).primitive()
        fp_found = FpPoly(found, p)
        modular = [v for v in modular if fp_found % FpPoly(v, p)]


def _constant_divides(lifted: list, subset: tuple, b: int, f0: int, pl: int) -> bool:
    """Whether the constant term of ``b * prod`` can belong to a true factor."""
    if f0 == 0:
        return True
    c = b
    for i in subset:
        c = c * lifted[i][0] % pl
    if c > pl // 2:
        c -= pl
    return c != 0 and (b * f0) % c == 0


def _zassenhaus(
    f: list, subset_size: int, subset_budget: int, candidates: int, seed: int
) -> list:
    """Factor a primitive squarefree integer polynomial."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    b = f[-1]
    A = max(abs(c) for c in f)
    B = math.isqrt((n + 1) * (2**n * A * b) ** 2) + 1
    p, modular = _choose_prime(f, candidates, seed)
    logger.debug("chose p=%d with %d modular factors", p, len(modular))
    if len(modular) == 1:
        return [f]
    exponent = 1
    while p**exponent < 2 * B + 1:
        exponent += 1
    pl = p**exponent
    lifted = hensel_lift(p, f, modular, exponent)
    remaining = list(range(len(lifted)))
    factors = []
    s = 1
    while 2 * s <= len(remaining):
        if s > subset_size and math.comb(len(remaining), s) > subset_budget:
            break
        for subset in itertools.combinations(remaining, s):
            if not _constant_divides(lifted, subset, b, f[0], pl):
                continue
            G = [b]
            for i in subset:
                G = _mul(G, lifted[i])
            G = _primitive(_trunc(G, pl))
            H = [b]
            for i in remaining:
                if i not in subset:
                    H = _mul(H, lifted[i])
            H = _trunc(H, pl)
            if _l1(G) * _l1(H) <= B:
                remaining = [i for i in remaining if i not in subset]
                factors.append(G)
                f = _primitive(H)
                b = f[-1]
                break
        else:
            s += 1
    if 2 * s <= len(remaining):
        logger.debug("%d modular factors left, switching to lattices", len(remaining))
        rest = [list(FpPoly(lifted[i], p).coeffs) for i in remaining]
        return factors + _lll_search(f, p, rest)
    return factors + [f]


def factor_q(
    f: Poly,
    *,
    subset_size: Optional[int] = None,
    subset_budget: Optional[int] = None,
    seed: int = 0,
) -> tuple[Fraction, list[tuple[Poly, int]]]:
    """
    Factor a rational polynomial into monic irreducibles.

    Parameters
    ----------
    f : Poly
        Nonzero polynomial over ``QQ``.
    subset_size : int, optional
        Subsets of modular factors up to this size are always tried in
        Zassenhaus recombination.
    subset_budget : int, optional
        Larger subsets are tried while there are at most this many of a
        given size; the lattice search takes over after that.
    seed : int, optional
        Seed of the modular factorizations.

    Returns
    -------
    tuple
        ``(lc, [(g, e), ...])`` with ``f = lc * prod g**e`` and the ``g``
        monic irreducible in canonical order.

    Examples
    --------
    >>> lc, parts = factor_q(Poly([-1, 0, 1]))
    >>> [str(g) for g, _ in parts]
    ['x - 1', 'x + 1']
    """
    if not f:
        raise ValueError("Cannot factor the zero polynomial.")
    if subset_size is None:
        subset_size = int(_factorization["subset_size"])
    if subset_budget is None:
        subset_budget = int(_factorization["subset_budget"])
    candidates = int(_factorization["candidate_primes"])
    lc = f.lc
    result = []
    for part, multiplicity in f.squarefree_decomposition():
        _, integral = part.primitive()
        for g in _zassenhaus(integral, subset_size, subset_budget, candidates, seed):
            result.append((Poly(g).monic(), multiplicity))
    result.sort(key=lambda item: (item[0].sort_key(), item[1]))
    return lc, result


def _shifts():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def norm_poly(g: Poly, field) -> Poly:
    """
    Norm of a polynomial over a number field down to ``QQ``.

    Computed by interpolating field norms of ``g`` at rational points.
    """
    degree = g.degree() * field.degree
    xs = list(range(degree + 1))
    ys = [g(Fraction(x)).norm() for x in xs]
    return interpolate(xs, ys)


def _trager(g: Poly, field) -> list[Poly]:
    if g.degree() <= 1:
        return [g]
    theta = field.gen
    for s in _shifts():
        shifted = g.compose(Poly([-theta * s, 1], field))
        norm = norm_poly(shifted, field)
        if not norm.is_squarefree():
            continue
        _, parts = factor_q(norm)
        logger.debug("norm shift s=%d gives %d rational factors", s, len(parts))
        if len(parts) == 1:
            return [g]
        back = Poly([theta * s, 1], field)
        return [
            shifted.gcd(part.to_domain(field)).compose(back).monic()
            for part, _ in parts
        ]


def factor_nf(
    F: Poly, field, *, seed: int = 0
) -> tuple[object, list[tuple[Poly, int]]]:
    """
    Factor a polynomial over a number field.

    Parameters
    ----------
    F : Poly
        Nonzero polynomial whose domain is ``field``.
    field : NumberField
        Coefficient field.

    Returns
    -------
    tuple
        ``(lc, [(g, e), ...])`` with monic irreducible ``g`` over ``field``
        in canonical order.
    """
    if not F:
        raise ValueError("Cannot factor the zero polynomial.")
    lc = F.lc
    if field.degree == 1:
        rational = Poly([c.coords[0] for c in F.coeffs], QQ)
        _, parts = factor_q(rational, seed=seed)
        return lc, [(g.to_domain(field), e) for g, e in parts]
    result = []
    for part, multiplicity in F.squarefree_decomposition():
        for g in _trager(part, field):
            result.append((g, multiplicity))
    result.sort(key=lambda item: (item[0].sort_key(), item[1]))
    return lc, result
