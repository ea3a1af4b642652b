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
Provides the class group and unit group of a maximal order.

Both groups come out of the exact sequence

    0 -> units -> K_S -> Z^(S - S_inf) -> Cl -> 0

once a generating set of the S-units ``K_S`` is known: the class group is the
cokernel of the valuation map and the units are its kernel.
"""

from __future__ import annotations

from fractions import Fraction
import logging
import math
import random
from typing import Iterator, Optional, Sequence, Union
import warnings

from mpmath import iv
from sympy import divisors, primerange, totient

from ansys.ordomax._constants import _class_group, _max_precision, default_precision
from ansys.ordomax.archimedean import (
    format_interval,
    lower,
    midpoint,
    to_interval,
    upper,
    width,
    working_precision,
)
from ansys.ordomax.heights import (
    Bounds,
    Place,
    compute_bounds,
    height,
    infinite_places,
    log_embedding,
)
from ansys.ordomax.linalg import (
    enumerate_ellipsoid,
    hnf,
    hnf_rank,
    identity,
    kernel_int,
    lll,
    snf,
    solve_int_left,
    vec_mat,
)
from ansys.ordomax.number_field import NfElement
from ansys.ordomax.orders import Order, OrderIdeal
from ansys.ordomax.prime_ideal import PrimeIdeal, split_prime

logger = logging.getLogger(__name__)


class PlaceSet:
    """
    A finite set of places containing all infinite ones.

    Parameters
    ----------
    order : Order
        Maximal order of the field.
    infinite : list of Place
        All infinite places.
    primes : list of PrimeIdeal
        The finite places, ordered by norm.
    """

    def __init__(self, order: Order, infinite: list[Place], primes: list[PrimeIdeal]):
        self.order = order
        self.infinite = list(infinite)
        self.primes = list(primes)

    @property
    def places(self) -> list[Place]:
        return self.infinite + [Place("finite", prime=p) for p in self.primes]

    @property
    def m_S(self) -> int:
        """Largest norm of a finite place, 1 when there is none."""
        return max((p.norm for p in self.primes), default=1)

    @property
    def rational_primes(self) -> list[int]:
        return sorted({p.p for p in self.primes})

    def __contains__(self, prime: PrimeIdeal) -> bool:
        return prime in self.primes

    def __len__(self):
        return len(self.infinite) + len(self.primes)

    def to_json(self) -> dict:
        return {
            "infinite": [place.to_json() for place in self.infinite],
            "finite": [prime.to_json() for prime in self.primes],
        }

    def __repr__(self):
        return f"PlaceSet(infinite={len(self.infinite)}, primes={self.primes})"


def standard_prime_set(
    order: Order,
    policy: str = "theorem",
    bound: Union[int, Fraction, None] = None,
    *,
    precision: Optional[int] = None,
    seed: int = 0,
    bounds: Optional[Bounds] = None,
) -> PlaceSet:
    """
    The infinite places together with all primes of small norm.

    Parameters
    ----------
    order : Order
        Maximal order of the field.
    policy : str, optional
        ``"theorem"`` takes the primes of norm at most ``d``, ``"bach"`` those
        of norm at most ``12 (log |disc|)^2`` and ``"custom"`` those of norm
        at most ``bound``.
    bound : int or Fraction, optional
        Norm bound of the custom policy.
    precision : int, optional
        Bits for the infinite places and the constant ``d``.
    seed : int, optional
        Seed of the prime splitting.
    bounds : Bounds, optional
        Precomputed constants of the order.

    Notes
    -----
    A prime whose norm cannot be separated from an interval bound is
    included.
    """
    if policy == "custom":
        if bound is None:
            raise ValueError("The custom policy needs a norm bound.")
        limit = Fraction(bound)
    elif policy in ("theorem", "bach"):
        bounds = bounds or compute_bounds(order, precision)
        limit = upper(bounds.d if policy == "theorem" else bounds.bach)
    else:
        raise ValueError(f"`{policy}` is not a prime set policy.")
    cap = math.floor(limit)
    primes = []
    for p in primerange(2, cap + 1):
        primes.extend(P for P in split_prime(order, int(p), seed) if P.norm <= cap)
    primes.sort(key=lambda P: (P.norm, P.p, P.ideal.hnf))
    logger.debug("%s prime set up to norm %d has %d primes", policy, cap, len(primes))
    return PlaceSet(order, infinite_places(order.field, precision), primes)


def _enumerate(gram: list[list[Fraction]], bound) -> Iterator[tuple[int, ...]]:
    cap = int(_class_group["enumeration_cap"])
    for count, v in enumerate(enumerate_ellipsoid(gram, bound), 1):
        if count > cap:
            raise BudgetExceeded("lattice points", cap)
        yield v


def _embedding_gram(
    basis: Sequence[NfElement],
    places: Sequence[Place],
    scales: Sequence,
    precision: int,
) -> list[list[Fraction]]:
    """
    Rational form bounded above by ``sum_i n_i |sigma_i(x)|^2 / scale_i``.

    ``x`` runs over integer combinations of ``basis``.
    """
    n = len(basis)
    with working_precision(precision + 32):
        values = [[place.embedding(b) for b in basis] for place in places]
        gram = []
        for j in range(n):
            row = []
            for k in range(n):
                acc = iv.mpf(0)
                for place, vals, scale in zip(places, values, scales):
                    term = vals[j].re * vals[k].re + vals[j].im * vals[k].im
                    acc += place.weight * term / to_interval(scale)
                row.append(acc)
            gram.append(row)
    slack = n * max(width(x) for row in gram for x in row)
    return [
        [midpoint(gram[j][k]) - (slack if j == k else 0) for k in range(n)]
        for j in range(n)
    ]


def _strip_primes(value: int, primes: Sequence[int]) -> int:
    for p in primes:
        while value % p == 0:
            value //= p
    return value


def _s_valuations(x: NfElement, places: PlaceSet) -> Optional[list[int]]:
    """Valuations of an integral ``x`` at the finite places, or None off ``K_S``."""
    if not x:
        return None
    norm = abs(x.norm())
    if _strip_primes(norm.numerator, places.rational_primes) != 1:
        return None
    values = [P.valuation(x) for P in places.primes]
    product = Fraction(1)
    for P, v in zip(places.primes, values):
        product *= Fraction(P.norm) ** v
    return values if product == norm else None


def _dyadic_boxes(weights: Sequence[int], budget: int) -> list[tuple[int, ...]]:
    """
    Maximal exponents ``k_i >= 1`` with ``sum n_i (k_i - 1) <= budget``.

    The boxes ``|a_i| <= 2^k_i`` cover ``prod max(1, |a_i|)^n_i <= 2^(budget+1)``.
    """
    smallest = min(weights)
    boxes = []

    def walk(i, remaining, acc):
        if i == len(weights):
            if remaining < smallest:
                boxes.append(tuple(acc))
            return
        for j in range(remaining // weights[i] + 1):
            walk(i + 1, remaining - j * weights[i], acc + [j + 1])

    walk(0, budget, [])
    return boxes


def _power_product(
    elements: Sequence[NfElement], exponents: Sequence[int]
) -> NfElement:
    result = elements[0].field.one if elements else None
    for x, e in zip(elements, exponents):
        if e:
            result = result * x**e
    return result


def roots_of_unity(
    order: Order, precision: Optional[int] = None
) -> tuple[int, NfElement]:
    """
    The number ``w`` of roots of unity and a generator of their group.

    Candidates are the elements with ``T2(x) <= n``; a candidate is kept when
    ``x^W = 1`` for the exponent ``W`` of all cyclotomic orders possible in
    degree ``n``.

    Examples
    --------
    >>> from ansys.ordomax.orders import equation_order
    >>> roots_of_unity(equation_order("x^2 + 1"))[0]
    4
    """
    precision = precision or default_precision()
    n = order.degree
    field = order.field
    places = infinite_places(field, precision)
    gram = _embedding_gram(order.basis, places, [1] * len(places), precision)
    exponent = 1
    for m in range(1, 2 * n * n + 3):
        if n % int(totient(m)) == 0:
            exponent = math.lcm(exponent, m)
    found = []
    for v in _enumerate(gram, n):
        if not any(v):
            continue
        x = order.element(v)
        if x**exponent != field.one:
            continue
        k = next(k for k in divisors(exponent) if x**k == field.one)
        found.append((k, x.coords, x))
    found.sort(key=lambda item: (item[0], item[1]))
    w = len(found)
    zeta = next(x for k, _, x in found if k == w)
    return w, zeta


def bounded_height_generators(
    order: Order,
    places: PlaceSet,
    *,
    precision: Optional[int] = None,
    bounds: Optional[Bounds] = None,
) -> list[NfElement]:
    """
    All integral S-units of height at most ``d^2 m_S``.

    When ``places`` contains every prime of norm at most ``d`` these
    elements generate the S-unit group.

    Parameters
    ----------
    order : Order
        Maximal order of the field.
    places : PlaceSet
        Places ``S`` of the S-units.
    precision : int, optional
        Bits of the archimedean computations.
    bounds : Bounds, optional
        Precomputed constants of the order.

    Returns
    -------
    list of NfElement
        Sorted by absolute norm and coordinates.

    Warns
    -----
    GenerationGuaranteeLapsed
        If a prime of norm at most ``d`` is missing from ``places``.
    """
    precision = precision or default_precision()
    bounds = bounds or compute_bounds(order, precision)
    required = standard_prime_set(order, "theorem", precision=precision, bounds=bounds)
    missing = [P for P in required.primes if P not in places]
    if missing:
        warnings.warn(GenerationGuaranteeLapsed(missing), stacklevel=2)
    with working_precision(precision + 32):
        limit = upper(bounds.d * bounds.d) * places.m_S
    budget = (limit.numerator // limit.denominator).bit_length() - 1
    infinite = places.infinite
    candidates = {}
    for ks in _dyadic_boxes([place.weight for place in infinite], budget):
        scales = [Fraction(4) ** k for k in ks]
        gram = _embedding_gram(order.basis, infinite, scales, precision)
        for v in _enumerate(gram, order.degree):
            if any(v):
                candidates.setdefault(v, None)
    logger.debug("%d lattice points below height %s", len(candidates), limit)
    generators = []
    for v in candidates:
        x = order.element(v)
        norm = abs(x.norm())
        if norm > limit or _s_valuations(x, places) is None:
            continue
        if lower(height(x, order, precision)) > limit:
            continue
        generators.append((norm, x.coords, x))
    generators.sort(key=lambda item: (item[0], item[1]))
    return [x for _, _, x in generators]


def unit_log_embedding(
    units: Sequence[NfElement], precision: Optional[int] = None
) -> list:
    """Certified vectors ``(n_i log|sigma_i(u)|)`` of a list of units."""
    return [log_embedding(u, precision) for u in units]


def _interval_det(m: list[list]):
    if not m:
        return iv.mpf(1)
    if len(m) == 1:
        return m[0][0]
    total = iv.mpf(0)
    for j, a in enumerate(m[0]):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = a * _interval_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _normalize_unit(u: NfElement, precision: int) -> NfElement:
    place = u.field.embeddings(precision)[-1]
    with working_precision(precision + 32):
        if midpoint(place(u).log_abs()) < 0:
            u = u.inverse()
        if place.kind == "real" and midpoint(place(u).re) < 0:
            u = -u
    return u


def _unit_basis(
    order: Order,
    generators: Sequence[NfElement],
    relations: list[list[int]],
    w: int,
    precision: int,
) -> list[NfElement]:
    """Fundamental units from the integer relations of the generators."""
    field = order.field
    r, s = field.signature()
    rank = r + s - 1
    if rank == 0:
        return []
    if len(relations) < rank:
        raise RankDeficient("unit", rank, len(relations))
    bits = precision
    while bits <= _max_precision:
        logs = [log_embedding(x, bits) for x in generators]
        scale = 2 ** (bits // 2)
        with working_precision(bits + 32):
            rows = []
            for y in relations:
                image = [
                    sum((c * logs[g][j] for g, c in enumerate(y) if c), iv.mpf(0))
                    for j in range(rank)
                ]
                rows.append(
                    list(y) + [round(midpoint(v) * scale) for v in image]
                )
        reduced, _ = lll(rows)
        threshold = 2 ** (bits // 4)
        torsion, free = [], []
        for row in reduced:
            exponents, part = row[: len(generators)], row[len(generators) :]
            if all(abs(x) <= threshold for x in part):
                torsion.append(exponents)
            else:
                free.append(exponents)
        ok = len(free) == rank and all(
            _power_product(generators, e) ** w == field.one for e in torsion
        )
        if ok:
            units = [_power_product(generators, e) for e in free]
            return [_normalize_unit(u, precision) for u in units]
        logger.debug("unit lattice not separated at %d bits", bits)
        bits *= 2
    raise RankDeficient("unit", rank, len(free))


def _regulator(units: Sequence[NfElement], precision: int):
    if not units:
        return iv.mpf(1)
    rank = len(units)
    logs = unit_log_embedding(units, precision)
    with working_precision(precision + 32):
        return abs(_interval_det([v[:rank] for v in logs]))


def _bounded_products(norms: Sequence[int], limit: int) -> list[tuple[int, tuple]]:
    out = []

    def walk(i, value, acc):
        if i == len(norms):
            out.append((value, tuple(acc)))
            return
        e = 0
        while value * norms[i] ** e <= limit:
            walk(i + 1, value * norms[i] ** e, acc + [e])
            e += 1

    walk(0, 1, [])
    return sorted(out)


def _prime_product(order: Order, primes: Sequence[PrimeIdeal], exponents) -> OrderIdeal:
    result = order.unit_ideal()
    for P, e in zip(primes, exponents):
        if e:
            result = result * P.ideal**e
    return result


def _class_representatives(
    order: Order,
    primes: Sequence[PrimeIdeal],
    transform: list[list[int]],
    diagonal: list[int],
    components: list[int],
) -> list[tuple[tuple, OrderIdeal]]:
    """Smallest integral S-prime products mapping to each cyclic generator."""
    if not components:
        return []
    cap = int(_class_group["representative_norm_cap"])
    norms = [P.norm for P in primes]
    size = len(components)
    targets = [tuple(int(i == c) for i in range(size)) for c in range(size)]
    limit = 16
    while True:
        best = {}
        for norm, e in _bounded_products(norms, min(limit, cap)):
            image = vec_mat(list(e), transform)
            key = tuple(image[j] % diagonal[j] for j in components)
            if key in targets and (key not in best or best[key][0] == norm):
                best.setdefault(key, (norm, []))[1].append(e)
        if len(best) == len(targets):
            break
        if limit >= cap:
            raise BudgetExceeded("representative ideal norm", cap)
        limit *= 4
    reps = []
    for key in targets:
        options = [(_prime_product(order, primes, e), e) for e in best[key][1]]
        ideal, e = min(options, key=lambda item: (item[0].hnf, item[1]))
        reps.append((e, ideal))
    return reps


class SUnitGroup:
    """
    Generators of the S-unit group.

    Parameters
    ----------
    places : PlaceSet
    w : int
        Number of roots of unity.
    zeta : NfElement
        Generator of the roots of unity.
    units : list of NfElement
        Fundamental units.
    s_generators : list of NfElement
        S-units whose valuation vectors form a basis of the valuation image.
    valuation_matrix : list of list of int
        Valuations of ``units + s_generators`` at the finite places.
    """

    def __init__(self, places, w, zeta, units, s_generators, valuation_matrix):
        self.places = places
        self.w = w
        self.zeta = zeta
        self.units = list(units)
        self.s_generators = list(s_generators)
        self.valuation_matrix = valuation_matrix

    @property
    def generators(self) -> list[NfElement]:
        """Free generators modulo roots of unity."""
        return self.units + self.s_generators

    @property
    def rank(self) -> int:
        return len(self.units) + len(self.s_generators)

    def to_json(self) -> dict:
        return {
            "w": self.w,
            "zeta": str(self.zeta),
            "rank": self.rank,
            "generators": [str(x) for x in self.generators],
            "valuation_matrix": self.valuation_matrix,
        }


class ClassUnitData:
    """
    Class group and unit group of a maximal order.

    Attributes
    ----------
    h : int
        Class number.
    elementary_divisors : list of int
        Orders ``d_i > 1`` of the cyclic factors of the class group.
    class_reps : list of OrderIdeal
        Integral ideals whose classes generate the cyclic factors.
    fundamental_units : list of NfElement
    regulator : iv.mpf
        Certified regulator; 1 when there are no fundamental units.
    w : int
        Number of roots of unity.
    zeta : NfElement
        Generator of the roots of unity.
    """

    def __init__(
        self,
        order: Order,
        places: PlaceSet,
        generators: list[NfElement],
        valuations: list[list[int]],
        elementary_divisors: list[int],
        representatives: list[tuple[tuple, OrderIdeal]],
        w: int,
        zeta: NfElement,
        units: list[NfElement],
        regulator,
    ):
        self.order = order
        self.places = places
        self.generators = generators
        self.valuations = valuations
        self.elementary_divisors = elementary_divisors
        self._representatives = representatives
        self.w = w
        self.zeta = zeta
        self.fundamental_units = units
        self.regulator = regulator
        self._witnesses = None

    @property
    def h(self) -> int:
        return math.prod(self.elementary_divisors)

    @property
    def class_reps(self) -> list[OrderIdeal]:
        return [ideal for _, ideal in self._representatives]

    @property
    def unit_rank(self) -> int:
        return len(self.fundamental_units)

    @property
    def witnesses(self) -> list[NfElement]:
        """Generators of ``a_i^d_i`` for the representatives ``a_i``."""
        if self._witnesses is None:
            self._witnesses = []
            for (e, _), d in zip(self._representatives, self.elementary_divisors):
                y = solve_int_left(self.valuations, [d * x for x in e])
                self._witnesses.append(_power_product(self.generators, y))
        return self._witnesses

    @property
    def hR(self):
        """Certified product of class number and regulator."""
        return self.h * self.regulator

    def s_unit_group(self) -> SUnitGroup:
        """Free generators of the S-unit group with their valuations."""
        t = len(self.places.primes)
        s_generators, rows = [], []
        if t:
            h, u = hnf(self.valuations)
            for i in range(hnf_rank(h)):
                s_generators.append(_power_product(self.generators, u[i]))
                rows.append(list(h[i]))
        matrix = [[0] * t for _ in self.fundamental_units] + rows
        return SUnitGroup(
            self.places, self.w, self.zeta, self.fundamental_units, s_generators, matrix
        )

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "elementary_divisors": self.elementary_divisors,
            "class_reps": [ideal.to_json() for ideal in self.class_reps],
            "w": self.w,
            "zeta": str(self.zeta),
            "fundamental_units": [str(u) for u in self.fundamental_units],
            "regulator": format_interval(self.regulator),
        }

    def __repr__(self):
        return (
            f"ClassUnitData(h={self.h}, divisors={self.elementary_divisors}, "
            f"w={self.w}, units={len(self.fundamental_units)})"
        )


def _drop_associates(
    generators: Sequence[NfElement], w: int, zeta: NfElement
) -> list[NfElement]:
    """``zeta`` followed by one element of each class modulo roots of unity."""
    roots = [zeta**j for j in range(w)]
    kept, seen = [zeta], set(roots)
    for x in generators:
        if x in seen:
            continue
        kept.append(x)
        seen.update(x * r for r in roots)
    return kept


def class_and_units(
    order: Order,
    places: PlaceSet,
    generators: Sequence,
    *,
    precision: Optional[int] = None,
) -> ClassUnitData:
    """
    Class group and units from generators of the S-units.

    The Smith form of the valuation matrix gives the class group as its
    cokernel; the integer kernel gives the units.

    Parameters
    ----------
    order : Order
        Maximal order of the field.
    places : PlaceSet
        The places ``S``.
    generators : list
        Elements generating ``K_S``. With fewer, the results describe the
        subgroup they generate.
    precision : int, optional
        Bits of the logarithmic embedding.

    Raises
    ------
    RankDeficient
        If the valuation image or the unit lattice has too small a rank.
    """
    precision = precision or default_precision()
    field = order.field
    w, zeta = roots_of_unity(order, precision)
    generators = _drop_associates(
        [field.convert(x) for x in generators if x], w, zeta
    )
    primes = places.primes
    t = len(primes)
    valuations = [[P.valuation(x) for P in primes] for x in generators]
    if t:
        if not generators:
            raise RankDeficient("valuation image", t, 0)
        diagonal, _, transform = snf(valuations)
        found = sum(1 for d in diagonal if d)
        if found < t:
            raise RankDeficient("valuation image", t, found)
        relations = kernel_int(valuations)
    else:
        diagonal, transform = [], []
        relations = identity(len(generators))
    components = [j for j, d in enumerate(diagonal) if d > 1]
    representatives = _class_representatives(
        order, primes, transform, diagonal, components
    )
    units = _unit_basis(order, generators, relations, w, precision)
    regulator = _regulator(units, precision)
    data = ClassUnitData(
        order,
        places,
        generators,
        valuations,
        [diagonal[j] for j in components],
        representatives,
        w,
        zeta,
        units,
        regulator,
    )
    logger.debug("%r", data)
    return data


class RandomizedReport:
    """
    Outcome of the randomized relation search.

    Attributes
    ----------
    data : ClassUnitData or None
        The last candidate, None if no candidate was ever complete.
    certified : bool
        Whether ``h' R'`` fell inside the supplied window ``(a/2, a)``.
    status : str
        ``"certified"``, ``"heuristic"`` or ``"incomplete"``.
    draws : int
        Number of random elements drawn.
    relations : int
        Number of S-units kept.
    """

    def __init__(self, data, certified, status, draws, relations):
        self.data = data
        self.certified = certified
        self.status = status
        self.draws = draws
        self.relations = relations

    def to_json(self) -> dict:
        out = self.data.to_json() if self.data is not None else {}
        out.update(
            {
                "certified": self.certified,
                "status": self.status,
                "draws": self.draws,
                "relations": self.relations,
            }
        )
        return out

    def __repr__(self):
        return f"RandomizedReport({self.status}, draws={self.draws})"


def _in_window(value, a: Fraction) -> bool:
    return lower(value) > a / 2 and upper(value) < a


def randomized_class_units(
    order: Order,
    bound: Union[int, Fraction],
    seed: int = 0,
    hr_window: Union[int, Fraction, None] = None,
    *,
    draw_bound: Optional[int] = None,
    precision: Optional[int] = None,
) -> RandomizedReport:
    """
    Class group and units from randomly drawn S-units.

    Elements with coordinates uniform in ``[1, D]`` are drawn and kept when
    their norm is supported on the primes of norm at most ``bound``. The
    candidate ``h' R'`` equals ``hR`` times the index of the subgroup found,
    so a window ``(a/2, a)`` known to contain ``hR`` certifies the result as
    soon as ``h' R'`` lands in it. Without a window the search stops once
    ``class_group.stable_draws`` consecutive candidates agree.

    Parameters
    ----------
    order : Order
        Maximal order of the field.
    bound : int or Fraction
        Norm bound of the finite places, at least 2.
    seed : int, optional
        Seed of the draws.
    hr_window : int or Fraction, optional
        The number ``a``.
    draw_bound : int, optional
        The coordinate bound ``D``.
    precision : int, optional
        Bits of the logarithmic embedding.
    """
    if bound < 2:
        raise ValueError("The norm bound must be at least 2.")
    precision = precision or default_precision()
    window = None if hr_window is None else Fraction(hr_window)
    places = standard_prime_set(order, "custom", bound, precision=precision, seed=seed)
    r, s = order.field.signature()
    needed = len(places.primes) + r + s - 1 + int(_class_group["extra_relations"])
    stable_target = int(_class_group["stable_draws"])
    max_draws = int(_class_group["max_draws"])
    top = draw_bound or int(_class_group["draw_bound"])
    rng = random.Random(seed)
    _, zeta = roots_of_unity(order, precision)
    kept = [zeta]
    seen = {zeta}
    data, previous, stable, draws = None, None, 0, 0
    certified = False
    while draws < max_draws:
        draws += 1
        x = order.element([rng.randint(1, top) for _ in range(order.degree)])
        if x in seen or _s_valuations(x, places) is None:
            continue
        seen.add(x)
        kept.append(x)
        if len(kept) < needed:
            continue
        try:
            candidate = class_and_units(order, places, kept, precision=precision)
        except RankDeficient:
            continue
        data = candidate
        if window is not None and _in_window(candidate.hR, window):
            certified = True
            break
        key = (
            tuple(candidate.elementary_divisors),
            format_interval(candidate.regulator)["mid"],
        )
        stable = stable + 1 if key == previous else 0
        previous = key
        if window is None and stable >= stable_target:
            break
    if data is None:
        status = "incomplete"
        logger.warning("no complete candidate after %d draws", draws)
    elif certified:
        status = "certified"
    else:
        status = "heuristic"
        logger.warning(
            "randomized result is heuristic: the S-units found may span a "
            "subgroup of finite index"
        )
    return RandomizedReport(data, certified, status, draws, len(kept))


def _is_principal(
    order: Order, ideal: OrderIdeal, data: ClassUnitData, precision: int
) -> bool:
    """Search ``ideal`` for an element of norm ``N(ideal)``."""
    if not ideal.is_integral():
        ideal = ideal * ideal.denominator
    n = order.degree
    target = ideal.norm
    logs = unit_log_embedding(data.fundamental_units, precision)
    places = infinite_places(order.field, precision)
    with working_precision(precision + 32):
        spread = iv.mpf(0)
        for i, place in enumerate(places):
            column = sum((abs(v[i]) for v in logs), iv.mpf(0)) / 2 / place.weight
            spread = column if upper(column) > upper(spread) else spread
        radius = n * iv.exp(2 * iv.log(to_interval(target)) / n + 2 * spread)
    gram = _embedding_gram(ideal.basis, places, [1] * len(places), precision)
    basis = ideal.basis
    for v in _enumerate(gram, upper(radius)):
        if not any(v):
            continue
        x = sum((c * b for c, b in zip(v, basis) if c), order.field.zero)
        if abs(x.norm()) == target:
            return True
    return False


def ideal_class_order(
    order: Order,
    ideal: OrderIdeal,
    data: ClassUnitData,
    *,
    precision: Optional[int] = None,
) -> int:
    """
    Order of the class of an ideal.

    Each proper divisor ``k`` of ``h`` is tested by searching ``ideal^k`` for
    a generator, whose size is bounded with the fundamental units; ``h``
    itself needs no search.

    Raises
    ------
    BudgetExceeded
        If a search visits more lattice points than configured.

    Examples
    --------
    >>> from ansys.ordomax.orders import equation_order
    >>> from ansys.ordomax.prime_ideal import split_prime
    >>> o = equation_order("x^2 + 5")
    >>> s = standard_prime_set(o)
    >>> cu = class_and_units(o, s, bounded_height_generators(o, s))
    >>> ideal_class_order(o, split_prime(o, 2)[0].ideal, cu)
    2
    """
    precision = precision or default_precision()
    for k in divisors(data.h)[:-1]:
        if _is_principal(order, ideal**k, data, precision):
            return k
    return data.h


class RankDeficient(ArithmeticError):
    """Raised when the generators are too few for the expected rank."""

    def __init__(self, what: str, expected: int, found: int):
        self.what = what
        self.expected = expected
        self.found = found
        super().__init__(
            f"The {what} rank is {found}, expected {expected}; enlarge the "
            "generating set."
        )


class GenerationGuaranteeLapsed(UserWarning):
    """Warned when the places miss primes needed for the generation theorem."""

    def __init__(self, missing: Sequence[PrimeIdeal]):
        self.missing = list(missing)
        super().__init__(
            f"{len(self.missing)} primes of norm at most d are missing; the "
            "generators may span a subgroup."
        )


class BudgetExceeded(RuntimeError):
    """Raised when a search exceeds its configured budget."""

    def __init__(self, what: str, budget: int):
        self.what = what
        self.budget = budget
        super().__init__(f"The search over {what} exceeded the budget of {budget}.")
