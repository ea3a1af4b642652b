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
Provides Galois group computations over ``QQ`` and over number fields.

The group is computed from an explicit splitting tower: each step adjoins a
root of a nonlinear factor through a shifted norm, and automorphisms are
built by extending embeddings one step at a time, testing candidate images
among the roots of the polynomial. Factorization types modulo good primes
give cycle types of group elements, which certify large groups without a
tower. Solvability descends through maximal subfields of a root field, so
only primitive steps ever need a group.
"""

from __future__ import annotations

from fractions import Fraction
import itertools
import logging
import math
from typing import Optional, Sequence, Union

from sympy import isprime, nextprime, primefactors
from sympy.combinatorics import Permutation, PermutationGroup

from ansys.ordomax._constants import _galois
from ansys.ordomax.factorization import factor_nf, norm_poly
from ansys.ordomax.finite_field import FpPoly, factorization_type
from ansys.ordomax.linalg import kernel_rational, rank, transpose
from ansys.ordomax.number_field import (
    FieldHomomorphism,
    NfElement,
    NumberField,
    Reducible,
    _as_poly,
    _candidate_coords,
    field_from_poly,
    rationals,
)
from ansys.ordomax.polynomial import QQ, Poly, discriminant

logger = logging.getLogger(__name__)


def poly_disc(f: Union[Poly, str, Sequence]):
    """
    Discriminant of a polynomial over ``QQ`` or a number field.

    Examples
    --------
    >>> poly_disc("x^3 - x - 1")
    Fraction(-23, 1)
    """
    f = _as_poly(f)
    if f.degree() < 1:
        raise ValueError("The discriminant needs a polynomial of degree at least 1.")
    return discriminant(f)


def _map_poly(f: Poly, image: NfElement, target: NumberField) -> Poly:
    """Push the coefficients of ``f`` along the embedding with gen ``image``."""
    coeffs = []
    for c in f.coeffs:
        if isinstance(c, NfElement):
            coeffs.append(c.to_poly()(image) + target.zero)
        else:
            coeffs.append(target.scalar(c))
    return Poly(coeffs, target)


def _prepare(f, field: Optional[NumberField]) -> tuple[NumberField, Poly]:
    base = field or rationals()
    f = _as_poly(f)
    if f.degree() < 1:
        raise ValueError("Expected a polynomial of degree at least 1.")
    if f.domain == QQ:
        f = _map_poly(f, base.gen, base)
    return base, f.squarefree_part()


def _rational(f: Poly) -> Poly:
    return Poly([c.coords[0] for c in f.coeffs], QQ)


def _irreducible_parts(f: Poly, base: NumberField) -> list[Poly]:
    _, parts = factor_nf(f, base)
    return [g for g, _ in parts]


class TowerStep:
    """
    One adjunction ``M -> M(beta)``.

    Attributes
    ----------
    field : NumberField
        The larger field ``QQ(beta + shift * theta)``.
    factor : Poly
        Irreducible polynomial of ``beta`` over the smaller field.
    shift : int
        Integer ``s`` making the norm of ``factor(Y - s * theta)`` squarefree.
    embedding : FieldHomomorphism
        Inclusion of the smaller field.
    root : NfElement
        The adjoined root ``beta`` in ``field``.
    """

    def __init__(self, field, factor, shift, embedding, root):
        self.field = field
        self.factor = factor
        self.shift = shift
        self.embedding = embedding
        self.root = root

    def __repr__(self):
        return f"TowerStep(degree={self.field.degree}, shift={self.shift})"


class SplittingTower:
    """
    Chain ``K = M_0 < M_1 < ... < M_t`` ending in a splitting field.

    Attributes
    ----------
    base : NumberField
    poly : Poly
        Squarefree monic polynomial over ``base``.
    steps : list of TowerStep
    roots : list of NfElement
        Roots of ``poly`` in the top field, in canonical order.
    """

    def __init__(self, base: NumberField, poly: Poly, steps: list, roots: list):
        self.base = base
        self.poly = poly
        self.steps = steps
        self.roots = roots

    @property
    def top(self) -> NumberField:
        """The splitting field."""
        return self.steps[-1].field if self.steps else self.base

    @property
    def degree(self) -> int:
        """Relative degree ``[M_t : K]``."""
        return self.top.degree // self.base.degree

    @property
    def degrees(self) -> list[int]:
        """Relative degree of each step."""
        return [step.factor.degree() for step in self.steps]

    def base_image(self) -> NfElement:
        """Image of the base generator in the top field."""
        image = self.base.gen
        for step in self.steps:
            image = step.embedding(image)
        return image

    def __repr__(self):
        return f"SplittingTower(degrees={self.degrees})"


def _shifts():
    yield 0
    for k in itertools.count(1):
        yield k
        yield -k


def adjoin_root(field: NumberField, g: Poly) -> TowerStep:
    """
    Adjoin a root of an irreducible ``g`` over ``field``.

    The new field is generated over ``QQ`` by ``beta + s * theta`` for the
    first shift ``s`` whose norm polynomial is squarefree; the image of
    ``theta`` is the unique common root of its minimal polynomial and
    ``g(Theta - s * Z)``.
    """
    theta = field.gen
    for s in _shifts():
        shifted = g.compose(Poly([-theta * s, field.one], field))
        norm = norm_poly(shifted, field)
        if norm.is_squarefree():
            break
    big = field_from_poly(norm, check=False)
    big_theta = big.gen
    linear = Poly([big_theta, big.scalar(-s)], big)
    h = Poly([], big)
    power = Poly([big.one], big)
    for c in g.coeffs:
        h = h + c.to_poly().to_domain(big) * power
        power = power * linear
    common = field.defining_poly.to_domain(big).gcd(h)
    if common.degree() != 1:
        raise ArithmeticError("The shifted norm did not give a primitive element.")
    image = -common.coeffs[0]
    root = big_theta - image * s
    logger.debug("adjoined a root of degree %d with shift %d", g.degree(), s)
    return TowerStep(big, g, s, FieldHomomorphism(field, big, image), root)


def splitting_tower(
    f, field: Optional[NumberField] = None, budget: Optional[int] = None
) -> SplittingTower:
    """
    Build a splitting field of ``f`` by repeated root adjunction.

    Parameters
    ----------
    f : Poly or str
        Polynomial over ``QQ`` or over ``field``.
    field : NumberField, optional
        Base field, ``QQ`` by default.
    budget : int, optional
        Largest relative degree allowed.

    Raises
    ------
    TowerBudgetExceeded
        If the next adjunction would pass ``budget``.
    """
    base, f = _prepare(f, field)
    steps = []
    current = base
    parts = _irreducible_parts(f, base)
    while True:
        nonlinear = [g for g in parts if g.degree() > 1]
        if not nonlinear:
            roots = [-g.coeffs[0] for g in parts]
            return SplittingTower(base, f, steps, roots)
        g = nonlinear[0]
        degree = current.degree // base.degree * g.degree()
        if budget is not None and degree > budget:
            raise TowerBudgetExceeded(degree, budget)
        step = adjoin_root(current, g)
        steps.append(step)
        image = step.embedding.image
        current = step.field
        # only nonlinear factors can split further
        lifted = []
        for h in parts:
            mapped = _map_poly(h, image, current)
            if h is g:
                linear = Poly([-step.root, current.one], current)
                lifted.append(linear)
                mapped = mapped // linear
            if mapped.degree() > 1:
                lifted.extend(_irreducible_parts(mapped, current))
            else:
                lifted.append(mapped)
        parts = sorted(lifted, key=Poly.sort_key)


def automorphisms(tower: SplittingTower) -> list[tuple[int, ...]]:
    """
    The Galois group as permutations of ``tower.roots``.

    Each automorphism is built by extending the identity of the base through
    the steps; ``perm[i] = j`` means the root ``i`` is sent to the root ``j``.
    """
    top = tower.top
    roots = tower.roots
    index = {r.coords: k for k, r in enumerate(roots)}
    partial = [tower.base_image()]
    for step in tower.steps:
        extended = []
        for image in partial:
            g = _map_poly(step.factor, image, top)
            for r in roots:
                if not g(r):
                    extended.append(r + image * step.shift)
        partial = extended
    if len(partial) != tower.degree:
        raise ArithmeticError(
            f"Found {len(partial)} automorphisms for a tower of degree {tower.degree}."
        )
    perms = []
    for image in partial:
        perm = []
        for r in roots:
            moved = r.to_poly()(image) + top.zero
            perm.append(index[moved.coords])
        perms.append(tuple(perm))
    return sorted(perms)


def _generators(n: int, elements: Sequence[tuple]) -> list[Permutation]:
    gens = []
    group = PermutationGroup([Permutation(list(range(n)))])
    for perm in elements:
        p = Permutation(list(perm))
        if not group.contains(p):
            gens.append(p)
            group = PermutationGroup(gens)
    return gens


def _flag(value: Optional[bool]) -> str:
    if value is None:
        return "undetermined"
    return "yes" if value else "no"


class GaloisResult:
    """
    Outcome of a Galois computation.

    Flags are tri-state: ``True``, ``False`` or ``None`` for undetermined.

    Attributes
    ----------
    degree : int
        Number of roots permuted.
    order : int or None
        Group order, ``None`` when it exceeds ``budget`` or is unknown.
    budget : int or None
    elements : list of tuple or None
        Every group element as a permutation, when the group is known.
    method : str
        ``"tower"``, ``"frobenius"``, ``"transitivity"``, ``"chain"`` or
        ``"factors"``.
    """

    def __init__(
        self,
        degree: int,
        *,
        order: Optional[int] = None,
        budget: Optional[int] = None,
        elements: Optional[list] = None,
        abelian: Optional[bool] = None,
        solvable: Optional[bool] = None,
        is_sn: Optional[bool] = None,
        is_an: Optional[bool] = None,
        method: str = "tower",
    ):
        self.degree = degree
        self.order = order
        self.budget = budget
        self.elements = elements
        self.abelian = abelian
        self.solvable = solvable
        self.is_sn = is_sn
        self.is_an = is_an
        self.method = method
        self._generators = None

    @classmethod
    def from_elements(cls, degree: int, elements: list, **kwargs) -> GaloisResult:
        """Result with every flag read off an explicit group."""
        result = cls(degree, order=len(elements), elements=elements, **kwargs)
        group = result.group
        full = math.factorial(degree)
        result.abelian = group.is_abelian
        result.solvable = group.is_solvable
        result.is_sn = len(elements) == full
        result.is_an = degree >= 2 and 2 * len(elements) == full
        return result

    @property
    def exceeds_budget(self) -> bool:
        """Whether the group is known to be larger than the budget."""
        return self.order is None and self.budget is not None and self.elements is None

    @property
    def generators(self) -> list[Permutation]:
        """A small generating set, empty for the trivial group."""
        if self.elements is None:
            return []
        if self._generators is None:
            self._generators = _generators(self.degree, self.elements)
        return self._generators

    @property
    def group(self) -> Optional[PermutationGroup]:
        """The group as a ``sympy`` permutation group."""
        if self.elements is None:
            return None
        return PermutationGroup(
            self.generators or [Permutation(list(range(max(self.degree, 1))))]
        )

    @property
    def prime_divisors(self) -> Optional[list[int]]:
        """Primes dividing the group order."""
        if self.order is None:
            return None
        return primefactors(self.order)

    def to_json(self) -> dict:
        """Deterministic JSON form; cycles use 1-based root indices."""
        if self.order is not None:
            order = self.order
        elif self.exceeds_budget:
            order = f"exceeds budget {self.budget}"
        else:
            order = "undetermined"
        return {
            "degree": self.degree,
            "order": order,
            "abelian": _flag(self.abelian),
            "solvable": _flag(self.solvable),
            "is_sn": _flag(self.is_sn),
            "is_an": _flag(self.is_an),
            "generators": [
                [[i + 1 for i in cycle] for cycle in g.cyclic_form]
                for g in self.generators
            ],
            "prime_divisors": self.prime_divisors,
            "method": self.method,
        }

    def __repr__(self):
        return f"GaloisResult(degree={self.degree}, order={self.order})"


class FrobeniusCertificate:
    """
    Facts about the Galois group of an irreducible rational polynomial read
    off factorization types modulo unramified primes.

    Attributes
    ----------
    cycle_types : set of tuple
        Cycle types seen; each is a cycle type of some group element.
    prime_cycles : set of int
        Primes ``q`` for which the group provably holds a ``q``-cycle.
    primitive : bool
        Whether primitivity was proven.
    contains_alternating : bool
        Whether the group provably contains ``A_n``.
    odd : bool
        Whether an odd permutation was seen.
    order_lower_bound : int
        A divisor of the group order.
    """

    def __init__(self, degree: int, cycle_types: set):
        n = degree
        self.degree = n
        self.cycle_types = cycle_types
        self.prime_cycles = set()
        bound = n
        for lengths in cycle_types:
            bound = math.lcm(bound, math.lcm(*lengths))
            for q in set(lengths):
                if isprime(q) and lengths.count(q) == 1:
                    if all(l % q for l in lengths if l != q):
                        self.prime_cycles.add(q)
        self.order_lower_bound = bound
        self.odd = any(sum(l - 1 for l in lengths) % 2 for lengths in cycle_types)
        self.primitive = (
            isprime(n)
            or (1, n - 1) in cycle_types
            or any(2 * q > n for q in self.prime_cycles)
        )
        self.transposition = 2 in self.prime_cycles
        if n <= 3:
            self.contains_alternating = True
        elif n in (4, 5):
            self.contains_alternating = 3 in self.prime_cycles or (
                self.primitive and self.transposition
            )
        else:
            self.contains_alternating = self.primitive and (
                self.transposition or any(q <= n - 3 for q in self.prime_cycles)
            )

    @property
    def symmetric(self) -> bool:
        """Whether the group is provably ``S_n``."""
        return self.contains_alternating and (self.odd or self.transposition)


def frobenius_certificate(f, primes: Optional[int] = None) -> FrobeniusCertificate:
    """
    Scan unramified primes and collect cycle types of Frobenius elements.

    Parameters
    ----------
    f : Poly or str
        Irreducible polynomial over ``QQ``.
    primes : int, optional
        Number of good primes to scan.
    """
    f = _as_poly(f)
    if primes is None:
        primes = int(_galois["frobenius_primes"])
    _, ints = f.primitive()
    lc = ints[-1]
    disc = discriminant(Poly(ints))
    types = set()
    p = 1
    seen = 0
    while seen < primes:
        p = nextprime(p)
        if lc % p == 0 or disc % p == 0:
            continue
        seen += 1
        shape = factorization_type(FpPoly(ints, p))
        types.add(tuple(sorted(d for d, _ in shape)))
    certificate = FrobeniusCertificate(f.degree(), types)
    logger.debug(
        "cycle types %s; contains A_n: %s",
        sorted(types),
        certificate.contains_alternating,
    )
    return certificate


def _disc_is_square(f: Poly, base: NumberField) -> bool:
    delta = base.convert(poly_disc(f))
    _, parts = factor_nf(Poly([-delta, base.zero, base.one], base), base)
    return any(g.degree() == 1 for g, _ in parts)


def _default_budget(budget: Optional[int]) -> int:
    return int(_galois["default_budget"]) if budget is None else budget


def galois_bounded(
    f, budget: Optional[int] = None, field: Optional[NumberField] = None
) -> GaloisResult:
    """
    The Galois group of ``f`` if its order is at most ``budget``.

    Parameters
    ----------
    f : Poly or str
        Polynomial over ``QQ`` or ``field``; replaced by its squarefree part.
    budget : int, optional
        Largest group order to compute; ``galois.default_budget`` by default.
    field : NumberField, optional
        Base field, ``QQ`` by default.

    Returns
    -------
    GaloisResult
        The full group, or a verdict that the order exceeds ``budget`` with
        the flags that follow without the group.

    Examples
    --------
    >>> galois_bounded("x^3 - 2", 6).order
    6
    """
    budget = _default_budget(budget)
    base, f = _prepare(f, field)
    n = f.degree()
    try:
        tower = splitting_tower(f, base, budget)
    except TowerBudgetExceeded as exc:
        logger.debug("%s", exc)
        result = GaloisResult(n, budget=budget)
        parts = _irreducible_parts(f, base)
        if len(parts) == 1:
            result.abelian = False if exc.degree > n else None
            if base.degree == 1 and n >= 5:
                certificate = frobenius_certificate(_rational(f))
                if certificate.contains_alternating:
                    result.solvable = False
                    result.is_sn = not _disc_is_square(f, base)
                    result.is_an = not result.is_sn
        return result
    return GaloisResult.from_elements(n, automorphisms(tower), budget=budget)


def is_abelian(f, field: Optional[NumberField] = None) -> GaloisResult:
    """
    Decide whether the Galois group is abelian.

    Each irreducible factor of degree ``m`` is run with budget ``m``, since a
    transitive abelian group of degree ``m`` has order ``m``. The group is
    returned in full when ``f`` is irreducible and the answer is yes.
    """
    base, f = _prepare(f, field)
    parts = _irreducible_parts(f, base)
    if len(parts) == 1:
        result = galois_bounded(f, f.degree(), base)
        if result.order is None:
            result.abelian = False
        return result
    for g in parts:
        if g.degree() > 1:
            partial = galois_bounded(g, g.degree(), base)
            if partial.order is None or not partial.abelian:
                return GaloisResult(f.degree(), abelian=False, method="factors")
    return GaloisResult(f.degree(), abelian=True, method="factors")


def palfy_bound(n: int) -> int:
    """Upper bound on the order of a primitive solvable group of degree ``n``."""
    base = float(_galois["palfy_base"])
    exponent = float(Fraction(_galois["palfy_exponent"]))
    return math.floor(base ** (-1 / 3) * n**exponent) + 1


def _conjugation_kernel(step: TowerStep, h: Poly) -> list[list[Fraction]]:
    """
    Coordinates of the elements of ``step.field`` fixed by moving the
    adjoined root to a root of ``h``.

    An element ``P(gen)``, with ``gen = beta + s * theta``, is fixed when
    ``P(X + s * theta) = P(gen)`` modulo ``h``. For a linear ``h`` this is the
    fixed field of an automorphism, otherwise the intersection of the two
    conjugate fields.
    """
    L = step.field
    n = L.degree
    z = Poly([step.embedding.image * step.shift, L.one], L)
    powers = [Poly([L.one], L)]
    for _ in range(1, n):
        powers.append((powers[-1] * z) % h)
    columns = []
    for e in L.basis:
        acc = [[Fraction(0)] * n for _ in range(h.degree())]
        for k, c in enumerate(e.to_poly().coeffs):
            for i, a in enumerate(powers[k].coeffs):
                acc[i] = [x + c * y for x, y in zip(acc[i], a.coords)]
        acc[0] = [x - y for x, y in zip(acc[0], e.coords)]
        columns.append([x for row in acc for x in row])
    return kernel_rational(transpose(columns))


def _maximal_subfield(step: TowerStep, g: Poly) -> list[NfElement]:
    """
    Basis over ``QQ`` of a maximal subfield of ``base[X]/(g)`` containing
    the base, as elements of ``step.field``.

    Every maximal subfield is the fixed set of some factor of ``g`` over the
    larger field, so the largest proper one is maximal. The base itself
    comes back when the extension is primitive.
    """
    L = step.field
    mapped = _map_poly(g, step.embedding.image, L)
    best = None
    for h in _irreducible_parts(mapped, L):
        if h.degree() == 1 and not h(step.root):
            continue
        kernel = _conjugation_kernel(step, h)
        if best is None or len(kernel) > len(best):
            best = kernel
    logger.debug("largest proper subfield has degree %d over QQ", len(best))
    return [L.element(v) for v in best]


def _subfield_generator(basis: Sequence[NfElement]) -> NfElement:
    """A primitive element of the field spanned by ``basis``."""
    d = len(basis)
    zero = basis[0].field.zero
    for coeffs in _candidate_coords(d):
        gamma = sum((c * b for c, b in zip(coeffs, basis)), zero)
        powers = [gamma.field.one]
        for _ in range(1, d):
            powers.append(powers[-1] * gamma)
        if rank([list(x.coords) for x in powers]) == d:
            return gamma


def _relative_min_poly(
    x: NfElement, images: Sequence[NfElement], degree: int, base: NumberField
) -> Poly:
    """
    Minimal polynomial of ``x`` over an embedded copy of ``base``.

    ``images`` are the images of ``base.basis`` and ``degree`` is the known
    relative degree of ``x``.
    """
    rows = []
    power = x.field.one
    for _ in range(degree):
        rows.extend(list((b * power).coords) for b in images)
        power = power * x
    relation = kernel_rational(transpose(rows + [list(power.coords)]))
    if len(relation) != 1 or not relation[0][-1]:
        raise ArithmeticError(f"The element does not have relative degree {degree}.")
    v = relation[0]
    k = len(images)
    coeffs = [
        base.element([c / v[-1] for c in v[i * k : (i + 1) * k]]) for i in range(degree)
    ]
    return Poly(coeffs + [base.one], base)


def _primitive_steps(g: Poly, base: NumberField) -> list[tuple[NumberField, Poly]]:
    """
    An unrefinable chain of fields from ``base`` up to ``base[X]/(g)``.

    Each step is a field ``F`` of the chain with a polynomial over ``F``
    whose root generates the next field. The chain is built top down by
    descending to a maximal subfield until the extension left over is
    primitive, of prime degree or of degree at most 4.
    """
    steps = []
    current = g
    step = adjoin_root(base, g)
    while current.degree() > 4 and not isprime(current.degree()):
        basis = _maximal_subfield(step, current)
        if len(basis) == base.degree:
            break
        k = len(basis) // base.degree
        gamma = _subfield_generator(basis)
        images = [step.embedding(b) for b in base.basis]
        below = _relative_min_poly(gamma, images, k, base)
        sub = adjoin_root(base, below)
        into = FieldHomomorphism(
            sub.field, step.field, gamma + step.embedding.image * sub.shift
        )
        images = [into(b) for b in sub.field.basis]
        top = _relative_min_poly(step.root, images, current.degree() // k, sub.field)
        steps.append((sub.field, top))
        current, step = below, sub
    steps.append((base, current))
    return steps


def _step_solvable(
    field: NumberField, poly: Poly
) -> tuple[bool, Optional[GaloisResult]]:
    """Solvability of the closure of one primitive step."""
    m = poly.degree()
    if m <= 4:
        return True, None
    if len(primefactors(m)) > 1:
        # solvable primitive groups have prime power degree
        return False, None
    bound = m * (m - 1) if isprime(m) else palfy_bound(m)
    if field.degree == 1:
        certificate = frobenius_certificate(_rational(poly))
        if certificate.contains_alternating:
            return False, None
        lower = certificate.order_lower_bound
        if bound < lower or (isprime(m) and bound % lower):
            return False, None
    result = galois_bounded(poly, bound, field)
    if result.order is None:
        return False, result
    return result.solvable, result


def _factor_solvable(
    g: Poly, base: NumberField
) -> tuple[bool, Optional[GaloisResult]]:
    if g.degree() <= 4:
        return True, None
    if base.degree == 1 and frobenius_certificate(_rational(g)).contains_alternating:
        return False, None
    steps = _primitive_steps(g, base)
    logger.debug("field chain with step degrees %s", [p.degree() for _, p in steps])
    for field, poly in steps:
        answer, result = _step_solvable(field, poly)
        if not answer:
            break
    return answer, result if len(steps) == 1 else None


def is_solvable(f, field: Optional[NumberField] = None) -> GaloisResult:
    """
    Decide whether the Galois group is solvable.

    Each irreducible factor ``g`` is handled on its own. Degree at most 4 is
    solvable, and over ``QQ`` a group provably containing ``A_m``, ``m >= 5``,
    is not. Otherwise the field ``K(alpha)`` of a root is broken into an
    unrefinable chain ``K = K_0 < ... < K_t = K(alpha)`` and the group is
    solvable exactly when the closure of every step is. A step of degree
    ``m`` is primitive, so its group is solvable only for a prime power
    ``m`` and an order at most ``m(m-1)`` for a prime ``m`` or the Palfy bound
    otherwise; the bounded tower settles each step.

    Examples
    --------
    >>> is_solvable("x^6 + x^2 + 1").solvable
    True
    """
    base, f = _prepare(f, field)
    parts = _irreducible_parts(f, base)
    for g in parts:
        answer, result = _factor_solvable(g, base)
        if len(parts) == 1 and result is not None and result.order is not None:
            return result
        if not answer:
            break
    method = "chain" if len(parts) == 1 else "factors"
    return GaloisResult(f.degree(), solvable=answer, method=method)


def _six_transitive(
    f: Poly, base: NumberField, budget: Optional[int]
) -> Optional[bool]:
    n = f.degree()
    current = base
    g = f
    degree = 1
    for i in range(6):
        if len(_irreducible_parts(g, current)) != 1:
            return False
        degree *= n - i
        if budget is not None and degree > budget:
            return None
        if i == 5:
            break
        step = adjoin_root(current, g)
        current = step.field
        g = _map_poly(g, step.embedding.image, current) // Poly(
            [-step.root, current.one], current
        )
    return True


def sn_an_test(
    f, field: Optional[NumberField] = None, budget: Optional[int] = None
) -> GaloisResult:
    """
    Decide whether the Galois group of an irreducible ``f`` is ``S_n`` or ``A_n``.

    Over ``QQ`` a Frobenius certificate is tried first. Otherwise degrees of
    at least 8 adjoin six roots, the group containing ``A_n`` exactly when
    the degree reached is ``n(n-1)...(n-5)``, and smaller degrees compute the
    whole group with budget ``n!``. ``A_n`` and ``S_n`` are told apart by
    whether the discriminant is a square in the base field.

    Raises
    ------
    Reducible
        If ``f`` is reducible over the base field.
    """
    base, f = _prepare(f, field)
    parts = _irreducible_parts(f, base)
    if len(parts) != 1:
        raise Reducible(f, parts[0])
    n = f.degree()
    full = math.factorial(n)
    if n == 1:
        return GaloisResult.from_elements(1, [(0,)], method="frobenius")
    if base.degree == 1:
        certificate = frobenius_certificate(_rational(f))
        if certificate.contains_alternating:
            square = _disc_is_square(f, base)
            return GaloisResult(
                n,
                order=full // 2 if square else full,
                abelian=n <= 2 or (n == 3 and square),
                solvable=n <= 4,
                is_sn=not square,
                is_an=square,
                method="frobenius",
            )
    if n >= 8:
        verdict = _six_transitive(f, base, budget)
        if verdict is None:
            return GaloisResult(n, budget=budget, method="transitivity")
        if not verdict:
            return GaloisResult(
                n, is_sn=False, is_an=False, method="transitivity"
            )
        square = _disc_is_square(f, base)
        return GaloisResult(
            n,
            order=full // 2 if square else full,
            abelian=False,
            solvable=False,
            is_sn=not square,
            is_an=square,
            method="transitivity",
        )
    return galois_bounded(f, full if budget is None else budget, base)


class TowerBudgetExceeded(RuntimeError):
    """Raised when a splitting tower would grow past its degree budget."""

    def __init__(self, degree: int, budget: int):
        self.degree = degree
        self.budget = budget
        super().__init__(
            f"The splitting tower reaches degree {degree}, above the budget {budget}."
        )
