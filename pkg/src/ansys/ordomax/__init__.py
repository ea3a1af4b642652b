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

"""Ordomax: orders, ideals, Galois groups and class groups of number fields."""

try:
    import importlib.metadata as importlib_metadata
except ModuleNotFoundError:
    import importlib_metadata

__version__ = importlib_metadata.version(__name__.replace(".", "-"))

from ansys.ordomax.archimedean import (  # noqa: F401
    ComplexInterval,
    Embedding,
    PrecisionExceeded,
    certified_roots,
)
from ansys.ordomax.class_group import (  # noqa: F401
    BudgetExceeded,
    ClassUnitData,
    GenerationGuaranteeLapsed,
    PlaceSet,
    RandomizedReport,
    RankDeficient,
    SUnitGroup,
    bounded_height_generators,
    class_and_units,
    ideal_class_order,
    randomized_class_units,
    roots_of_unity,
    standard_prime_set,
    unit_log_embedding,
)
from ansys.ordomax.factorization import factor_nf, factor_q, norm_poly  # noqa: F401
from ansys.ordomax.finite_field import (  # noqa: F401
    FpPoly,
    PrimeField,
    factorization_type,
    is_irreducible,
)
from ansys.ordomax.galois import (  # noqa: F401
    FrobeniusCertificate,
    GaloisResult,
    SplittingTower,
    TowerBudgetExceeded,
    automorphisms,
    frobenius_certificate,
    galois_bounded,
    is_abelian,
    is_solvable,
    poly_disc,
    sn_an_test,
    splitting_tower,
)
from ansys.ordomax.heights import (  # noqa: F401
    Bounds,
    Place,
    compute_bounds,
    height,
    log_embedding,
)
from ansys.ordomax.linalg import (  # noqa: F401
    Lattice,
    NoSolution,
    NotPositiveDefinite,
    ZeroDivisorFound,
    elementary_divisors,
    enumerate_box,
    enumerate_ellipsoid,
    hnf,
    hnf_mod,
    kernel_int,
    lattice_hnf,
    lll,
    lll_reduce,
    snf,
    solve_mod,
)
from ansys.ordomax.number_field import (  # noqa: F401
    FieldHomomorphism,
    NfElement,
    NotAField,
    NotARing,
    NumberField,
    Reducible,
    ZeroElement,
    field_from_poly,
    min_poly,
    primitive_element,
    rationals,
    validate_field,
)
from ansys.ordomax.orders import (  # noqa: F401
    BadFactorization,
    DiscriminantMismatch,
    NotAnOrder,
    Order,
    OrderIdeal,
    SmallPrimeFactor,
    closure_with_certificate,
    equation_order,
    maximal_order,
    multiplier_ring,
    p_maximal_closure,
    q_closure,
    radical_mod_p,
    trace_radical,
)
from ansys.ordomax.polynomial import (  # noqa: F401
    QQ,
    Poly,
    PolynomialSyntaxError,
    parse_poly,
)
from ansys.ordomax.prime_ideal import (  # noqa: F401
    PrimeIdeal,
    SplittingFailed,
    primes_above,
    split_prime,
    valuation,
)
