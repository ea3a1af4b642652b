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
Provides the ``ordomax`` command line.

Every subcommand writes one JSON document to stdout with sorted keys;
diagnostics go to stderr. Exit codes: 0 on success, 1 on a corpus
mismatch, 2 on an input error and 3 when a budget or the working precision
is exhausted. Warnings raised while computing are listed under the
``warnings`` key of the report. Each report validates against the JSON schema
returned by :func:`ansys.ordomax._constants.load_schema`.
"""

from __future__ import annotations

import argparse
from fractions import Fraction
import json
import logging
import math
import sys
import time
from typing import Optional, Sequence
import warnings

from sympy import factorint

from ansys.ordomax._constants import _cli, load_corpus
from ansys.ordomax._version import __version__
from ansys.ordomax.archimedean import PrecisionExceeded, upper
from ansys.ordomax.class_group import (
    BudgetExceeded,
    RankDeficient,
    bounded_height_generators,
    class_and_units,
    randomized_class_units,
    standard_prime_set,
)
from ansys.ordomax.galois import (
    TowerBudgetExceeded,
    galois_bounded,
    is_abelian,
    is_solvable,
    poly_disc,
    sn_an_test,
)
from ansys.ordomax.heights import compute_bounds
from ansys.ordomax.number_field import field_from_poly
from ansys.ordomax.orders import (
    Order,
    closure_with_certificate,
    equation_order,
    maximal_order,
)
from ansys.ordomax.polynomial import parse_poly
from ansys.ordomax.prime_ideal import SplittingFailed, split_prime

logger = logging.getLogger(__name__)

POLY_HELP = (
    "monic integer polynomial in x; coefficients need an explicit '*', "
    "as in 'x^3 - 3*x + 1'"
)


def _ring_of_integers(poly: str) -> Order:
    order = equation_order(parse_poly(poly))
    factors = factorint(abs(order.discriminant))
    return maximal_order(order, {int(p): int(e) for p, e in factors.items()})


def _cmd_field(args) -> dict:
    field = field_from_poly(args.poly)
    r, s = field.signature()
    return {
        "degree": field.degree,
        "defining_poly": str(field.defining_poly),
        "signature": [r, s],
        "poly_discriminant": str(poly_disc(field.defining_poly)),
    }


def _cmd_maximal_order(args) -> dict:
    order = equation_order(parse_poly(args.poly))
    if args.certify:
        ring, certificate = closure_with_certificate(order)
        out = ring.to_json()
        out["certificate"] = certificate
        out["index"] = order.index_in(ring)
        return out
    ring = _ring_of_integers(args.poly)
    out = ring.to_json()
    out["index"] = order.index_in(ring)
    return out


def _cmd_split(args) -> dict:
    order = _ring_of_integers(args.poly)
    primes = split_prime(order, args.prime, args.seed)
    return {"p": args.prime, "primes": [P.to_json() for P in primes]}


def _cmd_galois(args) -> dict:
    tests = {
        "abelian": lambda f: is_abelian(f),
        "solvable": lambda f: is_solvable(f),
        "sn-an": lambda f: sn_an_test(f, budget=args.budget),
        "full": lambda f: galois_bounded(f, budget=args.budget),
    }
    result = tests[args.test](parse_poly(args.poly))
    if args.strict and (result.exceeds_budget or result.order is None):
        raise BudgetExceeded("the Galois group", args.budget or 0)
    return result.to_json()


def _policy(text: str) -> tuple[str, Optional[str]]:
    if text.startswith("custom:"):
        return "custom", text.split(":", 1)[1]
    return text, None


def _random_bound(bound, policy, bounds) -> int:
    if policy == "custom":
        return int(bound)
    limit = upper(bounds.d if policy == "theorem" else bounds.bach)
    return max(2, math.floor(limit))


def _cmd_classgroup(args) -> dict:
    order = _ring_of_integers(args.poly)
    bounds = compute_bounds(order, args.precision)
    policy, bound = _policy(args.policy)
    if args.mode == "random":
        report = randomized_class_units(
            order,
            _random_bound(bound, policy, bounds),
            args.seed,
            args.hr_window,
            precision=args.precision,
        )
        out = report.to_json()
    else:
        places = standard_prime_set(
            order,
            policy,
            bound,
            precision=args.precision,
            seed=args.seed,
            bounds=bounds,
        )
        generators = bounded_height_generators(
            order, places, precision=args.precision, bounds=bounds
        )
        data = class_and_units(order, places, generators, precision=args.precision)
        out = data.to_json()
        out["certified"] = True
    out["bounds"] = bounds.to_json()
    return out


def _cmd_bounds(args) -> dict:
    order = _ring_of_integers(args.poly)
    out = compute_bounds(order, args.precision).to_json()
    out["discriminant"] = order.discriminant
    return out


def _cmd_corpus(args) -> dict:
    reports, mismatches = [], 0
    for entry in load_corpus(args.file):
        order = _ring_of_integers(entry["poly"])
        found = {"discriminant": order.discriminant}
        expect = entry.get("expect", {})
        if "h" in expect or "w" in expect:
            precision = args.precision
            places = standard_prime_set(order, precision=precision, seed=args.seed)
            generators = bounded_height_generators(order, places, precision=precision)
            data = class_and_units(order, places, generators, precision=precision)
            found.update({"h": data.h, "w": data.w})
        if "galois_order" in expect:
            found["galois_order"] = galois_bounded(parse_poly(entry["poly"])).order
        ok = all(found.get(key) == value for key, value in expect.items())
        mismatches += not ok
        reports.append({"name": entry["name"], "found": found, "ok": ok})
    return {"fields": reports, "mismatches": mismatches}


def _warning_list(caught) -> list:
    seen = []
    for record in caught:
        entry = {
            "category": record.category.__name__,
            "message": str(record.message),
        }
        if entry not in seen:
            logger.warning("%s: %s", entry["category"], entry["message"])
            seen.append(entry)
    return seen


def build_parser() -> argparse.ArgumentParser:
    """The argument parser of the ``ordomax`` command."""
    parser = argparse.ArgumentParser(
        prog="ordomax", description="Exact algebraic number theory."
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument(
        "--precision", type=int, default=None, help="starting precision in bits"
    )
    parser.add_argument(
        "--timing",
        action="store_true",
        help="add wall-clock seconds to the report, which makes it non-deterministic",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, handler, help_text, poly=True):
        p = sub.add_parser(name, help=help_text)
        if poly:
            p.add_argument("--poly", required=True, help=POLY_HELP)
        p.add_argument("--seed", type=int, default=int(_cli["default_seed"]))
        p.set_defaults(handler=handler)
        return p

    command("field", _cmd_field, "validate and describe a number field")
    p = command("maximal-order", _cmd_maximal_order, "ring of integers")
    p.add_argument(
        "--certify",
        action="store_true",
        help="enlarge without factoring and report the certificate",
    )
    p = command("split", _cmd_split, "decompose a rational prime")
    p.add_argument("--prime", type=int, required=True)
    p = command("galois", _cmd_galois, "Galois group questions")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument(
        "--test", choices=["abelian", "solvable", "sn-an", "full"], default="full"
    )
    p.add_argument(
        "--strict", action="store_true", help="exit 3 when the budget is exceeded"
    )
    for name in ("classgroup", "units"):
        p = command(name, _cmd_classgroup, "class group and units")
        p.add_argument(
            "--policy", default="theorem", help="theorem, bach or custom:B"
        )
        p.add_argument("--mode", choices=["exact", "random"], default="exact")
        p.add_argument(
            "--hr-window",
            type=Fraction,
            default=None,
            help="a with hR known to lie in (a/2, a)",
        )
    command("bounds", _cmd_bounds, "class number and regulator bounds")
    p = command("corpus", _cmd_corpus, "run the golden corpus", poly=False)
    p.add_argument("--file", default=None, help="corpus YAML file")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if args.command == "classgroup" or args.command == "units":
        policy, bound = _policy(args.policy)
        if policy not in ("theorem", "bach", "custom") or (
            policy == "custom" and not (bound or "").isdigit()
        ):
            parser.error(f"invalid policy: {args.policy}")
    start = time.perf_counter()
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            out = args.handler(args)
    except (
        BudgetExceeded,
        TowerBudgetExceeded,
        SplittingFailed,
        PrecisionExceeded,
        RankDeficient,
    ) as exc:
        print(str(exc), file=sys.stderr)
        return 3
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    out["warnings"] = _warning_list(caught)
    if args.timing:
        out["timing"] = {"seconds": round(time.perf_counter() - start, 3)}
    print(json.dumps(out, sort_keys=True, indent=2))
    if args.command == "corpus" and out["mismatches"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
