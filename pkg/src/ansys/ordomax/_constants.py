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

"""Provides the static configuration tables loaded from ``cfg.yaml``."""

from fractions import Fraction
import json
import os

import yaml

file_dir = os.path.dirname(__file__)
cfg_path = os.path.join(file_dir, "cfg.yaml")
corpus_path = os.path.join(file_dir, "corpus.yaml")
schema_dir = os.path.join(file_dir, "schemas")

with open(cfg_path, "r") as cfg_yaml:
    cfg_data = yaml.safe_load(cfg_yaml)

_linalg: dict = cfg_data["linalg"]
_archimedean: dict = cfg_data["archimedean"]
_factorization: dict = cfg_data["factorization"]
_orders: dict = cfg_data["orders"]
_galois: dict = cfg_data["galois"]
_class_group: dict = cfg_data["class_group"]
_cli: dict = cfg_data["cli"]

_lll_delta = Fraction(_linalg["lll_delta"])
_max_precision = int(_archimedean["max_precision"])


def load_corpus(path: str = None) -> list:
    """
    Load the list of golden fields.

    Parameters
    ----------
    path : str, optional
        YAML file to read. Defaults to the packaged ``corpus.yaml``.

    Returns
    -------
    list
        One mapping per field entry.
    """
    with open(path or corpus_path, "r") as corpus_yaml:
        return yaml.safe_load(corpus_yaml)["fields"]


def load_schema(command: str) -> dict:
    """
    Load the JSON schema of the report written by a subcommand.

    Parameters
    ----------
    command : str
        Subcommand name, such as ``"split"``. ``"units"`` shares the
        ``"classgroup"`` schema.

    Returns
    -------
    dict
        Draft 2020-12 JSON schema.
    """
    name = "classgroup" if command == "units" else command
    with open(os.path.join(schema_dir, f"{name}.json"), "r") as schema_json:
        return json.load(schema_json)

def default_precision() -> int:
    """
    Working precision in bits for certified numerics.

    The ``ORDOMAX_PRECISION`` environment variable overrides the configured
    default.
    """
    value = os.getenv("ORDOMAX_PRECISION")
    if value is None:
        return int(_archimedean["precision"])
    try:
        bits = int(value)
    except ValueError:
        raise InvalidPrecision(value) from None
    if bits < 16 or bits > _max_precision:
        raise InvalidPrecision(value)
    return bits


class InvalidPrecision(ValueError):
    """Raised when the requested working precision is not usable."""

    def __init__(self, value):
        super().__init__(
            f"`{value}` is not a valid precision. Use an integer number of bits "
            f"between 16 and {_max_precision}."
        )
