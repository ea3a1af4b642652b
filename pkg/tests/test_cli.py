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

import json

import jsonschema
import pytest
import yaml

from ansys.ordomax._constants import load_schema
from ansys.ordomax.archimedean import PrecisionExceeded
from ansys.ordomax.class_group import RankDeficient
from ansys.ordomax.cli import build_parser, main
from ansys.ordomax.prime_ideal import SplittingFailed


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_field(capsys):
    code, out, _ = _run(capsys, "field", "--poly", "x^3 - 2")
    assert code == 0
    data = json.loads(out)
    assert data["degree"] == 3
    assert data["signature"] == [1, 1]
    assert data["poly_discriminant"] == "-108"


def test_maximal_order(capsys):
    code, out, _ = _run(capsys, "maximal-order", "--poly", "x^2 + 3")
    assert code == 0
    data = json.loads(out)
    assert data["discriminant"] == -3
    assert data["index"] == 2


def test_maximal_order_with_certificate(capsys):
    code, out, _ = _run(capsys, "maximal-order", "--poly", "x^2 + 3", "--certify")
    assert code == 0
    data = json.loads(out)
    assert data["discriminant"] == -3
    assert "certificate" in data


def test_split(capsys):
    code, out, _ = _run(capsys, "split", "--poly", "x^2 + 1", "--prime", "5")
    assert code == 0
    data = json.loads(out)
    assert data["p"] == 5
    assert len(data["primes"]) == 2


def test_galois(capsys):
    code, out, _ = _run(capsys, "galois", "--poly", "x^3 - 2")
    assert code == 0
    assert json.loads(out)["order"] == 6


def test_galois_strict_budget(capsys):
    code, out, err = _run(
        capsys, "galois", "--poly", "x^3 - 2", "--budget", "3", "--strict"
    )
    assert code == 3
    assert out == ""
    assert "budget" in err


def test_galois_budget_without_strict(capsys):
    code, out, _ = _run(capsys, "galois", "--poly", "x^3 - 2", "--budget", "3")
    assert code == 0
    assert json.loads(out)["order"] == "exceeds budget 3"


def test_classgroup(capsys):
    code, out, _ = _run(capsys, "classgroup", "--poly", "x^2 + 5")
    assert code == 0
    data = json.loads(out)
    assert data["h"] == 2
    assert data["elementary_divisors"] == [2]
    assert data["certified"] is True
    assert "d" in data["bounds"]


def test_units_random_mode(capsys):
    code, out, _ = _run(
        capsys,
        "units",
        "--poly",
        "x^2 + 1",
        "--mode",
        "random",
        "--policy",
        "custom:5",
        "--hr-window",
        "3/2",
        "--seed",
        "3",
    )
    assert code == 0
    data = json.loads(out)
    assert data["status"] in ("certified", "heuristic")
    assert data["w"] == 4


def test_bounds(capsys):
    code, out, _ = _run(capsys, "bounds", "--poly", "x^2 + 1")
    assert code == 0
    data = json.loads(out)
    assert data["discriminant"] == -4
    assert set(data) >= {"d", "minkowski", "h_bound", "hR_bound", "bach"}


def test_output_is_deterministic(capsys):
    first = _run(capsys, "classgroup", "--poly", "x^2 - 2")[1]
    second = _run(capsys, "classgroup", "--poly", "x^2 - 2")[1]
    assert first == second
    assert list(json.loads(first)) == sorted(json.loads(first))


def test_bad_polynomial_exits_with_input_error(capsys):
    code, out, err = _run(capsys, "field", "--poly", "3x")
    assert code == 2
    assert out == ""
    assert err


def test_reducible_polynomial_is_rejected(capsys):
    code, _, _ = _run(capsys, "field", "--poly", "x^2 - 1")
    assert code == 2


@pytest.mark.parametrize("policy", ["minkowski", "custom:", "custom:abc"])
def test_invalid_policy(capsys, policy):
    with pytest.raises(SystemExit) as info:
        main(["classgroup", "--poly", "x^2 + 1", "--policy", policy])
    assert info.value.code == 2


def test_missing_subcommand():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def _corpus(tmp_path, expect):
    path = tmp_path / "corpus.yaml"
    entries = [
        {"name": "gaussian", "poly": "x^2 + 1", "expect": expect},
        {"name": "sqrt-2", "poly": "x^2 - 2", "expect": {"discriminant": 8}},
    ]
    path.write_text(yaml.safe_dump({"fields": entries}))
    return str(path)


def test_corpus_passes(capsys, tmp_path):
    path = _corpus(tmp_path, {"discriminant": -4, "h": 1, "w": 4})
    code, out, _ = _run(capsys, "corpus", "--file", path)
    assert code == 0
    data = json.loads(out)
    assert data["mismatches"] == 0
    assert [entry["ok"] for entry in data["fields"]] == [True, True]


def test_corpus_mismatch(capsys, tmp_path):
    path = _corpus(tmp_path, {"h": 2})
    code, out, _ = _run(capsys, "corpus", "--file", path)
    assert code == 1
    data = json.loads(out)
    assert data["mismatches"] == 1
    assert data["fields"][0]["found"]["h"] == 1


@pytest.mark.slow
def test_packaged_corpus(capsys):
    first = _run(capsys, "corpus")
    second = _run(capsys, "corpus")
    assert first[0] == 0
    assert json.loads(first[1])["mismatches"] == 0
    assert first[1] == second[1]


@pytest.mark.parametrize(
    "argv",
    [
        ["field", "--poly", "x^3 - 2"],
        ["maximal-order", "--poly", "x^2 + 3"],
        ["maximal-order", "--poly", "x^2 + 3", "--certify"],
        ["split", "--poly", "x^3 - 2", "--prime", "5"],
        ["galois", "--poly", "x^3 - 2"],
        ["galois", "--poly", "x^3 - 2", "--budget", "3"],
        ["galois", "--poly", "x^4 - 2", "--test", "abelian"],
        ["bounds", "--poly", "x^2 + 1"],
        ["classgroup", "--poly", "x^2 + 5"],
        ["units", "--poly", "x^2 - 2"],
        [
            "units",
            "--poly",
            "x^2 + 1",
            "--mode",
            "random",
            "--policy",
            "custom:5",
            "--hr-window",
            "3/2",
        ],
    ],
)
def test_report_matches_schema(capsys, argv):
    code, out, _ = _run(capsys, *argv)
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, load_schema(argv[0]))
    assert data["warnings"] == []
    assert "timing" not in data


def test_corpus_report_matches_schema(capsys, tmp_path):
    path = _corpus(tmp_path, {"discriminant": -4, "h": 1, "w": 4})
    _, out, _ = _run(capsys, "corpus", "--file", path)
    jsonschema.validate(json.loads(out), load_schema("corpus"))


def test_schema_rejects_unknown_keys(capsys):
    _, out, _ = _run(capsys, "field", "--poly", "x^2 + 1")
    data = json.loads(out)
    data["extra"] = 1
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(data, load_schema("field"))


def test_lapsed_guarantee_is_reported(capsys):
    code, out, _ = _run(
        capsys, "classgroup", "--poly", "x^2 + 5", "--policy", "custom:1"
    )
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, load_schema("classgroup"))
    assert data["h"] == 1
    assert [w["category"] for w in data["warnings"]] == ["GenerationGuaranteeLapsed"]


def test_timing_flag(capsys):
    code, out, _ = _run(capsys, "--timing", "bounds", "--poly", "x^2 + 1")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, load_schema("bounds"))
    assert data["timing"]["seconds"] >= 0


@pytest.mark.parametrize(
    "target, error",
    [
        ("ansys.ordomax.cli.compute_bounds", PrecisionExceeded(4096)),
        ("ansys.ordomax.cli.class_and_units", RankDeficient("unit", 1, 0)),
    ],
)
def test_exhausted_computation_exits_three(capsys, mocker, target, error):
    mocker.patch(target, side_effect=error)
    code, out, err = _run(capsys, "classgroup", "--poly", "x^2 + 5")
    assert code == 3
    assert out == ""
    assert str(error) in err


def test_splitting_failure_exits_three(capsys, mocker):
    mocker.patch("ansys.ordomax.cli.split_prime", side_effect=SplittingFailed(5, 64))
    code, out, err = _run(capsys, "split", "--poly", "x^2 + 1", "--prime", "5")
    assert code == 3
    assert out == ""
    assert "p=5" in err
