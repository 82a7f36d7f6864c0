from __future__ import annotations

import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swkernel.coset import coset_grid
from swkernel.io import (
    DimensionMismatchError,
    OperatorFileError,
    SymbolFileError,
    dumps_json,
    read_operator,
    read_symbol_file,
    write_operator,
    write_symbol_file,
)
from swkernel.phase_space import symbol_field

from conftest import random_operator

finite = st.floats(allow_nan=False, allow_infinity=False)


@settings(max_examples=50, deadline=None)
@given(finite, finite)
def test_json_floats_round_trip_bitwise(a, b):
    out = json.loads(dumps_json({"x": [a, b]}))
    assert out["x"][0] == a and out["x"][1] == b


def test_json_non_finite_becomes_null():
    assert json.loads(dumps_json([np.nan, np.inf, 1.5])) == [None, None, 1.5]


def test_json_numpy_types():
    out = json.loads(dumps_json({"a": np.int64(3), "b": np.arange(3.0), "c": True}))
    assert out == {"a": 3, "b": [0.0, 1.0, 2.0], "c": True}


def test_operator_round_trip_bitwise(tmp_path, rng):
    x = random_operator(rng, 6) * 1e-7
    write_operator(tmp_path / "x.json", x, 3, 2, label="rand")
    y, meta = read_operator(tmp_path / "x.json")
    assert np.array_equal(x, y)
    assert meta == {"n": 3, "lambda": 2, "dim": 6, "label": "rand"}


def test_write_operator_checks_shape(tmp_path):
    with pytest.raises(DimensionMismatchError):
        write_operator(tmp_path / "x.json", np.eye(4), 3, 2)


@pytest.mark.parametrize("doc", [
    "not json",
    '{"n": 3, "lambda": 1}',
    '{"n": 3, "lambda": 1, "dim": 3, "entries": [[1, 0]]}',
    '{"n": 1, "lambda": 1, "dim": 1, "entries": [[1, 0]]}',
])
def test_malformed_operator_files(tmp_path, doc):
    path = tmp_path / "bad.json"
    path.write_text(doc)
    with pytest.raises(OperatorFileError):
        read_operator(path)


def test_declared_dimension_mismatch(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 3, "lambda": 2, "dim": 2, "entries": [[0, 0]] * 4}))
    with pytest.raises(DimensionMismatchError):
        read_operator(path)


@pytest.mark.parametrize("n, res", [(2, (5, 3)), (3, (5, 3, 5, 3))])
def test_symbol_file_round_trip(tmp_path, rng, n, res):
    grid = coset_grid(n, res)
    lam = 2 if n == 2 else 1
    field = symbol_field(random_operator(rng, 3), 0.25, grid, source="x")
    write_symbol_file(tmp_path / "f.csv", field, "paper-verbatim")
    back, mode = read_symbol_file(tmp_path / "f.csv")
    assert mode == "paper-verbatim"
    assert (back.n, back.lam, back.s) == (n, lam, 0.25)
    assert np.array_equal(back.values, field.values)
    assert np.array_equal(back.grid.points, grid.points)
    assert np.array_equal(back.grid.weights, grid.weights)
    assert back.grid.resolution == res


def test_symbol_file_monte_carlo(tmp_path, rng):
    grid = coset_grid(4, (30,), seed=5)
    field = symbol_field(random_operator(rng, 4), 0.0, grid)
    write_symbol_file(tmp_path / "f.csv", field)
    back, _ = read_symbol_file(tmp_path / "f.csv")
    assert back.grid.monte_carlo
    assert np.array_equal(back.grid.matrices, grid.matrices)
    assert np.array_equal(back.values, field.values)


def test_symbol_file_header_line(tmp_path):
    field = symbol_field(np.eye(2), 0.0, coset_grid(2, (3, 2)))
    write_symbol_file(tmp_path / "f.csv", field)
    lines = (tmp_path / "f.csv").read_text().splitlines()
    assert lines[0].startswith("# n=2 lambda=1 s=0 mode=consistent vol=")
    assert lines[1] == "idx,alpha,beta,weight,re,im"
    assert len(lines) == 2 + 6


def test_symbol_file_weight_sum_checked(tmp_path):
    field = symbol_field(np.eye(2), 0.0, coset_grid(2, (3, 2)))
    path = tmp_path / "f.csv"
    write_symbol_file(path, field)
    lines = path.read_text().splitlines()
    row = lines[2].split(",")
    row[3] = str(float(row[3]) * 2)
    lines[2] = ",".join(row)
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(SymbolFileError):
        read_symbol_file(path)


@pytest.mark.parametrize("text", ["idx,re\n", "# n=2 lambda=1 s=0 grid=3,2\nidx,alpha\n",
                                  "# n=2 lambda=1 s=0 grid=3,2\nidx,alpha,beta,weight,re,im\n",
                                  "# n=2 lambda=1 s=0 grid=3,2\nidx,alpha,beta,weight,re,im\n0,x,1,1,1,1\n"])
def test_malformed_symbol_files(tmp_path, text):
    path = tmp_path / "bad.csv"
    path.write_text(text)
    with pytest.raises(SymbolFileError):
        read_symbol_file(path)
