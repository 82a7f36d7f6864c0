"""Operator files (JSON) and symbol files (CSV with a ``# key=value`` header).

Floats are written with 17 significant digits, which round-trips binary64 exactly.
"""

from __future__ import annotations

import csv
import json
import math
import re
from pathlib import Path

import numpy as np

from .coset import CosetGrid, coset_grid
from .irrep import dim_symmetric
from .phase_space import SymbolField

__all__ = [
    "DimensionMismatchError",
    "OperatorFileError",
    "SymbolFileError",
    "angle_names",
    "dumps_json",
    "fmt",
    "read_operator",
    "read_symbol_file",
    "write_operator",
    "write_symbol_file",
]


class OperatorFileError(ValueError):
    pass


class SymbolFileError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


def fmt(x: float) -> str:
    return format(float(x), ".17g")


_RAW = re.compile(r'"@@num:([^"]*)@@"')


def _tag_floats(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, (float, np.floating)):
        return f"@@num:{fmt(obj)}@@" if math.isfinite(obj) else None
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return _tag_floats(obj.tolist())
    if isinstance(obj, dict):
        return {str(k): _tag_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_tag_floats(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps_json(obj, indent: int | None = 2) -> str:
    """``json.dumps`` with every float written as 17 significant digits."""
    return _RAW.sub(r"\1", json.dumps(_tag_floats(obj), indent=indent))


def write_operator(path, x: np.ndarray, n: int, lam: int, label: str | None = None) -> None:
    x = np.asarray(x, dtype=complex)
    dim = dim_symmetric(n, lam)
    if x.shape != (dim, dim):
        raise DimensionMismatchError(f"operator shape {x.shape} does not match dim {dim}")
    doc = {"n": n, "lambda": lam, "dim": dim,
           "entries": [[z.real, z.imag] for z in x.ravel()]}
    if label is not None:
        doc["label"] = label
    Path(path).write_text(dumps_json(doc, indent=None) + "\n")


def read_operator(path) -> tuple[np.ndarray, dict]:
    """Return ``(matrix, meta)``.

    Raises OperatorFileError for unreadable or structurally invalid files and
    DimensionMismatchError when the declared dim is not that of (n, lambda).
    """
    try:
        doc = json.loads(Path(path).read_text())
        n, lam, dim = int(doc["n"]), int(doc["lambda"]), int(doc["dim"])
        entries = np.asarray(doc["entries"], dtype=float)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise OperatorFileError(f"malformed operator file {path}: {exc}") from exc
    if entries.ndim != 2 or entries.shape[1] != 2 or len(entries) != dim * dim:
        raise OperatorFileError(f"entries must be {dim * dim} [re, im] pairs")
    if n < 2 or lam < 0:
        raise OperatorFileError(f"invalid irrep n={n}, lambda={lam}")
    if dim != dim_symmetric(n, lam):
        raise DimensionMismatchError(
            f"declared dim {dim} != dim of ({lam},0,...) for SU({n}) = {dim_symmetric(n, lam)}")
    x = (entries[:, 0] + 1j * entries[:, 1]).reshape(dim, dim)
    return x, {"n": n, "lambda": lam, "dim": dim, "label": doc.get("label")}


def angle_names(n: int) -> list[str]:
    if n == 2:
        return ["alpha", "beta"]
    if n == 3:
        return ["alpha1", "beta1", "alpha2", "beta2"]
    return []


def write_symbol_file(path, field: SymbolField, mode: str = "consistent") -> None:
    grid = field.grid
    header = {
        "n": field.n, "lambda": field.lam, "s": fmt(field.s), "mode": mode,
        "vol": fmt(grid.volume), "grid": ",".join(str(r) for r in grid.resolution),
        "monte_carlo": int(grid.monte_carlo),
        "seed": "" if grid.seed is None else grid.seed,
    }
    names = angle_names(grid.n)
    with open(path, "w", newline="") as fh:
        fh.write("# " + " ".join(f"{k}={v}" for k, v in header.items()) + "\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["idx", *names, "weight", "re", "im"])
        for k in range(len(grid)):
            angles = [fmt(a) for a in grid.points[k]] if names else []
            val = field.values[k]
            writer.writerow([k, *angles, fmt(grid.weights[k]), fmt(val.real), fmt(val.imag)])


def read_symbol_file(path) -> tuple[SymbolField, str]:
    """Return ``(field, mode)``; the grid is rebuilt from the stored nodes and weights."""
    try:
        with open(path, newline="") as fh:
            first = fh.readline()
            if not first.startswith("#"):
                raise SymbolFileError("missing '# key=value' header line")
            header = dict(item.split("=", 1) for item in first[1:].split())
            rows = list(csv.reader(fh))
        n, lam, s = int(header["n"]), int(header["lambda"]), float(header["s"])
        mode = header.get("mode", "consistent")
        resolution = tuple(int(r) for r in header["grid"].split(","))
        monte_carlo = bool(int(header.get("monte_carlo", "0")))
        seed = int(header["seed"]) if header.get("seed") else None
        names = angle_names(n)
        if rows[0] != ["idx", *names, "weight", "re", "im"]:
            raise SymbolFileError(f"unexpected columns {rows[0]}")
        if len(rows) < 2:
            raise SymbolFileError("symbol file has no data rows")
        data = np.array([[float(v) for v in row] for row in rows[1:]]).reshape(-1, len(rows[0]))
    except SymbolFileError:
        raise
    except (OSError, ValueError, KeyError, IndexError) as exc:
        raise SymbolFileError(f"malformed symbol file {path}: {exc}") from exc

    weights = data[:, 1 + len(names)]
    values = data[:, -2] + 1j * data[:, -1]
    if monte_carlo:
        grid = coset_grid(n, resolution, monte_carlo=True, seed=seed)
        if len(grid) != len(values):
            raise SymbolFileError("row count does not match the Monte Carlo grid")
    else:
        grid = CosetGrid(n, data[:, 1:1 + len(names)], weights, resolution)
    if abs(grid.volume - float(header.get("vol", grid.volume))) > 1e-8 * grid.volume:
        raise SymbolFileError("weight column does not sum to the declared volume")
    return SymbolField(grid, values, s, n, lam, str(path)), mode
