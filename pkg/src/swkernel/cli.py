"""Command-line interface: ``swkernel {table,verify,symbol,reconstruct,grid}``.

Exit codes: 0 success, 1 numerical failure, 2 usage error or malformed input.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import golden
from .coset import UnsupportedGridError, coset_grid, coset_volume, default_resolution
from .io import (
    DimensionMismatchError,
    OperatorFileError,
    SymbolFileError,
    angle_names,
    dumps_json,
    fmt,
    read_operator,
    read_symbol_file,
    write_operator,
    write_symbol_file,
)
from .irrep import IrrepSpace, adjoint_block_dim
from .kernel import chi_table, f_eval, kernel_coefficients, p_operator
from .phase_space import (
    MODES,
    PhaseSpaceMap,
    axiom_report,
    distortion_table,
    reconstruct,
    symbol_field,
)
from .tensors import decompose_tensor_family, verify_trace_orthonormality

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _s_values(raw: list[str] | None, default: list[float]) -> list[float]:
    if not raw:
        return default
    out = []
    for item in raw:
        for part in item.split(","):
            try:
                out.append(float(part))
            except ValueError as exc:
                raise UsageError(f"invalid s value {part!r}") from exc
    return out


def _space(args) -> IrrepSpace:
    if args.n < 2 or args.lam < 0:
        raise UsageError("need --n >= 2 and --lambda >= 0")
    return IrrepSpace(args.n, args.lam)


def _grid(n: int, lam: int, text: str | None, seed: int):
    if text is None:
        resolution = default_resolution(n, lam)
    else:
        try:
            resolution = tuple(int(r) for r in text.split(","))
        except ValueError as exc:
            raise UsageError(f"invalid --grid {text!r}") from exc
    try:
        return coset_grid(n, resolution, seed=seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(obj, args, text_lines=None, csv_rows=None) -> None:
    out = sys.stdout
    if args.format == "text" and text_lines is not None:
        out.write("\n".join(text_lines) + "\n")
    elif args.format == "csv" and csv_rows is not None:
        out.write("\n".join(",".join(str(c) for c in row) for row in csv_rows) + "\n")
    else:
        out.write(dumps_json(obj) + "\n")


# -- table ------------------------------------------------------------------

def _table_data(space: IrrepSpace, s_list: list[float], sz_angle: bool) -> dict:
    family = decompose_tensor_family(space)
    chi = chi_table(family, sz_angle)
    rows = []
    for s in s_list:
        k = kernel_coefficients(family, s)
        rows.append({"s": s, "F": k.F, "G": k.G, "c": k.c,
                     "P_diag": np.diag(p_operator(family, s)).real})
    data = {
        "n": space.n, "lambda": space.lam, "dim": space.dim,
        "vol": coset_volume(space.n),
        "cartan": "S_z" if sz_angle and space.n == 2 else "h1",
        "block_dims": [adjoint_block_dim(space.n, s) for s in range(space.lam + 1)],
        "casimir": family.casimir,
        "hw_coeff": family.hw_coeff,
        "chi": {"exponents": chi.exponents, "coeffs": chi.coeffs},
        "g": kernel_coefficients(family, 0.0).g,
        "normalization": kernel_coefficients(family, 0.0).normalization,
        "orderings": rows,
    }
    exact = golden.golden_forms(space.n, space.lam)
    if exact is not None:
        data["exact"] = exact
    return data


def _table_text(d: dict) -> list[str]:
    lines = [f"SU({d['n']}) irrep ({d['lambda']},0,...)  dim={d['dim']}  vol={fmt(d['vol'])}"]
    lines.append(f"block dims: {d['block_dims']}")
    lines.append("C~_sigma:   " + "  ".join(fmt(x) for x in d["hw_coeff"]))
    lines.append(f"chi exponents ({d['cartan']}): " + "  ".join(fmt(x) for x in d["chi"]["exponents"]))
    for sigma, row in enumerate(d["chi"]["coeffs"]):
        lines.append(f"  chi_{sigma}: " + "  ".join(f"{fmt(x):>24}" for x in row))
    lines.append("g:")
    for row in d["g"]:
        lines.append("  " + "  ".join(f"{fmt(x):>24}" for x in row))
    for r in d["orderings"]:
        lines.append(f"s = {fmt(r['s'])}")
        for key in ("F", "G", "c", "P_diag"):
            lines.append(f"  {key:<6}" + "  ".join(f"{fmt(x):>24}" for x in r[key]))
    if "exact" in d:
        lines.append("exact forms:")
        for key, val in d["exact"].items():
            lines.append(f"  {key}: {val}")
    return lines


def _table_csv(d: dict) -> list[list]:
    rows = [["quantity", "s", "i", "j", "value"]]
    for i, x in enumerate(d["hw_coeff"]):
        rows.append(["hw_coeff", "", i, "", fmt(x)])
    for i, row in enumerate(d["g"]):
        for j, x in enumerate(row):
            rows.append(["g", "", i, j, fmt(x)])
    for r in d["orderings"]:
        for key in ("F", "G", "c", "P_diag"):
            for i, x in enumerate(r[key]):
                rows.append([key, fmt(r["s"]), i, "", fmt(x)])
    return rows


def cmd_table(args) -> int:
    space = _space(args)
    data = _table_data(space, _s_values(args.s, [-1.0, 0.0, 1.0]), args.convention == "sz")
    _emit(data, args, _table_text(data), _table_csv(data))
    return EXIT_OK


# -- verify -----------------------------------------------------------------

def _check(dev: float, tol: float) -> dict:
    return {"deviation": float(dev), "tolerance": tol, "passed": bool(dev <= tol)}


def verify_report(space: IrrepSpace, s: float, grid, mode: str, seed: int,
                  samples: int = 20) -> dict:
    family = decompose_tensor_family(space)
    checks: dict[str, dict] = {}

    checks["trace_orthonormality"] = _check(verify_trace_orthonormality(family), 1e-11)
    expected = [adjoint_block_dim(space.n, s_) for s_ in range(space.lam + 1)]
    checks["block_dims"] = {"found": family.block_dims(), "expected": expected,
                            "passed": family.block_dims() == expected}
    zw = family.zero_weight_invariant
    checks["invariant_tensors"] = {"count": len(zw), "expected": space.lam + 1,
                                   "passed": len(zw) == space.lam + 1}

    p = p_operator(family, s)
    route = np.linalg.norm(p - p_operator(family, s, "integral"))
    checks["route_equivalence"] = _check(route, 1e-10)
    checks["trace_P"] = _check(abs(np.trace(p) - 1), 1e-12)
    hw = np.zeros_like(p)
    hw[0, 0] = 1
    checks["boundary_condition"] = _check(np.linalg.norm(p_operator(family, -1.0) - hw), 1e-12)

    report = axiom_report(space, family, s, grid, samples, seed)
    for name, c in report.checks.items():
        checks[f"axiom_{name}"] = _check(c.deviation, c.tolerance)

    if not grid.monte_carlo:
        rng = np.random.default_rng(seed)
        xs = rng.standard_normal((samples, space.dim, space.dim)) \
            + 1j * rng.standard_normal((samples, space.dim, space.dim))
        psm = PhaseSpaceMap(family, grid)
        rec = psm.reconstruct(psm.symbols(xs, s), s)
        rel = np.linalg.norm(rec - xs, axis=(1, 2)) / np.linalg.norm(xs, axis=(1, 2))
        checks["round_trip"] = _check(rel.max(), 1e-8)
        if mode == "paper-verbatim":
            table = distortion_table(family, grid, s)
            dev = max(abs(v["measured"] - v["predicted"]) / v["predicted"] for v in table.values())
            checks["distortion"] = _check(dev, 1e-8)
            checks["distortion"]["table"] = table

    gv = golden.golden_values(space.n, space.lam, s)
    if gv is not None:
        k = kernel_coefficients(family, s)
        found = {"hw_coeff": family.hw_coeff, "g": k.g, "F": k.F, "c": k.c,
                 "c_table": k.c, "P_diag": np.diag(p).real}
        dev = max(np.abs(found[key] - val).max() for key, val in gv.items())
        omega = np.random.default_rng(seed).uniform(0, 2 * np.pi, 32)
        fg = golden.golden_f(space.n, space.lam, s, omega)
        if fg is not None:
            dev = max(dev, np.abs(f_eval(chi_table(family), k.c, omega) - fg).max())
        checks["golden"] = _check(dev, 1e-12 if space.n == 3 else 1e-10)

    evals = np.linalg.eigvalsh(p)
    out = {
        "n": space.n, "lambda": space.lam, "s": s, "mode": mode, "seed": seed,
        "grid": {"resolution": list(grid.resolution), "points": len(grid),
                 "volume": grid.volume, "monte_carlo": grid.monte_carlo},
        "P_diag": np.diag(p).real,
        "P_rank": int(np.sum(np.abs(evals) > 1e-12)),
        "checks": checks,
    }
    out["passed"] = all(c["passed"] for c in checks.values())
    return out


def cmd_verify(args) -> int:
    space = _space(args)
    s = _s_values(args.s, [0.0])
    if len(s) != 1:
        raise UsageError("verify takes a single --s value")
    grid = _grid(space.n, space.lam, args.grid, args.seed)
    report = verify_report(space, s[0], grid, args.mode, args.seed, args.samples)
    lines = [f"{name:<24} {'PASS' if c['passed'] else 'FAIL'}"
             + (f"  {c['deviation']:.3e} <= {c['tolerance']:.1e}" if "deviation" in c else "")
             for name, c in report["checks"].items()]
    lines.append(f"P rank: {report['P_rank']}")
    lines.append("overall: " + ("PASS" if report["passed"] else "FAIL"))
    _emit(report, args, lines)
    return EXIT_OK if report["passed"] else EXIT_FAIL


# -- symbol / reconstruct / grid ---------------------------------------------

def cmd_symbol(args) -> int:
    try:
        x, meta = read_operator(args.operator)
    except OperatorFileError as exc:
        raise UsageError(str(exc)) from exc
    except DimensionMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    s = _s_values(args.s, [0.0])[0]
    grid = _grid(meta["n"], meta["lambda"], args.grid, args.seed)
    field = symbol_field(x, s, grid, source=meta.get("label") or str(args.operator))
    if args.out:
        write_symbol_file(args.out, field, args.mode)
    re_ = field.values.real
    space = IrrepSpace(meta["n"], meta["lambda"])
    p = p_operator(decompose_tensor_family(space), s)
    origin = complex(np.trace(x @ p))
    summary = {"n": meta["n"], "lambda": meta["lambda"], "s": s, "points": len(grid),
               "min": re_.min(), "max": re_.max(),
               "mean": float(np.dot(grid.weights, re_) / grid.volume),
               "max_abs_imag": np.abs(field.values.imag).max(),
               "value_at_origin": [origin.real, origin.imag], "out": args.out}
    _emit(summary, args, [f"{k}: {v}" for k, v in summary.items()])
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    try:
        field, mode = read_symbol_file(args.symbol)
    except SymbolFileError as exc:
        raise UsageError(str(exc)) from exc
    mode = args.mode or mode
    if mode not in MODES:
        raise UsageError(f"unknown mode {mode!r}")
    rec = reconstruct(field, mode=mode, check=False)
    summary: dict = {"n": field.n, "lambda": field.lam, "s": field.s, "mode": mode,
                     "self_consistency": rec.residual}
    residual = rec.residual if mode == "consistent" else None
    if rec.distortion is not None:
        summary["distortion"] = rec.distortion
    if args.reference:
        try:
            ref, _ = read_operator(args.reference)
        except (OperatorFileError, DimensionMismatchError) as exc:
            raise UsageError(str(exc)) from exc
        if ref.shape != rec.operator.shape:
            print("error: reference operator has the wrong dimension", file=sys.stderr)
            return EXIT_FAIL
        residual = float(np.linalg.norm(rec.operator - ref) / max(np.linalg.norm(ref), 1e-300))
        summary["residual"] = residual
    if args.out:
        write_operator(args.out, rec.operator, field.n, field.lam, label="reconstructed")
    summary["tol"] = args.tol
    summary["passed"] = residual is None or residual <= args.tol
    _emit(summary, args, [f"{k}: {v}" for k, v in summary.items()])
    return EXIT_OK if summary["passed"] else EXIT_FAIL


def cmd_grid(args) -> int:
    lam = args.lam if args.lam is not None else 1
    grid = _grid(args.n, lam, args.grid, args.seed)
    names = angle_names(grid.n) or [f"a{k}" for k in range(grid.points.shape[1])]
    rows = [["idx", *names, "weight"]]
    rows += [[k, *[fmt(a) for a in grid.points[k]], fmt(grid.weights[k])] for k in range(len(grid))]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(",".join(str(c) for c in r) for r in rows) + "\n")
    summary = {"n": grid.n, "resolution": list(grid.resolution), "points": len(grid),
               "weight_sum": grid.volume, "volume": coset_volume(grid.n),
               "monte_carlo": grid.monte_carlo}
    if args.format == "csv" and not args.out:
        _emit(summary, args, csv_rows=rows)
    else:
        _emit(summary, args, [f"{k}: {v}" for k, v in summary.items()])
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="swkernel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, irrep=True, s=True):
        if irrep:
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--lambda", dest="lam", type=int, required=True)
        if s:
            p.add_argument("--s", action="append", help="ordering parameter(s); repeat or comma-separate")
        p.add_argument("--format", choices=("json", "text", "csv"), default="json")

    p = sub.add_parser("table", help="chi, g, F, G, c and P^(s) for one irrep")
    common(p)
    p.add_argument("--convention", choices=("generic", "sz"), default="generic",
                   help="'sz' reports SU(2) characters in the S_z angle")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="structural, kernel and axiom checks")
    common(p)
    p.add_argument("--grid")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--mode", choices=MODES, default="consistent")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("symbol", help="map an operator file to a symbol file")
    common(p, irrep=False)
    p.add_argument("operator")
    p.add_argument("--grid")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=MODES, default="consistent")
    p.add_argument("--out")
    p.set_defaults(func=cmd_symbol)

    p = sub.add_parser("reconstruct", help="map a symbol file back to an operator")
    common(p, irrep=False, s=False)
    p.add_argument("symbol")
    p.add_argument("--reference")
    p.add_argument("--mode", choices=MODES)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--out")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("grid", help="write quadrature nodes and weights")
    common(p, irrep=False, s=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int)
    p.add_argument("--grid")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_grid)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UnsupportedGridError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
