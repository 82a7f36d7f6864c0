"""Exact closed forms for SU(3) (1,0), SU(3) (2,0) and SU(2) spin j.

Each entry pairs a printable exact form with a callable that evaluates it, so the
CLI can show both and ``verify`` can compare the numerics.
"""

from __future__ import annotations

from math import pi, sqrt

import numpy as np

from .cg import su2_cg

__all__ = ["golden_f", "golden_forms", "golden_values"]

_SQ2, _SQ3, _SQ5, _SQ6 = sqrt(2), sqrt(3), sqrt(5), sqrt(6)
_SQ10, _SQ15, _SQ30 = sqrt(10), sqrt(15), sqrt(30)


def _c10(s):
    return np.array([(8 + 4.0**-s) / (24 * _SQ3 * pi), (4 + 5 * 4.0**-s) / (24 * _SQ6 * pi)])


def _f10(s, omega):
    e = np.exp
    table = {
        -1: lambda w: e(-2j * w) / (2 * pi),
        0: lambda w: (e(1j * w) + 2 * e(-2j * w)) / (8 * pi),
        1: lambda w: (5 * e(1j * w) + 6 * e(-2j * w)) / (32 * pi),
    }
    return table[s](np.asarray(omega))


_G20_INV = np.array([
    [1 / (4 * pi), 1 / (4 * _SQ5 * pi), 1 / (12 * _SQ5 * pi)],
    [1 / (4 * _SQ5 * pi), 7 / (20 * pi), 7 / (60 * pi)],
    [1 / (12 * _SQ5 * pi), 7 / (60 * pi), 19 / (60 * pi)],
])


def _F20(s):
    return np.array([
        _SQ6**s / 6 ** ((s + 1) / 2),
        2.0**-s * sqrt(7.5) ** s / 48 ** ((s + 1) / 2),
        sqrt(10 / 3) ** s / 162 ** ((s + 1) / 2),
    ])


_C20_TABLE = {
    -1: np.array([1 / (2 * _SQ6 * pi), _SQ2 / (_SQ15 * pi), sqrt(0.3) / (2 * pi)]),
    0: np.array([
        (90 * _SQ6 + 2 * _SQ10 + 9 * _SQ15) / (2160 * pi),
        (14 * _SQ2 + 63 * _SQ3 + 18 * _SQ30) / (2160 * pi),
        (38 * _SQ2 + 21 * _SQ3 + 6 * _SQ30) / (2160 * pi),
    ]),
    1: np.array([
        8051 / (31104 * _SQ6 * pi),
        9701 / (31104 * _SQ30 * pi),
        3767 / (31104 * _SQ30 * pi),
    ]),
}


def golden_forms(n: int, lam: int) -> dict | None:
    """Printable exact forms for the cases with known closed forms, or None."""
    if n == 3 and lam == 1:
        return {
            "hw_coeff": ["1/sqrt(3)", "sqrt(2/3)"],
            "chi": ["(2 e^{-iw} + e^{2iw})/sqrt(3)", "sqrt(2/3) (-e^{-iw} + e^{2iw})"],
            "g": [["10 pi/3", "-2 sqrt(2) pi/3"], ["-2 sqrt(2) pi/3", "8 pi/3"]],
            "F": ["(sqrt(1/3))^{-s} / 3^{(s+1)/2}", "(sqrt(2/3))^{-s} / 24^{(s+1)/2}"],
            "c": ["(8 + 4^{-s}) / (24 sqrt(3) pi)", "(4 + 5 4^{-s}) / (24 sqrt(6) pi)"],
            "f": {"-1": "e^{-2iw} / (2 pi)", "0": "(e^{iw} + 2 e^{-2iw}) / (8 pi)",
                  "1": "(5 e^{iw} + 6 e^{-2iw}) / (32 pi)"},
            "P_diag": {"0": ["1/2", "1/4", "1/4"]},
        }
    if n == 3 and lam == 2:
        return {
            "hw_coeff": ["1/sqrt(6)", "2 sqrt(2/15)", "sqrt(3/10)"],
            "g": [["14 pi/3", "-2 sqrt(5) pi/3", "0"],
                  ["-2 sqrt(5) pi/3", "56 pi/15", "-6 pi/5"],
                  ["0", "-6 pi/5", "18 pi/5"]],
            "g_inv": [["1/(4 pi)", "1/(4 sqrt(5) pi)", "1/(12 sqrt(5) pi)"],
                      ["1/(4 sqrt(5) pi)", "7/(20 pi)", "7/(60 pi)"],
                      ["1/(12 sqrt(5) pi)", "7/(60 pi)", "19/(60 pi)"]],
            "F": ["(sqrt(6))^s / 6^{(s+1)/2}", "2^{-s} (sqrt(15/2))^s / 48^{(s+1)/2}",
                  "(sqrt(10/3))^s / 162^{(s+1)/2}"],
            "c": {
                "-1": ["1/(2 sqrt(6) pi)", "sqrt(2)/(sqrt(15) pi)", "sqrt(3/10)/(2 pi)"],
                "0": ["(90 sqrt(6) + 2 sqrt(10) + 9 sqrt(15))/(2160 pi)",
                      "(14 sqrt(2) + 63 sqrt(3) + 18 sqrt(30))/(2160 pi)",
                      "(38 sqrt(2) + 21 sqrt(3) + 6 sqrt(30))/(2160 pi)"],
                "1": ["8051/(31104 sqrt(6) pi)", "9701/(31104 sqrt(30) pi)",
                      "3767/(31104 sqrt(30) pi)"],
            },
        }
    if n == 2:
        return {
            "g": "2 pi delta_{LL'}",
            "hw_coeff": "C^{L0}_{jj;j,-j}",
            "F": "(C^{L0}_{jj;j,-j})^{-s} / [(2j+1)(2L+1)]^{(s+1)/2}",
            "c": "F_L^(s) / (2 pi)",
        }
    return None


def golden_values(n: int, lam: int, s: float) -> dict[str, np.ndarray] | None:
    """Numerical values of the closed forms at ordering ``s``."""
    if n == 3 and lam == 1:
        out = {
            "hw_coeff": np.array([1 / _SQ3, sqrt(2 / 3)]),
            "g": np.array([[10 * pi / 3, -2 * _SQ2 * pi / 3],
                           [-2 * _SQ2 * pi / 3, 8 * pi / 3]]),
            "F": np.array([sqrt(1 / 3) ** -s / 3 ** ((s + 1) / 2),
                           sqrt(2 / 3) ** -s / 24 ** ((s + 1) / 2)]),
            "c": _c10(s),
        }
        if s == 0:
            out["P_diag"] = np.array([0.5, 0.25, 0.25])
        return out
    if n == 3 and lam == 2:
        out = {
            "hw_coeff": np.array([1 / _SQ6, 2 * sqrt(2 / 15), sqrt(0.3)]),
            "g": np.array([[14 * pi / 3, -2 * _SQ5 * pi / 3, 0],
                           [-2 * _SQ5 * pi / 3, 56 * pi / 15, -6 * pi / 5],
                           [0, -6 * pi / 5, 18 * pi / 5]]),
            "F": _F20(s),
            "c": _G20_INV @ _F20(s),
        }
        if s in _C20_TABLE:
            out["c_table"] = _C20_TABLE[s]
        return out
    if n == 2:
        j = lam / 2
        dim = lam + 1
        hw = np.array([su2_cg(j, j, j, -j, L, 0) for L in range(lam + 1)])
        F = hw**-s / (dim * (2 * np.arange(lam + 1) + 1.0)) ** ((s + 1) / 2)
        return {"hw_coeff": hw, "g": 2 * pi * np.eye(lam + 1), "F": F, "c": F / (2 * pi)}
    return None


def golden_f(n: int, lam: int, s: int, omega):
    """Closed-form f^(s)(omega) for SU(3) (1,0) at s in {-1, 0, 1}; None elsewhere."""
    if (n, lam) == (3, 1) and s in (-1, 0, 1):
        return _f10(s, omega)
    return None
