"""SU(2) Clebsch-Gordan coefficients (Condon-Shortley) and the tensors built from them.

Used as an independent closed-form check of the numerical decomposition for n = 2.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, sqrt

import numpy as np

__all__ = ["cg_tensor", "su2_cg"]


def _twice(x) -> int:
    t = round(2 * x)
    if abs(2 * x - t) > 1e-9:
        raise ValueError(f"{x} is not an integer or half-integer")
    return t


def su2_cg(j1, m1, j2, m2, J, M) -> float:
    """<j1 m1; j2 m2 | J M> by the Racah sum, exact up to the final square root.

    Arguments may be integers or half-integers. Coefficients forbidden by the
    selection rules are 0.
    """
    tj1, tm1, tj2, tm2, tJ, tM = (_twice(x) for x in (j1, m1, j2, m2, J, M))
    if tm1 + tm2 != tM:
        return 0.0
    if not (abs(tj1 - tj2) <= tJ <= tj1 + tj2) or (tj1 + tj2 + tJ) % 2:
        return 0.0
    for tj, tm in ((tj1, tm1), (tj2, tm2), (tJ, tM)):
        if abs(tm) > tj or (tj + tm) % 2:
            return 0.0

    def f(twice_val: int) -> int:
        return factorial(twice_val // 2)

    pre = Fraction(
        (tJ + 1) * f(tJ + tj1 - tj2) * f(tJ - tj1 + tj2) * f(tj1 + tj2 - tJ),
        f(tj1 + tj2 + tJ + 2),
    )
    pre *= (f(tJ + tM) * f(tJ - tM) * f(tj1 - tm1) * f(tj1 + tm1)
            * f(tj2 - tm2) * f(tj2 + tm2))

    k_lo = max(0, (tj2 - tJ - tm1) // 2, (tj1 - tJ + tm2) // 2)
    k_hi = min((tj1 + tj2 - tJ) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    total = Fraction(0)
    for k in range(k_lo, k_hi + 1):
        den = (factorial(k) * f(tj1 + tj2 - tJ - 2 * k) * f(tj1 - tm1 - 2 * k)
               * f(tj2 + tm2 - 2 * k) * f(tJ - tj2 + tm1 + 2 * k)
               * f(tJ - tj1 - tm2 + 2 * k))
        total += Fraction((-1) ** k, den)
    if total == 0:
        return 0.0
    sign = 1.0 if total > 0 else -1.0
    return sign * sqrt(pre * total * total)


def cg_tensor(j, L: int, M: int) -> np.ndarray:
    """``T^j_{LM} = sum |j m><j m'| C^{LM}_{j m; j, -m'} (-1)^(j-m')``.

    Rows and columns run over m = j, j-1, ..., -j, which is the occupation basis
    order for n = 2.
    """
    tj = _twice(j)
    dim = tj + 1
    ms = [(tj - 2 * k) / 2 for k in range(dim)]
    out = np.zeros((dim, dim))
    for a, m in enumerate(ms):
        for b, mp in enumerate(ms):
            c = su2_cg(j, m, j, -mp, L, M)
            if c:
                out[a, b] = c * (-1) ** round(j - mp)
    return out
