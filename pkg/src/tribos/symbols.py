"""Analytic symbols of the diagonalized three-boson charge equations.

After the log substitution and Fourier transform, the radial
Skornyakov-Ter-Martirosian equation becomes multiplication by

    g(s) = 1 - (8/sqrt(3)) sinh(pi s/6) / (s cosh(pi s/2)),

whose positive root s0 is the Efimov constant.  The model regularized by a
delta/|y| three-body term has symbol

    1 + 2 (delta sinh(pi s/2) - 4 sinh(pi s/6)) / (sqrt(3) s cosh(pi s/2)),

which is strictly positive for delta above the threshold delta0.  This
module evaluates both symbols, locates s0, certifies positivity by direct
scan and converts between the momentum-space strength gamma and the
position-space strength delta (delta = 2 pi^2 gamma).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .specfun import sinh_ratio, tanh_over_s

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class EfimovConstant:
    """Root of g(s) = 0 on s > 0, with the residual actually achieved."""

    s0: float
    residual: float
    tol: float


@dataclass(frozen=True)
class SymbolScan:
    """Result of scanning the regularized symbol on [0, s_max]."""

    s_max: float
    n_points: int
    min_value: float
    argmin: float
    sign_changes: list[tuple[float, float]] = field(default_factory=list)


def eval_g(s: float) -> float:
    """The TMS symbol g(s); even, g(0) = 1 - 4 pi/(3 sqrt(3)) < 0, g -> 1."""
    return 1.0 - (8.0 / SQRT3) * sinh_ratio(s)


def eval_reg_symbol(s: float, delta: float) -> float:
    """Symbol of the delta/|y|-regularized charge equation.

    Even in s; reduces to eval_g at delta = 0.  The s = 0 limit,
    1 + (delta pi - 4 pi/3)/sqrt(3), is built in analytically, so the
    threshold behaviour at delta0 is decided exactly.
    """
    return 1.0 + (2.0 / SQRT3) * (delta * tanh_over_s(s) - 4.0 * sinh_ratio(s))


def delta0() -> float:
    """Positivity threshold (sqrt(3)/pi)(4 pi/(3 sqrt(3)) - 1) = 4/3 - sqrt(3)/pi."""
    return 4.0 / 3.0 - SQRT3 / math.pi


def gamma_to_delta(gamma: float) -> float:
    """Map the convolution-kernel strength gamma to delta = 2 pi^2 gamma."""
    return 2.0 * math.pi * math.pi * gamma


def delta_to_gamma(delta: float) -> float:
    """Inverse of gamma_to_delta."""
    return delta / (2.0 * math.pi * math.pi)


def gamma_bound() -> float:
    """Lower bound (1/pi^3)(4 pi/(3 sqrt(3)) - 1) quoted for gamma."""
    return (4.0 * math.pi / (3.0 * SQRT3) - 1.0) / math.pi**3


def delta_bound() -> float:
    """gamma_bound mapped through delta = 2 pi^2 gamma; equals (2/pi)(4 pi/(3 sqrt(3)) - 1).

    Note this classical bound is larger than delta0(); both constants are
    provided and neither is adjudicated here.
    """
    return (2.0 / math.pi) * (4.0 * math.pi / (3.0 * SQRT3) - 1.0)


def find_s0(tol: float = 1e-12, bracket: tuple[float, float] | None = None) -> EfimovConstant:
    """Locate the Efimov constant s0 by deterministic bisection on g.

    If no bracket is given, a sign change of g is searched on (0, 20].
    Raises RuntimeError if bracketing fails (an implementation bug, not a
    data condition: g(0) < 0 < g(20)).
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    if bracket is None:
        lo = 0.0
        hi = None
        for k in range(1, 201):
            s = 0.1 * k
            if eval_g(s) > 0.0:
                hi = s
                break
            lo = s
        if hi is None:
            raise RuntimeError("no sign change of g on (0, 20]")
    else:
        lo, hi = float(bracket[0]), float(bracket[1])
        if not (eval_g(lo) < 0.0 < eval_g(hi)):
            raise RuntimeError(f"bracket {bracket} does not straddle the root of g")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if eval_g(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 0.25 * tol and abs(eval_g(0.5 * (lo + hi))) <= tol:
            break
    s0 = 0.5 * (lo + hi)
    residual = abs(eval_g(s0))
    if residual > tol:
        raise RuntimeError(f"bisection stalled at residual {residual:.3e} > tol {tol:.3e} "
                           "(tol is below double-precision resolution)")
    return EfimovConstant(s0=s0, residual=residual, tol=tol)


def certify_positivity(delta: float, s_max: float, n: int) -> SymbolScan:
    """Scan the regularized symbol on [0, s_max] and report its sign structure.

    Returns the minimum, its location and every bracket [s_i, s_{i+1}] on
    which the symbol changes sign.  For delta > delta0() the contract is an
    empty bracket list together with min_value > 0; a negative minimum for
    smaller delta is a valid report, not an error.
    """
    if not s_max > 0.0:
        raise ValueError("s_max must be positive")
    if n < 2:
        raise ValueError("n must be at least 2")
    step = s_max / (n - 1)
    s_prev = 0.0
    v_prev = eval_reg_symbol(0.0, delta)
    min_value, argmin = v_prev, 0.0
    sign_changes: list[tuple[float, float]] = []
    for i in range(1, n):
        s = i * step
        v = eval_reg_symbol(s, delta)
        if v < min_value:
            min_value, argmin = v, s
        if v_prev * v < 0.0:
            sign_changes.append((s_prev, s))
        s_prev, v_prev = s, v
    return SymbolScan(s_max=s_max, n_points=n, min_value=min_value,
                      argmin=argmin, sign_changes=sign_changes)
