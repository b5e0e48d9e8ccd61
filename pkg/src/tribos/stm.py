"""Nystrom discretization of the radial charge equations on the momentum half-line.

The unknown is phi(p) = p xihat(p), which makes both kernels symmetric.  The
unregularized radial equation reads

    sqrt(3 p^2/4 + mu) phi(p) - (2/pi) int_0^inf log[(p^2+q^2+pq+mu)/(p^2+q^2-pq+mu)] phi(q) dq = 0

and the delta/|y| regularization adds (delta/pi) int log[(p+q)/|p-q|] phi(q) dq.
Quadrature lives on a log-spaced grid; the log singularity of the Coulomb-type
kernel is handled by singularity subtraction with the row integral evaluated
in closed form.  Bound states of the cutoff problem appear as zero crossings
of eigenvalues of the discretized operator as the spectral parameter mu sweeps.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

GRID_KINDS = ("log-uniform", "gauss-legendre-on-log")

_GL_POINTS_PER_PANEL = 16


@dataclass(frozen=True)
class RadialGrid:
    """Quadrature nodes and weights on [p_min, p_max], log-spaced."""

    nodes: np.ndarray
    weights: np.ndarray
    kind: str
    p_min: float
    p_max: float

    def __len__(self) -> int:
        return self.nodes.size


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of the radial operator at fixed spectral point.

    alpha is the inverse scattering length (0 = unitary two-body resonance),
    delta the three-body regularization strength, ell its range (only
    ell = +inf is supported by the spectral scans) and mu > 0 the spectral
    parameter, E = -mu.
    """

    mu: float
    delta: float = 0.0
    alpha: float = 0.0
    ell: float = math.inf

    def __post_init__(self) -> None:
        if not self.mu > 0.0:
            raise ValueError("mu must be positive")
        if self.delta < 0.0:
            raise ValueError("delta must be nonnegative")


@dataclass(frozen=True)
class DiscretizedOperator:
    """Dense symmetric matrix representing the radial operator."""

    matrix: np.ndarray
    params: ModelParams
    grid: RadialGrid


def _thread_count() -> int:
    raw = os.environ.get("TRIBOS_THREADS", "")
    if raw.strip():
        n = int(raw)
        if n < 1:
            raise ValueError("TRIBOS_THREADS must be >= 1")
        return n
    return os.cpu_count() or 1


def build_grid(p_min: float, p_max: float, n: int,
               kind: str = "gauss-legendre-on-log") -> RadialGrid:
    """Build a quadrature grid on [p_min, p_max] with n nodes.

    kind "log-uniform" is the trapezoid rule in log p (exact for integrands
    proportional to 1/p); "gauss-legendre-on-log" packs 16-point
    Gauss-Legendre panels uniformly in log p.
    """
    if not (0.0 < p_min < p_max):
        raise ValueError(f"need 0 < p_min < p_max, got ({p_min}, {p_max})")
    if n < 8:
        raise ValueError("n must be at least 8")
    if kind not in GRID_KINDS:
        raise ValueError(f"unknown grid kind {kind!r}")
    a, b = math.log(p_min), math.log(p_max)
    if kind == "log-uniform":
        t = np.linspace(a, b, n)
        p = np.exp(t)
        w = np.full(n, t[1] - t[0])
        w[0] *= 0.5
        w[-1] *= 0.5
        w = w * p  # dq = q dlog q
    else:
        k = max(1, round(n / _GL_POINTS_PER_PANEL))
        sizes = [n // k + (1 if i < n % k else 0) for i in range(k)]
        edges = np.linspace(a, b, k + 1)
        ps, ws = [], []
        for i, m in enumerate(sizes):
            x, gw = np.polynomial.legendre.leggauss(m)
            half = 0.5 * (edges[i + 1] - edges[i])
            t = half * x + 0.5 * (edges[i + 1] + edges[i])
            ps.append(np.exp(t))
            ws.append(half * gw * np.exp(t))
        p = np.concatenate(ps)
        w = np.concatenate(ws)
    return RadialGrid(nodes=p, weights=w, kind=kind, p_min=p_min, p_max=p_max)


def default_grid(mu: float, n: int = 1000) -> RadialGrid:
    """Default Gauss-Legendre-on-log grid, p in [1e-4, 1e4] * sqrt(mu)."""
    root = math.sqrt(mu)
    return build_grid(1e-4 * root, 1e4 * root, n)


def tms_kernel(p, q, mu: float):
    """Angular-averaged TMS kernel -(2/pi) log[(p^2+q^2+pq+mu)/(p^2+q^2-pq+mu)].

    Symmetric in (p, q), finite everywhere for mu > 0, O(q) as q -> 0.
    Broadcasts over array arguments.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if np.any(p <= 0.0) or np.any(q <= 0.0):
        raise ValueError("tms_kernel requires p, q > 0")
    if not mu > 0.0:
        raise ValueError("tms_kernel requires mu > 0")
    s = p * p + q * q + mu
    out = -(2.0 / math.pi) * np.log((s + p * q) / (s - p * q))
    return out if out.ndim else float(out)


def coulomb_kernel(p, q, delta: float):
    """Regularization kernel (delta/pi) log[(p+q)/|p-q|], p != q.

    Symmetric, positive, and log-divergent (integrably) on the diagonal;
    assembly never samples p = q directly, hence the coincident-node error.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if np.any(p <= 0.0) or np.any(q <= 0.0):
        raise ValueError("coulomb_kernel requires p, q > 0")
    if np.any(p == q):
        raise ValueError("coulomb_kernel is singular at coincident nodes p = q")
    out = (delta / math.pi) * np.log((p + q) / np.abs(p - q))
    return out if out.ndim else float(out)


def _xlogx(x: np.ndarray) -> np.ndarray:
    # x log x with the continuous extension 0 at x = 0.
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    mask = x > 0.0
    out[mask] = x[mask] * np.log(x[mask])
    return out


def coulomb_row_integral(p, a: float, b: float, delta: float):
    """Closed form of int_a^b coulomb_kernel(p, q, delta) dq for p in [a, b]."""
    p = np.asarray(p, dtype=float)
    plus = _xlogx(p + b) - _xlogx(p + a)
    minus = _xlogx(b - p) + _xlogx(p - a)
    out = (delta / math.pi) * (plus - minus)
    return out if out.ndim else float(out)


def _kernel_matrix(p: np.ndarray, w: np.ndarray,
                   params: ModelParams) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Kernel matrix and diagonal pieces of the Nystrom operator.

    Returns (K, diag_kernel, diag_extra): K is the full kernel matrix with
    the Coulomb diagonal zeroed, diag_kernel the TMS kernel on the diagonal,
    and diag_extra the singularity-subtraction correction
    c(p) - sum_j w_j C(p, p_j) (zero when delta = 0), where c(p) is the
    closed-form row integral of the Coulomb kernel.
    """
    P = p[:, None]
    Q = p[None, :]
    s = P * P + Q * Q + params.mu
    K = -(2.0 / math.pi) * np.log((s + P * Q) / (s - P * Q))
    diag_kernel = np.diag(K).copy()
    diag_extra = np.zeros_like(p)
    if params.delta != 0.0:
        with np.errstate(divide="ignore"):
            C = (params.delta / math.pi) * np.log((P + Q) / np.abs(P - Q))
        np.fill_diagonal(C, 0.0)
        diag_extra = coulomb_row_integral(p, p[0], p[-1], params.delta) - C @ w
        K = K + C
    return K, diag_kernel, diag_extra


def assemble(grid: RadialGrid, params: ModelParams) -> DiscretizedOperator:
    """Assemble the symmetric Nystrom matrix of the radial operator.

    The operator acts on phi(p) = p xihat(p).  The diagonal term is
    sqrt(3 p^2/4 + mu) + alpha; the TMS kernel is quadratured directly and
    the Coulomb kernel by singularity subtraction,

        int C(p,q) phi(q) dq = int C(p,q) [phi(q) - phi(p)] dq
                               + phi(p) int C(p,q) dq,

    with the plain row integral in closed form.  Symmetry is exact by
    construction (similarity by sqrt(weights)).
    """
    if not math.isinf(params.ell):
        raise ValueError("only ell = +inf is supported in assembly")
    p = grid.nodes
    w = grid.weights
    K, diag_kernel, diag_extra = _kernel_matrix(p, w, params)
    sw = np.sqrt(w)
    M = np.outer(sw, sw) * K  # exactly symmetric: both factors are
    d = np.sqrt(0.75 * p * p + params.mu) + params.alpha
    np.fill_diagonal(M, d + w * diag_kernel + diag_extra)
    return DiscretizedOperator(matrix=M, params=params, grid=grid)


def smallest_eigenvalue(op: DiscretizedOperator) -> float:
    """Smallest eigenvalue of the assembled symmetric matrix."""
    return float(np.linalg.eigvalsh(op.matrix)[0])


def _negative_count(grid: RadialGrid, mu: float, delta: float) -> tuple[int, float]:
    ev = np.linalg.eigvalsh(assemble(grid, ModelParams(mu=mu, delta=delta)).matrix)
    return int(np.sum(ev < 0.0)), float(ev[0])


@dataclass(frozen=True)
class SpectralScan:
    """Sweep diagnostics and refined singular points of a mu scan."""

    mus: np.ndarray
    smallest: np.ndarray
    negative_counts: np.ndarray
    crossings: list[float]


def scan_spectrum(grid: RadialGrid, delta: float, mu_lo: float, mu_hi: float,
                  n_mu: int, refine_rel: float = 1e-8) -> SpectralScan:
    """Sweep mu log-spaced, recording the smallest eigenvalue, the number of
    negative eigenvalues, and every mu at which the operator is singular.

    The operator is monotone increasing in mu, so each bound state of the
    cutoff problem shows up as a unit decrement of the negative-eigenvalue
    count between consecutive sweep points; each decrement is refined by
    bisection in mu to the requested relative accuracy.
    """
    if not (0.0 < mu_lo < mu_hi):
        raise ValueError("need 0 < mu_lo < mu_hi")
    if n_mu < 2:
        raise ValueError("n_mu must be at least 2")
    mus = np.geomspace(mu_lo, mu_hi, n_mu)
    workers = min(_thread_count(), n_mu)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            sweep = list(pool.map(lambda m: _negative_count(grid, float(m), delta), mus))
    else:
        sweep = [_negative_count(grid, float(m), delta) for m in mus]
    counts = [c for c, _ in sweep]

    def bisect(lo: float, hi: float, level: int) -> float:
        # nu(mu) >= level to the left of the level-th crossing
        while hi / lo - 1.0 > refine_rel:
            mid = math.sqrt(lo * hi)
            if _negative_count(grid, mid, delta)[0] >= level:
                lo = mid
            else:
                hi = mid
        return math.sqrt(lo * hi)

    crossings = []
    for i in range(n_mu - 1):
        if counts[i + 1] > counts[i]:
            raise RuntimeError("negative-eigenvalue count increased with mu")
        for level in range(counts[i + 1] + 1, counts[i] + 1):
            crossings.append(bisect(float(mus[i]), float(mus[i + 1]), level))
    return SpectralScan(mus=mus, smallest=np.array([e for _, e in sweep]),
                        negative_counts=np.array(counts), crossings=sorted(crossings))


def scan_bound_states(grid: RadialGrid, delta: float, mu_lo: float, mu_hi: float,
                      n_mu: int, refine_rel: float = 1e-8) -> list[float]:
    """Refined singular-mu list of scan_spectrum (empty is a valid result)."""
    return scan_spectrum(grid, delta, mu_lo, mu_hi, n_mu, refine_rel).crossings


def residual(xi, params: ModelParams, eval_lo: float | None = None,
             eval_hi: float | None = None) -> float:
    """Relative L2 residual of the radial equation on given charge samples.

    xi is a ChargeDensity (grid, values of xihat at the nodes, mu).  The
    residual rows are evaluated only at interior nodes, p in
    [eval_lo, eval_hi]; the defaults trim two decades at the low end and
    seven at the high end, where hard truncation of the half-line integral
    pollutes the rows (the kernel decays only like 1/q).  Normalization is
    the L2 norm of the diagonal term over the same nodes; zero samples give
    residual 0.
    """
    grid = xi.grid
    p = grid.nodes
    values = np.asarray(xi.values, dtype=float)
    if values.shape != p.shape:
        raise ValueError("charge-density samples do not match the grid")
    if not math.isclose(xi.mu, params.mu, rel_tol=1e-12):
        raise ValueError(f"mu mismatch: samples at {xi.mu}, params at {params.mu}")
    if eval_lo is None:
        eval_lo = 100.0 * grid.p_min
    if eval_hi is None:
        eval_hi = 1e-7 * grid.p_max
    w = grid.weights
    phi = p * values
    K, _, diag_extra = _kernel_matrix(p, w, params)
    d = np.sqrt(0.75 * p * p + params.mu) + params.alpha
    r = d * phi + K @ (w * phi) + diag_extra * phi
    mask = (p >= eval_lo) & (p <= eval_hi)
    if not np.any(mask):
        raise ValueError("interior evaluation window contains no nodes")
    scale = float(np.linalg.norm((d * phi)[mask]))
    if scale == 0.0:
        return 0.0
    return float(np.linalg.norm(r[mask]) / scale)


def closed_form_residual(mu: float, n: int = 2000, delta: float = 0.0,
                         nodes_per_decade: float = 125.0, s0: float | None = None) -> float:
    """Residual of the closed-form charge density on the canonical wide grid.

    The grid spans n/nodes_per_decade decades starting two decades below the
    evaluation window [1e-4, 1e3] * sqrt(mu); widening the window together
    with n keeps the measurement truncation-limited rather than
    quadrature-limited.
    """
    from .ladder import sample_charge_density

    root = math.sqrt(mu)
    total_decades = n / nodes_per_decade
    p_min = 1e-6 * root
    p_max = p_min * 10.0 ** total_decades
    grid = build_grid(p_min, p_max, n)
    xi = sample_charge_density(grid, mu, s0=s0)
    return residual(xi, ModelParams(mu=mu, delta=delta),
                    eval_lo=1e-4 * root, eval_hi=1e3 * root)
