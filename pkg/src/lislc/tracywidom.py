"""Tracy-Widom (GUE) distribution from the Hastings-McLeod solution of Painleve II.

The state ``(u, u', h, w)`` with ``h = int_x^inf u^2`` and
``w = int_x^inf (t - x) u^2 dt`` obeys

    u'' = x u + 2 u^3,   h' = -u^2,   w' = -h,

and ``F = exp(-w)``, ``F' = h F``.  We seed at a large ``x0`` from the Airy
asymptotics (the Hastings-McLeod branch has ``u ~ Ai``) and integrate towards
``-inf`` with an embedded Dormand-Prince 5(4) pair, landing exactly on a
uniform output grid.  The first integral ``u'^2 = x u^2 + h + u^4`` is never
enforced and serves as the health check.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

DEFAULT_X0 = 8.0
DEFAULT_X_MIN = -8.0
DEFAULT_TOL = 1e-13
DEFAULT_DX = 1.0 / 64
SEED_MIN_X = 6.0
TAIL_GUARD = 1e-290
_TINY = np.finfo(float).tiny
CSV_HEADER = ("x", "u", "du", "h", "w", "F", "f", "logdd")


class TailUndefined(ArithmeticError):
    """Raised where h underflows and the log-density ratio is meaningless."""


class OutOfRange(ValueError):
    pass


def airy_asymptotic(x: float) -> tuple[float, float]:
    """Ai(x), Ai'(x) for large positive x from the asymptotic series."""
    if x < SEED_MIN_X:
        raise ValueError(f"asymptotic Airy series needs x >= {SEED_MIN_X}, got {x}")
    zeta = 2.0 / 3.0 * x ** 1.5
    u_k, su, sv = 1.0, 1.0, 1.0
    last = math.inf
    for k in range(1, 200):
        u_k *= (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k)
        v_k = -(6 * k + 1) / (6 * k - 1) * u_k
        term = u_k / zeta ** k
        # Asymptotic series: stop at the smallest term.
        if term >= last or term < 1e-18:
            break
        last = term
        sign = (-1) ** k
        su += sign * term
        sv += sign * v_k / zeta ** k
    pref = math.exp(-zeta) / (2.0 * math.sqrt(math.pi))
    return pref * x ** -0.25 * su, -pref * x ** 0.25 * sv


def seed_at(x0: float = DEFAULT_X0) -> tuple[float, float]:
    """Hastings-McLeod initial data (u, u') at ``x0``."""
    return airy_asymptotic(x0)


def _tail_integrals(x: float, ai: float, dai: float) -> tuple[float, float]:
    # Closed-form Airy tails: int_x^inf Ai^2 and int_x^inf (t - x) Ai^2.
    h = dai * dai - x * ai * ai
    w = (2 * x * x * ai * ai - 2 * x * dai * dai - ai * dai) / 3.0
    return h, w


def _rhs(x: float, y: np.ndarray) -> np.ndarray:
    u, du, h, _ = y
    return np.array([du, x * u + 2 * u ** 3, -u * u, -h])


# Dormand-Prince 5(4) tableau.
_C = np.array([0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1, 1])
_A = [
    [],
    [1 / 5],
    [3 / 40, 9 / 40],
    [44 / 45, -56 / 15, 32 / 9],
    [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729],
    [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656],
    [35 / 384, 0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
]
_B5 = np.array([35 / 384, 0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0])
_B4 = np.array([5179 / 57600, 0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40])
_E = _B5 - _B4


def _dp_step(x: float, y: np.ndarray, step: float) -> tuple[np.ndarray, np.ndarray]:
    k = np.empty((7, y.size))
    k[0] = _rhs(x, y)
    for s in range(1, 7):
        k[s] = _rhs(x + _C[s] * step, y + step * np.dot(_A[s], k[:s]))
    return y + step * (_B5 @ k), step * (_E @ k)


@dataclass(frozen=True)
class TWTable:
    """Solution values on a uniform grid, ordered as integrated (x decreasing).

    ``truncated_at`` is None for a complete table, else the x where step-size
    control broke down; rows beyond it are absent.
    """

    x: np.ndarray
    u: np.ndarray
    du: np.ndarray
    h: np.ndarray
    w: np.ndarray
    tol: float
    x0: float
    truncated_at: float | None = None

    @property
    def x_min(self) -> float:
        return float(self.x[-1])

    @property
    def x_max(self) -> float:
        return float(self.x[0])

    @property
    def F(self) -> np.ndarray:
        return np.exp(-self.w)

    @property
    def density(self) -> np.ndarray:
        return self.h * np.exp(-self.w)

    def residual(self) -> np.ndarray:
        """u'^2 - (x u^2 + h + u^4) at every grid point."""
        return self.du ** 2 - (self.x * self.u ** 2 + self.h + self.u ** 4)

    def logdd(self) -> np.ndarray:
        """(log F')'' on the grid; NaN where h is below the tail guard."""
        u, du, h = self.u, self.du, self.h
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            out = _logdd(u, du, h)
        out[h < TAIL_GUARD] = np.nan
        return out

    def ascending(self) -> "TWTable":
        return TWTable(self.x[::-1], self.u[::-1], self.du[::-1], self.h[::-1], self.w[::-1],
                       self.tol, self.x0, self.truncated_at)


def integrate(
    x0: float = DEFAULT_X0,
    x_min: float = DEFAULT_X_MIN,
    tol: float = DEFAULT_TOL,
    dx: float = DEFAULT_DX,
) -> TWTable:
    """Integrate the augmented Painleve II system from ``x0`` down to ``x_min``.

    Local error is controlled relative to each component, ``|err_i| <=
    tol * |y_i|``; every component keeps a fixed sign on the Hastings-McLeod
    branch so a relative norm is safe.  A floor at the smallest normal double
    covers components that underflow in the far right tail.  Grid points are
    ``x0 - i*dx`` (plus ``x_min`` itself if it falls between nodes).
    """
    if not x0 > x_min:
        raise ValueError("need x0 > x_min")
    if tol <= 0 or dx <= 0:
        raise ValueError("tol and dx must be positive")
    u, du = seed_at(x0)
    h, w = _tail_integrals(x0, u, du)
    y = np.array([u, du, h, w])

    n_nodes = int(math.floor((x0 - x_min) / dx + 1e-9))
    grid = [x0 - i * dx for i in range(n_nodes + 1)]
    if grid[-1] - x_min > 1e-9:
        grid.append(x_min)

    rows = [y.copy()]
    x = x0
    step = -min(dx, 0.01)
    truncated = None
    for target in grid[1:]:
        while x > target:
            clipped = step < target - x
            trial = target - x if clipped else step
            y_new, err = _dp_step(x, y, trial)
            if np.all(np.isfinite(y_new)):
                # The floor only matters where components underflow in the far tail.
                scale = tol * np.maximum(np.abs(y), np.abs(y_new)) + _TINY
                ratio = float(np.max(np.abs(err) / scale))
            else:
                ratio = math.inf
            if ratio <= 1.0:
                x = target if clipped else x + trial
                y = y_new
                if not clipped:
                    step = trial * (5.0 if ratio == 0 else min(5.0, 0.9 * ratio ** -0.2))
            else:
                step = trial * (0.2 if not math.isfinite(ratio) else max(0.2, 0.9 * ratio ** -0.2))
            if abs(step) < 1e-12 * max(1.0, abs(x)):
                truncated = x
                break
        if truncated is not None:
            break
        rows.append(y.copy())

    arr = np.array(rows)
    xs = np.array(grid[: len(rows)])
    return TWTable(xs, arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3], tol, x0, truncated)


def _locate(table: TWTable, x: float) -> tuple[int, float]:
    # Index i with x[i] >= x >= x[i+1] on the descending grid.
    xs = table.x
    if not (table.x_min - 1e-12 <= x <= table.x_max + 1e-12):
        raise OutOfRange(f"x={x} outside tabulated range [{table.x_min}, {table.x_max}]")
    i = int(np.searchsorted(-xs, -x, side="right")) - 1
    i = min(max(i, 0), len(xs) - 2)
    return i, float(xs[i] - xs[i + 1])


def _rhs2(x: float, y: np.ndarray) -> np.ndarray:
    # Second x-derivative of the state along the flow.
    u, du, h, _ = y
    return np.array([x * u + 2 * u ** 3, u + x * du + 6 * u * u * du, -2 * u * du, u * u])


def _quintic(x: float, x_a: float, x_b: float, ya, yb, d1a, d1b, d2a, d2b):
    s = x_b - x_a
    t = (x - x_a) / s
    t3, t4, t5 = t ** 3, t ** 4, t ** 5
    return (
        (1 - 10 * t3 + 15 * t4 - 6 * t5) * ya
        + (t - 6 * t3 + 8 * t4 - 3 * t5) * s * d1a
        + 0.5 * (t * t - 3 * t3 + 3 * t4 - t5) * s * s * d2a
        + 0.5 * (t3 - 2 * t4 + t5) * s * s * d2b
        + (-4 * t3 + 7 * t4 - 3 * t5) * s * d1b
        + (10 * t3 - 15 * t4 + 6 * t5) * yb
    )


def state_at(table: TWTable, x: float) -> tuple[float, float, float, float]:
    """(u, u', h, w) at ``x`` by quintic Hermite interpolation.

    First and second derivatives at the nodes come from the ODE itself, so
    the interpolation error is O(dx^6).
    """
    i, _ = _locate(table, x)
    xa, xb = float(table.x[i]), float(table.x[i + 1])
    ya = np.array([table.u[i], table.du[i], table.h[i], table.w[i]])
    yb = np.array([table.u[i + 1], table.du[i + 1], table.h[i + 1], table.w[i + 1]])
    if x == xa:
        return tuple(float(v) for v in ya)
    if x == xb:
        return tuple(float(v) for v in yb)
    val = _quintic(x, xa, xb, ya, yb, _rhs(xa, ya), _rhs(xb, yb), _rhs2(xa, ya), _rhs2(xb, yb))
    return tuple(float(v) for v in val)


def cdf(table: TWTable, x: float) -> float:
    return math.exp(-state_at(table, x)[3])


def density(table: TWTable, x: float) -> float:
    _, _, h, w = state_at(table, x)
    return h * math.exp(-w)


def log_density_dd(table: TWTable, x: float) -> float:
    """Second derivative of log F'(x) from the closed form in u, u', h."""
    u, du, h, _ = state_at(table, x)
    if h < TAIL_GUARD:
        raise TailUndefined(f"h({x}) = {h:.3g} is below the tail guard")
    return float(_logdd(u, du, h))


def _logdd(u, du, h):
    # -(u^2 h^2 + 2 u u' h + u^4) / h^2, arranged so h^2 never underflows.
    r = u * u / h
    return -(u * u + 2 * u * du / h + r * r)


@dataclass(frozen=True)
class Moments:
    mean: float
    variance: float
    mass: float
    tail_mass: float


def _trapezoid(y: np.ndarray, x: np.ndarray) -> float:
    return float(np.trapezoid(y, x))


def moments(table: TWTable, span: tuple[float, float] = (-10.0, 8.0)) -> Moments:
    """Mean and variance of the density by quadrature over the grid.

    The density decays like exp(-|x|^3/12) on the left and exp(-4x^1.5/3) on
    the right, so the trapezoid rule is spectrally accurate here.  ``tail_mass``
    is the probability outside the table, ``F(x_min) + 1 - F(x_max)``.
    """
    if table.x_min > span[0] + 1e-9 or table.x_max < span[1] - 1e-9:
        raise OutOfRange(f"moments need a table spanning {span}, have [{table.x_min}, {table.x_max}]")
    t = table.ascending()
    f = t.density
    mass = _trapezoid(f, t.x)
    mean = _trapezoid(t.x * f, t.x) / mass
    var = _trapezoid((t.x - mean) ** 2 * f, t.x) / mass
    F = t.F
    return Moments(mean, var, mass, float(F[0] + (1.0 - F[-1])))


@dataclass(frozen=True)
class ConcavityPoint:
    x: float
    value: float
    negative: bool
    exploratory: bool


def scan_log_concavity(table: TWTable, lo: float | None = None, hi: float | None = None) -> list[ConcavityPoint]:
    """Sign of (log F')'' at every grid point in [lo, hi].

    Points with x < 0 are marked exploratory: nothing is claimed there.
    """
    lo = table.x_min if lo is None else lo
    hi = table.x_max if hi is None else hi
    if lo < table.x_min - 1e-12 or hi > table.x_max + 1e-12:
        raise OutOfRange(f"[{lo}, {hi}] is outside [{table.x_min}, {table.x_max}]")
    dd = table.logdd()
    out = []
    for x, v in zip(table.x[::-1], dd[::-1]):
        if lo - 1e-12 <= x <= hi + 1e-12 and np.isfinite(v):
            out.append(ConcavityPoint(float(x), float(v), bool(v < 0), bool(x < 0)))
    return out


def concave_on_nonnegative(points: Iterable[ConcavityPoint]) -> bool:
    return all(p.negative for p in points if not p.exploratory)


def write_csv(table: TWTable, stream=None, every: int = 1) -> str:
    """CSV with header ``x,u,du,h,w,F,f,logdd``; every ``every``-th grid row, ascending x."""
    buf = stream if stream is not None else io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    t = table.ascending()
    F, f, dd = t.F, t.density, t.logdd()
    for i in range(0, len(t.x), max(every, 1)):
        row = (t.x[i], t.u[i], t.du[i], t.h[i], t.w[i], F[i], f[i], dd[i])
        writer.writerow([repr(float(v)) for v in row])
    return buf.getvalue() if stream is None else ""
