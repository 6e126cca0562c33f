"""Zeros of xi on the critical line and the smooth counting model.

The ordinates k_l with xi_z(i k_l) = 0 are found by a sign scan of the
real-valued restriction of xi to the line, cross-checked by a contour
count.  The smooth side is the curve phi(k) = (k/2pi) ln(k/2pi) - k/2pi
+ 7/8, its root a, and the term bundles T4 and T5 that the transform of
the smooth density produces; the residual operation measures what is left
of the exact zero product after T5 is taken out.
"""

from __future__ import annotations

import cmath
import math
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from ._quad import integrate
from .errors import (
    ClusterError,
    ConvergenceError,
    DomainError,
    InsufficientZerosError,
    RangeError,
)
from .specfun import LN_2PI, PI, TWO_PI, _log_xi_terms, _xi_z_phase, xi_z
from .transforms import StepFunction, count_zeros_contour, transform_step


def phi_smooth(k):
    """(k/2pi) ln(k/2pi) - k/2pi + 7/8 for k > 0; scalar or array."""
    arr = np.asarray(k, dtype=float)
    if np.any(arr <= 0):
        raise DomainError("phi_smooth requires k > 0")
    x = arr / TWO_PI
    out = x * np.log(x) - x + 0.875
    if out.ndim == 0:
        return float(out)
    return out


def solve_a(tol: float = 1e-12) -> float:
    """Root of phi_smooth on [2 pi, 20] by bisection (the curve's start)."""
    lo, hi = TWO_PI, 20.0
    flo = phi_smooth(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = phi_smooth(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


_A_ROOT = solve_a()


def t5_constant(a: float) -> float:
    """(a/pi)(2 - ln a + ln 2pi) - (7/4) ln a."""
    if not (a > 0 and math.isfinite(a)):
        raise DomainError(f"a must be positive, got {a!r}")
    return (a / PI) * (2.0 - math.log(a) + LN_2PI) - 1.75 * math.log(a)


def n_of_t(t: float) -> float:
    """Smooth zero count up to height t; same curve as phi_smooth.

    Kept as a separate name because the counting formula is usually
    written in T while the curve is read in k.
    """
    return phi_smooth(t)


@dataclass(frozen=True)
class SmoothCountModel:
    """The smooth counting curve anchored at its root a."""

    a: float = _A_ROOT

    def __post_init__(self):
        if not (TWO_PI < self.a < 20.0):
            raise DomainError(f"a must lie in (2 pi, 20), got {self.a!r}")
        if abs(phi_smooth(self.a)) > 1e-10:
            raise DomainError(f"a = {self.a!r} is not a root of the curve")

    def phi(self, k):
        return phi_smooth(k)

    def density(self, k):
        """phi'(k) = ln(k/2pi) / 2pi."""
        arr = np.asarray(k, dtype=float)
        out = np.log(arr / TWO_PI) / TWO_PI
        if out.ndim == 0:
            return float(out)
        return out

    def t4(self, z: complex) -> complex:
        z = complex(z)
        return (z / 2) * cmath.log(z / TWO_PI) - z / 2 + 1.75 * cmath.log(z)

    def t5(self, z: complex) -> complex:
        return self.t4(z) + t5_constant(self.a)


class ZeroSource(Enum):
    COMPUTED = "computed"
    FILE = "file"


@dataclass(frozen=True)
class ZeroList:
    """Ascending zero ordinates, complete below the scan ceiling t_max."""

    ordinates: np.ndarray
    t_max: float
    source: ZeroSource = ZeroSource.COMPUTED

    def __post_init__(self):
        arr = np.asarray(self.ordinates, dtype=float)
        object.__setattr__(self, "ordinates", arr)
        if arr.ndim != 1:
            raise DomainError("ordinates must be one-dimensional")
        if not (self.t_max > 0 and math.isfinite(self.t_max)):
            raise DomainError(f"t_max must be positive, got {self.t_max!r}")
        if len(arr):
            if np.any(np.diff(arr) <= 0):
                raise DomainError("ordinates must be strictly ascending")
            if arr[0] <= _A_ROOT:
                raise DomainError(
                    f"first ordinate {arr[0]:g} is not above the curve root {_A_ROOT:g}"
                )
            if arr[-1] >= self.t_max:
                raise DomainError("all ordinates must lie strictly below t_max")

    def __len__(self) -> int:
        return len(self.ordinates)

    def to_step(self) -> StepFunction:
        return StepFunction((float(k), 1) for k in self.ordinates)

    def count_below(self, t):
        """Number of ordinates <= t; scalar or array."""
        out = np.searchsorted(self.ordinates, t, side="right")
        if np.ndim(t) == 0:
            return int(out)
        return out

    def write(self, path) -> None:
        lines = ["# xi zero ordinates (imaginary-axis, z-coordinates)",
                 f"# t_max={self.t_max:.10g}"]
        lines += [f"{k:.10f}" for k in self.ordinates]
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

    @classmethod
    def _parse(cls, lines: Iterable[str], t_max: float | None, source: ZeroSource) -> "ZeroList":
        header_tmax = None
        vals = []
        for raw in lines:
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                m = re.search(r"t_max\s*[=:]\s*([0-9eE+.\-]+)", line)
                if m:
                    header_tmax = float(m.group(1))
                continue
            vals.append(float(line))
        if t_max is None:
            t_max = header_tmax
        if t_max is None:
            if not vals:
                raise DomainError("zero file has no ordinates and no t_max header")
            t_max = float(np.nextafter(vals[-1], math.inf))
        return cls(np.asarray(vals, dtype=float), t_max=t_max, source=source)

    @classmethod
    def read(cls, path, t_max: float | None = None) -> "ZeroList":
        text = Path(path).read_text(encoding="utf-8")
        return cls._parse(text.splitlines(), t_max, ZeroSource.FILE)

    @classmethod
    def bundled(cls) -> "ZeroList":
        """The packaged literature list: every ordinate below 100."""
        text = resources.files("zetaprod").joinpath("data/zeros_t100.txt").read_text(
            encoding="utf-8"
        )
        return cls._parse(text.splitlines(), None, ZeroSource.FILE)


def _line_sign(t: float) -> float:
    # xi_z(it) is real; its sign is the cosine of the phase of the log form,
    # which stays finite where xi itself would underflow.
    return math.cos(_log_xi_terms(complex(0.5, t)).imag)


def _bisect_sign_change(lo: float, hi: float, sign_lo: float) -> float:
    for _ in range(64):
        if hi - lo <= 1e-9:
            break
        mid = 0.5 * (lo + hi)
        sm = _line_sign(mid)
        if (sm > 0) == (sign_lo > 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _chunk_roots(ts: np.ndarray) -> list[float]:
    signs = np.fromiter((_line_sign(t) for t in ts), dtype=float, count=len(ts))
    roots = []
    flips = np.flatnonzero(np.sign(signs[:-1]) != np.sign(signs[1:]))
    for i in flips:
        roots.append(_bisect_sign_change(float(ts[i]), float(ts[i + 1]), float(signs[i])))
    return roots


def find_zeros(
    t_max: float,
    *,
    step: float = 0.25,
    jobs: int = 1,
    verify: bool = True,
) -> ZeroList:
    """Scan [10, t_max] for sign changes of xi on the critical line.

    Each change is bisected to 1e-9 and the resulting count is checked
    against the winding-number count on the circle of radius just under
    t_max; a mismatch means a step straddled two zeros and raises
    :class:`ClusterError`.  ``jobs`` > 1 splits the scan across processes;
    the merged result does not depend on the worker count.
    """
    if not (t_max > 14):
        raise DomainError(f"t_max must exceed 14, got {t_max!r}")
    if t_max > 1000:
        raise RangeError("find_zeros supports t_max <= 1000")
    if not (0 < step <= 0.5):
        raise DomainError(f"step must lie in (0, 0.5], got {step!r}")
    if jobs < 1 or jobs != int(jobs):
        raise DomainError(f"jobs must be a positive integer, got {jobs!r}")
    jobs = int(jobs)

    n = int(math.ceil((t_max - 10.0) / step))
    ts = np.minimum(10.0 + step * np.arange(n + 1), t_max)

    if jobs == 1 or n < 4 * jobs:
        roots = _chunk_roots(ts)
    else:
        bounds = np.linspace(0, len(ts) - 1, jobs + 1).astype(int)
        chunks = [ts[bounds[i]: bounds[i + 1] + 1] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_chunk_roots, chunks))
        roots = sorted(r for part in parts for r in part)

    roots = [r for r in roots if r < t_max]
    out = ZeroList(np.asarray(roots, dtype=float), t_max=t_max, source=ZeroSource.COMPUTED)

    if verify:
        r = t_max - 0.02
        while len(out) and float(np.min(np.abs(out.ordinates - r))) < 0.02:
            r -= 0.05
        expected = int(np.sum(out.ordinates < r))
        # Sample finely enough that the phase moves well under pi/2 per arc
        # even if the scan missed a pair; aliasing would hide full turns.
        samples = max(256, 24 * expected + 64)
        got = count_zeros_contour(_xi_z_phase, r, min_samples=samples)
        if got != expected:
            raise ClusterError(
                f"scan found {expected} zeros below {r:g} but the contour count "
                f"is {got}; reduce the step (currently {step:g})"
            )
    return out


class ResidualSample(NamedTuple):
    residual: float
    tail_estimate: float


def residual(
    z: float,
    zeros: ZeroList,
    model: SmoothCountModel | None = None,
) -> ResidualSample:
    """Exact zero product plus smooth tail, minus T5, at real z >= 50.

    The listed zeros enter exactly through the step transform; beyond
    zeros.t_max the staircase is replaced by the smooth density
    phi'(k) = ln(k/2pi)/2pi and the integral is taken in the
    integration-by-parts form.  That replacement leaves a boundary term
    log(1 + z^2/t_max^2) * Omega(t_max) at the splice, which is known
    exactly and subtracted; the oscillatory part that remains integrates
    to O(1/t_max) because the running mean of Omega decays.  The
    tail_estimate adds that to the O(1/z) of the asymptotic pieces and
    the quadrature estimate.
    """
    z = float(z)
    if z < 50:
        raise DomainError("residual requires real z >= 50")
    if model is None:
        model = SmoothCountModel()
    if zeros.t_max < 2 * z:
        raise InsufficientZerosError(
            f"need zeros to t_max >= 2z = {2 * z:g}, have {zeros.t_max:g}"
        )
    step_part = transform_step(zeros.to_step(), z).real
    zz = z * z
    big_t = zeros.t_max

    def tail_integrand(u):
        u = np.asarray(u, dtype=float)
        return np.log1p(zz * u * u) * (-np.log(TWO_PI * u)) / (TWO_PI * u * u)

    tail, qerr, _ = integrate(tail_integrand, 0.0, 1.0 / big_t,
                              abs_tol=1e-10, rel_tol=1e-10)
    # Splice boundary term: by parts over [t_max, inf) the oscillatory
    # part contributes -log(1+z^2/t^2)*Omega(t) at t = t_max exactly.
    omega_t = len(zeros.ordinates) - model.phi(big_t)
    boundary = -math.log1p(zz / (big_t * big_t)) * omega_t
    value = step_part + tail.real + boundary - model.t5(z).real
    return ResidualSample(value, 1.0 / big_t + 2.0 / z + qerr)


@dataclass(frozen=True)
class ResidualReport:
    """Residual samples plus the constant they should level off at.

    constant_derived recomputes the plateau from first principles:
    (1/4) ln(pi/2) - ln xi_z(0) - t5_constant(a).  constant_paper is the
    printed magnitude; the derivation fixes the sign as negative, and the
    report carries both so the discrepancy stays visible.
    """

    samples: tuple[tuple[float, float, float], ...]
    constant_derived: float
    constant_paper: float = 0.0464


def residual_report(
    z_values: Sequence[float],
    zeros: ZeroList,
    model: SmoothCountModel | None = None,
) -> ResidualReport:
    if model is None:
        model = SmoothCountModel()
    samples = []
    for z in z_values:
        sample = residual(z, zeros, model)
        samples.append((float(z), sample.residual, sample.tail_estimate))
    derived = 0.25 * math.log(PI / 2) - math.log(xi_z(0).real) - t5_constant(model.a)
    return ResidualReport(samples=tuple(samples), constant_derived=derived)


@dataclass(frozen=True, eq=False)
class OmegaStats:
    """Oscillatory remainder Omega(k) = actual count - smooth curve.

    ``grid`` has rows (k, omega); ``running_mean`` has rows (T, mean of
    omega over [a, T] divided by T, trapezoid rule).
    """

    grid: np.ndarray
    running_mean: np.ndarray

    @property
    def final_mean(self) -> float:
        return float(self.running_mean[-1, 1])

    def sign_changes(self) -> int:
        om = self.grid[:, 1]
        om = om[om != 0]
        return int(np.sum(np.diff(np.sign(om)) != 0))


def omega_stats(
    zeros: ZeroList,
    model: SmoothCountModel | None = None,
    grid_step: float = 0.1,
) -> OmegaStats:
    """Omega on a grid over [a, zeros.t_max] with its running mean."""
    if model is None:
        model = SmoothCountModel()
    if not (0 < grid_step <= 0.1):
        raise DomainError(f"grid_step must lie in (0, 0.1], got {grid_step!r}")
    if not len(zeros):
        raise DomainError("omega_stats needs a nonempty zero list")
    a = model.a
    n = int(math.floor((zeros.t_max - a) / grid_step))
    ks = a + grid_step * np.arange(n + 1)
    if ks[-1] < zeros.t_max - 1e-9:
        ks = np.append(ks, zeros.t_max)
    omega = zeros.count_below(ks) - phi_smooth(ks)
    dk = np.diff(ks)
    integral = np.concatenate(([0.0], np.cumsum(0.5 * (omega[:-1] + omega[1:]) * dk)))
    means = integral / ks
    return OmegaStats(
        grid=np.column_stack((ks, omega)),
        running_mean=np.column_stack((ks, means)),
    )


def predict_zeros(n_max: int, model: SmoothCountModel | None = None) -> np.ndarray:
    """Ordinates where the smooth curve crosses n - 1/2, for n = 1..n_max.

    These are the jump positions of the predicted staircase; bisection to
    1e-9.  The curve is strictly increasing past its root, so each level
    has exactly one crossing.
    """
    if n_max != int(n_max) or int(n_max) < 1:
        raise DomainError(f"n_max must be a positive integer, got {n_max!r}")
    n_max = int(n_max)
    if model is None:
        model = SmoothCountModel()
    out = np.empty(n_max)
    hi = 20.0
    for n in range(1, n_max + 1):
        target = n - 0.5
        while phi_smooth(hi) < target:
            hi *= 1.5
        lo = model.a
        top = hi
        while top - lo > 1e-9:
            mid = 0.5 * (lo + top)
            if phi_smooth(mid) - target < 0:
                lo = mid
            else:
                top = mid
        out[n - 1] = 0.5 * (lo + top)
    return out


class CrossingCount(NamedTuple):
    exact: float
    midpoint: float
    bound: float


def crossing_count(
    k_a: float,
    k_b: float,
    model: SmoothCountModel | None = None,
) -> CrossingCount:
    """phi(k_b) - phi(k_a), exactly and by the midpoint shortcut.

    The shortcut is (k_b - k_a)/2pi * ln((k_a + k_b)/4pi); its error is a
    second-order midpoint-rule remainder, guaranteed below
    (k_b - k_a)^3 / (8 pi k_a^2).
    """
    if model is None:
        model = SmoothCountModel()
    if not (k_a > model.a):
        raise DomainError(f"k_a must exceed the curve root {model.a:g}")
    if k_b < k_a:
        raise DomainError("k_b must be >= k_a")
    exact = phi_smooth(k_b) - phi_smooth(k_a)
    midpoint = (k_b - k_a) / TWO_PI * math.log((k_a + k_b) / (2 * TWO_PI))
    bound = (k_b - k_a) ** 3 / (8 * PI * k_a * k_a)
    if abs(exact - midpoint) > bound:
        raise ConvergenceError(
            f"midpoint shortcut off by {abs(exact - midpoint):g}, "
            f"beyond its bound {bound:g}"
        )
    return CrossingCount(exact, midpoint, bound)
