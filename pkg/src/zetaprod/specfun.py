"""Special functions built around the completed (symmetrized) zeta function.

Everything here reduces to three ingredients: an Euler-Maclaurin evaluation
of zeta to the right of the critical line, a log-gamma whose Stirling
remainder is summed as a series of even Hurwitz-type zeta values, and the
regularized product (s - 1) * zeta(s) that removes the pole at s = 1.  The
symmetrized function is exposed both in the classical variable ``s`` and in
the shifted variable ``z = s - 1/2`` that centers its zeros on the
imaginary axis.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError, RangeError

PI = math.pi
TWO_PI = 2.0 * math.pi
LN_2 = math.log(2.0)
LN_PI = math.log(math.pi)
LN_2PI = math.log(2.0 * math.pi)

#: Largest |Im s| accepted by :func:`zeta` and the xi evaluators.
IM_MAX = 1000.0

# B_2 .. B_30
_BERNOULLI = (
    1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6,
    -3617 / 510, 43867 / 798, -174611 / 330, 854513 / 138,
    -236364091 / 2730, 8553103 / 6, -23749461029 / 870,
    8615841276005 / 14322,
)

# Stieltjes constants gamma_0 .. gamma_4 for the Laurent expansion at s = 1.
_STIELTJES = (
    0.5772156649015329,
    -0.07281584548367672,
    -0.009690363192872318,
    0.002053834420303346,
    0.0023253700654673,
)


def _log1p_c(x: complex) -> complex:
    """log(1 + x) for complex x, accurate as x -> 0."""
    if abs(x) < 1e-4:
        return x * (1 + x * (-0.5 + x * (1 / 3 + x * (-0.25 + 0.2 * x))))
    return cmath.log(1 + x)


def _log_sin(w: complex) -> complex:
    """log(sin w) up to a multiple of 2*pi*i, safe for large |Im w|."""
    iw = 1j * w
    if w.imag > 0:
        # sin w = -exp(-iw) (1 - exp(2iw)) / (2i)
        return -iw + _log1p_c(-cmath.exp(2 * iw)) + 0.5j * PI - LN_2
    # sin w = exp(iw) (1 - exp(-2iw)) / (2i)
    return iw + _log1p_c(-cmath.exp(-2 * iw)) - 0.5j * PI - LN_2


def _zeta_em(s: complex) -> complex:
    # Euler-Maclaurin with cutoff N grown with |Im s|; caller ensures
    # re(s) >= 1/2 and s != 1.
    t = abs(s.imag)
    big_n = max(20, int(t / 2) + 10)
    n = np.arange(1, big_n)
    tot = complex(np.sum(n ** (-s)))
    tot += big_n ** (1 - s) / (s - 1) + 0.5 * big_n ** (-s)
    poch = s
    npow = big_n ** (-s - 1)
    fact = 2.0
    for k, b2k in enumerate(_BERNOULLI, start=1):
        term = (b2k / fact) * poch * npow
        tot += term
        if abs(term) < 1e-17 * abs(tot):
            break
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        npow /= big_n * big_n
        fact *= (2 * k + 1) * (2 * k + 2)
    return tot


def _s1_zeta(w: complex) -> complex:
    """The entire function (w - 1) * zeta(w), finite at w = 1."""
    u = w - 1
    if abs(u) <= 0.02:
        g0, g1, g2, g3, g4 = _STIELTJES
        return 1 + u * (g0 + u * (-g1 + u * (g2 / 2 + u * (-g3 / 6 + u * (g4 / 24)))))
    if w.real >= 0.5:
        return u * _zeta_em(w)
    return u * zeta(w)


def zeta(s: complex) -> complex:
    """Riemann zeta on the cut-free plane, |Im s| <= 1000.

    Uses Euler-Maclaurin summation for re(s) >= 1/2 and the functional
    equation (in log form, so nothing under- or overflows) for the left
    half-plane.  Relative accuracy is 1e-10 or better across the supported
    strip.  Raises :class:`PoleError` at s = 1 and :class:`RangeError`
    beyond the supported imaginary range.
    """
    s = complex(s)
    if abs(s.imag) > IM_MAX:
        raise RangeError(f"zeta supported for |Im s| <= {IM_MAX:g}, got {s.imag:g}")
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    if s.real >= 0.5:
        return _zeta_em(s)
    if s.imag == 0.0:
        x = s.real
        if x < 0.0 and (x / 2.0).is_integer():
            return 0j
    t = 1 - s
    lead = s * LN_2 + (s - 1) * LN_PI + _log_gamma_any(t)
    if abs(s) < 0.01:
        y = PI * s / 2
        sin_over_s = (PI / 2) * (1 - y * y / 6 * (1 - y * y / 20))
        return -cmath.exp(lead) * sin_over_s * _s1_zeta(t)
    return -cmath.exp(lead + _log_sin(PI * s / 2) - cmath.log(s)) * _s1_zeta(t)


def hurwitz_zeta_even(m: int, a: complex) -> complex:
    """sum_{k>=0} (a + 1/2 + k)^(-2m) for integer m >= 1 and re(a) > -1/2.

    Direct summation is carried far enough that the Euler-Maclaurin tail
    applied at the remaining offset converges geometrically; the result is
    accurate to about 1e-14 relative.
    """
    if m != int(m) or m < 1:
        raise DomainError(f"order must be a positive integer, got {m!r}")
    m = int(m)
    a = complex(a)
    c = a + 0.5
    if c.real <= 0.0:
        raise DomainError("hurwitz_zeta_even requires re(a) > -1/2")
    s = 2 * m
    need = s + 16.0
    cut = int(math.ceil(need - abs(c))) if abs(c) < need else 0
    tot = 0j
    if cut:
        k = np.arange(cut)
        tot += complex(np.sum((c + k) ** (-s)))
    base = c + cut
    tot += base ** (1 - s) / (s - 1) + 0.5 * base ** (-s)
    poch = complex(s)
    bpow = base ** (-s - 1)
    fact = 2.0
    for j, b2 in enumerate(_BERNOULLI, start=1):
        term = (b2 / fact) * poch * bpow
        tot += term
        if abs(term) < 1e-16 * abs(tot):
            break
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        bpow /= base * base
        fact *= (2 * j + 1) * (2 * j + 2)
    return tot


def stirling_w(a: complex) -> complex:
    """Stirling remainder w(a) = log_gamma(a) subtracted from its main terms.

    Summed as -sum_{m>=1} h(2m, a) / ((2m+1) 4^m) with h the even Hurwitz
    sum above; terms are added until one falls below 1e-16 in magnitude.
    On the positive real axis w is negative and behaves like -1/(12a).
    """
    a = complex(a)
    if a.real <= 0.0:
        raise DomainError("stirling_w requires re(a) > 0")
    tot = 0j
    for m in range(1, 201):
        term = hurwitz_zeta_even(m, a) / ((2 * m + 1) * 4.0 ** m)
        tot += term
        if abs(term) < 1e-16:
            return -tot
    raise ConvergenceError(
        "Stirling remainder series still above 1e-16 after 200 terms; "
        "re(a) is too close to 0"
    )


def _log_gamma_any(a: complex) -> complex:
    # Analytic log-gamma continued by the recurrence; valid off the poles.
    # Differs from the principal branch only by the analytic (unwound)
    # imaginary part, which is what every caller here wants.
    if a.imag == 0.0 and a.real <= 0.0 and a.real == round(a.real):
        raise PoleError(f"log_gamma pole at {a.real:g}")
    shift = 0j
    while a.real < 2.0:
        shift += cmath.log(a)
        a = a + 1
    main = (a - 0.5) * cmath.log(a) - a + 0.5 * LN_2PI
    return main - stirling_w(a) - shift


def log_gamma(a: complex) -> complex:
    """Log-gamma for re(a) > 0 via the Stirling remainder series."""
    a = complex(a)
    if a.real <= 0.0:
        raise DomainError("log_gamma requires re(a) > 0")
    return _log_gamma_any(a)


def xi_s(s: complex) -> complex:
    """The symmetrized function gamma(s/2 + 1) pi^(-s/2) (s - 1) zeta(s).

    Entire; invariant under s -> 1 - s; equals 1/2 at s = 0 and s = 1.
    Arguments with re(s) < 1/2 are reflected before evaluation, so the
    symmetry holds exactly.
    """
    s = complex(s)
    if abs(s.imag) > IM_MAX:
        raise RangeError(f"xi_s supported for |Im s| <= {IM_MAX:g}")
    w = s if s.real >= 0.5 else 1 - s
    return cmath.exp(_log_gamma_any(w / 2 + 1) - (w / 2) * LN_PI) * _s1_zeta(w)


def xi_z(z: complex) -> complex:
    """xi in the shifted variable: xi_z(z) = xi_s(z + 1/2).

    Even in z, real on both the real and imaginary axes, and its zeros on
    the imaginary axis sit at the zeta zero ordinates.
    """
    return xi_s(complex(z) + 0.5)


def _log_xi_terms(s: complex) -> complex:
    """log xi_s up to a multiple of 2*pi*i, with no under- or overflow.

    The imaginary part carries the phase; the real part is log |xi_s|.
    Used for sign scans and winding numbers high on the critical line,
    where xi itself underflows.
    """
    w = s if s.real >= 0.5 else 1 - s
    return _log_gamma_any(w / 2 + 1) - (w / 2) * LN_PI + cmath.log(_s1_zeta(w))


def _xi_z_phase(z: complex) -> complex:
    """Unit-modulus complex number with the phase of xi_z(z)."""
    val = _log_xi_terms(complex(z) + 0.5)
    return cmath.exp(1j * val.imag)


def log_xi_z(z: complex) -> complex:
    """Logarithm of xi_z for re(z) > 1/2, assembled term by term.

    exp(log_xi_z(z)) reproduces xi_z(z); the branch is the analytic one
    inherited from :func:`log_gamma`, which is what the asymptotic
    expansion matches against.
    """
    z = complex(z)
    if z.real <= 0.5:
        raise DomainError("log_xi_z requires re(z) > 1/2")
    return (
        -LN_2
        + _log_gamma_any(z / 2 + 0.25)
        - (z / 2 + 0.25) * LN_PI
        + cmath.log(z * z - 0.25)
        + cmath.log(zeta(z + 0.5))
    )


@dataclass(frozen=True)
class XiAsymptoticTerms:
    """Leading terms of log xi_z(z) for large z in the right half-plane."""

    t1: complex  #: (z/2) log(z / 2 pi)
    t2: complex  #: -z/2
    t3: complex  #: (7/4) log z
    constant: float  #: (1/4) log(pi / 2)
    remainder_bound: float  #: 2 / |z|

    def main_sum(self) -> complex:
        return self.t1 + self.t2 + self.t3 + self.constant


def log_xi_asymptotic(z: complex) -> XiAsymptoticTerms:
    """Asymptotic pieces of log_xi_z, valid for re(z) > 10."""
    z = complex(z)
    if z.real <= 10.0:
        raise DomainError("log_xi_asymptotic requires re(z) > 10")
    return XiAsymptoticTerms(
        t1=(z / 2) * cmath.log(z / TWO_PI),
        t2=-z / 2,
        t3=1.75 * cmath.log(z),
        constant=0.25 * math.log(PI / 2),
        remainder_bound=2.0 / abs(z),
    )


def ln_zeta_bound_check(z: complex) -> bool:
    """Check |log zeta(z + 1/2)| <= 20 / (19 re(z)) for re(z) > 10."""
    z = complex(z)
    if z.real <= 10.0:
        raise DomainError("ln_zeta_bound_check requires re(z) > 10")
    return abs(cmath.log(zeta(z + 0.5))) <= 20.0 / (19.0 * z.real)
