"""Covariant integral quantization of functions on the circle.

A function f on [0, 2 pi) is mapped to the symmetric matrix

    A_f = (1/pi) * integral of f(phi) rho_{r, phi0 + phi} dphi

where rho_{r, psi} is the rotated density matrix of :mod:`planeq.plane`.
Only the mean and the doubled-angle Fourier coefficients of f survive, so
everything reduces to three numbers ``(mean, Cc, Cs)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

import numpy as np

from .plane import TWO_PI, SymObservable, normalize_angle, rotation

DEFAULT_GRID = 1024
GAUSS_NODES = 64


class Coefficients(NamedTuple):
    mean: float
    cc: float
    cs: float


def _shift_coeffs(c: Coefficients, theta: float) -> Coefficients:
    # coefficients of f(phi - theta)
    c2, s2 = np.cos(2.0 * theta), np.sin(2.0 * theta)
    return Coefficients(c.mean, c2 * c.cc - s2 * c.cs, s2 * c.cc + c2 * c.cs)


@dataclass(frozen=True)
class CircleFunction:
    """A real function, or a Dirac delta, on the circle [0, 2 pi).

    Parameters
    ----------
    evaluator : callable
        Vectorised map from angles to values.  Unused for a delta.
    exact : Coefficients, optional
        Analytic ``(mean, Cc, Cs)`` when known.
    dirac_at : float, optional
        If set, the function is the delta peaked at this angle.
    jumps : tuple of float
        Points in [0, 2 pi) where the evaluator is discontinuous.  Used to
        split Gauss-Legendre quadrature into smooth pieces.
    """

    evaluator: Optional[Callable] = None
    exact: Optional[Coefficients] = None
    dirac_at: Optional[float] = None
    jumps: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.evaluator is None and self.dirac_at is None:
            raise ValueError("need an evaluator or a Dirac location")
        if self.exact is not None:
            object.__setattr__(self, "exact", Coefficients(*map(float, self.exact)))
        object.__setattr__(self, "jumps",
                           tuple(sorted(normalize_angle(float(j)) for j in self.jumps)))

    @property
    def is_dirac(self) -> bool:
        return self.dirac_at is not None

    def __call__(self, phi):
        if self.is_dirac:
            raise TypeError("a Dirac delta cannot be evaluated pointwise")
        return self.evaluator(normalize_angle(np.asarray(phi, dtype=float)))

    def shifted(self, theta: float) -> "CircleFunction":
        """The rotated function phi -> f(phi - theta)."""
        if self.is_dirac:
            return CircleFunction(dirac_at=normalize_angle(self.dirac_at + theta))
        ev = self.evaluator
        return CircleFunction(
            lambda phi: ev(normalize_angle(np.asarray(phi) - theta)),
            None if self.exact is None else _shift_coeffs(self.exact, theta),
            jumps=tuple(j + theta for j in self.jumps),
        )

    def __add__(self, other: "CircleFunction") -> "CircleFunction":
        if self.is_dirac or other.is_dirac:
            raise TypeError("sums involving Dirac deltas are not supported")
        f, g = self.evaluator, other.evaluator
        exact = None
        if self.exact is not None and other.exact is not None:
            exact = Coefficients(*(np.add(self.exact, other.exact)))
        return CircleFunction(lambda phi: f(phi) + g(phi), exact,
                              jumps=tuple(set(self.jumps) | set(other.jumps)))

    def __mul__(self, c: float) -> "CircleFunction":
        if self.is_dirac:
            raise TypeError("scaled Dirac deltas are not supported")
        f = self.evaluator
        exact = None if self.exact is None else Coefficients(*(c * np.asarray(self.exact)))
        return CircleFunction(lambda phi: c * f(phi), exact, jumps=self.jumps)

    __rmul__ = __mul__


def constant(c: float = 1.0) -> CircleFunction:
    return CircleFunction(lambda phi: np.full_like(np.asarray(phi, dtype=float), c),
                          Coefficients(c, 0.0, 0.0))


def cos2() -> CircleFunction:
    return CircleFunction(lambda phi: np.cos(2.0 * phi), Coefficients(0.0, 1.0, 0.0))


def sin2() -> CircleFunction:
    return CircleFunction(lambda phi: np.sin(2.0 * phi), Coefficients(0.0, 0.0, 1.0))


def trig(mean: float, cc: float, cs: float) -> CircleFunction:
    """mean + cc cos 2 phi + cs sin 2 phi."""
    return CircleFunction(
        lambda phi: mean + cc * np.cos(2.0 * phi) + cs * np.sin(2.0 * phi),
        Coefficients(mean, cc, cs),
    )


def angle_function() -> CircleFunction:
    """The angle phi itself, taken in [0, 2 pi), with its jump at 0."""
    return CircleFunction(lambda phi: normalize_angle(phi), Coefficients(np.pi, 0.0, -1.0),
                          jumps=(0.0,))


def dirac(eta: float) -> CircleFunction:
    return CircleFunction(dirac_at=normalize_angle(eta))


def from_callable(fn: Callable, jumps=()) -> CircleFunction:
    return CircleFunction(fn, jumps=tuple(jumps))


@dataclass(frozen=True)
class QuantizerConfig:
    """Parameters of the family rho_{r, phi0 + phi}."""

    r: float = 1.0
    phi0: float = 0.0
    grid_points: int = DEFAULT_GRID

    def __post_init__(self):
        if not (0.0 <= self.r <= 1.0):
            raise ValueError(f"r={self.r} outside [0, 1]")
        _check_grid(self.grid_points)


def _check_grid(n: int) -> None:
    if int(n) != n or n < 8 or n % 2:
        raise ValueError(f"grid size must be an even integer >= 8, got {n}")


def circle_grid(n: int) -> np.ndarray:
    """Midpoints of n equal cells of [0, 2 pi).

    For smooth periodic integrands this is as accurate as the trapezoid rule,
    and a jump at 0 only costs O(1/n^2) because it falls on a cell boundary.
    """
    _check_grid(n)
    return (np.arange(n) + 0.5) * (TWO_PI / n)


def _uniform_coeffs(f: CircleFunction, n: int) -> Coefficients:
    phi = circle_grid(n)
    v = f(phi)
    return Coefficients(float(np.mean(v)), float(2.0 * np.mean(v * np.cos(2.0 * phi))),
                        float(2.0 * np.mean(v * np.sin(2.0 * phi))))


def _gauss_coeffs(f: CircleFunction, nodes: int = GAUSS_NODES) -> Coefficients:
    x, w = np.polynomial.legendre.leggauss(nodes)
    edges = sorted(set(f.jumps) | {0.0}) + [TWO_PI]
    sums = np.zeros(3)
    for lo, hi in zip(edges[:-1], edges[1:]):
        half = 0.5 * (hi - lo)
        phi = lo + half * (x + 1.0)
        # evaluate strictly inside the piece so the jump side is unambiguous
        v = f.evaluator(phi) * w * half
        sums += [v.sum(), v @ np.cos(2.0 * phi), v @ np.sin(2.0 * phi)]
    return Coefficients(sums[0] / TWO_PI, sums[1] / np.pi, sums[2] / np.pi)


def fourier_coeffs(f: CircleFunction, n: int = DEFAULT_GRID,
                   method: str = "auto") -> Coefficients:
    """Mean and doubled-angle Fourier coefficients of f.

    mean = (1/2pi) int f,  Cc = (1/pi) int f cos 2phi,  Cs = (1/pi) int f sin 2phi.

    Parameters
    ----------
    method : {"auto", "exact", "uniform", "gauss"}
        ``auto`` uses analytic coefficients when present, Gauss-Legendre
        between jumps for functions with known discontinuities, and the
        uniform periodic rule otherwise.
    """
    _check_grid(n)
    if f.is_dirac:
        eta = f.dirac_at
        return Coefficients(1.0 / TWO_PI, np.cos(2.0 * eta) / np.pi, np.sin(2.0 * eta) / np.pi)
    if method == "auto":
        if f.exact is not None:
            return f.exact
        method = "gauss" if f.jumps else "uniform"
    if method == "exact":
        if f.exact is None:
            raise ValueError("function has no analytic coefficients")
        return f.exact
    if method == "uniform":
        return _uniform_coeffs(f, n)
    if method == "gauss":
        return _gauss_coeffs(f)
    raise ValueError(f"unknown method {method!r}")


def observable_from_coeffs(c: Coefficients, cfg: QuantizerConfig) -> SymObservable:
    c2, s2 = np.cos(2.0 * cfg.phi0), np.sin(2.0 * cfg.phi0)
    h = 0.5 * cfg.r
    return SymObservable(c.mean, h * (c2 * c.cc - s2 * c.cs), h * (s2 * c.cc + c2 * c.cs))


def quantize(f: CircleFunction, cfg: QuantizerConfig = QuantizerConfig(),
             method: str = "auto") -> SymObservable:
    """The operator A_f for the family rho_{r, phi0 + phi}."""
    return observable_from_coeffs(fourier_coeffs(f, cfg.grid_points, method), cfg)


def quantize_angle_closed_form(cfg: QuantizerConfig = QuantizerConfig()) -> SymObservable:
    """pi I + (r/2) sigma_{2 phi0 - pi/2}."""
    psi = 2.0 * cfg.phi0 - 0.5 * np.pi
    return SymObservable(np.pi, 0.5 * cfg.r * np.cos(psi), 0.5 * cfg.r * np.sin(psi))


def resolution_of_identity_residual(cfg: QuantizerConfig = QuantizerConfig()) -> float:
    """Max-entry deviation of (1/pi) int rho_{r, phi0+phi} dphi from the identity."""
    phi = circle_grid(cfg.grid_points)
    psi = 2.0 * (cfg.phi0 + phi)
    w = 2.0 / cfg.grid_points  # (1/pi) * (2 pi / N)
    # identity part carried separately so that r = 0 is exact
    half = 0.5 * np.sum(np.full(cfg.grid_points, w))
    d = 0.5 * cfg.r * w * np.sum(np.cos(psi))
    b = 0.5 * cfg.r * w * np.sum(np.sin(psi))
    m = np.array([[half + d, b], [b, half - d]])
    return float(np.abs(m - np.eye(2)).max())


def probability_kernel(r: float, eta: float, phi):
    """tr(rho_{r,eta} rho_{r,phi}) = (1 + r^2 cos 2(phi - eta)) / 2."""
    return 0.5 * (1.0 + r * r * np.cos(2.0 * (np.asarray(phi) - eta)))


def lower_symbol(A: SymObservable, cfg: QuantizerConfig = QuantizerConfig()) -> CircleFunction:
    """phi -> tr(rho_{r, phi0 + phi} A)."""
    c2, s2 = np.cos(2.0 * cfg.phi0), np.sin(2.0 * cfg.phi0)
    cc = cfg.r * (A.delta * c2 + A.beta * s2)
    cs = cfg.r * (A.beta * c2 - A.delta * s2)
    return trig(A.alpha, cc, cs)


def upper_symbol(A: SymObservable, cfg: QuantizerConfig = QuantizerConfig()) -> CircleFunction:
    """Canonical function in span{1, cos 2phi, sin 2phi} that quantizes to A."""
    if cfg.r == 0.0:
        if A.delta or A.beta:
            raise ValueError("only multiples of the identity are reachable at r = 0")
        return constant(A.alpha)
    c2, s2 = np.cos(2.0 * cfg.phi0), np.sin(2.0 * cfg.phi0)
    k = 2.0 / cfg.r
    return trig(A.alpha, k * (c2 * A.delta + s2 * A.beta), k * (c2 * A.beta - s2 * A.delta))


def angle_lower_symbol(phi, r: float = 1.0):
    """pi - (r^2 / 2) sin 2 phi, the lower symbol of the quantized angle."""
    return np.pi - 0.5 * r * r * np.sin(2.0 * np.asarray(phi))


class BerezinLieb(NamedTuple):
    lower: float
    trace: float
    upper: float

    def holds(self, slack: float = 1e-10) -> bool:
        return self.trace - self.lower >= -slack and self.upper - self.trace >= -slack


def berezin_lieb_check(A: SymObservable, g: Callable, n: int = DEFAULT_GRID) -> BerezinLieb:
    """Both sides of the Berezin-Lieb sandwich for a convex ``g`` (r = 1).

    Returns ``((1/pi) int g(lower), g(l+) + g(l-), (1/pi) int g(upper))``.
    """
    phi = circle_grid(n)
    lo = lower_symbol(A)(phi)
    up = upper_symbol(A)(phi)
    lp, lm = A.eigenvalues
    return BerezinLieb(2.0 * float(np.mean(g(lo))), float(g(lp) + g(lm)),
                       2.0 * float(np.mean(g(up))))


def covariance_check(f: CircleFunction, theta: float,
                     cfg: QuantizerConfig = QuantizerConfig(), method: str = "auto") -> float:
    """Max-entry gap between R(theta) A_f R(-theta) and A_{f(. - theta)}."""
    R = rotation(theta)
    lhs = R @ quantize(f, cfg, method).matrix @ R.T
    rhs = quantize(f.shifted(theta), cfg, method).matrix
    return float(np.abs(lhs - rhs).max())


@dataclass(frozen=True)
class BorelUnion:
    """Finite union of disjoint half-open intervals [lo, hi) inside [0, 2 pi)."""

    intervals: tuple = ()

    def __post_init__(self):
        ivs = tuple(sorted((float(lo), float(hi)) for lo, hi in self.intervals))
        for lo, hi in ivs:
            if not (0.0 <= lo < hi <= TWO_PI):
                raise ValueError(f"bad interval [{lo}, {hi})")
        for (_, h0), (l1, _) in zip(ivs[:-1], ivs[1:]):
            if l1 < h0:
                raise ValueError("intervals overlap")
        object.__setattr__(self, "intervals", ivs)

    @classmethod
    def full(cls) -> "BorelUnion":
        return cls(((0.0, TWO_PI),))

    @property
    def measure(self) -> float:
        return sum(hi - lo for lo, hi in self.intervals)


def povm_element(delta: BorelUnion) -> SymObservable:
    """a(Delta) = (1/pi) int_Delta |phi><phi| dphi, from the antiderivative."""
    a = d = b = 0.0
    for lo, hi in delta.intervals:
        a += 0.5 * (hi - lo)
        d += 0.25 * (np.sin(2.0 * hi) - np.sin(2.0 * lo))
        b += 0.25 * (np.cos(2.0 * lo) - np.cos(2.0 * hi))
    return SymObservable(a / np.pi, d / np.pi, b / np.pi)


def geometric_probability(eta: float, delta: BorelUnion) -> float:
    """<eta| a(Delta) |eta> = (1/pi) int_Delta cos^2(phi - eta) dphi."""
    return povm_element(delta).expectation([np.cos(eta), np.sin(eta)])
