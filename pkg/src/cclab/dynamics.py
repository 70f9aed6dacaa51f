"""Limit-cycle ground truth, established two independent ways.

For rigid rotationally symmetric fields the radial dynamics decouple
exactly: if P = -y + x*f(x^2+y^2) and Q = x + y*f(x^2+y^2) as polynomial
identities, then in polar coordinates the radius obeys dr/dt = r*f(r^2)
while the angle advances at unit speed.  Limit cycles are then circles
whose squared radius is a positive simple root of f, and their stability
is read off the sign change of f, all in exact arithmetic.

For everything else (and as a cross-check on the rigid path) a numerical
Poincare return map on the positive x-axis is scanned for fixed points
with an embedded Runge-Kutta 4(5) integrator.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, TextIO

from .polynomials import Poly2, UniPoly
from .realroots import (
    RootInterval,
    count_real_roots,
    positive_real_roots,
    rational_root_in,
    root_multiplicity,
)
from .systems import PlanarSystem

STABLE = "stable"
UNSTABLE = "unstable"
SEMI_STABLE = "semi_stable"

EXACT_RADIAL = "exact_radial"
NUMERIC_POINCARE = "numeric_poincare"

TWO_PI = 2.0 * math.pi


class DivergenceError(RuntimeError):
    """The trajectory left the integrable region (finite-time blow-up)."""

    def __init__(self, t: float, state: tuple[float, float]):
        self.t = t
        self.state = state
        super().__init__(
            f"step size underflow at t={t:.6g}, last state "
            f"({state[0]:.6g}, {state[1]:.6g})")


class NoReturnError(RuntimeError):
    """No section crossing occurred within the time budget."""

    def __init__(self, t_max: float):
        self.t_max = t_max
        super().__init__(f"no return to the section within t_max={t_max:g}")


class EquilibriumCaptureError(RuntimeError):
    """The trajectory fell inside the r_min disc around the equilibrium."""

    def __init__(self, t: float, r_min: float):
        self.t = t
        self.r_min = r_min
        super().__init__(f"trajectory entered r < {r_min:g} at t={t:.6g}")


# --- compiled float evaluation ------------------------------------------------


def _poly_expr(poly: Poly2, xname: str, yname: str) -> str:
    """A float-arithmetic expression string for one polynomial."""
    pieces = []
    for (i, j), c in sorted(poly.terms.items()):
        factors = [repr(float(c))]
        if i == 1:
            factors.append(xname)
        elif i > 1:
            factors.append(f"{xname}**{i}")
        if j == 1:
            factors.append(yname)
        elif j > 1:
            factors.append(f"{yname}**{j}")
        pieces.append("*".join(factors))
    return " + ".join(pieces) if pieces else "0.0"


def _compile_field(system: PlanarSystem) -> Callable[[float, float], tuple[float, float]]:
    """Compile (P, Q) into one fast float-valued function of (x, y).

    The scan below evaluates the field millions of times, so the term-by-term
    dictionary walk is compiled once into a plain arithmetic expression.
    """
    src = (
        "def _deriv(x, y):\n"
        f"    return ({_poly_expr(system.P, 'x', 'y')}), "
        f"({_poly_expr(system.Q, 'x', 'y')})\n"
    )
    namespace: dict = {}
    exec(src, namespace)
    return namespace["_deriv"]


# --- embedded Runge-Kutta 4(5), Fehlberg coefficients --------------------------

_A21 = 1.0 / 4.0
_A31, _A32 = 3.0 / 32.0, 9.0 / 32.0
_A41, _A42, _A43 = 1932.0 / 2197.0, -7200.0 / 2197.0, 7296.0 / 2197.0
_A51, _A52, _A53, _A54 = 439.0 / 216.0, -8.0, 3680.0 / 513.0, -845.0 / 4104.0
_A61, _A62, _A63, _A64, _A65 = (
    -8.0 / 27.0, 2.0, -3544.0 / 2565.0, 1859.0 / 4104.0, -11.0 / 40.0)
_B1, _B3, _B4, _B5 = 25.0 / 216.0, 1408.0 / 2565.0, 2197.0 / 4104.0, -1.0 / 5.0
_E1, _E3, _E4, _E5, _E6 = (
    16.0 / 135.0 - _B1, 6656.0 / 12825.0 - _B3,
    28561.0 / 56430.0 - _B4, -9.0 / 50.0 - _B5, 2.0 / 55.0)

_MAX_COORD = 1e12


def _rkf45_step(deriv, x: float, y: float, h: float):
    """One trial step.  Returns the order-4 result and the embedded error."""
    k1x, k1y = deriv(x, y)
    k2x, k2y = deriv(x + h * _A21 * k1x, y + h * _A21 * k1y)
    k3x, k3y = deriv(x + h * (_A31 * k1x + _A32 * k2x),
                     y + h * (_A31 * k1y + _A32 * k2y))
    k4x, k4y = deriv(x + h * (_A41 * k1x + _A42 * k2x + _A43 * k3x),
                     y + h * (_A41 * k1y + _A42 * k2y + _A43 * k3y))
    k5x, k5y = deriv(
        x + h * (_A51 * k1x + _A52 * k2x + _A53 * k3x + _A54 * k4x),
        y + h * (_A51 * k1y + _A52 * k2y + _A53 * k3y + _A54 * k4y))
    k6x, k6y = deriv(
        x + h * (_A61 * k1x + _A62 * k2x + _A63 * k3x + _A64 * k4x + _A65 * k5x),
        y + h * (_A61 * k1y + _A62 * k2y + _A63 * k3y + _A64 * k4y + _A65 * k5y))
    nx = x + h * (_B1 * k1x + _B3 * k3x + _B4 * k4x + _B5 * k5x)
    ny = y + h * (_B1 * k1y + _B3 * k3y + _B4 * k4y + _B5 * k5y)
    ex = h * (_E1 * k1x + _E3 * k3x + _E4 * k4x + _E5 * k5x + _E6 * k6x)
    ey = h * (_E1 * k1y + _E3 * k3y + _E4 * k4y + _E5 * k5y + _E6 * k6y)
    return nx, ny, ex, ey


def _adaptive_steps(
    deriv,
    start: tuple[float, float],
    t_end: float,
    rtol: float,
    atol: float,
    max_step: float | None = None,
    stats: list | None = None,
) -> Iterator[tuple[float, float, float, float, float, float]]:
    """Yield accepted steps (t0, x0, y0, t1, x1, y1) up to t_end.

    Raises DivergenceError when the controller underflows the step size or a
    coordinate leaves [-1e12, 1e12], both of which signal finite-time blow-up
    for polynomial fields.
    """
    t = 0.0
    x, y = float(start[0]), float(start[1])
    h = min(1e-3, t_end)
    if max_step is not None:
        h = min(h, max_step)
    accepted = rejected = 0
    try:
        while t < t_end:
            remaining = t_end - t
            if remaining <= 4.0 * sys.float_info.epsilon * max(abs(t), abs(t_end)):
                # the span is complete up to rounding: t + h can land a few
                # ulps short of t_end, and that residue is not a blow-up
                break
            h = min(h, remaining)
            if h < 1e-14 * max(1.0, abs(t)):
                raise DivergenceError(t, (x, y))
            nx, ny, ex, ey = _rkf45_step(deriv, x, y, h)
            if not (math.isfinite(nx) and math.isfinite(ny)):
                h *= 0.25
                rejected += 1
                continue
            sx = atol + rtol * max(abs(x), abs(nx))
            sy = atol + rtol * max(abs(y), abs(ny))
            ratio = max(abs(ex) / sx, abs(ey) / sy)
            if ratio <= 1.0:
                t0, x0, y0 = t, x, y
                # propagate the order-5 member (the error vector is exactly
                # the order difference, so this is free local extrapolation)
                t, x, y = t + h, nx + ex, ny + ey
                accepted += 1
                if abs(x) > _MAX_COORD or abs(y) > _MAX_COORD:
                    raise DivergenceError(t, (x, y))
                grow = 5.0 if ratio == 0.0 else min(5.0, 0.9 * ratio ** -0.2)
                h *= max(0.2, grow)
                if max_step is not None:
                    h = min(h, max_step)
                yield (t0, x0, y0, t, x, y)
            else:
                rejected += 1
                h *= max(0.2, 0.9 * ratio ** -0.2)
    finally:
        if stats is not None:
            stats[:] = [accepted, rejected]


@dataclass(frozen=True)
class Trajectory:
    """A computed orbit segment with the settings that produced it."""

    samples: tuple[tuple[float, float, float], ...]
    rtol: float
    atol: float
    steps_accepted: int
    steps_rejected: int
    fixed_step: float | None = None

    def dump_csv(self, target: str | TextIO) -> None:
        """Write t,x,y rows; run metadata goes first as '#' comment lines."""
        own = isinstance(target, str)
        fh = open(target, "w", encoding="utf-8") if own else target
        try:
            if self.fixed_step is None:
                fh.write(f"# adaptive rkf45, rtol={self.rtol:g}, "
                         f"atol={self.atol:g}\n")
            else:
                fh.write(f"# fixed-step rkf45, h={self.fixed_step:g}\n")
            fh.write(f"# steps accepted={self.steps_accepted}, "
                     f"rejected={self.steps_rejected}\n")
            fh.write("t,x,y\n")
            for t, x, y in self.samples:
                fh.write(f"{t!r},{x!r},{y!r}\n")
        finally:
            if own:
                fh.close()


def integrate(
    system: PlanarSystem,
    start: tuple[float, float],
    t_end: float,
    rtol: float = 1e-10,
    atol: float = 1e-12,
    *,
    fixed_step: float | None = None,
    max_step: float | None = None,
) -> Trajectory:
    """Integrate the field from ``start`` for ``t_end`` time units.

    Adaptive by default; pass ``fixed_step`` to disable error control and
    march at a constant step (used by the order-verification tests).
    """
    if t_end <= 0:
        raise ValueError("t_end must be positive")
    if rtol <= 0 or atol <= 0:
        raise ValueError("tolerances must be positive")
    deriv = _compile_field(system)
    samples = [(0.0, float(start[0]), float(start[1]))]
    if fixed_step is not None:
        if fixed_step <= 0:
            raise ValueError("fixed_step must be positive")
        t, x, y = samples[0]
        count = 0
        while t < t_end - 1e-12 * max(1.0, t_end):
            h = min(fixed_step, t_end - t)
            x, y, _, _ = _rkf45_step(deriv, x, y, h)
            if abs(x) > _MAX_COORD or abs(y) > _MAX_COORD \
                    or not (math.isfinite(x) and math.isfinite(y)):
                raise DivergenceError(t + h, (x, y))
            t += h
            count += 1
            samples.append((t, x, y))
        return Trajectory(tuple(samples), rtol, atol, count, 0, fixed_step)
    stats: list = []
    for (_, _, _, t1, x1, y1) in _adaptive_steps(
            deriv, start, t_end, rtol, atol, max_step, stats):
        samples.append((t1, x1, y1))
    return Trajectory(tuple(samples), rtol, atol, stats[0], stats[1])


# --- rigid radial structure -----------------------------------------------------


@dataclass(frozen=True)
class RadialForm:
    """Result of matching P = -y + x*f(x^2+y^2), Q = x + y*f(x^2+y^2)."""

    f: UniPoly
    matched: bool


def _as_poly_in_square_radius(flat: Poly2) -> UniPoly | None:
    """Rewrite a Poly2 as f(x^2+y^2) if exactly possible, else None.

    Expanding sum_k a_k (x^2+y^2)^k puts a_k alone on the monomial x^(2k),
    so the candidate coefficients can be read off directly and the identity
    checked by one exact re-expansion.
    """
    if flat.is_zero():
        return UniPoly([], "s")
    varnames = flat.varnames
    degree = flat.total_degree
    if degree % 2 != 0:
        return None
    coeffs = [flat.terms.get((2 * k, 0), Fraction(0))
              for k in range(degree // 2 + 1)]
    s_poly = Poly2({(2, 0): Fraction(1), (0, 2): Fraction(1)}, varnames)
    rebuilt = Poly2.zero(varnames)
    power = Poly2.constant(1, varnames)
    for a_k in coeffs:
        if a_k:
            rebuilt = rebuilt + Poly2.constant(a_k, varnames) * power
        power = power * s_poly
    if rebuilt != flat:
        return None
    return UniPoly(coeffs, "s")


def detect_radial_form(system: PlanarSystem) -> RadialForm:
    """Match the rigid rotationally symmetric structure exactly.

    Unmatched systems get ``matched=False`` and a zero placeholder f; a
    matched system with f identically zero is the rigid linear rotation.
    """
    xname, yname = system.varnames
    x = Poly2.variable(xname, system.varnames)
    y = Poly2.variable(yname, system.varnames)
    a = system.P + y
    b = system.Q - x
    quot_a = a.try_divide(x)
    quot_b = b.try_divide(y)
    if quot_a is None or quot_b is None or quot_a != quot_b:
        return RadialForm(UniPoly([], "s"), False)
    f = _as_poly_in_square_radius(quot_a)
    if f is None:
        return RadialForm(UniPoly([], "s"), False)
    return RadialForm(f, True)


@dataclass(frozen=True)
class Cycle:
    """One detected limit cycle."""

    radius: float
    period: float
    stability: str
    source: str
    radius_interval: RootInterval | None = None
    note: str = ""


@dataclass(frozen=True)
class LimitCycleReport:
    cycles: tuple[Cycle, ...]
    center_flag: bool
    notes: tuple[str, ...] = ()

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)


def _sqrt_bounds(value: Fraction, digits: int = 15) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(value) <= hi with width about 10**-digits."""
    if value < 0:
        raise ValueError("negative radicand")
    scale = 10 ** digits
    shifted = (value.numerator * scale * scale) // value.denominator
    root = math.isqrt(shifted)
    return Fraction(root, scale), Fraction(root + 2, scale)


def _exact_sqrt(value: Fraction) -> Fraction | None:
    rn = math.isqrt(value.numerator)
    rd = math.isqrt(value.denominator)
    if rn * rn == value.numerator and rd * rd == value.denominator:
        return Fraction(rn, rd)
    return None


def _flank_points(f: UniPoly, intervals, i: int) -> tuple[Fraction, Fraction]:
    """Rational points just below and just above the i-th isolated root.

    The gap between consecutive isolating intervals contains no root of f,
    so any interior point of a gap gives the off-root sign.  The only case
    needing care is a first interval whose lower endpoint sits on the region
    edge 0, where f itself may vanish; the point is then pulled below the
    root by halving until the Sturm count agrees.
    """
    iv = intervals[i]
    target_lo = iv.exact if iv.exact is not None else iv.lo
    prev_hi = intervals[i - 1].hi if i > 0 else Fraction(0)
    if target_lo > prev_hi:
        below = (prev_hi + target_lo) / 2
    else:
        below = (prev_hi + iv.hi) / 2
        while count_real_roots(f, prev_hi, below) > 0:
            below = (prev_hi + below) / 2
    if iv.exact is not None:
        if i + 1 < len(intervals):
            above = (iv.exact + intervals[i + 1].lo) / 2
        else:
            above = iv.exact + 1
    else:
        above = iv.hi
    return below, above


def exact_radial_cycles(form: RadialForm) -> LimitCycleReport:
    """Limit cycles of a rigid system, from the roots of its radial rate.

    Each positive simple root s* of f gives a cycle of radius sqrt(s*) and
    period exactly 2*pi.  Stability follows the sign of f across the root:
    rising through zero repels nearby radii, falling attracts them.  Roots
    of even multiplicity are one-sided contacts, reported as semi-stable
    and counted once.
    """
    if not form.matched:
        raise ValueError("exact radial analysis needs a matched rigid form")
    if form.f.is_zero():
        return LimitCycleReport(
            cycles=(),
            center_flag=True,
            notes=("radial rate is identically zero: every circle around "
                   "the origin is a periodic orbit, so no cycle is isolated",))
    report = positive_real_roots(form.f)
    cycles = []
    for i, iv in enumerate(report.intervals):
        mult = root_multiplicity(form.f, iv)
        below_pt, above_pt = _flank_points(form.f, report.intervals, i)
        sign_below = form.f.eval_at(below_pt)
        sign_above = form.f.eval_at(above_pt)
        note = ""
        if mult % 2 == 0:
            stability = SEMI_STABLE
            note = (f"root of multiplicity {mult}: one-sided contact, "
                    "counted as a single semi-stable cycle")
        elif sign_below < 0 < sign_above:
            stability = UNSTABLE
        elif sign_below > 0 > sign_above:
            stability = STABLE
        else:
            raise AssertionError("isolating interval endpoints straddle "
                                 "no sign change for an odd-order root")
        if mult > 1 and not note:
            note = f"root of multiplicity {mult}"
        exact_s = iv.exact if iv.exact is not None else rational_root_in(form.f, iv)
        if exact_s is not None:
            root = _exact_sqrt(exact_s)
            if root is not None:
                r_iv = RootInterval(root, root, exact=root)
            else:
                lo, hi = _sqrt_bounds(exact_s)
                r_iv = RootInterval(lo, hi)
        else:
            lo = _sqrt_bounds(iv.lo)[0]
            hi = _sqrt_bounds(iv.hi)[1]
            r_iv = RootInterval(lo, hi)
        cycles.append(Cycle(
            radius=float(r_iv.exact) if r_iv.exact is not None
            else float(r_iv.midpoint),
            period=TWO_PI,
            stability=stability,
            source=EXACT_RADIAL,
            radius_interval=r_iv,
            note=note,
        ))
    cycles.sort(key=lambda c: c.radius)
    return LimitCycleReport(tuple(cycles), center_flag=False)


# --- Poincare return map on the positive x-axis --------------------------------


def _state_at(deriv, x0: float, y0: float, span: float,
              rtol: float, atol: float) -> tuple[float, float]:
    """Integrate a short span from (x0, y0) and return the final state."""
    x, y = x0, y0
    for (_, _, _, _, x, y) in _adaptive_steps(deriv, (x0, y0), span,
                                              rtol, atol):
        pass
    return x, y


def _bisect_crossing(
    deriv, t0: float, x0: float, y0: float, t1: float,
    rtol: float, atol: float,
) -> tuple[float, float, float]:
    """Locate the y=0 crossing time inside an accepted step by bisection.

    The step start (t0, x0, y0) has y0 < 0 and the step end has y >= 0; the
    crossing time is narrowed to 1e-12 by re-integrating from the stored
    step start, then the state at the midpoint is returned.
    """
    lo, hi = 0.0, t1 - t0
    for _ in range(200):
        if hi - lo < 1e-12:
            break
        mid = 0.5 * (lo + hi)
        _, ym = _state_at(deriv, x0, y0, mid, rtol, atol)
        if ym < 0.0:
            lo = mid
        else:
            hi = mid
    tau = 0.5 * (lo + hi)
    xc, yc = _state_at(deriv, x0, y0, tau, rtol, atol)
    return t0 + tau, xc, yc


def _return_event(
    system: PlanarSystem,
    r0: float,
    *,
    rtol: float = 1e-14,
    atol: float = 1e-16,
    t_max: float = 1e3,
    r_min: float = 1e-6,
) -> tuple[float, float]:
    """First return to the positive x-axis: (crossing abscissa, crossing time).

    The section is {y = 0, x > r_min} oriented upward: a crossing counts when
    y passes from negative to nonnegative.  Starting on the section itself is
    fine, since the start has y = 0 exactly and the test needs y < 0 first.
    """
    if r0 <= 0:
        raise ValueError("r0 must be positive")
    if system.P.eval_at(0, 0) != 0 or system.Q.eval_at(0, 0) != 0:
        raise ValueError("the section is anchored at the origin, which must "
                         "be an equilibrium; translate the system first")
    deriv = _compile_field(system)
    r_min_sq = r_min * r_min
    for (t0, x0, y0, t1, x1, y1) in _adaptive_steps(
            deriv, (r0, 0.0), t_max, rtol, atol, max_step=0.2):
        if x1 * x1 + y1 * y1 < r_min_sq:
            raise EquilibriumCaptureError(t1, r_min)
        if y0 < 0.0 <= y1 and max(x0, x1) > r_min:
            tau, xc, _ = _bisect_crossing(deriv, t0, x0, y0, t1, rtol, atol)
            if xc > r_min:
                return xc, tau
    raise NoReturnError(t_max)


def poincare_return(
    system: PlanarSystem,
    r0: float,
    *,
    rtol: float = 1e-14,
    atol: float = 1e-16,
    t_max: float = 1e3,
    r_min: float = 1e-6,
) -> float:
    """Abscissa of the first oriented return to the positive x-axis.

    The default tolerances are tighter than the plain integrator's: a
    repelling cycle amplifies per-step error by the exponential of its
    positive multiplier over one period, so returning to a known invariant
    circle within 1e-8 requires local error near the rounding floor.
    """
    xc, _ = _return_event(system, r0, rtol=rtol, atol=atol,
                          t_max=t_max, r_min=r_min)
    return xc


# --- displacement scan ----------------------------------------------------------

_RETURN = "return"
_OUTWARD = "outward"
_INWARD = "inward"
_UNUSABLE = "unusable"


@dataclass(frozen=True)
class _Cell:
    r: float
    kind: str
    displacement: float = math.nan
    return_time: float = math.nan
    note: str = ""


def _evaluate_cell(system: PlanarSystem, r: float, *, rtol: float,
                   atol: float, t_max: float, r_min: float) -> _Cell:
    try:
        r1, tau = _return_event(system, r, rtol=rtol, atol=atol,
                                t_max=t_max, r_min=r_min)
    except DivergenceError as exc:
        lx, ly = exc.state
        if math.hypot(lx, ly) > r:
            return _Cell(r, _OUTWARD,
                         note="escaped outward before returning")
        return _Cell(r, _UNUSABLE, note=str(exc))
    except EquilibriumCaptureError:
        return _Cell(r, _INWARD, note="spiralled into the equilibrium")
    except NoReturnError as exc:
        return _Cell(r, _UNUSABLE, note=str(exc))
    return _Cell(r, _RETURN, displacement=r1 - r, return_time=tau)


def _cell_sign(cell: _Cell, d_tol: float) -> int | None:
    """Displacement sign for bracketing: +1, -1, 0 (tiny), None (unusable)."""
    if cell.kind == _OUTWARD:
        return 1
    if cell.kind == _INWARD:
        return -1
    if cell.kind == _UNUSABLE:
        return None
    if cell.displacement > d_tol:
        return 1
    if cell.displacement < -d_tol:
        return -1
    return 0


def _group_note(kind: str, cells: list[_Cell]) -> str:
    rs = [c.r for c in cells]
    what = {
        _OUTWARD: "escaped outward before first return (counted as "
                  "outward displacement)",
        _INWARD: "fell into the equilibrium (counted as inward displacement)",
        _UNUSABLE: "produced no usable displacement",
    }[kind]
    if len(rs) == 1:
        return f"grid radius {rs[0]:.6g} {what}"
    return (f"{len(rs)} grid radii in [{min(rs):.6g}, {max(rs):.6g}] {what}")


def find_cycles_numeric(
    system: PlanarSystem,
    r_range: tuple[float, float],
    n_scan: int,
    *,
    rtol: float = 1e-10,
    atol: float = 1e-12,
    t_max: float = 1e3,
    r_min: float = 1e-6,
    d_tol: float = 1e-9,
) -> LimitCycleReport:
    """Scan the return-map displacement d(r) for sign changes.

    The grid is geometric over the annulus.  Sign-change brackets are bisected
    until |d| < d_tol or the bracket is narrower than 1e-12; a grid cell whose
    trajectory blows up outward, or falls into the equilibrium, still carries
    a usable displacement sign, so cycles bordering a blow-up region (any
    repelling cycle of a field with fast far-field growth) are still found.
    The center flag is set when every cell that did return moved by less than
    1e-8, which is the continuum-of-periodic-orbits signature.
    """
    lo, hi = sorted((float(r_range[0]), float(r_range[1])))
    if lo <= 0:
        raise ValueError("the scanned annulus must have positive inner radius")
    if n_scan < 2:
        raise ValueError("n_scan must be at least 2")
    opts = dict(rtol=rtol, atol=atol, t_max=t_max, r_min=r_min)
    ratio = hi / lo
    cells = [
        _evaluate_cell(system, lo * ratio ** (k / (n_scan - 1)), **opts)
        for k in range(n_scan)
    ]

    notes: list[str] = [
        f"displacement scan over the annulus [{lo:.6g}, {hi:.6g}] with "
        f"{n_scan} geometric grid radii",
        "absence of cycles is certified only inside the scanned annulus",
    ]
    for kind in (_OUTWARD, _INWARD, _UNUSABLE):
        group = [c for c in cells if c.kind == kind]
        if group:
            notes.append(_group_note(kind, group))

    cycles: list[Cycle] = []
    for left, right in zip(cells, cells[1:]):
        s_left, s_right = _cell_sign(left, d_tol), _cell_sign(right, d_tol)
        if s_left is None or s_right is None or s_left == 0 or s_right == 0:
            continue
        if s_left == s_right:
            continue
        found = _bisect_bracket(system, left, right, s_left, d_tol, opts)
        if found is None:
            notes.append(f"bracket [{left.r:.6g}, {right.r:.6g}] could not "
                         "be refined (integration failed inside it)")
            continue
        cycles.append(found)

    cycles.sort(key=lambda c: c.radius)
    deduped: list[Cycle] = []
    for cyc in cycles:
        if deduped and abs(cyc.radius - deduped[-1].radius) < 1e-6:
            continue
        deduped.append(cyc)

    returned = [c for c in cells if c.kind == _RETURN]
    center_flag = (
        not deduped
        and bool(returned)
        and all(abs(c.displacement) < 1e-8 for c in returned)
    )
    return LimitCycleReport(tuple(deduped), center_flag, tuple(notes))


def _bisect_bracket(
    system: PlanarSystem,
    left: _Cell,
    right: _Cell,
    s_left: int,
    d_tol: float,
    opts: dict,
) -> Cycle | None:
    """Shrink one sign-change bracket to a cycle radius."""
    lo, hi = left.r, right.r
    period = math.nan
    for cell in (left, right):
        if cell.kind == _RETURN:
            period = cell.return_time
    for _ in range(200):
        if hi - lo < 1e-12:
            break
        mid = 0.5 * (lo + hi)
        cell = _evaluate_cell(system, mid, **opts)
        sign = _cell_sign(cell, d_tol)
        if cell.kind == _RETURN:
            period = cell.return_time
            if abs(cell.displacement) < d_tol:
                lo = hi = mid
                break
        if sign is None:
            return None
        if sign == s_left:
            lo = mid
        else:
            hi = mid
    r_star = 0.5 * (lo + hi)
    stability = UNSTABLE if s_left < 0 else STABLE
    return Cycle(radius=r_star, period=period, stability=stability,
                 source=NUMERIC_POINCARE)
