"""Certified real solutions of 2x2 polynomial systems and what they imply.

This module answers three questions exactly:

* where is the curvature denominator zero (the candidate divergence set),
* which of those points are genuine divergences of |R| (numerator nonzero),
* what sign does R take at and therefore near each equilibrium.

The real-solution engine works in two stages.  Elimination: the resultant in
each variable direction projects every common real zero onto a real root of a
univariate eliminant (the resultant lies in the ideal generated by the pair,
so the projection cannot miss a zero).  Certification: each candidate cell of
the root grid is then either rejected or certified.  Rational candidates are
settled by exact evaluation; cells with one rational coordinate reduce to a
univariate gcd; fully irrational cells go through an exact interval Newton
step (rational interval arithmetic, no floating point), whose strict
containment conclusion proves existence and uniqueness inside the box.

Nothing in this module is heuristic: every "empty" is a certificate, every
point carries an enclosure, and anything the procedure cannot settle is
reported as unresolved rather than guessed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .curvature import (
    CurvatureData,
    PointValue,
    RationalFunction,
    SINGULAR,
    VALUE,
)
from .elimination import resultant
from .polynomials import Poly2, Rat, UniPoly, _to_fraction
from .realroots import (
    DEFAULT_WIDTH,
    RootInterval,
    count_real_roots,
    isolate_real_roots,
    refine_root,
    unipoly_gcd,
)
from .systems import PlanarSystem

# branch status values
EMPTY_CERTIFIED = "empty_certified"
POINTS = "points"
DEGENERATE_BRANCH = "degenerate_branch"

# neighborhood sign verdicts
POSITIVE_NEIGHBORHOOD = "positive_neighborhood"
NEGATIVE_NEIGHBORHOOD = "negative_neighborhood"
ZERO_AT_POINT = "zero_at_point"
NOT_CONTINUOUS_HERE = "not_continuous_here"

# assertion A verdicts
A_HOLDS = "holds"
A_FAILS_R_NEGATIVE = "fails_R_negative"
A_FAILS_NO_SINGULARITY = "fails_no_singularity"
A_FAILS_INDETERMINATE = "fails_indeterminate"


# --- rational interval helpers ------------------------------------------------

Interval = tuple[Fraction, Fraction]


def _ipoint(c: Fraction) -> Interval:
    return (c, c)


def _isub(a: Interval, b: Interval) -> Interval:
    return (a[0] - b[1], a[1] - b[0])


def _imul(a: Interval, b: Interval) -> Interval:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(products), max(products))


def _irecip(a: Interval) -> Interval:
    if a[0] <= 0 <= a[1]:
        raise ZeroDivisionError("interval contains zero")
    return (1 / a[1], 1 / a[0])


def _iintersect(a: Interval, b: Interval) -> Interval | None:
    lo, hi = max(a[0], b[0]), min(a[1], b[1])
    return (lo, hi) if lo <= hi else None


def _istrictly_inside(a: Interval, b: Interval) -> bool:
    return b[0] < a[0] and a[1] < b[1]


# --- result shapes ------------------------------------------------------------


@dataclass(frozen=True)
class PointBox:
    """A real point enclosed coordinatewise by rational intervals.

    Either coordinate may be pinned exactly (RootInterval.exact), in which
    case the enclosure is degenerate in that direction.
    """

    x: RootInterval
    y: RootInterval

    @property
    def is_exact(self) -> bool:
        return self.x.exact is not None and self.y.exact is not None

    def float_point(self) -> tuple[float, float]:
        return (float(self.x.midpoint), float(self.y.midpoint))

    def intervals(self) -> tuple[Interval, Interval]:
        return ((self.x.lo, self.x.hi), (self.y.lo, self.y.hi))

    def overlaps(self, other: PointBox) -> bool:
        return (_iintersect(self.intervals()[0], other.intervals()[0]) is not None
                and _iintersect(self.intervals()[1], other.intervals()[1]) is not None)

    def reflected(self) -> PointBox:
        def flip(iv: RootInterval) -> RootInterval:
            return RootInterval(-iv.hi, -iv.lo,
                                None if iv.exact is None else -iv.exact)
        return PointBox(flip(self.x), flip(self.y))


@dataclass(frozen=True)
class BranchSolutions:
    """Real common zeros of one polynomial pair, with certification data."""

    f: Poly2
    g: Poly2
    status: str
    points: tuple[PointBox, ...] = ()
    unresolved: tuple[PointBox, ...] = ()
    eliminant_x: UniPoly | None = None
    eliminant_y: UniPoly | None = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class DivergencePoint:
    """A certified zero of the denominator, with the numerator's verdict there."""

    box: PointBox
    numerator_nonzero: bool
    branch_indices: tuple[int, ...]
    note: str = ""


@dataclass(frozen=True)
class SingularLocusReport:
    """Full decomposition of the denominator's real zero set."""

    subsystems: tuple[tuple[Poly2, Poly2], ...]
    branches: tuple[BranchSolutions, ...]
    divergence_points: tuple[DivergencePoint, ...]
    unresolved: tuple[PointBox, ...]
    notes: tuple[str, ...]

    @property
    def all_branches_empty(self) -> bool:
        return all(b.status == EMPTY_CERTIFIED for b in self.branches)

    @property
    def certified_divergence_count(self) -> int:
        return sum(1 for p in self.divergence_points if p.numerator_nonzero)


@dataclass(frozen=True)
class EquilibriumCertificate:
    """Exact evaluation record at a claimed equilibrium point."""

    point: tuple[Fraction, Fraction]
    P_value: Fraction
    Q_value: Fraction
    R_at_point: PointValue

    @property
    def valid(self) -> bool:
        return self.P_value == 0 and self.Q_value == 0


@dataclass(frozen=True)
class AssertionReport:
    """Executable verdicts for the two curvature-based cycle criteria.

    ``assertion_A`` records whether R is positive at (hence near) every given
    equilibrium while |R| also diverges somewhere; ``assertion_B_count`` is
    the number of certified isolated divergence points, with points forming
    opposite pairs (p, -p) counted separately but tallied in
    ``symmetric_pairs``.
    """

    assertion_A: str
    assertion_B_count: int
    symmetric_pairs: int
    equilibrium_signs: tuple[tuple[tuple[Fraction, Fraction], str], ...]
    notes: tuple[str, ...] = ()


# --- the 2x2 real-solution engine ---------------------------------------------


def _specialize(poly: Poly2, var: str, value: Fraction) -> UniPoly:
    """Fix one variable at an exact rational value; univariate result."""
    rows = poly.coeffs_in(var)
    survivor = poly.varnames[1 - poly._axis(var)]
    out = UniPoly.zero(survivor)
    power = Fraction(1)
    for row in rows:
        out = out + row.scale(power)
        power *= value
    return out


def _certify_exact(f: Poly2, g: Poly2, cx: Fraction, cy: Fraction) -> bool:
    return f.eval_at(cx, cy) == 0 and g.eval_at(cx, cy) == 0


def _certify_half_exact(
    f: Poly2, g: Poly2, exact_var: str, exact_value: Fraction, iv: RootInterval
) -> RootInterval | None:
    """Certify a cell with one rational coordinate via a univariate gcd.

    Returns a (possibly refined) interval for the free coordinate when the
    pair has a common zero there, else None.  Exact: a common zero on the
    line exists iff the gcd of the two specializations vanishes, and the
    isolating interval can hold at most one such zero.
    """
    fs = _specialize(f, exact_var, exact_value)
    gs = _specialize(g, exact_var, exact_value)
    if fs.is_zero() and gs.is_zero():
        # the whole line solves the pair; caller treats this as degenerate
        raise _LineOfSolutions(exact_var, exact_value)
    if fs.is_zero():
        h = gs
    elif gs.is_zero():
        h = fs
    else:
        h = unipoly_gcd(fs, gs)
    if h.degree <= 0:
        return None
    if iv.exact is not None:
        return iv if h.eval_at(iv.exact) == 0 else None
    if count_real_roots(h, iv.lo, iv.hi) == 0:
        return None
    # tighten hard now that the gcd pins the coordinate; downstream numerator
    # checks evaluate over this box and want it sharp
    return refine_root(h, iv, Fraction(1, 10**30))


class _LineOfSolutions(Exception):
    def __init__(self, var: str, value: Fraction):
        self.var = var
        self.value = value
        super().__init__(f"entire line {var} = {value} solves the pair")


def _interval_newton_step(
    f: Poly2, g: Poly2,
    fx: Poly2, fy: Poly2, gx: Poly2, gy: Poly2,
    ix: Interval, iy: Interval,
) -> tuple[str, Interval, Interval]:
    """One exact interval Newton step.  Returns (verdict, nx, ny).

    verdict "certified": the Newton image lies strictly inside the box, which
    proves a unique zero exists in it.  "rejected": image and box are
    disjoint, no zero.  "unknown": neither, caller should shrink and retry.
    The returned intervals are the (intersected) refinement when available.
    """
    for poly in (f, g):
        lo, hi = poly.eval_box(ix, iy)
        if lo > 0 or hi < 0:
            return ("rejected", ix, iy)
    ja = fx.eval_box(ix, iy)
    jb = fy.eval_box(ix, iy)
    jc = gx.eval_box(ix, iy)
    jd = gy.eval_box(ix, iy)
    det = _isub(_imul(ja, jd), _imul(jb, jc))
    if det[0] <= 0 <= det[1]:
        return ("unknown", ix, iy)
    mx = (ix[0] + ix[1]) / 2
    my = (iy[0] + iy[1]) / 2
    f_m = _ipoint(f.eval_at(mx, my))
    g_m = _ipoint(g.eval_at(mx, my))
    inv_det = _irecip(det)
    nx = _isub(_ipoint(mx), _imul(_isub(_imul(jd, f_m), _imul(jb, g_m)), inv_det))
    ny = _isub(_ipoint(my), _imul(_isub(_imul(ja, g_m), _imul(jc, f_m)), inv_det))
    cut_x = _iintersect(nx, ix)
    cut_y = _iintersect(ny, iy)
    if cut_x is None or cut_y is None:
        return ("rejected", ix, iy)
    if _istrictly_inside(nx, ix) and _istrictly_inside(ny, iy):
        return ("certified", cut_x, cut_y)
    return ("unknown", cut_x, cut_y)


def _dyadic_outward(iv: Interval, bits: int = 128) -> Interval:
    """Round an interval's endpoints outward to denominator 2**bits.

    Exact interval arithmetic grows endpoint fractions multiplicatively, so
    repeated Newton steps produce numbers with thousands of digits.  Rounding
    outward after each step keeps every later evaluation cheap while widening
    the enclosure by at most 2**(1-bits), far below the working widths here.
    """
    scale = 1 << bits
    lo, hi = iv
    if lo.denominator.bit_length() > bits:
        lo = Fraction(math.floor(lo * scale), scale)
    if hi.denominator.bit_length() > bits:
        hi = Fraction(math.ceil(hi * scale), scale)
    return (lo, hi)


def _newton_contract(
    f: Poly2, g: Poly2, partials, ix: Interval, iy: Interval,
    target_width: Fraction, max_steps: int = 60,
) -> tuple[Interval, Interval]:
    """Shrink a certified box by repeated Newton intersection."""
    fx, fy, gx, gy = partials
    for _ in range(max_steps):
        if ix[1] - ix[0] <= target_width and iy[1] - iy[0] <= target_width:
            break
        verdict, nx, ny = _interval_newton_step(f, g, fx, fy, gx, gy, ix, iy)
        if verdict == "rejected":  # cannot happen for a certified box
            break
        nx, ny = _dyadic_outward(nx), _dyadic_outward(ny)
        if nx == ix and ny == iy:
            break
        ix, iy = nx, ny
    return ix, iy


def _leading_coefficient_notes(
    f: Poly2, g: Poly2, eliminate: str
) -> tuple[list[str], list[tuple[Fraction, UniPoly]]]:
    """The degenerate-case analysis behind an emptiness certificate.

    Where the leading coefficients of both polynomials (as polynomials in the
    eliminated variable) vanish simultaneously, the Sylvester projection
    degenerates, so those lines are examined separately and exactly.  Returns
    human-readable notes plus any common zeros found on such lines as
    (value-of-survivor, gcd-of-specializations) pairs for the caller to
    fold in (none arise when the eliminant has no real roots at all, since
    the resultant still lies in the ideal of the pair).
    """
    notes: list[str] = []
    extra: list[tuple[Fraction, UniPoly]] = []
    fc = f.coeffs_in(eliminate)
    gc = g.coeffs_in(eliminate)
    if len(fc) <= 1 or len(gc) <= 1:
        notes.append(
            f"lc check ({eliminate}): one input is constant in {eliminate}; "
            "direct convention used, no degenerate lines"
        )
        return notes, extra
    lf, lg = fc[-1], gc[-1]
    if lf.constant_value() is not None or lg.constant_value() is not None:
        notes.append(
            f"lc check ({eliminate}): a leading coefficient is a nonzero "
            "constant, so the leading coefficients never vanish together"
        )
        return notes, extra
    common = unipoly_gcd(lf, lg)
    if common.degree <= 0 or count_real_roots(common) == 0:
        notes.append(
            f"lc check ({eliminate}): leading coefficients have no common "
            "real zero"
        )
        return notes, extra
    survivor = common.var
    report = isolate_real_roots(common)
    for iv in report.intervals:
        if iv.exact is not None:
            fs = _specialize(f, survivor, iv.exact)
            gs = _specialize(g, survivor, iv.exact)
            if fs.is_zero() and gs.is_zero():
                notes.append(
                    f"lc check ({eliminate}): the line {survivor} = {iv.exact} "
                    "solves the pair identically (degenerate)"
                )
                extra.append((iv.exact, UniPoly.zero(eliminate)))
                continue
            h = gs if fs.is_zero() else (fs if gs.is_zero() else unipoly_gcd(fs, gs))
            if h.degree > 0 and count_real_roots(h) > 0:
                extra.append((iv.exact, h))
                notes.append(
                    f"lc check ({eliminate}): common zeros found on the line "
                    f"{survivor} = {iv.exact}"
                )
            else:
                notes.append(
                    f"lc check ({eliminate}): line {survivor} = {iv.exact} "
                    "carries no common zero (specialized gcd has no real root)"
                )
        else:
            notes.append(
                f"lc check ({eliminate}): an irrational common lc zero near "
                f"{survivor} = {float(iv.midpoint):.6g} is excluded because "
                "the eliminant, which lies in the ideal of the pair, has no "
                "real root there"
            )
    return notes, extra


def real_solutions_2x2(
    f: Poly2,
    g: Poly2,
    width: Fraction = DEFAULT_WIDTH,
) -> BranchSolutions:
    """All real common zeros of two bivariate polynomials, certified.

    The outcome is one of: EMPTY_CERTIFIED (eliminant in some direction is
    nonzero with no real roots, leading-coefficient degeneracies checked),
    POINTS (each listed point certified exactly or by interval Newton;
    anything unsettled is listed as unresolved, never counted), or
    DEGENERATE_BRANCH (the common zero set is not finite: shared factor or
    a full line).
    """
    if f.varnames != g.varnames:
        raise ValueError(f"variable names differ: {f.varnames} vs {g.varnames}")
    if f.is_zero() and g.is_zero():
        raise ValueError("both polynomials are identically zero")
    a, b = f.varnames

    if f.is_zero() or g.is_zero():
        other = g if f.is_zero() else f
        if other.constant_value() is not None:
            return BranchSolutions(
                f, g, EMPTY_CERTIFIED,
                notes=("one polynomial is zero, the other a nonzero constant",))
        return BranchSolutions(
            f, g, DEGENERATE_BRANCH,
            notes=("one polynomial is identically zero; the common zero set "
                   "is the other's zero curve (not zero-dimensional)",))

    for poly, name in ((f, "first"), (g, "second")):
        cv = poly.constant_value()
        if cv is not None:  # nonzero constant (zero case handled above)
            return BranchSolutions(
                f, g, EMPTY_CERTIFIED,
                notes=(f"the {name} polynomial is the nonzero constant {cv}",))

    # both depend on only one (and the same) variable: zero set is a union of
    # lines when the univariate gcd has real roots
    for var, kind in ((a, "vertical"), (b, "horizontal")):
        other_var = b if var == a else a
        if f.degree_in(other_var) <= 0 and g.degree_in(other_var) <= 0:
            uf = f.coeffs_in(other_var)[0]
            ug = g.coeffs_in(other_var)[0]
            h = unipoly_gcd(uf, ug)
            if h.degree > 0 and count_real_roots(h) > 0:
                return BranchSolutions(
                    f, g, DEGENERATE_BRANCH,
                    notes=(f"both polynomials depend only on {var}; common "
                           f"zeros form {kind} lines",))
            return BranchSolutions(
                f, g, EMPTY_CERTIFIED,
                notes=(f"both polynomials depend only on {var} and share no "
                       "real root in it",))

    eliminant_b = resultant(f, g, a)  # univariate in b
    eliminant_a = resultant(f, g, b)  # univariate in a
    if eliminant_a.is_zero() or eliminant_b.is_zero():
        return BranchSolutions(
            f, g, DEGENERATE_BRANCH,
            eliminant_x=None if eliminant_a.is_zero() else eliminant_a,
            eliminant_y=None if eliminant_b.is_zero() else eliminant_b,
            notes=("a resultant vanishes identically: the pair shares a "
                   "factor, so the common zero set is not finite",))

    roots_a = isolate_real_roots(eliminant_a, width=width)
    roots_b = isolate_real_roots(eliminant_b, width=width)

    notes: list[str] = []
    if roots_a.count == 0 or roots_b.count == 0:
        empty_dir = a if roots_a.count == 0 else b
        notes.append(
            f"eliminant in {empty_dir} has no real roots; since the "
            "resultant lies in the ideal of the pair, no common real zero "
            "can exist"
        )
        for eliminate in (a, b):
            lc_notes, extra = _leading_coefficient_notes(f, g, eliminate)
            notes.extend(lc_notes)
            if extra:  # defensive: cannot happen when an eliminant is rootless
                notes.append(
                    "inconsistency: a leading-coefficient line carries zeros "
                    "despite a rootless eliminant"
                )
        return BranchSolutions(
            f, g, EMPTY_CERTIFIED,
            eliminant_x=eliminant_a, eliminant_y=eliminant_b,
            notes=tuple(notes))

    # candidate grid: every common real zero projects into one cell
    partials = (f.partial(a), f.partial(b), g.partial(a), g.partial(b))
    points: list[PointBox] = []
    unresolved: list[PointBox] = []
    try:
        for ivx in roots_a.intervals:
            for ivy in roots_b.intervals:
                outcome = _certify_cell(
                    f, g, partials, ivx, ivy, eliminant_a, eliminant_b, width)
                if outcome is None:
                    continue
                kind, box = outcome
                (points if kind == "point" else unresolved).append(box)
    except _LineOfSolutions as line:
        return BranchSolutions(
            f, g, DEGENERATE_BRANCH,
            eliminant_x=eliminant_a, eliminant_y=eliminant_b,
            notes=(f"the entire line {line.var} = {line.value} solves the "
                   "pair",))
    if unresolved:
        notes.append(
            f"{len(unresolved)} candidate cell(s) could not be certified or "
            "rejected at the smallest refinement width; they are excluded "
            "from every count"
        )
    points.sort(key=lambda pb: (pb.x.lo, pb.y.lo))
    return BranchSolutions(
        f, g, POINTS,
        points=tuple(points), unresolved=tuple(unresolved),
        eliminant_x=eliminant_a, eliminant_y=eliminant_b,
        notes=tuple(notes))


def _certify_cell(
    f: Poly2,
    g: Poly2,
    partials: tuple[Poly2, Poly2, Poly2, Poly2],
    ivx: RootInterval,
    ivy: RootInterval,
    eliminant_a: UniPoly,
    eliminant_b: UniPoly,
    width: Fraction,
) -> tuple[str, PointBox] | None:
    """Settle one candidate cell: ("point", box), ("unresolved", box), or None."""
    a, b = f.varnames
    if ivx.exact is not None and ivy.exact is not None:
        if _certify_exact(f, g, ivx.exact, ivy.exact):
            return ("point", PointBox(ivx, ivy))
        return None
    if ivx.exact is not None:
        refined = _certify_half_exact(f, g, a, ivx.exact, ivy)
        return None if refined is None else ("point", PointBox(ivx, refined))
    if ivy.exact is not None:
        refined = _certify_half_exact(f, g, b, ivy.exact, ivx)
        return None if refined is None else ("point", PointBox(refined, ivy))

    ix, iy = (ivx.lo, ivx.hi), (ivy.lo, ivy.hi)
    shrink_width = width
    for _ in range(5):
        verdict, nx, ny = _interval_newton_step(
            f, g, partials[0], partials[1], partials[2], partials[3], ix, iy)
        if verdict == "rejected":
            return None
        if verdict == "certified":
            nx, ny = _newton_contract(f, g, partials, nx, ny, width)
            return ("point", PointBox(RootInterval(nx[0], nx[1]),
                                      RootInterval(ny[0], ny[1])))
        # shrink the coordinate enclosures and retry
        shrink_width = shrink_width * shrink_width
        rx = refine_root(eliminant_a, RootInterval(ix[0], ix[1]), shrink_width)
        ry = refine_root(eliminant_b, RootInterval(iy[0], iy[1]), shrink_width)
        if rx.exact is not None or ry.exact is not None:
            # a coordinate collapsed to an exact rational during refinement
            if rx.exact is not None:
                refined = _certify_half_exact(f, g, a, rx.exact, ry)
                return None if refined is None else ("point", PointBox(rx, refined))
            refined = _certify_half_exact(f, g, b, ry.exact, rx)
            return None if refined is None else ("point", PointBox(refined, ry))
        ix, iy = (rx.lo, rx.hi), (ry.lo, ry.hi)
    return ("unresolved", PointBox(RootInterval(ix[0], ix[1]),
                                   RootInterval(iy[0], iy[1])))


# --- singular locus of |R| -----------------------------------------------------


def singular_locus(
    curv: CurvatureData,
    width: Fraction = DEFAULT_WIDTH,
) -> SingularLocusReport:
    """Decompose the real zero set of the curvature denominator.

    The determinant is a product of two sums of squares, so its zeros are the
    union over the two Jacobian-column pairs of their common real zeros.
    Each certified point is then judged against the structurally reduced
    curvature: |R| diverges there when the reduced denominator still vanishes
    (the metric factor that is zero at the point survived cancellation) while
    the reduced numerator does not.
    """
    subsystems = tuple((br.first, br.second) for br in curv.branches)
    branch_results: list[BranchSolutions] = []
    located: list[tuple[PointBox, tuple[int, ...]]] = []
    unresolved: list[PointBox] = []
    notes: list[str] = []
    for idx, (first, second) in enumerate(subsystems):
        bs = real_solutions_2x2(first, second, width=width)
        branch_results.append(bs)
        if bs.status == DEGENERATE_BRANCH:
            notes.append(f"subsystem {idx}: degenerate branch ({bs.notes[0]})")
            continue
        for box in bs.points:
            located.append((box, (idx,)))
        unresolved.extend(bs.unresolved)

    merged_boxes = _merge_across_branches(located)
    divergence = [
        _divergence_verdict(curv, box, indices) for box, indices in merged_boxes
    ]
    pair_count, pair_notes = _symmetric_pair_count(divergence, subsystems)
    notes.extend(pair_notes)
    return SingularLocusReport(
        subsystems=subsystems,
        branches=tuple(branch_results),
        divergence_points=tuple(divergence),
        unresolved=tuple(unresolved),
        notes=tuple(notes),
    )


def _divergence_verdict(
    curv: CurvatureData,
    box: PointBox,
    branch_indices: tuple[int, ...],
) -> DivergencePoint:
    """Judge one certified denominator zero against the reduced curvature."""
    reduced = curv.reduced
    exponents = reduced.den_exponents
    if box.is_exact:
        outcome = reduced.function.evaluate(box.x.exact, box.y.exact)
        if outcome.kind == SINGULAR:
            return DivergencePoint(box, True, branch_indices)
        if outcome.kind == VALUE:
            return DivergencePoint(
                box, False, branch_indices,
                "removable: the reduced curvature is finite at this point")
        return DivergencePoint(
            box, False, branch_indices,
            "reduced numerator and denominator both vanish: divergence "
            "not certified")

    den_still_zero = any(exponents[i] > 0 for i in branch_indices)
    if not den_still_zero:
        return DivergencePoint(
            box, False, branch_indices,
            "removable: every metric factor vanishing here cancelled out of "
            "the denominator")
    numerator = reduced.function.numerator
    ix, iy = box.intervals()
    lo, hi = numerator.eval_box(ix, iy)
    if lo > 0 or hi < 0:
        return DivergencePoint(box, True, branch_indices)
    # contract the enclosure with the first certifying branch's pair and retry
    first, second = curv.branches[branch_indices[0]].first, \
        curv.branches[branch_indices[0]].second
    a, b = first.varnames
    partials = (first.partial(a), first.partial(b),
                second.partial(a), second.partial(b))
    if box.x.exact is None and box.y.exact is None:
        nx, ny = _newton_contract(first, second, partials, ix, iy,
                                  Fraction(1, 10**30))
        box = PointBox(RootInterval(nx[0], nx[1]), RootInterval(ny[0], ny[1]))
        lo, hi = numerator.eval_box(nx, ny)
        if lo > 0 or hi < 0:
            return DivergencePoint(box, True, branch_indices)
    return DivergencePoint(
        box, False, branch_indices,
        "numerator enclosure straddles zero at the smallest width; "
        "divergence not certified")


def _merge_across_branches(
    located: list[tuple[PointBox, tuple[int, ...]]],
) -> list[tuple[PointBox, tuple[int, ...]]]:
    """Deduplicate points certified by more than one subsystem."""
    merged: list[tuple[PointBox, tuple[int, ...]]] = []
    for box, indices in sorted(located, key=lambda t: (t[0].x.lo, t[0].y.lo)):
        for i, (kept, kept_idx) in enumerate(merged):
            if box.is_exact and kept.is_exact:
                same = (box.x.exact == kept.x.exact
                        and box.y.exact == kept.y.exact)
            else:
                # boxes are certified isolating enclosures; overlap is
                # treated as identity (each encloses exactly one zero)
                same = box.overlaps(kept)
            if same:
                merged[i] = (kept, tuple(sorted(set(kept_idx + indices))))
                break
        else:
            merged.append((box, indices))
    return merged


def _symmetric_pair_count(
    points: list[DivergencePoint],
    subsystems: tuple[tuple[Poly2, Poly2], ...],
) -> tuple[int, list[str]]:
    """Count unordered pairs {p, -p} among certified divergence points."""
    notes: list[str] = []
    if _all_pairs_parity_symmetric(subsystems):
        notes.append(
            "every subsystem polynomial has pure parity, so the singular "
            "set is symmetric under (x, y) -> (-x, -y)"
        )
    used: set[int] = set()
    count = 0
    for i, p in enumerate(points):
        if i in used or not p.numerator_nonzero:
            continue
        refl = p.box.reflected()
        if p.box.is_exact and p.box.x.exact == 0 and p.box.y.exact == 0:
            continue  # the origin is its own opposite, not a pair
        for j in range(i + 1, len(points)):
            if j in used or not points[j].numerator_nonzero:
                continue
            q = points[j]
            if p.box.is_exact and q.box.is_exact:
                match = (q.box.x.exact == -p.box.x.exact
                         and q.box.y.exact == -p.box.y.exact)
            else:
                match = q.box.overlaps(refl)
            if match:
                used.add(i)
                used.add(j)
                count += 1
                break
    return count, notes


def _all_pairs_parity_symmetric(
    subsystems: tuple[tuple[Poly2, Poly2], ...],
) -> bool:
    """True when every polynomial has all-even or all-odd total degrees."""
    for pair in subsystems:
        for poly in pair:
            if poly.is_zero():
                continue
            parities = {(i + j) % 2 for i, j in poly.terms}
            if len(parities) > 1:
                return False
    return True


# --- equilibria and the assertion criteria -------------------------------------


def verify_equilibrium(
    system: PlanarSystem,
    point: tuple[Rat, Rat],
    curvature: RationalFunction | None = None,
) -> EquilibriumCertificate:
    """Exact equilibrium check at a rational point, with R's outcome there."""
    px, py = _to_fraction(point[0]), _to_fraction(point[1])
    p_val = system.P.eval_at(px, py)
    q_val = system.Q.eval_at(px, py)
    if curvature is None:
        from .curvature import scalar_curvature
        curvature = scalar_curvature(system).reduced.function
    r_outcome = curvature.evaluate(px, py)
    return EquilibriumCertificate((px, py), p_val, q_val, r_outcome)


def find_equilibria(system: PlanarSystem,
                    width: Fraction = DEFAULT_WIDTH) -> BranchSolutions:
    """Certified equilibria (common zeros of the two components).

    Raises ValueError when the equilibrium set is not zero-dimensional,
    since none of the downstream criteria are meaningful then.
    """
    result = real_solutions_2x2(system.P, system.Q, width=width)
    if result.status == DEGENERATE_BRANCH:
        raise ValueError(
            "equilibrium set is not zero-dimensional: " + "; ".join(result.notes))
    return result


def sign_of_R_near_equilibrium(
    curv: CurvatureData,
    point: tuple[Rat, Rat],
) -> str:
    """Sign verdict of R at a verified equilibrium, extended by continuity.

    A nonzero exact value at a point where the denominator is nonzero keeps
    its sign on a whole neighborhood.  An exact zero extends to no sign; a
    vanishing denominator gives no continuity at all.
    """
    px, py = _to_fraction(point[0]), _to_fraction(point[1])
    system = curv.system
    if not system.is_equilibrium(px, py):
        raise ValueError(f"({px}, {py}) is not an equilibrium of the system")
    outcome = curv.reduced.function.evaluate(px, py)
    if outcome.kind != VALUE:
        return NOT_CONTINUOUS_HERE
    if outcome.value > 0:
        return POSITIVE_NEIGHBORHOOD
    if outcome.value < 0:
        return NEGATIVE_NEIGHBORHOOD
    return ZERO_AT_POINT


def assertion_report(
    curv: CurvatureData,
    equilibria: list[tuple[Rat, Rat]],
    locus: SingularLocusReport | None = None,
) -> AssertionReport:
    """Evaluate both curvature-based criteria against certified facts.

    The first criterion holds only when R is positive at (hence near) every
    supplied equilibrium and at least one divergence point of |R| is
    certified.  The second is the certified divergence count itself.
    """
    if locus is None:
        locus = singular_locus(curv)
    signs = []
    for point in equilibria:
        cert = verify_equilibrium(curv.system, point, curv.reduced.function)
        if not cert.valid:
            raise ValueError(f"({cert.point[0]}, {cert.point[1]}) is not an "
                             "equilibrium; cannot evaluate the criteria there")
        signs.append((cert.point, sign_of_R_near_equilibrium(curv, cert.point)))

    b_count = locus.certified_divergence_count
    pair_count, _ = _symmetric_pair_count(
        list(locus.divergence_points), locus.subsystems)
    notes: list[str] = []
    if locus.unresolved:
        notes.append(
            f"{len(locus.unresolved)} unresolved enclosure(s) excluded from "
            "the divergence count")
    kinds = {verdict for _, verdict in signs}
    if NEGATIVE_NEIGHBORHOOD in kinds:
        verdict_a = A_FAILS_R_NEGATIVE
    elif NOT_CONTINUOUS_HERE in kinds or ZERO_AT_POINT in kinds or not signs:
        verdict_a = A_FAILS_INDETERMINATE
        if ZERO_AT_POINT in kinds:
            notes.append("R is exactly zero at an equilibrium: no sign "
                         "extends to a neighborhood")
        if not signs:
            notes.append("no equilibria supplied")
    elif b_count == 0:
        verdict_a = A_FAILS_NO_SINGULARITY
    else:
        verdict_a = A_HOLDS
    return AssertionReport(
        assertion_A=verdict_a,
        assertion_B_count=b_count,
        symmetric_pairs=pair_count,
        equilibrium_signs=tuple(signs),
        notes=tuple(notes),
    )
