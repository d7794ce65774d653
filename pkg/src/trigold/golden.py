"""Everything evaluated at and around the golden point q = tau+1.

Tutte bound and ratio (exact in Q(sqrt5)), per-family ratio formulas,
asymptotic constants with the order-of-limits dominance rule, Tutte-Beraha
numbers, the bipyramid equimodular locus, and Potts ground-state entropy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import mpmath as mp

from .errors import (
    AllCoefficientsVanish,
    DegreeMismatch,
    InvalidParameter,
    OutOfRange,
)
from .exactmath import GOLDEN_POINT, TAU, GoldenValue, IntPoly, tau_power
from .families import (
    ChromaticForm,
    F_CM,
    FamilySpec,
    family_alpha,
    family_form,
    family_n,
    family_poly,
)

_TAU_M1 = TAU - 1  # tau - 1 = 1/tau ~ 0.618


def tutte_bound(n: int) -> GoldenValue:
    """U(n) = tau^(5-n), the bound on |P(G_pt, tau+1)| for triangulations."""
    if n < 3:
        raise InvalidParameter("planar triangulations need n >= 3")
    return tau_power(5 - n)


@dataclass(frozen=True)
class RatioReport:
    """Exact golden-point evaluation against the Tutte bound."""

    n: int
    value: GoldenValue
    bound: GoldenValue
    ratio: GoldenValue
    violation: bool

    @property
    def value_float(self) -> float:
        return float(self.value)

    @property
    def bound_float(self) -> float:
        return float(self.bound)

    @property
    def ratio_float(self) -> float:
        return float(self.ratio)


def tutte_ratio(p: IntPoly, n: int) -> RatioReport:
    """r = |P(tau+1)| * tau^(n-5), exact; flags a bound violation if r > 1."""
    if p.degree != n:
        raise DegreeMismatch(f"polynomial degree {p.degree} != n = {n}")
    value = p.eval_golden(GOLDEN_POINT)
    bound = tutte_bound(n)
    ratio = abs(value) * tau_power(n - 5)
    return RatioReport(
        n=n, value=value, bound=bound, ratio=ratio, violation=(ratio - 1).sign() > 0
    )


# -- closed-form ratios per family ------------------------------------------------


def paper_ratio_formula(family: str, param: Optional[int]) -> GoldenValue:
    """The family's closed-form ratio |P(tau+1)|/U(n), exact in Q(sqrt5).

    For H the closed form is signed; the absolute value is applied here so
    the result is comparable with the ratio definition.
    """
    if family == "R":
        return _TAU_M1 ** (param - 1)
    if family == "TC":
        # ((3+sqrt5)/4) * (3-sqrt5)^m
        return GoldenValue(Fraction(3, 4), Fraction(1, 4)) * GoldenValue(3, -1) ** param
    if family == "I":
        # No prefactor: with n = 9m+3 the (tau+1)/tau^2 factor is exactly 1,
        # so r(I_m) = (|f_I(tau+1)| tau^9)^m = ((-315+141 sqrt5)/2)^m.
        return GoldenValue(Fraction(-315, 2), Fraction(141, 2)) ** param
    if family == "B":
        # (tau-1) * (1 + tau*(1-tau)^(n-2))
        return _TAU_M1 * (1 + TAU * (1 - TAU) ** (param - 2))
    if family == "H":
        r = GoldenValue(Fraction(-7, 2), Fraction(3, 2)) + GoldenValue(
            Fraction(5, 2), Fraction(-3, 2)
        ) * GoldenValue(Fraction(1, 2), Fraction(-1, 2)) ** (param - 5)
        return abs(r)
    if family == "CM":
        # |f_CM(tau+1)| * tau^8 per power of the octic; see the asymptotic
        # reconciliation note in golden_asymptotics
        return GoldenValue(Fraction(115, 2), Fraction(-51, 2)) ** param
    if family == "CE12":
        return GoldenValue(101, -45)
    raise InvalidParameter(f"no ratio formula for family {family!r}")


@dataclass(frozen=True)
class RatioCheck:
    param: Optional[int]
    computed: GoldenValue
    formula: GoldenValue
    equal: bool


def ratio_formula_check(family: str, params: Sequence[Optional[int]]) -> list:
    """Compare exact expanded-polynomial ratios against the closed formulas."""
    out = []
    for param in params:
        spec = FamilySpec(family, param)
        p = family_poly(spec)
        computed = tutte_ratio(p, family_n(spec)).ratio
        formula = abs(paper_ratio_formula(family, param))
        out.append(RatioCheck(param, computed, formula, computed == formula))
    return out


# -- asymptotic constants -----------------------------------------------------------


@dataclass(frozen=True)
class AsymptoticReport:
    """a = |lambda_dom(tau+1)|^(1/alpha) / (tau-1) with the dominance rule."""

    a: float
    a_exact: Optional[GoldenValue]
    lambda_dom_at_golden: GoldenValue
    alpha: int
    dominant_index: int


def asymptotic_constant(form: ChromaticForm, alpha: int) -> AsymptoticReport:
    """Dominant-term growth constant of the ratio, honoring the rule that
    q = tau+1 is substituted before the parameter goes to infinity.

    Terms whose coefficient polynomial vanishes exactly at tau+1 are
    excluded from the dominance comparison; that exclusion is precisely what
    makes the two limit orders differ for the bipyramid family.
    """
    if not form.terms:
        raise InvalidParameter("empty chromatic form")
    if alpha < 1:
        raise InvalidParameter("alpha must be >= 1")
    candidates = []
    for j, term in enumerate(form.terms, start=1):
        c_val = term.coeff.eval_golden(GOLDEN_POINT)
        if c_val.is_zero():
            continue
        lam_val = term.base.eval_golden(GOLDEN_POINT)
        candidates.append((j, lam_val))
    if not candidates:
        raise AllCoefficientsVanish(
            "every coefficient vanishes at tau+1; no dominant term"
        )
    dom_j, dom_lam = candidates[0]
    for j, lam in candidates[1:]:
        if abs(lam) > abs(dom_lam):
            dom_j, dom_lam = j, lam

    mag = abs(dom_lam)
    a_exact: Optional[GoldenValue] = None
    if mag == _TAU_M1 ** alpha:
        a_exact = GoldenValue(1)
    elif alpha == 1:
        a_exact = mag * TAU  # divide by tau-1 = multiply by tau
    with mp.workprec(220):
        a_val = mp.root(mag.to_mpf(220).value, alpha) / _TAU_M1.to_mpf(220).value
    return AsymptoticReport(
        a=float(a_val),
        a_exact=a_exact,
        lambda_dom_at_golden=dom_lam,
        alpha=alpha,
        dominant_index=dom_j,
    )


def family_asymptotic_constant(family: str) -> AsymptoticReport:
    spec = FamilySpec(family, {"R": 1, "TC": 2, "I": 1, "B": 5, "H": 8, "CM": 1}[family])
    return asymptotic_constant(family_form(spec), family_alpha(family))


def cm_ratio_base() -> GoldenValue:
    """|f_CM(tau+1)| * tau^8, the exact per-step ratio factor of the CM family.

    Computed from the octic itself rather than hard-coding either of the
    published candidate values; callers can compare against both.
    """
    return abs(F_CM.eval_golden(GOLDEN_POINT)) * tau_power(8)


# -- Tutte-Beraha numbers -------------------------------------------------------------


@dataclass(frozen=True)
class BerahaNumber:
    r: int
    value: float
    exact: Optional[GoldenValue]  # populated when 4cos^2(pi/r) lies in Q(sqrt5)


_BERAHA_EXACT = {
    2: GoldenValue(0),
    3: GoldenValue(1),
    4: GoldenValue(2),
    5: GOLDEN_POINT,
    6: GoldenValue(3),
    10: GoldenValue(Fraction(5, 2), Fraction(1, 2)),
}


def beraha(r: int) -> BerahaNumber:
    """q_r = 4 cos^2(pi/r), to better than 1e-12; exact value when it lies
    in Q(sqrt5) (r = 2,3,4,6 rational; r = 5,10 golden)."""
    if r < 2:
        raise InvalidParameter("Beraha numbers need r >= 2")
    exact = _BERAHA_EXACT.get(r)
    if exact is not None:
        return BerahaNumber(r=r, value=float(exact), exact=exact)
    with mp.workprec(100):
        v = 4 * mp.cos(mp.pi / r) ** 2
    return BerahaNumber(r=r, value=float(v), exact=None)


# -- equimodular locus of the bipyramid family ---------------------------------------


@dataclass(frozen=True)
class GridSpec:
    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction
    res: int  # grid points per unit length

    def __post_init__(self):
        if self.res < 16:
            raise InvalidParameter("locus scans need at least 16 points per unit")
        if self.x0 >= self.x1 or self.y0 >= self.y1:
            raise InvalidParameter("empty grid rectangle")


@dataclass(frozen=True)
class LocusPoint:
    x: float
    y: float
    pair: tuple  # 1-based indices of the two equimodular dominant lambdas


@dataclass(frozen=True)
class LocusScan:
    grid: GridSpec
    tol: float
    points: tuple
    q_c: Optional[float]
    triple_points: tuple


def _moduli(x: float, y: float) -> tuple:
    # |q-2|, |q-3|, |-1| for the three bipyramid lambdas
    return (math.hypot(x - 2.0, y), math.hypot(x - 3.0, y), 1.0)


def b_locus_scan(grid: GridSpec, tol: Optional[float] = None) -> LocusScan:
    """Mark grid points where the two largest of |q-2|, |q-3|, 1 agree.

    The accumulation set of bipyramid chromatic zeros is exactly this
    equimodular-dominance locus; the scan also records q_c (largest real-axis
    locus point) and clusters of near-triple points.
    """
    if tol is None:
        tol = 0.5 / grid.res
    step = Fraction(1, grid.res)
    nx = int((grid.x1 - grid.x0) / step) + 1
    ny = int((grid.y1 - grid.y0) / step) + 1
    points = []
    triples = []
    for iy in range(ny):
        y = grid.y0 + iy * step
        fy = float(y)
        for ix in range(nx):
            x = grid.x0 + ix * step
            fx = float(x)
            mods = _moduli(fx, fy)
            order = sorted(range(3), key=lambda i: -mods[i])
            m1, m2, m3 = (mods[i] for i in order)
            if m1 - m2 <= tol:
                pair = tuple(sorted((order[0] + 1, order[1] + 1)))
                points.append(LocusPoint(fx, fy, pair))
                if m1 - m3 <= 2 * tol:
                    triples.append((fx, fy))

    q_c = None
    for pt in points:
        if pt.y == 0.0 and (q_c is None or pt.x > q_c):
            q_c = pt.x

    clusters: list = []
    cell = 1.0 / grid.res
    for x, y in triples:
        for cl in clusters:
            if any(abs(x - cx) <= 2.5 * cell and abs(y - cy) <= 2.5 * cell for cx, cy in cl):
                cl.append((x, y))
                break
        else:
            clusters.append([(x, y)])
    centroids = tuple(
        (sum(x for x, _ in cl) / len(cl), sum(y for _, y in cl) / len(cl))
        for cl in clusters
    )
    return LocusScan(
        grid=grid, tol=tol, points=tuple(points), q_c=q_c, triple_points=centroids
    )


# -- ground-state entropy -------------------------------------------------------------


QLike = Union[int, Fraction, GoldenValue]


@dataclass(frozen=True)
class EntropyReport:
    """Ground-state degeneracy per vertex W and entropy S0 = ln W (k_B = 1)."""

    family: str
    q: QLike
    order: str  # "qn" or "nq"
    w: float
    s0: float
    limit_order: str  # "qn", "nq", or "both-equal"
    in_formula_range: bool
    dominant_modulus: GoldenValue


_ENTROPY_FAMILIES = ("R", "TC", "I", "B", "H")


def _as_golden(q: QLike) -> GoldenValue:
    if isinstance(q, GoldenValue):
        return q
    return GoldenValue(Fraction(q))


def _dominant_modulus(form: ChromaticForm, q: GoldenValue, order: str) -> GoldenValue:
    """Largest |lambda_j(q)|; the nq order first fixes q, dropping terms whose
    coefficient vanishes there, while the qn order keeps every term."""
    best: Optional[GoldenValue] = None
    for term in form.terms:
        if order == "nq" and term.coeff.eval_golden(q).is_zero():
            continue
        lam = abs(term.base.eval_golden(q))
        if best is None or lam > best:
            best = lam
    if best is None:
        raise AllCoefficientsVanish("all coefficients vanish at this q")
    return best


def _formula_range(family: str, q: GoldenValue, order: str) -> bool:
    if family == "R":
        return q >= 4
    if family == "TC":
        return q >= 3
    if family == "I":
        return q > 3
    # B and H: both orders agree for q >= 4; the q-first order extends to q > 3
    return q >= 4 or (order == "qn" and q > 3)


def family_entropy(family: str, q: QLike, order: str = "qn") -> EntropyReport:
    """W and S0 for the family's thermodynamic limit at rational (or golden) q.

    Inside the per-family validity range this reproduces the closed formulas
    (q-3 for R, lambda_TC^(1/3) for TC, f_I^(1/9) for I, q-2 for B and H).
    Outside it, the order-dependent dominance limit is still reported with
    ``in_formula_range`` set False. OutOfRange means W = 0, i.e. the dominant
    base vanishes and no entropy limit exists.
    """
    if family not in _ENTROPY_FAMILIES:
        raise InvalidParameter(f"no entropy formula for family {family!r}")
    if order not in ("qn", "nq"):
        raise InvalidParameter("order must be 'qn' or 'nq'")
    qv = _as_golden(q)
    spec = FamilySpec(family, {"R": 1, "TC": 2, "I": 1, "B": 5, "H": 8}[family])
    form = family_form(spec)
    alpha = family_alpha(family)
    dom = _dominant_modulus(form, qv, order)
    if dom.is_zero():
        raise OutOfRange(f"dominant base vanishes at q = {qv}; W = 0")
    other = _dominant_modulus(form, qv, "nq" if order == "qn" else "qn")
    limit_order = "both-equal" if other == dom else order
    with mp.workprec(200):
        w = mp.root(dom.to_mpf(200).value, alpha)
        s0 = mp.log(w)
    return EntropyReport(
        family=family,
        q=q,
        order=order,
        w=float(w),
        s0=float(s0),
        limit_order=limit_order,
        in_formula_range=_formula_range(family, qv, order),
        dominant_modulus=dom,
    )


@dataclass(frozen=True)
class EmpiricalW:
    """Finite-size sequence |P(G_param, q)|^(1/n) with a limit estimate."""

    family: str
    q: QLike
    params: tuple
    n_values: tuple
    w_values: tuple
    limit_estimate: Optional[float]
    monotone_tail: bool


def empirical_w(family: str, q: QLike, params: Sequence[int]) -> EmpiricalW:
    """Evaluate the family's polynomial exactly at q and take n-th roots.

    The limit estimate is the successive-ratio extrapolation
    ln W = (ln|P_{n2}| - ln|P_{n1}|) / (n2 - n1) from the last two members,
    which strips the O(1/n) prefactor bias of the raw sequence.
    """
    if len(params) < 1:
        raise InvalidParameter("need at least one parameter")
    qv = _as_golden(q)
    params = sorted(params)
    n_values = []
    w_values = []
    log_abs_p = []
    with mp.workprec(300):
        for param in params:
            spec = FamilySpec(family, param)
            form = family_form(spec)
            n = family_n(spec)
            total = GoldenValue(0)
            for term in form.terms:
                total = total + term.coeff.eval_golden(qv) * term.base.eval_golden(
                    qv
                ) ** term.exponent(param)
            av = abs(total).to_mpf(300).value
            if av == 0:
                raise OutOfRange(f"P vanishes at q = {q} for param {param}")
            n_values.append(n)
            log_abs_p.append(mp.log(av))
            w_values.append(float(mp.exp(mp.log(av) / n)))
        limit = None
        if len(params) >= 2 and n_values[-1] != n_values[-2]:
            limit = float(
                mp.exp(
                    (log_abs_p[-1] - log_abs_p[-2]) / (n_values[-1] - n_values[-2])
                )
            )
    diffs = [w_values[i + 1] - w_values[i] for i in range(len(w_values) - 1)]
    tail = diffs[len(diffs) // 2 :]
    monotone = all(d <= 0 for d in tail) or all(d >= 0 for d in tail)
    return EmpiricalW(
        family=family,
        q=q,
        params=tuple(params),
        n_values=tuple(n_values),
        w_values=tuple(w_values),
        limit_estimate=limit,
        monotone_tail=monotone,
    )
