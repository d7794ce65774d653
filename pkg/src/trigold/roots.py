"""Certified real roots via Sturm sequences, complex roots via Aberth iteration.

Real-root counting and isolation run entirely in exact rational arithmetic,
so interval counts are certificates, not estimates. Complex approximations
come from simultaneous (Aberth-style) iteration in mpmath at escalating
precision, reported together with backward-error residuals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

import mpmath as mp

from .errors import InvalidParameter, NoConvergence
from .exactmath import GOLDEN_POINT, IntPoly
from .families import LAMBDA_TC, WOODALL_CUBIC

NEG_INF = "-inf"
POS_INF = "+inf"

DEFAULT_REFINE_TOL = Fraction(1, 10**9)


# -- rational-coefficient helpers ---------------------------------------------------


def _frac_coeffs(p: IntPoly) -> list:
    return [Fraction(c) for c in p.coeffs]


def _strip(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _frac_rem(a: list, b: list) -> list:
    """Remainder of a by b over the rationals (coefficients ascending)."""
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1] / lead
        shift = len(r) - 1 - db
        for j, bc in enumerate(b):
            r[shift + j] -= c * bc
        r.pop()
        _strip(r)
    return r


def _frac_div_exact(a: list, b: list) -> list:
    """Exact quotient over the rationals; the remainder must vanish."""
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * (len(r) - db)
    while len(r) - 1 >= db and r:
        c = r[-1] / lead
        shift = len(r) - 1 - db
        q[shift] = c
        for j, bc in enumerate(b):
            r[shift + j] -= c * bc
        r.pop()
        _strip(r)
    if r:
        raise ArithmeticError("division expected to be exact")
    return q


def _prim_int(cs: Sequence[Fraction]) -> IntPoly:
    """Scale a rational polynomial by a positive rational to a primitive
    integer polynomial (sign pattern preserved)."""
    cs = [Fraction(c) for c in cs]
    if not any(cs):
        return IntPoly()
    denom_lcm = 1
    for c in cs:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in cs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    return IntPoly(c // g for c in ints)


def poly_gcd(p: IntPoly, r: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    a, b = _frac_coeffs(p), _frac_coeffs(r)
    _strip(a), _strip(b)
    while b:
        rem = _frac_rem(a, b)
        a, b = b, _frac_coeffs(_prim_int(rem)) if rem else []
    g = _prim_int(a)
    if not g.is_zero() and g.leading < 0:
        g = -g
    return g


def squarefree_decomposition(p: IntPoly) -> list:
    """Yun decomposition: [(factor, multiplicity)] with primitive factors.

    Up to an integer content, p = +-prod f_i^i; factors are pairwise coprime
    and squarefree.
    """
    if p.is_zero():
        raise InvalidParameter("zero polynomial has no squarefree decomposition")
    if p.degree == 0:
        return []
    a = _frac_coeffs(p)
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        f = _prim_int(a)
        return [(f if f.leading > 0 else -f, 1)]
    gc = _frac_coeffs(g)
    b = _frac_div_exact(a, gc)
    c = _frac_div_exact(_frac_coeffs(p.derivative()), gc)
    d = _sub(c, _derive(b))
    out = []
    i = 1
    while len(b) - 1 > 0:
        gi = poly_gcd(_prim_int(b), _prim_int(d))
        if gi.degree > 0:
            out.append((gi if gi.leading > 0 else -gi, i))
            gic = _frac_coeffs(gi)
            b = _frac_div_exact(b, gic)
            c = _frac_div_exact(d, gic)
        else:
            c = d
        d = _sub(c, _derive(b))
        i += 1
    return out


def _derive(cs: list) -> list:
    return [i * c for i, c in enumerate(cs)][1:]


def _sub(a: list, b: list) -> list:
    out = list(a) + [Fraction(0)] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _strip(out)


def squarefree_part(p: IntPoly) -> IntPoly:
    out = IntPoly((1,))
    for f, _ in squarefree_decomposition(p):
        out = out * f
    return out


# -- Sturm chains -------------------------------------------------------------------


def sturm_chain(p: IntPoly) -> list:
    """Sturm chain of a squarefree polynomial, as primitive integer polys."""
    if p.is_zero():
        raise InvalidParameter("zero polynomial has no Sturm chain")
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        rem = _frac_rem(_frac_coeffs(chain[-2]), _frac_coeffs(chain[-1]))
        if not rem:
            break
        chain.append(_prim_int([-c for c in rem]))
    return [c for c in chain if not c.is_zero()]


def _variations(signs: list) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def sign_variations(chain: list, x) -> int:
    if x == NEG_INF:
        return _variations([p.sign_at_neg_inf() for p in chain])
    if x == POS_INF:
        return _variations([p.sign_at_pos_inf() for p in chain])
    return _variations([p.sign_at(x) for p in chain])


def count_roots_halfopen(chain: list, a, b) -> int:
    """Number of distinct real roots in (a, b] for the chain's polynomial."""
    return sign_variations(chain, a) - sign_variations(chain, b)


def cauchy_bound(p: IntPoly) -> Fraction:
    if p.is_zero():
        raise InvalidParameter("zero polynomial has no root bound")
    lead = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return 1 + Fraction(m, lead)


def _nonroot_between(p: IntPoly, a: Fraction, b: Fraction) -> Fraction:
    """A deterministic interior rational point that is not a root of p."""
    k = 2
    while True:
        for num in range(1, k):
            if gcd(num, k) != 1:
                continue
            x = a + (b - a) * Fraction(num, k)
            if p.sign_at(x) != 0:
                return x
        k += 1


def isolate_real_roots(
    p: IntPoly, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None
) -> list:
    """Disjoint open intervals (a, b), each containing exactly one real root
    of the squarefree polynomial p; endpoints are never roots.

    With lo/hi given, only roots strictly inside (lo, hi) are reported;
    rational roots sitting exactly at lo or hi are excluded.
    """
    if p.is_zero():
        raise InvalidParameter("cannot isolate roots of the zero polynomial")
    if p.degree == 0:
        return []
    bound = cauchy_bound(p)
    a = Fraction(lo) if lo is not None else -bound
    b = Fraction(hi) if hi is not None else bound
    if a >= b:
        return []
    # exclude window endpoints that happen to be roots
    for r in (a, b):
        while p.sign_at(r) == 0:
            num, den = r.numerator, r.denominator
            p = p.div_exact(IntPoly((-num, den)))
    if p.degree == 0:
        return []
    chain = sturm_chain(p)
    out = []
    stack = [(a, b, sign_variations(chain, a), sign_variations(chain, b))]
    while stack:
        x, y, vx, vy = stack.pop()
        cnt = vx - vy
        if cnt <= 0:
            continue
        if cnt == 1:
            out.append((x, y, p))
            continue
        mid = _nonroot_between(p, x, y)
        vm = sign_variations(chain, mid)
        stack.append((x, mid, vx, vm))
        stack.append((mid, y, vm, vy))
    out.sort(key=lambda t: t[0])
    return [(x, y) for x, y, _ in out]


def refine_root(
    p: IntPoly, lo: Fraction, hi: Fraction, tol: Fraction = DEFAULT_REFINE_TOL
) -> tuple:
    """Shrink an isolating interval by bisection until its width is <= tol.

    Returns (lo, hi); lo == hi when the root is hit exactly (rational root).
    Requires a sign change over (lo, hi), which isolation guarantees for a
    squarefree polynomial.
    """
    slo = p.sign_at(lo)
    shi = p.sign_at(hi)
    if slo == 0 or shi == 0 or slo == shi:
        raise InvalidParameter("refine_root needs a sign-changing bracket")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        sm = p.sign_at(mid)
        if sm == 0:
            return mid, mid
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


@dataclass(frozen=True)
class RealRoot:
    """A certified real root: isolating rational bounds plus multiplicity."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def to_mpf(self, prec: int = 80) -> mp.mpf:
        with mp.workprec(prec):
            m = self.midpoint
            return mp.mpf(m.numerator) / m.denominator

    def __float__(self):
        return float(self.midpoint)


def real_roots(
    p: IntPoly,
    window: Optional[tuple] = None,
    tol: Fraction = DEFAULT_REFINE_TOL,
) -> list:
    """Certified real roots of p (any multiplicity), refined to width <= tol.

    ``window`` restricts to the open interval (lo, hi); None means the whole
    line. Roots are returned in increasing order with multiplicities.
    """
    lo, hi = (None, None) if window is None else window
    roots = []
    for f, mult in squarefree_decomposition(p):
        if f.degree < 1:
            continue
        # window endpoints that are roots of f are excluded (open window)
        for r in (lo, hi):
            if r is not None:
                r = Fraction(r)
                if f.sign_at(r) == 0:
                    f = f.div_exact(IntPoly((-r.numerator, r.denominator)))
        if f.degree < 1:
            continue
        for a, b in isolate_real_roots(f, lo, hi):
            ra, rb = refine_root(f, a, b, tol)
            roots.append(RealRoot(ra, rb, mult))
    roots.sort(key=lambda r: r.midpoint)
    return roots


# -- algebraic interval endpoints ----------------------------------------------------


@dataclass(frozen=True)
class AlgebraicNumber:
    """A real algebraic number carried as (minimal polynomial, isolating bracket)."""

    minpoly: IntPoly
    lo: Fraction
    hi: Fraction

    def refined(self, tol: Fraction) -> "AlgebraicNumber":
        a, b = refine_root(self.minpoly, self.lo, self.hi, tol)
        return AlgebraicNumber(self.minpoly, a, b)

    def to_mpf(self, tol: Fraction = Fraction(1, 10**15)) -> mp.mpf:
        r = self.refined(tol)
        with mp.workprec(80):
            m = (r.lo + r.hi) / 2
            return mp.mpf(m.numerator) / m.denominator

    def __float__(self):
        return float(self.to_mpf())


#: Unique real root of lambda_TC, about 2.546602: left end of the zero-free window.
RHO_TC = AlgebraicNumber(LAMBDA_TC, Fraction(2), Fraction(3))

#: Unique real root of q^3-9q^2+30q-35, about 2.6778146: the Woodall interval start.
Q_M = AlgebraicNumber(WOODALL_CUBIC, Fraction(2), Fraction(3))


def _strip_factor(p: IntPoly, factor: IntPoly) -> tuple:
    """Divide out every power of an irreducible factor; report if any."""
    found = False
    while True:
        g = poly_gcd(p, factor)
        if g.degree != factor.degree:
            return p, found
        p = p.div_exact(factor if factor.leading > 0 else -factor)
        found = True


def _clear_bracket(alg: AlgebraicNumber, p: IntPoly, chain: list) -> AlgebraicNumber:
    """Refine alg's bracket until p has no roots inside it and the bracket
    endpoints are not roots of p. Requires p coprime to alg.minpoly."""
    a = alg
    while (
        p.sign_at(a.lo) == 0
        or p.sign_at(a.hi) == 0
        or count_roots_halfopen(chain, a.lo, a.hi) > 0
    ):
        mid = (a.lo + a.hi) / 2
        sm = a.minpoly.sign_at(mid)
        # the minimal polynomial is irreducible of degree > 1, so mid is never
        # its root
        if sm == a.minpoly.sign_at(a.lo):
            a = AlgebraicNumber(a.minpoly, mid, a.hi)
        else:
            a = AlgebraicNumber(a.minpoly, a.lo, mid)
    return a


@dataclass(frozen=True)
class IntervalChecksReport:
    """Exact root counts on the guarded intervals plus Woodall status."""

    counts: dict
    rho_tc_is_root: bool
    q_m_is_root: bool
    woodall_counterexample: bool
    woodall_roots: tuple
    rho_tc: AlgebraicNumber
    q_m: AlgebraicNumber


INTERVAL_KEYS = ("(-inf,0)", "(0,1)", "(1,32/27]", "(2,rho_TC)", "(q_m,3)")


def interval_checks(p: IntPoly) -> IntervalChecksReport:
    """Count real roots of p on the classical zero-free intervals, exactly.

    Intervals: (-inf,0), (0,1), (1,32/27], (2, rho_TC) and the Woodall
    interval (q_m, 3), with the algebraic endpoints kept exact. Roots at
    rho_TC or q_m themselves are reported separately, not counted inside
    the open intervals.
    """
    if p.is_zero():
        raise InvalidParameter("zero polynomial")
    sf = squarefree_part(p)

    include_3227 = False
    for r in (Fraction(0), Fraction(1), Fraction(32, 27), Fraction(2), Fraction(3)):
        if sf.sign_at(r) == 0:
            sf = sf.div_exact(IntPoly((-r.numerator, r.denominator)))
            if r == Fraction(32, 27):
                include_3227 = True

    counts = {}
    if sf.degree > 0:
        chain = sturm_chain(sf)
        counts["(-inf,0)"] = count_roots_halfopen(chain, NEG_INF, Fraction(0))
        counts["(0,1)"] = count_roots_halfopen(chain, Fraction(0), Fraction(1))
        counts["(1,32/27]"] = count_roots_halfopen(
            chain, Fraction(1), Fraction(32, 27)
        )
    else:
        counts["(-inf,0)"] = counts["(0,1)"] = counts["(1,32/27]"] = 0
    if include_3227:
        counts["(1,32/27]"] += 1

    # (2, rho_TC), open: strip lambda_TC so rho itself never counts
    sf_rho, rho_is_root = _strip_factor(sf, LAMBDA_TC)
    if sf_rho.degree > 0:
        chain_rho = sturm_chain(sf_rho)
        rho = _clear_bracket(RHO_TC, sf_rho, chain_rho)
        counts["(2,rho_TC)"] = count_roots_halfopen(chain_rho, Fraction(2), rho.lo)
    else:
        rho = RHO_TC
        counts["(2,rho_TC)"] = 0

    # (q_m, 3), open on both sides
    sf_qm, qm_is_root = _strip_factor(sf, WOODALL_CUBIC)
    woodall_roots = ()
    if sf_qm.degree > 0:
        chain_qm = sturm_chain(sf_qm)
        qm = _clear_bracket(Q_M, sf_qm, chain_qm)
        counts["(q_m,3)"] = count_roots_halfopen(chain_qm, qm.hi, Fraction(3))
        if counts["(q_m,3)"]:
            woodall_roots = tuple(
                RealRoot(a, b)
                for a, b in (
                    refine_root(sf_qm, x, y, DEFAULT_REFINE_TOL)
                    for x, y in isolate_real_roots(sf_qm, qm.hi, Fraction(3))
                )
            )
    else:
        qm = Q_M
        counts["(q_m,3)"] = 0

    return IntervalChecksReport(
        counts=counts,
        rho_tc_is_root=rho_is_root,
        q_m_is_root=qm_is_root,
        woodall_counterexample=counts["(q_m,3)"] > 0,
        woodall_roots=woodall_roots,
        rho_tc=rho,
        q_m=qm,
    )


# -- complex roots -------------------------------------------------------------------


def _backward_residual(coeffs, z) -> mp.mpf:
    """|p(z)| / sum |c_i||z|^i: scale-free backward error."""
    acc = mp.mpc(0)
    scale = mp.mpf(0)
    az = abs(z)
    for c in reversed(coeffs):
        acc = acc * z + c
        scale = scale * az + abs(c)
    if scale == 0:
        return mp.mpf(0)
    return abs(acc) / scale


def _fujiwara_radius(p: IntPoly) -> float:
    """Upper bound 2*max_k |c_{n-k}/c_n|^(1/k) on root magnitudes."""
    n = p.degree
    lead = abs(p.leading)
    best = 0.0
    for k in range(1, n + 1):
        c = abs(p.coeffs[n - k])
        if c:
            best = max(best, math.exp((math.log(c) - math.log(lead)) / k))
    return 2.0 * best if best else 1.0


def _aberth_once(p: IntPoly, prec: int, maxit: int) -> list:
    n = p.degree
    with mp.workprec(prec):
        cs = [mp.mpf(c) for c in p.coeffs]
        dcs = [i * c for i, c in enumerate(cs)][1:]
        radius = mp.mpf(_fujiwara_radius(p))
        z = []
        for k in range(n):
            theta = 2 * mp.pi * k / n + mp.mpf("0.4") / n + mp.mpf("1.0")
            r = radius * (mp.mpf("0.6") + mp.mpf("0.35") * k / max(1, n - 1))
            z.append(r * mp.exp(1j * theta))
        # stop on tiny relative moves, or on stagnation at the rounding
        # noise floor (the residual check upstream decides acceptance);
        # stagnation counts only once moves are already small, because the
        # early root-sorting phase can plateau while still far from roots
        stop = mp.mpf(2) ** (24 - prec)
        noise_band = mp.mpf(2) ** (-max(20, prec // 3))
        best_move = mp.inf
        stalled = 0
        for _ in range(maxit):
            moved = mp.mpf(0)
            for k in range(n):
                zk = z[k]
                pv = mp.mpc(0)
                for c in reversed(cs):
                    pv = pv * zk + c
                if pv == 0:
                    continue
                dv = mp.mpc(0)
                for c in reversed(dcs):
                    dv = dv * zk + c
                if dv == 0:
                    z[k] = zk + mp.mpf("1e-3") * radius
                    moved = max(moved, radius)
                    continue
                newton = pv / dv
                s = mp.mpc(0)
                collide = False
                for j in range(n):
                    if j == k:
                        continue
                    diff = zk - z[j]
                    if diff == 0:
                        collide = True
                        break
                    s += 1 / diff
                if collide:
                    z[k] = zk + mp.mpf("1e-3") * radius
                    moved = max(moved, radius)
                    continue
                denom = 1 - newton * s
                w = newton if denom == 0 else newton / denom
                z[k] = zk - w
                moved = max(moved, abs(w) / max(1, abs(zk)))
            if moved < stop:
                return z
            if moved < best_move / 2:
                best_move = moved
                stalled = 0
            else:
                stalled += 1
                if stalled >= 30 and moved < noise_band:
                    return z
        raise NoConvergence(
            f"Aberth iteration stalled at {prec} bits", partial=list(z)
        )


def aberth_roots(p: IntPoly, tol: float = 1e-9, start_prec: int = 64) -> tuple:
    """All complex roots of a squarefree polynomial with residual bounds.

    Returns (roots, residuals, precision_bits). Precision escalates by x4 on
    failure up to 1024 bits before NoConvergence is raised.
    """
    if p.degree < 1:
        raise InvalidParameter("need degree >= 1")
    prec = start_prec
    last = None
    while prec <= 1024:
        try:
            roots = _aberth_once(p, prec, maxit=200 + 40 * p.degree)
            with mp.workprec(prec):
                cs = [mp.mpf(c) for c in p.coeffs]
                res = [_backward_residual(cs, z) for z in roots]
            if max(res) <= tol:
                return roots, res, prec
            last = NoConvergence(
                f"residuals above tol at {prec} bits", partial=roots
            )
        except NoConvergence as exc:
            last = exc
        prec *= 4
    raise last


@dataclass(frozen=True)
class ComplexRoot:
    """One member of a complex-conjugate pair, with its backward residual."""

    value: complex
    residual: float
    multiplicity: int = 1


@dataclass(frozen=True)
class NearestZero:
    values: tuple
    distance: float
    is_real: Optional[bool]  # None = real/complex tie within tolerance


@dataclass(frozen=True)
class RootReport:
    degree: int
    real_roots: tuple
    complex_roots: tuple
    nearest_to_golden: NearestZero


def all_roots(p: IntPoly, tol: float = 1e-9) -> RootReport:
    """Certified real roots, complex approximations, and the zero nearest
    to the golden point tau+1.

    Real roots come from Sturm isolation; complex ones from Aberth iteration
    with conjugate pairing enforced. Counting multiplicity, real + complex
    root counts add up to the degree.
    """
    if p.is_zero():
        raise InvalidParameter("zero polynomial")
    fine = Fraction(1, 10**15)
    reals = []
    complexes = []
    for f, mult in squarefree_decomposition(p):
        if f.degree < 1:
            continue
        rr = [
            RealRoot(a, b, mult)
            for a, b in (
                refine_root(f, x, y, fine) for x, y in isolate_real_roots(f)
            )
        ]
        reals.extend(rr)
        n_complex = f.degree - len(rr)
        if n_complex == 0:
            continue
        roots, res, prec = aberth_roots(f, tol)
        order = sorted(range(len(roots)), key=lambda i: abs(mp.im(roots[i])))
        cplx = [(roots[i], res[i]) for i in order[len(rr):]]
        # enforce conjugate pairing: match each upper root with a lower one
        upper = sorted(
            (c for c in cplx if mp.im(c[0]) > 0), key=lambda c: (mp.re(c[0]), mp.im(c[0]))
        )
        lower = sorted(
            (c for c in cplx if mp.im(c[0]) <= 0), key=lambda c: (mp.re(c[0]), -mp.im(c[0]))
        )
        if len(upper) != len(lower):
            raise NoConvergence(
                "conjugate pairing failed; root classification inconsistent",
                partial=roots,
            )
        for (zu, ru), (zl, rl) in zip(upper, lower):
            re = (mp.re(zu) + mp.re(zl)) / 2
            im = (mp.im(zu) - mp.im(zl)) / 2
            resid = float(max(ru, rl))
            complexes.append(ComplexRoot(complex(re, im), resid, mult))
            complexes.append(ComplexRoot(complex(re, -im), resid, mult))

    reals.sort(key=lambda r: r.midpoint)
    total = sum(r.multiplicity for r in reals) + sum(c.multiplicity for c in complexes)
    if total != p.degree:
        raise NoConvergence(
            f"root count {total} != degree {p.degree}", partial=(reals, complexes)
        )

    with mp.workprec(120):
        g = GOLDEN_POINT.to_mpf(120).value
        best_real = None
        for r in reals:
            d = abs(r.to_mpf(120) - g)
            if best_real is None or d < best_real[1]:
                best_real = (r, d)
        best_cplx = None
        for c in complexes:
            if c.value.imag <= 0:
                continue
            d = mp.sqrt((mp.mpf(c.value.real) - g) ** 2 + mp.mpf(c.value.imag) ** 2)
            if best_cplx is None or d < best_cplx[1]:
                best_cplx = (c, d)

        tie_tol = mp.mpf("1e-12")
        if best_real is None and best_cplx is None:
            raise InvalidParameter("polynomial has no roots")
        if best_cplx is None:
            nearest = NearestZero(
                (float(best_real[0].to_mpf(120)),), float(best_real[1]), True
            )
        elif best_real is None:
            pair = (best_cplx[0].value, best_cplx[0].value.conjugate())
            nearest = NearestZero(pair, float(best_cplx[1]), False)
        elif abs(best_real[1] - best_cplx[1]) <= tie_tol:
            nearest = NearestZero(
                (
                    float(best_real[0].to_mpf(120)),
                    best_cplx[0].value,
                    best_cplx[0].value.conjugate(),
                ),
                float(min(best_real[1], best_cplx[1])),
                None,
            )
        elif best_real[1] < best_cplx[1]:
            nearest = NearestZero(
                (float(best_real[0].to_mpf(120)),), float(best_real[1]), True
            )
        else:
            pair = (best_cplx[0].value, best_cplx[0].value.conjugate())
            nearest = NearestZero(pair, float(best_cplx[1]), False)

    return RootReport(
        degree=p.degree,
        real_roots=tuple(reals),
        complex_roots=tuple(complexes),
        nearest_to_golden=nearest,
    )
