"""Plane projective curves with ordinary rational singularities.

Covers the input model (curve files), singular-locus discovery and
validation, the genus formula, and the trigonal-curve generators: the two
resultant/projection constructions plus a generator that guarantees an
ordinary multiplicity-(d-3) point, so every degree has usable test curves.

Singular points on the line z=0 and at (1:0:0) are found by exact univariate
gcds.  The affine chart is scanned with resultant nets reduced mod two large
primes; every candidate is then verified exactly over the ground field, so a
reported point is never wrong.  A candidate that cannot be certified rational
counts into the residual budget and leads to a typed rejection.
"""

import hashlib
import random
from dataclasses import dataclass, field as dc_field

from .errors import (CurveUnsupported, GenerationFailed, GenusTooSmall, UnsupportedInput,
                     InvalidInput, IrrationalSingularLocus,
                     NonOrdinarySingularity, ParseError, PointNotOnCurve,
                     ReducibleSuspected)
from .modular import (PRIMES, fp_eval, fp_gcd, fp_resultant_keepvar,
                      fp_roots, fp_squarefree, fp_trim, rational_reconstruct)
from .poly import (MPoly, UPoly, binary_form_squarefree, local_expansion,
                   parse_poly, poly_str, rational_roots)
from .scalars import QQ, PrimeField, RationalField, rat

__all__ = ["SingularPoint", "PlaneCurve", "genus", "singular_locus",
           "validate_curve", "gen_trigonal_projection", "gen_method1",
           "gen_method2", "gen_singular_model", "parse_curve_file",
           "write_curve_file", "derived_rng", "normalize_point"]


def derived_rng(seed, label):
    """Deterministic child generator for (seed, label)."""
    digest = hashlib.sha256(f"{seed}:{label}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def normalize_point(coords, fld=QQ):
    coords = [fld.coerce(c) for c in coords]
    if len(coords) != 3 or not any(coords):
        raise InvalidInput("a projective point needs a nonzero coordinate triple")
    piv = max(i for i in range(3) if coords[i])
    s = coords[piv]
    return tuple(c / s for c in coords)


@dataclass(frozen=True)
class SingularPoint:
    coords: tuple
    multiplicity: int

    def key(self):
        return tuple(str(c) for c in self.coords)


@dataclass
class PlaneCurve:
    f: MPoly
    degree: int
    sings: tuple
    genus: int
    field: object = dc_field(default_factory=lambda: QQ)
    base_point: tuple = None
    validated: bool = False
    provenance: dict = None

    def partials(self):
        return [self.f.derivative(i) for i in range(3)]

    def __repr__(self):
        return (f"PlaneCurve(deg={self.degree}, genus={self.genus}, "
                f"sings={len(self.sings)}, f={poly_str(self.f)})")


def genus(d, multiplicities):
    """(d-1)(d-2)/2 - sum m(m-1)/2 over ordinary singular points."""
    if d < 3:
        raise InvalidInput("degree must be at least 3")
    g = (d - 1) * (d - 2) // 2
    for m in multiplicities:
        if m < 2:
            raise InvalidInput("singular multiplicities must be at least 2")
        g -= m * (m - 1) // 2
    if g < 0:
        raise InvalidInput("inconsistent singularity data: negative genus")
    return g


# --- restriction helpers -------------------------------------------------------


def _dehomogenize_z(f):
    """f(x, y, 1) as a bivariate polynomial."""
    out = MPoly(2)
    for (i, j, _k), c in f.terms.items():
        e = (i, j)
        nc = out.terms.get(e, 0) + c
        if nc:
            out.terms[e] = nc
        else:
            out.terms.pop(e, None)
    return out


def _restrict_line_z0(g):
    """g(t, 1, 0) as a univariate polynomial in t."""
    deg = g.degree_in(0)
    coeffs = [0] * (deg + 1)
    for (i, _j, k), c in g.terms.items():
        if k == 0:
            coeffs[i] = coeffs[i] + c
    return UPoly(coeffs)


def _specialize_x(F, x0):
    """F(x0, y) as a univariate polynomial in y (F bivariate)."""
    deg = F.degree_in(1)
    coeffs = [0] * (deg + 1)
    powers = {0: 1}

    def power(k):
        if k not in powers:
            powers[k] = power(k - 1) * x0
        return powers[k]

    for (i, j), c in F.terms.items():
        coeffs[j] = coeffs[j] + c * power(i)
    return UPoly(coeffs)


def _gcd_many(polys):
    acc = UPoly()
    for p in polys:
        acc = acc.gcd(p)
        if acc.degree() == 0:
            break
    return acc


# --- modular affine scan --------------------------------------------------------


def _bivariate_fp_table(F, y_deg, p):
    """Coefficient lists over y-power (exact layout), entries mod p in x.

    Returns None when a denominator dies mod p.
    """
    x_deg = F.degree_in(0)
    table = [[0] * (x_deg + 1) for _ in range(y_deg + 1)]
    for (i, j), c in F.terms.items():
        c = rat(c)
        num, den = int(c.numerator), int(c.denominator)
        if den % p == 0:
            return None
        table[j][i] = num * pow(den, p - 2, p) % p
    return [fp_trim(row) for row in table]


def _fp_res_y(A, B, p):
    """Res_y(A, B) mod p as an int list in x, with the Sylvester layout fixed
    by the exact y-degrees.  None when reduction mod p degenerates."""
    m, n = A.degree_in(1), B.degree_in(1)
    ta = _bivariate_fp_table(A, m, p)
    tb = _bivariate_fp_table(B, n, p)
    if ta is None or tb is None:
        return None
    bound = (m * max(B.degree_in(0), 0) + n * max(A.degree_in(0), 0)) + 1
    return fp_resultant_keepvar(ta, tb, p, bound)


def _affine_scan(f):
    """Rational singular points in the chart z=1, plus a residual budget for
    candidates that could not be certified rational."""
    F = _dehomogenize_z(f)
    Fx = F.derivative(0)
    Fy = F.derivative(1)
    if not Fx and not Fy:
        raise ReducibleSuspected("both affine partials vanish identically")
    pairs = [(Fx, Fy), (F, Fx), (F, Fy)]
    pairs = [(A, B) for A, B in pairs if A and B]
    gcds = {}
    for p in PRIMES[:2]:
        nets = []
        for A, B in pairs:
            if A.degree_in(1) == 0 and B.degree_in(1) == 0:
                continue
            r = _fp_res_y(A, B, p)
            if r is None:
                nets = None
                break
            if r:
                nets.append(r)
        if nets is None:
            continue
        if not nets:
            raise ReducibleSuspected("all affine resultant nets vanish identically")
        g = nets[0]
        for r in nets[1:]:
            g = fp_gcd(g, r, p)
            if len(g) == 1:
                break
        gcds[p] = g
    if not gcds:
        raise CurveUnsupported("modular reduction degenerated at every prime")
    if any(len(g) == 1 for g in gcds.values()):
        return [], 0

    p = min(gcds)
    g = fp_squarefree(gcds[p], p)
    roots = fp_roots(g, p)
    points = []
    # distinct candidate x-values over the closure that do not even reduce
    # into F_p cannot be rational: straight into the residual budget
    residual = (len(g) - 1) - len(roots)
    tabs = None
    for r in roots:
        verified_here = False
        cand = rational_reconstruct(r, p)
        if cand is not None:
            sy = [_specialize_x(P, cand) for P in (F, Fx, Fy)]
            if all(not s for s in sy):
                raise ReducibleSuspected("a vertical line lies on the curve")
            # identically-zero specializations impose no condition, so the
            # gcd of the rest is exactly the singular fiber above cand
            gy = _gcd_many([s for s in sy if s])
            if gy.degree() >= 1:
                sf = gy.squarefree_part()
                yroots = sorted(set(rational_roots(sf)), key=str)
                for y0 in yroots:
                    points.append((cand, y0))
                residual += sf.degree() - len(yroots)
                verified_here = True
        if verified_here:
            continue
        # unverified root: count it unless it is a phantom even mod p
        if tabs is None:
            tabs = [_bivariate_fp_table(P, P.degree_in(1), p) for P in (F, Fx, Fy)]
        if any(t is None for t in tabs):
            residual += 1
            continue
        sy_p = [fp_trim([fp_eval(row, r, p) for row in t]) for t in tabs]
        gp = []
        for s in sy_p:
            if s:
                gp = fp_gcd(gp, s, p) if gp else s
        if len(gp) != 1:
            residual += 1
    return points, residual


# --- singular locus -------------------------------------------------------------


def _infinity_scan(f, fld):
    """Singular points on the line z=0, exactly."""
    parts = [f.derivative(i) for i in range(3)]
    restr = [_restrict_line_z0(g) for g in parts]
    if all(not r for r in restr):
        raise ReducibleSuspected("the gradient vanishes on the whole line z=0")
    # identically-zero restrictions impose no condition; the gcd of the rest
    # cuts out exactly the singular points with y != 0 on the line
    g = _gcd_many([r for r in restr if r])
    points = []
    residual = 0
    if g.degree() >= 1:
        sf = g.squarefree_part()
        if isinstance(fld, RationalField):
            roots = sorted(set(rational_roots(sf)), key=str)
        else:
            roots = _fp_poly_roots_small(sf, fld)
        for t0 in roots:
            points.append((t0, fld.one(), fld.zero()))
        residual += sf.degree() - len(roots)
    # the remaining point of the line
    pt = (fld.one(), fld.zero(), fld.zero())
    if all(not g.evaluate(pt) for g in parts):
        points.append(pt)
    return points, residual


def _fp_poly_roots_small(u, fld):
    roots = []
    for v in range(fld.p):
        if not u.eval(fld.coerce(v)):
            roots.append(fld.coerce(v))
    return roots


def _brute_scan_fp(f, fld):
    """All singular points over a small prime field, by exhaustion."""
    p = fld.p
    if p > 2000:
        raise CurveUnsupported("prime-field singular scan supports only small p")
    parts = [f.derivative(i) for i in range(3)]
    pts = []
    reps = ([(fld.coerce(a), fld.coerce(b), fld.one()) for a in range(p) for b in range(p)]
            + [(fld.coerce(a), fld.one(), fld.zero()) for a in range(p)]
            + [(fld.one(), fld.zero(), fld.zero())])
    for pt in reps:
        if not f.evaluate(pt) and all(not g.evaluate(pt) for g in parts):
            pts.append(pt)
    return pts, 0


def singular_locus(f, fld=QQ):
    """All singular points with coordinates in the ground field, plus the
    residual budget (degree of candidate loci that could not be certified
    rational).  Multiplicities come from exact local expansions."""
    if not f or not f.is_homogeneous():
        raise InvalidInput("expected a nonzero homogeneous form")
    d = f.total_degree()
    if d < 3:
        raise InvalidInput("degree must be at least 3")
    if isinstance(fld, PrimeField):
        coords, residual = _brute_scan_fp(f, fld)
    else:
        inf_pts, res_inf = _infinity_scan(f, fld)
        aff_pts, res_aff = _affine_scan(f)
        coords = inf_pts + [(x0, y0, fld.one()) for x0, y0 in aff_pts]
        residual = res_inf + res_aff
    out = []
    for c in coords:
        pt = normalize_point(c, fld)
        m = local_expansion(f, list(pt), d).multiplicity()
        if m is None or m < 1:
            continue
        if m >= 1 and not f.evaluate(list(pt)):
            out.append(SingularPoint(pt, m))
    out.sort(key=lambda s: s.key())
    return out, residual


def _check_ordinary(f, point, mult):
    exp = local_expansion(f, list(point), mult)
    if exp.multiplicity() != mult:
        raise InvalidInput("multiplicity mismatch at a singular point")
    if not binary_form_squarefree(exp.pieces[mult]):
        raise NonOrdinarySingularity(
            f"tangent cone at ({':'.join(str(c) for c in point)}) has a repeated factor")


def _resultant_probe_nonzero(f, g, var, samples=12):
    """True when Res_var(f, g) is certainly not identically zero; checked by
    evaluating the exact-layout Sylvester determinant at random points mod
    two large primes.  All-zero probes => treat as identically zero."""
    from .modular import fp_det
    m, n = f.degree_in(var), g.degree_in(var)
    if m == 0 and n == 0:
        raise InvalidInput("probe needs positive degree in the variable")
    others = [i for i in range(3) if i != var]
    rng = random.Random(0xC0FFEE + var)
    fc = f.coeffs_by_power(var)
    gc = g.coeffs_by_power(var)
    for p in PRIMES[:2]:
        for _ in range(samples):
            vals = [0, 0, 0]
            for i in others:
                vals[i] = rng.randrange(p)
            try:
                av = [c.evaluate([rat(vals[0]), rat(vals[1]), rat(vals[2])]) for c in fc]
                bv = [c.evaluate([rat(vals[0]), rat(vals[1]), rat(vals[2])]) for c in gc]
            except ZeroDivisionError:
                continue
            size = m + n
            rows = [[0] * size for _ in range(size)]
            ok = True
            for vlist in (av, bv):
                for v in vlist:
                    if int(rat(v).denominator) % p == 0:
                        ok = False
            if not ok:
                continue

            def red(v):
                v = rat(v)
                return int(v.numerator) * pow(int(v.denominator), p - 2, p) % p

            for i in range(n):
                for k in range(m + 1):
                    rows[i][i + k] = red(av[m - k])
            for i in range(m):
                for k in range(n + 1):
                    rows[n + i][i + k] = red(bv[n - k])
            if fp_det(rows, p):
                return True
    return False


def _squarefree_suspicion(f):
    """Reject forms whose resultant with a partial vanishes identically."""
    for var in range(3):
        fv = f.derivative(var)
        if not fv or f.degree_in(var) == 0:
            continue
        if not _resultant_probe_nonzero(f, fv, var):
            raise ReducibleSuspected(
                "a partial derivative shares a common factor with the curve")


def validate_curve(f, declared_sings=None, base_point=None, fld=QQ):
    """Validate a homogeneous input form and return a PlaneCurve.

    Checks: degree >= 3; every singular point over the ground field is
    ordinary; no singular candidate escapes the rational certification; the
    declared singular list (when given) matches the discovered one; genus
    >= 3.  The base point, when given, must be a smooth point on the curve.
    """
    if not isinstance(f, MPoly) or f.nvars != 3:
        raise InvalidInput("curve must be a polynomial in x, y, z")
    f = f.map_coeffs(fld.coerce)
    if not f:
        raise InvalidInput("curve polynomial is zero")
    if not f.is_homogeneous():
        raise InvalidInput("curve polynomial is not homogeneous")
    d = f.total_degree()
    if d < 3:
        raise GenusTooSmall(f"degree {d} < 3 cannot have genus >= 3")
    if len(f.terms) == 1:
        raise ReducibleSuspected("monomial input is a product of lines")
    if any(f.degree_in(v) == 0 for v in range(3)):
        raise ReducibleSuspected("a binary form of degree >= 3 is reducible")
    if isinstance(fld, PrimeField) and fld.p <= 4 * d * d:
        raise CurveUnsupported("prime field too small for this degree")

    if isinstance(fld, RationalField):
        # early rejection: non-ordinary points at infinity are cheap to find
        inf_pts, res_inf = _infinity_scan(f, fld)
        for c in inf_pts:
            pt = normalize_point(c, fld)
            m = local_expansion(f, list(pt), d).multiplicity()
            if m and m >= 2:
                _check_ordinary(f, pt, m)
        if res_inf > 0:
            raise IrrationalSingularLocus(
                "singular locus on z=0 has a non-rational residual factor")
        _squarefree_suspicion(f)

    sings, residual = singular_locus(f, fld)
    if residual > 0:
        raise IrrationalSingularLocus(
            f"singular locus has a non-rational residual of degree {residual}")
    for s in sings:
        if s.multiplicity < 2:
            raise InvalidInput("a smooth point was reported singular")
        _check_ordinary(f, s.coords, s.multiplicity)

    if declared_sings is not None:
        declared = {(normalize_point(c, fld), int(m)) for c, m in declared_sings}
        found = {(s.coords, s.multiplicity) for s in sings}
        declared_keys = {(tuple(str(x) for x in c), m) for c, m in declared}
        found_keys = {(tuple(str(x) for x in c), m) for c, m in found}
        if declared_keys != found_keys:
            raise InvalidInput(
                f"declared singular points {sorted(declared_keys)} do not match "
                f"the discovered ones {sorted(found_keys)}")

    g = genus(d, [s.multiplicity for s in sings])
    if g < 3:
        raise GenusTooSmall(f"genus {g} < 3")

    bp = None
    if base_point is not None:
        bp = normalize_point(base_point, fld)
        if f.evaluate(list(bp)):
            raise PointNotOnCurve(f"({':'.join(str(c) for c in bp)}) is not on the curve")
        if all(not f.derivative(i).evaluate(list(bp)) for i in range(3)):
            raise InvalidInput("the marked base point must be a smooth point")

    return PlaneCurve(f=f, degree=d, sings=tuple(sings), genus=g, field=fld,
                      base_point=bp, validated=True)


# --- generators -----------------------------------------------------------------


def _rand_coeff(rng, height):
    bound = (1 << height) - 1
    return rng.randint(-bound, bound)


def gen_trigonal_projection_candidate(d, coeff_height, rng):
    """Random degree-d form with z-exponent at most 3 everywhere, so the
    point (0:0:1) has multiplicity d-3 and projecting from it is 3:1."""
    terms = {}
    for i in range(d + 1):
        for j in range(d + 1 - i):
            k = d - i - j
            if k <= 3:
                c = _rand_coeff(rng, coeff_height)
                if c:
                    terms[(i, j, k)] = rat(c)
    return MPoly(3, terms)


def gen_trigonal_projection(d, coeff_height=5, seed=0, budget=50):
    """Validated trigonal curve of degree d with an ordinary multiplicity
    (d-3) point at (0:0:1); genus 2d-5.  For d=4 the point is smooth and is
    recorded as the marked base point."""
    if d < 4:
        raise InvalidInput("projection generator needs degree >= 4")
    rng = derived_rng(seed, f"projection:{d}:{coeff_height}")
    m = d - 3
    for attempt in range(budget):
        f = gen_trigonal_projection_candidate(d, coeff_height, rng)
        if not f:
            continue
        cone = [c for (i, j, k), c in f.terms.items() if k == 3]
        if not cone:
            continue
        cone_form = MPoly(2, {(i, j): c for (i, j, k), c in f.terms.items() if k == 3})
        if not binary_form_squarefree(cone_form):
            continue
        try:
            curve = validate_curve(
                f, base_point=(0, 0, 1) if d == 4 else None, fld=QQ)
        except UnsupportedInput:
            continue
        expected = [] if d == 4 else [((rat(0), rat(0), rat(1)), m)]
        got = [(s.coords, s.multiplicity) for s in curve.sings]
        if got != expected or curve.genus != 2 * d - 5:
            continue
        curve.provenance = {"generator": "projection", "d": d,
                            "height": coeff_height, "seed": seed,
                            "attempts": attempt + 1}
        return curve
    raise GenerationFailed(f"no valid projection curve of degree {d} within {budget} tries")


def gen_method1_candidate(deg_x, coeff_height, rng):
    """Random affine polynomial with y-degree exactly 3 and x-degree exactly
    deg_x, homogenized."""
    terms = {}
    for i in range(deg_x + 1):
        for j in range(4):
            c = _rand_coeff(rng, coeff_height)
            if c:
                terms[(i, j)] = c
    while not terms.get((deg_x, 3)):
        c = _rand_coeff(rng, coeff_height)
        if c:
            terms[(deg_x, 3)] = c
    d = deg_x + 3
    return MPoly(3, {(i, j, d - i - j): rat(c) for (i, j), c in terms.items()})


def gen_method1(deg_x, coeff_height=5, seed=0, budget=50):
    """Validated curve with deg_y = 3 whose projection (x:y:z) -> (x:z) is
    3:1; accepted samples have genus 2(deg_x - 1)."""
    if deg_x < 2:
        raise InvalidInput("method-1 generator needs deg_x >= 2")
    rng = derived_rng(seed, f"m1:{deg_x}:{coeff_height}")
    for attempt in range(budget):
        f = gen_method1_candidate(deg_x, coeff_height, rng)
        try:
            curve = validate_curve(f, fld=QQ)
        except UnsupportedInput:
            continue
        if curve.genus != 2 * (deg_x - 1):
            continue
        curve.provenance = {"generator": "m1", "deg_x": deg_x,
                            "height": coeff_height, "seed": seed,
                            "attempts": attempt + 1}
        return curve
    raise GenerationFailed(f"no valid method-1 curve with deg_x={deg_x} within {budget} tries")


def _upoly_to_uvar(a, nvars, var):
    terms = {}
    for k, c in enumerate(a.coeffs):
        if c:
            e = [0] * nvars
            e[var] = k
            terms[tuple(e)] = c
    return MPoly(nvars, terms)


def gen_method2_candidate(d, coeff_height, rng):
    """Eliminate the parameter from a random cubic extension model:
    0 = x^3 - a1(u) x - a2(u), 0 = y - a3(u) - a4(u) x - a5(u) x^2."""
    from .poly import resultant
    coeff_lists = []
    for _ in range(5):
        cs = [rat(_rand_coeff(rng, coeff_height)) for _ in range(d + 1)]
        while not cs[-1]:
            cs[-1] = rat(_rand_coeff(rng, coeff_height))
        coeff_lists.append(UPoly(cs))
    a1, a2, a3, a4, a5 = [_upoly_to_uvar(a, 3, 2) for a in coeff_lists]
    x = MPoly.variable(3, 0)
    y = MPoly.variable(3, 1)
    F = x ** 3 - a1 * x - a2
    G = y - a3 - a4 * x - a5 * (x ** 2)
    R = resultant(F, G, 2)
    return R


def _homogenize_xy(R):
    """Embed a polynomial in x, y (u-free) as a degree-d form in x, y, z."""
    if R.degree_in(2) != 0:
        raise InvalidInput("resultant still involves the eliminated variable")
    d = R.total_degree()
    terms = {}
    for (i, j, _k), c in R.terms.items():
        terms[(i, j, d - i - j)] = c
    return MPoly(3, terms)


def _integer_content_normalize(f):
    from math import gcd
    denlcm = 1
    for c in f.terms.values():
        den = int(rat(c).denominator)
        denlcm = denlcm * den // gcd(denlcm, den)
    g = 0
    for c in f.terms.values():
        g = gcd(g, abs(int(rat(c) * denlcm)))
    if g == 0:
        return f
    return f.map_coeffs(lambda c: rat(c) * denlcm / g)


def gen_method2(d, coeff_height=2, seed=0, budget=50):
    """Validated curve from the parameter-elimination construction; most
    candidates have non-rational or non-ordinary singularities and are
    rejected, which the provenance records."""
    if d < 1:
        raise InvalidInput("method-2 generator needs degree >= 1")
    rng = derived_rng(seed, f"m2:{d}:{coeff_height}")
    rejected = 0
    for attempt in range(budget):
        R = gen_method2_candidate(d, coeff_height, rng)
        if not R or R.degree_in(0) < 1 or R.degree_in(1) < 1:
            rejected += 1
            continue
        f = _integer_content_normalize(_homogenize_xy(R))
        if f.total_degree() < 4:
            rejected += 1
            continue
        try:
            curve = validate_curve(f, fld=QQ)
        except UnsupportedInput:
            rejected += 1
            continue
        curve.provenance = {"generator": "m2", "d": d, "height": coeff_height,
                            "seed": seed, "attempts": attempt + 1}
        return curve
    raise GenerationFailed(
        f"no valid method-2 curve with d={d} within {budget} tries "
        f"({rejected} candidates rejected by validation)")


def gen_singular_model(d, assigned, coeff_height=3, seed=0, budget=200):
    """Random degree-d curve with exactly the assigned ordinary singular
    points: ``assigned`` is a list of ((a, b, c), multiplicity) pairs."""
    from .linalg import kernel_basis
    monos = [(i, j, d - i - j) for i in range(d + 1) for j in range(d + 1 - i)]
    rows = []
    for coords, m in assigned:
        pt = normalize_point(coords, QQ)
        # conditions: all local pieces of degree < m vanish at the point
        expansions = [local_expansion(MPoly.monomial(3, mono, rat(1)), list(pt), m - 1)
                      for mono in monos]
        for deg in range(m):
            for a in range(deg + 1):
                row = [exp.pieces[deg].terms.get((a, deg - a), rat(0))
                       for exp in expansions]
                rows.append(row)
    kern = kernel_basis(rows) if rows else [[rat(1) if i == j else rat(0)
                                             for i in range(len(monos))]
                                            for j in range(len(monos))]
    if not kern:
        raise GenerationFailed("no curve satisfies the assigned singularities")
    rng = derived_rng(seed, f"singmodel:{d}:{assigned!r}:{coeff_height}")
    want = {(tuple(str(x) for x in normalize_point(c, QQ)), m) for c, m in assigned}
    for attempt in range(budget):
        combo = [_rand_coeff(rng, coeff_height) for _ in kern]
        if not any(combo):
            continue
        coeffs = [sum(c * v[i] for c, v in zip(combo, kern)) for i in range(len(monos))]
        f = MPoly(3, {mono: rat(c) if isinstance(c, int) else c
                      for mono, c in zip(monos, coeffs) if c})
        if not f:
            continue
        try:
            curve = validate_curve(f, fld=QQ)
        except UnsupportedInput:
            continue
        got = {(tuple(str(x) for x in s.coords), s.multiplicity) for s in curve.sings}
        if got != want:
            continue
        curve.provenance = {"generator": "singular_model", "d": d,
                            "assigned": assigned, "height": coeff_height,
                            "seed": seed, "attempts": attempt + 1}
        return curve
    raise GenerationFailed("no valid curve with the assigned singularities")


# --- curve file format ------------------------------------------------------------


def _parse_point(text, lineno):
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError("expected a point like (a:b:c)", lineno)
    parts = text[1:-1].split(":")
    if len(parts) != 3:
        raise ParseError("a point needs three coordinates", lineno)
    vals = []
    for part in parts:
        part = part.strip()
        try:
            if "/" in part:
                num, den = part.split("/")
                vals.append(rat(int(num), int(den)))
            else:
                vals.append(rat(int(part)))
        except ValueError:
            raise ParseError(f"bad coordinate {part!r}", lineno)
    return tuple(vals)


def parse_curve_file(text):
    """Parse the line-oriented curve format; returns a dict with keys
    f, sings, point, field."""
    f = None
    sings = []
    point = None
    fld = QQ
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError("expected 'key = value'", lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "f":
            try:
                f = parse_poly(value)
            except InvalidInput as e:
                raise ParseError(f"bad polynomial: {e}", lineno)
        elif key == "sing":
            if " mult " not in value:
                raise ParseError("expected 'sing = (a:b:c) mult m'", lineno)
            ptext, _, mtext = value.partition(" mult ")
            coords = _parse_point(ptext, lineno)
            try:
                m = int(mtext.strip())
            except ValueError:
                raise ParseError(f"bad multiplicity {mtext!r}", lineno)
            sings.append((coords, m))
        elif key == "point":
            point = _parse_point(value, lineno)
        elif key == "field":
            if value == "Q":
                fld = QQ
            elif value.startswith("Fp"):
                try:
                    fld = PrimeField(int(value[2:].strip()))
                except (ValueError, InvalidInput) as e:
                    raise ParseError(f"bad prime field: {e}", lineno)
            else:
                raise ParseError(f"unknown field {value!r}", lineno)
        else:
            raise ParseError(f"unknown key {key!r}", lineno)
    if f is None:
        raise ParseError("missing 'f = <polynomial>' line", 0)
    return {"f": f, "sings": sings, "point": point, "field": fld}


def write_curve_file(curve, comments=()):
    lines = [f"# {c}" for c in comments]
    if curve.provenance:
        prov = curve.provenance
        lines.append(f"# generator = {prov.get('generator')}")
        lines.append(f"# seed = {prov.get('seed')}")
        lines.append(f"# attempts = {prov.get('attempts')}")
    lines.append(f"# genus = {curve.genus}")
    lines.append(f"f = {poly_str(curve.f)}")
    for s in curve.sings:
        coords = ":".join(str(c) for c in s.coords)
        lines.append(f"sing = ({coords}) mult {s.multiplicity}")
    if curve.base_point is not None:
        coords = ":".join(str(c) for c in curve.base_point)
        lines.append(f"point = ({coords})")
    if isinstance(curve.field, PrimeField):
        lines.append(f"field = Fp {curve.field.p}")
    else:
        lines.append("field = Q")
    return "\n".join(lines) + "\n"
