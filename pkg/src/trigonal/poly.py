"""Sparse multivariate and dense univariate polynomial arithmetic.

MPoly is a dict from exponent tuples to nonzero coefficients; UPoly is a
dense coefficient list, lowest degree first.  Both work over any of the
scalar variants.  Canonical printing order is graded lexicographic, which
keeps CLI output byte-stable.
"""

from .errors import InvalidInput
from .intutil import divisors
from .scalars import is_rational, rat, sdiv

__all__ = ["MPoly", "UPoly", "resultant", "det_mpoly", "parse_poly",
           "poly_str", "local_expansion", "LocalExpansion",
           "binary_form_squarefree"]


def _grlex_key(exps):
    return (sum(exps), exps)


class MPoly:
    """Sparse multivariate polynomial."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    e = tuple(e)
                    if len(e) != nvars:
                        raise InvalidInput("exponent tuple has wrong length")
                    nc = self.terms.get(e, 0) + c
                    if nc:
                        self.terms[e] = nc
                    else:
                        self.terms.pop(e, None)

    # --- constructors ---

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        p = cls(nvars)
        if c:
            p.terms[(0,) * nvars] = c
        return p

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, nvars, exps, c=1):
        return cls(nvars, {tuple(exps): c})

    # --- basic structure ---

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, MPoly):
            if self.nvars != other.nvars or len(self.terms) != len(other.terms):
                return False
            for e, c in self.terms.items():
                if e not in other.terms or other.terms[e] != c:
                    return False
            return True
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset((e, str(c)) for e, c in self.terms.items())))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var):
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        return len(degs) == 1

    def homogeneous_components(self):
        comps = {}
        for e, c in self.terms.items():
            comps.setdefault(sum(e), {})[e] = c
        return {d: MPoly(self.nvars, t) for d, t in sorted(comps.items())}

    def terms_sorted(self):
        """Terms in graded-lex descending order."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]),
                      reverse=True)

    def leading_term(self):
        if not self.terms:
            raise InvalidInput("leading term of the zero polynomial")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    # --- arithmetic ---

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.nvars, other)
        if other.nvars != self.nvars:
            raise InvalidInput("variable count mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
        p = MPoly(self.nvars)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = MPoly(self.nvars)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            if not other:
                return MPoly(self.nvars)
            p = MPoly(self.nvars)
            p.terms = {e: c * other for e, c in self.terms.items()}
            return p
        if other.nvars != self.nvars:
            raise InvalidInput("variable count mismatch")
        out = {}
        n = self.nvars
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(e1[i] + e2[i] for i in range(n))
                nc = out.get(e, 0) + c1 * c2
                if nc:
                    out[e] = nc
                else:
                    out.pop(e, None)
        p = MPoly(self.nvars)
        p.terms = out
        return p

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InvalidInput("polynomial power requires a non-negative int")
        out = MPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def map_coeffs(self, fn):
        p = MPoly(self.nvars)
        for e, c in self.terms.items():
            nc = fn(c)
            if nc:
                p.terms[e] = nc
        return p

    def derivative(self, var):
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k:
                ne = list(e)
                ne[var] = k - 1
                out[tuple(ne)] = k * c
        p = MPoly(self.nvars)
        p.terms = {e: c for e, c in out.items() if c}
        return p

    def coeffs_by_power(self, var):
        """Coefficients of var^k as polynomials with var zeroed out;
        returns a list indexed by k up to degree_in(var)."""
        d = self.degree_in(var)
        out = [MPoly(self.nvars) for _ in range(d + 1)]
        for e, c in self.terms.items():
            k = e[var]
            ne = list(e)
            ne[var] = 0
            out[k].terms[tuple(ne)] = c
        return out

    def substitute(self, images):
        """Substitute images[i] (MPoly or scalar) for variable i."""
        if len(images) != self.nvars:
            raise InvalidInput("one image per variable required")
        target = None
        for im in images:
            if isinstance(im, MPoly):
                if target is None:
                    target = im.nvars
                elif im.nvars != target:
                    raise InvalidInput("images have mixed variable counts")
        if target is None:
            return self.evaluate(images)
        lifted = [im if isinstance(im, MPoly) else MPoly.const(target, im)
                  for im in images]
        caches = [{0: MPoly.const(target, 1)} for _ in range(self.nvars)]

        def power(i, k):
            cache = caches[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * lifted[i]
            return cache[k]

        total = MPoly(target)
        for e, c in self.terms.items():
            prod = MPoly.const(target, c)
            for i, k in enumerate(e):
                if k:
                    prod = prod * power(i, k)
            total = total + prod
        return total

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise InvalidInput("one value per variable required")
        caches = [{0: 1} for _ in range(self.nvars)]

        def power(i, k):
            cache = caches[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * point[i]
            return cache[k]

        total = 0
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v = v * power(i, k)
            total = total + v
        return total

    # --- division ---

    def divmod_single(self, divisor):
        """Division by one divisor in graded-lex order: self = q*divisor + r,
        no term of r divisible by the leading term of divisor."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        dl, dc = divisor.leading_term()
        n = self.nvars
        rem = dict(self.terms)
        q = {}
        r = {}
        while rem:
            e = max(rem, key=_grlex_key)
            c = rem.pop(e)
            diff = tuple(e[i] - dl[i] for i in range(n))
            if any(x < 0 for x in diff):
                r[e] = c
                continue
            f = sdiv(c, dc)
            nq = q.get(diff, 0) + f
            if nq:
                q[diff] = nq
            else:
                q.pop(diff, None)
            for de, dcf in divisor.terms.items():
                if de == dl:
                    continue  # cancels against the popped leading term
                ne = tuple(de[i] + diff[i] for i in range(n))
                nc = rem.get(ne, 0) - f * dcf
                if nc:
                    rem[ne] = nc
                else:
                    rem.pop(ne, None)
        qp = MPoly(n)
        qp.terms = q
        rp = MPoly(n)
        rp.terms = r
        return qp, rp

    def exact_div(self, divisor):
        q, r = self.divmod_single(divisor)
        if r:
            raise InvalidInput("exact division has a nonzero remainder")
        return q

    def divisible_by(self, divisor):
        if not self:
            return True
        _, r = self.divmod_single(divisor)
        return not r

    def __repr__(self):
        return f"MPoly({poly_str(self)})"


# --- univariate polynomials --------------------------------------------------


class UPoly:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs

    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return (len(self.coeffs) == len(other.coeffs)
                    and all(a == b for a, b in zip(self.coeffs, other.coeffs)))
        return NotImplemented

    def __hash__(self):
        return hash(tuple(str(c) for c in self.coeffs))

    def lc(self):
        if not self.coeffs:
            raise InvalidInput("leading coefficient of the zero polynomial")
        return self.coeffs[-1]

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(out)

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            if not other:
                return UPoly()
            return UPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return UPoly(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by x^k."""
        if not self.coeffs:
            return UPoly()
        return UPoly([0] * k + self.coeffs)

    def divmod(self, other):
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        d = other.degree()
        lc = other.lc()
        q = [0] * max(0, len(r) - d)
        while len(r) - 1 >= d and r:
            if not r[-1]:
                r.pop()
                continue
            f = sdiv(r[-1], lc)
            pos = len(r) - 1 - d
            q[pos] = f
            for i, c in enumerate(other.coeffs):
                r[pos + i] = r[pos + i] - f * c
            r.pop()
        return UPoly(q), UPoly(r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.lc()
        if lc == 1:
            return self
        return UPoly([sdiv(c, lc) for c in self.coeffs])

    def derivative(self):
        return UPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x):
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def gcd(self, other):
        a, b = self, other
        while b:
            a, b = b, (a % b)
            if b:
                b = b.monic()
        return a.monic()

    def __repr__(self):
        return f"UPoly({self.coeffs})"

    @classmethod
    def from_mpoly(cls, p, var):
        """Extract a univariate polynomial; all other variables must be absent."""
        coeffs = [0] * (p.degree_in(var) + 1)
        for e, c in p.terms.items():
            if any(k for i, k in enumerate(e) if i != var):
                raise InvalidInput("polynomial is not univariate in the chosen variable")
            coeffs[e[var]] = c
        return cls(coeffs)

    def to_mpoly(self, nvars, var):
        terms = {}
        for k, c in enumerate(self.coeffs):
            if c:
                e = [0] * nvars
                e[var] = k
                terms[tuple(e)] = c
        return MPoly(nvars, terms)


def squarefree_part(u):
    """u / gcd(u, u'), normalized monic.  Exposed on UPoly callers."""
    if not u:
        raise InvalidInput("square-free part of the zero polynomial")
    g = u.gcd(u.derivative())
    if g.degree() <= 0:
        return u.monic()
    return (u // g).monic()


UPoly.squarefree_part = squarefree_part


def rational_roots(u):
    """All rational roots of u with multiplicity (repeats), ascending.

    Divisor candidates of the extreme coefficients after clearing
    denominators; every candidate is verified and deflated exactly.
    """
    if not u:
        raise InvalidInput("rational roots of the zero polynomial")
    for c in u.coeffs:
        if not is_rational(c):
            raise InvalidInput("rational_roots requires rational coefficients")
    denlcm = 1
    for c in u.coeffs:
        d = int(rat(c).denominator)
        denlcm = denlcm * d // _gcd_int(denlcm, d)
    ints = [int(rat(c) * denlcm) for c in u.coeffs]
    roots = []
    # factor out x^k
    k = 0
    while k < len(ints) and ints[k] == 0:
        k += 1
    roots.extend([rat(0)] * k)
    ints = ints[k:]
    if len(ints) <= 1:
        return roots
    g = 0
    for c in ints:
        g = _gcd_int(g, abs(c))
    ints = [c // g for c in ints]
    cur = UPoly([rat(c) for c in ints])
    a0, an = abs(ints[0]), abs(ints[-1])
    found = []
    for p in divisors(a0):
        for q in divisors(an):
            if _gcd_int(p, q) != 1:
                continue
            for cand in (rat(p, q), rat(-p, q)):
                if cur.degree() < 1:
                    break
                mult = 0
                while True:
                    quo, rem = cur.divmod(UPoly([-cand, rat(1)]))
                    if rem:
                        break
                    cur = quo
                    mult += 1
                if mult:
                    found.extend([cand] * mult)
    roots.extend(found)
    return sorted(roots)


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


# --- resultants ----------------------------------------------------------------


def det_mpoly(rows):
    """Fraction-free (Bareiss) determinant of a square MPoly matrix."""
    n = len(rows)
    if n == 0:
        raise InvalidInput("empty matrix")
    nvars = rows[0][0].nvars
    m = [list(r) for r in rows]
    sign = 1
    prev = MPoly.const(nvars, 1)
    for k in range(n - 1):
        piv = None
        for i in range(k, n):
            if m[i][k]:
                piv = i
                break
        if piv is None:
            return MPoly(nvars)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = pk * m[i][j] - mik * m[k][j]
                m[i][j] = num.exact_div(prev) if num else num
            m[i][k] = MPoly(nvars)
        prev = pk
    out = m[n - 1][n - 1]
    return out if sign == 1 else -out


def sylvester_matrix(f, g, var):
    """Sylvester matrix of f, g seen as univariate in ``var``; entries are
    polynomials in the remaining variables (the chosen variable zeroed)."""
    fm = f.degree_in(var)
    gn = g.degree_in(var)
    fc = f.coeffs_by_power(var)
    gc = g.coeffs_by_power(var)
    size = fm + gn
    zero = MPoly(f.nvars)
    rows = [[zero] * size for _ in range(size)]
    for i in range(gn):
        for k in range(fm + 1):
            rows[i][i + k] = fc[fm - k]
    for i in range(fm):
        for k in range(gn + 1):
            rows[gn + i][i + k] = gc[gn - k]
    return rows


def resultant(f, g, var):
    """Sylvester resultant of f and g with respect to variable ``var``."""
    if not f or not g:
        raise InvalidInput("resultant of a zero polynomial")
    if f.nvars != g.nvars:
        raise InvalidInput("variable count mismatch")
    m = f.degree_in(var)
    n = g.degree_in(var)
    if m == 0 and n == 0:
        raise InvalidInput("both polynomials are constant in the chosen variable")
    if m == 0:
        return f ** n
    if n == 0:
        return g ** m
    return det_mpoly(sylvester_matrix(f, g, var))


def resultant_bivariate(a, b, elim_var, keep_var):
    """Resultant of two bivariate polynomials, eliminating ``elim_var``;
    returns a UPoly in ``keep_var``.

    Computed by evaluating the Sylvester determinant (layout fixed by the
    exact degrees, so evaluation commutes with it) at integer points and
    interpolating in Newton form.  Exact over any of the scalar fields.
    """
    from .linalg import Mat, mat_det
    from .scalars import common_field
    if not a or not b:
        raise InvalidInput("resultant of a zero polynomial")
    m = a.degree_in(elim_var)
    n = b.degree_in(elim_var)
    if m == 0 and n == 0:
        raise InvalidInput("both polynomials are constant in the eliminated variable")
    fld = common_field([c for c in a.terms.values()] + [c for c in b.terms.values()])
    if m == 0:
        base = UPoly.from_mpoly(a, keep_var)
        out = UPoly([fld.one()])
        for _ in range(n):
            out = out * base
        return out
    if n == 0:
        base = UPoly.from_mpoly(b, keep_var)
        out = UPoly([fld.one()])
        for _ in range(m):
            out = out * base
        return out

    def coeff_upolys(p, deg):
        cols = [[0] * (p.degree_in(keep_var) + 1) for _ in range(deg + 1)]
        for e, c in p.terms.items():
            cols[e[elim_var]][e[keep_var]] = c
        return [UPoly(cs) for cs in cols]

    ac = coeff_upolys(a, m)
    bc = coeff_upolys(b, n)
    bound = m * max(b.degree_in(keep_var), 0) + n * max(a.degree_in(keep_var), 0)
    size = m + n
    xs = []
    ys = []
    x = 0
    while len(xs) < bound + 1:
        xv = fld.coerce(x if x % 2 == 0 else -x)
        x += 1
        av = [c.eval(xv) for c in ac]
        bv = [c.eval(xv) for c in bc]
        rows = [[fld.zero()] * size for _ in range(size)]
        for i in range(n):
            for k in range(m + 1):
                rows[i][i + k] = fld.coerce(av[m - k]) if isinstance(av[m - k], int) else av[m - k]
        for i in range(m):
            for k in range(n + 1):
                rows[n + i][i + k] = fld.coerce(bv[n - k]) if isinstance(bv[n - k], int) else bv[n - k]
        xs.append(xv)
        ys.append(mat_det(Mat.from_rows(rows, fld)))
    # Newton interpolation
    coef = list(ys)
    npts = len(xs)
    for i in range(1, npts):
        for j in range(npts - 1, i - 1, -1):
            coef[j] = sdiv(coef[j] - coef[j - 1], xs[j] - xs[j - i])
    poly = UPoly([coef[-1]])
    for i in range(npts - 2, -1, -1):
        poly = poly * UPoly([-xs[i], fld.one()])
        poly = poly + UPoly([coef[i]])
    return poly


# --- local expansions -----------------------------------------------------------


class LocalExpansion:
    """Taylor pieces of a dehomogenized form translated to a point."""

    __slots__ = ("chart", "point", "pieces")

    def __init__(self, chart, point, pieces):
        self.chart = chart
        self.point = point
        self.pieces = pieces

    def multiplicity(self):
        for d, piece in enumerate(self.pieces):
            if piece:
                return d
        return None


def local_expansion(f, point, order=None):
    """Dehomogenize f at an affine chart containing the point, translate the
    point to the origin, and return the homogeneous pieces of degree
    0..order in the two chart variables."""
    if f.nvars != 3:
        raise InvalidInput("local expansion expects a form in 3 variables")
    if not f.is_homogeneous() or not f:
        raise InvalidInput("local expansion expects a nonzero homogeneous form")
    if len(point) != 3 or not any(point):
        raise InvalidInput("(0,0,0) is not a projective point")
    point = [rat(x) if isinstance(x, int) else x for x in point]
    chart = max(i for i in range(3) if point[i])
    s = point[chart]
    aff = [point[i] / s for i in range(3)]
    others = [i for i in range(3) if i != chart]
    if order is None:
        order = f.total_degree()
    images = [None] * 3
    images[chart] = MPoly.const(2, 1)
    for slot, i in enumerate(others):
        img = MPoly.variable(2, slot)
        if aff[i]:
            img = img + MPoly.const(2, aff[i])
        images[i] = img
    g = f.substitute(images)
    comps = g.homogeneous_components()
    return LocalExpansion(chart, tuple(aff),
                          [comps.get(d, MPoly(2)) for d in range(order + 1)])


def binary_form_squarefree(piece):
    """Whether a nonzero homogeneous binary form has distinct linear factors
    over the algebraic closure."""
    if not piece:
        raise InvalidInput("zero binary form")
    if piece.nvars != 2 or not piece.is_homogeneous():
        raise InvalidInput("expected a homogeneous binary form")
    kv = min(e[1] for e in piece.terms)
    if kv > 1:
        return False
    deg = piece.total_degree()
    coeffs = [0] * (deg + 1)
    for e, c in piece.terms.items():
        coeffs[e[0]] = c
    b = UPoly(coeffs)
    g = b.gcd(b.derivative())
    return g.degree() <= 0


# --- text grammar -----------------------------------------------------------------

DEFAULT_NAMES = ("x", "y", "z")


def _coeff_str(c):
    s = str(c)
    if ("+" in s[1:]) or ("-" in s[1:]):
        return f"({s})"
    return s


def poly_str(p, names=None):
    """Canonical text form: graded-lex descending terms."""
    if names is None:
        names = DEFAULT_NAMES if p.nvars == 3 else tuple(f"x{i}" for i in range(p.nvars))
    if not p.terms:
        return "0"
    parts = []
    for e, c in p.terms_sorted():
        factors = []
        for i, k in enumerate(e):
            if k == 1:
                factors.append(names[i])
            elif k > 1:
                factors.append(f"{names[i]}^{k}")
        mono = "*".join(factors)
        cs = _coeff_str(c)
        if not mono:
            term = cs
        elif cs == "1":
            term = mono
        elif cs == "-1":
            term = f"-{mono}"
        else:
            term = f"{cs}*{mono}"
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise InvalidInput(f"{msg} at position {self.pos}: {self.text!r}")

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def take_int(self):
        ch = self.peek()
        if ch is None or not ch.isdigit():
            self.error("expected an integer")
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start:self.pos])

    def take_name(self):
        ch = self.peek()
        start = self.pos
        while (self.pos < len(self.text)
               and (self.text[self.pos].isalnum() or self.text[self.pos] == "_")):
            self.pos += 1
        if self.pos == start:
            self.error("expected a variable name")
        return self.text[start:self.pos]


def parse_poly(text, names=DEFAULT_NAMES):
    """Parse the canonical grammar: rational coefficients, named variables,
    operators + - * ^, no implicit multiplication."""
    toks = _Tokens(text)
    nvars = len(names)
    index = {n: i for i, n in enumerate(names)}
    total = MPoly(nvars)

    def parse_factor():
        ch = toks.peek()
        if ch is None:
            toks.error("unexpected end of input")
        if ch.isdigit():
            num = toks.take_int()
            if toks.peek() == "/":
                toks.pos += 1
                den = toks.take_int()
                if den == 0:
                    toks.error("zero denominator")
                return (rat(num, den), None)
            return (rat(num), None)
        if ch.isalpha():
            name = toks.take_name()
            if name not in index:
                toks.error(f"unknown variable {name!r}")
            k = 1
            if toks.peek() == "^":
                toks.pos += 1
                k = toks.take_int()
            return (None, (index[name], k))
        toks.error(f"unexpected character {ch!r}")

    while True:
        sign = 1
        ch = toks.peek()
        if ch == "+":
            toks.pos += 1
        elif ch == "-":
            sign = -1
            toks.pos += 1
        coeff = rat(sign)
        exps = [0] * nvars
        while True:
            c, v = parse_factor()
            if c is not None:
                coeff = coeff * c
            else:
                exps[v[0]] += v[1]
            if toks.peek() == "*":
                toks.pos += 1
                continue
            break
        total = total + MPoly.monomial(nvars, exps, coeff)
        ch = toks.peek()
        if ch is None:
            break
        if ch not in "+-":
            toks.error(f"unexpected character {ch!r}")
    return total
