"""Modular helpers for the singular-locus scan.

Polynomials mod p are plain int lists, lowest degree first.  The primes are
fixed large primes chosen deterministically at import, so runs are
reproducible.  Discovery happens mod p; every reported point is verified
exactly over the ground field by the caller.
"""

from .errors import InvalidInput
from .intutil import is_prime
from .scalars import is_rational, rat


def _primes_below(start, count):
    out = []
    n = start - 1 if start % 2 == 0 else start
    while len(out) < count:
        n -= 2
        if is_prime(n):
            out.append(n)
    return out


# ~2^61; the first is used for rational reconstruction (bound ~2^30).
PRIMES = _primes_below(1 << 61, 4)
RECON_BOUND = 1 << 30


# --- F_p[x] as int lists -----------------------------------------------------

def fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def fp_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return fp_trim(out)


def fp_sub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return fp_trim(out)


def fp_scale(a, c, p):
    c %= p
    if c == 0:
        return []
    return [x * c % p for x in a]


def fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    return fp_trim(out)


def fp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("mod-p division by zero polynomial")
    r = list(a)
    d = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(r) - d)
    while len(r) - 1 >= d and r:
        if r[-1] == 0:
            r.pop()
            continue
        f = r[-1] * inv % p
        pos = len(r) - 1 - d
        q[pos] = f
        for i, c in enumerate(b):
            r[pos + i] = (r[pos + i] - f * c) % p
        r.pop()
    return fp_trim(q), fp_trim(r)


def fp_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return [x * inv % p for x in a]


def fp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, fp_divmod(a, b, p)[1]
    return fp_monic(a, p)


def fp_derivative(a, p):
    return fp_trim([i * c % p for i, c in enumerate(a)][1:])


def fp_squarefree(a, p):
    """Square-free part of a mod p (p larger than the degree)."""
    if not a:
        return a
    d = fp_derivative(a, p)
    if not d:
        return [1]
    g = fp_gcd(a, d, p)
    if len(g) == 1:
        return fp_monic(a, p)
    return fp_monic(fp_divmod(a, g, p)[0], p)


def fp_eval(a, x, p):
    total = 0
    for c in reversed(a):
        total = (total * x + c) % p
    return total


def fp_powmod(base, e, mod, p):
    """base^e modulo the polynomial mod, coefficients mod p."""
    result = [1]
    base = fp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = fp_divmod(fp_mul(result, base, p), mod, p)[1]
        base = fp_divmod(fp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def fp_roots(a, p, max_tries=64):
    """Distinct roots of a in F_p, via x^p - x and deterministic splitting."""
    a = fp_monic(list(a), p)
    if not a:
        raise InvalidInput("roots of the zero polynomial")
    if len(a) == 1:
        return []
    xp = fp_powmod([0, 1], p, a, p)
    lin = fp_gcd(fp_sub(xp, [0, 1], p), a, p)
    roots = []
    stack = [lin]
    shift = 0
    while stack:
        g = stack.pop()
        if len(g) <= 1:
            continue
        if len(g) == 2:
            roots.append((-g[0]) * pow(g[1], p - 2, p) % p)
            continue
        done = False
        while not done:
            shift += 1
            if shift > max_tries:
                raise InvalidInput("root splitting did not converge")
            h = fp_powmod([shift, 1], (p - 1) // 2, g, p)
            h = fp_sub(h, [1], p)
            d = fp_gcd(h, g, p)
            if 0 < len(d) - 1 < len(g) - 1:
                stack.append(d)
                stack.append(fp_divmod(g, d, p)[0])
                done = True
    return sorted(roots)


def rational_reconstruct(r, p, bound=RECON_BOUND):
    """num/den == r (mod p) with |num| <= bound and 0 < den <= bound,
    or None."""
    r %= p
    r0, r1 = p, r
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound:
        return None
    num, den = r1, t1
    if den < 0:
        num, den = -num, -den
    from math import gcd
    if gcd(num, den) != 1 or den % p == 0:
        return None
    return rat(num, den)


# --- reductions of exact polynomials ----------------------------------------

def mpoly_mod_p(f, p):
    """Coefficient dict of f reduced mod p; None when a denominator or the
    whole reduction degenerates (caller switches primes)."""
    out = {}
    for e, c in f.terms.items():
        if not is_rational(c):
            raise InvalidInput("mod-p reduction requires rational coefficients")
        c = rat(c)
        num, den = int(c.numerator), int(c.denominator)
        if den % p == 0:
            return None
        v = num * pow(den, p - 2, p) % p
        if v:
            out[e] = v
    return out


def fp_det(rows, p):
    n = len(rows)
    m = [list(r) for r in rows]
    det = 1
    for c in range(n):
        piv = None
        for i in range(c, n):
            if m[i][c] % p:
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c] % p
        inv = pow(m[c][c], p - 2, p)
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv % p
                for j in range(c, n):
                    if m[c][j]:
                        m[i][j] = (m[i][j] - f * m[c][j]) % p
    return det % p


def _newton_coeffs(xs, ys, p):
    n = len(xs)
    c = list(ys)
    for i in range(1, n):
        for j in range(n - 1, i - 1, -1):
            inv = pow((xs[j] - xs[j - i]) % p, p - 2, p)
            c[j] = (c[j] - c[j - 1]) * inv % p
    return c


def fp_interpolate(xs, ys, p):
    """Interpolating polynomial through the given points, Newton form."""
    c = _newton_coeffs(xs, ys, p)
    poly = [c[-1]]
    for i in range(len(xs) - 2, -1, -1):
        poly = fp_mul(poly, [(-xs[i]) % p, 1], p)
        poly = fp_add(poly, [c[i]], p)
    return fp_trim(poly)


def fp_resultant_keepvar(a_coeffs, b_coeffs, p, deg_bound):
    """Resultant in the eliminated variable of two bivariate polynomials.

    a_coeffs/b_coeffs: lists over the eliminated-variable power, each entry
    an int list in the kept variable (mod p).  Returns an int list (the
    resultant as a polynomial in the kept variable), computed by evaluation
    at 0..deg_bound and interpolation.  The Sylvester layout is fixed by the
    generic degrees, so evaluation commutes with the determinant.
    """
    m = len(a_coeffs) - 1
    n = len(b_coeffs) - 1
    if m <= 0 and n <= 0:
        raise InvalidInput("both inputs constant in the eliminated variable")
    if m <= 0:
        a0 = a_coeffs[0] if a_coeffs else []
        out = [1]
        for _ in range(n):
            out = fp_mul(out, a0, p)
        return out
    if n <= 0:
        b0 = b_coeffs[0] if b_coeffs else []
        out = [1]
        for _ in range(m):
            out = fp_mul(out, b0, p)
        return out
    size = m + n
    xs, ys = [], []
    x = 0
    while len(xs) < deg_bound + 1:
        av = [fp_eval(c, x, p) for c in a_coeffs]
        bv = [fp_eval(c, x, p) for c in b_coeffs]
        rows = [[0] * size for _ in range(size)]
        for i in range(n):
            for k in range(m + 1):
                rows[i][i + k] = av[m - k]
        for i in range(m):
            for k in range(n + 1):
                rows[n + i][i + k] = bv[n - k]
        xs.append(x)
        ys.append(fp_det(rows, p))
        x += 1
    return fp_interpolate(xs, ys, p)
