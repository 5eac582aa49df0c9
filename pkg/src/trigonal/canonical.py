"""Canonical linear system of a validated curve and the form spaces through
its canonical image.

The adjoint space (degree d-3 forms vanishing to order m-1 at each
multiplicity-m point) realizes the canonical map into P^{g-1}.  Quadrics and
cubics through the image are computed as kernel relations among products of
the adjoint forms modulo multiples of the curve -- pure linear algebra, no
point sampling and no elimination.
"""

import enum
from dataclasses import dataclass

from .errors import (AdjointDimensionMismatch, InvalidInput,
                     UnexpectedDimension)
from .linalg import RowSpace, kernel_basis
from .poly import MPoly, local_expansion
from .scalars import rat


def monomials(nvars, degree):
    """Exponent tuples of the given total degree, lexicographically
    descending (deterministic column order everywhere)."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), degree, nvars)
    return out


def _binom(n, k):
    if k < 0 or k > n:
        return 0
    r = 1
    for i in range(k):
        r = r * (n - i) // (i + 1)
    return r


@dataclass
class CanonicalMap:
    """Adjoint forms realizing the canonical map of a plane curve."""
    forms: list          # g homogeneous polynomials of degree d-3
    degree: int          # d-3
    curve: object = None

    @property
    def genus(self):
        return len(self.forms)


@dataclass
class FormSpace:
    """Echelonized space of degree-k forms through the canonical image."""
    ambient_dim: int     # g
    degree: int          # k in {2, 3}
    basis: list          # echelon coefficient vectors over `monomials`
    monomials: list      # exponent tuples, fixed order

    @property
    def dim(self):
        return len(self.basis)

    def to_polys(self):
        return [MPoly(self.ambient_dim,
                      {m: c for m, c in zip(self.monomials, vec) if c})
                for vec in self.basis]

    def row_space(self):
        rs = RowSpace(len(self.monomials))
        for vec in self.basis:
            rs.add(list(vec))
        return rs


def adjoint_basis(curve):
    """Basis of degree-(d-3) forms vanishing to order m-1 at each
    multiplicity-m singular point; must have dimension exactly g."""
    if not curve.validated:
        raise InvalidInput("adjoint basis requires a validated curve")
    d = curve.degree
    k = d - 3
    monos = monomials(3, k)
    one = curve.field.one()
    rows = []
    for s in curve.sings:
        m = s.multiplicity
        if m < 2:
            continue
        expansions = [local_expansion(MPoly.monomial(3, mono, one),
                                      list(s.coords), m - 2)
                      for mono in monos]
        for deg in range(m - 1):
            for a in range(deg + 1):
                rows.append([exp.pieces[deg].terms.get((a, deg - a), 0)
                             for exp in expansions])
    fld = curve.field
    if rows:
        kern = kernel_basis(rows)
    else:
        kern = [[fld.one() if i == j else fld.zero() for i in range(len(monos))]
                for j in range(len(monos))]
    if len(kern) != curve.genus:
        raise AdjointDimensionMismatch(
            f"adjoint space has dimension {len(kern)}, genus is {curve.genus}")
    forms = [MPoly(3, {mono: fld.coerce(c) if isinstance(c, int) else c
                       for mono, c in zip(monos, vec) if c})
             for vec in kern]
    return CanonicalMap(forms=forms, degree=k, curve=curve)


def _power_cache(forms):
    caches = [{0: MPoly.const(3, 1), 1: f} for f in forms]

    def power(i, e):
        cache = caches[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * cache[1]
        return cache[e]

    return power


def expand_in_adjoints(vec, monos, cm):
    """Pull a degree-k ambient form back to the curve plane: substitute the
    adjoint forms for the ambient variables."""
    power = _power_cache(cm.forms)
    total = MPoly(3)
    for mono, c in zip(monos, vec):
        if not c:
            continue
        prod = MPoly.const(3, c)
        for i, e in enumerate(mono):
            if e:
                prod = prod * power(i, e)
        total = total + prod
    return total


def forms_through_image(curve, cm, k):
    """Space of degree-k forms in g variables vanishing on the canonical
    image: kernel relations among adjoint products modulo multiples of f."""
    if k not in (2, 3):
        raise InvalidInput("only quadrics and cubics are supported")
    g = cm.genus
    d = curve.degree
    big = k * cm.degree
    amb = monomials(g, k)
    target = monomials(3, big)
    tindex = {m: i for i, m in enumerate(target)}
    nrows = len(target)

    power = _power_cache(cm.forms)
    cols = []
    for mono in amb:
        prod = MPoly.const(3, 1)
        for i, e in enumerate(mono):
            if e:
                prod = prod * power(i, e)
        col = [0] * nrows
        for e, c in prod.terms.items():
            col[tindex[e]] = c
        cols.append(col)
    nf = 0
    if big - d >= 0:
        for beta in monomials(3, big - d):
            prod = curve.f * MPoly.monomial(3, beta, rat(1) if curve.field.char == 0
                                            else curve.field.one())
            col = [0] * nrows
            for e, c in prod.terms.items():
                col[tindex[e]] = c
            cols.append(col)
            nf += 1

    matrix_rows = [[col[r] for col in cols] for r in range(nrows)]
    kern = kernel_basis(matrix_rows, reduced=False)
    proj = RowSpace(len(amb))
    for vec in kern:
        proj.add(vec[:len(amb)])
    fld = curve.field
    basis = [[fld.coerce(x) if isinstance(x, int) and x else x for x in vec]
             for vec in proj.basis()]

    dim = len(basis)
    if k == 2:
        expected = {(g - 2) * (g - 3) // 2, (g - 1) * (g - 2) // 2}
        if dim not in expected:
            raise UnexpectedDimension(
                f"quadric space has dimension {dim}; expected one of {sorted(expected)}")
    else:
        expected3 = _binom(g + 2, 3) - (5 * g - 5)
        if dim != expected3:
            raise UnexpectedDimension(
                f"cubic space has dimension {dim}; expected {expected3}")
    return FormSpace(ambient_dim=g, degree=k, basis=basis, monomials=amb)


def hyperelliptic_test(g, quadric_dim):
    """True when the quadric count matches a 2:1 image on the rational
    normal curve, false for the non-hyperelliptic count."""
    if g < 3:
        raise InvalidInput("hyperelliptic test needs genus >= 3")
    if quadric_dim == (g - 1) * (g - 2) // 2:
        return True
    if quadric_dim == (g - 2) * (g - 3) // 2:
        return False
    raise UnexpectedDimension(
        f"quadric dimension {quadric_dim} matches neither count for genus {g}")


class PetriResult(enum.Enum):
    GeneratedByQuadrics = "GeneratedByQuadrics"
    QuadricsInsufficient = "QuadricsInsufficient"


def petri_test(qspace, cspace, g):
    """Compare dim span{x_i * q} against the cubic space through the image.

    Equality means the ideal is generated in degree 2 there; a strict gap is
    the independent signal that the curve is trigonal or a plane quintic.
    """
    if g < 4:
        raise InvalidInput("the quadric-generation test is vacuous for genus 3")
    if qspace.ambient_dim != g or cspace.ambient_dim != g:
        raise InvalidInput("form spaces do not match the genus")
    sym3 = cspace.monomials
    index3 = {m: i for i, m in enumerate(sym3)}
    span = RowSpace(len(sym3))
    for q in qspace.basis:
        for i in range(g):
            vec = [0] * len(sym3)
            for mono2, c in zip(qspace.monomials, q):
                if c:
                    mono3 = list(mono2)
                    mono3[i] += 1
                    vec[index3[tuple(mono3)]] = c
            span.add(vec)
    if span.dim > cspace.dim:
        raise UnexpectedDimension(
            "products of quadrics escape the cubic space; upstream bug")
    if span.dim == cspace.dim:
        return PetriResult.GeneratedByQuadrics
    return PetriResult.QuadricsInsufficient
