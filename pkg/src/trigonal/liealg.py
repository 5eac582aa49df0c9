"""Lie algebra of the quadric system and its structure theory.

The stabilizer of the span of quadrics inside the traceless matrices is the
algebraic invariant that separates the cases: zero for curves cut out by
quadrics, and a positive-dimensional algebra whose Levi type (sl2, sl2+sl2,
sl3) identifies a ruled surface or the Veronese.  Everything is exact linear
algebra on structure constants.
"""

import enum
from dataclasses import dataclass

from .errors import (InternalInvariantError, InvalidInput, LiftingFailed,
                     NotSl2, SplitFailedOverExtension, UnexpectedDimension)
from .linalg import Mat, RowSpace, kernel_basis, solve
from .scalars import (QQ, QuadExt, QuadraticField, rat, rational_square_split,
                      sqrt_rational)

__all__ = ["Case", "LieAlg", "Sl2Triple", "stabilizer_algebra",
           "killing_form", "radical", "levi", "classify", "split_sl2",
           "split_two_ideals"]


class Case(enum.Enum):
    CurveCutByQuadrics = "CurveCutByQuadrics"
    Scroll = "Scroll"
    P1xP1 = "P1xP1"
    Veronese = "Veronese"
    Genus3 = "Genus3"
    Unexpected = "Unexpected"


class LieAlg:
    """Matrix Lie algebra given by a basis of n x n matrices; closure under
    the bracket is verified at construction and the structure constants are
    stored."""

    def __init__(self, n, basis, fld=QQ):
        self.n = n
        self.field = fld
        self.basis = list(basis)
        self.coords = RowSpace(n * n)
        for b in self.basis:
            if b.rows != n or b.cols != n:
                raise InvalidInput("basis matrix has the wrong shape")
            if not self.coords.add(list(b.entries)):
                raise InvalidInput("basis matrices are dependent")
        self._to_coords_rows = self.coords.basis()
        dim = len(self.basis)
        # map stored-echelon coordinates back to the given basis order
        self._echelon_to_basis = None
        if dim:
            mat = []
            for b in self.basis:
                coords, res = self.coords.reduce(list(b.entries))
                if any(res):
                    raise InternalInvariantError("coordinate reduction failed")
                mat.append(coords)
            # mat rows: given basis in echelon coordinates; invert it
            from .linalg import inverse
            self._echelon_to_basis = inverse(Mat.from_rows(mat, fld).transpose())
        self.sc = [[None] * dim for _ in range(dim)]
        for i in range(dim):
            for j in range(dim):
                if j < i:
                    self.sc[i][j] = [-c for c in self.sc[j][i]]
                    continue
                if j == i:
                    self.sc[i][j] = [fld.zero()] * dim
                    continue
                br = self.basis[i] * self.basis[j] - self.basis[j] * self.basis[i]
                self.sc[i][j] = self.express(br)

    @property
    def dim(self):
        return len(self.basis)

    def express(self, m):
        """Coordinates of a matrix in the basis; raises when outside."""
        ech, res = self.coords.reduce(list(m.entries))
        if any(res):
            raise InternalInvariantError(
                "matrix outside the algebra span (bracket closure violated)")
        out = self._echelon_to_basis.apply(ech)
        return out

    def bracket_coords(self, u, v):
        """Bracket of two coordinate vectors, in coordinates."""
        dim = self.dim
        out = [self.field.zero()] * dim
        for i in range(dim):
            ui = u[i]
            if not ui:
                continue
            for j in range(dim):
                vj = v[j]
                if not vj:
                    continue
                cij = self.sc[i][j]
                f = ui * vj
                for k in range(dim):
                    if cij[k]:
                        out[k] = out[k] + f * cij[k]
        return out

    def ad_matrix(self, coords):
        """Matrix of ad(x) on the algebra for x given in coordinates."""
        dim = self.dim
        cols = []
        for j in range(dim):
            unit = [self.field.zero()] * dim
            unit[j] = self.field.one()
            cols.append(self.bracket_coords(coords, unit))
        ent = [cols[j][i] for i in range(dim) for j in range(dim)]
        return Mat(dim, dim, ent, self.field)

    def element(self, coords):
        """Ambient matrix for a coordinate vector."""
        ent = [self.field.zero()] * (self.n * self.n)
        for c, b in zip(coords, self.basis):
            if c:
                ent = [e + c * be for e, be in zip(ent, b.entries)]
        return Mat(self.n, self.n, ent, self.field)

    def subalgebra(self, coord_vectors, fld=None):
        fld = fld or self.field
        mats = [self.element(v) for v in coord_vectors]
        if fld != self.field:
            mats = [Mat(self.n, self.n, m.entries, fld) for m in mats]
        return LieAlg(self.n, mats, fld)

    def lift(self, fld):
        """The same algebra over an extension field."""
        mats = [Mat(self.n, self.n, b.entries, fld) for b in self.basis]
        return LieAlg(self.n, mats, fld)


@dataclass
class Sl2Triple:
    e: Mat
    h: Mat
    f: Mat
    field: object

    def check(self):
        def br(a, b):
            return a * b - b * a
        ok = (br(self.h, self.e) == self.e.scale(2)
              and br(self.h, self.f) == self.f.scale(-2)
              and br(self.e, self.f) == self.h)
        if not ok:
            raise NotSl2("bracket relations fail for the produced triple")
        return True


def stabilizer_algebra(qspace, g, fld=QQ):
    """Traceless matrices M whose derivation action maps every quadric of
    the space back into the space.  The identity always stabilizes and is
    split off, so dim = (solution dimension) - 1."""
    if qspace.dim < 1:
        raise InvalidInput("stabilizer needs at least one quadric")
    monos = qspace.monomials
    index = {m: i for i, m in enumerate(monos)}
    qrs = qspace.row_space()
    pivots = set(qrs.pivots())
    nonpivot = [i for i in range(len(monos)) if i not in pivots]
    eqrows = []
    for q in qspace.basis:
        residuals = []
        for i in range(g):
            for j in range(g):
                vec = [0] * len(monos)
                for pos, alpha in enumerate(monos):
                    c = q[pos]
                    if not c:
                        continue
                    ai = alpha[i]
                    if not ai:
                        continue
                    beta = list(alpha)
                    beta[i] -= 1
                    beta[j] += 1
                    t = index[tuple(beta)]
                    vec[t] = vec[t] + ai * c
                _, res = qrs.reduce(vec)
                residuals.append(res)
        for mu in nonpivot:
            row = [res[mu] for res in residuals]
            if any(row):
                eqrows.append(row)
    nn = g * g
    if eqrows:
        kern = kernel_basis(eqrows, reduced=False)
    else:
        kern = [[fld.one() if i == j else fld.zero() for i in range(nn)]
                for j in range(nn)]
    ident = [fld.one() if i % (g + 1) == 0 else fld.zero() for i in range(nn)]
    sol = RowSpace(nn)
    for v in kern:
        sol.add(list(v))
    if not sol.contains(ident):
        raise InternalInvariantError("identity does not stabilize the quadrics")
    traceless = RowSpace(nn)
    for v in kern:
        tr = sum((v[i * (g + 1)] for i in range(g)), fld.zero())
        shift = tr / g
        w = list(v)
        if shift:
            for i in range(g):
                w[i * (g + 1)] = w[i * (g + 1)] - shift
        traceless.add(w)
    if traceless.dim != len(kern) - 1:
        raise InternalInvariantError("identity direction did not split off cleanly")
    mats = [Mat(g, g, row, fld) for row in traceless.basis()]
    return LieAlg(g, mats, fld)


def killing_form(alg):
    """kappa(b_i, b_j) = trace(ad b_i . ad b_j), from structure constants."""
    dim = alg.dim
    fld = alg.field
    ent = []
    for i in range(dim):
        for j in range(dim):
            s = fld.zero()
            for k in range(dim):
                cik = alg.sc[i][k]
                cjk = alg.sc[j]
                for l in range(dim):
                    if cik[l] and cjk[l][k]:
                        s = s + cik[l] * cjk[l][k]
            ent.append(s)
    return Mat(dim, dim, ent, fld)


def derived_space(alg):
    rs = RowSpace(alg.dim)
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            rs.add(list(alg.sc[i][j]))
    return rs


def radical(alg):
    """Solvable radical: kappa-orthogonal complement of the derived algebra
    (Cartan's criterion, characteristic zero)."""
    if alg.field.char != 0:
        raise InvalidInput("the radical computation requires characteristic zero")
    dim = alg.dim
    if dim == 0:
        return []
    kappa = killing_form(alg)
    der = derived_space(alg)
    if der.dim == 0:
        return [[alg.field.one() if i == j else alg.field.zero()
                 for i in range(dim)] for j in range(dim)]
    rows = [kappa.apply(d) for d in der.basis()]
    return kernel_basis(rows)


def levi(alg):
    """A semisimple complement of the radical, by iterative correction along
    the derived series of the radical."""
    rad = radical(alg)
    if not rad:
        return alg
    dim = alg.dim
    fld = alg.field
    if len(rad) == dim:
        return LieAlg(alg.n, [], fld)
    radspace = RowSpace(dim, rows=[list(v) for v in rad])
    comp_idx = [c for c in range(dim) if c not in set(radspace.pivots())]
    rc = len(comp_idx)
    cur = []
    for c in comp_idx:
        v = [fld.zero()] * dim
        v[c] = fld.one()
        cur.append(v)
    # quotient structure constants in the complement coordinates
    gamma = [[None] * rc for _ in range(rc)]
    for a in range(rc):
        for b in range(rc):
            br = alg.bracket_coords(cur[a], cur[b])
            _, res = radspace.reduce(br)
            gamma[a][b] = [res[ci] for ci in comp_idx]
    # derived series of the radical
    chain = [radspace]
    while chain[-1].dim > 0:
        prev = chain[-1]
        nxt = RowSpace(dim)
        pb = prev.basis()
        for i in range(len(pb)):
            for j in range(i + 1, len(pb)):
                nxt.add(alg.bracket_coords(pb[i], pb[j]))
        if nxt.dim >= prev.dim:
            raise LiftingFailed("the radical is not solvable; upstream bug")
        chain.append(nxt)
        if len(chain) > dim + 2:
            raise LiftingFailed("derived series fails to terminate")

    for k in range(len(chain) - 1):
        nk, nk1 = chain[k], chain[k + 1]
        nb = nk.basis()
        nt = len(nb)
        if nt == 0:
            break
        nunk = rc * nt

        def red(vec):
            _, res = nk1.reduce(vec)
            return res

        rows = []
        rhs = []
        for a in range(rc):
            for b in range(a + 1, rc):
                defect = alg.bracket_coords(cur[a], cur[b])
                for c in range(rc):
                    gab = gamma[a][b][c]
                    if gab:
                        defect = [dv - gab * cv for dv, cv in zip(defect, cur[c])]
                if not nk.contains(defect):
                    raise LiftingFailed("defect left the expected radical layer")
                coefvecs = [[fld.zero()] * dim for _ in range(nunk)]
                for t in range(nt):
                    v1 = alg.bracket_coords(cur[a], nb[t])       # times w[b][t]
                    v2 = alg.bracket_coords(nb[t], cur[b])       # times w[a][t]
                    for l in range(dim):
                        coefvecs[b * nt + t][l] = coefvecs[b * nt + t][l] + v1[l]
                        coefvecs[a * nt + t][l] = coefvecs[a * nt + t][l] + v2[l]
                for c in range(rc):
                    gab = gamma[a][b][c]
                    if gab:
                        for t in range(nt):
                            for l in range(dim):
                                coefvecs[c * nt + t][l] = (coefvecs[c * nt + t][l]
                                                           - gab * nb[t][l])
                dred = red(defect)
                credlist = [red(cv) for cv in coefvecs]
                for l in range(dim):
                    row = [cv[l] for cv in credlist]
                    if any(row) or dred[l]:
                        rows.append(row)
                        rhs.append(-dred[l] if dred[l] else fld.zero())
        if not rows:
            continue
        w = solve(rows, rhs)
        if w is None:
            raise LiftingFailed("Levi correction system is inconsistent")
        for a in range(rc):
            for t in range(nt):
                c = w[a * nt + t]
                if c:
                    cur[a] = [cv + c * nv for cv, nv in zip(cur[a], nb[t])]

    sub = alg.subalgebra(cur)
    if radical(sub):
        raise LiftingFailed("the lifted complement is not semisimple")
    return sub


def split_two_ideals(s):
    """Decompose a 6-dimensional semisimple algebra into two 3-dimensional
    ideals via the centroid; adjoins one square root when the two factors
    are conjugate over the base field.  Returns (s1, s2)."""
    if s.dim != 6:
        raise InvalidInput("ideal split expects a 6-dimensional algebra")
    dim = s.dim
    fld = s.field
    ads = [s.ad_matrix([fld.one() if i == j else fld.zero() for i in range(dim)])
           for j in range(dim)]
    rows = []
    for A in ads:
        for r in range(dim):
            for c in range(dim):
                row = [0] * (dim * dim)
                for v in range(dim):
                    row[r * dim + v] = row[r * dim + v] + A[v, c]
                for u in range(dim):
                    row[u * dim + c] = row[u * dim + c] - A[r, u]
                if any(row):
                    rows.append(row)
    cent = kernel_basis(rows)
    if len(cent) != 2:
        raise UnexpectedDimension(
            f"centroid has dimension {len(cent)}; expected 2")
    ident = [fld.one() if i % (dim + 1) == 0 else fld.zero()
             for i in range(dim * dim)]
    idspace = RowSpace(dim * dim, rows=[ident])
    psi_vec = None
    for v in cent:
        if not idspace.contains(list(v)):
            psi_vec = list(v)
            break
    if psi_vec is None:
        raise UnexpectedDimension("centroid degenerates to scalars")
    psi = Mat(dim, dim, [fld.coerce(x) if x else fld.zero() for x in psi_vec], fld)
    psi2 = psi * psi
    coords = solve([[i, pv] for i, pv in zip(ident, psi_vec)], list(psi2.entries))
    if coords is None:
        raise UnexpectedDimension("centroid is not quadratic over the base field")
    a, b = coords
    disc = b * b + 4 * a
    if not disc:
        raise UnexpectedDimension("centroid is not etale; unexpected input")
    if fld == QQ:
        root = sqrt_rational(disc)
    elif isinstance(disc, QuadExt) and not disc.b:
        r = sqrt_rational(disc.a)
        root = fld.coerce(r) if r is not None else None
    else:
        root = None
    work = s
    wfld = fld
    if root is None:
        if fld != QQ:
            raise SplitFailedOverExtension(
                "ideal split needs a second field extension; unsupported")
        sfac, delta = rational_square_split(disc)
        wfld = QuadraticField(delta)
        work = s.lift(wfld)
        psi = Mat(dim, dim, psi.entries, wfld)
        root = QuadExt(0, sfac, delta)
        a, b = wfld.coerce(a), wfld.coerce(b)
    lam1 = (b + root) / 2
    lam2 = (b - root) / 2
    scalefac = 1 / (lam1 - lam2)
    proj = (psi - Mat.identity(dim, wfld).scale(lam2)).scale(scalefac)
    ideals = []
    for projector in (proj, Mat.identity(dim, wfld) - proj):
        img = RowSpace(dim)
        for j in range(dim):
            unit = [wfld.zero()] * dim
            unit[j] = wfld.one()
            img.add(projector.apply(unit))
        if img.dim != 3:
            raise UnexpectedDimension(
                f"centroid idempotent has rank {img.dim}; expected 3")
        ideals.append(work.subalgebra(img.basis()))
    ideals.sort(key=lambda alg: tuple(str(e) for b in alg.basis for e in b.entries))
    return ideals[0], ideals[1]


def classify(alg, semisimple, g):
    """Map (stabilizer algebra, Levi part) to the surface trichotomy."""
    if alg.dim == 0:
        return Case.CurveCutByQuadrics
    sdim = semisimple.dim
    if sdim == 3:
        return Case.Scroll
    if sdim == 6:
        try:
            split_two_ideals(semisimple)
        except UnexpectedDimension:
            return Case.Unexpected
        return Case.P1xP1
    if sdim == 8:
        return Case.Veronese if g == 6 else Case.Unexpected
    return Case.Unexpected


_SPLIT_SAMPLES = [
    (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1),
    (1, -1, 0), (1, 0, -1), (0, 1, -1), (1, 1, 1), (1, 1, -1), (1, -1, 1),
    (-1, 1, 1), (2, 1, 0), (2, 0, 1), (0, 2, 1), (1, 2, 0), (1, 0, 2),
    (0, 1, 2), (2, 1, 1), (1, 2, 1), (1, 1, 2), (3, 1, 0), (1, 3, 1),
    (2, 2, 1),
]


def _charpoly3(m):
    """Coefficients (c2, c1, c0) of t^3 - c2 t^2 + c1 t - c0 for a 3x3."""
    a, b, c = m[0, 0], m[0, 1], m[0, 2]
    d, e, f = m[1, 0], m[1, 1], m[1, 2]
    g_, h, i = m[2, 0], m[2, 1], m[2, 2]
    c2 = a + e + i
    c1 = (a * e - b * d) + (a * i - c * g_) + (e * i - f * h)
    c0 = (a * (e * i - f * h) - b * (d * i - f * g_) + c * (d * h - e * g_))
    return c2, c1, c0


def split_sl2(s):
    """Split triple (e, h, f) of a 3-dimensional semisimple algebra.

    Samples small deterministic elements looking for rational ad-eigenvalues
    {0, +-2}; when all 25 samples have irrational eigenvalues, one square
    root is adjoined and the split proceeds over the extension.
    """
    if s.dim != 3:
        raise NotSl2(f"expected a 3-dimensional algebra, got dim {s.dim}")
    fld = s.field
    fallback = None
    h_coords = None
    work = s
    wfld = fld
    for sample in _SPLIT_SAMPLES:
        coords = [fld.coerce(c) for c in sample]
        adx = s.ad_matrix(coords)
        c2, c1, c0 = _charpoly3(adx)
        if c2 or c0:
            raise NotSl2("ad(x) has nonzero trace or determinant")
        alpha_sq = -c1
        if not alpha_sq:
            continue
        if fld == QQ:
            r = sqrt_rational(alpha_sq)
            if r is not None:
                h_coords = [2 * c / r for c in coords]
                break
            if fallback is None:
                fallback = (coords, alpha_sq)
        else:
            # already over an extension: only a rational square splits
            if isinstance(alpha_sq, QuadExt) and not alpha_sq.b:
                r = sqrt_rational(alpha_sq.a)
                if r is not None:
                    h_coords = [2 * c / wfld.coerce(r) for c in coords]
                    break
            if fallback is None:
                fallback = (coords, alpha_sq)
    if h_coords is None:
        if fallback is None:
            raise NotSl2("every sampled element was nilpotent")
        if fld != QQ:
            raise SplitFailedOverExtension(
                "splitting needs a second square root; unsupported")
        coords, alpha_sq = fallback
        sfac, delta = rational_square_split(alpha_sq)
        wfld = QuadraticField(delta)
        work = s.lift(wfld)
        # alpha = sfac*sqrt(delta); h = 2x/alpha = (2/(sfac*delta)) sqrt(delta) x
        scale = QuadExt(0, rat(2) / (sfac * delta), delta)
        h_coords = [scale * wfld.coerce(c) for c in coords]

    adh = work.ad_matrix(h_coords)
    two = wfld.coerce(rat(2))
    eig_e = kernel_basis([[adh[i, j] - (two if i == j else wfld.zero())
                           for j in range(3)] for i in range(3)])
    eig_f = kernel_basis([[adh[i, j] + (two if i == j else wfld.zero())
                           for j in range(3)] for i in range(3)])
    if len(eig_e) != 1 or len(eig_f) != 1:
        raise NotSl2("ad(h) eigenspaces for +-2 are not one-dimensional")
    e_coords = [wfld.coerce(x) if isinstance(x, int) else x for x in eig_e[0]]
    f0_coords = [wfld.coerce(x) if isinstance(x, int) else x for x in eig_f[0]]
    br = work.bracket_coords(e_coords, f0_coords)
    piv = next(i for i in range(3) if h_coords[i])
    c = br[piv] / h_coords[piv]
    if not c:
        raise NotSl2("[e, f] is not a nonzero multiple of h")
    for i in range(3):
        if br[i] != c * h_coords[i]:
            raise NotSl2("[e, f] is not parallel to h")
    f_coords = [x / c for x in f0_coords]
    triple = Sl2Triple(e=work.element(e_coords), h=work.element(h_coords),
                       f=work.element(f_coords), field=wfld)
    triple.check()
    return triple
