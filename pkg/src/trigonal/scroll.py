"""From an sl2 action on the ambient space to the trigonal pencil.

The ambient representation decomposes into weight chains (v, f.v, f^2.v,
...).  Coordinate functionals of the chain basis, rescaled by divided-power
factors, assemble into a two-row matrix of linear forms: consecutive-ratio
functionals are constant along the rulings of the surface, so the 2x2 minors
cut out the surface and any nondegenerate column is the ruling map.
Substituting the adjoint forms for the ambient coordinates pulls that map
back to the plane curve.
"""

from dataclasses import dataclass
from math import factorial

from .errors import (AllColumnsDegenerate, ChainCountUnexpected,
                     DecompositionFailed, TrigonalError)
from .linalg import Mat, RowSpace, inverse, kernel_basis
from .poly import MPoly

__all__ = ["WeightChains", "ScrollMat", "PencilMap", "weight_chains",
           "scroll_matrix", "ruling_map", "p1xp1_rulings", "minor_vectors"]


@dataclass
class WeightChains:
    chains: list        # list of chains; chain = list of ambient vectors
    cob: Mat            # columns are the chain vectors, in order
    cob_inv: Mat        # rows are the chain-coordinate functionals
    field: object

    @property
    def lengths(self):
        return [len(c) for c in self.chains]


@dataclass
class ScrollMat:
    """Two rows of linear forms (coefficient vectors over the ambient
    coordinates); column ratios are constant along rulings."""
    row1: list
    row2: list
    field: object

    @property
    def ncols(self):
        return len(self.row1)


@dataclass
class PencilMap:
    """A candidate degree-3 pencil on the curve: two forms of degree d-3."""
    p: MPoly
    q: MPoly
    field: object
    column: int = 0


def _is_dependent(pvec, qvec, dim):
    rs = RowSpace(dim)
    rs.add(list(pvec))
    return not rs.add(list(qvec))


def weight_chains(triple, g):
    """Decompose the ambient g-space under (e, h, f): integer h-eigenspaces,
    highest-weight vectors in ker(e), chains by repeated f-action."""
    fld = triple.field
    h, e, f = triple.h, triple.e, triple.f
    eig = {}
    total = 0
    for lam in range(g, -g - 1, -1):
        lam_c = fld.coerce(lam)
        rows = [[h[i, j] - (lam_c if i == j else fld.zero()) for j in range(g)]
                for i in range(g)]
        vecs = kernel_basis(rows)
        if vecs:
            eig[lam] = vecs
            total += len(vecs)
    if total != g:
        raise DecompositionFailed(
            f"h acts with non-integer or defective spectrum: {total} of {g} "
            f"eigenvectors found")
    chains = []
    for lam in sorted(eig, reverse=True):
        if lam < 0:
            continue
        vecs = eig[lam]
        imgs = [e.apply([fld.coerce(x) if isinstance(x, int) else x for x in v])
                for v in vecs]
        if any(any(img) for img in imgs):
            rows = [[imgs[t][i] for t in range(len(vecs))] for i in range(g)]
            combos = kernel_basis(rows)
        else:
            combos = [[fld.one() if i == j else fld.zero() for i in range(len(vecs))]
                      for j in range(len(vecs))]
        for combo in combos:
            v0 = [fld.zero()] * g
            for cval, vec in zip(combo, vecs):
                if cval:
                    v0 = [a + cval * (fld.coerce(x) if isinstance(x, int) else x)
                          for a, x in zip(v0, vec)]
            if not any(v0):
                continue
            chain = [v0]
            cur = v0
            while True:
                nxt = f.apply(cur)
                if not any(nxt):
                    break
                chain.append(nxt)
                cur = nxt
                if len(chain) > g:
                    raise DecompositionFailed("chain exceeds the ambient dimension")
            if len(chain) != lam + 1:
                raise DecompositionFailed(
                    f"chain from weight {lam} has length {len(chain)}")
            chains.append(chain)
    if sum(len(c) for c in chains) != g:
        raise DecompositionFailed("chains do not span the ambient space")
    chains.sort(key=lambda ch: (len(ch), tuple(str(x) for x in ch[0])))
    cols = [v for ch in chains for v in ch]
    cob = Mat.from_rows(cols, fld).transpose()
    cob_inv = inverse(cob)
    return WeightChains(chains=chains, cob=cob, cob_inv=cob_inv, field=fld)


def scroll_matrix(chains):
    """Assemble the two-row matrix: each chain of length L contributes L-1
    columns of consecutive chain functionals, rescaled by divided-power
    factors so that all column ratios agree along the rulings."""
    w = chains
    if len(w.chains) > 2 or not w.chains:
        raise ChainCountUnexpected(
            f"expected at most two chains, found lengths {w.lengths}")
    effective = [c for c in w.chains if len(c) >= 2]
    if not effective:
        raise ChainCountUnexpected("no chain of length >= 2")
    fld = w.field
    row1, row2 = [], []
    offset = 0
    for chain in w.chains:
        ell = len(chain)
        for k in range(ell - 1):
            func_k = w.cob_inv.row(offset + k)
            func_k1 = w.cob_inv.row(offset + k + 1)
            row1.append([factorial(k) * x for x in func_k])
            row2.append([factorial(k + 1) * x for x in func_k1])
        offset += ell
    return ScrollMat(row1=row1, row2=row2, field=fld)


def minor_vectors(a, monos2):
    """2x2 minors of the scroll matrix as quadratic-form coefficient vectors
    over the given degree-2 monomial order."""
    index = {m: i for i, m in enumerate(monos2)}
    g = len(a.row1[0])
    out = []

    def put(vec, i, j, c):
        mono = [0] * g
        mono[i] += 1
        mono[j] += 1
        t = index[tuple(mono)]
        vec[t] = vec[t] + c

    n = a.ncols
    for c1 in range(n):
        for c2 in range(c1 + 1, n):
            vec = [0] * len(monos2)
            u, v = a.row1[c1], a.row2[c2]
            s, t = a.row1[c2], a.row2[c1]
            for i in range(g):
                for j in range(g):
                    cval = u[i] * v[j] - s[i] * t[j]
                    if cval:
                        put(vec, i, j, cval)
            if any(vec):
                out.append(vec)
    return out


def _pull_back(coeffs, cm):
    total = MPoly(3)
    for c, form in zip(coeffs, cm.forms):
        if c:
            total = total + form.map_coeffs(lambda q: c * q)
    return total


def ruling_map(a, cm, curve):
    """First column of the scroll matrix whose two entries pull back to
    independent forms on the curve; their ratio is the candidate pencil."""
    for col in range(a.ncols):
        p = _pull_back(a.row1[col], cm)
        q = _pull_back(a.row2[col], cm)
        if not p or not q:
            continue
        # degree d-3 < deg f, so dependence mod f is plain dependence
        tot = len(set(p.terms) | set(q.terms))
        monos = sorted(set(p.terms) | set(q.terms))
        pvec = [p.terms.get(m, 0) for m in monos]
        qvec = [q.terms.get(m, 0) for m in monos]
        if _is_dependent(pvec, qvec, tot):
            continue
        return PencilMap(p=p, q=q, field=a.field, column=col)
    raise AllColumnsDegenerate("every scroll column pulls back degenerately")


def p1xp1_rulings(summands, cm, curve):
    """Run the chain/matrix/ruling pipeline on both 3-dimensional summands.

    Returns the list of candidate pencils (one per summand that decomposes
    into two chains) and the per-summand errors; raises only when both
    summands fail.
    """
    from .liealg import split_sl2
    g = cm.genus
    candidates = []
    failures = []
    for idx, s in enumerate(summands):
        try:
            triple = split_sl2(s)
            chains = weight_chains(triple, g)
            mat = scroll_matrix(chains)
            pm = ruling_map(mat, cm, curve)
            pm.column = idx
            candidates.append((idx, triple, pm))
        except TrigonalError as err:
            failures.append((idx, err))
    if not candidates:
        raise failures[0][1]
    return candidates, failures
