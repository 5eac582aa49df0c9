import pytest

from trigonal.canonical import adjoint_basis, forms_through_image
from trigonal.errors import ChainCountUnexpected
from trigonal.liealg import (Sl2Triple, levi, split_sl2,
                             split_two_ideals, stabilizer_algebra)
from trigonal.linalg import Mat, RowSpace
from trigonal.scalars import rat
from trigonal.scroll import (minor_vectors, p1xp1_rulings, ruling_map,
                             scroll_matrix, weight_chains)

from test_liealg import CONE


def _triple_from_mats(e, h, f):
    return Sl2Triple(e=e, h=h, f=f, field=__import__("trigonal.scalars",
                                                     fromlist=["QQ"]).QQ)


def _sym_action(n):
    """Standard sl2 acting on Sym^(n-1) of the defining representation:
    n-dimensional irreducible with integer weights."""
    # basis v_k = f^k v_0; h v_k = (n-1-2k) v_k; e v_k = k(n-k) v_{k-1}
    h = Mat.from_rows([[rat(n - 1 - 2 * k) if k == j else rat(0)
                        for j in range(n)] for k in range(n)]).transpose()
    e_rows = [[rat(0)] * n for _ in range(n)]
    f_rows = [[rat(0)] * n for _ in range(n)]
    for k in range(n):
        if k > 0:
            e_rows[k - 1][k] = rat(k * (n - k))
        if k < n - 1:
            f_rows[k + 1][k] = rat(1)
    return (Mat.from_rows(e_rows), h, Mat.from_rows(f_rows))


def _block(mats_list):
    n = sum(m.rows for m in mats_list)
    rows = [[rat(0)] * n for _ in range(n)]
    off = 0
    for m in mats_list:
        for i in range(m.rows):
            for j in range(m.cols):
                rows[off + i][off + j] = m[i, j]
        off += m.rows
    return Mat.from_rows(rows)


def test_weight_chain_of_standard_two_space():
    e, h, f = _sym_action(2)
    t = _triple_from_mats(e, h, f)
    w = weight_chains(t, 2)
    assert w.lengths == [2]
    a = scroll_matrix(w)
    assert a.ncols == 1


def test_weight_chain_of_sym3():
    e, h, f = _sym_action(4)
    t = _triple_from_mats(e, h, f)
    w = weight_chains(t, 4)
    assert w.lengths == [4]
    # chain relations: v_{k+1} = f v_k, e v_{k+1} = (k+1)(len-1-k) v_k
    chain = w.chains[0]
    for k in range(3):
        assert f.apply(chain[k]) == chain[k + 1]
    for k in range(3):
        img = e.apply(chain[k + 1])
        coeff = rat((k + 1) * (4 - 1 - k))
        assert img == [coeff * x for x in chain[k]]


def test_weight_chain_block_sum():
    e2, h2, f2 = _sym_action(2)
    e4, h4, f4 = _sym_action(4)
    t = _triple_from_mats(_block([e2, e4]), _block([h2, h4]), _block([f2, f4]))
    w = weight_chains(t, 6)
    assert w.lengths == [2, 4]
    a = scroll_matrix(w)
    assert a.ncols == (2 - 1) + (4 - 1)


def test_scroll_matrix_rejects_three_chains():
    e2, h2, f2 = _sym_action(2)
    t = _triple_from_mats(_block([e2, e2, e2]), _block([h2, h2, h2]),
                          _block([f2, f2, f2]))
    w = weight_chains(t, 6)
    assert w.lengths == [2, 2, 2]
    with pytest.raises(ChainCountUnexpected):
        scroll_matrix(w)


def test_minors_span_the_quadrics_of_proj5(proj5):
    cm = adjoint_basis(proj5)
    q = forms_through_image(proj5, cm, 2)
    alg = stabilizer_algebra(q, 5)
    sem = levi(alg)
    t = split_sl2(sem)
    w = weight_chains(t, 5)
    assert sorted(w.lengths) == [2, 3]     # the scroll S(1,2) for genus 5
    a = scroll_matrix(w)
    vecs = minor_vectors(a, q.monomials)
    span = RowSpace(len(q.monomials))
    for v in vecs:
        span.add(v)
    assert span.equals(q.row_space())


def test_cone_chain_lengths_and_minor_containment():
    """Cone over the twisted cubic: one vertex chain of length 1 plus a
    length-4 chain; the three minors recover the cone's quadrics."""
    alg = stabilizer_algebra(CONE, 5)
    sem = levi(alg)
    t = split_sl2(sem)
    w = weight_chains(t, 5)
    assert sorted(w.lengths) == [1, 4]
    a = scroll_matrix(w)
    assert a.ncols == 3
    vecs = minor_vectors(a, CONE.monomials)
    span = RowSpace(len(CONE.monomials))
    for v in vecs:
        span.add(v)
    assert span.equals(CONE.row_space())


def test_ruling_map_columns_agree_on_curve(proj5):
    cm = adjoint_basis(proj5)
    q = forms_through_image(proj5, cm, 2)
    alg = stabilizer_algebra(q, 5)
    t = split_sl2(levi(alg))
    w = weight_chains(t, 5)
    a = scroll_matrix(w)
    pm = ruling_map(a, cm, proj5)
    # all admissible columns define the same map mod f
    from trigonal.scroll import _pull_back
    maps = []
    for col in range(a.ncols):
        p = _pull_back(a.row1[col], cm)
        qq = _pull_back(a.row2[col], cm)
        if p and qq:
            maps.append((p, qq))
    assert len(maps) >= 2
    for (p1, q1) in maps:
        for (p2, q2) in maps:
            cross = p1 * q2 - p2 * q1
            assert (not cross) or cross.divisible_by(proj5.f)


def test_p1xp1_rulings_on_genus4(two_node_quintic):
    cm = adjoint_basis(two_node_quintic)
    q = forms_through_image(two_node_quintic, cm, 2)
    alg = stabilizer_algebra(q, 4)
    sem = levi(alg)
    s1, s2 = split_two_ideals(sem)
    cands, fails = p1xp1_rulings((s1, s2), cm, two_node_quintic)
    assert len(cands) == 2 and not fails


def test_p1xp1_one_summand_fails_on_reembedded_scroll(m1_quartic):
    # genus 6 trigonal: the balanced surface re-embedded; one summand
    # decomposes into three 2-chains and is rejected
    cm = adjoint_basis(m1_quartic)
    q = forms_through_image(m1_quartic, cm, 2)
    alg = stabilizer_algebra(q, 6)
    sem = levi(alg)
    s1, s2 = split_two_ideals(sem)
    cands, fails = p1xp1_rulings((s1, s2), cm, m1_quartic)
    assert len(cands) == 1 and len(fails) == 1
    assert isinstance(fails[0][1], ChainCountUnexpected)
