import pytest

from trigonal.curve import gen_trigonal_projection, validate_curve
from trigonal.errors import (CurveUnsupported, HyperellipticInput,
                             InvalidInput, PointNotOnCurve)
from trigonal.pipeline import decide, g3_map, map_degree
from trigonal.poly import parse_poly, poly_str
from trigonal.scalars import QQ, PrimeField, rat
from trigonal.scroll import PencilMap


def _pencil(ptext, qtext, fld=QQ):
    return PencilMap(p=parse_poly(ptext), q=parse_poly(qtext), field=fld)


# --- fiber counting ------------------------------------------------------------

def test_projection_pencil_on_method1_curve(m1_cubic):
    # the coordinate projection (x : z) is 3:1 on a deg_y=3 curve
    deg, draws = map_degree(m1_cubic, _pencil("x", "z"))
    assert deg == 3
    assert all(d["degree"] == 3 for d in draws)


def test_pencil_through_point_on_klein_quartic(klein):
    # lines through (0:0:1), which lies on the curve: 4 - 1 = 3
    deg, _ = map_degree(klein, _pencil("x", "y"))
    assert deg == 3
    # (x : z) also projects from a point of the curve, namely (0:1:0)
    deg, _ = map_degree(klein, _pencil("x", "z"))
    assert deg == 3


def test_projection_from_point_off_curve_is_degree_four(fermat_quartic):
    # (0:1:0) is not on x^4+y^4+z^4, so the pencil (x : z) has degree 4
    deg, _ = map_degree(fermat_quartic, _pencil("x", "z"))
    assert deg == 4


def test_map_degree_rejects_degenerate_pencils(klein):
    with pytest.raises(InvalidInput):
        map_degree(klein, _pencil("x", "x^2"))


def test_projection_generator_raw_pencil(proj5):
    # projecting from the multiplicity-(d-3) point: always 3:1
    deg, _ = map_degree(proj5, _pencil("x", "y"))
    assert deg == 3


# --- genus-3 branch ------------------------------------------------------------

def test_g3_map_klein(klein):
    pm = g3_map(klein, (0, 0, 1))
    assert {poly_str(pm.p), poly_str(pm.q)} == {"x", "y"}
    deg, _ = map_degree(klein, pm)
    assert deg == 3


def test_g3_map_rejects_point_off_curve(klein):
    with pytest.raises(PointNotOnCurve):
        g3_map(klein, (1, 1, 1))


def test_g3_decide_without_point_degrades(fermat_quartic):
    rep = decide(fermat_quartic, seed=1)
    assert rep.case == "Genus3" and rep.trigonal is True
    assert not rep.map_available and rep.verified_degree is None
    assert any("no base point" in n for n in rep.notes)


def test_g3_decide_with_marked_point():
    c = gen_trigonal_projection(4, seed=1)   # marks (0:0:1)
    rep = decide(c, seed=1)
    assert rep.trigonal and rep.map_available and rep.verified_degree == 3


# --- full decide ------------------------------------------------------------------

def test_decide_scroll(proj5):
    rep = decide(proj5, seed=3)
    assert rep.case == "Scroll" and rep.trigonal is True
    assert rep.verified_degree == 3
    assert rep.petri == "QuadricsInsufficient" and rep.agreement is True
    assert rep.lie_dim == 6 and rep.levi_type == "sl2"
    assert all(d["degree"] == 3 for d in rep.fiber_draws)


def test_decide_p1xp1_both_rulings(two_node_quintic):
    rep = decide(two_node_quintic, seed=3)
    assert rep.case == "P1xP1" and rep.trigonal is True
    assert rep.verified_degree == 3
    assert "2 of 2" in rep.notes[0]


def test_decide_veronese(fermat_quintic):
    rep = decide(fermat_quintic, seed=3)
    assert rep.case == "Veronese" and rep.trigonal is False
    assert rep.lie_dim == 8 and rep.levi_type == "sl3"
    assert rep.genus == 6
    assert rep.petri == "QuadricsInsufficient" and rep.agreement is True


def test_decide_generic_negative(five_nodal_sextic):
    rep = decide(five_nodal_sextic, seed=3)
    assert rep.case == "CurveCutByQuadrics" and rep.trigonal is False
    assert rep.lie_dim == 0
    assert rep.petri == "GeneratedByQuadrics" and rep.agreement is True


def test_decide_hyperelliptic_raises(hyper5):
    with pytest.raises(HyperellipticInput):
        decide(hyper5, seed=3)


def test_decide_requires_validation(klein):
    from trigonal.curve import PlaneCurve
    fake = PlaneCurve(f=klein.f, degree=4, sings=(), genus=3, validated=False)
    with pytest.raises(InvalidInput):
        decide(fake)


def test_decide_reembedded_balanced_scroll(m1_quartic):
    rep = decide(m1_quartic, seed=3)
    assert rep.case == "P1xP1" and rep.trigonal and rep.verified_degree == 3
    assert "1 of 1" in rep.notes[0]


def test_report_determinism(proj5):
    a = decide(proj5, seed=5).to_json(with_timings=False)
    b = decide(proj5, seed=5).to_json(with_timings=False)
    assert a == b


def test_report_serialization_shape(proj5):
    import json
    rep = decide(proj5, seed=5)
    data = json.loads(rep.to_json())
    assert list(data) == ["input", "seed", "genus", "adjoint_dim",
                          "quadric_dim", "cubic_dim", "lie_dim", "levi_type",
                          "case", "trigonal", "map", "verified_degree",
                          "fiber_draws", "petri", "agreement", "notes",
                          "timings"]
    assert data["map"]["field"] == "Q"
    assert set(data["timings"]) >= {"adjoints", "quadrics", "cubics",
                                    "liealg", "map", "petri"}


def test_scaling_invariance(proj5):
    scaled = validate_curve(proj5.f.map_coeffs(lambda c: rat(7, 3) * c))
    a = decide(proj5, seed=5)
    b = decide(scaled, seed=5)
    for attr in ("genus", "quadric_dim", "cubic_dim", "lie_dim", "levi_type",
                 "case", "trigonal", "verified_degree", "petri", "agreement"):
        assert getattr(a, attr) == getattr(b, attr)


# --- prime-field mode ---------------------------------------------------------------

def test_prime_field_generic_negative(five_nodal_sextic):
    F = PrimeField(149)
    f = five_nodal_sextic.f.map_coeffs(F.coerce)
    curve = validate_curve(f, fld=F)
    assert curve.genus == 5
    rep = decide(curve, seed=1)
    assert rep.case == "CurveCutByQuadrics" and rep.trigonal is False
    assert rep.lie_dim == 0 and rep.agreement is True


def test_prime_field_positive_dimension_unsupported(proj5):
    F = PrimeField(163)
    f = proj5.f.map_coeffs(F.coerce)
    curve = validate_curve(f, fld=F)
    with pytest.raises(CurveUnsupported):
        decide(curve, seed=1)
