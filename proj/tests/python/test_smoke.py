import itertools
import math
from fractions import Fraction

import pytest

import anstar


def test_version():
    assert anstar.__version__


def test_metric():
    k1, k2 = anstar.k_vector(4, 1), anstar.k_vector(4, 2)
    assert anstar.inner_product(k1, k1) == Fraction(4, 5)
    assert anstar.inner_product(k1, k2) == Fraction(-1, 5)
    n = 4
    assert anstar.covering_radius_squared(n) == Fraction(n * (n + 2), 12 * (n + 1))


def test_golden_number():
    tau = anstar.GoldenNumber.tau()
    assert tau * tau == tau + anstar.GoldenNumber(1)
    assert math.isclose(float(tau), (1 + math.sqrt(5)) / 2)


def test_projected_lengths():
    tau = anstar.GoldenNumber.tau()
    short = anstar.GoldenNumber(2) / (anstar.GoldenNumber(2) + tau)
    d12 = anstar.k_vector(4, 1) - anstar.k_vector(4, 2)
    d13 = anstar.k_vector(4, 1) - anstar.k_vector(4, 3)
    assert anstar.projected_sq_length(d12) == short
    assert anstar.projected_sq_length(d13) == tau * tau * short
    x, y = anstar.project(d12)
    assert math.isclose(x * x + y * y, float(short), rel_tol=1e-12)


def test_face_counts_match_ordered_partitions():
    def surjections(m, k):
        return sum(len(set(f)) == k for f in itertools.product(range(k), repeat=m))

    counts = anstar.face_counts(4)
    assert counts[:4] == [120, 240, 150, 30]
    assert all(counts[d] == surjections(5, 5 - d) for d in range(4))


def test_weyl_orbit_and_cosets():
    w1 = anstar.fundamental_weight(4, 1)
    assert len(anstar.weyl_orbit(w1)) == 5
    assert anstar.coset_count(4, [1, 2]) == 20
    assert anstar.coset_count(4, [1, 4]) == 30


def test_table_row():
    words = anstar.face_vertex_words([[1, 2, 3], [4], [5]])
    assert sorted(words) == sorted(["54321", "45321", "35421", "34521", "43521", "53421"])
    center = anstar.face_center([[1, 2, 3], [4], [5]])
    assert center.expression() == "(1/5)(-2k_4-3k_5)"


def test_classification():
    census = anstar.classify_all_faces()
    assert census["ThinHexagon"] == 30 and census["ThickHexagon"] == 30
    assert census["ThinRhombus"] == 30 and census["ThickRhombus"] == 30


def test_facets_json():
    f = anstar.facets(4)
    assert f["counts"][:4] == [120, 240, 150, 30]
    assert all(fam["matches_face_centers"] for fam in f["center_orbits"])


def test_shadow_tiling():
    patch = anstar.shadow_tiling()
    assert anstar.tile_census(patch) == {
        "ThinHexagon": 5, "ThickHexagon": 5, "ThinRhombus": 5, "ThickRhombus": 5}


def test_klotz_patch_deterministic():
    a = anstar.klotz_patch((Fraction(1, 7), Fraction(1, 11)), 3)
    b = anstar.klotz_patch("1/7,1/11", 3)
    assert a == b
    assert len(a["tiles"]) > 0
    assert set(anstar.tile_census(a)) <= {"ThinHexagon", "ThickHexagon", "ThinRhombus", "ThickRhombus"}


def test_non_generic_window():
    with pytest.raises(anstar.NonGenericError):
        anstar.klotz_patch((0, 0), 2)
    with pytest.raises(ValueError):
        anstar.klotz_patch((0, 0), 2)


def test_render_svg():
    svg = anstar.render_svg("cell")
    assert svg.startswith("<?xml")
    assert svg.count("<polygon") == 20


def test_verify():
    checks = anstar.verify(4)
    assert checks and all(c["pass"] for c in checks)
