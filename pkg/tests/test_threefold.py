import pytest

from cremeq.lattice import LatticeMismatchError
from cremeq.projection import project_to_p3
from cremeq.surfaces import dp6_line_classes
from cremeq.threefold import (
    BlowupThreefold,
    RayKind,
    classify_second_ray,
    divisor_dot,
    fano_check,
    is_nef_on,
    kt_dot,
    st_dot,
)


@pytest.fixture
def t_sextic(f0):
    return BlowupThreefold(project_to_p3(f0, [f0.lattice((0, 1))]))


@pytest.fixture
def t_bordiga(bordiga):
    lat = bordiga.lattice
    ms = [lat(tuple(1 if j == i else 0 for j in range(11))) for i in range(1, 11)]
    c = lat((1, -1, -1) + (0,) * 8)
    return BlowupThreefold(project_to_p3(bordiga, ms + [c]))


@pytest.fixture
def t_dp6(dp6):
    lines = list(dp6_line_classes(dp6.lattice))
    return BlowupThreefold(project_to_p3(dp6, lines[:4]))


def test_sextic_ray_numbers(t_sextic, f0):
    f1 = f0.lattice((1, 0))
    f2 = f0.lattice((0, 1))
    assert st_dot(t_sextic, f1) == 2
    assert st_dot(t_sextic, f2) == -2
    assert kt_dot(t_sextic, f1) == -4
    assert kt_dot(t_sextic, f2) == 0


def test_sextic_flop_wall(t_sextic, f0):
    v = classify_second_ray(t_sextic, f0.lattice((0, 1)))
    assert v.kind is RayKind.FLOP_WALL_CANONICAL_FANO
    assert (v.s_dot, v.k_dot) == (-2, 0)
    assert v.assumption is None


def test_sextic_not_nef_not_fano(t_sextic, f0):
    rays = [f0.lattice((1, 0)), f0.lattice((0, 1))]
    assert not is_nef_on(t_sextic, rays)
    assert not fano_check(t_sextic, rays)


def test_bordiga_ray_numbers(t_bordiga, bordiga):
    lat = bordiga.lattice
    m1 = lat((0, 1) + (0,) * 9)
    c = lat((1, -1, -1) + (0,) * 8)
    assert (st_dot(t_bordiga, m1), kt_dot(t_bordiga, m1)) == (0, -1)
    assert (st_dot(t_bordiga, c), kt_dot(t_bordiga, c)) == (2, -3)
    assert divisor_dot(t_bordiga, (2, -1), m1) == -1


def test_bordiga_birational_contraction(t_bordiga, bordiga):
    lat = bordiga.lattice
    m1 = lat((0, 1) + (0,) * 9)
    v = classify_second_ray(t_bordiga, m1, contracting_divisor=(2, -1))
    assert v.kind is RayKind.BIRATIONAL_CONTRACTION_FANO
    assert v.contracting_divisor == (2, -1)
    assert "assumed" in v.assumption
    d = v.to_json_dict()
    assert d["kind"] == "BIRATIONAL_CONTRACTION_FANO"
    assert d["contracting_divisor"] == [2, -1]


def test_bordiga_without_declared_divisor_is_unclassified(t_bordiga, bordiga):
    # s=0, k<0 but no divisor declared and the fibration numerology fails:
    # 36 != 4*7, so nothing in the catalogue applies
    lat = bordiga.lattice
    m1 = lat((0, 1) + (0,) * 9)
    ms = [lat(tuple(1 if j == i else 0 for j in range(11))) for i in range(1, 11)]
    v = classify_second_ray(t_bordiga, m1, cone=ms)
    assert v.kind is RayKind.UNCLASSIFIED


def test_bordiga_wrong_sign_divisor_is_unclassified(t_bordiga, bordiga):
    lat = bordiga.lattice
    m1 = lat((0, 1) + (0,) * 9)
    v = classify_second_ray(t_bordiga, m1, contracting_divisor=(2, 1))
    assert v.kind is RayKind.UNCLASSIFIED


def test_bordiga_nef_and_fano(t_bordiga, bordiga):
    lat = bordiga.lattice
    ms = [lat(tuple(1 if j == i else 0 for j in range(11))) for i in range(1, 11)]
    c = lat((1, -1, -1) + (0,) * 8)
    assert is_nef_on(t_bordiga, ms + [c])
    assert fano_check(t_bordiga, ms + [c])


def test_dp6_fibration(t_dp6, dp6):
    lines = list(dp6_line_classes(dp6.lattice))
    v = classify_second_ray(t_dp6, lines[3], cone=lines)
    assert v.kind is RayKind.FIBRATION
    assert (v.s_dot, v.k_dot) == (0, -1)
    assert t_dp6.projection.deg_s ** 2 == 4 * t_dp6.projection.deg_gamma
    assert fano_check(t_dp6, lines)


def test_dp6_fibration_needs_cone(t_dp6, dp6):
    lines = list(dp6_line_classes(dp6.lattice))
    v = classify_second_ray(t_dp6, lines[3])
    assert v.kind is RayKind.UNCLASSIFIED


def test_empty_lists_refused(t_sextic):
    with pytest.raises(ValueError, match="nonempty"):
        is_nef_on(t_sextic, [])
    with pytest.raises(ValueError, match="extremal"):
        fano_check(t_sextic, [])


def test_wrong_lattice_refused(t_sextic, dp6):
    with pytest.raises(LatticeMismatchError):
        st_dot(t_sextic, dp6.polarization)
