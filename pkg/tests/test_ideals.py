import pytest

from clanpoly.clans import parse_clan, enumerate_clans, closure_leq
from clanpoly import ideals, perms
from clanpoly.zpoly import matrix_ring


def c22(s):
    return parse_clan(s, 2, 2)


def test_rank_vectors_example():
    g = c22("11+-")
    r_plus, r_minus, w = ideals.rank_vectors(g)
    assert r_plus == (2, 2, 2, 3)
    assert r_minus == (2, 2, 3, 3)
    assert w[(1, 2)] == 3
    assert w[(1, 3)] == 4
    assert w[(2, 3)] == 4
    assert w[(1, 4)] == w[(2, 4)] == w[(3, 4)] == 5


def test_korbit_ideal_families_example():
    pres = ideals.korbit_ideal(c22("11+-"))
    fams = {}
    for (family, tag, rows, cols) in pres.provenance:
        fams.setdefault(family, []).append((tag, rows, cols))
    # R+ gives the three 2x2 minors of the southwest 2x3 block
    rplus = fams["R+"]
    assert len(rplus) == 3
    assert all(rows == (3, 4) for (_t, rows, _c) in rplus)
    assert sorted(cols for (_t, _r, cols) in rplus) == \
        [(1, 2), (1, 3), (2, 3)]
    # R- gives only the northwest 2x2 minor
    assert fams["R-"] == [((2,), (1, 2), (1, 2))]
    # W gives 3x3 minors of the (1,2) splice and 4x4 of (1,3), (2,3)
    wtags = sorted(set(t for (t, _r, _c) in fams["W"]))
    assert wtags == [(1, 2), (1, 3), (2, 3)]
    sizes = {t: len(rows) for (t, rows, _c) in fams["W"]}
    assert sizes[(1, 2)] == 3 and sizes[(1, 3)] == 4 and sizes[(2, 3)] == 4


def test_korbit_open_clan_trivial():
    pres = ideals.korbit_ideal(c22("1221"))
    assert len(pres) == 0
    assert ideals.rank_vectors(c22("1221"))[0] == (2, 3, 3, 3)


def test_closed_clan_has_linear_generators():
    pres = ideals.korbit_ideal(c22("--++"))
    degrees = sorted(set(g.total_degree() for g in pres.generators))
    assert degrees[0] == 1
    lin = [g for g in pres.generators if g.total_degree() == 1]
    names = sorted(str(g) for g in lin)
    assert names == ["z11", "z12", "z21", "z22"]


def test_generators_nonzero_and_deduped():
    for word in ("11+-", "1212", "--++", "+1-1"):
        pres = ideals.korbit_ideal(c22(word))
        fps = [g.fingerprint() for g in pres.generators]
        assert len(fps) == len(set(fps))
        assert all(not g.is_zero() for g in pres.generators)


def test_representative_flag_matrix_example():
    g = c22("11+-")
    sigma = perms.v_of_clan(g)
    assert sigma == (1, 3, 2, 4)
    m = ideals.representative_flag_matrix(g, sigma)
    # columns: e1+e3, e3, e2, e4
    cols = [tuple(m[i][j] for i in range(4)) for j in range(4)]
    assert cols[0] == (1, 0, 1, 0)
    assert cols[1] == (0, 0, 1, 0)
    assert cols[2] == (0, 1, 0, 0)
    assert cols[3] == (0, 0, 0, 1)


def test_representative_matchless_is_permutation_matrix():
    g = c22("+-+-")
    sigma = perms.v_of_clan(g)
    m = ideals.representative_flag_matrix(g, sigma)
    for j in range(4):
        col = [m[i][j] for i in range(4)]
        assert sum(col) == 1
        assert col[sigma[j] - 1] == 1


def test_representative_rejects_unshuffled():
    g = c22("11+-")
    with pytest.raises(ValueError):
        ideals.representative_flag_matrix(g, (4, 3, 2, 1))


def test_generators_vanish_on_own_representative():
    for p, q in ((2, 2), (2, 1), (1, 2)):
        for g in enumerate_clans(p, q):
            pres = ideals.korbit_ideal(g)
            m = ideals.representative_flag_matrix(g, perms.v_of_clan(g))
            assert ideals.vanishes_on(pres, m), str(g)


def test_vanishing_iff_closure_order():
    univ = list(enumerate_clans(2, 2))
    for g in univ:
        pres = ideals.korbit_ideal(g)
        for b in univ:
            m = ideals.representative_flag_matrix(b, perms.v_of_clan(b))
            assert ideals.vanishes_on(pres, m) == closure_leq(b, g), \
                (str(b), str(g))


def test_patch_matrix_base_example():
    b = c22("11+-")
    m = ideals.patch_matrix(b)
    col1 = [str(m[i][0]) for i in range(4)]
    assert col1 == ["1", "z21", "z31+1", "z41"]


def test_patch_matrix_of_matchless_is_half_generic():
    b = c22("+-+-")
    m = ideals.patch_matrix(b)
    v = perms.v_of_clan(b)
    vinv = perms.inverse(v)
    for i in range(1, 5):
        for j in range(1, 5):
            e = m[i - 1][j - 1]
            if i == v[j - 1]:
                assert e == 1
            elif j < vinv[i - 1]:
                assert str(e) == "z%d%d" % (i, j)
            else:
                assert e.is_zero()


def test_patch_origin_membership_matches_closure():
    univ = list(enumerate_clans(2, 2))
    for g in univ:
        for b in univ:
            pres = ideals.patch_ideal(g, b)
            assert pres.origin_is_member() == closure_leq(b, g), \
                (str(b), str(g))


def test_patch_chart_dimension_at_smooth_point():
    # the base point of its own chart is a smooth point, so the chart
    # dimension from the Jacobian matches the closure dimension
    for p, q in ((1, 1), (2, 1), (2, 2)):
        for g in enumerate_clans(p, q):
            pres = ideals.patch_ideal(g, g)
            dim = ideals.chart_dimension_at_origin(pres, g.n)
            assert dim == g.dimension(), str(g)


def test_patch_rejects_mixed_shapes():
    with pytest.raises(ValueError):
        ideals.patch_ideal(c22("11+-"), parse_clan("+-+", 2, 1))


def test_cas_script_shape():
    pres = ideals.korbit_ideal(c22("11+-"))
    script = pres.cas_script()
    assert script.startswith("ring R = 0, (z11, z12")
    assert "ideal I =" in script
    assert script.rstrip().endswith(";")
    zero = ideals.korbit_ideal(c22("1221"))
    assert "ideal I = 0;" in zero.cas_script()


def test_generator_lines_deterministic():
    a = ideals.korbit_ideal(c22("11+-")).generator_lines()
    b = ideals.korbit_ideal(c22("11+-")).generator_lines()
    assert a == b
    assert all(isinstance(s, str) and s for s in a)
