import random

import pytest

from oracles import brute_graded_dims, brute_graded_member, paths_by_degree
from preproj.dynkin import DynkinType, ExtDynkinType, build_dynkin, build_extended, nakayama
from preproj.errors import DomainError
from preproj.fixtures import (H_E, MAP_FIXTURES, dim_pi_total,
                              dim_vertex_module, erdmann_a_entry)
from preproj.pathalg import (MembershipCertificate, MembershipNotFound,
                             PathElement, check_certificate, format_element,
                             graded_dims_pi, hom_matrix, ideal_member,
                             model_for, multiply, parse_element, parse_path,
                             relations_for, trivial_path, verify_zero_product)
from preproj.weights import Weight, epsilon0


def elem(t, text):
    return parse_element(build_extended(t), text)


# -- multiplication ----------------------------------------------------------

def test_unit_multiplication():
    t = ExtDynkinType("A", 2)
    q = build_extended(t)
    a0 = PathElement.of_path(parse_path(q, "a0"))
    assert multiply(PathElement.unit(0), a0) == a0
    assert multiply(a0, PathElement.unit(1)) == a0


def test_non_composable_product_is_zero():
    t = ExtDynkinType("A", 2)
    q = build_extended(t)
    a0 = PathElement.of_path(parse_path(q, "a0"))  # 0 -> 1
    a2 = PathElement.of_path(parse_path(q, "a2"))  # 2 -> 0
    assert not multiply(a0, a2)


def test_free_concatenation_before_reduction():
    t = ExtDynkinType("A", 2)
    q = build_extended(t)
    loop = PathElement.of_path(parse_path(q, "a0.~a0"))
    sq = multiply(loop, loop)
    assert list(sq.terms) == [parse_path(q, "a0.~a0.a0.~a0")]


def test_multiply_associative_random():
    rng = random.Random(5)
    t = ExtDynkinType("D", 4)
    q = build_extended(t)
    paths = paths_by_degree(q, 3)
    pool = [p for d in range(4) for p in paths[d]]

    def rand_elem():
        src = rng.choice(q.vertices)
        cands = [p for p in pool if p.source == src]
        tgts = {p.target for p in cands}
        tgt = rng.choice(sorted(tgts))
        picks = [p for p in cands if p.target == tgt]
        return PathElement({p: rng.choice([1, -1, 2]) for p in
                            rng.sample(picks, min(2, len(picks)))})

    for _ in range(1000):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
        ab = multiply(a, b)
        if ab:
            assert ab.degree <= a.degree + b.degree


def test_element_format_roundtrip():
    t = ExtDynkinType("D", 5)
    q = build_extended(t)
    x = elem(t, "1 * a0.~a1 : 0->1  +  -3/2 * a0.~a2.a5.~a5.a2.~a1 : 0->1")
    assert parse_element(q, format_element(x)) == x
    assert parse_element(q, "0") == PathElement.zero()


def test_mixed_endpoints_rejected():
    t = ExtDynkinType("A", 2)
    q = build_extended(t)
    with pytest.raises(DomainError):
        PathElement({parse_path(q, "a0"): 1, parse_path(q, "a1"): 1})


# -- graded dimensions -------------------------------------------------------

def test_graded_dims_against_brute_force():
    for t in (DynkinType("A", 2), DynkinType("A", 3), DynkinType("D", 4)):
        dims, _ = graded_dims_pi(t)
        padded = list(dims) + [0] * (7 - len(dims))
        assert padded[:7] == brute_graded_dims(build_dynkin(t), 6)


def test_dim_totals_small():
    assert graded_dims_pi(DynkinType("A", 2))[1] == 4
    assert graded_dims_pi(DynkinType("D", 4))[1] == 28
    assert graded_dims_pi(DynkinType("E", 6))[1] == 156


def test_top_degree_is_coxeter_minus_two():
    for t in (DynkinType("A", 4), DynkinType("D", 5), DynkinType("E", 6)):
        dims, _ = graded_dims_pi(t)
        h = t.coxeter_number
        assert len(dims) == h - 1      # degrees 0 .. h-2
        assert dims[h - 2] > 0


def test_hom_matrix_a3():
    assert hom_matrix(DynkinType("A", 3)) == ((1, 1, 1), (1, 2, 1), (1, 1, 1))


def test_hom_matrix_erdmann_for_a_types():
    for n in range(1, 9):
        h = hom_matrix(DynkinType("A", n))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert h[i - 1][j - 1] == erdmann_a_entry(n, i, j)


def test_hom_matrix_d4_rows():
    h = hom_matrix(DynkinType("D", 4))
    assert [sum(r) for r in h] == [6, 10, 6, 6]
    assert graded_dims_pi(DynkinType("D", 4))[1] == 28


def test_hom_matrix_d_row_description():
    # row i <= n-2: (2, 4, ..., 2(i-1), 2i, ..., 2i, i, i);
    # rows n-1, n: (1, 2, ..., n-2, k, l) with k + l = n - 1
    for n in range(4, 9):
        h = hom_matrix(DynkinType("D", n))
        for i in range(1, n - 1):
            row = ([2 * j for j in range(1, i)]
                   + [2 * i] * (n - i - 1) + [i, i])
            assert list(h[i - 1]) == row, (n, i)
        for i in (n - 1, n):
            assert list(h[i - 1][: n - 2]) == list(range(1, n - 1))
            assert h[i - 1][n - 2] + h[i - 1][n - 1] == n - 1


def test_hom_matrix_e6_printed():
    assert hom_matrix(DynkinType("E", 6)) == H_E[6]
    assert H_E[6][3] == (6, 4, 8, 12, 8, 4)


def test_hom_symmetry_and_nakayama_invariance():
    types = ([DynkinType("A", n) for n in range(1, 7)]
             + [DynkinType("D", n) for n in (4, 5, 6)]
             + [DynkinType("E", 6), DynkinType("E", 7)])
    for t in types:
        h = hom_matrix(t)
        nak = nakayama(t).as_dict()
        n = t.n
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert h[i - 1][j - 1] == h[j - 1][i - 1]
                assert h[i - 1][j - 1] == h[nak[i] - 1][nak[j] - 1]
        assert sum(sum(r) for r in h) == dim_pi_total(t)
        for i in range(1, n + 1):
            assert sum(h[i - 1]) == dim_vertex_module(t, i)


# -- ideal membership --------------------------------------------------------

def test_relation_is_its_own_certificate():
    t = ExtDynkinType("D", 4)
    rels = relations_for(t, Weight.of([0] * 5))
    res = ideal_member(t, Weight.of([0] * 5), rels[2])
    assert isinstance(res, MembershipCertificate)
    assert list(res.terms) == [(1, trivial_path(2), 2, trivial_path(2))]


def test_firstses_membership_with_certificate():
    t = ExtDynkinType("D", 4)
    w0 = Weight.of([0] * 5)
    f = elem(t, "1 * a4.~a0.a0.~a3 : 4->3  +  1 * a4.~a1.a1.~a3 : 4->3")
    res = ideal_member(t, w0, f)
    assert isinstance(res, MembershipCertificate)
    assert check_certificate(t, res)


def test_firstses_sign_flip_not_member():
    t = ExtDynkinType("D", 4)
    w0 = Weight.of([0] * 5)
    f = elem(t, "1 * a4.~a0.a0.~a3 : 4->3  +  -1 * a4.~a1.a1.~a3 : 4->3")
    res = ideal_member(t, w0, f, degree_cap=f.degree + 6)
    assert isinstance(res, MembershipNotFound)
    # independent oracle: the degree-4 graded span misses this element
    assert not brute_graded_member(build_extended(t), f)


def test_membership_agrees_with_brute_force_randomly():
    rng = random.Random(17)
    t = ExtDynkinType("A", 3)
    q = build_extended(t)
    w0 = Weight.of([0] * 4)
    paths = paths_by_degree(q, 4)
    for _ in range(40):
        d = rng.choice([2, 3, 4])
        src = rng.choice(q.vertices)
        cands = [p for p in paths[d] if p.source == src]
        if not cands:
            continue
        tgt = rng.choice(sorted({p.target for p in cands}))
        picks = [p for p in cands if p.target == tgt]
        f = PathElement({p: rng.choice([1, -1, 2]) for p in
                         rng.sample(picks, min(3, len(picks)))})
        res = ideal_member(t, w0, f)
        assert isinstance(res, MembershipCertificate) == brute_graded_member(q, f)
        if isinstance(res, MembershipCertificate):
            assert check_certificate(t, res)


def test_cap_below_degree_rejected():
    t = ExtDynkinType("D", 4)
    f = elem(t, "1 * a4.~a0.a0.~a3 : 4->3")
    with pytest.raises(DomainError):
        ideal_member(t, Weight.of([0] * 5), f, degree_cap=2)


def test_membership_with_nonzero_weight():
    # rho-type element deformed by eps0: member exactly for matching weight
    t = ExtDynkinType("D", 4)
    we = epsilon0(t)
    rels = relations_for(t, we)
    res = ideal_member(t, we, rels[0])
    assert isinstance(res, MembershipCertificate) and check_certificate(t, res)
    # the same element is NOT in the ideal at weight 0
    res0 = ideal_member(t, Weight.of([0] * 5), rels[0])
    assert isinstance(res0, MembershipNotFound)


def test_filtered_dims_match_graded_dims():
    # gr Pi^lambda = Pi: layer dimensions do not depend on the weight
    t = ExtDynkinType("D", 4)
    m0 = model_for(t, Weight.of([0] * 5))
    me = model_for(t, epsilon0(t))
    mg = model_for(t, Weight.of([1, "1/2", 0, "2/3", 5]))
    dims = [[m.layer_dims(d) for d in range(9)] for m in (m0, me, mg)]
    assert dims[0] == dims[1] == dims[2]


# -- zero products -----------------------------------------------------------

def test_verify_zero_product_identity_sanity():
    t = ExtDynkinType("D", 4)
    w0 = Weight.of([0] * 5)
    rels = relations_for(t, w0)
    rep = verify_zero_product(t, w0, [[rels[2]]], [[PathElement.unit(2)]])
    assert rep.ok and len(rep.certificates) == 1


def test_verify_zero_product_shape_check():
    t = ExtDynkinType("D", 4)
    with pytest.raises(DomainError):
        verify_zero_product(t, Weight.of([0] * 5), [[PathElement.unit(2)]], [])


def test_verify_zero_product_reports_failure_entry():
    t = ExtDynkinType("D", 4)
    w0 = Weight.of([0] * 5)
    q = build_extended(t)
    psi = [[PathElement.of_path(parse_path(q, "a4.~a0"))]]
    phi = [[PathElement.of_path(parse_path(q, "a0.~a3"))]]
    rep = verify_zero_product(t, w0, psi, phi)
    assert not rep.ok and rep.failed_entry == (0, 0)


@pytest.mark.parametrize("fixture", MAP_FIXTURES, ids=lambda f: f.fixture_id)
def test_printed_map_pairs_certify(fixture):
    psi, phi = fixture.matrices()
    for w in (fixture.zero_weight(), fixture.component_weight()):
        rep = verify_zero_product(fixture.type, w, psi, phi)
        assert rep.ok, (fixture.fixture_id, rep.failed_entry)
        for cert in rep.certificates:
            assert check_certificate(fixture.type, cert)
