from collections import Counter

import pytest

from preproj.dynkin import ExtDynkinType, build_extended
from preproj.errors import DomainError
from preproj.fixtures import golden_knit_fixtures, worked_example_fixtures
from preproj.knitting import extract_maps, knit, render_pattern
from preproj.pathalg import check_certificate, format_element


def grid(result):
    return result.pattern.values


def test_worked_example_with_two_circled_vertices():
    # ~D5, S = {0,5}, onto V4
    r = knit(ExtDynkinType("D", 5), {0, 5}, 4)
    assert r.kernel == 1
    assert r.multiplicities == {0: 1, 5: 1}
    expected = {
        (1, 2): 0, (1, 4): 1, (1, 5): 0,
        (2, 0): 0, (2, 1): 0, (2, 3): 1,
        (3, 2): 1, (3, 4): 0, (3, 5): 1,
        (4, 0): 1, (4, 1): 1, (4, 3): 0,
        (5, 2): 0, (5, 4): 0, (5, 5): 0,
        (6, 0): 0, (6, 1): -1, (6, 3): 0,
    }
    assert grid(r) == expected
    assert r.pattern.boxed == (1, 4)


def test_worked_example_with_one_circled_vertex():
    # ~D5, S = {0}, onto V4: kernel V5 with multiplicity two on V0
    r = knit(ExtDynkinType("D", 5), {0}, 4)
    assert r.kernel == 5
    assert r.multiplicities == {0: 2}
    expected = {
        (1, 2): 0, (1, 4): 1, (1, 5): 0,
        (2, 0): 0, (2, 1): 0, (2, 3): 1,
        (3, 2): 1, (3, 4): 0, (3, 5): 1,
        (4, 0): 1, (4, 1): 1, (4, 3): 1,
        (5, 2): 1, (5, 4): 1, (5, 5): 0,
        (6, 0): 1, (6, 1): 0, (6, 3): 1,
        (7, 2): 0, (7, 4): 0, (7, 5): 1,
        (8, 0): 0, (8, 1): 0, (8, 3): 0,
        (9, 2): 0, (9, 4): 0, (9, 5): -1,
    }
    assert grid(r) == expected


def test_e6_spec_example():
    r = knit(ExtDynkinType("E", 6), {0}, 6)
    assert r.kernel == 2 and r.multiplicities == {0: 2}


def test_input_validation():
    with pytest.raises(DomainError):
        knit(ExtDynkinType("A", 5), {0}, 3)  # cyclic type unsupported
    with pytest.raises(DomainError):
        knit(ExtDynkinType("D", 5), {1, 5}, 4)  # 0 missing from S
    with pytest.raises(DomainError):
        knit(ExtDynkinType("D", 5), {0, 5}, 5)  # target inside S
    with pytest.raises(DomainError):
        knit(ExtDynkinType("D", 5), {0}, 9)  # no such vertex


@pytest.mark.parametrize("fixture", worked_example_fixtures() + golden_knit_fixtures(),
                         ids=lambda f: f.fixture_id)
def test_golden_sequences(fixture):
    r = knit(fixture.type, fixture.s_vertices, fixture.target)
    assert r.kernel == fixture.kernel
    assert Counter(r.middle_multiset()) == Counter(fixture.middle)


def test_pattern_invariants_on_golden_corpus():
    for f in golden_knit_fixtures()[::5]:
        r = knit(f.type, f.s_vertices, f.target)
        values = r.pattern.values
        assert sum(1 for v in values.values() if v == -1) == 1
        assert r.kernel not in r.s_vertices
        assert all(a >= 0 for a in r.multiplicities.values())
        sinks = build_extended(f.type).sink_class()
        for (col, v) in values:
            assert (v in sinks) == (col % 2 == 1)


def test_render_pattern():
    assert render_pattern(None) == ""
    r = knit(ExtDynkinType("D", 5), {0, 5}, 4)
    art = render_pattern(r.pattern)
    assert "[1]" in art and "(1)" in art and "-1" in art
    assert len(art.splitlines()) == 6


def test_render_single_boxed_entry():
    from preproj.knitting import Pattern
    p = Pattern(ExtDynkinType("D", 4), frozenset(), 4, {(1, 4): 1}, (1, 4), (1, 4))
    art = render_pattern(p)
    assert art == "v4 |[1]"


def test_extract_maps_worked_example():
    r = knit(ExtDynkinType("D", 5), {0, 5}, 4)
    m = extract_maps(r)
    assert m.resolved
    assert [format_element(x) for x in m.psi] == [
        "1 * ~a4.a2.~a0 : 4->0", "-1 * ~a4.a5 : 4->5"]
    assert [format_element(x) for x in m.phi] == [
        "1 * a0.~a1 : 0->1", "1 * ~a5.a2.~a1 : 5->1"]
    assert m.report is not None and m.report.ok
    for cert in m.report.certificates:
        assert check_certificate(r.type, cert)


def test_extract_maps_second_worked_example():
    r = knit(ExtDynkinType("D", 5), {0}, 4)
    m = extract_maps(r)
    assert m.resolved
    # the short summand is the plain reverse-read path, the long one needs
    # the composition test to pick the right degree-5 walk
    assert format_element(m.psi[0]) == "1 * ~a4.a2.~a0 : 4->0"
    assert len(m.phi) == 2
    assert m.phi[0].degree == 5 and m.phi[1].degree == 3


def test_extract_maps_neighbour_star_is_reverse_arrows():
    # S = neighbours of the centre of ~D4: every psi entry a single reverse arrow
    r = knit(ExtDynkinType("D", 4), {0, 1, 3, 4}, 2)
    assert r.kernel == 2
    m = extract_maps(r)
    assert m.resolved
    for x in m.psi:
        (path, coef), = x.terms.items()
        assert len(path) == 1 and path.arrows[0].reverse


def test_extract_maps_e6_spec_example():
    r = knit(ExtDynkinType("E", 6), {0}, 6)
    m = extract_maps(r)
    assert m.resolved
    # the certified pair has the printed degree profile (4, 8) / (8, 4)
    assert sorted(x.degree for x in m.psi) == [4, 8]
    assert sorted(x.degree for x in m.phi) == [4, 8]
    assert m.report.ok
