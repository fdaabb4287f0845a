from __future__ import annotations

import pytest

from fixtures import RANK2_REFLECTION
from hyperarr import (
    braid_arrangement,
    build_salvetti,
    coordinate_arrangement,
    dihedral_arrangement,
    reflection_group,
)
from hyperarr.groups import act_on_sal
from hyperarr.orbits import (
    ArtinRelation,
    RankError,
    boundary_word,
    coxeter_exponent,
    dual_complex_2d,
    edge_label,
    presentation,
    quotient_homology,
    quotient_sal,
    relation_from_word,
    word_to_str,
)


def burnside_histogram(S, W):
    """Orbit counts per dimension from the average number of fixed cells."""
    top = max(c.dim for c in S.cells)
    out = []
    for k in range(top + 1):
        cells = [c for c in S.cells if c.dim == k]
        fixed = sum(1 for g in W.elements for c in cells if act_on_sal(g, c) == c)
        assert fixed % W.order == 0
        out.append(fixed // W.order)
    return tuple(out)


@pytest.fixture(scope="module", params=sorted(RANK2_REFLECTION))
def rank2(request):
    make, m = RANK2_REFLECTION[request.param]
    A = make()
    W = reflection_group(A)
    return A, W, m


class TestQuotient:
    def test_histogram(self, rank2):
        A, W, _ = rank2
        S = build_salvetti(A)
        Q = quotient_sal(S, W)
        assert Q.histogram() == (1, 2, 1)
        assert Q.histogram() == burnside_histogram(S, W)

    def test_braid_a3(self):
        A = braid_arrangement(4, essentialize=True)
        S, W = build_salvetti(A), reflection_group(A)
        Q = quotient_sal(S, W)
        assert Q.histogram() == (1, 3, 3, 1) == burnside_histogram(S, W)
        assert Q.relator is None

    def test_representatives_are_least(self, rank2):
        A, W, _ = rank2
        Q = quotient_sal(build_salvetti(A), W)
        for o in Q.orbits:
            assert o.representative.key == min(c.key for c in o.members)
            assert all(c.dim == o.dim for c in o.members)

    def test_incidence(self, rank2):
        A, W, m = rank2
        Q = quotient_sal(build_salvetti(A), W)
        # the top cell covers 2m edge cells, m in each edge orbit; each edge covers two vertices
        top = len(Q.orbits) - 1
        assert Q.incidence[(top, 1)] == m and Q.incidence[(top, 2)] == m
        assert Q.incidence[(1, 0)] == 2 and Q.incidence[(2, 0)] == 2

    def test_commutes_with_action(self):
        A = braid_arrangement(3, essentialize=True)
        S, W = build_salvetti(A), reflection_group(A)
        Q = quotient_sal(S, W)
        classes = {frozenset(o.members) for o in Q.orbits}
        for g in W.elements:
            moved = {frozenset(act_on_sal(g, c) for c in o.members) for o in Q.orbits}
            assert moved == classes

    def test_orbit_of(self):
        A = coordinate_arrangement()
        S, W = build_salvetti(A), reflection_group(A)
        Q = quotient_sal(S, W)
        assert Q.orbit_of(S.cell("00", "--")) == len(Q.orbits) - 1
        assert Q.orbit_of(S.cell("+-", "+-")) == 0


class TestDualComplex:
    @pytest.mark.parametrize("make, gon", [
        (lambda: braid_arrangement(3, essentialize=True), 6),
        (coordinate_arrangement, 4),
        (lambda: dihedral_arrangement(5), 10),
    ])
    def test_polygon(self, make, gon):
        A = make()
        D = dual_complex_2d(A, reflection_group(A))
        assert D.counts() == (gon, gon, 1)
        for ray, C, nxt in D.edges:
            assert sum(1 for a, b in zip(C, nxt) if a != b) == 1
            assert ray in A.faces() and A.faces()[ray].codim == 1
        if A.geometric:
            for C, x in zip(D.vertices, D.points):
                assert A.covector_of_point(x) == C
        else:
            assert D.points is None

    def test_rank_refused(self):
        A = braid_arrangement(4, essentialize=True)
        with pytest.raises(RankError):
            dual_complex_2d(A, reflection_group(A))
        with pytest.raises(RankError):
            boundary_word(A, reflection_group(A))
        with pytest.raises(RankError):
            boundary_word(braid_arrangement(3), reflection_group(braid_arrangement(3)))


class TestBoundaryWord:
    def test_length_and_alternation(self, rank2):
        A, W, m = rank2
        w = boundary_word(A, W)
        assert len(w) == 2 * m
        labels = [g for g, _ in w]
        assert all(labels[k] != labels[(k + 1) % len(w)] for k in range(len(w)))
        assert sum(e for _, e in w) == 0

    def test_relation(self, rank2):
        A, W, m = rank2
        left, right = relation_from_word(boundary_word(A, W))
        alt = tuple(1 if k % 2 == 0 else 2 for k in range(m))
        alt2 = tuple(2 if k % 2 == 0 else 1 for k in range(m))
        assert (left, right) == (alt, alt2)

    def test_a2_word(self):
        A = braid_arrangement(3, essentialize=True)
        w = boundary_word(A, reflection_group(A))
        assert word_to_str(w) == "a^-1 b^-1 a^-1 b a b"

    def test_relation_holds_in_group(self, rank2):
        A, W, _ = rank2
        left, right = relation_from_word(boundary_word(A, W))
        assert W.evaluate(left).action == W.evaluate(right).action

    def test_every_base_chamber(self):
        A = dihedral_arrangement(6)
        for C in A.faces().chambers:
            W = reflection_group(A, C.covector)
            assert relation_from_word(boundary_word(A, W)) == ((1, 2, 1, 2, 1, 2), (2, 1, 2, 1, 2, 1))

    def test_edge_labels_are_walls(self):
        A = braid_arrangement(3, essentialize=True)
        W = reflection_group(A)
        S = build_salvetti(A)
        for c in S.cells:
            if c.dim == 1:
                assert edge_label(W, c.face, c.chamber) in (1, 2)


class TestRelationFromWord:
    def test_commutator(self):
        assert relation_from_word([(1, 1), (2, 1), (1, -1), (2, -1)]) == ((1, 2), (2, 1))

    def test_rotation(self):
        w = [(1, 1), (2, 1), (1, 1), (2, -1), (1, -1), (2, -1)]
        assert relation_from_word(w) == ((1, 2, 1), (2, 1, 2))

    def test_bad(self):
        with pytest.raises(ValueError):
            relation_from_word([(1, 1), (2, 1), (1, 1)])
        with pytest.raises(ValueError):
            relation_from_word([(1, 1), (2, -1), (1, 1), (2, -1)])


class TestPresentation:
    @pytest.mark.parametrize("make, text", [
        (lambda: braid_arrangement(3, essentialize=True), "<a, b | aba = bab>"),
        (coordinate_arrangement, "<a, b | ab = ba>"),
        (lambda: dihedral_arrangement(4), "<a, b | abab = baba>"),
        (lambda: dihedral_arrangement(5), "<a, b | ababa = babab>"),
        (lambda: dihedral_arrangement(6), "<a, b | ababab = bababa>"),
        (lambda: braid_arrangement(4, essentialize=True), "<a, b, c | aba = bab, bcb = cbc, ac = ca>"),
    ])
    def test_text(self, make, text):
        A = make()
        assert str(presentation(A, reflection_group(A))) == text

    def test_a3_exponents(self):
        A = braid_arrangement(4, essentialize=True)
        P = presentation(A, reflection_group(A))
        assert [r.m for r in P.relations] == [3, 3, 2]
        assert P.boundary is None
        assert P.as_dict()["relations"][2] == {"left": "ac", "right": "ca", "m": 2}

    def test_non_essential_braid(self):
        A = braid_arrangement(4)
        P = presentation(A, reflection_group(A))
        assert [r.m for r in P.relations] == [3, 3, 2]

    def test_relations_hold_in_group(self):
        A = braid_arrangement(4, essentialize=True)
        W = reflection_group(A)
        for r in presentation(A, W).relations:
            assert W.evaluate(r.left).action == W.evaluate(r.right).action

    def test_artin_relation(self):
        r = ArtinRelation(1, 2, 3)
        assert r.left == (1, 2, 1) and r.right == (2, 1, 2)
        assert r.relator() == ((1, 1), (2, 1), (1, 1), (2, -1), (1, -1), (2, -1))
        assert relation_from_word(list(r.relator())) == (r.left, r.right)

    def test_coxeter_exponents(self):
        assert coxeter_exponent(braid_arrangement(3, essentialize=True), 1, 3) == 3
        assert coxeter_exponent(coordinate_arrangement(), 1, 2) == 2
        assert coxeter_exponent(dihedral_arrangement(6), 1, 2) == 6
        assert coxeter_exponent(dihedral_arrangement(7), 1, 4) == 7
        A = braid_arrangement(4)
        # walls x1=x2 (1) and x3=x4 (6) meet in a flat contained only in those two
        assert coxeter_exponent(A, 1, 6) == 2
        assert coxeter_exponent(A, 1, 4) == 3
        with pytest.raises(ValueError):
            coxeter_exponent(A, 2, 2)


class TestQuotientHomology:
    @pytest.mark.parametrize("make, h1, h2", [
        (lambda: braid_arrangement(3, essentialize=True), "Z", "0"),
        (coordinate_arrangement, "Z + Z", "Z"),
        (lambda: dihedral_arrangement(4), "Z + Z", "Z"),
        (lambda: dihedral_arrangement(5), "Z", "0"),
        (lambda: dihedral_arrangement(6), "Z + Z", "Z"),
    ])
    def test_groups(self, make, h1, h2):
        A = make()
        Q = quotient_sal(build_salvetti(A), reflection_group(A))
        H = quotient_homology(Q)
        assert [str(h) for h in H] == ["Z", h1, h2]

    def test_higher_rank_unsupported(self):
        A = braid_arrangement(4, essentialize=True)
        Q = quotient_sal(build_salvetti(A), reflection_group(A))
        with pytest.raises(NotImplementedError):
            quotient_homology(Q)
