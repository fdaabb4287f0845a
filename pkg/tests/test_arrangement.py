from __future__ import annotations

import itertools
import math
from fractions import Fraction

import networkx as nx
import pytest
import scipy.optimize
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import ESSENTIAL, GEOMETRIC, line
from hyperarr import (
    Arrangement,
    EnumerationCapError,
    braid_arrangement,
    coordinate_arrangement,
    dihedral_arrangement,
    sample_covectors,
)
from hyperarr.arrangement import (
    NotAFaceError,
    adjacency_graph,
    chambers,
    effective_rank,
    enumerate_faces,
    fan_order,
    is_essential,
    restrict_chamber,
    subarrangement_at,
    unique_extension,
    walls,
)
from hyperarr.signs import SignVector, check_covector_axioms, sign_leq


def V(s):
    return SignVector(s)


def lp_feasible(A, X):
    """Floating-point LP restatement of 'the open sign region of X is nonempty'."""
    eq = [[float(c) for c in h.normal] for h, s in zip(A.hyperplanes, X) if s == 0]
    ub = [[-s * float(c) for c in h.normal] for h, s in zip(A.hyperplanes, X) if s != 0]
    res = scipy.optimize.linprog(
        c=[0] * A.dimension,
        A_eq=eq or None,
        b_eq=[0] * len(eq) if eq else None,
        A_ub=ub or None,
        b_ub=[-1] * len(ub) if ub else None,
        bounds=[(None, None)] * A.dimension,
        method="highs",
    )
    return res.status == 0


def brute_force_covectors(A):
    return {
        SignVector(X)
        for X in itertools.product((1, -1, 0), repeat=A.n)
        if lp_feasible(A, SignVector(X))
    }


class TestPointLabels:
    def test_examples(self):
        A = coordinate_arrangement()
        assert A.covector_of_point([1, 1]) == V("++")
        assert A.covector_of_point([0, 0]) == V("00")
        assert braid_arrangement(3).covector_of_point([3, 2, 1]) == V("+++")

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            coordinate_arrangement().covector_of_point([1])


class TestConstruction:
    def test_zero_normal_rejected(self):
        with pytest.raises(ValueError):
            Arrangement.from_normals([[0, 0]])

    def test_proportional_normals_rejected(self):
        with pytest.raises(ValueError, match="coincide"):
            Arrangement.from_normals([[1, 2], [-2, -4]])

    def test_asymmetric_gram_rejected(self):
        with pytest.raises(ValueError):
            Arrangement.from_normals([[1, 0]], gram=[[1, 1], [0, 1]])

    def test_cap(self):
        with pytest.raises(EnumerationCapError):
            enumerate_faces(braid_arrangement(4), cap=5)


class TestFeasibleWitness:
    def test_two_lines(self):
        A = coordinate_arrangement()
        x = A.feasible_witness("0+")
        assert x[0] == 0 and x[1] >= 1
        assert A.feasible_witness("00") == (0, 0)

    def test_braid_infeasible_pattern(self):
        # x1 > x2, x1 < x3, x2 > x3 is a cyclic contradiction
        A = braid_arrangement(3)
        assert A.feasible_witness("+-+") is None
        assert A.feasible_witness("++-") is not None

    def test_braid_has_exactly_14_infeasible_patterns(self):
        A = braid_arrangement(3)
        bad = [X for X in itertools.product((1, -1, 0), repeat=3) if A.feasible_witness(SignVector(X)) is None]
        assert len(bad) == 27 - 13
        assert V("+-+") in bad and V("-+-") in bad


class TestEnumeration:
    def test_two_lines(self):
        P = coordinate_arrangement().faces()
        assert [str(X) for X in P.covectors] == ["++", "+-", "+0", "-+", "--", "-0", "0+", "0-", "00"]

    def test_braid_a2(self):
        P = braid_arrangement(3).faces()
        assert len(P) == 13
        assert P.counts_by_codim() == {0: 6, 1: 6, 2: 1}

    def test_single_hyperplane(self):
        assert {str(X) for X in line().faces().covectors} == {"0", "+", "-"}

    @pytest.mark.parametrize("name", ["line", "coords", "braid2", "braid3", "braid4", "braid3e", "dihedral4"])
    def test_matches_lp_brute_force(self, name):
        A = GEOMETRIC[name]()
        assert set(A.faces().covectors) == brute_force_covectors(A)

    @pytest.mark.parametrize("name", sorted(GEOMETRIC))
    def test_matches_sampling_oracle(self, name):
        A = GEOMETRIC[name]()
        sampled = sample_covectors(A, seed=1, samples=4000)
        enumerated = set(A.faces().covectors)
        assert sampled <= enumerated
        assert sampled == enumerated

    @pytest.mark.parametrize("name", sorted(GEOMETRIC))
    def test_witnesses_and_codims(self, name):
        A = GEOMETRIC[name]()
        for F in A.faces():
            assert A.covector_of_point(F.witness) == F.covector
            assert F.codim == A.codim_of(F.covector)

    @pytest.mark.parametrize("name", sorted(ESSENTIAL))
    def test_axioms(self, name):
        assert check_covector_axioms(ESSENTIAL[name]().faces().covectors).passed

    def test_sorted_output(self):
        cov = [str(X) for X in braid_arrangement(4).faces().covectors]
        assert cov == sorted(cov)

    @settings(max_examples=25)
    @given(
        st.lists(
            st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)),
            min_size=1,
            max_size=4,
            unique=True,
        )
    )
    def test_random_arrangements(self, rows):
        try:
            A = Arrangement.from_normals(rows)
        except ValueError:
            return
        enumerated = set(A.faces().covectors)
        assert sample_covectors(A, seed=0, samples=600) <= enumerated
        assert enumerated == brute_force_covectors(A)
        assert check_covector_axioms(enumerated).passed


class TestChambersAndRank:
    @pytest.mark.parametrize("ell", [2, 3, 4])
    def test_braid_counts(self, ell):
        for ess in (False, True):
            A = braid_arrangement(ell, essentialize=ess)
            assert A.n == math.comb(ell, 2)
            assert len(chambers(A)) == math.factorial(ell)

    def test_chambers_are_maximal(self):
        P = braid_arrangement(4).faces()
        maximal = [X for X in P.covectors if not any(X != Y and sign_leq(X, Y) for Y in P.covectors)]
        assert sorted(maximal, key=str) == sorted((C.covector for C in P.chambers), key=str)

    def test_essential(self):
        assert is_essential(coordinate_arrangement())
        assert not is_essential(braid_arrangement(3))
        assert is_essential(braid_arrangement(3, essentialize=True))

    @pytest.mark.parametrize("name", sorted(ESSENTIAL))
    def test_rank_edge_convention(self, name):
        A = ESSENTIAL[name]()
        P = A.faces()
        assert P.rank_edges() == A.dimension
        assert P.rank_elements() == A.dimension + 1

    def test_essentialized_posets_isomorphic(self):
        for ell in (3, 4):
            a = braid_arrangement(ell).faces()
            b = braid_arrangement(ell, essentialize=True).faces()
            assert a.covectors == b.covectors

    def test_dihedral3_is_essentialized_braid(self):
        assert dihedral_arrangement(3).faces().covectors == braid_arrangement(3, essentialize=True).faces().covectors

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7])
    def test_dihedral_fan_counts(self, m):
        P = dihedral_arrangement(m).faces()
        assert len(P) == 4 * m + 1
        assert P.counts_by_codim() == {0: 2 * m, 1: 2 * m, 2: 1}

    def test_combinatorial_fan_matches_geometric_square(self):
        from hyperarr.arrangement import DihedralFan

        assert DihedralFan(4).faces().covectors == dihedral_arrangement(4).faces().covectors


class TestLocalStructure:
    def test_subarrangement(self):
        A = braid_arrangement(3)
        sub, pos = subarrangement_at(A, "0++")
        assert pos == (1,) and sub.n == 1
        assert sub.normals[0] == A.normals[0]
        assert subarrangement_at(A, "+++") == (None, ())
        sub, pos = subarrangement_at(A, "000")
        assert pos == (1, 2, 3)

    def test_subarrangement_witness_lies_on_members(self):
        A = braid_arrangement(4)
        for F in A.faces():
            _, pos = subarrangement_at(A, F.covector)
            assert {j for j in range(1, A.n + 1) if A.hyperplanes[j - 1](F.witness) == 0} == set(pos)

    def test_restrict_chamber(self):
        A = braid_arrangement(3)
        assert restrict_chamber(A, "0++", "+++") == V("+")
        assert restrict_chamber(A, "+++", "+++") == V("")
        assert restrict_chamber(A, "000", "+--") == V("+--")
        with pytest.raises(NotAFaceError):
            restrict_chamber(A, "000", "0++")

    def test_unique_extension(self):
        A = braid_arrangement(3)
        assert unique_extension(A, "0++", "-").covector == V("-++")
        assert unique_extension(A, "+++", "").covector == V("+++")
        assert unique_extension(coordinate_arrangement(), "00", "+-").covector == V("+-")

    @pytest.mark.parametrize("name", ["coords", "braid3", "braid4"])
    def test_extension_inverts_restriction(self, name):
        A = GEOMETRIC[name]()
        P = A.faces()
        for F in P.faces:
            for C in P.chambers:
                if sign_leq(F.covector, C.covector):
                    D = restrict_chamber(A, F.covector, C.covector)
                    assert unique_extension(A, F.covector, D).covector == C.covector

    def test_walls(self):
        assert walls(coordinate_arrangement(), "++") == (1, 2)
        assert len(walls(braid_arrangement(3), "+++")) == 2
        assert walls(line(), "+") == (1,)

    @pytest.mark.parametrize(
        "A, cycle",
        [(coordinate_arrangement(), 4), (braid_arrangement(3), 6), (dihedral_arrangement(5), 10)],
    )
    def test_adjacency_cycles(self, A, cycle):
        G = nx.Graph()
        G.add_edges_from(adjacency_graph(A))
        assert G.number_of_nodes() == cycle and G.number_of_edges() == cycle
        assert nx.is_isomorphic(G, nx.cycle_graph(cycle))

    def test_single_hyperplane_adjacency(self):
        assert adjacency_graph(line()) == {(V("+"), V("-")): 1}

    def test_adjacency_labels(self):
        for (C, D), j in adjacency_graph(braid_arrangement(4)).items():
            diff = [k + 1 for k in range(len(C)) if C[k] != D[k]]
            assert diff == [j]

    def test_fan_order(self):
        walk = fan_order(braid_arrangement(3, essentialize=True), V("+++"))
        assert len(walk) == 6
        assert walk[0] == (V("+++"), 1)
        seen = [C for C, _ in walk]
        assert len(set(seen)) == 6

    def test_effective_rank(self):
        assert effective_rank(braid_arrangement(4)) == 3
        assert effective_rank(dihedral_arrangement(7)) == 2


def test_rational_normals_accepted():
    A = Arrangement.from_normals([[Fraction(1, 2), 0], [0, Fraction(-3, 4)]])
    assert A.covector_of_point([1, 1]) == V("+-")
