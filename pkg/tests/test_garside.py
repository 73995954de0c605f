"""Tests for Garside structures, normal forms, lattices and cells."""

import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinhelly.errors import InputError, NotPairwiseIntersecting, StructureViolation, UnknownAtom
from artinhelly.garside.cells import (
    GCell,
    cell_intersection,
    cell_member,
    cell_of,
    cell_top,
    cell_vertices,
    certify_intersection,
    check_complement_duality,
    helly_graph_vertices_adjacency,
    helly_neighbors,
    interval_vertices,
    triple_cell_cover,
)
from artinhelly.garside.lattice import (
    alpha,
    canonical_length,
    infimum,
    join_p,
    join_s,
    meet_p,
    meet_s,
    omega,
    phi_apply,
    prefix_leq,
    star,
    suffix_geq,
    supremum,
)
from artinhelly.garside.loader import structure_from_file, structure_to_file
from artinhelly.garside.normal_form import (
    ONE,
    GrpElt,
    delta_power,
    inverse,
    is_left_weighted,
    multiply,
    normal_form,
    parse_word,
    render,
    render_word,
    simple_element,
    to_word,
)
from artinhelly.garside.rewriting import PositiveWordOracle

letters4 = st.lists(st.tuples(st.integers(0, 2), st.sampled_from([1, -1])), max_size=8)
positive4 = st.lists(st.integers(0, 2), min_size=1, max_size=5)
PAIRS = ((0, 1), (1, 2), (2, 0))


def nf(gs, text):
    return normal_form(gs, parse_word(gs, text))


def random_element(gs, rng, length):
    """Normal form of a random word in the atoms and their inverses."""
    rank = len(gs.atoms)
    return normal_form(
        gs, [(int(rng.integers(rank)), int(rng.choice([1, -1]))) for _ in range(length)]
    )


class TestNormalForm:
    """Test left-weighted normal forms."""

    def test_braid_example(self, braid3):
        """Test a a b a = Δ · b."""
        assert render(braid3, nf(braid3, "a a b a")) == "Δ^1 · b"

    def test_free_cancellation(self, braid3):
        """Test a a⁻¹ is the identity."""
        assert nf(braid3, "a a^-1") == ONE
        assert nf(braid3, "a a⁻¹") == ONE
        assert render(braid3, ONE) == "Δ^0 · ()"

    def test_braid_relation(self, braid3):
        """Test aba = bab = Δ."""
        assert nf(braid3, "a b a") == nf(braid3, "b a b") == delta_power(braid3, 1)

    def test_upper_case_inverts(self, braid3):
        """Test that an upper-case atom name is its inverse."""
        assert nf(braid3, "A") == nf(braid3, "a^-1")
        assert nf(braid3, "A").power == -1

    def test_unknown_atom(self, braid3):
        """Test parsing an atom outside the structure."""
        with pytest.raises(UnknownAtom):
            parse_word(braid3, "a z")

    def test_simple_elements(self, braid3):
        """Test the identity and Δ as simple elements."""
        assert simple_element(braid3, 0) == ONE
        assert simple_element(braid3, braid3.delta) == GrpElt(1, ())

    def test_render_word(self, braid3):
        """Test rendering a signed atom word."""
        assert render_word(braid3, [(0, 1), (1, -1)]) == "a b^-1"
        assert render_word(braid3, []) == "1"

    @settings(derandomize=True, max_examples=80, deadline=None)
    @given(word=letters4)
    def test_left_weighted(self, braid4, word):
        """Test that normal forms are left-weighted without 1 or Δ factors."""
        assert is_left_weighted(braid4, normal_form(braid4, word))

    @settings(derandomize=True, max_examples=80, deadline=None)
    @given(word=letters4)
    def test_to_word_round_trip(self, braid4, word):
        """Test that spelling a normal form and reducing it again is stable."""
        x = normal_form(braid4, word)

        assert normal_form(braid4, to_word(braid4, x)) == x

    @settings(derandomize=True, max_examples=60, deadline=None)
    @given(first=letters4, second=letters4)
    def test_inverse_and_product(self, braid4, first, second):
        """Test x⁻¹x = 1 and NF(uv) = NF(u)·NF(v)."""
        x = normal_form(braid4, first)
        y = normal_form(braid4, second)

        assert multiply(braid4, inverse(braid4, x), x) == ONE
        assert multiply(braid4, x, y) == normal_form(braid4, first + second)


class TestPositiveWordOracle:
    """Test normal forms against relation-move closure."""

    def test_braid_relation_class(self, a2_graph):
        """Test the class of aba."""
        oracle = PositiveWordOracle(a2_graph)

        assert oracle.equivalence_class((0, 1, 0)) == frozenset({(0, 1, 0), (1, 0, 1)})
        assert oracle.equal((0, 1, 0), (1, 0, 1))
        assert not oracle.equal((0, 1), (1, 0))

    @settings(derandomize=True, max_examples=60, deadline=None)
    @given(first=positive4, second=positive4)
    def test_normal_forms_certified(self, a3_graph, braid4, first, second):
        """Test that positive words have equal normal forms iff they are relation-equivalent."""
        oracle = PositiveWordOracle(a3_graph)
        same_form = normal_form(braid4, [(p, 1) for p in first]) == normal_form(
            braid4, [(p, 1) for p in second]
        )

        assert same_form == oracle.equal(first, second)

    def test_classes_of_length(self, a2_graph):
        """Test that positive words of length 3 in B_3 fall into 7 classes."""
        oracle = PositiveWordOracle(a2_graph)

        assert len(oracle.classes_of_length(3)) == 7


class TestLattice:
    """Test prefix and suffix lattices."""

    def test_join_of_atoms(self, braid3):
        """Test a ∨ b = Δ."""
        assert render(braid3, join_p(braid3, nf(braid3, "a"), nf(braid3, "b"))) == "Δ^1"

    def test_meet_of_products(self, braid3):
        """Test ab ∧ ba = 1."""
        assert meet_p(braid3, nf(braid3, "a b"), nf(braid3, "b a")) == ONE

    def test_meet_with_negative_elements(self, braid3):
        """Test a⁻¹ ∧ b⁻¹ = Δ⁻¹."""
        assert meet_p(braid3, nf(braid3, "A"), nf(braid3, "B")) == delta_power(braid3, -1)

    def test_suffix_lattice(self, braid3):
        """Test suffix meet and join of ab and ba."""
        ab, ba = nf(braid3, "a b"), nf(braid3, "b a")

        assert meet_s(braid3, ab, ba) == ONE
        assert join_s(braid3, ab, ba) == delta_power(braid3, 1)

    def test_star_and_phi(self, braid3):
        """Test a* = ba and φ(a) = b."""
        a = braid3.names.index("a")

        assert braid3.names[star(braid3, a)] == "ba"
        assert phi_apply(braid3, nf(braid3, "a")) == nf(braid3, "b")

    def test_orders(self, braid3):
        """Test prefix and suffix orders on ab."""
        ab = nf(braid3, "a b")

        assert prefix_leq(braid3, nf(braid3, "a"), ab)
        assert not prefix_leq(braid3, nf(braid3, "b"), ab)
        assert suffix_geq(braid3, ab, nf(braid3, "b"))

    def test_alpha_omega(self, braid3):
        """Test maximal simple prefix and suffix."""
        ab = nf(braid3, "a b")

        assert alpha(braid3, nf(braid3, "a a b a")) == braid3.delta
        assert braid3.names[omega(braid3, ab)] == "ab"
        with pytest.raises(InputError):
            alpha(braid3, nf(braid3, "A"))

    def test_canonical_lengths(self, braid3):
        """Test infimum and supremum of Δ · b."""
        x = nf(braid3, "a a b a")

        assert (infimum(x), supremum(x), canonical_length(x)) == (1, 2, 1)

    def test_complement_duality(self, braid4, b2_structure):
        """Test the complement identities on the simples."""
        assert check_complement_duality(braid4) == []
        assert check_complement_duality(b2_structure) == []

    @settings(derandomize=True, max_examples=40, deadline=None)
    @given(first=letters4, second=letters4)
    def test_meet_is_lower_bound(self, braid4, first, second):
        """Test x ∧ y ≼ x, y ≼ x ∨ y."""
        x = normal_form(braid4, first)
        y = normal_form(braid4, second)
        meet = meet_p(braid4, x, y)
        join = join_p(braid4, x, y)

        for z in (x, y):
            assert prefix_leq(braid4, meet, z)
            assert prefix_leq(braid4, z, join)


class TestCells:
    """Test cells [f, fΔ] and their intersections."""

    def test_cell_vertices(self, braid3):
        """Test that a cell has one vertex per simple."""
        cell = cell_of(braid3, nf(braid3, "a"))
        vertices = cell_vertices(braid3, cell)

        assert len(set(vertices)) == 6
        assert all(cell_member(braid3, cell, v) for v in vertices)
        assert not cell_member(braid3, cell, ONE)

    def test_intersection_is_interval(self, braid3):
        """Test [1, Δ] ∩ [a, aΔ] = [a, Δ]."""
        c1 = cell_of(braid3, ONE)
        c2 = cell_of(braid3, nf(braid3, "a"))
        shared = cell_intersection(braid3, c1, c2)

        assert shared is not None
        assert shared.low == nf(braid3, "a")
        assert shared.high == delta_power(braid3, 1)
        assert certify_intersection(braid3, c1, c2, shared)
        assert len(interval_vertices(braid3, shared, c1)) == 3

    def test_disjoint_cells(self, braid3):
        """Test cells too far apart."""
        c1 = cell_of(braid3, ONE)
        c2 = cell_of(braid3, delta_power(braid3, 2))

        assert cell_intersection(braid3, c1, c2) is None

    def test_triple_cover(self, braid3):
        """Test the cover of [1, Δ], [a, aΔ], [b, bΔ]."""
        cells = [cell_of(braid3, nf(braid3, w)) for w in ("1", "a", "b")]
        cover = triple_cell_cover(braid3, *cells)

        assert cover == GCell(base=ONE)

    def test_triple_cover_needs_intersections(self, braid3):
        """Test that disjoint inputs are rejected."""
        cells = [cell_of(braid3, ONE), cell_of(braid3, ONE), cell_of(braid3, delta_power(braid3, 3))]

        with pytest.raises(NotPairwiseIntersecting):
            triple_cell_cover(braid3, *cells)

    def test_generalized_cell(self, braid3):
        """Test [1, Δ²] contains Δ · b and has more vertices than [1, Δ]."""
        cell = cell_of(braid3, ONE, power=2)

        assert cell_member(braid3, cell, nf(braid3, "a a b a"))
        assert len(cell_vertices(braid3, cell)) > 6
        with pytest.raises(InputError):
            cell_of(braid3, ONE, power=0)

    def test_helly_neighbors(self, braid3):
        """Test that neighbors share a cell with the identity."""
        neighbors = helly_neighbors(braid3, ONE)

        assert nf(braid3, "a") in neighbors
        assert nf(braid3, "A") in neighbors
        assert ONE not in neighbors
        assert all(helly_graph_vertices_adjacency(braid3, ONE, v) for v in neighbors)


class TestLoader:
    """Test pluggable Garside structure files."""

    def test_load_braid3(self, data_dir):
        """Test a hand-written structure behaves like the derived one."""
        gs = structure_from_file(data_dir / "braid3_structure.json")

        assert gs.size == 6
        assert gs.delta_length == 3
        assert render(gs, nf(gs, "a a b a")) == "Δ^1 · b"

    def test_write_and_read(self, braid4, tmp_path):
        """Test that a written structure reloads with the same tables."""
        path = tmp_path / "braid4.json"
        structure_to_file(braid4, path)
        loaded = structure_from_file(path)

        assert np.array_equal(loaded.product, braid4.product)
        assert loaded.delta == braid4.delta

    def test_missing_identity_products(self, tmp_path):
        """Test that an incomplete identity row names the invariant."""
        path = tmp_path / "broken.json"
        path.write_text(
            json.dumps({"simples": ["1", "a"], "atoms": ["a"], "delta": "a", "product": []}),
            encoding="utf-8",
        )

        with pytest.raises(StructureViolation, match="identity"):
            structure_from_file(path)

    def test_unknown_delta(self, tmp_path):
        """Test that delta must be one of the simples."""
        path = tmp_path / "broken.json"
        path.write_text(
            json.dumps({"simples": ["1", "a"], "atoms": ["a"], "delta": "x"}), encoding="utf-8"
        )

        with pytest.raises(StructureViolation):
            structure_from_file(path)

    def test_unreadable(self, tmp_path):
        """Test that invalid JSON is an input error."""
        path = tmp_path / "broken.json"
        path.write_text("[]", encoding="utf-8")

        with pytest.raises(InputError):
            structure_from_file(path)

    def test_associativity(self, braid4):
        """Test sampled associativity of the partial product."""
        braid4.check_associativity(samples=500, seed=3)


class TestNormalFormsAgainstClosure:
    """Test normal forms against relation-move closure on every short positive word."""

    @pytest.mark.parametrize(
        "structure, graph, longest",
        [
            ("braid3", "a2_graph", 6),
            pytest.param("braid4", "a3_graph", 5, marks=pytest.mark.slow),
        ],
    )
    def test_one_normal_form_per_class(self, request, structure, graph, longest):
        """Test that two positive words share a normal form iff they share a class."""
        gs = request.getfixturevalue(structure)
        oracle = PositiveWordOracle(request.getfixturevalue(graph))

        for length in range(1, longest + 1):
            classes = oracle.classes_of_length(length)
            forms = {
                key: {normal_form(gs, [(p, 1) for p in word]) for word in members}
                for key, members in classes.items()
            }

            assert all(len(found) == 1 for found in forms.values())
            assert len(set().union(*forms.values())) == len(classes)


class TestLatticeIdentities:
    """Test group and lattice identities on seeded random elements."""

    @pytest.mark.parametrize("structure", ["braid3", "braid4", "b2_structure"])
    def test_complements_of_simples(self, request, structure):
        """Test a · a* = Δ and the complement dualities over every simple."""
        gs = request.getfixturevalue(structure)

        for a in range(gs.size):
            product = multiply(gs, simple_element(gs, a), simple_element(gs, star(gs, a)))
            assert product == delta_power(gs, 1)
        assert check_complement_duality(gs) == []

    @pytest.mark.slow
    @pytest.mark.parametrize("structure", ["braid3", "braid4"])
    def test_random_tuples(self, request, structure):
        """Test 1000 seeded triples (f, x, y) against the lattice identities."""
        gs = request.getfixturevalue(structure)
        rng = np.random.default_rng(7)

        for _ in range(1000):
            f, x, y = (random_element(gs, rng, int(rng.integers(0, 7))) for _ in range(3))
            meet = meet_p(gs, x, y)
            fx, fy = multiply(gs, f, x), multiply(gs, f, y)

            assert multiply(gs, f, meet) == meet_p(gs, fx, fy)
            assert multiply(gs, f, join_p(gs, x, y)) == join_p(gs, fx, fy)
            assert meet_s(gs, multiply(gs, x, f), multiply(gs, y, f)) == multiply(
                gs, meet_s(gs, x, y), f
            )
            assert inverse(gs, multiply(gs, x, y)) == multiply(
                gs, inverse(gs, y), inverse(gs, x)
            )
            assert phi_apply(gs, multiply(gs, x, y)) == multiply(
                gs, phi_apply(gs, x), phi_apply(gs, y)
            )
            assert phi_apply(gs, x, 2) == x
            for atom in gs.atoms:
                above = multiply(gs, meet, simple_element(gs, atom))
                assert not (prefix_leq(gs, above, x) and prefix_leq(gs, above, y))


class TestTripleCoverReplay:
    """Test the triple cover on seeded pairwise intersecting cells."""

    @pytest.mark.slow
    @pytest.mark.parametrize("structure", ["braid3", "braid4"])
    def test_cover_holds_pairwise_intersections(self, request, structure):
        """Test 250 triples per group, drawn around a random vertex."""
        gs = request.getfixturevalue(structure)
        rng = np.random.default_rng(11)
        replayed = 0

        while replayed < 250:
            f = random_element(gs, rng, int(rng.integers(0, 6)))
            cells = [
                cell_of(gs, multiply(gs, f, random_element(gs, rng, int(rng.integers(0, 3)))))
                for _ in range(3)
            ]
            shared = [cell_intersection(gs, cells[i], cells[j]) for i, j in PAIRS]
            if any(s is None for s in shared):
                continue
            cover = triple_cell_cover(gs, *cells)

            for (i, _), interval in zip(PAIRS, shared):
                assert prefix_leq(gs, cover.base, interval.low)
                assert prefix_leq(gs, interval.high, cell_top(gs, cover))
                for v in interval_vertices(gs, interval, cells[i]):
                    assert cell_member(gs, cover, v)
            replayed += 1
