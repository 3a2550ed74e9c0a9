"""Tests for radicals, Levi subalgebras, simple components and A0."""

import random

import pytest
from sympy import Poly, Symbol
from sympy.polys.domains import QQ

from liepi.action import AUTOMORPHISM, ActionGenerator, trivial_action
from liepi.exceptions import (
    BSNotCommuting,
    DecompositionMismatch,
    NonSplitComponent,
    NotAnIdeal,
    NotSemisimple,
    RadicalNotNilpotent,
)
from liepi.exponent import nilpotent_radical_exponent
from liepi.library import adjoint_derivations, from_matrix_basis, sl_basis
from liepi.linalg import Subspace, identity, matrix_from_rows, operator_closure, rows_of, trace_form_radical
from liepi.structure import (
    UnluckySeed,
    centroid,
    complete_reducibility_check,
    exp_ad,
    h_simple_grouping,
    levi_subalgebra,
    minimal_polynomial,
    perturb_levi,
    quotient_algebra,
    quotient_with_map,
    rational_roots,
    semisimple_part_is_split,
    simple_decomposition,
    solvable_radical,
    verify_levi,
    wedderburn_split,
    with_seed_retries,
)

from .example_algebras import load_action, load_algebra, random_unimodular

NILPOTENT_RADICAL = ["sl2", "sl2_plus_sl2", "heisenberg", "bahturin_m2", "glue10", "nonsplit6"]


class TestRadical:
    """Test the solvable radical and quotients."""

    @pytest.mark.parametrize("name,dim,p", [
        ("sl2", 0, 1),
        ("sl2_plus_sl2", 0, 1),
        ("nonsplit6", 0, 1),
        ("heisenberg", 3, 3),
        ("bahturin_m2", 4, 2),
        ("glue10", 4, 2),
    ])
    def test_nilpotent_radicals(self, name, dim, p):
        """Radical dimension and nilpotency index of each fixture."""
        radical = solvable_radical(load_algebra(name))
        assert radical.R.dim == dim
        assert radical.is_nilpotent
        assert radical.p == p

    @pytest.mark.parametrize("name,component_dims", [
        ("sl2", [3]),
        ("sl2_plus_sl2", [3, 3]),
        ("heisenberg", []),
        ("bahturin_m2", [3]),
        ("glue10", [3, 3]),
    ])
    def test_basis_change(self, name, component_dims):
        """R moves by p^-1, p is unchanged and L/R has the same simple components."""
        algebra = load_algebra(name)
        radical = solvable_radical(algebra)
        rng = random.Random(31)
        for _ in range(3):
            p = random_unimodular(rng, algebra.dim)
            changed = algebra.change_basis(p)
            moved = solvable_radical(changed)
            assert moved.R == radical.R.image(rows_of(p.inv()))
            assert moved.p == radical.p
            quotient, _ = quotient_with_map(changed, moved.R)
            dims = []
            if quotient.dim:
                dims = sorted(c.dim for c in simple_decomposition(quotient).components)
            assert dims == component_dims

    def test_solvable_radical(self):
        """A solvable algebra is its own radical, here not nilpotent."""
        radical = solvable_radical(load_algebra("solvable2"))
        assert radical.R.is_full()
        assert not radical.is_nilpotent
        assert radical.p is None
        assert radical.to_dict()["p"] is None

    def test_bahturin_radical_is_d_block(self):
        """The radical of sl_2 ⋉ M_2 is the M_2 block."""
        radical = solvable_radical(load_algebra("bahturin_m2"))
        assert radical.R == Subspace.coordinate([3, 4, 5, 6], 7)

    def test_quotient(self):
        """L/N for sl_2 ⋉ M_2 is sl_2 in the basis of its C-block."""
        algebra = load_algebra("bahturin_m2")
        quotient, pi = quotient_algebra(algebra, solvable_radical(algebra).R)
        assert quotient.dim == 3
        assert pi.shape == (3, 7)
        assert quotient.canonical_table() == from_matrix_basis("sl2", sl_basis(2)).canonical_table()

    def test_quotient_by_non_ideal(self):
        """span{e} is not an ideal of sl2."""
        with pytest.raises(NotAnIdeal):
            quotient_algebra(load_algebra("sl2"), Subspace.coordinate([0], 3))


class TestLevi:
    """Test Levi sections along a nilpotent radical."""

    @pytest.mark.parametrize("name", NILPOTENT_RADICAL)
    def test_postconditions(self, name):
        """π∘κ = id, κ is a homomorphism and L = B ⊕ R."""
        algebra = load_algebra(name)
        radical = solvable_radical(algebra)
        levi = levi_subalgebra(algebra, radical)
        verify_levi(algebra, radical, levi)
        assert levi.B.dim + radical.R.dim == algebra.dim
        assert (levi.B & radical.R).is_zero()

    def test_bahturin_levi_is_c_block(self):
        """The C-block already is a subalgebra complementing M_2."""
        algebra = load_algebra("bahturin_m2")
        levi = levi_subalgebra(algebra, solvable_radical(algebra))
        assert levi.B == Subspace.coordinate([0, 1, 2], 7)

    def test_glue10_section_is_coordinate(self):
        """κ is the identity on the first six coordinates."""
        algebra = load_algebra("glue10")
        levi = levi_subalgebra(algebra, solvable_radical(algebra))
        kappa = rows_of(levi.kappa)
        assert levi.B == Subspace.coordinate(range(6), 10)
        for a in range(6):
            assert [row[a] for row in kappa] == [QQ(1) if i == a else QQ(0) for i in range(10)]

    def test_non_nilpotent_radical(self):
        """Levi sections are only lifted along a nilpotent radical."""
        algebra = load_algebra("solvable2")
        with pytest.raises(RadicalNotNilpotent):
            levi_subalgebra(algebra, solvable_radical(algebra))

    def test_exp_ad_is_automorphism(self):
        """exp(ad n) for n in the radical preserves brackets."""
        algebra = load_algebra("bahturin_m2")
        automorphism = exp_ad(algebra, [QQ(0)] * 3 + [QQ(1), QQ(2), QQ(-1), QQ(3)])
        ActionGenerator("exp", AUTOMORPHISM, automorphism).check(algebra)

    def test_exp_ad_of_zero(self):
        """exp(ad 0) = id."""
        algebra = load_algebra("heisenberg")
        assert exp_ad(algebra, [QQ(0)] * 3) == identity(3)

    @pytest.mark.parametrize("name,expected", [("bahturin_m2", 3), ("glue10", 6)])
    def test_conjugate_levi_keeps_exponent(self, name, expected):
        """Conjugating κ by exp(ad n) gives another Levi subalgebra with the same d."""
        algebra = load_algebra(name)
        radical = solvable_radical(algebra)
        levi = levi_subalgebra(algebra, radical)
        action = trivial_action(algebra)
        rng = random.Random(17)
        moved_any = False
        for _ in range(5):
            coeffs = [QQ(rng.randint(-3, 3)) for _ in range(radical.R.dim)]
            n = radical.R.combine(coeffs)
            perturbed = perturb_levi(algebra, levi, exp_ad(algebra, n))
            verify_levi(algebra, radical, perturbed)
            moved_any = moved_any or perturbed.B != levi.B
            assert nilpotent_radical_exponent(algebra, action, levi=perturbed).d == expected
        assert moved_any


class TestSemisimple:
    """Test decompositions into simple and H-simple components."""

    def test_sl2_is_simple(self):
        """sl2 has one component with a one-dimensional centroid."""
        dec = simple_decomposition(load_algebra("sl2"))
        assert [c.dim for c in dec.components] == [3]
        assert dec.centroid_dims == [1]

    def test_direct_sum(self):
        """sl2 ⊕ sl2 splits into its two summands."""
        dec = simple_decomposition(load_algebra("sl2_plus_sl2"))
        assert sorted(dec.components, key=lambda c: c.pivots) == [
            Subspace.coordinate([0, 1, 2], 6),
            Subspace.coordinate([3, 4, 5], 6),
        ]
        assert dec.centroid_dims == [1, 1]
        assert dec.to_dict()["components"][0]["dim"] == 3

    def test_non_split_component(self):
        """sl2 over QQ(√2) seen over QQ has a two-dimensional centroid."""
        algebra = load_algebra("nonsplit6")
        assert len(centroid(algebra)) == 2
        with pytest.raises(NonSplitComponent):
            simple_decomposition(algebra)

    def test_not_semisimple(self):
        """The Killing form of a solvable algebra is degenerate."""
        with pytest.raises(NotSemisimple):
            simple_decomposition(load_algebra("solvable2"))

    def test_grouping(self):
        """The swap glues the two summands; the trivial action does not."""
        algebra = load_algebra("sl2_plus_sl2")
        dec = simple_decomposition(algebra)
        assert h_simple_grouping(dec, trivial_action(algebra)) == [[0], [1]]
        swap = load_action("sl2sl2_swap", algebra)
        assert h_simple_grouping(dec, swap) == [[0, 1]]

    def test_minimal_polynomial(self):
        """A reflection has minimal polynomial x^2 - 1."""
        x = Symbol("x")
        reflection = matrix_from_rows([[QQ(0), QQ(1)], [QQ(1), QQ(0)]], 2)
        assert minimal_polynomial(reflection) == Poly(x ** 2 - 1, x, domain="QQ")
        assert minimal_polynomial(identity(3)) == Poly(x - 1, x, domain="QQ")
        assert rational_roots(minimal_polynomial(reflection)) == [QQ(-1), QQ(1)]

    def test_irrational_roots(self):
        """x^2 - 2 does not split over QQ."""
        x = Symbol("x")
        with pytest.raises(UnluckySeed):
            rational_roots(Poly(x ** 2 - 2, x, domain="QQ"))


class TestAssociative:
    """Test A0 = alg(ad S) and operator-algebra checks."""

    def test_trivial_s(self):
        """With S = 0 there is nothing to split."""
        algebra = load_algebra("bahturin_m2")
        data = wedderburn_split(algebra, Subspace.coordinate([0, 1, 2], 7), Subspace.zero(7))
        assert data.A0_basis == []
        assert data.to_dict()["idempotents"] == 0

    def test_one_idempotent(self):
        """For [a, b] = a and S = span{b}, A0 = span{ad b} with one idempotent."""
        algebra = load_algebra("solvable2")
        data = wedderburn_split(algebra, Subspace.zero(2), Subspace.coordinate([1], 2))
        assert len(data.A0_basis) == 1
        assert data.radical_basis == []
        assert len(data.idempotents) == 1
        e = data.idempotents[0]
        assert e * e == e

    def test_b_s_must_commute(self):
        """[span{e}, span{f}] = span{h} is not zero."""
        algebra = load_algebra("sl2")
        with pytest.raises(BSNotCommuting):
            wedderburn_split(algebra, Subspace.coordinate([0], 3), Subspace.coordinate([2], 3))

    def test_s_must_vanish_for_nilpotent_radical(self):
        """When R = N the complement S is zero."""
        algebra = load_algebra("heisenberg")
        with pytest.raises(DecompositionMismatch) as exc_info:
            wedderburn_split(algebra, Subspace.zero(3), Subspace.coordinate([2], 3))
        assert "R is nilpotent" in " ".join(exc_info.value.context["problems"])

    def test_complete_reducibility(self):
        """sl2 is completely reducible under ad; Heisenberg is not."""
        sl2 = load_algebra("sl2")
        assert complete_reducibility_check(sl2, [g.matrix for g in adjoint_derivations(sl2)])
        heisenberg = load_algebra("heisenberg")
        assert not complete_reducibility_check(
            heisenberg, [g.matrix for g in adjoint_derivations(heisenberg)]
        )

    def test_split_semisimple_part(self):
        """End(sl2) and QQ × QQ are split; QQ(√2) is not."""
        sl2 = load_algebra("sl2")
        assert semisimple_part_is_split(load_action("sl2_adjoint_derivations", sl2).basis, 3)
        pair = load_algebra("sl2_plus_sl2")
        assert semisimple_part_is_split(load_action("sl2sl2_swap", pair).basis, 6)
        root_two = matrix_from_rows([[QQ(0), QQ(2)], [QQ(1), QQ(0)]], 2)
        assert not semisimple_part_is_split(operator_closure([root_two], 2, unital=True), 2)

    def test_quaternions_pass_the_heuristic(self):
        """Only the center is inspected, so the rational quaternions pass though they are a division algebra."""
        left_i = matrix_from_rows([
            [QQ(0), QQ(-1), QQ(0), QQ(0)],
            [QQ(1), QQ(0), QQ(0), QQ(0)],
            [QQ(0), QQ(0), QQ(0), QQ(-1)],
            [QQ(0), QQ(0), QQ(1), QQ(0)],
        ], 4)
        left_j = matrix_from_rows([
            [QQ(0), QQ(0), QQ(-1), QQ(0)],
            [QQ(0), QQ(0), QQ(0), QQ(1)],
            [QQ(1), QQ(0), QQ(0), QQ(0)],
            [QQ(0), QQ(-1), QQ(0), QQ(0)],
        ], 4)
        basis = operator_closure([left_i, left_j], 4, unital=True)
        assert len(basis) == 4
        assert trace_form_radical(basis).is_zero()
        assert semisimple_part_is_split(basis, 4)


class TestSeedRetries:
    """Test the deterministic retry decorator."""

    def test_succeeds_on_later_seed(self):
        """Seeds are tried in order until one succeeds."""
        calls = []

        @with_seed_retries(max_attempts=4)
        def pick(value, seed=0):
            calls.append(seed)
            if seed < 2:
                raise UnluckySeed(f"seed {seed}")
            return value + seed

        assert pick(10) == 12
        assert calls == [0, 1, 2]

    def test_exhausted_maps_error(self):
        """After the last seed the mapped exception is raised."""

        @with_seed_retries(max_attempts=3, on_exhausted=lambda e: ValueError(str(e)))
        def never(seed=0):
            raise UnluckySeed(f"seed {seed}")

        with pytest.raises(ValueError, match="seed 2"):
            never()

    def test_other_errors_are_not_retried(self):
        """Only retryable errors move on to the next seed."""
        calls = []

        @with_seed_retries(max_attempts=5)
        def broken(seed=0):
            calls.append(seed)
            raise KeyError("fatal")

        with pytest.raises(KeyError):
            broken()
        assert calls == [0]
