"""Tests for checking certificates of the d' maximand."""

import pytest

from liepi.action import trivial_action
from liepi.exceptions import (
    ComplementInvalid,
    ConditionOneFails,
    ConditionTwoPrimeFails,
    DecompositionMismatch,
    NotIdeals,
    NotInvariantIdeal,
    NotNested,
)
from liepi.exponent import (
    Certificate,
    CertificatePair,
    annihilator,
    canonical_certificate,
    certify_dprime,
    condition_one,
    nilpotent_radical_exponent,
)
from liepi.formats import parse_certificate_file
from liepi.linalg import Subspace

from .example_algebras import fixture_path, load_action, load_algebra

C_BLOCK = Subspace.coordinate([0, 1, 2], 7)
D_BLOCK = Subspace.coordinate([3, 4, 5, 6], 7)


@pytest.fixture
def bahturin_m2():
    return load_algebra("bahturin_m2")


def load_certificate(name, algebra):
    return parse_certificate_file(fixture_path(name), algebra)


class TestAnnihilator:
    """Test Ann(I/J) = {x : [x, I] ⊆ J}."""

    def test_center(self):
        """Ann(L/0) is the center."""
        heisenberg = load_algebra("heisenberg")
        assert annihilator(heisenberg, Subspace.full(3), Subspace.zero(3)) == Subspace.coordinate([2], 3)
        sl2 = load_algebra("sl2")
        assert annihilator(sl2, Subspace.full(3), Subspace.zero(3)).is_zero()

    def test_faithful_module(self, bahturin_m2):
        """sl_2 acts faithfully on M_2, so Ann(N) = N and Ann(L/N) = N."""
        full = Subspace.full(7)
        zero = Subspace.zero(7)
        assert annihilator(bahturin_m2, D_BLOCK, zero) == D_BLOCK
        assert annihilator(bahturin_m2, full, D_BLOCK) == D_BLOCK

    def test_requires_ideals(self, bahturin_m2):
        """The C-block is not an ideal."""
        with pytest.raises(NotIdeals):
            annihilator(bahturin_m2, C_BLOCK, Subspace.zero(7))

    def test_requires_nesting(self, bahturin_m2):
        """J must lie inside I."""
        with pytest.raises(NotNested):
            annihilator(bahturin_m2, D_BLOCK, Subspace.full(7))


class TestConditionOne:
    """Test the envelope dimension on I/J."""

    def test_adjoint_quotient(self, bahturin_m2):
        """L/N is the adjoint sl_2-module: envelope M_3."""
        action = trivial_action(bahturin_m2)
        assert condition_one(bahturin_m2, action, Subspace.full(7), D_BLOCK) == 9

    def test_two_copies(self, bahturin_m2):
        """N is two copies of the natural module: envelope M_2 of dim 4."""
        action = trivial_action(bahturin_m2)
        assert condition_one(bahturin_m2, action, D_BLOCK, Subspace.zero(7)) == 4

    def test_zero_quotient(self, bahturin_m2):
        """I = J gives the zero module."""
        action = trivial_action(bahturin_m2)
        assert condition_one(bahturin_m2, action, D_BLOCK, D_BLOCK) == 0


class TestCertify:
    """Test the full certificate check."""

    def test_bahturin_certificate(self, bahturin_m2):
        """I = L, J = N, T = κ(sl_2) certifies 3."""
        cert = load_certificate("bahturin_m2_certificate", bahturin_m2)
        assert certify_dprime(bahturin_m2, trivial_action(bahturin_m2), cert) == 3

    def test_radical_pair_is_reducible(self, bahturin_m2):
        """N = V ⊕ V is not absolutely irreducible."""
        cert = load_certificate("bahturin_m2_radical_pair", bahturin_m2)
        with pytest.raises(ConditionOneFails) as exc_info:
            certify_dprime(bahturin_m2, trivial_action(bahturin_m2), cert)
        assert exc_info.value.context["envelope_dim"] == 4
        assert exc_info.value.context["quotient_dim"] == 4

    def test_complement_not_invariant_under_phi(self, bahturin_m2):
        """φ moves the C-block into C ⊕ N."""
        cert = load_certificate("bahturin_m2_certificate", bahturin_m2)
        with pytest.raises(ComplementInvalid):
            certify_dprime(bahturin_m2, load_action("phi", bahturin_m2), cert)

    @pytest.mark.parametrize("name,expected", [
        ("sl2", 3),
        ("bahturin_m2", 3),
        ("glue10", 6),
        ("sl2_plus_sl2", 3),
    ])
    def test_canonical_certificate_matches_exponent(self, name, expected):
        """The witness of the automatic formula certifies the same value."""
        algebra = load_algebra(name)
        action = trivial_action(algebra)
        result = nilpotent_radical_exponent(algebra, action)
        cert = canonical_certificate(algebra, action, result)
        assert len(cert.pairs) == result.r
        assert certify_dprime(algebra, action, cert) == expected == result.d

    @pytest.mark.parametrize("name,action_name", [
        ("sl2", None),
        ("sl2_plus_sl2", None),
        ("sl2_plus_sl2", "sl2sl2_swap"),
        ("heisenberg", None),
        ("bahturin_m2", None),
        ("glue10", None),
    ])
    def test_certified_value_never_exceeds_exponent(self, name, action_name):
        """Every accepted certificate is a lower bound for d."""
        algebra = load_algebra(name)
        action = load_action(action_name, algebra) if action_name else trivial_action(algebra)
        result = nilpotent_radical_exponent(algebra, action)
        full = canonical_certificate(algebra, action, result)
        assert certify_dprime(algebra, action, full) <= result.d
        for pair in full.pairs:
            single = Certificate(pairs=[pair], B=full.B, S=full.S)
            assert certify_dprime(algebra, action, single) <= result.d

    def test_missing_complement(self, bahturin_m2):
        """Every pair needs its T."""
        cert = Certificate(pairs=[CertificatePair(I=Subspace.full(7), J=D_BLOCK)], B=C_BLOCK)
        with pytest.raises(ComplementInvalid):
            certify_dprime(bahturin_m2, trivial_action(bahturin_m2), cert)

    def test_not_an_ideal(self, bahturin_m2):
        """I must be an ideal."""
        cert = Certificate(pairs=[CertificatePair(I=C_BLOCK, J=Subspace.zero(7), T=C_BLOCK)])
        with pytest.raises(NotInvariantIdeal):
            certify_dprime(bahturin_m2, trivial_action(bahturin_m2), cert)

    def test_not_invariant(self):
        """A single summand of sl2 ⊕ sl2 is not swap-invariant."""
        algebra = load_algebra("sl2_plus_sl2")
        first = Subspace.coordinate([0, 1, 2], 6)
        cert = Certificate(pairs=[CertificatePair(I=first, J=Subspace.zero(6), T=first)])
        with pytest.raises(NotInvariantIdeal) as exc_info:
            certify_dprime(algebra, load_action("sl2sl2_swap", algebra), cert)
        assert "invariant" in exc_info.value.message

    def test_not_nested(self, bahturin_m2):
        """J ⊆ I is required."""
        cert = Certificate(pairs=[CertificatePair(I=D_BLOCK, J=Subspace.full(7))])
        with pytest.raises(NotNested):
            certify_dprime(bahturin_m2, trivial_action(bahturin_m2), cert)

    def test_b_not_subalgebra(self):
        """A supplied B must be a subalgebra."""
        algebra = load_algebra("sl2")
        cert = Certificate(
            pairs=[CertificatePair(I=Subspace.full(3), J=Subspace.zero(3), T=Subspace.full(3))],
            B=Subspace.coordinate([0, 2], 3),
        )
        with pytest.raises(DecompositionMismatch):
            certify_dprime(algebra, trivial_action(algebra), cert)

    def test_commuting_summands_fail_condition_two(self):
        """Two commuting summands never give a nonzero bracket."""
        algebra = load_algebra("sl2_plus_sl2")
        first = Subspace.coordinate([0, 1, 2], 6)
        second = Subspace.coordinate([3, 4, 5], 6)
        zero = Subspace.zero(6)
        cert = Certificate(pairs=[
            CertificatePair(I=first, J=zero, T=first),
            CertificatePair(I=second, J=zero, T=second),
        ])
        with pytest.raises(ConditionTwoPrimeFails):
            certify_dprime(algebra, trivial_action(algebra), cert)

        single = Certificate(pairs=[CertificatePair(I=first, J=zero, T=first)])
        assert certify_dprime(algebra, trivial_action(algebra), single) == 3

    def test_to_dict(self, bahturin_m2):
        """Serialised certificates keep their optional parts."""
        cert = load_certificate("bahturin_m2_certificate", bahturin_m2)
        data = cert.to_dict()
        assert data["S"] == []
        assert len(data["B"]) == 3
        assert set(data["pairs"][0]) == {"I", "J", "T"}
