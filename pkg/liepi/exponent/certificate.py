"""Certificates for d'(L, H): ideal pairs I_k ⊇ J_k with complements T_k."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..action import ActionAlgebra, is_invariant
from ..exceptions import (
    ComplementInvalid,
    ConditionOneFails,
    ConditionTwoPrimeFails,
    DecompositionMismatch,
    NotIdeals,
    NotInvariantIdeal,
    NotNested,
)
from ..lie import LieAlgebra, bracket_subspaces, is_ideal, is_subalgebra
from ..linalg import (
    ZERO,
    Subquotient,
    Subspace,
    kernel_of_rows,
    matrix_from_rows,
    rows_of,
)
from ..structure import (
    A0Data,
    levi_subalgebra,
    solvable_radical,
    unital_envelope_dim,
    wedderburn_split,
)
from .reach import reach_set, search_chain
from .automatic import ExponentResult, h_components

logger = logging.getLogger(__name__)


@dataclass
class CertificatePair:
    I: Subspace
    J: Subspace
    T: Optional[Subspace] = None

    def to_dict(self) -> Dict:
        data = {"I": self.I.to_json(), "J": self.J.to_json()}
        if self.T is not None:
            data["T"] = self.T.to_json()
        return data


@dataclass
class Certificate:
    """
    User-supplied data for one admissible value of the d' maximand.

    Nothing is checked on construction; certify_dprime does the checking.
    """

    pairs: List[CertificatePair] = field(default_factory=list)
    S: Optional[Subspace] = None
    B: Optional[Subspace] = None

    def to_dict(self) -> Dict:
        data: Dict = {"pairs": [p.to_dict() for p in self.pairs]}
        if self.S is not None:
            data["S"] = self.S.to_json()
        if self.B is not None:
            data["B"] = self.B.to_json()
        return data


def annihilator(algebra: LieAlgebra, I: Subspace, J: Subspace) -> Subspace:
    """Ann(I/J) = {x in L : [x, I] ⊆ J}."""
    if not (is_ideal(algebra, I) and is_ideal(algebra, J)):
        raise NotIdeals("Annihilator needs two ideals", I_dim=I.dim, J_dim=J.dim)
    if not I.contains(J):
        raise NotNested("Annihilator needs J ⊆ I", I_dim=I.dim, J_dim=J.dim)

    n = algebra.dim
    projection = Subquotient(Subspace.full(n), J).projection_rows()
    equations = []
    for v in I.basis:
        ad_v = rows_of(algebra.adjoint_matrix(v))
        # x -> [v, x] modulo J; the sign does not change the kernel
        for p in projection:
            equations.append([sum((p[k] * ad_v[k][c] for k in range(n)), ZERO) for c in range(n)])
    return kernel_of_rows(equations, n)


def _check_pair(algebra: LieAlgebra, action: ActionAlgebra, k: int, pair: CertificatePair) -> None:
    for label, u in (("I", pair.I), ("J", pair.J)):
        if not is_ideal(algebra, u):
            raise NotInvariantIdeal(f"{label}_{k} is not an ideal of {algebra.name}", pair=k)
        if not is_invariant(action, u):
            raise NotInvariantIdeal(f"{label}_{k} is not invariant under the action", pair=k)
    if not pair.I.contains(pair.J):
        raise NotNested(f"J_{k} is not contained in I_{k}", pair=k)


def condition_one(
    algebra: LieAlgebra, action: ActionAlgebra, I: Subspace, J: Subspace
) -> int:
    """
    Dimension of the unital algebra generated by ad L and the action on I/J.

    I/J is absolutely irreducible iff this equals dim(I/J)^2.
    """
    quotient = Subquotient(I, J)
    m = quotient.dim
    if m == 0:
        return 0
    operators = [
        matrix_from_rows(quotient.induced_rows(algebra.ad_basis_rows(i)), m)
        for i in range(algebra.dim)
    ]
    operators += [quotient.induced(g.matrix) for g in action.generators]
    return unital_envelope_dim(operators, m)


def _check_complement(
    algebra: LieAlgebra,
    action: ActionAlgebra,
    k: int,
    pair: CertificatePair,
    B: Subspace,
    a0: A0Data,
) -> Subspace:
    T = pair.T
    if T is None:
        raise ComplementInvalid(f"Complement T_{k} is required", pair=k)
    if not pair.I.contains(T) or not (T & pair.J).is_zero() or T.dim + pair.J.dim != pair.I.dim:
        raise ComplementInvalid(f"I_{k} = J_{k} ⊕ T_{k} fails", pair=k)
    if not is_invariant(action, T):
        raise ComplementInvalid(f"T_{k} is not invariant under the action", pair=k)
    if not T.contains(bracket_subspaces(algebra, B, T)):
        raise ComplementInvalid(f"T_{k} is not an ad B-submodule", pair=k)
    for op in a0.tildeA0_basis:
        if not T.contains(T.image(rows_of(op))):
            raise ComplementInvalid(f"T_{k} is not invariant under the idempotent part of A0", pair=k)
    return T


def certify_dprime(algebra: LieAlgebra, action: ActionAlgebra, cert: Certificate) -> int:
    """
    Check a certificate and return dim L - dim ⋂_k Ann(I_k/J_k).

    Checks run in a fixed order: invariant ideals, the B ⊕ S ⊕ N split and
    the idempotent part of A0, absolute irreducibility of each I_k/J_k, the
    complements T_k, and finally a nonzero bracket

        [[T_1, L, ..., L], [T_2, L, ..., L], ..., [T_r, L, ..., L]]

    for some numbers of L's.
    """
    n = algebra.dim
    for k, pair in enumerate(cert.pairs, start=1):
        _check_pair(algebra, action, k, pair)

    radical = solvable_radical(algebra)
    if cert.B is not None:
        B = cert.B
        if not is_subalgebra(algebra, B):
            raise DecompositionMismatch("Certificate B is not a subalgebra", B_dim=B.dim)
    else:
        B = levi_subalgebra(algebra, radical).B
    S = cert.S if cert.S is not None else Subspace.zero(n)
    a0 = wedderburn_split(algebra, B, S, radical)

    for k, pair in enumerate(cert.pairs, start=1):
        m = Subquotient(pair.I, pair.J).dim
        envelope = condition_one(algebra, action, pair.I, pair.J)
        if m == 0 or envelope != m * m:
            raise ConditionOneFails(
                f"I_{k}/J_{k} is not an absolutely irreducible (H, L)-module",
                pair=k, quotient_dim=m, envelope_dim=envelope,
            )

    complements = [
        _check_complement(algebra, action, k, pair, B, a0)
        for k, pair in enumerate(cert.pairs, start=1)
    ]

    if complements and search_chain(algebra, [reach_set(algebra, T) for T in complements]) is None:
        raise ConditionTwoPrimeFails(
            "No numbers q_k give a nonzero bracket of the chains through T_k",
            pairs=len(complements),
        )

    common = Subspace.full(n)
    for pair in cert.pairs:
        common = common & annihilator(algebra, pair.I, pair.J)
    value = n - common.dim
    logger.debug(f"Certificate with {len(cert.pairs)} pairs on {algebra.name} certifies {value}")
    return value


def canonical_certificate(
    algebra: LieAlgebra, action: ActionAlgebra, result: ExponentResult
) -> Certificate:
    """I_k = κ(B_ik) ⊕ N, J_k = N and T_k = κ(B_ik) for the witness of an exponent result."""
    data = h_components(algebra, action)
    N = data.radical.R
    pairs = [
        CertificatePair(I=data.lifted[i] + N, J=N, T=data.lifted[i])
        for i in result.witness_components
    ]
    return Certificate(pairs=pairs, S=Subspace.zero(algebra.dim), B=data.levi.B)
