"""Builders for standard algebras and actions."""

import logging
from typing import List, Optional, Sequence

from sympy.polys.domains import QQ

from .action import AUTOMORPHISM, DERIVATION, ActionGenerator, operator_generator
from .exceptions import MalformedInput, NotASubalgebra
from .lie import LieAlgebra
from .linalg import Rational, Subspace, ZERO, matrix_from_rows, rows_of, solve

logger = logging.getLogger(__name__)

MatrixRows = List[List[Rational]]


def _unit(size: int, i: int, j: int) -> MatrixRows:
    rows = [[ZERO] * size for _ in range(size)]
    rows[i][j] = QQ(1)
    return rows


def _flat(rows: MatrixRows) -> List[Rational]:
    return [v for row in rows for v in row]


def from_matrix_basis(
    name: str, matrices: Sequence[Sequence[Sequence]], labels: Optional[Sequence[str]] = None
) -> LieAlgebra:
    """
    Structure constants of the Lie algebra spanned by square matrices under [X, Y] = XY - YX.

    The matrices must be linearly independent and their span closed under
    the commutator.
    """
    if not matrices:
        return LieAlgebra(0, {}, name=name, labels=labels)
    size = len(matrices[0])
    mats = [matrix_from_rows([[QQ.convert(v) for v in row] for row in m], size) for m in matrices]
    flats = [_flat(rows_of(m)) for m in mats]
    dim = len(mats)
    columns = [[f[r] for f in flats] for r in range(size * size)]

    if Subspace.span(flats, size * size).dim < dim:
        raise MalformedInput(f"Matrices spanning '{name}' are linearly dependent", context={"dim": dim})

    table = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            commutator = mats[a] * mats[b] - mats[b] * mats[a]
            coords = solve(columns, _flat(rows_of(commutator)), dim)
            if coords is None:
                raise NotASubalgebra(f"Span of '{name}' is not closed under the commutator", pair=[a, b])
            nonzero = {k: c for k, c in enumerate(coords) if c}
            if nonzero:
                table[(a, b)] = nonzero
    return LieAlgebra(dim, table, name=name, labels=labels)


def sl_basis(m: int) -> List[MatrixRows]:
    """E_ij (i != j) in row-major order, then H_i = E_ii - E_(i+1)(i+1)."""
    basis = [_unit(m, i, j) for i in range(m) for j in range(m) if i != j]
    for i in range(m - 1):
        h = _unit(m, i, i)
        h[i + 1][i + 1] = QQ(-1)
        basis.append(h)
    return basis


def sl2() -> LieAlgebra:
    """sl_2 in the basis e, h, f: [e, h] = -2e, [e, f] = h, [h, f] = -2f."""
    e = [[0, 1], [0, 0]]
    h = [[1, 0], [0, -1]]
    f = [[0, 0], [1, 0]]
    return from_matrix_basis("sl2", [e, h, f], labels=["e", "h", "f"])


def heisenberg() -> LieAlgebra:
    return LieAlgebra(3, {(0, 1): {2: 1}}, name="heisenberg", labels=["x", "y", "z"])


def solvable2() -> LieAlgebra:
    return LieAlgebra(2, {(0, 1): {0: 1}}, name="solvable2", labels=["a", "b"])


def direct_sum(first: LieAlgebra, second: LieAlgebra, name: Optional[str] = None) -> LieAlgebra:
    shift = first.dim
    table = dict(first.canonical_table())
    for (i, j), value in second.canonical_table().items():
        table[(i + shift, j + shift)] = {k + shift: c for k, c in value.items()}
    labels = [f"{label}1" for label in first.labels] + [f"{label}2" for label in second.labels]
    return LieAlgebra(first.dim + second.dim, table, name=name or f"{first.name}+{second.name}",
                      labels=labels)


def nonsplit_sl2() -> LieAlgebra:
    """
    sl_2 over QQ(√2) as a 6-dimensional algebra over QQ.

    Basis e, h, f, re, rh, rf where r = √2; simple over QQ but not
    absolutely simple.
    """
    base = sl2()
    table = {}
    for a in range(6):
        for b in range(a + 1, 6):
            sa, xa = divmod(a, 3)
            sb, xb = divmod(b, 3)
            product = base.basis_product(xa, xb)
            if not product:
                continue
            power = sa + sb
            scale, offset = (QQ(2), 0) if power == 2 else (QQ(1), 3 * power)
            table[(a, b)] = {k + offset: scale * c for k, c in product}
    return LieAlgebra(6, table, name="nonsplit6", labels=["e", "h", "f", "re", "rh", "rf"])


def bahturin(m: int = 2) -> LieAlgebra:
    """
    {[[C, D], [0, 0]] : C in sl_m, D in M_m} inside sl_2m.

    Basis: the sl_m basis in the C-block, then the unit matrices E_ij in
    the D-block (row-major). Its radical is the D-block.
    """
    if m < 2:
        raise MalformedInput(f"Bahturin algebra needs m >= 2, got {m}")
    size = 2 * m
    matrices: List[MatrixRows] = []
    labels = []
    for c in sl_basis(m):
        block = [[ZERO] * size for _ in range(size)]
        for i in range(m):
            for j in range(m):
                block[i][j] = c[i][j]
        matrices.append(block)
    labels += [f"C{k}" for k in range(m * m - 1)]
    for i in range(m):
        for j in range(m):
            matrices.append(_unit(size, i, m + j))
            labels.append(f"D{i}{j}")
    return from_matrix_basis(f"bahturin_m{m}", matrices, labels=labels)


def bahturin_automorphism(m: int = 2) -> ActionGenerator:
    """φ(C, D) = (C, C + D)."""
    c_dim = m * m - 1
    dim = c_dim + m * m
    rows = [[ZERO] * dim for _ in range(dim)]
    for a in range(dim):
        rows[a][a] = QQ(1)
    for a, c in enumerate(sl_basis(m)):
        for i in range(m):
            for j in range(m):
                if c[i][j]:
                    rows[c_dim + i * m + j][a] = c[i][j]
    return operator_generator("phi", AUTOMORPHISM, rows, dim)


def glue10() -> LieAlgebra:
    """
    (sl_2 ⊕ sl_2) ⋉ M_2 with [(C, E), D] = CD - DE and [D, D'] = 0.

    Realised as block matrices [[C, D], [0, E]]; basis: sl_2 in C, sl_2 in
    E, then the unit matrices of the D-block.
    """
    blocks: List[MatrixRows] = []
    for offset in (0, 2):
        for s in sl_basis(2):
            block = [[ZERO] * 4 for _ in range(4)]
            for i in range(2):
                for j in range(2):
                    block[offset + i][offset + j] = s[i][j]
            blocks.append(block)
    for i in range(2):
        for j in range(2):
            blocks.append(_unit(4, i, 2 + j))
    labels = ["C01", "C10", "CH", "E01", "E10", "EH", "D00", "D01", "D10", "D11"]
    return from_matrix_basis("glue10", blocks, labels=labels)


def adjoint_derivations(algebra: LieAlgebra) -> List[ActionGenerator]:
    """ad e_i for every basis vector: L acting on itself by derivations."""
    return [
        ActionGenerator(f"ad_{algebra.labels[i]}", DERIVATION, algebra.ad_basis(i))
        for i in range(algebra.dim)
    ]


def swap_automorphism(algebra: LieAlgebra) -> ActionGenerator:
    """Exchange of the two summands of L1 ⊕ L1."""
    if algebra.dim % 2:
        raise MalformedInput(f"Swap needs an even dimension, '{algebra.name}' has {algebra.dim}")
    half = algebra.dim // 2
    rows = [[ZERO] * algebra.dim for _ in range(algebra.dim)]
    for i in range(half):
        rows[i + half][i] = QQ(1)
        rows[i][i + half] = QQ(1)
    return operator_generator("swap", AUTOMORPHISM, rows, algebra.dim)
