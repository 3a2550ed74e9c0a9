"""Lie algebras given by structure constants."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from ..exceptions import AlgebraValidationError, DimensionMismatch, IndexOutOfRange, NotASubalgebra
from ..linalg import Matrix, Rational, Subspace, ZERO, matrix_from_rows, rows_of, mat_vec

logger = logging.getLogger(__name__)

Element = List[Rational]
StructureTable = Dict[Tuple[int, int], Dict[int, Rational]]


@dataclass
class ValidationReport:
    """Outcome of checking antisymmetry and the Jacobi identity."""

    algebra: str
    dim: int
    antisymmetry_violations: List[Tuple[int, int]] = field(default_factory=list)
    jacobi_violations: List[Tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.antisymmetry_violations and not self.jacobi_violations

    def describe(self) -> List[str]:
        lines = [f"antisymmetry violated at ({i}, {j})" for i, j in self.antisymmetry_violations]
        lines += [f"Jacobi identity violated on ({i}, {j}, {k})" for i, j, k in self.jacobi_violations]
        return lines

    def raise_if_invalid(self) -> None:
        if self.ok:
            return
        raise AlgebraValidationError(
            f"Algebra '{self.algebra}' is not a Lie algebra: {self.describe()[0]}",
            violations=self.describe(),
        )

    def to_dict(self) -> Dict:
        return {
            "algebra": self.algebra,
            "dim": self.dim,
            "valid": self.ok,
            "antisymmetry_violations": [list(p) for p in self.antisymmetry_violations],
            "jacobi_violations": [list(t) for t in self.jacobi_violations],
        }


class LieAlgebra:
    """
    A finite-dimensional algebra over QQ given by c^k_{ij}.

    The table normally lists pairs i < j only and [e_j, e_i] is derived by
    sign. Pairs with i >= j are kept as supplied so that validation can
    report them; a listed pair always wins over its derived mirror.
    """

    def __init__(
        self,
        dim: int,
        table: Optional[StructureTable] = None,
        name: str = "L",
        labels: Optional[Sequence[str]] = None,
    ):
        self.dim = dim
        self.name = name
        self.labels = list(labels) if labels else [f"e{i}" for i in range(dim)]
        if len(self.labels) != dim:
            raise DimensionMismatch("Basis label count differs from dim",
                                    expected=dim, actual=len(self.labels))

        self.table: StructureTable = {}
        for (i, j), value in (table or {}).items():
            for index in (i, j, *value.keys()):
                if not 0 <= index < dim:
                    raise IndexOutOfRange(
                        f"Basis index {index} out of range in bracket ({i}, {j})",
                        index=index, dim=dim,
                    )
            nonzero = {k: QQ.convert(c) for k, c in value.items() if c}
            if nonzero:
                self.table[(i, j)] = nonzero

        self._products: Dict[Tuple[int, int], List[Tuple[int, Rational]]] = {}
        for (i, j), value in self.table.items():
            self._products[(i, j)] = sorted(value.items())
            if (j, i) not in self.table and i != j:
                self._products[(j, i)] = [(k, -c) for k, c in sorted(value.items())]
        self._ad_cache: Dict[int, Matrix] = {}

    def __repr__(self) -> str:
        return f"LieAlgebra(name={self.name!r}, dim={self.dim})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.name == other.name
            and self.labels == other.labels
            and self.canonical_table() == other.canonical_table()
        )

    def canonical_table(self) -> StructureTable:
        """Nonzero structure constants for i < j."""
        out: StructureTable = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                value = dict(self._products.get((i, j), []))
                if value:
                    out[(i, j)] = value
        return out

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------

    def zero(self) -> Element:
        return [ZERO] * self.dim

    def basis_vector(self, i: int) -> Element:
        v = self.zero()
        v[i] = QQ(1)
        return v

    def basis_product(self, i: int, j: int) -> List[Tuple[int, Rational]]:
        """[e_i, e_j] as sparse (k, c^k_ij) pairs."""
        return self._products.get((i, j), [])

    def bracket(self, x: Sequence[Rational], y: Sequence[Rational]) -> Element:
        """Bilinear extension of the structure constants."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("Element length differs from algebra dimension",
                                    expected=self.dim, actual=len(x) if len(x) != self.dim else len(y))
        out = self.zero()
        support_y = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in support_y:
                for k, c in self._products.get((i, j), ()):
                    out[k] += a * b * c
        return out

    def left_normed(self, elements: Sequence[Sequence[Rational]]) -> Element:
        """[x1, x2, ..., xn] = [...[[x1, x2], x3], ..., xn]."""
        if not elements:
            raise DimensionMismatch("Left-normed bracket needs at least one element")
        result = list(elements[0])
        for x in elements[1:]:
            result = self.bracket(result, x)
        return result

    def ad_basis(self, i: int) -> Matrix:
        """Matrix of ad e_i acting on coordinate columns."""
        if i not in self._ad_cache:
            rows = [[ZERO] * self.dim for _ in range(self.dim)]
            for j in range(self.dim):
                for k, c in self._products.get((i, j), ()):
                    rows[k][j] = c
            self._ad_cache[i] = matrix_from_rows(rows, self.dim)
        return self._ad_cache[i]

    def adjoint_matrix(self, x: Sequence[Rational]) -> Matrix:
        rows = [[ZERO] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            column = self.bracket(x, self.basis_vector(j))
            for k in range(self.dim):
                rows[k][j] = column[k]
        return matrix_from_rows(rows, self.dim)

    def ad_basis_rows(self, i: int) -> List[List[Rational]]:
        return rows_of(self.ad_basis(i))

    # ------------------------------------------------------------------
    # Transport
    # ------------------------------------------------------------------

    def change_basis(self, p: Matrix, name: Optional[str] = None) -> "LieAlgebra":
        """
        Structure constants in the basis given by the columns of p.

        Coordinates transform as x_new = p^-1 x_old.
        """
        if p.shape != (self.dim, self.dim):
            raise DimensionMismatch("Basis change matrix has the wrong shape",
                                    expected=self.dim, actual=p.shape[0])
        p_rows = rows_of(p)
        p_inv_rows = rows_of(p.inv())
        columns = [[p_rows[i][a] for i in range(self.dim)] for a in range(self.dim)]
        table: StructureTable = {}
        for a in range(self.dim):
            for b in range(a + 1, self.dim):
                value = mat_vec(p_inv_rows, self.bracket(columns[a], columns[b]))
                nonzero = {k: c for k, c in enumerate(value) if c}
                if nonzero:
                    table[(a, b)] = nonzero
        return LieAlgebra(self.dim, table, name=name or self.name)

    def subalgebra(self, u: Subspace, name: Optional[str] = None) -> "LieAlgebra":
        """Structure constants of a subalgebra in its RREF basis."""
        basis = u.vectors()
        table: StructureTable = {}
        for a in range(len(basis)):
            for b in range(a + 1, len(basis)):
                value = self.bracket(basis[a], basis[b])
                if not u.contains_vector(value):
                    raise NotASubalgebra(
                        "Subspace is not closed under the bracket",
                        pair=[a, b],
                    )
                nonzero = {k: c for k, c in enumerate(u.coordinates(value)) if c}
                if nonzero:
                    table[(a, b)] = nonzero
        return LieAlgebra(len(basis), table, name=name or f"{self.name}_sub")


def validate_algebra(algebra: LieAlgebra) -> ValidationReport:
    """
    Check antisymmetry on every listed pair and Jacobi on basis triples i < j < k.

    With antisymmetry in place, triples with repeated or permuted indices
    add nothing.
    """
    report = ValidationReport(algebra=algebra.name, dim=algebra.dim)
    for (i, j), value in sorted(algebra.table.items()):
        if i == j:
            report.antisymmetry_violations.append((i, j))
        elif i > j and (j, i) in algebra.table:
            mirror = algebra.table[(j, i)]
            keys = set(value) | set(mirror)
            if any(value.get(k, ZERO) + mirror.get(k, ZERO) for k in keys):
                report.antisymmetry_violations.append((j, i))

    n = algebra.dim
    basis = [algebra.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            ij = algebra.bracket(basis[i], basis[j])
            for k in range(j + 1, n):
                jk = algebra.bracket(basis[j], basis[k])
                ki = algebra.bracket(basis[k], basis[i])
                total = [
                    a + b + c
                    for a, b, c in zip(
                        algebra.bracket(ij, basis[k]),
                        algebra.bracket(jk, basis[i]),
                        algebra.bracket(ki, basis[j]),
                    )
                ]
                if any(total):
                    report.jacobi_violations.append((i, j, k))

    if not report.ok:
        logger.debug(f"Validation of {algebra.name} found {len(report.describe())} violations")
    return report


def bracket(algebra: LieAlgebra, x: Sequence[Rational], y: Sequence[Rational]) -> Element:
    return algebra.bracket(x, y)
