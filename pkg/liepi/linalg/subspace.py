"""Canonical subspaces of coordinate space and their lattice operations."""

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from ..exceptions import DimensionMismatch
from .matrix import Matrix, Rows, kernel_vectors, mat_vec, matrix_from_rows, rows_of, rref_rows
from .rational import Rational, ZERO, format_vector


@dataclass(frozen=True)
class Subspace:
    """
    A subspace of QQ^ambient_dim stored by its RREF basis.

    Two subspaces are equal iff their RREF bases are identical, so instances
    hash by canonical form and can be collected in sets.
    """

    ambient_dim: int
    basis: Tuple[Tuple[Rational, ...], ...]
    pivots: Tuple[int, ...] = field(compare=False, default=())

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Rational]], ambient_dim: int) -> "Subspace":
        rows = [list(v) for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise DimensionMismatch(
                    "Vector length differs from ambient dimension",
                    expected=ambient_dim, actual=len(row),
                )
        rows = [row for row in rows if any(row)]
        reduced, pivots = rref_rows(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in reduced), pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        rows = tuple(
            tuple(QQ(1) if i == j else ZERO for j in range(ambient_dim))
            for i in range(ambient_dim)
        )
        return cls(ambient_dim, rows, tuple(range(ambient_dim)))

    @classmethod
    def coordinate(cls, indices: Iterable[int], ambient_dim: int) -> "Subspace":
        """Span of the standard basis vectors with the given indices."""
        vectors = []
        for i in sorted(set(indices)):
            v = [ZERO] * ambient_dim
            v[i] = QQ(1)
            vectors.append(v)
        return cls.span(vectors, ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def vectors(self) -> Rows:
        return [list(row) for row in self.basis]

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                "Subspaces live in different ambient spaces",
                expected=self.ambient_dim, actual=other.ambient_dim,
            )

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        return Subspace.span(self.vectors() + other.vectors(), self.ambient_dim)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_intersect(self, other)

    def reduce(self, v: Sequence[Rational]) -> List[Rational]:
        """Subtract basis rows so that v vanishes on every pivot column."""
        out = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = out[p]
            if c:
                out = [a - c * b for a, b in zip(out, row)]
        return out

    def contains_vector(self, v: Sequence[Rational]) -> bool:
        return not any(self.reduce(v))

    def contains(self, other: "Subspace") -> bool:
        """True iff other is a subspace of self."""
        self._check(other)
        return all(self.contains_vector(v) for v in other.basis)

    def coordinates(self, v: Sequence[Rational]) -> List[Rational]:
        """Coefficients of v in the RREF basis (v must lie in the subspace)."""
        return [v[p] for p in self.pivots]

    def combine(self, coeffs: Sequence[Rational]) -> List[Rational]:
        out = [ZERO] * self.ambient_dim
        for c, row in zip(coeffs, self.basis):
            if c:
                out = [a + c * b for a, b in zip(out, row)]
        return out

    def complement_indices(self) -> List[int]:
        """Coordinates not used as pivots; their unit vectors span a complement."""
        pivots = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in pivots]

    def image(self, op_rows: Sequence[Sequence[Rational]]) -> "Subspace":
        """Image of the subspace under a linear operator given by rows."""
        return Subspace.span((mat_vec(op_rows, v) for v in self.basis), len(op_rows))

    def to_json(self) -> List[List[str]]:
        return [format_vector(row) for row in self.basis]

    def __repr__(self) -> str:
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"


def kernel(m: Matrix) -> Subspace:
    """
    Null space {v : m v = 0} in canonical form.

    Examples:
        [[1,1]] -> span{(1,-1)}
        identity -> 0
    """
    nrows, ncols = m.shape
    return Subspace.span(kernel_vectors(rows_of(m), ncols), ncols)


def kernel_of_rows(rows: Sequence[Sequence[Rational]], ncols: int) -> Subspace:
    return Subspace.span(kernel_vectors([list(r) for r in rows], ncols), ncols)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    return u + v


def orthogonal(u: Subspace) -> Subspace:
    """Annihilator of u under the standard pairing."""
    return kernel_of_rows(u.vectors(), u.ambient_dim)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """u ∩ v computed as the annihilator of u^perp + v^perp."""
    u._check(v)
    if u.is_zero() or v.is_zero():
        return Subspace.zero(u.ambient_dim)
    if u.is_full():
        return v
    if v.is_full():
        return u
    return orthogonal(orthogonal(u) + orthogonal(v))


class Subquotient:
    """
    The space outer/inner for subspaces inner ⊆ outer.

    A complement of inner in outer is fixed by reducing outer's basis modulo
    inner, so projection and lift are mutually inverse linear maps.
    """

    def __init__(self, outer: Subspace, inner: Optional[Subspace] = None):
        inner = inner if inner is not None else Subspace.zero(outer.ambient_dim)
        if not outer.contains(inner):
            raise DimensionMismatch("Inner subspace is not contained in the outer one")
        self.outer = outer
        self.inner = inner
        self.complement = Subspace.span(
            (inner.reduce(v) for v in outer.basis), outer.ambient_dim
        )

    @property
    def dim(self) -> int:
        return self.complement.dim

    @property
    def ambient_dim(self) -> int:
        return self.outer.ambient_dim

    def project(self, v: Sequence[Rational]) -> List[Rational]:
        """Coordinates of the class of v (v must lie in outer)."""
        return self.complement.coordinates(self.inner.reduce(v))

    def lift(self, coords: Sequence[Rational]) -> List[Rational]:
        return self.complement.combine(coords)

    def projection_rows(self) -> Rows:
        n = self.ambient_dim
        columns = []
        for j in range(n):
            e = [ZERO] * n
            e[j] = QQ(1)
            columns.append(self.complement.coordinates(self.inner.reduce(e)))
        return [[columns[j][i] for j in range(n)] for i in range(self.dim)]

    def lift_rows(self) -> Rows:
        basis = self.complement.basis
        return [[basis[c][i] for c in range(self.dim)] for i in range(self.ambient_dim)]

    def induced_rows(self, op_rows: Sequence[Sequence[Rational]]) -> Rows:
        """Matrix of an operator preserving inner and outer on outer/inner."""
        columns = [self.project(mat_vec(op_rows, self.lift(e))) for e in unit_vectors(self.dim)]
        return [[columns[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def induced(self, op: Matrix) -> Matrix:
        return matrix_from_rows(self.induced_rows(rows_of(op)), self.dim)

    def image_of(self, u: Subspace) -> Subspace:
        """Image in outer/inner of a subspace of outer."""
        return Subspace.span((self.project(v) for v in u.basis), self.dim)

    def preimage_of(self, u: Subspace) -> Subspace:
        """Full preimage in outer of a subspace of outer/inner."""
        return Subspace.span((self.lift(v) for v in u.basis), self.ambient_dim) + self.inner


def unit_vectors(n: int) -> List[List[Rational]]:
    out = []
    for i in range(n):
        e = [ZERO] * n
        e[i] = QQ(1)
        out.append(e)
    return out


