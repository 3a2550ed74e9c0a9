"""Exact matrices over QQ and GF(p) built on sympy's DomainMatrix."""

import hashlib
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import nextprime
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from ..exceptions import DimensionMismatch
from .rational import Rational, ZERO

logger = logging.getLogger(__name__)

Matrix = DomainMatrix
Rows = List[List[Rational]]
SparseRow = Dict[int, Rational]

MODULAR_PRIME_FLOOR = 2 ** 30


def matrix_from_rows(rows: Sequence[Sequence[Rational]], ncols: int, domain=QQ) -> Matrix:
    """Build a dense DomainMatrix from rows of domain elements."""
    for row in rows:
        if len(row) != ncols:
            raise DimensionMismatch(
                "Matrix rows have inconsistent lengths", expected=ncols, actual=len(row)
            )
    return DomainMatrix([list(row) for row in rows], (len(rows), ncols), domain)


def sparse_matrix(rows: Sequence[SparseRow], ncols: int, domain=QQ) -> Matrix:
    """Build a sparse DomainMatrix from {column: value} rows, dropping zeros."""
    dod = {}
    for i, row in enumerate(rows):
        nonzero = {j: v for j, v in row.items() if v}
        if nonzero:
            dod[i] = nonzero
    return DomainMatrix(dod, (len(rows), ncols), domain)


def identity(n: int) -> Matrix:
    return DomainMatrix.eye(n, QQ).to_dense()


def zero_matrix(nrows: int, ncols: int) -> Matrix:
    return DomainMatrix.zeros((nrows, ncols), QQ).to_dense()


def rows_of(m: Matrix) -> Rows:
    """Dense row lists of a matrix (empty shapes included)."""
    nrows, ncols = m.shape
    if nrows == 0:
        return []
    if ncols == 0:
        return [[] for _ in range(nrows)]
    return m.to_dense().to_list()


def sparse_rows_of(m: Matrix) -> List[SparseRow]:
    nrows, _ = m.shape
    rep = m.to_sparse().rep
    return [dict(rep.get(i, {})) for i in range(nrows)]


def rref(m: Matrix) -> Matrix:
    """
    Reduced row echelon form of m, same shape, zero rows at the bottom.

    Examples:
        [[2,4],[1,2]] -> [[1,2],[0,0]]
        [[0,1],[1,0]] -> [[1,0],[0,1]]
    """
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return m
    reduced, _ = m.rref()
    return reduced


def rref_rows(
    rows: Sequence[Sequence[Rational]], ncols: int, domain=QQ
) -> Tuple[Rows, Tuple[int, ...]]:
    """Nonzero RREF rows and pivot columns of the row space of `rows`."""
    if not rows or ncols == 0:
        return [], ()
    reduced, pivots = matrix_from_rows(rows, ncols, domain).rref()
    return rows_of(reduced)[: len(pivots)], tuple(pivots)


def rank(m: Matrix) -> int:
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return 0
    return m.rank()


def kernel_vectors(rows: Sequence[Sequence[Rational]], ncols: int) -> Rows:
    """
    Basis of {v : M v = 0} read off the RREF of M.

    One vector per free column f: v[f] = 1 and v[p] = -R[i][f] for the i-th pivot p.
    """
    reduced, pivots = rref_rows(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = QQ(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][free]
        basis.append(v)
    return basis


def solve(
    rows: Sequence[Sequence[Rational]], rhs: Sequence[Rational], ncols: int
) -> Optional[List[Rational]]:
    """
    One solution x of M x = rhs, free variables set to zero.

    Returns None when the system is inconsistent.
    """
    if len(rows) != len(rhs):
        raise DimensionMismatch("Right-hand side length differs from row count",
                                expected=len(rows), actual=len(rhs))
    if not rows:
        return [ZERO] * ncols
    augmented = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref_rows(augmented, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for i, p in enumerate(pivots):
        x[p] = reduced[i][ncols]
    return x


def mat_vec(m_rows: Sequence[Sequence[Rational]], v: Sequence[Rational]) -> List[Rational]:
    """Product of a dense row matrix with a coordinate column."""
    out = []
    for row in m_rows:
        acc = ZERO
        for a, b in zip(row, v):
            if a and b:
                acc += a * b
        out.append(acc)
    return out


def transpose_rows(m_rows: Sequence[Sequence[Rational]], ncols: int) -> Rows:
    return [[row[j] for row in m_rows] for j in range(ncols)]


def flatten(m: Matrix) -> List[Rational]:
    """Row-major entries of a matrix, used to compare operators as vectors."""
    return [x for row in rows_of(m) for x in row]


def unflatten(entries: Sequence[Rational], n: int) -> Matrix:
    return matrix_from_rows([list(entries[i * n:(i + 1) * n]) for i in range(n)], n)


# ---------------------------------------------------------------------------
# Modular shadow
# ---------------------------------------------------------------------------


def to_prime_field(value: Rational, field) -> object:
    numerator = int(QQ.numer(value))
    denominator = int(QQ.denom(value))
    return field(numerator) / field(denominator)


def choose_primes(seed: bytes, avoid: Iterable[int] = (), count: int = 2) -> List[int]:
    """
    Deterministic primes above 2**30 derived from a hash of the input.

    Primes dividing any integer in `avoid` (denominators) are skipped.
    """
    avoid = [abs(a) for a in avoid if abs(a) > 1]
    digest = hashlib.sha256(seed).digest()
    start = MODULAR_PRIME_FLOOR + int.from_bytes(digest[:8], "big") % MODULAR_PRIME_FLOOR
    primes: List[int] = []
    candidate = start
    while len(primes) < count:
        candidate = int(nextprime(candidate))
        if any(a % candidate == 0 for a in avoid):
            continue
        primes.append(candidate)
    return primes


def modular_rank(rows: Sequence[SparseRow], ncols: int, prime: int) -> int:
    """Rank over GF(prime) of a sparse rational row list."""
    field = GF(prime)
    converted = []
    for row in rows:
        reduced = {}
        for j, v in row.items():
            r = to_prime_field(v, field)
            if r:
                reduced[j] = r
        converted.append(reduced)
    if not converted or ncols == 0:
        return 0
    return sparse_matrix(converted, ncols, field).rank()


def two_prime_rank(
    rows: Sequence[SparseRow], ncols: int, primes: Sequence[int]
) -> Tuple[Optional[int], List[int]]:
    """
    Ranks over two prime fields.

    Returns (rank, ranks): rank is the common value when both primes agree,
    otherwise None and the caller must fall back to exact elimination.
    """
    ranks = [modular_rank(rows, ncols, p) for p in primes]
    if len(set(ranks)) == 1:
        return ranks[0], ranks
    logger.warning(f"Modular ranks disagree {ranks} for primes {list(primes)}")
    return None, ranks
