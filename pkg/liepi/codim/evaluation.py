"""Codimensions c_n^H(L) as ranks of evaluation matrices."""

import hashlib
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import GF, QQ

from ..action import ActionAlgebra
from ..exceptions import BudgetExceeded, MalformedInput
from ..lie import LieAlgebra
from ..linalg import EchelonAccumulator, rows_of
from ..linalg.matrix import SparseRow, choose_primes
from ..linalg.rational import format_rational

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 50_000_000
EXACT = "exact"
TWO_PRIME = "two_prime"

Permutation = Tuple[int, ...]


@dataclass
class CodimResult:
    n: int
    value: int
    mode: str
    action_basis_size: int
    primes: List[int] = field(default_factory=list)
    modular_ranks: List[int] = field(default_factory=list)
    fallback: bool = False

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "codim": self.value,
            "mode": self.mode,
            "action_basis_size": self.action_basis_size,
            "primes": self.primes,
            "fallback": self.fallback,
        }


def evaluation_size(dim: int, action_dim: int, n: int) -> int:
    """n! · (dim A)^n · (dim L)^(n+1), the entry count of the literal evaluation matrix."""
    return factorial(n) * action_dim ** n * dim ** (n + 1)


def check_budget(algebra: LieAlgebra, action: ActionAlgebra, n: int, budget: int) -> int:
    if n < 1:
        raise MalformedInput(f"Codimensions are defined for n >= 1, got {n}")
    size = evaluation_size(algebra.dim, action.dim, n)
    if size > budget:
        raise BudgetExceeded(
            f"Evaluation matrix for n = {n} has {size} entries, budget is {budget}",
            n=n, size=size, budget=budget,
        )
    return size


class EvaluationSpace:
    """
    Multilinear maps L^n -> L in coordinates.

    Column (J, k) holds the k-th output coordinate on the basis tuple
    J = (j_1, ..., j_n), encoded as (j_1 d^(n-1) + ... + j_n) d + k.
    """

    def __init__(self, algebra: LieAlgebra, action: ActionAlgebra, n: int):
        self.algebra = algebra
        self.action = action
        self.n = n
        self.dim = algebra.dim
        self.tuple_count = self.dim ** n
        self.ncols = self.tuple_count * self.dim
        self._operators = [rows_of(op) for op in action.basis]
        self._prefix: Optional[List[SparseRow]] = None
        self._maps: Dict[Permutation, List[int]] = {}

    def _operator_columns(self) -> List[List[List[Tuple[int, object]]]]:
        """For each operator γ and basis index j, the sparse column γ e_j."""
        d = self.dim
        return [
            [[(b, op[b][j]) for b in range(d) if op[b][j]] for j in range(d)]
            for op in self._operators
        ]

    def prefix_rows(self) -> List[SparseRow]:
        """
        RREF basis of P_n.

        P_1 = span{y -> γy} and P_(k+1) = span{(y, y') -> [p(y), γy']}; each
        step is reduced before the next so only a basis is extended.
        """
        if self._prefix is not None:
            return self._prefix
        d = self.dim
        columns = self._operator_columns()

        level = EchelonAccumulator(d * d)
        for gamma in columns:
            level.add({j * d + b: v for j in range(d) for b, v in gamma[j]})
        rows = level.basis()

        for k in range(1, self.n):
            width = d ** (k + 1) * d
            level = EchelonAccumulator(width)
            for p in rows:
                for gamma in columns:
                    level.add(self._extend(p, gamma))
            rows = level.basis()
            logger.debug(f"Prefix space P_{k + 1} of {self.algebra.name} has dimension {len(rows)}")
            if not rows:
                break
        self._prefix = rows
        return rows

    def _extend(self, p: SparseRow, gamma: List[List[Tuple[int, object]]]) -> SparseRow:
        d = self.dim
        out: SparseRow = {}
        for col, value in p.items():
            tup, a = divmod(col, d)
            for j, image in enumerate(gamma):
                base = (tup * d + j) * d
                for b, g in image:
                    for k, c in self.algebra.basis_product(a, b):
                        key = base + k
                        out[key] = out.get(key, 0) + value * g * c
        return {key: v for key, v in out.items() if v}

    def column_map(self, sigma: Permutation) -> List[int]:
        """T -> J with j_σ(i) = t_i, on encoded basis tuples."""
        if sigma not in self._maps:
            d, n = self.dim, self.n
            mapping = []
            for t in product(range(d), repeat=n):
                j = [0] * n
                for i, value in enumerate(t):
                    j[sigma[i]] = value
                index = 0
                for value in j:
                    index = index * d + value
                mapping.append(index)
            self._maps[sigma] = mapping
        return self._maps[sigma]

    def act(self, row: SparseRow, sigma: Permutation) -> SparseRow:
        """(σ f)(x_1, ..., x_n) = f(x_σ(1), ..., x_σ(n)) as a column permutation."""
        mapping = self.column_map(sigma)
        d = self.dim
        out: SparseRow = {}
        for col, value in row.items():
            tup, k = divmod(col, d)
            out[mapping[tup] * d + k] = value
        return out

    def block(self, sigma: Permutation) -> List[SparseRow]:
        return [self.act(row, sigma) for row in self.prefix_rows()]

    def blocks(self, max_workers: int = 1) -> List[List[SparseRow]]:
        """One block of rows per permutation, in lexicographic permutation order."""
        perms = list(permutations(range(self.n)))
        for sigma in perms:
            self.column_map(sigma)
        if max_workers <= 1:
            return [self.block(sigma) for sigma in perms]
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            return list(executor.map(self.block, perms))

    def fingerprint(self) -> bytes:
        table = {
            f"{i},{j}": {str(k): format_rational(c) for k, c in value.items()}
            for (i, j), value in sorted(self.algebra.canonical_table().items())
        }
        operators = [[[format_rational(v) for v in row] for row in op] for op in self._operators]
        payload = {"dim": self.dim, "table": table, "action": operators, "n": self.n}
        return json.dumps(payload, sort_keys=True).encode()


def evaluation_basis(
    algebra: LieAlgebra,
    action: ActionAlgebra,
    n: int,
    budget: int = DEFAULT_BUDGET,
    max_workers: int = 1,
) -> Tuple[EvaluationSpace, EchelonAccumulator]:
    """Exact RREF basis of the evaluation image W = Σ_σ σ P_n."""
    check_budget(algebra, action, n, budget)
    space = EvaluationSpace(algebra, action, n)
    accumulator = EchelonAccumulator(space.ncols)
    if space.prefix_rows():
        for block in space.blocks(max_workers):
            accumulator.extend(block)
            if accumulator.full:
                break
    accumulator.flush()
    return space, accumulator


def _modular_rank(blocks: Sequence[Sequence[SparseRow]], ncols: int, prime: int) -> int:
    accumulator = EchelonAccumulator(ncols, GF(prime))
    for block in blocks:
        accumulator.extend(block)
        if accumulator.full:
            break
    return accumulator.rank


def codimension(
    algebra: LieAlgebra,
    action: ActionAlgebra,
    n: int,
    exact: bool = True,
    budget: int = DEFAULT_BUDGET,
    max_workers: int = 1,
) -> CodimResult:
    """
    c_n^H(L) = dim of the span of x -> [γ_1 x_σ(1), ..., γ_n x_σ(n)].

    Two-prime mode ranks the same rows over two large prime fields and
    recomputes exactly when they disagree.
    """
    if exact:
        space, accumulator = evaluation_basis(algebra, action, n, budget, max_workers)
        value = accumulator.rank
        logger.debug(f"c_{n} of {algebra.name} = {value} (exact, {accumulator.blocks_reduced} blocks)")
        return CodimResult(n=n, value=value, mode=EXACT, action_basis_size=action.dim)

    check_budget(algebra, action, n, budget)
    space = EvaluationSpace(algebra, action, n)
    if not space.prefix_rows():
        return CodimResult(n=n, value=0, mode=TWO_PRIME, action_basis_size=action.dim)
    blocks = space.blocks(max_workers)
    denominators = {int(QQ.denom(v)) for row in space.prefix_rows() for v in row.values()}
    primes = choose_primes(hashlib.sha256(space.fingerprint()).digest(), denominators)
    ranks = [_modular_rank(blocks, space.ncols, p) for p in primes]
    result = CodimResult(n=n, value=ranks[0], mode=TWO_PRIME, action_basis_size=action.dim,
                         primes=primes, modular_ranks=ranks)
    if len(set(ranks)) != 1:
        logger.warning(f"Modular ranks {ranks} disagree for c_{n} of {algebra.name}; recomputing exactly")
        _, accumulator = evaluation_basis(algebra, action, n, budget, max_workers)
        result.value = accumulator.rank
        result.fallback = True
    return result


def literal_evaluation_rows(algebra: LieAlgebra, action: ActionAlgebra, n: int) -> List[SparseRow]:
    """
    One row per (σ, γ_1, ..., γ_n): the left-normed bracket
    [γ_1 e_{j_σ(1)}, ..., γ_n e_{j_σ(n)}] on every basis tuple J.

    Only for small cross-checks; no budget is applied.
    """
    d = algebra.dim
    operators = [rows_of(op) for op in action.basis]
    images = [
        [[op[b][j] for b in range(d)] for j in range(d)]
        for op in operators
    ]
    rows = []
    for sigma in permutations(range(n)):
        for gammas in product(range(len(images)), repeat=n):
            row: SparseRow = {}
            for index, tup in enumerate(product(range(d), repeat=n)):
                value = algebra.left_normed(
                    [images[gammas[i]][tup[sigma[i]]] for i in range(n)]
                )
                for k, c in enumerate(value):
                    if c:
                        row[index * d + k] = c
            rows.append(row)
    return rows
