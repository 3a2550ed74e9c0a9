"""Blockwise row-space accumulation with sparse elimination."""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from .matrix import SparseRow, sparse_matrix, to_prime_field

logger = logging.getLogger(__name__)


class EchelonAccumulator:
    """
    Maintains the RREF of a growing row space.

    Rows are fed in blocks; after each block the current basis and the block
    are reduced together by sympy's sparse rref. Once the rank reaches the
    column count every further block is ignored.
    """

    def __init__(self, ncols: int, domain=QQ, block_size: int = 2000):
        self.ncols = ncols
        self.domain = domain
        self.block_size = block_size
        self.rows: List[SparseRow] = []
        self.pivots: Tuple[int, ...] = ()
        self._pending: List[SparseRow] = []
        self.blocks_reduced = 0

    @property
    def rank(self) -> int:
        self.flush()
        return len(self.rows)

    @property
    def full(self) -> bool:
        return len(self.rows) >= self.ncols

    def _convert(self, row: SparseRow) -> SparseRow:
        if self.domain == QQ:
            return {j: v for j, v in row.items() if v}
        converted = {}
        for j, v in row.items():
            r = to_prime_field(v, self.domain)
            if r:
                converted[j] = r
        return converted

    def add(self, row: SparseRow) -> None:
        if self.full:
            return
        converted = self._convert(row)
        if converted:
            self._pending.append(converted)
        if len(self._pending) >= self.block_size:
            self.flush()

    def extend(self, rows: Iterable[SparseRow]) -> None:
        for row in rows:
            if self.full:
                self._pending = []
                return
            self.add(row)

    def flush(self) -> None:
        if not self._pending or self.full:
            self._pending = []
            return
        stacked = self.rows + self._pending
        self._pending = []
        reduced, pivots = sparse_matrix(stacked, self.ncols, self.domain).rref()
        rep = reduced.to_sparse().rep
        self.rows = [dict(rep[i]) for i in range(len(pivots))]
        self.pivots = tuple(pivots)
        self.blocks_reduced += 1
        logger.debug(
            f"Reduced block {self.blocks_reduced}: {len(stacked)} rows -> rank {len(self.rows)}"
        )

    def basis(self) -> List[SparseRow]:
        self.flush()
        return [dict(r) for r in self.rows]


def accumulate_rank(
    blocks: Iterable[Sequence[SparseRow]], ncols: int, domain=QQ
) -> Tuple[int, Optional[EchelonAccumulator]]:
    """Rank of the union of row blocks."""
    accumulator = EchelonAccumulator(ncols, domain)
    for block in blocks:
        accumulator.extend(block)
        if accumulator.full:
            break
    return accumulator.rank, accumulator
