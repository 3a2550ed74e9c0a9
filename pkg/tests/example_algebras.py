"""Example algebras, actions and documents for testing."""

import random
from pathlib import Path
from typing import List

from sympy.polys.domains import QQ

from liepi.formats import parse_action_file, parse_algebra_file
from liepi.linalg import Matrix, matrix_from_rows

FIXTURES = Path(__file__).resolve().parent.parent / "liepi" / "fixtures"

ALGEBRA_FIXTURES = [
    "sl2",
    "sl2_plus_sl2",
    "heisenberg",
    "solvable2",
    "bahturin_m2",
    "glue10",
    "nonsplit6",
]


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.json"


def load_algebra(name: str):
    return parse_algebra_file(fixture_path(name))


def load_action(name: str, algebra):
    return parse_action_file(fixture_path(name), algebra)


# Not a Lie algebra: [[e0, e1], e2] + [[e1, e2], e0] + [[e2, e0], e1] = 2 e0
JACOBI_BROKEN = {
    "name": "broken",
    "dim": 3,
    "brackets": [
        {"i": 0, "j": 1, "value": [[1, "1"]]},
        {"i": 0, "j": 2, "value": [[2, "1"]]},
        {"i": 1, "j": 2, "value": [[0, "1"]]},
    ],
}

# Table for LieAlgebra(2, ...) with [e1, e0] stored at the wrong sign
ANTISYMMETRY_BROKEN = {
    (0, 1): {0: 1},
    (1, 0): {0: 1},
}


def unit(n: int, i: int) -> List:
    v = [QQ(0)] * n
    v[i] = QQ(1)
    return v


def random_unimodular(rng: random.Random, n: int) -> Matrix:
    """Product of a random upper and a random lower unitriangular integer matrix."""
    upper = [[QQ(1) if i == j else (QQ(rng.randint(-3, 3)) if j > i else QQ(0)) for j in range(n)]
             for i in range(n)]
    lower = [[QQ(1) if i == j else (QQ(rng.randint(-3, 3)) if j < i else QQ(0)) for j in range(n)]
             for i in range(n)]
    return matrix_from_rows(upper, n) * matrix_from_rows(lower, n)


def random_rows(rng: random.Random, nrows: int, ncols: int, spread: int = 5) -> List[List]:
    return [[QQ(rng.randint(-spread, spread), rng.randint(1, 3)) for _ in range(ncols)]
            for _ in range(nrows)]
