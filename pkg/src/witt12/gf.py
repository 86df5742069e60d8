"""Exact linear algebra over the small prime fields GF(2), GF(3), GF(5).

Matrices are plain numpy integer arrays with entries reduced mod p.  Every
function takes the modulus explicitly and returns fresh arrays; inputs are
never modified.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SUPPORTED_MODULI = (2, 3, 5)


def check_modulus(p: int) -> int:
    if p not in SUPPORTED_MODULI:
        raise ValueError(f"unsupported modulus {p}; expected one of {SUPPORTED_MODULI}")
    return p


def inverse_table(p: int) -> np.ndarray:
    """inv[a] = a^-1 mod p for a != 0; inv[0] = 0."""
    check_modulus(p)
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, -1, p)
    return inv


def as_matrix(M, p: int) -> np.ndarray:
    check_modulus(p)
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim == 1:
        A = A.reshape(1, -1)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {A.shape}")
    return A % p


def rref(M, p: int) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form over GF(p).

    Pivoting always takes the first nonzero entry (top-down) in the leftmost
    available column, so the result is deterministic.

    Returns ``(R, rank, pivot_columns)``; ``R`` has the shape of ``M`` with
    zero rows at the bottom.
    """
    R = as_matrix(M, p)
    inv = inverse_table(p)
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = (R[r] * inv[R[r, c]]) % p
        factors = R[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            R[hit] = (R[hit] - np.outer(factors[hit], R[r])) % p
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(M, p: int) -> int:
    return rref(M, p)[1]


def row_space(M, p: int) -> np.ndarray:
    """Nonzero rows of the rref: a canonical basis of the row space."""
    R, r, _ = rref(M, p)
    return R[:r]


def nullspace(M, p: int) -> np.ndarray:
    """Basis of the right kernel in reduced row echelon form, one vector per row."""
    R, r, pivots = rref(M, p)
    cols = R.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-R[row, f]) % p
    if not len(free):
        return basis
    return rref(basis, p)[0]


def solve(A, b, p: int) -> tuple[np.ndarray, np.ndarray] | None:
    """Solve ``A x = b`` over GF(p).

    Returns ``(particular, nullspace_basis)`` or ``None`` when inconsistent.
    """
    A = as_matrix(A, p)
    b = np.array(b, dtype=np.int64).reshape(-1) % p
    if A.shape[0] != b.shape[0]:
        raise ValueError(f"dimension mismatch: A has {A.shape[0]} rows, b has length {b.shape[0]}")
    cols = A.shape[1]
    R, r, pivots = rref(np.hstack([A, b[:, None]]), p)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for row, pc in enumerate(pivots):
        x[pc] = R[row, cols]
    return x, nullspace(A, p)


def inverse(A, p: int) -> np.ndarray:
    A = as_matrix(A, p)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, r, _ = rref(np.hstack([A, np.eye(n, dtype=np.int64)]), p)
    if r < n or not np.array_equal(R[:, :n], np.eye(n, dtype=np.int64)):
        raise ValueError("matrix is singular")
    return R[:, n:]


def matmul(A, B, p: int) -> np.ndarray:
    return (np.asarray(A, dtype=np.int64) @ np.asarray(B, dtype=np.int64)) % p


def solve_batch(A: np.ndarray, b: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Solve many square systems ``A[k] x = b[k]`` at once.

    ``A`` has shape ``(N, n, n)``, ``b`` shape ``(N, n)``.  Returns ``(x, ok)``
    where ``ok[k]`` is False for singular systems (their ``x`` is garbage).
    """
    inv = inverse_table(p)
    A = np.array(A, dtype=np.int64) % p
    b = np.array(b, dtype=np.int64) % p
    N, n, _ = A.shape
    M = np.concatenate([A, b[:, :, None]], axis=2)
    ok = np.ones(N, dtype=bool)
    idx = np.arange(N)
    for c in range(n):
        col = M[:, c:, c]
        nz = col != 0
        has = nz.any(axis=1)
        ok &= has
        k = c + np.argmax(nz, axis=1)
        top = M[idx, k].copy()
        M[idx, k] = M[:, c]
        M[:, c] = top
        M[:, c] = (M[:, c] * inv[M[:, c, c]][:, None]) % p
        factors = M[:, :, c].copy()
        factors[:, c] = 0
        M = (M - factors[:, :, None] * M[:, c][:, None, :]) % p
    return M[:, :, n], ok


@dataclass(frozen=True, eq=False)
class FieldMatrix:
    """Immutable dense matrix over GF(p)."""

    entries: np.ndarray
    p: int = 3

    def __post_init__(self):
        A = as_matrix(self.entries, self.p)
        A.setflags(write=False)
        object.__setattr__(self, "entries", A)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def rref(self) -> tuple["FieldMatrix", int, list[int]]:
        R, r, piv = rref(self.entries, self.p)
        return FieldMatrix(R, self.p), r, piv

    def rank(self) -> int:
        return rank(self.entries, self.p)

    def nullspace(self) -> np.ndarray:
        return nullspace(self.entries, self.p)

    def solve(self, b):
        return solve(self.entries, b, self.p)

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.entries.T, self.p)

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if other.p != self.p:
            raise ValueError("moduli differ")
        return FieldMatrix(matmul(self.entries, other.entries, self.p), self.p)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldMatrix)
            and self.p == other.p
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.entries.shape, self.entries.tobytes()))
