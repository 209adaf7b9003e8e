"""Exact integer-spectrum decisions and the representation-theoretic oracles.

The characteristic polynomial is computed modulo a handful of ~27-bit primes
(Hessenberg reduction, O(n^3) per prime) and lifted by CRT.  The number of
primes is chosen from a Hadamard-type bound on the coefficients, so the lifted
polynomial is exact.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

import numpy as np

from .cyclotomic import IntPolynomial, matrix_has_integer_eigenvalues
from .dicyclic import ConnectionSet, DicElement, DicyclicGroup, split_lengths, word_lengths
from .representations import IrrepInventory, Matrix, OneDimRep, TwoDimRep

_PRIME_CEILING = 1 << 27


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def _primes(count: int) -> tuple[int, ...]:
    out: list[int] = []
    n = _PRIME_CEILING - 1
    while len(out) < count:
        if _is_prime(n):
            out.append(n)
        n -= 2
    return tuple(out)


def _coefficient_bits(M: np.ndarray) -> float:
    """log2 of a bound on |coefficients| of det(XI - M).

    The X^(n-k) coefficient is a sum of C(n,k) principal minors, each bounded
    by the product of its row norms (Hadamard), hence by prod_i max(1, |r_i|).
    """
    n = M.shape[0]
    norms = np.sqrt((M.astype(float) ** 2).sum(axis=1))
    return n + float(np.log2(np.maximum(norms, 1.0)).sum())


def _charpoly_mod(M: np.ndarray, p: int) -> list[int]:
    n = M.shape[0]
    H = M % p
    for m in range(1, n - 1):
        nz = np.flatnonzero(H[m:, m - 1])
        if nz.size == 0:
            continue
        i = m + int(nz[0])
        if i != m:
            H[[i, m], :] = H[[m, i], :]
            H[:, [i, m]] = H[:, [m, i]]
        inv = pow(int(H[m, m - 1]), -1, p)
        u = (H[m + 1 :, m - 1] * inv) % p
        if u.any():
            H[m + 1 :, :] = (H[m + 1 :, :] - np.outer(u, H[m, :]) % p) % p
            H[:, m] = (H[:, m] + (H[:, m + 1 :] @ u) % p) % p
    h = H.tolist()
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[0, 0] = 1
    for m in range(n):
        coef = [0] * m
        t = 1
        for i in range(m - 1, -1, -1):
            t = t * h[i + 1][i] % p
            coef[i] = h[i][m] * t % p
        nxt = np.zeros(n + 1, dtype=np.int64)
        nxt[1:] = P[m, :-1]
        nxt = (nxt - (h[m][m] * P[m]) % p) % p
        if m:
            nxt = (nxt - (np.array(coef, dtype=np.int64) @ P[:m]) % p) % p
        P[m + 1] = nxt
    return P[n].tolist()


def char_poly_exact(M) -> IntPolynomial:
    """det(XI - M) with exact integer coefficients."""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("matrix must be square")
    n = M.shape[0]
    if n == 0:
        return IntPolynomial([1])
    if not np.issubdtype(M.dtype, np.integer):
        raise ValueError("matrix must have integer entries")
    if np.abs(M).max(initial=0) >= _PRIME_CEILING:
        raise ValueError("matrix entries too large for the modular kernel")
    M = M.astype(np.int64)
    need = _coefficient_bits(M) + 2
    count = 1
    while sum(math.log2(p) for p in _primes(count)) <= need:
        count += 1
    primes = _primes(count)
    residues = [_charpoly_mod(M.copy(), p) for p in primes]
    # Garner / incremental CRT per coefficient, symmetric lift
    coeffs = []
    for k in range(n + 1):
        x, mod = residues[0][k], primes[0]
        for r, p in zip(residues[1:], primes[1:]):
            t = ((r[k] - x) * pow(mod, -1, p)) % p
            x += mod * t
            mod *= p
        if x > mod // 2:
            x -= mod
        coeffs.append(x)
    return IntPolynomial(coeffs)


@dataclass(frozen=True)
class SpectrumReport:
    is_integral: bool
    eigenvalues: tuple[tuple[int, int], ...] | None  # (value, multiplicity), descending
    witness: IntPolynomial | None  # undeflatable residual factor

    @property
    def eigenvalue_list(self) -> list[int]:
        if self.eigenvalues is None:
            return []
        return [v for v, mult in self.eigenvalues for _ in range(mult)]

    def format(self) -> str:
        if self.is_integral:
            return "{" + ", ".join(f"{v}^{m}" if m > 1 else str(v) for v, m in self.eigenvalues) + "}"
        return f"non-integral (residual {self.witness})"


def _deflate(coeffs: list[int], k: int) -> list[int]:
    """Synthetic division by (X - k); caller guarantees k is a root."""
    out = [0] * (len(coeffs) - 1)
    carry = 0
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] + carry * k
        out[i - 1] = carry
    return out


def integer_spectrum(M) -> SpectrumReport:
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or not np.array_equal(M, M.T):
        raise ValueError("integer_spectrum needs a square symmetric matrix")
    n = M.shape[0]
    coeffs = list(char_poly_exact(M).coeffs)
    bound = int(np.abs(M).sum(axis=1).max(initial=0))
    roots: Counter[int] = Counter()
    while len(coeffs) > 1 and coeffs[0] == 0:
        coeffs = coeffs[1:]
        roots[0] += 1
    for k in range(-bound, bound + 1):
        if k == 0:
            continue
        while len(coeffs) > 1 and coeffs[0] % k == 0:
            if IntPolynomial(coeffs)(k) != 0:
                break
            coeffs = _deflate(coeffs, k)
            roots[k] += 1
        if len(coeffs) == 1:
            break
    if len(coeffs) == 1:
        assert coeffs[0] == 1 and sum(roots.values()) == n
        eig = tuple(sorted(roots.items(), reverse=True))
        return SpectrumReport(True, eig, None)
    return SpectrumReport(False, None, IntPolynomial(coeffs))


def float_nearest_integer_gap(M) -> float:
    """Largest distance from a float eigenvalue (eigvalsh) to its nearest integer."""
    vals = np.linalg.eigvalsh(np.asarray(M, dtype=float))
    return float(np.abs(vals - np.round(vals)).max(initial=0.0))


# representation-theoretic oracles


def babai_witness(G: DicyclicGroup, S: ConnectionSet, inventory: IrrepInventory):
    """First irrep rho for which sum_{s in S} rho(s) has a non-integer eigenvalue, else None."""
    S.require()
    elements = S.elements
    for rep in inventory.all:
        if not matrix_has_integer_eigenvalues(rep.subset_sum(elements)):
            return rep
    return None


def babai_oracle(G: DicyclicGroup, S: ConnectionSet, inventory: IrrepInventory) -> bool:
    return babai_witness(G, S, inventory) is None


def phi_matrix(
    G: DicyclicGroup,
    S: ConnectionSet,
    rep: OneDimRep | TwoDimRep,
    *,
    lengths: Mapping[DicElement, int] | None = None,
    method: str = "closed",
) -> Matrix:
    """Phi_S(rho) = sum_g l_S(g) rho(g) in the standard (orthonormal) basis.

    ``method="direct"`` sums over the group; ``"closed"`` assembles the matrix
    from the two weighted character sums pi(A, l_S) and pi(A, l_S(x .)).
    """
    if lengths is None:
        lengths = word_lengths(G, S)
    if method == "direct":
        return rep.weighted_sum(lengths)
    if method != "closed":
        raise ValueError(f"unknown method {method!r}")
    on_a, on_xa = split_lengths(G, S, dict(lengths))
    if isinstance(rep, OneDimRep):
        val = rep.base.weighted_sum(on_a) + rep.x_image * rep.base.weighted_sum(on_xa)
        return [[val]]
    pi = rep.pi
    diag = pi.weighted_sum(on_a)
    off = pi.weighted_sum(on_xa)
    return [[diag, pi.value(G.y) * off.conj()], [off, diag]]


def hl_witness(G: DicyclicGroup, S: ConnectionSet, inventory: IrrepInventory, *, method: str = "closed"):
    S.require(generating=True)
    lengths = word_lengths(G, S)
    for rep in inventory.all:
        if not matrix_has_integer_eigenvalues(phi_matrix(G, S, rep, lengths=lengths, method=method)):
            return rep
    return None


def hl_oracle(G: DicyclicGroup, S: ConnectionSet, inventory: IrrepInventory, *, method: str = "closed") -> bool:
    return hl_witness(G, S, inventory, method=method) is None


def exact_eigenvalues_2x2(mat: Matrix) -> tuple[int, ...] | None:
    """Integer eigenvalues of a 1x1/2x2 cyclotomic matrix, or None if any is not an integer."""
    if not matrix_has_integer_eigenvalues(mat):
        return None
    if len(mat) == 1:
        return (mat[0][0].as_rational_integer(),)
    (a, b), (c, d) = mat
    t = (a + d).as_rational_integer()
    det = (a * d - b * c).as_rational_integer()
    r = math.isqrt(t * t - 4 * det)
    return ((t - r) // 2, (t + r) // 2)

