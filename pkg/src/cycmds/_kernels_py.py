"""Pure-Python implementations of the hot kernels.

The compiled module ``cycmds._kernels_c`` exports the same functions; the
active backend is chosen at import time in ``cycmds.kernels``.  Keep the two
implementations behaviorally identical -- ``tests/test_backends.py`` compares
them directly.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

BACKEND = "python"


# ---------------------------------------------------------------------------
# polynomial arithmetic in Z[x]/(Phi_n)

def poly_mul_mod(a, b, red_rows, phi):
    """Product of two coefficient vectors reduced into the power basis.

    ``red_rows[i]`` holds the coefficients of x^(phi+i) in the basis
    1, x, ..., x^(phi-1); both inputs must have length <= phi.
    """
    la, lb = len(a), len(b)
    conv = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                bj = b[j]
                if bj:
                    conv[i + j] += ai * bj
    if len(conv) <= phi:
        conv.extend([0] * (phi - len(conv)))
        return tuple(conv)
    res = conv[:phi]
    for i in range(phi, len(conv)):
        c = conv[i]
        if c:
            row = red_rows[i - phi]
            for j in range(phi):
                res[j] += c * row[j]
    return tuple(res)


def group_to_power_basis(vec, pows, phi):
    """Map a vector of Z[x]/(x^n - 1) coordinates into the power basis."""
    res = [0] * phi
    for e, c in enumerate(vec):
        if c:
            pe = pows[e]
            for j in range(phi):
                res[j] += c * pe[j]
    return tuple(res)


# ---------------------------------------------------------------------------
# determinants of minors with root-of-unity entries

@lru_cache(maxsize=None)
def _perms_with_signs(k):
    out = []
    for perm in itertools.permutations(range(k)):
        inversions = sum(
            1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        out.append((perm, -1 if inversions & 1 else 1))
    return tuple(out)


def minor_dets(exp_rows, subsets, n, pows, phi):
    """Exact determinants of the given column subsets, in the power basis.

    ``exp_rows[i][c]`` is the exponent e with entry (i, c) = zeta^e, or -1
    for a zero entry.  Expands the Leibniz sum in Z[x]/(x^n - 1) (each term
    is a single signed power), then reduces mod Phi_n.  Intended for small
    row counts; cost grows as k!.
    """
    k = len(exp_rows)
    perms = _perms_with_signs(k)
    out = []
    for cols in subsets:
        acc = [0] * n
        for perm, sign in perms:
            e = 0
            for i in range(k):
                ex = exp_rows[i][cols[perm[i]]]
                if ex < 0:
                    break
                e += ex
            else:
                acc[e % n] += sign
        out.append(group_to_power_basis(acc, pows, phi))
    return out


# ---------------------------------------------------------------------------
# exact resultant via the subresultant remainder sequence

def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def _prem(A, B):
    """Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A reduced mod B."""
    dB = len(B) - 1
    lb = B[-1]
    R = list(A)
    top = len(R) - 1
    while top >= dB:
        coef = R[top]
        for j in range(top):
            R[j] *= lb
        if coef:
            shift = top - dB
            for j in range(dB):
                R[shift + j] -= coef * B[j]
        R.pop()
        top -= 1
    return _trim(R)


def subresultant_resultant(f, g):
    """Resultant of integer polynomials given as ascending coefficients.

    Subresultant remainder sequence (Cohen, Alg. 3.3.7): all divisions are
    exact over Z, keeping intermediate growth polynomial.  Returns 0 when
    either input is the zero polynomial or the inputs share a factor.
    """
    A = _trim(f)
    B = _trim(g)
    if not A or not B:
        return 0
    s = 1
    if len(A) < len(B):
        if (len(A) & 0) == 0 and ((len(A) - 1) & 1) and ((len(B) - 1) & 1):
            s = -1
        A, B = B, A
    degA, degB = len(A) - 1, len(B) - 1
    if degB == 0:
        return s * B[0] ** degA
    g_, h = 1, 1
    while True:
        delta = degA - degB
        if (degA & 1) and (degB & 1):
            s = -s
        R = _prem(A, B)
        A, degA = B, degB
        denom = g_ * h**delta
        B = [c // denom for c in R]
        degB = len(B) - 1
        g_ = A[-1]
        if delta:
            h = g_**delta // h ** (delta - 1)
        if degB > 0:
            continue
        if not B:
            return 0
        return s * (B[0] ** degA // h ** (degA - 1))


# ---------------------------------------------------------------------------
# batched nonzero tests for Fourier-matrix minors modulo a word-size prime

def _det_mod(mat, mod):
    """Determinant of a small integer matrix modulo a prime (with pivoting)."""
    k = len(mat)
    a = [[x % mod for x in row] for row in mat]
    det = 1
    for t in range(k):
        piv_row = next((r for r in range(t, k) if a[r][t]), None)
        if piv_row is None:
            return 0
        if piv_row != t:
            a[t], a[piv_row] = a[piv_row], a[t]
            det = mod - det
        pivot = a[t][t]
        det = det * pivot % mod
        inv = pow(pivot, mod - 2, mod)
        for r in range(t + 1, k):
            f = a[r][t] * inv % mod
            if f:
                row_r, row_t = a[r], a[t]
                for c in range(t, k):
                    row_r[c] = (row_r[c] - f * row_t[c]) % mod
    return det


def _batch_zero_det_indices(mats, mod):
    """Indices of matrices in a (m, k, k) stack with det = 0 (mod mod).

    Division-free elimination without pivoting certifies most determinants
    nonzero in one vectorized pass; the rest are rechecked one by one with
    proper pivoting.  mod must stay below 2^31 so products fit in int64.
    """
    m, k, _ = mats.shape
    A = (mats % mod).astype(np.int64)
    clean = np.ones(m, dtype=bool)
    for t in range(k - 1):
        piv = A[:, t, t]
        clean &= piv != 0
        lower = A[:, t + 1 :, t]
        A[:, t + 1 :, :] = (
            A[:, t + 1 :, :] * piv[:, None, None]
            - lower[:, :, None] * A[:, t, None, :]
        ) % mod
    certified = clean & (A[:, k - 1, k - 1] != 0)
    out = []
    for idx in np.nonzero(~certified)[0]:
        if _det_mod(mats[idx].tolist(), mod) == 0:
            out.append(int(idx))
    return out


def fourier_minor_scan(n, mod, omega, kmin, kmax):
    """Scan all square submatrices of (omega^(ij)) for zero dets mod ``mod``.

    Returns (checked_count, suspects) where each suspect is a
    (row_subset, col_subset) pair whose determinant vanished modulo the
    certifying prime and therefore needs an exact recheck by the caller.
    """
    pow_table = [pow(omega, e, mod) for e in range(n)]
    V = np.array(
        [[pow_table[(i * j) % n] for j in range(n)] for i in range(n)],
        dtype=np.int64,
    )
    checked = 0
    suspects = []
    for k in range(kmin, kmax + 1):
        combos = list(itertools.combinations(range(n), k))
        idx = np.array(combos, dtype=np.intp)
        mats = V[idx[:, None, :, None], idx[None, :, None, :]]
        mats = mats.reshape(-1, k, k)
        checked += mats.shape[0]
        for flat in _batch_zero_det_indices(mats, mod):
            suspects.append((combos[flat // len(combos)],
                             combos[flat % len(combos)]))
    return checked, suspects
