"""Everything level-dependent and floating point: the evaluation root, an
independent per-p oracle built straight from the level-dependent definitions,
matrix evaluation, spectral radii, convergence tables, and the infinite-order
certificate for pseudo-Anosov classes.

The evaluation root is A_p = -exp(2 pi i k/p) with gcd(k, p) = 1 (default
k = 1), the primitive 2p-th root of unity closest to -1. Its defining property
(-A_p)^p = 1 is what collapses the shifted-index symbols to the p-independent
forms in `qsymbols`, so the oracle here must agree with the symbolic build
evaluated at A_p.
"""

from __future__ import annotations

import cmath
import dataclasses
import math

import numpy as np

from . import mcg
from .classical import hN_matrix
from .errors import BadPError, ConvergenceError, NearPoleError
from .field import FMatrix
from .mcg import NTClass, Word, classify, sl2_image, stretch_factor
from .qsymbols import QContext
from .repbuild import rep_of_word

DEFAULT_TOLERANCE = 1e-12
DEFAULT_MARGIN = 1e-6
MAX_EIG_DIM = 32


def primitive_root(p: int, k: int = 1) -> complex:
    """A_p = -exp(2 pi i k/p): a primitive 2p-th root of unity with
    (-A_p)^p = 1, tending to -1 as p grows (for k = 1)."""
    return -cmath.exp(2j * cmath.pi * k / p)


@dataclasses.dataclass(frozen=True)
class PSetting:
    """One level: odd p >= 2N+1 with the derived color shift and root."""

    p: int
    N: int
    k: int = 1

    def __post_init__(self):
        if self.N < 2:
            raise BadPError(f"N must be >= 2, got {self.N}")
        if self.p % 2 == 0 or self.p < 2 * self.N + 1:
            raise BadPError(f"need odd p >= 2N+1 = {2 * self.N + 1}, got p = {self.p}")
        if math.gcd(self.k, self.p) != 1:
            raise BadPError(f"root index k = {self.k} is not coprime to p = {self.p}")

    @property
    def d(self) -> int:
        return (self.p - 1) // 2

    @property
    def c(self) -> int:
        return self.d - self.N

    @property
    def A(self) -> complex:
        return primitive_root(self.p, self.k)


class _RawSymbols:
    """Quantum symbols evaluated numerically at one root, with the color shift
    c appearing literally: the oracle side of the dual route. No reflection
    identities are used anywhere here."""

    def __init__(self, s: PSetting, tol: float):
        self._w = 2.0 * math.pi * s.k / s.p  # angle of (-A)
        self._tol = tol

    def power(self, n: int) -> complex:  # (-A)^n
        return cmath.exp(1j * self._w * n)

    def qd(self, n: int) -> complex:  # {n}
        return self.power(n) - self.power(-n)

    def qp(self, n: int) -> complex:  # {n}+
        return self.power(n) + self.power(-n)

    def lam(self, n: int) -> complex:  # curve-operator eigenvalue lambda_n
        return -self.qp(2 * n + 2)

    def qd_fact(self, n: int) -> complex:  # {n}!
        out = 1 + 0j
        for j in range(1, n + 1):
            out *= self.qd(j)
        return out

    def qd_dfact(self, n: int) -> complex:  # {n}!! down to {1} or {2}
        out = 1 + 0j
        while n >= 1:
            out *= self.qd(n)
            n -= 2
        return out

    def qp_fact(self, n: int) -> complex:  # {n}+!
        out = 1 + 0j
        for j in range(1, n + 1):
            out *= self.qp(j)
        return out

    def guard(self, value: complex, what: str) -> complex:
        if abs(value) < self._tol:
            raise NearPoleError(f"{what} has magnitude {abs(value):.3e}")
        return value


def _oracle_build(s: PSetting, tol: float):
    """Raw per-level construction shared by the oracle entry points: returns
    (z, ratios, zprime, Ms, T, Tstar) as complex arrays."""
    N, c = s.N, s.c
    sym = _RawSymbols(s, tol)

    def pairing_ratio(n: int, m: int) -> complex:
        num = sym.qd_fact(m) * sym.qd_dfact(2 * c + 2 * n + 1) * sym.qp_fact(2 * c + n + 1)
        den = sym.qd_fact(n) * sym.qd_dfact(2 * c + 2 * m + 1) * sym.qp_fact(2 * c + m + 1)
        return num / sym.guard(den, f"pairing-ratio denominator ({n},{m})")

    z = np.zeros((N, N), dtype=complex)
    for m in range(N):
        z[m, m] = sym.lam(c + m)
        if m >= 1:
            z[m, m - 1] = sym.qd(m)

    ratios = np.array([[pairing_ratio(n, m) for m in range(N)] for n in range(N)])
    y = ratios.T * z.T  # y[m, l] = R(l, m) * z[l, m]

    a = -sym.power(1)  # A = -(-A)
    zprime = (a * (y @ z) - (z @ y) / a) / sym.guard(sym.qd(2), "{2}")

    ms = []
    cols = [np.zeros(N, dtype=complex) for _ in range(N)]
    cols[0][0] = 1.0
    for n in range(N - 1):
        m_n = (zprime - sym.lam(c + n) * np.eye(N)) / sym.guard(
            sym.qd(n + 1), f"{{{n + 1}}}"
        )
        ms.append(m_n)
        cols[n + 1] = m_n @ cols[n]
    t = np.column_stack(cols)
    tstar = t.T / ratios  # tstar[n, m] = t[m, n] / R(n, m)
    return z, ratios, zprime, ms, t, tstar


def oracle_matrices(s: PSetting, tol: float = DEFAULT_TOLERANCE):
    """Independent per-level construction of (T, Tstar) from the raw
    definitions: eigenvalues -{2n+2}+ with the color shift appearing literally,
    raw factorial pairing ratios, the skein-relation twist, and the column
    recurrence. Returns two N x N complex arrays."""
    _, _, _, _, t, tstar = _oracle_build(s, tol)
    return t, tstar


def oracle_m_matrices(s: PSetting, tol: float = DEFAULT_TOLERANCE):
    """The oracle's recurrence matrices M^(n), for structural spot checks."""
    return _oracle_build(s, tol)[3]


def oracle_z_matrix(s: PSetting, tol: float = DEFAULT_TOLERANCE):
    """The oracle's curve-operator matrix, for spot checks of the eigenvalues."""
    return _oracle_build(s, tol)[0]


def eval_matrix(mat: FMatrix, x: complex, tol: float = DEFAULT_TOLERANCE) -> np.ndarray:
    """Entrywise complex evaluation of a symbolic matrix."""
    out = np.zeros((mat.n_rows, mat.n_cols), dtype=complex)
    for i, row in enumerate(mat.rows):
        for j, e in enumerate(row):
            try:
                out[i, j] = e.eval_complex(x, tol)
            except NearPoleError as err:
                raise NearPoleError(f"entry ({i}, {j}): {err}", entry=(i, j)) from None
    return out


def spectral_radius(m: np.ndarray, max_dim: int = MAX_EIG_DIM) -> float:
    """Largest eigenvalue modulus of a small dense complex matrix."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"square matrix required, got shape {m.shape}")
    if m.shape[0] > max_dim:
        raise ValueError(f"dimension {m.shape[0]} exceeds bound {max_dim}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("matrix has non-finite entries")
    try:
        eigs = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as err:
        raise ConvergenceError(f"eigenvalue solver failed: {err}") from None
    return float(np.max(np.abs(eigs)))


def max_abs(m: np.ndarray) -> float:
    """Entrywise max-modulus norm used for all deviation measurements."""
    return float(np.max(np.abs(m))) if m.size else 0.0


@dataclasses.dataclass(frozen=True)
class TableRow:
    p: int
    spectral_radius: float
    deviation: float


@dataclasses.dataclass(frozen=True)
class AMUReport:
    """Certificate data for one word at one dimension. `p0_observed` is the
    smallest scanned level from which the spectral radius clears 1 + margin
    through the whole remaining scan; it is an empirical observation about the
    scanned range, not a claim about the true threshold."""

    word: Word
    N: int
    classification: NTClass
    stretch: float | None
    target_eig: float | None
    rows: tuple[TableRow, ...]
    p0_observed: int | None
    margin: float = DEFAULT_MARGIN


def _limit_matrix(w: Word, N: int) -> np.ndarray:
    return np.array(hN_matrix(sl2_image(w), N), dtype=complex)


def convergence_table(w: Word, N: int, p_list, tol: float = DEFAULT_TOLERANCE):
    """Per-level rows (p, spectral radius, deviation from the classical limit).

    The symbolic representation already carries the character rescaling (its
    generators are the matrices of the rescaled twists), so evaluating at A_p
    and comparing against the SL2(Z) action measures exactly the
    character-normalized distance of the underlying TQFT matrices."""
    ctx = QContext(N)
    sym = rep_of_word(w, ctx)
    target = _limit_matrix(w, N)
    rows = []
    for p in sorted(p_list):
        s = PSetting(p, N)
        m_p = eval_matrix(sym, s.A, tol)
        rows.append(
            TableRow(
                p=p,
                spectral_radius=spectral_radius(m_p),
                deviation=max_abs(m_p - target),
            )
        )
    return rows


def amu_certificate(
    w: Word,
    N: int,
    p_max: int,
    margin: float = DEFAULT_MARGIN,
    tol: float = DEFAULT_TOLERANCE,
) -> AMUReport:
    """Scan all odd levels in [2N+1, p_max] and report the certificate."""
    if p_max < 2 * N + 1:
        raise BadPError(f"p_max = {p_max} below the smallest level {2 * N + 1}")
    kind = classify(w)
    stretch = target = None
    if kind is NTClass.PSEUDO_ANOSOV:
        stretch = stretch_factor(sl2_image(w))
        target = stretch ** (N - 1)
    rows = tuple(convergence_table(w, N, range(2 * N + 1, p_max + 1, 2), tol))
    p0 = None
    if kind is NTClass.PSEUDO_ANOSOV:
        for row in reversed(rows):
            if row.spectral_radius > 1 + margin:
                p0 = row.p
            else:
                break
    return AMUReport(
        word=w,
        N=N,
        classification=kind,
        stretch=stretch,
        target_eig=target,
        rows=rows,
        p0_observed=p0,
        margin=margin,
    )


def chi_p(w: Word, p: int, N: int, k: int = 1) -> complex:
    """Re-export of the rescaling character for callers working at this layer."""
    return mcg.chi_p(w, p, N, k)
