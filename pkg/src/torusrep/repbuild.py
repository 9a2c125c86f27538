"""Construction of the level-independent symbolic matrices.

The curve-operator matrix z is lower bidiagonal; its Hopf transpose y, the
twisted operator z', and the tridiagonal column-recurrence matrices M^(n) are
assembled from it. The twist generator That has column n+1 = M^(n) * column n
starting from e = (1, 0, ..., 0), and Tstar is recovered through the pairing
ratios. Everything lives in GL_N(Q(X)) and can be evaluated exactly at X = -1.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from functools import lru_cache

from .errors import PoleError
from .field import FMatrix, RatFunc, fm_eq, fm_inv, fm_mul
from .qsymbols import QContext, lambda_shifted, qint, rhat


def build_z(ctx: QContext) -> FMatrix:
    """Lower-bidiagonal matrix of the longitude curve operator: diagonal entry
    m is the shifted eigenvalue, subdiagonal entry (m, m-1) is {m}."""
    N = ctx.N
    rows = []
    for m in range(N):
        row = [RatFunc.zero()] * N
        row[m] = lambda_shifted(m, ctx)
        if m >= 1:
            row[m - 1] = qint(m)
        rows.append(tuple(row))
    return FMatrix(tuple(rows))


def build_y(ctx: QContext, z: FMatrix) -> FMatrix:
    """Meridian curve operator: the transpose of z through the Hopf pairing,
    y[m][l] = rhat(l, m) * z[l][m]."""
    N = ctx.N
    return FMatrix(
        tuple(
            tuple(rhat(l, m, ctx) * z[l][m] for l in range(N))
            for m in range(N)
        )
    )


def build_zprime(ctx: QContext, y: FMatrix, z: FMatrix) -> FMatrix:
    """Image of the longitude under the meridian twist, via the skein relation:
    (X * y@z - X^(-1) * z@y) / {2}."""
    x = RatFunc.x()
    lhs = fm_mul(y, z).scale(x)
    rhs = fm_mul(z, y).scale(x.reciprocal())
    inv2 = qint(2).reciprocal()
    return (lhs - rhs).scale(inv2)


def build_m(n: int, ctx: QContext, zprime: FMatrix) -> FMatrix:
    """Column-recurrence matrix M^(n) = (z' - lambda_{c+n} I) / {n+1}."""
    if not 0 <= n <= ctx.N - 2:
        raise ValueError(f"recurrence index n = {n} outside 0..{ctx.N - 2}")
    N = ctx.N
    lam = lambda_shifted(n, ctx)
    inv = qint(n + 1).reciprocal()
    rows = []
    for m in range(N):
        row = list(zprime[m])
        row[m] = row[m] - lam
        rows.append(tuple(e * inv for e in row))
    return FMatrix(tuple(rows))


def build_that(ctx: QContext) -> FMatrix:
    """Twist generator: columns built by the recurrence a_{n+1} = M^(n) a_n
    from a_0 = e."""
    return build_repset(ctx).t_hat


def build_tstar(ctx: QContext, that: FMatrix) -> FMatrix:
    """The second twist generator through the pairing: tstar[n][m] =
    that[m][n] / rhat(n, m)."""
    N = ctx.N
    return FMatrix(
        tuple(
            tuple(that[m][n] / rhat(n, m, ctx) for m in range(N))
            for n in range(N)
        )
    )


@dataclasses.dataclass(frozen=True)
class RepSet:
    """All symbolic matrices for one dimension N, immutable once built."""

    ctx: QContext
    z_hat: FMatrix
    y_hat: FMatrix
    zprime_hat: FMatrix
    m_hat: tuple[FMatrix, ...]
    t_hat: FMatrix
    tstar_hat: FMatrix


@lru_cache(maxsize=None)
def build_repset(ctx: QContext) -> RepSet:
    N = ctx.N
    z = build_z(ctx)
    y = build_y(ctx, z)
    zprime = build_zprime(ctx, y, z)
    m_hat = tuple(build_m(n, ctx, zprime) for n in range(N - 1))

    cols = [[RatFunc.zero()] * N for _ in range(N)]
    cols[0][0] = RatFunc.one()
    for n in range(N - 1):
        prev = cols[n]
        nxt = []
        for m in range(N):
            acc = RatFunc.zero()
            for l in range(max(0, m - 1), min(N, m + 2)):
                e = m_hat[n][m][l]
                if not (e.is_zero or prev[l].is_zero):
                    acc = acc + e * prev[l]
            nxt.append(acc)
        cols[n + 1] = nxt
    that = FMatrix(tuple(tuple(cols[n][m] for n in range(N)) for m in range(N)))
    tstar = build_tstar(ctx, that)
    return RepSet(ctx, z, y, zprime, m_hat, that, tstar)


def verify_braid(ctx: QContext) -> bool:
    """Exact braid relation That Tstar That == Tstar That Tstar in GL_N(Q(X))."""
    rs = build_repset(ctx)
    return _braid_holds(rs.t_hat, rs.tstar_hat)


def _braid_holds(t: FMatrix, tstar: FMatrix) -> bool:
    lhs = fm_mul(fm_mul(t, tstar), t)
    rhs = fm_mul(fm_mul(tstar, t), tstar)
    return fm_eq(lhs, rhs)


def rep_of_word(w, ctx: QContext) -> FMatrix:
    """Image of a mapping-class word: the ordered product of That/Tstar powers,
    with negative exponents through the exact inverse."""
    rs = build_repset(ctx)
    return rep_of_word_in(w, rs)


@lru_cache(maxsize=None)
def _gen_inverse(ctx: QContext, which: str) -> FMatrix:
    rs = build_repset(ctx)
    return fm_inv(rs.t_hat if which == "t" else rs.tstar_hat)


def rep_of_word_in(w, rs: RepSet) -> FMatrix:
    from .mcg import Gen  # deferred: mcg has no dependency on this module

    out = FMatrix.identity(rs.ctx.N)
    for gen, exp in w.letters:
        if exp > 0:
            base = rs.t_hat if gen is Gen.TY else rs.tstar_hat
        else:
            base = _gen_inverse(rs.ctx, "t" if gen is Gen.TY else "ts")
        for _ in range(abs(exp)):
            out = fm_mul(out, base)
    return out


def classical_limit(mat: FMatrix):
    """Entrywise exact evaluation at X = -1; the PoleError names the entry."""
    out = []
    for i, row in enumerate(mat.rows):
        vals = []
        for j, e in enumerate(row):
            try:
                vals.append(e.eval_exact(-1))
            except PoleError:
                raise PoleError(f"entry ({i}, {j}) has a pole at X = -1", entry=(i, j))
        out.append(tuple(vals))
    return tuple(out)


def rational_matrix_eq(a, b) -> bool:
    """Exact equality of two rational matrices given as nested sequences."""
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        for x, y in zip(ra, rb):
            if Fraction(x) != Fraction(y):
                return False
    return True
