"""Exact rational linear algebra and Fourier-Motzkin feasibility."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]


def as_fractions(v: Sequence) -> Vector:
    return tuple(Fraction(x) for x in v)


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def mat_vec(M: Sequence[Sequence], v: Sequence) -> Vector:
    return tuple(dot(row, v) for row in M)


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> tuple[Vector, ...]:
    cols = list(zip(*B))
    return tuple(tuple(dot(row, col) for col in cols) for row in A)


def transpose(M: Sequence[Sequence]) -> tuple[Vector, ...]:
    return tuple(tuple(col) for col in zip(*M))


def identity(n: int) -> tuple[Vector, ...]:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    M = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    return len(rref(rows, ncols if ncols is not None else len(rows[0]))[1])


def _integral(v: Sequence[Fraction]) -> Vector:
    den = math.lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * den) for x in v]
    g = math.gcd(*ints) or 1
    return tuple(Fraction(x // g) for x in ints)


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of {x : row . x = 0 for all rows}, scaled to primitive integer vectors."""
    R, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(_integral(v))
    return basis


def proportional(a: Sequence, b: Sequence) -> Fraction | None:
    """Return c with a = c*b (c != 0), or None."""
    c = None
    for x, y in zip(a, b):
        if y == 0:
            if x != 0:
                return None
            continue
        q = Fraction(x) / Fraction(y)
        if q == 0 or (c is not None and q != c):
            return None
        c = q
    return c


def solve(A: Sequence[Sequence], b: Sequence) -> Vector:
    """Solve a square nonsingular system exactly."""
    n = len(A)
    R, pivots = rref([list(row) + [bi] for row, bi in zip(A, b)], n)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return tuple(row[n] for row in R)


def inverse(A: Sequence[Sequence]) -> tuple[Vector, ...]:
    n = len(A)
    cols = [solve(A, [Fraction(int(i == j)) for i in range(n)]) for j in range(n)]
    return transpose(cols)


# -- Fourier-Motzkin ---------------------------------------------------------

Constraint = tuple[Vector, Fraction]  # coeffs . t >= bound


def _normalize(c: Vector, b: Fraction) -> Constraint:
    scale = max(abs(x) for x in c)
    return tuple(x / scale for x in c), b / scale


def _eliminate(system: list[Constraint], v: int) -> list[Constraint] | None:
    """Project out variable v; None if a trivial contradiction appears."""
    lower, upper, rest = [], [], []
    for c, b in system:
        (lower if c[v] > 0 else upper if c[v] < 0 else rest).append((c, b))
    out: set[Constraint] = set()
    for c, b in rest:
        trimmed = c[:v] + c[v + 1:]
        if any(trimmed):
            out.add(_normalize(trimmed, b))
        elif b > 0:
            return None
    for cl, bl in lower:
        for cu, bu in upper:
            sl, su = cl[v], -cu[v]
            c = tuple(x / sl + y / su for x, y in zip(cl, cu))
            b = bl / sl + bu / su
            c = c[:v] + c[v + 1:]
            if any(c):
                out.add(_normalize(c, b))
            elif b > 0:
                return None
    return sorted(out)


def _pick(lo: Fraction | None, hi: Fraction | None) -> Fraction:
    if lo is not None and hi is not None:
        if math.ceil(lo) <= hi:
            # smallest-magnitude integer in range keeps witnesses readable
            if lo <= 0 <= hi:
                return Fraction(0)
            return Fraction(math.ceil(lo)) if lo > 0 else Fraction(math.floor(hi))
        return (lo + hi) / 2
    if lo is not None:
        return Fraction(max(0, math.ceil(lo)))
    if hi is not None:
        return Fraction(min(0, math.floor(hi)))
    return Fraction(0)


def fm_feasible_point(system: Sequence[Constraint], nvars: int) -> Vector | None:
    """A point satisfying every ``coeffs . t >= bound``, or None if infeasible."""
    stages = [[(tuple(Fraction(x) for x in c), Fraction(b)) for c, b in system]]
    for v in range(nvars - 1, -1, -1):
        nxt = _eliminate(stages[-1], v)
        if nxt is None:
            return None
        stages.append(nxt)
    # stages[k] involves variables 0 .. nvars-1-k
    t: list[Fraction] = []
    for v in range(nvars):
        lo = hi = None
        for c, b in stages[nvars - 1 - v]:
            rhs = b - sum((c[u] * t[u] for u in range(v)), Fraction(0))
            if c[v] > 0:
                q = rhs / c[v]
                lo = q if lo is None or q > lo else lo
            elif c[v] < 0:
                q = rhs / c[v]
                hi = q if hi is None or q < hi else hi
            elif rhs > 0:
                return None
        if lo is not None and hi is not None and lo > hi:
            return None
        t.append(_pick(lo, hi))
    return tuple(t)


def feasible_point(
    equalities: Sequence[Sequence], inequalities: Sequence[Constraint], dim: int
) -> Vector | None:
    """Exact point x in Q^dim with a.x = 0 for each equality row and a.x >= b per inequality."""
    basis = nullspace(equalities, dim) if equalities else [
        tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)
    ]
    k = len(basis)
    reduced = [(tuple(dot(a, n) for n in basis), Fraction(b)) for a, b in inequalities]
    if k == 0:
        if any(b > 0 for _, b in reduced):
            return None
        return tuple(Fraction(0) for _ in range(dim))
    t = fm_feasible_point(reduced, k)
    if t is None:
        return None
    return tuple(sum((ti * n[j] for ti, n in zip(t, basis)), Fraction(0)) for j in range(dim))
