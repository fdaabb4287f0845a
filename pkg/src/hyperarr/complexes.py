"""Posets, simplicial and regular cell complexes, and integer homology.

Homology is computed over Z from Smith normal form.  Boundary matrices are
stored sparsely (one ``{row: value}`` dict per column) because the order
complexes built here are mostly unit entries and eliminate cleanly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Hashable, Iterable, Mapping, Sequence


class Poset:
    """Finite poset on hashable elements.

    ``leq`` is evaluated once per ordered pair; afterwards the order lives in
    the strict up-set table.  When ``grade`` is supplied the covering relation
    is read off as comparable pairs one grade apart.
    """

    def __init__(
        self,
        elements: Iterable[Hashable],
        leq: Callable[[Hashable, Hashable], bool],
        grade: Mapping[Hashable, int] | None = None,
    ):
        self.elements = tuple(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("poset elements must be distinct")
        n = len(self.elements)
        self.above: list[frozenset[int]] = []
        for i, a in enumerate(self.elements):
            self.above.append(frozenset(j for j, b in enumerate(self.elements) if i != j and leq(a, b)))
        for i in range(n):
            for j in self.above[i]:
                if i in self.above[j]:
                    raise ValueError(f"antisymmetry fails for {self.elements[i]!r}, {self.elements[j]!r}")
        self.grade = dict(grade) if grade is not None else None

    def __len__(self) -> int:
        return len(self.elements)

    def less(self, a, b) -> bool:
        return self.index[b] in self.above[self.index[a]]

    def leq(self, a, b) -> bool:
        return a == b or self.less(a, b)

    def check_transitive(self) -> bool:
        return all(self.above[j] <= self.above[i] for i in range(len(self)) for j in self.above[i])

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Covering pairs (i, j) with element i covered by element j."""
        out = []
        for i, up in enumerate(self.above):
            if self.grade is not None:
                gi = self.grade[self.elements[i]]
                out.extend((i, j) for j in sorted(up) if self.grade[self.elements[j]] == gi + 1)
            else:
                out.extend((i, j) for j in sorted(up) if not any(j in self.above[k] for k in up))
        return tuple(out)

    def dual(self) -> Poset:
        grade = None if self.grade is None else {e: -g for e, g in self.grade.items()}
        return Poset(self.elements, lambda a, b: self.leq(b, a), grade)


@dataclass(frozen=True)
class AbstractSimplicialComplex:
    """Simplices are sorted tuples of vertex IDs (ints), grouped by dimension."""

    vertices: tuple
    simplices: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def from_simplices(cls, vertices: Sequence, simplices: Iterable[Iterable[int]]) -> AbstractSimplicialComplex:
        by_dim: dict[int, set] = {}
        for s in simplices:
            s = tuple(sorted(s))
            if s:
                by_dim.setdefault(len(s) - 1, set()).add(s)
        top = max(by_dim) if by_dim else -1
        return cls(tuple(vertices), tuple(tuple(sorted(by_dim.get(d, ()))) for d in range(top + 1)))

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    def counts(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.simplices)

    def all_simplices(self) -> list[tuple[int, ...]]:
        return [s for layer in self.simplices for s in layer]

    def is_downward_closed(self) -> bool:
        present = set(self.all_simplices())
        for s in present:
            for r in range(1, len(s)):
                if any(f not in present for f in combinations(s, r)):
                    return False
        return True

    def face_poset(self) -> Poset:
        simplices = self.all_simplices()
        return Poset(simplices, lambda a, b: set(a) <= set(b), {s: len(s) - 1 for s in simplices})


@dataclass(frozen=True)
class RegularCellComplexModel:
    """A regular CW complex recorded by its face poset and cell dimensions."""

    poset: Poset
    dims: tuple[int, ...]

    def counts(self) -> tuple[int, ...]:
        top = max(self.dims)
        return tuple(sum(1 for d in self.dims if d == k) for k in range(top + 1))

    def barycentric_subdivision(self) -> AbstractSimplicialComplex:
        return order_complex(self.poset)


@dataclass
class ChainComplex:
    """Free chain groups of the given ranks with boundary maps d_k: C_k -> C_{k-1}.

    ``boundaries[k]`` is the sparse matrix of d_k as a list of columns (one per
    basis element of C_k), each a ``{row: value}`` dict; ``boundaries[0]`` is
    the zero map.
    """

    ranks: tuple[int, ...]
    boundaries: list[list[dict[int, int]]] = field(default_factory=list)

    def dense(self, k: int) -> list[list[int]]:
        rows = self.ranks[k - 1] if k >= 1 else 0
        M = [[0] * self.ranks[k] for _ in range(rows)]
        for c, col in enumerate(self.boundaries[k]):
            for r, v in col.items():
                M[r][c] = v
        return M

    def composition_is_zero(self) -> bool:
        for k in range(2, len(self.ranks)):
            lower = self.boundaries[k - 1]
            for col in self.boundaries[k]:
                acc: dict[int, int] = {}
                for r, v in col.items():
                    for rr, vv in lower[r].items():
                        acc[rr] = acc.get(rr, 0) + v * vv
                if any(acc.values()):
                    return False
        return True


class BoundaryError(ValueError):
    pass


def order_complex(P: Poset) -> AbstractSimplicialComplex:
    """Chains of P as simplices; vertex IDs are positions in ``P.elements``."""
    chains: list[tuple[int, ...]] = []

    def extend(chain: tuple[int, ...]):
        chains.append(chain)
        for j in sorted(P.above[chain[-1]]):
            extend(chain + (j,))

    for i in range(len(P)):
        extend((i,))
    return AbstractSimplicialComplex.from_simplices(P.elements, chains)


def barycentric_subdivision(K: AbstractSimplicialComplex) -> AbstractSimplicialComplex:
    return order_complex(K.face_poset())


def nerve(family: Sequence[Iterable]) -> AbstractSimplicialComplex:
    """One vertex per set, one simplex per subfamily with a common element."""
    sets = [frozenset(s) for s in family]
    simplices: list[tuple[int, ...]] = []

    def grow(simplex: tuple[int, ...], common: frozenset):
        simplices.append(simplex)
        for j in range(simplex[-1] + 1, len(sets)):
            meet = common & sets[j]
            if meet:
                grow(simplex + (j,), meet)

    for i, s in enumerate(sets):
        if s:
            grow((i,), s)
    return AbstractSimplicialComplex.from_simplices(tuple(range(len(sets))), simplices)


def euler_characteristic(K) -> int:
    return sum((-1) ** k * c for k, c in enumerate(K.counts()))


def boundary_matrices(K: AbstractSimplicialComplex) -> ChainComplex:
    index = [{s: i for i, s in enumerate(layer)} for layer in K.simplices]
    boundaries: list[list[dict[int, int]]] = [[{} for _ in K.simplices[0]]] if K.simplices else []
    for k in range(1, len(K.simplices)):
        cols = []
        for s in K.simplices[k]:
            col = {}
            for i in range(len(s)):
                col[index[k - 1][s[:i] + s[i + 1:]]] = -1 if i % 2 else 1
            cols.append(col)
        boundaries.append(cols)
    C = ChainComplex(K.counts(), boundaries)
    if not C.composition_is_zero():
        raise BoundaryError("boundary of boundary is nonzero")
    return C


# -- Smith normal form ---------------------------------------------------------


def _dense_snf_diagonal(M: list[list[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form of a dense integer matrix."""
    A = [row[:] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    for row in A:
                        row[j] -= q * row[t]
                    if A[t][j]:
                        done = False
            if done:
                # pivot must divide the rest of the block
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                A[t] = [x + y for x, y in zip(A[t], A[bad[0]])]
                continue
            # move the smallest nonzero entry of row/column t onto the pivot
            cands = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            cands += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, pi, pj = min(cands)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def smith_diagonal(columns: list[dict[int, int]], nrows: int) -> list[int]:
    """Invariant factors (nonzero SNF diagonal, divisibility-ordered) of a sparse matrix.

    Unit pivots are eliminated sparsely first; whatever is left has no +-1
    entry and goes through the dense routine.
    """
    rows: dict[int, dict[int, int]] = {}
    for c, col in enumerate(columns):
        for r, v in col.items():
            if v:
                rows.setdefault(r, {})[c] = v
    cols: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)

    units = 0
    for pc in sorted(cols):
        cands = [(len(rows[r]), r) for r in cols[pc] if rows[r][pc] in (1, -1)]
        if not cands:
            continue
        _, pr = min(cands)
        prow = rows.pop(pr)
        pv = prow[pc]
        for c in prow:
            cols[c].discard(pr)
        for r in list(cols[pc]):
            row = rows[r]
            f = row[pc] * pv  # pv is a unit, so dividing by it is multiplying
            for c, v in prow.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    if c not in row:
                        cols[c].add(r)
                    row[c] = nv
                elif c in row:
                    del row[c]
                    cols[c].discard(r)
            if not row:
                del rows[r]
        units += 1

    rest = [r for r in rows if rows[r]]
    diag = [1] * units
    if rest:
        cidx = sorted({c for r in rest for c in rows[r]})
        pos = {c: i for i, c in enumerate(cidx)}
        dense = [[0] * len(cidx) for _ in rest]
        for i, r in enumerate(rest):
            for c, v in rows[r].items():
                dense[i][pos[c]] = v
        diag += _dense_snf_diagonal(dense)
    return _invariant_factors(diag)


def _invariant_factors(diag: list[int]) -> list[int]:
    ones = sum(1 for x in diag if x == 1)
    d = sorted(x for x in diag if x > 1)
    # enforce d_1 | d_2 | ... via gcd/lcm passes
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = math.gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return [1] * ones + sorted(x for x in d if x > 1)


@dataclass(frozen=True)
class HomologyGroup:
    betti: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = ["Z"] * self.betti + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def homology(C: ChainComplex) -> list[HomologyGroup]:
    if not C.composition_is_zero():
        raise BoundaryError("boundary of boundary is nonzero")
    top = len(C.ranks)
    factors = [[] for _ in range(top + 1)]
    for k in range(1, top):
        factors[k] = smith_diagonal(C.boundaries[k], C.ranks[k - 1])
    out = []
    for k in range(top):
        rank_out = len(factors[k]) if k >= 1 else 0
        rank_in = len(factors[k + 1]) if k + 1 < top else 0
        betti = C.ranks[k] - rank_out - rank_in
        torsion = tuple(f for f in (factors[k + 1] if k + 1 < top else []) if f > 1)
        out.append(HomologyGroup(betti, torsion))
    return out


def betti_numbers(C: ChainComplex) -> tuple[int, ...]:
    return tuple(h.betti for h in homology(C))


def simplicial_homology(K: AbstractSimplicialComplex) -> list[HomologyGroup]:
    return homology(boundary_matrices(K))


def cell_complex_from_poset(P: Poset, dim: Mapping[Hashable, int]) -> RegularCellComplexModel:
    for i, j in ((i, j) for i in range(len(P)) for j in P.above[i]):
        if dim[P.elements[i]] >= dim[P.elements[j]]:
            raise ValueError(
                f"dimension must increase along the order: {P.elements[i]!r} < {P.elements[j]!r}"
            )
    return RegularCellComplexModel(P, tuple(dim[e] for e in P.elements))


def cell_homology(X: RegularCellComplexModel) -> list[HomologyGroup]:
    """Homology of a regular cell complex via its barycentric subdivision."""
    return simplicial_homology(X.barycentric_subdivision())
