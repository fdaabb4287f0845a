"""Central real hyperplane arrangements with exact rational normals.

Faces are enumerated as covectors with an exact witness point each.  The
witnesses double as the fixed points x(F) used by the Salvetti embedding.

Two flavours of arrangement share one face-poset interface:

* :class:`Arrangement` -- rational normals, optional Gram matrix for the inner
  product used by reflections.
* :class:`DihedralFan` -- m lines through the origin described purely
  combinatorially (no witnesses), for dihedral types without a rational
  realization.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from . import linalg
from .signs import SignVector, restrict, sign_leq

DEFAULT_CAP = 12


class EnumerationCapError(ValueError):
    pass


class NotAFaceError(ValueError):
    pass


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "normal", linalg.as_fractions(self.normal))
        if not any(self.normal):
            raise ValueError("hyperplane normal must be nonzero")

    def __call__(self, x: Sequence) -> Fraction:
        return linalg.dot(self.normal, x)


@dataclass(frozen=True)
class Face:
    covector: SignVector
    witness: tuple[Fraction, ...] | None
    codim: int

    @property
    def is_chamber(self) -> bool:
        return self.covector.is_tope

    def __str__(self) -> str:
        return str(self.covector)


class FacePoset:
    """Faces of an arrangement ordered by sign_leq on their covectors."""

    def __init__(self, faces: Iterable[Face], essential: bool, geometric: bool):
        self.faces: tuple[Face, ...] = tuple(sorted(faces, key=lambda f: str(f.covector)))
        self.by_covector = {f.covector: f for f in self.faces}
        self.essential = essential
        self.geometric = geometric
        self.n = len(self.faces[0].covector) if self.faces else 0

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def __contains__(self, X) -> bool:
        return X in self.by_covector

    def __getitem__(self, X: SignVector) -> Face:
        return self.by_covector[X]

    @cached_property
    def covectors(self) -> tuple[SignVector, ...]:
        return tuple(f.covector for f in self.faces)

    @cached_property
    def chambers(self) -> tuple[Face, ...]:
        return tuple(f for f in self.faces if f.is_chamber)

    def leq(self, X: SignVector, Y: SignVector) -> bool:
        return sign_leq(X, Y)

    @cached_property
    def covering_relations(self) -> tuple[tuple[SignVector, SignVector], ...]:
        # face posets are graded by codim, so covers are comparable pairs one codim apart
        out = []
        for a in self.faces:
            for b in self.faces:
                if a.codim == b.codim + 1 and sign_leq(a.covector, b.covector):
                    out.append((a.covector, b.covector))
        return tuple(out)

    def counts_by_codim(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for f in self.faces:
            counts[f.codim] = counts.get(f.codim, 0) + 1
        return dict(sorted(counts.items()))

    def rank_edges(self) -> int:
        """Length of a longest chain counted in covering steps."""
        return max(f.codim for f in self.faces) - min(f.codim for f in self.faces)

    def rank_elements(self) -> int:
        """Length of a longest chain counted in elements."""
        return self.rank_edges() + 1


# -- geometric arrangements --------------------------------------------------


@dataclass(frozen=True, eq=False)
class Arrangement:
    hyperplanes: tuple[Hyperplane, ...]
    dimension: int
    gram: tuple[tuple[Fraction, ...], ...] | None = None
    cap: int = DEFAULT_CAP

    geometric = True

    def __post_init__(self):
        hs = tuple(h if isinstance(h, Hyperplane) else Hyperplane(h) for h in self.hyperplanes)
        object.__setattr__(self, "hyperplanes", hs)
        if not hs:
            raise ValueError("arrangement needs at least one hyperplane")
        for h in hs:
            if len(h.normal) != self.dimension:
                raise ValueError(f"normal {h.normal} does not have length {self.dimension}")
        for (i, a), (j, b) in combinations(enumerate(hs), 2):
            if linalg.proportional(a.normal, b.normal) is not None:
                raise ValueError(f"hyperplanes {i + 1} and {j + 1} coincide")
        if self.gram is not None:
            g = tuple(linalg.as_fractions(r) for r in self.gram)
            if len(g) != self.dimension or any(len(r) != self.dimension for r in g):
                raise ValueError("gram matrix has wrong shape")
            if any(g[i][j] != g[j][i] for i in range(self.dimension) for j in range(i)):
                raise ValueError("gram matrix must be symmetric")
            object.__setattr__(self, "gram", g)

    @classmethod
    def from_normals(cls, normals: Iterable[Sequence], gram=None, cap: int = DEFAULT_CAP) -> Arrangement:
        normals = [linalg.as_fractions(v) for v in normals]
        return cls(tuple(Hyperplane(v) for v in normals), len(normals[0]), gram, cap)

    @property
    def n(self) -> int:
        return len(self.hyperplanes)

    @property
    def normals(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(h.normal for h in self.hyperplanes)

    def __repr__(self) -> str:
        return f"Arrangement(n={self.n}, dimension={self.dimension})"

    @cached_property
    def essential(self) -> bool:
        return linalg.rank(self.normals, self.dimension) == self.dimension

    def codim_of(self, X: SignVector) -> int:
        zs = [self.normals[j] for j in X.zero_set]
        return linalg.rank(zs, self.dimension) if zs else 0

    def covector_of_point(self, x: Sequence) -> SignVector:
        if len(x) != self.dimension:
            raise ValueError(f"point has length {len(x)}, expected {self.dimension}")
        return SignVector(_sign(h(x)) for h in self.hyperplanes)

    def feasible_witness(self, X: SignVector | str, upto: int | None = None) -> tuple[Fraction, ...] | None:
        """Exact point realizing X on the first ``upto`` hyperplanes (all by default)."""
        X = SignVector(X)
        hs = self.hyperplanes[: upto if upto is not None else self.n]
        if len(X) != len(hs):
            raise ValueError(f"sign vector has length {len(X)}, expected {len(hs)}")
        eqs = [h.normal for h, s in zip(hs, X) if s == 0]
        # strict sides become >= 1 / <= -1 by homogeneity of the open cone
        ineqs = [
            (tuple(s * c for c in h.normal), Fraction(1)) for h, s in zip(hs, X) if s != 0
        ]
        return linalg.feasible_point(eqs, ineqs, self.dimension)

    def faces(self) -> FacePoset:
        return self._faces

    @cached_property
    def _faces(self) -> FacePoset:
        return enumerate_faces(self)

    def reflection(self, j: int):
        from .groups import reflection_of

        return reflection_of(self, j)


def covector_of_point(A: Arrangement, x: Sequence) -> SignVector:
    return A.covector_of_point(x)


def feasible_witness(A: Arrangement, X: SignVector | str) -> tuple[Fraction, ...] | None:
    return A.feasible_witness(X)


def enumerate_faces(A: Arrangement, cap: int | None = None) -> FacePoset:
    """All realizable covectors of A with exact witnesses.

    Candidates are grown one hyperplane at a time; a prefix that is infeasible
    for the first k hyperplanes cannot extend to a face, so this explores the
    same 3^n candidate space without visiting dead branches.
    """
    cap = A.cap if cap is None else cap
    if A.n > cap:
        raise EnumerationCapError(f"arrangement has {A.n} hyperplanes, above the enumeration cap {cap}")
    prefixes: list[SignVector] = [SignVector(())]
    for k in range(1, A.n + 1):
        grown = []
        for p in prefixes:
            for s in (1, -1, 0):
                X = SignVector(p + (s,))
                if A.feasible_witness(X, upto=k) is not None:
                    grown.append(X)
        prefixes = grown
    faces = []
    for X in prefixes:
        x = A.feasible_witness(X)
        assert x is not None and A.covector_of_point(x) == X
        faces.append(Face(X, x, A.codim_of(X)))
    return FacePoset(faces, essential=A.essential, geometric=True)


def is_essential(A) -> bool:
    return A.essential


def chambers(A) -> tuple[Face, ...]:
    return A.faces().chambers


def _as_face(A, F) -> Face:
    P = A.faces()
    key = F.covector if isinstance(F, Face) else SignVector(F)
    if key not in P:
        raise NotAFaceError(f"{key} is not a face")
    return P[key]


def subarrangement_at(A, F) -> tuple[Arrangement | None, tuple[int, ...]]:
    """Hyperplanes containing F and their 1-based positions in A.

    Returns ``(None, ())`` when F is a chamber (empty subarrangement) and
    ``(None, indices)`` for combinatorial arrangements.
    """
    F = _as_face(A, F)
    idx = F.covector.zero_set
    positions = tuple(i + 1 for i in idx)
    if not idx or not A.geometric:
        return None, positions
    sub = Arrangement(
        tuple(A.hyperplanes[i] for i in idx), A.dimension, A.gram, A.cap
    )
    return sub, positions


def restrict_chamber(A, F, C) -> SignVector:
    """C_F: the chamber covector of A_F containing C, listed over F's zero set."""
    F, C = _as_face(A, F), _as_face(A, C)
    if not C.is_chamber:
        raise NotAFaceError(f"{C.covector} is not a chamber")
    return restrict(C.covector, F.covector.zero_set)


def unique_extension(A, F, D: SignVector | str) -> Face:
    """The chamber C >= F with C_F = D."""
    F = _as_face(A, F)
    D = SignVector(D)
    zs = F.covector.zero_set
    if len(D) != len(zs) or not D.is_tope:
        raise NotAFaceError(f"{D} is not a chamber covector over {len(zs)} hyperplanes")
    entries = list(F.covector)
    for pos, s in zip(zs, D):
        entries[pos] = s
    C = SignVector(entries)
    P = A.faces()
    if C not in P:
        raise NotAFaceError(f"{D} is not a chamber of the subarrangement at {F.covector}")
    return P[C]


def walls(A, C) -> tuple[int, ...]:
    """1-based indices of the walls of chamber C."""
    C = _as_face(A, C)
    if not C.is_chamber:
        raise NotAFaceError(f"{C.covector} is not a chamber")
    P = A.faces()
    out = []
    for j in range(len(C.covector)):
        X = list(C.covector)
        X[j] = 0
        X = SignVector(X)
        if X in P and P[X].codim == 1:
            out.append(j + 1)
    return tuple(out)


def adjacency_graph(A) -> dict[tuple[SignVector, SignVector], int]:
    """Edges {C, C'} (as sorted covector pairs) labelled by the 1-based wall index."""
    P = A.faces()
    edges = {}
    for C in P.chambers:
        for j in walls(A, C):
            other = list(C.covector)
            other[j - 1] = -other[j - 1]
            D = SignVector(other)
            key = tuple(sorted((C.covector, D), key=str))
            edges[key] = j
    return dict(sorted(edges.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1]))))


def opposite_chamber_neighbor(C: SignVector, j: int) -> SignVector:
    """Flip coordinate j (1-based) of a chamber covector."""
    out = list(C)
    out[j - 1] = -out[j - 1]
    return SignVector(out)


# -- constructors ------------------------------------------------------------


def braid_arrangement(ell: int, essentialize: bool = False, cap: int = DEFAULT_CAP) -> Arrangement:
    """Hyperplanes x_i = x_j (i < j), positive side x_i > x_j, in lexicographic order.

    With ``essentialize`` the arrangement is written in the basis
    e_k - e_{k+1} of the sum-zero subspace; the Gram matrix of that basis is
    kept so reflections stay orthogonal.
    """
    if ell < 2:
        raise ValueError("braid arrangement needs ell >= 2")
    pairs = list(combinations(range(ell), 2))
    if not essentialize:
        normals = []
        for i, j in pairs:
            v = [0] * ell
            v[i], v[j] = 1, -1
            normals.append(v)
        return Arrangement.from_normals(normals, cap=cap)
    basis = []
    for k in range(ell - 1):
        v = [0] * ell
        v[k], v[k + 1] = 1, -1
        basis.append(v)
    normals = [[b[i] - b[j] for b in basis] for i, j in pairs]
    gram = [[sum(x * y for x, y in zip(a, b)) for b in basis] for a in basis]
    return Arrangement.from_normals(normals, gram=gram, cap=cap)


def coordinate_arrangement(dim: int = 2) -> Arrangement:
    """Coordinate hyperplanes x_k = 0 with positive half-axes as positive sides."""
    return Arrangement.from_normals([[int(i == j) for j in range(dim)] for i in range(dim)])


_HEX_GRAM = ((2, -1), (-1, 2))


def dihedral_arrangement(m: int):
    """Rank-2 arrangement of m lines with dihedral symmetry of order 2m.

    m = 2, 3, 4, 6 come with rational normals (3 and 6 in the hexagonal
    lattice metric); every other m is returned as a :class:`DihedralFan`.
    """
    if m < 2:
        raise ValueError("dihedral arrangement needs m >= 2")
    if m == 2:
        return coordinate_arrangement(2)
    if m == 3:
        return braid_arrangement(3, essentialize=True)
    if m == 4:
        # lines at angles 0, 45, 90, 135 degrees, positive side counterclockwise
        return Arrangement.from_normals([(0, 1), (-1, 1), (-1, 0), (-1, -1)])
    if m == 6:
        # lines at 30-degree steps in the basis b1, b2 with |b| = sqrt2, angle 120
        return Arrangement.from_normals(
            [(-1, 2), (0, 1), (1, 1), (1, 0), (2, -1), (1, -1)], gram=_HEX_GRAM
        )
    return DihedralFan(m)


# -- combinatorial dihedral fan ------------------------------------------------


class DihedralFan:
    """m lines through the origin at angles k*pi/m, known only by covectors.

    The form of line k is sin(phi - k*pi/m) on the ray at angle phi, so all
    signs reduce to integer arithmetic on multiples of pi/(2m).
    """

    geometric = False
    essential = True
    dimension = 2

    def __init__(self, m: int):
        if m < 2:
            raise ValueError("need m >= 2")
        self.m = m
        self.n = m
        self.cap = DEFAULT_CAP

    def __repr__(self) -> str:
        return f"DihedralFan(m={self.m})"

    def _covector_at(self, t: int) -> SignVector:
        # direction at angle t*pi/(2m); line k sits at 2k in the same units
        out = []
        for k in range(self.m):
            d = (t - 2 * k) % (4 * self.m)
            out.append(0 if d % (2 * self.m) == 0 else (1 if d < 2 * self.m else -1))
        return SignVector(out)

    def faces(self) -> FacePoset:
        return self._faces

    @cached_property
    def _faces(self) -> FacePoset:
        faces = [Face(SignVector.zero(self.m), None, 2)]
        for t in range(4 * self.m):
            faces.append(Face(self._covector_at(t), None, 0 if t % 2 else 1))
        return FacePoset(faces, essential=True, geometric=False)

    def codim_of(self, X: SignVector) -> int:
        return self.faces()[X].codim

    def fan_direction(self, X: SignVector) -> int:
        """Angle index t (units of pi/(2m)) of a nonzero face."""
        for t in range(4 * self.m):
            if self._covector_at(t) == X:
                return t
        raise NotAFaceError(str(X))

    def reflection(self, j: int):
        from .groups import reflection_of

        return reflection_of(self, j)


# -- sampling oracle ----------------------------------------------------------


def sample_covectors(A: Arrangement, seed: int = 0, samples: int = 10_000, radius: int = 10**6) -> set[SignVector]:
    """Covectors hit by random rational points, independent of the LP path.

    Half the budget goes to the ambient space, the rest to random points on
    every intersection of one, two or three hyperplanes (and the common
    intersection of all of them).
    """
    rng = random.Random(seed)
    flats: list[list[tuple]] = [[]]
    subsets: set[tuple[int, ...]] = set()
    for r in (1, 2, 3):
        subsets.update(combinations(range(A.n), r))
    subsets.add(tuple(range(A.n)))
    seen_bases = set()
    for S in sorted(subsets):
        basis = linalg.nullspace([A.normals[i] for i in S], A.dimension)
        key = tuple(basis)
        if key in seen_bases:
            continue
        seen_bases.add(key)
        flats.append(basis)
    # positive integer rescaling keeps every sign and every span, and lets the
    # inner loop run on plain ints
    normals = [_integral(v) for v in A.normals]
    found: set[SignVector] = set()
    per_flat = max(1, (samples // 2) // max(1, len(flats) - 1))
    budget = [(None, samples // 2)] + [(b and [_integral(v) for v in b], per_flat) for b in flats[1:]]
    for basis, count in budget:
        for _ in range(count):
            if basis is None:
                x = [rng.randint(-radius, radius) for _ in range(A.dimension)]
            elif not basis:
                x = [0] * A.dimension
            else:
                coeffs = [rng.randint(-radius, radius) for _ in basis]
                x = [sum(c * v[k] for c, v in zip(coeffs, basis)) for k in range(A.dimension)]
            found.add(SignVector(_sign(sum(a * b for a, b in zip(h, x))) for h in normals))
    return found


def _integral(v) -> tuple[int, ...]:
    """A positive integer multiple of a rational vector."""
    den = math.lcm(*(Fraction(c).denominator for c in v))
    return tuple(int(Fraction(c) * den) for c in v)


def fan_order(A, C0: SignVector) -> list[tuple[SignVector, int]]:
    """Chambers of a rank-2 arrangement in cyclic order starting at C0.

    The walk crosses the first wall of C0, then always the wall not just
    crossed.  Returns ``[(chamber, wall crossed to leave it), ...]``.
    """
    C0 = SignVector(C0)
    out = []
    C, last = C0, None
    while True:
        ws = walls(A, C)
        if len(ws) != 2:
            raise ValueError("fan order needs every chamber to have exactly two walls")
        j = ws[0] if last is None else (ws[1] if ws[0] == last else ws[0])
        out.append((C, j))
        C, last = opposite_chamber_neighbor(C, j), j
        if C == C0:
            return out
        if len(out) > len(A.faces().chambers):
            raise RuntimeError("fan walk did not close up")


def effective_rank(A) -> int:
    P = A.faces()
    return max(f.codim for f in P.faces)


__all__ = [
    "Arrangement",
    "DihedralFan",
    "EnumerationCapError",
    "Face",
    "FacePoset",
    "Hyperplane",
    "NotAFaceError",
    "adjacency_graph",
    "braid_arrangement",
    "chambers",
    "coordinate_arrangement",
    "covector_of_point",
    "dihedral_arrangement",
    "enumerate_faces",
    "fan_order",
    "feasible_witness",
    "is_essential",
    "restrict_chamber",
    "sample_covectors",
    "subarrangement_at",
    "unique_extension",
    "walls",
]
