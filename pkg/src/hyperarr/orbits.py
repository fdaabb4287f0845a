"""Salvetti complexes modulo a reflection group, and Artin presentations.

For rank-2 arrangements the quotient has one vertex, one 2-cell and one edge
per wall of the base chamber; the 2-cell's attaching word is read off the
boundary of the top cell |(0, C0)|, walking the chambers in fan order.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from fractions import Fraction

from . import complexes, linalg
from .arrangement import effective_rank, fan_order
from .groups import ReflectionGroup, act_on_sal, invariant_witnesses
from .salvetti import SalCell, SalPoset
from .signs import SignVector, compose

Letter = tuple[int, int]  # (generator number, exponent +-1)


class RankError(ValueError):
    pass


@dataclass(frozen=True)
class Orbit:
    representative: SalCell
    members: tuple[SalCell, ...]

    @property
    def dim(self) -> int:
        return self.representative.dim


@dataclass(frozen=True)
class OrbitCellComplexModel:
    orbits: tuple[Orbit, ...]
    # (higher orbit id, lower orbit id) -> number of cells of the lower orbit
    # covered by the representative of the higher one
    incidence: dict[tuple[int, int], int]
    relator: tuple[Letter, ...] | None = None
    generators: tuple[str, ...] = ()

    def histogram(self) -> tuple[int, ...]:
        top = max(o.dim for o in self.orbits)
        return tuple(sum(1 for o in self.orbits if o.dim == k) for k in range(top + 1))

    def orbit_of(self, c: SalCell) -> int:
        for i, o in enumerate(self.orbits):
            if c in o.members:
                return i
        raise KeyError(str(c))


def _letters(k: int) -> tuple[str, ...]:
    if k > 26:
        return tuple(f"g{i + 1}" for i in range(k))
    return tuple(string.ascii_lowercase[:k])


def quotient_sal(S: SalPoset, W: ReflectionGroup) -> OrbitCellComplexModel:
    cells = set(S.cells)
    remaining = set(S.cells)
    orbits = []
    for c in S.cells:
        if c not in remaining:
            continue
        members = set()
        for g in W.elements:
            d = act_on_sal(g, c)
            if d not in cells:
                raise ValueError(f"group element maps {c} outside Sal(A)")
            members.add(d)
        remaining -= members
        ms = tuple(sorted(members, key=lambda x: x.key))
        orbits.append(Orbit(ms[0], ms))
    orbits.sort(key=lambda o: (o.dim, o.representative.key))
    where = {m: i for i, o in enumerate(orbits) for m in o.members}
    incidence: dict[tuple[int, int], int] = {}
    for lo, hi in S.covering_relations():
        i = where[hi]
        if orbits[i].representative == hi:
            key = (i, where[lo])
            incidence[key] = incidence.get(key, 0) + 1
    relator = None
    if S.arrangement.essential and effective_rank(S.arrangement) == 2:
        relator = tuple(boundary_word(S.arrangement, W))
    return OrbitCellComplexModel(tuple(orbits), dict(sorted(incidence.items())), relator, _letters(len(W.walls)))


# -- rank 2 ---------------------------------------------------------------------


def _require_rank2(A) -> None:
    if not A.essential or effective_rank(A) != 2:
        raise RankError("this construction needs an essential rank-2 arrangement")


@dataclass(frozen=True)
class DualComplex2D:
    vertices: tuple[SignVector, ...]  # chambers in fan order
    points: tuple[tuple[Fraction, ...], ...] | None
    edges: tuple[tuple[SignVector, SignVector, SignVector], ...]  # (ray, chamber, next chamber)
    two_cell: tuple[int, ...]  # edge indices around the polygon

    def counts(self) -> tuple[int, int, int]:
        return len(self.vertices), len(self.edges), 1


def _ray_between(C: SignVector, j: int) -> SignVector:
    out = list(C)
    out[j - 1] = 0
    return SignVector(out)


def dual_complex_2d(A, W: ReflectionGroup) -> DualComplex2D:
    _require_rank2(A)
    walk = fan_order(A, W.base_chamber)
    chambers = tuple(C for C, _ in walk)
    edges = []
    for k, (C, j) in enumerate(walk):
        nxt = chambers[(k + 1) % len(chambers)]
        edges.append((_ray_between(C, j), C, nxt))
    points = None
    if A.geometric:
        wit = invariant_witnesses(W)
        points = tuple(wit[C] for C in chambers)
    return DualComplex2D(chambers, points, tuple(edges), tuple(range(len(edges))))


def edge_label(W: ReflectionGroup, F: SignVector, C: SignVector) -> int:
    """Generator number of the orbit of the Sal edge (F, C): the wall of C0 that g F lands on, g C = C0."""
    g = W.chamber_elements[C].action.inverse()
    F0 = g.act(F)
    zeros = F0.zero_set
    if len(zeros) != 1 or zeros[0] + 1 not in W.walls:
        raise AssertionError(f"edge ({F},{C}) does not map to a wall of the base chamber")
    return W.walls.index(zeros[0] + 1) + 1


def boundary_word(A, W: ReflectionGroup, C0: SignVector | None = None) -> list[Letter]:
    """Cyclic word read around the boundary of |(0, C0)|.

    Edge (F, F o C0) points toward its vertex |(F o C0, F o C0)|; it is read
    with exponent +1 when traversed toward that vertex.
    """
    _require_rank2(A)
    C0 = W.base_chamber if C0 is None else SignVector(C0)
    walk = fan_order(A, C0)
    word = []
    for k, (C, j) in enumerate(walk):
        nxt = walk[(k + 1) % len(walk)][0]
        F = _ray_between(C, j)
        head = compose(F, C0)
        exponent = 1 if head == nxt else -1
        word.append((edge_label(W, F, head), exponent))
    return word


def word_to_str(word, letters: tuple[str, ...] | None = None) -> str:
    letters = letters or _letters(max((g for g, _ in word), default=0))
    return " ".join(letters[g - 1] + ("" if e > 0 else "^-1") for g, e in word)


def relation_from_word(word: list[Letter]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a cyclic relator into u v with u all-negative and v all-positive.

    Returns (u^-1, v) as positive words; the side starting with the smaller
    generator comes first.
    """
    n = len(word)
    if n % 2:
        raise ValueError("boundary word must have even length")
    m = n // 2
    for r in range(n):
        rot = word[r:] + word[:r]
        u, v = rot[:m], rot[m:]
        if all(e < 0 for _, e in u) and all(e > 0 for _, e in v):
            left = tuple(g for g, _ in reversed(u))
            right = tuple(g for g, _ in v)
            return (left, right) if left <= right else (right, left)
    raise ValueError("boundary word does not split into a negative and a positive half")


def _flat_contains(A, i: int, j: int, k: int) -> bool:
    if A.geometric:
        return linalg.rank([A.normals[i - 1], A.normals[j - 1], A.normals[k - 1]], A.dimension) == 2
    faces = [F for F in A.faces().covectors if F[i - 1] == 0 and F[j - 1] == 0]
    return all(F[k - 1] == 0 for F in faces)


def coxeter_exponent(A, i: int, j: int) -> int:
    """Number of hyperplanes through the codimension-2 flat H_i cap H_j (1-based indices)."""
    if i == j:
        raise ValueError("need two distinct walls")
    return sum(1 for k in range(1, A.n + 1) if _flat_contains(A, i, j, k))


@dataclass(frozen=True)
class ArtinRelation:
    i: int  # generator numbers, i < j
    j: int
    m: int

    @property
    def left(self) -> tuple[int, ...]:
        return tuple(self.i if t % 2 == 0 else self.j for t in range(self.m))

    @property
    def right(self) -> tuple[int, ...]:
        return tuple(self.j if t % 2 == 0 else self.i for t in range(self.m))

    def relator(self) -> tuple[Letter, ...]:
        return tuple((g, 1) for g in self.left) + tuple((g, -1) for g in reversed(self.right))


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[ArtinRelation, ...]
    boundary: tuple[Letter, ...] | None = field(default=None, compare=False)

    def relation_strings(self) -> list[str]:
        out = []
        for r in self.relations:
            lhs = "".join(self.generators[g - 1] for g in r.left)
            rhs = "".join(self.generators[g - 1] for g in r.right)
            out.append(f"{lhs} = {rhs}")
        return out

    def __str__(self) -> str:
        return f"<{', '.join(self.generators)} | {', '.join(self.relation_strings())}>"

    def as_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relations": [
                {
                    "left": "".join(self.generators[g - 1] for g in r.left),
                    "right": "".join(self.generators[g - 1] for g in r.right),
                    "m": r.m,
                }
                for r in self.relations
            ],
        }


def presentation(A, W: ReflectionGroup) -> Presentation:
    """One generator per wall of C0, one Artin relation per pair of walls.

    Relations are listed by generator distance j - i, then by i, so
    neighbouring generators come first: aba = bab, bcb = cbc, ac = ca.
    """
    ws = W.walls
    letters = _letters(len(ws))
    pairs = sorted(
        ((a, b) for a in range(len(ws)) for b in range(a + 1, len(ws))),
        key=lambda p: (p[1] - p[0], p[0]),
    )
    rels = tuple(ArtinRelation(a + 1, b + 1, coxeter_exponent(A, ws[a], ws[b])) for a, b in pairs)
    boundary = None
    if A.essential and effective_rank(A) == 2:
        boundary = tuple(boundary_word(A, W))
        extracted = relation_from_word(list(boundary))
        (rel,) = rels
        if {extracted[0], extracted[1]} != {rel.left, rel.right}:
            raise AssertionError(
                f"boundary word relation {extracted} disagrees with Artin relation m={rel.m}"
            )
    return Presentation(letters, rels, boundary)


def quotient_homology(Q: OrbitCellComplexModel) -> list[complexes.HomologyGroup]:
    """Homology of the one-vertex presentation 2-complex of a rank-2 quotient."""
    hist = Q.histogram()
    if Q.relator is None or len(hist) != 3 or hist[0] != 1 or hist[2] != 1:
        raise NotImplementedError("only single-vertex rank-2 quotients are supported")
    edges = hist[1]
    sums = [0] * edges
    for g, e in Q.relator:
        sums[g - 1] += e
    d2 = [{r: v for r, v in enumerate(sums) if v}]
    d1 = [{} for _ in range(edges)]
    C = complexes.ChainComplex((1, edges, 1), [[{}], d1, d2])
    return complexes.homology(C)
