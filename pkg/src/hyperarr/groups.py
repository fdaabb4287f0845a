"""Finite reflection groups acting on arrangements.

Group elements are identified by the signed permutation they induce on the
hyperplanes: g sends H_k to H_perm[k], and the form of H_perm[k] pulled back
along g is flips[k] times a positive multiple of the form of H_k.  On
covectors this reads (gX)[perm[k]] = flips[k] * X[k].

Words are tuples of 1-based generator numbers, multiplied left to right.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import linalg
from .arrangement import NotAFaceError, walls
from .salvetti import SalCell
from .signs import SignVector, sign_leq

DEFAULT_GROUP_CAP = 10_000


class NotReflectionSymmetry(ValueError):
    """The reflection over a hyperplane does not permute the arrangement."""

    def __init__(self, hyperplane: int, image: tuple[Fraction, ...], reflected: int):
        self.hyperplane = hyperplane
        self.image = image
        self.reflected = reflected
        coeffs = ", ".join(str(c) for c in image)
        super().__init__(
            f"reflection over hyperplane {reflected} sends hyperplane {hyperplane} "
            f"to [{coeffs}], which is not in the arrangement"
        )


class GroupCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class SignedPermutation:
    perm: tuple[int, ...]
    flips: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation")
        if len(self.flips) != len(self.perm) or any(f not in (1, -1) for f in self.flips):
            raise ValueError("flips must be +-1, one per hyperplane")

    @classmethod
    def identity(cls, n: int) -> SignedPermutation:
        return cls(tuple(range(n)), (1,) * n)

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        """self after other."""
        return SignedPermutation(
            tuple(self.perm[other.perm[k]] for k in range(len(self.perm))),
            tuple(self.flips[other.perm[k]] * other.flips[k] for k in range(len(self.perm))),
        )

    def inverse(self) -> SignedPermutation:
        perm = [0] * len(self.perm)
        flips = [1] * len(self.perm)
        for k, p in enumerate(self.perm):
            perm[p] = k
            flips[p] = self.flips[k]
        return SignedPermutation(tuple(perm), tuple(flips))

    def act(self, X: SignVector) -> SignVector:
        if len(X) != len(self.perm):
            raise ValueError("length mismatch")
        out = [0] * len(X)
        for k, p in enumerate(self.perm):
            out[p] = self.flips[k] * X[k]
        return SignVector(out)

    def as_dict(self) -> dict:
        return {"perm": [p + 1 for p in self.perm], "flips": list(self.flips)}


@dataclass(frozen=True, eq=False)
class GroupElement:
    action: SignedPermutation
    matrix: tuple[tuple[Fraction, ...], ...] | None = None
    word: tuple[int, ...] = ()

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupElement) and self.action == other.action

    def __hash__(self) -> int:
        return hash(self.action)

    def __mul__(self, other: GroupElement) -> GroupElement:
        matrix = None
        if self.matrix is not None and other.matrix is not None:
            matrix = linalg.mat_mul(self.matrix, other.matrix)
        return GroupElement(self.action * other.action, matrix, self.word + other.word)

    def inverse(self) -> GroupElement:
        matrix = linalg.inverse(self.matrix) if self.matrix is not None else None
        return GroupElement(self.action.inverse(), matrix, tuple(reversed(self.word)))

    def apply_point(self, x: Sequence) -> tuple[Fraction, ...]:
        if self.matrix is None:
            raise ValueError("combinatorial group element has no matrix")
        return linalg.mat_vec(self.matrix, x)

    @property
    def is_identity(self) -> bool:
        return self.action == SignedPermutation.identity(len(self.action.perm))


def _reflection_matrix(a: Sequence[Fraction], gram) -> tuple[tuple[Fraction, ...], ...]:
    # s(x) = x - 2 (a.x) / (a.G^-1 a) * G^-1 a; orthogonal for the inner product G
    dim = len(a)
    normal = linalg.solve(gram, a) if gram is not None else tuple(a)
    denom = linalg.dot(a, normal)
    return tuple(
        tuple(Fraction(int(r == c)) - 2 * normal[r] * a[c] / denom for c in range(dim))
        for r in range(dim)
    )


def _induced_signed_permutation(normals, matrix, reflected: int) -> SignedPermutation:
    n = len(normals)
    perm = [None] * n
    flips = [1] * n
    mT = linalg.transpose(matrix)
    for target, a in enumerate(normals):
        pulled = linalg.mat_vec(mT, a)  # coefficients of alpha_target o g
        for k, b in enumerate(normals):
            c = linalg.proportional(pulled, b)
            if c is not None:
                perm[k] = target
                flips[k] = 1 if c > 0 else -1
                break
        else:
            raise NotReflectionSymmetry(target + 1, pulled, reflected)
    if None in perm:
        raise NotReflectionSymmetry(perm.index(None) + 1, (), reflected)
    return SignedPermutation(tuple(perm), tuple(flips))


def reflection_of(A, j: int) -> GroupElement:
    """The reflection over hyperplane j (1-based) with its induced action."""
    if not 1 <= j <= A.n:
        raise IndexError(f"hyperplane index {j} out of range 1..{A.n}")
    if not A.geometric:
        return _fan_reflection(A, j)
    matrix = _reflection_matrix(A.normals[j - 1], A.gram)
    action = _induced_signed_permutation(A.normals, matrix, j)
    return GroupElement(action, matrix)


def _fan_reflection(fan, j: int) -> GroupElement:
    # line p at angle p*pi/m goes to line q = 2k - p (mod m); the pulled-back
    # form picks up -(-1)^r where 2k - p = q + r*m
    m, k = fan.m, j - 1
    perm, flips = [], []
    for p in range(m):
        q = (2 * k - p) % m
        r = (2 * k - p - q) // m
        perm.append(q)
        flips.append(-1 if r % 2 == 0 else 1)
    return GroupElement(SignedPermutation(tuple(perm), tuple(flips)))


def generate_group(gens: Sequence[GroupElement], cap: int = DEFAULT_GROUP_CAP) -> list[GroupElement]:
    """Closure of the generators; every element carries a shortest word."""
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0].action.perm)
    for g in gens:
        if not (g.action * g.action).perm == tuple(range(n)) or not all(
            f == 1 for f in (g.action * g.action).flips
        ):
            raise ValueError("generators must be involutions")
    dim = len(gens[0].matrix) if gens[0].matrix is not None else None
    ident = GroupElement(
        SignedPermutation.identity(n),
        linalg.identity(dim) if dim is not None else None,
        (),
    )
    named = [GroupElement(g.action, g.matrix, (i + 1,)) for i, g in enumerate(gens)]
    seen = {ident.action: ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in named:
            h = s * g
            if h.action not in seen:
                if len(seen) >= cap:
                    raise GroupCapExceeded(f"group not finite within cap {cap}")
                seen[h.action] = h
                queue.append(h)
    return sorted(seen.values(), key=lambda e: (e.action.perm, e.action.flips))


@dataclass(frozen=True, eq=False)
class ReflectionGroup:
    arrangement: object
    base_chamber: SignVector
    walls: tuple[int, ...]
    generators: tuple[GroupElement, ...]
    elements: tuple[GroupElement, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def by_action(self) -> dict[SignedPermutation, GroupElement]:
        return {g.action: g for g in self.elements}

    def element(self, action: SignedPermutation) -> GroupElement:
        return self.by_action[action]

    def evaluate(self, word: Iterable[int]) -> GroupElement:
        n = len(self.base_chamber)
        g = SignedPermutation.identity(n)
        for i in word:
            g = g * self.generators[i - 1].action
        return self.by_action[g]

    @cached_property
    def chamber_elements(self) -> dict[SignVector, GroupElement]:
        """For each chamber C in the orbit of the base chamber, some w with w C0 = C."""
        out: dict[SignVector, GroupElement] = {}
        for g in self.elements:
            out.setdefault(g.action.act(self.base_chamber), g)
        return out


def reflection_group(
    A, base_chamber: SignVector | str | None = None, cap: int = DEFAULT_GROUP_CAP
) -> ReflectionGroup:
    """The group generated by the wall reflections of the base chamber.

    The default base chamber is the first chamber in covector-string order,
    which is the all-plus chamber whenever that is a chamber.
    """
    P = A.faces()
    C0 = SignVector(base_chamber) if base_chamber is not None else P.chambers[0].covector
    if C0 not in P or not P[C0].is_chamber:
        raise NotAFaceError(f"{C0} is not a chamber")
    ws = walls(A, C0)
    gens = tuple(reflection_of(A, j) for j in ws)
    gens = tuple(GroupElement(g.action, g.matrix, (i + 1,)) for i, g in enumerate(gens))
    return ReflectionGroup(A, C0, ws, gens, tuple(generate_group(gens, cap)))


def symmetric_group_model(ell: int, essentialize: bool = False) -> ReflectionGroup:
    """S_ell acting on the braid arrangement, generated by adjacent transpositions."""
    from .arrangement import braid_arrangement

    A = braid_arrangement(ell, essentialize=essentialize)
    return reflection_group(A, SignVector((1,) * A.n))


def act_on_covector(g: GroupElement | SignedPermutation, X: SignVector) -> SignVector:
    action = g.action if isinstance(g, GroupElement) else g
    return action.act(X)


def act_on_sal(g: GroupElement | SignedPermutation, c: SalCell) -> SalCell:
    return SalCell(act_on_covector(g, c.face), act_on_covector(g, c.chamber), c.dim)


@dataclass(frozen=True)
class GroupReport:
    order: int
    chambers: int
    transitive: bool
    free: bool
    permutes_hyperplanes: bool

    @property
    def passed(self) -> bool:
        return self.transitive and self.free and self.permutes_hyperplanes and self.order == self.chambers


def check_transitive_free(W: ReflectionGroup, A=None) -> GroupReport:
    A = A if A is not None else W.arrangement
    P = A.faces()
    chambers = {C.covector for C in P.chambers}
    orbit = {g.action.act(W.base_chamber) for g in W.elements}
    free = all(
        sum(1 for g in W.elements if g.action.act(C) == C) == 1 for C in chambers
    )
    # every element must map faces to faces
    faces = set(P.covectors)
    permutes = all(g.action.act(X) in faces for g in W.generators for X in faces)
    return GroupReport(W.order, len(chambers), orbit == chambers, free, permutes)


def chamber_word(W: ReflectionGroup, C: SignVector | str) -> tuple[int, ...]:
    """Shortest word w (generator numbers) with w C0 = C, by BFS over the chamber orbit."""
    C = SignVector(C)
    words = {W.base_chamber: ()}
    queue = deque([W.base_chamber])
    while queue:
        D = queue.popleft()
        if D == C:
            return words[D]
        for i, s in enumerate(W.generators, start=1):
            E = s.action.act(D)
            if E not in words:
                words[E] = (i,) + words[D]
                queue.append(E)
    raise NotAFaceError(f"{C} is not in the orbit of the base chamber")


def conjugation_holds(W: ReflectionGroup, w: GroupElement, j: int) -> bool:
    """s_{w H_j} == w s_j w^-1 on the signed-permutation level (j is 1-based)."""
    A = W.arrangement
    image = w.action.perm[j - 1] + 1
    lhs = reflection_of(A, image).action
    rhs = w.action * reflection_of(A, j).action * w.action.inverse()
    return lhs == rhs


def orbit(W: ReflectionGroup, X: SignVector) -> set[SignVector]:
    return {g.action.act(X) for g in W.elements}


def orbit_representative(W: ReflectionGroup, X: SignVector) -> list[SignVector]:
    """Faces of the closed base chamber congruent to X (exactly one for a face)."""
    return sorted((Y for Y in orbit(W, X) if sign_leq(Y, W.base_chamber)), key=str)


def stabilizer(W: ReflectionGroup, X: SignVector) -> set[SignedPermutation]:
    return {g.action for g in W.elements if g.action.act(X) == X}


def fixing_generators_closure(W: ReflectionGroup, X: SignVector) -> set[SignedPermutation]:
    """Subgroup generated by the wall reflections that fix X."""
    gens = [g for g in W.generators if g.action.act(X) == X]
    n = len(X)
    if not gens:
        return {SignedPermutation.identity(n)}
    return {g.action for g in generate_group(gens)}


def invariant_witnesses(W: ReflectionGroup) -> dict[SignVector, tuple[Fraction, ...]]:
    """W-invariant face points: x(w F0) = w x(F0) for faces F0 of the base chamber."""
    A = W.arrangement
    if not A.geometric:
        raise ValueError("combinatorial arrangements carry no witness points")
    P = A.faces()
    base_faces = [f for f in P.faces if sign_leq(f.covector, W.base_chamber)]
    out: dict[SignVector, tuple[Fraction, ...]] = {}
    for g in W.elements:
        for f in base_faces:
            X = g.action.act(f.covector)
            x = g.apply_point(f.witness)
            if X in out and out[X] != x:
                raise AssertionError(f"inconsistent invariant witness for {X}")
            out[X] = x
    for X, x in out.items():
        if A.covector_of_point(x) != X:
            raise AssertionError(f"witness {x} does not realize {X}")
    return out
