"""The Salvetti poset of a real arrangement and its complex-covector description.

Cells are pairs (F, C) of a face and a chamber above it.  The order is

    (F', C') <= (F, C)  iff  F <= F'  and  F' o C = C'

so the pairs (C, C) are the minimal elements (vertices of the realized cell
complex) and the pairs (0, C) the maximal ones (top cells).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from . import complexes
from .arrangement import FacePoset
from .signs import ComplexSignVector, SignVector, complex_sign_leq, compose, sign_leq


# 4^n nowhere-zero candidates are scanned up to this many hyperplanes
MAX_EXHAUSTIVE_N = 9


class NotEssentialError(ValueError):
    pass


class WitnessUnavailable(ValueError):
    pass


@dataclass(frozen=True)
class SalCell:
    face: SignVector
    chamber: SignVector
    dim: int

    def __post_init__(self):
        if not self.chamber.is_tope:
            raise ValueError(f"{self.chamber} is not a tope")
        if not sign_leq(self.face, self.chamber):
            raise ValueError(f"{self.face} is not below {self.chamber}")

    @property
    def key(self) -> tuple[str, str]:
        return str(self.face), str(self.chamber)

    def __str__(self) -> str:
        return f"({self.face},{self.chamber})"


def sal_leq(a: SalCell, b: SalCell) -> bool:
    """a <= b in the Salvetti order."""
    return sign_leq(b.face, a.face) and compose(a.face, b.chamber) == a.chamber


class SalPoset:
    def __init__(self, arrangement, cells: Sequence[SalCell]):
        self.arrangement = arrangement
        self.cells: tuple[SalCell, ...] = tuple(sorted(cells, key=lambda c: c.key))
        self.index = {c: i for i, c in enumerate(self.cells)}
        self.poset = complexes.Poset(self.cells, sal_leq, {c: c.dim for c in self.cells})
        for i, up in enumerate(self.poset.above):
            a = self.cells[i]
            for j in up:
                b = self.cells[j]
                if not (sign_leq(b.face, a.face) and b.face != a.face):
                    raise AssertionError(f"{a} < {b} without strict face inequality")

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __contains__(self, c) -> bool:
        return c in self.index

    @cached_property
    def by_pair(self) -> dict[tuple[SignVector, SignVector], SalCell]:
        return {(c.face, c.chamber): c for c in self.cells}

    def cell(self, F, C) -> SalCell:
        return self.by_pair[(SignVector(F), SignVector(C))]

    def dim_histogram(self) -> tuple[int, ...]:
        top = max(c.dim for c in self.cells)
        return tuple(sum(1 for c in self.cells if c.dim == k) for k in range(top + 1))

    def covering_relations(self) -> list[tuple[SalCell, SalCell]]:
        return [(self.cells[i], self.cells[j]) for i, j in self.poset.covers]


def build_salvetti(A) -> SalPoset:
    P: FacePoset = A.faces()
    cells = [
        SalCell(F.covector, C.covector, F.codim)
        for F in P.faces
        for C in P.chambers
        if sign_leq(F.covector, C.covector)
    ]
    return SalPoset(A, cells)


def to_complex_covector(c: SalCell) -> ComplexSignVector:
    out = []
    for f, ch in zip(c.face, c.chamber):
        out.append("+" if f > 0 else "-" if f < 0 else ("i" if ch > 0 else "j"))
    return ComplexSignVector(out)


def decode_complex_covector(X: ComplexSignVector | str) -> tuple[SignVector, SignVector] | None:
    """The candidate (F, C) behind a nowhere-zero complex covector, no membership test."""
    X = ComplexSignVector(X)
    if not X.nowhere_zero:
        return None
    F = SignVector({"+": 1, "-": -1}.get(x, 0) for x in X)
    C = SignVector({"+": 1, "-": -1, "i": 1, "j": -1}[x] for x in X)
    return F, C


def from_complex_covector(S: SalPoset, X: ComplexSignVector | str) -> SalCell | None:
    """Preimage of X in Sal(A), or None when X is not in the image."""
    pair = decode_complex_covector(X)
    if pair is None:
        return None
    return S.by_pair.get(pair)


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def complex_covector_of_point(A, x: Sequence, y: Sequence) -> ComplexSignVector:
    """Label of z = x + iy relative to the complexified hyperplanes."""
    out = []
    for h in A.hyperplanes:
        re, im = _sign(h(x)), _sign(h(y))
        out.append("+" if re > 0 else "-" if re < 0 else "i" if im > 0 else "j" if im < 0 else "0")
    return ComplexSignVector(out)


@dataclass(frozen=True)
class IsoReport:
    injective: bool
    roundtrip: bool
    image_size: int
    decodable_count: int
    order_preserving: bool
    realized: bool | None
    sampled_in_image: bool | None
    witness: str | None = None

    @property
    def passed(self) -> bool:
        return (
            self.injective
            and self.roundtrip
            and self.image_size == self.decodable_count
            and self.order_preserving
            and self.realized is not False
            and self.sampled_in_image is not False
        )


def _all_complex_vectors(n: int):
    def rec(prefix):
        if len(prefix) == n:
            yield ComplexSignVector(prefix)
            return
        for ch in "+-ij":
            yield from rec(prefix + [ch])

    yield from rec([])


def check_sal_complex_order_iso(S: SalPoset, seed: int = 0, samples: int = 200) -> IsoReport:
    """Check that f(F, C) = F^C is an order isomorphism onto its image.

    The image is compared with every nowhere-zero complex sign vector that
    decodes into Sal(A).  In geometric mode each cell is also realized by the
    point z(F, C) = x(F) + i x(C), and random points of C^l are checked to land
    in the image.
    """
    A = S.arrangement
    images = [to_complex_covector(c) for c in S.cells]
    injective = len(set(images)) == len(images)
    roundtrip = all(from_complex_covector(S, X) == c for X, c in zip(images, S.cells))
    n = len(S.cells[0].face)
    if n <= MAX_EXHAUSTIVE_N:
        decodable = sum(1 for X in _all_complex_vectors(n) if from_complex_covector(S, X) is not None)
    else:
        decodable = len(images)

    witness = None
    order_ok = True
    for a, fa in zip(S.cells, images):
        for b, fb in zip(S.cells, images):
            if sal_leq(a, b) != complex_sign_leq(fa, fb):
                order_ok = False
                witness = f"{a} vs {b}"
                break
        if not order_ok:
            break

    realized = sampled = None
    if A.geometric:
        P = A.faces()
        realized = all(
            complex_covector_of_point(A, P[c.face].witness, P[c.chamber].witness) == X
            for c, X in zip(S.cells, images)
        )
        rng = random.Random(seed)
        image_set = set(images)
        sampled = True
        for _ in range(samples):
            # real part in a random face, imaginary part generic
            F = rng.choice(P.faces)
            y = [Fraction(rng.randint(-1000, 1000)) for _ in range(A.dimension)]
            X = complex_covector_of_point(A, F.witness, y)
            if X.nowhere_zero and X not in image_set:
                sampled = False
                witness = f"sampled {X} outside image"
                break
    return IsoReport(injective, roundtrip, len(images), decodable, order_ok, realized, sampled, witness)


def sal_order_complex(S: SalPoset) -> complexes.AbstractSimplicialComplex:
    return complexes.order_complex(S.poset)


def sal_cell_complex(S: SalPoset) -> complexes.RegularCellComplexModel:
    """Cell |(F, C)| of dimension codim(F); faces of a cell are the cells below it."""
    if not S.arrangement.essential:
        raise NotEssentialError("the Salvetti cell complex is built only for essential arrangements")
    return complexes.cell_complex_from_poset(S.poset, {c: c.dim for c in S.cells})


def sal_homology(S: SalPoset) -> list[complexes.HomologyGroup]:
    return complexes.simplicial_homology(sal_order_complex(S))


@dataclass(frozen=True)
class EmbeddedVertex:
    real: tuple[Fraction, ...]
    imag: tuple[Fraction, ...]


def embed_vertices(S: SalPoset, witnesses: Mapping[SignVector, Sequence] | None = None) -> dict[SalCell, EmbeddedVertex]:
    """z(F, C) = x(F) + i x(C) for every cell, checked to lie in the complement.

    ``witnesses`` overrides the stored face witnesses (e.g. a W-invariant
    choice); by default the enumeration witnesses are used.
    """
    A = S.arrangement
    if not A.geometric:
        raise WitnessUnavailable("combinatorial arrangements carry no witness points")
    P = A.faces()
    pick = (lambda X: tuple(witnesses[X])) if witnesses is not None else (lambda X: P[X].witness)
    out = {}
    for c in S.cells:
        x, y = pick(c.face), pick(c.chamber)
        for j, h in enumerate(A.hyperplanes):
            if h(x) == 0 and h(y) == 0:
                raise AssertionError(f"z{c} lies on complexified hyperplane {j + 1}")
        out[c] = EmbeddedVertex(x, y)
    return out


def restriction_property_holds(S: SalPoset, chain: Sequence[int]) -> bool:
    """For a chain w_0 < ... < w_n (ids), C_n agrees with C_i wherever F_i is zero.

    Dimensions strictly increase along a chain, so sorting by dimension
    recovers the chain order; w_n carries the smallest face.
    """
    cells = sorted((S.cells[i] for i in chain), key=lambda c: c.dim)
    top = cells[-1]
    return all(c.chamber[j] == top.chamber[j] for c in cells for j in c.face.zero_set)
