"""Sign vectors over {+, -, 0} and complex sign vectors over {0, +, -, i, -i}.

A :class:`SignVector` is a tuple of ints in {-1, 0, 1}.  Its string form uses
the alphabet ``+ - 0``.  A :class:`ComplexSignVector` is a tuple of one-character
strings from ``0 + - i j`` where ``j`` stands for ``-i``.

Indices reported to users (separation sets, axiom witnesses) are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

PLUS, MINUS, ZERO = 1, -1, 0

_TO_CHAR = {PLUS: "+", MINUS: "-", ZERO: "0"}
_FROM_CHAR = {"+": PLUS, "-": MINUS, "0": ZERO}

COMPLEX_CHARS = "0+-ij"
# strict covering pairs of the five-element order; everything else follows by
# reflexivity since the order has height 2
_COMPLEX_BELOW = {
    "0": frozenset("0+-ij"),
    "+": frozenset("+ij"),
    "-": frozenset("-ij"),
    "i": frozenset("i"),
    "j": frozenset("j"),
}


class SignVector(tuple):
    """Immutable covector; entries are -1, 0 or +1."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] | str = ()):
        if isinstance(entries, str):
            try:
                values = tuple(_FROM_CHAR[c] for c in entries)
            except KeyError as exc:
                raise ValueError(f"bad sign character {exc.args[0]!r} in {entries!r}") from None
        else:
            values = tuple(int(v) for v in entries)
            for v in values:
                if v not in (-1, 0, 1):
                    raise ValueError(f"sign entries must be -1, 0, 1; got {v}")
        return super().__new__(cls, values)

    @classmethod
    def zero(cls, n: int) -> SignVector:
        return cls((0,) * n)

    def __str__(self) -> str:
        return "".join(_TO_CHAR[v] for v in self)

    def __repr__(self) -> str:
        return f"SignVector({str(self)!r})"

    def __neg__(self) -> SignVector:
        return opposite(self)

    @property
    def zero_set(self) -> tuple[int, ...]:
        """0-based positions of zero entries."""
        return tuple(i for i, v in enumerate(self) if v == 0)

    @property
    def is_tope(self) -> bool:
        return all(self)


def _check_lengths(X: tuple, Y: tuple) -> None:
    if len(X) != len(Y):
        raise ValueError(f"length mismatch: {len(X)} vs {len(Y)}")


def opposite(X: SignVector) -> SignVector:
    return SignVector(-v for v in X)


def compose(X: SignVector, Y: SignVector) -> SignVector:
    """X o Y: take X's entry where it is nonzero, otherwise Y's."""
    _check_lengths(X, Y)
    return SignVector(x if x else y for x, y in zip(X, Y))


def separation(X: SignVector, Y: SignVector) -> frozenset[int]:
    """1-based indices where X and Y carry opposite nonzero signs."""
    _check_lengths(X, Y)
    return frozenset(i + 1 for i, (x, y) in enumerate(zip(X, Y)) if x and x == -y)


def sign_leq(X: SignVector, Y: SignVector) -> bool:
    _check_lengths(X, Y)
    return all(x == 0 or x == y for x, y in zip(X, Y))


def restrict(X: SignVector, indices: Iterable[int]) -> SignVector:
    """Sub-vector on the given 0-based positions, in the given order."""
    return SignVector(X[i] for i in indices)


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class AxiomReport:
    results: tuple[AxiomResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {r.name: {"passed": r.passed, "witness": r.witness} for r in self.results}


def check_covector_axioms(L: Iterable[SignVector]) -> AxiomReport:
    """Check the oriented-matroid covector axioms L0-L3 on a finite set.

    Each failing axiom carries the first violating witness found (vectors as
    strings, indices 1-based).  Vectors are scanned in string order so the
    witness is deterministic.
    """
    vectors = sorted(set(L), key=str)
    if not vectors:
        return AxiomReport((AxiomResult("L0", False, "empty set"),))
    n = len(vectors[0])
    for X in vectors:
        if len(X) != n:
            raise ValueError("all sign vectors must have the same length")
    members = set(vectors)

    results = []
    zero = SignVector.zero(n)
    results.append(AxiomResult("L0", zero in members, None if zero in members else f"{zero} missing"))

    witness = next((f"-{X} missing for X={X}" for X in vectors if opposite(X) not in members), None)
    results.append(AxiomResult("L1", witness is None, witness))

    witness = None
    for X in vectors:
        for Y in vectors:
            if compose(X, Y) not in members:
                witness = f"X={X}, Y={Y}: X o Y={compose(X, Y)} missing"
                break
        if witness:
            break
    results.append(AxiomResult("L2", witness is None, witness))

    witness = None
    for X in vectors:
        for Y in vectors:
            sep = separation(X, Y)
            if not sep:
                continue
            XY = compose(X, Y)
            keep = [j for j in range(n) if j + 1 not in sep]
            for i in sorted(sep):
                if not any(Z[i - 1] == 0 and all(Z[j] == XY[j] for j in keep) for Z in vectors):
                    witness = f"X={X}, Y={Y}, i={i}: no eliminating Z"
                    break
            if witness:
                break
        if witness:
            break
    results.append(AxiomResult("L3", witness is None, witness))
    return AxiomReport(tuple(results))


class ComplexSignVector(tuple):
    """Entries drawn from ``0 + - i j`` (``j`` is -i)."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[str] = ()):
        values = tuple(entries)
        for v in values:
            if v not in COMPLEX_CHARS or len(v) != 1:
                raise ValueError(f"bad complex sign {v!r}")
        return super().__new__(cls, values)

    def __str__(self) -> str:
        return "".join(self)

    def __repr__(self) -> str:
        return f"ComplexSignVector({str(self)!r})"

    @property
    def nowhere_zero(self) -> bool:
        return "0" not in self


def complex_sign_leq(X: ComplexSignVector, Y: ComplexSignVector) -> bool:
    _check_lengths(X, Y)
    return all(y in _COMPLEX_BELOW[x] for x, y in zip(X, Y))
