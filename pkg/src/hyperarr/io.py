"""Reading arrangements and writing canonical JSON / DOT artifacts.

Every rational is written as a "p/q" string and every index is 1-based.
JSON is dumped with sorted keys so that two runs on the same input produce
byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable

from .arrangement import Arrangement, FacePoset
from .complexes import AbstractSimplicialComplex, HomologyGroup
from .groups import ReflectionGroup
from .orbits import OrbitCellComplexModel, Presentation, word_to_str
from .salvetti import EmbeddedVertex, SalPoset, to_complex_covector
from .signs import SignVector


class InputError(ValueError):
    """Malformed or inconsistent input file."""


def rational_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, bool):
        raise InputError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {s!r}") from exc
    raise InputError(f"not a rational: {s!r} (use a string like \"3/4\" or an integer)")


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- arrangements ----------------------------------------------------------------


def arrangement_from_dict(data: Any, cap: int | None = None) -> Arrangement:
    if not isinstance(data, dict):
        raise InputError("arrangement file must hold a JSON object")
    if "dimension" not in data or "hyperplanes" not in data:
        raise InputError('arrangement needs "dimension" and "hyperplanes"')
    dim = data["dimension"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError(f"dimension must be a positive integer, got {dim!r}")
    rows = data["hyperplanes"]
    if not isinstance(rows, list) or not rows:
        raise InputError('"hyperplanes" must be a non-empty list of normal vectors')
    normals = []
    for k, row in enumerate(rows, start=1):
        if not isinstance(row, list) or len(row) != dim:
            raise InputError(f"hyperplane {k}: expected a list of {dim} rationals")
        normals.append(tuple(parse_rational(x) for x in row))
    gram = None
    if data.get("gram") is not None:
        g = data["gram"]
        if not isinstance(g, list) or any(not isinstance(r, list) for r in g):
            raise InputError('"gram" must be a square matrix')
        gram = [[parse_rational(x) for x in r] for r in g]
    kwargs = {} if cap is None else {"cap": cap}
    try:
        return Arrangement(tuple(normals), dim, gram, **kwargs)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def load_arrangement(path: str | Path, cap: int | None = None) -> Arrangement:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return arrangement_from_dict(data, cap)


def arrangement_to_dict(A: Arrangement) -> dict:
    out: dict = {
        "dimension": A.dimension,
        "hyperplanes": [[rational_str(c) for c in v] for v in A.normals],
    }
    if A.gram is not None:
        out["gram"] = [[rational_str(c) for c in r] for r in A.gram]
    return out


# -- face posets -----------------------------------------------------------------


def face_poset_to_dict(P: FacePoset) -> dict:
    out: dict = {
        "nodes": [str(F.covector) for F in P.faces],
        "edges": sorted([str(a), str(b)] for a, b in P.covering_relations),
        "codim": {str(F.covector): F.codim for F in P.faces},
        "counts_by_codim": {str(k): v for k, v in P.counts_by_codim().items()},
    }
    if P.geometric:
        out["witnesses"] = {
            str(F.covector): [rational_str(c) for c in F.witness] for F in P.faces
        }
    return out


def face_poset_to_dot(P: FacePoset) -> str:
    lines = ["digraph faces {", "  rankdir=BT;"]
    for F in P.faces:
        lines.append(f'  "{F.covector}" [codim={F.codim}];')
    for a, b in sorted(P.covering_relations, key=lambda e: (str(e[0]), str(e[1]))):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_face_list(path: str | Path) -> list[SignVector]:
    """Covectors from a face-poset export (``nodes``) or a bare JSON list of strings."""
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    nodes = data.get("nodes") if isinstance(data, dict) else data
    if not isinstance(nodes, list) or not all(isinstance(s, str) for s in nodes):
        raise InputError("face file must be a list of covector strings or hold one under \"nodes\"")
    try:
        out = [SignVector(s) for s in nodes]
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if len({len(X) for X in out}) > 1:
        raise InputError("covectors in the face file have different lengths")
    return out


# -- simplicial complexes ------------------------------------------------------------


def complex_to_dict(K: AbstractSimplicialComplex, labels: Iterable[str] | None = None) -> dict:
    names = list(labels) if labels is not None else [str(v) for v in K.vertices]
    return {
        "vertices": names,
        "simplices": [[i + 1 for i in s] for s in K.all_simplices()],
        "counts": list(K.counts()),
    }


def complex_to_dot(K: AbstractSimplicialComplex, labels: Iterable[str] | None = None) -> str:
    names = list(labels) if labels is not None else [str(v) for v in K.vertices]
    lines = ["graph skeleton {"]
    for i, name in enumerate(names):
        lines.append(f'  v{i + 1} [label="{name}"];')
    if K.dim >= 1:
        for a, b in K.simplices[1]:
            lines.append(f"  v{a + 1} -- v{b + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def homology_to_list(H: list[HomologyGroup]) -> list[dict]:
    return [
        {"degree": k, "betti": h.betti, "torsion": list(h.torsion), "group": str(h)}
        for k, h in enumerate(H)
    ]


# -- Salvetti posets ---------------------------------------------------------------


def sal_to_dict(S: SalPoset) -> dict:
    index = {c: i + 1 for i, c in enumerate(S.cells)}
    return {
        "nodes": [
            {"id": index[c], "face": str(c.face), "chamber": str(c.chamber), "dim": c.dim}
            for c in S.cells
        ],
        "edges": sorted([index[a], index[b]] for a, b in S.covering_relations()),
        "counts_by_dim": list(S.dim_histogram()),
    }


def complex_covector_table(S: SalPoset) -> list[dict]:
    """Two-column correspondence (F, C) <-> F^C."""
    return [
        {"pair": f"{c.face},{c.chamber}", "complex_covector": str(to_complex_covector(c))}
        for c in S.cells
    ]


def sal_to_dot(S: SalPoset) -> str:
    """1-skeleton: vertices (C, C) and one edge per 1-cell joining its two vertices."""
    index = {c: i + 1 for i, c in enumerate(S.cells)}
    below: dict = {}
    for a, b in S.covering_relations():
        below.setdefault(b, []).append(a)
    lines = ["graph salvetti {"]
    for c in S.cells:
        if c.dim == 0:
            lines.append(f'  c{index[c]} [label="{c.chamber}"];')
    for c in S.cells:
        if c.dim == 1:
            ends = sorted(index[v] for v in below.get(c, ()))
            if len(ends) == 2:
                lines.append(f'  c{ends[0]} -- c{ends[1]} [label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def embedded_vertices_to_list(emb: dict) -> list[dict]:
    out = []
    for c, v in sorted(emb.items(), key=lambda kv: kv[0].key):
        assert isinstance(v, EmbeddedVertex)
        out.append(
            {
                "pair": f"{c.face},{c.chamber}",
                "real": [rational_str(x) for x in v.real],
                "imag": [rational_str(x) for x in v.imag],
            }
        )
    return out


# -- groups, orbits, presentations ---------------------------------------------------


def group_to_list(W: ReflectionGroup) -> list[dict]:
    out = []
    for g in W.elements:
        d = g.action.as_dict()
        d["word"] = list(g.word)
        out.append(d)
    return sorted(out, key=lambda d: (d["perm"], d["flips"]))


def orbits_to_dict(Q: OrbitCellComplexModel) -> dict:
    out: dict = {
        "histogram": list(Q.histogram()),
        "orbits": [
            {
                "id": i + 1,
                "dim": o.dim,
                "representative": str(o.representative),
                "size": len(o.members),
            }
            for i, o in enumerate(Q.orbits)
        ],
        "incidence": [
            {"cell": hi + 1, "face": lo + 1, "count": k} for (hi, lo), k in Q.incidence.items()
        ],
    }
    if Q.relator is not None:
        out["relator"] = word_to_str(Q.relator, Q.generators)
    return out


def presentation_to_dict(P: Presentation) -> dict:
    out = P.as_dict()
    if P.boundary is not None:
        out["boundary_word"] = word_to_str(P.boundary, P.generators)
    return out


def presentation_to_text(P: Presentation) -> str:
    lines = [str(P)]
    lines.extend(P.relation_strings())
    if P.boundary is not None:
        lines.append(f"boundary word: {word_to_str(P.boundary, P.generators)}")
    return "\n".join(lines) + "\n"
