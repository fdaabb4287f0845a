"""Exact combinatorial topology of real hyperplane arrangements."""

from __future__ import annotations

from .arrangement import (
    Arrangement,
    DihedralFan,
    EnumerationCapError,
    Face,
    FacePoset,
    Hyperplane,
    NotAFaceError,
    braid_arrangement,
    coordinate_arrangement,
    dihedral_arrangement,
    enumerate_faces,
    sample_covectors,
    walls,
)
from .complexes import (
    AbstractSimplicialComplex,
    ChainComplex,
    HomologyGroup,
    Poset,
    RegularCellComplexModel,
    barycentric_subdivision,
    boundary_matrices,
    euler_characteristic,
    homology,
    nerve,
    order_complex,
    simplicial_homology,
)
from .groups import (
    GroupElement,
    NotReflectionSymmetry,
    ReflectionGroup,
    SignedPermutation,
    check_transitive_free,
    reflection_group,
    symmetric_group_model,
)
from .orbits import (
    OrbitCellComplexModel,
    Presentation,
    boundary_word,
    coxeter_exponent,
    presentation,
    quotient_sal,
    relation_from_word,
)
from .salvetti import (
    NotEssentialError,
    SalCell,
    SalPoset,
    build_salvetti,
    check_sal_complex_order_iso,
    embed_vertices,
    from_complex_covector,
    sal_cell_complex,
    sal_homology,
    sal_order_complex,
    to_complex_covector,
)
from .signs import (
    ComplexSignVector,
    SignVector,
    check_covector_axioms,
    compose,
    opposite,
    separation,
    sign_leq,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
