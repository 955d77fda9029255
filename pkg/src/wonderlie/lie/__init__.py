"""Lie algebras, representations, symmetric pairs and regularity data."""
from .algebra import LieAlgebra, LieAlgebraError, coordinates_solver, from_matrices, semidirect_double, subalgebra
from .catalog import (
    SymmetricPair,
    abelian,
    block_pair,
    covariant_count,
    get_algebra,
    get_pair,
    gl,
    pair_case,
    so,
    sp,
    sl,
)
from .io import OrbitRecord, SchemaError, load_algebra, load_orbit_data
from .regular import (
    CodimBound,
    StrataData,
    StrataError,
    Stratum,
    generic_stabilizer_dim,
    index,
    index_certificate,
    regular_locus_codim_bound,
)
from .representation import (
    Representation,
    RepresentationError,
    StabilizerData,
    adjoint,
    coadjoint,
    orbit_dim,
    stabilizer,
    trivial,
)


def bracket(g: LieAlgebra, x, y):
    return g.bracket(x, y)


__all__ = [
    "CodimBound",
    "LieAlgebra",
    "LieAlgebraError",
    "OrbitRecord",
    "Representation",
    "RepresentationError",
    "SchemaError",
    "StabilizerData",
    "StrataData",
    "StrataError",
    "Stratum",
    "SymmetricPair",
    "abelian",
    "adjoint",
    "block_pair",
    "bracket",
    "coadjoint",
    "coordinates_solver",
    "covariant_count",
    "from_matrices",
    "generic_stabilizer_dim",
    "get_algebra",
    "get_pair",
    "gl",
    "index",
    "index_certificate",
    "load_algebra",
    "load_orbit_data",
    "orbit_dim",
    "pair_case",
    "regular_locus_codim_bound",
    "semidirect_double",
    "so",
    "sp",
    "sl",
    "stabilizer",
    "subalgebra",
    "trivial",
]
