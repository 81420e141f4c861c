"""Flats, Whitney numbers and rank-2 uniform minors of small matroids over GF(q) geometries."""

from .errors import (
    DivideByZero,
    FormatError,
    InternalError,
    LoopElement,
    MatflatError,
    NotInClass,
    NotPrimePower,
    OutOfRange,
    ResourceLimit,
    Unsupported,
)
from .flats import (
    Flat,
    FlatLevels,
    check_sp_identities,
    enumerate_flats,
    flats_through,
    whitney,
    whitney_avoiding,
)
from .geometry import (
    GeometrySpec,
    build_ag,
    build_blokhuis,
    build_pg,
    build_pg_plus_free_point,
    build_uniform,
)
from .gf import FieldTable, build_field, largest_prime_power_leq
from .matroid import (
    LinearMatroid,
    Matroid,
    MinorView,
    PointLineMatroid,
    UniformMatroid,
    closure,
    contract,
    delete,
    is_gfq_representable_rank_le3,
    rank,
    restrict,
    simplify,
)
from .minors import (
    LineLengthReport,
    check_kung,
    check_whitney_bound,
    corollary_check,
    in_U,
    max_line_length,
)
from .qbinom import QBinom, check_qb_properties, qbinom, qbinom_product, qbinom_recursive
from .report import PaperReport
from .serialize import load_matroid, matroid_from_dict, matroid_to_dict
from .verify import verify_paper

__version__ = "0.1.0"
