"""Chain-complex invariants of knots over the graded ring Z[G]."""

from .complexes import (
    GElem,
    Generator,
    GradedComplex,
    ComplexBuilder,
    LaurentBiPoly,
    validate,
    graded_rank,
    shift,
    dual,
    direct_sum,
    tensor,
    euler_char,
    unit_complex,
    empty_complex,
    to_json,
    from_json,
)
from .simplify import (
    FieldComplex,
    NormalForm,
    NotKnotLikeError,
    cancel_pivot,
    reduce,
    field_normal_form,
    split_summands,
)
from .invariants import SZTuple, knotlike_check, rasmussen_s, schuetz_sz
from .staircase import (
    StairNormalForm,
    build_staircase,
    build_ck,
    parse_stair_expr,
    stair_normal_form,
)
from .zeq import (
    ChainMapLattice,
    InverseWitness,
    generator_cycle,
    chain_map_lattice,
    z_iso_exists,
    z_equivalent,
    distance_d,
    inverse_witness,
)
from .khovanov import (
    PDCode,
    ResourceCapError,
    parse_pd,
    parse_braid,
    build_complex,
    positive_diagram_degree_check,
    mirror_pd,
    connected_sum_pd,
)

__all__ = [
    "GElem",
    "Generator",
    "GradedComplex",
    "ComplexBuilder",
    "LaurentBiPoly",
    "validate",
    "graded_rank",
    "shift",
    "dual",
    "direct_sum",
    "tensor",
    "euler_char",
    "unit_complex",
    "empty_complex",
    "to_json",
    "from_json",
    "FieldComplex",
    "NormalForm",
    "NotKnotLikeError",
    "cancel_pivot",
    "reduce",
    "field_normal_form",
    "split_summands",
    "SZTuple",
    "knotlike_check",
    "rasmussen_s",
    "schuetz_sz",
    "StairNormalForm",
    "build_staircase",
    "build_ck",
    "parse_stair_expr",
    "stair_normal_form",
    "ChainMapLattice",
    "InverseWitness",
    "generator_cycle",
    "chain_map_lattice",
    "z_iso_exists",
    "z_equivalent",
    "distance_d",
    "inverse_witness",
    "PDCode",
    "ResourceCapError",
    "parse_pd",
    "parse_braid",
    "build_complex",
    "positive_diagram_degree_check",
    "mirror_pd",
    "connected_sum_pd",
]
