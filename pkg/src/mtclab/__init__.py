"""(1,2)-step competition graphs of multipartite tournaments."""

from .competition import (
    AdjacencyWitness,
    Method,
    WitnessKind,
    adjacent_fast,
    adjacent_oracle,
    competes,
    competition_graph,
    generic_ij_graph,
    one_two_competes,
    witness,
)
from .digraph import Digraph
from .errors import (
    ConfigError,
    DoubleOrientation,
    EnumerationTooLarge,
    InstanceTooLarge,
    IntraPartArc,
    InvalidExclusion,
    MissingCrossArc,
    MtcError,
    MtdSyntaxError,
    NotLoose,
    PartitionError,
    SameVertex,
    TooFewParts,
    UnknownTheorem,
    UnsupportedBound,
    VertexNotFound,
    VertexSetMismatch,
)
from .graph import SimpleGraph
from .harness import CATALOG, CheckResult, FuzzConfig, FuzzReport, Verdict, check, check_all, fuzz
from .mtd import parse_mtd, read_mtd, serialize_mtd
from .recognition import (
    find_asteroidal_triple,
    find_hole,
    is_c4_free,
    is_chordal,
    is_interval,
    maximum_cardinality_search,
)
from .structure import (
    classify_parts,
    components_and_diameters,
    domination_number,
    max_anti_competing_set,
    verify_block_structure,
)
from .tournament import (
    MultipartiteTournament,
    Partition,
    enumerate_tournaments,
    fixture,
    random_tournament,
    validate,
)

__version__ = "0.1.0"
