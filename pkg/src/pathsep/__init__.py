"""Path separators: constructions, exact verification, bounds and fault localisation."""

from .bounds import BoundsReport, binary_entropy, bounds_report, entropy_lower_bound, forest_psn
from .constructors import (
    ConstructionResult,
    construct,
    separator_complete,
    separator_forest,
    separator_general,
    separator_gnp,
    separator_hypercube,
)
from .exact import exact_psn
from .faultsim import campaign
from .generators import gen_complete, gen_gnp, gen_hypercube, gen_random_tree
from .graph import Graph, GraphError, Path, PathFamily, build_graph, signatures, validate_path
from .verify import SeparationReport, check_separator, check_test_set, is_separator, unseparated_pairs

__version__ = "0.1.0"
