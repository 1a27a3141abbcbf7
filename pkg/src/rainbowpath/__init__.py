"""Rainbow (heterochromatic) paths in edge-colored, rainbow-triangle-free graphs."""

from .analysis import (
    EndpointAnalysis,
    LemmaCheck,
    analyze_endpoints,
    check_lemma1,
    check_lemma2,
    verify_bound34,
)
from .builder import (
    AssumptionViolated,
    BuilderState,
    NotGallai,
    build_rainbow_u_path,
    builder_step,
    check_condition_a,
    select_rainbow_fan,
)
from .generators import (
    gen_gallai_substitution,
    gen_gk,
    gen_kgood_triangle_free,
    gen_uniform_coloring,
)
from .graph import (
    EdgeColoredGraph,
    InputError,
    VertexPath,
    color_degree,
    color_neighborhood,
    find_rainbow_triangle,
    is_gallai_complete,
    validate_path,
)
from .graph_io import ParseError, parse_graph, write_graph
from .oracle import SearchBudget, longest_rainbow_path

__version__ = "0.1.0"
