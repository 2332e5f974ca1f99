"""Free pregroups: reduction, parsing and causal-connectivity analysis of pregroup grammars."""

from .algebra import (
    GeneratorPoset,
    PregroupWord,
    SimpleTerm,
    contractible_pair,
    expandable_pair,
    induced_leq,
    left_adjoint,
    multiply,
    right_adjoint,
    word,
    words_over,
)
from .causal import (
    CausalGraph,
    ConnectivityReport,
    ModelCheckReport,
    acyclicity_sweep,
    causal_graph,
    check_s_connected,
    check_simply_reducing,
    lint_down_closure,
    sentence_connected,
    simply_reduces,
    to_dot,
)
from .errors import (
    ConsistencyError,
    MalformedInputError,
    ModelError,
    PreconditionError,
    PregroupError,
    UnknownNameError,
)
from .grammar import (
    BracketedWord,
    ParseResult,
    PregroupModel,
    bracket,
    load_grammar,
    loads_grammar,
    parse,
    parse_surface,
)
from .oracle import closure, down_closure, oracle_leq, step_down
from .reduction import (
    Link,
    LinkDiagram,
    Verdict,
    contracts_to_empty,
    count_reductions,
    enumerate_reductions,
    expands_from_empty,
    iter_reductions,
    leq,
    reduces_to_simple,
)
from .render import render_diagram

__all__ = [name for name in dir() if not name.startswith("_")]
