"""Word problem, normal forms, geodesics and conjugacy in graph products."""
from .amalgam import AmalgamInstance, SyllableWord, amalgam_wp, syllables, to_basis_word, wp_via_decomposition
from .conjugacy import CyclicForm, conjugate, cyclic_form, cyclically_reduce, is_cyclically_reduced, transposition_equiv
from .errors import *  # noqa: F401,F403
from .graph import GraphProduct, decompose, load_spec, parse_spec
from .nodegroups import Cyclic, FiniteCayley, FreeGroup, Integers, NodeGroup
from .traces import (
    build_dependence_graph,
    emit_dot,
    factor_match,
    is_reduced,
    linearize,
    normal_form,
    reduce_graph,
    shortlex_nf,
    trace_equal,
    word_problem,
)
from .words import Letter, format_word, parse_word

__version__ = "0.1.0"
