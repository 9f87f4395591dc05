"""Diagonal 2-minor ideals of simple graphs: Groebner bases under lex and
degrevlex, minimal primes of the anti-diagonal augmentations, and divisor
class group ranks, with brute-force oracles validating every claim.
"""

from .errors import DiagminError, InputError, ResourceGuardError, VerificationError
from .graphs import (
    Graph,
    canonical_form,
    enumerate_connected,
    family,
    from_edges,
    is_connected,
    load_graph,
    parse_edge_list,
    parse_family,
    relabel,
)
from .groebner import (
    buchberger,
    initial_ideal,
    is_reduced,
    is_squarefree,
    monomial_ideal_height,
    normal_form,
    reduce_basis,
    spoly,
)
from .ideals import (
    MinimalPrimeWitness,
    augment_with_antidiagonal,
    diagonal_minor,
    minor_ideal,
    witness_ideal,
)
from .monomials import DEGREVLEX, LEX, Monomial, MonomialOrder
from .polynomials import GeneratorSet, TwoTermPoly
from .structure import (
    ClassGroupReport,
    LexGBClassification,
    RevlexReport,
    SurveyResult,
    VertexSelection,
    class_group_rank,
    classify_element,
    enumerate_vertex_selections,
    find_graph_with_rank,
    lex_gb_classify,
    minimal_primes,
    selection_count_formula,
    survey,
    verify_revlex_gb,
)
from .variety import VarietyReport, variety_check

__version__ = "0.1.0"
