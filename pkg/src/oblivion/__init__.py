"""Forgetting, marginalisation, and postulate verification for propositional
belief states.

The package computes knowledge-level forgetting of atoms (reduced and
original language), substitution-based variable elimination, and the
marginalisation and lifting of ranking functions, all on explicitly
enumerated model sets over small signatures. On top of that sit executable
checkers for the forgetting postulate families (DFP, DFPes, DFPes-L), the
most-specific-operator bound, and an exhaustive census of belief-level
formula-forgetting operators.
"""

from .errors import (
    FileFormatError,
    FormulaSyntaxError,
    InconsistentBeliefsError,
    OblivionError,
    OcfValidationError,
    OperatorContractError,
    SignatureError,
    SignatureMismatchError,
    SizeCapError,
    UnknownAtomError,
)
from .forgetting import (
    KnowledgeBase,
    boole_forget,
    check_boole_equivalence,
    forget_original,
    forget_reduced,
    load_kb,
    loads_kb,
    substitute,
)
from .logic import (
    And,
    Atom,
    BeliefState,
    Bottom,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Signature,
    Top,
    World,
    all_worlds,
    canonical_formula,
    elementary_equivalent,
    entails,
    equivalent,
    evaluate,
    expand_worlds,
    formula_atoms,
    max_signature_atoms,
    models,
    parse_formula,
    reduce_worlds,
    render_formula,
)
from .ocf import (
    Ocf,
    Rank,
    beliefs,
    believes,
    dumps_ocf,
    lift,
    load_ocf,
    loads_ocf,
    make_ocf,
    marginalise,
    ocf_from_beliefs,
    rank_of,
)
from .postulates import (
    CensusReport,
    FormulaForgetOperator,
    PostulateReport,
    SignatureForgetOperator,
    SuiteResult,
    check_conjunction_collapse,
    check_dfp,
    check_dfpes_formula,
    check_dfpes_signature,
    check_most_specific,
    check_syntax_independence,
    contraction_formula_operator,
    generic_signature,
    get_formula_operator,
    get_signature_operator,
    identity_formula_operator,
    marginalisation_operator,
    operator_from_census_table,
    replay_report,
    run_dfp_suite,
    run_dfpes_formula_suite,
    run_dfpes_signature_suite,
    triviality_census,
    trivial_formula_operator,
    uniform_eraser_operator,
)

__version__ = "0.1.0"

__all__ = [
    "And", "Atom", "BeliefState", "Bottom", "CensusReport", "FileFormatError",
    "Formula", "FormulaForgetOperator", "FormulaSyntaxError", "Iff", "Implies",
    "InconsistentBeliefsError", "KnowledgeBase", "Not", "OblivionError", "Ocf",
    "OcfValidationError", "OperatorContractError", "Or", "PostulateReport",
    "Rank", "Signature", "SignatureError", "SignatureForgetOperator",
    "SignatureMismatchError", "SizeCapError", "SuiteResult", "Top",
    "UnknownAtomError", "World", "all_worlds", "beliefs", "believes",
    "boole_forget", "canonical_formula", "check_boole_equivalence",
    "check_conjunction_collapse", "check_dfp", "check_dfpes_formula",
    "check_dfpes_signature", "check_most_specific", "check_syntax_independence",
    "contraction_formula_operator", "dumps_ocf", "elementary_equivalent",
    "entails", "equivalent", "evaluate", "expand_worlds", "forget_original",
    "forget_reduced", "formula_atoms", "generic_signature",
    "get_formula_operator", "get_signature_operator",
    "identity_formula_operator", "lift", "load_kb", "load_ocf", "loads_kb",
    "loads_ocf", "make_ocf", "marginalisation_operator", "marginalise",
    "max_signature_atoms", "models", "ocf_from_beliefs",
    "operator_from_census_table", "parse_formula", "rank_of", "reduce_worlds",
    "render_formula", "replay_report", "run_dfp_suite",
    "run_dfpes_formula_suite", "run_dfpes_signature_suite", "substitute",
    "triviality_census", "trivial_formula_operator", "uniform_eraser_operator",
]
