"""Finite-model workbench for finite-character and choice principles."""

from ._config import (
    CapExceeded,
    FincharError,
    GrammarError,
    OrderError,
    UniverseMismatch,
    max_universe,
    universe_cap,
)
from .closures import (
    complement_duality_check,
    eng,
    eng_exists,
    is_finite_character,
    is_open,
    restrict,
)
from .gdc import (
    Relation,
    approximation,
    choice_witness,
    erase_bottom,
    is_downward_prime,
    lift_bottom,
    lift_choice,
    phi_step,
    positive_alignment,
    relation_of,
)
from .maximality import (
    Principle,
    evaluate_principle,
    is_maximal,
    max_elements,
    ttl_witness,
    updates,
)
from .model_core import (
    BOOL,
    UNIT,
    AlignmentOf,
    CanonicalList,
    Complement,
    DownwardClosureOf,
    Explicit,
    ListPredicate,
    RawList,
    SetBased,
    SubchainsOf,
    Subset,
    SubsetPredicate,
    Universe,
    canonicalize,
    enumerate_subsets,
    hat,
    list_subseteq,
    lp_member,
    star,
)
from .partial_functions import (
    PFun,
    empcf_witness,
    pf_graph,
    pf_updates,
    pfun_filter,
    project_unit,
)
from .zorn import (
    ChainGrammar,
    OrderedModel,
    chain_grammar_check,
    is_inductive,
    is_subchain,
    order_of_grammar,
    subchains_as_listpred,
    zorn_witness,
)

__all__ = [
    "AlignmentOf",
    "approximation",
    "BOOL",
    "canonicalize",
    "CanonicalList",
    "CapExceeded",
    "chain_grammar_check",
    "ChainGrammar",
    "choice_witness",
    "Complement",
    "complement_duality_check",
    "DownwardClosureOf",
    "empcf_witness",
    "eng",
    "eng_exists",
    "enumerate_subsets",
    "erase_bottom",
    "evaluate_principle",
    "Explicit",
    "FincharError",
    "GrammarError",
    "hat",
    "is_downward_prime",
    "is_finite_character",
    "is_inductive",
    "is_maximal",
    "is_open",
    "is_subchain",
    "lift_bottom",
    "lift_choice",
    "list_subseteq",
    "ListPredicate",
    "lp_member",
    "max_elements",
    "max_universe",
    "order_of_grammar",
    "OrderedModel",
    "OrderError",
    "pf_graph",
    "pf_updates",
    "PFun",
    "pfun_filter",
    "phi_step",
    "positive_alignment",
    "Principle",
    "project_unit",
    "RawList",
    "Relation",
    "relation_of",
    "restrict",
    "SetBased",
    "star",
    "subchains_as_listpred",
    "SubchainsOf",
    "Subset",
    "SubsetPredicate",
    "ttl_witness",
    "UNIT",
    "Universe",
    "universe_cap",
    "UniverseMismatch",
    "updates",
    "zorn_witness",
]

__version__ = "0.1.0"
