"""Reidemeister-Schreier computations for Coxeter-style group presentations.

Builds presentations of Coxeter, power-commutator and Artin-type groups,
computes kernel presentations of homomorphisms onto elementary abelian
2-groups, simplifies them with Tietze transformations, and verifies the
results with Todd-Coxeter coset enumeration and abelianization
invariants.
"""

from .presentations import (
    INF,
    CoxeterMatrix,
    EmbeddingInstance,
    HomZ2n,
    ParseError,
    PcSpec,
    Presentation,
    RewriteRules,
    artin_presentation,
    build_artin_instance,
    build_klein_instance,
    build_prop2_instance,
    build_thm1_instance,
    coxeter_presentation,
    parse_presentation,
    parse_word,
    pc_presentation,
    serialize_presentation,
    serialize_word,
)
from .schreier import (
    KernelPresentation,
    SchreierGen,
    SymbolDict,
    Transversal,
    check_hom,
    evaluated_kernel_presentation,
    image_rank,
    normalize_with_rules,
    raw_kernel_presentation,
    reidemeister_rewrite,
    schreier_word,
    transversal,
)
from .tietze import SimplifyConfig, SimplifyTrace, eliminate_generator, normalize_relators, simplify
from .verify import (
    AbelianInvariants,
    Budgets,
    CosetTable,
    VerifyReport,
    abelianization,
    group_order,
    match_presentations,
    regular_rep,
    smith_normal_form,
    todd_coxeter,
    verify_instance,
    word_holds,
)
from .words import (
    Word,
    commutator,
    concat,
    cyclic_reduce,
    free_reduce,
    invert,
    letter,
    power,
    relator_nf,
)
