"""Hereditary base-b arithmetic, Goodstein-style sequences, Cantor normal
form mirrors below epsilon-zero, and an executable claim-audit harness."""

from .budget import DEFAULT_BUDGET, Budget
from .claims import (
    CLAIM_IDS,
    ClaimReport,
    Status,
    Verdict,
    run_suite,
    run_suite_on_results,
)
from .errors import (
    BudgetExceededError,
    GoodsteinError,
    InvalidBaseError,
    NonCanonicalError,
    OscillationError,
    ParseError,
    UnderflowError,
)
from .hereditary import (
    HereditaryRep,
    bump,
    compare_values,
    decompose,
    decrement,
    evaluate,
    max_coefficient,
    rank,
    rank_value,
    rebase,
    validate_canonical,
    zero,
)
from .notation import format_rep, parse_rep
from .ordinals import (
    Domination,
    MirrorAudit,
    Ordinal,
    compare,
    dominates_natural,
    format_ordinal,
    from_natural,
    mirror,
    parse_ordinal,
    verify_decreasing,
)
from .sequences import (
    GenerationResult,
    Outcome,
    PhaseProfile,
    SeqSpec,
    SeqTerm,
    SequenceKind,
    StepClass,
    classify_rep,
    classify_step,
    functional_eval,
    generate,
    goodstein_step,
    largest_term_base,
    phase_profile,
    predict_termination,
    term_records,
)

__version__ = "0.1.0"
