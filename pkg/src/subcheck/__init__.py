"""Substitutability testing for choice functions induced by preference lists."""

__version__ = "0.1.0"

from .model import (  # noqa: E402
    EMPTY,
    AltSet,
    Outcome,
    PreferenceList,
    Universe,
    Verdict,
    Violation,
    Witness,
    from_names,
    normalize,
    prec,
)
from .choice import (  # noqa: E402
    CompletenessReport,
    PreconditionError,
    check_coherence,
    check_completeness,
    check_outcast,
    eval_choice,
    is_fixed_point,
)
from .checker import (  # noqa: E402
    FIGURE1,
    WITNESS,
    SensMatrix,
    build_sensitivity,
    find_witness_fast,
    find_witness_naive,
    verify_witness,
    witness_to_violation,
)
from .oracle import brute_force_check, enumerate_all_witnesses, full_choice_table  # noqa: E402
from .generators import (  # noqa: E402
    GenSpec,
    gen_complete_coherent,
    gen_random_coherent,
    gen_responsive,
    mutate_drop,
)
from .report import check  # noqa: E402
