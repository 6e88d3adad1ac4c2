from .localmap import (
    AvailableInfo,
    BudgetExceeded,
    LocalMapResult,
    Q,
    SafenessChain,
    SafetyVerdict,
    ai_is_safe,
    available_info,
    equiv_step_generic,
    equiv_step_path,
    is_safe,
    mft_localmap,
    window,
)
