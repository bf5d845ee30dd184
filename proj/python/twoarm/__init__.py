"""Statistics for two-arm software-engineering experiments.

Thin re-export of the compiled extension. Everything lives in
``twoarm._core``; this package only pins the public surface.
"""

from ._core import (
    ArmSummary,
    BetaParams,
    DescriptiveStats,
    EffectSize,
    PowerEntry,
    PowerReport,
    RngState,
    StatError,
    TestResult,
    analyze_csv,
    beta_from_moments,
    beta_mean_sd,
    beta_pdf,
    brown_forsythe,
    coefficient_of_variation,
    cohens_d,
    dependent_t_test,
    derive_seed,
    describe,
    f_cdf,
    hedges_g,
    independent_t_test,
    ln_cvr,
    ln_gamma,
    normal_cdf,
    normal_quantile,
    one_way_anova,
    pdf_curve,
    reg_inc_beta,
    run_power_study,
    sample_beta,
    shapiro_wilk,
    simulate_scores,
    student_t_cdf,
    two_sided_t_p_value,
    variability_change_percent,
)

__version__ = "1.0.0"

__all__ = [
    "ArmSummary",
    "BetaParams",
    "DescriptiveStats",
    "EffectSize",
    "PowerEntry",
    "PowerReport",
    "RngState",
    "StatError",
    "TestResult",
    "analyze_csv",
    "beta_from_moments",
    "beta_mean_sd",
    "beta_pdf",
    "brown_forsythe",
    "coefficient_of_variation",
    "cohens_d",
    "dependent_t_test",
    "derive_seed",
    "describe",
    "f_cdf",
    "hedges_g",
    "independent_t_test",
    "ln_cvr",
    "ln_gamma",
    "normal_cdf",
    "normal_quantile",
    "one_way_anova",
    "pdf_curve",
    "reg_inc_beta",
    "run_power_study",
    "sample_beta",
    "shapiro_wilk",
    "simulate_scores",
    "student_t_cdf",
    "two_sided_t_p_value",
    "variability_change_percent",
]
