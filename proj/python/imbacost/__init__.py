"""Binary-classification performance measures and their equivalent
misclassification-cost behavior under class imbalance."""

from ._core import (
    ApparentCosts,
    ClassRates,
    ConfusionMatrix,
    CostProfile,
    CostType,
    DegenerateMeasureError,
    DomainError,
    EmptyMatrixError,
    Error,
    Exactness,
    GaussianScenario,
    InvalidRatesError,
    Measure,
    MeasureId,
    MeasureValue,
    MissingClassError,
    OptimumSolution,
    Orientation,
    ParseError,
    Series,
    SweepEntry,
    Table,
    Verdict,
    accuracy_rates,
    apparent_costs_fbeta,
    bayes_boundary_equal_variance,
    bound_condition_holds,
    cost_profile,
    denormalize,
    eval_costs,
    evaluate,
    evaluate_all,
    fig3_series,
    fig4_series,
    fig5_series,
    format_value,
    measure_from_name,
    measure_name,
    minimum_value,
    normal_cdf,
    normal_cdf_complement,
    normalize,
    optimize_boundary,
    orientation_of,
    precision_recall,
    rates_at,
    risk_transform,
    series_to_csv,
    series_to_json,
    skew_ratio,
    sweep,
    table2,
    table3,
    table_to_csv,
    table_to_json,
    verify_cost_identity,
)

__version__ = "0.1.0"
