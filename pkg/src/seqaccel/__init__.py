"""Convergence acceleration for numeric sequences over exact rationals.

Computes limits of slowly convergent sequences - and anti-limits of
divergent series - with the E-algorithm and Levin transforms, built on
lazy memoizing streams of arbitrary-precision rational numbers. See
README.md for the worked examples and the CLI.
"""
from .scalars import (
    ARITHMETIC_OPS,
    Element,
    Scalar,
    Undefined,
    UndefinedReason,
    add,
    div,
    int_pow,
    is_defined,
    mul,
    parse_scalar,
    render_decimal,
    sub,
)
from .streams import (
    NumStream,
    forward_difference,
    from_function,
    from_values,
    iota,
    last_defined,
    partial_sums,
    repeat_const,
    stream_map,
    stream_tail,
    take,
    zip_with,
)
from .transforms import (
    GConvention,
    Kind,
    Method,
    TransformSpec,
    aitken,
    e_algorithm,
    g_algorithm,
    g_initial,
    levin,
    levin_order2_form,
    remainder_estimate,
)
from .sequences import (
    BUILTIN_SEQUENCES,
    BuiltinSource,
    FileSource,
    SequenceParseError,
    SequenceSource,
    alternating_naturals_terms,
    catalan_stream,
    grandi_terms,
    leibniz_pi4_terms,
    load_sequence,
    open_source,
    plain_lambda_terms_stream,
)
from .estimators import (
    AccelerationReport,
    AtIndex,
    EvaluationMode,
    InsufficientTermsError,
    TakeLast,
    accelerate_sequence,
    growth_coefficient,
    ratio_stream,
    sum_series,
)

__version__ = "0.1.0"
