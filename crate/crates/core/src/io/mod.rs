//! Input parsing and result formatting.

mod format;
mod parse;

pub use format::{
    fmt_rational, format_results, parse_json_results, parse_rational, to_json_intervals,
    JsonInterval, JsonRational, OutputMode,
};
pub use parse::{parse_coeffs, parse_expression, parse_polynomial, parse_sparse, InputFormat};
