//! Text and JSON rendering of isolation results.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vas::RootInterval;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Human,
    Json,
}

impl FromStr for OutputMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "human" => Ok(OutputMode::Human),
            "json" => Ok(OutputMode::Json),
            _ => Err(Error::InvalidSpec(format!("unknown output mode {s:?}"))),
        }
    }
}

/// `p/q` with the denominator always written, e.g. `0/1`, `-3/2`.
pub fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("bad rational {s:?}"),
    };
    let (n, d) = s.trim().split_once('/').unwrap_or((s.trim(), "1"));
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRational {
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonInterval {
    pub kind: String,
    pub lo: JsonRational,
    pub hi: JsonRational,
}

fn to_json_rational(r: &Rational) -> JsonRational {
    JsonRational {
        num: r.numer().to_string(),
        den: r.denom().to_string(),
    }
}

fn from_json_rational(j: &JsonRational) -> Result<Rational> {
    parse_rational(&format!("{}/{}", j.num, j.den))
}

pub fn to_json_intervals(roots: &[RootInterval]) -> Vec<JsonInterval> {
    roots
        .iter()
        .map(|iv| JsonInterval {
            kind: match iv {
                RootInterval::Exact(_) => "exact".into(),
                RootInterval::Open(..) => "open".into(),
            },
            lo: to_json_rational(iv.lo()),
            hi: to_json_rational(iv.hi()),
        })
        .collect()
}

pub fn format_results(roots: &[RootInterval], mode: OutputMode) -> String {
    let mut sorted = roots.to_vec();
    sorted.sort_by(RootInterval::sort_key);
    match mode {
        OutputMode::Human => {
            let mut out = String::new();
            for iv in &sorted {
                let (lo, hi) = (fmt_rational(iv.lo()), fmt_rational(iv.hi()));
                match iv {
                    RootInterval::Exact(_) => writeln!(out, "[{lo}, {hi}]"),
                    RootInterval::Open(..) => writeln!(out, "({lo}, {hi})"),
                }
                .expect("writing to a String");
            }
            out
        }
        OutputMode::Json => serde_json::to_string(&to_json_intervals(&sorted))
            .expect("intervals serialize"),
    }
}

/// Inverse of the JSON output mode.
pub fn parse_json_results(text: &str) -> Result<Vec<RootInterval>> {
    let items: Vec<JsonInterval> = serde_json::from_str(text).map_err(|e| Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    })?;
    items
        .iter()
        .map(|j| {
            let lo = from_json_rational(&j.lo)?;
            let hi = from_json_rational(&j.hi)?;
            match j.kind.as_str() {
                "exact" if lo == hi => Ok(RootInterval::Exact(lo)),
                "open" if lo < hi => Ok(RootInterval::Open(lo, hi)),
                k => Err(Error::Parse {
                    pos: 0,
                    msg: format!("inconsistent {k:?} interval"),
                }),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn human_examples() {
        assert_eq!(format_results(&[RootInterval::exact_int(0)], OutputMode::Human), "[0/1, 0/1]\n");
        assert_eq!(
            format_results(&[RootInterval::Open(q(1, 1), q(2, 1))], OutputMode::Human),
            "(1/1, 2/1)\n"
        );
        assert_eq!(format_results(&[], OutputMode::Human), "");
        assert_eq!(format_results(&[], OutputMode::Json), "[]");
    }

    #[test]
    fn human_output_is_sorted() {
        let roots = [RootInterval::exact_int(3), RootInterval::Open(q(-3, 2), q(-1, 3))];
        assert_eq!(format_results(&roots, OutputMode::Human), "(-3/2, -1/3)\n[3/1, 3/1]\n");
    }

    #[test]
    fn json_round_trip() {
        let big = BigRational::new(BigInt::from(7) << 200, BigInt::from(3));
        let roots = vec![
            RootInterval::Open(q(-5, 4), q(-1, 2)),
            RootInterval::Exact(q(2, 3)),
            RootInterval::Open(q(1, 1), big),
        ];
        let text = format_results(&roots, OutputMode::Json);
        assert!(text.starts_with(r#"[{"kind":"open","lo":{"num":"-5","den":"4"}"#));
        assert_eq!(parse_json_results(&text).unwrap(), roots);
    }

    #[test]
    fn rational_text() {
        assert_eq!(fmt_rational(&q(6, -4)), "-3/2");
        assert_eq!(parse_rational("-3/2").unwrap(), q(-3, 2));
        assert_eq!(parse_rational("5").unwrap(), q(5, 1));
        assert!(parse_rational("1/0").is_err());
    }
}
