//! Benchmark polynomial families and a timing harness.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::oracle_isolate;
use crate::poly::IntPoly;
use crate::vas::{IsolateOptions, Isolator, RootInterval};

/// Polynomial families used for benchmarking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Wilkinson `prod (x - i)`.
    W,
    /// `W_n - 1`.
    #[serde(rename = "mW")]
    MW,
    /// `prod (i x - 1)`.
    IW,
    /// `IW_n - 1`.
    #[serde(rename = "mIW")]
    MIW,
    /// Chebyshev, first kind.
    T,
    /// Chebyshev, second kind.
    U,
    /// Laguerre scaled by `n!`.
    L,
    /// Mignotte `x^n - 2 (5x - 1)^2`.
    M,
    /// Random dense/sparse.
    R,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::W,
        Family::MW,
        Family::IW,
        Family::MIW,
        Family::T,
        Family::U,
        Family::L,
        Family::M,
        Family::R,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::W => "W",
            Family::MW => "mW",
            Family::IW => "IW",
            Family::MIW => "mIW",
            Family::T => "T",
            Family::U => "U",
            Family::L => "L",
            Family::M => "M",
            Family::R => "R",
        }
    }

    /// Number of real roots when it is known in closed form.
    pub fn known_root_count(self, n: usize) -> Option<usize> {
        match self {
            Family::W | Family::IW | Family::T | Family::U | Family::L => Some(n),
            Family::MW if n > 10 => Some(n),
            Family::M if n >= 3 => Some(if n % 2 == 1 { 3 } else { 4 }),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchSpec {
    pub family: Family,
    pub n: usize,
    /// Coefficient magnitude bound (random family).
    pub b: u64,
    /// Probability that a lower coefficient is zero (random family).
    pub r: f64,
    pub seed: u64,
    pub trials: usize,
}

impl BenchSpec {
    pub fn new(family: Family, n: usize) -> Self {
        BenchSpec {
            family,
            n,
            b: 1 << 20,
            r: 0.5,
            seed: 0,
            trials: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        if self.trials < 1 {
            return Err(Error::InvalidSpec("trials must be at least 1".into()));
        }
        if self.family == Family::R {
            if self.b < 1 {
                return Err(Error::InvalidSpec("b must be at least 1".into()));
            }
            if !(0.0..1.0).contains(&self.r) {
                return Err(Error::InvalidSpec("r must lie in [0, 1)".into()));
            }
        }
        Ok(())
    }
}

fn lin(c0: i64, c1: i64) -> IntPoly {
    IntPoly::from_i64s(&[c0, c1])
}

fn three_term(
    n: usize,
    p0: IntPoly,
    p1: IntPoly,
    step: impl Fn(usize, &IntPoly, &IntPoly) -> IntPoly,
) -> IntPoly {
    if n == 0 {
        return p0;
    }
    let (mut prev, mut cur) = (p0, p1);
    for k in 1..n {
        let next = step(k, &cur, &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Family member for `spec`; the random family draws from `spec.seed`.
pub fn generate(spec: &BenchSpec) -> Result<IntPoly> {
    spec.validate()?;
    let n = spec.n;
    let poly = match spec.family {
        Family::W => (1..=n as i64).fold(IntPoly::one(), |acc, i| &acc * &lin(-i, 1)),
        Family::MW => &generate(&BenchSpec::new(Family::W, n))? - &IntPoly::one(),
        Family::IW => (1..=n as i64).fold(IntPoly::one(), |acc, i| &acc * &lin(-1, i)),
        Family::MIW => &generate(&BenchSpec::new(Family::IW, n))? - &IntPoly::one(),
        Family::T => {
            let two_x = lin(0, 2);
            three_term(n, IntPoly::one(), IntPoly::x(), |_, cur, prev| &(&two_x * cur) - prev)
        }
        Family::U => {
            let two_x = lin(0, 2);
            three_term(n, IntPoly::one(), lin(0, 2), |_, cur, prev| &(&two_x * cur) - prev)
        }
        // K_n = n! L_n satisfies K_{k+1} = (2k+1-x) K_k - k^2 K_{k-1}
        Family::L => three_term(n, IntPoly::one(), lin(1, -1), |k, cur, prev| {
            let k = k as i64;
            &(&lin(2 * k + 1, -1) * cur) - &(&IntPoly::constant(BigInt::from(k * k)) * prev)
        }),
        Family::M => {
            let sq = lin(-1, 5).pow(2);
            &IntPoly::monomial(BigInt::one(), n) - &(&IntPoly::constant(2.into()) * &sq)
        }
        Family::R => random_poly(n, spec.b, spec.r, spec.seed),
    };
    Ok(poly)
}

/// Degree-`n` polynomial: lower coefficients are zero with probability `r`,
/// otherwise uniform in `[1, b]` with a fair sign. The leading coefficient is
/// always nonzero.
fn random_poly(n: usize, b: u64, r: f64, seed: u64) -> IntPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let nonzero = i == n || !rng.gen_bool(r);
        if !nonzero {
            coeffs.push(BigInt::zero());
            continue;
        }
        let mag = BigInt::from(rng.gen_range(1..=b));
        coeffs.push(if rng.gen_bool(0.5) { mag } else { -mag });
    }
    IntPoly::new(coeffs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verification {
    Verified,
    Failed,
    /// Too large for the oracle and no closed-form count.
    Unchecked,
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verification::Verified => "true",
            Verification::Failed => "false",
            Verification::Unchecked => "unchecked",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub family: Family,
    pub n: usize,
    pub b: u64,
    pub r: f64,
    pub seed: u64,
    pub trial: usize,
    pub wall_seconds: f64,
    pub root_count: usize,
    pub verified: Verification,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    pub mean_seconds: f64,
}

/// Largest degree at which [`run`] still cross-checks with the Sturm oracle.
pub const ORACLE_MAX_DEGREE: usize = 64;

/// Runs `spec.trials` isolations. Trial `t` of the random family uses seed
/// `spec.seed + t`; the other families are deterministic.
pub fn run(spec: &BenchSpec, opts: IsolateOptions) -> Result<BenchReport> {
    spec.validate()?;
    let mut records = Vec::with_capacity(spec.trials);
    for trial in 0..spec.trials {
        let seed = spec.seed.wrapping_add(trial as u64);
        let poly = generate(&BenchSpec { seed, ..spec.clone() })?;
        let mut iso = Isolator::new(opts);
        let start = Instant::now();
        let roots = iso.isolate(&poly);
        let wall_seconds = start.elapsed().as_secs_f64();
        let (root_count, verified) = match roots {
            Ok(roots) => (roots.len(), verify(spec.family, spec.n, &poly, &roots)),
            Err(_) => (0, Verification::Failed),
        };
        records.push(BenchRecord {
            family: spec.family,
            n: spec.n,
            b: spec.b,
            r: spec.r,
            seed,
            trial,
            wall_seconds,
            root_count,
            verified,
        });
    }
    let mean_seconds = records.iter().map(|r| r.wall_seconds).sum::<f64>() / records.len() as f64;
    Ok(BenchReport {
        records,
        mean_seconds,
    })
}

fn verify(family: Family, n: usize, poly: &IntPoly, roots: &[RootInterval]) -> Verification {
    let ok = match family {
        Family::W => {
            roots.len() == n
                && roots
                    .iter()
                    .zip(1..)
                    .all(|(iv, i)| iv.contains(&BigRational::from_integer(BigInt::from(i))))
        }
        Family::IW => {
            roots.len() == n
                && roots
                    .iter()
                    .zip((1..=n as i64).rev())
                    .all(|(iv, i)| iv.contains(&BigRational::new(1.into(), i.into())))
        }
        f => match f.known_root_count(n) {
            Some(c) => roots.len() == c,
            None if poly.degree().unwrap_or(0) <= ORACLE_MAX_DEGREE => {
                match oracle_isolate(poly) {
                    Ok(o) => o.len() == roots.len(),
                    Err(_) => false,
                }
            }
            None => return Verification::Unchecked,
        },
    };
    if ok {
        Verification::Verified
    } else {
        Verification::Failed
    }
}

pub const CSV_HEADER: &str = "family,n,b,r,seed,trial,wall_seconds,root_count,verified";

/// CSV rows with header. `timing = false` writes `NA` for the wall time so
/// the output is reproducible byte for byte.
pub fn to_csv(records: &[BenchRecord], timing: bool) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let wall = if timing {
            format!("{:.6}", r.wall_seconds)
        } else {
            "NA".to_string()
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.family, r.n, r.b, r.r, r.seed, r.trial, wall, r.root_count, r.verified
        ));
    }
    out
}
