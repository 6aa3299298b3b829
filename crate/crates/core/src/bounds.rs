//! Diameter estimates for a symmetric graph from its order `n`, degree `k`,
//! even girth `g` and the number `η` of g-cycles through a vertex.
//!
//! `r_max`, `n0` and `n_max` are exact; logarithms are taken in `f64` only at
//! the last step, and every float is snapped to a nearby integer before a
//! floor or ceiling so that exact boundary cases do not round the wrong way.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Values within this distance of an integer are treated as that integer
/// before rounding.
pub const SNAP_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsInput {
    pub n: BigUint,
    pub k: u32,
    pub g: u32,
    pub eta: u64,
}

/// Which closed form produced `d_min`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DminBranch {
    /// `r_max ≠ 1`: geometric growth, logarithmic in `n`.
    Geometric,
    /// `r_max = 1`: linear growth.
    Linear,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundsReport {
    pub r_max: BigRational,
    pub n0: BigUint,
    pub d_min: i64,
    pub branch: DminBranch,
    /// `f64::INFINITY` when `r_max = 1`.
    pub d_probab: f64,
    pub bv_lower: i64,
    pub bv_upper: i64,
}

fn check_kg(k: u32, g: u32) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidParameters(format!("degree {k} < 3")));
    }
    if g < 4 || g % 2 == 1 {
        return Err(Error::InvalidParameters(format!("girth {g} must be even and ≥ 4")));
    }
    Ok(())
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

/// `k (k−1)^(g/2 − 2)`: the size of the last shell before the first
/// g-cycles close.
fn inner_shell(k: u32, g: u32) -> BigInt {
    big(k as u64) * big(k as u64 - 1).pow(g / 2 - 2)
}

/// `k (k−1)^(g/2 − 1)`: the shell at distance g/2 if no cycle closed.
fn tree_shell(k: u32, g: u32) -> BigInt {
    big(k as u64) * big(k as u64 - 1).pow(g / 2 - 1)
}

/// Upper bound on the branching ratio from distance g/2 on:
/// `(k(k−1)^(g/2−1) − η) / (k(k−1)^(g/2−2))`.
pub fn r_max(k: u32, g: u32, eta: u64) -> Result<BigRational> {
    check_kg(k, g)?;
    let shell = tree_shell(k, g);
    let numer = &shell - big(eta);
    if !numer.is_positive() {
        return Err(Error::EtaExceedsShell {
            eta,
            shell: shell.to_u128().unwrap_or(u128::MAX),
        });
    }
    Ok(BigRational::new(numer, inner_shell(k, g)))
}

/// Vertices within distance g/2 − 1 of a vertex: `1 + k + … + k(k−1)^(g/2−2)`.
pub fn n0(k: u32, g: u32) -> Result<BigUint> {
    check_kg(k, g)?;
    let (q, r) = (tree_shell(k, g) - big(2)).div_rem(&big(k as u64 - 2));
    debug_assert!(r.is_zero());
    Ok(q.to_biguint().expect("n0 is positive"))
}

/// Largest order compatible with diameter `d` if every shell from g/2 on
/// grows by `r_max`.
pub fn n_max(k: u32, g: u32, eta: u64, d: u32) -> Result<BigUint> {
    let r = r_max(k, g, eta)?;
    if d + 1 < g / 2 {
        return Err(Error::InvalidParameters(format!("diameter {d} < g/2 − 1")));
    }
    let base = BigRational::from(inner_shell(k, g));
    let mut sum = BigRational::from(BigInt::from(n0(k, g)?));
    let mut term = base;
    for _ in 0..(d + 1 - g / 2) {
        term *= &r;
        sum += &term;
    }
    Ok(sum.floor().to_integer().to_biguint().expect("n_max is positive"))
}

fn snap(x: f64) -> f64 {
    let nearest = x.round();
    if (x - nearest).abs() < SNAP_TOLERANCE {
        nearest
    } else {
        x
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("finite ratio")
}

fn ln_big(n: &BigUint) -> f64 {
    n.to_f64().expect("order within f64 range").ln()
}

/// Strict lower bound on the diameter, with the branch that produced it.
pub fn d_min_with_branch(n: &BigUint, k: u32, g: u32, eta: u64) -> Result<(i64, DminBranch)> {
    let r = r_max(k, g, eta)?;
    let n0 = n0(k, g)?;
    if *n <= n0 {
        return Err(Error::OrderWithinMooreShell {
            n: n.to_string(),
            n0: n0.to_string(),
        });
    }
    let excess = BigRational::from(BigInt::from(n - &n0));
    let base = BigRational::from(inner_shell(k, g));
    let half = (g / 2) as i64;

    if r.is_one() {
        let value = BigRational::from(big((half - 1) as u64)) + excess / base;
        let d = value.ceil().to_integer().to_i64().expect("d_min fits i64");
        return Ok((d, DminBranch::Linear));
    }

    let one = BigRational::one();
    let arg = excess * (&r - &one) / base + &r;
    if !arg.is_positive() {
        return Err(Error::OrderBeyondGrowthLimit {
            n: n.to_string(),
            r_max: r.to_string(),
        });
    }
    let value = (half - 2) as f64 + ratio_to_f64(&arg).ln() / ratio_to_f64(&r).ln();
    Ok((snap(value).ceil() as i64, DminBranch::Geometric))
}

pub fn d_min(n: &BigUint, k: u32, g: u32, eta: u64) -> Result<i64> {
    d_min_with_branch(n, k, g, eta).map(|(d, _)| d)
}

/// Probabilistic estimate `log_{r_max} n + ln n / r_max`; infinite when
/// `r_max = 1`.
pub fn d_probab(n: &BigUint, k: u32, g: u32, eta: u64) -> Result<f64> {
    let r = r_max(k, g, eta)?;
    if r.is_one() {
        return Ok(f64::INFINITY);
    }
    let r = ratio_to_f64(&r);
    let ln_n = ln_big(n);
    Ok(ln_n / r.ln() + ln_n / r)
}

fn check_bv(n: &BigUint, k: u32) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidParameters(format!("degree {k} < 3")));
    }
    if *n < BigUint::from(3u32) {
        return Err(Error::InvalidParameters(format!("order {n} < 3")));
    }
    Ok(())
}

/// Bollobás–de la Vega lower bound for random k-regular graphs, natural
/// log for the bare `log n`. May be zero or negative for tiny `n`.
pub fn bv_lower(n: &BigUint, k: u32) -> Result<i64> {
    check_bv(n, k)?;
    let ln_base = (k as f64 - 1.0).ln();
    let ln_n = ln_big(n);
    let k = k as f64;
    let first = snap(ln_n / ln_base).floor();
    let second = snap((ln_n.ln() - (6.0 * k / (k - 2.0)).ln()) / ln_base).floor();
    Ok(first as i64 + second as i64 + 1)
}

/// Bollobás–de la Vega upper bound `⌈log_{k−1}((2+ε) k n ln n)⌉ + 1`.
pub fn bv_upper(n: &BigUint, k: u32, epsilon: f64) -> Result<i64> {
    check_bv(n, k)?;
    if epsilon.is_nan() || epsilon < 0.0 {
        return Err(Error::InvalidParameters(format!("epsilon {epsilon} < 0")));
    }
    let ln_base = (k as f64 - 1.0).ln();
    let ln_n = ln_big(n);
    let ln_arg = (2.0 + epsilon).ln() + (k as f64).ln() + ln_n + ln_n.ln();
    Ok(snap(ln_arg / ln_base).ceil() as i64 + 1)
}

pub fn bounds_report(input: &BoundsInput) -> Result<BoundsReport> {
    bounds_report_with_epsilon(input, 0.0)
}

pub fn bounds_report_with_epsilon(input: &BoundsInput, epsilon: f64) -> Result<BoundsReport> {
    let BoundsInput { n, k, g, eta } = input;
    let (d_min, branch) = d_min_with_branch(n, *k, *g, *eta)?;
    Ok(BoundsReport {
        r_max: r_max(*k, *g, *eta)?,
        n0: n0(*k, *g)?,
        d_min,
        branch,
        d_probab: d_probab(n, *k, *g, *eta)?,
        bv_lower: bv_lower(n, *k)?,
        bv_upper: bv_upper(n, *k, epsilon)?,
    })
}
