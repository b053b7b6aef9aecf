//! Formula-vs-oracle verification over a grid of `(μ, p, n)`.
//!
//! For each record, `m = n mod p`, the chain formula for `dim D^(n-|μ|, μ)`
//! at residue `m` is evaluated at `n` and compared with the Gram-matrix rank
//! over `F_p`. A record is in regime when the shape is a `p`-regular
//! partition and `n > p`; it is under the conjecture hypothesis when also
//! `p > k` and `n > 4k`, with `k = |μ|`. Only in-regime records under the
//! hypothesis decide pass or fail.

use std::fmt;
use std::ops::RangeInclusive;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::decomposition::irreducible_dimension_formula;
use crate::dimension::PaddedShape;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::oracle::{gram_rank_mod_p, OracleConfig};
use crate::partition::{is_p_regular, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub mu: Partition,
    pub p: u64,
    pub n: usize,
    pub m: usize,
    pub formula_dim: Option<i64>,
    pub oracle_dim: Option<usize>,
    #[serde(rename = "match")]
    pub matched: bool,
    pub in_regime: bool,
    /// `p > k` and `n > 4k`.
    pub hypothesis: bool,
    pub note: Option<String>,
    pub error: Option<String>,
}

impl VerificationRecord {
    pub fn k(&self) -> usize {
        self.mu.size()
    }

    /// In regime, under the hypothesis, and disagreeing.
    pub fn is_failure(&self) -> bool {
        self.in_regime && self.hypothesis && !self.matched
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub total: usize,
    pub in_regime: usize,
    pub out_of_regime: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub hypothesis_records: usize,
    pub hypothesis_mismatches: usize,
    pub informational_mismatches: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub grid: Vec<VerificationRecord>,
    pub summary: VerificationSummary,
}

impl VerificationReport {
    fn from_grid(grid: Vec<VerificationRecord>) -> Self {
        let mut s = VerificationSummary {
            total: grid.len(),
            ..Default::default()
        };
        for r in &grid {
            if r.error.is_some() {
                s.errors += 1;
            }
            if r.in_regime {
                s.in_regime += 1;
                if r.matched {
                    s.matches += 1;
                } else {
                    s.mismatches += 1;
                }
                if r.hypothesis {
                    s.hypothesis_records += 1;
                    if !r.matched {
                        s.hypothesis_mismatches += 1;
                    }
                }
            } else {
                s.out_of_regime += 1;
                if r.formula_dim.is_some() && r.oracle_dim.is_some() && !r.matched {
                    s.informational_mismatches += 1;
                }
            }
        }
        VerificationReport { grid, summary: s }
    }

    /// True iff some in-regime record under the hypothesis mismatches.
    pub fn has_failures(&self) -> bool {
        self.grid.iter().any(VerificationRecord::is_failure)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<10} {:>4} {:>4} {:>4} {:>10} {:>10}  {:<8} {:<5} {:<5}",
            "mu", "p", "n", "m", "formula", "oracle", "result", "reg", "hyp"
        )?;
        for r in &self.grid {
            let show = |v: Option<String>| v.unwrap_or_else(|| "-".into());
            let result = if r.error.is_some() {
                "error"
            } else if r.matched {
                "match"
            } else {
                "MISMATCH"
            };
            write!(
                f,
                "{:<10} {:>4} {:>4} {:>4} {:>10} {:>10}  {:<8} {:<5} {:<5}",
                r.mu.to_string(),
                r.p,
                r.n,
                r.m,
                show(r.formula_dim.map(|d| d.to_string())),
                show(r.oracle_dim.map(|d| d.to_string())),
                result,
                if r.in_regime { "yes" } else { "no" },
                if r.hypothesis { "yes" } else { "no" },
            )?;
            if let Some(note) = r.note.as_ref().or(r.error.as_ref()) {
                write!(f, "  {note}")?;
            }
            writeln!(f)?;
        }
        let s = &self.summary;
        writeln!(
            f,
            "records: {}  in regime: {}  matches: {}  mismatches: {}  \
             under hypothesis: {} ({} mismatched)  out of regime: {} ({} informational mismatches)  errors: {}",
            s.total,
            s.in_regime,
            s.matches,
            s.mismatches,
            s.hypothesis_records,
            s.hypothesis_mismatches,
            s.out_of_regime,
            s.informational_mismatches,
            s.errors
        )
    }
}

fn verify_one(mu: &Partition, p: u64, n: usize, oracle: &OracleConfig) -> VerificationRecord {
    let k = mu.size();
    let m = n % p as usize;
    let mut rec = VerificationRecord {
        mu: mu.clone(),
        p,
        n,
        m,
        formula_dim: None,
        oracle_dim: None,
        matched: false,
        in_regime: false,
        hypothesis: (p as usize) > k && n > 4 * k,
        note: None,
        error: None,
    };
    let shape = PaddedShape::new(mu.clone());
    let Some(lambda) = shape.at(n) else {
        rec.note = Some(format!("(n-{k},{mu}) is not a partition"));
        return rec;
    };
    let regular = match is_p_regular(&lambda, p) {
        Ok(r) => r,
        Err(e) => {
            rec.error = Some(e.to_string());
            return rec;
        }
    };
    rec.in_regime = regular && n > p as usize;
    if !regular {
        rec.note = Some(format!("{lambda} is {p}-singular"));
    } else if n <= p as usize {
        rec.note = Some("n <= p".into());
    }

    let formula = irreducible_dimension_formula(&shape, m).and_then(|poly| {
        poly.eval_integer(n as i64)
            .and_then(|v| v.to_i64())
            .ok_or_else(|| Error::InvalidArgument(format!("formula {poly} is not an integer at n = {n}")))
    });
    let oracle_dim = gram_rank_mod_p(&lambda, p, oracle);
    let mut errors = Vec::new();
    match formula {
        Ok(v) => rec.formula_dim = Some(v),
        Err(e) => errors.push(format!("formula: {e}")),
    }
    match oracle_dim {
        Ok(v) => rec.oracle_dim = Some(v),
        Err(e) => errors.push(format!("oracle: {e}")),
    }
    if !errors.is_empty() {
        rec.error = Some(errors.join("; "));
    }
    rec.matched = match (rec.formula_dim, rec.oracle_dim) {
        (Some(f), Some(o)) => f >= 0 && f as usize == o,
        _ => false,
    };
    rec
}

/// Evaluates every `(μ, p, n)` in lexicographic order. Record failures are
/// captured per record; the grid is always completed. `p` values are
/// checked for primality up front.
pub fn run_verification(
    mus: &[Partition],
    primes: &[u64],
    n_range: RangeInclusive<usize>,
    oracle: &OracleConfig,
    exec: Execution,
) -> Result<VerificationReport> {
    for &p in primes {
        crate::check_prime(p)?;
    }
    let mut cells: Vec<(&Partition, u64, usize)> = Vec::new();
    for mu in mus {
        for &p in primes {
            cells.extend(n_range.clone().map(|n| (mu, p, n)));
        }
    }
    let grid = exec.map(&cells, |&(mu, p, n)| verify_one(mu, p, n, oracle));
    Ok(VerificationReport::from_grid(grid))
}
