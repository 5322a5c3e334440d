//! Brute-force Schur polynomials and the branching oracle built on them.
//!
//! Nothing here consults the interlacing rule: the oracle expands `s_x` by semistandard
//! tableaux and peels off Schur polynomials in one fewer variable by leading monomials.

use std::collections::BTreeMap;

use super::{validate_highest_weight, weyl_dim};
use crate::error::{Error, Result};

/// Inputs whose representation is larger than this are refused.
pub const ORACLE_DIM_CAP: u64 = 100_000;

/// A sparse polynomial keyed by exponent vectors. Iteration order is lexicographic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurPolynomial {
    pub n_vars: usize,
    pub terms: BTreeMap<Vec<u32>, i64>,
}

impl SchurPolynomial {
    pub fn coefficient(&self, exponent: &[u32]) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Invariance under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n_vars.saturating_sub(1)).all(|k| {
            self.terms.iter().all(|(e, c)| {
                let mut swapped = e.clone();
                swapped.swap(k, k + 1);
                self.coefficient(&swapped) == *c
            })
        })
    }
}

fn fill(
    shape: &[usize],
    n_vars: usize,
    cells: &[(usize, usize)],
    k: usize,
    grid: &mut [Vec<u32>],
    content: &mut [u32],
    out: &mut BTreeMap<Vec<u32>, i64>,
) {
    let Some(&(r, c)) = cells.get(k) else {
        *out.entry(content.to_vec()).or_insert(0) += 1;
        return;
    };
    let left = if c > 0 { grid[r][c - 1] } else { 1 };
    let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    let depth_below = shape.iter().skip(r + 1).filter(|&&len| len > c).count() as u32;
    let hi = n_vars as u32 - depth_below;
    for v in left.max(above)..=hi {
        grid[r][c] = v;
        content[v as usize - 1] += 1;
        fill(shape, n_vars, cells, k + 1, grid, content, out);
        content[v as usize - 1] -= 1;
    }
}

/// The monomial expansion of `s_x(z_1, ..., z_N)`, from semistandard tableaux of shape `x`.
pub fn schur_expand(x: &[i64], n_vars: usize) -> Result<SchurPolynomial> {
    validate_highest_weight(x)?;
    if let Some(&neg) = x.iter().find(|&&a| a < 0) {
        return Err(Error::domain(format!(
            "negative entry {neg}; shift the weight first"
        )));
    }
    let shape: Vec<usize> = x.iter().filter(|&&a| a > 0).map(|&a| a as usize).collect();
    let mut terms = BTreeMap::new();
    if shape.len() > n_vars {
        return Ok(SchurPolynomial { n_vars, terms });
    }
    let mut padded = x[..x.len().min(n_vars)].to_vec();
    padded.resize(n_vars, 0);
    let dim = weyl_dim(&padded)?;
    if dim > ORACLE_DIM_CAP {
        return Err(Error::Capacity(format!(
            "dimension {dim} exceeds {ORACLE_DIM_CAP}"
        )));
    }
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0u32; n_vars];
    fill(
        &shape,
        n_vars,
        &cells,
        0,
        &mut grid,
        &mut content,
        &mut terms,
    );
    Ok(SchurPolynomial { n_vars, terms })
}

/// Decomposes `V_x` restricted to `U(n-1)` by elimination; returns `y -> multiplicity`.
///
/// Weights with negative entries are shifted by a scalar before expansion and shifted back.
pub fn branch_oracle(x: &[i64]) -> Result<BTreeMap<Vec<i64>, u64>> {
    validate_highest_weight(x)?;
    let n = x.len();
    if n == 0 {
        return Err(Error::shape("branch_oracle needs n >= 1"));
    }
    let shift = (-x[n - 1]).max(0);
    let shifted: Vec<i64> = x.iter().map(|a| a + shift).collect();
    let poly = schur_expand(&shifted, n)?;

    // Grade by the exponent of the last variable.
    let mut graded: BTreeMap<u32, BTreeMap<Vec<u32>, i64>> = BTreeMap::new();
    for (e, c) in poly.terms {
        let (z, t) = e.split_at(n - 1);
        *graded
            .entry(t[0])
            .or_default()
            .entry(z.to_vec())
            .or_insert(0) += c;
    }

    let mut out = BTreeMap::new();
    for (_, mut part) in graded {
        while let Some((lead, c)) = part.iter().next_back().map(|(e, c)| (e.clone(), *c)) {
            if c <= 0 {
                return Err(Error::Internal(format!(
                    "non-positive leading coefficient {c} at {lead:?}"
                )));
            }
            if lead.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::Internal(format!(
                    "leading monomial {lead:?} is not a partition"
                )));
            }
            let weight: Vec<i64> = lead.iter().map(|&a| i64::from(a)).collect();
            let s = schur_expand(&weight, n - 1)?;
            for (e, d) in s.terms {
                let slot = part.entry(e).or_insert(0);
                *slot -= c * d;
            }
            part.retain(|_, v| *v != 0);
            if part.keys().next_back().is_some_and(|k| *k >= lead) {
                return Err(Error::Internal(format!("elimination stalled at {lead:?}")));
            }
            let y: Vec<i64> = weight.iter().map(|a| a - shift).collect();
            *out.entry(y).or_insert(0) += c as u64;
        }
    }
    Ok(out)
}
