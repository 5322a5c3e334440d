#![allow(dead_code)]

use fences::{enumerate_strict, InterleavingPattern, Label, Rational};
use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Pascal's triangle, independent of any library counting.
pub fn binomial(n: usize, k: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![1usize; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

pub fn random_pattern<R: Rng>(rng: &mut R, n: usize, m: usize) -> InterleavingPattern {
    let all = enumerate_strict(n, m);
    all[rng.gen_range(0..all.len())].clone()
}

/// Values of `offset + Z` strictly between `lo` and `hi`, descending.
pub fn lattice_between(offset: Rational, lo: Rational, hi: Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut v = offset.largest_below(hi);
    while v > lo {
        out.push(v);
        v -= Rational::ONE;
    }
    out
}

/// `m` distinct values of `offset + Z` in `[lo, hi]`, descending.
pub fn random_chain<R: Rng>(
    rng: &mut R,
    m: usize,
    offset: Rational,
    lo: i64,
    hi: i64,
) -> Option<Vec<Rational>> {
    let cands = lattice_between(
        offset,
        Rational::int(lo) - Rational::HALF,
        Rational::int(hi) + Rational::HALF,
    );
    if cands.len() < m {
        return None;
    }
    let mut idx: Vec<usize> = sample(rng, cands.len(), m).into_vec();
    idx.sort_unstable();
    Some(idx.into_iter().map(|i| cands[i]).collect())
}

/// A random `x` on `offset + Z` with `(x, nu)` in `d`, every entry in `(lo, hi)`.
pub fn random_x_in<R: Rng>(
    rng: &mut R,
    d: &InterleavingPattern,
    nu: &[Rational],
    offset: Rational,
    lo: Rational,
    hi: Rational,
) -> Option<Vec<Rational>> {
    let m = d.m();
    let mut counts = vec![0usize; m + 1];
    let mut gap = 0;
    for l in d.word() {
        match l {
            Label::X(_) => counts[gap] += 1,
            Label::Y(_) => gap += 1,
        }
    }
    let mut x = Vec::with_capacity(d.n());
    for (g, &c) in counts.iter().enumerate() {
        let upper = if g == 0 { hi } else { nu[g - 1] };
        let lower = if g == m { lo } else { nu[g] };
        let cands = lattice_between(offset, lower, upper);
        if cands.len() < c {
            return None;
        }
        let mut idx: Vec<usize> = sample(rng, cands.len(), c).into_vec();
        idx.sort_unstable();
        x.extend(idx.into_iter().map(|i| cands[i]));
    }
    Some(x)
}

pub fn r(n: i64) -> Rational {
    Rational::int(n)
}

pub fn h(n: i64) -> Rational {
    Rational::new(n, 2)
}

/// A random strictly decreasing `lambda` on `Z + eps` of length `2m` for which the adjacent
/// seed exists: `lambda_{m+1} <= lambda_1 + lambda_{2m} <= lambda_m`.
pub fn random_speh_lambda<R: Rng>(rng: &mut R, m: usize, eps: Rational) -> Vec<Rational> {
    loop {
        let Some(l) = random_chain(rng, 2 * m, eps, -12, 12) else {
            continue;
        };
        let s = l[0] + l[2 * m - 1];
        if l[m] <= s && s <= l[m - 1] {
            return l;
        }
    }
}

/// All strictly decreasing integer vectors of length `len` with entries in `[lo, hi]`.
pub fn strict_chains(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn go(len: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().map_or(hi, |&a| a - 1);
        for v in (lo..=top).rev() {
            cur.push(v);
            go(len, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, lo, hi, &mut Vec::new(), &mut out);
    out
}
