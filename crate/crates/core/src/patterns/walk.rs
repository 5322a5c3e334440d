//! Extremal points and unit-step walks inside a pattern region.

use super::{m_of, satisfies, InterleavingPattern, Label, ParamPoint, Step};
use crate::error::{expect_len, Error, Result};
use crate::rational::{render_vector, Rational};

fn region_member(d: &InterleavingPattern, x: &[Rational], nu: &[Rational]) -> Result<bool> {
    satisfies(d, &ParamPoint::new(x.to_vec(), nu.to_vec()))
}

fn require_in_region(
    d: &InterleavingPattern,
    x: &[Rational],
    nu: &[Rational],
    name: &str,
) -> Result<()> {
    if region_member(d, x, nu)? {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "({name}, nu) = ({}; {}) does not satisfy {d}",
            render_vector(x),
            render_vector(nu)
        )))
    }
}

/// The coordinatewise extremal point of `(xi + Z^n)` in the region of `d`.
///
/// Coordinates `i <= m(d)` are minimized and the rest maximized. With no y labels the region is
/// unbounded below, so `mu_n` is pinned at `xi_n`.
pub fn extremal_mu(
    d: &InterleavingPattern,
    nu: &[Rational],
    xi: &[Rational],
) -> Result<Vec<Rational>> {
    d.require_strict("extremal_mu")?;
    expect_len("xi", xi.len(), d.n())?;
    require_in_region(d, xi, nu, "xi")?;
    let n = d.n();
    let m = m_of(d);
    let word = d.word();
    let mut mu = vec![Rational::ZERO; n];
    for i in (1..=m).rev() {
        let pos = d.position(Label::X(i)).expect("label present");
        mu[i - 1] = match word.get(pos + 1) {
            Some(Label::X(k)) => xi[i - 1].smallest_above(mu[*k - 1]),
            Some(Label::Y(j)) => xi[i - 1].smallest_above(nu[*j - 1]),
            None => xi[i - 1],
        };
    }
    for i in m + 1..=n {
        let pos = d.position(Label::X(i)).expect("label present");
        mu[i - 1] = match word[pos - 1] {
            Label::X(k) => xi[i - 1].largest_below(mu[k - 1]),
            Label::Y(j) => xi[i - 1].largest_below(nu[j - 1]),
        };
    }
    if !region_member(d, &mu, nu)? {
        return Err(Error::Internal(format!(
            "extremal point {} left {d}",
            render_vector(&mu)
        )));
    }
    Ok(mu)
}

/// Applies steps without any region check.
pub fn apply_steps(start: &[Rational], steps: &[Step]) -> Result<Vec<Rational>> {
    let mut cur = start.to_vec();
    for s in steps {
        if s.index == 0 || s.index > cur.len() || s.sign.abs() != 1 {
            return Err(Error::shape(format!(
                "step {s} is not a unit move on {} coordinates",
                cur.len()
            )));
        }
        cur[s.index - 1] += Rational::int(i64::from(s.sign));
    }
    Ok(cur)
}

/// Replays `steps` from `start`, checking every visited point against `d`; returns the endpoint.
pub fn replay_walk(
    d: &InterleavingPattern,
    nu: &[Rational],
    start: &[Rational],
    steps: &[Step],
) -> Result<Vec<Rational>> {
    let mut cur = start.to_vec();
    if !region_member(d, &cur, nu)? {
        return Err(Error::Internal(format!(
            "walk starts outside {d} at {}",
            render_vector(&cur)
        )));
    }
    for (k, s) in steps.iter().enumerate() {
        cur = apply_steps(&cur, std::slice::from_ref(s))?;
        if !region_member(d, &cur, nu)? {
            return Err(Error::Internal(format!(
                "step {k} ({s}) leaves {d} at {}",
                render_vector(&cur)
            )));
        }
    }
    Ok(cur)
}

fn unit_steps(out: &mut Vec<Step>, index: usize, from: Rational, to: Rational) {
    let delta = (to - from).to_integer().expect("same coset");
    let step = if delta >= 0 {
        Step::up(index)
    } else {
        Step::down(index)
    };
    out.extend(std::iter::repeat_n(step, delta.unsigned_abs() as usize));
}

fn walk_preconditions(
    d: &InterleavingPattern,
    nu: &[Rational],
    xi: &[Rational],
    lambda: &[Rational],
) -> Result<()> {
    d.require_strict("fence_walk")?;
    expect_len("xi", xi.len(), d.n())?;
    expect_len("lambda", lambda.len(), d.n())?;
    require_in_region(d, xi, nu, "xi")?;
    require_in_region(d, lambda, nu, "lambda")?;
    if let Some(i) = (0..xi.len()).find(|&i| !(lambda[i] - xi[i]).is_integer()) {
        return Err(Error::domain(format!(
            "lambda - xi is not integral at coordinate {}",
            i + 1
        )));
    }
    Ok(())
}

fn verified(
    d: &InterleavingPattern,
    nu: &[Rational],
    xi: &[Rational],
    lambda: &[Rational],
    steps: Vec<Step>,
) -> Result<Vec<Step>> {
    let end = replay_walk(d, nu, xi, &steps)?;
    if end != lambda {
        return Err(Error::Internal(format!(
            "walk ends at {} instead of {}",
            render_vector(&end),
            render_vector(lambda)
        )));
    }
    Ok(steps)
}

/// A shortest walk from `xi` to `lambda` inside the region of `d`.
///
/// The walk descends to the coordinatewise minimum of `xi` and `lambda` (last coordinate first)
/// and then climbs to `lambda` (first coordinate first). The region is closed under
/// coordinatewise minimum, so every visited point stays inside it.
pub fn fence_walk(
    d: &InterleavingPattern,
    nu: &[Rational],
    xi: &[Rational],
    lambda: &[Rational],
) -> Result<Vec<Step>> {
    walk_preconditions(d, nu, xi, lambda)?;
    let n = xi.len();
    let meet: Vec<Rational> = xi.iter().zip(lambda).map(|(a, b)| *a.min(b)).collect();
    let mut steps = Vec::new();
    for i in (0..n).rev() {
        unit_steps(&mut steps, i + 1, xi[i], meet[i]);
    }
    for i in 0..n {
        unit_steps(&mut steps, i + 1, meet[i], lambda[i]);
    }
    verified(d, nu, xi, lambda, steps)
}

/// A walk routed through [`extremal_mu`]: `xi -> mu`, then the reverse of `lambda -> mu`.
///
/// Coordinates move in the order `m(d), ..., 1, m(d)+1, ..., n`.
pub fn fence_walk_via_extremal(
    d: &InterleavingPattern,
    nu: &[Rational],
    xi: &[Rational],
    lambda: &[Rational],
) -> Result<Vec<Step>> {
    walk_preconditions(d, nu, xi, lambda)?;
    // Without y labels the pinned last coordinate must sit below both endpoints.
    let mut anchor = xi.to_vec();
    if let (0, Some(last)) = (d.m(), anchor.last_mut()) {
        *last = (*last).min(lambda[xi.len() - 1]);
    }
    let mu = extremal_mu(d, nu, &anchor)?;
    let m = m_of(d);
    let order: Vec<usize> = (0..m).rev().chain(m..xi.len()).collect();
    let mut steps = Vec::new();
    for &i in &order {
        unit_steps(&mut steps, i + 1, xi[i], mu[i]);
    }
    let mut back = Vec::new();
    for &i in &order {
        unit_steps(&mut back, i + 1, lambda[i], mu[i]);
    }
    steps.extend(back.into_iter().rev().map(|s| Step {
        index: s.index,
        sign: -s.sign,
    }));
    verified(d, nu, xi, lambda, steps)
}
