//! Bound propagation for linear constraints `Σ a_i·v_i ≤ b` over integer
//! intervals.
//!
//! On systems made only of difference constraints (`v_i - v_j ≤ c`) and
//! unary bounds, a fixpoint with non-empty domains is always satisfiable
//! (take every lower bound), so propagation alone decides feasibility there.
//! Sum constraints make it incomplete; the search branches on top of it.

use alloc::vec::Vec;

use super::LatticeError;

pub(crate) const NEG_INF: i64 = i64::MIN;
pub(crate) const POS_INF: i64 = i64::MAX;

/// Closed integer interval; `i64::MIN` / `i64::MAX` stand for an open end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn new(lo: i64, hi: i64) -> Self {
        Interval { lo, hi }
    }

    pub fn point(v: i64) -> Self {
        Interval { lo: v, hi: v }
    }

    pub fn is_fixed(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_finite(&self) -> bool {
        self.lo != NEG_INF && self.hi != POS_INF
    }
}

/// `Σ terms ≤ rhs`.
#[derive(Clone, Debug)]
pub(crate) struct Linear {
    pub terms: Vec<(usize, i64)>,
    pub rhs: i128,
}

/// Sweeps over `constraints` in order until nothing tightens. On conflict
/// returns the index of the constraint that emptied a domain (or whose
/// minimum already exceeds its right-hand side); `dom` then holds the
/// bounds reached at that moment.
pub(crate) fn propagate(constraints: &[Linear], dom: &mut [Interval]) -> Result<Result<(), usize>, LatticeError> {
    // Each productive sweep moves some finite bound by at least one, so on
    // finite boxes this is bounded by the total width. With open ends a
    // cyclic system could push bounds forever.
    let mut budget: u64 = 1 << 22;
    loop {
        let mut changed = false;
        for (k, c) in constraints.iter().enumerate() {
            match tighten(c, dom) {
                Tighten::Conflict => return Ok(Err(k)),
                Tighten::Changed => changed = true,
                Tighten::Unchanged => {}
            }
        }
        if !changed {
            return Ok(Ok(()));
        }
        budget -= 1;
        if budget == 0 {
            return Err(LatticeError::Diverged);
        }
    }
}

enum Tighten {
    Conflict,
    Changed,
    Unchanged,
}

fn tighten(c: &Linear, dom: &mut [Interval]) -> Tighten {
    // Minimum of each term over the current box; `None` when unbounded below.
    let term_min = |dom: &[Interval], v: usize, a: i64| -> Option<i128> {
        let d = dom[v];
        if a > 0 {
            (d.lo != NEG_INF).then(|| i128::from(a) * i128::from(d.lo))
        } else {
            (d.hi != POS_INF).then(|| i128::from(a) * i128::from(d.hi))
        }
    };
    let mut finite: i128 = 0;
    let mut open = 0usize;
    for &(v, a) in &c.terms {
        match term_min(dom, v, a) {
            Some(m) => finite += m,
            None => open += 1,
        }
    }
    if open == 0 && finite > c.rhs {
        return Tighten::Conflict;
    }
    let mut changed = false;
    for &(v, a) in &c.terms {
        let own = term_min(dom, v, a);
        let rest_open = open - usize::from(own.is_none());
        if rest_open > 0 {
            continue;
        }
        let slack = c.rhs - (finite - own.unwrap_or(0));
        let d = &mut dom[v];
        if a > 0 {
            let bound = clamp(slack.div_euclid(i128::from(a)));
            if bound < d.hi {
                d.hi = bound;
                changed = true;
            }
        } else {
            let bound = clamp(ceil_div(slack, i128::from(a)));
            if bound > d.lo {
                d.lo = bound;
                changed = true;
            }
        }
        if d.lo > d.hi {
            return Tighten::Conflict;
        }
    }
    if changed {
        Tighten::Changed
    } else {
        Tighten::Unchanged
    }
}

/// `ceil(n / d)` for any non-zero `d`.
pub(crate) fn ceil_div(n: i128, d: i128) -> i128 {
    let q = n.div_euclid(d);
    if q * d == n {
        q
    } else if d > 0 {
        q + 1
    } else {
        // div_euclid rounds toward -inf for positive divisors and toward
        // +inf for negative ones.
        q
    }
}

/// Keeps derived bounds strictly inside the sentinel range.
fn clamp(v: i128) -> i64 {
    v.clamp(i128::from(NEG_INF) + 1, i128::from(POS_INF) - 1) as i64
}
