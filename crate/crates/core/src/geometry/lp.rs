//! Exact LP feasibility via Phase-I simplex.
//!
//! Decides whether `{x >= 0 : A x = b}` is nonempty. Either way the answer
//! carries its own proof: a feasible point, or a Farkas multiplier vector `y`
//! with `y^T A <= 0` and `y^T b > 0`. Bland's rule guarantees termination, and
//! every pivot is exact rational arithmetic, so the decision is never subject
//! to rounding.

use num_traits::{One, Zero};

use super::linalg::dot;
use super::rational::Rational;

/// Outcome of the feasibility question, each side self-certifying.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    /// A point `x >= 0` with `A x = b`.
    Feasible(Vec<Rational>),
    /// Multipliers `y` with `y^T A <= 0` componentwise and `y^T b > 0`,
    /// witnessing that no feasible point exists.
    Infeasible(Vec<Rational>),
}

/// Phase-I simplex over the tableau `[A | I | b]` with artificial cost.
/// Entering variable: lowest index with negative reduced cost. Leaving
/// variable: minimum ratio, ties broken by lowest basic variable index.
pub fn feasible_nonneg(a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    let m = a.len();
    assert_eq!(m, b.len(), "row count mismatch between A and b");
    let n = a.first().map_or(0, Vec::len);
    if m == 0 {
        return LpOutcome::Feasible(vec![Rational::zero(); n]);
    }

    // Flip rows to make the right-hand side nonnegative, remembering which
    // multipliers to negate on the way out.
    let mut flipped = vec![false; m];
    let width = n + m + 1;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        assert_eq!(row.len(), n, "ragged constraint matrix");
        let neg = b[i] < Rational::zero();
        flipped[i] = neg;
        let mut t: Vec<Rational> = Vec::with_capacity(width);
        t.extend(row.iter().map(|c| if neg { -c } else { c.clone() }));
        for j in 0..m {
            t.push(if j == i { Rational::one() } else { Rational::zero() });
        }
        t.push(if neg { -&b[i] } else { b[i].clone() });
        rows.push(t);
    }

    // Objective row for minimizing the artificial sum, already reduced
    // against the artificial basis; the last entry holds minus the objective.
    let mut obj = vec![Rational::zero(); width];
    for row in &rows {
        for (o, c) in obj.iter_mut().zip(row) {
            *o -= c;
        }
    }
    for j in n..n + m {
        obj[j] = Rational::zero();
    }

    let mut basis: Vec<usize> = (n..n + m).collect();
    loop {
        let Some(enter) = (0..n + m).find(|&j| obj[j] < Rational::zero()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for r in 0..m {
            if rows[r][enter] > Rational::zero() {
                let ratio = &rows[r][width - 1] / &rows[r][enter];
                let better = match &best {
                    None => true,
                    Some(cur) => {
                        ratio < *cur || (ratio == *cur && basis[r] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(r);
                }
            }
        }
        let p = leave.expect("phase-I objective is bounded below by zero");

        let pivot = rows[p][enter].clone();
        for c in 0..width {
            rows[p][c] = &rows[p][c] / &pivot;
        }
        for r in 0..m {
            if r != p && !rows[r][enter].is_zero() {
                let factor = rows[r][enter].clone();
                for c in 0..width {
                    let t = &rows[p][c] * &factor;
                    rows[r][c] = &rows[r][c] - &t;
                }
            }
        }
        if !obj[enter].is_zero() {
            let factor = obj[enter].clone();
            for c in 0..width {
                let t = &rows[p][c] * &factor;
                obj[c] = &obj[c] - &t;
            }
        }
        basis[p] = enter;
    }

    let objective = -obj[width - 1].clone();
    debug_assert!(objective >= Rational::zero());
    if objective.is_zero() {
        let mut x = vec![Rational::zero(); n];
        for (r, &var) in basis.iter().enumerate() {
            if var < n {
                x[var] = rows[r][width - 1].clone();
            }
        }
        LpOutcome::Feasible(x)
    } else {
        // Reduced cost of artificial j is 1 - y_j, so the multipliers fall
        // out of the final objective row; un-flip the rows we negated.
        let y: Vec<Rational> = (0..m)
            .map(|i| {
                let yi = Rational::one() - &obj[n + i];
                if flipped[i] {
                    -yi
                } else {
                    yi
                }
            })
            .collect();
        LpOutcome::Infeasible(y)
    }
}

/// Panics unless the outcome proves its claim against the instance. Tests
/// and post-checks route through this so a wrong answer can never slip by.
pub fn check_outcome(a: &[Vec<Rational>], b: &[Rational], outcome: &LpOutcome) {
    match outcome {
        LpOutcome::Feasible(x) => {
            assert!(x.iter().all(|v| *v >= Rational::zero()), "negative component");
            for (row, rhs) in a.iter().zip(b) {
                assert_eq!(dot(row, x), *rhs, "A x = b violated");
            }
        }
        LpOutcome::Infeasible(y) => {
            assert_eq!(y.len(), b.len());
            let n = a.first().map_or(0, Vec::len);
            for j in 0..n {
                let col: Rational = a.iter().zip(y).map(|(row, yi)| &row[j] * yi).sum();
                assert!(col <= Rational::zero(), "y^T A has a positive entry");
            }
            assert!(dot(y, b) > Rational::zero(), "y^T b is not positive");
        }
    }
}
