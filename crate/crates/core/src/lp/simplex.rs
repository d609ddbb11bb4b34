//! Phase-1 simplex over exact rationals with Bland's rule.
//!
//! With `y = x - l`, each row `a·x >= b` becomes `a·y - s = b - a·l` with a
//! surplus `s >= 0`; each upper bound `y_j <= u_j - l_j` becomes one more row
//! of the same shape. Rows with a positive right-hand side get an artificial
//! variable; the rest start with their surplus basic after negation.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{FeasibilityResult, LinearSystem};

pub fn feasible(sys: &LinearSystem) -> FeasibilityResult {
    let n = sys.num_vars();
    let lower: Vec<BigRational> = sys.bounds().iter().map(|(l, _)| l.clone()).collect();

    // rows as (coeffs over y, rhs) meaning coeffs·y >= rhs
    let mut rows: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
    for r in sys.rows() {
        let shift: BigRational = r.coeffs.iter().zip(&lower).map(|(a, l)| a * l).sum();
        rows.push((r.coeffs.clone(), &r.rhs - shift));
    }
    for (j, (l, u)) in sys.bounds().iter().enumerate() {
        let mut c = vec![BigRational::zero(); n];
        c[j] = -BigRational::from_integer(1.into());
        rows.push((c, -(u - l)));
    }

    let m = rows.len();
    let needs_art: Vec<bool> = rows.iter().map(|(_, b)| b.is_positive()).collect();
    let num_art = needs_art.iter().filter(|&&x| x).count();
    // columns: y (n), surplus (m), artificial (num_art), then rhs
    let cols = n + m + num_art;
    let mut t = vec![vec![BigRational::zero(); cols + 1]; m];
    let mut basis = vec![0; m];
    let mut next_art = n + m;
    for (i, (coeffs, rhs)) in rows.into_iter().enumerate() {
        if needs_art[i] {
            // a·y - s + art = b, b > 0
            for (j, c) in coeffs.into_iter().enumerate() {
                t[i][j] = c;
            }
            t[i][n + i] = -BigRational::from_integer(1.into());
            t[i][next_art] = BigRational::from_integer(1.into());
            t[i][cols] = rhs;
            basis[i] = next_art;
            next_art += 1;
        } else {
            // -a·y + s = -b >= 0
            for (j, c) in coeffs.into_iter().enumerate() {
                t[i][j] = -c;
            }
            t[i][n + i] = BigRational::from_integer(1.into());
            t[i][cols] = -rhs;
            basis[i] = n + i;
        }
    }

    // reduced costs of the phase-1 objective (sum of artificials); basic
    // artificial columns price out to zero
    let mut cost = vec![BigRational::zero(); cols + 1];
    for i in (0..m).filter(|&i| basis[i] >= n + m) {
        for j in (0..n + m).chain([cols]) {
            cost[j] -= &t[i][j];
        }
    }

    loop {
        let Some(enter) = (0..cols).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let better = match leave {
                None => true,
                Some(k) => {
                    let lhs = &t[i][cols] * &t[k][enter];
                    let rhs = &t[k][cols] * &t[i][enter];
                    lhs < rhs || (lhs == rhs && basis[i] < basis[k])
                }
            };
            if better {
                leave = Some(i);
            }
        }
        // phase-1 objective is bounded below by 0, so a pivot row exists
        let r = leave.expect("bounded phase-1 objective");
        pivot(&mut t, &mut cost, r, enter);
        basis[r] = enter;
    }

    // cost[cols] holds minus the objective value
    if !cost[cols].is_zero() {
        return FeasibilityResult { feasible: false, point: None, basic: false };
    }
    let mut y = vec![BigRational::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            y[basis[i]] = t[i][cols].clone();
        }
    }
    let point: Vec<BigRational> = y.into_iter().zip(lower).map(|(a, l)| a + l).collect();
    debug_assert!(sys.satisfied_by(&point));
    FeasibilityResult { feasible: true, point: Some(point), basic: true }
}

fn pivot(t: &mut [Vec<BigRational>], cost: &mut [BigRational], r: usize, c: usize) {
    let p = t[r][c].clone();
    for x in t[r].iter_mut() {
        *x /= &p;
    }
    let pivot_row = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (x, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn shifted_bounds() {
        // x + y >= 3, x - y >= 1/2 with x in [1, 2], y in [-1, 4]
        let sys = LinearSystem::new(
            2,
            vec![
                super::super::Row { coeffs: vec![q(1, 1), q(1, 1)], rhs: q(3, 1) },
                super::super::Row { coeffs: vec![q(1, 1), q(-1, 1)], rhs: q(1, 2) },
            ],
            vec![(q(1, 1), q(2, 1)), (q(-1, 1), q(4, 1))],
        )
        .unwrap();
        let r = feasible(&sys);
        assert!(r.feasible);
        assert!(sys.satisfied_by(r.point.as_ref().unwrap()));
    }

    #[test]
    fn degenerate_equalities() {
        // x = y = z pairwise, x >= 1, z <= 0 on [0, 1]: infeasible
        let sys = LinearSystem::from_ints(
            3,
            &[
                (vec![1, -1, 0], 0),
                (vec![-1, 1, 0], 0),
                (vec![0, 1, -1], 0),
                (vec![0, -1, 1], 0),
                (vec![1, 0, 0], 1),
                (vec![0, 0, -1], 0),
            ],
            &[(0, 1); 3],
        )
        .unwrap();
        assert!(!feasible(&sys).feasible);
    }
}
