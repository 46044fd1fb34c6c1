//! Exact rational LP feasibility for open polyhedral cones.
//!
//! The only question asked here is: given an integer matrix `A`, is there an
//! `x` (unrestricted sign) with `A x >= 1` componentwise? Since the systems
//! of interest are homogeneous cones, `A x > 0` is solvable iff `A x >= 1`
//! is, so the strict problem reduces to plain feasibility. Solved by a
//! phase-1 primal simplex over `BigRational` with Bland's rule, which cannot
//! cycle.

use crate::Coef;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Find `x` with `rows[i] . x >= 1` for every row, or `None` if infeasible.
pub fn feasible_strict(rows: &[Vec<i64>]) -> Option<Vec<Coef>> {
    if rows.is_empty() {
        return Some(Vec::new());
    }
    let n = rows[0].len();
    let m = rows.len();
    // Columns: x+ (n), x- (n), surplus (m), artificial (m).
    // Row r: sum_j a_rj (x+_j - x-_j) - s_r + art_r = 1.
    let cols = 2 * n + 2 * m;
    let mut tab: Vec<Vec<Coef>> = Vec::with_capacity(m);
    for (r, a) in rows.iter().enumerate() {
        let mut row = vec![Coef::zero(); cols + 1];
        for (j, &c) in a.iter().enumerate() {
            row[j] = Coef::from(BigInt::from(c));
            row[n + j] = Coef::from(BigInt::from(-c));
        }
        row[2 * n + r] = -Coef::one();
        row[2 * n + m + r] = Coef::one();
        row[cols] = Coef::one(); // rhs
        tab.push(row);
    }
    // Phase-1 objective: minimize the artificial sum. Reduced costs start as
    // c_j - sum over rows of the artificial-basis coefficients.
    let mut obj = vec![Coef::zero(); cols + 1];
    for j in 0..=cols {
        let mut s = Coef::zero();
        for row in tab.iter() {
            s += &row[j];
        }
        obj[j] = -s;
    }
    for j in (2 * n + m)..cols {
        obj[j] += Coef::one();
    }
    let mut basis: Vec<usize> = (0..m).map(|r| 2 * n + m + r).collect();

    loop {
        // Bland: entering column = smallest index with negative reduced cost.
        let Some(enter) = (0..cols).find(|&j| obj[j].is_negative()) else {
            break;
        };
        // Ratio test; ties broken by smallest basis variable (Bland again).
        let mut leave: Option<usize> = None;
        let mut best: Option<Coef> = None;
        for r in 0..m {
            if tab[r][enter].is_positive() {
                let ratio = &tab[r][cols] / &tab[r][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[r] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(r);
                }
            }
        }
        let leave = leave?; // no positive pivot: infeasible direction cannot occur; bail out defensively
        pivot(&mut tab, &mut obj, leave, enter);
        basis[leave] = enter;
    }

    // Feasible iff every artificial is zero, i.e. the phase-1 optimum is 0.
    let mut value = Coef::zero();
    for (r, &b) in basis.iter().enumerate() {
        if b >= 2 * n + m {
            value += &tab[r][cols];
        }
    }
    if !value.is_zero() {
        return None;
    }
    let mut x = vec![Coef::zero(); n];
    for (r, &b) in basis.iter().enumerate() {
        if b < n {
            x[b] += &tab[r][cols];
        } else if b < 2 * n {
            x[b - n] -= &tab[r][cols];
        }
    }
    Some(x)
}

fn pivot(tab: &mut [Vec<Coef>], obj: &mut [Coef], leave: usize, enter: usize) {
    let p = tab[leave][enter].clone();
    for c in tab[leave].iter_mut() {
        *c /= &p;
    }
    for r in 0..tab.len() {
        if r == leave || tab[r][enter].is_zero() {
            continue;
        }
        let f = tab[r][enter].clone();
        for c in 0..tab[leave].len() {
            let d = &tab[leave][c] * &f;
            tab[r][c] -= d;
        }
    }
    if !obj[enter].is_zero() {
        let f = obj[enter].clone();
        for c in 0..obj.len() {
            let d = &tab[leave][c] * &f;
            obj[c] -= d;
        }
    }
}

/// Clear denominators and divide by the gcd, yielding a primitive integer
/// vector pointing the same way.
pub fn scale_to_integers(x: &[Coef]) -> Vec<i64> {
    if x.is_empty() {
        return Vec::new();
    }
    let mut lcm = BigInt::one();
    for c in x {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = x.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    ints.iter()
        .map(|v| i64::try_from(v / &g).expect("witness exceeds i64"))
        .collect()
}
