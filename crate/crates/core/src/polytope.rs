//! H-polytopes with implicit nonnegativity, exact lattice-point counting in
//! dilates, Ehrhart interpolation, and desk-scale vertex enumeration.
//!
//! Counting assumes nonnegative row coefficients (every instance here is a
//! clique-inequality system with 0/1 rows); vertex enumeration is exact over
//! the rationals via square subsystems of tight constraints.

use crate::error::Error;
use crate::ord::MonomialOrdering;
use crate::poly::coef_string;
use crate::vars::VarSpace;
use crate::{Coef, Result};
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

/// `{ u >= 0 : a . u <= b for every row }` in `dim` coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HPolytope {
    pub dim: usize,
    /// Rows `(a, b)` encoding `a . u <= b`.
    pub rows: Vec<(Vec<i64>, i64)>,
}

/// Maximum ambient dimension accepted by `enumerate_vertices`.
pub const VERTEX_DIM_CAP: usize = 12;

impl HPolytope {
    pub fn new(dim: usize, rows: Vec<(Vec<i64>, i64)>) -> Self {
        debug_assert!(rows.iter().all(|(a, _)| a.len() == dim));
        HPolytope { dim, rows }
    }

    /// The chain polytope: `u_i + u_{i+1} <= 1` for `0 <= i <= n-1` in
    /// `n + 1` nonnegative coordinates. Requires `n >= 1`; without any row
    /// the region would be unbounded.
    pub fn chain(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ChainPolytopeEmpty);
        }
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut a = vec![0i64; n + 1];
            a[i] = 1;
            a[i + 1] = 1;
            rows.push((a, 1));
        }
        Ok(HPolytope::new(n + 1, rows))
    }

    /// One row per triangle: the three incident coordinates sum to at most 1.
    pub fn from_triangles(num_points: usize, triangles: &[[usize; 3]]) -> Self {
        let rows = triangles
            .iter()
            .map(|t| {
                let mut a = vec![0i64; num_points];
                for &v in t {
                    a[v] = 1;
                }
                (a, 1i64)
            })
            .collect();
        HPolytope::new(num_points, rows)
    }

    fn check_counting_preconditions(&self) -> Result<()> {
        for (r, (a, _)) in self.rows.iter().enumerate() {
            if a.iter().any(|&x| x < 0) {
                return Err(Error::NegativeRow(r));
            }
        }
        for v in 0..self.dim {
            if !self.rows.iter().any(|(a, _)| a[v] > 0) {
                return Err(Error::Unbounded(v));
            }
        }
        Ok(())
    }
}

/// Number of lattice points of the dilate `t * P`, by backtracking with
/// per-coordinate bound propagation.
pub fn lattice_count(p: &HPolytope, t: u32) -> Result<u128> {
    p.check_counting_preconditions()?;
    let slack: Vec<i64> = p.rows.iter().map(|(_, b)| b * t as i64).collect();
    if slack.iter().any(|&s| s < 0) {
        return Ok(0);
    }
    fn dfs(p: &HPolytope, slack: &mut [i64], var: usize) -> u128 {
        if var == p.dim {
            return 1;
        }
        // Largest value of u_var compatible with the remaining slack.
        let mut ub = i64::MAX;
        for (r, (a, _)) in p.rows.iter().enumerate() {
            if a[var] > 0 {
                ub = ub.min(slack[r] / a[var]);
            }
        }
        let mut total = 0u128;
        for v in 0..=ub {
            if v > 0 {
                for (r, (a, _)) in p.rows.iter().enumerate() {
                    slack[r] -= a[var];
                }
            }
            total += dfs(p, slack, var + 1);
        }
        for (r, (a, _)) in p.rows.iter().enumerate() {
            slack[r] += a[var] * ub;
        }
        total
    }
    let mut slack = slack;
    Ok(dfs(p, &mut slack, 0))
}

/// Chain-specialized count of `{ u >= 0 : u_i + u_{i+1} <= t }` via a linear
/// DP whose state is the previous coordinate's value.
pub fn lattice_count_chain_dp(n: usize, t: u32) -> u128 {
    let t = t as usize;
    // dp[v] = number of prefixes ending with value v.
    let mut dp = vec![1u128; t + 1];
    for _ in 1..=n {
        // next[v] = sum of dp[v'] over v' <= t - v: prefix sums from the top.
        let mut prefix = vec![0u128; t + 2];
        for v in 0..=t {
            prefix[v + 1] = prefix[v] + dp[v];
        }
        let mut next = vec![0u128; t + 1];
        for (v, slot) in next.iter_mut().enumerate() {
            *slot = prefix[t - v + 1];
        }
        dp = next;
    }
    dp.iter().sum()
}

/// Ehrhart polynomial as exact rational coefficients `c_0..c_d` of
/// `L(t) = sum c_i t^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    pub coefficients: Vec<Coef>,
}

impl EhrhartPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn eval(&self, t: &Coef) -> Coef {
        let mut acc = Coef::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_at_integer(&self, t: i64) -> Coef {
        self.eval(&Coef::from(BigInt::from(t)))
    }

    /// Coefficients of `L(t + shift)` — used to re-express the polynomial in
    /// `p` via `t = p + shift`.
    pub fn shift_variable(&self, shift: i64) -> EhrhartPolynomial {
        let d = self.coefficients.len();
        let mut out = vec![Coef::zero(); d];
        // expand c_k (t + shift)^k with Pascal-updated binomials
        for (k, c) in self.coefficients.iter().enumerate() {
            let mut binom = BigInt::one();
            let mut power = Coef::one();
            for i in (0..=k).rev() {
                // binom = C(k, i), power = shift^(k - i)
                out[i] += c * &power * Coef::from(binom.clone());
                if i > 0 {
                    binom = binom * BigInt::from(i) / BigInt::from(k - i + 1);
                    power *= Coef::from(BigInt::from(shift));
                }
            }
        }
        EhrhartPolynomial { coefficients: out }
    }

    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coefficients.iter().map(coef_string).collect()
    }
}

/// Lagrange-interpolate the Ehrhart polynomial of a full-dimensional bounded
/// polytope through `t = 0..=dim`, then verify against two extra counts at
/// `dim + 1` and `dim + 2`.
pub fn ehrhart_interpolate(p: &HPolytope) -> Result<EhrhartPolynomial> {
    let d = p.dim;
    let counts: Vec<u128> = (0..=(d as u32 + 2))
        .into_par_iter()
        .map(|t| lattice_count(p, t))
        .collect::<Result<Vec<_>>>()?;
    let points: Vec<(Coef, Coef)> = counts
        .iter()
        .take(d + 1)
        .enumerate()
        .map(|(t, &c)| (Coef::from(BigInt::from(t)), Coef::from(BigInt::from(c))))
        .collect();
    let poly = lagrange(&points);
    for extra in 0..2u32 {
        let t = d as u32 + 1 + extra;
        let predicted = poly.eval_at_integer(t as i64);
        if predicted != Coef::from(BigInt::from(counts[t as usize])) {
            return Err(Error::InterpolationMismatch(t));
        }
    }
    Ok(poly)
}

fn lagrange(points: &[(Coef, Coef)]) -> EhrhartPolynomial {
    let n = points.len();
    let mut coeffs = vec![Coef::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis_i(t) = prod_{j != i} (t - x_j) / (x_i - x_j)
        let mut basis = vec![Coef::zero(); n];
        basis[0] = Coef::one();
        let mut deg = 0usize;
        let mut denom = Coef::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            // multiply basis by (t - x_j)
            for k in (0..=deg).rev() {
                let c = basis[k].clone();
                basis[k + 1] += &c;
                basis[k] = -c * xj;
            }
            deg += 1;
            denom *= xi - xj;
        }
        let scale = yi / denom;
        for (c, b) in coeffs.iter_mut().zip(&basis) {
            *c += b * &scale;
        }
    }
    EhrhartPolynomial { coefficients: coeffs }
}

type Rat = Ratio<i128>;

/// All vertices of `P`, as exact rational points, found by solving every
/// square subsystem of tight constraints. Capped at `VERTEX_DIM_CAP`.
pub fn enumerate_vertices(p: &HPolytope) -> Result<Vec<Vec<Coef>>> {
    let d = p.dim;
    if d > VERTEX_DIM_CAP {
        return Err(Error::DimensionCap(d, VERTEX_DIM_CAP));
    }
    // Constraint list: rows (a . u <= b) then nonnegativity (-u_i <= 0).
    let mut cons: Vec<(Vec<i64>, i64)> = p.rows.clone();
    for i in 0..d {
        let mut a = vec![0i64; d];
        a[i] = -1;
        cons.push((a, 0));
    }
    let combos = combinations(cons.len(), d);
    let sols: Vec<Vec<Rat>> = combos
        .par_iter()
        .filter_map(|subset| {
            let sol = solve_square(&cons, subset, d)?;
            // feasibility against every constraint
            for (a, b) in &cons {
                let lhs: Rat = a
                    .iter()
                    .zip(&sol)
                    .map(|(&c, x)| Rat::from_integer(c as i128) * x)
                    .sum();
                if lhs > Rat::from_integer(*b as i128) {
                    return None;
                }
            }
            Some(sol)
        })
        .collect();
    let mut uniq: Vec<Vec<Rat>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for s in sols {
        let key: Vec<(i128, i128)> = s.iter().map(|r| (*r.numer(), *r.denom())).collect();
        if seen.insert(key) {
            uniq.push(s);
        }
    }
    uniq.sort_by(|a, b| {
        a.iter()
            .map(|r| (*r.numer(), *r.denom()))
            .collect::<Vec<_>>()
            .cmp(&b.iter().map(|r| (*r.numer(), *r.denom())).collect::<Vec<_>>())
    });
    Ok(uniq
        .into_iter()
        .map(|s| {
            s.into_iter()
                .map(|r| Coef::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())))
                .collect()
        })
        .collect())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..=(n - need) {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    if k <= n {
        rec(0, n, k, &mut cur, &mut out);
    }
    out
}

/// Solve the square system given by the selected tight constraints; `None`
/// when singular. Fraction-free elimination in i128, then rational
/// back-substitution (entries are 0/±1, so magnitudes stay tiny).
fn solve_square(cons: &[(Vec<i64>, i64)], subset: &[usize], d: usize) -> Option<Vec<Rat>> {
    let mut m = vec![vec![0i128; d + 1]; d];
    for (r, &ci) in subset.iter().enumerate() {
        let (a, b) = &cons[ci];
        for c in 0..d {
            m[r][c] = a[c] as i128;
        }
        m[r][d] = *b as i128;
    }
    let mut prev = 1i128;
    for k in 0..d {
        let pivot_row = (k..d).find(|&r| m[r][k] != 0)?;
        m.swap(k, pivot_row);
        for r in (k + 1)..d {
            for c in (k + 1)..=d {
                m[r][c] = (m[k][k] * m[r][c] - m[r][k] * m[k][c]) / prev;
            }
            m[r][k] = 0;
        }
        prev = m[k][k];
    }
    let mut sol = vec![Rat::zero(); d];
    for r in (0..d).rev() {
        let mut acc = Rat::from_integer(m[r][d]);
        for c in (r + 1)..d {
            acc -= Rat::from_integer(m[r][c]) * sol[c];
        }
        sol[r] = acc / Rat::from_integer(m[r][r]);
    }
    Some(sol)
}

/// True if every coordinate of the point is 0 or 1.
pub fn is_binary_point(v: &[Coef]) -> bool {
    v.iter().all(|c| c.is_zero() || c.is_one())
}

/// Serializable view of an Ehrhart computation.
#[derive(Debug, Clone, Serialize)]
pub struct EhrhartReport {
    pub coeffs: Vec<String>,
    pub checked_points: usize,
}

impl EhrhartReport {
    pub fn new(p: &EhrhartPolynomial) -> Self {
        EhrhartReport { coeffs: p.coefficient_strings(), checked_points: 2 }
    }
}

/// Convenience: an ordering-compatible display space for a chain polytope of
/// matching dimension (used by CLI output only).
pub fn chain_display_order(n: usize) -> MonomialOrdering {
    MonomialOrdering::degrevlex(VarSpace::chain(n))
}
