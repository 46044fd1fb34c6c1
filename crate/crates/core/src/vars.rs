//! Variable spaces and dense exponent vectors.
//!
//! A `VarSpace` fixes the finite variable set once and for all: either a
//! chain `x_0, ..., x_n` or a grid `x_{k,l}` with `0 <= k <= m`, `0 <= l <= n`.
//! Grid variables are flattened row-major, `flat = k*(n+1) + l`, which is
//! exactly the order `x_{0,0} < x_{0,1} < ... < x_{0,n} < x_{1,0} < ... < x_{m,n}`
//! used by all orderings in this crate (smaller flat index = smaller variable).

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::fmt;

/// Shape of the ambient polynomial ring's variable set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum VarSpace {
    /// Variables `x_0, ..., x_n` (n+1 of them).
    Chain { n: usize },
    /// Variables `x_{k,l}`, `0 <= k <= m`, `0 <= l <= n`, row-major flat order.
    Grid { m: usize, n: usize },
}

impl VarSpace {
    pub fn chain(n: usize) -> Self {
        VarSpace::Chain { n }
    }

    pub fn grid(m: usize, n: usize) -> Self {
        VarSpace::Grid { m, n }
    }

    /// Number of variables.
    pub fn size(&self) -> usize {
        match *self {
            VarSpace::Chain { n } => n + 1,
            VarSpace::Grid { m, n } => (m + 1) * (n + 1),
        }
    }

    /// Flat index of the grid variable `x_{k,l}` (or of `x_k` on a chain).
    pub fn flat(&self, k: usize, l: usize) -> usize {
        match *self {
            VarSpace::Chain { .. } => {
                debug_assert_eq!(l, 0);
                k
            }
            VarSpace::Grid { n, .. } => k * (n + 1) + l,
        }
    }

    /// Inverse of `flat`.
    pub fn unflat(&self, idx: usize) -> (usize, usize) {
        match *self {
            VarSpace::Chain { .. } => (idx, 0),
            VarSpace::Grid { n, .. } => (idx / (n + 1), idx % (n + 1)),
        }
    }

    /// Human-readable variable name for diagnostics.
    pub fn var_name(&self, idx: usize) -> String {
        match *self {
            VarSpace::Chain { .. } => format!("x{idx}"),
            VarSpace::Grid { .. } => {
                let (k, l) = self.unflat(idx);
                format!("x{k}{l}")
            }
        }
    }
}

impl fmt::Display for VarSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VarSpace::Chain { n } => write!(f, "chain(n={n})"),
            VarSpace::Grid { m, n } => write!(f, "grid(m={m},n={n})"),
        }
    }
}

/// Dense exponent vector; length always equals the var space size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec(pub SmallVec<[u16; 16]>);

impl ExpVec {
    pub fn zero(len: usize) -> Self {
        ExpVec(smallvec::smallvec![0; len])
    }

    pub fn var(len: usize, idx: usize) -> Self {
        let mut e = Self::zero(len);
        e.0[idx] = 1;
        e
    }

    pub fn from_slice(s: &[u16]) -> Self {
        ExpVec(SmallVec::from_slice(s))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The constant monomial 1.
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Product of monomials: componentwise sum.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise divisibility.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Quotient monomial; caller must ensure `self` divides `other`.
    pub fn div_exact(other: &Self, divisor: &Self) -> Self {
        debug_assert!(divisor.divides(other));
        ExpVec(other.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Render as e.g. `x0^2*x1` in the given space; `1` for the constant.
    pub fn display(&self, vars: &VarSpace) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 1 {
                parts.push(vars.var_name(i));
            } else if e > 1 {
                parts.push(format!("{}^{}", vars.var_name(i), e));
            }
        }
        parts.join("*")
    }
}
