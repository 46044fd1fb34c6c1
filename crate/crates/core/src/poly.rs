//! Sparse exact multivariate polynomials over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector (a fixed storage
//! order, independent of any monomial ordering); zero coefficients are never
//! stored. All arithmetic is exact.

use crate::error::Error;
use crate::ord::MonomialOrdering;
use crate::vars::{ExpVec, VarSpace};
use crate::{Coef, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    pub vars: VarSpace,
    terms: BTreeMap<ExpVec, Coef>,
}

impl Polynomial {
    pub fn zero(vars: VarSpace) -> Self {
        Polynomial { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: VarSpace) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(ExpVec::zero(vars.size()), Coef::one());
        p
    }

    /// The monomial `x_idx`.
    pub fn var(vars: VarSpace, idx: usize) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(ExpVec::var(vars.size(), idx), Coef::one());
        p
    }

    pub fn monomial(vars: VarSpace, e: ExpVec, c: Coef) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(e, c);
        p
    }

    pub fn from_integer_terms(vars: VarSpace, terms: &[(&[u16], i64)]) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(ExpVec::from_slice(e), Coef::from(BigInt::from(*c)));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Coef)> {
        self.terms.iter()
    }

    pub fn coef(&self, e: &ExpVec) -> Option<&Coef> {
        self.terms.get(e)
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(ExpVec::total_degree).max().unwrap_or(0)
    }

    /// True if every stored term has total degree `d`.
    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.total_degree() == d)
    }

    /// Accumulate one term, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, e: ExpVec, c: Coef) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(e.len(), self.vars.size());
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarSpaceMismatch(self.vars.to_string(), other.vars.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Coef) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        let mut out = Self::zero(self.vars);
        for (e, a) in &self.terms {
            out.terms.insert(e.clone(), a * c);
        }
        out
    }

    /// Multiply by the single term `c * x^e`.
    pub fn mul_term(&self, e: &ExpVec, c: &Coef) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        let mut out = Self::zero(self.vars);
        for (a, b) in &self.terms {
            out.terms.insert(a.mul(e), b * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = Self::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.vars);
        for _ in 0..k {
            out = out.mul(self).expect("same space");
        }
        out
    }

    /// Leading term under `ord`; errors on the zero polynomial.
    pub fn leading_term(&self, ord: &MonomialOrdering) -> Result<(ExpVec, Coef)> {
        let mut best: Option<&ExpVec> = None;
        for e in self.terms.keys() {
            best = match best {
                None => Some(e),
                Some(b) => {
                    if ord.compare(e, b) == std::cmp::Ordering::Greater {
                        Some(e)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        let e = best.ok_or(Error::ZeroPolynomial)?;
        Ok((e.clone(), self.terms[e].clone()))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrdering) -> Result<ExpVec> {
        Ok(self.leading_term(ord)?.0)
    }

    /// Terms sorted descending under `ord` (leading term first).
    pub fn sorted_terms(&self, ord: &MonomialOrdering) -> Vec<(ExpVec, Coef)> {
        let mut v: Vec<(ExpVec, Coef)> =
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        v.sort_by(|a, b| ord.compare(&b.0, &a.0));
        v
    }

    /// Render for diagnostics, sorted descending under `ord`.
    pub fn display(&self, ord: &MonomialOrdering) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.sorted_terms(ord)
            .iter()
            .map(|(e, c)| {
                if e.is_one() {
                    format!("{c}")
                } else if c.is_one() {
                    e.display(&self.vars)
                } else {
                    format!("{c}*{}", e.display(&self.vars))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&MonomialOrdering::degrevlex(self.vars)))
    }
}

/// JSON form `{"vars": ..., "terms": [{"e": [...], "c": "num/den"}, ...]}`,
/// terms sorted descending by the active ordering, coefficients as exact
/// fraction strings.
pub fn poly_to_json(p: &Polynomial, ord: &MonomialOrdering) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = p
        .sorted_terms(ord)
        .iter()
        .map(|(e, c)| {
            serde_json::json!({
                "e": e.0.iter().map(|&x| x as u64).collect::<Vec<_>>(),
                "c": coef_string(c),
            })
        })
        .collect();
    serde_json::json!({
        "vars": serde_json::to_value(p.vars).expect("varspace serializes"),
        "terms": terms,
    })
}

/// Exact `num/den` fraction string, e.g. `17/315`, `-3/1`.
pub fn coef_string(c: &Coef) -> String {
    format!("{}/{}", c.numer(), c.denom())
}
