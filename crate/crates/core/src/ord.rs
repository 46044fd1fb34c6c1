//! Monomial orderings: graded reverse lexicographic and its weighted refinement.
//!
//! Variables are significant in increasing flat order (`x_{0,0}` smallest,
//! `x_{m,n}` largest). For equal total degrees, degrevlex prefers the monomial
//! with the *smaller* exponent at the smallest variable where two monomials
//! differ; this is the classical revlex rule written for ascending variable
//! order. A weighted ordering compares exact integer weight dot products
//! first and falls back to degrevlex on ties.

use crate::error::Error;
use crate::vars::{ExpVec, VarSpace};
use crate::Result;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OrderKind {
    DegRevLex,
    WeightedRevLex { weights: Vec<i64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialOrdering {
    pub kind: OrderKind,
    pub vars: VarSpace,
}

impl MonomialOrdering {
    pub fn degrevlex(vars: VarSpace) -> Self {
        MonomialOrdering { kind: OrderKind::DegRevLex, vars }
    }

    /// Weighted revlex; weights must be nonnegative and match the space size.
    pub fn weighted_revlex(vars: VarSpace, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != vars.size() {
            return Err(Error::WeightLength { got: weights.len(), expected: vars.size() });
        }
        if weights.iter().any(|&w| w < 0) {
            return Err(Error::Parse("ordering weights must be nonnegative".into()));
        }
        Ok(MonomialOrdering { kind: OrderKind::WeightedRevLex { weights }, vars })
    }

    pub fn weights(&self) -> Option<&[i64]> {
        match &self.kind {
            OrderKind::DegRevLex => None,
            OrderKind::WeightedRevLex { weights } => Some(weights),
        }
    }

    fn weight_of(&self, e: &ExpVec) -> i128 {
        match &self.kind {
            OrderKind::DegRevLex => 0,
            OrderKind::WeightedRevLex { weights } => e
                .0
                .iter()
                .zip(weights)
                .map(|(&a, &w)| a as i128 * w as i128)
                .sum(),
        }
    }

    /// Total-order comparison; `Greater` means `a` is the larger monomial.
    pub fn compare(&self, a: &ExpVec, b: &ExpVec) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        if let OrderKind::WeightedRevLex { .. } = self.kind {
            match self.weight_of(a).cmp(&self.weight_of(b)) {
                Ordering::Equal => {}
                c => return c,
            }
        }
        degrevlex_cmp(a, b)
    }

    /// Sort key whose lexicographic `Vec<i64>` comparison matches `compare`.
    /// Used to keep term maps sorted during reduction. The weight dot product
    /// is nonnegative and split into two limbs so it never overflows.
    pub fn sort_key(&self, e: &ExpVec) -> Vec<i64> {
        let mut key = Vec::with_capacity(e.len() + 3);
        if let OrderKind::WeightedRevLex { .. } = self.kind {
            let w = self.weight_of(e);
            key.push((w >> 62) as i64);
            key.push((w & ((1 << 62) - 1)) as i64);
        }
        key.push(e.total_degree() as i64);
        key.extend(e.0.iter().map(|&x| -(x as i64)));
        key
    }
}

/// Degrevlex with ascending variable significance: higher total degree wins;
/// on equal degrees the first (= smallest-variable) nonzero entry of `a - b`
/// decides, negative meaning `a` is larger.
fn degrevlex_cmp(a: &ExpVec, b: &ExpVec) -> Ordering {
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        c => return c,
    }
    for (x, y) in a.0.iter().zip(&b.0) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &[u16]) -> ExpVec {
        ExpVec::from_slice(s)
    }

    #[test]
    fn variables_sorted_by_flat_index() {
        let ord = MonomialOrdering::degrevlex(VarSpace::chain(2));
        // x0 < x1 < x2
        assert_eq!(ord.compare(&ev(&[1, 0, 0]), &ev(&[0, 1, 0])), Ordering::Less);
        assert_eq!(ord.compare(&ev(&[0, 1, 0]), &ev(&[0, 0, 1])), Ordering::Less);
        assert_eq!(ord.compare(&ev(&[0, 0, 1]), &ev(&[0, 0, 1])), Ordering::Equal);
    }

    #[test]
    fn degree_dominates_and_one_is_minimal() {
        let ord = MonomialOrdering::degrevlex(VarSpace::chain(2));
        assert_eq!(ord.compare(&ev(&[2, 0, 0]), &ev(&[0, 0, 1])), Ordering::Greater);
        assert_eq!(ord.compare(&ev(&[0, 0, 0]), &ev(&[1, 0, 0])), Ordering::Less);
    }

    #[test]
    fn revlex_tie_break_on_smallest_variable() {
        let ord = MonomialOrdering::degrevlex(VarSpace::chain(2));
        // x1^2 beats x0*x2 because x0's exponent is smaller there.
        assert_eq!(ord.compare(&ev(&[0, 2, 0]), &ev(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn weighted_overrides_degree() {
        let vs = VarSpace::grid(2, 2);
        // Weights (2^8+1) - 2^flat: x00 heavy (256), x22 light (1).
        let w: Vec<i64> = (0..9).map(|i| (1i64 << 8) + 1 - (1i64 << i)).collect();
        assert_eq!(w[0], 256);
        assert_eq!(w[8], 1);
        let ord = MonomialOrdering::weighted_revlex(vs, w).unwrap();
        let x00 = ExpVec::var(9, 0);
        let x22 = ExpVec::var(9, 8);
        assert_eq!(ord.compare(&x00, &x22), Ordering::Greater);
    }

    #[test]
    fn sort_key_agrees_with_compare() {
        let vs = VarSpace::grid(1, 1);
        let w = vec![7, 3, 3, 1];
        let ord = MonomialOrdering::weighted_revlex(vs, w).unwrap();
        let pool = [ev(&[0, 0, 0, 0]), ev(&[1, 0, 1, 0]), ev(&[0, 2, 0, 0]), ev(&[0, 0, 0, 3])];
        for a in &pool {
            for b in &pool {
                assert_eq!(ord.sort_key(a).cmp(&ord.sort_key(b)), ord.compare(a, b));
            }
        }
    }

    #[test]
    fn weight_length_checked() {
        assert!(MonomialOrdering::weighted_revlex(VarSpace::chain(2), vec![1, 2]).is_err());
    }
}
