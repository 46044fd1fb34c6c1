//! Truncated differential polynomial rings and the jet-ideal generators of
//! the fat point `x^p`.
//!
//! Two independent construction routes are provided and cross-checked:
//!
//! * expansion: the coefficients of `(x_0 + x_1 t + ... + x_n t^n)^p`
//!   (respectively of the bivariate power series in `s, t`), computed by the
//!   multinomial formula grouped by `t`-exponent (or `(s,t)`-bi-exponent);
//! * differentiation: the truncated derivatives `(x^p)^(k)` (respectively
//!   `(x^p)^(a,b)`) obtained by repeated Leibniz steps, where any variable
//!   of order beyond the truncation bound is dropped.
//!
//! Identifying `x^(k)` with `k! * x_k` turns route two into `k!` times route
//! one, which `check_iso_scaling` verifies term by term.

use crate::error::Error;
use crate::poly::Polynomial;
use crate::vars::{ExpVec, VarSpace};
use crate::{Coef, Result};
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// Truncated differential ring; `Chain` keeps orders `0..=n` of a single
/// derivation, `Grid` keeps bi-orders `(0..=m, 0..=n)` of two commuting ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncatedDiffRing {
    pub vars: VarSpace,
}

impl TruncatedDiffRing {
    pub fn chain(n: usize) -> Self {
        TruncatedDiffRing { vars: VarSpace::chain(n) }
    }

    pub fn grid(m: usize, n: usize) -> Self {
        TruncatedDiffRing { vars: VarSpace::grid(m, n) }
    }
}

/// Derivation direction for `derive`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// d/dt: raises the chain order, or the second grid index.
    Dt,
    /// d/ds: raises the first grid index; grid rings only.
    Ds,
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Direction::Dt => write!(f, "d/dt"),
            Direction::Ds => write!(f, "d/ds"),
        }
    }
}

/// Which route produced a generator set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Expansion,
    Differentiation,
}

/// Jet-ideal generators, indexed by derivative order `k` (chain) or `(a, b)`
/// (grid), in ascending label order.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub ring: TruncatedDiffRing,
    pub p: u32,
    pub provenance: Provenance,
    pub generators: Vec<Polynomial>,
}

impl GeneratorSet {
    /// Label of generator `i`: `(k, 0)` on a chain, `(a, b)` on a grid.
    pub fn label(&self, i: usize) -> (usize, usize) {
        match self.ring.vars {
            VarSpace::Chain { .. } => (i, 0),
            VarSpace::Grid { n, .. } => {
                let nb = (n as u32 * self.p) as usize + 1;
                (i / nb, i % nb)
            }
        }
    }

    /// Flat index of the generator with the given label.
    pub fn index_of(&self, a: usize, b: usize) -> usize {
        match self.ring.vars {
            VarSpace::Chain { .. } => a,
            VarSpace::Grid { n, .. } => a * ((n as u32 * self.p) as usize + 1) + b,
        }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Leibniz-rule derivative with truncation: every substitution that would
/// exceed the ring's order bound drops the whole term.
pub fn derive(p: &Polynomial, ring: &TruncatedDiffRing, dir: Direction) -> Result<Polynomial> {
    if p.vars != ring.vars {
        return Err(Error::VarSpaceMismatch(p.vars.to_string(), ring.vars.to_string()));
    }
    if matches!(ring.vars, VarSpace::Chain { .. }) && dir == Direction::Ds {
        return Err(Error::InvalidDirection(dir.to_string(), "chain".into()));
    }
    let size = ring.vars.size();
    let mut out = Polynomial::zero(ring.vars);
    for (e, c) in p.terms() {
        for i in 0..size {
            if e.0[i] == 0 {
                continue;
            }
            let (k, l) = ring.vars.unflat(i);
            let target = match (ring.vars, dir) {
                (VarSpace::Chain { n }, Direction::Dt) => {
                    if k + 1 > n {
                        continue;
                    }
                    ring.vars.flat(k + 1, 0)
                }
                (VarSpace::Grid { n, .. }, Direction::Dt) => {
                    if l + 1 > n {
                        continue;
                    }
                    ring.vars.flat(k, l + 1)
                }
                (VarSpace::Grid { m, .. }, Direction::Ds) => {
                    if k + 1 > m {
                        continue;
                    }
                    ring.vars.flat(k + 1, l)
                }
                (VarSpace::Chain { .. }, Direction::Ds) => unreachable!(),
            };
            let mut ne = e.clone();
            ne.0[i] -= 1;
            ne.0[target] += 1;
            out.add_term(ne, c * Coef::from(BigInt::from(e.0[i])));
        }
    }
    Ok(out)
}

/// Exact multinomial coefficient `p! / (e_0! e_1! ... )` computed by an
/// integer binomial recurrence (never via factorials of floats).
fn multinomial(e: &ExpVec) -> BigInt {
    let mut total: u64 = 0;
    let mut coef = BigInt::one();
    for &x in e.0.iter() {
        for j in 1..=(x as u64) {
            total += 1;
            // binomial(total, j) accumulated multiplicatively; division exact.
            coef = coef * BigInt::from(total) / BigInt::from(j);
        }
    }
    coef
}

/// Iterate all exponent vectors of total degree `p` over `size` variables.
fn for_each_composition(size: usize, p: u32, mut f: impl FnMut(&ExpVec)) {
    fn rec(e: &mut ExpVec, pos: usize, rest: u32, f: &mut impl FnMut(&ExpVec)) {
        if pos + 1 == e.len() {
            e.0[pos] = rest as u16;
            f(e);
            return;
        }
        for v in 0..=rest {
            e.0[pos] = v as u16;
            rec(e, pos + 1, rest - v, f);
        }
        e.0[pos] = 0;
    }
    let mut e = ExpVec::zero(size);
    if size == 0 {
        return;
    }
    rec(&mut e, 0, p, &mut f);
}

/// Weight of a monomial under the order grading: `sum k*e_k` on a chain,
/// `(sum k*e_{k,l}, sum l*e_{k,l})` on a grid.
fn order_weights(vars: &VarSpace, e: &ExpVec) -> (usize, usize) {
    let mut a = 0usize;
    let mut b = 0usize;
    for (i, &x) in e.0.iter().enumerate() {
        let (k, l) = vars.unflat(i);
        a += k * x as usize;
        b += l * x as usize;
    }
    match vars {
        VarSpace::Chain { .. } => (a, 0),
        VarSpace::Grid { .. } => (a, b),
    }
}

/// Expansion route: group the multinomial expansion of the degree-`p` power
/// by `t`-exponent (chain) or `(s,t)`-bi-exponent (grid).
pub fn jet_generators_expansion(p: u32, vars: VarSpace) -> GeneratorSet {
    let (na, nb) = match vars {
        VarSpace::Chain { n } => (n as u32 * p + 1, 1),
        VarSpace::Grid { m, n } => (m as u32 * p + 1, n as u32 * p + 1),
    };
    let mut gens = vec![Polynomial::zero(vars); (na * nb) as usize];
    for_each_composition(vars.size(), p, |e| {
        let (a, b) = order_weights(&vars, e);
        let idx = a * nb as usize + b;
        gens[idx].add_term(e.clone(), Coef::from(multinomial(e)));
    });
    GeneratorSet {
        ring: TruncatedDiffRing { vars },
        p,
        provenance: Provenance::Expansion,
        generators: gens,
    }
}

/// Differentiation route: `(x^p)^(k)` by repeated truncated Leibniz steps,
/// starting from the pure power of the order-zero variable.
pub fn jet_generators_differentiation(p: u32, vars: VarSpace) -> GeneratorSet {
    let ring = TruncatedDiffRing { vars };
    let x0 = ExpVec::var(vars.size(), 0);
    let mut power = ExpVec::zero(vars.size());
    for _ in 0..p {
        power = power.mul(&x0);
    }
    let base = Polynomial::monomial(vars, power, Coef::one());
    let gens = match vars {
        VarSpace::Chain { n } => {
            let count = n as u32 * p + 1;
            let mut gens = Vec::with_capacity(count as usize);
            gens.push(base);
            for k in 1..count {
                let next = derive(&gens[(k - 1) as usize], &ring, Direction::Dt).expect("chain dt");
                gens.push(next);
            }
            gens
        }
        VarSpace::Grid { m, n } => {
            let na = m as u32 * p + 1;
            let nb = n as u32 * p + 1;
            let mut rows: Vec<Polynomial> = Vec::with_capacity(na as usize);
            rows.push(base);
            for _ in 1..na {
                let next = derive(rows.last().unwrap(), &ring, Direction::Ds).expect("grid ds");
                rows.push(next);
            }
            let mut gens = Vec::with_capacity((na * nb) as usize);
            for row in rows {
                let mut cur = row;
                for b in 0..nb {
                    if b > 0 {
                        cur = derive(&cur, &ring, Direction::Dt).expect("grid dt");
                    }
                    gens.push(cur.clone());
                }
            }
            gens
        }
    };
    GeneratorSet { ring, p, provenance: Provenance::Differentiation, generators: gens }
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Substitute `x^(k) -> k! x_k` (grid: `x^(k,l) -> k! l! x_{k,l}`) into a
/// polynomial of the differentiation route, i.e. scale each term by the
/// product of factorials of its variable orders.
fn scale_orders(p: &Polynomial) -> Polynomial {
    let vars = p.vars;
    let mut out = Polynomial::zero(vars);
    for (e, c) in p.terms() {
        let mut f = BigInt::one();
        for (i, &x) in e.0.iter().enumerate() {
            let (k, l) = vars.unflat(i);
            let per_var = factorial(k) * factorial(l);
            for _ in 0..x {
                f = f.clone() * per_var.clone();
            }
        }
        out.add_term(e.clone(), c * Coef::from(f));
    }
    out
}

/// Outcome of the scaling cross-check; on failure carries the first
/// mismatching generator label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoCheck {
    pub ok: bool,
    pub counterexample: Option<(usize, usize)>,
}

/// Verify that both generator routes agree under the order-factorial scaling:
/// substituting `x^(j) -> j! x_j` into `(x^p)^(k)` must equal `k!` times the
/// expansion-route coefficient (grid: `a! b!` times it).
pub fn check_iso_scaling(p: u32, vars: VarSpace) -> IsoCheck {
    let exp = jet_generators_expansion(p, vars);
    let diff = jet_generators_differentiation(p, vars);
    debug_assert_eq!(exp.len(), diff.len());
    for i in 0..exp.len() {
        let (a, b) = exp.label(i);
        let lhs = scale_orders(&diff.generators[i]);
        let rhs = exp.generators[i].scale(&Coef::from(factorial(a) * factorial(b)));
        if lhs != rhs {
            return IsoCheck { ok: false, counterexample: Some((a, b)) };
        }
    }
    IsoCheck { ok: true, counterexample: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ord::MonomialOrdering;

    fn int(x: i64) -> Coef {
        Coef::from(BigInt::from(x))
    }

    #[test]
    fn leibniz_single_step() {
        // d/dt (x0^2) = 2 x0 x1 when n >= 1.
        let ring = TruncatedDiffRing::chain(2);
        let sq = Polynomial::from_integer_terms(ring.vars, &[(&[2, 0, 0], 1)]);
        let d = derive(&sq, &ring, Direction::Dt).unwrap();
        assert_eq!(d, Polynomial::from_integer_terms(ring.vars, &[(&[1, 1, 0], 2)]));
    }

    #[test]
    fn truncation_drops_high_orders() {
        // In the n = 1 ring, (x0^2)'' = 2 x1^2: the 2 x0 x2 part is cut off.
        let ring = TruncatedDiffRing::chain(1);
        let sq = Polynomial::from_integer_terms(ring.vars, &[(&[2, 0], 1)]);
        let d2 = derive(&derive(&sq, &ring, Direction::Dt).unwrap(), &ring, Direction::Dt).unwrap();
        assert_eq!(d2, Polynomial::from_integer_terms(ring.vars, &[(&[0, 2], 2)]));
    }

    #[test]
    fn grid_derivations_commute_on_variable() {
        let ring = TruncatedDiffRing::grid(1, 1);
        let x00 = Polynomial::var(ring.vars, ring.vars.flat(0, 0));
        let via_s = derive(&x00, &ring, Direction::Ds).unwrap();
        assert_eq!(via_s, Polynomial::var(ring.vars, ring.vars.flat(1, 0)));
        let st = derive(&via_s, &ring, Direction::Dt).unwrap();
        let ts = derive(&derive(&x00, &ring, Direction::Dt).unwrap(), &ring, Direction::Ds).unwrap();
        assert_eq!(st, Polynomial::var(ring.vars, ring.vars.flat(1, 1)));
        assert_eq!(st, ts);
    }

    #[test]
    fn ds_invalid_on_chain() {
        let ring = TruncatedDiffRing::chain(2);
        let p = Polynomial::var(ring.vars, 0);
        assert!(derive(&p, &ring, Direction::Ds).is_err());
    }

    #[test]
    fn expansion_linear_and_binomial_cases() {
        let g = jet_generators_expansion(1, VarSpace::chain(2));
        assert_eq!(g.len(), 3);
        for k in 0..3 {
            assert_eq!(g.generators[k], Polynomial::var(g.ring.vars, k));
        }
        let g = jet_generators_expansion(2, VarSpace::chain(1));
        assert_eq!(g.len(), 3);
        assert_eq!(g.generators[0], Polynomial::from_integer_terms(g.ring.vars, &[(&[2, 0], 1)]));
        assert_eq!(g.generators[1], Polynomial::from_integer_terms(g.ring.vars, &[(&[1, 1], 2)]));
        assert_eq!(g.generators[2], Polynomial::from_integer_terms(g.ring.vars, &[(&[0, 2], 1)]));
    }

    /// Brute-force oracle: expand (x0 + x1 t + ... + x_n t^n)^p by plain
    /// polynomial multiplication in an enlarged space with t appended, then
    /// collect coefficients by t-exponent.
    fn expansion_oracle_chain(p: u32, n: usize) -> Vec<Polynomial> {
        let big = VarSpace::chain(n + 1); // last variable plays the role of t
        let t = n + 1;
        let mut f = Polynomial::zero(big);
        for k in 0..=n {
            let mut e = ExpVec::var(big.size(), k);
            e.0[t] = k as u16;
            f.add_term(e, Coef::one());
        }
        let fp = f.pow(p);
        let small = VarSpace::chain(n);
        let mut out = vec![Polynomial::zero(small); n * p as usize + 1];
        for (e, c) in fp.terms() {
            let tdeg = e.0[t] as usize;
            let mut se = ExpVec::zero(small.size());
            se.0.copy_from_slice(&e.0[..=n]);
            out[tdeg].add_term(se, c.clone());
        }
        out
    }

    #[test]
    fn expansion_matches_multiplication_oracle() {
        for (p, n) in [(2u32, 2usize), (3, 2), (2, 4), (4, 1)] {
            let g = jet_generators_expansion(p, VarSpace::chain(n));
            let oracle = expansion_oracle_chain(p, n);
            assert_eq!(g.len(), oracle.len());
            for (a, b) in g.generators.iter().zip(&oracle) {
                assert_eq!(a, b);
            }
        }
        // Spot value: the t^2 coefficient for p = 2, n = 2 is x1^2 + 2 x0 x2.
        let g = jet_generators_expansion(2, VarSpace::chain(2));
        assert_eq!(
            g.generators[2],
            Polynomial::from_integer_terms(g.ring.vars, &[(&[0, 2, 0], 1), (&[1, 0, 1], 2)])
        );
    }

    #[test]
    fn generator_counts() {
        assert_eq!(jet_generators_differentiation(3, VarSpace::chain(2)).len(), 7);
        assert_eq!(jet_generators_expansion(3, VarSpace::grid(3, 2)).len(), 70);
        // p = 0 gives the single generator 1.
        let g = jet_generators_expansion(0, VarSpace::chain(3));
        assert_eq!(g.len(), 1);
        assert_eq!(g.generators[0], Polynomial::one(g.ring.vars));
    }

    #[test]
    fn differentiation_small_cases() {
        let g = jet_generators_differentiation(2, VarSpace::chain(1));
        assert_eq!(g.generators[0], Polynomial::from_integer_terms(g.ring.vars, &[(&[2, 0], 1)]));
        assert_eq!(g.generators[1], Polynomial::from_integer_terms(g.ring.vars, &[(&[1, 1], 2)]));
        assert_eq!(g.generators[2], Polynomial::from_integer_terms(g.ring.vars, &[(&[0, 2], 2)]));

        // (x^2)^(1,1) = 2 x^(1,0) x^(0,1) + 2 x^(0,0) x^(1,1) on the 1x1 grid.
        let g = jet_generators_differentiation(2, VarSpace::grid(1, 1));
        let vs = g.ring.vars;
        let idx = g.index_of(1, 1);
        let expect = Polynomial::from_integer_terms(
            vs,
            &[(&[0, 1, 1, 0], 2), (&[1, 0, 0, 1], 2)],
        );
        assert_eq!(g.generators[idx], expect);
    }

    #[test]
    fn bihomogeneity_of_derivatives() {
        for (p, n) in [(2u32, 3usize), (3, 2)] {
            let g = jet_generators_differentiation(p, VarSpace::chain(n));
            for (i, gen) in g.generators.iter().enumerate() {
                for (e, _) in gen.terms() {
                    assert_eq!(e.total_degree(), p);
                    assert_eq!(order_weights(&g.ring.vars, e).0, i);
                }
            }
        }
        let g = jet_generators_differentiation(3, VarSpace::grid(2, 2));
        for (i, gen) in g.generators.iter().enumerate() {
            let (a, b) = g.label(i);
            for (e, _) in gen.terms() {
                assert_eq!(e.total_degree(), 3);
                assert_eq!(order_weights(&g.ring.vars, e), (a, b));
            }
        }
    }

    #[test]
    fn iso_scaling_direct_example() {
        // (x^2)^(1) = 2 x x^(1) maps to 2 x0 (1! x1) = 2 x0 x1 = 1! * f_1.
        let g = jet_generators_differentiation(2, VarSpace::chain(1));
        let scaled = scale_orders(&g.generators[1]);
        let f = jet_generators_expansion(2, VarSpace::chain(1));
        assert_eq!(scaled, f.generators[1].scale(&int(1)));
    }

    #[test]
    fn iso_scaling_small_ranges() {
        assert!(check_iso_scaling(3, VarSpace::chain(6)).ok);
        assert!(check_iso_scaling(2, VarSpace::grid(2, 2)).ok);
        assert!(check_iso_scaling(0, VarSpace::chain(2)).ok);
    }

    #[test]
    fn expansion_leading_monomials_follow_the_two_variable_pattern() {
        // For C_{p,n} under degrevlex the k-th generator leads with
        // x_m^a x_{m+1}^{p-a} where k = m p + (p - a).
        let p = 3u32;
        let n = 3usize;
        let g = jet_generators_expansion(p, VarSpace::chain(n));
        let ord = MonomialOrdering::degrevlex(g.ring.vars);
        for k in 0..g.len() {
            let lm = g.generators[k].leading_monomial(&ord).unwrap();
            let expect = if k == n * p as usize {
                let mut e = ExpVec::zero(n + 1);
                e.0[n] = p as u16;
                e
            } else {
                let m = k / p as usize;
                let a = (p as usize - (k - m * p as usize)) as u16;
                let mut e = ExpVec::zero(n + 1);
                e.0[m] = a;
                e.0[m + 1] = p as u16 - a;
                e
            };
            assert_eq!(lm, expect, "k = {k}");
        }
    }
}
