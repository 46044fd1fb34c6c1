//! Polynomial reduction, Buchberger S-pair verification and completion,
//! initial ideals, and standard-monomial counting.
//!
//! Verification is the primary mode: the generator families here are claimed
//! to *be* Groebner bases, so we test every S-pair rather than complete. The
//! coprime-LM and chain criteria may skip provably-zero pairs; a paranoid
//! flag disables both for certification runs. Pairs are processed by the
//! normal selection strategy — ascending lcm degree, then ascending lcm under
//! the active ordering, then pair index — so reports are deterministic;
//! parallel reduction keeps that order chunk by chunk.

use crate::error::Error;
use crate::ord::MonomialOrdering;
use crate::poly::Polynomial;
use crate::vars::ExpVec;
use crate::{Coef, Result};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// Result of dividing `f` by a list of generators.
#[derive(Debug, Clone)]
pub struct ReductionResult {
    pub remainder: Polynomial,
    /// Nonzero quotient multipliers, as (generator index, multiplier).
    pub quotients: Vec<(usize, Polynomial)>,
}

/// A polynomial pre-sorted for a fixed ordering: descending terms plus the
/// sort key of the leading monomial.
struct SortedPoly {
    terms: Vec<(ExpVec, Coef)>,
}

impl SortedPoly {
    fn new(p: &Polynomial, ord: &MonomialOrdering) -> Self {
        SortedPoly { terms: p.sorted_terms(ord) }
    }

    fn lm(&self) -> &ExpVec {
        &self.terms[0].0
    }

    fn lc(&self) -> &Coef {
        &self.terms[0].1
    }
}

/// Working heap for reduction: terms keyed by descending sort key.
struct TermAccumulator<'a> {
    ord: &'a MonomialOrdering,
    terms: BTreeMap<Vec<i64>, (ExpVec, Coef)>,
}

impl<'a> TermAccumulator<'a> {
    fn new(ord: &'a MonomialOrdering) -> Self {
        TermAccumulator { ord, terms: BTreeMap::new() }
    }

    fn add(&mut self, e: ExpVec, c: Coef) {
        if c.is_zero() {
            return;
        }
        let key = self.ord.sort_key(&e);
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert((e, c));
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().1 += c;
                if o.get().1.is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn pop_max(&mut self) -> Option<(ExpVec, Coef)> {
        self.terms.pop_last().map(|(_, t)| t)
    }
}

struct Engine<'a> {
    gens: Vec<SortedPoly>,
    ord: &'a MonomialOrdering,
}

impl<'a> Engine<'a> {
    fn new(gens: &[Polynomial], ord: &'a MonomialOrdering) -> Result<Self> {
        if gens.is_empty() || gens.iter().any(Polynomial::is_zero) {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Engine { gens: gens.iter().map(|g| SortedPoly::new(g, ord)).collect(), ord })
    }

    /// Divide; reducer is always the lowest generator index whose leading
    /// monomial divides the current lead, so the outcome is deterministic.
    fn reduce(&self, seed: Vec<(ExpVec, Coef)>, track_quotients: bool) -> ReductionResult {
        let vars = self.ord.vars;
        let mut acc = TermAccumulator::new(self.ord);
        for (e, c) in seed {
            acc.add(e, c);
        }
        let mut remainder = Polynomial::zero(vars);
        let mut quotients: Vec<Polynomial> = if track_quotients {
            vec![Polynomial::zero(vars); self.gens.len()]
        } else {
            Vec::new()
        };
        while let Some((lead, coef)) = acc.pop_max() {
            match self.gens.iter().position(|g| g.lm().divides(&lead)) {
                None => remainder.add_term(lead, coef),
                Some(i) => {
                    let g = &self.gens[i];
                    let q_exp = ExpVec::div_exact(&lead, g.lm());
                    let q_coef = coef / g.lc();
                    // lead cancels; fold in the reducer's tail.
                    for (e, c) in g.terms.iter().skip(1) {
                        acc.add(e.mul(&q_exp), -(c * &q_coef));
                    }
                    if track_quotients {
                        quotients[i].add_term(q_exp, q_coef);
                    }
                }
            }
        }
        let quotients = quotients
            .into_iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .collect();
        ReductionResult { remainder, quotients }
    }
}

fn seed_of(p: &Polynomial, ord: &MonomialOrdering) -> Vec<(ExpVec, Coef)> {
    p.sorted_terms(ord)
}

/// Divide `f` by the generator list `gens` under `ord`. The identity
/// `f = sum(multiplier * generator) + remainder` holds exactly and is
/// re-checked in debug builds; no remainder term is divisible by any
/// generator's leading monomial.
pub fn reduce(f: &Polynomial, gens: &[Polynomial], ord: &MonomialOrdering) -> Result<ReductionResult> {
    let engine = Engine::new(gens, ord)?;
    let res = engine.reduce(seed_of(f, ord), true);
    #[cfg(debug_assertions)]
    {
        let mut recomposed = res.remainder.clone();
        for (i, q) in &res.quotients {
            recomposed = recomposed.add(&q.mul(&gens[*i]).unwrap()).unwrap();
        }
        debug_assert_eq!(&recomposed, f, "division identity violated");
        for (e, _) in res.remainder.terms() {
            debug_assert!(
                gens.iter().all(|g| !g.leading_monomial(ord).unwrap().divides(e)),
                "remainder not fully reduced"
            );
        }
    }
    Ok(res)
}

/// S-polynomial `S(f, g) = (lcm/lt f) f - (lcm/lt g) g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrdering) -> Result<Polynomial> {
    let (lmf, lcf) = f.leading_term(ord)?;
    let (lmg, lcg) = g.leading_term(ord)?;
    let lcm = lmf.lcm(&lmg);
    let mf = ExpVec::div_exact(&lcm, &lmf);
    let mg = ExpVec::div_exact(&lcm, &lmg);
    let one = Coef::from(num_bigint::BigInt::from(1));
    let left = f.mul_term(&mf, &(&one / &lcf));
    let right = g.mul_term(&mg, &(&one / &lcg));
    left.sub(&right)
}

/// Options for `verify_groebner`.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Disable the coprime-LM and chain skip criteria (certification mode).
    pub paranoid: bool,
    /// Stop at the first failing pair instead of reducing the rest.
    pub early_exit: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { paranoid: false, early_exit: true }
    }
}

/// Buchberger criterion report.
#[derive(Debug, Clone, Serialize)]
pub struct GBReport {
    pub is_gb: bool,
    /// First failing pair in processing order, with its nonzero remainder
    /// rendered under the active ordering.
    pub failing_pair: Option<FailingPair>,
    pub pairs_total: usize,
    pub pairs_checked: usize,
    pub pairs_skipped_by_criteria: usize,
    pub paranoid: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FailingPair {
    pub i: usize,
    pub j: usize,
    pub lcm: Vec<u16>,
    pub remainder: String,
}

/// Run Buchberger's criterion over all S-pairs of `gens` under `ord`.
pub fn verify_groebner(
    gens: &[Polynomial],
    ord: &MonomialOrdering,
    opts: VerifyOptions,
) -> Result<GBReport> {
    let engine = Engine::new(gens, ord)?;
    let lms: Vec<ExpVec> = engine.gens.iter().map(|g| g.lm().clone()).collect();

    // Normal selection: sort pairs by (lcm degree, lcm under ord, i, j).
    let mut keyed: Vec<(u32, Vec<i64>, usize, usize)> = Vec::new();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let lcm = lms[i].lcm(&lms[j]);
            keyed.push((lcm.total_degree(), ord.sort_key(&lcm), i, j));
        }
    }
    keyed.sort_unstable();
    let pairs: Vec<(u32, usize, usize)> = keyed.into_iter().map(|(d, _, i, j)| (d, i, j)).collect();
    let pairs_total = pairs.len();

    let mut checked = 0usize;
    let mut skipped = 0usize;
    let mut failing: Option<FailingPair> = None;
    // Pairs fully handled in earlier positions (reduced or legitimately
    // skipped); the chain criterion may only cite these.
    let mut done: Vec<bool> = Vec::new();
    let mut done_idx = BTreeMap::new();
    for (pos, &(_, i, j)) in pairs.iter().enumerate() {
        done_idx.insert((i, j), pos);
        done.push(false);
    }

    let chunk_size = 32;
    let mut pos = 0;
    'outer: while pos < pairs.len() {
        let end = (pos + chunk_size).min(pairs.len());
        // Decide skips sequentially (they depend on earlier chunks only).
        let mut to_reduce: Vec<(usize, usize, usize)> = Vec::new();
        for (offset, &(_, i, j)) in pairs[pos..end].iter().enumerate() {
            let idx = pos + offset;
            if !opts.paranoid {
                let gcd_trivial = lms[i].gcd(&lms[j]).is_one();
                if gcd_trivial {
                    skipped += 1;
                    done[idx] = true;
                    continue;
                }
                let lcm = lms[i].lcm(&lms[j]);
                let chain = (0..gens.len()).any(|k| {
                    if k == i || k == j || !lms[k].divides(&lcm) {
                        return false;
                    }
                    let a = (i.min(k), i.max(k));
                    let b = (j.min(k), j.max(k));
                    let ok = |pair: (usize, usize)| {
                        done_idx.get(&pair).is_some_and(|&p| p < idx && done[p])
                    };
                    ok(a) && ok(b)
                });
                if chain {
                    skipped += 1;
                    done[idx] = true;
                    continue;
                }
            }
            to_reduce.push((idx, i, j));
        }
        // Reduce the chunk's survivors in parallel; aggregation keeps pair order.
        let results: Vec<(usize, usize, usize, Polynomial)> = to_reduce
            .par_iter()
            .map(|&(idx, i, j)| {
                let spoly = spoly_sorted(&engine, i, j);
                let rem = engine.reduce(spoly, false).remainder;
                (idx, i, j, rem)
            })
            .collect();
        for (idx, i, j, rem) in results {
            checked += 1;
            if rem.is_zero() {
                done[idx] = true;
            } else if failing.is_none() {
                failing = Some(FailingPair {
                    i,
                    j,
                    lcm: lms[i].lcm(&lms[j]).0.to_vec(),
                    remainder: rem.display(ord),
                });
                if opts.early_exit {
                    break 'outer;
                }
            }
        }
        pos = end;
    }

    Ok(GBReport {
        is_gb: failing.is_none(),
        failing_pair: failing,
        pairs_total,
        pairs_checked: checked,
        pairs_skipped_by_criteria: skipped,
        paranoid: opts.paranoid,
    })
}

/// S-polynomial of generators `i, j` directly in sorted-term form.
fn spoly_sorted(engine: &Engine, i: usize, j: usize) -> Vec<(ExpVec, Coef)> {
    let f = &engine.gens[i];
    let g = &engine.gens[j];
    let lcm = f.lm().lcm(g.lm());
    let mf = ExpVec::div_exact(&lcm, f.lm());
    let mg = ExpVec::div_exact(&lcm, g.lm());
    let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
    for (e, c) in &f.terms {
        out.push((e.mul(&mf), c / f.lc()));
    }
    for (e, c) in &g.terms {
        out.push((e.mul(&mg), -(c / g.lc())));
    }
    out
}

/// Outcome of capped Buchberger completion.
#[derive(Debug, Clone)]
pub struct Completion {
    pub basis: Vec<Polynomial>,
    /// False when the degree cap stopped the run before all pairs cleared.
    pub complete: bool,
}

/// Buchberger completion, capped by the total degree of S-pair lcms. The
/// output is a (non-reduced) Groebner basis when `complete` is true.
pub fn buchberger_complete(
    gens: &[Polynomial],
    ord: &MonomialOrdering,
    degree_cap: u32,
) -> Result<Completion> {
    if gens.is_empty() || gens.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let mut basis: Vec<Polynomial> = gens.to_vec();
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            queue.push((i, j));
        }
    }
    let mut complete = true;
    while let Some((i, j)) = pop_lowest_lcm(&mut queue, &basis, ord) {
        let lmi = basis[i].leading_monomial(ord)?;
        let lmj = basis[j].leading_monomial(ord)?;
        let lcm = lmi.lcm(&lmj);
        if lcm.total_degree() > degree_cap {
            complete = false;
            continue;
        }
        if lmi.gcd(&lmj).is_one() {
            continue;
        }
        let engine = Engine::new(&basis, ord)?;
        let rem = engine.reduce(spoly_sorted(&engine, i, j), false).remainder;
        if !rem.is_zero() {
            let k = basis.len();
            basis.push(rem);
            for t in 0..k {
                queue.push((t, k));
            }
        }
    }
    if !complete {
        return Err(Error::DegreeCapExceeded(degree_cap));
    }
    Ok(Completion { basis, complete })
}

fn pop_lowest_lcm(
    queue: &mut Vec<(usize, usize)>,
    basis: &[Polynomial],
    ord: &MonomialOrdering,
) -> Option<(usize, usize)> {
    if queue.is_empty() {
        return None;
    }
    let mut best = 0;
    let mut best_key = (u32::MAX, usize::MAX, usize::MAX);
    for (t, &(i, j)) in queue.iter().enumerate() {
        let d = basis[i]
            .leading_monomial(ord)
            .unwrap()
            .lcm(&basis[j].leading_monomial(ord).unwrap())
            .total_degree();
        let key = (d, i, j);
        if key < best_key {
            best_key = key;
            best = t;
        }
    }
    Some(queue.swap_remove(best))
}

/// A monomial ideal by its minimal generators (an antichain under
/// divisibility), kept sorted for deterministic output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    pub generators: Vec<ExpVec>,
}

impl MonomialIdeal {
    /// Minimalize an arbitrary generating set.
    pub fn from_generators(mut gens: Vec<ExpVec>) -> Self {
        gens.sort();
        gens.dedup();
        let minimal: Vec<ExpVec> = gens
            .iter()
            .filter(|e| !gens.iter().any(|f| f != *e && f.divides(e)))
            .cloned()
            .collect();
        MonomialIdeal { generators: minimal }
    }

    pub fn contains_monomial(&self, e: &ExpVec) -> bool {
        self.generators.iter().any(|g| g.divides(e))
    }
}

/// Initial ideal of a *verified* Groebner basis: the minimal generators of
/// the leading-monomial ideal. Refuses to run without a passing report.
pub fn initial_ideal(
    gens: &[Polynomial],
    ord: &MonomialOrdering,
    report: &GBReport,
) -> Result<MonomialIdeal> {
    if !report.is_gb {
        let f = report.failing_pair.as_ref().ok_or(Error::MissingVerification)?;
        return Err(Error::NotAGroebnerBasis(f.i, f.j));
    }
    let lms = gens
        .iter()
        .map(|g| g.leading_monomial(ord))
        .collect::<Result<Vec<_>>>()?;
    Ok(MonomialIdeal::from_generators(lms))
}

/// Number of standard monomials of a monomial ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardCount {
    Finite(u128),
    Infinite,
}

/// Count monomials divisible by no generator. Finite iff every variable has
/// a pure power among the generators; otherwise reports `Infinite`.
pub fn count_standard_monomials(ideal: &MonomialIdeal, num_vars: usize) -> StandardCount {
    if ideal.generators.iter().any(ExpVec::is_one) {
        return StandardCount::Finite(0);
    }
    // Per-variable exponent bound from pure-power generators.
    let mut bound = vec![u16::MAX; num_vars];
    for g in &ideal.generators {
        let supp: Vec<usize> = g.support().collect();
        if supp.len() == 1 {
            let v = supp[0];
            bound[v] = bound[v].min(g.0[v] - 1);
        }
    }
    if bound.iter().any(|&b| b == u16::MAX) {
        return StandardCount::Infinite;
    }

    fn dfs(ideal: &MonomialIdeal, bound: &[u16], cur: &mut ExpVec, var: usize) -> u128 {
        if var == bound.len() {
            return 1;
        }
        let mut total = 0u128;
        for v in 0..=bound[var] {
            cur.0[var] = v;
            // Prune: a generator supported on assigned variables and already
            // covered divides every extension of this prefix.
            let dead = ideal.generators.iter().any(|g| {
                g.support().all(|i| i <= var) && g.0[..=var].iter().zip(&cur.0[..=var]).all(|(a, b)| a <= b)
            });
            if dead {
                break; // larger v stays divisible
            }
            total += dfs(ideal, bound, cur, var + 1);
        }
        cur.0[var] = 0;
        total
    }

    let mut cur = ExpVec::zero(num_vars);
    StandardCount::Finite(dfs(ideal, &bound, &mut cur, 0))
}
