//! T-orderings: weighted revlex orderings attached to regular unimodular
//! triangulations, the support test for jet-generator leading monomials, and
//! the search for triangulations whose ordering turns the generators into a
//! Groebner basis.

use crate::error::Error;
use crate::groebner::{verify_groebner, VerifyOptions};
use crate::jets::jet_generators_expansion;
use crate::ord::MonomialOrdering;
use crate::tri::{
    doubling_heights, enumerate_regular_unimodular, is_regular, placing_triangulation,
    regular_from_heights, GridConfig, Hull, Triangulation,
};
use crate::Result;
use rayon::prelude::*;

/// Weighted revlex ordering whose weight vector induces `t` in the upper
/// hull convention: `W - h` for a strict-interior lower witness `h` and
/// `W = max(h) + 1`. For placing triangulations induced by the doubling
/// heights this reproduces the canonical `(2^(N-1)+1) - 2^flat` weights.
pub fn t_ordering_weights(t: &Triangulation) -> Result<MonomialOrdering> {
    let cfg = t.config;
    let h = canonical_or_lp_witness(t)?;
    let w_base = h.iter().copied().max().unwrap_or(0) + 1;
    let weights: Vec<i64> = h.iter().map(|&x| w_base - x).collect();
    MonomialOrdering::weighted_revlex(cfg.varspace(), weights)
}

fn canonical_or_lp_witness(t: &Triangulation) -> Result<Vec<i64>> {
    let cfg = t.config;
    if let Ok(placing) = placing_triangulation(cfg) {
        if *t == placing {
            let doubling = doubling_heights(cfg);
            if let Ok(induced) = regular_from_heights(cfg, &doubling, Hull::Lower) {
                if induced == *t {
                    return Ok(doubling);
                }
            }
        }
    }
    is_regular(t).ok_or(Error::IrregularTriangulation)
}

/// Check that the leading monomial of every jet generator is supported on a
/// triangle of `t`; the witness is the first violating generator label.
pub fn is_t_ordering(t: &Triangulation, ord: &MonomialOrdering, p: u32) -> Result<(bool, Option<(usize, usize)>)> {
    let gens = jet_generators_expansion(p, t.config.varspace());
    let masks = t.triangle_masks();
    for (i, g) in gens.generators.iter().enumerate() {
        let lm = g.leading_monomial(ord)?;
        let supp = lm.support().fold(0u32, |m, v| m | (1 << v));
        if !masks.iter().any(|&tm| tm & supp == supp) {
            return Ok((false, Some(gens.label(i))));
        }
    }
    Ok((true, None))
}

/// One search verdict: a triangulation, the weight vector used, and whether
/// the jet generators form a Groebner basis under it.
#[derive(Debug, Clone)]
pub struct SearchHit {
    pub triangulation: Triangulation,
    pub weights: Vec<i64>,
}

/// Outcome of the Groebner-filter search over all regular unimodular
/// triangulations of the grid.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub total_unimodular: usize,
    pub regular_unimodular: usize,
    /// Triangulations whose T-ordering makes the generators a basis,
    /// canonically sorted.
    pub winners: Vec<SearchHit>,
}

/// Cap on grid size for the default search.
pub const SEARCH_POINT_CAP: usize = 12;

/// For every regular unimodular triangulation of the grid, build its
/// T-ordering weights and run Buchberger verification on the jet generators;
/// collect the triangulations that pass. `extended` lifts the point cap to
/// the enumeration cap (16 points).
pub fn gb_triangulation_search(
    config: GridConfig,
    p: u32,
    guard_seeds: usize,
    extended: bool,
) -> Result<SearchResult> {
    let cap = if extended { crate::tri::ENUM_POINT_CAP } else { SEARCH_POINT_CAP };
    if config.num_points() > cap {
        return Err(Error::GridCap(config.num_points(), cap));
    }
    let enumeration = enumerate_regular_unimodular(config, guard_seeds)?;
    let gens = jet_generators_expansion(p, config.varspace());
    let verdicts: Vec<Option<SearchHit>> = enumeration
        .regular
        .par_iter()
        .map(|member| {
            let t = &member.triangulation;
            let w_base = member.lower_witness.iter().copied().max().unwrap_or(0) + 1;
            let weights: Vec<i64> =
                member.lower_witness.iter().map(|&x| w_base - x).collect();
            let ord = MonomialOrdering::weighted_revlex(config.varspace(), weights.clone())
                .expect("witness length matches");
            // fail fast: a strict-interior weight must be a T-ordering
            let (ok, witness) = is_t_ordering(t, &ord, p).expect("generators nonzero");
            assert!(ok, "interior weight vector is not a T-ordering at {witness:?}");
            let report = verify_groebner(
                &gens.generators,
                &ord,
                VerifyOptions { paranoid: false, early_exit: true },
            )
            .expect("generators nonzero");
            report.is_gb.then(|| SearchHit { triangulation: t.clone(), weights })
        })
        .collect();
    let mut winners: Vec<SearchHit> = verdicts.into_iter().flatten().collect();
    winners.sort_by(|a, b| a.triangulation.triangles.cmp(&b.triangulation.triangles));
    Ok(SearchResult {
        total_unimodular: enumeration.total_unimodular,
        regular_unimodular: enumeration.regular.len(),
        winners,
    })
}
