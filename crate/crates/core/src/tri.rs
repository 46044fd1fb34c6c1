//! Triangulations of grid rectangles: construction from height vectors in
//! both hull conventions, the closed-form placing triangulation, flips,
//! flip-graph enumeration with exact regularity certification, and the text
//! file format.
//!
//! A `Triangulation` is validated on construction: nondegenerate triangles,
//! pairwise disjoint interiors, total area equal to the rectangle, and no
//! vertex of one triangle interior to an edge of another (face-to-face).

use crate::error::Error;
use crate::simplex::{feasible_strict, scale_to_integers};
use crate::vars::VarSpace;
use crate::Result;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};

/// Points `(k, l)` of the `(m+1) x (n+1)` grid in row-major flat order,
/// matching the variable order of `VarSpace::Grid`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridConfig {
    pub m: usize,
    pub n: usize,
}

/// Cap on grid size for flip-graph enumeration.
pub const ENUM_POINT_CAP: usize = 16;

impl GridConfig {
    pub fn new(m: usize, n: usize) -> Self {
        GridConfig { m, n }
    }

    pub fn num_points(&self) -> usize {
        (self.m + 1) * (self.n + 1)
    }

    pub fn varspace(&self) -> VarSpace {
        VarSpace::grid(self.m, self.n)
    }

    pub fn point(&self, idx: usize) -> (i64, i64) {
        let (k, l) = self.varspace().unflat(idx);
        (k as i64, l as i64)
    }

    pub fn index(&self, k: usize, l: usize) -> usize {
        self.varspace().flat(k, l)
    }
}

/// Twice the signed area of the triangle `a, b, c`.
fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangulation {
    pub config: GridConfig,
    /// Canonical form: each triple sorted, triples sorted lexicographically.
    pub triangles: Vec<[u8; 3]>,
}

impl Triangulation {
    /// Validated constructor: the triangles must tile the full rectangle
    /// face-to-face.
    pub fn new(config: GridConfig, triangles: Vec<[usize; 3]>) -> Result<Self> {
        let t = Self::new_partial(config, triangles)?;
        t.validate_cover()?;
        Ok(t)
    }

    /// Canonicalize and check only per-triangle sanity; used for partial
    /// inputs such as a bare triangle list fed to the polytope builder.
    pub fn new_partial(config: GridConfig, triangles: Vec<[usize; 3]>) -> Result<Self> {
        let np = config.num_points();
        let mut canon: Vec<[u8; 3]> = Vec::with_capacity(triangles.len());
        for t in &triangles {
            if t.iter().any(|&v| v >= np) {
                return Err(Error::InvalidTriangulation(format!(
                    "vertex index out of range in {t:?}"
                )));
            }
            let mut s = *t;
            s.sort_unstable();
            if s[0] == s[1] || s[1] == s[2] {
                return Err(Error::InvalidTriangulation(format!("repeated vertex in {t:?}")));
            }
            let (a, b, c) =
                (config.point(s[0]), config.point(s[1]), config.point(s[2]));
            if orient(a, b, c) == 0 {
                return Err(Error::InvalidTriangulation(format!("degenerate triangle {t:?}")));
            }
            canon.push([s[0] as u8, s[1] as u8, s[2] as u8]);
        }
        canon.sort_unstable();
        if canon.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidTriangulation("duplicate triangle".into()));
        }
        Ok(Triangulation { config, triangles: canon })
    }

    fn validate_cover(&self) -> Result<()> {
        let cfg = &self.config;
        let mut area: i64 = 0;
        for t in &self.triangles {
            let (a, b, c) = self.points_of(t);
            area += orient(a, b, c).abs();
        }
        if area != 2 * (cfg.m * cfg.n) as i64 {
            return Err(Error::InvalidTriangulation(format!(
                "areas sum to {area}/2, rectangle needs {}",
                cfg.m * cfg.n
            )));
        }
        for i in 0..self.triangles.len() {
            for j in (i + 1)..self.triangles.len() {
                if triangles_overlap(cfg, &self.triangles[i], &self.triangles[j]) {
                    return Err(Error::InvalidTriangulation(format!(
                        "triangles {:?} and {:?} overlap",
                        self.triangles[i], self.triangles[j]
                    )));
                }
            }
        }
        // face-to-face: no used vertex interior to an edge
        let used: Vec<u8> = {
            let mut s: Vec<u8> = self.triangles.iter().flatten().copied().collect();
            s.sort_unstable();
            s.dedup();
            s
        };
        for t in &self.triangles {
            for (u, v) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                let (pu, pv) = (cfg.point(u as usize), cfg.point(v as usize));
                for &w in &used {
                    if w == u || w == v {
                        continue;
                    }
                    let pw = cfg.point(w as usize);
                    if orient(pu, pv, pw) == 0 && strictly_between(pu, pv, pw) {
                        return Err(Error::InvalidTriangulation(format!(
                            "vertex {w} interior to edge ({u}, {v})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn points_of(&self, t: &[u8; 3]) -> ((i64, i64), (i64, i64), (i64, i64)) {
        (
            self.config.point(t[0] as usize),
            self.config.point(t[1] as usize),
            self.config.point(t[2] as usize),
        )
    }

    /// Every triangle has lattice area 1/2.
    pub fn is_unimodular(&self) -> bool {
        self.triangles.iter().all(|t| {
            let (a, b, c) = self.points_of(t);
            orient(a, b, c).abs() == 1
        })
    }

    /// Distinct edges, sorted.
    pub fn edges(&self) -> Vec<(u8, u8)> {
        let mut e: Vec<(u8, u8)> = self
            .triangles
            .iter()
            .flat_map(|t| [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])])
            .collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    /// Vertices that occur in some triangle, sorted.
    pub fn used_vertices(&self) -> Vec<u8> {
        let mut v: Vec<u8> = self.triangles.iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Vertex sets as bitmasks over flat point indices.
    pub fn triangle_masks(&self) -> Vec<u32> {
        self.triangles
            .iter()
            .map(|t| t.iter().fold(0u32, |m, &v| m | (1 << v)))
            .collect()
    }

    /// Triangles as index triples (usize view).
    pub fn triangles_usize(&self) -> Vec<[usize; 3]> {
        self.triangles.iter().map(|t| [t[0] as usize, t[1] as usize, t[2] as usize]).collect()
    }

    /// One triangle per line, three `(k,l)` pairs.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for t in &self.triangles {
            let coords: Vec<String> = t
                .iter()
                .map(|&v| {
                    let (k, l) = self.config.varspace().unflat(v as usize);
                    format!("({k},{l})")
                })
                .collect();
            out.push_str(&coords.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parse the text format; the triangle list must tile the rectangle.
    pub fn from_text(config: GridConfig, text: &str) -> Result<Self> {
        let mut triangles = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut verts = Vec::new();
            for chunk in line.split(')') {
                let chunk = chunk.trim().trim_start_matches(',').trim();
                if chunk.is_empty() {
                    continue;
                }
                let inner = chunk
                    .strip_prefix('(')
                    .ok_or_else(|| Error::Parse(format!("expected '(' in {line:?}")))?;
                let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
                if parts.len() != 2 {
                    return Err(Error::Parse(format!("expected (k,l) in {line:?}")));
                }
                let k: usize =
                    parts[0].parse().map_err(|_| Error::Parse(format!("bad index in {line:?}")))?;
                let l: usize =
                    parts[1].parse().map_err(|_| Error::Parse(format!("bad index in {line:?}")))?;
                if k > config.m || l > config.n {
                    return Err(Error::Parse(format!("point ({k},{l}) outside grid")));
                }
                verts.push(config.index(k, l));
            }
            if verts.len() != 3 {
                return Err(Error::Parse(format!("expected three points per line: {line:?}")));
            }
            triangles.push([verts[0], verts[1], verts[2]]);
        }
        Triangulation::new(config, triangles)
    }
}

fn strictly_between(a: (i64, i64), b: (i64, i64), w: (i64, i64)) -> bool {
    // collinearity is checked by the caller
    let within = |x: i64, lo: i64, hi: i64| x > lo.min(hi) && x < lo.max(hi);
    if a.0 != b.0 {
        within(w.0, a.0, b.0)
    } else {
        within(w.1, a.1, b.1)
    }
}

/// Positive-area overlap test via separating axes on edges.
fn triangles_overlap(cfg: &GridConfig, t1: &[u8; 3], t2: &[u8; 3]) -> bool {
    let p1: Vec<(i64, i64)> = t1.iter().map(|&v| cfg.point(v as usize)).collect();
    let p2: Vec<(i64, i64)> = t2.iter().map(|&v| cfg.point(v as usize)).collect();
    !has_separating_edge(&p1, &p2) && !has_separating_edge(&p2, &p1)
}

fn has_separating_edge(own: &[(i64, i64)], other: &[(i64, i64)]) -> bool {
    for i in 0..3 {
        let p = own[i];
        let q = own[(i + 1) % 3];
        let r = own[(i + 2) % 3];
        let side = orient(p, q, r).signum();
        if other.iter().all(|&w| orient(p, q, w).signum() * side <= 0) {
            return true;
        }
    }
    false
}

/// Hull convention for height-induced subdivisions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Hull {
    Lower,
    Upper,
}

/// The regular triangulation induced by lifting grid point `i` to height
/// `h[i]` and projecting the chosen hull. Rejects non-generic heights
/// (some hull cell not a triangle).
pub fn regular_from_heights(config: GridConfig, heights: &[i64], hull: Hull) -> Result<Triangulation> {
    let np = config.num_points();
    if heights.len() != np {
        return Err(Error::Parse(format!("expected {np} heights, got {}", heights.len())));
    }
    // Upper hull of h is the lower hull of -h over the same projection.
    let z: Vec<i128> = match hull {
        Hull::Lower => heights.iter().map(|&h| h as i128).collect(),
        Hull::Upper => heights.iter().map(|&h| -(h as i128)).collect(),
    };
    let pts: Vec<(i64, i64)> = (0..np).map(|i| config.point(i)).collect();
    let mut triangles = Vec::new();
    for i in 0..np {
        for j in (i + 1)..np {
            for k in (j + 1)..np {
                let (mut a, mut b, c) = (i, j, k);
                let o = orient(pts[a], pts[b], pts[c]);
                if o == 0 {
                    continue;
                }
                if o < 0 {
                    std::mem::swap(&mut a, &mut b);
                }
                // lifted-plane classification of all other points
                let mut below = false;
                let mut coplanar = false;
                for q in 0..np {
                    if q == i || q == j || q == k {
                        continue;
                    }
                    let d = det3_lift(pts[a], z[a], pts[b], z[b], pts[c], z[c], pts[q], z[q]);
                    if d < 0 {
                        below = true;
                        break;
                    }
                    if d == 0 {
                        coplanar = true;
                    }
                }
                if below {
                    continue;
                }
                if coplanar {
                    return Err(Error::NonGenericHeights(format!(
                        "lower face through points {i}, {j}, {k} is not a triangle"
                    )));
                }
                triangles.push([i, j, k]);
            }
        }
    }
    if triangles.is_empty() {
        return Err(Error::NonGenericHeights("no full-dimensional cells".into()));
    }
    Triangulation::new(config, triangles)
}

/// Signed volume of the lifted tetrahedron: positive when `q` lifts strictly
/// above the plane through the ccw triangle `a, b, c`.
#[allow(clippy::too_many_arguments)]
fn det3_lift(
    a: (i64, i64),
    za: i128,
    b: (i64, i64),
    zb: i128,
    c: (i64, i64),
    zc: i128,
    q: (i64, i64),
    zq: i128,
) -> i128 {
    let (x1, y1, z1) = ((b.0 - a.0) as i128, (b.1 - a.1) as i128, zb - za);
    let (x2, y2, z2) = ((c.0 - a.0) as i128, (c.1 - a.1) as i128, zc - za);
    let (x3, y3, z3) = ((q.0 - a.0) as i128, (q.1 - a.1) as i128, zq - za);
    x1 * (y2 * z3 - z2 * y3) - y1 * (x2 * z3 - z2 * x3) + z1 * (x2 * y3 - y2 * x3)
}

/// The placing triangulation of the grid, from its closed-form triangle
/// list: `{(j,n),(j+1,s),(j+1,s+1)}` and `{(j+1,0),(j,s),(j,s+1)}` for
/// `0 <= j <= m-1`, `0 <= s <= n-1`.
pub fn placing_triangulation(config: GridConfig) -> Result<Triangulation> {
    if config.m == 0 || config.n == 0 {
        return Err(Error::InvalidTriangulation(
            "placing triangulation needs m >= 1 and n >= 1".into(),
        ));
    }
    let (m, n) = (config.m, config.n);
    let mut triangles = Vec::with_capacity(2 * m * n);
    for j in 0..m {
        for s in 0..n {
            triangles.push([config.index(j, n), config.index(j + 1, s), config.index(j + 1, s + 1)]);
            triangles.push([config.index(j + 1, 0), config.index(j, s), config.index(j, s + 1)]);
        }
    }
    Triangulation::new(config, triangles)
}

/// Doubling heights along the flat point order; these induce the placing
/// triangulation in the lower hull convention for n = 2 grids.
pub fn doubling_heights(config: GridConfig) -> Vec<i64> {
    (0..config.num_points()).map(|i| 1i64 << i).collect()
}

/// All 2-2 flips of a unimodular triangulation: for each interior edge whose
/// two triangles form a strictly convex quadrilateral, swap the diagonal.
pub fn flips(t: &Triangulation) -> Vec<Triangulation> {
    let mut edge_map: HashMap<(u8, u8), Vec<usize>> = HashMap::new();
    for (ti, tri) in t.triangles.iter().enumerate() {
        for (u, v) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])] {
            edge_map.entry((u, v)).or_default().push(ti);
        }
    }
    let mut out = Vec::new();
    for ((u, v), tris) in &edge_map {
        if tris.len() != 2 {
            continue;
        }
        let opp = |ti: usize| -> u8 {
            *t.triangles[ti].iter().find(|&&w| w != *u && w != *v).unwrap()
        };
        let (a, b) = (opp(tris[0]), opp(tris[1]));
        let (pa, pb) = (t.config.point(a as usize), t.config.point(b as usize));
        let (pu, pv) = (t.config.point(*u as usize), t.config.point(*v as usize));
        // strict convexity: the new diagonal a-b must cross the open edge u-v
        if orient(pa, pb, pu).signum() * orient(pa, pb, pv).signum() >= 0 {
            continue;
        }
        let mut triangles = t.triangles_usize();
        triangles[tris[0]] = [a as usize, b as usize, *u as usize];
        triangles[tris[1]] = [a as usize, b as usize, *v as usize];
        let flipped = Triangulation::new_partial(t.config, triangles)
            .expect("flip preserves per-triangle sanity");
        debug_assert!(flipped.validate_cover().is_ok());
        out.push(flipped);
    }
    out
}

/// Fold rows of the secondary-cone system: one row per interior edge, the
/// linear form in the heights that is positive exactly when the lower-hull
/// fold across that edge is strictly convex.
fn fold_rows(t: &Triangulation) -> Vec<Vec<i64>> {
    let np = t.config.num_points();
    let mut edge_map: HashMap<(u8, u8), Vec<usize>> = HashMap::new();
    for (ti, tri) in t.triangles.iter().enumerate() {
        for (u, v) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])] {
            edge_map.entry((u, v)).or_default().push(ti);
        }
    }
    let mut rows = Vec::new();
    for ((u, v), tris) in &edge_map {
        if tris.len() != 2 {
            continue;
        }
        let opp = |ti: usize| -> u8 {
            *t.triangles[ti].iter().find(|&&w| w != *u && w != *v).unwrap()
        };
        let (a, b) = (opp(tris[0]), opp(tris[1]));
        // require lift(b) strictly above plane(u, v, a) with (u, v, a) ccw
        let (mut p0, mut p1, p2, p3) =
            (*u as usize, *v as usize, a as usize, b as usize);
        if orient(t.config.point(p0), t.config.point(p1), t.config.point(p2)) < 0 {
            std::mem::swap(&mut p0, &mut p1);
        }
        let mut row = vec![0i64; np];
        for (idx, w) in [p0, p1, p2, p3].iter().enumerate() {
            // coefficient of h_w: evaluate the lifted determinant at the unit height e_w
            let mut z = [0i128; 4];
            z[idx] = 1;
            let d = det3_lift(
                t.config.point(p0),
                z[0],
                t.config.point(p1),
                z[1],
                t.config.point(p2),
                z[2],
                t.config.point(p3),
                z[3],
            );
            row[*w] += i64::try_from(d).expect("fold coefficient fits i64");
        }
        rows.push(row);
    }
    rows.sort_unstable();
    rows
}

/// Exact regularity test: a strict-interior integer height vector for the
/// lower hull convention, or `None` when the secondary cone has empty
/// interior.
pub fn is_regular(t: &Triangulation) -> Option<Vec<i64>> {
    let rows = fold_rows(t);
    let x = feasible_strict(&rows)?;
    let h = scale_to_integers(&x);
    debug_assert!(
        regular_from_heights(t.config, &h, Hull::Lower).map(|r| r == *t).unwrap_or(false),
        "witness fails to induce its triangulation"
    );
    Some(h)
}

/// A flip-graph member together with its regularity certificate.
#[derive(Debug, Clone)]
pub struct RegularMember {
    pub triangulation: Triangulation,
    /// Strict-interior lower-hull witness.
    pub lower_witness: Vec<i64>,
}

/// Result of flip-graph enumeration seeded at the placing triangulation.
#[derive(Debug, Clone)]
pub struct Enumeration {
    /// All unimodular triangulations reached by flips.
    pub total_unimodular: usize,
    /// The regular ones, canonically sorted, each with a witness.
    pub regular: Vec<RegularMember>,
}

/// Breadth-first closure of the flip graph from the placing triangulation,
/// filtered by exact regularity. `guard_seeds` random height-vector
/// triangulations re-seed the search and must already have been visited;
/// any miss reports the flip graph as incomplete.
pub fn enumerate_regular_unimodular(config: GridConfig, guard_seeds: usize) -> Result<Enumeration> {
    if config.num_points() > ENUM_POINT_CAP {
        return Err(Error::GridCap(config.num_points(), ENUM_POINT_CAP));
    }
    let seed = placing_triangulation(config)?;
    let mut visited: HashSet<Vec<[u8; 3]>> = HashSet::new();
    let mut order: Vec<Triangulation> = Vec::new();
    let mut queue = VecDeque::new();
    visited.insert(seed.triangles.clone());
    queue.push_back(seed.clone());
    while let Some(t) = queue.pop_front() {
        for next in flips(&t) {
            if visited.insert(next.triangles.clone()) {
                queue.push_back(next);
            }
        }
        order.push(t);
    }

    // completeness guard: random regular triangulations must be reachable
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b9);
    let mut found = 0usize;
    let mut attempts = 0usize;
    while found < guard_seeds && attempts < guard_seeds * 50 {
        attempts += 1;
        let heights: Vec<i64> = (0..config.num_points()).map(|_| rng.gen_range(0..(1 << 20))).collect();
        let Ok(t) = regular_from_heights(config, &heights, Hull::Lower) else {
            continue;
        };
        if !t.is_unimodular() {
            continue;
        }
        found += 1;
        if !visited.contains(&t.triangles) {
            return Err(Error::InvalidTriangulation(
                "completeness guard reached a triangulation outside the flip closure".into(),
            ));
        }
    }

    let mut regulars: Vec<RegularMember> = order
        .par_iter()
        .filter_map(|t| {
            is_regular(t).map(|w| RegularMember { triangulation: t.clone(), lower_witness: w })
        })
        .collect();
    regulars.sort_by(|x, y| x.triangulation.triangles.cmp(&y.triangulation.triangles));
    Ok(Enumeration { total_unimodular: visited.len(), regular: regulars })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn placing_matches_figure_for_2x2() {
        let cfg = GridConfig::new(2, 2);
        let t = placing_triangulation(cfg).unwrap();
        assert_eq!(t.triangles.len(), 8);
        let expected: Vec<[usize; 3]> = vec![
            // variable triples of the eight triangles, as flat indices
            [cfg.index(0, 0), cfg.index(0, 1), cfg.index(1, 0)],
            [cfg.index(0, 1), cfg.index(0, 2), cfg.index(1, 0)],
            [cfg.index(0, 2), cfg.index(1, 0), cfg.index(1, 1)],
            [cfg.index(0, 2), cfg.index(1, 1), cfg.index(1, 2)],
            [cfg.index(1, 0), cfg.index(1, 1), cfg.index(2, 0)],
            [cfg.index(1, 1), cfg.index(1, 2), cfg.index(2, 0)],
            [cfg.index(1, 2), cfg.index(2, 0), cfg.index(2, 1)],
            [cfg.index(1, 2), cfg.index(2, 1), cfg.index(2, 2)],
        ];
        let expected = Triangulation::new(cfg, expected).unwrap();
        assert_eq!(t, expected);
    }

    #[test]
    fn placing_counts() {
        for (m, n) in [(1usize, 2usize), (2, 2), (3, 2), (1, 3), (3, 3)] {
            let t = placing_triangulation(GridConfig::new(m, n)).unwrap();
            assert_eq!(t.triangles.len(), 2 * m * n);
            assert_eq!(t.edges().len(), (3 * n + 1) * m + n);
            assert_eq!(t.used_vertices().len(), (m + 1) * (n + 1));
            assert!(t.is_unimodular());
        }
    }

    #[test]
    fn doubling_heights_induce_placing_for_n2() {
        for m in 1..=3 {
            let cfg = GridConfig::new(m, 2);
            let t = regular_from_heights(cfg, &doubling_heights(cfg), Hull::Lower).unwrap();
            assert_eq!(t, placing_triangulation(cfg).unwrap());
        }
    }

    #[test]
    fn unit_square_heights() {
        let cfg = GridConfig::new(1, 1);
        let t = regular_from_heights(cfg, &[0, 0, 0, 1], Hull::Lower).unwrap();
        assert_eq!(t.triangles.len(), 2);
        // the lifted corner is cut off: diagonal between the two mixed corners
        assert!(t.triangles.contains(&[0, 1, 2]));
        assert!(constant_heights_rejected());
    }

    fn constant_heights_rejected() -> bool {
        let cfg = GridConfig::new(1, 1);
        matches!(
            regular_from_heights(cfg, &[5, 5, 5, 5], Hull::Lower),
            Err(Error::NonGenericHeights(_))
        )
    }

    #[test]
    fn upper_hull_is_lower_of_negated() {
        let cfg = GridConfig::new(2, 2);
        let h = doubling_heights(cfg);
        let t_lower = regular_from_heights(cfg, &h, Hull::Lower).unwrap();
        let neg: Vec<i64> = h.iter().map(|&x| -x).collect();
        let t_upper = regular_from_heights(cfg, &neg, Hull::Upper).unwrap();
        assert_eq!(t_lower, t_upper);
        // the offset form W - h induces the same triangulation upper-hull
        let w: Vec<i64> = h.iter().map(|&x| (1 << 8) + 1 - x).collect();
        assert_eq!(regular_from_heights(cfg, &w, Hull::Upper).unwrap(), t_lower);
    }

    #[test]
    fn unimodularity_detects_area() {
        let cfg = GridConfig::new(2, 2);
        // triangle (0,0),(1,2),(2,1) has doubled area 3
        let t = Triangulation::new_partial(
            cfg,
            vec![[cfg.index(0, 0), cfg.index(1, 2), cfg.index(2, 1)]],
        )
        .unwrap();
        assert!(!t.is_unimodular());
        assert!(placing_triangulation(cfg).unwrap().is_unimodular());
    }

    #[test]
    fn flip_on_unit_square_is_involution() {
        let cfg = GridConfig::new(1, 1);
        let t = regular_from_heights(cfg, &[0, 0, 0, 1], Hull::Lower).unwrap();
        let f = flips(&t);
        assert_eq!(f.len(), 1);
        let back = flips(&f[0]);
        assert_eq!(back.len(), 1);
        assert_eq!(back[0], t);
    }

    #[test]
    fn flips_are_symmetric_from_placing() {
        let t = placing_triangulation(GridConfig::new(2, 2)).unwrap();
        for f in flips(&t) {
            assert!(f.is_unimodular());
            assert!(flips(&f).contains(&t));
        }
    }

    #[test]
    fn regularity_of_placing() {
        for (m, n) in [(2usize, 2usize), (1, 3)] {
            let t = placing_triangulation(GridConfig::new(m, n)).unwrap();
            let w = is_regular(&t).expect("placing triangulations are regular");
            assert_eq!(regular_from_heights(t.config, &w, Hull::Lower).unwrap(), t);
        }
    }

    #[test]
    fn enumeration_2x2_yields_64() {
        let e = enumerate_regular_unimodular(GridConfig::new(2, 2), 25).unwrap();
        assert_eq!(e.regular.len(), 64);
        assert_eq!(e.total_unimodular, 64);
    }

    #[test]
    fn text_roundtrip() {
        let cfg = GridConfig::new(2, 2);
        let t = placing_triangulation(cfg).unwrap();
        let text = t.to_text();
        assert!(text.lines().count() == 8);
        let back = Triangulation::from_text(cfg, &text).unwrap();
        assert_eq!(back, t);
        assert!(Triangulation::from_text(cfg, "(0,0) (0,1)\n").is_err());
    }

    #[test]
    fn validation_rejects_bad_inputs() {
        let cfg = GridConfig::new(1, 1);
        // overlap: both diagonals at once
        let bad = Triangulation::new(
            cfg,
            vec![
                [cfg.index(0, 0), cfg.index(0, 1), cfg.index(1, 0)],
                [cfg.index(0, 1), cfg.index(1, 0), cfg.index(1, 1)],
                [cfg.index(0, 0), cfg.index(0, 1), cfg.index(1, 1)],
                [cfg.index(0, 0), cfg.index(1, 0), cfg.index(1, 1)],
            ],
        );
        assert!(bad.is_err());
        // missing area
        let half = Triangulation::new(cfg, vec![[cfg.index(0, 0), cfg.index(0, 1), cfg.index(1, 0)]]);
        assert!(half.is_err());
        // T-vertex: long edge across the middle of a 2x1 strip
        let cfg2 = GridConfig::new(2, 1);
        let tv = Triangulation::new(
            cfg2,
            vec![
                [cfg2.index(0, 0), cfg2.index(2, 0), cfg2.index(0, 1)],
                [cfg2.index(2, 0), cfg2.index(2, 1), cfg2.index(1, 1)],
                [cfg2.index(0, 1), cfg2.index(1, 1), cfg2.index(1, 0)],
                [cfg2.index(1, 1), cfg2.index(2, 0), cfg2.index(1, 0)],
            ],
        );
        assert!(tv.is_err());
    }
}
