//! Arc- and geodesic-transitivity, decided with the brute-force stabilizer.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::autsearch::{stabilizer_chain, verify_translation_orbit, VertexMap};
use crate::error::{usage, HnkError, Result};
use crate::hgraph::{build_graph, Component, GraphParams, HGraph};
use crate::subsets::SubsetId;

pub const PATH_CAP: usize = 10_000_000;

/// A shortest path, listed from its source.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GeodesicPath {
    pub vertices: Vec<SubsetId>,
}

impl GeodesicPath {
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for GeodesicPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ~ ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeodesicEnumeration {
    pub paths: Vec<GeodesicPath>,
    pub note: Option<String>,
}

fn distances_from(g: &HGraph, source: usize) -> Vec<u32> {
    g.bfs_distances(source).into_iter().map(|d| d.map_or(u32::MAX, |d| d as u32)).collect()
}

/// All geodesics of length `s` from `source`, as local indices, in
/// lexicographic order.
fn geodesics_local(g: &HGraph, dist: &[u32], source: usize, s: usize) -> Result<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    let mut path = vec![source as u32];
    let neighbors: Vec<Vec<usize>> = (0..g.vertex_count()).map(|i| g.neighbors(i)).collect();
    fn walk(
        neighbors: &[Vec<usize>],
        dist: &[u32],
        path: &mut Vec<u32>,
        s: usize,
        out: &mut Vec<Vec<u32>>,
    ) -> Result<()> {
        let depth = path.len() - 1;
        if depth == s {
            if out.len() >= PATH_CAP {
                return Err(HnkError::PathCap { length: s, cap: PATH_CAP });
            }
            out.push(path.clone());
            return Ok(());
        }
        let last = *path.last().unwrap() as usize;
        for &u in &neighbors[last] {
            if dist[u] == depth as u32 + 1 {
                path.push(u as u32);
                walk(neighbors, dist, path, s, out)?;
                path.pop();
            }
        }
        Ok(())
    }
    walk(&neighbors, dist, &mut path, s, &mut out)?;
    Ok(out)
}

fn to_path(g: &HGraph, local: &[u32]) -> GeodesicPath {
    GeodesicPath { vertices: local.iter().map(|&i| g.vertex(i as usize)).collect() }
}

/// Every geodesic of length exactly `s` starting at `source`.
pub fn enumerate_geodesics(g: &HGraph, source: SubsetId, s: usize) -> Result<GeodesicEnumeration> {
    let src = g.index_of(source)?;
    let dist = distances_from(g, src);
    let ecc = dist.iter().filter(|&&d| d != u32::MAX).max().copied().unwrap_or(0) as usize;
    if s > ecc {
        return Ok(GeodesicEnumeration {
            paths: Vec::new(),
            note: Some(format!("length {s} exceeds the eccentricity {ecc} of {source}")),
        });
    }
    let paths = geodesics_local(g, &dist, src, s)?.iter().map(|p| to_path(g, p)).collect();
    Ok(GeodesicEnumeration { paths, note: None })
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n as u32).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] as usize != x {
            let up = self.0[self.0[x] as usize];
            self.0[x] = up;
            x = up as usize;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.0[hi] = lo as u32;
        }
    }
}

/// Orbits of `generators` on the geodesics of length `s` from the root.
/// Returns one representative per orbit, the lexicographically least.
fn geodesic_orbits(g: &HGraph, dist: &[u32], generators: &[VertexMap], s: usize) -> Result<Vec<Vec<u32>>> {
    let paths = geodesics_local(g, dist, 0, s)?;
    let index: HashMap<&[u32], usize> = paths.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut uf = UnionFind::new(paths.len());
    let mut image = Vec::with_capacity(s + 1);
    for (i, p) in paths.iter().enumerate() {
        for gen in generators {
            image.clear();
            image.extend(p.iter().map(|&v| gen.image(v as usize) as u32));
            let Some(&j) = index.get(image.as_slice()) else {
                return Err(HnkError::Internal("stabilizer element does not preserve geodesics".into()));
            };
            uf.union(i, j);
        }
    }
    // Unions keep the smaller index as root, so roots are orbit minima.
    Ok((0..paths.len()).filter(|&i| uf.find(i) == i).map(|i| paths[i].clone()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SGeodesicCheck {
    pub s: usize,
    pub holds: bool,
    /// Orbit counts for lengths `1, 2, ...` up to `s` or the first failure.
    pub orbit_counts: Vec<usize>,
    pub failing_length: Option<usize>,
    /// One geodesic per orbit at the failing length.
    pub representatives: Vec<GeodesicPath>,
}

struct Context {
    dist: Vec<u32>,
    eccentricity: usize,
    generators: Vec<VertexMap>,
}

fn context(g: &HGraph) -> Result<Context> {
    verify_translation_orbit(g)?;
    let stab = stabilizer_chain(g)?;
    let dist = distances_from(g, 0);
    let eccentricity = dist.iter().filter(|&&d| d != u32::MAX).max().copied().unwrap_or(0) as usize;
    Ok(Context { dist, eccentricity, generators: stab.generators })
}

fn check_up_to(g: &HGraph, ctx: &Context, s: usize) -> Result<SGeodesicCheck> {
    let mut orbit_counts = Vec::new();
    for i in 1..=s {
        let reps = geodesic_orbits(g, &ctx.dist, &ctx.generators, i)?;
        orbit_counts.push(reps.len());
        if reps.len() > 1 {
            return Ok(SGeodesicCheck {
                s,
                holds: false,
                orbit_counts,
                failing_length: Some(i),
                representatives: reps.iter().map(|p| to_path(g, p)).collect(),
            });
        }
    }
    Ok(SGeodesicCheck { s, holds: true, orbit_counts, failing_length: None, representatives: Vec::new() })
}

/// True iff for every `i <= s` the stabilizer of the base vertex has one
/// orbit on the `i`-geodesics from it. Vertex-transitivity is re-verified.
pub fn is_s_geodesic_transitive(g: &HGraph, s: usize) -> Result<SGeodesicCheck> {
    let ctx = context(g)?;
    if s == 0 || s > ctx.eccentricity {
        return usage(format!("s must lie in 1..={}, got {s}", ctx.eccentricity));
    }
    check_up_to(g, &ctx, s)
}

pub fn is_arc_transitive(g: &HGraph) -> Result<bool> {
    let ctx = context(g)?;
    if ctx.eccentricity == 0 {
        return Ok(true);
    }
    Ok(check_up_to(g, &ctx, 1)?.holds)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitivityVerdict {
    pub graph: String,
    pub diameter: usize,
    pub arc_transitive: bool,
    pub s_geodesic_transitive: BTreeMap<usize, bool>,
    pub geodesic_transitive: bool,
    pub s_max_transitive: usize,
    pub orbit_counts: Vec<usize>,
    pub representatives: Vec<GeodesicPath>,
}

/// Full verdict, checked to the eccentricity of the base vertex (the
/// diameter of its component).
pub fn transitivity_verdict(g: &HGraph) -> Result<TransitivityVerdict> {
    let ctx = context(g)?;
    let diameter = ctx.eccentricity;
    let check = check_up_to(g, &ctx, diameter)?;
    let s_max = check.failing_length.map_or(diameter, |f| f - 1);
    Ok(TransitivityVerdict {
        graph: g.params().label(),
        diameter,
        arc_transitive: s_max >= 1 || diameter == 0,
        s_geodesic_transitive: (1..=diameter).map(|s| (s, s <= s_max)).collect(),
        geodesic_transitive: s_max == diameter,
        s_max_transitive: s_max,
        orbit_counts: check.orbit_counts,
        representatives: check.representatives,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GeodesicClass {
    #[serde(rename = "geodesic-transitive")]
    GeodesicTransitive,
    #[serde(rename = "not-2-geodesic-transitive")]
    Not2GeodesicTransitive,
    #[serde(rename = "unclassified")]
    Unclassified,
}

impl GeodesicClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GeodesicClass::GeodesicTransitive => "geodesic-transitive",
            GeodesicClass::Not2GeodesicTransitive => "not-2-geodesic-transitive",
            GeodesicClass::Unclassified => "unclassified",
        }
    }
}

/// Known classification of `H(n,k)` for `1 <= k <= n-1`.
pub fn classify_geodesic_transitivity(n: usize, k: usize) -> Result<GeodesicClass> {
    if k == 0 || k >= n {
        return usage(format!("classification needs 1 <= k <= n-1, got n={n}, k={k}"));
    }
    Ok(if k <= 2 || k + 1 == n {
        GeodesicClass::GeodesicTransitive
    } else if matches!((n, k), (5, 3) | (6, 4) | (7, 4)) {
        GeodesicClass::GeodesicTransitive
    } else if n != k + 1 {
        GeodesicClass::Not2GeodesicTransitive
    } else {
        GeodesicClass::Unclassified
    })
}

/// The graph the classification is checked on: the even component for even
/// `k`, the whole graph otherwise.
pub fn classification_graph(n: usize, k: usize) -> Result<HGraph> {
    let component = if k % 2 == 0 { Component::Even } else { Component::Whole };
    build_graph(GraphParams::new(n, k, component)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationCheck {
    pub n: usize,
    pub k: usize,
    pub s_max_transitive: usize,
    pub classification: GeodesicClass,
    pub agrees_with_claim: Option<bool>,
}

pub fn check_classification(n: usize, k: usize) -> Result<(ClassificationCheck, TransitivityVerdict)> {
    let classification = classify_geodesic_transitivity(n, k)?;
    let verdict = transitivity_verdict(&classification_graph(n, k)?)?;
    let agrees_with_claim = match classification {
        GeodesicClass::GeodesicTransitive => Some(verdict.geodesic_transitive),
        GeodesicClass::Not2GeodesicTransitive => Some(verdict.s_max_transitive < 2),
        GeodesicClass::Unclassified => None,
    };
    let check = ClassificationCheck { n, k, s_max_transitive: verdict.s_max_transitive, classification, agrees_with_claim };
    Ok((check, verdict))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainFacts {
    pub n: usize,
    pub paths_checked: usize,
    pub violations: Vec<GeodesicPath>,
}

/// In the even component of `H(n,n-1)`, `n` odd, every geodesic of length
/// `(n-1)/2` from `∅` reads `A_1 ~ B_1 ~ A_2 ~ B_2 ~ ...` with
/// `|A_i| = 2(i-1)`, `|B_i| = n-1-2(i-1)`, the `A_i` increasing, the `B_i`
/// decreasing, `|A_i ∩ B_{i-1}| = 1` and `A_i ∩ B_i = ∅`.
pub fn check_nested_chain_facts(n: usize) -> Result<ChainFacts> {
    if n < 3 || n % 2 == 0 {
        return usage(format!("chain facts need odd n >= 3, got {n}"));
    }
    let g = build_graph(GraphParams::new(n, n - 1, Component::Even)?)?;
    let paths = enumerate_geodesics(&g, g.base_vertex(), (n - 1) / 2)?.paths;
    let violations = paths.iter().filter(|p| !chain_shape_holds(n, p)).cloned().collect();
    Ok(ChainFacts { n, paths_checked: paths.len(), violations })
}

fn chain_shape_holds(n: usize, path: &GeodesicPath) -> bool {
    let a: Vec<u32> = path.vertices.iter().step_by(2).map(|v| v.bits()).collect();
    let b: Vec<u32> = path.vertices.iter().skip(1).step_by(2).map(|v| v.bits()).collect();
    let w = |x: u32| x.count_ones() as usize;
    a.iter().enumerate().all(|(i, &x)| w(x) == 2 * i)
        && b.iter().enumerate().all(|(i, &x)| w(x) + 2 * i == n - 1)
        && a.windows(2).all(|p| p[0] & !p[1] == 0)
        && b.windows(2).all(|p| p[1] & !p[0] == 0)
        && (1..a.len()).all(|i| w(a[i] & b[i - 1]) == 1)
        && a.iter().zip(&b).all(|(&x, &y)| x & y == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn whole(n: usize, k: usize) -> HGraph {
        build_graph(GraphParams::whole(n, k).unwrap()).unwrap()
    }

    #[test]
    fn geodesic_counts_on_the_4_cube() {
        let g = whole(4, 1);
        let e = SubsetId::empty(4).unwrap();
        assert_eq!(enumerate_geodesics(&g, e, 1).unwrap().paths.len(), 4);
        assert_eq!(enumerate_geodesics(&g, e, 2).unwrap().paths.len(), 12);
        // Oracle: 4!/(4-s)! ordered choices of new elements.
        assert_eq!(enumerate_geodesics(&g, e, 4).unwrap().paths.len(), 24);
        let far = enumerate_geodesics(&g, e, 5).unwrap();
        assert!(far.paths.is_empty() && far.note.is_some());
    }

    #[test]
    fn geodesics_are_shortest_paths() {
        let g = whole(5, 3);
        let e = SubsetId::empty(5).unwrap();
        let dist = g.bfs_distances(0);
        for s in 1..=3 {
            let paths = enumerate_geodesics(&g, e, s).unwrap().paths;
            assert!(!paths.is_empty());
            assert!(paths.windows(2).all(|w| w[0] < w[1]));
            for p in &paths {
                for (i, v) in p.vertices.iter().enumerate() {
                    assert_eq!(dist[g.index_of(*v).unwrap()], Some(i));
                }
                assert!(p.vertices.windows(2).all(|w| g.is_adjacent(w[0], w[1])));
            }
        }
    }

    #[test]
    fn class_names_match_json() {
        for c in [GeodesicClass::GeodesicTransitive, GeodesicClass::Not2GeodesicTransitive, GeodesicClass::Unclassified] {
            assert_eq!(serde_json::to_value(c).unwrap(), c.as_str());
        }
    }

    #[test]
    fn classification_examples() {
        use GeodesicClass::*;
        assert_eq!(classify_geodesic_transitivity(7, 6).unwrap(), GeodesicTransitive);
        assert_eq!(classify_geodesic_transitivity(9, 4).unwrap(), Not2GeodesicTransitive);
        assert_eq!(classify_geodesic_transitivity(6, 4).unwrap(), GeodesicTransitive);
        assert_eq!(classify_geodesic_transitivity(6, 3).unwrap(), Not2GeodesicTransitive);
        assert!(classify_geodesic_transitivity(5, 0).is_err());
        assert!(classify_geodesic_transitivity(5, 5).is_err());
        // n = k+1 is always caught by the first rule.
        for n in 2..40 {
            for k in 1..n {
                assert_ne!(classify_geodesic_transitivity(n, k).unwrap(), Unclassified);
            }
        }
    }

    #[test]
    fn arc_transitivity_examples() {
        assert!(is_arc_transitive(&whole(5, 3)).unwrap());
        assert!(is_arc_transitive(&whole(4, 1)).unwrap());
        let g = build_graph(GraphParams::new(6, 2, Component::Even).unwrap()).unwrap();
        assert!(is_arc_transitive(&g).unwrap());
    }

    #[test]
    fn s_geodesic_examples() {
        assert!(is_s_geodesic_transitive(&whole(4, 1), 4).unwrap().holds);
        let c = is_s_geodesic_transitive(&whole(6, 3), 2).unwrap();
        assert!(!c.holds);
        assert_eq!(c.failing_length, Some(2));
        assert!(c.representatives.len() >= 2);
        assert!(is_s_geodesic_transitive(&whole(5, 3), 3).unwrap().holds);
        assert!(is_s_geodesic_transitive(&whole(4, 1), 5).is_err());
    }

    #[test]
    fn nested_chain_facts() {
        for n in [5, 7] {
            let f = check_nested_chain_facts(n).unwrap();
            assert!(f.paths_checked > 0);
            assert!(f.violations.is_empty(), "{:?}", f.violations.first());
        }
    }
}
