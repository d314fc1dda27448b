//! The graphs `H(n,k)`: vertices are the subsets of `[n]`, and two subsets are
//! adjacent when their symmetric difference has exactly `k` elements.
//!
//! For even `k` the graph splits into the odd-size and even-size subsets;
//! [`Component`] selects one of them.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{usage, HnkError, Result};
use crate::subsets::{check_n, full_mask, masks_of_weight, SubsetId};

/// Adjacency lists are materialized up to this ground-set size.
pub const LIST_CAP_N: usize = 12;

const ABSENT: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Component {
    Whole,
    Odd,
    Even,
}

impl Component {
    pub fn admits(self, bits: u32) -> bool {
        match self {
            Component::Whole => true,
            Component::Odd => bits.count_ones() % 2 == 1,
            Component::Even => bits.count_ones() % 2 == 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Component::Whole => "whole",
            Component::Odd => "odd",
            Component::Even => "even",
        }
    }
}

impl std::str::FromStr for Component {
    type Err = HnkError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "whole" => Ok(Component::Whole),
            "odd" => Ok(Component::Odd),
            "even" => Ok(Component::Even),
            other => usage(format!("unknown component {other:?} (expected whole, odd or even)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphParams {
    pub n: usize,
    pub k: usize,
    pub component: Component,
}

impl GraphParams {
    pub fn new(n: usize, k: usize, component: Component) -> Result<Self> {
        check_n(n)?;
        if k > n {
            return usage(format!("edge weight k = {k} exceeds n = {n}"));
        }
        if component != Component::Whole && k % 2 == 1 {
            return usage(format!(
                "k = {k} is odd: H({n},{k}) is connected and each parity class is edgeless"
            ));
        }
        Ok(Self { n, k, component })
    }

    pub fn whole(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, Component::Whole)
    }

    pub fn label(&self) -> String {
        match self.component {
            Component::Whole => format!("H({},{})", self.n, self.k),
            Component::Odd => format!("H'({},{})", self.n, self.k),
            Component::Even => format!("H''({},{})", self.n, self.k),
        }
    }
}

/// `H(n,k)` or one of its parity components.
#[derive(Clone, Debug)]
pub struct HGraph {
    params: GraphParams,
    vertices: Vec<u32>,
    index: Vec<u32>,
    connection: Vec<u32>,
    lists: Option<Vec<Vec<u32>>>,
}

pub fn build_graph(params: GraphParams) -> Result<HGraph> {
    let GraphParams { n, k, component } = GraphParams::new(params.n, params.k, params.component)?;
    let vertices: Vec<u32> = (0..=full_mask(n)).filter(|&b| component.admits(b)).collect();
    let mut index = vec![ABSENT; 1 << n];
    for (i, &b) in vertices.iter().enumerate() {
        index[b as usize] = i as u32;
    }
    let connection = if k == 0 { Vec::new() } else { masks_of_weight(n, k) };
    let mut g = HGraph { params, vertices, index, connection, lists: None };
    if n <= LIST_CAP_N {
        let lists: Vec<Vec<u32>> = (0..g.vertices.len()).map(|i| g.scan_neighbors(i)).collect();
        // Cross-check the stored lists against the popcount definition.
        for (i, list) in lists.iter().enumerate() {
            let x = g.vertices[i];
            if list.iter().any(|&j| (x ^ g.vertices[j as usize]).count_ones() as usize != k) {
                return Err(HnkError::Internal(format!("adjacency list of {x:#b} disagrees with popcount")));
            }
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(HnkError::Internal("adjacency list not strictly ascending".into()));
            }
        }
        g.lists = Some(lists);
    }
    Ok(g)
}

impl HGraph {
    pub fn params(&self) -> GraphParams {
        self.params
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn k(&self) -> usize {
        self.params.k
    }

    pub fn component(&self) -> Component {
        self.params.component
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Vertex encodings in ascending order; position is the local index.
    pub fn vertex_bits(&self) -> &[u32] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> SubsetId {
        SubsetId::from_raw(self.n(), self.vertices[i])
    }

    pub fn vertices(&self) -> impl Iterator<Item = SubsetId> + '_ {
        self.vertices.iter().map(|&b| SubsetId::from_raw(self.n(), b))
    }

    pub fn index_of_bits(&self, bits: u32) -> Option<usize> {
        match self.index.get(bits as usize) {
            Some(&i) if i != ABSENT => Some(i as usize),
            _ => None,
        }
    }

    pub fn index_of(&self, x: SubsetId) -> Result<usize> {
        if x.n() != self.n() {
            return usage(format!("{x} is a subset of [{}], graph lives on [{}]", x.n(), self.n()));
        }
        self.index_of_bits(x.bits())
            .ok_or_else(|| HnkError::Usage(format!("{x} is not a vertex of {}", self.params.label())))
    }

    /// The smallest vertex: `∅` for the whole graph and the even component, `{1}` for the odd one.
    pub fn base_vertex(&self) -> SubsetId {
        self.vertex(0)
    }

    /// Weight-`k` masks; `x` and `x ^ m` are adjacent for every mask `m`.
    pub fn connection_set(&self) -> &[u32] {
        &self.connection
    }

    #[inline]
    pub fn adjacent_bits(&self, a: u32, b: u32) -> bool {
        a != b && (a ^ b).count_ones() as usize == self.k()
    }

    pub fn is_adjacent(&self, a: SubsetId, b: SubsetId) -> bool {
        a.n() == b.n() && self.adjacent_bits(a.bits(), b.bits())
    }

    pub fn has_adjacency_lists(&self) -> bool {
        self.lists.is_some()
    }

    fn scan_neighbors(&self, i: usize) -> Vec<u32> {
        let x = self.vertices[i];
        let mut out: Vec<u32> = self
            .connection
            .iter()
            .filter_map(|&m| self.index_of_bits(x ^ m).map(|j| j as u32))
            .collect();
        out.sort_unstable();
        out
    }

    /// Local indices of the neighbours of vertex `i`, ascending.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        match &self.lists {
            Some(lists) => lists[i].iter().map(|&j| j as usize).collect(),
            None => self.scan_neighbors(i).into_iter().map(|j| j as usize).collect(),
        }
    }

    pub fn degree(&self, i: usize) -> usize {
        match &self.lists {
            Some(lists) => lists[i].len(),
            None => self
                .connection
                .iter()
                .filter(|&&m| self.index_of_bits(self.vertices[i] ^ m).is_some())
                .count(),
        }
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vertex_count()).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    /// Edges as pairs of encodings `(a, b)` with `a < b`, lexicographic.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.vertex_count() {
            let a = self.vertices[i];
            for j in self.neighbors(i) {
                let b = self.vertices[j];
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Breadth-first distances from local index `source`; `None` when unreachable.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for u in self.neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn connected_components(&self) -> Vec<Vec<SubsetId>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for start in 0..self.vertex_count() {
            if seen[start] {
                continue;
            }
            let mut members = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                members.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members.into_iter().map(|i| self.vertex(i)).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn distance_classes(&self, source: SubsetId) -> Result<DistanceClasses> {
        let s = self.index_of(source)?;
        let dist = self.bfs_distances(s);
        let depth = dist.iter().flatten().copied().max().unwrap_or(0);
        let mut classes = vec![Vec::new(); depth + 1];
        for (i, d) in dist.iter().enumerate() {
            if let Some(d) = d {
                classes[*d].push(self.vertex(i));
            }
        }
        Ok(DistanceClasses { source, classes })
    }

    /// BFS diameter. Fails on a disconnected graph.
    pub fn diameter(&self) -> Result<usize> {
        let dist0 = self.bfs_distances(0);
        if dist0.iter().any(Option::is_none) {
            return Err(HnkError::Disconnected { n: self.n(), k: self.k() });
        }
        // The translations by even sets act transitively on every graph built
        // here, so one eccentricity is the diameter. The all-sources sweep is
        // kept for small graphs as a cross-check.
        let ecc0 = dist0.iter().flatten().copied().max().unwrap_or(0);
        if self.vertex_count() <= 256 {
            for s in 1..self.vertex_count() {
                let e = self.bfs_distances(s).into_iter().flatten().max().unwrap_or(0);
                if e != ecc0 {
                    return Err(HnkError::Internal(format!(
                        "{} is not distance-uniform: eccentricities {ecc0} and {e}",
                        self.params.label()
                    )));
                }
            }
        }
        Ok(ecc0)
    }

    /// True when every edge joins an odd-size subset to an even-size one.
    pub fn is_bipartite_by_parity(&self) -> bool {
        self.edges().iter().all(|&(a, b)| (a.count_ones() + b.count_ones()) % 2 == 1)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let name = format!(
            "H_{}_{}{}",
            self.n(),
            self.k(),
            match self.component() {
                Component::Whole => "",
                Component::Odd => "_odd",
                Component::Even => "_even",
            }
        );
        writeln!(out, "graph {name} {{").unwrap();
        for &b in &self.vertices {
            writeln!(out, "  {b} [label=\"{}\"];", crate::subsets::format_bits(b)).unwrap();
        }
        for (a, b) in self.edges() {
            writeln!(out, "  {a} -- {b};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_export(&self) -> GraphExport {
        GraphExport {
            n: self.n(),
            k: self.k(),
            component: self.component(),
            vertices: self.vertices.clone(),
            edges: self.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

/// JSON shape of an exported graph. Edge endpoints are vertex encodings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphExport {
    pub n: usize,
    pub k: usize,
    pub component: Component,
    pub vertices: Vec<u32>,
    pub edges: Vec<[u32; 2]>,
}

/// Breadth-first layers `A_0, A_1, ...` around a source vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceClasses {
    pub source: SubsetId,
    pub classes: Vec<Vec<SubsetId>>,
}

impl DistanceClasses {
    pub fn eccentricity(&self) -> usize {
        self.classes.len() - 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiameterCase {
    /// Odd `k`, `n >= 2k-1`: `ceil((n-1)/k) + 1`.
    OddKWide,
    /// Odd `k`, `n <= 2k-2`: `ceil((n-1)/(n-k)) + 1`.
    OddKNarrow,
    /// `k = 2`, per component: `floor(n/2)`.
    EvenK2Component,
    /// `k = n-1` even, per component: `(n-1)/2`.
    EvenKnMinus1Component,
    NotCovered,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterPrediction {
    pub value: Option<usize>,
    pub case: DiameterCase,
}

/// Closed-form diameter. Odd-`k` predictions refer to the whole graph,
/// even-`k` ones to each parity component.
pub fn predicted_diameter(n: usize, k: usize) -> DiameterPrediction {
    let none = DiameterPrediction { value: None, case: DiameterCase::NotCovered };
    if k == 0 || k >= n {
        return none;
    }
    if k % 2 == 1 {
        if n + 1 >= 2 * k {
            DiameterPrediction { value: Some((n - 1).div_ceil(k) + 1), case: DiameterCase::OddKWide }
        } else {
            DiameterPrediction { value: Some((n - 1).div_ceil(n - k) + 1), case: DiameterCase::OddKNarrow }
        }
    } else if k == 2 {
        DiameterPrediction { value: Some(n / 2), case: DiameterCase::EvenK2Component }
    } else if k == n - 1 {
        DiameterPrediction { value: Some((n - 1) / 2), case: DiameterCase::EvenKnMinus1Component }
    } else {
        none
    }
}

/// Result of an exhaustive isomorphism check between two members of the family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsomorphismWitness {
    pub source: GraphParams,
    pub target: GraphParams,
    /// Vertex map as `(source encoding, target encoding)` pairs, ascending by source.
    pub map: Vec<(u32, u32)>,
    pub edges_checked: usize,
}

/// Exhaustively checks that `phi` is an isomorphism `from -> to`.
fn check_isomorphism(from: &HGraph, to: &HGraph, phi: impl Fn(u32) -> u32) -> Result<IsomorphismWitness> {
    if from.vertex_count() != to.vertex_count() {
        return Err(HnkError::Internal("vertex counts differ".into()));
    }
    let map: Vec<(u32, u32)> = from.vertex_bits().iter().map(|&x| (x, phi(x))).collect();
    let mut hit = vec![false; to.vertex_count()];
    for &(x, y) in &map {
        let j = to
            .index_of_bits(y)
            .ok_or_else(|| HnkError::Internal(format!("{x:#b} maps outside the target vertex set")))?;
        if std::mem::replace(&mut hit[j], true) {
            return Err(HnkError::Internal(format!("map is not injective at {y:#b}")));
        }
    }
    for (i, &(x, fx)) in map.iter().enumerate() {
        for &(y, fy) in &map[i + 1..] {
            if from.adjacent_bits(x, y) != to.adjacent_bits(fx, fy) {
                return Err(HnkError::Internal(format!(
                    "adjacency of ({x:#b}, {y:#b}) not preserved by the witness map"
                )));
            }
        }
    }
    Ok(IsomorphismWitness { source: from.params(), target: to.params(), map, edges_checked: from.edge_count() })
}

/// For even `k`, translation by `{1}` maps the odd component onto the even one.
pub fn parity_isomorphism_check(n: usize, k: usize) -> Result<IsomorphismWitness> {
    if k % 2 == 1 {
        return usage(format!("k = {k} is odd; the parity classes are not components"));
    }
    let odd = build_graph(GraphParams::new(n, k, Component::Odd)?)?;
    let even = build_graph(GraphParams::new(n, k, Component::Even)?)?;
    check_isomorphism(&odd, &even, |x| x ^ 1)
}

/// For even `n` and odd `k`, complementing the odd-size subsets maps
/// `H(n,k)` onto `H(n,n-k)`.
pub fn complement_isomorphism_check(n: usize, k: usize) -> Result<IsomorphismWitness> {
    if n % 2 == 1 || k % 2 == 0 {
        return usage(format!("need n even and k odd, got n = {n}, k = {k}"));
    }
    if k > n {
        return usage(format!("k = {k} exceeds n = {n}"));
    }
    let from = build_graph(GraphParams::whole(n, k)?)?;
    let to = build_graph(GraphParams::whole(n, n - k)?)?;
    let all = full_mask(n);
    check_isomorphism(&from, &to, |x| if x.count_ones() % 2 == 1 { x ^ all } else { x })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn whole(n: usize, k: usize) -> HGraph {
        build_graph(GraphParams::whole(n, k).unwrap()).unwrap()
    }

    fn even(n: usize, k: usize) -> HGraph {
        build_graph(GraphParams::new(n, k, Component::Even).unwrap()).unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn degenerate_weights() {
        let g = whole(3, 0);
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 0));
        let g = whole(3, 3);
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 4));
        assert!((0..8).all(|i| g.degree(i) == 1));
        assert_eq!(g.connected_components().len(), 4);
    }

    #[test]
    fn three_cube() {
        let g = whole(3, 1);
        // Oracle: all 28 unordered pairs, adjacency by popcount of XOR.
        let mut edges = 0;
        for a in 0u32..8 {
            for b in a + 1..8 {
                if (a ^ b).count_ones() == 1 {
                    edges += 1;
                }
            }
        }
        assert_eq!(edges, 12);
        assert_eq!(g.edge_count(), edges);
        assert!((0..8).all(|i| g.degree(i) == 3));
    }

    #[test]
    fn components_follow_parity_of_k() {
        let c = whole(5, 3).connected_components();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].len(), 32);
        for (n, k) in [(5, 2), (6, 2)] {
            let c = whole(n, k).connected_components();
            assert_eq!(c.len(), 2);
            assert!(c.iter().all(|part| part.len() == 1 << (n - 1)));
            assert!(c[0].iter().all(|x| !x.is_odd()));
            assert!(c[1].iter().all(|x| x.is_odd()));
        }
    }

    #[test]
    fn distance_classes_examples() {
        let n = 5;
        let e = SubsetId::empty(n).unwrap();
        let dc = whole(5, 3).distance_classes(e).unwrap();
        assert_eq!(dc.classes[0], vec![e]);
        assert_eq!(dc.classes[1], crate::subsets::subsets_of_size(5, 3).unwrap());

        let dc = whole(4, 1).distance_classes(SubsetId::empty(4).unwrap()).unwrap();
        assert_eq!(dc.eccentricity(), 4);
        for (i, class) in dc.classes.iter().enumerate() {
            assert_eq!(*class, crate::subsets::subsets_of_size(4, i).unwrap());
        }

        let dc = even(6, 2).distance_classes(SubsetId::empty(6).unwrap()).unwrap();
        assert_eq!(dc.eccentricity(), 3);
        for (i, class) in dc.classes.iter().enumerate() {
            assert_eq!(*class, crate::subsets::subsets_of_size(6, 2 * i).unwrap());
        }
    }

    #[test]
    fn distance_classes_reject_foreign_source() {
        let g = even(6, 2);
        assert!(matches!(
            g.distance_classes(SubsetId::from_elements(6, &[1]).unwrap()),
            Err(HnkError::Usage(_))
        ));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(whole(5, 3).diameter().unwrap(), 3);
        assert_eq!(predicted_diameter(5, 3).value, Some(3));
        assert_eq!(whole(7, 1).diameter().unwrap(), 7);
        assert_eq!(predicted_diameter(7, 1).value, Some(7));
        assert_eq!(even(6, 2).diameter().unwrap(), 3);
        assert_eq!(predicted_diameter(6, 2).value, Some(3));
        assert!(matches!(whole(6, 2).diameter(), Err(HnkError::Disconnected { .. })));
    }

    #[test]
    fn diameter_formula_for_odd_k() {
        for n in 2..=12 {
            for k in (1..n).step_by(2) {
                let p = predicted_diameter(n, k);
                assert_eq!(whole(n, k).diameter().unwrap(), p.value.unwrap(), "H({n},{k}) {:?}", p.case);
            }
        }
    }

    #[test]
    fn component_diameters_for_even_k() {
        for n in 3..=10 {
            assert_eq!(even(n, 2).diameter().unwrap(), n / 2);
        }
        for n in (3..=11).step_by(2) {
            assert_eq!(even(n, n - 1).diameter().unwrap(), (n - 1) / 2, "H''({n},{})", n - 1);
        }
    }

    #[test]
    fn regular_of_binomial_degree() {
        for n in 1..=10 {
            for k in 1..=n {
                let g = whole(n, k);
                assert!((0..g.vertex_count()).all(|i| g.degree(i) == binom(n, k)), "H({n},{k})");
            }
        }
    }

    #[test]
    fn odd_k_is_connected_and_bipartite() {
        for n in 2..=10 {
            for k in (1..n).step_by(2) {
                let g = whole(n, k);
                assert!(g.is_connected());
                assert!(g.is_bipartite_by_parity());
            }
        }
    }

    #[test]
    fn on_demand_adjacency_matches_lists() {
        let g = whole(10, 4);
        assert!(g.has_adjacency_lists());
        for i in (0..g.vertex_count()).step_by(37) {
            assert_eq!(g.neighbors(i), g.scan_neighbors(i).into_iter().map(|j| j as usize).collect::<Vec<_>>());
        }
        let big = whole(13, 3);
        assert!(!big.has_adjacency_lists());
        assert_eq!(big.degree(5), binom(13, 3));
        assert!(big.neighbors(0).iter().all(|&j| big.vertex(j).weight() == 3));
    }

    #[test]
    fn adjacency_invariant_under_translations() {
        let g = whole(6, 3);
        for x in 0u32..64 {
            for a in 0u32..64 {
                for b in 0u32..64 {
                    assert_eq!(g.adjacent_bits(a, b), g.adjacent_bits(a ^ x, b ^ x));
                    assert_eq!(g.adjacent_bits(a, b), g.adjacent_bits(b, a));
                }
            }
        }
    }

    #[test]
    fn parity_isomorphism_examples() {
        let w = parity_isomorphism_check(4, 2).unwrap();
        assert_eq!(w.edges_checked, 24);
        parity_isomorphism_check(5, 2).unwrap();
        parity_isomorphism_check(5, 4).unwrap();
        assert!(matches!(parity_isomorphism_check(5, 3), Err(HnkError::Usage(_))));
    }

    #[test]
    fn complement_isomorphism_examples() {
        let w = complement_isomorphism_check(4, 1).unwrap();
        assert_eq!(w.edges_checked, 32);
        complement_isomorphism_check(6, 3).unwrap();
        complement_isomorphism_check(4, 3).unwrap();
        assert!(complement_isomorphism_check(5, 3).is_err());
        assert!(complement_isomorphism_check(4, 2).is_err());
    }

    #[test]
    fn parameter_validation() {
        assert!(GraphParams::whole(0, 0).is_err());
        assert!(GraphParams::whole(17, 1).is_err());
        assert!(GraphParams::whole(4, 5).is_err());
        assert!(GraphParams::new(5, 3, Component::Odd).is_err());
        assert!(GraphParams::new(5, 2, Component::Odd).is_ok());
    }

    #[test]
    fn exports() {
        let g = whole(3, 1);
        let ex = g.to_export();
        assert_eq!(ex.vertices, (0..8).collect::<Vec<_>>());
        assert_eq!(ex.edges.len(), 12);
        assert!(ex.edges.iter().all(|e| e[0] < e[1]));
        assert!(ex.edges.windows(2).all(|w| w[0] < w[1]));
        let dot = g.to_dot();
        assert!(dot.starts_with("graph H_3_1 {"));
        assert!(dot.contains("  7 [label=\"{1,2,3}\"];"));
        assert!(dot.contains("  0 -- 1;"));
        assert_eq!(dot.matches(" -- ").count(), 12);
    }
}
