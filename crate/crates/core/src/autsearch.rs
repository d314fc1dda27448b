//! Brute-force automorphism search on small members of the family.
//!
//! Nothing here uses the explicit constructions from [`crate::symmetries`]:
//! the search sees only the adjacency relation. It works by individualizing
//! vertices and refining ordered partitions to equitable ones, run in
//! lockstep on a domain and a codomain copy. A leaf (discrete partition pair)
//! gives a candidate vertex map, which is then checked edge by edge.
//!
//! The stabilizer of the base vertex is computed as a chain of point
//! stabilizers. At every level each candidate image of the level's base point
//! is either reached from already-found elements or settled by its own
//! search, so the orbit lengths are exact and their product is the order.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{HnkError, Result};
use crate::hgraph::{Component, HGraph};
use crate::subsets::{format_bits, full_mask, SubsetId};
use crate::symmetries::{known_family, Family, Permutation, SymmetryElement};

/// No search is attempted above this many vertices.
pub const HARD_VERTEX_CAP: usize = 256;

/// Stabilizers up to this order are materialized element by element.
pub const MATERIALIZE_CAP: usize = 250_000;

/// The effective vertex cap. `HNK_SIZE_CAP` may lower it, never raise it.
pub fn size_cap() -> usize {
    std::env::var("HNK_SIZE_CAP")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(HARD_VERTEX_CAP, |v| v.min(HARD_VERTEX_CAP))
}

fn check_cap(g: &HGraph) -> Result<()> {
    let cap = size_cap();
    if g.vertex_count() > cap {
        return Err(HnkError::SizeCap { vertices: g.vertex_count(), cap });
    }
    Ok(())
}

/// A bijection on the vertices of one graph, as local indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexMap {
    images: Vec<u32>,
}

impl VertexMap {
    pub fn new(images: Vec<u32>) -> Self {
        Self { images }
    }

    pub fn identity(len: usize) -> Self {
        Self { images: (0..len as u32).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Self { images: inv }
    }

    /// The map as encodings: `(vertex, image)` pairs.
    pub fn to_bits(&self, g: &HGraph) -> Vec<(u32, u32)> {
        let v = g.vertex_bits();
        self.images.iter().enumerate().map(|(i, &j)| (v[i], v[j as usize])).collect()
    }
}

/// Why a map failed to be an automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    WrongLength { expected: usize, got: usize },
    OutOfRange { vertex: String },
    Collision { first: String, second: String, image: String },
    Adjacency { a: String, b: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutomorphismCheck {
    pub violation: Option<Violation>,
}

impl AutomorphismCheck {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Exhaustive check that `map` is a bijection preserving adjacency and
/// non-adjacency. Every edge is tested; since the map is a bijection on a
/// finite graph, edges going to edges forces non-edges to non-edges.
pub fn verify_automorphism(g: &HGraph, map: &VertexMap) -> AutomorphismCheck {
    let fail = |v| AutomorphismCheck { violation: Some(v) };
    let nv = g.vertex_count();
    if map.len() != nv {
        return fail(Violation::WrongLength { expected: nv, got: map.len() });
    }
    let name = |i: usize| g.vertex(i).to_string();
    let mut preimage = vec![u32::MAX; nv];
    for (i, &j) in map.images.iter().enumerate() {
        let j = j as usize;
        if j >= nv {
            return fail(Violation::OutOfRange { vertex: name(i) });
        }
        if preimage[j] != u32::MAX {
            return fail(Violation::Collision { first: name(preimage[j] as usize), second: name(i), image: name(j) });
        }
        preimage[j] = i as u32;
    }
    let bits = g.vertex_bits();
    for i in 0..nv {
        let fi = bits[map.image(i)];
        for u in g.neighbors(i) {
            if u > i && !g.adjacent_bits(fi, bits[map.image(u)]) {
                return fail(Violation::Adjacency { a: name(i), b: name(u) });
            }
        }
    }
    AutomorphismCheck { violation: None }
}

/// [`verify_automorphism`] for a structured element.
pub fn verify_element(g: &HGraph, e: &SymmetryElement) -> AutomorphismCheck {
    match e.to_vertex_map(g) {
        Ok(map) => verify_automorphism(g, &map),
        Err(err) => AutomorphismCheck { violation: Some(Violation::OutOfRange { vertex: err.to_string() }) },
    }
}

/// Candidate images are tried in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BranchOrder {
    #[default]
    Ascending,
    Descending,
}

// ---------------------------------------------------------------------------
// Ordered partitions and lockstep refinement

#[derive(Clone, Debug)]
struct Partition {
    cell_of: Vec<u32>,
    cells: Vec<Vec<u32>>,
}

impl Partition {
    fn unit(nv: usize) -> Self {
        Self { cell_of: vec![0; nv], cells: vec![(0..nv as u32).collect()] }
    }

    /// Smallest non-singleton cell, lowest id on ties.
    fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
    }

    /// Moves `v` into a new singleton cell; returns the new cell id.
    fn individualize(&mut self, v: u32) -> usize {
        let c = self.cell_of[v as usize] as usize;
        self.cells[c].retain(|&x| x != v);
        let id = self.cells.len();
        self.cells.push(vec![v]);
        self.cell_of[v as usize] = id as u32;
        id
    }
}

struct Refiner<'g> {
    neighbors: &'g [Vec<u32>],
}

impl Refiner<'_> {
    /// Refines `a` and `b` to equitable partitions with identical operation
    /// sequences. Returns false as soon as the two sides disagree.
    fn refine(&self, a: &mut Partition, mut b: Option<&mut Partition>, initial: &[usize]) -> bool {
        let nv = a.cell_of.len();
        let mut queue: VecDeque<usize> = initial.iter().copied().collect();
        let mut queued = vec![false; a.cells.len()];
        for &c in initial {
            queued[c] = true;
        }
        let mut count_a = vec![0u32; nv];
        let mut count_b = vec![0u32; nv];
        while let Some(w) = queue.pop_front() {
            queued[w] = false;
            count_a.iter_mut().for_each(|x| *x = 0);
            for &v in &a.cells[w] {
                for &u in &self.neighbors[v as usize] {
                    count_a[u as usize] += 1;
                }
            }
            if let Some(b) = b.as_deref() {
                count_b.iter_mut().for_each(|x| *x = 0);
                for &v in &b.cells[w] {
                    for &u in &self.neighbors[v as usize] {
                        count_b[u as usize] += 1;
                    }
                }
            }
            let ncells = a.cells.len();
            for c in 0..ncells {
                let mut ka: Vec<(u32, u32)> = a.cells[c].iter().map(|&v| (count_a[v as usize], v)).collect();
                ka.sort_unstable();
                let mut kb = Vec::new();
                if let Some(b) = b.as_deref() {
                    kb = b.cells[c].iter().map(|&v| (count_b[v as usize], v)).collect();
                    kb.sort_unstable();
                    if ka.len() != kb.len() || ka.iter().zip(&kb).any(|(x, y)| x.0 != y.0) {
                        return false;
                    }
                }
                if ka.first().map(|x| x.0) == ka.last().map(|x| x.0) {
                    continue;
                }
                let first = split_cell(a, c, &ka);
                if let Some(b) = b.as_deref_mut() {
                    split_cell(b, c, &kb);
                }
                queued.resize(a.cells.len(), false);
                for id in std::iter::once(c).chain(first..a.cells.len()) {
                    if !queued[id] {
                        queued[id] = true;
                        queue.push_back(id);
                    }
                }
            }
        }
        true
    }
}

/// Splits cell `c` by count; the lowest count keeps id `c`, higher counts get
/// new ids in ascending count order. Returns the first new id.
fn split_cell(p: &mut Partition, c: usize, keyed: &[(u32, u32)]) -> usize {
    let first_new = p.cells.len();
    let mut groups: Vec<Vec<u32>> = Vec::new();
    let mut last = None;
    for &(k, v) in keyed {
        if last != Some(k) {
            groups.push(Vec::new());
            last = Some(k);
        }
        groups.last_mut().unwrap().push(v);
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    let mut groups = groups.into_iter();
    p.cells[c] = groups.next().unwrap();
    for g in groups {
        let id = p.cells.len() as u32;
        for &v in &g {
            p.cell_of[v as usize] = id;
        }
        p.cells.push(g);
    }
    first_new
}

enum Flow {
    Continue,
    Stop,
}

/// Individualization-refinement search over one graph.
struct Search<'g> {
    graph: &'g HGraph,
    neighbors: Vec<Vec<u32>>,
    order: BranchOrder,
}

impl<'g> Search<'g> {
    fn new(graph: &'g HGraph, order: BranchOrder) -> Self {
        let neighbors =
            (0..graph.vertex_count()).map(|i| graph.neighbors(i).into_iter().map(|j| j as u32).collect()).collect();
        Self { graph, neighbors, order }
    }

    fn refiner(&self) -> Refiner<'_> {
        Refiner { neighbors: &self.neighbors }
    }

    /// Domain/codomain partitions after prescribing `v ↦ w` for each pair.
    fn prescribe(&self, pairs: &[(u32, u32)]) -> Option<(Partition, Partition)> {
        let nv = self.graph.vertex_count();
        let mut a = Partition::unit(nv);
        let mut b = Partition::unit(nv);
        if !self.refiner().refine(&mut a, Some(&mut b), &[0]) {
            return None;
        }
        for &(v, w) in pairs {
            if a.cell_of[v as usize] != b.cell_of[w as usize] {
                return None;
            }
            let old = a.cell_of[v as usize] as usize;
            let id = a.individualize(v);
            b.individualize(w);
            if !self.refiner().refine(&mut a, Some(&mut b), &[old, id]) {
                return None;
            }
        }
        Some((a, b))
    }

    fn domain_partition(&self, fixed: &[u32]) -> Partition {
        let pairs: Vec<(u32, u32)> = fixed.iter().map(|&v| (v, v)).collect();
        self.prescribe(&pairs).expect("identity prescription is always consistent").0
    }

    fn dfs(&self, a: &Partition, b: &Partition, visit: &mut dyn FnMut(VertexMap) -> Flow) -> Flow {
        let Some(c) = a.target_cell() else {
            let mut images = vec![0u32; a.cell_of.len()];
            for (id, cell) in a.cells.iter().enumerate() {
                images[cell[0] as usize] = b.cells[id][0];
            }
            let map = VertexMap::new(images);
            if verify_automorphism(self.graph, &map).holds() {
                return visit(map);
            }
            return Flow::Continue;
        };
        let v = a.cells[c][0];
        let mut candidates = b.cells[c].clone();
        if self.order == BranchOrder::Descending {
            candidates.reverse();
        }
        for w in candidates {
            let mut a2 = a.clone();
            let mut b2 = b.clone();
            let id = a2.individualize(v);
            b2.individualize(w);
            if self.refiner().refine(&mut a2, Some(&mut b2), &[c, id]) {
                if let Flow::Stop = self.dfs(&a2, &b2, visit) {
                    return Flow::Stop;
                }
            }
        }
        Flow::Continue
    }

    fn find_first(&self, pairs: &[(u32, u32)]) -> Option<VertexMap> {
        let (a, b) = self.prescribe(pairs)?;
        let mut found = None;
        self.dfs(&a, &b, &mut |m| {
            found = Some(m);
            Flow::Stop
        });
        found
    }

    fn enumerate(&self, pairs: &[(u32, u32)]) -> Vec<VertexMap> {
        let mut out = Vec::new();
        if let Some((a, b)) = self.prescribe(pairs) {
            self.dfs(&a, &b, &mut |m| {
                out.push(m);
                Flow::Continue
            });
        }
        out.sort();
        out
    }

    fn chain(&self, root: u32) -> Vec<Level> {
        let mut fixed = vec![root];
        let mut levels = Vec::new();
        loop {
            let part = self.domain_partition(&fixed);
            let Some(c) = part.target_cell() else { break };
            let base = part.cells[c][0];
            let mut candidates = part.cells[c].clone();
            if self.order == BranchOrder::Descending {
                candidates.reverse();
            }
            let nv = self.graph.vertex_count();
            let mut transversal: BTreeMap<u32, VertexMap> = BTreeMap::from([(base, VertexMap::identity(nv))]);
            let mut generators: Vec<VertexMap> = Vec::new();
            for w in candidates {
                if transversal.contains_key(&w) {
                    continue;
                }
                let mut pairs: Vec<(u32, u32)> = fixed.iter().map(|&v| (v, v)).collect();
                pairs.push((base, w));
                if let Some(g) = self.find_first(&pairs) {
                    generators.push(g);
                    close_orbit(&mut transversal, &generators);
                }
            }
            levels.push(Level { base, transversal, generators });
            fixed.push(base);
        }
        levels
    }
}

/// Extends `transversal` to the orbit of its points under `generators`,
/// keeping for every new point a map that sends the base point there.
fn close_orbit(transversal: &mut BTreeMap<u32, VertexMap>, generators: &[VertexMap]) {
    let mut queue: VecDeque<u32> = transversal.keys().copied().collect();
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q = g.image(p as usize) as u32;
            if !transversal.contains_key(&q) {
                let t = g.compose(&transversal[&p]);
                transversal.insert(q, t);
                queue.push_back(q);
            }
        }
    }
}

struct Level {
    base: u32,
    transversal: BTreeMap<u32, VertexMap>,
    generators: Vec<VertexMap>,
}

// ---------------------------------------------------------------------------
// Public operations

/// The automorphisms of a graph that fix its base vertex.
#[derive(Clone, Debug)]
pub struct StabilizerResult {
    pub root: SubsetId,
    pub order: BigUint,
    /// Base points of the stabilizer chain below the root, with orbit lengths.
    pub base: Vec<(SubsetId, usize)>,
    /// Maps found by search at each level; together they generate the group.
    pub generators: Vec<VertexMap>,
    /// Every element, ascending, when the order is at most [`MATERIALIZE_CAP`].
    pub elements: Option<Vec<VertexMap>>,
    /// The equitable partition reached after individualizing the root.
    pub invariant_signature: Vec<Vec<SubsetId>>,
}

fn materialize(levels: &[Level], nv: usize) -> Vec<VertexMap> {
    let mut elements = vec![VertexMap::identity(nv)];
    for level in levels.iter().rev() {
        let mut next = Vec::with_capacity(elements.len() * level.transversal.len());
        for t in level.transversal.values() {
            for e in &elements {
                next.push(t.compose(e));
            }
        }
        elements = next;
    }
    elements.sort();
    elements
}

fn chain_order(levels: &[Level]) -> BigUint {
    levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.transversal.len()))
}

/// Stabilizer of the base vertex (`∅` for the whole graph and the even
/// component, `{1}` for the odd component).
pub fn stabilizer_of_empty(g: &HGraph) -> Result<StabilizerResult> {
    stabilizer_with_order(g, BranchOrder::Ascending)
}

pub fn stabilizer_with_order(g: &HGraph, order: BranchOrder) -> Result<StabilizerResult> {
    stabilizer_impl(g, order, true)
}

/// Like [`stabilizer_of_empty`] but never materializes the elements.
pub fn stabilizer_chain(g: &HGraph) -> Result<StabilizerResult> {
    stabilizer_impl(g, BranchOrder::Ascending, false)
}

fn stabilizer_impl(g: &HGraph, order: BranchOrder, materialize_small: bool) -> Result<StabilizerResult> {
    check_cap(g)?;
    let search = Search::new(g, order);
    let levels = search.chain(0);
    let group_order = chain_order(&levels);
    let nv = g.vertex_count();
    let generators: Vec<VertexMap> = levels.iter().flat_map(|l| l.generators.iter().cloned()).collect();
    for m in &generators {
        if let Some(v) = verify_automorphism(g, m).violation {
            return Err(HnkError::Internal(format!("search produced a non-automorphism: {v:?}")));
        }
        if m.image(0) != 0 {
            return Err(HnkError::Internal("search produced a map moving the root".into()));
        }
    }
    let elements = if materialize_small && group_order <= BigUint::from(MATERIALIZE_CAP) {
        let elements = materialize(&levels, nv);
        check_closure(&elements, &generators)?;
        Some(elements)
    } else {
        None
    };
    let part = search.domain_partition(&[0]);
    let invariant_signature =
        part.cells.iter().map(|c| c.iter().map(|&i| g.vertex(i as usize)).collect()).collect();
    Ok(StabilizerResult {
        root: g.base_vertex(),
        order: group_order,
        base: levels.iter().map(|l| (g.vertex(l.base as usize), l.transversal.len())).collect(),
        generators,
        elements,
        invariant_signature,
    })
}

fn check_closure(elements: &[VertexMap], generators: &[VertexMap]) -> Result<()> {
    let set: HashSet<&VertexMap> = elements.iter().collect();
    if set.len() != elements.len() {
        return Err(HnkError::Internal("stabilizer elements are not distinct".into()));
    }
    if !elements.iter().any(VertexMap::is_identity) {
        return Err(HnkError::Internal("stabilizer lacks the identity".into()));
    }
    // A finite set containing the identity and closed under left
    // multiplication by generators is the group they generate.
    for g in generators {
        for e in elements {
            if !set.contains(&g.compose(e)) {
                return Err(HnkError::Internal("stabilizer is not closed under composition".into()));
            }
        }
    }
    Ok(())
}

/// Every automorphism fixing the base vertex, found leaf by leaf without the
/// stabilizer chain. Intended for small groups; output is sorted.
pub fn enumerate_stabilizer(g: &HGraph, order: BranchOrder) -> Result<Vec<VertexMap>> {
    check_cap(g)?;
    Ok(Search::new(g, order).enumerate(&[(0, 0)]))
}

/// Some automorphism of `g` sending `from` to `to`, if one exists.
pub fn find_automorphism(g: &HGraph, from: SubsetId, to: SubsetId) -> Result<Option<VertexMap>> {
    check_cap(g)?;
    let (a, b) = (g.index_of(from)? as u32, g.index_of(to)? as u32);
    Ok(Search::new(g, BranchOrder::Ascending).find_first(&[(a, b)]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutOrder {
    pub orbit_size: usize,
    #[serde(serialize_with = "crate::bignum::serialize")]
    pub stabilizer_order: BigUint,
    #[serde(serialize_with = "crate::bignum::serialize")]
    pub order: BigUint,
}

/// Translations that preserve `g`'s vertex set: all of `Ω_n` for the whole
/// graph, the even-size subsets for a component.
pub fn translation_vectors(g: &HGraph) -> Vec<u32> {
    (0..=full_mask(g.n()))
        .filter(|&x| g.component() == Component::Whole || x.count_ones() % 2 == 0)
        .collect()
}

/// `|Aut(g)| = |orbit of the base vertex| · |stabilizer|`. The orbit is
/// realized by translations, each of which is verified as an automorphism.
pub fn aut_order(g: &HGraph) -> Result<AutOrder> {
    check_cap(g)?;
    let stab = Search::new(g, BranchOrder::Ascending).chain(0);
    let stabilizer_order = chain_order(&stab);
    let orbit_size = verify_translation_orbit(g)?;
    Ok(AutOrder { orbit_size, order: BigUint::from(orbit_size) * &stabilizer_order, stabilizer_order })
}

/// Checks that the translations preserving `g` are automorphisms and carry
/// the base vertex to every vertex; returns the orbit size.
pub fn verify_translation_orbit(g: &HGraph) -> Result<usize> {
    let root = g.vertex_bits()[0];
    let mut orbit = HashSet::new();
    for x in translation_vectors(g) {
        let e = SymmetryElement::translation_by(SubsetId::from_raw(g.n(), x));
        if !verify_element(g, &e).holds() {
            return Err(HnkError::Internal(format!("translation by {} is not an automorphism", format_bits(x))));
        }
        orbit.insert(root ^ x);
    }
    if orbit.len() != g.vertex_count() {
        return Err(HnkError::Internal(format!(
            "translations reach {} of {} vertices",
            orbit.len(),
            g.vertex_count()
        )));
    }
    Ok(orbit.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Decomposition {
    Known { element: SymmetryElement },
    OutsideKnownGroup { translation: String, reason: String },
}

impl Decomposition {
    pub fn element(&self) -> Option<&SymmetryElement> {
        match self {
            Decomposition::Known { element } => Some(element),
            Decomposition::OutsideKnownGroup { .. } => None,
        }
    }
}

/// Writes a verified automorphism of `g` as `ρ_X ∘ f` with `f` from the
/// family that the known group of `H(n,k)` uses, or reports that it lies
/// outside that group.
pub fn decompose_known(g: &HGraph, map: &VertexMap) -> Result<Decomposition> {
    if let Some(v) = verify_automorphism(g, map).violation {
        return Err(HnkError::Usage(format!("not an automorphism: {v:?}")));
    }
    let n = g.n();
    let pairs = map.to_bits(g);
    let mut table: HashMap<u32, u32> = pairs.iter().copied().collect();
    match g.component() {
        Component::Whole => decompose_whole(n, g.k(), &table),
        Component::Even => decompose_even(n, &table),
        Component::Odd => {
            // Conjugate by ρ_{1} onto the even component and translate back.
            table = pairs.iter().map(|&(x, y)| (x ^ 1, y ^ 1)).collect();
            Ok(match decompose_even(n, &table)? {
                Decomposition::Known { element } => {
                    let sigma1 = element.perm().act_on_bits(1);
                    let x = element.translation().bits() ^ 1 ^ sigma1;
                    Decomposition::Known {
                        element: SymmetryElement::new(
                            SubsetId::from_raw(n, x),
                            element.perm().clone(),
                            Family::Plain,
                        )?,
                    }
                }
                outside => outside,
            })
        }
    }
}

fn outside(x: u32, reason: impl Into<String>) -> Result<Decomposition> {
    Ok(Decomposition::OutsideKnownGroup { translation: format_bits(x), reason: reason.into() })
}

fn matches_table(element: &SymmetryElement, table: &HashMap<u32, u32>) -> bool {
    table.iter().all(|(&y, &fy)| element.apply_bits(y) == fy)
}

fn single_element(bits: u32) -> Option<usize> {
    (bits.count_ones() == 1).then(|| bits.trailing_zeros() as usize + 1)
}

fn decompose_whole(n: usize, k: usize, table: &HashMap<u32, u32>) -> Result<Decomposition> {
    let x = table[&0];
    let psi = |y: u32| table[&y] ^ x;
    let singles: Vec<u32> = (0..n).map(|i| psi(1 << i)).collect();
    let family = known_family(n, k);
    let all = full_mask(n);
    let images: Option<Vec<usize>> = if singles.iter().all(|s| s.count_ones() == 1) {
        let mut im: Vec<usize> = singles.iter().map(|&s| single_element(s).unwrap()).collect();
        if family != Family::Plain {
            im.push(n + 1);
        }
        Some(im)
    } else {
        match family {
            Family::Plain => None,
            Family::ExtA => {
                let ts: Vec<usize> = (0..n).filter(|&i| singles[i] == all).collect();
                if ts.len() == 1 && (0..n).all(|i| i == ts[0] || singles[i].count_ones() == 1) {
                    let t = ts[0];
                    let mut im: Vec<usize> =
                        (0..n).map(|i| if i == t { n + 1 } else { single_element(singles[i]).unwrap() }).collect();
                    let used: u32 = (0..n).filter(|&i| i != t).fold(0, |acc, i| acc | singles[i]);
                    let missing = all & !used;
                    im.push(single_element(missing).unwrap_or(0));
                    Some(im)
                } else {
                    None
                }
            }
            Family::ExtB => {
                let ts: Vec<usize> = (0..n).filter(|&i| singles[i].count_ones() == 1).collect();
                if ts.len() == 1 {
                    let t = ts[0];
                    let t_img = singles[t];
                    let mut im = vec![0usize; n + 1];
                    im[t] = n + 1;
                    im[n] = single_element(t_img).unwrap();
                    for i in (0..n).filter(|&i| i != t) {
                        let rest = all & !singles[i] & !t_img;
                        if singles[i] & t_img != 0 || singles[i].count_ones() as usize + 2 != n {
                            return outside(x, format!("image of {{{}}} has the wrong shape", i + 1));
                        }
                        im[i] = single_element(rest).unwrap_or(0);
                    }
                    Some(im)
                } else {
                    None
                }
            }
        }
    };
    let Some(images) = images else {
        return outside(x, "singleton images match no known pattern");
    };
    let Ok(perm) = Permutation::from_images(&images) else {
        return outside(x, "singleton images do not define a permutation");
    };
    let element = SymmetryElement::new(SubsetId::from_raw(n, x), perm, family)?;
    if matches_table(&element, table) {
        Ok(Decomposition::Known { element })
    } else {
        outside(x, format!("agrees with {element} on singletons but not everywhere"))
    }
}

fn decompose_even(n: usize, table: &HashMap<u32, u32>) -> Result<Decomposition> {
    let x = table[&0];
    let psi = |y: u32| table[&y] ^ x;
    let images: Vec<usize> = if n <= 2 {
        (1..=n).collect()
    } else {
        let mut im = Vec::with_capacity(n);
        for i in 0..n {
            let common = (0..n).filter(|&j| j != i).fold(full_mask(n), |acc, j| acc & psi(1 << i | 1 << j));
            match single_element(common) {
                Some(e) => im.push(e),
                None => return outside(x, format!("images of pairs through {} share no single point", i + 1)),
            }
        }
        im
    };
    let Ok(perm) = Permutation::from_images(&images) else {
        return outside(x, "pair images do not define a permutation");
    };
    let element = SymmetryElement::new(SubsetId::from_raw(n, x), perm, Family::Plain)?;
    if matches_table(&element, table) {
        Ok(Decomposition::Known { element })
    } else {
        outside(x, format!("agrees with {element} on pairs but not everywhere"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hgraph::{build_graph, GraphParams};

    fn graph(n: usize, k: usize, c: Component) -> HGraph {
        build_graph(GraphParams::new(n, k, c).unwrap()).unwrap()
    }

    #[test]
    fn verify_rejects_swapping_two_vertices() {
        let g = graph(5, 3, Component::Whole);
        let mut images: Vec<u32> = (0..32).collect();
        images.swap(1, 2); // {1} <-> {2}
        let check = verify_automorphism(&g, &VertexMap::new(images));
        assert!(matches!(check.violation, Some(Violation::Adjacency { .. })));
        let mut images: Vec<u32> = (0..32).collect();
        images[3] = 4;
        assert!(matches!(
            verify_automorphism(&g, &VertexMap::new(images)).violation,
            Some(Violation::Collision { .. })
        ));
        assert!(matches!(
            verify_automorphism(&g, &VertexMap::identity(8)).violation,
            Some(Violation::WrongLength { .. })
        ));
    }

    #[test]
    fn stabilizer_examples() {
        let s = stabilizer_of_empty(&graph(5, 3, Component::Whole)).unwrap();
        assert_eq!(s.order, BigUint::from(720u32));
        assert_eq!(s.elements.as_ref().unwrap().len(), 720);
        let s = stabilizer_of_empty(&graph(4, 1, Component::Whole)).unwrap();
        assert_eq!(s.order, BigUint::from(24u32));
        // Two K4 components: 3! inside the root's component, 4! on the other.
        let s = stabilizer_of_empty(&graph(3, 2, Component::Whole)).unwrap();
        assert_eq!(s.order, BigUint::from(144u32));
    }

    #[test]
    fn chain_matches_leaf_enumeration_both_orders() {
        for (n, k, c) in [(5, 3, Component::Whole), (4, 1, Component::Whole), (5, 2, Component::Even), (3, 2, Component::Whole), (4, 2, Component::Odd)] {
            let g = graph(n, k, c);
            let chain = stabilizer_of_empty(&g).unwrap().elements.unwrap();
            let up = enumerate_stabilizer(&g, BranchOrder::Ascending).unwrap();
            let down = enumerate_stabilizer(&g, BranchOrder::Descending).unwrap();
            let rev = stabilizer_with_order(&g, BranchOrder::Descending).unwrap().elements.unwrap();
            assert_eq!(chain, up, "{}", g.params().label());
            assert_eq!(up, down);
            assert_eq!(chain, rev);
        }
    }

    #[test]
    fn aut_order_examples() {
        let a = aut_order(&graph(5, 3, Component::Whole)).unwrap();
        assert_eq!((a.orbit_size, a.order.clone()), (32, BigUint::from(23040u32)));
        let a = aut_order(&graph(4, 1, Component::Whole)).unwrap();
        assert_eq!(a.order, BigUint::from(384u32));
        let a = aut_order(&graph(6, 2, Component::Even)).unwrap();
        assert_eq!(a.order, BigUint::from(23040u32));
    }

    #[test]
    fn size_cap_is_enforced() {
        let g = graph(9, 3, Component::Whole);
        assert!(matches!(stabilizer_of_empty(&g), Err(HnkError::SizeCap { vertices: 512, .. })));
        assert!(matches!(aut_order(&g), Err(HnkError::SizeCap { .. })));
    }

    #[test]
    fn decompositions() {
        let g = graph(5, 3, Component::Whole);
        for x in 0..32u32 {
            let e = SymmetryElement::translation_by(SubsetId::from_raw(5, x));
            let d = decompose_known(&g, &e.to_vertex_map(&g).unwrap()).unwrap();
            let el = d.element().unwrap();
            assert_eq!(el.translation().bits(), x);
            assert!(el.perm().is_identity());
        }
        let s = stabilizer_of_empty(&g).unwrap();
        let mut sigmas = HashSet::new();
        for m in s.elements.unwrap() {
            let d = decompose_known(&g, &m).unwrap();
            let el = d.element().expect("stabilizer element outside the known group");
            assert_eq!(el.family(), Family::ExtA);
            assert_eq!(el.translation().bits(), 0);
            assert!(sigmas.insert(el.perm().clone()));
        }
        assert_eq!(sigmas.len(), 720);

        // H(3,2): some stabilizer element swaps the two K4's pointwise in a
        // way no ρ_X σ or f_σ can.
        let g = graph(3, 2, Component::Whole);
        let s = stabilizer_of_empty(&g).unwrap();
        let outside = s
            .elements
            .unwrap()
            .iter()
            .filter(|m| decompose_known(&g, m).unwrap().element().is_none())
            .count();
        assert!(outside > 0);
    }

    #[test]
    fn component_decompositions() {
        for c in [Component::Even, Component::Odd] {
            let g = graph(6, 2, c);
            let s = stabilizer_of_empty(&g).unwrap();
            assert_eq!(s.order, BigUint::from(720u32));
            for m in s.generators.iter().chain([VertexMap::identity(32)].iter()) {
                let d = decompose_known(&g, m).unwrap();
                let el = d.element().expect("component element outside H''_n S_n");
                assert_eq!(el.to_vertex_map(&g).unwrap(), *m);
            }
        }
    }

    #[test]
    fn ext_b_stabilizer_decomposes() {
        let g = graph(7, 3, Component::Whole);
        let s = stabilizer_of_empty(&g).unwrap();
        assert_eq!(s.order, BigUint::from(40320u32));
        for m in &s.generators {
            let el = decompose_known(&g, m).unwrap();
            assert_eq!(el.element().unwrap().family(), Family::ExtB);
        }
    }
}
