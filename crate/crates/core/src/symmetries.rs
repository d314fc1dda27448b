//! Explicit automorphisms of `H(n,k)`.
//!
//! Every element is stored in translation-first normal form
//! `Y ↦ X △ f(Y)`, where `f` is the action of a permutation:
//!
//! * [`Family::Plain`]: `σ ∈ S_n` acting element-wise.
//! * [`Family::ExtA`]: `σ ∈ S_{n+1}` acting through [`f_sigma`]; an
//!   automorphism of `H(2k-1,k)`.
//! * [`Family::ExtB`]: `σ ∈ S_{n+1}` acting through [`f_sigma_ext`]; an
//!   automorphism of `H(2k+1,k)` for odd `k`.
//!
//! All three permutation actions are GF(2)-linear, which is what makes the
//! normal form closed under composition: `ρ_X f ρ_Y g = ρ_{X △ f(Y)} f g`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use serde::{Deserialize, Serialize, Serializer};

use crate::autsearch::VertexMap;
use crate::error::{usage, HnkError, Result};
use crate::hgraph::HGraph;
use crate::subsets::{full_mask, SubsetId, MAX_N};

/// A permutation of `{1, ..., m}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    // images[i] = σ(i + 1) - 1
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Self { images: (0..m as u8).collect() }
    }

    /// From the 1-based image table `[σ(1), ..., σ(m)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let m = images.len();
        if m == 0 || m > MAX_N + 1 {
            return usage(format!("permutation size must be in 1..={}, got {m}", MAX_N + 1));
        }
        let mut seen = vec![false; m];
        for &x in images {
            if x == 0 || x > m || std::mem::replace(&mut seen[x - 1], true) {
                return usage(format!("{images:?} is not a permutation of 1..={m}"));
            }
        }
        Ok(Self { images: images.iter().map(|&x| (x - 1) as u8).collect() })
    }

    pub fn transposition(m: usize, a: usize, b: usize) -> Result<Self> {
        Self::from_cycles(m, &[&[a, b]])
    }

    /// Builds a permutation from disjoint cycles written with 1-based points.
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=m).collect();
        let mut touched = vec![false; m + 1];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a == 0 || a > m || std::mem::replace(&mut touched[a], true) {
                    return usage(format!("bad or repeated point {a} in cycles over 1..={m}"));
                }
                images[a - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    pub fn domain_size(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for 1-based `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// `σ^{-1}(i)` for 1-based `i`.
    pub fn preimage(&self, i: usize) -> usize {
        self.images.iter().position(|&x| x as usize == i - 1).unwrap() + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Self { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.domain_size() != other.domain_size() {
            return usage(format!(
                "cannot compose permutations of {} and {} points",
                self.domain_size(),
                other.domain_size()
            ));
        }
        Ok(Self { images: other.images.iter().map(|&x| self.images[x as usize]).collect() })
    }

    /// Embeds `S_m` into `S_{m+1}` as the stabilizer of `m + 1`.
    pub fn extended(&self) -> Self {
        let mut images = self.images.clone();
        images.push(images.len() as u8);
        Self { images }
    }

    /// `σ(X)` on encodings; bit `i - 1` stands for point `i`.
    #[inline]
    pub fn act_on_bits(&self, bits: u32) -> u32 {
        let mut out = 0u32;
        let mut rest = bits;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            out |= 1 << self.images[i];
            rest &= rest - 1;
        }
        out
    }

    /// All of `S_m` in lexicographic order of image tables.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut current: Vec<u8> = (0..m as u8).collect();
        let mut out = vec![Self { images: current.clone() }];
        while next_permutation(&mut current) {
            out.push(Self { images: current.clone() });
        }
        out
    }

    pub fn random<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Self {
        use rand::seq::SliceRandom;
        let mut images: Vec<u8> = (0..m as u8).collect();
        images.shuffle(rng);
        Self { images }
    }
}

fn next_permutation(a: &mut [u8]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Cycle notation, fixed points omitted; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.domain_size();
        let mut seen = vec![false; m];
        let mut wrote = false;
        for start in 0..m {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            f.write_str("(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i] as usize;
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Permutation::from_images(&images).map_err(serde::de::Error::custom)
    }
}

/// `ρ_X(Y) = X △ Y`.
pub fn apply_translation(x: SubsetId, y: SubsetId) -> Result<SubsetId> {
    x.symmetric_difference(y)
}

fn check_extended_domain(sigma: &Permutation, x: SubsetId) -> Result<()> {
    if sigma.domain_size() != x.n() + 1 {
        return usage(format!(
            "need a permutation of {} points for subsets of [{}], got {}",
            x.n() + 1,
            x.n(),
            sigma.domain_size()
        ));
    }
    Ok(())
}

/// The GF(2)-linear map on characteristic vectors: output coordinate `i` is
/// `v[σ^{-1}(i)] + v[t]` with `t = σ^{-1}(n+1)` and `v[n+1]` read as 0.
pub fn t_sigma(sigma: &Permutation, v: SubsetId) -> Result<SubsetId> {
    check_extended_domain(sigma, v)?;
    Ok(SubsetId::from_raw(v.n(), t_sigma_bits(sigma, v.n(), v.bits())))
}

pub(crate) fn t_sigma_bits(sigma: &Permutation, n: usize, v: u32) -> u32 {
    let coord = |j: usize| if j == n + 1 { 0 } else { v >> (j - 1) & 1 };
    let vt = coord(sigma.preimage(n + 1));
    (1..=n).fold(0u32, |acc, i| acc | (coord(sigma.preimage(i)) ^ vt) << (i - 1))
}

/// `σ(X)` when `t ∉ X`, otherwise `[n] \ σ(X \ {t})`, with `t = σ^{-1}(n+1)`.
pub fn f_sigma(sigma: &Permutation, x: SubsetId) -> Result<SubsetId> {
    check_extended_domain(sigma, x)?;
    Ok(SubsetId::from_raw(x.n(), f_sigma_bits(sigma, x.n(), x.bits())))
}

#[inline]
pub(crate) fn f_sigma_bits(sigma: &Permutation, n: usize, x: u32) -> u32 {
    let t = sigma.preimage(n + 1);
    if t == n + 1 || x >> (t - 1) & 1 == 0 {
        sigma.act_on_bits(x)
    } else {
        !sigma.act_on_bits(x & !(1 << (t - 1))) & full_mask(n)
    }
}

/// The four-case map for `n = 2k+1`, odd `k`, with `t = σ^{-1}(n+1)`:
///
/// | `|X|` | `t ∈ X` | image |
/// |------|--------|-------|
/// | even | no  | `σ(X)` |
/// | even | yes | `[n] \ σ(X \ {t})` |
/// | odd  | no  | `[n] \ σ(X ∪ {n+1})` |
/// | odd  | yes | `σ(X ∪ {n+1} \ {t})` |
///
/// When `σ` fixes `n + 1` the map is plain `σ(X)`.
pub fn f_sigma_ext(sigma: &Permutation, x: SubsetId) -> Result<SubsetId> {
    check_extended_domain(sigma, x)?;
    Ok(SubsetId::from_raw(x.n(), f_sigma_ext_bits(sigma, x.n(), x.bits())))
}

#[inline]
pub(crate) fn f_sigma_ext_bits(sigma: &Permutation, n: usize, x: u32) -> u32 {
    let t = sigma.preimage(n + 1);
    if t == n + 1 {
        return sigma.act_on_bits(x);
    }
    let tbit = 1u32 << (t - 1);
    let extra = 1u32 << n;
    match (x.count_ones() % 2 == 0, x & tbit != 0) {
        (true, false) => sigma.act_on_bits(x),
        (true, true) => !sigma.act_on_bits(x & !tbit) & full_mask(n),
        (false, false) => !sigma.act_on_bits(x | extra) & full_mask(n),
        (false, true) => sigma.act_on_bits((x | extra) & !tbit),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "plain")]
    Plain,
    #[serde(rename = "extA")]
    ExtA,
    #[serde(rename = "extB")]
    ExtB,
}

/// The family whose elements, together with all translations, make up the
/// known automorphism group of `H(n,k)`.
pub fn known_family(n: usize, k: usize) -> Family {
    if k >= 2 && n + 1 == 2 * k {
        Family::ExtA
    } else if k >= 3 && k % 2 == 1 && n == 2 * k + 1 {
        Family::ExtB
    } else {
        Family::Plain
    }
}

/// A structured automorphism `Y ↦ X △ f(Y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetryElement {
    translation: u32,
    perm: Permutation,
    family: Family,
    n: usize,
}

/// JSON form: `{"translation": int, "perm": [images], "family": "plain"|"extA"|"extB"}`.
impl Serialize for SymmetryElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            translation: u32,
            perm: &'a Permutation,
            family: Family,
        }
        Repr { translation: self.translation, perm: &self.perm, family: self.family }.serialize(s)
    }
}

impl SymmetryElement {
    pub fn new(translation: SubsetId, perm: Permutation, family: Family) -> Result<Self> {
        let n = translation.n();
        let want = if family == Family::Plain { n } else { n + 1 };
        if perm.domain_size() != want {
            return usage(format!(
                "{family:?} element on [{n}] needs a permutation of {want} points, got {}",
                perm.domain_size()
            ));
        }
        match family {
            Family::ExtA if n < 3 || n % 2 == 0 => {
                return usage(format!("extA elements need n = 2k-1 with k >= 2, got n = {n}"));
            }
            Family::ExtB if n % 4 != 3 => {
                return usage(format!("extB elements need n = 2k+1 with k odd, got n = {n}"));
            }
            _ => {}
        }
        Ok(Self { translation: translation.bits(), perm, family, n })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(SubsetId::empty(n)?, Permutation::identity(n), Family::Plain)
    }

    pub fn translation_by(x: SubsetId) -> Self {
        Self { translation: x.bits(), perm: Permutation::identity(x.n()), family: Family::Plain, n: x.n() }
    }

    pub fn plain(n: usize, sigma: Permutation) -> Result<Self> {
        Self::new(SubsetId::empty(n)?, sigma, Family::Plain)
    }

    pub fn ext_a(n: usize, sigma: Permutation) -> Result<Self> {
        Self::new(SubsetId::empty(n)?, sigma, Family::ExtA)
    }

    pub fn ext_b(n: usize, sigma: Permutation) -> Result<Self> {
        Self::new(SubsetId::empty(n)?, sigma, Family::ExtB)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn translation(&self) -> SubsetId {
        SubsetId::from_raw(self.n, self.translation)
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn is_identity(&self) -> bool {
        self.translation == 0 && self.perm.is_identity()
    }

    /// The permutation part `f` alone.
    #[inline]
    pub fn permutation_action_bits(&self, y: u32) -> u32 {
        match self.family {
            Family::Plain => self.perm.act_on_bits(y),
            Family::ExtA => f_sigma_bits(&self.perm, self.n, y),
            Family::ExtB => f_sigma_ext_bits(&self.perm, self.n, y),
        }
    }

    #[inline]
    pub fn apply_bits(&self, y: u32) -> u32 {
        self.translation ^ self.permutation_action_bits(y)
    }

    pub fn apply(&self, y: SubsetId) -> Result<SubsetId> {
        if y.n() != self.n {
            return usage(format!("element acts on [{}], got a subset of [{}]", self.n, y.n()));
        }
        Ok(SubsetId::from_raw(self.n, self.apply_bits(y.bits())))
    }

    fn perm_in(&self, family: Family) -> Permutation {
        if self.family == Family::Plain && family != Family::Plain {
            self.perm.extended()
        } else {
            self.perm.clone()
        }
    }

    pub fn inverse(&self) -> Self {
        let perm = self.perm.inverse();
        let inv = Self { translation: 0, perm, family: self.family, n: self.n };
        let translation = inv.permutation_action_bits(self.translation);
        Self { translation, ..inv }
    }

    /// The action on every vertex of `g`, as a map on local indices.
    pub fn to_vertex_map(&self, g: &HGraph) -> Result<VertexMap> {
        if g.n() != self.n {
            return usage(format!("element acts on [{}], graph lives on [{}]", self.n, g.n()));
        }
        let images = g
            .vertex_bits()
            .iter()
            .map(|&b| {
                let y = self.apply_bits(b);
                g.index_of_bits(y).map(|j| j as u32).ok_or_else(|| {
                    HnkError::Usage(format!(
                        "element sends {} outside {}",
                        crate::subsets::format_bits(b),
                        g.params().label()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VertexMap::new(images))
    }

    /// Images of all of `Ω_n`, indexed by encoding.
    pub fn table(&self) -> Vec<u32> {
        (0..=full_mask(self.n)).map(|y| self.apply_bits(y)).collect()
    }
}

impl fmt::Display for SymmetryElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.family {
            Family::Plain => "σ",
            Family::ExtA => "f_σ",
            Family::ExtB => "f^σ",
        };
        write!(f, "ρ_{} ∘ {tag}[σ = {}]", self.translation(), self.perm)
    }
}

/// Outcome of [`compose`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Composition {
    Structured(SymmetryElement),
    /// The two families do not share a normal form; only the pointwise
    /// composition over `Ω_n` (indexed by encoding) is available.
    Destructured(Vec<u32>),
}

/// `a ∘ b` (apply `b` first).
pub fn compose(a: &SymmetryElement, b: &SymmetryElement) -> Result<Composition> {
    if a.n != b.n {
        return usage(format!("elements act on [{}] and [{}]", a.n, b.n));
    }
    let family = match (a.family, b.family) {
        (x, y) if x == y => x,
        (Family::Plain, y) => y,
        (x, Family::Plain) => x,
        _ => {
            let table = (0..=full_mask(a.n)).map(|y| a.apply_bits(b.apply_bits(y))).collect();
            return Ok(Composition::Destructured(table));
        }
    };
    let perm = a.perm_in(family).compose(&b.perm_in(family))?;
    let translation = a.translation ^ a.permutation_action_bits(b.translation);
    Ok(Composition::Structured(SymmetryElement { translation, perm, family, n: a.n }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderCase {
    /// `k = 0` or `k = n`.
    Degenerate,
    /// `k = 1`: the hypercube.
    Hypercube,
    /// `n = 2k`: not determined.
    OpenCase,
    /// `n = 2k-1`, `k >= 2`: translations with the `extA` maps.
    TwoKMinusOne,
    /// `n = 2k+1`, `k` odd: translations with the `extB` maps.
    TwoKPlusOneOddK,
    /// `n = 2k+1`, `k` even: translations with `S_n`.
    TwoKPlusOneEvenK,
    /// `n >= 2k+2`.
    Wide,
    /// `n <= 2k-2`.
    Narrow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Caveat {
    /// Even `k`: the whole graph has two components.
    Disconnected,
    /// The per-component order is recorded outside the range where it was proved.
    ComponentClaimExtrapolated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedOrder {
    /// Whole-graph order, `None` when unknown.
    #[serde(with = "crate::bignum::opt")]
    pub value: Option<BigUint>,
    pub case_tag: OrderCase,
    pub caveats: Vec<Caveat>,
    /// For even `k`: the order predicted for each parity component, `2^{n-1} n!`.
    #[serde(with = "crate::bignum::opt")]
    pub component_value: Option<BigUint>,
}

pub fn factorial(m: usize) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

pub fn predicted_aut_order(n: usize, k: usize) -> PredictedOrder {
    let unknown = |case_tag| PredictedOrder { value: None, case_tag, caveats: Vec::new(), component_value: None };
    if k == 0 || k >= n {
        return unknown(OrderCase::Degenerate);
    }
    let (case_tag, value) = if k == 1 {
        (OrderCase::Hypercube, pow2(n) * factorial(n))
    } else if n == 2 * k {
        return unknown(OrderCase::OpenCase);
    } else if n + 1 == 2 * k {
        (OrderCase::TwoKMinusOne, pow2(n) * factorial(n + 1))
    } else if n == 2 * k + 1 && k % 2 == 1 {
        (OrderCase::TwoKPlusOneOddK, pow2(n) * factorial(n + 1))
    } else if n == 2 * k + 1 {
        (OrderCase::TwoKPlusOneEvenK, pow2(n) * factorial(n))
    } else if n >= 2 * k + 2 {
        (OrderCase::Wide, pow2(n) * factorial(n))
    } else {
        (OrderCase::Narrow, pow2(n) * factorial(n))
    };
    let mut caveats = Vec::new();
    let mut component_value = None;
    if k % 2 == 0 {
        caveats.push(Caveat::Disconnected);
        component_value = Some(pow2(n - 1) * factorial(n));
        if !matches!(case_tag, OrderCase::Wide | OrderCase::Narrow) {
            caveats.push(Caveat::ComponentClaimExtrapolated);
        }
    }
    PredictedOrder { value: Some(value), case_tag, caveats, component_value }
}
