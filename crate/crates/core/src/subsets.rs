//! Subsets of `[n] = {1, ..., n}` stored as bit vectors.
//!
//! Element `i` lives at bit `i - 1`, so the encoding of a subset is exactly
//! its characteristic vector over GF(2). Every other module builds on these
//! encodings: graph vertices, translation vectors and images of symmetry maps
//! are all `SubsetId`s.

use std::fmt;
use std::str::FromStr;

use crate::error::{usage, HnkError, Result};

/// Largest ground-set size accepted anywhere in the crate.
pub const MAX_N: usize = 16;

/// A subset of `[n]`, `n <= MAX_N`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SubsetId {
    n: u8,
    bits: u32,
}

impl serde::Serialize for SubsetId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Bit mask of the full set `[n]`.
#[inline]
pub fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return usage(format!("ground-set size n must be in 1..={MAX_N}, got {n}"));
    }
    Ok(())
}

impl SubsetId {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        check_n(n)?;
        if bits & !full_mask(n) != 0 {
            return usage(format!("encoding {bits:#b} has bits outside [{n}]"));
        }
        Ok(Self { n: n as u8, bits })
    }

    /// Builds a subset from 1-based elements.
    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Self> {
        check_n(n)?;
        let mut bits = 0u32;
        for &e in elements {
            if e == 0 || e > n {
                return usage(format!("element {e} is not in [{n}]"));
            }
            bits |= 1 << (e - 1);
        }
        Ok(Self { n: n as u8, bits })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, full_mask(n))
    }

    /// Crate-internal constructor for encodings already known to fit.
    #[inline]
    pub(crate) fn from_raw(n: usize, bits: u32) -> Self {
        debug_assert!(n <= MAX_N && bits & !full_mask(n) == 0);
        Self { n: n as u8, bits }
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn n(self) -> usize {
        self.n as usize
    }

    /// `|X|`, the Hamming weight of the characteristic vector.
    #[inline]
    pub fn weight(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_odd(self) -> bool {
        self.weight() % 2 == 1
    }

    pub fn contains(self, element: usize) -> bool {
        element >= 1 && element <= self.n() && self.bits >> (element - 1) & 1 == 1
    }

    /// `X △ Y`.
    pub fn symmetric_difference(self, other: Self) -> Result<Self> {
        self.same_ground(other)?;
        Ok(Self { n: self.n, bits: self.bits ^ other.bits })
    }

    pub fn intersection(self, other: Self) -> Result<Self> {
        self.same_ground(other)?;
        Ok(Self { n: self.n, bits: self.bits & other.bits })
    }

    /// `[n] \ X`.
    #[inline]
    pub fn complement(self) -> Self {
        Self { n: self.n, bits: !self.bits & full_mask(self.n()) }
    }

    /// Sorted 1-based elements.
    pub fn elements(self) -> Vec<usize> {
        (1..=self.n()).filter(|&e| self.contains(e)).collect()
    }

    fn same_ground(self, other: Self) -> Result<()> {
        if self.n != other.n {
            return usage(format!(
                "subsets live in different ground sets ([{}] vs [{}])",
                self.n, other.n
            ));
        }
        Ok(())
    }
}

impl fmt::Display for SubsetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Text form of a subset of `[n]`, e.g. `"{1,3,5}"` or `"{}"`.
pub fn format_bits(bits: u32) -> String {
    let mut out = String::from("{");
    let mut first = true;
    for e in 1..=32usize {
        if bits >> (e - 1) & 1 == 1 {
            if !first {
                out.push(',');
            }
            out.push_str(&e.to_string());
            first = false;
        }
    }
    out.push('}');
    out
}

/// Parses `"{1,3}"` (braces optional) into a subset of `[n]`.
pub fn parse_subset(n: usize, text: &str) -> Result<SubsetId> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}').trim();
    if inner.is_empty() {
        return SubsetId::empty(n);
    }
    let elements = inner
        .split(',')
        .map(|s| usize::from_str(s.trim()).map_err(|_| HnkError::Usage(format!("bad element {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    SubsetId::from_elements(n, &elements)
}

/// All subsets of `[n]` of size `s`, ascending by encoding.
pub fn subsets_of_size(n: usize, s: usize) -> Result<Vec<SubsetId>> {
    check_n(n)?;
    if s > n {
        return usage(format!("size {s} exceeds ground-set size {n}"));
    }
    Ok(masks_of_weight(n, s).into_iter().map(|b| SubsetId::from_raw(n, b)).collect())
}

/// Raw encodings of the weight-`s` subsets of `[n]`, ascending.
pub(crate) fn masks_of_weight(n: usize, s: usize) -> Vec<u32> {
    if s > n {
        return Vec::new();
    }
    if s == 0 {
        return vec![0];
    }
    // Gosper's hack walks same-popcount words in increasing order.
    let mut out = Vec::new();
    let limit = 1u64 << n;
    let mut x: u64 = (1u64 << s) - 1;
    while x < limit {
        out.push(x as u32);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn xor_is_associative(n in 1usize..=16, a: u32, b: u32, c: u32) {
            let m = full_mask(n);
            let (x, y, z) = (SubsetId::new(n, a & m).unwrap(), SubsetId::new(n, b & m).unwrap(), SubsetId::new(n, c & m).unwrap());
            let left = x.symmetric_difference(y).unwrap().symmetric_difference(z).unwrap();
            let right = x.symmetric_difference(y.symmetric_difference(z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn text_round_trip(n in 1usize..=16, a: u32) {
            let x = SubsetId::new(n, a & full_mask(n)).unwrap();
            prop_assert_eq!(parse_subset(n, &x.to_string()).unwrap(), x);
        }
    }
}
