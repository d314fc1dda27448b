//! Neighbour-count sequences in exact arithmetic, and brute-force counters
//! to check them against actual graphs.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{usage, HnkError, Result};
use crate::hgraph::HGraph;
use crate::subsets::{full_mask, SubsetId};

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= BigUint::from((a - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SequenceFamily {
    /// `n = 2k-1`: neighbours of a `2m`-set inside the `k`-layer, `1 <= m <= k-1`.
    #[serde(rename = "u-2km1")]
    U2kMinus1,
    /// `n = 2k+1`: neighbours of a `2m`-set inside the `k`-layer, `1 <= m <= k`.
    #[serde(rename = "u-2kp1")]
    U2kPlus1,
    /// `n = 2k+1`: neighbours of a `(2m-1)`-set inside the `(k+1)`-layer,
    /// `1 <= m <= k+1`.
    #[serde(rename = "u-2kp1-odd")]
    U2kPlus1Odd,
    /// The same count with the second binomial's top read as `2k+2m+2`.
    /// Kept only to show it does not match enumeration.
    #[serde(rename = "u-2kp1-odd-alt")]
    U2kPlus1OddAlt,
    /// Common neighbours of `{a}` and a `(2p+1)`-set containing `a`,
    /// `1 <= p <= (k-1)/2`.
    #[serde(rename = "u-general")]
    UGeneral,
    /// Common neighbours of `{a}` and a `(2p+1)`-set avoiding `a`,
    /// `0 <= p <= (k-1)/2`.
    #[serde(rename = "v-general")]
    VGeneral,
}

impl SequenceFamily {
    pub const ALL: [SequenceFamily; 6] = [
        SequenceFamily::U2kMinus1,
        SequenceFamily::U2kPlus1,
        SequenceFamily::U2kPlus1Odd,
        SequenceFamily::U2kPlus1OddAlt,
        SequenceFamily::UGeneral,
        SequenceFamily::VGeneral,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SequenceFamily::U2kMinus1 => "u-2km1",
            SequenceFamily::U2kPlus1 => "u-2kp1",
            SequenceFamily::U2kPlus1Odd => "u-2kp1-odd",
            SequenceFamily::U2kPlus1OddAlt => "u-2kp1-odd-alt",
            SequenceFamily::UGeneral => "u-general",
            SequenceFamily::VGeneral => "v-general",
        }
    }

    /// The ground-set size this family fixes, if any.
    pub fn fixed_n(self, k: usize) -> Option<usize> {
        match self {
            SequenceFamily::U2kMinus1 => Some((2 * k).saturating_sub(1)),
            SequenceFamily::U2kPlus1 | SequenceFamily::U2kPlus1Odd | SequenceFamily::U2kPlus1OddAlt => {
                Some(2 * k + 1)
            }
            SequenceFamily::UGeneral | SequenceFamily::VGeneral => None,
        }
    }

    /// Inclusive index range for a given `k`.
    pub fn index_range(self, k: usize) -> (usize, usize) {
        match self {
            SequenceFamily::U2kMinus1 => (1, k.saturating_sub(1)),
            SequenceFamily::U2kPlus1 => (1, k),
            SequenceFamily::U2kPlus1Odd | SequenceFamily::U2kPlus1OddAlt => (1, k + 1),
            SequenceFamily::UGeneral => (1, k.saturating_sub(1) / 2),
            SequenceFamily::VGeneral => (0, k.saturating_sub(1) / 2),
        }
    }

    fn term(self, n: i64, k: i64, m: i64) -> BigUint {
        match self {
            SequenceFamily::U2kMinus1 => binomial(2 * m, m) * binomial(2 * k - 2 * m - 1, k - m),
            SequenceFamily::U2kPlus1 => binomial(2 * m, m) * binomial(2 * k - 2 * m + 1, k - m),
            SequenceFamily::U2kPlus1Odd => binomial(2 * m - 1, m) * binomial(2 * k - 2 * m + 2, k - m + 1),
            SequenceFamily::U2kPlus1OddAlt => binomial(2 * m - 1, m) * binomial(2 * k + 2 * m + 2, k - m + 1),
            SequenceFamily::UGeneral => binomial(2 * m, m) * binomial(n - 2 * m, k - m),
            SequenceFamily::VGeneral => binomial(2 * m + 2, m + 1) * binomial(n - 2 * m - 2, k - m - 1),
        }
    }
}

impl fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceFamily {
    type Err = HnkError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| HnkError::Usage(format!("unknown sequence family {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceTable {
    pub family: SequenceFamily,
    pub n: usize,
    pub k: usize,
    pub index_start: usize,
    #[serde(serialize_with = "serialize_values")]
    pub values: Vec<BigUint>,
}

fn serialize_values<S: serde::Serializer>(v: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_str_radix(10)))
}

impl SequenceTable {
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.index_start..self.index_start + self.values.len()
    }

    pub fn value(&self, index: usize) -> Result<&BigUint> {
        index
            .checked_sub(self.index_start)
            .and_then(|i| self.values.get(i))
            .ok_or_else(|| HnkError::Usage(format!("index {index} outside the range of {}", self.family)))
    }

    /// Right-aligned `index value` rows.
    pub fn render(&self) -> String {
        let width = self.values.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        let iw = self.indices().last().unwrap_or(0).to_string().len();
        let mut out = format!("{} n={} k={}\n", self.family, self.n, self.k);
        for (i, v) in self.indices().zip(&self.values) {
            out.push_str(&format!("{i:>iw$}  {:>width$}\n", v.to_string()));
        }
        out
    }
}

/// Builds the table for `family` at `k`. The boundary families fix `n`; the
/// general ones need it.
pub fn u_sequence(family: SequenceFamily, k: usize, n: Option<usize>) -> Result<SequenceTable> {
    if k == 0 {
        return usage("k must be at least 1");
    }
    let n = match (family.fixed_n(k), n) {
        (Some(fixed), Some(given)) if fixed != given => {
            return usage(format!("{family} is defined for n = {fixed} at k = {k}, got n = {given}"))
        }
        (Some(fixed), _) => fixed,
        (None, Some(given)) if given >= k => given,
        (None, Some(given)) => return usage(format!("{family} needs n >= k, got n = {given}, k = {k}")),
        (None, None) => return usage(format!("{family} needs n")),
    };
    if family == SequenceFamily::U2kMinus1 && k < 2 {
        return usage("u-2km1 needs k >= 2");
    }
    let (lo, hi) = family.index_range(k);
    let values = (lo..=hi).map(|m| family.term(n as i64, k as i64, m as i64)).collect();
    Ok(SequenceTable { family, n, k, index_start: lo, values })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Step {
    Decrease,
    Equal,
    Increase,
}

impl Step {
    fn of(a: &BigUint, b: &BigUint) -> Step {
        match b.cmp(a) {
            Ordering::Less => Step::Decrease,
            Ordering::Equal => Step::Equal,
            Ordering::Greater => Step::Increase,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepViolation {
    /// The step from `index` to `index + 1`.
    pub index: usize,
    pub expected: Step,
    pub found: Step,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotonicityVerdict {
    pub family: SequenceFamily,
    pub n: usize,
    pub k: usize,
    pub steps_checked: usize,
    pub first_violation: Option<StepViolation>,
}

impl MonotonicityVerdict {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Expected shape of the step `index -> index + 1`, or `None` if the step is
/// outside the claimed window.
fn expected_step(family: SequenceFamily, n: usize, k: usize, index: usize) -> Option<Step> {
    // The boundary families are palindromic valleys: u_m = u_{c-m}.
    let valley = |c: usize| {
        let twice_mid = 2 * index + 1;
        Some(match twice_mid.cmp(&c) {
            Ordering::Less => Step::Decrease,
            Ordering::Equal => Step::Equal,
            Ordering::Greater => Step::Increase,
        })
    };
    match family {
        SequenceFamily::U2kMinus1 => valley(k),
        SequenceFamily::U2kPlus1 | SequenceFamily::U2kPlus1Odd | SequenceFamily::U2kPlus1OddAlt => valley(k + 1),
        SequenceFamily::UGeneral => {
            (n >= 2 * k + 2 && k >= 3 && index >= 1 && index <= (k - 3) / 2).then_some(Step::Decrease)
        }
        SequenceFamily::VGeneral => (n >= 2 * k + 2 && k >= 3 && index <= (k - 3) / 2).then_some(Step::Decrease),
    }
}

/// Checks every step of the table that falls in the family's claimed window:
/// decrease then increase around the centre for the boundary families,
/// strict decrease over the leading range for the general ones.
pub fn monotonicity_check(table: &SequenceTable) -> MonotonicityVerdict {
    let mut steps_checked = 0;
    let mut first_violation = None;
    for (i, pair) in table.values.windows(2).enumerate() {
        let index = table.index_start + i;
        let Some(expected) = expected_step(table.family, table.n, table.k, index) else { continue };
        steps_checked += 1;
        let found = Step::of(&pair[0], &pair[1]);
        if found != expected {
            first_violation = Some(StepViolation { index, expected, found });
            break;
        }
    }
    MonotonicityVerdict { family: table.family, n: table.n, k: table.k, steps_checked, first_violation }
}

/// Whether `u_m = u_{c-m}` wherever both indices are in range, with `c = k`
/// for `u-2km1` and `c = k+1` for the `2k+1` families. `None` for the general
/// families, which have no such symmetry.
pub fn symmetry_holds(table: &SequenceTable) -> Option<bool> {
    let c = match table.family {
        SequenceFamily::U2kMinus1 => table.k,
        SequenceFamily::UGeneral | SequenceFamily::VGeneral => return None,
        _ => table.k + 1,
    };
    Some(table.indices().filter(|&m| m < c).all(|m| match table.value(c - m) {
        Ok(mirror) => table.values[m - table.index_start] == *mirror,
        Err(_) => true,
    }))
}

/// Number of vertices adjacent to both `x` and `y`, optionally only those of
/// the given size.
pub fn common_neighbor_count_bruteforce(
    g: &HGraph,
    x: SubsetId,
    y: SubsetId,
    restrict_to_size: Option<usize>,
) -> Result<usize> {
    g.index_of(x)?;
    g.index_of(y)?;
    Ok(g
        .vertices()
        .filter(|z| restrict_to_size.is_none_or(|s| z.weight() == s))
        .filter(|&z| g.is_adjacent(x, z) && g.is_adjacent(y, z))
        .count())
}

fn first_elements(n: usize, from: usize, count: usize) -> SubsetId {
    let bits = ((1u32 << count) - 1) << (from - 1);
    SubsetId::new(n, bits & full_mask(n)).expect("within range")
}

/// The same table computed by enumeration on `H(n,k)`, using the first
/// elements of `[n]` as the sets in question.
pub fn bruteforce_sequence(g: &HGraph, family: SequenceFamily) -> Result<Vec<usize>> {
    let (n, k) = (g.n(), g.k());
    if let Some(fixed) = family.fixed_n(k) {
        if fixed != n {
            return usage(format!("{family} is defined for n = {fixed} at k = {k}"));
        }
    }
    let (lo, hi) = family.index_range(k);
    let a = first_elements(n, 1, 1);
    (lo..=hi)
        .map(|m| match family {
            SequenceFamily::U2kMinus1 | SequenceFamily::U2kPlus1 => {
                let x = first_elements(n, 1, 2 * m);
                common_neighbor_count_bruteforce(g, x, x, Some(k))
            }
            SequenceFamily::U2kPlus1Odd | SequenceFamily::U2kPlus1OddAlt => {
                let x = first_elements(n, 1, 2 * m - 1);
                common_neighbor_count_bruteforce(g, x, x, Some(k + 1))
            }
            SequenceFamily::UGeneral => {
                common_neighbor_count_bruteforce(g, a, first_elements(n, 1, 2 * m + 1), None)
            }
            SequenceFamily::VGeneral => {
                common_neighbor_count_bruteforce(g, a, first_elements(n, 2, 2 * m + 1), None)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hgraph::{build_graph, GraphParams};

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn small_binomial(a: u64, b: u64) -> u64 {
        (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
    }

    #[test]
    fn binomial_matches_pascal_and_boundaries() {
        for a in 0..40i64 {
            for b in 0..=a {
                let expected = if b == 0 || b == a {
                    big(1)
                } else {
                    binomial(a - 1, b - 1) + binomial(a - 1, b)
                };
                assert_eq!(binomial(a, b), expected);
            }
            assert_eq!(binomial(a, -1), big(0));
            assert_eq!(binomial(a, a + 1), big(0));
        }
        assert_eq!(binomial(10, 4), big(small_binomial(10, 4)));
        assert_eq!(binomial(100, 50).to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn table_examples() {
        let t = u_sequence(SequenceFamily::U2kMinus1, 3, None).unwrap();
        assert_eq!(t.values, vec![big(6), big(6)]);
        let t = u_sequence(SequenceFamily::UGeneral, 3, Some(8)).unwrap();
        assert_eq!(t.values, vec![big(30)]);
        assert_eq!(*t.value(1).unwrap(), big(30));
        assert!(t.value(2).is_err());
        let t = u_sequence(SequenceFamily::VGeneral, 5, Some(12)).unwrap();
        assert_eq!(*t.value(0).unwrap(), big(420));
        assert_eq!(*t.value(0).unwrap(), big(2) * binomial(10, 4));
        assert!(u_sequence(SequenceFamily::U2kMinus1, 3, Some(7)).is_err());
        assert!(u_sequence(SequenceFamily::UGeneral, 3, None).is_err());
        assert!(u_sequence(SequenceFamily::U2kMinus1, 1, None).is_err());
        assert!("u-2kp2".parse::<SequenceFamily>().is_err());
        for f in SequenceFamily::ALL {
            assert_eq!(f.as_str().parse::<SequenceFamily>().unwrap(), f);
        }
    }

    #[test]
    fn monotonicity_examples() {
        let t = u_sequence(SequenceFamily::UGeneral, 7, Some(16)).unwrap();
        let v = monotonicity_check(&t);
        assert!(v.holds());
        assert_eq!(v.steps_checked, 2);
        assert!(t.values[0] > t.values[1] && t.values[1] > t.values[2]);

        let t = u_sequence(SequenceFamily::U2kMinus1, 5, None).unwrap();
        assert_eq!(t.values, vec![big(70), big(60), big(60), big(70)]);
        let v = monotonicity_check(&t);
        assert!(v.holds());
        assert_eq!(v.steps_checked, 3);

        let t = u_sequence(SequenceFamily::U2kPlus1, 3, None).unwrap();
        assert_eq!(t.values, vec![big(20), big(18), big(20)]);
        assert!(monotonicity_check(&t).holds());

        // A table that is not a valley is caught.
        let bad = SequenceTable { values: vec![big(1), big(2), big(3), big(4)], ..t };
        let v = monotonicity_check(&bad);
        assert_eq!(v.first_violation, Some(StepViolation { index: 1, expected: Step::Decrease, found: Step::Increase }));
    }

    #[test]
    fn alternative_odd_reading_breaks_symmetry() {
        let t = u_sequence(SequenceFamily::U2kPlus1OddAlt, 3, None).unwrap();
        assert_eq!(t.values, vec![big(120), big(198), big(140), big(35)]);
        assert_eq!(symmetry_holds(&t), Some(false));
        let t = u_sequence(SequenceFamily::U2kPlus1Odd, 3, None).unwrap();
        assert_eq!(t.values, vec![big(20), big(18), big(20), big(35)]);
        assert_eq!(symmetry_holds(&t), Some(true));
        for k in 1..=25 {
            for f in [SequenceFamily::U2kMinus1, SequenceFamily::U2kPlus1, SequenceFamily::U2kPlus1Odd] {
                if let Ok(t) = u_sequence(f, k, None) {
                    assert_eq!(symmetry_holds(&t), Some(true), "{f} k={k}");
                }
            }
        }
    }

    #[test]
    fn bruteforce_examples() {
        let g = build_graph(GraphParams::whole(5, 3).unwrap()).unwrap();
        let x = SubsetId::from_elements(5, &[1, 2]).unwrap();
        assert_eq!(common_neighbor_count_bruteforce(&g, x, x, Some(3)).unwrap(), 6);
        let g = build_graph(GraphParams::whole(9, 3).unwrap()).unwrap();
        let a = SubsetId::from_elements(9, &[1]).unwrap();
        let b = SubsetId::from_elements(9, &[2]).unwrap();
        assert_eq!(common_neighbor_count_bruteforce(&g, a, b, None).unwrap(), 42);
        assert_eq!(common_neighbor_count_bruteforce(&g, a, a, None).unwrap(), 84);
    }
}
