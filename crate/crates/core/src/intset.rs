//! Finite sets of non-negative integers and their additive structure.
//!
//! [`IntegerSet`] is the label type used everywhere in the crate. It is kept in
//! canonical ascending order with no duplicates and is never empty. All
//! arithmetic is exact: a result element above the configured bound is an
//! error, never a wrapped value.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest element accepted by the default constructors and operators.
pub const DEFAULT_ELEMENT_BOUND: u64 = 1 << 48;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("integer set must be non-empty")]
    Empty,
    #[error("element {element} exceeds the element bound {bound}")]
    ElementOutOfBound { element: u64, bound: u64 },
    #[error("sum of {a} and {b} exceeds the element bound {bound}")]
    SumOverflow { a: u64, b: u64, bound: u64 },
    #[error("{multiplier} * {element} exceeds the element bound {bound}")]
    MultipleOverflow { multiplier: u64, element: u64, bound: u64 },
    #[error("integral multiple requires a positive multiplier")]
    ZeroMultiplier,
}

/// A finite, non-empty set of non-negative integers in ascending order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct IntegerSet(Vec<u64>);

impl IntegerSet {
    /// Builds a set from arbitrary elements, sorting and removing duplicates.
    pub fn new<I: IntoIterator<Item = u64>>(elements: I) -> Result<Self, SetError> {
        Self::with_bound(elements, DEFAULT_ELEMENT_BOUND)
    }

    pub fn with_bound<I: IntoIterator<Item = u64>>(
        elements: I,
        bound: u64,
    ) -> Result<Self, SetError> {
        let mut elements: Vec<u64> = elements.into_iter().collect();
        if elements.is_empty() {
            return Err(SetError::Empty);
        }
        elements.sort_unstable();
        elements.dedup();
        if let Some(&element) = elements.last().filter(|&&e| e > bound) {
            return Err(SetError::ElementOutOfBound { element, bound });
        }
        Ok(IntegerSet(elements))
    }

    pub fn singleton(element: u64) -> Result<Self, SetError> {
        Self::new([element])
    }

    /// Wraps an already sorted, deduplicated, non-empty vector.
    pub(crate) fn from_sorted_unchecked(elements: Vec<u64>) -> Self {
        debug_assert!(!elements.is_empty());
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        IntegerSet(elements)
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn min_element(&self) -> u64 {
        self.0[0]
    }

    pub fn max_element(&self) -> u64 {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, element: u64) -> bool {
        self.0.binary_search(&element).is_ok()
    }

    pub fn is_subset(&self, other: &IntegerSet) -> bool {
        self.iter().all(|e| other.contains(e))
    }

    /// Orders by cardinality first, then lexicographically. Search pools use
    /// this order so that small labels are tried first.
    pub fn cmp_by_size(&self, other: &IntegerSet) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }

    /// The sum set `{a + b : a in self, b in other}`.
    pub fn sumset(&self, other: &IntegerSet) -> Result<IntegerSet, SetError> {
        self.sumset_within(other, DEFAULT_ELEMENT_BOUND)
    }

    pub fn sumset_within(&self, other: &IntegerSet, bound: u64) -> Result<IntegerSet, SetError> {
        if self.max_element().checked_add(other.max_element()).is_none_or(|m| m > bound) {
            // report the first offending pair in canonical order
            for a in self.iter() {
                if let Some(b) = other.iter().find(|&b| a.checked_add(b).is_none_or(|s| s > bound)) {
                    return Err(SetError::SumOverflow { a, b, bound });
                }
            }
        }
        let mut sums = Vec::with_capacity(self.len() * other.len());
        for a in self.iter() {
            sums.extend(other.iter().map(|b| a + b));
        }
        sums.sort_unstable();
        sums.dedup();
        Ok(IntegerSet(sums))
    }

    /// The integral multiple `{n * a : a in self}`.
    pub fn multiple(&self, n: u64) -> Result<IntegerSet, SetError> {
        self.multiple_within(n, DEFAULT_ELEMENT_BOUND)
    }

    pub fn multiple_within(&self, n: u64, bound: u64) -> Result<IntegerSet, SetError> {
        if n == 0 {
            return Err(SetError::ZeroMultiplier);
        }
        let mut out = Vec::with_capacity(self.len());
        for element in self.iter() {
            match element.checked_mul(n) {
                Some(v) if v <= bound => out.push(v),
                _ => {
                    return Err(SetError::MultipleOverflow {
                        multiplier: n,
                        element,
                        bound,
                    })
                }
            }
        }
        Ok(IntegerSet(out))
    }

    /// Adds `offset` to every element.
    pub fn translate(&self, offset: u64) -> Result<IntegerSet, SetError> {
        let mut out = Vec::with_capacity(self.len());
        for element in self.iter() {
            match element.checked_add(offset) {
                Some(v) if v <= DEFAULT_ELEMENT_BOUND => out.push(v),
                _ => {
                    return Err(SetError::SumOverflow {
                        a: element,
                        b: offset,
                        bound: DEFAULT_ELEMENT_BOUND,
                    })
                }
            }
        }
        Ok(IntegerSet(out))
    }

    pub fn difference_set(&self) -> DifferenceSet {
        let mut diffs = Vec::with_capacity(self.len() * self.len().saturating_sub(1) / 2);
        for (i, &a) in self.0.iter().enumerate() {
            diffs.extend(self.0[i + 1..].iter().map(|&b| b - a));
        }
        diffs.sort_unstable();
        diffs.dedup();
        DifferenceSet(diffs)
    }

    pub fn compatibility_table(&self, other: &IntegerSet) -> CompatibilityTable {
        CompatibilityTable::build(self, other)
    }
}

impl TryFrom<Vec<u64>> for IntegerSet {
    type Error = SetError;

    fn try_from(value: Vec<u64>) -> Result<Self, Self::Error> {
        IntegerSet::new(value)
    }
}

impl From<IntegerSet> for Vec<u64> {
    fn from(value: IntegerSet) -> Self {
        value.0
    }
}

impl fmt::Debug for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Positive differences between distinct elements of a set. May be empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DifferenceSet(Vec<u64>);

impl DifferenceSet {
    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, d: u64) -> bool {
        self.0.binary_search(&d).is_ok()
    }

    /// Smallest difference shared with `other`, if any.
    pub fn first_common(&self, other: &DifferenceSet) -> Option<u64> {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return Some(self.0[i]),
            }
        }
        None
    }

    pub fn is_disjoint(&self, other: &DifferenceSet) -> bool {
        self.first_common(other).is_none()
    }
}

/// Partition of `A x B` into classes of pairs sharing the same sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatibilityTable {
    /// Sum value to the ordered pairs realizing it. Only realized sums appear.
    pub classes: BTreeMap<u64, Vec<(u64, u64)>>,
    /// Number of classes; equals the cardinality of the sum set.
    pub index: usize,
    /// `|A| * |B| - index`.
    pub neglecting_number: usize,
    pub max_class_size: usize,
    /// Sums whose class reaches the largest possible size `min(|A|, |B|)`.
    pub saturated_sums: Vec<u64>,
}

impl CompatibilityTable {
    pub fn build(a: &IntegerSet, b: &IntegerSet) -> Self {
        let mut classes: BTreeMap<u64, Vec<(u64, u64)>> = BTreeMap::new();
        for x in a.iter() {
            for y in b.iter() {
                // saturating: a table is only ever built for in-bound labels
                classes.entry(x.saturating_add(y)).or_default().push((x, y));
            }
        }
        let index = classes.len();
        let pairs = a.len() * b.len();
        let cap = a.len().min(b.len());
        let max_class_size = classes.values().map(Vec::len).max().unwrap_or(0);
        let saturated_sums = classes
            .iter()
            .filter(|(_, members)| members.len() == cap)
            .map(|(&k, _)| k)
            .collect();
        CompatibilityTable {
            classes,
            index,
            neglecting_number: pairs - index,
            max_class_size,
            saturated_sums,
        }
    }

    pub fn class(&self, sum: u64) -> Option<&[(u64, u64)]> {
        self.classes.get(&sum).map(Vec::as_slice)
    }

    pub fn pair_count(&self) -> usize {
        self.classes.values().map(Vec::len).sum()
    }
}

pub fn sumset(a: &IntegerSet, b: &IntegerSet) -> Result<IntegerSet, SetError> {
    a.sumset(b)
}

pub fn integral_multiple(n: u64, a: &IntegerSet) -> Result<IntegerSet, SetError> {
    a.multiple(n)
}

pub fn difference_set(a: &IntegerSet) -> DifferenceSet {
    a.difference_set()
}

pub fn compatibility_table(a: &IntegerSet, b: &IntegerSet) -> CompatibilityTable {
    CompatibilityTable::build(a, b)
}

/// Every non-empty subset of `{0..=max_element}` with at most `max_size`
/// elements, ordered by size then lexicographically.
pub fn subsets_up_to(max_element: u64, max_size: usize) -> Vec<IntegerSet> {
    let universe: Vec<u64> = (0..=max_element).collect();
    subsets_of(&universe, 1, max_size)
}

/// Subsets of `universe` with cardinality in `min_size..=max_size`, ordered by
/// size then lexicographically. `universe` must be ascending.
pub fn subsets_of(universe: &[u64], min_size: usize, max_size: usize) -> Vec<IntegerSet> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    for size in min_size.max(1)..=max_size.min(universe.len()) {
        combinations(universe, size, 0, &mut current, &mut out);
    }
    out
}

fn combinations(
    universe: &[u64],
    size: usize,
    start: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<IntegerSet>,
) {
    if current.len() == size {
        out.push(IntegerSet::from_sorted_unchecked(current.clone()));
        return;
    }
    let needed = size - current.len();
    for i in start..=universe.len() - needed {
        current.push(universe[i]);
        combinations(universe, size, i + 1, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u64]) -> IntegerSet {
        IntegerSet::new(xs.iter().copied()).unwrap()
    }

    /// Brute-force pair enumeration, independent of `sumset`.
    fn pair_sums(a: &[u64], b: &[u64]) -> std::collections::BTreeSet<u64> {
        a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect()
    }

    #[test]
    fn canonical_construction() {
        assert_eq!(set(&[3, 1, 2, 1]).elements(), &[1, 2, 3]);
        assert_eq!(IntegerSet::new([]), Err(SetError::Empty));
        assert!(matches!(
            IntegerSet::with_bound([5, 11], 10),
            Err(SetError::ElementOutOfBound { element: 11, bound: 10 })
        ));
    }

    #[test]
    fn sumset_examples() {
        let expected: Vec<u64> = pair_sums(&[1, 2], &[3, 4]).into_iter().collect();
        assert_eq!(expected, vec![4, 5, 6]);
        assert_eq!(set(&[1, 2]).sumset(&set(&[3, 4])).unwrap(), set(&[4, 5, 6]));
        assert_eq!(set(&[0]).sumset(&set(&[5, 9])).unwrap(), set(&[5, 9]));
        let full = set(&[1, 2]).sumset(&set(&[1, 3])).unwrap();
        assert_eq!(full, set(&[2, 3, 4, 5]));
        assert_eq!(full.len(), 4);
    }

    #[test]
    fn sumset_overflow_names_first_pair() {
        let a = set(&[1, 6]);
        let b = set(&[2, 5]);
        assert_eq!(
            a.sumset_within(&b, 7),
            Err(SetError::SumOverflow { a: 6, b: 2, bound: 7 })
        );
        assert!(a.sumset_within(&b, 11).is_ok());
    }

    #[test]
    fn multiple_examples() {
        assert_eq!(set(&[1, 3]).multiple(2).unwrap(), set(&[2, 6]));
        assert_eq!(set(&[0, 7]).multiple(1).unwrap(), set(&[0, 7]));
        assert_eq!(set(&[0]).multiple(3).unwrap(), set(&[0]));
        assert_eq!(set(&[1]).multiple(0), Err(SetError::ZeroMultiplier));
        assert!(matches!(
            set(&[1, 4]).multiple_within(3, 10),
            Err(SetError::MultipleOverflow { multiplier: 3, element: 4, .. })
        ));
    }

    #[test]
    fn difference_set_examples() {
        assert_eq!(set(&[1, 2, 4]).difference_set().elements(), &[1, 2, 3]);
        assert!(set(&[5]).difference_set().is_empty());
        assert_eq!(set(&[0, 2, 4]).difference_set().elements(), &[2, 4]);
    }

    #[test]
    fn compatibility_examples() {
        let t = set(&[1, 2]).compatibility_table(&set(&[1, 2]));
        assert_eq!(t.class(2).unwrap(), &[(1, 1)]);
        assert_eq!(t.class(3).unwrap(), &[(1, 2), (2, 1)]);
        assert_eq!(t.class(4).unwrap(), &[(2, 2)]);
        assert_eq!((t.index, t.neglecting_number), (3, 1));
        assert_eq!(t.saturated_sums, vec![3]);

        let t = set(&[0]).compatibility_table(&set(&[4, 7]));
        assert_eq!((t.index, t.neglecting_number), (2, 0));
        assert!(t.classes.values().all(|c| c.len() == 1));

        let t = set(&[1, 2]).compatibility_table(&set(&[5, 6]));
        assert_eq!((t.index, t.neglecting_number), (3, 1));
        assert_eq!(t.class(7).unwrap().len(), 2);
        assert_eq!(t.saturated_sums, vec![7]);
        assert_eq!(t.class(9), None);
    }

    #[test]
    fn subset_enumeration_order() {
        let subsets = subsets_up_to(2, 2);
        let shown: Vec<String> = subsets.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}"]);
        assert_eq!(subsets_up_to(8, 9).len(), 511);
    }

    #[test]
    fn serde_shape() {
        let s = set(&[4, 1]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,4]");
        let back: IntegerSet = serde_json::from_str("[4,1,1]").unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<IntegerSet>("[]").is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_set() -> impl Strategy<Value = IntegerSet> {
            proptest::collection::btree_set(0u64..40, 1..7)
                .prop_map(|s| IntegerSet::new(s).unwrap())
        }

        proptest! {
            #[test]
            fn sumset_matches_pair_enumeration(a in small_set(), b in small_set()) {
                let got = a.sumset(&b).unwrap();
                let want: Vec<u64> = pair_sums(a.elements(), b.elements()).into_iter().collect();
                prop_assert_eq!(got.elements(), want.as_slice());
            }

            #[test]
            fn sumset_commutative_associative(a in small_set(), b in small_set(), c in small_set()) {
                prop_assert_eq!(a.sumset(&b).unwrap(), b.sumset(&a).unwrap());
                let left = a.sumset(&b).unwrap().sumset(&c).unwrap();
                let right = a.sumset(&b.sumset(&c).unwrap()).unwrap();
                prop_assert_eq!(left, right);
            }

            #[test]
            fn table_partitions_product(a in small_set(), b in small_set()) {
                let t = a.compatibility_table(&b);
                prop_assert_eq!(t.pair_count(), a.len() * b.len());
                prop_assert!(t.max_class_size <= a.len().min(b.len()));
                prop_assert_eq!(t.index, a.sumset(&b).unwrap().len());
                let excess: usize = t.classes.values().map(|c| c.len() - 1).sum();
                prop_assert_eq!(excess, t.neglecting_number);
            }
        }
    }
}
