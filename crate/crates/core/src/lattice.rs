//! Grid-valued membership degrees and pointwise lattice operations.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Ordered, non-empty list of distinct point labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Carrier {
    labels: Vec<String>,
}

impl Carrier {
    /// Labels must be non-empty, free of whitespace and `#`, and unique.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if label.is_empty() || label.chars().any(|c| c.is_whitespace() || c == '#' || c == ',') {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Carrier { labels })
    }

    /// `a`, `b`, ..., `z`, then `p26`, `p27`, ...
    pub fn alphabetic(n: usize) -> Result<Self> {
        Carrier::new((0..n).map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("p{i}")
            }
        }))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false; carriers are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sub-carrier keeping the given positions, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> Result<Self> {
        Carrier::new(keep.iter().map(|&i| self.labels[i].clone()))
    }
}

/// A single membership degree `numerator / denominator`.
///
/// Comparison is by value, so `1/2 == 2/4`.
#[derive(Debug, Clone, Copy)]
pub struct Degree {
    numerator: u32,
    denominator: u32,
}

impl Degree {
    pub fn new(numerator: u32, denominator: u32) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::ZeroDenominator);
        }
        if numerator > denominator {
            return Err(Error::OutOfRange {
                index: 0,
                value: numerator,
                denominator,
            });
        }
        Ok(Degree { numerator, denominator })
    }

    pub fn numerator(self) -> u32 {
        self.numerator
    }

    pub fn denominator(self) -> u32 {
        self.denominator
    }

    pub fn complement(self) -> Self {
        Degree {
            numerator: self.denominator - self.numerator,
            denominator: self.denominator,
        }
    }
}

impl PartialEq for Degree {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Degree {}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = u64::from(self.numerator) * u64::from(other.denominator);
        let rhs = u64::from(other.numerator) * u64::from(self.denominator);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// A fuzzy set over a finite carrier with degrees on the grid `{0, 1/d, ..., 1}`.
///
/// Only numerators are stored; the denominator is shared by every set of a
/// space. Two sets are equal when carrier, denominator and numerators agree.
/// The total order (`Ord`) is lexicographic on the numerator vector and is
/// used for canonical family ordering; it is unrelated to the pointwise
/// partial order given by [`FuzzySet::leq`].
#[derive(Clone)]
pub struct FuzzySet {
    carrier: Arc<Carrier>,
    denominator: u32,
    values: Vec<u32>,
}

impl FuzzySet {
    pub fn new(carrier: Arc<Carrier>, denominator: u32, values: Vec<u32>) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::ZeroDenominator);
        }
        if values.len() != carrier.len() {
            return Err(Error::LengthMismatch {
                expected: carrier.len(),
                found: values.len(),
            });
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, &v)| v > denominator) {
            return Err(Error::OutOfRange {
                index,
                value,
                denominator,
            });
        }
        Ok(FuzzySet {
            carrier,
            denominator,
            values,
        })
    }

    /// `0_X`.
    pub fn empty(carrier: Arc<Carrier>, denominator: u32) -> Result<Self> {
        let n = carrier.len();
        FuzzySet::new(carrier, denominator, alloc::vec![0; n])
    }

    /// `1_X`.
    pub fn full(carrier: Arc<Carrier>, denominator: u32) -> Result<Self> {
        let n = carrier.len();
        FuzzySet::new(carrier, denominator, alloc::vec![denominator; n])
    }

    pub(crate) fn from_parts_unchecked(carrier: Arc<Carrier>, denominator: u32, values: Vec<u32>) -> Self {
        debug_assert_eq!(values.len(), carrier.len());
        debug_assert!(values.iter().all(|&v| v <= denominator));
        FuzzySet {
            carrier,
            denominator,
            values,
        }
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn denominator(&self) -> u32 {
        self.denominator
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn degree(&self, index: usize) -> Degree {
        Degree {
            numerator: self.values[index],
            denominator: self.denominator,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn is_one(&self) -> bool {
        self.values.iter().all(|&v| v == self.denominator)
    }

    /// Every degree is 0 or 1.
    pub fn is_crisp(&self) -> bool {
        self.values.iter().all(|&v| v == 0 || v == self.denominator)
    }

    /// Same carrier and denominator.
    pub fn check_compatible(&self, other: &FuzzySet) -> Result<()> {
        if !same_carrier(&self.carrier, &other.carrier) {
            return Err(Error::CarrierMismatch);
        }
        if self.denominator != other.denominator {
            return Err(Error::DenominatorMismatch {
                left: self.denominator,
                right: other.denominator,
            });
        }
        Ok(())
    }

    pub fn meet(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.check_compatible(other)?;
        Ok(self.min_with(other))
    }

    pub fn join(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.check_compatible(other)?;
        Ok(self.max_with(other))
    }

    /// `x -> 1 - A(x)`.
    pub fn complement(&self) -> FuzzySet {
        let d = self.denominator;
        FuzzySet {
            carrier: self.carrier.clone(),
            denominator: d,
            values: self.values.iter().map(|&v| d - v).collect(),
        }
    }

    /// Pointwise `A(x) <= B(x)`.
    pub fn leq(&self, other: &FuzzySet) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.le_pointwise(other))
    }

    /// `A <= B` and `A != B`.
    pub fn strictly_below(&self, other: &FuzzySet) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.le_pointwise(other) && self.values != other.values)
    }

    /// Points where `A(x) - B(x) > 0`, in carrier order.
    pub fn positive_difference_support(&self, other: &FuzzySet) -> Result<Vec<usize>> {
        self.check_compatible(other)?;
        Ok(self.above_points(other))
    }

    /// Rescale to a new denominator. Fails unless every degree lands on the new grid.
    pub fn regrid(&self, denominator: u32) -> Result<FuzzySet> {
        if denominator == 0 {
            return Err(Error::ZeroDenominator);
        }
        let from = self.denominator;
        let values = self
            .values
            .iter()
            .map(|&v| {
                let scaled = u64::from(v) * u64::from(denominator);
                if scaled % u64::from(from) == 0 {
                    Ok((scaled / u64::from(from)) as u32)
                } else {
                    Err(Error::InexactRegrid { from, to: denominator })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FuzzySet {
            carrier: self.carrier.clone(),
            denominator,
            values,
        })
    }

    /// Projection onto the carrier positions in `keep`.
    pub fn restrict(&self, carrier: Arc<Carrier>, keep: &[usize]) -> Result<FuzzySet> {
        FuzzySet::new(
            carrier,
            self.denominator,
            keep.iter().map(|&i| self.values[i]).collect(),
        )
    }

    pub(crate) fn min_with(&self, other: &FuzzySet) -> FuzzySet {
        self.zip_with(other, u32::min)
    }

    pub(crate) fn max_with(&self, other: &FuzzySet) -> FuzzySet {
        self.zip_with(other, u32::max)
    }

    pub(crate) fn le_pointwise(&self, other: &FuzzySet) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    pub(crate) fn above_points(&self, other: &FuzzySet) -> Vec<usize> {
        self.values
            .iter()
            .zip(&other.values)
            .enumerate()
            .filter(|(_, (a, b))| a > b)
            .map(|(i, _)| i)
            .collect()
    }

    fn zip_with(&self, other: &FuzzySet, f: impl Fn(u32, u32) -> u32) -> FuzzySet {
        FuzzySet {
            carrier: self.carrier.clone(),
            denominator: self.denominator,
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b)).collect(),
        }
    }
}

pub(crate) fn same_carrier(a: &Arc<Carrier>, b: &Arc<Carrier>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Pointwise infimum of a non-empty family.
pub fn family_inf(family: &[FuzzySet]) -> Result<FuzzySet> {
    fold_family(family, FuzzySet::min_with)
}

/// Pointwise supremum of a non-empty family.
pub fn family_sup(family: &[FuzzySet]) -> Result<FuzzySet> {
    fold_family(family, FuzzySet::max_with)
}

fn fold_family(family: &[FuzzySet], f: fn(&FuzzySet, &FuzzySet) -> FuzzySet) -> Result<FuzzySet> {
    let (first, rest) = family.split_first().ok_or(Error::EmptyFamily)?;
    rest.iter().try_fold(first.clone(), |acc, s| {
        acc.check_compatible(s)?;
        Ok(f(&acc, s))
    })
}

impl PartialEq for FuzzySet {
    fn eq(&self, other: &Self) -> bool {
        self.denominator == other.denominator
            && self.values == other.values
            && same_carrier(&self.carrier, &other.carrier)
    }
}

impl Eq for FuzzySet {}

impl PartialOrd for FuzzySet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FuzzySet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.values
            .cmp(&other.values)
            .then(self.denominator.cmp(&other.denominator))
            .then_with(|| {
                if Arc::ptr_eq(&self.carrier, &other.carrier) {
                    Ordering::Equal
                } else {
                    self.carrier.cmp(&other.carrier)
                }
            })
    }
}

impl core::hash::Hash for FuzzySet {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.denominator.hash(state);
        self.values.hash(state);
    }
}

/// Numerators separated by single spaces, e.g. `3 4`.
impl fmt::Display for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (label, v)) in self.carrier.labels().iter().zip(&self.values).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{label}:{v}")?;
        }
        write!(f, "}}/{}", self.denominator)
    }
}
