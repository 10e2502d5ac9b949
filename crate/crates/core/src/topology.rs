//! Finite fuzzy topologies with their closure and interior operators.
//!
//! Families are finite, so closure under arbitrary joins reduces to closure
//! under pairwise joins. Every family is kept deduplicated and sorted in the
//! lexicographic order of numerator vectors, which makes all output
//! deterministic.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{same_carrier, Carrier, FuzzySet};

/// Default upper bound on the size of a completed family.
pub const DEFAULT_COMPLETION_CAP: usize = 4096;

/// A way in which a family fails the fuzzy topology axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Member at this position is on another carrier or grid.
    ForeignMember {
        index: usize,
    },
    MissingBottom,
    MissingTop,
    MissingMeet {
        left: FuzzySet,
        right: FuzzySet,
        meet: FuzzySet,
    },
    MissingJoin {
        left: FuzzySet,
        right: FuzzySet,
        join: FuzzySet,
    },
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Violation::ForeignMember { index } => {
                write!(f, "member #{index} is not on the space's carrier and denominator")
            }
            Violation::MissingBottom => f.write_str("missing 0_X (empty set must be open)"),
            Violation::MissingTop => f.write_str("missing 1_X (whole space must be open)"),
            Violation::MissingMeet { left, right, meet } => {
                write!(f, "missing meet: ({left}) ^ ({right}) = ({meet}) is not open")
            }
            Violation::MissingJoin { left, right, join } => {
                write!(f, "missing join: ({left}) v ({right}) = ({join}) is not open")
            }
        }
    }
}

/// Check a family against the axioms. An empty result means the family is a topology.
pub fn validate_family(carrier: &Arc<Carrier>, denominator: u32, family: &[FuzzySet]) -> Vec<Violation> {
    let mut violations = Vec::new();
    let mut members = BTreeSet::new();
    for (index, s) in family.iter().enumerate() {
        if s.denominator() != denominator || !same_carrier(s.carrier(), carrier) {
            violations.push(Violation::ForeignMember { index });
        } else {
            members.insert(s.clone());
        }
    }
    if !members.iter().any(FuzzySet::is_zero) {
        violations.push(Violation::MissingBottom);
    }
    if !members.iter().any(FuzzySet::is_one) {
        violations.push(Violation::MissingTop);
    }
    let members: Vec<FuzzySet> = members.into_iter().collect();
    for (i, left) in members.iter().enumerate() {
        for right in &members[i + 1..] {
            let meet = left.min_with(right);
            if members.binary_search(&meet).is_err() {
                violations.push(Violation::MissingMeet {
                    left: left.clone(),
                    right: right.clone(),
                    meet,
                });
            }
            let join = left.max_with(right);
            if members.binary_search(&join).is_err() {
                violations.push(Violation::MissingJoin {
                    left: left.clone(),
                    right: right.clone(),
                    join,
                });
            }
        }
    }
    violations
}

/// Smallest topology containing `generators`.
///
/// Iterates meet/join closure to a fixpoint and fails once the family grows
/// past `cap` members.
pub fn complete_family(
    carrier: &Arc<Carrier>,
    denominator: u32,
    generators: &[FuzzySet],
    cap: usize,
) -> Result<FuzzyTopology> {
    let mut family = BTreeSet::new();
    let mut pending = Vec::new();
    let bottom = FuzzySet::empty(carrier.clone(), denominator)?;
    let top = FuzzySet::full(carrier.clone(), denominator)?;
    for g in generators {
        bottom.check_compatible(g)?;
    }
    for s in [bottom, top].into_iter().chain(generators.iter().cloned()) {
        if family.insert(s.clone()) {
            pending.push(s);
        }
    }
    if family.len() > cap {
        return Err(Error::CompletionOverflow { cap });
    }
    while let Some(next) = pending.pop() {
        let mut fresh = Vec::new();
        for member in &family {
            for candidate in [next.min_with(member), next.max_with(member)] {
                if !family.contains(&candidate) && !fresh.contains(&candidate) {
                    fresh.push(candidate);
                }
            }
        }
        for s in fresh {
            family.insert(s.clone());
            pending.push(s);
        }
        if family.len() > cap {
            return Err(Error::CompletionOverflow { cap });
        }
    }
    Ok(FuzzyTopology::from_sorted_unchecked(
        carrier.clone(),
        denominator,
        family.into_iter().collect(),
    ))
}

/// A finite fuzzy topology: the open family and its closed dual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyTopology {
    carrier: Arc<Carrier>,
    denominator: u32,
    opens: Vec<FuzzySet>,
    closeds: Vec<FuzzySet>,
}

impl FuzzyTopology {
    /// Build from an explicit open family; duplicates are merged, violations are errors.
    pub fn new(carrier: Arc<Carrier>, denominator: u32, family: Vec<FuzzySet>) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::ZeroDenominator);
        }
        let violations = validate_family(&carrier, denominator, &family);
        if !violations.is_empty() {
            return Err(Error::InvalidTopology(violations));
        }
        let mut opens = family;
        opens.sort();
        opens.dedup();
        Ok(FuzzyTopology::from_sorted_unchecked(carrier, denominator, opens))
    }

    /// `{0_X, 1_X}`.
    pub fn indiscrete(carrier: Arc<Carrier>, denominator: u32) -> Result<Self> {
        let opens = alloc::vec![
            FuzzySet::empty(carrier.clone(), denominator)?,
            FuzzySet::full(carrier.clone(), denominator)?,
        ];
        Ok(FuzzyTopology::from_sorted_unchecked(carrier, denominator, opens))
    }

    pub(crate) fn from_sorted_unchecked(carrier: Arc<Carrier>, denominator: u32, opens: Vec<FuzzySet>) -> Self {
        debug_assert!(opens.windows(2).all(|w| w[0] < w[1]));
        let mut closeds: Vec<FuzzySet> = opens.iter().map(FuzzySet::complement).collect();
        closeds.sort();
        FuzzyTopology {
            carrier,
            denominator,
            opens,
            closeds,
        }
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn denominator(&self) -> u32 {
        self.denominator
    }

    /// Open sets in canonical order.
    pub fn opens(&self) -> &[FuzzySet] {
        &self.opens
    }

    /// Complements of the open sets, in canonical order.
    pub fn closed_sets(&self) -> &[FuzzySet] {
        &self.closeds
    }

    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opens.is_empty()
    }

    pub fn bottom(&self) -> FuzzySet {
        FuzzySet::from_parts_unchecked(
            self.carrier.clone(),
            self.denominator,
            alloc::vec![0; self.carrier.len()],
        )
    }

    pub fn top(&self) -> FuzzySet {
        FuzzySet::from_parts_unchecked(
            self.carrier.clone(),
            self.denominator,
            alloc::vec![self.denominator; self.carrier.len()],
        )
    }

    /// Build a set on this space's grid.
    pub fn set(&self, values: &[u32]) -> Result<FuzzySet> {
        FuzzySet::new(self.carrier.clone(), self.denominator, values.to_vec())
    }

    /// Every open set is crisp.
    pub fn is_crisp(&self) -> bool {
        self.opens.iter().all(FuzzySet::is_crisp)
    }

    /// Errors unless `a` lives on this space's carrier and grid.
    pub fn check_member(&self, a: &FuzzySet) -> Result<()> {
        if !same_carrier(a.carrier(), &self.carrier) {
            return Err(Error::CarrierMismatch);
        }
        if a.denominator() != self.denominator {
            return Err(Error::DenominatorMismatch {
                left: self.denominator,
                right: a.denominator(),
            });
        }
        Ok(())
    }

    /// Supremum of the open sets below `a`.
    pub fn interior(&self, a: &FuzzySet) -> Result<FuzzySet> {
        self.check_member(a)?;
        Ok(self.int(a))
    }

    /// Infimum of the closed sets above `a`.
    pub fn closure(&self, a: &FuzzySet) -> Result<FuzzySet> {
        self.check_member(a)?;
        Ok(self.cl(a))
    }

    pub fn is_open(&self, a: &FuzzySet) -> Result<bool> {
        self.check_member(a)?;
        Ok(self.opens.binary_search(a).is_ok())
    }

    pub fn is_closed(&self, a: &FuzzySet) -> Result<bool> {
        self.check_member(a)?;
        Ok(self.closeds.binary_search(a).is_ok())
    }

    pub fn is_clopen(&self, a: &FuzzySet) -> Result<bool> {
        Ok(self.is_open(a)? && self.is_closed(a)?)
    }

    pub(crate) fn int(&self, a: &FuzzySet) -> FuzzySet {
        let mut acc = alloc::vec![0; a.len()];
        for u in self.opens.iter().filter(|u| u.le_pointwise(a)) {
            for (x, &v) in acc.iter_mut().zip(u.values()) {
                *x = (*x).max(v);
            }
        }
        FuzzySet::from_parts_unchecked(self.carrier.clone(), self.denominator, acc)
    }

    pub(crate) fn cl(&self, a: &FuzzySet) -> FuzzySet {
        self.inf_closed_where(|c| a.le_pointwise(c))
    }

    /// Infimum of the closed sets satisfying `keep`; 1_X is the empty infimum.
    pub(crate) fn inf_closed_where(&self, keep: impl Fn(&FuzzySet) -> bool) -> FuzzySet {
        let mut acc = alloc::vec![self.denominator; self.carrier.len()];
        for c in self.closeds.iter().filter(|c| keep(c)) {
            for (x, &v) in acc.iter_mut().zip(c.values()) {
                *x = (*x).min(v);
            }
        }
        FuzzySet::from_parts_unchecked(self.carrier.clone(), self.denominator, acc)
    }

    pub(crate) fn open_contains(&self, a: &FuzzySet) -> bool {
        self.opens.binary_search(a).is_ok()
    }

    pub(crate) fn closed_contains(&self, a: &FuzzySet) -> bool {
        self.closeds.binary_search(a).is_ok()
    }

    /// Projection onto the carrier positions in `keep`, re-completed.
    pub fn restrict(&self, keep: &[usize], cap: usize) -> Result<FuzzyTopology> {
        let carrier = Arc::new(self.carrier.restrict(keep)?);
        let projected = self
            .opens
            .iter()
            .map(|u| u.restrict(carrier.clone(), keep))
            .collect::<Result<Vec<_>>>()?;
        complete_family(&carrier, self.denominator, &projected, cap)
    }

    /// Exact change of denominator; see [`FuzzySet::regrid`].
    pub fn regrid(&self, denominator: u32) -> Result<FuzzyTopology> {
        let mut opens = self
            .opens
            .iter()
            .map(|u| u.regrid(denominator))
            .collect::<Result<Vec<_>>>()?;
        opens.sort();
        Ok(FuzzyTopology::from_sorted_unchecked(
            self.carrier.clone(),
            denominator,
            opens,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Arc<Carrier> {
        Arc::new(Carrier::new(["a", "b"]).unwrap())
    }

    fn sets(c: &Arc<Carrier>, d: u32, vs: &[[u32; 2]]) -> Vec<FuzzySet> {
        vs.iter()
            .map(|v| FuzzySet::new(c.clone(), d, v.to_vec()).unwrap())
            .collect()
    }

    fn example_space() -> FuzzyTopology {
        let c = ab();
        let fam = sets(&c, 10, &[[0, 0], [8, 4], [3, 2], [3, 4], [2, 2], [10, 10]]);
        FuzzyTopology::new(c, 10, fam).unwrap()
    }

    #[test]
    fn example_family_is_valid() {
        let c = ab();
        let fam = sets(&c, 10, &[[0, 0], [8, 4], [3, 2], [3, 4], [2, 2], [10, 10]]);
        assert!(validate_family(&c, 10, &fam).is_empty());
        assert!(validate_family(&c, 10, &sets(&c, 10, &[[0, 0], [10, 10]])).is_empty());
    }

    #[test]
    fn missing_meet_is_reported_with_its_pair() {
        let c = ab();
        let fam = sets(&c, 10, &[[0, 0], [10, 10], [8, 4], [2, 6]]);
        let v = validate_family(&c, 10, &fam);
        let meet = FuzzySet::new(c.clone(), 10, alloc::vec![2, 4]).unwrap();
        assert!(v
            .iter()
            .any(|x| matches!(x, Violation::MissingMeet { meet: m, .. } if *m == meet)));
        assert!(v.iter().any(|x| matches!(x, Violation::MissingJoin { .. })));
        assert_eq!(v.len(), 2);
    }

    #[test]
    fn missing_ends_and_foreign_members() {
        let c = ab();
        let other = FuzzySet::new(c.clone(), 5, alloc::vec![1, 1]).unwrap();
        let mut fam = sets(&c, 10, &[[3, 3]]);
        fam.push(other);
        let v = validate_family(&c, 10, &fam);
        assert!(v.contains(&Violation::MissingBottom));
        assert!(v.contains(&Violation::MissingTop));
        assert!(v.contains(&Violation::ForeignMember { index: 1 }));
        assert!(matches!(FuzzyTopology::new(c, 10, fam), Err(Error::InvalidTopology(_))));
    }

    #[test]
    fn completion_examples() {
        let c = ab();
        let t = complete_family(&c, 10, &sets(&c, 10, &[[8, 4], [2, 6]]), DEFAULT_COMPLETION_CAP).unwrap();
        let mut expected = sets(&c, 10, &[[0, 0], [10, 10], [8, 4], [2, 6], [2, 4], [8, 6]]);
        expected.sort();
        assert_eq!(t.opens(), &expected[..]);

        let t = complete_family(&c, 10, &[], DEFAULT_COMPLETION_CAP).unwrap();
        assert_eq!(t, FuzzyTopology::indiscrete(c.clone(), 10).unwrap());

        let ex = example_space();
        assert_eq!(complete_family(&c, 10, ex.opens(), DEFAULT_COMPLETION_CAP).unwrap(), ex);
    }

    #[test]
    fn completion_overflow() {
        let c = ab();
        let gens = sets(&c, 10, &[[8, 4], [2, 6]]);
        assert_eq!(
            complete_family(&c, 10, &gens, 5),
            Err(Error::CompletionOverflow { cap: 5 })
        );
        assert!(complete_family(&c, 10, &gens, 6).is_ok());
    }

    #[test]
    fn closed_sets_of_example() {
        let t = example_space();
        let c = t.carrier().clone();
        let mut expected = sets(&c, 10, &[[10, 10], [2, 6], [7, 8], [7, 6], [8, 8], [0, 0]]);
        expected.sort();
        assert_eq!(t.closed_sets(), &expected[..]);

        let ind = FuzzyTopology::indiscrete(c.clone(), 10).unwrap();
        assert_eq!(ind.closed_sets().len(), 2);

        let one = Arc::new(Carrier::new(["a"]).unwrap());
        let discrete = FuzzyTopology::indiscrete(one.clone(), 1).unwrap();
        assert_eq!(discrete.closed_sets(), discrete.opens());
    }

    #[test]
    fn interior_and_closure_examples() {
        let t = example_space();
        let s = |v: [u32; 2]| t.set(&v).unwrap();
        assert_eq!(t.interior(&s([4, 3])).unwrap(), s([3, 2]));
        assert_eq!(t.interior(&s([7, 6])).unwrap(), s([3, 4]));
        assert_eq!(t.interior(&t.top()).unwrap(), t.top());
        assert_eq!(t.closure(&s([4, 3])).unwrap(), s([7, 6]));
        assert_eq!(t.closure(&s([3, 2])).unwrap(), s([7, 6]));
        assert_eq!(t.closure(&t.bottom()).unwrap(), t.bottom());
    }

    #[test]
    fn openness_tests() {
        let t = example_space();
        let s = |v: [u32; 2]| t.set(&v).unwrap();
        assert!(t.is_open(&s([3, 4])).unwrap());
        assert!(!t.is_closed(&s([3, 4])).unwrap());
        assert!(t.is_closed(&s([7, 6])).unwrap());
        assert!(!t.is_open(&s([7, 6])).unwrap());
        assert!(t.is_clopen(&t.top()).unwrap());
        assert!(t.is_clopen(&t.bottom()).unwrap());
    }

    #[test]
    fn foreign_arguments_are_rejected() {
        let t = example_space();
        let other = FuzzySet::new(t.carrier().clone(), 5, alloc::vec![1, 1]).unwrap();
        assert!(matches!(t.closure(&other), Err(Error::DenominatorMismatch { .. })));
        let elsewhere = FuzzySet::new(Arc::new(Carrier::new(["x", "y"]).unwrap()), 10, alloc::vec![1, 1]).unwrap();
        assert_eq!(t.interior(&elsewhere), Err(Error::CarrierMismatch));
    }

    #[test]
    fn restrict_projects_and_recompletes() {
        let t = example_space();
        let r = t.restrict(&[0], DEFAULT_COMPLETION_CAP).unwrap();
        let vals: Vec<u32> = r.opens().iter().map(|u| u.values()[0]).collect();
        assert_eq!(vals, [0, 2, 3, 8, 10]);
    }

    #[test]
    fn regrid_topology() {
        let c = ab();
        let t = FuzzyTopology::new(c.clone(), 10, sets(&c, 10, &[[0, 0], [10, 10], [10, 0]])).unwrap();
        let r = t.regrid(1).unwrap();
        assert_eq!(r.denominator(), 1);
        assert!(r.is_crisp());
        assert!(example_space().regrid(3).is_err());
    }
}
