//! The four fuzzy boundary operators.
//!
//! | name    | value                                                                 |
//! |---------|-----------------------------------------------------------------------|
//! | `bd`    | `int cl A ^ cl int A`                                                 |
//! | `bdI`   | inf of closed `D` with `D >= cl A` on the support of `cl A ^ cl A^c`   |
//! | `bdII`  | `cl A ^ cl A^c`                                                       |
//! | `bdIII` | inf of closed `D` with `D >= cl A` wherever `cl A(x) > int A(x)`       |
//!
//! For `bdI` and `bdIII` an empty support makes the domination condition
//! vacuous; every closed set qualifies and the infimum is `0_X`. None of the
//! operators special-cases `0_X` or `1_X`.

use core::fmt;
use core::str::FromStr;

use crate::error::Result;
use crate::lattice::FuzzySet;
use crate::topology::FuzzyTopology;

/// `int cl A ^ cl int A`.
pub fn boundary(t: &FuzzyTopology, a: &FuzzySet) -> Result<FuzzySet> {
    t.check_member(a)?;
    Ok(t.bd(a))
}

/// Warren's boundary (`bdI`).
pub fn warren_boundary(t: &FuzzyTopology, a: &FuzzySet) -> Result<FuzzySet> {
    t.check_member(a)?;
    Ok(t.bd_warren(a))
}

/// Pu-Liu boundary (`bdII`): `cl A ^ cl A^c`.
pub fn pu_liu_boundary(t: &FuzzyTopology, a: &FuzzySet) -> Result<FuzzySet> {
    t.check_member(a)?;
    Ok(t.bd_pu_liu(a))
}

/// Cuchillo-Ibanez/Tarres boundary (`bdIII`).
pub fn cuchillo_ibanez_boundary(t: &FuzzyTopology, a: &FuzzySet) -> Result<FuzzySet> {
    t.check_member(a)?;
    Ok(t.bd_cuchillo_ibanez(a))
}

impl FuzzyTopology {
    pub(crate) fn bd(&self, a: &FuzzySet) -> FuzzySet {
        let int_cl = self.int(&self.cl(a));
        let cl_int = self.cl(&self.int(a));
        int_cl.min_with(&cl_int)
    }

    pub(crate) fn bd_pu_liu(&self, a: &FuzzySet) -> FuzzySet {
        self.cl(a).min_with(&self.cl(&a.complement()))
    }

    pub(crate) fn bd_warren(&self, a: &FuzzySet) -> FuzzySet {
        let cl = self.cl(a);
        let support = self.bd_pu_liu(a).above_points(&self.bottom());
        self.dominating_inf(&cl, &support)
    }

    pub(crate) fn bd_cuchillo_ibanez(&self, a: &FuzzySet) -> FuzzySet {
        let cl = self.cl(a);
        let support = cl.above_points(&self.int(a));
        self.dominating_inf(&cl, &support)
    }

    /// Inf of the closed sets that dominate `target` on `support`.
    fn dominating_inf(&self, target: &FuzzySet, support: &[usize]) -> FuzzySet {
        let t = target.values();
        self.inf_closed_where(|d| support.iter().all(|&x| d.values()[x] >= t[x]))
    }
}

/// Names the operators for command-line and report use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundaryKind {
    /// `int cl A ^ cl int A`
    InteriorClosure,
    Warren,
    PuLiu,
    CuchilloIbanez,
}

impl BoundaryKind {
    pub const ALL: [BoundaryKind; 4] = [
        BoundaryKind::InteriorClosure,
        BoundaryKind::Warren,
        BoundaryKind::PuLiu,
        BoundaryKind::CuchilloIbanez,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            BoundaryKind::InteriorClosure => "bd",
            BoundaryKind::Warren => "bdI",
            BoundaryKind::PuLiu => "bdII",
            BoundaryKind::CuchilloIbanez => "bdIII",
        }
    }

    pub fn apply(self, t: &FuzzyTopology, a: &FuzzySet) -> Result<FuzzySet> {
        match self {
            BoundaryKind::InteriorClosure => boundary(t, a),
            BoundaryKind::Warren => warren_boundary(t, a),
            BoundaryKind::PuLiu => pu_liu_boundary(t, a),
            BoundaryKind::CuchilloIbanez => cuchillo_ibanez_boundary(t, a),
        }
    }
}

impl fmt::Display for BoundaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for BoundaryKind {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        BoundaryKind::ALL.into_iter().find(|k| k.short_name() == s).ok_or(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Carrier;
    use alloc::sync::Arc;
    use alloc::vec::Vec;

    fn example_space() -> FuzzyTopology {
        let c = Arc::new(Carrier::new(["a", "b"]).unwrap());
        let fam = [[0, 0], [8, 4], [3, 2], [3, 4], [2, 2], [10, 10]]
            .iter()
            .map(|v| FuzzySet::new(c.clone(), 10, v.to_vec()).unwrap())
            .collect();
        FuzzyTopology::new(c, 10, fam).unwrap()
    }

    fn chain(opens: &[u32], d: u32) -> FuzzyTopology {
        let c = Arc::new(Carrier::new(["a"]).unwrap());
        let fam: Vec<FuzzySet> = opens
            .iter()
            .map(|&v| FuzzySet::new(c.clone(), d, alloc::vec![v]).unwrap())
            .collect();
        FuzzyTopology::new(c, d, fam).unwrap()
    }

    #[test]
    fn example_space_boundaries() {
        let t = example_space();
        let a = t.set(&[4, 3]).unwrap();
        assert_eq!(boundary(&t, &a).unwrap().values(), [3, 4]);
        assert_eq!(pu_liu_boundary(&t, &a).unwrap().values(), [7, 6]);
        assert_eq!(warren_boundary(&t, &a).unwrap().values(), [7, 6]);
        assert_eq!(cuchillo_ibanez_boundary(&t, &a).unwrap().values(), [7, 6]);
    }

    #[test]
    fn boundaries_of_ends() {
        let t = example_space();
        assert_eq!(boundary(&t, &t.bottom()).unwrap(), t.bottom());
        assert_eq!(boundary(&t, &t.top()).unwrap(), t.top());
        assert_eq!(pu_liu_boundary(&t, &t.top()).unwrap(), t.bottom());
        assert_eq!(warren_boundary(&t, &t.top()).unwrap(), t.bottom());
        assert_eq!(cuchillo_ibanez_boundary(&t, &t.top()).unwrap(), t.bottom());
        assert_eq!(cuchillo_ibanez_boundary(&t, &t.bottom()).unwrap(), t.bottom());
    }

    #[test]
    fn chain_space_boundary() {
        let t = chain(&[0, 2, 9, 10], 10);
        let a = t.set(&[9]).unwrap();
        assert_eq!(boundary(&t, &a).unwrap(), t.top());
        assert_eq!(boundary(&t, &a.complement()).unwrap(), t.bottom());
    }

    #[test]
    fn warren_on_indiscrete_point() {
        let t = chain(&[0, 2], 2);
        let a = t.set(&[1]).unwrap();
        assert_eq!(warren_boundary(&t, &a).unwrap(), t.top());
    }

    #[test]
    fn pu_liu_is_complement_symmetric() {
        let t = example_space();
        for v in [[4, 3], [0, 10], [7, 1]] {
            let a = t.set(&v).unwrap();
            assert_eq!(
                pu_liu_boundary(&t, &a).unwrap(),
                pu_liu_boundary(&t, &a.complement()).unwrap()
            );
        }
    }

    #[test]
    fn kinds_round_trip_names() {
        for k in BoundaryKind::ALL {
            assert_eq!(k.short_name().parse::<BoundaryKind>(), Ok(k));
        }
        assert!("bdIV".parse::<BoundaryKind>().is_err());
        let t = example_space();
        let a = t.set(&[4, 3]).unwrap();
        assert_eq!(BoundaryKind::InteriorClosure.apply(&t, &a).unwrap().values(), [3, 4]);
    }
}
