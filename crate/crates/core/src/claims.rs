//! Registry of checkable identities about the `bd` operator.
//!
//! Each claim is a pair of predicates over a space and one or two fuzzy sets.
//! Universal claims are refuted by one instance where the hypothesis holds and
//! the conclusion does not; existential claims are established by one instance
//! where both hold. Instances whose hypothesis fails are counted separately so
//! that vacuous verification stays visible.
//!
//! Claim ids are a stable public contract:
//!
//! * `W.1`-`W.3`, `W.5`-`W.7`: the classical boundary checklist applied to `bd`.
//! * `B.1`-`B.5`: immediate consequences of the definition of `bd`.
//! * `T2.1.i` ... `T2.1.xii`: the twelve-item identity list, with both
//!   directions of item ii, strict and non-strict forms of item viii, and the
//!   two halves of the equivalence in item xii.
//! * `T3.1`-`T3.3`: `bd` against `bdII`, `bdI` and `bdIII`.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::FuzzySet;
use crate::topology::FuzzyTopology;

type Predicate = fn(&FuzzyTopology, &[FuzzySet]) -> bool;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    Universal,
    Existential,
}

/// Result of evaluating one claim on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails,
    HypothesisNotMet,
}

#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    /// Number of fuzzy-set arguments (1 or 2).
    pub arity: usize,
    pub kind: ClaimKind,
    /// The asserted identity in operator notation.
    pub statement: &'static str,
    hypothesis: Predicate,
    conclusion: Predicate,
}

impl core::fmt::Debug for Claim {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("arity", &self.arity)
            .field("kind", &self.kind)
            .field("statement", &self.statement)
            .finish()
    }
}

impl PartialEq for Claim {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Claim {
    /// Evaluate on one instance. Hypothesis-false instances never count as failures.
    pub fn evaluate(&self, t: &FuzzyTopology, args: &[FuzzySet]) -> Result<Outcome> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                claim: self.id,
                expected: self.arity,
                found: args.len(),
            });
        }
        for a in args {
            t.check_member(a)?;
        }
        Ok(self.evaluate_unchecked(t, args))
    }

    pub(crate) fn evaluate_unchecked(&self, t: &FuzzyTopology, args: &[FuzzySet]) -> Outcome {
        if !(self.hypothesis)(t, args) {
            Outcome::HypothesisNotMet
        } else if (self.conclusion)(t, args) {
            Outcome::Holds
        } else {
            Outcome::Fails
        }
    }

    /// Whether `outcome` is the kind of instance the search looks for:
    /// a failure for universal claims, a satisfying instance for existential ones.
    pub fn is_hit(&self, outcome: Outcome) -> bool {
        match self.kind {
            ClaimKind::Universal => outcome == Outcome::Fails,
            ClaimKind::Existential => outcome == Outcome::Holds,
        }
    }
}

/// One claim evaluated on one borrowed instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ClaimInstanceResult<'a> {
    pub claim_id: &'static str,
    pub topology: &'a FuzzyTopology,
    pub args: &'a [FuzzySet],
    pub outcome: Outcome,
}

/// Evaluate `claim` on `(t, args)`; arity and grid mismatches are errors.
pub fn evaluate_claim<'a>(
    claim: &Claim,
    t: &'a FuzzyTopology,
    args: &'a [FuzzySet],
) -> Result<ClaimInstanceResult<'a>> {
    Ok(ClaimInstanceResult {
        claim_id: claim.id,
        topology: t,
        args,
        outcome: claim.evaluate(t, args)?,
    })
}

/// The full registry in presentation order.
pub fn registry() -> &'static [Claim] {
    &REGISTRY
}

pub fn claim_by_id(id: &str) -> Option<&'static Claim> {
    REGISTRY.iter().find(|c| c.id == id)
}

/// Parse `all` or a comma-separated id list. Result follows registry order.
pub fn select_claims(spec: &str) -> Result<Vec<&'static Claim>> {
    let spec = spec.trim();
    if spec == "all" {
        return Ok(REGISTRY.iter().collect());
    }
    let mut wanted = Vec::new();
    for id in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let claim = claim_by_id(id).ok_or_else(|| Error::UnknownClaim(id.to_string()))?;
        wanted.push(claim.id);
    }
    if wanted.is_empty() {
        return Err(Error::UnknownClaim(spec.to_string()));
    }
    Ok(REGISTRY.iter().filter(|c| wanted.contains(&c.id)).collect())
}

fn always(_: &FuzzyTopology, _: &[FuzzySet]) -> bool {
    true
}

fn a_is_open(t: &FuzzyTopology, x: &[FuzzySet]) -> bool {
    t.open_contains(&x[0])
}

fn a_is_closed(t: &FuzzyTopology, x: &[FuzzySet]) -> bool {
    t.closed_contains(&x[0])
}

fn a_is_clopen(t: &FuzzyTopology, x: &[FuzzySet]) -> bool {
    t.open_contains(&x[0]) && t.closed_contains(&x[0])
}

fn a_leq_b(_: &FuzzyTopology, x: &[FuzzySet]) -> bool {
    x[0].le_pointwise(&x[1])
}

fn bd_is_closed(t: &FuzzyTopology, x: &[FuzzySet]) -> bool {
    t.closed_contains(&t.bd(&x[0]))
}

fn complement_symmetric(t: &FuzzyTopology, x: &[FuzzySet]) -> bool {
    t.bd(&x[0]) == t.bd(&x[0].complement())
}

fn bd_is_a(t: &FuzzyTopology, x: &[FuzzySet]) -> bool {
    t.bd(&x[0]) == x[0]
}

macro_rules! claim {
    ($id:expr, $arity:expr, $kind:ident, $statement:expr, $hyp:expr, $concl:expr $(,)?) => {
        Claim {
            id: $id,
            arity: $arity,
            kind: ClaimKind::$kind,
            statement: $statement,
            hypothesis: $hyp,
            conclusion: $concl,
        }
    };
}

static REGISTRY: [Claim; 29] = [
    claim!("W.1", 1, Universal, "bd A is closed", always, bd_is_closed),
    claim!("W.2", 1, Universal, "cl A = int A v bd A", always, |t, x| {
        t.cl(&x[0]) == t.int(&x[0]).max_with(&t.bd(&x[0]))
    }),
    claim!(
        "W.3",
        1,
        Universal,
        "T and A crisp => bd A = cl A ^ cl A^c",
        |t, x| t.is_crisp() && x[0].is_crisp(),
        |t, x| t.bd(&x[0]) == t.bd_pu_liu(&x[0]),
    ),
    claim!("W.5", 1, Universal, "bd A = bd A^c", always, complement_symmetric),
    claim!(
        "W.6",
        1,
        Universal,
        "A open or closed => int bd A = 0_X",
        |t, x| a_is_open(t, x) || a_is_closed(t, x),
        |t, x| t.int(&t.bd(&x[0])).is_zero(),
    ),
    claim!("W.7", 1, Universal, "A clopen => bd A = 0_X", a_is_clopen, |t, x| t
        .bd(&x[0])
        .is_zero()),
    claim!(
        "B.1",
        1,
        Universal,
        "bd 0_X = 0_X and bd 1_X = 1_X",
        |_, x| x[0].is_zero() || x[0].is_one(),
        bd_is_a,
    ),
    claim!("B.2", 1, Universal, "bd A = bd A^c", always, complement_symmetric),
    claim!("B.3", 1, Universal, "A clopen => bd A = A", a_is_clopen, bd_is_a),
    claim!(
        "B.4",
        1,
        Existential,
        "exists A with bd A not closed",
        always,
        |t, x| !bd_is_closed(t, x)
    ),
    claim!(
        "B.5",
        2,
        Universal,
        "cl A = cl B and int A = int B => bd A = bd B",
        |t, x| t.cl(&x[0]) == t.cl(&x[1]) && t.int(&x[0]) == t.int(&x[1]),
        |t, x| t.bd(&x[0]) == t.bd(&x[1]),
    ),
    claim!("T2.1.i", 2, Universal, "bd(A v B) >= bd A v bd B", always, |t, x| {
        t.bd(&x[0])
            .max_with(&t.bd(&x[1]))
            .le_pointwise(&t.bd(&x[0].max_with(&x[1])))
    }),
    claim!(
        "T2.1.ii-geq",
        2,
        Universal,
        "bd(A ^ B) >= bd A ^ bd B",
        always,
        |t, x| {
            t.bd(&x[0])
                .min_with(&t.bd(&x[1]))
                .le_pointwise(&t.bd(&x[0].min_with(&x[1])))
        }
    ),
    claim!(
        "T2.1.ii-leq",
        2,
        Universal,
        "bd(A ^ B) <= bd A ^ bd B",
        always,
        |t, x| {
            t.bd(&x[0].min_with(&x[1]))
                .le_pointwise(&t.bd(&x[0]).min_with(&t.bd(&x[1])))
        }
    ),
    claim!("T2.1.iii", 1, Universal, "int A v bd A = bd A", always, |t, x| {
        let bd = t.bd(&x[0]);
        t.int(&x[0]).max_with(&bd) == bd
    }),
    claim!("T2.1.iv", 1, Universal, "bd A <= cl A", always, |t, x| t
        .bd(&x[0])
        .le_pointwise(&t.cl(&x[0]))),
    claim!(
        "T2.1.v",
        1,
        Universal,
        "A clopen => bd(bd A) = A",
        a_is_clopen,
        |t, x| t.bd(&t.bd(&x[0])) == x[0]
    ),
    claim!("T2.1.vi", 1, Universal, "bd(cl A) >= bd A", always, |t, x| {
        t.bd(&x[0]).le_pointwise(&t.bd(&t.cl(&x[0])))
    }),
    claim!("T2.1.vii", 1, Universal, "bd(int A) <= bd A", always, |t, x| {
        t.bd(&t.int(&x[0])).le_pointwise(&t.bd(&x[0]))
    }),
    claim!(
        "T2.1.viii-strict",
        2,
        Universal,
        "A <= B => bd A < bd B",
        a_leq_b,
        |t, x| {
            let (a, b) = (t.bd(&x[0]), t.bd(&x[1]));
            a.le_pointwise(&b) && a != b
        }
    ),
    claim!(
        "T2.1.viii-nonstrict",
        2,
        Universal,
        "A <= B => bd A <= bd B",
        a_leq_b,
        |t, x| { t.bd(&x[0]).le_pointwise(&t.bd(&x[1])) }
    ),
    claim!("T2.1.ix", 1, Universal, "A v bd A <= cl A", always, |t, x| {
        x[0].max_with(&t.bd(&x[0])).le_pointwise(&t.cl(&x[0]))
    }),
    claim!(
        "T2.1.x",
        1,
        Universal,
        "int A = int cl A => bd(cl A) = bd A",
        |t, x| t.int(&x[0]) == t.int(&t.cl(&x[0])),
        |t, x| t.bd(&t.cl(&x[0])) == t.bd(&x[0]),
    ),
    claim!(
        "T2.1.xi",
        1,
        Universal,
        "cl A = cl int A => bd(int A) = bd A",
        |t, x| t.cl(&x[0]) == t.cl(&t.int(&x[0])),
        |t, x| t.bd(&t.int(&x[0])) == t.bd(&x[0]),
    ),
    claim!(
        "T2.1.xii-fwd",
        1,
        Universal,
        "A closed => bd A <= A",
        a_is_closed,
        |t, x| { t.bd(&x[0]).le_pointwise(&x[0]) }
    ),
    claim!(
        "T2.1.xii-conv",
        1,
        Universal,
        "bd A <= A => A closed",
        |t, x| t.bd(&x[0]).le_pointwise(&x[0]),
        a_is_closed,
    ),
    claim!("T3.1", 1, Universal, "bd A <= bdII A", always, |t, x| {
        t.bd(&x[0]).le_pointwise(&t.bd_pu_liu(&x[0]))
    }),
    claim!("T3.2", 1, Universal, "bd A <= bdI A", always, |t, x| {
        t.bd(&x[0]).le_pointwise(&t.bd_warren(&x[0]))
    }),
    claim!("T3.3", 1, Universal, "bd A <= bdIII A", always, |t, x| {
        t.bd(&x[0]).le_pointwise(&t.bd_cuchillo_ibanez(&x[0]))
    }),
];
