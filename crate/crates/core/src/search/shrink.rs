//! Witnesses and greedy witness minimisation.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::claims::{claim_by_id, Claim, Outcome};
use crate::error::{Error, Result};
use crate::lattice::FuzzySet;
use crate::topology::{complete_family, FuzzyTopology, DEFAULT_COMPLETION_CAP};

/// One labelled value in a witness transcript.
#[derive(Debug, Clone, PartialEq)]
pub struct TranscriptEntry {
    pub label: String,
    pub value: FuzzySet,
}

/// A concrete instance refuting (or, for existential claims, establishing) a claim.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub claim_id: &'static str,
    pub topology: FuzzyTopology,
    pub args: Vec<FuzzySet>,
    /// Operator values at the instance.
    pub transcript: Vec<TranscriptEntry>,
}

impl Witness {
    pub fn new(claim: &Claim, topology: FuzzyTopology, args: Vec<FuzzySet>) -> Self {
        let transcript = transcript(&topology, &args);
        Witness {
            claim_id: claim.id,
            topology,
            args,
            transcript,
        }
    }

    pub fn claim(&self) -> Result<&'static Claim> {
        claim_by_id(self.claim_id).ok_or_else(|| Error::UnknownClaim(self.claim_id.into()))
    }

    /// Re-evaluate the claim on the stored instance.
    pub fn recheck(&self) -> Result<Outcome> {
        self.claim()?.evaluate(&self.topology, &self.args)
    }

    /// Lexicographic size: carrier points, open sets, distinct numerators, denominator.
    pub fn size(&self) -> (usize, usize, usize, u32) {
        size_of(&self.topology, &self.args)
    }
}

fn size_of(t: &FuzzyTopology, args: &[FuzzySet]) -> (usize, usize, usize, u32) {
    let distinct: BTreeSet<u32> = t
        .opens()
        .iter()
        .chain(args)
        .flat_map(|s| s.values().iter().copied())
        .collect();
    (t.carrier().len(), t.len(), distinct.len(), t.denominator())
}

const NAMES: [&str; 2] = ["A", "B"];

fn transcript(t: &FuzzyTopology, args: &[FuzzySet]) -> Vec<TranscriptEntry> {
    let mut out = Vec::new();
    let mut push = |label: String, value: FuzzySet| out.push(TranscriptEntry { label, value });
    for (name, a) in NAMES.iter().zip(args) {
        let cl = t.cl(a);
        let int = t.int(a);
        push(alloc::format!("cl {name}"), cl.clone());
        push(alloc::format!("int {name}"), int.clone());
        push(alloc::format!("int cl {name}"), t.int(&cl));
        push(alloc::format!("cl int {name}"), t.cl(&int));
        push(alloc::format!("bd {name}"), t.bd(a));
        push(alloc::format!("bd {name}^c"), t.bd(&a.complement()));
        push(alloc::format!("bdI {name}"), t.bd_warren(a));
        push(alloc::format!("bdII {name}"), t.bd_pu_liu(a));
        push(alloc::format!("bdIII {name}"), t.bd_cuchillo_ibanez(a));
    }
    if let [a, b] = args {
        let join = a.max_with(b);
        let meet = a.min_with(b);
        push("bd(A v B)".into(), t.bd(&join));
        push("bd(A ^ B)".into(), t.bd(&meet));
        push("A v B".into(), join);
        push("A ^ B".into(), meet);
    }
    out
}

/// Greedy minimisation of a witness.
///
/// Steps, repeated until none applies: drop a carrier point (project and
/// re-complete the topology), snap an argument numerator to `0` or `d`, remove
/// an open set and re-complete, and divide the denominator by the common
/// factor of all numerators. A step is kept only if the claim still fails (or,
/// for existential claims, still holds) and the size does not grow.
pub fn shrink_witness(w: &Witness) -> Result<Witness> {
    shrink_witness_with_cap(w, DEFAULT_COMPLETION_CAP)
}

pub fn shrink_witness_with_cap(w: &Witness, cap: usize) -> Result<Witness> {
    let claim = w.claim()?;
    let keeps = |t: &FuzzyTopology, args: &[FuzzySet]| claim.is_hit(claim.evaluate_unchecked(t, args));
    claim.evaluate(&w.topology, &w.args)?;
    if !keeps(&w.topology, &w.args) {
        return Ok(w.clone());
    }
    let mut t = w.topology.clone();
    let mut args = w.args.clone();

    loop {
        let mut changed = false;

        // drop carrier points
        let mut i = t.carrier().len();
        while t.carrier().len() > 1 && i > 0 {
            i -= 1;
            let keep: Vec<usize> = (0..t.carrier().len()).filter(|&j| j != i).collect();
            let candidate = t.restrict(&keep, cap).ok().and_then(|rt| {
                let ra = args
                    .iter()
                    .map(|a| a.restrict(rt.carrier().clone(), &keep))
                    .collect::<Result<Vec<_>>>()
                    .ok()?;
                Some((rt, ra))
            });
            match candidate {
                Some((rt, ra)) if keeps(&rt, &ra) && size_of(&rt, &ra) <= size_of(&t, &args) => {
                    t = rt;
                    args = ra;
                    changed = true;
                    i = i.min(t.carrier().len());
                }
                _ => {}
            }
        }

        // snap numerators
        let d = t.denominator();
        for k in 0..args.len() {
            for x in 0..t.carrier().len() {
                let v = args[k].values()[x];
                if v == 0 || v == d {
                    continue;
                }
                for target in [0, d] {
                    let mut values = args[k].values().to_vec();
                    values[x] = target;
                    let mut trial = args.clone();
                    trial[k] = FuzzySet::from_parts_unchecked(t.carrier().clone(), d, values);
                    if keeps(&t, &trial) && size_of(&t, &trial) <= size_of(&t, &args) {
                        args = trial;
                        changed = true;
                        break;
                    }
                }
            }
        }

        // remove open sets
        let mut idx = 0;
        while idx < t.len() {
            let u = &t.opens()[idx];
            if u.is_zero() || u.is_one() {
                idx += 1;
                continue;
            }
            let rest: Vec<FuzzySet> = t.opens().iter().filter(|s| *s != u).cloned().collect();
            match complete_family(t.carrier(), t.denominator(), &rest, cap) {
                Ok(rt) if rt.len() < t.len() && keeps(&rt, &args) => {
                    t = rt;
                    changed = true;
                }
                _ => idx += 1,
            }
        }

        // common factor of the grid
        let g = t
            .opens()
            .iter()
            .chain(&args)
            .flat_map(|s| s.values().iter().copied())
            .fold(t.denominator(), gcd);
        if g > 1 {
            let nd = t.denominator() / g;
            let rt = t.regrid(nd)?;
            let ra = args.iter().map(|a| a.regrid(nd)).collect::<Result<Vec<_>>>()?;
            if keeps(&rt, &ra) {
                t = rt;
                args = ra;
                changed = true;
            }
        }

        if !changed {
            break;
        }
    }
    Ok(Witness::new(claim, t, args))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
