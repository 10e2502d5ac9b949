//! Exhaustive enumeration of grid fuzzy sets and of fuzzy topologies.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{Carrier, FuzzySet};
use crate::topology::FuzzyTopology;

/// Largest grid, in number of fuzzy sets, enumerated exhaustively by default.
pub const EXHAUSTIVE_GRID_LIMIT: u64 = 12;

/// Largest grid the subset enumerator accepts even with a raised limit.
pub const HARD_GRID_LIMIT: u64 = 22;

/// Largest denominator per carrier size within [`EXHAUSTIVE_GRID_LIMIT`].
/// Carriers of four or more points have no feasible denominator.
pub const FEASIBILITY_TABLE: [(usize, u32); 3] = [(1, 11), (2, 2), (3, 1)];

/// `(d+1)^n`, or `None` on overflow.
pub fn grid_size(n: usize, d: u32) -> Option<u64> {
    u64::from(d).checked_add(1)?.checked_pow(u32::try_from(n).ok()?)
}

/// Whether `(n, d)` may be enumerated under the default limit.
pub fn is_feasible(n: usize, d: u32) -> bool {
    FEASIBILITY_TABLE.iter().any(|&(tn, td)| tn == n && d >= 1 && d <= td)
}

/// All `(d+1)^n` sets on the grid, in lexicographic order of numerators.
pub fn enumerate_fuzzy_sets(carrier: &Arc<Carrier>, d: u32) -> GridSets {
    GridSets {
        carrier: carrier.clone(),
        denominator: d,
        next: Some(alloc::vec![0; carrier.len()]),
    }
}

#[derive(Debug, Clone)]
pub struct GridSets {
    carrier: Arc<Carrier>,
    denominator: u32,
    next: Option<Vec<u32>>,
}

impl Iterator for GridSets {
    type Item = FuzzySet;

    fn next(&mut self) -> Option<FuzzySet> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // odometer, last coordinate fastest
        let mut i = succ.len();
        let mut carried = true;
        while carried && i > 0 {
            i -= 1;
            if succ[i] < self.denominator {
                succ[i] += 1;
                carried = false;
            } else {
                succ[i] = 0;
            }
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(FuzzySet::from_parts_unchecked(
            self.carrier.clone(),
            self.denominator,
            current,
        ))
    }
}

/// Every fuzzy topology on the grid, under [`EXHAUSTIVE_GRID_LIMIT`].
pub fn enumerate_topologies(carrier: &Arc<Carrier>, d: u32) -> Result<Vec<FuzzyTopology>> {
    enumerate_topologies_with_limit(carrier, d, EXHAUSTIVE_GRID_LIMIT)
}

/// Every fuzzy topology on the grid, in canonical order: by number of open
/// sets, then lexicographically by the sorted open family.
pub fn enumerate_topologies_with_limit(carrier: &Arc<Carrier>, d: u32, limit: u64) -> Result<Vec<FuzzyTopology>> {
    let masks = topology_masks(carrier.len(), d, limit)?;
    let grid: Vec<FuzzySet> = enumerate_fuzzy_sets(carrier, d).collect();
    Ok(masks
        .into_iter()
        .map(|mask| {
            let opens = grid
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, s)| s.clone())
                .collect();
            FuzzyTopology::from_sorted_unchecked(carrier.clone(), d, opens)
        })
        .collect())
}

/// Number of fuzzy topologies on the `(n, d)` grid.
pub fn count_topologies(n: usize, d: u32) -> Result<usize> {
    Ok(topology_masks(n, d, EXHAUSTIVE_GRID_LIMIT)?.len())
}

/// Open families as bitmasks over the lexicographically indexed grid.
fn topology_masks(n: usize, d: u32, limit: u64) -> Result<Vec<u32>> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if d == 0 {
        return Err(Error::ZeroDenominator);
    }
    let limit = limit.min(HARD_GRID_LIMIT);
    let grid = grid_size(n, d).unwrap_or(u64::MAX);
    if grid > limit {
        return Err(Error::EnumerationInfeasible { n, d, grid, limit });
    }
    let m = grid as usize;
    let points: Vec<Vec<u32>> = (0..m).map(|i| decode(i, n, d)).collect();
    let encode = |v: &[u32]| v.iter().fold(0usize, |acc, &x| acc * (d as usize + 1) + x as usize);
    let mut meet = alloc::vec![0usize; m * m];
    let mut join = alloc::vec![0usize; m * m];
    for i in 0..m {
        for j in 0..m {
            let lo: Vec<u32> = points[i].iter().zip(&points[j]).map(|(a, b)| *a.min(b)).collect();
            let hi: Vec<u32> = points[i].iter().zip(&points[j]).map(|(a, b)| *a.max(b)).collect();
            meet[i * m + j] = encode(&lo);
            join[i * m + j] = encode(&hi);
        }
    }
    let ends: u32 = 1 | (1 << (m - 1));
    let inner = m.saturating_sub(2);
    let mut found = Vec::new();
    for bits in 0u32..(1 << inner) {
        let mask = ends | (bits << 1);
        let closed = (0..m).filter(|&i| mask >> i & 1 == 1).all(|i| {
            (i + 1..m)
                .filter(|&j| mask >> j & 1 == 1)
                .all(|j| mask >> meet[i * m + j] & 1 == 1 && mask >> join[i * m + j] & 1 == 1)
        });
        if closed {
            found.push(mask);
        }
    }
    // Lexicographic comparison of sorted index lists equals comparing the
    // bit-reversed masks within a fixed popcount.
    found.sort_by_key(|&mask| (mask.count_ones(), core::cmp::Reverse(mask.reverse_bits())));
    Ok(found)
}

fn decode(mut index: usize, n: usize, d: u32) -> Vec<u32> {
    let base = d as usize + 1;
    let mut v = alloc::vec![0; n];
    for slot in v.iter_mut().rev() {
        *slot = (index % base) as u32;
        index /= base;
    }
    v
}
