//! Search configuration and the deterministic instance pool it expands to.
//!
//! The pool holds two flat instance lists, one per claim arity. Each list is
//! the concatenation of the searched instances (exhaustive and random passes,
//! in configuration order) and the fixture instances, which are always checked
//! regardless of the per-claim budget. An instance's position in its list is
//! its identity: workers partition by it and witnesses are chosen by it.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::lattice::{Carrier, FuzzySet};
use crate::search::enumerate::{enumerate_fuzzy_sets, enumerate_topologies_with_limit, grid_size};
use crate::search::rng::SearchRng;
use crate::topology::{complete_family, FuzzyTopology, DEFAULT_COMPLETION_CAP};

/// Consecutive completion overflows tolerated before random generation gives up.
pub const RANDOM_TOPOLOGY_RETRIES: usize = 16;

/// Extra spaces whose grid has at most this many sets get every argument.
const EXTRA_SPACE_EXHAUSTIVE_ARGS: u64 = 144;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PassMode {
    /// Every topology on every feasible grid in range.
    Exhaustive,
    /// `samples` random topologies, each on a uniformly drawn `(n, d)` in range.
    Random { samples: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pass {
    pub mode: PassMode,
    pub carrier_sizes: RangeInclusive<usize>,
    pub denominators: RangeInclusive<u32>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub passes: Vec<Pass>,
    pub seed: u64,
    pub topology_cap: usize,
    /// Searched instances evaluated per claim; fixtures are not counted.
    pub claim_budget: Option<usize>,
    /// Number of random generators per random topology.
    pub generators: RangeInclusive<usize>,
    /// Random arguments drawn per random space.
    pub args_per_space: usize,
    /// Grid-size limit for exhaustive passes.
    pub grid_limit: u64,
    pub fixtures: bool,
    /// Always-checked user spaces.
    pub extra_spaces: Vec<FuzzyTopology>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            passes: Vec::new(),
            seed: 0,
            topology_cap: DEFAULT_COMPLETION_CAP,
            claim_budget: None,
            generators: 1..=4,
            args_per_space: 16,
            grid_limit: crate::search::enumerate::EXHAUSTIVE_GRID_LIMIT,
            fixtures: true,
            extra_spaces: Vec::new(),
        }
    }
}

impl SearchConfig {
    pub fn exhaustive(carrier_sizes: RangeInclusive<usize>, denominators: RangeInclusive<u32>) -> Self {
        SearchConfig::default().with_exhaustive(carrier_sizes, denominators)
    }

    pub fn random(
        carrier_sizes: RangeInclusive<usize>,
        denominators: RangeInclusive<u32>,
        samples: usize,
        seed: u64,
    ) -> Self {
        SearchConfig {
            seed,
            ..SearchConfig::default()
        }
        .with_random(carrier_sizes, denominators, samples)
    }

    pub fn with_exhaustive(mut self, carrier_sizes: RangeInclusive<usize>, denominators: RangeInclusive<u32>) -> Self {
        self.passes.push(Pass {
            mode: PassMode::Exhaustive,
            carrier_sizes,
            denominators,
        });
        self
    }

    pub fn with_random(
        mut self,
        carrier_sizes: RangeInclusive<usize>,
        denominators: RangeInclusive<u32>,
        samples: usize,
    ) -> Self {
        self.passes.push(Pass {
            mode: PassMode::Random { samples },
            carrier_sizes,
            denominators,
        });
        self
    }

    pub fn without_fixtures(mut self) -> Self {
        self.fixtures = false;
        self
    }

    pub fn validate(&self) -> Result<()> {
        for pass in &self.passes {
            if pass.carrier_sizes.is_empty() || *pass.carrier_sizes.start() == 0 {
                return Err(Error::InvalidConfig(
                    "carrier size range must be non-empty and start at 1 or more",
                ));
            }
            if pass.denominators.is_empty() || *pass.denominators.start() == 0 {
                return Err(Error::InvalidConfig(
                    "denominator range must be non-empty and start at 1 or more",
                ));
            }
            if pass.mode == (PassMode::Random { samples: 0 }) {
                return Err(Error::InvalidConfig("random mode needs at least one sample"));
            }
        }
        if self.generators.is_empty() {
            return Err(Error::InvalidConfig("generator count range must be non-empty"));
        }
        if self.topology_cap < 2 {
            return Err(Error::InvalidConfig("topology cap must admit 0_X and 1_X"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    /// Index into [`InstancePool::spaces`].
    pub space: usize,
    pub args: Vec<FuzzySet>,
}

#[derive(Debug, Clone)]
pub struct InstancePool {
    spaces: Vec<FuzzyTopology>,
    lists: [Vec<Instance>; 2],
    searched: [usize; 2],
}

impl InstancePool {
    pub fn build(config: &SearchConfig) -> Result<Self> {
        config.validate()?;
        let mut builder = Builder::default();
        let mut rng = SearchRng::new(config.seed);
        let mut carriers: Vec<Arc<Carrier>> = Vec::new();
        let mut carrier = |n: usize| -> Result<Arc<Carrier>> {
            while carriers.len() < n {
                carriers.push(Arc::new(Carrier::alphabetic(carriers.len() + 1)?));
            }
            Ok(carriers[n - 1].clone())
        };

        for pass in &config.passes {
            match pass.mode {
                PassMode::Exhaustive => {
                    for n in pass.carrier_sizes.clone() {
                        for d in pass.denominators.clone() {
                            let c = carrier(n)?;
                            let grid: Vec<FuzzySet> = enumerate_fuzzy_sets(&c, d).collect();
                            for t in enumerate_topologies_with_limit(&c, d, config.grid_limit)? {
                                builder.push_exhaustive(t, &grid);
                            }
                        }
                    }
                }
                PassMode::Random { samples } => {
                    for _ in 0..samples {
                        let n = rng.inclusive(*pass.carrier_sizes.start() as u64, *pass.carrier_sizes.end() as u64);
                        let d = rng.inclusive(
                            u64::from(*pass.denominators.start()),
                            u64::from(*pass.denominators.end()),
                        );
                        let g = rng.inclusive(*config.generators.start() as u64, *config.generators.end() as u64);
                        let c = carrier(n as usize)?;
                        let t = random_topology(&c, d as u32, g as usize, &mut rng, config.topology_cap)?;
                        builder.push_sampled(t, config.args_per_space, &mut rng);
                    }
                }
            }
        }
        builder.searched = [builder.lists[0].len(), builder.lists[1].len()];

        if config.fixtures {
            for (t, a) in fixture_spaces()? {
                builder.push_fixture(t, a);
            }
        }
        for t in &config.extra_spaces {
            let small = grid_size(t.carrier().len(), t.denominator()).is_some_and(|g| g <= EXTRA_SPACE_EXHAUSTIVE_ARGS);
            if small {
                let grid: Vec<FuzzySet> = enumerate_fuzzy_sets(t.carrier(), t.denominator()).collect();
                builder.push_exhaustive(t.clone(), &grid);
            } else {
                builder.push_sampled(t.clone(), config.args_per_space, &mut rng);
            }
        }
        Ok(InstancePool {
            spaces: builder.spaces,
            lists: builder.lists,
            searched: builder.searched,
        })
    }

    pub fn spaces(&self) -> &[FuzzyTopology] {
        &self.spaces
    }

    /// All instances for claims of `arity` (1 or 2).
    pub fn instances(&self, arity: usize) -> &[Instance] {
        &self.lists[arity - 1]
    }

    /// Length of the budget-limited prefix of [`Self::instances`].
    pub fn searched_len(&self, arity: usize) -> usize {
        self.searched[arity - 1]
    }

    /// Whether instance `index` of `arity` is evaluated under `budget`.
    pub fn in_budget(&self, arity: usize, index: usize, budget: Option<usize>) -> bool {
        index >= self.searched_len(arity) || budget.is_none_or(|b| index < b)
    }

    pub fn topology(&self, instance: &Instance) -> &FuzzyTopology {
        &self.spaces[instance.space]
    }
}

#[derive(Default)]
struct Builder {
    spaces: Vec<FuzzyTopology>,
    lists: [Vec<Instance>; 2],
    searched: [usize; 2],
}

impl Builder {
    fn add_space(&mut self, t: FuzzyTopology) -> usize {
        self.spaces.push(t);
        self.spaces.len() - 1
    }

    fn push_exhaustive(&mut self, t: FuzzyTopology, grid: &[FuzzySet]) {
        let space = self.add_space(t);
        for a in grid {
            self.lists[0].push(Instance {
                space,
                args: alloc::vec![a.clone()],
            });
        }
        for a in grid {
            for b in grid {
                self.lists[1].push(Instance {
                    space,
                    args: alloc::vec![a.clone(), b.clone()],
                });
            }
        }
    }

    /// `0_X`, `1_X`, every open and closed set, then random draws.
    fn push_sampled(&mut self, t: FuzzyTopology, draws: usize, rng: &mut SearchRng) {
        let bottom = t.bottom();
        let top = t.top();
        let mut unary: Vec<FuzzySet> = alloc::vec![bottom.clone(), top.clone()];
        for s in t.opens().iter().chain(t.closed_sets()) {
            if !unary.contains(s) {
                unary.push(s.clone());
            }
        }
        let mut binary: Vec<[FuzzySet; 2]> = Vec::new();
        for a in [&bottom, &top] {
            for b in [&bottom, &top] {
                binary.push([a.clone(), b.clone()]);
            }
        }
        for _ in 0..draws {
            unary.push(random_set(&t, rng));
        }
        for _ in 0..draws {
            let a = random_set(&t, rng);
            let c = random_set(&t, rng);
            binary.push([a.min_with(&c), a.max_with(&c)]);
            binary.push([a.clone(), a.clone()]);
            binary.push([a, c]);
        }
        let space = self.add_space(t);
        self.lists[0].extend(unary.into_iter().map(|a| Instance {
            space,
            args: alloc::vec![a],
        }));
        self.lists[1].extend(binary.into_iter().map(|args| Instance {
            space,
            args: args.into(),
        }));
    }

    /// The set itself, `0_X` and `1_X`, and all ordered pairs of them.
    fn push_fixture(&mut self, t: FuzzyTopology, a: FuzzySet) {
        let args = [a, t.bottom(), t.top()];
        let space = self.add_space(t);
        for x in &args {
            self.lists[0].push(Instance {
                space,
                args: alloc::vec![x.clone()],
            });
        }
        for x in &args {
            for y in &args {
                self.lists[1].push(Instance {
                    space,
                    args: alloc::vec![x.clone(), y.clone()],
                });
            }
        }
    }
}

fn random_set(t: &FuzzyTopology, rng: &mut SearchRng) -> FuzzySet {
    let d = t.denominator();
    let values = (0..t.carrier().len())
        .map(|_| rng.inclusive(0, u64::from(d)) as u32)
        .collect();
    FuzzySet::from_parts_unchecked(t.carrier().clone(), d, values)
}

/// Completion of `generators` uniformly drawn grid sets.
///
/// On completion overflow the generators are redrawn, up to
/// [`RANDOM_TOPOLOGY_RETRIES`] times.
pub fn random_topology(
    carrier: &Arc<Carrier>,
    d: u32,
    generators: usize,
    rng: &mut SearchRng,
    cap: usize,
) -> Result<FuzzyTopology> {
    if d == 0 {
        return Err(Error::ZeroDenominator);
    }
    let probe = FuzzyTopology::indiscrete(carrier.clone(), d)?;
    for _ in 0..RANDOM_TOPOLOGY_RETRIES {
        let gens: Vec<FuzzySet> = (0..generators).map(|_| random_set(&probe, rng)).collect();
        match complete_family(carrier, d, &gens, cap) {
            Err(Error::CompletionOverflow { .. }) => continue,
            other => return other,
        }
    }
    Err(Error::RandomTopologyOverflow {
        attempts: RANDOM_TOPOLOGY_RETRIES,
    })
}

/// The example space `{0, (8,4), (3,2), (3,4), (2,2), 1}` on `{a, b}` with `d = 10`.
pub fn example_space() -> FuzzyTopology {
    let c = Arc::new(Carrier::new(["a", "b"]).expect("static labels"));
    let opens = [[0, 0], [8, 4], [3, 2], [3, 4], [2, 2], [10, 10]]
        .iter()
        .map(|v| FuzzySet::from_parts_unchecked(c.clone(), 10, v.to_vec()))
        .collect();
    FuzzyTopology::new(c, 10, opens).expect("example family is a topology")
}

/// Always-checked spaces with their distinguished argument.
pub fn fixture_spaces() -> Result<Vec<(FuzzyTopology, FuzzySet)>> {
    let point = Arc::new(Carrier::new(["a"])?);
    let example = example_space();
    let example_arg = example.set(&[4, 3])?;

    let indiscrete = FuzzyTopology::indiscrete(point.clone(), 2)?;
    let indiscrete_arg = indiscrete.set(&[1])?;

    let chain_opens = [0, 2, 9, 10]
        .iter()
        .map(|&v| FuzzySet::new(point.clone(), 10, alloc::vec![v]))
        .collect::<Result<Vec<_>>>()?;
    let chain = FuzzyTopology::new(point, 10, chain_opens)?;
    let chain_arg = chain.set(&[9])?;

    Ok(alloc::vec![
        (example, example_arg),
        (indiscrete, indiscrete_arg),
        (chain, chain_arg),
    ])
}
