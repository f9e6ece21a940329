//! Storage-cluster repair simulation over a constructed code.
//!
//! Each code coordinate is a storage node holding one symbol of a codeword
//! encoding a seeded random message. Failed nodes are repaired
//! innermost-first along the per-symbol hierarchy chain: the smallest set
//! containing the symbol whose internal erasure count stays below its
//! distance is read in full, and the lost value is recovered by solving the
//! linear system the surviving columns impose. When no chain level
//! qualifies, repair escalates to the global code, which succeeds exactly
//! when the lost column lies in the span of the surviving columns.
//!
//! Node contact accounting reads every survivor of the chosen set (no
//! partial-read optimization), so a single failure repaired by an
//! `[a, b, delta]` set contacts `a - 1` nodes.
//!
//! All randomness comes from the seeded generator in [`crate::rng`];
//! experiments are bit-identical across runs, and the parallel and
//! sequential sweep paths merge per-trial statistics commutatively so they
//! agree exactly.

use std::collections::BTreeMap;

use crate::codes::{dot, LinearCode, ENUMERATION_CAP};
use crate::construct::{punctured_simplex, PuncturedSimplexSpec};
use crate::coords::CoordSet;
use crate::linalg;
use crate::locality::{locality_profile, SymbolChain};
use crate::rng::{derive_seed, SplitMix64};
use crate::{Error, Result};

/// The hierarchy level that served a repair, innermost (smallest kappa)
/// first in the derived ordering, with global repair as the last resort.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RepairLevel {
    /// A chain level of the given local dimension.
    Kappa(u32),
    /// The whole code.
    Global,
}

impl std::fmt::Display for RepairLevel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RepairLevel::Kappa(k) => write!(f, "kappa={k}"),
            RepairLevel::Global => write!(f, "global"),
        }
    }
}

/// One repaired (or unrecoverable) symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairEvent {
    pub symbol: usize,
    pub level: RepairLevel,
    /// Size of the repair set the policy settled on.
    pub set_size: usize,
    /// Surviving nodes read: `set_size` minus the erasures inside the set.
    pub contacted: usize,
    pub success: bool,
}

/// Outcome of one erasure pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairTrace {
    pub erased: CoordSet,
    /// Per-symbol events, symbol ascending.
    pub events: Vec<RepairEvent>,
    /// True when every erased symbol was recovered exactly.
    pub success: bool,
    /// Largest single-event contact count.
    pub max_contacted: usize,
    /// Total contacts across all events.
    pub total_contacted: usize,
}

impl RepairTrace {
    pub fn mean_contacted(&self) -> f64 {
        if self.events.is_empty() {
            0.0
        } else {
            self.total_contacted as f64 / self.events.len() as f64
        }
    }

    /// How many events each level served.
    pub fn level_histogram(&self) -> BTreeMap<RepairLevel, u64> {
        let mut hist = BTreeMap::new();
        for event in &self.events {
            *hist.entry(event.level).or_insert(0) += 1;
        }
        hist
    }
}

/// A simulated cluster: one node per code coordinate, preloaded with a
/// codeword of a seeded random message and the per-symbol repair hierarchy.
#[derive(Clone, Debug)]
pub struct Cluster {
    spec: PuncturedSimplexSpec,
    code: LinearCode,
    chains: Vec<SymbolChain>,
    message: Vec<u8>,
    codeword: Vec<u8>,
    seed: u64,
}

impl Cluster {
    pub fn spec(&self) -> PuncturedSimplexSpec {
        self.spec
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// Number of storage nodes (the code length).
    pub fn size(&self) -> usize {
        self.code.length()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn message(&self) -> &[u8] {
        &self.message
    }

    pub fn codeword(&self) -> &[u8] {
        &self.codeword
    }

    /// The repair hierarchy of a symbol, outermost level first.
    pub fn chain(&self, symbol: usize) -> Result<&SymbolChain> {
        if symbol == 0 || symbol > self.size() {
            return Err(Error::IndexOutOfRange {
                index: symbol,
                n: self.size(),
            });
        }
        Ok(&self.chains[symbol - 1])
    }

    /// Recovers the value at `e` from the codeword values on `survivors`,
    /// or `None` when the survivors do not determine it. The recovered value
    /// is the dot product of the erased column with any solution `x` of
    /// `g_i . x = c_i` over the survivors; it is well defined exactly when
    /// the erased column lies in the span of the surviving columns.
    fn recover_value(&self, e: usize, survivors: &CoordSet) -> Option<u8> {
        let field = self.code.field();
        let k = self.code.dimension();
        let target = self.code.column(e).expect("validated coordinate");
        let mut basis = linalg::Basis::new(*field, k);
        let mut rows = Vec::with_capacity(survivors.len());
        let mut b = Vec::with_capacity(survivors.len());
        for s in survivors.iter() {
            let col = self.code.column(s).expect("validated coordinate");
            basis.insert(col);
            rows.push(col.to_vec());
            b.push(self.codeword[s - 1]);
        }
        if !basis.contains_in_span(target) {
            return None;
        }
        let x = linalg::solve(field, &rows, &b)
            .expect("the stored codeword satisfies the survivor system");
        Some(dot(field, target, &x))
    }

    /// Repairs every symbol of `erasures`, innermost chain level first.
    ///
    /// A level qualifies when the erasures inside its set number at most its
    /// distance minus one; the chosen set's survivors are then read in full.
    /// Symbols whose chain offers no qualifying level fall through to global
    /// repair, which fails only when the erased column is outside the span
    /// of all surviving columns (reported in the trace, not as an error).
    pub fn inject_and_repair(&self, erasures: &CoordSet) -> Result<RepairTrace> {
        let n = self.size();
        for e in erasures.iter() {
            if e == 0 || e > n {
                return Err(Error::IndexOutOfRange { index: e, n });
            }
        }
        let mut events = Vec::with_capacity(erasures.len());
        for e in erasures.iter() {
            let chain = &self.chains[e - 1];
            debug_assert_eq!(chain.symbol, e);
            let mut chosen: Option<(&CoordSet, RepairLevel, usize)> = None;
            for (set, rtype) in chain.levels.iter().rev() {
                debug_assert!(set.contains(e));
                let inside = set.intersection(erasures).len();
                if inside <= rtype.distance() - 1 {
                    chosen = Some((set, RepairLevel::Kappa(rtype.dimension()), inside));
                    break;
                }
            }
            let full = CoordSet::full(n);
            let (set, level, inside) = match chosen {
                Some(c) => c,
                None => (&full, RepairLevel::Global, erasures.len()),
            };
            let survivors = set.difference(erasures);
            let value = self.recover_value(e, &survivors);
            let success = value == Some(self.codeword[e - 1]);
            debug_assert!(
                value.is_none() || success,
                "a determined value must match the stored codeword"
            );
            events.push(RepairEvent {
                symbol: e,
                level,
                set_size: set.len(),
                contacted: set.len() - inside,
                success,
            });
        }
        let success = events.iter().all(|ev| ev.success);
        let max_contacted = events.iter().map(|ev| ev.contacted).max().unwrap_or(0);
        let total_contacted = events.iter().map(|ev| ev.contacted).sum();
        Ok(RepairTrace {
            erased: erasures.clone(),
            events,
            success,
            max_contacted,
            total_contacted,
        })
    }
}

/// Builds a cluster for `S_q(m) - S_q(s)` (m >= 3), encoding a message whose
/// digits are drawn from the seeded generator.
pub fn build_cluster(q: u32, m: u32, s: u32, seed: u64) -> Result<Cluster> {
    let profile = locality_profile(q, m, s)?;
    let spec = profile.spec();
    let ps = punctured_simplex(q, m, s)?;
    let code = ps.into_code();
    let mut gen = SplitMix64::new(seed);
    let message: Vec<u8> = (0..code.dimension())
        .map(|_| gen.next_below(q as u64) as u8)
        .collect();
    let codeword = code.encode(&message)?;
    Ok(Cluster {
        spec,
        code,
        chains: profile.chains().to_vec(),
        message,
        codeword,
        seed,
    })
}

/// Statistics for one failure count, merged commutatively across trials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailureStats {
    /// Erasures injected per trial.
    pub failures: usize,
    pub trials: u64,
    /// Trials in which every symbol was recovered.
    pub successes: u64,
    /// Histogram of per-event contact counts.
    pub contacted: BTreeMap<usize, u64>,
    /// Histogram of serving levels across events.
    pub levels: BTreeMap<RepairLevel, u64>,
    /// Largest per-trial total contact count.
    pub max_total_contacted: usize,
}

impl FailureStats {
    fn empty(failures: usize) -> Self {
        FailureStats {
            failures,
            trials: 0,
            successes: 0,
            contacted: BTreeMap::new(),
            levels: BTreeMap::new(),
            max_total_contacted: 0,
        }
    }

    fn from_trace(failures: usize, trace: &RepairTrace) -> Self {
        let mut stats = FailureStats::empty(failures);
        stats.trials = 1;
        stats.successes = trace.success as u64;
        for event in &trace.events {
            *stats.contacted.entry(event.contacted).or_insert(0) += 1;
            *stats.levels.entry(event.level).or_insert(0) += 1;
        }
        stats.max_total_contacted = trace.total_contacted;
        stats
    }

    fn merge(mut self, other: FailureStats) -> Self {
        debug_assert_eq!(self.failures, other.failures);
        self.trials += other.trials;
        self.successes += other.successes;
        for (c, count) in other.contacted {
            *self.contacted.entry(c).or_insert(0) += count;
        }
        for (l, count) in other.levels {
            *self.levels.entry(l).or_insert(0) += count;
        }
        self.max_total_contacted = self.max_total_contacted.max(other.max_total_contacted);
        self
    }

    pub fn all_succeeded(&self) -> bool {
        self.successes == self.trials
    }
}

/// Aggregate results of a seeded repair experiment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentReport {
    pub spec: PuncturedSimplexSpec,
    pub trials: usize,
    pub seed: u64,
    /// One entry per failure count `1..=max_failures`.
    pub per_failure: Vec<FailureStats>,
}

impl ExperimentReport {
    pub fn all_succeeded(&self) -> bool {
        self.per_failure.iter().all(FailureStats::all_succeeded)
    }
}

fn trial_trace(cluster: &Cluster, f: usize, seed: u64) -> RepairTrace {
    let mut gen = SplitMix64::new(seed);
    let erasures: CoordSet = gen
        .sample_indices(cluster.size(), f)
        .into_iter()
        .map(|i| i + 1)
        .collect();
    cluster
        .inject_and_repair(&erasures)
        .expect("sampled erasures are in range")
}

fn failure_stats(cluster: &Cluster, f: usize, trials: usize, seed: u64) -> FailureStats {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..trials)
            .into_par_iter()
            .map(|t| {
                let trial_seed = derive_seed(seed, f as u64, t as u64);
                FailureStats::from_trace(f, &trial_trace(cluster, f, trial_seed))
            })
            .reduce(|| FailureStats::empty(f), FailureStats::merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..trials).fold(FailureStats::empty(f), |acc, t| {
            let trial_seed = derive_seed(seed, f as u64, t as u64);
            acc.merge(FailureStats::from_trace(
                f,
                &trial_trace(cluster, f, trial_seed),
            ))
        })
    }
}

/// Runs `trials` seeded trials for every failure count in
/// `1..=max_failures`, erasing uniformly sampled distinct nodes each trial.
/// Deterministic for a given seed regardless of the execution order.
pub fn run_experiment(
    q: u32,
    m: u32,
    s: u32,
    trials: usize,
    max_failures: usize,
    seed: u64,
) -> Result<ExperimentReport> {
    if trials < 1 {
        return Err(Error::InvalidArgs(format!(
            "experiment needs trials >= 1, got {trials}"
        )));
    }
    let cluster = build_cluster(q, m, s, seed)?;
    if max_failures < 1 || max_failures > cluster.size() {
        return Err(Error::InvalidArgs(format!(
            "failure count must lie in [1, {}], got {max_failures}",
            cluster.size()
        )));
    }
    let per_failure = (1..=max_failures)
        .map(|f| failure_stats(&cluster, f, trials, seed))
        .collect();
    Ok(ExperimentReport {
        spec: cluster.spec(),
        trials,
        seed,
        per_failure,
    })
}

/// Aggregate results of an exhaustive erasure sweep at one failure count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary {
    pub failures: usize,
    pub patterns: u64,
    /// Patterns in which every symbol was recovered.
    pub repaired: u64,
    /// Largest single-event contact count over all patterns.
    pub max_contacted: usize,
    /// Histogram of serving levels across all events of all patterns.
    pub levels: BTreeMap<RepairLevel, u64>,
}

impl SweepSummary {
    fn empty(failures: usize) -> Self {
        SweepSummary {
            failures,
            patterns: 0,
            repaired: 0,
            max_contacted: 0,
            levels: BTreeMap::new(),
        }
    }

    fn absorb(&mut self, trace: &RepairTrace) {
        self.patterns += 1;
        self.repaired += trace.success as u64;
        self.max_contacted = self.max_contacted.max(trace.max_contacted);
        for event in &trace.events {
            *self.levels.entry(event.level).or_insert(0) += 1;
        }
    }

    fn merge(mut self, other: SweepSummary) -> Self {
        debug_assert_eq!(self.failures, other.failures);
        self.patterns += other.patterns;
        self.repaired += other.repaired;
        self.max_contacted = self.max_contacted.max(other.max_contacted);
        for (l, count) in other.levels {
            *self.levels.entry(l).or_insert(0) += count;
        }
        self
    }

    pub fn all_repaired(&self) -> bool {
        self.repaired == self.patterns
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    result
}

/// Visits every `take`-subset of `pool` (ascending members, lexicographic
/// order), extending `prefix` in place.
fn for_each_combination(
    pool: &[usize],
    take: usize,
    prefix: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if take == 0 {
        visit(prefix);
        return;
    }
    for i in 0..=pool.len() - take {
        prefix.push(pool[i]);
        for_each_combination(&pool[i + 1..], take - 1, prefix, visit);
        prefix.pop();
    }
}

fn sweep_check(cluster: &Cluster, failures: usize) -> Result<()> {
    let n = cluster.size();
    if failures < 1 || failures > n {
        return Err(Error::InvalidArgs(format!(
            "failure count must lie in [1, {n}], got {failures}"
        )));
    }
    let patterns = binomial(n, failures);
    if patterns > ENUMERATION_CAP {
        return Err(Error::EnumerationCapExceeded {
            words: patterns,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(())
}

/// One sweep partition: all patterns whose smallest erased node is `first`.
fn sweep_partition(cluster: &Cluster, failures: usize, first: usize) -> SweepSummary {
    let n = cluster.size();
    let pool: Vec<usize> = (first + 1..=n).collect();
    let mut summary = SweepSummary::empty(failures);
    let mut prefix = vec![first];
    for_each_combination(&pool, failures - 1, &mut prefix, &mut |pattern| {
        let erasures: CoordSet = pattern.iter().copied().collect();
        let trace = cluster
            .inject_and_repair(&erasures)
            .expect("enumerated erasures are in range");
        summary.absorb(&trace);
    });
    summary
}

/// Sequential exhaustive sweep over every erasure pattern of the given size.
pub fn exhaustive_erasure_sweep_seq(cluster: &Cluster, failures: usize) -> Result<SweepSummary> {
    sweep_check(cluster, failures)?;
    let n = cluster.size();
    Ok((1..=n - failures + 1)
        .map(|first| sweep_partition(cluster, failures, first))
        .fold(SweepSummary::empty(failures), SweepSummary::merge))
}

/// Parallel exhaustive sweep, partitioned by the smallest erased node.
#[cfg(feature = "parallel")]
pub fn exhaustive_erasure_sweep_par(cluster: &Cluster, failures: usize) -> Result<SweepSummary> {
    use rayon::prelude::*;

    sweep_check(cluster, failures)?;
    let n = cluster.size();
    Ok((1..=n - failures + 1)
        .into_par_iter()
        .map(|first| sweep_partition(cluster, failures, first))
        .reduce(|| SweepSummary::empty(failures), SweepSummary::merge))
}

/// Feature-dispatched exhaustive sweep.
pub fn exhaustive_erasure_sweep(cluster: &Cluster, failures: usize) -> Result<SweepSummary> {
    #[cfg(feature = "parallel")]
    {
        exhaustive_erasure_sweep_par(cluster, failures)
    }
    #[cfg(not(feature = "parallel"))]
    {
        exhaustive_erasure_sweep_seq(cluster, failures)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference_cluster() -> Cluster {
        build_cluster(2, 4, 2, 1).unwrap()
    }

    #[test]
    fn cluster_construction_is_seeded_and_valid() {
        let cluster = reference_cluster();
        assert_eq!(cluster.size(), 12);
        assert_eq!(cluster.message().len(), 4);
        assert!(cluster.message().iter().all(|&x| x < 2));
        assert_eq!(
            cluster.codeword(),
            cluster.code().encode(cluster.message()).unwrap()
        );
        assert_eq!(cluster.chain(1).unwrap().levels.len(), 2);
        let again = build_cluster(2, 4, 2, 1).unwrap();
        assert_eq!(cluster.codeword(), again.codeword());
        let other = build_cluster(2, 4, 2, 2).unwrap();
        assert_eq!(other.size(), 12);
        assert!(cluster.chain(13).is_err());
    }

    #[test]
    fn hierarchy_depth_tracks_the_construction() {
        // One-level hierarchies: first-order Reed-Muller (starts at kappa =
        // m - 1) and the full simplex over a small m.
        assert_eq!(
            build_cluster(2, 4, 3, 1).unwrap().chain(1).unwrap().levels.len(),
            1
        );
        let simplex = build_cluster(2, 3, 0, 1).unwrap();
        assert_eq!(simplex.size(), 7);
        assert_eq!(simplex.chain(1).unwrap().levels.len(), 1);
        // No chain at all: every repair is global.
        let flat = build_cluster(2, 3, 2, 1).unwrap();
        assert!(flat.chain(1).unwrap().levels.is_empty());
        let trace = flat
            .inject_and_repair(&CoordSet::from([2]))
            .unwrap();
        assert!(trace.success);
        assert_eq!(trace.events[0].level, RepairLevel::Global);
    }

    #[test]
    fn single_failures_repair_at_the_innermost_level() {
        let cluster = reference_cluster();
        for e in 1..=cluster.size() {
            let trace = cluster.inject_and_repair(&CoordSet::from([e])).unwrap();
            assert!(trace.success);
            assert_eq!(trace.events.len(), 1);
            let event = &trace.events[0];
            assert_eq!(event.level, RepairLevel::Kappa(2));
            assert_eq!(event.set_size, 3);
            assert_eq!(event.contacted, 2);
            // Never worse than what global repair would read.
            assert!(event.contacted <= cluster.size() - 1);
        }
    }

    #[test]
    fn local_overload_escalates_one_level() {
        let cluster = reference_cluster();
        let chain = cluster.chain(1).unwrap();
        let (middle, inner) = (&chain.levels[0].0, &chain.levels[1].0);
        assert_eq!((middle.len(), inner.len()), (6, 3));
        // A second erasure inside symbol 1's innermost set forces its repair
        // up to the six-coordinate middle set.
        let partner = inner.iter().find(|&e| e != 1).unwrap();
        let trace = cluster
            .inject_and_repair(&CoordSet::from([1, partner]))
            .unwrap();
        assert!(trace.success);
        let first = &trace.events[0];
        assert_eq!(first.symbol, 1);
        assert_eq!(first.level, RepairLevel::Kappa(3));
        assert_eq!(first.set_size, 6);
        assert_eq!(first.contacted, 4);
    }

    #[test]
    fn double_failures_contact_at_most_four_nodes() {
        let cluster = reference_cluster();
        for a in 1..=cluster.size() {
            for b in a + 1..=cluster.size() {
                let trace = cluster.inject_and_repair(&CoordSet::from([a, b])).unwrap();
                assert!(trace.success);
                assert!(trace.max_contacted <= 4, "pattern {{{a}, {b}}}");
            }
        }
    }

    #[test]
    fn all_sub_distance_erasure_patterns_repair() {
        let cluster = reference_cluster();
        let sweep = exhaustive_erasure_sweep(&cluster, 5).unwrap();
        assert_eq!(sweep.patterns, 792);
        assert!(sweep.all_repaired());
        // Global repair reads the 7 survivors at most.
        assert!(sweep.max_contacted <= 7);
        assert_eq!(sweep.levels.values().sum::<u64>(), 792 * 5);
    }

    #[test]
    fn sweep_paths_agree_and_validate() {
        let cluster = reference_cluster();
        let seq = exhaustive_erasure_sweep_seq(&cluster, 2).unwrap();
        assert_eq!(seq.patterns, 66);
        assert!(seq.all_repaired());
        #[cfg(feature = "parallel")]
        assert_eq!(seq, exhaustive_erasure_sweep_par(&cluster, 2).unwrap());
        assert!(exhaustive_erasure_sweep(&cluster, 0).is_err());
        assert!(exhaustive_erasure_sweep(&cluster, 13).is_err());
        let wide = build_cluster(2, 6, 1, 1).unwrap();
        assert!(matches!(
            exhaustive_erasure_sweep(&wide, 6),
            Err(Error::EnumerationCapExceeded { .. })
        ));
    }

    #[test]
    fn beyond_distance_failures_are_reported_not_thrown() {
        let cluster = reference_cluster();
        // Erase one full middle set: its six columns span only a
        // 3-dimensional space, so some symbol cannot be determined by the
        // 6 survivors (entropy 3 < k = 4 would be violated otherwise...
        // here survivors have entropy at most 4 but the erased middle set
        // carries entropy 3 while overlapping the survivor span in rank 1).
        let middle = cluster.chain(1).unwrap().levels[0].0.clone();
        let trace = cluster.inject_and_repair(&middle).unwrap();
        assert_eq!(trace.events.len(), 6);
        let survivors = CoordSet::full(12).difference(&middle);
        let determined = cluster.code().closure(&survivors).unwrap();
        for event in &trace.events {
            assert_eq!(event.success, determined.contains(event.symbol));
            if !event.success {
                assert_eq!(event.level, RepairLevel::Global);
            }
        }
        assert_eq!(trace.success, middle.is_subset_of(&determined));
    }

    #[test]
    fn experiment_is_deterministic_and_exhaustively_successful() {
        let report = run_experiment(2, 4, 2, 40, 5, 7).unwrap();
        assert_eq!(report.per_failure.len(), 5);
        assert!(report.all_succeeded());
        // Single failures: always the innermost level, always 2 contacts.
        let single = &report.per_failure[0];
        assert_eq!(single.trials, 40);
        assert_eq!(single.contacted, BTreeMap::from([(2, 40)]));
        assert_eq!(single.levels, BTreeMap::from([(RepairLevel::Kappa(2), 40)]));
        // Bit-identical reruns.
        assert_eq!(report, run_experiment(2, 4, 2, 40, 5, 7).unwrap());
        assert_ne!(
            report.per_failure[1],
            run_experiment(2, 4, 2, 40, 5, 8).unwrap().per_failure[1]
        );
    }

    #[test]
    fn experiment_rejects_degenerate_parameters() {
        assert!(run_experiment(2, 4, 2, 0, 1, 7).is_err());
        assert!(run_experiment(2, 4, 2, 10, 0, 7).is_err());
        assert!(run_experiment(2, 4, 2, 10, 13, 7).is_err());
    }

    #[test]
    fn erasure_validation() {
        let cluster = reference_cluster();
        assert!(matches!(
            cluster.inject_and_repair(&CoordSet::from([13])),
            Err(Error::IndexOutOfRange { index: 13, n: 12 })
        ));
        let empty = cluster.inject_and_repair(&CoordSet::empty()).unwrap();
        assert!(empty.success);
        assert!(empty.events.is_empty());
        assert_eq!(empty.mean_contacted(), 0.0);
    }
}
