//! Exhaustive, pruned and randomized computation of the covering thresholds
//! c₂(n, C6³) and c₁(n, C6³) at small n.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::covering::find_c6_in_index;
use crate::encoding::{binomial, colex_triples, Canonizer, MaskSpace};
use crate::error::{Error, Result};
use crate::graph::{PairIndex, SimpleGraph, ThreeGraph, Triple};
use crate::patterns::{find_p5, find_two_disjoint_p3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThresholdKind {
    /// δ₂, giving c₂.
    Codegree,
    /// δ₁, giving c₁.
    Degree,
}

impl ThresholdKind {
    pub fn name(self) -> &'static str {
        match self {
            ThresholdKind::Codegree => "codegree",
            ThresholdKind::Degree => "degree",
        }
    }

    fn measure(self, space: &MaskSpace, mask: u64) -> usize {
        match self {
            ThresholdKind::Codegree => space.min_codegree(mask),
            ThresholdKind::Degree => space.min_degree(mask),
        }
    }

    fn measure_graph(self, g: &ThreeGraph) -> usize {
        match self {
            ThresholdKind::Codegree => g.min_codegree(),
            ThresholdKind::Degree => g.min_degree(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    AllLabeled,
    /// Only the numerically least mask of each isomorphism class.
    CanonicalOnly,
}

/// What to enumerate and how to split it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationPlan {
    pub n: usize,
    pub min_codegree: Option<usize>,
    pub min_degree: Option<usize>,
    pub mode: EnumerationMode,
    pub shards: usize,
}

impl EnumerationPlan {
    pub fn all_labeled(n: usize) -> Self {
        EnumerationPlan {
            n,
            min_codegree: None,
            min_degree: None,
            mode: EnumerationMode::AllLabeled,
            shards: 1,
        }
    }

    pub fn canonical(n: usize) -> Self {
        EnumerationPlan {
            mode: EnumerationMode::CanonicalOnly,
            ..Self::all_labeled(n)
        }
    }

    pub fn with_shards(mut self, shards: usize) -> Self {
        self.shards = shards;
        self
    }

    pub fn with_min_codegree(mut self, floor: usize) -> Self {
        self.min_codegree = Some(floor);
        self
    }

    pub fn with_min_degree(mut self, floor: usize) -> Self {
        self.min_degree = Some(floor);
        self
    }

    fn width(&self) -> usize {
        binomial(self.n, 3)
    }

    fn check(&self) -> Result<()> {
        if self.width() > 63 {
            return Err(Error::TooLarge(format!(
                "C({}, 3) = {} triples exceeds the 63-bit mask width",
                self.n,
                self.width()
            )));
        }
        if self.mode == EnumerationMode::CanonicalOnly && self.n > 8 {
            return Err(Error::TooLarge(format!(
                "canonical-only enumeration supports n ≤ 8, got {}",
                self.n
            )));
        }
        if self.shards == 0 {
            return Err(Error::BadArguments("shard count must be positive".into()));
        }
        Ok(())
    }

    /// Mask range owned by shard `i`: `[i·2^w/s, (i+1)·2^w/s)`.
    pub fn shard_range(&self, i: usize) -> std::ops::Range<u64> {
        let total = 1u128 << self.width();
        let s = self.shards as u128;
        let lo = total * i as u128 / s;
        let hi = total * (i as u128 + 1) / s;
        lo as u64..hi as u64
    }

    /// Edges needed before the degree floors can possibly hold.
    fn min_edges(&self) -> usize {
        let pairs = binomial(self.n, 2);
        let by_codegree = self.min_codegree.map_or(0, |t| (t * pairs).div_ceil(3));
        let by_degree = self.min_degree.map_or(0, |t| (t * self.n).div_ceil(3));
        by_codegree.max(by_degree)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    /// Masks examined.
    pub scanned: u64,
    /// Masks handed to the visitor.
    pub visited: u64,
    /// Masks rejected by the degree floors.
    pub pruned: u64,
    /// Masks skipped as non-canonical.
    pub non_canonical: u64,
}

impl EnumerationStats {
    fn merge(self, o: Self) -> Self {
        EnumerationStats {
            scanned: self.scanned + o.scanned,
            visited: self.visited + o.visited,
            pruned: self.pruned + o.pruned,
            non_canonical: self.non_canonical + o.non_canonical,
        }
    }
}

/// Folds every graph selected by `plan`, one accumulator per shard.
///
/// Shards run in parallel and are merged in shard order; `merge` should be
/// associative and commutative so the shard count cannot change the result.
pub fn fold_3graphs<A, I, S, M>(
    plan: &EnumerationPlan,
    init: I,
    step: S,
    merge: M,
) -> Result<(A, EnumerationStats)>
where
    A: Send,
    I: Fn() -> A + Sync,
    S: Fn(&mut A, &MaskSpace, u64) + Sync,
    M: Fn(A, A) -> A,
{
    plan.check()?;
    let space = MaskSpace::new(plan.n)?;
    let canon = match plan.mode {
        EnumerationMode::CanonicalOnly => Some(Canonizer::new(plan.n)?),
        EnumerationMode::AllLabeled => None,
    };
    let min_edges = plan.min_edges() as u32;
    let partials: Vec<(A, EnumerationStats)> = (0..plan.shards)
        .into_par_iter()
        .map(|i| {
            let mut acc = init();
            let mut stats = EnumerationStats::default();
            for mask in plan.shard_range(i) {
                stats.scanned += 1;
                if let Some(c) = &canon {
                    if !c.is_canonical(mask) {
                        stats.non_canonical += 1;
                        continue;
                    }
                }
                if mask.count_ones() < min_edges
                    || plan
                        .min_codegree
                        .is_some_and(|t| space.min_codegree(mask) < t)
                    || plan.min_degree.is_some_and(|t| space.min_degree(mask) < t)
                {
                    stats.pruned += 1;
                    continue;
                }
                stats.visited += 1;
                step(&mut acc, &space, mask);
            }
            (acc, stats)
        })
        .collect();
    let mut it = partials.into_iter();
    let (mut acc, mut stats) = it.next().expect("at least one shard");
    for (a, s) in it {
        acc = merge(acc, a);
        stats = stats.merge(s);
    }
    Ok((acc, stats))
}

/// Calls `visitor` on every selected graph (as a mask over `space`).
pub fn enumerate_3graphs<F>(plan: &EnumerationPlan, visitor: F) -> Result<EnumerationStats>
where
    F: Fn(&MaskSpace, u64) + Sync,
{
    fold_3graphs(
        plan,
        || (),
        |_, space, mask| visitor(space, mask),
        |_, _| (),
    )
    .map(|(_, s)| s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Every labelled graph (n ≤ 6).
    Exhaustive,
    /// One representative per isomorphism class (n ≤ 6).
    Canonical,
    /// Branch and bound over graphs with vertex 0 uncovered (n ≤ 7).
    Pruned,
    /// Greedy random maximal non-covering graphs; a lower bound only.
    Randomized { trials: u64, seed: u64 },
}

impl SearchMode {
    pub fn name(&self) -> &'static str {
        match self {
            SearchMode::Exhaustive => "exhaustive",
            SearchMode::Canonical => "canonical",
            SearchMode::Pruned => "pruned",
            SearchMode::Randomized { .. } => "randomized",
        }
    }

    /// The exact mode used when none is requested.
    pub fn default_for(n: usize) -> Result<Self> {
        match n {
            0..=6 => Ok(SearchMode::Exhaustive),
            7 => Ok(SearchMode::Pruned),
            _ => Err(Error::TooLarge(format!(
                "exact thresholds are available for n ≤ 7; use randomized mode for n = {n}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdResult {
    pub kind: ThresholdKind,
    pub n: usize,
    /// Largest minimum degree of the requested kind over non-covering graphs.
    pub value: usize,
    /// A non-covering graph attaining `value`.
    pub witness: Option<ThreeGraph>,
    /// False for randomized lower bounds.
    pub exact: bool,
    pub mode: SearchMode,
    pub graphs_scanned: u64,
    pub wall_time: Duration,
}

/// Best (value, mask) so far; larger value wins, then the smaller mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Best {
    value: Option<usize>,
    mask: u64,
}

impl Best {
    const NONE: Best = Best {
        value: None,
        mask: 0,
    };

    fn beats(&self, value: usize, mask: u64) -> bool {
        match self.value {
            None => true,
            Some(v) => value > v || (value == v && mask < self.mask),
        }
    }

    fn merge(self, o: Best) -> Best {
        match o.value {
            Some(v) if self.beats(v, o.mask) => o,
            _ => self,
        }
    }
}

fn check_order(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::TooFewVertices { needed: 3, got: n })
    } else {
        Ok(())
    }
}

pub fn compute_c2(n: usize) -> Result<ThresholdResult> {
    compute_threshold(ThresholdKind::Codegree, n, SearchMode::default_for(n)?, 1)
}

pub fn compute_c1(n: usize) -> Result<ThresholdResult> {
    compute_threshold(ThresholdKind::Degree, n, SearchMode::default_for(n)?, 1)
}

/// max δ_i(G) over n-vertex 3-graphs G without a C6³-covering.
pub fn compute_threshold(
    kind: ThresholdKind,
    n: usize,
    mode: SearchMode,
    shards: usize,
) -> Result<ThresholdResult> {
    check_order(n)?;
    let start = Instant::now();
    let (value, witness, scanned) = match mode {
        SearchMode::Exhaustive | SearchMode::Canonical => {
            if n > 6 {
                return Err(Error::TooLarge(format!(
                    "{} scan supports n ≤ 6, got {n}; use pruned (n = 7) or randomized mode",
                    mode.name()
                )));
            }
            let plan = match mode {
                SearchMode::Canonical => EnumerationPlan::canonical(n),
                _ => EnumerationPlan::all_labeled(n),
            }
            .with_shards(shards);
            scan_threshold(kind, &plan)?
        }
        SearchMode::Pruned => {
            if n > 7 {
                return Err(Error::TooLarge(format!(
                    "pruned search supports n ≤ 7, got {n}; use randomized mode"
                )));
            }
            let mut bnb = BranchAndBound::new(kind, n)?;
            bnb.run();
            let space = &bnb.space;
            let value = bnb.best.value.expect("the empty graph is always a leaf");
            (value, Some(space.to_graph(bnb.best.mask)), bnb.nodes)
        }
        SearchMode::Randomized { trials, seed } => {
            if trials == 0 {
                return Err(Error::BadArguments(
                    "randomized mode needs at least one trial".into(),
                ));
            }
            let (value, g) = randomized_lower_bound(kind, n, trials, seed);
            (value, Some(g), trials)
        }
    };
    Ok(ThresholdResult {
        kind,
        n,
        value,
        witness,
        exact: !matches!(mode, SearchMode::Randomized { .. }),
        mode,
        graphs_scanned: scanned,
        wall_time: start.elapsed(),
    })
}

fn scan_threshold(
    kind: ThresholdKind,
    plan: &EnumerationPlan,
) -> Result<(usize, Option<ThreeGraph>, u64)> {
    let (best, stats) = fold_3graphs(
        plan,
        || Best::NONE,
        |best, space, mask| {
            let value = kind.measure(space, mask);
            // Masks ascend within a shard, so a tie can never win here.
            if (best.value.is_none() || value > best.value.unwrap()) && !space.fully_covered(mask) {
                *best = Best {
                    value: Some(value),
                    mask,
                };
            }
        },
        Best::merge,
    )?;
    let space = MaskSpace::new(plan.n)?;
    let value = best.value.expect("the empty graph is never covered");
    Ok((value, Some(space.to_graph(best.mask)), stats.scanned))
}

/// Depth-first include/exclude over triples keeping vertex 0 uncovered.
///
/// Every non-covering graph is isomorphic to one where vertex 0 is uncovered,
/// and that family is closed under deleting edges, so a branch is cut as soon
/// as the optimistic bound (current plus undecided incidences) cannot beat the
/// best value found.
struct BranchAndBound {
    kind: ThresholdKind,
    space: MaskSpace,
    /// Member "slots" (vertices or pairs) of each triple.
    slots_of: Vec<Vec<usize>>,
    /// Copies through vertex 0 that use each triple.
    copies_with: Vec<Vec<u64>>,
    current: Vec<usize>,
    undecided: Vec<usize>,
    best: Best,
    nodes: u64,
}

impl BranchAndBound {
    fn new(kind: ThresholdKind, n: usize) -> Result<Self> {
        let space = MaskSpace::new(n)?;
        let triples = space.triples().to_vec();
        let slots_of: Vec<Vec<usize>> = triples
            .iter()
            .map(|&[a, b, c]| match kind {
                ThresholdKind::Degree => vec![a, b, c],
                ThresholdKind::Codegree => {
                    let pair = |x: usize, y: usize| {
                        // rank of {x < y} among pairs in row order
                        x * n - x * (x + 1) / 2 + (y - x - 1)
                    };
                    vec![pair(a, b), pair(a, c), pair(b, c)]
                }
            })
            .collect();
        let slot_count = match kind {
            ThresholdKind::Degree => n,
            ThresholdKind::Codegree => binomial(n, 2),
        };
        let mut undecided = vec![0; slot_count];
        for slots in &slots_of {
            for &s in slots {
                undecided[s] += 1;
            }
        }
        let copies_with = (0..triples.len())
            .map(|i| {
                space
                    .copies_through(0)
                    .iter()
                    .copied()
                    .filter(|c| c & (1 << i) != 0)
                    .collect()
            })
            .collect();
        Ok(BranchAndBound {
            kind,
            space,
            slots_of,
            copies_with,
            current: vec![0; slot_count],
            undecided,
            best: Best::NONE,
            nodes: 0,
        })
    }

    fn bound(&self) -> usize {
        self.current
            .iter()
            .zip(&self.undecided)
            .map(|(c, u)| c + u)
            .min()
            .unwrap_or(0)
    }

    fn run(&mut self) {
        self.dfs(0, 0);
    }

    fn dfs(&mut self, i: usize, mask: u64) {
        self.nodes += 1;
        if let Some(best) = self.best.value {
            if self.bound() <= best {
                return;
            }
        }
        if i == self.slots_of.len() {
            let value = self.current.iter().copied().min().unwrap_or(0);
            debug_assert_eq!(value, self.kind.measure(&self.space, mask));
            if self.best.value.is_none_or(|b| value > b) {
                self.best = Best {
                    value: Some(value),
                    mask,
                };
            }
            return;
        }
        for k in 0..self.slots_of[i].len() {
            let s = self.slots_of[i][k];
            self.undecided[s] -= 1;
        }
        let with = mask | 1 << i;
        if !self.copies_with[i].iter().any(|&c| c & !with == 0) {
            for k in 0..self.slots_of[i].len() {
                let s = self.slots_of[i][k];
                self.current[s] += 1;
            }
            self.dfs(i + 1, with);
            for k in 0..self.slots_of[i].len() {
                let s = self.slots_of[i][k];
                self.current[s] -= 1;
            }
        }
        self.dfs(i + 1, mask);
        for k in 0..self.slots_of[i].len() {
            let s = self.slots_of[i][k];
            self.undecided[s] += 1;
        }
    }
}

/// Random greedy maximal graphs with vertex 0 uncovered; best of `trials`.
fn randomized_lower_bound(
    kind: ThresholdKind,
    n: usize,
    trials: u64,
    seed: u64,
) -> (usize, ThreeGraph) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples = colex_triples(n);
    let mut best: Option<(usize, ThreeGraph)> = None;
    for _ in 0..trials {
        let mut order = triples.clone();
        order.shuffle(&mut rng);
        let g = greedy_uncovered(n, &order);
        let value = kind.measure_graph(&g);
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, g));
        }
    }
    best.expect("trials > 0")
}

/// Adds triples in the given order whenever vertex 0 stays uncovered.
pub(crate) fn greedy_uncovered(n: usize, order: &[Triple]) -> ThreeGraph {
    let mut idx = PairIndex::new(n);
    let mut kept = Vec::new();
    for &t in order {
        idx.insert(t);
        if find_c6_in_index(&idx, 0).is_some() {
            idx.remove(t);
        } else {
            kept.push(t);
        }
    }
    ThreeGraph::new(n, kept).expect("distinct in-range triples")
}

/// Each triple of `0..n` independently with probability `p`, drawn in colex
/// order from ChaCha8 seeded with `seed`.
pub fn random_3graph(n: usize, p: f64, seed: u64) -> Result<ThreeGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!("probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_3graph_with(n, p, &mut rng))
}

pub(crate) fn random_3graph_with(n: usize, p: f64, rng: &mut impl Rng) -> ThreeGraph {
    let edges = colex_triples(n)
        .into_iter()
        .filter(|_| rng.random_bool(p))
        .collect();
    ThreeGraph::from_set(n, edges)
}

/// Checks that every 2-graph on `m` labelled vertices with minimum degree at
/// least 2 contains a P₅ or a 2P₃. Returns the verdict and every graph that
/// has neither.
pub fn verify_min_deg2_implies_pattern(m: usize) -> Result<(bool, Vec<SimpleGraph>)> {
    if m > 7 {
        return Err(Error::TooLarge(format!(
            "2^C({m}, 2) graphs is beyond the supported m ≤ 7"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
    let vertex_masks: Vec<u32> = (0..m)
        .map(|v| {
            pairs
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == v || b == v)
                .fold(0, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let total = 1u32 << pairs.len();
    let chunks = 64u32.min(total);
    let mut failures: Vec<(u32, SimpleGraph)> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let lo = (total as u64 * c as u64 / chunks as u64) as u32;
            let hi = (total as u64 * (c as u64 + 1) / chunks as u64) as u32;
            let (pairs, vertex_masks) = (&pairs, &vertex_masks);
            (lo..hi).filter_map(move |mask| {
                if vertex_masks.iter().any(|vm| (mask & vm).count_ones() < 2) {
                    return None;
                }
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e);
                let h = SimpleGraph::with_vertices(m, edges).expect("valid pairs");
                if find_p5(&h).is_some() || find_two_disjoint_p3(&h).is_some() {
                    None
                } else {
                    Some((mask, h))
                }
            })
        })
        .collect();
    failures.sort_by_key(|(mask, _)| *mask);
    Ok((
        failures.is_empty(),
        failures.into_iter().map(|(_, h)| h).collect(),
    ))
}
