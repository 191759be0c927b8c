//! Statement checkers and the exhaustive search harness.
//!
//! Each checker evaluates one published statement about splitting on one
//! instance and returns a [`CheckReport`]. The statements are proved
//! results, so a `fail` verdict inside the hypotheses points at a defect in
//! this library rather than at new mathematics; the reports say so.
//!
//! Hypotheses are enforced strictly by default: an instance outside them
//! yields `precondition-unmet`. With [`CheckOptions::lenient`] the conclusion
//! is evaluated anyway and the report is marked `outside_hypothesis`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::GF2Matrix;
use crate::graphs::{
    commutation_check, edge_triples_at, enumerate_connected_multigraphs, splitting_lemma_check,
};
use crate::io::{digest, write_matroid};
use crate::matroid::{default_labels, BinaryMatroid};
use crate::report::{CheckReport, Verdict};
use crate::set::ElementSet;
use crate::splitting::{characterize_circuits, rank_from_circuits, split_matroid};

/// Largest ground set the matroid enumerator accepts.
pub const MAX_ENUMERATION_GROUND: usize = 8;

/// Subset-quantified checks are exhaustive up to this ground size.
pub const EXHAUSTIVE_SUBSETS_UP_TO: usize = 7;

const PROVED_NOTE: &str = "the statement is proved; a failure inside its hypotheses indicates a defect in this implementation";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Filter {
    Connected,
    Disconnected,
    Loopless,
    Coloopless,
    GirthAtLeast(usize),
    CogirthAtLeast(usize),
    NConnected(usize),
    VerticallyNConnected(usize),
}

impl Filter {
    pub fn matches(&self, m: &BinaryMatroid) -> Result<bool> {
        Ok(match *self {
            Filter::Connected => m.is_connected(),
            Filter::Disconnected => !m.is_connected(),
            Filter::Loopless => m.loops().is_empty(),
            Filter::Coloopless => m.coloops().is_empty(),
            Filter::GirthAtLeast(g) => m.girth()?.is_none_or(|x| x >= g),
            Filter::CogirthAtLeast(c) => m.cogirth()?.is_none_or(|x| x >= c),
            Filter::NConnected(n) => m.is_n_connected(n)?,
            Filter::VerticallyNConnected(n) => m.is_vertically_n_connected(n)?,
        })
    }
}

impl FromStr for Filter {
    type Err = Error;

    /// `connected`, `disconnected`, `loopless`, `coloopless`, `girth>=G`,
    /// `cogirth>=C`, `N-connected`, `vertically-N-connected`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown filter {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        Ok(match s {
            "connected" => Filter::Connected,
            "disconnected" => Filter::Disconnected,
            "loopless" => Filter::Loopless,
            "coloopless" => Filter::Coloopless,
            _ => {
                if let Some(g) = s.strip_prefix("girth>=") {
                    Filter::GirthAtLeast(num(g)?)
                } else if let Some(c) = s.strip_prefix("cogirth>=") {
                    Filter::CogirthAtLeast(num(c)?)
                } else if let Some(n) = s
                    .strip_prefix("vertically-")
                    .and_then(|r| r.strip_suffix("-connected"))
                {
                    Filter::VerticallyNConnected(num(n)?)
                } else if let Some(n) = s.strip_suffix("-connected") {
                    Filter::NConnected(num(n)?)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub ground_size: usize,
    /// Inclusive rank bounds.
    pub rank_range: Option<(usize, usize)>,
    pub filters: Vec<Filter>,
}

impl EnumerationSpec {
    pub fn all(ground_size: usize) -> Self {
        EnumerationSpec {
            ground_size,
            rank_range: None,
            filters: Vec::new(),
        }
    }

    pub fn with_filter(mut self, f: Filter) -> Self {
        self.filters.push(f);
        self
    }
}

/// Every labeled binary matroid on `e1..en`, one per row space, in order of
/// rank, then pivot set, then free entries. Filters apply lazily.
pub fn enumerate_binary_matroids(
    spec: &EnumerationSpec,
) -> Result<impl Iterator<Item = BinaryMatroid> + use<>> {
    let n = spec.ground_size;
    if n > MAX_ENUMERATION_GROUND {
        return Err(Error::GroundTooLarge {
            size: n,
            limit: MAX_ENUMERATION_GROUND,
            guard: "matroid-enumeration",
        });
    }
    let (lo, hi) = spec.rank_range.unwrap_or((0, n));
    let filters = spec.filters.clone();
    Ok(Subspaces::new(n, lo, hi.min(n)).filter(move |m| {
        filters
            .iter()
            .all(|f| f.matches(m).expect("small instances stay within guards"))
    }))
}

/// Reduced row echelon matrices over GF(2), rank by rank.
struct Subspaces {
    n: usize,
    labels: Vec<String>,
    rank: usize,
    rank_hi: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    mask: u64,
    done: bool,
}

impl Subspaces {
    fn new(n: usize, lo: usize, hi: usize) -> Self {
        let mut s = Subspaces {
            n,
            labels: default_labels(n),
            rank: lo,
            rank_hi: hi,
            pivots: (0..lo).collect(),
            free: Vec::new(),
            mask: 0,
            done: lo > hi,
        };
        s.refresh_free();
        s
    }

    fn refresh_free(&mut self) {
        self.free.clear();
        for (row, &p) in self.pivots.iter().enumerate() {
            for col in p + 1..self.n {
                if !self.pivots.contains(&col) {
                    self.free.push((row, col));
                }
            }
        }
        self.mask = 0;
    }

    fn advance_pivots(&mut self) -> bool {
        let k = self.pivots.len();
        for i in (0..k).rev() {
            if self.pivots[i] < self.n - k + i {
                self.pivots[i] += 1;
                for j in i + 1..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Subspaces {
    type Item = BinaryMatroid;

    fn next(&mut self) -> Option<BinaryMatroid> {
        if self.done {
            return None;
        }
        let mut rows: Vec<u64> = self.pivots.iter().map(|&p| 1u64 << p).collect();
        for (bit, &(row, col)) in self.free.iter().enumerate() {
            if self.mask >> bit & 1 == 1 {
                rows[row] |= 1 << col;
            }
        }
        let m = BinaryMatroid::from_rref_masks(self.labels.clone(), rows);

        self.mask += 1;
        if self.mask == 1u64 << self.free.len() {
            if !self.advance_pivots() {
                self.rank += 1;
                if self.rank > self.rank_hi {
                    self.done = true;
                } else {
                    self.pivots = (0..self.rank).collect();
                }
            }
            self.refresh_free();
        }
        Some(m)
    }
}

/// Fixed-seed random matroids: ground sizes drawn from `sizes`, rank from
/// `1..n`, entries uniform.
pub fn random_matroids(
    count: usize,
    sizes: std::ops::RangeInclusive<usize>,
    seed: u64,
) -> Vec<BinaryMatroid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(sizes.clone());
            let rows = rng.gen_range(1..n);
            let masks: Vec<u64> = (0..rows)
                .map(|_| rng.gen::<u64>() & ((1u64 << n) - 1))
                .collect();
            BinaryMatroid::with_default_labels(GF2Matrix::from_masks(n, &masks))
                .expect("valid shape")
        })
        .collect()
}

/// How the "contains no 2-circuit" clause of the vertical 3-connectivity
/// theorem is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TwoCircuitReading {
    /// No 2-circuit is a subset of the cocircuit.
    #[default]
    Subset,
    /// No 2-circuit meets the cocircuit.
    Meets,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Evaluate conclusions even when hypotheses fail.
    pub lenient: bool,
    /// Treat "loopless and coloopless" as a hypothesis of every matroid
    /// statement.
    pub assume_loopless_coloopless: bool,
    pub seed: u64,
    pub two_circuit_reading: TwoCircuitReading,
    /// Subsets sampled per check above [`EXHAUSTIVE_SUBSETS_UP_TO`] elements.
    pub subset_sample: usize,
    /// Adds "X is not a cocycle of M" to the hypotheses of the set-split
    /// connectivity theorem. Without it the theorem fails for every cocycle
    /// `X` with `|X| >= n`: then `M_X = M`, and no circuit meets `X` oddly.
    pub require_noncocycle_x: bool,
    /// Orders `n` tried by the search harness for order-parameterized
    /// statements; `None` uses the statement's default.
    pub orders: Option<Vec<usize>>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            lenient: false,
            assume_loopless_coloopless: true,
            seed: 0,
            two_circuit_reading: TwoCircuitReading::Subset,
            subset_sample: 256,
            require_noncocycle_x: false,
            orders: None,
        }
    }
}

/// Registered statements, keyed by their report ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    /// Splitting lemma for graphs (`lemma-1.1`).
    GraphSplitting,
    /// Series pairs, series closure, rank increment, subset rank bounds (`lemma-1.3`).
    PairSplitBasics,
    /// Cocircuits through both split elements lose them (`lemma-1.4`).
    CocircuitTransfer,
    /// Circuits of `M_X` from circuits of `M` (`lemma-1.6`).
    SplitCircuits,
    /// Ranks of `M_X` from odd circuits (`lemma-1.7`).
    SplitRank,
    /// n-connected matroids have girth and cogirth at least n (`lemma-1.8`).
    ConnectivityGirth,
    /// 4-connected, at least 9 elements: pair splits stay connected (`thm-1.9`).
    FourConnectedSplit,
    /// Vertically 3-connected with large cocircuits: pair splits stay connected (`thm-1.10`).
    VerticalSplit,
    /// n-connectivity of `M_X` via odd circuits avoiding small sets (`thm-1.11`).
    SetSplitConnectivity,
    /// Disconnected matroids with connected pair splits (`lemma-2.1`).
    DisconnectedSplit,
    /// Rank is additive over components (`lemma-2.2`).
    ComponentRank,
    /// Connected deletion gives connected split (`lemma-2.3`).
    DeletionSplit,
    /// The false converse of `lemma-2.3`; failures are expected witnesses.
    DeletionSplitConverse,
    /// `M(G_{x,y}) = M(G)_{x,y}`.
    Commutation,
    /// Parallel-pair scenario with a disconnected split.
    Figure1,
    /// Series-pair scenario with a disconnected deletion.
    Figure2,
}

/// What a statement is checked over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Params {
    Pair,
    Set,
    Order,
    SetOrder,
    Matroid,
    GraphVertexTriple,
    GraphPair,
    Fixed,
}

impl Statement {
    pub const ALL: [Statement; 16] = [
        Statement::GraphSplitting,
        Statement::PairSplitBasics,
        Statement::CocircuitTransfer,
        Statement::SplitCircuits,
        Statement::SplitRank,
        Statement::ConnectivityGirth,
        Statement::FourConnectedSplit,
        Statement::VerticalSplit,
        Statement::SetSplitConnectivity,
        Statement::DisconnectedSplit,
        Statement::ComponentRank,
        Statement::DeletionSplit,
        Statement::DeletionSplitConverse,
        Statement::Commutation,
        Statement::Figure1,
        Statement::Figure2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::GraphSplitting => "lemma-1.1",
            Statement::PairSplitBasics => "lemma-1.3",
            Statement::CocircuitTransfer => "lemma-1.4",
            Statement::SplitCircuits => "lemma-1.6",
            Statement::SplitRank => "lemma-1.7",
            Statement::ConnectivityGirth => "lemma-1.8",
            Statement::FourConnectedSplit => "thm-1.9",
            Statement::VerticalSplit => "thm-1.10",
            Statement::SetSplitConnectivity => "thm-1.11",
            Statement::DisconnectedSplit => "lemma-2.1",
            Statement::ComponentRank => "lemma-2.2",
            Statement::DeletionSplit => "lemma-2.3",
            Statement::DeletionSplitConverse => "lemma-2.3-converse",
            Statement::Commutation => "commutation",
            Statement::Figure1 => "figure-1",
            Statement::Figure2 => "figure-2",
        }
    }

    pub fn params(self) -> Params {
        match self {
            Statement::PairSplitBasics
            | Statement::CocircuitTransfer
            | Statement::FourConnectedSplit
            | Statement::VerticalSplit
            | Statement::DisconnectedSplit
            | Statement::DeletionSplit
            | Statement::DeletionSplitConverse => Params::Pair,
            Statement::SplitCircuits | Statement::SplitRank => Params::Set,
            Statement::ConnectivityGirth => Params::Order,
            Statement::SetSplitConnectivity => Params::SetOrder,
            Statement::ComponentRank => Params::Matroid,
            Statement::GraphSplitting => Params::GraphVertexTriple,
            Statement::Commutation => Params::GraphPair,
            Statement::Figure1 | Statement::Figure2 => Params::Fixed,
        }
    }

    /// False for the deliberately false converse, whose failures are the point.
    pub fn is_proved(self) -> bool {
        self != Statement::DeletionSplitConverse
    }

    fn default_orders(self) -> Vec<usize> {
        match self {
            Statement::ConnectivityGirth => vec![2, 3, 4],
            _ => vec![2],
        }
    }
}

impl FromStr for Statement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| Error::UnknownStatement(s.to_string()))
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Collects unmet hypotheses before a conclusion is evaluated.
struct Gate<'a> {
    report: CheckReport,
    unmet: Vec<String>,
    opts: &'a CheckOptions,
}

impl<'a> Gate<'a> {
    fn new(statement: Statement, m: &BinaryMatroid, opts: &'a CheckOptions) -> Self {
        let mut gate = Gate {
            report: CheckReport::new(statement.id(), digest(m)),
            unmet: Vec::new(),
            opts,
        };
        if opts.assume_loopless_coloopless {
            let loops = m.loops();
            let coloops = m.coloops();
            gate.require(loops.is_empty(), || {
                format!("has loops {}", m.format_set(loops))
            });
            gate.require(coloops.is_empty(), || {
                format!("has coloops {}", m.format_set(coloops))
            });
        }
        gate
    }

    fn require(&mut self, ok: bool, why: impl FnOnce() -> String) {
        if !ok {
            self.unmet.push(why());
        }
    }

    /// The report to fill in, or an early precondition-unmet report.
    #[allow(clippy::result_large_err)]
    fn open(self) -> std::result::Result<CheckReport, CheckReport> {
        let mut report = self.report;
        if self.unmet.is_empty() {
            return Ok(report);
        }
        report.note(format!("hypotheses unmet: {}", self.unmet.join("; ")));
        if self.opts.lenient {
            report.outside_hypothesis = true;
            Ok(report)
        } else {
            report.verdict = Verdict::PreconditionUnmet;
            Err(report)
        }
    }
}

fn finish(
    mut report: CheckReport,
    m: &BinaryMatroid,
    statement: Statement,
    opts: &CheckOptions,
) -> CheckReport {
    if report.is_fail() {
        report.witness("matroid", write_matroid(m));
        if !opts.assume_loopless_coloopless {
            report.note("the global loopless and coloopless assumption was not enforced");
        } else if statement.is_proved() && !report.outside_hypothesis {
            report.note(PROVED_NOTE);
        }
    }
    report
}

fn pair_indices(m: &BinaryMatroid, x: &str, y: &str) -> Result<(usize, usize)> {
    let i = m.index_of(x)?;
    let j = m.index_of(y)?;
    if i == j {
        return Err(Error::IdenticalElements(x.to_string()));
    }
    Ok((i, j))
}

fn pair_witness(report: &mut CheckReport, m: &BinaryMatroid, i: usize, j: usize) {
    report.witness("x", m.label(i)).witness("y", m.label(j));
}

/// Subsets for subset-quantified clauses: all of them on small ground sets,
/// otherwise a seeded sample (the seed is recorded in the report).
fn subsets_for(
    m: &BinaryMatroid,
    opts: &CheckOptions,
    report: &mut CheckReport,
) -> Vec<ElementSet> {
    if m.len() <= EXHAUSTIVE_SUBSETS_UP_TO {
        return m.full_set().subsets().collect();
    }
    report.seed = Some(opts.seed);
    report.note(format!("{} sampled subsets", opts.subset_sample));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let full = m.full_set().mask();
    let mut out = vec![ElementSet::EMPTY, m.full_set()];
    out.extend((0..opts.subset_sample).map(|_| ElementSet::from_mask(rng.gen::<u64>() & full)));
    out
}

pub fn verify_pair_split_basics(
    m: &BinaryMatroid,
    x: &str,
    y: &str,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let (i, j) = pair_indices(m, x, y)?;
    Ok(pair_split_basics(m, i, j, opts))
}

fn pair_split_basics(m: &BinaryMatroid, i: usize, j: usize, opts: &CheckOptions) -> CheckReport {
    let st = Statement::PairSplitBasics;
    let mut report = match Gate::new(st, m, opts).open() {
        Ok(r) => r,
        Err(r) => return r,
    };
    pair_witness(&mut report, m, i, j);
    let pair = ElementSet::from_indices([i, j]);
    let split = split_matroid(m, pair);
    let series = m.series(i, j);
    report.clause(
        "(i) split equals M iff series",
        (split == *m) == series,
        false,
    );
    report.clause("(ii) pair in series in split", split.series(i, j), false);
    report.clause(
        "(iii) rank rises by one when not series",
        series || split.rank() == m.rank() + 1,
        series,
    );
    let subsets = subsets_for(m, opts, &mut report);
    let bad = subsets.into_iter().find(|&a| {
        let (r, r2) = (m.rank_of(a), split.rank_of(a));
        r > r2 || r2 > r + 1
    });
    report.clause("(iv) r(A) <= r'(A) <= r(A)+1", bad.is_none(), false);
    if let Some(a) = bad {
        report.witness("subset", m.format_set(a));
    }
    finish(report, m, st, opts)
}

pub fn verify_cocircuit_transfer(
    m: &BinaryMatroid,
    x: &str,
    y: &str,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let (i, j) = pair_indices(m, x, y)?;
    cocircuit_transfer(m, i, j, opts)
}

fn cocircuit_transfer(
    m: &BinaryMatroid,
    i: usize,
    j: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let st = Statement::CocircuitTransfer;
    let mut report = match Gate::new(st, m, opts).open() {
        Ok(r) => r,
        Err(r) => return Ok(r),
    };
    pair_witness(&mut report, m, i, j);
    let pair = ElementSet::from_indices([i, j]);
    let split = split_matroid(m, pair);
    let relevant: Vec<ElementSet> = m
        .cocircuits()?
        .iter()
        .copied()
        .filter(|c| pair.is_subset(*c) && c.len() >= 3)
        .collect();
    let split_co = split.cocircuits()?;
    let bad = relevant.iter().find(|&&c| !split_co.contains(&(c - pair)));
    report.clause(
        "C* - {x,y} is a cocircuit of the split",
        bad.is_none(),
        relevant.is_empty(),
    );
    if let Some(&c) = bad {
        report.witness("cocircuit", m.format_set(c));
    }
    Ok(finish(report, m, st, opts))
}

pub fn verify_split_circuits(
    m: &BinaryMatroid,
    x_set: ElementSet,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let st = Statement::SplitCircuits;
    let mut report = match Gate::new(st, m, opts).open() {
        Ok(r) => r,
        Err(r) => return Ok(r),
    };
    report.witness("X", m.format_set(x_set));
    let split = split_matroid(m, x_set);
    let direct = split.circuits()?;
    let derived = characterize_circuits(m.circuits()?, x_set);
    let same = direct == derived.as_slice();
    report.clause("circuits of M_X = C_0 u C_1", same, false);
    if !same {
        if let Some(c) = direct.iter().find(|c| !derived.contains(c)) {
            report.witness("missing-from-characterization", m.format_set(*c));
        }
        if let Some(c) = derived.iter().find(|c| !direct.contains(c)) {
            report.witness("extra-in-characterization", m.format_set(*c));
        }
    }
    Ok(finish(report, m, st, opts))
}

pub fn verify_split_rank(
    m: &BinaryMatroid,
    x_set: ElementSet,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let st = Statement::SplitRank;
    let mut report = match Gate::new(st, m, opts).open() {
        Ok(r) => r,
        Err(r) => return Ok(r),
    };
    report.witness("X", m.format_set(x_set));
    let split = split_matroid(m, x_set);
    let circuits = m.circuits()?;
    let subsets = subsets_for(m, opts, &mut report);
    let bad = subsets
        .into_iter()
        .find(|&a| split.rank_of(a) != rank_from_circuits(m, circuits, x_set, a));
    report.clause(
        "r'(A) = r(A) + [A contains an OX-circuit]",
        bad.is_none(),
        false,
    );
    if let Some(a) = bad {
        report.witness("subset", m.format_set(a));
    }
    Ok(finish(report, m, st, opts))
}

pub fn verify_connectivity_girth(
    m: &BinaryMatroid,
    n: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let st = Statement::ConnectivityGirth;
    if n == 0 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    let mut gate = Gate::new(st, m, opts);
    gate.require(m.len() + 2 >= 2 * n, || {
        format!("|E| = {} < 2(n-1) = {}", m.len(), 2 * (n - 1))
    });
    let connected = m.is_n_connected(n)?;
    gate.require(connected, || format!("not {n}-connected"));
    let mut report = match gate.open() {
        Ok(r) => r,
        Err(r) => return Ok(r),
    };
    report.witness("n", n.to_string());
    let girth = m.girth()?;
    let cogirth = m.cogirth()?;
    report.clause("girth >= n", girth.is_none_or(|g| g >= n), false);
    report.clause("cogirth >= n", cogirth.is_none_or(|g| g >= n), false);
    report.note(format!("girth {girth:?}, cogirth {cogirth:?}"));
    Ok(finish(report, m, st, opts))
}

pub fn verify_disconnected_split(
    m: &BinaryMatroid,
    x: &str,
    y: &str,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let (i, j) = pair_indices(m, x, y)?;
    Ok(disconnected_split(m, i, j, opts))
}

fn disconnected_split(m: &BinaryMatroid, i: usize, j: usize, opts: &CheckOptions) -> CheckReport {
    let st = Statement::DisconnectedSplit;
    let mut gate = Gate::new(st, m, opts);
    gate.require(!m.is_connected(), || "M is connected".into());
    gate.require(!m.series(i, j), || "x, y form a 2-cocircuit".into());
    let mut report = match gate.open() {
        Ok(r) => r,
        Err(r) => return r,
    };
    pair_witness(&mut report, m, i, j);
    let split_connected = split_matroid(m, ElementSet::from_indices([i, j])).is_connected();
    let comps = m.components();
    let two_apart = comps.len() == 2 && !comps.iter().any(|c| c.contains(i) && c.contains(j));
    report.clause(
        "forward: split connected => two components separating x and y",
        !split_connected || two_apart,
        !split_connected,
    );
    report.clause(
        "converse: two components separating x and y => split connected",
        !two_apart || split_connected,
        !two_apart,
    );
    report.note(format!(
        "{} components; split connected: {split_connected}",
        comps.len()
    ));
    finish(report, m, st, opts)
}

pub fn verify_component_rank(m: &BinaryMatroid, opts: &CheckOptions) -> CheckReport {
    let st = Statement::ComponentRank;
    let mut report = match Gate::new(st, m, opts).open() {
        Ok(r) => r,
        Err(r) => return r,
    };
    let comps = m.components();
    let sum: usize = comps.iter().map(|&c| m.rank_of(c)).sum();
    let within = comps.iter().fold(ElementSet::EMPTY, |u, &c| u | c) == m.full_set();
    report.clause("components partition E", within, false);
    report.clause("sum of component ranks = r(M)", sum == m.rank(), false);
    report.note(format!("{} components, rank {}", comps.len(), m.rank()));
    finish(report, m, st, opts)
}

pub fn verify_deletion_split(
    m: &BinaryMatroid,
    x: &str,
    y: &str,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let (i, j) = pair_indices(m, x, y)?;
    Ok(deletion_split(m, i, j, opts, false))
}

/// The converse direction, which is false in general: failures are witnesses
/// with `M \ {x,y}` disconnected and `M_{x,y}` connected.
pub fn verify_deletion_split_converse(
    m: &BinaryMatroid,
    x: &str,
    y: &str,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let (i, j) = pair_indices(m, x, y)?;
    Ok(deletion_split(m, i, j, opts, true))
}

fn deletion_split(
    m: &BinaryMatroid,
    i: usize,
    j: usize,
    opts: &CheckOptions,
    converse: bool,
) -> CheckReport {
    let st = if converse {
        Statement::DeletionSplitConverse
    } else {
        Statement::DeletionSplit
    };
    let pair = ElementSet::from_indices([i, j]);
    let deletion_connected = m.delete(pair).is_connected();
    let mut gate = Gate::new(st, m, opts);
    gate.require(m.is_connected(), || "M is not connected".into());
    gate.require(!m.parallel(i, j), || "x is parallel to y".into());
    if !converse {
        gate.require(deletion_connected, || "M \\ {x,y} is not connected".into());
    }
    let mut report = match gate.open() {
        Ok(r) => r,
        Err(r) => return r,
    };
    pair_witness(&mut report, m, i, j);
    let split_connected = split_matroid(m, pair).is_connected();
    if converse {
        report.clause(
            "split connected => deletion connected",
            !split_connected || deletion_connected,
            !split_connected,
        );
        if report.is_fail() {
            report.note("converse violated: M \\ {x,y} disconnected while M_xy is connected");
        }
    } else {
        report.clause("split connected", split_connected, false);
    }
    finish(report, m, st, opts)
}

pub fn verify_four_connected_split(
    m: &BinaryMatroid,
    x: &str,
    y: &str,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let (i, j) = pair_indices(m, x, y)?;
    four_connected_split(m, i, j, opts)
}

fn four_connected_split(
    m: &BinaryMatroid,
    i: usize,
    j: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let st = Statement::FourConnectedSplit;
    let mut gate = Gate::new(st, m, opts);
    gate.require(m.len() >= 9, || format!("|E| = {} < 9", m.len()));
    let four = m.is_n_connected(4)?;
    gate.require(four, || "not 4-connected".into());
    let mut report = match gate.open() {
        Ok(r) => r,
        Err(r) => return Ok(r),
    };
    pair_witness(&mut report, m, i, j);
    let split_connected = split_matroid(m, ElementSet::from_indices([i, j])).is_connected();
    report.clause("split connected", split_connected, false);
    Ok(finish(report, m, st, opts))
}

pub fn verify_vertical_split(
    m: &BinaryMatroid,
    x: &str,
    y: &str,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let (i, j) = pair_indices(m, x, y)?;
    vertical_split(m, i, j, opts)
}

fn vertical_split(
    m: &BinaryMatroid,
    i: usize,
    j: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let st = Statement::VerticalSplit;
    let pair = ElementSet::from_indices([i, j]);
    let mut gate = Gate::new(st, m, opts);
    gate.require(m.is_connected(), || "M is not connected".into());
    let vertical = m.is_vertically_n_connected(3)?;
    gate.require(vertical, || "not vertically 3-connected".into());

    let two_circuits: Vec<ElementSet> = m
        .circuits()?
        .iter()
        .copied()
        .filter(|c| c.len() == 2)
        .collect();
    let through: Vec<ElementSet> = m
        .cocircuits()?
        .iter()
        .copied()
        .filter(|q| pair.is_subset(*q))
        .collect();
    let large = through.iter().all(|q| q.len() >= 4);
    let subset_ok = through
        .iter()
        .all(|q| two_circuits.iter().all(|c| !c.is_subset(*q)));
    let meets_ok = through
        .iter()
        .all(|q| two_circuits.iter().all(|c| c.is_disjoint(*q)));
    gate.require(large, || {
        "a cocircuit through x, y has fewer than 4 elements".into()
    });
    let reading_ok = match opts.two_circuit_reading {
        TwoCircuitReading::Subset => subset_ok,
        TwoCircuitReading::Meets => meets_ok,
    };
    gate.require(reading_ok, || {
        format!(
            "a cocircuit through x, y fails the 2-circuit condition ({:?} reading)",
            opts.two_circuit_reading
        )
    });
    let mut report = match gate.open() {
        Ok(r) => r,
        Err(r) => return Ok(r),
    };
    if subset_ok != meets_ok {
        report.note(format!(
            "2-circuit readings differ here: subset reading {subset_ok}, meets reading {meets_ok}"
        ));
    }
    pair_witness(&mut report, m, i, j);
    let split_connected = split_matroid(m, pair).is_connected();
    report.clause("split connected", split_connected, false);
    Ok(finish(report, m, st, opts))
}

pub fn verify_set_split_connectivity(
    m: &BinaryMatroid,
    x_set: ElementSet,
    n: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let st = Statement::SetSplitConnectivity;
    let mut gate = Gate::new(st, m, opts);
    gate.require(n >= 2, || format!("n = {n} < 2"));
    let n_conn = m.is_n_connected(n.max(1))?;
    gate.require(n_conn, || format!("not {n}-connected"));
    let v_conn = m.is_vertically_n_connected(n + 1)?;
    gate.require(v_conn, || format!("not vertically {}-connected", n + 1));
    gate.require(m.len() + 2 >= 2 * n, || {
        format!("|E| = {} < 2(n-1)", m.len())
    });
    let girth = m.girth()?;
    gate.require(girth.is_none_or(|g| g > n), || {
        format!("girth {girth:?} < n+1")
    });
    gate.require(x_set.len() >= n, || format!("|X| = {} < n", x_set.len()));
    let cocycle = m.is_cocycle(x_set);
    if opts.require_noncocycle_x {
        gate.require(!cocycle, || "X is a cocycle of M".into());
    }
    let mut report = match gate.open() {
        Ok(r) => r,
        Err(r) => return Ok(r),
    };
    report
        .witness("X", m.format_set(x_set))
        .witness("n", n.to_string());
    let split = split_matroid(m, x_set);
    let lhs = split.is_n_connected(n.max(1))?;
    let odd: Vec<ElementSet> = m
        .circuits()?
        .iter()
        .copied()
        .filter(|c| (*c & x_set).len() % 2 == 1)
        .collect();
    let blocking = m
        .full_set()
        .subsets()
        .filter(|s| s.len() + 1 == n)
        .find(|&s| odd.iter().all(|c| !c.is_disjoint(s)));
    let rhs = blocking.is_none();
    report.clause(
        "forward: M_X n-connected => every (n-1)-set is avoided by an OX-circuit",
        !lhs || rhs,
        !lhs,
    );
    report.clause(
        "converse: every (n-1)-set avoided => M_X n-connected",
        !rhs || lhs,
        !rhs,
    );
    if let Some(s) = blocking {
        report.witness("unavoided-set", m.format_set(s));
    }
    if report.is_fail() && cocycle {
        report.note("X is a cocycle of M: M_X = M and every circuit meets X evenly, so no OX-circuit exists");
    }
    Ok(finish(report, m, st, opts))
}

/// Runs a matroid statement from labels. `x_set` serves set statements and
/// `x`, `y` pair statements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Arguments {
    pub x: Option<String>,
    pub y: Option<String>,
    pub x_set: Option<Vec<String>>,
    pub n: Option<usize>,
}

pub fn check_matroid(
    statement: Statement,
    m: &BinaryMatroid,
    args: &Arguments,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let need = |v: &Option<String>, name: &str| {
        v.clone()
            .ok_or_else(|| Error::InvalidParameter(format!("{statement} needs --{name}")))
    };
    let set = || -> Result<ElementSet> {
        match &args.x_set {
            Some(l) => m.set_of(l),
            None => Err(Error::InvalidParameter(format!("{statement} needs --set"))),
        }
    };
    let order = || {
        args.n
            .ok_or_else(|| Error::InvalidParameter(format!("{statement} needs --n")))
    };
    match statement {
        Statement::PairSplitBasics => {
            verify_pair_split_basics(m, &need(&args.x, "x")?, &need(&args.y, "y")?, opts)
        }
        Statement::CocircuitTransfer => {
            verify_cocircuit_transfer(m, &need(&args.x, "x")?, &need(&args.y, "y")?, opts)
        }
        Statement::SplitCircuits => verify_split_circuits(m, set()?, opts),
        Statement::SplitRank => verify_split_rank(m, set()?, opts),
        Statement::ConnectivityGirth => verify_connectivity_girth(m, order()?, opts),
        Statement::FourConnectedSplit => {
            verify_four_connected_split(m, &need(&args.x, "x")?, &need(&args.y, "y")?, opts)
        }
        Statement::VerticalSplit => {
            verify_vertical_split(m, &need(&args.x, "x")?, &need(&args.y, "y")?, opts)
        }
        Statement::SetSplitConnectivity => verify_set_split_connectivity(m, set()?, order()?, opts),
        Statement::DisconnectedSplit => {
            verify_disconnected_split(m, &need(&args.x, "x")?, &need(&args.y, "y")?, opts)
        }
        Statement::ComponentRank => Ok(verify_component_rank(m, opts)),
        Statement::DeletionSplit => {
            verify_deletion_split(m, &need(&args.x, "x")?, &need(&args.y, "y")?, opts)
        }
        Statement::DeletionSplitConverse => {
            verify_deletion_split_converse(m, &need(&args.x, "x")?, &need(&args.y, "y")?, opts)
        }
        other => Err(Error::InvalidParameter(format!(
            "{other} is checked on graphs, not matroids"
        ))),
    }
}

/// Every check a statement runs on one matroid, in canonical order:
/// pairs `(x, y)` lexicographic by position, sets by mask, orders ascending.
pub fn checks_for_matroid(
    statement: Statement,
    m: &BinaryMatroid,
    opts: &CheckOptions,
) -> Result<Vec<CheckReport>> {
    let n = m.len();
    let orders = opts
        .orders
        .clone()
        .unwrap_or_else(|| statement.default_orders());
    let mut out = Vec::new();
    match statement.params() {
        Params::Pair => {
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    out.push(match statement {
                        Statement::PairSplitBasics => pair_split_basics(m, i, j, opts),
                        Statement::CocircuitTransfer => cocircuit_transfer(m, i, j, opts)?,
                        Statement::FourConnectedSplit => four_connected_split(m, i, j, opts)?,
                        Statement::VerticalSplit => vertical_split(m, i, j, opts)?,
                        Statement::DisconnectedSplit => disconnected_split(m, i, j, opts),
                        Statement::DeletionSplit => deletion_split(m, i, j, opts, false),
                        Statement::DeletionSplitConverse => deletion_split(m, i, j, opts, true),
                        _ => unreachable!("pair statements only"),
                    });
                }
            }
        }
        Params::Set => {
            for x in m.full_set().subsets() {
                out.push(match statement {
                    Statement::SplitCircuits => verify_split_circuits(m, x, opts)?,
                    _ => verify_split_rank(m, x, opts)?,
                });
            }
        }
        Params::Order => {
            for &k in &orders {
                out.push(verify_connectivity_girth(m, k, opts)?);
            }
        }
        Params::SetOrder => {
            for &k in &orders {
                for x in m.full_set().subsets() {
                    out.push(verify_set_split_connectivity(m, x, k, opts)?);
                }
            }
        }
        Params::Matroid => out.push(verify_component_rank(m, opts)),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "{statement} is not checked over matroids"
            )))
        }
    }
    Ok(out)
}

/// Every check a graph statement runs on one multigraph.
pub fn checks_for_graph(
    statement: Statement,
    g: &crate::graphs::MultiGraph,
) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    let label = |k: usize| g.edges()[k].label.as_str();
    match statement {
        Statement::GraphSplitting => {
            for v in 0..g.vertex_count() {
                for (x, y, z) in edge_triples_at(g, v) {
                    out.push(splitting_lemma_check(
                        g,
                        g.vertex(v),
                        label(x),
                        label(y),
                        label(z),
                    )?);
                }
            }
        }
        Statement::Commutation => {
            for (i, a) in g.edges().iter().enumerate() {
                for (j, b) in g.edges().iter().enumerate() {
                    let adjacent = [a.u, a.v].iter().any(|p| *p == b.u || *p == b.v);
                    if i != j && !a.is_loop() && !b.is_loop() && adjacent {
                        out.push(commutation_check(g, label(i), label(j))?);
                    }
                }
            }
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "{other} is not checked over graphs"
            )))
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub instances: usize,
    pub checks: usize,
    pub pass: usize,
    pub fail: usize,
    pub unmet: usize,
    pub outside_hypothesis: usize,
}

impl ScanSummary {
    fn add(&mut self, r: &CheckReport) {
        self.checks += 1;
        match r.verdict {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::PreconditionUnmet => self.unmet += 1,
        }
        if r.outside_hypothesis {
            self.outside_hypothesis += 1;
        }
    }
}

impl std::ops::AddAssign for ScanSummary {
    fn add_assign(&mut self, o: Self) {
        self.instances += o.instances;
        self.checks += o.checks;
        self.pass += o.pass;
        self.fail += o.fail;
        self.unmet += o.unmet;
        self.outside_hypothesis += o.outside_hypothesis;
    }
}

impl fmt::Display for ScanSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "instances={} checks={} pass={} fail={} precondition-unmet={} outside-hypothesis={}",
            self.instances, self.checks, self.pass, self.fail, self.unmet, self.outside_hypothesis
        )
    }
}

const CHUNK: usize = 512;

/// Runs `statement` over every instance matching `spec`, feeding reports to
/// `sink` in canonical instance order. Matroid statements enumerate binary
/// matroids on `spec.ground_size` elements; graph statements enumerate
/// connected multigraphs with at most `spec.ground_size` edges, keeping those
/// whose cycle matroid passes the filters (`loopless` drops self-loops,
/// `coloopless` bridges).
pub fn scan<F: FnMut(&CheckReport)>(
    statement: Statement,
    spec: &EnumerationSpec,
    opts: &CheckOptions,
    mut sink: F,
) -> Result<ScanSummary> {
    let mut summary = ScanSummary::default();
    let mut feed =
        |batch: Vec<Result<Vec<CheckReport>>>, summary: &mut ScanSummary| -> Result<()> {
            for reports in batch {
                summary.instances += 1;
                for r in reports? {
                    summary.add(&r);
                    sink(&r);
                }
            }
            Ok(())
        };
    match statement.params() {
        Params::GraphVertexTriple | Params::GraphPair => {
            if spec.ground_size > MAX_ENUMERATION_GROUND {
                return Err(Error::GroundTooLarge {
                    size: spec.ground_size,
                    limit: MAX_ENUMERATION_GROUND,
                    guard: "matroid-enumeration",
                });
            }
            let loops = !spec.filters.contains(&Filter::Loopless);
            let mut graphs = Vec::new();
            for g in enumerate_connected_multigraphs(spec.ground_size, loops) {
                let m = g.cycle_matroid()?;
                if spec
                    .filters
                    .iter()
                    .all(|f| f.matches(&m).expect("small instances stay within guards"))
                {
                    graphs.push(g);
                }
            }
            for chunk in graphs.chunks(CHUNK) {
                let batch: Vec<_> = chunk
                    .par_iter()
                    .map(|g| checks_for_graph(statement, g))
                    .collect();
                feed(batch, &mut summary)?;
            }
        }
        Params::Fixed => {
            let r = match statement {
                Statement::Figure1 => crate::graphs::figure1_scenario(),
                _ => crate::graphs::figure2_scenario(),
            };
            feed(vec![Ok(vec![r])], &mut summary)?;
        }
        _ => {
            let mut it = enumerate_binary_matroids(spec)?;
            loop {
                let chunk: Vec<BinaryMatroid> = it.by_ref().take(CHUNK).collect();
                if chunk.is_empty() {
                    break;
                }
                let batch: Vec<_> = chunk
                    .par_iter()
                    .map(|m| checks_for_matroid(statement, m, opts))
                    .collect();
                feed(batch, &mut summary)?;
            }
        }
    }
    Ok(summary)
}

/// Failing reports only; empty means the statement survived the search.
pub fn search_counterexamples(
    statement: Statement,
    spec: &EnumerationSpec,
    opts: &CheckOptions,
) -> Result<Vec<CheckReport>> {
    let mut fails = Vec::new();
    scan(statement, spec, opts, |r| {
        if r.is_fail() {
            fails.push(r.clone());
        }
    })?;
    Ok(fails)
}
