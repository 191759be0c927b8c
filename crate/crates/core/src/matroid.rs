//! Binary matroids as labeled GF(2) representations.
//!
//! A [`BinaryMatroid`] keeps the representation exactly as it was given
//! (so the splitting constructions can append rows to it literally) and a
//! canonical reduced form used for every matroid-level question. Two values
//! are equal when their ground lists agree and their row spaces coincide,
//! which is the same as saying their cycle spaces coincide.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::{minimal_supports_of_masks, GF2Matrix, DEFAULT_ENUMERATION_LIMIT};
use crate::set::{ElementSet, MAX_GROUND};

/// Largest ground set scanned by the exhaustive separation searches.
pub const DEFAULT_PARTITION_LIMIT: usize = 20;

/// Splits below this ground size are scanned on one thread.
const PARALLEL_SCAN_FROM: usize = 14;

/// Guards for the exhaustive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub enumeration_dim: usize,
    pub partition_ground: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_dim: DEFAULT_ENUMERATION_LIMIT,
            partition_ground: DEFAULT_PARTITION_LIMIT,
        }
    }
}

/// Checks a label token: nonempty, printable, no whitespace, no commas.
pub fn validate_label(label: &str) -> Result<()> {
    let ok = !label.is_empty()
        && label
            .chars()
            .all(|c| !c.is_whitespace() && !c.is_control() && c != ',' && c != '{' && c != '}');
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidLabel(label.to_string()))
    }
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

#[derive(Clone)]
pub struct BinaryMatroid {
    ground: Vec<String>,
    rep: GF2Matrix,
    /// RREF of `rep`, zero rows dropped, rows as masks over ground positions.
    canon: Vec<u64>,
    pivots: Vec<usize>,
    /// Column `j` of `canon`, as a mask over its rows.
    columns: Vec<u64>,
    circuits: OnceLock<Result<Vec<ElementSet>>>,
    cocircuits: OnceLock<Result<Vec<ElementSet>>>,
    /// Scan results, Tutte then vertical; filled once a scan passes its guard.
    separations: [OnceLock<Option<usize>>; 2],
}

impl BinaryMatroid {
    pub fn new(ground: Vec<String>, rep: GF2Matrix) -> Result<Self> {
        if rep.cols() != ground.len() {
            return Err(Error::ShapeMismatch {
                expected: ground.len(),
                found: rep.cols(),
            });
        }
        if ground.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: ground.len(),
                limit: MAX_GROUND,
                guard: "element-set",
            });
        }
        for (i, l) in ground.iter().enumerate() {
            validate_label(l)?;
            if ground[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let (rref, pivots) = rep.rref_with_pivots();
        let canon: Vec<u64> = rref
            .row_vectors()
            .iter()
            .map(|r| r.to_mask().expect("at most 64 columns"))
            .collect();
        Ok(Self::assemble(ground, rep, canon, pivots))
    }

    /// Labels `e1, .., en`.
    pub fn with_default_labels(rep: GF2Matrix) -> Result<Self> {
        BinaryMatroid::new(default_labels(rep.cols()), rep)
    }

    /// Shorthand: `from_strs(&["a","b","c"], &["101","011"])`.
    pub fn from_strs(labels: &[&str], rows: &[&str]) -> Result<Self> {
        let rep = GF2Matrix::from_strs(labels.len(), rows)?;
        BinaryMatroid::new(labels.iter().map(|s| s.to_string()).collect(), rep)
    }

    /// Builds from rows already in reduced row echelon form. Used by the
    /// enumerator, which produces canonical rows directly.
    pub(crate) fn from_rref_masks(ground: Vec<String>, masks: Vec<u64>) -> Self {
        let n = ground.len();
        let pivots = masks
            .iter()
            .map(|m| m.trailing_zeros() as usize)
            .collect::<Vec<_>>();
        debug_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        let rep = GF2Matrix::from_masks(n, &masks);
        Self::assemble(ground, rep, masks, pivots)
    }

    fn assemble(ground: Vec<String>, rep: GF2Matrix, canon: Vec<u64>, pivots: Vec<usize>) -> Self {
        let columns = (0..ground.len())
            .map(|j| {
                canon
                    .iter()
                    .enumerate()
                    .filter(|(_, &row)| row >> j & 1 == 1)
                    .fold(0u64, |m, (i, _)| m | 1 << i)
            })
            .collect();
        BinaryMatroid {
            ground,
            rep,
            canon,
            pivots,
            columns,
            circuits: OnceLock::new(),
            cocircuits: OnceLock::new(),
            separations: [OnceLock::new(), OnceLock::new()],
        }
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    /// The representation as supplied.
    pub fn rep(&self) -> &GF2Matrix {
        &self.rep
    }

    /// Canonical representation: RREF of the row space with zero rows dropped.
    pub fn canonical_rep(&self) -> GF2Matrix {
        GF2Matrix::from_masks(self.len(), &self.canon)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.ground
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn label(&self, i: usize) -> &str {
        &self.ground[i]
    }

    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet> {
        labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<ElementSet>>()
    }

    /// Member labels sorted by label.
    pub fn labels_of(&self, set: ElementSet) -> Vec<&str> {
        let mut out: Vec<&str> = set.iter().map(|i| self.ground[i].as_str()).collect();
        out.sort_unstable();
        out
    }

    /// `{a,b,c}` with members sorted by label.
    pub fn format_set(&self, set: ElementSet) -> String {
        format!("{{{}}}", self.labels_of(set).join(","))
    }

    /// Sorts a family of sets by their rendered form, for stable output.
    pub fn sorted_family(&self, family: &[ElementSet]) -> Vec<String> {
        let mut out: Vec<String> = family.iter().map(|&s| self.format_set(s)).collect();
        out.sort();
        out
    }

    pub fn rank(&self) -> usize {
        self.canon.len()
    }

    /// GF(2) rank of the columns indexed by `a`.
    pub fn rank_of(&self, a: ElementSet) -> usize {
        debug_assert!(a.is_subset(self.full_set()));
        let mut basis = [0u64; 64];
        let mut rank = 0;
        for j in a {
            let mut v = self.columns[j];
            while v != 0 {
                let top = 63 - v.leading_zeros() as usize;
                if basis[top] == 0 {
                    basis[top] = v;
                    rank += 1;
                    break;
                }
                v ^= basis[top];
            }
        }
        rank
    }

    pub fn rank_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize> {
        Ok(self.rank_of(self.set_of(labels)?))
    }

    /// True when the characteristic vector of `set` lies in the row space,
    /// i.e. `set` is a disjoint union of cocircuits.
    pub fn is_cocycle(&self, set: ElementSet) -> bool {
        let mut v = set.mask();
        for (&row, &p) in self.canon.iter().zip(&self.pivots) {
            if v >> p & 1 == 1 {
                v ^= row;
            }
        }
        v == 0
    }

    /// True when the characteristic vector of `set` lies in the cycle space,
    /// i.e. `set` is a disjoint union of circuits.
    pub fn is_cycle(&self, set: ElementSet) -> bool {
        self.canon
            .iter()
            .all(|&row| (row & set.mask()).count_ones().is_multiple_of(2))
    }

    /// Basis of the cycle space (null space of the representation) as masks,
    /// one fundamental circuit per non-pivot column.
    pub fn cycle_basis(&self) -> Vec<u64> {
        let mut is_pivot = 0u64;
        for &p in &self.pivots {
            is_pivot |= 1 << p;
        }
        (0..self.len())
            .filter(|&f| is_pivot >> f & 1 == 0)
            .map(|f| self.fundamental_circuit(f))
            .collect()
    }

    fn fundamental_circuit(&self, f: usize) -> u64 {
        self.canon
            .iter()
            .zip(&self.pivots)
            .filter(|(&row, _)| row >> f & 1 == 1)
            .fold(1u64 << f, |m, (_, &p)| m | 1 << p)
    }

    /// All circuits, sorted by size then mask. Cached after the first call.
    pub fn circuits(&self) -> Result<&[ElementSet]> {
        self.circuits
            .get_or_init(|| self.circuits_with_limit(DEFAULT_ENUMERATION_LIMIT))
            .as_deref()
            .map_err(Clone::clone)
    }

    pub fn circuits_with_limit(&self, limit: usize) -> Result<Vec<ElementSet>> {
        Ok(minimal_supports_of_masks(&self.cycle_basis(), limit)?
            .into_iter()
            .map(ElementSet::from_mask)
            .collect())
    }

    /// All cocircuits, sorted by size then mask. Cached after the first call.
    pub fn cocircuits(&self) -> Result<&[ElementSet]> {
        self.cocircuits
            .get_or_init(|| self.cocircuits_with_limit(DEFAULT_ENUMERATION_LIMIT))
            .as_deref()
            .map_err(Clone::clone)
    }

    pub fn cocircuits_with_limit(&self, limit: usize) -> Result<Vec<ElementSet>> {
        Ok(minimal_supports_of_masks(&self.canon, limit)?
            .into_iter()
            .map(ElementSet::from_mask)
            .collect())
    }

    /// True when `set` is a circuit: dependent, and every proper subset
    /// obtained by dropping one element is independent.
    pub fn is_circuit(&self, set: ElementSet) -> bool {
        let k = set.len();
        k > 0
            && self.rank_of(set) == k - 1
            && set.iter().all(|e| {
                let rest = set - ElementSet::singleton(e);
                self.rank_of(rest) == k - 1
            })
    }

    pub fn loops(&self) -> ElementSet {
        (0..self.len()).filter(|&j| self.columns[j] == 0).collect()
    }

    /// Elements lying in every basis.
    pub fn coloops(&self) -> ElementSet {
        let full = self.full_set();
        let r = self.rank();
        (0..self.len())
            .filter(|&j| self.rank_of(full - ElementSet::singleton(j)) < r)
            .collect()
    }

    fn distinct_pair(&self, x: &str, y: &str) -> Result<(usize, usize)> {
        let i = self.index_of(x)?;
        let j = self.index_of(y)?;
        if i == j {
            return Err(Error::IdenticalElements(x.to_string()));
        }
        Ok((i, j))
    }

    /// `{x, y}` is a circuit.
    pub fn is_parallel_pair(&self, x: &str, y: &str) -> Result<bool> {
        let (i, j) = self.distinct_pair(x, y)?;
        Ok(self.parallel(i, j))
    }

    /// `{x, y}` is a cocircuit.
    pub fn is_series_pair(&self, x: &str, y: &str) -> Result<bool> {
        let (i, j) = self.distinct_pair(x, y)?;
        Ok(self.series(i, j))
    }

    pub(crate) fn parallel(&self, i: usize, j: usize) -> bool {
        self.columns[i] != 0 && self.columns[i] == self.columns[j]
    }

    pub(crate) fn series(&self, i: usize, j: usize) -> bool {
        let pair = ElementSet::from_indices([i, j]);
        self.is_cocycle(pair)
            && !self.is_cocycle(ElementSet::singleton(i))
            && !self.is_cocycle(ElementSet::singleton(j))
    }

    /// The dual: represented by a basis of the cycle space.
    pub fn dual(&self) -> BinaryMatroid {
        let rep = GF2Matrix::from_masks(self.len(), &self.cycle_basis());
        BinaryMatroid::new(self.ground.clone(), rep).expect("same ground set")
    }

    /// `M \ s`: drops the columns in `s`.
    pub fn delete(&self, s: ElementSet) -> BinaryMatroid {
        let keep: Vec<usize> = self.full_set().iter().filter(|&j| !s.contains(j)).collect();
        let ground = keep.iter().map(|&j| self.ground[j].clone()).collect();
        BinaryMatroid::new(ground, self.rep.select_columns(&keep)).expect("subset of ground")
    }

    /// `M / s`, computed as the dual of deleting `s` from the dual.
    pub fn contract(&self, s: ElementSet) -> BinaryMatroid {
        self.dual().delete(s).dual()
    }

    /// `M | s`.
    pub fn restrict(&self, s: ElementSet) -> BinaryMatroid {
        self.delete(self.full_set() - s)
    }

    pub fn delete_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<BinaryMatroid> {
        Ok(self.delete(self.set_of(labels)?))
    }

    pub fn contract_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<BinaryMatroid> {
        Ok(self.contract(self.set_of(labels)?))
    }

    /// Block-diagonal sum; labels must not collide.
    pub fn direct_sum(&self, other: &BinaryMatroid) -> Result<BinaryMatroid> {
        let n = self.len();
        if n + other.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: n + other.len(),
                limit: MAX_GROUND,
                guard: "element-set",
            });
        }
        let mut ground = self.ground.clone();
        ground.extend(other.ground.iter().cloned());
        let mut masks: Vec<u64> = self.canon.clone();
        masks.extend(other.canon.iter().map(|m| m << n));
        BinaryMatroid::new(ground.clone(), GF2Matrix::from_masks(ground.len(), &masks))
    }

    /// Connected components, each a class of "some circuit contains both".
    ///
    /// Computed from the fundamental circuits of the canonical basis, whose
    /// union graph has the same components as the full circuit relation.
    /// Sorted by smallest member.
    pub fn components(&self) -> Vec<ElementSet> {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut a: usize) -> usize {
            while parent[a] != a {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            a
        }
        for c in self.cycle_basis() {
            let set = ElementSet::from_mask(c);
            let first = set.min().expect("nonempty fundamental circuit");
            for e in set {
                let (ra, rb) = (find(&mut parent, first), find(&mut parent, e));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut classes: Vec<ElementSet> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for e in 0..n {
            let r = find(&mut parent, e);
            if slot[r] == usize::MAX {
                slot[r] = classes.len();
                classes.push(ElementSet::EMPTY);
            }
            classes[slot[r]].insert(e);
        }
        classes
    }

    /// One component and at least two elements.
    pub fn is_connected(&self) -> bool {
        self.len() >= 2 && self.components().len() == 1
    }

    /// Smallest circuit size; `None` when there are no circuits.
    pub fn girth(&self) -> Result<Option<usize>> {
        Ok(self.circuits()?.iter().map(|c| c.len()).min())
    }

    /// Smallest cocircuit size; `None` when there are no cocircuits.
    pub fn cogirth(&self) -> Result<Option<usize>> {
        Ok(self.cocircuits()?.iter().map(|c| c.len()).min())
    }

    /// `r(X) + r(E - X) - r(M) + 1`.
    pub fn connectivity_order(&self, side: ElementSet) -> Result<usize> {
        let full = self.full_set();
        if side.is_empty() || side == full || !side.is_subset(full) {
            return Err(Error::EmptySide);
        }
        Ok(self.order_unchecked(side))
    }

    fn order_unchecked(&self, side: ElementSet) -> usize {
        self.rank_of(side) + self.rank_of(self.full_set() - side) + 1 - self.rank()
    }

    /// Tutte connectivity: the least `k` admitting a `k`-separation, or `None`
    /// when there is none (the matroid is `n`-connected for every `n`).
    pub fn connectivity(&self) -> Result<Option<usize>> {
        self.separation_scan(false, Limits::default())
    }

    /// Vertical connectivity: as [`connectivity`](Self::connectivity) with
    /// both sides required to have rank at least `k`.
    pub fn vertical_connectivity(&self) -> Result<Option<usize>> {
        self.separation_scan(true, Limits::default())
    }

    pub fn is_n_connected(&self, n: usize) -> Result<bool> {
        self.is_n_connected_with(n, Limits::default())
    }

    pub fn is_vertically_n_connected(&self, n: usize) -> Result<bool> {
        self.is_vertically_n_connected_with(n, Limits::default())
    }

    pub fn is_n_connected_with(&self, n: usize, limits: Limits) -> Result<bool> {
        check_order(n)?;
        Ok(self.separation_scan(false, limits)?.is_none_or(|k| n <= k))
    }

    pub fn is_vertically_n_connected_with(&self, n: usize, limits: Limits) -> Result<bool> {
        check_order(n)?;
        Ok(self.separation_scan(true, limits)?.is_none_or(|k| n <= k))
    }

    /// Scans all `2^(|E|-1) - 1` splits. A split of order `λ` whose smaller
    /// side has size (or rank, when `vertical`) `s` is a `k`-separation for
    /// every `λ <= k <= s`, so the connectivity is the least such `λ`.
    fn separation_scan(&self, vertical: bool, limits: Limits) -> Result<Option<usize>> {
        let n = self.len();
        if n > limits.partition_ground {
            return Err(Error::GroundTooLarge {
                size: n,
                limit: limits.partition_ground,
                guard: "partition",
            });
        }
        Ok(*self.separations[vertical as usize].get_or_init(|| self.scan_splits(vertical)))
    }

    fn scan_splits(&self, vertical: bool) -> Option<usize> {
        let n = self.len();
        if n < 2 {
            return None;
        }
        let full = self.full_set();
        let r = self.rank();
        let eval = |rest: u64| -> Option<usize> {
            let side = ElementSet::from_mask(1 | rest << 1);
            if side == full {
                return None;
            }
            let other = full - side;
            let (rx, ry) = (self.rank_of(side), self.rank_of(other));
            let order = rx + ry + 1 - r;
            let size = if vertical {
                rx.min(ry)
            } else {
                side.len().min(other.len())
            };
            (order <= size).then_some(order)
        };
        let splits = 1u64 << (n - 1);
        if n >= PARALLEL_SCAN_FROM {
            (0..splits).into_par_iter().filter_map(eval).min()
        } else {
            (0..splits).filter_map(eval).min()
        }
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(
            "connectivity order must be at least 1".into(),
        ))
    } else {
        Ok(())
    }
}

impl PartialEq for BinaryMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.canon == other.canon
    }
}

impl Eq for BinaryMatroid {}

impl Hash for BinaryMatroid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ground.hash(state);
        self.canon.hash(state);
    }
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinaryMatroid")
            .field("ground", &self.ground)
            .field("rep", &self.rep)
            .finish()
    }
}

/// Small matroids used throughout tests and docs.
pub mod catalog {
    use super::BinaryMatroid;

    /// `U_{2,3}` on `a, b, c`.
    pub fn triangle() -> BinaryMatroid {
        BinaryMatroid::from_strs(&["a", "b", "c"], &["101", "011"]).unwrap()
    }

    /// Triangle with a second copy `d` of edge `c`.
    pub fn doubled_triangle() -> BinaryMatroid {
        BinaryMatroid::from_strs(&["a", "b", "c", "d"], &["1011", "0111"]).unwrap()
    }

    /// `M(C4) = U_{3,4}` on `e1..e4`.
    pub fn four_cycle() -> BinaryMatroid {
        BinaryMatroid::from_strs(&["e1", "e2", "e3", "e4"], &["1001", "0101", "0011"]).unwrap()
    }

    /// `M(K4)`: three unit columns followed by their pairwise sums.
    pub fn k4() -> BinaryMatroid {
        BinaryMatroid::from_strs(
            &["a", "b", "c", "d", "e", "f"],
            &["100110", "010101", "001011"],
        )
        .unwrap()
    }

    /// Triangle on `a,b,c` plus a disjoint triangle on `d,e,f`.
    pub fn two_triangles() -> BinaryMatroid {
        BinaryMatroid::from_strs(
            &["a", "b", "c", "d", "e", "f"],
            &["101000", "011000", "000101", "000011"],
        )
        .unwrap()
    }

    /// Free matroid (identity representation) on the given labels.
    pub fn free(labels: &[&str]) -> BinaryMatroid {
        let rows: Vec<String> = (0..labels.len())
            .map(|i| {
                (0..labels.len())
                    .map(|j| if i == j { '1' } else { '0' })
                    .collect()
            })
            .collect();
        let rows: Vec<&str> = rows.iter().map(String::as_str).collect();
        BinaryMatroid::from_strs(labels, &rows).unwrap()
    }
}
