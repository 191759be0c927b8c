//! Splitting a binary matroid along a set of elements.
//!
//! `M_X` is the vector matroid of the representation with one extra row,
//! the characteristic vector of `X`. Pair splitting `M_{x,y}` is the case
//! `X = {x, y}`. The row is appended literally; nothing is canonicalized
//! until a matroid-level question is asked.
//!
//! The second half of the module describes `M_X` through the circuits of `M`
//! alone: circuits meeting `X` evenly survive, and pairs of disjoint
//! circuits meeting `X` oddly merge.

use std::fmt;

use crate::error::{Error, ParseErrorKind, Result};
use crate::gf2::GF2Vector;
use crate::io::{parse_matroid_from, write_matroid, Lines};
use crate::matroid::BinaryMatroid;
use crate::report::CheckReport;
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplitMode {
    Pair,
    Set,
}

impl fmt::Display for SplitMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitMode::Pair => "pair",
            SplitMode::Set => "set",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitResult {
    pub original: BinaryMatroid,
    pub split: BinaryMatroid,
    pub x_set: ElementSet,
    pub mode: SplitMode,
}

/// The representation of `m` with the characteristic row of `x_set` appended.
pub fn split_matroid(m: &BinaryMatroid, x_set: ElementSet) -> BinaryMatroid {
    let mut rep = m.rep().clone();
    let mut row = GF2Vector::zeros(m.len());
    for i in x_set {
        row.set(i, true);
    }
    rep.push_row(row).expect("row has one entry per element");
    BinaryMatroid::new(m.ground().to_vec(), rep).expect("ground unchanged")
}

pub fn split_pair(m: &BinaryMatroid, x: &str, y: &str) -> Result<SplitResult> {
    let i = m.index_of(x)?;
    let j = m.index_of(y)?;
    if i == j {
        return Err(Error::IdenticalElements(x.to_string()));
    }
    let x_set = ElementSet::from_indices([i, j]);
    Ok(SplitResult {
        original: m.clone(),
        split: split_matroid(m, x_set),
        x_set,
        mode: SplitMode::Pair,
    })
}

pub fn split_set(m: &BinaryMatroid, x_set: ElementSet) -> SplitResult {
    SplitResult {
        original: m.clone(),
        split: split_matroid(m, x_set),
        x_set,
        mode: SplitMode::Set,
    }
}

pub fn split_set_labels<S: AsRef<str>>(m: &BinaryMatroid, labels: &[S]) -> Result<SplitResult> {
    Ok(split_set(m, m.set_of(labels)?))
}

fn meets_oddly(c: ElementSet, x_set: ElementSet) -> bool {
    (c & x_set).len() % 2 == 1
}

/// `c` must be a circuit of `m`; true when it meets `x_set` in an odd number
/// of elements.
pub fn is_ox_circuit(m: &BinaryMatroid, c: ElementSet, x_set: ElementSet) -> Result<bool> {
    if !m.is_circuit(c) {
        return Err(Error::NotACircuit(m.format_set(c)));
    }
    Ok(meets_oddly(c, x_set))
}

/// Circuits of `M_X` from the circuits of `M`: the even ones, plus the
/// minimal unions of two disjoint odd circuits containing no even one.
pub fn characterize_circuits(circuits: &[ElementSet], x_set: ElementSet) -> Vec<ElementSet> {
    let (odd, even): (Vec<ElementSet>, Vec<ElementSet>) =
        circuits.iter().partition(|&&c| meets_oddly(c, x_set));
    let mut unions = Vec::new();
    for (k, &a) in odd.iter().enumerate() {
        for &b in &odd[k + 1..] {
            if !a.is_disjoint(b) {
                continue;
            }
            let u = a | b;
            if even.iter().any(|&c| c.is_subset(u)) {
                continue;
            }
            unions.push(u);
        }
    }
    unions.sort_unstable_by_key(|u| (u.len(), u.mask()));
    unions.dedup();
    let mut merged: Vec<ElementSet> = Vec::new();
    for u in unions {
        if !merged.iter().any(|k| k.is_subset(u)) {
            merged.push(u);
        }
    }
    let mut out = even;
    out.extend(merged);
    out.sort_unstable_by_key(|c| (c.len(), c.mask()));
    out
}

pub fn circuits_via_characterization(
    m: &BinaryMatroid,
    x_set: ElementSet,
) -> Result<Vec<ElementSet>> {
    Ok(characterize_circuits(m.circuits()?, x_set))
}

/// `r(A) + 1` when some circuit of `m` inside `a` meets `x_set` oddly, else `r(A)`.
pub fn rank_via_characterization(
    m: &BinaryMatroid,
    x_set: ElementSet,
    a: ElementSet,
) -> Result<usize> {
    Ok(rank_from_circuits(m, m.circuits()?, x_set, a))
}

pub(crate) fn rank_from_circuits(
    m: &BinaryMatroid,
    circuits: &[ElementSet],
    x_set: ElementSet,
    a: ElementSet,
) -> usize {
    let bump = circuits
        .iter()
        .any(|&c| c.is_subset(a) && meets_oddly(c, x_set));
    m.rank_of(a) + usize::from(bump)
}

/// Checks that the split pair forms a 2-element cocircuit of the split matroid.
pub fn series_closure_check(result: &SplitResult) -> CheckReport {
    let mut report = CheckReport::new("series-closure", crate::io::digest(&result.original));
    if result.mode != SplitMode::Pair || result.x_set.len() != 2 {
        report.verdict = crate::report::Verdict::PreconditionUnmet;
        report.note("needs a pair split");
        return report;
    }
    let mut it = result.x_set.iter();
    let (i, j) = (it.next().unwrap(), it.next().unwrap());
    let series = result.split.series(i, j);
    report.clause("pair is a cocircuit of the split", series, false);
    report.witness("cocircuit", result.split.format_set(result.x_set));
    let own_component = result.split.components().contains(&result.x_set);
    if own_component {
        report.note("the pair is a separate component of the split");
    }
    report
}

impl SplitResult {
    /// Header line, then the original and split matroid files.
    pub fn to_text(&self) -> String {
        format!(
            "split mode={} X={}\n{}{}",
            self.mode,
            self.original.labels_of(self.x_set).join(","),
            write_matroid(&self.original),
            write_matroid(&self.split)
        )
    }

    pub fn from_text(text: &str) -> Result<SplitResult> {
        let mut lines = Lines::new(text);
        let bad = |line: usize, col: usize, msg: &str| {
            Error::parse(line, col, ParseErrorKind::MalformedHeader(msg.into()))
        };
        let (ln, header) = lines
            .next_line()
            .ok_or_else(|| bad(1, 1, "empty split file"))?;
        let toks: Vec<&str> = header.split(' ').collect();
        if toks.len() != 3 || toks[0] != "split" {
            return Err(bad(ln, 1, "expected `split mode=<pair|set> X=<labels>`"));
        }
        let mode = match toks[1] {
            "mode=pair" => SplitMode::Pair,
            "mode=set" => SplitMode::Set,
            _ => return Err(bad(ln, 7, "mode must be pair or set")),
        };
        let labels = toks[2]
            .strip_prefix("X=")
            .ok_or_else(|| bad(ln, toks[0].len() + toks[1].len() + 3, "expected X=<labels>"))?;
        let original = parse_matroid_from(&mut lines)?;
        let split_line = lines.current_line();
        let split = parse_matroid_from(&mut lines)?;
        lines.finish()?;
        let names: Vec<&str> = if labels.is_empty() {
            Vec::new()
        } else {
            labels.split(',').collect()
        };
        let x_set = original
            .set_of(&names)
            .map_err(|e| bad(ln, 1, &e.to_string()))?;
        if mode == SplitMode::Pair && x_set.len() != 2 {
            return Err(bad(ln, 1, "pair mode needs exactly two labels"));
        }
        let expected = split_matroid(&original, x_set);
        if split.ground() != original.ground() || split.rep() != expected.rep() {
            return Err(bad(
                split_line,
                1,
                "split matrix is not the original plus the X row",
            ));
        }
        Ok(SplitResult {
            original,
            split,
            x_set,
            mode,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::catalog::*;

    fn fam(m: &BinaryMatroid, f: &[ElementSet]) -> Vec<String> {
        m.sorted_family(f)
    }

    #[test]
    fn series_pair_split_is_identity() {
        let c4 = four_cycle();
        let r = split_pair(&c4, "e1", "e2").unwrap();
        assert_eq!(r.split, c4);
        assert_eq!(r.split.rep().rows(), 4);
    }

    #[test]
    fn k4_pair_split_raises_rank() {
        let k = k4();
        for x in 0..6 {
            for y in 0..6 {
                if x != y {
                    let r = split_pair(&k, k.label(x), k.label(y)).unwrap();
                    assert_eq!(r.split.rank(), 4);
                }
            }
        }
    }

    #[test]
    fn parallel_pair_split_disconnects() {
        let d = doubled_triangle();
        let r = split_pair(&d, "c", "d").unwrap();
        let cd = d.set_of(&["c", "d"]).unwrap();
        assert!(r.split.circuits().unwrap().contains(&cd));
        assert!(r.split.cocircuits().unwrap().contains(&cd));
        assert!(r.split.components().contains(&cd));
        assert!(!r.split.is_connected());
    }

    #[test]
    fn pair_errors() {
        let t = triangle();
        assert_eq!(
            split_pair(&t, "a", "a").err(),
            Some(Error::IdenticalElements("a".into()))
        );
        assert!(matches!(
            split_pair(&t, "a", "z"),
            Err(Error::UnknownLabel(_))
        ));
        assert_eq!(
            split_pair(&t, "a", "b").unwrap().split,
            split_set_labels(&t, &["b", "a"]).unwrap().split
        );
    }

    #[test]
    fn set_split_examples() {
        let t = triangle();
        assert_eq!(split_set(&t, ElementSet::EMPTY).split, t);
        let full = split_set(&t, t.full_set()).split;
        assert_eq!(full.rank(), 3);
        assert!(full.circuits().unwrap().is_empty());
        let single = split_set(&t, ElementSet::singleton(0)).split;
        assert!(single.coloops().contains(0));
        assert!(!single.is_connected());
        assert!(matches!(
            split_set_labels(&t, &["q"]),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn ox_circuit_examples() {
        let t = triangle();
        let abc = t.full_set();
        assert!(is_ox_circuit(&t, abc, t.set_of(&["a"]).unwrap()).unwrap());
        assert!(!is_ox_circuit(&t, abc, t.set_of(&["a", "b"]).unwrap()).unwrap());
        let c4 = four_cycle();
        assert!(
            is_ox_circuit(&c4, c4.full_set(), c4.set_of(&["e1", "e2", "e3"]).unwrap()).unwrap()
        );
        assert!(matches!(
            is_ox_circuit(&t, t.set_of(&["a", "b"]).unwrap(), abc),
            Err(Error::NotACircuit(_))
        ));
    }

    #[test]
    fn characterization_examples() {
        let t = triangle();
        assert!(circuits_via_characterization(&t, t.full_set())
            .unwrap()
            .is_empty());
        let d = doubled_triangle();
        assert_eq!(
            circuits_via_characterization(&d, ElementSet::EMPTY).unwrap(),
            d.circuits().unwrap()
        );
        let tt = two_triangles();
        let x = tt.set_of(&["a", "d"]).unwrap();
        let got = circuits_via_characterization(&tt, x).unwrap();
        assert_eq!(fam(&tt, &got), ["{a,b,c,d,e,f}"]);
        let direct = split_set(&tt, x).split;
        assert_eq!(direct.circuits().unwrap(), got.as_slice());
    }

    #[test]
    fn rank_characterization_examples() {
        let t = triangle();
        let abc = t.full_set();
        assert_eq!(
            rank_via_characterization(&t, t.set_of(&["a"]).unwrap(), abc).unwrap(),
            3
        );
        assert_eq!(
            rank_via_characterization(&t, t.set_of(&["a", "b"]).unwrap(), abc).unwrap(),
            2
        );
        assert_eq!(
            rank_via_characterization(&t, abc, ElementSet::EMPTY).unwrap(),
            0
        );
    }

    #[test]
    fn series_closure_examples() {
        let r = split_pair(&k4(), "a", "b").unwrap();
        let rep = series_closure_check(&r);
        assert!(rep.is_pass());
        assert_eq!(rep.find_witness("cocircuit"), Some("{a,b}"));
        assert!(series_closure_check(&split_pair(&four_cycle(), "e1", "e2").unwrap()).is_pass());
        let rep = series_closure_check(&split_pair(&doubled_triangle(), "c", "d").unwrap());
        assert!(rep.is_pass());
        assert_eq!(rep.find_witness("cocircuit"), Some("{c,d}"));
        let set = split_set(&k4(), ElementSet::from_indices([0, 1]));
        assert_eq!(
            series_closure_check(&set).verdict,
            crate::report::Verdict::PreconditionUnmet
        );
    }

    #[test]
    fn split_text_round_trip() {
        let r = split_pair(&triangle(), "b", "a").unwrap();
        let text = r.to_text();
        assert!(text.starts_with("split mode=pair X=a,b\nmatroid 2 3\n"));
        assert_eq!(SplitResult::from_text(&text).unwrap(), r);
        let r = split_set(&four_cycle(), ElementSet::EMPTY);
        assert_eq!(SplitResult::from_text(&r.to_text()).unwrap(), r);
        let tampered = text.replace("110\n", "111\n");
        assert!(SplitResult::from_text(&tampered).is_err());
    }
}
