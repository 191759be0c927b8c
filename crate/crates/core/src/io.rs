//! Text formats for matroids and graphs.
//!
//! Matroid file:
//!
//! ```text
//! matroid <rows> <cols>
//! labels <t1> ... <t_cols>      (optional; defaults to e1..e_cols)
//! <rows lines of 0/1, each of length cols>
//! ```
//!
//! Graph file: a `graph` line, then one `<label> <u> <v>` line per edge.
//! Line and column numbers in errors are 1-based.

use sha2::{Digest, Sha256};

use crate::error::{Error, ParseErrorKind, Result};
use crate::gf2::{GF2Matrix, GF2Vector};
use crate::graphs::MultiGraph;
use crate::matroid::{default_labels, validate_label, BinaryMatroid};

/// Lines of a document with the 1-based line number of each.
pub(crate) struct Lines<'a> {
    lines: Vec<&'a str>,
    pos: usize,
    offset: usize,
}

impl<'a> Lines<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Lines {
            lines: text
                .lines()
                .map(|l| l.strip_suffix('\r').unwrap_or(l))
                .collect(),
            pos: 0,
            offset: 0,
        }
    }

    fn line_no(&self) -> usize {
        self.offset + self.pos + 1
    }

    pub(crate) fn peek(&self) -> Option<&'a str> {
        self.lines.get(self.pos).copied()
    }

    pub(crate) fn next_line(&mut self) -> Option<(usize, &'a str)> {
        let l = self.peek()?;
        let n = self.line_no();
        self.pos += 1;
        Some((n, l))
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        while let Some((n, l)) = self.next_line() {
            if !l.trim().is_empty() {
                return Err(Error::parse(n, 1, ParseErrorKind::TrailingContent));
            }
        }
        Ok(())
    }

    pub(crate) fn current_line(&self) -> usize {
        self.line_no()
    }
}

/// Column (1-based) where the `k`-th whitespace-separated token starts.
fn token_column(line: &str, k: usize) -> usize {
    let mut seen = 0;
    let mut in_token = false;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            in_token = false;
        } else if !in_token {
            if seen == k {
                return line[..i].chars().count() + 1;
            }
            seen += 1;
            in_token = true;
        }
    }
    line.chars().count() + 1
}

pub fn parse_matroid(text: &str) -> Result<BinaryMatroid> {
    let mut lines = Lines::new(text);
    let m = parse_matroid_from(&mut lines)?;
    lines.finish()?;
    Ok(m)
}

pub(crate) fn parse_matroid_from(lines: &mut Lines<'_>) -> Result<BinaryMatroid> {
    let header_line = lines.current_line();
    let (ln, header) = lines.next_line().ok_or_else(|| {
        Error::parse(
            header_line,
            1,
            ParseErrorKind::MalformedHeader("missing `matroid <rows> <cols>` line".into()),
        )
    })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.first() != Some(&"matroid") {
        return Err(Error::parse(
            ln,
            1,
            ParseErrorKind::MalformedHeader("expected `matroid <rows> <cols>`".into()),
        ));
    }
    if toks.len() != 3 {
        return Err(Error::parse(
            ln,
            token_column(header, toks.len().min(3)),
            ParseErrorKind::MalformedHeader(format!("expected 3 fields, found {}", toks.len())),
        ));
    }
    let number = |k: usize| -> Result<usize> {
        toks[k].parse().map_err(|_| {
            Error::parse(
                ln,
                token_column(header, k),
                ParseErrorKind::MalformedHeader(format!("{:?} is not a count", toks[k])),
            )
        })
    };
    let rows = number(1)?;
    let cols = number(2)?;

    let mut labels = default_labels(cols);
    if let Some(l) = lines.peek() {
        if l.split_whitespace().next() == Some("labels") {
            let (ln, l) = lines.next_line().expect("peeked");
            let toks: Vec<&str> = l.split_whitespace().skip(1).collect();
            if toks.len() != cols {
                return Err(Error::parse(
                    ln,
                    token_column(l, toks.len().min(cols) + 1),
                    ParseErrorKind::LengthMismatch {
                        expected: cols,
                        found: toks.len(),
                    },
                ));
            }
            for (k, t) in toks.iter().enumerate() {
                if validate_label(t).is_err() {
                    return Err(Error::parse(
                        ln,
                        token_column(l, k + 1),
                        ParseErrorKind::BadLabel(t.to_string()),
                    ));
                }
                if toks[..k].contains(t) {
                    return Err(Error::parse(
                        ln,
                        token_column(l, k + 1),
                        ParseErrorKind::DuplicateLabel(t.to_string()),
                    ));
                }
            }
            labels = toks.iter().map(|t| t.to_string()).collect();
        }
    }

    let mut rep = GF2Matrix::empty(cols);
    for r in 0..rows {
        let at = lines.current_line();
        let (ln, l) = lines.next_line().ok_or_else(|| {
            Error::parse(
                at,
                1,
                ParseErrorKind::MissingRows {
                    expected: rows,
                    found: r,
                },
            )
        })?;
        let mut v = GF2Vector::zeros(cols);
        let mut count = 0;
        for (k, c) in l.chars().enumerate() {
            match c {
                '0' | '1' if k < cols => {
                    if c == '1' {
                        v.set(k, true);
                    }
                }
                '0' | '1' => {}
                other => {
                    return Err(Error::parse(
                        ln,
                        k + 1,
                        ParseErrorKind::BadBitCharacter(other),
                    ))
                }
            }
            count += 1;
        }
        if count != cols {
            return Err(Error::parse(
                ln,
                count.min(cols) + 1,
                ParseErrorKind::LengthMismatch {
                    expected: cols,
                    found: count,
                },
            ));
        }
        rep.push_row(v).expect("row built with cols entries");
    }
    BinaryMatroid::new(labels, rep).map_err(|e| match e {
        Error::GroundTooLarge { .. } => e,
        other => Error::parse(
            header_line,
            1,
            ParseErrorKind::MalformedHeader(other.to_string()),
        ),
    })
}

/// Canonical text form; always writes the `labels` line.
pub fn write_matroid(m: &BinaryMatroid) -> String {
    let rep = m.rep();
    let mut out = format!(
        "matroid {} {}\nlabels {}\n",
        rep.rows(),
        rep.cols(),
        m.ground().join(" ")
    );
    for r in rep.row_vectors() {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

/// Short hex digest of the labels and the reduced row echelon form, so
/// equal matroids share a digest whatever representation they carry.
pub fn digest(m: &BinaryMatroid) -> String {
    let canon = BinaryMatroid::new(m.ground().to_vec(), m.canonical_rep()).expect("same ground");
    digest_text(&write_matroid(&canon))
}

pub(crate) fn digest_text(text: &str) -> String {
    let hash = Sha256::digest(text.as_bytes());
    hex::encode(&hash[..8])
}

pub fn parse_graph(text: &str) -> Result<MultiGraph> {
    let mut lines = Lines::new(text);
    match lines.next_line() {
        Some((_, l)) if l.trim() == "graph" => {}
        Some((n, _)) => {
            return Err(Error::parse(
                n,
                1,
                ParseErrorKind::MalformedHeader("expected `graph`".into()),
            ))
        }
        None => {
            return Err(Error::parse(
                1,
                1,
                ParseErrorKind::MalformedHeader("empty graph file".into()),
            ))
        }
    }
    let mut g = MultiGraph::new();
    while let Some((n, l)) = lines.next_line() {
        if l.trim().is_empty() {
            continue;
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::parse(
                n,
                token_column(l, toks.len().min(3)),
                ParseErrorKind::MalformedEdge(format!("expected 3 fields, found {}", toks.len())),
            ));
        }
        for (k, t) in toks.iter().enumerate() {
            if validate_label(t).is_err() {
                return Err(Error::parse(
                    n,
                    token_column(l, k),
                    ParseErrorKind::BadLabel(t.to_string()),
                ));
            }
        }
        g.add_edge(toks[0], toks[1], toks[2]).map_err(|e| match e {
            Error::DuplicateLabel(lab) => Error::parse(n, 1, ParseErrorKind::DuplicateLabel(lab)),
            other => Error::parse(n, 1, ParseErrorKind::MalformedEdge(other.to_string())),
        })?;
    }
    Ok(g)
}

pub fn write_graph(g: &MultiGraph) -> String {
    let mut out = String::from("graph\n");
    for e in g.edges() {
        out.push_str(&format!(
            "{} {} {}\n",
            e.label,
            g.vertex(e.u),
            g.vertex(e.v)
        ));
    }
    out
}
