//! Multigraphs, their cycle matroids, and vertex splitting.
//!
//! Splitting a pair of edges `x, y` that meet at `v` moves their `v`-ends to
//! a fresh vertex. On cycle matroids this is the same as pair splitting the
//! matroid, which [`commutation_check`] confirms instance by instance.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::gf2::{GF2Matrix, GF2Vector};
use crate::io::{digest_text, write_graph};
use crate::matroid::BinaryMatroid;
use crate::report::{CheckReport, Verdict};
use crate::set::{ElementSet, MAX_GROUND};
use crate::splitting::split_matroid;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub label: String,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// Vertices are named tokens; parallel edges and self-loops are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl MultiGraph {
    pub fn new() -> Self {
        MultiGraph::default()
    }

    /// Builds from `(label, u, v)` triples.
    pub fn from_edges(edges: &[(&str, &str, &str)]) -> Result<Self> {
        let mut g = MultiGraph::new();
        for (l, u, v) in edges {
            g.add_edge(l, u, v)?;
        }
        Ok(g)
    }

    /// Returns the index of `name`, adding it if new.
    pub fn add_vertex(&mut self, name: &str) -> usize {
        match self.vertices.iter().position(|v| v == name) {
            Some(i) => i,
            None => {
                self.vertices.push(name.to_string());
                self.vertices.len() - 1
            }
        }
    }

    pub fn add_edge(&mut self, label: &str, u: &str, v: &str) -> Result<()> {
        if self.edges.iter().any(|e| e.label == label) {
            return Err(Error::DuplicateLabel(label.to_string()));
        }
        let u = self.add_vertex(u);
        let v = self.add_vertex(v);
        self.edges.push(Edge {
            label: label.to_string(),
            u,
            v,
        });
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge_index(&self, label: &str) -> Result<usize> {
        self.edges
            .iter()
            .position(|e| e.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn edge(&self, label: &str) -> Result<&Edge> {
        Ok(&self.edges[self.edge_index(label)?])
    }

    /// Self-loops count twice.
    pub fn degree(&self, v: &str) -> Result<usize> {
        let v = self.vertex_index(v)?;
        Ok(self.degree_of(v))
    }

    fn degree_of(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.u == v) + usize::from(e.v == v))
            .sum()
    }

    /// Number of connected pieces among vertices not in `skip_vertex`,
    /// ignoring edges whose index is in `skip_edges`.
    fn pieces(&self, skip_edges: ElementSet, skip_vertex: Option<usize>) -> usize {
        let n = self.vertices.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (k, e) in self.edges.iter().enumerate() {
            if skip_edges.contains(k) || skip_vertex.is_some_and(|s| e.u == s || e.v == s) {
                continue;
            }
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        let mut seen = vec![false; n];
        let mut pieces = 0;
        for start in 0..n {
            if seen[start] || Some(start) == skip_vertex {
                continue;
            }
            pieces += 1;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(a) = queue.pop_front() {
                for &b in &adj[a] {
                    if !seen[b] {
                        seen[b] = true;
                        queue.push_back(b);
                    }
                }
            }
        }
        pieces
    }

    /// Every vertex reaches every other. The empty graph is not connected.
    pub fn is_connected_graph(&self) -> bool {
        !self.vertices.is_empty() && self.pieces(ElementSet::EMPTY, None) == 1
    }

    /// Edges whose removal separates their endpoints, as positions in the
    /// edge list.
    pub fn bridges(&self) -> ElementSet {
        assert!(self.edges.len() <= MAX_GROUND, "at most 64 edges");
        let base = self.pieces(ElementSet::EMPTY, None);
        (0..self.edges.len())
            .filter(|&k| {
                !self.edges[k].is_loop() && self.pieces(ElementSet::singleton(k), None) > base
            })
            .collect()
    }

    pub fn bridge_labels(&self) -> Vec<&str> {
        self.bridges()
            .iter()
            .map(|k| self.edges[k].label.as_str())
            .collect()
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }

    pub fn is_cut_vertex(&self, v: &str) -> Result<bool> {
        let v = self.vertex_index(v)?;
        Ok(self.cut_vertex(v))
    }

    fn cut_vertex(&self, v: usize) -> bool {
        self.pieces(ElementSet::EMPTY, Some(v)) > self.pieces(ElementSet::EMPTY, None)
    }

    /// Connected, at least three vertices, no cut vertex.
    pub fn is_2_connected(&self) -> bool {
        self.vertices.len() >= 3
            && self.is_connected_graph()
            && (0..self.vertices.len()).all(|v| !self.cut_vertex(v))
    }

    /// Deletes edges by label, keeping every vertex.
    pub fn without_edges(&self, labels: &[&str]) -> Result<MultiGraph> {
        for l in labels {
            self.edge_index(l)?;
        }
        Ok(MultiGraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .filter(|e| !labels.contains(&e.label.as_str()))
                .cloned()
                .collect(),
        })
    }

    /// Drops vertices with no incident edge.
    pub fn without_isolated(&self) -> MultiGraph {
        let mut g = MultiGraph::new();
        for e in &self.edges {
            g.add_edge(&e.label, &self.vertices[e.u], &self.vertices[e.v])
                .expect("labels already distinct");
        }
        g
    }

    /// Requires at most 64 edges.
    pub fn cycle_matroid(&self) -> Result<BinaryMatroid> {
        let m = self.edges.len();
        if m > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: m,
                limit: MAX_GROUND,
                guard: "element-set",
            });
        }
        let mut rows = vec![GF2Vector::zeros(m); self.vertices.len()];
        for (k, e) in self.edges.iter().enumerate() {
            rows[e.u].flip(k);
            rows[e.v].flip(k);
        }
        let rep = GF2Matrix::from_rows(m, rows)?;
        BinaryMatroid::new(self.edges.iter().map(|e| e.label.clone()).collect(), rep)
    }

    pub(crate) fn digest(&self) -> String {
        digest_text(&write_graph(self))
    }

    fn fresh_vertex_name(&self, base: &str) -> String {
        let mut name = format!("{base}'");
        while self.vertices.contains(&name) {
            name.push('\'');
        }
        name
    }
}

fn shared_endpoints(g: &MultiGraph, x: &str, y: &str) -> Result<Vec<usize>> {
    let ex = g.edge(x)?;
    let ey = g.edge(y)?;
    if x == y {
        return Err(Error::IdenticalElements(x.to_string()));
    }
    for e in [ex, ey] {
        if e.is_loop() {
            return Err(Error::SelfLoop(e.label.clone()));
        }
    }
    let mut shared: Vec<usize> = [ex.u, ex.v]
        .into_iter()
        .filter(|&a| a == ey.u || a == ey.v)
        .collect();
    shared.dedup();
    if shared.is_empty() {
        return Err(Error::NonAdjacentEdges(x.to_string(), y.to_string()));
    }
    Ok(shared)
}

/// Splits `x, y` away from their common vertex. When they share both ends,
/// the lexicographically smaller vertex name is used.
pub fn split_graph(g: &MultiGraph, x: &str, y: &str) -> Result<MultiGraph> {
    let shared = shared_endpoints(g, x, y)?;
    let v = shared
        .into_iter()
        .min_by(|&a, &b| g.vertices[a].cmp(&g.vertices[b]))
        .expect("nonempty");
    split_graph_at(g, g.vertex(v), x, y)
}

/// Moves the `v`-ends of `x` and `y` onto a new vertex named `v'`.
pub fn split_graph_at(g: &MultiGraph, v: &str, x: &str, y: &str) -> Result<MultiGraph> {
    let vi = g.vertex_index(v)?;
    let shared = shared_endpoints(g, x, y)?;
    if !shared.contains(&vi) {
        return Err(Error::NonAdjacentEdges(x.to_string(), y.to_string()));
    }
    let mut out = g.clone();
    let fresh = g.fresh_vertex_name(v);
    let nv = out.add_vertex(&fresh);
    for label in [x, y] {
        let k = g.edge_index(label)?;
        let e = &mut out.edges[k];
        if e.u == vi {
            e.u = nv;
        } else {
            e.v = nv;
        }
    }
    Ok(out)
}

/// Compares the cycle matroid of the split graph with the pair split of the
/// cycle matroid, as labeled matroids. Parallel edges are split at each of
/// their two common vertices.
pub fn commutation_check(g: &MultiGraph, x: &str, y: &str) -> Result<CheckReport> {
    let shared = shared_endpoints(g, x, y)?;
    let m = g.cycle_matroid()?;
    let pair = m.set_of(&[x, y])?;
    let via_matroid = split_matroid(&m, pair);
    let mut report = CheckReport::new("commutation", g.digest());
    report.witness("pair", m.format_set(pair));
    for v in shared {
        let via_graph = split_graph_at(g, g.vertex(v), x, y)?.cycle_matroid()?;
        report.clause(
            &format!("M(G_xy) equals M(G)_xy, split at {}", g.vertex(v)),
            via_graph == via_matroid,
            false,
        );
    }
    if report.is_fail() {
        report.witness("graph", write_graph(g));
    }
    Ok(report)
}

/// Checks the vertex-splitting lemma: for a connected bridgeless graph,
/// `d(v) > 3`, and edges `x, y, z` at `v` (with `x`, `z` in different blocks
/// when `v` is a cut vertex), one of `G_{x,y}`, `G_{x,z}` is connected and
/// bridgeless.
pub fn splitting_lemma_check(
    g: &MultiGraph,
    v: &str,
    x: &str,
    y: &str,
    z: &str,
) -> Result<CheckReport> {
    let vi = g.vertex_index(v)?;
    for l in [x, y, z] {
        g.edge_index(l)?;
    }
    let mut report = CheckReport::new("lemma-1.1", g.digest());
    report
        .witness("v", v)
        .witness("x", x)
        .witness("y", y)
        .witness("z", z);
    let mut unmet = Vec::new();
    if !g.is_connected_graph() {
        unmet.push("graph is not connected".to_string());
    }
    if !g.is_bridgeless() {
        unmet.push(format!("graph has bridges {:?}", g.bridge_labels()));
    }
    let d = g.degree_of(vi);
    if d <= 3 {
        unmet.push(format!("d({v}) = {d} is not above 3"));
    }
    if x == y || y == z || x == z {
        unmet.push("x, y, z must be distinct".into());
    }
    for l in [x, y, z] {
        let e = g.edge(l)?;
        if e.is_loop() {
            unmet.push(format!("{l} is a self-loop"));
        } else if e.u != vi && e.v != vi {
            unmet.push(format!("{l} is not incident with {v}"));
        }
    }
    if unmet.is_empty() && g.cut_vertex(vi) {
        let m = g.cycle_matroid()?;
        let (xi, zi) = (m.index_of(x)?, m.index_of(z)?);
        if m.components()
            .iter()
            .any(|c| c.contains(xi) && c.contains(zi))
        {
            unmet.push(format!("{v} is a cut vertex and {x}, {z} share a block"));
        }
    }
    if !unmet.is_empty() {
        report.verdict = Verdict::PreconditionUnmet;
        report.note(unmet.join("; "));
        return Ok(report);
    }
    let good = |h: &MultiGraph| h.is_connected_graph() && h.is_bridgeless();
    let gxy = good(&split_graph_at(g, v, x, y)?);
    let gxz = good(&split_graph_at(g, v, x, z)?);
    report.note(format!(
        "G_xy connected and bridgeless: {gxy}; G_xz connected and bridgeless: {gxz}"
    ));
    report.clause(
        "G_xy or G_xz is connected and bridgeless",
        gxy || gxz,
        false,
    );
    if report.is_fail() {
        report.witness("graph", write_graph(g));
        let loops = g.edges.iter().filter(|e| e.is_loop() && e.u == vi).count();
        if loops > 0 {
            report.note(format!(
                "{v} carries {loops} self-loop(s); it has {} non-loop edges",
                d - 2 * loops
            ));
        }
    }
    Ok(report)
}

/// Ordered triples `(x, y, z)` of distinct non-loop edges at `v`.
pub fn edge_triples_at(g: &MultiGraph, v: usize) -> Vec<(usize, usize, usize)> {
    let at: Vec<usize> = (0..g.edges.len())
        .filter(|&k| {
            let e = &g.edges[k];
            !e.is_loop() && (e.u == v || e.v == v)
        })
        .collect();
    let mut out = Vec::new();
    for &x in &at {
        for &y in &at {
            for &z in &at {
                if x != y && y != z && x != z {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

/// All connected multigraphs with `1..=max_edges` edges, one labeling per
/// breadth-first vertex order. Every connected multigraph is isomorphic to at
/// least one output. Vertices are `v0, v1, ..`; edges are `e1, e2, ..` in
/// sorted endpoint order.
pub fn enumerate_connected_multigraphs(max_edges: usize, loops: bool) -> Vec<MultiGraph> {
    fn extend(
        edges: &mut Vec<(usize, usize)>,
        max_seen: usize,
        max_edges: usize,
        loops: bool,
        out: &mut Vec<MultiGraph>,
    ) {
        if !edges.is_empty() {
            let mut g = MultiGraph::new();
            for (k, &(u, v)) in edges.iter().enumerate() {
                g.add_edge(&format!("e{}", k + 1), &format!("v{u}"), &format!("v{v}"))
                    .expect("fresh labels");
            }
            out.push(g);
        }
        if edges.len() == max_edges {
            return;
        }
        let last = edges.last().copied().unwrap_or((0, 0));
        for u in last.0..=max_seen {
            let lo = if u == last.0 { last.1 } else { u };
            for v in lo..=max_seen + 1 {
                if v == u && !loops {
                    continue;
                }
                edges.push((u, v));
                extend(edges, max_seen.max(v), max_edges, loops, out);
                edges.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 0, max_edges, loops, &mut out);
    out
}

/// A graph with a distinguished pair of edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub graph: MultiGraph,
    pub x: String,
    pub y: String,
}

fn pairs(g: &MultiGraph) -> impl Iterator<Item = (usize, usize)> + '_ {
    let m = g.edge_count();
    (0..m).flat_map(move |i| (i + 1..m).map(move |j| (i, j)))
}

/// Parallel pair, `G` and `G - {x,y}` 2-connected, split cycle matroid disconnected.
fn is_parallel_witness(g: &MultiGraph, m: &BinaryMatroid, i: usize, j: usize) -> Result<bool> {
    if !m.parallel(i, j) {
        return Ok(false);
    }
    let (x, y) = (m.label(i), m.label(j));
    let rest = g.without_edges(&[x, y])?;
    Ok(rest.is_2_connected() && !split_matroid(m, ElementSet::from_indices([i, j])).is_connected())
}

/// Series pair, `M \ {x,y}` disconnected, split `M_{x,y}` connected.
fn is_series_witness(m: &BinaryMatroid, i: usize, j: usize) -> bool {
    let pair = ElementSet::from_indices([i, j]);
    m.series(i, j) && !m.delete(pair).is_connected() && split_matroid(m, pair).is_connected()
}

/// Searches 2-connected loopless multigraphs with at most `max_edges` edges.
pub fn parallel_pair_witnesses(max_edges: usize) -> Result<Vec<PairWitness>> {
    witness_search(max_edges, is_parallel_witness)
}

pub fn series_pair_witnesses(max_edges: usize) -> Result<Vec<PairWitness>> {
    witness_search(max_edges, |_, m, i, j| Ok(is_series_witness(m, i, j)))
}

fn witness_search(
    max_edges: usize,
    test: impl Fn(&MultiGraph, &BinaryMatroid, usize, usize) -> Result<bool>,
) -> Result<Vec<PairWitness>> {
    let mut found = Vec::new();
    for g in enumerate_connected_multigraphs(max_edges, false) {
        if !g.is_2_connected() {
            continue;
        }
        let m = g.cycle_matroid()?;
        for (i, j) in pairs(&g) {
            if test(&g, &m, i, j)? {
                found.push(PairWitness {
                    graph: g.clone(),
                    x: m.label(i).to_string(),
                    y: m.label(j).to_string(),
                });
            }
        }
    }
    Ok(found)
}

/// `K4` on `1..4` plus an edge `y` parallel to `x = 12`.
pub fn figure1_graph() -> MultiGraph {
    MultiGraph::from_edges(&[
        ("x", "1", "2"),
        ("y", "1", "2"),
        ("a", "1", "3"),
        ("b", "1", "4"),
        ("c", "2", "3"),
        ("d", "2", "4"),
        ("e", "3", "4"),
    ])
    .unwrap()
}

/// The 4-cycle, with `x, y` adjacent at vertex `2`.
pub fn figure2_graph() -> MultiGraph {
    MultiGraph::from_edges(&[
        ("x", "1", "2"),
        ("y", "2", "3"),
        ("a", "3", "4"),
        ("b", "4", "1"),
    ])
    .unwrap()
}

const CAPTION_NOTE: &str = "caption-equivalent witness, not drawing-identical";

/// Parallel `x, y` in a 2-connected graph whose deletion stays 2-connected,
/// yet the split cycle matroid is disconnected.
pub fn figure1_scenario() -> CheckReport {
    let g = figure1_graph();
    let m = g.cycle_matroid().expect("small graph");
    let rest = g.without_edges(&["x", "y"]).expect("edges exist");
    let split = split_matroid(&m, m.set_of(&["x", "y"]).unwrap());
    let split_g = split_graph(&g, "x", "y").expect("adjacent");
    let mut r = CheckReport::new("figure-1", g.digest());
    r.clause(
        "x parallel to y",
        m.is_parallel_pair("x", "y").unwrap(),
        false,
    )
    .clause("G is 2-connected", g.is_2_connected(), false)
    .clause("M(G) is connected", m.is_connected(), false)
    .clause("G - {x,y} is 2-connected", rest.is_2_connected(), false)
    .clause(
        "M(G) \\ {x,y} is connected",
        m.delete_labels(&["x", "y"]).unwrap().is_connected(),
        false,
    )
    .clause("M(G)_xy is disconnected", !split.is_connected(), false)
    .clause("G_xy is not 2-connected", !split_g.is_2_connected(), false)
    .clause(
        "M(G_xy) equals M(G)_xy",
        split_g.cycle_matroid().unwrap() == split,
        false,
    );
    r.witness("graph", write_graph(&g))
        .witness("split-graph", write_graph(&split_g))
        .note(CAPTION_NOTE);
    r
}

/// Series `x, y` whose deletion disconnects the matroid, while the split
/// is connected and in fact equal to the original.
pub fn figure2_scenario() -> CheckReport {
    let g = figure2_graph();
    let m = g.cycle_matroid().expect("small graph");
    let rest = g.without_edges(&["x", "y"]).expect("edges exist");
    let split = split_matroid(&m, m.set_of(&["x", "y"]).unwrap());
    let split_g = split_graph(&g, "x", "y").expect("adjacent");
    let mut r = CheckReport::new("figure-2", g.digest());
    r.clause("x, y in series", m.is_series_pair("x", "y").unwrap(), false)
        .clause("M(G) is connected", m.is_connected(), false)
        .clause(
            "G - {x,y} is disconnected",
            !rest.is_connected_graph(),
            false,
        )
        .clause(
            "M(G) \\ {x,y} is disconnected",
            !m.delete_labels(&["x", "y"]).unwrap().is_connected(),
            false,
        )
        .clause("M(G)_xy is connected", split.is_connected(), false)
        .clause("M(G)_xy equals M(G)", split == m, false)
        .clause(
            "G_xy without isolated vertices is 2-connected",
            split_g.without_isolated().is_2_connected(),
            false,
        )
        .clause(
            "M(G_xy) equals M(G)_xy",
            split_g.cycle_matroid().unwrap() == split,
            false,
        );
    r.witness("graph", write_graph(&g))
        .witness("split-graph", write_graph(&split_g))
        .note(CAPTION_NOTE);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> MultiGraph {
        let mut g = MultiGraph::new();
        for i in 0..n {
            g.add_edge(
                &format!("e{}", i + 1),
                &format!("{}", i),
                &format!("{}", (i + 1) % n),
            )
            .unwrap();
        }
        g
    }

    fn triangle() -> MultiGraph {
        MultiGraph::from_edges(&[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")]).unwrap()
    }

    fn k5() -> MultiGraph {
        let mut g = MultiGraph::new();
        let mut k = 0;
        for i in 0..5 {
            for j in i + 1..5 {
                k += 1;
                g.add_edge(&format!("e{k}"), &format!("{i}"), &format!("{j}"))
                    .unwrap();
            }
        }
        g
    }

    #[test]
    fn cycle_matroid_examples() {
        let m = triangle().cycle_matroid().unwrap();
        assert_eq!(m.sorted_family(m.circuits().unwrap()), ["{a,b,c}"]);
        let c4 = cycle(4).cycle_matroid().unwrap();
        assert_eq!(c4.rank(), 3);
        assert_eq!(c4.circuits().unwrap().len(), 1);
        let two = MultiGraph::from_edges(&[
            ("a", "1", "2"),
            ("b", "2", "3"),
            ("c", "3", "1"),
            ("d", "4", "5"),
            ("e", "5", "6"),
            ("f", "6", "4"),
        ])
        .unwrap();
        assert_eq!(two.cycle_matroid().unwrap().components().len(), 2);
        let looped = MultiGraph::from_edges(&[("a", "1", "1"), ("b", "1", "2")]).unwrap();
        let m = looped.cycle_matroid().unwrap();
        assert_eq!(m.loops(), ElementSet::singleton(0));
        assert_eq!(looped.degree("1").unwrap(), 3);
    }

    #[test]
    fn graph_quantities() {
        let c4 = cycle(4);
        assert!((0..4).all(|v| c4.degree(&v.to_string()).unwrap() == 2));
        assert!(c4.is_bridgeless());
        assert!(c4.is_2_connected());
        let path = MultiGraph::from_edges(&[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        assert_eq!(path.bridge_labels(), ["a", "b"]);
        let bowtie = MultiGraph::from_edges(&[
            ("a", "v", "1"),
            ("b", "1", "2"),
            ("c", "2", "v"),
            ("d", "v", "3"),
            ("e", "3", "4"),
            ("f", "4", "v"),
        ])
        .unwrap();
        assert!(bowtie.is_connected_graph());
        assert!(bowtie.is_bridgeless());
        assert!(!bowtie.is_2_connected());
        assert!(bowtie.is_cut_vertex("v").unwrap());
    }

    #[test]
    fn split_graph_examples() {
        let c4 = cycle(4);
        // e1 = 0-1, e2 = 1-2 share vertex 1
        let s = split_graph(&c4, "e1", "e2").unwrap();
        assert_eq!(s.vertex_count(), 5);
        assert_eq!(s.edge_count(), 4);
        assert_eq!(s.cycle_matroid().unwrap(), c4.cycle_matroid().unwrap());
        assert_eq!(s.degree("1'").unwrap(), 2);

        let g = figure1_graph();
        let s = split_graph(&g, "x", "y").unwrap();
        assert_eq!(s.degree("1'").unwrap(), 2);
        assert!(s
            .edges()
            .iter()
            .filter(|e| e.label == "x" || e.label == "y")
            .all(|e| { [s.vertex(e.u), s.vertex(e.v)].contains(&"2") }));
        assert!(!s.is_2_connected());

        let t = split_graph(&triangle(), "a", "b").unwrap();
        assert_eq!(t.vertex_count(), 4);
        let m = t.cycle_matroid().unwrap();
        assert_eq!(m.circuits().unwrap().len(), 1);
        assert_eq!(m.circuits().unwrap()[0].len(), 3);
        assert_eq!(m, triangle().cycle_matroid().unwrap());
    }

    #[test]
    fn split_graph_errors() {
        let path =
            MultiGraph::from_edges(&[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")]).unwrap();
        assert_eq!(
            split_graph(&path, "a", "c").err(),
            Some(Error::NonAdjacentEdges("a".into(), "c".into()))
        );
        assert!(matches!(
            split_graph(&path, "a", "q"),
            Err(Error::UnknownLabel(_))
        ));
        let looped = MultiGraph::from_edges(&[("a", "1", "1"), ("b", "1", "2")]).unwrap();
        assert_eq!(
            split_graph(&looped, "a", "b").err(),
            Some(Error::SelfLoop("a".into()))
        );
    }

    #[test]
    fn commutation_examples() {
        assert!(commutation_check(&triangle(), "a", "b").unwrap().is_pass());
        assert!(commutation_check(&cycle(4), "e1", "e2").unwrap().is_pass());
        assert!(commutation_check(&figure1_graph(), "x", "y")
            .unwrap()
            .is_pass());
    }

    #[test]
    fn splitting_lemma_examples() {
        let bowtie = MultiGraph::from_edges(&[
            ("x", "v", "1"),
            ("b", "1", "2"),
            ("y", "2", "v"),
            ("z", "v", "3"),
            ("e", "3", "4"),
            ("f", "4", "v"),
        ])
        .unwrap();
        let r = splitting_lemma_check(&bowtie, "v", "x", "y", "z").unwrap();
        assert!(r.is_pass(), "{r}");
        // x and y share a block at the cut vertex
        let r = splitting_lemma_check(&bowtie, "v", "x", "z", "y").unwrap();
        assert_eq!(r.verdict, Verdict::PreconditionUnmet);

        let g = k5();
        for v in 0..5 {
            for (x, y, z) in edge_triples_at(&g, v) {
                let r = splitting_lemma_check(
                    &g,
                    g.vertex(v),
                    &g.edges()[x].label,
                    &g.edges()[y].label,
                    &g.edges()[z].label,
                )
                .unwrap();
                assert!(r.is_pass(), "{r}");
            }
        }

        let theta =
            MultiGraph::from_edges(&[("x", "v", "w"), ("y", "v", "w"), ("z", "v", "w")]).unwrap();
        let r = splitting_lemma_check(&theta, "v", "x", "y", "z").unwrap();
        assert_eq!(r.verdict, Verdict::PreconditionUnmet);
    }

    #[test]
    fn figures() {
        let r = figure1_scenario();
        assert!(r.is_pass(), "{r}");
        let r = figure2_scenario();
        assert!(r.is_pass(), "{r}");
    }

    #[test]
    fn enumeration_is_connected_and_canonical() {
        let gs = enumerate_connected_multigraphs(3, true);
        assert!(gs.iter().all(|g| g.is_connected_graph()));
        // one edge: a loop at v0, or the edge v0-v1
        assert_eq!(gs.iter().filter(|g| g.edge_count() == 1).count(), 2);
        let simple = enumerate_connected_multigraphs(4, false);
        assert!(simple
            .iter()
            .any(|g| g.edge_count() == 4 && g.is_2_connected()));
    }
}
