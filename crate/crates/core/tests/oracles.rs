//! Cross-checks against deliberately naive reimplementations.

use std::collections::BTreeSet;

use bimatroid::graphs::enumerate_connected_multigraphs;
use bimatroid::theorems::{enumerate_binary_matroids, EnumerationSpec};
use bimatroid::{BinaryMatroid, ElementSet, MultiGraph};

fn all_matroids(max_n: usize) -> impl Iterator<Item = BinaryMatroid> {
    (0..=max_n).flat_map(|n| enumerate_binary_matroids(&EnumerationSpec::all(n)).unwrap())
}

/// Rank by eliminating the selected columns directly.
fn naive_rank(m: &BinaryMatroid, a: ElementSet) -> usize {
    let cols: Vec<usize> = a.iter().collect();
    m.rep().select_columns(&cols).rank()
}

fn naive_circuits(m: &BinaryMatroid) -> BTreeSet<u64> {
    let dependent: Vec<ElementSet> = m
        .full_set()
        .subsets()
        .filter(|&s| naive_rank(m, s) < s.len())
        .collect();
    dependent
        .iter()
        .filter(|&&d| {
            d.iter()
                .all(|e| naive_rank(m, d - ElementSet::singleton(e)) == d.len() - 1)
        })
        .map(|d| d.mask())
        .collect()
}

/// Complements of hyperplanes: `E - H` with `r(H) = r - 1` and `H` closed.
fn naive_cocircuits(m: &BinaryMatroid) -> BTreeSet<u64> {
    let full = m.full_set();
    let r = naive_rank(m, full);
    full.subsets()
        .filter(|&h| {
            r > 0
                && naive_rank(m, h) == r - 1
                && (full - h)
                    .iter()
                    .all(|e| naive_rank(m, h | ElementSet::singleton(e)) == r)
        })
        .map(|h| (full - h).mask())
        .collect()
}

#[test]
fn rank_matches_column_elimination() {
    for m in all_matroids(5) {
        for a in m.full_set().subsets() {
            assert_eq!(m.rank_of(a), naive_rank(&m, a), "{m:?} {a:?}");
        }
    }
}

#[test]
fn circuits_and_cocircuits_match_definitions() {
    for m in all_matroids(6) {
        let got: BTreeSet<u64> = m.circuits().unwrap().iter().map(|c| c.mask()).collect();
        assert_eq!(got, naive_circuits(&m), "{m:?}");
        let got: BTreeSet<u64> = m.cocircuits().unwrap().iter().map(|c| c.mask()).collect();
        assert_eq!(got, naive_cocircuits(&m), "{m:?}");
    }
}

/// Classes of "equal or on a common circuit", checking transitivity.
fn components_by_circuits(m: &BinaryMatroid) -> Vec<ElementSet> {
    let n = m.len();
    let circuits = m.circuits().unwrap();
    let related =
        |i: usize, j: usize| i == j || circuits.iter().any(|c| c.contains(i) && c.contains(j));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if related(i, j) && related(j, k) {
                    assert!(related(i, k), "not transitive on {m:?}");
                }
            }
        }
    }
    let mut classes: Vec<ElementSet> = Vec::new();
    for i in 0..n {
        if !classes.iter().any(|c| c.contains(i)) {
            classes.push((0..n).filter(|&j| related(i, j)).collect());
        }
    }
    classes
}

#[test]
fn components_match_circuit_relation() {
    for m in all_matroids(6) {
        assert_eq!(m.components(), components_by_circuits(&m), "{m:?}");
    }
}

/// Least `k` with a `k`-separation, straight from the definition.
fn naive_connectivity(m: &BinaryMatroid, vertical: bool) -> Option<usize> {
    let full = m.full_set();
    let r = naive_rank(m, full);
    (1..=m.len()).find(|&k| {
        full.subsets().any(|x| {
            let y = full - x;
            let (rx, ry) = (naive_rank(m, x), naive_rank(m, y));
            let big = if vertical {
                rx >= k && ry >= k
            } else {
                x.len() >= k && y.len() >= k
            };
            !x.is_empty() && !y.is_empty() && big && rx + ry < r + k
        })
    })
}

#[test]
fn connectivity_matches_definition() {
    for m in all_matroids(6) {
        assert_eq!(
            m.connectivity().unwrap(),
            naive_connectivity(&m, false),
            "{m:?}"
        );
        assert_eq!(
            m.vertical_connectivity().unwrap(),
            naive_connectivity(&m, true),
            "{m:?}"
        );
    }
}

/// Edge sets of simple cycles: loops, parallel pairs, and longer cycles found
/// by depth-first search from their smallest vertex.
fn simple_cycles(g: &MultiGraph) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let edges = g.edges();
    for (k, e) in edges.iter().enumerate() {
        if e.is_loop() {
            out.insert(1u64 << k);
        }
    }
    fn dfs(
        g: &MultiGraph,
        start: usize,
        at: usize,
        visited: &mut Vec<bool>,
        used: u64,
        out: &mut BTreeSet<u64>,
    ) {
        for (k, e) in g.edges().iter().enumerate() {
            if e.is_loop() || used >> k & 1 == 1 || (e.u != at && e.v != at) {
                continue;
            }
            let next = if e.u == at { e.v } else { e.u };
            if next == start && used != 0 {
                out.insert(used | 1 << k);
            } else if next > start && !visited[next] {
                visited[next] = true;
                dfs(g, start, next, visited, used | 1 << k, out);
                visited[next] = false;
            }
        }
    }
    for s in 0..g.vertex_count() {
        let mut visited = vec![false; g.vertex_count()];
        visited[s] = true;
        dfs(g, s, s, &mut visited, 0, &mut out);
    }
    out
}

#[test]
fn cycle_matroid_circuits_are_simple_cycles() {
    for g in enumerate_connected_multigraphs(7, true) {
        let m = g.cycle_matroid().unwrap();
        let got: BTreeSet<u64> = m.circuits().unwrap().iter().map(|c| c.mask()).collect();
        assert_eq!(got, simple_cycles(&g), "{}", bimatroid::write_graph(&g));
    }
}

#[test]
fn bridges_are_coloops() {
    for g in enumerate_connected_multigraphs(6, true) {
        let m = g.cycle_matroid().unwrap();
        assert_eq!(g.bridges(), m.coloops());
    }
}

#[test]
fn graph_enumeration_covers_small_classes() {
    let graphs = enumerate_connected_multigraphs(3, false);
    // Up to isomorphism, loopless connected multigraphs with 3 edges: the
    // path, the star, the triangle, a double edge with a pendant edge, and
    // a triple edge.
    let mut shapes = BTreeSet::new();
    for g in graphs.iter().filter(|g| g.edge_count() == 3) {
        let mut degrees: Vec<usize> = g.vertices().iter().map(|v| g.degree(v).unwrap()).collect();
        degrees.sort();
        shapes.insert((
            degrees,
            g.cycle_matroid().unwrap().circuits().unwrap().len(),
        ));
    }
    assert_eq!(shapes.len(), 5);
}

/// The number of subspaces of GF(2)^n by the recurrence
/// `G(n+1) = 2 G(n) + (2^n - 1) G(n-1)`.
fn galois_number(n: usize) -> u64 {
    let (mut prev, mut cur) = (1u64, 2u64);
    if n == 0 {
        return 1;
    }
    for k in 1..n {
        let next = 2 * cur + ((1u64 << k) - 1) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[test]
fn enumerator_counts_match_recurrence() {
    for n in 0..=8 {
        let count = enumerate_binary_matroids(&EnumerationSpec::all(n))
            .unwrap()
            .count() as u64;
        assert_eq!(count, galois_number(n), "n = {n}");
    }
    assert_eq!(galois_number(8), 417_199);
}
