//! Shared helpers for the integration suites.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use rhdist::ccdh::{is_graphical, Ccdh, DegreeHistogram};
use rhdist::graph::Graph;

/// Erdos-Renyi G(n, p); `None` when no edge came up.
pub fn random_graph(n: u64, p: f64, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(edges).ok()
}

/// Keeps sampling until the graph is nonempty.
pub fn random_nonempty_graph(n: u64, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        if let Some(g) = random_graph(n, p, rng) {
            return g;
        }
    }
}

pub fn complete_ccdh(n: u64) -> Ccdh {
    Ccdh::from_values(vec![n; (n - 1) as usize]).unwrap()
}

pub fn star_ccdh(n: u64) -> Ccdh {
    let mut v = vec![1u64; (n - 1) as usize];
    v[0] = n;
    Ccdh::from_values(v).unwrap()
}

/// Star plus one pendant-pendant edge.
pub fn perturbed_star_ccdh(n: u64) -> Ccdh {
    let mut v = vec![1u64; (n - 1) as usize];
    v[0] = n;
    v[1] = 3;
    Ccdh::from_values(v).unwrap()
}

/// Every ccdh realizable by a simple graph on exactly `k` vertices with no
/// isolated vertex: nonincreasing degree multisets over `1..k` that pass
/// the graphicality test.
pub fn graphical_ccdhs(k: usize) -> Vec<Ccdh> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; k];
    fn rec(i: usize, lo: u64, hi: u64, cur: &mut Vec<u64>, out: &mut Vec<Ccdh>) {
        if i == cur.len() {
            if is_graphical(cur) {
                let h = DegreeHistogram::from_degrees(cur.iter().copied()).unwrap();
                out.push(Ccdh::from_histogram(&h));
            }
            return;
        }
        for d in lo..=hi {
            cur[i] = d;
            rec(i + 1, d, hi, cur, out);
        }
    }
    rec(0, 1, (k - 1).max(1) as u64, &mut cur, &mut out);
    out
}

pub fn assert_close(got: f64, want: f64, what: &str) {
    let tol = 1e-9 * got.abs().max(want.abs()).max(1.0);
    assert!((got - want).abs() <= tol, "{what}: got {got}, want {want}");
}
