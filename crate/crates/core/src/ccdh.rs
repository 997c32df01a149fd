//! Degree histograms and complementary cumulative degree histograms (ccdh).
//!
//! For a graph with no isolated vertices, `n(k)` counts vertices of degree
//! exactly `k` and the ccdh `N(k) = sum_{i >= k} n(i)` counts vertices of
//! degree at least `k`. The ccdh is the canonical comparison object for the
//! distances in [`crate::rh`]: it is positive on `1..=delta`, nonincreasing,
//! and extends to the *smooth* ccdh by linear interpolation between
//! consecutive integers, with value 0 for arguments past `delta + 1`.

use std::collections::BTreeMap;

use crate::error::{Result, RhError};

/// Vertex counts per degree: `counts[k]` is the number of vertices of degree
/// exactly `k`. Keys and values are always >= 1; isolated vertices are
/// excluded by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeHistogram {
    counts: BTreeMap<u64, u64>,
}

impl DegreeHistogram {
    /// Builds the histogram of a simple edge set. Loops and duplicate pairs
    /// are ignored, so any edge list describes a simple graph.
    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut set = std::collections::HashSet::new();
        for (u, v) in edges {
            if u == v {
                continue;
            }
            set.insert((u.min(v), u.max(v)));
        }
        if set.is_empty() {
            return Err(RhError::EmptyGraph);
        }
        let mut degree = std::collections::HashMap::new();
        for (u, v) in set {
            *degree.entry(u).or_insert(0u64) += 1;
            *degree.entry(v).or_insert(0u64) += 1;
        }
        Self::from_degrees(degree.into_values())
    }

    /// Builds the histogram from a multiset of positive degrees.
    pub fn from_degrees<I>(degrees: I) -> Result<Self>
    where
        I: IntoIterator<Item = u64>,
    {
        let mut counts = BTreeMap::new();
        for d in degrees {
            if d == 0 {
                return Err(RhError::Parameter(
                    "degree histogram entries must be >= 1".into(),
                ));
            }
            *counts.entry(d).or_insert(0) += 1;
        }
        if counts.is_empty() {
            return Err(RhError::EmptyGraph);
        }
        Ok(Self { counts })
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    /// Number of (non-isolated) vertices.
    pub fn vertex_count(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn max_degree(&self) -> u64 {
        *self.counts.keys().next_back().expect("histogram nonempty")
    }
}

/// Complementary cumulative degree histogram stored densely on `1..=delta`.
///
/// `value(k)` returns `N(k)` for `k <= delta` and 0 past `delta`, matching
/// the convention that the smooth ccdh takes value 0 beyond `delta + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ccdh {
    values: Vec<u64>,
}

impl Ccdh {
    /// Cumulative sums of the histogram: `N(k) = sum_{i >= k} n(i)`.
    pub fn from_histogram(h: &DegreeHistogram) -> Self {
        let delta = h.max_degree();
        let mut values = vec![0u64; delta as usize];
        let mut running = 0u64;
        for k in (1..=delta).rev() {
            running += h.counts.get(&k).copied().unwrap_or(0);
            values[(k - 1) as usize] = running;
        }
        let c = Self { values };
        debug_assert!(c.check().is_ok());
        c
    }

    /// Validates and wraps an explicit value sequence `N(1), ..., N(delta)`.
    pub fn from_values(values: Vec<u64>) -> Result<Self> {
        let c = Self { values };
        c.check()?;
        Ok(c)
    }

    fn check(&self) -> Result<()> {
        if self.values.is_empty() {
            return Err(RhError::Format("ccdh must be nonempty".into()));
        }
        if *self.values.last().unwrap() == 0 {
            return Err(RhError::Format("ccdh values must be positive".into()));
        }
        for w in self.values.windows(2) {
            if w[0] < w[1] {
                return Err(RhError::Format(format!(
                    "ccdh must be nonincreasing ({} < {})",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }

    /// Maximum degree.
    pub fn delta(&self) -> u64 {
        self.values.len() as u64
    }

    /// Number of vertices, `N(1)`.
    pub fn vertex_count(&self) -> u64 {
        self.values[0]
    }

    /// `N(k)`, extended by 0 for `k > delta`.
    #[inline]
    pub fn value(&self, k: u64) -> u64 {
        assert!(k >= 1, "ccdh index starts at 1");
        if k <= self.delta() {
            self.values[(k - 1) as usize]
        } else {
            0
        }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Smooth (piecewise-linear) ccdh value at `x >= 1`.
    ///
    /// With `j = floor(x)` and `t = x - j` this is `(1-t) N(j) + t N(j+1)`;
    /// past `delta + 1` the curve is identically 0 rather than an error.
    pub fn smooth_eval(&self, x: f64) -> Result<f64> {
        if x.is_nan() || x < 1.0 {
            return Err(RhError::Domain(x));
        }
        Ok(self.smooth_unchecked(x))
    }

    #[inline]
    pub(crate) fn smooth_unchecked(&self, x: f64) -> f64 {
        debug_assert!(x >= 1.0);
        if x >= (self.delta() + 1) as f64 {
            return 0.0;
        }
        let j = x.floor() as u64;
        let t = x - j as f64;
        let a = self.value(j) as f64;
        if t == 0.0 {
            return a;
        }
        let b = self.value(j + 1) as f64;
        (1.0 - t) * a + t * b
    }

    /// Recovers the degree histogram via first differences `N(k) - N(k+1)`.
    pub fn to_histogram(&self) -> DegreeHistogram {
        let mut counts = BTreeMap::new();
        for k in 1..=self.delta() {
            let n_k = self.value(k) - self.value(k + 1);
            if n_k > 0 {
                counts.insert(k, n_k);
            }
        }
        DegreeHistogram { counts }
    }
}

/// Erdos-Gallai test: does a simple graph realize this degree multiset?
///
/// Requires a nonempty multiset of degrees >= 1 (callers strip isolated
/// vertices first). The degree sum must be even and every prefix of the
/// sorted sequence must satisfy
/// `sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)`.
pub fn is_graphical(degrees: &[u64]) -> bool {
    assert!(!degrees.is_empty(), "degree multiset must be nonempty");
    let n = degrees.len() as u64;
    let mut d: Vec<u64> = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    if d[0] > n - 1 {
        return false;
    }
    if d.iter().sum::<u64>() % 2 != 0 {
        return false;
    }
    for k in 1..=d.len() {
        let lhs: u64 = d[..k].iter().sum();
        let kk = k as u64;
        let rhs: u64 = kk * (kk - 1) + d[k..].iter().map(|&x| x.min(kk)).sum::<u64>();
        if lhs > rhs {
            return false;
        }
    }
    true
}
