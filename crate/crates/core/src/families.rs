//! Structured graph families and closed-form RH distances between them.
//!
//! The generators emit ccdhs directly (the distances only consume ccdhs),
//! and the closed forms serve as ground truth for the algorithmic path in
//! tests and in the `families` CLI subcommand.

use crate::ccdh::Ccdh;
use crate::error::{Result, RhError};
use crate::rh;

/// A named graph family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// Complete graph on `n >= 2` vertices.
    Complete { n: u64 },
    /// Cycle on `n >= 3` vertices.
    Cycle { n: u64 },
    /// Path on `n >= 2` vertices.
    Path { n: u64 },
    /// Star on `n >= 2` vertices (one hub, `n - 1` pendants).
    Star { n: u64 },
    /// Complete bipartite graph with sides `a, b >= 1`.
    CompleteBipartite { a: u64, b: u64 },
    /// One vertex of degree `k >= 2`, all others pendant. Needs
    /// `2 <= k <= n - 1`, and `n - 1 - k` even when `k < n - 1` so the
    /// leftover pendants can pair up.
    StarDegreed { n: u64, k: u64 },
    /// `r`-regular graph on `n` vertices (`1 <= r < n`, `r * n` even).
    Regular { n: u64, r: u64 },
}

impl FamilySpec {
    pub fn ccdh(&self) -> Result<Ccdh> {
        family_ccdh(self)
    }

    /// Number of vertices.
    pub fn order(&self) -> u64 {
        match *self {
            FamilySpec::Complete { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Path { n }
            | FamilySpec::Star { n }
            | FamilySpec::StarDegreed { n, .. }
            | FamilySpec::Regular { n, .. } => n,
            FamilySpec::CompleteBipartite { a, b } => a + b,
        }
    }
}

fn param_err(msg: impl Into<String>) -> RhError {
    RhError::Parameter(msg.into())
}

/// Exact ccdh of the named family.
pub fn family_ccdh(spec: &FamilySpec) -> Result<Ccdh> {
    let values: Vec<u64> = match *spec {
        FamilySpec::Complete { n } => {
            if n < 2 {
                return Err(param_err("complete graph needs n >= 2"));
            }
            vec![n; (n - 1) as usize]
        }
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(param_err("cycle needs n >= 3"));
            }
            vec![n, n]
        }
        FamilySpec::Path { n } => {
            if n < 2 {
                return Err(param_err("path needs n >= 2"));
            }
            if n == 2 {
                vec![2]
            } else {
                vec![n, n - 2]
            }
        }
        FamilySpec::Star { n } => {
            if n < 2 {
                return Err(param_err("star needs n >= 2"));
            }
            if n == 2 {
                vec![2]
            } else {
                let mut v = vec![1; (n - 1) as usize];
                v[0] = n;
                v
            }
        }
        FamilySpec::CompleteBipartite { a, b } => {
            if a < 1 || b < 1 {
                return Err(param_err("complete bipartite needs both sides >= 1"));
            }
            let (lo, hi) = (a.min(b), a.max(b));
            // lo vertices of degree hi, hi vertices of degree lo.
            let mut v = vec![lo; hi as usize];
            for x in v.iter_mut().take(lo as usize) {
                *x = a + b;
            }
            v
        }
        FamilySpec::StarDegreed { n, k } => {
            if n < 3 {
                return Err(param_err("star-degreed graph needs n >= 3"));
            }
            if k < 2 || k > n - 1 {
                return Err(param_err("star-degreed graph needs 2 <= k <= n - 1"));
            }
            if k < n - 1 && (n - 1 - k) % 2 != 0 {
                return Err(param_err(
                    "star-degreed graph needs n - 1 - k even so leftover pendants pair up",
                ));
            }
            let mut v = vec![1; k as usize];
            v[0] = n;
            v
        }
        FamilySpec::Regular { n, r } => {
            if r < 1 || r >= n {
                return Err(param_err("regular graph needs 1 <= r < n"));
            }
            if (r * n) % 2 != 0 {
                return Err(param_err("regular graph needs r * n even"));
            }
            vec![n; r as usize]
        }
    };
    Ccdh::from_values(values)
}

/// Smooth RH distance between complete graphs: `(m - n) / n` for
/// `3 <= n <= m`.
pub fn rh_complete_complete(n: u64, m: u64) -> Result<f64> {
    if n < 3 || m < n {
        return Err(param_err("complete-vs-complete form needs 3 <= n <= m"));
    }
    Ok((m - n) as f64 / n as f64)
}

/// Smooth RH distance between the complete graph `K_n` and the cycle `C_m`,
/// by the five-case closed form.
///
/// The case boundaries are
/// `B1 = (n^2 - 3n + sqrt(n^4 + 2n^3 - 11 n^2)) / (4n - 10)` and
/// `B2 = (n^2 - 3n + sqrt(n^4 - 4n^3 + 7 n^2)) / (n - 1)`; boundary inputs
/// take the case whose closed interval contains them. The `m > n` cases are
/// stated only for `n >= 5`, so `n` of 3 or 4 with `m > n` returns a
/// coverage error instead of a guess.
pub fn rh_complete_cycle(n: u64, m: u64) -> Result<f64> {
    if n < 3 || m < 3 {
        return Err(param_err("complete-vs-cycle form needs n >= 3 and m >= 3"));
    }
    let nf = n as f64;
    let mf = m as f64;
    let b1 = (nf * nf - 3.0 * nf + (nf.powi(4) + 2.0 * nf.powi(3) - 11.0 * nf * nf).sqrt())
        / (4.0 * nf - 10.0);
    if mf < b1 {
        return Ok(nf / mf - 1.0);
    }
    if m <= n {
        return Ok(1.0 - 3.0 * mf / (nf + nf * mf - mf));
    }
    if n >= 5 {
        let b2 = (nf * nf - 3.0 * nf + (nf.powi(4) - 4.0 * nf.powi(3) + 7.0 * nf * nf).sqrt())
            / (nf - 1.0);
        if mf <= b2 {
            return Ok(1.0 - 3.0 * mf / (nf + nf * mf - mf));
        }
        if m <= 2 * n {
            return Ok(mf / nf - 1.0);
        }
        return Ok(3.0 * mf / (nf + mf) - 1.0);
    }
    Err(RhError::FormulaCoverage { n, m })
}

/// Largest possible smooth RH distance between any graph on `n` vertices
/// and any graph on `m >= n` vertices (isolated vertices excluded).
///
/// `m/2 - 1` when `n = 2` and `m^2/(2m+1) - 1` when `n >= 3, m >= 4`; the
/// remaining corner `n = m = 3` attains `2/7`.
pub fn max_rh(n: u64, m: u64) -> Result<f64> {
    if n < 2 || m < n {
        return Err(param_err("max RH needs 2 <= n <= m"));
    }
    let mf = m as f64;
    if n == 2 {
        return Ok(mf / 2.0 - 1.0);
    }
    if m == 3 {
        return Ok(2.0 / 7.0);
    }
    Ok(mf * mf / (2.0 * mf + 1.0) - 1.0)
}

/// Smooth RH distance divided by the largest value possible at the two
/// vertex counts; always lands in `[0, 1]`.
pub fn normalized_ratio(f: &Ccdh, g: &Ccdh) -> Result<f64> {
    let n = f.vertex_count().min(g.vertex_count());
    let m = f.vertex_count().max(g.vertex_count());
    if n < 3 {
        return Err(param_err(
            "normalized ratio needs both graphs on >= 3 vertices",
        ));
    }
    let bound = max_rh(n, m)?;
    Ok(rh::smooth_rh(f, g).distance / bound)
}

/// The four reference distances between a star-degreed graph `S` (hub
/// degree >= 3) on `n >= 5` vertices and `S*`, the same graph with one
/// pendant-pendant edge added.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StarPerturbation {
    /// Smooth directional distance from `S` to `S*`: always `2/5`.
    pub smooth_forward: f64,
    /// Smooth directional distance from `S*` to `S`: `2/(2n+1)`.
    pub smooth_backward: f64,
    /// Discrete directional distance from `S` to `S*`: always `1/2`.
    pub discrete_forward: f64,
    /// Discrete directional distance from `S*` to `S`: always `2/3`.
    pub discrete_backward: f64,
}

pub fn star_perturbation_values(n: u64) -> Result<StarPerturbation> {
    if n < 5 {
        return Err(param_err("star perturbation values need n >= 5"));
    }
    Ok(StarPerturbation {
        smooth_forward: 2.0 / 5.0,
        smooth_backward: 2.0 / (2.0 * n as f64 + 1.0),
        discrete_forward: 1.0 / 2.0,
        discrete_backward: 2.0 / 3.0,
    })
}

/// A pair of same-order ccdhs whose smooth RH distance is exactly `tau`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityPair {
    pub f: Ccdh,
    pub g: Ccdh,
    /// Exact distance `((r - k + 1) n - 1) / (k n + 1)`.
    pub tau: f64,
    /// Common number of vertices `n`.
    pub order: u64,
}

/// The `i`-th member (1-based) of a family of ccdh pairs whose RH distance,
/// scaled by the vertex count, converges to `c`.
///
/// Writing `1/c = k + delta` with integer `k >= 2` and `delta` in `[0, 1)`,
/// the pair on `n` vertices takes `F` with ccdh `n` repeated `k - 1` times
/// then `1` repeated `n - k` times (a `(k-2)`-regular graph plus a
/// dominating vertex) and `G` the `r`-regular graph with
/// `r = floor(kn/(k+delta)) - 1`. The valid orders are the odd
/// `n >= 2k + 4` with `ceil(c * delta * n)` even; that parity is what lets
/// both graphs exist. All arithmetic runs on an exact rational form of `c`
/// so the floor/ceil selections cannot be thrown off by float rounding.
pub fn density_pair(c: f64, i: u32) -> Result<DensityPair> {
    if !(c > 0.0 && c <= 0.5) {
        return Err(param_err("density construction needs c in (0, 1/2]"));
    }
    if i < 1 {
        return Err(param_err("density construction index starts at 1"));
    }
    let (p, q) =
        rationalize(c).ok_or_else(|| param_err("c is not a ratio of moderate integers"))?;
    // 1/c = q/p = k + delta with delta = (q - k p) / p.
    let k = q / p;
    let dnum = q - k * p; // delta = dnum / p
    debug_assert!(k >= 2);

    // c * delta * n = n * dnum / q, exactly.
    let parity_ok = |n: u64| ((n * dnum).div_ceil(q)) % 2 == 0;
    let mut n = 2 * k + 4;
    if n % 2 == 0 {
        n += 1;
    }
    let mut seen = 0;
    loop {
        if parity_ok(n) {
            seen += 1;
            if seen == i {
                break;
            }
        }
        n += 2;
    }

    // r = floor(k n / (k + delta)) - 1 = floor(k n p / q) - 1.
    let r = k * n * p / q - 1;
    let mut f_values = vec![1u64; (n - 1) as usize];
    for v in f_values.iter_mut().take((k - 1) as usize) {
        *v = n;
    }
    let f = Ccdh::from_values(f_values)?;
    let g = Ccdh::from_values(vec![n; r as usize])?;
    let tau = ((r - k + 1) * n - 1) as f64 / (k * n + 1) as f64;
    Ok(DensityPair {
        f,
        g,
        tau,
        order: n,
    })
}

/// Best rational approximation of `x` by continued fractions, accepted once
/// it matches to a relative 1e-9. Returns `(p, q)` with `x ~ p/q`.
fn rationalize(x: f64) -> Option<(u64, u64)> {
    let mut a = x;
    let (mut p0, mut q0, mut p1, mut q1) = (1u64, 0u64, a.floor() as u64, 1u64);
    for _ in 0..40 {
        let approx = p1 as f64 / q1 as f64;
        if (approx - x).abs() <= 1e-9 * x.abs() {
            return Some((p1, q1));
        }
        let frac = a - a.floor();
        if frac == 0.0 {
            break;
        }
        a = 1.0 / frac;
        let ai = a.floor() as u64;
        let p2 = ai.checked_mul(p1)?.checked_add(p0)?;
        let q2 = ai.checked_mul(q1)?.checked_add(q0)?;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if q1 > 1_000_000 {
            break;
        }
    }
    if (p1 as f64 / q1 as f64 - x).abs() <= 1e-9 * x.abs() {
        Some((p1, q1))
    } else {
        None
    }
}
