//! Discrete and smooth Relative Hausdorff (RH) distance between ccdhs.
//!
//! Both distances ask that every anchor point `(d, F(d))`, `d = 1..=delta(F)`,
//! of one curve be close to the other curve in *relative* error: the point
//! `(d', y')` matching it must satisfy `|d - d'| <= eps * d` and
//! `|F(d) - y'| <= eps * F(d)`. The discrete variant restricts `d'` to
//! integers in `1..=delta(G)+1` (with `G(delta+1) = 0`); the smooth variant
//! lets `d'` range over the piecewise-linear curve on `[1, delta(G)+1]`. The
//! distance is the least such `eps`, maximized over both directions.
//!
//! Geometrically, the smooth directional distance is the least `eps` such
//! that for every anchor the axis-aligned box
//! `[(1-eps)x, (1+eps)x] x [(1-eps)y, (1+eps)y]` meets the other curve.
//! Because boxes nest as `eps` grows and the curves are nonincreasing, the
//! minimal `eps` for a single anchor has a closed form once the segment the
//! grown box first touches is known; [`smooth_rh_point`] finds that segment
//! by walking left or right from the current box edge, and [`smooth_rh`]
//! folds it over all anchors of both curves with one shared running `eps`.
//! The total number of ccdh reads is linear in `delta(F) + delta(G)`.
//!
//! Two independent reference routes are kept alongside the fast path:
//! [`oracle_point_epsilon`] brackets the per-anchor minimum by bisection on
//! the intersection predicate, and [`smooth_rh_baseline`] minimizes over
//! every segment of the other curve (quadratic work).

use crate::ccdh::Ccdh;

/// Axis-aligned box of relative radius `eps` around `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhBox {
    x: f64,
    y: f64,
    eps: f64,
}

impl RhBox {
    pub fn new(x: f64, y: f64, eps: f64) -> Self {
        assert!(x > 0.0 && y > 0.0 && eps >= 0.0, "invalid box parameters");
        Self { x, y, eps }
    }

    pub fn center(&self) -> (f64, f64) {
        (self.x, self.y)
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// Lower-left corner `((1-eps)x, (1-eps)y)`.
    pub fn lower_left(&self) -> (f64, f64) {
        ((1.0 - self.eps) * self.x, (1.0 - self.eps) * self.y)
    }

    /// Upper-right corner `((1+eps)x, (1+eps)y)`.
    pub fn upper_right(&self) -> (f64, f64) {
        ((1.0 + self.eps) * self.x, (1.0 + self.eps) * self.y)
    }
}

/// Directional distances and their maximum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhResult {
    /// Directional distance from `f` to `g`.
    pub forward: f64,
    /// Directional distance from `g` to `f`.
    pub backward: f64,
    /// `max(forward, backward)`.
    pub distance: f64,
}

/// Does the smooth ccdh of `h` (on its domain `[1, delta+1]`) meet the box?
///
/// Monotonicity makes three mutually exclusive miss cases exhaustive:
/// the whole curve tops out below the box (`h(1)` under the bottom edge with
/// the box sticking out left of the domain), the curve passes below the
/// lower-left corner, or it passes above the upper-right corner. Touching
/// the boundary counts as intersecting.
pub fn box_intersects(h: &Ccdh, b: &RhBox) -> bool {
    let (lx, ly) = b.lower_left();
    let (rx, ry) = b.upper_right();
    if lx < 1.0 {
        if (h.value(1) as f64) < ly {
            return false;
        }
    } else if h.smooth_unchecked(lx) < ly {
        return false;
    }
    if rx < (h.delta() + 1) as f64 && h.smooth_unchecked(rx) > ry {
        return false;
    }
    true
}

/// Maximum of `eps` and the smooth RH distance from the point `(x, y)` to
/// the curve of `h`.
///
/// `y` is the source ccdh value at integer `x`, and `eps` is the running
/// maximum from anchors already processed. If the box at `eps` already meets
/// the curve the answer is `eps` itself; otherwise the curve passes entirely
/// below or entirely above the box, and the least enclosing `eps'` puts the
/// lower-left (resp. upper-right) corner on the curve. That corner moves
/// along the ray `s -> (s*x, s*y)`, so the return value solves the ray
/// against the curve segment found by the directional walk.
pub fn smooth_rh_point(x: u64, y: f64, h: &Ccdh, eps: f64) -> f64 {
    let mut ops = 0u64;
    point_distance(x as f64, y, h, eps, &mut ops)
}

pub(crate) fn point_distance(x: f64, y: f64, h: &Ccdh, eps: f64, ops: &mut u64) -> f64 {
    debug_assert!(x >= 1.0 && y > 0.0 && eps >= 0.0);
    let lx = (1.0 - eps) * x;
    let ly = (1.0 - eps) * y;
    let rx = (1.0 + eps) * x;
    let ry = (1.0 + eps) * y;

    // A miss-branch value is never below `eps` in exact arithmetic, but the
    // closed forms can land an ulp under it when the box at `eps` touches
    // the curve exactly; the contract is the maximum of the two.
    let over = |candidate: f64| {
        debug_assert!(candidate >= eps - 1e-12 * eps.max(1.0));
        candidate.max(eps)
    };

    if lx < 1.0 {
        *ops += 1;
        let h1 = h.value(1) as f64;
        if h1 < ly {
            // The curve never reaches the box bottom; the box first catches
            // the peak (1, h(1)) when its bottom drops to h(1).
            return over(1.0 - h1 / y);
        }
    } else {
        *ops += 2;
        if h.smooth_unchecked(lx) < ly {
            // Curve below the box. Walk left to the segment crossing the
            // lower-left ray.
            let mut j = lx.ceil() as u64;
            while j > 1 && {
                *ops += 1;
                (h.value(j - 1) as f64) < (j - 1) as f64 * y / x
            } {
                j -= 1;
            }
            if j == 1 {
                // The ray leaves the domain before meeting the curve.
                *ops += 1;
                return over(1.0 - h.value(1) as f64 / y);
            }
            *ops += 2;
            let a = h.value(j - 1) as f64;
            let b = h.value(j) as f64;
            let jf = j as f64;
            return over((y + (x - jf) * a - (x - jf + 1.0) * b) / (y + x * (a - b)));
        }
    }
    if rx < (h.delta() + 1) as f64 {
        *ops += 2;
        if h.smooth_unchecked(rx) > ry {
            // Curve above the box. Walk right to the segment crossing the
            // upper-right ray.
            let mut j = rx.floor() as u64;
            while {
                *ops += 1;
                (h.value(j + 1) as f64) > (j + 1) as f64 * y / x
            } {
                j += 1;
            }
            *ops += 2;
            let a = h.value(j) as f64;
            let b = h.value(j + 1) as f64;
            let jf = j as f64;
            return over(((jf + 1.0 - x) * a + (x - jf) * b - y) / (y + x * (a - b)));
        }
    }
    eps
}

/// Smooth directional RH distance from `f` to `g`: the fold of
/// [`smooth_rh_point`] over the anchors `(d, f(d))`, `d = 1..=delta(f)`.
pub fn smooth_rh_directional(f: &Ccdh, g: &Ccdh) -> f64 {
    let mut eps = 0.0;
    let mut ops = 0u64;
    for d in 1..=f.delta() {
        eps = point_distance(d as f64, f.value(d) as f64, g, eps, &mut ops);
    }
    eps
}

/// Smooth RH distance, plus the number of ccdh reads the pass performed.
///
/// A single interleaved loop over `i = 1..=max(delta(f), delta(g))` feeds
/// both directions through one shared running `eps`; the counter certifies
/// the linear work bound.
pub fn smooth_rh_counted(f: &Ccdh, g: &Ccdh) -> (f64, u64) {
    let mut eps = 0.0;
    let mut ops = 0u64;
    let delta = f.delta().max(g.delta());
    for i in 1..=delta {
        if i <= f.delta() {
            let next = point_distance(i as f64, f.value(i) as f64, g, eps, &mut ops);
            debug_assert!(next >= eps, "running eps must be nondecreasing");
            eps = next;
        }
        if i <= g.delta() {
            let next = point_distance(i as f64, g.value(i) as f64, f, eps, &mut ops);
            debug_assert!(next >= eps, "running eps must be nondecreasing");
            eps = next;
        }
    }
    (eps, ops)
}

/// Smooth RH distance between two ccdhs, with both directional values.
///
/// `distance` is `max(forward, backward)` exactly. The interleaved
/// single-pass route computes the same maximum and is asserted to agree in
/// debug builds; the two can differ by an ulp when a box touches the other
/// curve exactly on a grid point, because the crossing segment is then
/// found from one side or the other.
pub fn smooth_rh(f: &Ccdh, g: &Ccdh) -> RhResult {
    let forward = smooth_rh_directional(f, g);
    let backward = smooth_rh_directional(g, f);
    let distance = forward.max(backward);
    #[cfg(debug_assertions)]
    {
        let (interleaved, _) = smooth_rh_counted(f, g);
        debug_assert!(
            (interleaved - distance).abs() <= 1e-12 * distance.max(1.0),
            "interleaved {interleaved} vs directional max {distance}"
        );
    }
    RhResult {
        forward,
        backward,
        distance,
    }
}

/// Discrete directional RH distance from `f` to `g`.
///
/// Reference evaluator, straight from the definition: for every anchor
/// degree `d` of `f`, minimize over integer `d'` in `1..=delta(g)+1` (with
/// `g(delta+1) = 0`) the larger of the two relative errors, then take the
/// worst anchor. Quadratic; not the fast path.
pub fn discrete_rh_directional(f: &Ccdh, g: &Ccdh) -> f64 {
    let mut worst: f64 = 0.0;
    for d in 1..=f.delta() {
        let fd = f.value(d) as f64;
        let df = d as f64;
        let mut best = f64::INFINITY;
        for dp in 1..=g.delta() + 1 {
            let gd = g.value(dp) as f64;
            let e = ((df - dp as f64).abs() / df).max((fd - gd).abs() / fd);
            if e < best {
                best = e;
            }
        }
        worst = worst.max(best);
    }
    worst
}

/// Discrete RH distance between two ccdhs.
pub fn discrete_rh(f: &Ccdh, g: &Ccdh) -> RhResult {
    let forward = discrete_rh_directional(f, g);
    let backward = discrete_rh_directional(g, f);
    RhResult {
        forward,
        backward,
        distance: forward.max(backward),
    }
}

/// Minimal `eps` for which the box around `(x, y)` meets the curve of `h`,
/// found by bisection to absolute tolerance 1e-9.
///
/// Boxes nest as `eps` grows, so intersection is monotone in `eps` and
/// bisection applies. The initial upper bound
/// `max(delta(h), h(1), x, y) + 1` always intersects: at that radius the box
/// bottom is nonpositive and the box spans the whole domain of the curve.
pub fn oracle_point_epsilon(x: f64, y: f64, h: &Ccdh) -> f64 {
    assert!(x >= 1.0 && y > 0.0);
    if box_intersects(h, &RhBox::new(x, y, 0.0)) {
        return 0.0;
    }
    let mut lo = 0.0f64;
    let mut hi = (h.delta() as f64).max(h.value(1) as f64).max(x).max(y) + 1.0;
    debug_assert!(box_intersects(h, &RhBox::new(x, y, hi)));
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        if box_intersects(h, &RhBox::new(x, y, mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Bisection-based smooth RH distance: the max of [`oracle_point_epsilon`]
/// over all integer anchors in both directions. Agrees with [`smooth_rh`]
/// to within the bisection tolerance; kept as an independent check.
pub fn oracle_smooth_rh(f: &Ccdh, g: &Ccdh) -> f64 {
    let mut eps = 0.0f64;
    for d in 1..=f.delta() {
        eps = eps.max(oracle_point_epsilon(d as f64, f.value(d) as f64, g));
    }
    for d in 1..=g.delta() {
        eps = eps.max(oracle_point_epsilon(d as f64, g.value(d) as f64, f));
    }
    eps
}

/// Minimal `eps` such that the box around `(x, y)` meets the segment from
/// `(j, a)` to `(j+1, b)`, i.e. the minimum over the segment of
/// `max(|x-t|/x, |y-h(t)|/y)`. That function of `t` is convex piecewise
/// linear, so the minimum sits at an endpoint, a kink, or a crossing of the
/// two error terms; all candidates are solved in closed form.
fn segment_epsilon(x: f64, y: f64, j: f64, a: f64, b: f64) -> f64 {
    let slope = b - a;
    let icept = a - j * slope; // segment height: icept + slope * t
    let eval = |t: f64| -> f64 {
        let h = icept + slope * t;
        ((x - t).abs() / x).max((y - h).abs() / y)
    };
    let mut best = eval(j).min(eval(j + 1.0));
    let mut consider = |t: f64| {
        if t >= j && t <= j + 1.0 {
            best = best.min(eval(t));
        }
    };
    consider(x);
    if slope != 0.0 {
        consider((y - icept) / slope);
    }
    let d1 = y + x * slope;
    if d1 != 0.0 {
        consider((2.0 * x * y - x * icept) / d1);
    }
    let d2 = y - x * slope;
    if d2 != 0.0 {
        consider(x * icept / d2);
    }
    best
}

fn baseline_directional(f: &Ccdh, g: &Ccdh) -> f64 {
    let mut worst: f64 = 0.0;
    for d in 1..=f.delta() {
        let x = d as f64;
        let y = f.value(d) as f64;
        let mut best = f64::INFINITY;
        for j in 1..=g.delta() {
            let a = g.value(j) as f64;
            let b = g.value(j + 1) as f64;
            best = best.min(segment_epsilon(x, y, j as f64, a, b));
        }
        worst = worst.max(best);
    }
    worst
}

/// Quadratic reference for the smooth RH distance: every anchor is scored
/// against every segment of the other curve. Used as the timing baseline
/// and as a third route to the same value in tests.
pub fn smooth_rh_baseline(f: &Ccdh, g: &Ccdh) -> f64 {
    baseline_directional(f, g).max(baseline_directional(g, f))
}
