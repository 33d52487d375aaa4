//! Jacob's ladder: the strictly increasing map phi1 below the diagonal whose
//! derivative is Z-tilde squared.
//!
//! The table integrates dphi1/dt = z_tilde_sq(t, omega) with 4-point Gauss
//! panels (at most `max_node_spacing` wide) that are validated in blocks
//! against a 15-point Kronrod rule; a block whose discrepancy exceeds the
//! local error budget is re-integrated with halved panels.  Panels straddling
//! a zero of Z are pre-split so that the flat spot is resolved, and node
//! slopes are capped at three times the panel secant, which keeps the cubic
//! Hermite interpolant nondecreasing without touching slopes away from the
//! zeros.  The anchor condition phi1(t_lo) = t_lo - (1 - gamma) t_lo / ln t_lo
//! calibrates the first reverse gap to the prime-counting asymptotic.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quad;
use crate::zeta::{self, OmegaKind};

/// Adaptive-step parameters for `build_ladder`.
#[derive(Debug, Clone, Copy)]
pub struct StepPolicy {
    /// Hard cap on the node spacing of the finished table.
    pub max_node_spacing: f64,
    /// Local integration error budget per unit of t.
    pub local_error_per_unit: f64,
    /// Base panels per Kronrod validation block.
    pub block_panels: usize,
    /// Narrowest panel the refinement logic may produce.
    pub min_panel: f64,
}

impl Default for StepPolicy {
    fn default() -> Self {
        StepPolicy {
            max_node_spacing: 0.05,
            local_error_per_unit: 1e-9,
            block_panels: 8,
            min_panel: 1e-4,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct BuildStats {
    pub z_evals: usize,
    pub clamped_nodes: usize,
    pub refined_panels: usize,
}

/// One reverse iterated interval [T-hat-k, (T+g)-hat-k] with its provenance.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct IteratedInterval {
    pub t: f64,
    pub g: f64,
    pub k: u32,
    pub lo: f64,
    pub hi: f64,
}

impl IteratedInterval {
    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }
}

/// The disconnected union of reverse iterated intervals for r = 0..k.
#[derive(Debug, Clone, Serialize)]
pub struct ComponentSet {
    pub t: f64,
    pub g: f64,
    pub k: u32,
    pub components: Vec<IteratedInterval>,
    /// Gap between component r and component r+1.
    pub gaps: Vec<f64>,
}

/// Sampled monotone representation of phi1 with a cubic Hermite interpolant.
#[derive(Debug, Clone)]
pub struct LadderTable {
    omega: OmegaKind,
    anchor_t: f64,
    anchor_value: f64,
    ts: Vec<f64>,
    phis: Vec<f64>,
    ds: Vec<f64>,
    policy: StepPolicy,
    stats: BuildStats,
}

struct Integrator {
    omega: OmegaKind,
    evals: usize,
    refined: usize,
}

struct NodeOut {
    t: f64,
    phi_inc: f64,
    f: f64,
    z: f64,
}

impl Integrator {
    fn f(&mut self, t: f64) -> f64 {
        self.evals += 1;
        zeta::z_tilde_sq_unchecked(t, self.omega)
    }

    fn z(&mut self, t: f64) -> f64 {
        self.evals += 1;
        zeta::hardy_z_unchecked(t)
    }

    /// Integrate one panel, splitting near zeros of Z, and append the
    /// resulting nodes (right endpoints with cumulative increments).
    fn panel(
        &mut self,
        a: f64,
        b: f64,
        z_a: f64,
        z_b: f64,
        min_panel: f64,
        depth: u32,
        out: &mut Vec<NodeOut>,
    ) {
        let h = b - a;
        let omega_mid = self.omega.weight(0.5 * (a + b));
        let f_a = z_a * z_a / self.omega.weight(a);
        let f_b = z_b * z_b / self.omega.weight(b);

        let mut split = 0usize;
        if depth < 8 && h > min_panel {
            if z_a.signum() != z_b.signum() {
                // zero inside: resolve the flat spot so that the nodes
                // nearest the zero carry a negligible slope
                let slope = ((z_b - z_a) / h).abs().max(1e-6);
                let h_fine = 0.7 * (1e-3 * omega_mid).sqrt() / slope;
                if h > h_fine {
                    split = ((h / h_fine).ceil() as usize).clamp(2, 64);
                }
            } else {
                // close zero pair can hide inside a panel without a sign
                // change; look for an interior dip
                let fm = self.f(0.5 * (a + b));
                if fm < 0.02 && fm < 0.25 * f_a.min(f_b) {
                    split = 4;
                }
            }
        }

        if split <= 1 {
            let inc = quad::gauss4(|x| self.f(x), a, b);
            // a zero of Z at a panel edge pushes the slope/secant ratio to 3;
            // if capping would touch a node that is not in the flat zone,
            // split instead so the cap lands only where the slope is tiny
            let healing_cap = 3.0 * inc / h;
            let would_misclamp = (f_a > healing_cap && f_a >= 8e-4)
                || (f_b > healing_cap && f_b >= 8e-4);
            if !(depth < 10 && h > min_panel && would_misclamp) {
                out.push(NodeOut {
                    t: b,
                    phi_inc: inc,
                    f: f_b,
                    z: z_b,
                });
                return;
            }
            split = 2;
        }

        self.refined += 1;
        let mut za = z_a;
        let mut ta = a;
        for i in 1..=split {
            let tb = if i == split {
                b
            } else {
                a + h * (i as f64) / (split as f64)
            };
            let zb = if i == split { z_b } else { self.z(tb) };
            self.panel(ta, tb, za, zb, min_panel, depth + 1, out);
            ta = tb;
            za = zb;
        }
    }
}

/// Build the ladder table on [t_lo, t_hi].
pub fn build_ladder(
    t_lo: f64,
    t_hi: f64,
    omega: OmegaKind,
    policy: StepPolicy,
) -> Result<LadderTable> {
    if !(t_lo.is_finite() && t_hi.is_finite()) || t_lo < zeta::T_MIN_SUPPORTED {
        return Err(Error::BelowSupport {
            t: t_lo,
            min: zeta::T_MIN_SUPPORTED,
        });
    }
    if t_hi <= t_lo {
        return Err(Error::Invalid(format!(
            "empty ladder domain [{t_lo}, {t_hi}]"
        )));
    }

    let anchor_value = t_lo - (1.0 - zeta::EULER_GAMMA) * t_lo / t_lo.ln();
    let mut table = LadderTable {
        omega,
        anchor_t: t_lo,
        anchor_value,
        ts: vec![t_lo],
        phis: vec![anchor_value],
        ds: Vec::new(),
        policy,
        stats: BuildStats::default(),
    };
    let z0 = zeta::hardy_z_unchecked(t_lo);
    table.stats.z_evals += 1;
    table.march(t_hi, z0, z0 * z0 / omega.weight(t_lo))?;
    Ok(table)
}

impl LadderTable {
    /// Integrate from the current right edge up to `t_hi`, appending nodes.
    fn march(&mut self, t_hi: f64, z_start: f64, f_start: f64) -> Result<()> {
        let policy = self.policy;
        let mut integ = Integrator {
            omega: self.omega,
            evals: 0,
            refined: 0,
        };
        let mut cur = *self.ts.last().expect("anchored table");
        let mut z_cur = z_start;
        let mut f_cur = f_start;
        let clamp_from = self.ts.len().saturating_sub(1);

        while cur < t_hi {
            let block_end = (cur + policy.max_node_spacing * policy.block_panels as f64).min(t_hi);
            let width = block_end - cur;
            let budget = policy.local_error_per_unit * width;

            let mut attempt = 0u32;
            let (nodes, z_end, f_end) = loop {
                let n_panels =
                    ((width / policy.max_node_spacing).ceil() as usize).max(1) << attempt;
                let mut out = Vec::with_capacity(n_panels + 4);
                let mut za = z_cur;
                let mut ta = cur;
                for i in 1..=n_panels {
                    let tb = if i == n_panels {
                        block_end
                    } else {
                        cur + width * (i as f64) / (n_panels as f64)
                    };
                    let zb = integ.z(tb);
                    integ.panel(ta, tb, za, zb, policy.min_panel, 0, &mut out);
                    ta = tb;
                    za = zb;
                }
                let total: f64 = out.iter().map(|n| n.phi_inc).sum();
                let (reference, _) = quad::kronrod15(&mut |x| integ.f(x), cur, block_end);
                let discrepancy = (total - reference).abs();
                if discrepancy <= budget {
                    let last = out.last().expect("at least one panel");
                    let (z_end, f_end) = (last.z, last.f);
                    break (out, z_end, f_end);
                }
                attempt += 1;
                if attempt > 6 {
                    return Err(Error::StepPolicy {
                        t: cur,
                        achieved: discrepancy,
                        budget,
                    });
                }
            };

            let _ = f_cur;
            let mut phi = *self.phis.last().expect("anchored table");
            for node in &nodes {
                if node.phi_inc <= 0.0 {
                    return Err(Error::Invalid(format!(
                        "non-increasing ladder increment {} ending at t = {}",
                        node.phi_inc, node.t
                    )));
                }
                phi += node.phi_inc;
                if phi >= node.t {
                    return Err(Error::Invalid(format!(
                        "ladder crossed the diagonal at t = {}",
                        node.t
                    )));
                }
                self.ts.push(node.t);
                self.phis.push(phi);
                self.ds.push(node.f);
            }
            cur = block_end;
            z_cur = z_end;
            f_cur = f_end;
        }

        // leading slope for the very first node of a fresh table
        if self.ds.len() == self.ts.len() - 1 {
            let f0 = zeta::z_tilde_sq_unchecked(self.ts[0], self.omega);
            integ.evals += 1;
            self.ds.insert(0, f0);
        }

        self.stats.z_evals += integ.evals;
        self.stats.refined_panels += integ.refined;
        self.clamp_slopes(clamp_from);
        Ok(())
    }

    /// Cap node slopes at 3x the panel secant (sufficient for a
    /// nondecreasing cubic Hermite); only flat-spot panels are affected.
    fn clamp_slopes(&mut self, from_panel: usize) {
        for i in from_panel..self.ts.len() - 1 {
            let delta = (self.phis[i + 1] - self.phis[i]) / (self.ts[i + 1] - self.ts[i]);
            let cap = 3.0 * delta;
            if self.ds[i] > cap {
                self.ds[i] = cap;
                self.stats.clamped_nodes += 1;
            }
            if self.ds[i + 1] > cap {
                self.ds[i + 1] = cap;
                self.stats.clamped_nodes += 1;
            }
        }
    }

    /// Extend the table domain upward, reusing the stored step policy.
    pub fn extend_to(&mut self, new_t_hi: f64) -> Result<()> {
        if new_t_hi <= self.t_hi() {
            return Ok(());
        }
        let t_end = self.t_hi();
        let z = zeta::hardy_z_unchecked(t_end);
        self.stats.z_evals += 1;
        self.march(new_t_hi, z, z * z / self.omega.weight(t_end))
    }

    /// Rebuild a table from cached (t, phi1) nodes; slopes are recomputed
    /// from the defining derivative and re-capped.
    pub fn from_nodes(
        omega: OmegaKind,
        anchor_t: f64,
        anchor_value: f64,
        ts: Vec<f64>,
        phis: Vec<f64>,
    ) -> Result<LadderTable> {
        if ts.len() != phis.len() || ts.len() < 2 {
            return Err(Error::Invalid(format!(
                "node table needs matching t/phi columns with >= 2 rows, got {}/{}",
                ts.len(),
                phis.len()
            )));
        }
        for w in 0..ts.len() - 1 {
            if !(ts[w + 1] > ts[w]) || !(phis[w + 1] > phis[w]) {
                return Err(Error::Invalid(format!(
                    "non-monotone node data at row {}",
                    w + 1
                )));
            }
        }
        if ts.iter().zip(&phis).any(|(t, p)| p >= t) {
            return Err(Error::Invalid(
                "ladder nodes must stay below the diagonal".into(),
            ));
        }
        let mut stats = BuildStats::default();
        let ds: Vec<f64> = ts
            .iter()
            .map(|&t| zeta::z_tilde_sq_unchecked(t, omega))
            .collect();
        stats.z_evals = ts.len();
        let mut table = LadderTable {
            omega,
            anchor_t,
            anchor_value,
            ts,
            phis,
            ds,
            policy: StepPolicy::default(),
            stats,
        };
        table.clamp_slopes(0);
        Ok(table)
    }

    pub fn omega(&self) -> OmegaKind {
        self.omega
    }

    pub fn anchor_t(&self) -> f64 {
        self.anchor_t
    }

    pub fn anchor_value(&self) -> f64 {
        self.anchor_value
    }

    pub fn t_lo(&self) -> f64 {
        self.ts[0]
    }

    pub fn t_hi(&self) -> f64 {
        *self.ts.last().expect("non-empty table")
    }

    pub fn node_count(&self) -> usize {
        self.ts.len()
    }

    pub fn stats(&self) -> BuildStats {
        self.stats
    }

    /// Iterate over (t, phi1) node pairs (cache serialization).
    pub fn nodes(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.ts.iter().copied().zip(self.phis.iter().copied())
    }

    /// Range of phi1 over the domain.
    pub fn phi_range(&self) -> (f64, f64) {
        (self.phis[0], *self.phis.last().expect("non-empty"))
    }

    fn check_domain(&self, what: &'static str, t: f64) -> Result<f64> {
        let (lo, hi) = (self.t_lo(), self.t_hi());
        let slack = 1e-9 * hi.abs().max(1.0);
        if t < lo - slack || t > hi + slack || !t.is_finite() {
            return Err(Error::OutOfDomain {
                what,
                value: t,
                lo,
                hi,
            });
        }
        Ok(t.clamp(lo, hi))
    }

    fn panel_of(&self, t: f64) -> usize {
        // index i with ts[i] <= t <= ts[i+1]
        let idx = self.ts.partition_point(|&x| x <= t);
        idx.saturating_sub(1).min(self.ts.len() - 2)
    }

    fn hermite(&self, i: usize, t: f64) -> (f64, f64) {
        let (t0, t1) = (self.ts[i], self.ts[i + 1]);
        let (p0, p1) = (self.phis[i], self.phis[i + 1]);
        let (d0, d1) = (self.ds[i], self.ds[i + 1]);
        let h = t1 - t0;
        let s = (t - t0) / h;
        let s2 = s * s;
        let s3 = s2 * s;
        let value = p0 * (2.0 * s3 - 3.0 * s2 + 1.0)
            + d0 * h * (s3 - 2.0 * s2 + s)
            + p1 * (3.0 * s2 - 2.0 * s3)
            + d1 * h * (s3 - s2);
        let deriv = d0 * (3.0 * s2 - 4.0 * s + 1.0)
            + d1 * (3.0 * s2 - 2.0 * s)
            + (p1 - p0) / h * (6.0 * s - 6.0 * s2);
        (value, deriv.max(0.0))
    }

    /// phi1(t) by monotone cubic interpolation; no extrapolation.
    pub fn phi1(&self, t: f64) -> Result<f64> {
        let t = self.check_domain("t", t)?;
        Ok(self.hermite(self.panel_of(t), t).0)
    }

    /// Interpolant derivative: the ladder's own Z-tilde squared at t.
    pub fn derivative(&self, t: f64) -> Result<f64> {
        let t = self.check_domain("t", t)?;
        Ok(self.hermite(self.panel_of(t), t).1)
    }

    pub(crate) fn phi1_unchecked(&self, t: f64) -> f64 {
        self.hermite(self.panel_of(t), t).0
    }

    pub(crate) fn derivative_unchecked(&self, t: f64) -> f64 {
        self.hermite(self.panel_of(t), t).1
    }

    /// r-fold forward composition of phi1; r = 0 is the identity.
    pub fn phi1_iter(&self, t: f64, r: u32) -> Result<f64> {
        let mut x = self.check_domain("t", t)?;
        for step in 0..r {
            if x < self.t_lo() {
                return Err(Error::DomainEscape {
                    start: t,
                    iterate: step,
                    value: x,
                });
            }
            x = self.phi1_unchecked(x);
        }
        if x < self.t_lo() - 1e-9 * self.t_lo() {
            return Err(Error::DomainEscape {
                start: t,
                iterate: r,
                value: x,
            });
        }
        Ok(x)
    }

    pub(crate) fn phi1_iter_unchecked(&self, t: f64, r: u32) -> f64 {
        let mut x = t;
        for _ in 0..r {
            x = self.phi1_unchecked(x);
        }
        x
    }

    /// Solve phi1(x) = y on the table (one reverse step).
    fn inverse(&self, y: f64) -> Result<f64> {
        let (plo, phi_hi) = self.phi_range();
        if y < plo || y > phi_hi {
            return Err(Error::BracketFailure {
                target: y,
                lo: plo,
                hi: phi_hi,
            });
        }
        let idx = self.phis.partition_point(|&p| p <= y);
        let i = idx.saturating_sub(1).min(self.phis.len() - 2);

        let (mut lo, mut hi) = (self.ts[i], self.ts[i + 1]);
        let span = (self.phis[i + 1] - self.phis[i]).max(f64::MIN_POSITIVE);
        let mut x = lo + (hi - lo) * ((y - self.phis[i]) / span).clamp(0.0, 1.0);
        for _ in 0..80 {
            let (hx, dx) = self.hermite(i, x);
            if hx == y {
                return Ok(x);
            }
            if hx > y {
                hi = x;
            } else {
                lo = x;
            }
            if hi - lo <= 4.0 * f64::EPSILON * x.abs() {
                break;
            }
            let newton = x - (hx - y) / dx;
            x = if dx > 0.0 && newton > lo && newton < hi {
                newton
            } else {
                0.5 * (lo + hi)
            };
        }
        Ok(0.5 * (lo + hi))
    }

    /// k-fold reverse iterate: x with phi1^k(x) = target.
    pub fn reverse_iterate(&self, target: f64, k: u32) -> Result<f64> {
        self.check_domain("target", target)?;
        let mut y = target;
        for _ in 0..k {
            y = self.inverse(y)?;
        }
        Ok(y)
    }

    /// Both endpoints of the reverse iterated interval for (T, g, k).
    pub fn interval_reverse(&self, t: f64, g: f64, k: u32) -> Result<IteratedInterval> {
        if g < 0.0 {
            return Err(Error::Invalid(format!("negative interval shift g = {g}")));
        }
        let lo = self.reverse_iterate(t, k)?;
        let hi = self.reverse_iterate(t + g, k)?;
        let interval = IteratedInterval { t, g, k, lo, hi };
        let scale = 0.5 * t / t.ln();
        if interval.length() > scale {
            log::warn!(
                "reverse iterated interval [{lo}, {hi}] is longer than 0.5 T / ln T = {scale}"
            );
        }
        Ok(interval)
    }

    /// Components r = 0..k and the gaps separating them.
    pub fn component_set(&self, t: f64, g: f64, k: u32) -> Result<ComponentSet> {
        let mut components = Vec::with_capacity(k as usize + 1);
        for r in 0..=k {
            components.push(self.interval_reverse(t, g, r)?);
        }
        let gaps = components
            .windows(2)
            .map(|w| w[1].lo - w[0].hi)
            .collect::<Vec<_>>();
        if gaps.iter().any(|&gap| gap <= 0.0) {
            return Err(Error::Invalid(format!(
                "component set at T = {t}, g = {g}, k = {k} is not disjoint"
            )));
        }
        Ok(ComponentSet {
            t,
            g,
            k,
            components,
            gaps,
        })
    }
}
