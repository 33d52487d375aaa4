//! Reverse iterated integrals (energies) and the identity checks built on
//! them: unit operator, complete additivity, complete multiplicativity,
//! Fourier orthogonality transfer, the mean-value examples, canonical
//! factorization, and the planar-figure measures.
//!
//! The energy integrand multiplies the ladder's own derivative along forward
//! iterates, so every identity here is an exact change-of-variables fact for
//! the table; quadrature and endpoint solves are the only error sources.
//! Agreement between the table derivative and the true Z-tilde squared is
//! enforced separately (node invariant and the quadrature oracle in the
//! ladder tests).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::inputs;
use crate::ladder::{IteratedInterval, LadderTable};
use crate::quad;
use crate::report::VerificationReport;
use crate::zeta::OmegaKind;

/// Admissibility guard for the class of shifts g >= 0, g = o(T / ln T).
#[derive(Debug, Clone, Copy)]
pub struct GuardPolicy {
    pub guard_fraction: f64,
    pub k0: u32,
}

impl Default for GuardPolicy {
    fn default() -> Self {
        GuardPolicy {
            guard_fraction: 0.1,
            k0: 10,
        }
    }
}

impl GuardPolicy {
    pub fn limit(&self, t: f64) -> f64 {
        self.guard_fraction * t / t.ln()
    }

    pub fn check_shift(&self, t: f64, g: f64) -> Result<()> {
        if !(g >= 0.0) {
            return Err(Error::Invalid(format!("negative shift g = {g}")));
        }
        let limit = self.limit(t);
        if g > limit {
            return Err(Error::GuardViolation { g, t, limit });
        }
        Ok(())
    }

    pub fn check_depth(&self, k: u32) -> Result<()> {
        if k < 1 || k > self.k0 {
            return Err(Error::Invalid(format!(
                "iteration depth k = {k} outside 1..={}",
                self.k0
            )));
        }
        Ok(())
    }
}

/// One energy evaluation request.
#[derive(Debug, Clone, Copy)]
pub struct EnergySpec {
    pub t: f64,
    pub g: f64,
    pub k: u32,
    pub omega: OmegaKind,
}

impl EnergySpec {
    pub fn validate(&self, table: &LadderTable, guard: &GuardPolicy) -> Result<()> {
        guard.check_depth(self.k)?;
        guard.check_shift(self.t, self.g)?;
        if self.omega != table.omega() {
            return Err(Error::Invalid(format!(
                "spec weight {} does not match the table weight {}",
                self.omega,
                table.omega()
            )));
        }
        Ok(())
    }
}

/// Value and provenance of one reverse iterated integral.
#[derive(Debug, Clone)]
pub struct EnergyResult {
    pub value: f64,
    pub error_estimate: f64,
    pub interval: IteratedInterval,
    pub z_evals: usize,
}

fn quad_tolerance(g: f64) -> f64 {
    (1e-8 * g).max(1e-10) * 0.5
}

/// Integrand evaluations for the iterated product over the ladder.
fn iterated_product(table: &LadderTable, x: f64, k: u32) -> f64 {
    let mut acc = 1.0;
    let mut y = x;
    for _ in 0..k {
        acc *= table.derivative_unchecked(y);
        y = table.phi1_unchecked(y);
    }
    acc
}

fn energy_integral_inner(table: &LadderTable, t: f64, g: f64, k: u32) -> Result<EnergyResult> {
    if g == 0.0 {
        let lo = table.reverse_iterate(t, k)?;
        return Ok(EnergyResult {
            value: 0.0,
            error_estimate: 0.0,
            interval: IteratedInterval { t, g, k, lo, hi: lo },
            z_evals: 0,
        });
    }
    let interval = table.interval_reverse(t, g, k)?;
    let mut evals = 0usize;
    let quad = quad::integrate(
        |x| {
            evals += 1;
            iterated_product(table, x, k)
        },
        interval.lo,
        interval.hi,
        quad_tolerance(g),
        0.0,
    )?;
    Ok(EnergyResult {
        value: quad.value,
        error_estimate: quad.error_estimate,
        interval,
        z_evals: evals,
    })
}

/// The reverse iterated integral of the k-fold Z-tilde-squared product over
/// [T-hat-k, (T+g)-hat-k].
pub fn energy_integral(
    table: &LadderTable,
    spec: &EnergySpec,
    guard: &GuardPolicy,
) -> Result<EnergyResult> {
    spec.validate(table, guard)?;
    energy_integral_inner(table, spec.t, spec.g, spec.k)
}

/// Guard-waived variant for internally derived shifts whose admissibility is
/// established analytically rather than by the desk-scale guard (the
/// arc-length decomposition uses this for the aggregate of 2|Z(t0)|).
pub(crate) fn energy_integral_unguarded(
    table: &LadderTable,
    t: f64,
    g: f64,
    k: u32,
) -> Result<EnergyResult> {
    energy_integral_inner(table, t, g, k)
}

/// Unit-operator check: the closed cycle g -> [T, T+g] -> reverse interval ->
/// energy must return exactly g.
pub fn unit_operator_check(
    table: &LadderTable,
    spec: &EnergySpec,
    guard: &GuardPolicy,
) -> Result<VerificationReport> {
    let energy = energy_integral(table, spec, guard)?;
    Ok(VerificationReport::new(
        "unit",
        "energy(T,g,k) = g",
        inputs! {
            "T" => spec.t,
            "g" => spec.g,
            "k" => spec.k,
            "omega" => spec.omega.tag(),
            "interval_lo" => energy.interval.lo,
            "interval_hi" => energy.interval.hi,
            "error_estimate" => energy.error_estimate,
        },
        energy.value,
        spec.g,
        1e-6,
    ))
}

/// Declared truncation of an infinite family of shifts.
#[derive(Debug, Clone, Copy)]
pub struct Truncation {
    pub declared_total: f64,
    pub tail_bound: f64,
}

fn parts_label(parts: &[(f64, u32)]) -> String {
    parts
        .iter()
        .map(|(g, k)| format!("{g}:{k}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Complete additivity: energy of the summed shift against the sum of
/// per-part energies with independently chosen depths.
pub fn additivity_check(
    table: &LadderTable,
    t: f64,
    parts: &[(f64, u32)],
    k: u32,
    truncation: Option<Truncation>,
    guard: &GuardPolicy,
) -> Result<VerificationReport> {
    if parts.is_empty() {
        return Err(Error::Invalid("no parts supplied".into()));
    }
    let total: f64 = parts.iter().map(|(g, _)| *g).sum();
    if let Some(tr) = truncation {
        if (total - tr.declared_total).abs() > tr.tail_bound {
            return Err(Error::Invalid(format!(
                "truncated sum {total} differs from declared total {} by more than the tail bound {}",
                tr.declared_total, tr.tail_bound
            )));
        }
    }
    let spec = EnergySpec {
        t,
        g: total,
        k,
        omega: table.omega(),
    };
    let lhs = energy_integral(table, &spec, guard)?.value;
    let mut rhs = 0.0;
    for &(g_l, k_l) in parts {
        guard.check_depth(k_l)?;
        rhs += energy_integral_inner(table, t, g_l, k_l)?.value;
    }
    let mut inputs = inputs! {
        "T" => t,
        "k" => k,
        "parts" => parts_label(parts),
        "total" => total,
    };
    if let Some(tr) = truncation {
        inputs.insert("declared_total".into(), tr.declared_total.into());
        inputs.insert("tail_bound".into(), tr.tail_bound.into());
    }
    Ok(VerificationReport::new(
        "additivity",
        "energy(sum g_l) = sum_l energy(g_l)",
        inputs,
        lhs,
        rhs,
        1e-6,
    ))
}

/// Complete multiplicativity: energy of the product shift against the
/// product of per-factor energies.
///
/// Only the product is guarded; an admissible product does not force the
/// factors to be admissible, so factors are merely required to be positive
/// and evaluable on the table.
pub fn multiplicativity_check(
    table: &LadderTable,
    t: f64,
    factors: &[(f64, u32)],
    k: u32,
    guard: &GuardPolicy,
) -> Result<VerificationReport> {
    if factors.is_empty() {
        return Err(Error::Invalid("no factors supplied".into()));
    }
    let mut product = 1.0;
    for &(g_l, _) in factors {
        if g_l <= 0.0 {
            return Err(Error::Invalid(format!("non-positive factor g = {g_l}")));
        }
        product *= g_l;
    }
    let spec = EnergySpec {
        t,
        g: product,
        k,
        omega: table.omega(),
    };
    let lhs = energy_integral(table, &spec, guard)?.value;
    let mut rhs = 1.0;
    for &(g_l, k_l) in factors {
        guard.check_depth(k_l)?;
        rhs *= energy_integral_inner(table, t, g_l, k_l)?.value;
    }
    Ok(VerificationReport::new(
        "multiplicativity",
        "energy(prod g_l) = prod_l energy(g_l)",
        inputs! {
            "T" => t,
            "k" => k,
            "factors" => parts_label(factors),
            "product" => product,
        },
        lhs,
        rhs,
        1e-6,
    ))
}

/// Member of the Fourier system on [0, 2l].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourierFn {
    Constant,
    Cos(u32),
    Sin(u32),
}

impl FourierFn {
    pub fn eval(self, u: f64, l: f64) -> f64 {
        match self {
            FourierFn::Constant => 1.0,
            FourierFn::Cos(j) => (j as f64 * std::f64::consts::PI * u / l).cos(),
            FourierFn::Sin(j) => (j as f64 * std::f64::consts::PI * u / l).sin(),
        }
    }

    /// Squared L2 norm over [0, 2l].
    pub fn norm_sq(self, l: f64) -> f64 {
        match self {
            FourierFn::Constant => 2.0 * l,
            _ => l,
        }
    }
}

impl fmt::Display for FourierFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FourierFn::Constant => write!(f, "const"),
            FourierFn::Cos(j) => write!(f, "cos{j}"),
            FourierFn::Sin(j) => write!(f, "sin{j}"),
        }
    }
}

impl FromStr for FourierFn {
    type Err = String;

    /// Accepts `const`, `cosJ`, `sinJ`, or the 1-based system index
    /// (1 = const, 2j = cos_j, 2j+1 = sin_j).
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "const" || s == "1" {
            return Ok(FourierFn::Constant);
        }
        if let Some(j) = s.strip_prefix("cos") {
            return j
                .parse::<u32>()
                .ok()
                .filter(|j| *j >= 1)
                .map(FourierFn::Cos)
                .ok_or_else(|| format!("bad cosine index in `{s}`"));
        }
        if let Some(j) = s.strip_prefix("sin") {
            return j
                .parse::<u32>()
                .ok()
                .filter(|j| *j >= 1)
                .map(FourierFn::Sin)
                .ok_or_else(|| format!("bad sine index in `{s}`"));
        }
        match s.parse::<u32>() {
            Ok(m) if m >= 2 && m % 2 == 0 => Ok(FourierFn::Cos(m / 2)),
            Ok(m) if m >= 3 => Ok(FourierFn::Sin(m / 2)),
            _ => Err(format!(
                "bad Fourier index `{s}` (use const, cosJ, sinJ, or the 1-based index)"
            )),
        }
    }
}

/// Orthogonality transfer: the weighted product of two Fourier functions
/// pulled through k reverse iterations integrates to 0 off the diagonal and
/// to the L2 norm on it.
pub fn orthogonality_check(
    table: &LadderTable,
    t: f64,
    l: f64,
    m: FourierFn,
    n: FourierFn,
    k: u32,
    guard: &GuardPolicy,
) -> Result<VerificationReport> {
    if l <= 0.0 {
        return Err(Error::Invalid(format!("non-positive half-length l = {l}")));
    }
    guard.check_depth(k)?;
    guard.check_shift(t, 2.0 * l)?;

    let interval = table.interval_reverse(t, 2.0 * l, k)?;
    let integrand = |x: f64| {
        let mut weight = 1.0;
        let mut y = x;
        for _ in 0..k {
            weight *= table.derivative_unchecked(y);
            y = table.phi1_unchecked(y);
        }
        let u = y - t;
        m.eval(u, l) * n.eval(u, l) * weight
    };
    let quad = quad::integrate(
        integrand,
        interval.lo,
        interval.hi,
        (1e-8 * l).max(1e-11),
        0.0,
    )?;

    let diagonal = m == n;
    let rhs = if diagonal { m.norm_sq(l) } else { 0.0 };
    let tolerance = if diagonal { 1e-6 } else { 1e-6 * l };
    Ok(VerificationReport::new(
        "orthogonality",
        "weighted Fourier orthogonality transfer",
        inputs! {
            "T" => t,
            "l" => l,
            "m" => m.to_string(),
            "n" => n.to_string(),
            "k" => k,
            "diagonal" => diagonal,
        },
        quad.value,
        rhs,
        tolerance,
    ))
}

/// Weighted energy: the k-fold product of |zeta|^2 along iterates, i.e. the
/// plain energy integrand with the omega weight restored at each factor.
fn weighted_energy(table: &LadderTable, t: f64, g: f64, k: u32) -> Result<f64> {
    if g == 0.0 {
        return Ok(0.0);
    }
    let omega = table.omega();
    let interval = table.interval_reverse(t, g, k)?;
    let quad = quad::integrate(
        |x| {
            let mut acc = 1.0;
            let mut y = x;
            for _ in 0..k {
                acc *= table.derivative_unchecked(y) * omega.weight(y);
                y = table.phi1_unchecked(y);
            }
            acc
        },
        interval.lo,
        interval.hi,
        1e-12,
        1e-9,
    )?;
    Ok(quad.value)
}

/// Same integral as `weighted_energy` at k = 1 but computed in the flat
/// variable after the change of variables (independent route).
fn weighted_energy_flat(table: &LadderTable, t: f64, g: f64) -> Result<f64> {
    let omega = table.omega();
    let quad = quad::integrate(
        |u| {
            let x = table.reverse_iterate(u, 1).unwrap_or(f64::NAN);
            omega.weight(x)
        },
        t,
        t + g,
        1e-12,
        1e-9,
    )?;
    Ok(quad.value)
}

fn convergent(k_max: u32, t: f64) -> bool {
    (k_max as f64).powi(2) / t.ln() <= 1.0
}

/// Mean-value split of the k-fold square integral into depth-1 and depth-k2
/// pieces with ln T prefactors.  Asymptotic: the report is a trend statement,
/// flagged non-convergent when k^2 / ln T is not small.
pub fn example1_ratio(
    table: &LadderTable,
    t: f64,
    g1: f64,
    g2: f64,
    k: u32,
    k2: Option<u32>,
    guard: &GuardPolicy,
) -> Result<VerificationReport> {
    guard.check_depth(k)?;
    guard.check_shift(t, g1 + g2)?;
    let k2 = k2.unwrap_or(if k >= 17 { 7 } else { (k / 2).max(1) });
    guard.check_depth(k2)?;

    let lhs = weighted_energy(table, t, g1 + g2, k)?;
    let rhs = if k == 1 {
        // no substitution to make: cross-check the same integral through the
        // flat-variable route
        weighted_energy_flat(table, t, g1 + g2)?
    } else {
        let lnt = t.ln();
        lnt.powi(k as i32 - 1) * weighted_energy(table, t, g1, 1)?
            + lnt.powi((k - k2) as i32) * weighted_energy(table, t, g2, k2)?
    };
    let ratio = lhs / rhs;
    let conv = k == 1 || convergent(k, t);
    let tolerance = if k == 1 {
        1e-6
    } else if conv {
        0.5
    } else {
        f64::INFINITY
    };
    Ok(VerificationReport::new(
        "example1",
        "mean-value split of the iterated square integral",
        inputs! {
            "T" => t,
            "g1" => g1,
            "g2" => g2,
            "k" => k,
            "k2" => k2,
            "ratio" => ratio,
            "convergent" => conv,
            "error_scale" => (k as f64).powi(2) / t.ln(),
        },
        lhs,
        rhs,
        tolerance,
    ))
}

/// Multiplicative analogue: the depth-1 square integral of the product shift
/// against the ln T-normalized product of two iterated square integrals.
pub fn example2_ratio(
    table: &LadderTable,
    t: f64,
    g1: f64,
    g2: f64,
    k1: u32,
    k2: u32,
    guard: &GuardPolicy,
) -> Result<VerificationReport> {
    guard.check_depth(k1)?;
    guard.check_depth(k2)?;
    if g1 <= 0.0 || g2 <= 0.0 {
        return Err(Error::Invalid("factors must be positive".into()));
    }
    guard.check_shift(t, g1 * g2)?;

    let lhs = weighted_energy(table, t, g1 * g2, 1)?;
    let exponent = (k1 + k2) as i32 - 1;
    let rhs = t.ln().powi(-exponent)
        * weighted_energy(table, t, g1, k1)?
        * weighted_energy(table, t, g2, k2)?;
    let ratio = lhs / rhs;
    let conv = convergent(k1.max(k2), t);
    let tolerance = if conv { 1.0 } else { f64::INFINITY };
    Ok(VerificationReport::new(
        "example2",
        "mean-value factorization of the square integral",
        inputs! {
            "T" => t,
            "g1" => g1,
            "g2" => g2,
            "k1" => k1,
            "k2" => k2,
            "ln_exponent" => i64::from(exponent),
            "ratio" => ratio,
            "convergent" => conv,
            "error_scale" => (k1.max(k2) as f64).powi(2) / t.ln(),
        },
        lhs,
        rhs,
        tolerance,
    ))
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut alpha = 0;
            while n % p == 0 {
                n /= p;
                alpha += 1;
            }
            out.push((p, alpha));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Canonical factorization: energy of n equals the product of prime-power
/// energies (exact form); the ln T-weighted square-integral form is reported
/// as a ratio with the usual mean-value caveat.
pub fn canonical_factorization_check(
    table: &LadderTable,
    t: f64,
    n: u64,
    k: u32,
    k_assignment: &[u32],
    guard: &GuardPolicy,
) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::Invalid(format!(
            "n = {n} has an empty factorization"
        )));
    }
    guard.check_shift(t, n as f64)?;
    guard.check_depth(k)?;
    let factors = factorize(n);
    let k_of = |idx: usize| -> u32 {
        if k_assignment.is_empty() {
            1
        } else {
            k_assignment[idx % k_assignment.len()]
        }
    };

    let spec = EnergySpec {
        t,
        g: n as f64,
        k,
        omega: table.omega(),
    };
    let lhs = energy_integral(table, &spec, guard)?.value;

    let mut rhs = 1.0;
    let mut weighted_rhs = 1.0;
    let mut exponent_sum = 0i64;
    for (idx, &(p, alpha)) in factors.iter().enumerate() {
        let k_l = k_of(idx);
        guard.check_depth(k_l)?;
        let e = energy_integral_inner(table, t, p as f64, k_l)?.value;
        rhs *= e.powi(alpha as i32);
        let w = weighted_energy(table, t, p as f64, k_l)?;
        weighted_rhs *= w.powi(alpha as i32);
        exponent_sum += alpha as i64 * k_l as i64;
    }
    let weighted_lhs =
        t.ln().powi((exponent_sum - k as i64) as i32) * weighted_energy(table, t, n as f64, k)?;
    let weighted_ratio = weighted_lhs / weighted_rhs;

    let factor_label = factors
        .iter()
        .map(|(p, a)| {
            if *a == 1 {
                p.to_string()
            } else {
                format!("{p}^{a}")
            }
        })
        .collect::<Vec<_>>()
        .join("*");

    Ok(VerificationReport::new(
        "factorization",
        "energy(n) = prod_p energy(p)^alpha",
        inputs! {
            "T" => t,
            "n" => i64::try_from(n).unwrap_or(i64::MAX),
            "k" => k,
            "factorization" => factor_label,
            "weighted_ratio" => weighted_ratio,
            "weighted_convergent" => convergent(k.max(k_assignment.iter().copied().max().unwrap_or(1)), t),
        },
        lhs,
        rhs,
        1e-6,
    ))
}

/// Sum or product composition for the planar-figure measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureMode {
    Sum,
    Product,
}

/// Measures of the planar figures under the iterated integrand.
#[derive(Debug, Clone)]
pub struct FigureMeasures {
    pub total_measure: f64,
    pub part_measures: Vec<f64>,
    pub report: VerificationReport,
}

/// The region under the k-fold integrand over the reverse iterated interval
/// has measure equal to the energy; additivity (sum mode) and
/// multiplicativity (product mode) transfer to the measures.  Components for
/// parts with distinct depths are verified disjoint.
pub fn figure_measures(
    table: &LadderTable,
    t: f64,
    parts: &[(f64, u32)],
    k: u32,
    mode: FigureMode,
    guard: &GuardPolicy,
) -> Result<FigureMeasures> {
    if parts.is_empty() {
        return Err(Error::Invalid("no parts supplied".into()));
    }
    let total_shift = match mode {
        FigureMode::Sum => parts.iter().map(|(g, _)| *g).sum::<f64>(),
        FigureMode::Product => {
            let mut acc = 1.0;
            for &(g, _) in parts {
                if g <= 0.0 {
                    return Err(Error::Invalid(format!("non-positive factor g = {g}")));
                }
                acc *= g;
            }
            acc
        }
    };
    let spec = EnergySpec {
        t,
        g: total_shift,
        k,
        omega: table.omega(),
    };
    let total_measure = energy_integral(table, &spec, guard)?.value;

    let mut part_measures = Vec::with_capacity(parts.len());
    let mut part_intervals = Vec::with_capacity(parts.len());
    for &(g_l, k_l) in parts {
        guard.check_depth(k_l)?;
        let e = energy_integral_inner(table, t, g_l, k_l)?;
        part_measures.push(e.value);
        part_intervals.push(e.interval);
    }

    // figures for distinct depths live over disjoint base intervals
    for (i, a) in part_intervals.iter().enumerate() {
        for b in part_intervals.iter().skip(i + 1) {
            if a.k != b.k && a.hi > b.lo && b.hi > a.lo {
                return Err(Error::Invalid(format!(
                    "figures with depths {} and {} overlap",
                    a.k, b.k
                )));
            }
        }
    }

    let rhs = match mode {
        FigureMode::Sum => part_measures.iter().sum::<f64>(),
        FigureMode::Product => part_measures.iter().product::<f64>(),
    };
    let (check_id, paper_eq) = match mode {
        FigureMode::Sum => ("figures_sum", "measure additivity of the planar figures"),
        FigureMode::Product => (
            "figures_product",
            "measure multiplicativity of the planar figures",
        ),
    };
    let report = VerificationReport::new(
        check_id,
        paper_eq,
        inputs! {
            "T" => t,
            "k" => k,
            "parts" => parts_label(parts),
            "total_shift" => total_shift,
            "disjoint" => true,
        },
        total_measure,
        rhs,
        1e-6,
    );
    Ok(FigureMeasures {
        total_measure,
        part_measures,
        report,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::OnceLock;

    use super::*;
    use crate::ladder::{build_ladder, StepPolicy};

    /// Shared fixture above T = 1e4, wide enough for k <= 5 with g <= 25.
    fn table() -> &'static LadderTable {
        static TABLE: OnceLock<LadderTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            build_ladder(10_000.0, 13_200.0, OmegaKind::LogT, StepPolicy::default()).unwrap()
        })
    }

    fn guard() -> GuardPolicy {
        GuardPolicy::default()
    }

    const T: f64 = 10_000.0;

    fn spec(g: f64, k: u32) -> EnergySpec {
        EnergySpec {
            t: T,
            g,
            k,
            omega: OmegaKind::LogT,
        }
    }

    #[test]
    fn energy_equals_shift() {
        let e = energy_integral(table(), &spec(10.0, 1), &guard()).unwrap();
        assert!(
            (e.value - 10.0).abs() <= 1e-6 * 10.0,
            "energy {} vs g = 10",
            e.value
        );
        assert!(e.z_evals > 0);
    }

    #[test]
    fn energy_zero_shift_is_zero() {
        let e = energy_integral(table(), &spec(0.0, 2), &guard()).unwrap();
        assert_eq!(e.value, 0.0);
    }

    #[test]
    fn energy_matches_change_of_variables_oracle() {
        for (g, k) in [(5.0, 1u32), (20.0, 3), (2.5, 5)] {
            let e = energy_integral(table(), &spec(g, k), &guard()).unwrap();
            let oracle = table().phi1_iter(e.interval.hi, k).unwrap()
                - table().phi1_iter(e.interval.lo, k).unwrap();
            assert!(
                (e.value - oracle).abs() <= 1e-8 * g + 1e-10,
                "value {} vs oracle {oracle} at g = {g}, k = {k}",
                e.value
            );
        }
    }

    #[test]
    fn energy_rejects_guard_violation() {
        // 0.1 * 1e4 / ln(1e4) ~ 108.6
        let err = energy_integral(table(), &spec(200.0, 1), &guard());
        assert!(matches!(err, Err(Error::GuardViolation { .. })));
    }

    #[test]
    fn energy_rejects_depth_overflow() {
        let err = energy_integral(table(), &spec(1.0, 11), &guard());
        assert!(err.is_err());
    }

    #[test]
    fn unit_check_sweep_over_depths() {
        for k in 1..=5 {
            let report = unit_operator_check(table(), &spec(5.0, k), &guard()).unwrap();
            assert!(report.pass, "k = {k}: residual {}", report.residual);
        }
    }

    #[test]
    fn unit_check_zero_shift() {
        let report = unit_operator_check(table(), &spec(0.0, 2), &guard()).unwrap();
        assert_eq!(report.residual, 0.0);
        assert!(report.pass);
    }

    #[test]
    fn additivity_single_part_is_trivial() {
        let report = additivity_check(table(), T, &[(10.0, 1)], 1, None, &guard()).unwrap();
        assert!(report.pass);
    }

    #[test]
    fn additivity_mixed_depths() {
        let report =
            additivity_check(table(), T, &[(5.0, 2), (7.0, 4)], 3, None, &guard()).unwrap();
        assert!(report.pass, "residual {}", report.residual);
        assert!((report.lhs - 12.0).abs() <= 1e-5);
        assert!((report.rhs - 12.0).abs() <= 1e-5);
    }

    #[test]
    fn additivity_geometric_truncation() {
        let parts: Vec<(f64, u32)> = (1..=20)
            .map(|l| (2f64.powi(-l), 1 + (l as u32 - 1) % 3))
            .collect();
        let expected: f64 = 1.0 - 2f64.powi(-20);
        let report = additivity_check(
            table(),
            T,
            &parts,
            2,
            Some(Truncation {
                declared_total: 1.0,
                tail_bound: 2f64.powi(-20),
            }),
            &guard(),
        )
        .unwrap();
        assert!(report.pass, "residual {}", report.residual);
        assert!((report.lhs - expected).abs() <= 1e-6);
        assert!((report.rhs - expected).abs() <= 1e-6);
    }

    #[test]
    fn additivity_rejects_bad_truncation_claim() {
        let err = additivity_check(
            table(),
            T,
            &[(1.0, 1)],
            1,
            Some(Truncation {
                declared_total: 2.0,
                tail_bound: 0.5,
            }),
            &guard(),
        );
        assert!(err.is_err());
    }

    #[test]
    fn multiplicativity_identity_factor() {
        let report = multiplicativity_check(table(), T, &[(1.0, 1)], 1, &guard()).unwrap();
        assert!(report.pass);
        assert!((report.lhs - 1.0).abs() <= 1e-6);
    }

    #[test]
    fn multiplicativity_mixed_depths() {
        let report =
            multiplicativity_check(table(), T, &[(3.0, 2), (4.0, 1)], 3, &guard()).unwrap();
        assert!(report.pass, "residual {}", report.residual);
        assert!((report.lhs - 12.0).abs() <= 1e-4);
    }

    #[test]
    fn multiplicativity_rejects_zero_factor() {
        assert!(multiplicativity_check(table(), T, &[(0.0, 1)], 1, &guard()).is_err());
    }

    #[test]
    fn orthogonality_constant_diagonal() {
        let l = 5.0;
        for k in 1..=2 {
            let report = orthogonality_check(
                table(),
                T,
                l,
                FourierFn::Constant,
                FourierFn::Constant,
                k,
                &guard(),
            )
            .unwrap();
            assert!(report.pass, "k = {k}: residual {}", report.residual);
            assert!((report.lhs - 2.0 * l).abs() <= 1e-6 * 2.0 * l);
        }
    }

    #[test]
    fn orthogonality_off_diagonal_vanishes() {
        let l = 5.0;
        let report = orthogonality_check(
            table(),
            T,
            l,
            FourierFn::Cos(1),
            FourierFn::Sin(1),
            2,
            &guard(),
        )
        .unwrap();
        assert!(report.pass, "residual {}", report.residual);
        assert!(report.lhs.abs() <= 1e-6 * l);
    }

    #[test]
    fn orthogonality_cosine_diagonal() {
        let l = 5.0;
        let report = orthogonality_check(
            table(),
            T,
            l,
            FourierFn::Cos(2),
            FourierFn::Cos(2),
            1,
            &guard(),
        )
        .unwrap();
        assert!(report.pass, "residual {}", report.residual);
        assert!((report.lhs - l).abs() <= 1e-6 * l);
    }

    #[test]
    fn fourier_parsing_round_trip() {
        assert_eq!("const".parse::<FourierFn>().unwrap(), FourierFn::Constant);
        assert_eq!("1".parse::<FourierFn>().unwrap(), FourierFn::Constant);
        assert_eq!("cos2".parse::<FourierFn>().unwrap(), FourierFn::Cos(2));
        assert_eq!("sin1".parse::<FourierFn>().unwrap(), FourierFn::Sin(1));
        assert_eq!("4".parse::<FourierFn>().unwrap(), FourierFn::Cos(2));
        assert_eq!("5".parse::<FourierFn>().unwrap(), FourierFn::Sin(2));
        assert!("cos0".parse::<FourierFn>().is_err());
        assert!("tan1".parse::<FourierFn>().is_err());
    }

    #[test]
    fn example1_depth_one_is_exact() {
        let report = example1_ratio(table(), T, 5.0, 5.0, 1, None, &guard()).unwrap();
        assert!(report.pass, "residual {}", report.residual);
        assert!(report.residual <= 1e-6);
    }

    #[test]
    fn example1_depth_two_is_a_trend() {
        let report = example1_ratio(table(), T, 5.0, 5.0, 2, None, &guard()).unwrap();
        assert!(report.pass, "residual {}", report.residual);
        assert!(report.residual <= 0.5);
    }

    #[test]
    fn example2_unit_depths() {
        let report = example2_ratio(table(), T, 3.0, 3.0, 1, 1, &guard()).unwrap();
        assert!(report.pass, "residual {}", report.residual);
        let ratio = report.lhs / report.rhs;
        assert!(ratio > 0.5 && ratio < 2.0, "ratio {ratio}");
    }

    #[test]
    fn factorization_prime_collapses_to_unit() {
        let report = canonical_factorization_check(table(), T, 2, 1, &[], &guard()).unwrap();
        assert!(report.pass);
        assert!((report.lhs - 2.0).abs() <= 1e-5);
    }

    #[test]
    fn factorization_twelve() {
        let report = canonical_factorization_check(table(), T, 12, 2, &[1], &guard()).unwrap();
        assert!(report.pass, "residual {}", report.residual);
        assert!((report.lhs - 12.0).abs() <= 1e-4);
        assert!((report.rhs - 12.0).abs() <= 1e-4);
    }

    #[test]
    fn factorization_thirty_mixed_depths() {
        let report =
            canonical_factorization_check(table(), T, 30, 2, &[1, 2, 3], &guard()).unwrap();
        assert!(report.pass, "residual {}", report.residual);
        assert!((report.lhs - 30.0).abs() <= 1e-3);
    }

    #[test]
    fn factorization_rejects_one() {
        assert!(canonical_factorization_check(table(), T, 1, 1, &[], &guard()).is_err());
    }

    #[test]
    fn figures_single_part() {
        let fig = figure_measures(table(), T, &[(8.0, 2)], 2, FigureMode::Sum, &guard()).unwrap();
        assert!(fig.report.pass);
        assert_eq!(fig.part_measures.len(), 1);
        assert!((fig.total_measure - fig.part_measures[0]).abs() <= 1e-6 * 8.0);
    }

    #[test]
    fn figures_sum_law() {
        let fig = figure_measures(
            table(),
            T,
            &[(5.0, 2), (7.0, 4)],
            3,
            FigureMode::Sum,
            &guard(),
        )
        .unwrap();
        assert!(fig.report.pass, "residual {}", fig.report.residual);
    }

    #[test]
    fn figures_product_law() {
        let fig = figure_measures(
            table(),
            T,
            &[(3.0, 2), (4.0, 1)],
            3,
            FigureMode::Product,
            &guard(),
        )
        .unwrap();
        assert!(fig.report.pass, "residual {}", fig.report.residual);
        assert!((fig.total_measure - 12.0).abs() <= 1e-4);
    }

    #[test]
    fn trial_division_factorizations() {
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(30), vec![(2, 1), (3, 1), (5, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }
}
