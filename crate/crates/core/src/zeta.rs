//! Hardy Z-function, Riemann-Siegel theta, and the weighted square Z-tilde.
//!
//! `hardy_z` uses the Riemann-Siegel formula (main sum plus remainder terms
//! C0..C4) for t >= 50 and a slow Euler-Maclaurin evaluation of zeta below
//! that, down to t = 10.  Error budget for the Riemann-Siegel path, from the
//! classical remainder bounds: ~4e-7 at t = 50, ~5e-8 at t = 100, ~3e-10 at
//! t = 1e3, ~2e-12 at t = 1e4 and below 1e-13 for t >= 1e5, always well under
//! the documented 1e-6.
//!
//! `theta` evaluates the Stirling expansion through the 1/t^7 term, which is
//! accurate to ~3e-11 absolute at t = 10 and to machine rounding above t = 50.

use std::cell::RefCell;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod coeffs;

/// Lower support bound for ladder and energy work.
pub const T_MIN_SUPPORTED: f64 = 50.0;

/// Lower bound of the Euler-Maclaurin fallback (and of `theta`).
pub const T_MIN_FALLBACK: f64 = 10.0;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// Surrogate choices for the slowly varying weight in Z-tilde squared.
///
/// The exact weight is only pinned up to a (1 + o(1)) ln t asymptotic class,
/// so the artifact keeps the candidates selectable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OmegaKind {
    /// ln t (the default)
    #[default]
    LogT,
    /// ln(t / 2 pi)
    LogTOver2Pi,
    /// ln(t / 2 pi) + 2 gamma
    LogTOver2Pi2C,
}

impl OmegaKind {
    pub fn weight(self, t: f64) -> f64 {
        match self {
            OmegaKind::LogT => t.ln(),
            OmegaKind::LogTOver2Pi => (t / TWO_PI).ln(),
            OmegaKind::LogTOver2Pi2C => (t / TWO_PI).ln() + 2.0 * EULER_GAMMA,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            OmegaKind::LogT => "log_t",
            OmegaKind::LogTOver2Pi => "log_t_2pi",
            OmegaKind::LogTOver2Pi2C => "log_t_2pi_2c",
        }
    }
}

impl fmt::Display for OmegaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for OmegaKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "log_t" => Ok(OmegaKind::LogT),
            "log_t_2pi" => Ok(OmegaKind::LogTOver2Pi),
            "log_t_2pi_2c" => Ok(OmegaKind::LogTOver2Pi2C),
            other => Err(format!(
                "unknown omega tag `{other}` (expected log_t, log_t_2pi, or log_t_2pi_2c)"
            )),
        }
    }
}

/// A height on the critical line validated against the support bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint(f64);

impl EvalPoint {
    pub fn new(t: f64) -> Result<Self> {
        if !t.is_finite() || t < T_MIN_SUPPORTED {
            return Err(Error::BelowSupport {
                t,
                min: T_MIN_SUPPORTED,
            });
        }
        Ok(EvalPoint(t))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

fn check_support(t: f64, min: f64) -> Result<()> {
    if !t.is_finite() || t < min {
        return Err(Error::BelowSupport { t, min });
    }
    Ok(())
}

/// Riemann-Siegel theta via the Stirling expansion.
pub fn theta(t: f64) -> Result<f64> {
    check_support(t, T_MIN_FALLBACK)?;
    Ok(theta_unchecked(t))
}

pub(crate) fn theta_unchecked(t: f64) -> f64 {
    let lg = (t / TWO_PI).ln();
    let t2 = t * t;
    let inv = 1.0 / t;
    0.5 * t * (lg - 1.0) - std::f64::consts::FRAC_PI_8
        + inv * (1.0 / 48.0 + (7.0 / 5760.0 + (31.0 / 80640.0 + 127.0 / (430080.0 * t2) / t2) / t2) / t2)
}

pub(crate) fn theta_deriv(t: f64) -> f64 {
    let t2 = t * t;
    0.5 * (t / TWO_PI).ln()
        - (1.0 / 48.0 + (21.0 / 5760.0 + (155.0 / 80640.0 + 889.0 / (430080.0 * t2) / t2) / t2) / t2)
            / t2
}

/// Clenshaw evaluation of a Chebyshev series at u in [-1, 1].
fn cheb_eval(coeffs: &[f64], u: f64) -> f64 {
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &c in coeffs.iter().skip(1).rev() {
        let b = c + 2.0 * u * b1 - b2;
        b2 = b1;
        b1 = b;
    }
    coeffs[0] + u * b1 - b2
}

struct NTable {
    rsqrt: Vec<f64>,
    lnn: Vec<f64>,
}

impl NTable {
    fn ensure(&mut self, n: usize) {
        while self.rsqrt.len() < n {
            let k = (self.rsqrt.len() + 1) as f64;
            self.rsqrt.push(1.0 / k.sqrt());
            self.lnn.push(k.ln());
        }
    }
}

thread_local! {
    static NTAB: RefCell<NTable> = const {
        RefCell::new(NTable {
            rsqrt: Vec::new(),
            lnn: Vec::new(),
        })
    };
}

/// Hardy's Z at height t.
pub fn hardy_z(t: f64) -> Result<f64> {
    check_support(t, T_MIN_FALLBACK)?;
    if t >= T_MIN_SUPPORTED {
        Ok(hardy_z_unchecked(t))
    } else {
        Ok(hardy_z_euler_maclaurin(t))
    }
}

pub(crate) fn hardy_z_unchecked(t: f64) -> f64 {
    let tau = (t / TWO_PI).sqrt();
    let n = tau as usize;
    let p = tau - n as f64;
    let th = theta_unchecked(t);

    let main = NTAB.with(|tab| {
        let mut tab = tab.borrow_mut();
        tab.ensure(n);
        let mut acc = 0.0;
        for i in 0..n {
            acc += tab.rsqrt[i] * (th - t * tab.lnn[i]).cos();
        }
        acc
    });

    let u = 2.0 * p - 1.0;
    let inv = 1.0 / tau;
    let series = cheb_eval(coeffs::C0, u)
        + inv
            * (cheb_eval(coeffs::C1, u)
                + inv
                    * (cheb_eval(coeffs::C2, u)
                        + inv * (cheb_eval(coeffs::C3, u) + inv * cheb_eval(coeffs::C4, u))));
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    2.0 * main + sign * series / tau.sqrt()
}

/// Derivative of Hardy's Z (analytic main-sum derivative plus the
/// differentiated remainder terms).
pub fn hardy_z_prime(t: f64) -> Result<f64> {
    check_support(t, T_MIN_SUPPORTED)?;
    Ok(hardy_z_prime_unchecked(t))
}

pub(crate) fn hardy_z_prime_unchecked(t: f64) -> f64 {
    let tau = (t / TWO_PI).sqrt();
    let n = tau as usize;
    let p = tau - n as f64;
    let th = theta_unchecked(t);
    let thp = theta_deriv(t);

    let main = NTAB.with(|tab| {
        let mut tab = tab.borrow_mut();
        tab.ensure(n);
        let mut acc = 0.0;
        for i in 0..n {
            acc -= tab.rsqrt[i] * (thp - tab.lnn[i]) * (th - t * tab.lnn[i]).sin();
        }
        acc
    });

    let u = 2.0 * p - 1.0;
    let inv = 1.0 / tau;
    let mut series = 0.0;
    let cj = [coeffs::C0, coeffs::C1, coeffs::C2, coeffs::C3, coeffs::C4];
    let cj_dp = [
        coeffs::C0_DP,
        coeffs::C1_DP,
        coeffs::C2_DP,
        coeffs::C3_DP,
        coeffs::C4_DP,
    ];
    let mut scale = 1.0;
    for j in 0..5 {
        let term = cheb_eval(cj_dp[j], u) - cheb_eval(cj[j], u) * (0.5 + j as f64) * inv;
        series += scale * term;
        scale *= inv;
    }
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    2.0 * main + sign * series / (4.0 * std::f64::consts::PI * tau * tau.sqrt())
}

/// Z-tilde squared: Z(t)^2 over the selected weight.
pub fn z_tilde_sq(t: f64, omega: OmegaKind) -> Result<f64> {
    check_support(t, T_MIN_SUPPORTED)?;
    Ok(z_tilde_sq_unchecked(t, omega))
}

pub(crate) fn z_tilde_sq_unchecked(t: f64, omega: OmegaKind) -> f64 {
    let z = hardy_z_unchecked(t);
    z * z / omega.weight(t)
}

/// (B_{2k} / (2k)!) as exact rationals, k = 1..8.
const B_OVER_FACT: [(f64, f64); 8] = [
    (1.0, 12.0),
    (-1.0, 720.0),
    (1.0, 30240.0),
    (-1.0, 1209600.0),
    (1.0, 47900160.0),
    (-691.0, 1307674368000.0),
    (1.0, 74724249600.0),
    (-3617.0, 10670622842880000.0),
];

/// Euler-Maclaurin evaluation of Z for 10 <= t < 50 (slow path used only by
/// low-height tests; the ladder never goes below t = 50).
fn hardy_z_euler_maclaurin(t: f64) -> f64 {
    let s = Complex64::new(0.5, t);
    // the tail terms decay once 2 pi M comfortably exceeds t
    let m = 48usize.max((0.5 * t).ceil() as usize);
    let mf = m as f64;

    let mut zeta = Complex64::new(0.0, 0.0);
    for n in 1..m {
        let nf = n as f64;
        zeta += (-s * nf.ln()).exp();
    }
    let m_pow = (-s * mf.ln()).exp(); // M^{-s}
    zeta += m_pow * mf / (s - 1.0);
    zeta += m_pow * 0.5;

    let mut poch = s;
    let mut m_shift = m_pow / mf; // M^{-s-2k+1} at k = 1
    let inv_m2 = 1.0 / (mf * mf);
    for (k, (num, den)) in B_OVER_FACT.iter().enumerate() {
        zeta += poch * m_shift * (num / den);
        let j = 2.0 * (k as f64 + 1.0);
        poch *= (s + (j - 1.0)) * (s + j);
        m_shift *= inv_m2;
    }

    let th = theta_unchecked(t);
    let rot = Complex64::new(0.0, th).exp();
    (rot * zeta).re
}

#[cfg(test)]
mod tests {
    use super::*;

    // Frozen high-precision oracle values (mpmath, 40 digits).
    const THETA_ZERO: f64 = 17.845_599_540_410_86;
    const THETA_AT_2000PI: f64 = 18_559.367_887_890_630_46;
    const THETA_AT_100: f64 = 87.972_165_231_787_22;
    const Z_AT_1000: f64 = 0.997_794_637_521_586_6;
    const Z_AT_100: f64 = 2.692_697_056_664_463_5;
    const Z_AT_50: f64 = -0.340_735_005_955_025;
    const Z_AT_1E5: f64 = 5.879_592_468_681_765;
    const Z_AT_123456: f64 = 0.349_707_864_639_235_03;
    const ZP_AT_1000: f64 = 4.764_293_693_241_706;
    const ZP_AT_1E5: f64 = 16.230_358_673_369_587;
    const GAMMA_1: f64 = 14.134_725_141_734_694;

    /// Independent theta oracle: Im ln Gamma(1/4 + i t/2) via the Lanczos
    /// approximation, kept apart from the Stirling path under test.
    fn theta_lanczos(t: f64) -> f64 {
        const G: f64 = 7.0;
        const COEF: [f64; 9] = [
            0.999_999_999_999_809_93,
            676.520_368_121_885_1,
            -1_259.139_216_722_402_8,
            771.323_428_777_653_13,
            -176.615_029_162_140_59,
            12.507_343_278_686_905,
            -0.138_571_095_265_720_12,
            9.984_369_578_019_571_6e-6,
            1.505_632_735_149_311_6e-7,
        ];
        let z = Complex64::new(0.25, 0.5 * t);
        let mut acc = Complex64::new(COEF[0], 0.0);
        for (i, c) in COEF.iter().enumerate().skip(1) {
            acc += c / (z + (i as f64 - 1.0));
        }
        let w = z + (G - 0.5);
        let half_ln_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
        let lgamma = half_ln_2pi + (z - 0.5) * w.ln() - w + acc.ln();
        lgamma.im - 0.5 * t * std::f64::consts::PI.ln()
    }

    #[test]
    fn theta_matches_lanczos_oracle() {
        for &t in &[10.0, 17.8455995405, 50.0, 100.0, 1000.0, 6283.185307179586] {
            let got = theta(t).unwrap();
            let want = theta_lanczos(t);
            assert!(
                (got - want).abs() <= 1e-9 * want.abs().max(1.0),
                "theta({t}) = {got}, oracle {want}"
            );
        }
    }

    #[test]
    fn theta_vanishes_at_its_first_zero() {
        assert!(theta(17.845_599_540_5).unwrap().abs() < 1e-8);
        assert!(theta(THETA_ZERO).unwrap().abs() < 1e-9);
    }

    #[test]
    fn theta_frozen_values() {
        assert!((theta(2000.0 * std::f64::consts::PI).unwrap() - THETA_AT_2000PI).abs() < 1e-9);
        assert!((theta(100.0).unwrap() - THETA_AT_100).abs() < 1e-10);
    }

    #[test]
    fn theta_is_increasing() {
        assert!(theta(1000.0).unwrap() < theta(1000.1).unwrap());
        let mut prev = theta(100.0).unwrap();
        for i in 1..=200 {
            let t = 100.0 + 10.0 * i as f64;
            let cur = theta(t).unwrap();
            assert!(cur > prev, "theta not increasing at t = {t}");
            prev = cur;
        }
    }

    #[test]
    fn theta_rejects_below_support() {
        assert!(matches!(theta(5.0), Err(Error::BelowSupport { .. })));
        assert!(theta(f64::NAN).is_err());
    }

    #[test]
    fn hardy_z_frozen_values() {
        assert!((hardy_z(1000.0).unwrap() - Z_AT_1000).abs() < 1e-9);
        assert!((hardy_z(100.0).unwrap() - Z_AT_100).abs() < 1e-7);
        assert!((hardy_z(50.0).unwrap() - Z_AT_50).abs() < 1e-6);
        assert!((hardy_z(1e5).unwrap() - Z_AT_1E5).abs() < 1e-9);
        assert!((hardy_z(123456.789).unwrap() - Z_AT_123456).abs() < 1e-9);
    }

    #[test]
    fn hardy_z_agrees_with_euler_maclaurin_route() {
        // same quantity through two independent evaluation paths
        for &t in &[60.0, 100.0, 250.0, 400.0, 1000.0] {
            let rs = hardy_z(t).unwrap();
            let em = hardy_z_euler_maclaurin(t);
            assert!(
                (rs - em).abs() < 1e-6,
                "RS {rs} vs EM {em} differ at t = {t}"
            );
        }
    }

    #[test]
    fn hardy_z_first_zero_via_fallback() {
        assert!(hardy_z(GAMMA_1).unwrap().abs() < 2e-6);
    }

    #[test]
    fn hardy_z_magnitude_matches_zeta_modulus_at_1000() {
        assert!((hardy_z(1000.0).unwrap().abs() - Z_AT_1000).abs() < 1e-6);
    }

    #[test]
    fn hardy_z_prime_frozen_values() {
        assert!((hardy_z_prime(1000.0).unwrap() - ZP_AT_1000).abs() < 1e-7);
        assert!((hardy_z_prime(1e5).unwrap() - ZP_AT_1E5).abs() < 1e-7);
    }

    fn z_prime_central_diff(t: f64) -> f64 {
        let h = 1e-3;
        (-hardy_z(t + 2.0 * h).unwrap() + 8.0 * hardy_z(t + h).unwrap()
            - 8.0 * hardy_z(t - h).unwrap()
            + hardy_z(t - 2.0 * h).unwrap())
            / (12.0 * h)
    }

    #[test]
    fn hardy_z_prime_cross_validates_against_central_differences() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x1ad5);
        for _ in 0..1000 {
            let t: f64 = rng.gen_range(100.0..1e6);
            let analytic = hardy_z_prime(t).unwrap();
            let fd = z_prime_central_diff(t);
            assert!(
                (analytic - fd).abs() <= (1e-5f64).max(1e-4 * fd.abs()),
                "Z'({t}): analytic {analytic}, finite difference {fd}"
            );
        }
    }

    #[test]
    fn z_tilde_sq_defining_ratio() {
        let z2 = hardy_z(1000.0).unwrap().powi(2);
        let zt = z_tilde_sq(1000.0, OmegaKind::LogT).unwrap();
        assert!((zt * 1000.0f64.ln() - z2).abs() <= 1e-12 * z2);
    }

    #[test]
    fn z_tilde_sq_vanishes_at_zero_of_z() {
        // gamma_15 = 65.112544... lies above the RS support bound
        let g = 65.112_544_048_081_61;
        assert!(z_tilde_sq(g, OmegaKind::LogT).unwrap() < 1e-10);
    }

    #[test]
    fn omega_tags_round_trip() {
        for omega in [
            OmegaKind::LogT,
            OmegaKind::LogTOver2Pi,
            OmegaKind::LogTOver2Pi2C,
        ] {
            assert_eq!(omega.tag().parse::<OmegaKind>().unwrap(), omega);
        }
        assert!("log_tau".parse::<OmegaKind>().is_err());
    }

    #[test]
    fn omega_weights_ordering() {
        // ln(t/2pi) < ln(t/2pi) + 2 gamma < ln t, since 2 gamma < ln 2 pi
        let t = 1e5;
        assert!(OmegaKind::LogTOver2Pi.weight(t) < OmegaKind::LogTOver2Pi2C.weight(t));
        assert!(OmegaKind::LogTOver2Pi2C.weight(t) < OmegaKind::LogT.weight(t));
    }

    #[test]
    fn eval_point_guards_support() {
        assert!(EvalPoint::new(49.9).is_err());
        assert_eq!(EvalPoint::new(50.0).unwrap().value(), 50.0);
    }
}
