//! Adaptive Gauss-Kronrod quadrature.
//!
//! `integrate` drives a 7-15 Gauss-Kronrod pair with globally adaptive
//! bisection: the panel with the largest error estimate is split until the
//! accumulated estimate meets the requested tolerance.  Callers that know
//! where the integrand is rough (zeros of Z, table knots) seed the initial
//! panel list through `integrate_with_breakpoints`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Abscissae of the 15-point Kronrod rule on [-1, 1] (positive half).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022_935_322_010_529_2,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

/// Weights of the embedded 7-point Gauss rule (for XGK[1], XGK[3], XGK[5], XGK[7]).
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// 4-point Gauss-Legendre abscissae/weights on [-1, 1] (positive half).
const XGL4: [f64; 2] = [0.339_981_043_584_856_3, 0.861_136_311_594_052_6];
const WGL4: [f64; 2] = [0.652_145_154_862_546_1, 0.347_854_845_137_453_9];

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evals: usize,
}

/// 4-point Gauss-Legendre rule on [a, b]; no error estimate.
pub(crate) fn gauss4<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = 0.0;
    for i in 0..2 {
        let dx = h * XGL4[i];
        acc += WGL4[i] * (f(c - dx) + f(c + dx));
    }
    acc * h
}

/// Raw 15-point Kronrod panel: returns (kronrod, error estimate).
pub(crate) fn kronrod15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);

    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut resabs = kronrod.abs();
    let mut fv = [0.0f64; 15];
    fv[7] = fc;

    for j in 0..7 {
        let dx = h * XGK[j];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = 0.5 * kronrod;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }

    let raw = ((kronrod - gauss) * h).abs();
    let resabs = resabs * h.abs();
    let resasc = resasc * h.abs();
    (kronrod * h, rescale_error(raw, resabs, resasc))
}

/// QUADPACK-style error rescaling: sharpen the raw |K - G| difference.
fn rescale_error(err: f64, resabs: f64, resasc: f64) -> f64 {
    let mut scaled = err;
    if resasc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / resasc).powf(1.5);
        scaled = if scale < 1.0 { resasc * scale } else { resasc };
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * resabs);
    }
    scaled
}

#[derive(Debug)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error && self.a == other.a
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        // largest error first; tie-break on the left endpoint for determinism
        self.error
            .total_cmp(&other.error)
            .then(other.a.total_cmp(&self.a))
    }
}

const MAX_PANELS: usize = 200_000;

pub fn integrate<F: FnMut(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<QuadResult> {
    integrate_with_breakpoints(f, a, b, &[], abs_tol, rel_tol)
}

/// Adaptive integration of `f` over [a, b] with initial panel boundaries at
/// the supplied interior breakpoints.
pub fn integrate_with_breakpoints<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    abs_tol: f64,
    rel_tol: f64,
) -> Result<QuadResult> {
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(Error::Invalid(format!("bad integration range [{a}, {b}]")));
    }
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            error_estimate: 0.0,
            evals: 0,
        });
    }

    let mut evals = 0usize;
    let mut heap = BinaryHeap::new();
    let mut edges = Vec::with_capacity(breakpoints.len() + 2);
    edges.push(a);
    edges.extend(breakpoints.iter().copied().filter(|x| *x > a && *x < b));
    edges.push(b);
    edges.sort_by(f64::total_cmp);
    edges.dedup();

    let mut value = 0.0;
    let mut error = 0.0;
    for w in edges.windows(2) {
        let (v, e) = kronrod15(&mut f, w[0], w[1]);
        evals += 15;
        value += v;
        error += e;
        heap.push(Panel {
            a: w[0],
            b: w[1],
            value: v,
            error: e,
        });
    }

    let tol_of = |v: f64| abs_tol.max(rel_tol * v.abs());

    while error > tol_of(value) {
        if heap.len() >= MAX_PANELS {
            return Err(Error::QuadratureNonconvergence {
                requested: tol_of(value),
                achieved: error,
            });
        }
        let worst = heap.pop().expect("non-empty heap");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // panel collapsed to machine width; keep its estimate and stop
            // splitting it
            if heap.iter().all(|p| {
                let m = 0.5 * (p.a + p.b);
                m <= p.a || m >= p.b
            }) {
                heap.push(worst);
                break;
            }
            let mut kept = worst;
            kept.error = 0.0;
            heap.push(kept);
            continue;
        }
        let (vl, el) = kronrod15(&mut f, worst.a, mid);
        let (vr, er) = kronrod15(&mut f, mid, worst.b);
        evals += 30;
        value += vl + vr - worst.value;
        error += el + er - worst.error;
        heap.push(Panel {
            a: worst.a,
            b: mid,
            value: vl,
            error: el,
        });
        heap.push(Panel {
            a: mid,
            b: worst.b,
            value: vr,
            error: er,
        });
    }

    // recompute the accumulated value in deterministic panel order to avoid
    // drift from the incremental updates
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value = panels.iter().map(|p| p.value).sum();
    let error = panels.iter().map(|p| p.error).sum();

    Ok(QuadResult {
        value,
        error_estimate: error,
        evals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronrod_exact_on_polynomials() {
        // degree 22 is integrated exactly by the 15-point Kronrod rule
        for deg in [0usize, 3, 10, 22] {
            let mut f = |x: f64| x.powi(deg as i32);
            let (v, _) = kronrod15(&mut f, -1.0, 1.0);
            let exact = if deg % 2 == 1 {
                0.0
            } else {
                2.0 / (deg as f64 + 1.0)
            };
            assert!(
                (v - exact).abs() < 1e-13,
                "degree {deg}: got {v}, want {exact}"
            );
        }
    }

    #[test]
    fn gauss4_exact_through_degree_seven() {
        for deg in [1usize, 4, 7] {
            let v = gauss4(|x| x.powi(deg as i32), 0.0, 1.0);
            let exact = 1.0 / (deg as f64 + 1.0);
            assert!((v - exact).abs() < 1e-14, "degree {deg}");
        }
    }

    #[test]
    fn integrates_oscillatory_function() {
        let r = integrate(|x: f64| (10.0 * x).sin(), 0.0, 3.0, 1e-12, 0.0).unwrap();
        let exact = (1.0 - (30.0f64).cos()) / 10.0;
        assert!((r.value - exact).abs() < 1e-11);
        assert!(r.error_estimate < 1e-10);
    }

    #[test]
    fn honors_breakpoints_on_kinked_integrand() {
        let f = |x: f64| (x - 0.3).abs();
        let r = integrate_with_breakpoints(f, 0.0, 1.0, &[0.3], 1e-13, 0.0).unwrap();
        let exact = 0.5 * (0.3f64.powi(2) + 0.7f64.powi(2));
        assert!((r.value - exact).abs() < 1e-13);
    }

    #[test]
    fn empty_range_is_zero() {
        let r = integrate(|_| 1.0, 2.0, 2.0, 1e-10, 0.0).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.evals, 0);
    }
}
