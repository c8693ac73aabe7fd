//! The classical polylogarithm Li_k(x) on [-1, 1), fast and accurate up to
//! the boundary: direct series away from 1, and for x near 1 the log-space
//! expansion
//!   Li_k(e^μ) = μ^{k−1}/(k−1)!·(H_{k−1} − ln(−μ)) + Σ_{j≠k−1} ζ(k−j)·μ^j/j!
//! valid for |μ| < 2π, whose terms decay like (|μ|/2π)^j.

use crate::analytic::special::{harmonic, zeta_any_int, zeta_int};

/// Li_k(x) for k ≥ 1 and −1 < x < 1 (x = 1 allowed for k ≥ 2).
/// Returns (value, absolute error bound).
pub fn li_classical(k: u32, x: f64) -> (f64, f64) {
    assert!(k >= 1, "weight must be positive");
    assert!(
        (-1.0..=1.0).contains(&x),
        "argument {x} outside [-1, 1]"
    );
    if x == 1.0 {
        assert!(k >= 2, "Li_1(1) diverges");
        return (zeta_int(k), 1e-15);
    }
    if k == 1 {
        return (-(1.0 - x).ln(), 4.0 * f64::EPSILON * (1.0 - x).ln().abs().max(1.0));
    }
    if x.abs() <= 0.5 {
        li_direct(k, x)
    } else if x > 0.0 {
        li_log_expansion(k, x)
    } else {
        // negative arguments beyond −1/2 still converge geometrically
        li_direct(k, x)
    }
}

fn li_direct(k: u32, x: f64) -> (f64, f64) {
    let mut sum = 0.0;
    let mut xn = 1.0;
    let ax = x.abs();
    let mut n = 0u32;
    loop {
        n += 1;
        xn *= x;
        let term = xn / (n as f64).powi(k as i32);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-3) && n > 4 {
            break;
        }
        if n > 4000 {
            break;
        }
    }
    // tail: Σ_{m>n} |x|^m ≤ |x|^{n+1}/(1−|x|)
    let tail = ax.powi(n as i32 + 1) / (1.0 - ax);
    (sum, tail + n as f64 * f64::EPSILON * sum.abs().max(1.0))
}

fn li_log_expansion(k: u32, x: f64) -> (f64, f64) {
    let mu = x.ln(); // negative, |mu| ≤ ln 2 for x ≥ 1/2
    debug_assert!(mu.abs() < 2.0 * std::f64::consts::PI);
    let km1 = k as i64 - 1;
    // the singular term μ^{k−1}/(k−1)!·(H_{k−1} − ln(−μ))
    let mut fact = 1.0;
    for i in 1..k as i64 {
        fact *= i as f64;
    }
    let mut sum = mu.powi(k as i32 - 1) / fact * (harmonic(k as u64 - 1) - (-mu).ln());
    let mut mu_j = 1.0; // μ^j / j!
    let j_end = 44u32;
    for j in 0..=j_end {
        if j > 0 {
            mu_j *= mu / j as f64;
        }
        if j as i64 == km1 {
            continue;
        }
        sum += zeta_any_int(k as i64 - j as i64) * mu_j;
    }
    // envelope tail: |ζ(k−j)μ^j/j!| ≤ 3.4·(j−k)!/j!·|μ|^j/(2π)^{j−k+1},
    // ratio ≤ |μ|/(2π) ≤ 0.12 once j ≥ j_end
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut env = 3.4 * mu.abs().powi(j_end as i32 + 1) / two_pi.powi(j_end as i32 + 1 - k as i32);
    let mut denom = 1.0;
    for i in (j_end + 1 - k).max(1)..=(j_end + 1) {
        denom *= i as f64;
        if denom > 1e300 {
            break;
        }
    }
    env /= denom;
    let r: f64 = mu.abs() / two_pi;
    let tail = env / (1.0 - r.max(0.2));
    (sum, tail.min(1e-3) + 64.0 * f64::EPSILON * sum.abs().max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_reference_values() {
        // reference values from an independent multiprecision evaluation
        let cases = [
            (1u32, 0.5, 0.69314718055994530942),
            (2, 0.5, 0.5822405264650125059),
            (2, 0.75, 0.97846939293030610374),
            (2, 0.99, 1.5886254480763752857),
            (2, 0.9999999, 1.6449323550385790985),
            (3, 0.75, 0.8444258088622044485),
            (3, 0.999, 1.2004153539954643437),
            (4, 0.875, 0.93494292812902321659),
            (5, 0.6, 0.61229878124863933018),
            (2, -0.8, -0.67978158783468112384),
            (3, -0.25, -0.24271200333891630515),
        ];
        for (k, x, want) in cases {
            let (v, b) = li_classical(k, x);
            assert!(
                (v - want).abs() <= b.max(1e-13),
                "Li_{k}({x}) = {v}, want {want}, bound {b}"
            );
            assert!((v - want).abs() < 1e-12, "Li_{k}({x}) too far: {v} vs {want}");
        }
    }

    #[test]
    fn branches_agree_in_overlap() {
        // direct series vs log expansion on (0.5, 0.8)
        for k in 2..=5u32 {
            for &x in &[0.55, 0.6, 0.7, 0.8] {
                let (a, _) = li_direct(k, x);
                let (b, _) = li_log_expansion(k, x);
                assert!((a - b).abs() < 1e-12, "k={k} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn boundary_value_is_zeta() {
        let (v, _) = li_classical(3, 1.0);
        assert!((v - 1.2020569031595943).abs() < 1e-14);
    }

    #[test]
    fn near_one_is_finite_and_close_to_zeta() {
        let (v, b) = li_classical(2, 1.0 - 1e-12);
        assert!(v < zeta_int(2));
        assert!(zeta_int(2) - v < 1e-10);
        assert!(b < 1e-9);
    }
}
