//! Scalar special functions and the closed-form tail bounds shared by the
//! numeric evaluators.

use std::sync::OnceLock;

use crate::arith::{bernoulli_plus, rat_to_f64};

/// Γ(s) for real s > 0.
pub fn gamma(s: f64) -> f64 {
    assert!(s > 0.0, "gamma restricted to positive arguments here");
    statrs::function::gamma::gamma(s)
}

/// ζ(n) for integer n ≥ 2, by Euler–Maclaurin with exact Bernoulli-number
/// correction terms; accurate to ~1e-16.
pub fn zeta_int(n: u32) -> f64 {
    assert!(n >= 2);
    static CACHE: OnceLock<Vec<f64>> = OnceLock::new();
    let table = CACHE.get_or_init(|| {
        let mut v = vec![0.0; 64];
        for (k, slot) in v.iter_mut().enumerate().skip(2) {
            *slot = zeta_em(k as f64);
        }
        v
    });
    if (n as usize) < table.len() {
        table[n as usize]
    } else {
        // beyond the table the sum is 1 to machine precision
        1.0 + 2f64.powi(-(n as i32))
    }
}

/// ζ(s) for real s > 1 via Euler–Maclaurin.
pub fn zeta_real(s: f64) -> f64 {
    assert!(s > 1.0);
    zeta_em(s)
}

fn zeta_em(s: f64) -> f64 {
    let big_n = 24u32;
    let mut sum = 0.0;
    for m in 1..big_n {
        sum += (m as f64).powf(-s);
    }
    let nf = big_n as f64;
    // ∫_N^∞ x^{-s} dx + ½N^{-s} + correction terms B_{2j}/(2j)!·(s)_{2j−1}·N^{−s−2j+1}
    let mut acc = sum + nf.powf(1.0 - s) / (s - 1.0) + 0.5 * nf.powf(-s);
    let mut rising = s; // s(s+1)⋯ accumulated odd-length products
    let mut npow = nf.powf(-s - 1.0);
    for j in 1..=6u32 {
        let b2j = rat_to_f64(&bernoulli_plus(2 * j as usize));
        let fact: f64 = (1..=2 * j).map(|i| i as f64).product();
        acc += b2j / fact * rising * npow;
        // extend the rising product by two and shift the power by two
        rising *= (s + 2.0 * j as f64 - 1.0) * (s + 2.0 * j as f64);
        npow /= nf * nf;
    }
    acc
}

/// ζ(k) extended to all integers: ζ(0) = −1/2, ζ(−n) = −B_{n+1}/(n+1)
/// (B₁ = +1/2 convention matches at the indices used), ζ at negative even
/// integers vanishing automatically. Used by the near-1 polylog expansion.
pub fn zeta_any_int(k: i64) -> f64 {
    if k >= 2 {
        zeta_int(k as u32)
    } else if k == 0 {
        -0.5
    } else if k < 0 {
        let n = (-k) as usize;
        -rat_to_f64(&bernoulli_plus(n + 1)) / (n as f64 + 1.0)
    } else {
        panic!("zeta(1) pole")
    }
}

/// Upper incomplete gamma Γ(n, x) for integer n ≥ 1:
/// (n−1)!·e^{−x}·Σ_{j<n} x^j/j!.
pub fn upper_gamma_int(n: u32, x: f64) -> f64 {
    assert!(n >= 1);
    let mut inner = 0.0;
    let mut term = 1.0; // x^j / j!
    for j in 0..n {
        if j > 0 {
            term *= x / j as f64;
        }
        inner += term;
    }
    let fact: f64 = (1..n).map(|i| i as f64).product();
    fact * (-x).exp() * inner
}

/// H_n = Σ_{i≤n} 1/i.
pub fn harmonic(n: u64) -> f64 {
    (1..=n).map(|i| 1.0 / i as f64).sum()
}

/// Bound on Σ_{m>M} (1+ln m)^L · m^{−s} for s > 1, via the integral test:
/// ∫_M^∞ (1+ln x)^L x^{−s} dx = e^a Γ(L+1, a(1+ln M))/a^{L+1}, a = s−1,
/// plus one leading term to absorb non-monotonicity at small M.
pub fn log_power_tail(l: u32, s: f64, m: u64) -> f64 {
    assert!(s > 1.0 && m >= 1);
    let a = s - 1.0;
    let v0 = 1.0 + (m as f64).ln();
    let integral = a.exp() * upper_gamma_int(l + 1, a * v0) / a.powi(l as i32 + 1);
    let first = (1.0 + ((m + 1) as f64).ln()).powi(l as i32) * ((m + 1) as f64).powf(-s);
    integral + first
}

/// Bound on Σ_{m>M} m^d ρ^m for 0 ≤ ρ < 1 by geometric closure:
/// q_{M+1}/(1−r) with r = ρ(1+1/(M+1))^d, infinite when r ≥ 1.
pub fn poly_geometric_tail(d: u32, rho: f64, m: u64) -> f64 {
    assert!((0.0..1.0).contains(&rho));
    if rho == 0.0 {
        return 0.0;
    }
    let mp1 = (m + 1) as f64;
    let r = rho * (1.0 + 1.0 / mp1).powi(d as i32);
    if r >= 1.0 {
        return f64::INFINITY;
    }
    let q = mp1.powi(d as i32) * rho.powf(mp1);
    q / (1.0 - r)
}

/// Bound on Σ_{m>M} m^{−s} for s > 1: M^{−s} + M^{1−s}/(s−1).
pub fn zeta_tail(s: f64, m: u64) -> f64 {
    assert!(s > 1.0 && m >= 1);
    let mf = m as f64;
    mf.powf(-s) + mf.powf(1.0 - s) / (s - 1.0)
}
