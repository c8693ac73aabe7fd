//! Exact integer and rational arithmetic plus the combinatorial number
//! functions used throughout the crate.
//!
//! Everything here is arbitrary precision: the coefficients appearing in the
//! generating-series expansions grow super-exponentially, so there is no
//! fixed-width fallback.

use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator (enforced by `num-rational`).
pub type Rat = BigRational;
/// Exact integer scalar.
pub type Int = BigInt;

/// Rational from an integer pair. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(Int::from(num), Int::from(den))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Binomial coefficient C(n, r); zero when r < 0 or r > n.
pub fn binomial(n: u64, r: i64) -> Int {
    if r < 0 || r as u64 > n {
        return Int::zero();
    }
    let r = (r as u64).min(n - r as u64);
    let mut acc = Int::one();
    for i in 0..r {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// n! as an exact integer.
pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// m^k as an exact rational, for any integer exponent k (m ≥ 1).
pub fn int_pow_rat(m: u64, k: i64) -> Rat {
    assert!(m >= 1, "base must be positive");
    let p = Int::from(m).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        Rat::from_integer(p)
    } else {
        Rat::new(Int::one(), p)
    }
}

/// Memoized triangular table of Stirling numbers of the second kind.
///
/// Entries satisfy the recurrence {n+1, m} = {n, m-1} + m·{n, m} with
/// {0,0} = 1 and {n,0} = {0,m} = 0 for (n,m) ≠ (0,0). Rows are computed on
/// demand under a lock and never mutated afterwards.
pub struct StirlingCache {
    rows: Mutex<Vec<Vec<Int>>>,
}

impl StirlingCache {
    pub fn new() -> Self {
        StirlingCache {
            rows: Mutex::new(vec![vec![Int::one()]]),
        }
    }

    /// {n over m}: the Stirling number of the second kind.
    pub fn get(&self, n: usize, m: usize) -> Int {
        if m > n {
            return Int::zero();
        }
        let mut rows = self.rows.lock().unwrap();
        while rows.len() <= n {
            let prev = rows.last().unwrap();
            let k = rows.len();
            let mut row = vec![Int::zero(); k + 1];
            for m in 1..=k {
                let carry = if m <= prev.len() - 1 {
                    prev[m].clone() * Int::from(m)
                } else {
                    Int::zero()
                };
                row[m] = prev[m - 1].clone() + carry;
            }
            rows.push(row);
        }
        rows[n][m].clone()
    }
}

impl Default for StirlingCache {
    fn default() -> Self {
        Self::new()
    }
}

static STIRLING: OnceLock<StirlingCache> = OnceLock::new();

/// Stirling number of the second kind {n over m}, via the shared cache.
pub fn stirling2(n: usize, m: usize) -> Int {
    STIRLING.get_or_init(StirlingCache::new).get(n, m)
}

/// Classical Bernoulli numbers with the B₁ = +1/2 convention, i.e. the
/// coefficients of t·e^t/(e^t − 1) = t/(1 − e^{−t}).
///
/// Computed from the defining recurrence Σ_{j=0}^{n} C(n+1, j)·B_j = n + 1.
pub fn bernoulli_plus(n: usize) -> Rat {
    static TABLE: OnceLock<Mutex<Vec<Rat>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| Mutex::new(vec![Rat::one()]));
    let mut t = table.lock().unwrap();
    while t.len() <= n {
        let k = t.len();
        // sum_{j<k} C(k+1, j) B_j = k+1 - C(k+1,k) B_k  =>  solve for B_k
        let mut s = Rat::zero();
        for (j, b) in t.iter().enumerate() {
            s += Rat::from_integer(binomial(k as u64 + 1, j as i64)) * b;
        }
        let bk = (rat_int(k as i64 + 1) - s) / Rat::from_integer(binomial(k as u64 + 1, k as i64));
        t.push(bk);
    }
    t[n].clone()
}

/// Rational to f64, adequate for the magnitudes used here.
pub fn rat_to_f64(r: &Rat) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    // Scale so the integer quotient keeps ~80 significant bits, then divide.
    let num = r.numer();
    let den = r.denom();
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let shift = db - nb + 80;
    let q = if shift >= 0 {
        (num.clone() << shift as u64) / den
    } else {
        num / (den.clone() << (-shift) as u64)
    };
    bigint_to_f64(&q) * 2f64.powi(-shift as i32)
}

fn bigint_to_f64(n: &Int) -> f64 {
    let (sign, digits) = n.to_radix_be(2);
    let mut acc = 0.0f64;
    for &d in digits.iter().take(64) {
        acc = acc * 2.0 + d as f64;
    }
    let rest = digits.len().saturating_sub(64);
    acc *= 2f64.powi(rest as i32);
    if sign == num_bigint::Sign::Minus {
        -acc
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(5, 2), Int::from(10));
        for n in 0..10u64 {
            assert_eq!(binomial(n, 0), Int::one());
        }
        assert_eq!(binomial(4, 7), Int::zero());
        assert_eq!(binomial(4, -1), Int::zero());
    }

    #[test]
    fn binomial_row_sums_are_powers_of_two() {
        for n in 0..=30u64 {
            let sum: Int = (0..=n).map(|r| binomial(n, r as i64)).sum();
            assert_eq!(sum, Int::from(2u8).pow(n as u32));
        }
    }

    #[test]
    fn factorial_basics() {
        assert_eq!(factorial(0), Int::one());
        assert_eq!(factorial(4), Int::from(24));
        assert_eq!(factorial(10), Int::from(3628800));
    }

    #[test]
    fn stirling_base_cases() {
        assert_eq!(stirling2(0, 0), Int::one());
        for n in 1..8 {
            assert_eq!(stirling2(n, 0), Int::zero());
            assert_eq!(stirling2(0, n), Int::zero());
        }
        // {3, 2} = 3 by unfolding the recurrence:
        // {1,1}=1; {2,1}=1, {2,2}=1; {3,2} = {2,1} + 2{2,2} = 3
        assert_eq!(stirling2(3, 2), Int::from(3));
    }

    #[test]
    fn stirling_reconstructs_powers() {
        // sum_m {n,m} * falling(x, m) = x^n, checked exactly for x = 1..8, n <= 10
        for x in 1i64..=8 {
            for n in 0..=10usize {
                let mut total = Int::zero();
                for m in 0..=n {
                    let mut falling = Int::one();
                    for i in 0..m as i64 {
                        falling *= Int::from(x - i);
                    }
                    total += stirling2(n, m) * falling;
                }
                assert_eq!(total, Int::from(x).pow(n as u32), "x={x} n={n}");
            }
        }
    }

    #[test]
    fn stirling_cache_threadsafe() {
        let cache = std::sync::Arc::new(StirlingCache::new());
        let handles: Vec<_> = (0..4)
            .map(|i| {
                let c = cache.clone();
                std::thread::spawn(move || c.get(20 + i, 7))
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
        assert_eq!(cache.get(20, 7), stirling2(20, 7));
    }

    #[test]
    fn bernoulli_plus_values() {
        let expect = [
            rat(1, 1),
            rat(1, 2),
            rat(1, 6),
            rat(0, 1),
            rat(-1, 30),
            rat(0, 1),
            rat(1, 42),
            rat(0, 1),
            rat(-1, 30),
        ];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(&bernoulli_plus(n), e, "n={n}");
        }
    }

    #[test]
    fn rat_to_f64_large() {
        let r = Rat::new(Int::from(1u8) << 200, Int::from(3));
        let f = rat_to_f64(&r);
        let expect = 2f64.powi(200) / 3.0;
        assert!((f - expect).abs() / expect < 1e-12);
        assert!((rat_to_f64(&rat(-1, 30)) - (-1.0 / 30.0)).abs() < 1e-16);
    }
}
