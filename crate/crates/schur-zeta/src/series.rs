//! Truncated multivariate formal power series over exact rationals.
//!
//! Coefficients are stored densely, indexed by mixed-radix exponent offset;
//! truncation orders are small and the variable count is at most the corner
//! count of a shape, so density wins over sparse maps. Every operation
//! documents how the validity range (the per-variable `orders`) propagates.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{factorial, rat_int, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("inner series for substitution must have zero constant term")]
    NonzeroConstantTerm,
    #[error("numerator not divisible by variable {0}")]
    NotDivisible(usize),
    #[error("denominator must be z times a unit with constant term 1")]
    BadDenominator,
}

/// A truncated formal power series with exact rational coefficients.
/// `orders[i]` is the inclusive maximum exponent stored for variable i;
/// coefficients beyond the orders are unknown, not zero.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiSeries {
    orders: Vec<usize>,
    coeffs: Vec<Rat>,
}

fn strides(orders: &[usize]) -> Vec<usize> {
    let mut out = vec![1; orders.len()];
    for i in 1..orders.len() {
        out[i] = out[i - 1] * (orders[i - 1] + 1);
    }
    out
}

impl MultiSeries {
    pub fn zero(orders: &[usize]) -> Self {
        let len = orders.iter().map(|&o| o + 1).product();
        MultiSeries {
            orders: orders.to_vec(),
            coeffs: vec![Rat::zero(); len],
        }
    }

    pub fn constant(orders: &[usize], value: Rat) -> Self {
        let mut s = Self::zero(orders);
        s.coeffs[0] = value;
        s
    }

    pub fn one(orders: &[usize]) -> Self {
        Self::constant(orders, Rat::one())
    }

    /// The monomial ∏ zᵢ^{e_i}.
    pub fn monomial(orders: &[usize], exponents: &[usize], coeff: Rat) -> Self {
        let mut s = Self::zero(orders);
        s.set(exponents, coeff);
        s
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn num_vars(&self) -> usize {
        self.orders.len()
    }

    fn offset(&self, exponents: &[usize]) -> Option<usize> {
        debug_assert_eq!(exponents.len(), self.orders.len());
        let mut off = 0;
        let mut stride = 1;
        for (i, (&e, &o)) in exponents.iter().zip(&self.orders).enumerate() {
            let _ = i;
            if e > o {
                return None;
            }
            off += e * stride;
            stride *= o + 1;
        }
        Some(off)
    }

    pub fn coeff(&self, exponents: &[usize]) -> Rat {
        match self.offset(exponents) {
            Some(o) => self.coeffs[o].clone(),
            None => panic!("exponent {exponents:?} beyond truncation orders {:?}", self.orders),
        }
    }

    pub fn set(&mut self, exponents: &[usize], value: Rat) {
        let off = self
            .offset(exponents)
            .unwrap_or_else(|| panic!("exponent beyond orders"));
        self.coeffs[off] = value;
    }

    pub fn add_to(&mut self, exponents: &[usize], value: Rat) {
        if let Some(off) = self.offset(exponents) {
            self.coeffs[off] += value;
        }
    }

    /// Iterates (exponent vector, coefficient) over the stored box.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &Rat)> {
        let orders = self.orders.clone();
        self.coeffs.iter().enumerate().map(move |(off, c)| {
            let mut e = Vec::with_capacity(orders.len());
            let mut rem = off;
            for &o in &orders {
                e.push(rem % (o + 1));
                rem /= o + 1;
            }
            (e, c)
        })
    }

    /// Restricts to smaller truncation orders.
    pub fn truncate(&self, orders: &[usize]) -> MultiSeries {
        assert_eq!(orders.len(), self.orders.len());
        assert!(
            orders.iter().zip(&self.orders).all(|(&a, &b)| a <= b),
            "cannot extend validity by truncation"
        );
        let mut out = MultiSeries::zero(orders);
        let n = out.coeffs.len();
        let out_strides = strides(orders);
        for off in 0..n {
            let mut e = Vec::with_capacity(orders.len());
            let mut rem = off;
            for (&o, _s) in orders.iter().zip(&out_strides) {
                e.push(rem % (o + 1));
                rem /= o + 1;
            }
            out.coeffs[off] = self.coeff(&e);
        }
        out
    }

    /// Truncated sum; result orders are the componentwise min.
    pub fn add(&self, other: &MultiSeries) -> Result<MultiSeries, SeriesError> {
        if self.num_vars() != other.num_vars() {
            return Err(SeriesError::VariableMismatch(
                self.num_vars(),
                other.num_vars(),
            ));
        }
        let orders: Vec<usize> = self
            .orders
            .iter()
            .zip(&other.orders)
            .map(|(&a, &b)| a.min(b))
            .collect();
        let mut out = self.truncate(&orders);
        let rhs = other.truncate(&orders);
        for (c, d) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += d;
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rat) -> MultiSeries {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c *= k;
        }
        out
    }

    /// Truncated product; result orders are the componentwise min.
    pub fn mul(&self, other: &MultiSeries) -> Result<MultiSeries, SeriesError> {
        if self.num_vars() != other.num_vars() {
            return Err(SeriesError::VariableMismatch(
                self.num_vars(),
                other.num_vars(),
            ));
        }
        let orders: Vec<usize> = self
            .orders
            .iter()
            .zip(&other.orders)
            .map(|(&a, &b)| a.min(b))
            .collect();
        let mut out = MultiSeries::zero(&orders);
        for (ea, ca) in self.iter() {
            if ca.is_zero() {
                continue;
            }
            if ea.iter().zip(&orders).any(|(&e, &o)| e > o) {
                continue;
            }
            for (eb, cb) in other.iter() {
                if cb.is_zero() {
                    continue;
                }
                let sum: Vec<usize> = ea.iter().zip(&eb).map(|(&a, &b)| a + b).collect();
                if sum.iter().zip(&orders).all(|(&e, &o)| e <= o) {
                    out.add_to(&sum, ca.clone() * cb);
                }
            }
        }
        Ok(out)
    }

    /// Multiplies the coefficient of every monomial by its exponent in
    /// variable `var` — the operator z·∂/∂z.
    pub fn exponent_scale(&self, var: usize) -> MultiSeries {
        let mut out = self.clone();
        let orders = self.orders.clone();
        for (off, c) in out.coeffs.iter_mut().enumerate() {
            let mut rem = off;
            for (i, &o) in orders.iter().enumerate() {
                let e = rem % (o + 1);
                rem /= o + 1;
                if i == var {
                    *c *= rat_int(e as i64);
                }
            }
        }
        out
    }
}

/// The univariate series of 1 − e^{−z} up to the given order:
/// Σ_{n=1}^{order} (−1)^{n+1} zⁿ/n!.
pub fn one_minus_exp_neg(order: usize) -> MultiSeries {
    let mut s = MultiSeries::zero(&[order]);
    for n in 1..=order {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        s.set(&[n], Rat::new(sign.into(), factorial(n as u64)));
    }
    s
}

/// The univariate series of e^{z} − 1 up to the given order.
pub fn exp_minus_one(order: usize) -> MultiSeries {
    let mut s = MultiSeries::zero(&[order]);
    for n in 1..=order {
        s.set(&[n], Rat::new(1.into(), factorial(n as u64)));
    }
    s
}

/// The univariate series of −(e^{z} − 1) = 1 − e^{z}.
pub fn one_minus_exp(order: usize) -> MultiSeries {
    exp_minus_one(order).scale(&rat_int(-1))
}

/// Substitutes a univariate series (with zero constant term) for each
/// variable of `outer`. The zero-constant-term precondition makes the
/// truncation exact: the coefficient of a monomial below the outer orders
/// depends only on inner coefficients below those orders.
pub fn substitute(
    outer: &MultiSeries,
    inner: &[MultiSeries],
) -> Result<MultiSeries, SeriesError> {
    if inner.len() != outer.num_vars() {
        return Err(SeriesError::VariableMismatch(outer.num_vars(), inner.len()));
    }
    for s in inner {
        if s.num_vars() != 1 {
            return Err(SeriesError::VariableMismatch(1, s.num_vars()));
        }
        if !s.coeff(&[0]).is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
    }
    let orders: Vec<usize> = outer
        .orders
        .iter()
        .zip(inner)
        .map(|(&o, s)| o.min(s.orders[0]))
        .collect();

    // Powers of each inner series as multivariate series in the target
    // variable, up to the needed exponent.
    let mut powers: Vec<Vec<MultiSeries>> = Vec::with_capacity(inner.len());
    for (v, s) in inner.iter().enumerate() {
        // embed the univariate inner series into the full variable set
        let mut emb = MultiSeries::zero(&orders);
        for k in 0..=orders[v].min(s.orders[0]) {
            let mut e = vec![0; orders.len()];
            e[v] = k;
            emb.set(&e, s.coeff(&[k]));
        }
        let mut pows = vec![MultiSeries::one(&orders), emb.clone()];
        for _ in 2..=orders[v] {
            let next = pows.last().unwrap().mul(&emb)?;
            pows.push(next);
        }
        powers.push(pows);
    }

    let mut out = MultiSeries::zero(&orders);
    for (e, c) in outer.iter() {
        if c.is_zero() {
            continue;
        }
        if e.iter().zip(&orders).any(|(&ei, &o)| ei > o) {
            // a monomial with z_v^m, m > result order, cannot contribute
            // below the truncation because inner has no constant term
            continue;
        }
        let mut term = MultiSeries::constant(&orders, c.clone());
        for (v, &ei) in e.iter().enumerate() {
            if ei > 0 {
                term = term.mul(&powers[v][ei])?;
            }
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Inverts a unit series (constant term 1) up to its orders.
fn invert_unit(unit: &MultiSeries) -> Result<MultiSeries, SeriesError> {
    if unit.coeff(&[0]) != Rat::one() {
        return Err(SeriesError::BadDenominator);
    }
    let order = unit.orders[0];
    let mut inv = MultiSeries::zero(&[order]);
    inv.set(&[0], Rat::one());
    // Newton-free direct recursion: coefficient n of inv from lower ones.
    for n in 1..=order {
        let mut acc = Rat::zero();
        for k in 1..=n {
            acc += unit.coeff(&[k]) * inv.coeff(&[n - k]);
        }
        inv.set(&[n], -acc);
    }
    Ok(inv)
}

/// Divides `numerator` by ∏ d_i(z_i) where every divisor is z times a unit
/// with constant term 1 (e.g. 1 − e^{−z} or e^{z} − 1). Requires every
/// stored monomial of the numerator to have exponent ≥ 1 in every variable;
/// a violation signals an upstream bug because SSYT corner entries are ≥ 1.
/// Result orders are reduced by one in every variable.
pub fn divide_by_corner_product(
    numerator: &MultiSeries,
    denominators: &[MultiSeries],
) -> Result<MultiSeries, SeriesError> {
    let nv = numerator.num_vars();
    if denominators.len() != nv {
        return Err(SeriesError::VariableMismatch(nv, denominators.len()));
    }
    for (e, c) in numerator.iter() {
        if !c.is_zero() {
            if let Some(v) = e.iter().position(|&ei| ei == 0) {
                return Err(SeriesError::NotDivisible(v));
            }
        }
    }
    for d in denominators {
        if d.num_vars() != 1 || !d.coeff(&[0]).is_zero() || d.coeff(&[1]) != Rat::one() {
            return Err(SeriesError::BadDenominator);
        }
    }
    let orders: Vec<usize> = numerator
        .orders
        .iter()
        .zip(denominators)
        .map(|(&o, d)| o.min(d.orders[0]).saturating_sub(1))
        .collect();

    // shift exponents down by one in every variable
    let mut shifted = MultiSeries::zero(&orders);
    for (e, c) in numerator.iter() {
        if c.is_zero() {
            continue;
        }
        let se: Vec<usize> = e.iter().map(|&ei| ei - 1).collect();
        if se.iter().zip(&orders).all(|(&ei, &o)| ei <= o) {
            shifted.set(&se, c.clone());
        }
    }

    // multiply by the inverted units
    let mut out = shifted;
    for (v, d) in denominators.iter().enumerate() {
        // unit u with d = z·u: u_k = d_{k+1}
        let uord = orders[v];
        let mut unit = MultiSeries::zero(&[uord]);
        for k in 0..=uord {
            unit.set(&[k], d.coeff(&[k + 1]));
        }
        let inv = invert_unit(&unit)?;
        let mut emb = MultiSeries::zero(&orders);
        for k in 0..=uord {
            let mut e = vec![0; orders.len()];
            e[v] = k;
            emb.set(&e, inv.coeff(&[k]));
        }
        out = out.mul(&emb)?;
    }
    Ok(out)
}
