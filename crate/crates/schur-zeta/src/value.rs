//! Bound-carrying numeric results.

use std::fmt;

/// How a numeric value was produced; determines how to read its bound.
/// Truncation bounds are rigorous; quadrature bounds are refinement-based
/// heuristics; table lookups are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    TruncatedSum,
    Quadrature,
    DerivedSeries,
    TableLookup,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::TruncatedSum => "truncated-sum",
            Method::Quadrature => "quadrature",
            Method::DerivedSeries => "derived-series",
            Method::TableLookup => "table-lookup",
        };
        write!(f, "{s}")
    }
}

/// A double-precision value with an absolute-error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValueWithBound {
    pub value: f64,
    pub bound: f64,
    pub method: Method,
}

impl ValueWithBound {
    pub fn new(value: f64, bound: f64, method: Method) -> Self {
        assert!(bound.is_finite(), "error bound must be finite");
        assert!(bound >= 0.0, "error bound must be non-negative");
        ValueWithBound {
            value,
            bound,
            method,
        }
    }

    pub fn exact(value: f64) -> Self {
        ValueWithBound {
            value,
            bound: 0.0,
            method: Method::TableLookup,
        }
    }

    /// True when `other` lies within the combined bounds of both values.
    pub fn agrees_with(&self, other: &ValueWithBound) -> bool {
        (self.value - other.value).abs() <= self.bound + other.bound
    }
}

/// Neumaier compensated summation; the spec's accumulation primitive for
/// long partial sums.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
    terms: u64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.terms += 1;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    pub fn terms(&self) -> u64 {
        self.terms
    }

    /// The |terms|·ε rounding allowance to add to truncation bounds.
    pub fn rounding_bound(&self) -> f64 {
        self.terms as f64 * f64::EPSILON * self.value().abs().max(1.0)
    }
}
