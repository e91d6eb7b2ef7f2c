//! Truncated power series over an exact field, with support constrained
//! to a numerical semigroup. Terms of degree >= the precision are
//! unknown; all arithmetic tracks the minimum precision of its inputs.

use super::field::Field;
use super::EndoError;
use std::collections::BTreeMap;

/// Allowed exponent support: all of the naturals, or the numerical
/// semigroup `<2, odd>` of a cusp ring `k[[t^2, t^odd]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupportSemigroup {
    Natural,
    TwoGen { odd: u64 },
}

impl SupportSemigroup {
    /// `<2, odd>`; with odd = 1 this is all of the naturals.
    pub fn two_gen(odd: u64) -> Self {
        assert!(!odd.is_multiple_of(2), "second generator must be odd");
        if odd <= 1 {
            SupportSemigroup::Natural
        } else {
            SupportSemigroup::TwoGen { odd }
        }
    }

    pub fn contains(&self, exponent: u64) -> bool {
        match self {
            SupportSemigroup::Natural => true,
            SupportSemigroup::TwoGen { odd } => exponent.is_multiple_of(2) || exponent >= *odd,
        }
    }

    /// Least `c` with every integer >= `c` in the semigroup; for
    /// `<2, 2m+1>` this is `2m`.
    pub fn conductor(&self) -> u64 {
        match self {
            SupportSemigroup::Natural => 0,
            SupportSemigroup::TwoGen { odd } => odd - 1,
        }
    }

    pub fn max_generator(&self) -> u64 {
        match self {
            SupportSemigroup::Natural => 1,
            SupportSemigroup::TwoGen { odd } => *odd,
        }
    }

    pub fn elements_below(&self, bound: u64) -> Vec<u64> {
        (0..bound).filter(|&e| self.contains(e)).collect()
    }
}

/// Finitely many known coefficients indexed by exponent; exponents are
/// `< precision` and lie in the semigroup.
#[derive(Clone, Debug)]
pub struct TruncatedSeries<F: Field> {
    field: F,
    semigroup: SupportSemigroup,
    precision: u64,
    coeffs: BTreeMap<u64, F::Elem>,
}

impl<F: Field> TruncatedSeries<F> {
    pub fn zero(field: F, precision: u64) -> Self {
        Self::zero_in(field, SupportSemigroup::Natural, precision)
    }

    pub fn zero_in(field: F, semigroup: SupportSemigroup, precision: u64) -> Self {
        TruncatedSeries { field, semigroup, precision, coeffs: BTreeMap::new() }
    }

    pub fn one(field: F, precision: u64) -> Self {
        let one = field.one();
        let mut s = Self::zero(field, precision);
        s.add_term(0, one);
        s
    }

    pub fn monomial(field: F, exponent: u64, coeff: F::Elem, precision: u64) -> Self {
        let mut s = Self::zero(field, precision);
        s.add_term(exponent, coeff);
        s
    }

    /// Series from `(exponent, integer coefficient)` pairs.
    pub fn from_terms(field: F, precision: u64, terms: &[(u64, i64)]) -> Self {
        let mut s = Self::zero(field.clone(), precision);
        for &(e, c) in terms {
            s.add_term(e, field.from_i64(c));
        }
        s
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn precision(&self) -> u64 {
        self.precision
    }

    pub fn semigroup(&self) -> SupportSemigroup {
        self.semigroup
    }

    /// Add `coeff * t^exponent`; terms at or beyond the precision are
    /// unknown and dropped.
    pub fn add_term(&mut self, exponent: u64, coeff: F::Elem) {
        if exponent >= self.precision || self.field.is_zero(&coeff) {
            return;
        }
        assert!(
            self.semigroup.contains(exponent),
            "exponent {exponent} outside the support semigroup"
        );
        let field = self.field.clone();
        match self.coeffs.remove(&exponent) {
            Some(existing) => {
                let sum = field.add(&existing, &coeff);
                if !field.is_zero(&sum) {
                    self.coeffs.insert(exponent, sum);
                }
            }
            None => {
                self.coeffs.insert(exponent, coeff);
            }
        }
    }

    pub fn coeff(&self, exponent: u64) -> F::Elem {
        self.coeffs.get(&exponent).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn constant_term(&self) -> F::Elem {
        self.coeff(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &F::Elem)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Re-tag with a (possibly smaller) semigroup after checking the
    /// stored support fits.
    pub fn with_semigroup(&self, semigroup: SupportSemigroup) -> Result<Self, EndoError> {
        if let Some(bad) = self.support().find(|&e| !semigroup.contains(e)) {
            return Err(EndoError::MembershipFailure(format!(
                "exponent {bad} is outside the requested semigroup"
            )));
        }
        let mut out = self.clone();
        out.semigroup = semigroup;
        Ok(out)
    }

    /// Forget the semigroup constraint.
    pub fn into_natural(mut self) -> Self {
        self.semigroup = SupportSemigroup::Natural;
        self
    }

    fn merged_semigroup(&self, other: &Self) -> SupportSemigroup {
        if self.semigroup == other.semigroup {
            self.semigroup
        } else {
            SupportSemigroup::Natural
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = TruncatedSeries {
            field: self.field.clone(),
            semigroup: self.merged_semigroup(other),
            precision: self.precision.min(other.precision),
            coeffs: BTreeMap::new(),
        };
        for (e, c) in self.terms() {
            out.add_term(e, c.clone());
        }
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = self.field.neg(c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &F::Elem) -> Self {
        let mut out = TruncatedSeries {
            field: self.field.clone(),
            semigroup: self.semigroup,
            precision: self.precision,
            coeffs: BTreeMap::new(),
        };
        for (e, c) in self.terms() {
            out.add_term(e, self.field.mul(c, factor));
        }
        out
    }

    /// Product to the minimum precision of the factors; sound because all
    /// series here have nonnegative order, so unknown tails only feed
    /// exponents at or beyond that bound.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TruncatedSeries {
            field: self.field.clone(),
            semigroup: self.merged_semigroup(other),
            precision: self.precision.min(other.precision),
            coeffs: BTreeMap::new(),
        };
        for (ea, ca) in self.terms() {
            if ea >= out.precision {
                break;
            }
            for (eb, cb) in other.terms() {
                if ea + eb >= out.precision {
                    break;
                }
                out.add_term(ea + eb, self.field.mul(ca, cb));
            }
        }
        out
    }

    /// Multiplicative inverse; requires a unit constant term. The inverse
    /// stays supported in the same semigroup because its coefficients are
    /// built from sums of supported exponents.
    pub fn invert(&self) -> Result<Self, EndoError> {
        let c0 = self.constant_term();
        let c0_inv = self.field.inv(&c0).ok_or(EndoError::NotAUnit)?;
        let mut inverse: BTreeMap<u64, F::Elem> = BTreeMap::new();
        inverse.insert(0, c0_inv.clone());
        for e in 1..self.precision {
            // g_e = -c0^{-1} * sum_{0 < d <= e} f_d g_{e-d}
            let mut acc = self.field.zero();
            for (d, fd) in self.terms() {
                if d == 0 || d > e {
                    continue;
                }
                if let Some(g) = inverse.get(&(e - d)) {
                    acc = self.field.add(&acc, &self.field.mul(fd, g));
                }
            }
            if !self.field.is_zero(&acc) {
                let val = self.field.neg(&self.field.mul(&c0_inv, &acc));
                inverse.insert(e, val);
            }
        }
        let mut out = TruncatedSeries {
            field: self.field.clone(),
            semigroup: self.semigroup,
            precision: self.precision,
            coeffs: BTreeMap::new(),
        };
        for (e, c) in inverse {
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// Coefficientwise equality below both precisions and the given bound.
    pub fn equal_up_to(&self, other: &Self, bound: u64) -> bool {
        let limit = bound.min(self.precision).min(other.precision);
        let mut exps: Vec<u64> = self
            .support()
            .chain(other.support())
            .filter(|&e| e < limit)
            .collect();
        exps.sort_unstable();
        exps.dedup();
        exps.iter().all(|&e| self.coeff(e) == other.coeff(e))
    }

    pub fn equal_to_precision(&self, other: &Self) -> bool {
        self.equal_up_to(other, u64::MAX)
    }

    /// Render as a polynomial in the given variable, lowest degree first.
    pub fn render(&self, variable: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| {
                let coeff = self.field.render(c);
                match e {
                    0 => coeff,
                    1 if self.field.is_one(c) => variable.to_string(),
                    1 => format!("{coeff}*{variable}"),
                    _ if self.field.is_one(c) => format!("{variable}^{e}"),
                    _ => format!("{coeff}*{variable}^{e}"),
                }
            })
            .collect();
        format!("{} + O({variable}^{})", parts.join(" + "), self.precision)
    }
}
