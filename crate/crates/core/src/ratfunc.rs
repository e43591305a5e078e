//! The coefficient field for localized computations: rational functions in
//! the kernel variables `z1..z_{mu-1}`, and one-variable Laurent
//! polynomials in `t` over that field.
//!
//! A rational function is kept reduced (numerator and denominator coprime)
//! with the denominator in the canonical unit-normal form of
//! [`LaurentPoly::normalize_unit`]; equality is then structural.  With zero
//! kernel variables the field degenerates to the rationals.

use crate::laurent::LaurentPoly;
use num::rational::BigRational;
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Element of the fraction field of the Laurent polynomial ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "denominator must be nonzero");
        assert_eq!(num.nvars(), den.nvars());
        let mut r = RatFunc { num, den };
        r.reduce();
        r
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let n = p.nvars();
        RatFunc { num: p, den: LaurentPoly::one(n) }
    }

    pub fn zero(nvars: usize) -> Self {
        RatFunc { num: LaurentPoly::zero(nvars), den: LaurentPoly::one(nvars) }
    }

    pub fn one(nvars: usize) -> Self {
        RatFunc { num: LaurentPoly::one(nvars), den: LaurentPoly::one(nvars) }
    }

    pub fn from_rational(nvars: usize, c: BigRational) -> Self {
        RatFunc { num: LaurentPoly::constant(nvars, c), den: LaurentPoly::one(nvars) }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one(self.num.nvars());
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_unit_monomial() {
            self.num = self.num.exact_div(&g).expect("gcd divides numerator");
            self.den = self.den.exact_div(&g).expect("gcd divides denominator");
        }
        // Normalize the denominator to canonical unit form and absorb the
        // unit into the numerator.
        let dn = self.den.normalize_unit();
        let unit = self.den.exact_div(&dn).expect("normalization differs by a unit");
        debug_assert!(unit.is_monomial());
        let (e, c) = unit.terms().next().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let inv_e: Vec<i64> = e.iter().map(|x| -x).collect();
        self.num = self.num.mul_monomial(&inv_e, &c.recip());
        self.den = dn;
    }

    pub fn add(&self, other: &Self) -> Self {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero");
        RatFunc::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn to_text(&self, vars: &[String]) -> String {
        if self.den.is_zero() || self.den == LaurentPoly::one(self.nvars()) {
            self.num.to_text(vars)
        } else {
            format!("({})/({})", self.num.to_text(vars), self.den.to_text(vars))
        }
    }
}

/// Laurent polynomial in one variable `t` with [`RatFunc`] coefficients:
/// an element of the principal ideal domain used for the localized module
/// computations.
#[derive(Clone, PartialEq, Debug)]
pub struct OneVarPoly {
    nvars: usize,
    coeffs: BTreeMap<i64, RatFunc>,
}

impl OneVarPoly {
    pub fn zero(nvars: usize) -> Self {
        OneVarPoly { nvars, coeffs: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(RatFunc::one(nvars))
    }

    pub fn constant(c: RatFunc) -> Self {
        let mut p = Self::zero(c.nvars());
        p.add_term(0, c);
        p
    }

    pub fn t(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(1, RatFunc::one(nvars));
        p
    }

    pub fn term(pow: i64, c: RatFunc) -> Self {
        let mut p = Self::zero(c.nvars());
        p.add_term(pow, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&i64, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, pow: i64) -> RatFunc {
        self.coeffs.get(&pow).cloned().unwrap_or_else(|| RatFunc::zero(self.nvars))
    }

    pub fn add_term(&mut self, pow: i64, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&pow) {
            Some(old) => {
                *old = old.add(&c);
                if old.is_zero() {
                    self.coeffs.remove(&pow);
                }
            }
            None => {
                self.coeffs.insert(pow, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (p, c) in &other.coeffs {
            r.add_term(*p, c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        let mut r = self.clone();
        for c in r.coeffs.values_mut() {
            *c = c.neg();
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (p1, c1) in &self.coeffs {
            for (p2, c2) in &other.coeffs {
                r.add_term(p1 + p2, c1.mul(c2));
            }
        }
        r
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut r = self.clone();
        for v in r.coeffs.values_mut() {
            *v = v.mul(c);
        }
        r
    }

    pub fn mul_tpow(&self, k: i64) -> Self {
        let mut r = Self::zero(self.nvars);
        for (p, c) in &self.coeffs {
            r.coeffs.insert(p + k, c.clone());
        }
        r
    }

    pub fn min_pow(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_pow(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Spread degree: `max t-power − min t-power`; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        Some(self.max_pow()? - self.min_pow()?)
    }

    /// A unit of the Laurent ring: a single term.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Monic normal form: lowest power shifted to 0 and leading coefficient
    /// one.  Zero stays zero.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lo = self.min_pow().unwrap();
        let hi = self.max_pow().unwrap();
        let lead = self.coeffs.get(&hi).unwrap().clone();
        self.mul_tpow(-lo).scale(&lead.recip())
    }

    /// Division with remainder: `self = q·g + r` with `r = 0` or
    /// `spread(r) < spread(g)`.
    pub fn divmod(&self, g: &Self) -> (Self, Self) {
        assert!(!g.is_zero(), "division by zero polynomial");
        let mut q = Self::zero(self.nvars);
        let mut r = self.clone();
        let g_hi = g.max_pow().unwrap();
        let g_spread = g.degree().unwrap();
        let g_lead = g.coeff(g_hi);
        while !r.is_zero() && r.degree().unwrap() >= g_spread {
            let r_hi = r.max_pow().unwrap();
            let c = r.coeff(r_hi).div(&g_lead);
            let k = r_hi - g_hi;
            let qt = OneVarPoly::term(k, c);
            q = q.add(&qt);
            r = r.sub(&g.mul(&qt));
        }
        (q, r)
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        let (q, r) = self.divmod(g);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn to_text(&self, zvars: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (p, c) in self.coeffs.iter().rev() {
            let cs = c.to_text(zvars);
            let ts = match *p {
                0 => String::new(),
                1 => "t".to_string(),
                k => format!("t^{}", k),
            };
            let term = match (cs.as_str(), ts.as_str()) {
                (c, "") => c.to_string(),
                ("1", t) => t.to_string(),
                (c, t) if c.contains(['+', '-', '/']) && !c.starts_with('-') => format!("({})*{}", c, t),
                (c, t) if c.contains(['+', '-', '/']) => format!("({})*{}", c, t),
                (c, t) => format!("{}*{}", c, t),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for OneVarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("z{}", i)).collect();
        write!(f, "{}", self.to_text(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;

    fn z() -> LaurentPoly {
        LaurentPoly::var(1, 0)
    }

    fn int(n: i64) -> LaurentPoly {
        LaurentPoly::from_int(1, n)
    }

    #[test]
    fn field_axioms_spot_checks() {
        let a = RatFunc::new(z().add(&int(1)), z().sub(&int(2)));
        assert!(a.mul(&a.recip()).is_one());
        assert!(a.sub(&a).is_zero());
        let b = RatFunc::new(z(), int(3));
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.mul(&b).div(&b), a);
    }

    #[test]
    fn reduction_is_canonical() {
        // (z^2-1)/(z-1) reduces to z+1.
        let a = RatFunc::new(z().mul(&z()).sub(&int(1)), z().sub(&int(1)));
        assert_eq!(a, RatFunc::from_poly(z().add(&int(1))));
        // Denominators differing by a unit give the same representation.
        let b = RatFunc::new(z().add(&int(1)), z().mul_monomial(&[3], &BigRational::from_integer(BigInt::from(-2))));
        let c = RatFunc::new(
            z().add(&int(1)).mul_monomial(&[-3], &BigRational::new(BigInt::from(-1), BigInt::from(2))),
            z(),
        );
        assert_eq!(b, c);
    }

    #[test]
    fn zero_variable_field_is_rationals() {
        let half = RatFunc::from_rational(0, BigRational::new(BigInt::from(1), BigInt::from(2)));
        let two = RatFunc::from_rational(0, BigRational::from_integer(BigInt::from(2)));
        assert!(half.mul(&two).is_one());
    }

    #[test]
    fn onevar_divmod() {
        let n = 1;
        // f = t^2 - t + 1 (coefficients in Q(z)), g = t - z.
        let f = {
            let mut p = OneVarPoly::zero(n);
            p.add_term(2, RatFunc::one(n));
            p.add_term(1, RatFunc::from_poly(int(-1)));
            p.add_term(0, RatFunc::one(n));
            p
        };
        let g = {
            let mut p = OneVarPoly::zero(n);
            p.add_term(1, RatFunc::one(n));
            p.add_term(0, RatFunc::from_poly(z().neg()));
            p
        };
        let (q, r) = f.divmod(&g);
        assert_eq!(q.mul(&g).add(&r), f);
        assert!(r.degree().unwrap_or(-1) < g.degree().unwrap());
        // Laurent shifts divide exactly.
        let shifted = f.mul_tpow(-5);
        assert!(shifted.exact_div(&f).is_some());
    }

    #[test]
    fn normalize_monic_min_zero() {
        let n = 1;
        let mut p = OneVarPoly::zero(n);
        p.add_term(-2, RatFunc::from_poly(z()));
        p.add_term(1, RatFunc::from_poly(z().add(&int(3))));
        let q = p.normalize();
        assert_eq!(q.min_pow(), Some(0));
        assert!(q.coeff(3).is_one());
        assert_eq!(p.degree(), q.degree());
    }
}
