//! Exact multivariable Laurent polynomial arithmetic over the rationals.
//!
//! Elements of the group ring of a free abelian group of rank `nvars` are
//! stored as maps from exponent vectors to nonzero rational coefficients.
//! The ring is a UFD; `gcd` computes greatest common divisors by reduction
//! to ordinary polynomials and recursive content/primitive-part Euclid, so
//! no factorization oracle is needed.
//!
//! Units of the integral group ring are `±monomial`.  The canonical form of
//! a nonzero polynomial (see [`LaurentPoly::normalize_unit`]) shifts the
//! lexicographically least exponent vector to zero, clears denominators to
//! make the coefficients a primitive integer vector, and makes the
//! coefficient at the least exponent positive.  Two polynomials agree up to
//! a unit iff their canonical forms are equal.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub type Exp = Vec<i64>;

/// Multivariable Laurent polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exp, BigRational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(BigInt::from(c)))
    }

    /// The monomial `c * x^e`.
    pub fn monomial(nvars: usize, e: Exp, c: BigRational) -> Self {
        assert_eq!(e.len(), nvars);
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, BigRational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i64]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, e: Exp, c: BigRational) {
        assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        let mut r = self.clone();
        for c in r.terms.values_mut() {
            *c = -c.clone();
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exp = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut r = self.clone();
        for v in r.terms.values_mut() {
            *v *= c;
        }
        r
    }

    pub fn mul_monomial(&self, e: &[i64], c: &BigRational) -> Self {
        assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            let ee: Exp = e1.iter().zip(e).map(|(a, b)| a + b).collect();
            r.terms.insert(ee, c1 * c);
        }
        r
    }

    /// True when the polynomial is `±1 * monomial`, i.e. a unit of the
    /// integral group ring.
    pub fn is_unit_monomial(&self) -> bool {
        if self.terms.len() != 1 {
            return false;
        }
        let c = self.terms.values().next().unwrap();
        c.abs().is_one()
    }

    /// True when the polynomial is a single term (a unit of the rational
    /// group ring).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Componentwise minimum of all exponent vectors.
    fn min_exponents(&self) -> Exp {
        let mut m = vec![i64::MAX; self.nvars];
        for e in self.terms.keys() {
            for (mi, ei) in m.iter_mut().zip(e) {
                *mi = (*mi).min(*ei);
            }
        }
        m
    }

    /// Lexicographically least exponent vector (the first key of the map).
    fn lex_least_exponent(&self) -> Exp {
        self.terms.keys().next().unwrap().clone()
    }

    /// Canonical representative under multiplication by units `±monomial`
    /// and nonzero rational scalars: the lexicographically least exponent
    /// vector is shifted to zero, coefficients are scaled to a primitive
    /// integer vector, and the coefficient at the least exponent is
    /// positive.  Zero maps to zero.
    pub fn normalize_unit(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let e0 = self.lex_least_exponent();
        let shift: Exp = e0.iter().map(|x| -x).collect();
        let mut p = self.mul_monomial(&shift, &BigRational::one());
        // Clear denominators, divide by integer content.
        let mut den = BigInt::one();
        for c in p.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut content = BigInt::zero();
        for c in p.terms.values() {
            let n = c.numer() * (&den / c.denom());
            content = content.gcd(&n);
        }
        let lead_sign = p.terms.values().next().unwrap().is_negative();
        let mut factor = BigRational::new(den, content);
        if lead_sign {
            factor = -factor;
        }
        for c in p.terms.values_mut() {
            *c *= &factor;
        }
        p
    }

    /// Equality up to multiplication by a unit (`±monomial` times a
    /// rational scalar).
    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        self.normalize_unit() == other.normalize_unit()
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.nvars, other.nvars);
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        // Shift both to the ordinary polynomial ring, divide there, and
        // reattach the monomial shift.
        let sm = self.min_exponents();
        let om = other.min_exponents();
        let f = self.mul_monomial(&sm.iter().map(|x| -x).collect::<Exp>(), &BigRational::one());
        let g = other.mul_monomial(&om.iter().map(|x| -x).collect::<Exp>(), &BigRational::one());
        let q = poly_exact_div(&f, &g)?;
        let shift: Exp = sm.iter().zip(&om).map(|(a, b)| a - b).collect();
        Some(q.mul_monomial(&shift, &BigRational::one()))
    }

    /// Width of the Newton polytope of `self` in the direction `psi`:
    /// `max psi·e − min psi·e` over the exponent vectors of the terms.
    /// `None` for the zero polynomial.
    pub fn psi_degree(&self, psi: &[i64]) -> Option<i64> {
        assert_eq!(psi.len(), self.nvars);
        if self.is_zero() {
            return None;
        }
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for e in self.terms.keys() {
            let v: i64 = e.iter().zip(psi).map(|(a, b)| a * b).sum();
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Some(hi - lo)
    }

    /// Image under the ring map sending `x^e` to `x^(m·e)` for an integer
    /// matrix `m` (rows index the new variables).
    pub fn map_exponents(&self, m: &[Vec<i64>]) -> Self {
        let new_nvars = m.len();
        let mut r = Self::zero(new_nvars);
        for (e, c) in &self.terms {
            let ne: Exp = m.iter().map(|row| row.iter().zip(e).map(|(a, b)| a * b).sum()).collect();
            r.add_term(ne, c.clone());
        }
        r
    }

    /// Image under the involution `x^e ↦ x^{-e}`.
    pub fn invert_exponents(&self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            r.terms.insert(e.iter().map(|x| -x).collect(), c.clone());
        }
        r
    }

    /// Least common multiple, in canonical form.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        let g = self.gcd(other);
        self.mul(other).exact_div(&g).expect("gcd divides product").normalize_unit()
    }

    /// Greatest common divisor in the UFD, in canonical form.
    /// Both zero gives zero.
    pub fn gcd(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        if self.is_zero() && other.is_zero() {
            return Self::zero(self.nvars);
        }
        if self.is_zero() {
            return other.normalize_unit();
        }
        if other.is_zero() {
            return self.normalize_unit();
        }
        let a = self.normalize_unit();
        let b = other.normalize_unit();
        poly_gcd(&a, &b).normalize_unit()
    }

    /// Render with the given variable names, e.g. `3*x^2*y^-1 - 1/2`.
    pub fn to_text(&self, vars: &[String]) -> String {
        assert_eq!(vars.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        // Lex-descending term order reads naturally for one variable.
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut parts: Vec<String> = Vec::new();
            let monomial_only = e.iter().any(|&x| x != 0);
            if !mag.is_one() || !monomial_only {
                parts.push(format!("{}", mag));
            }
            for (k, &ek) in e.iter().enumerate() {
                if ek == 1 {
                    parts.push(vars[k].clone());
                } else if ek != 0 {
                    parts.push(format!("{}^{}", vars[k], ek));
                }
            }
            out.push_str(&parts.join("*"));
        }
        out
    }

    /// Parse the text form produced by [`to_text`](Self::to_text).
    pub fn parse(text: &str, vars: &[String]) -> Result<Self, String> {
        parse_poly(text, vars)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = default_var_names(self.nvars);
        write!(f, "{}", self.to_text(&names))
    }
}

pub fn default_var_names(nvars: usize) -> Vec<String> {
    const NAMES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
    (0..nvars)
        .map(|i| {
            if nvars <= NAMES.len() {
                NAMES[i].to_string()
            } else {
                format!("x{}", i + 1)
            }
        })
        .collect()
}

/// Exact division of ordinary (exponents ≥ 0) polynomials by lex leading
/// term elimination.
fn poly_exact_div(f: &LaurentPoly, g: &LaurentPoly) -> Option<LaurentPoly> {
    let nvars = f.nvars;
    let (ge, gc) = g.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
    let mut rem = f.clone();
    let mut quo = LaurentPoly::zero(nvars);
    while !rem.is_zero() {
        let (re, rc) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let qe: Exp = re.iter().zip(&ge).map(|(a, b)| a - b).collect();
        if qe.iter().any(|&x| x < 0) {
            return None;
        }
        let qc = rc / &gc;
        quo.add_term(qe.clone(), qc.clone());
        rem = rem.sub(&g.mul_monomial(&qe, &qc));
    }
    Some(quo)
}

/// Multivariate gcd by recursive content/primitive-part Euclid.  Inputs are
/// nonzero with exponents ≥ 0 in the first variable after the caller's
/// normalization; recursion peels off one variable at a time.
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let nvars = a.nvars;
    if nvars == 0 {
        return LaurentPoly::one(0);
    }
    if a.is_monomial() || b.is_monomial() {
        // gcd of a monomial with anything is the common monomial part,
        // which normalization has already stripped.
        let ga = a.min_exponents();
        let gb = b.min_exponents();
        let e: Exp = ga.iter().zip(&gb).map(|(x, y)| (*x).min(*y)).collect();
        return LaurentPoly::monomial(nvars, e, BigRational::one());
    }
    // View as univariate in variable 0 with LaurentPoly(nvars-1) coefficients.
    let ua = to_univariate(a);
    let ub = to_univariate(b);
    let g = univariate_gcd(ua, ub, nvars - 1);
    from_univariate(&g, nvars)
}

/// Dense coefficient list, index = exponent of the main variable.
fn to_univariate(p: &LaurentPoly) -> Vec<LaurentPoly> {
    let nvars = p.nvars;
    let deg = p.terms.keys().map(|e| e[0]).max().unwrap() as usize;
    let mut coeffs = vec![LaurentPoly::zero(nvars - 1); deg + 1];
    for (e, c) in &p.terms {
        coeffs[e[0] as usize].add_term(e[1..].to_vec(), c.clone());
    }
    coeffs
}

fn from_univariate(coeffs: &[LaurentPoly], nvars: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero(nvars);
    for (i, c) in coeffs.iter().enumerate() {
        for (e, v) in c.terms() {
            let mut ee = Vec::with_capacity(nvars);
            ee.push(i as i64);
            ee.extend_from_slice(e);
            p.add_term(ee, v.clone());
        }
    }
    p
}

fn uni_trim(c: &mut Vec<LaurentPoly>) {
    while let Some(last) = c.last() {
        if last.is_zero() {
            c.pop();
        } else {
            break;
        }
    }
}

fn uni_content(c: &[LaurentPoly], inner_vars: usize) -> LaurentPoly {
    let mut g = LaurentPoly::zero(inner_vars);
    for p in c {
        if !p.is_zero() {
            g = g.gcd(p);
        }
    }
    g
}

fn uni_scale_div(c: &[LaurentPoly], d: &LaurentPoly) -> Vec<LaurentPoly> {
    c.iter()
        .map(|p| {
            if p.is_zero() {
                p.clone()
            } else {
                p.exact_div(d).expect("content must divide")
            }
        })
        .collect()
}

/// Pseudo-remainder of dense univariate polynomials over the inner ring.
fn uni_pseudo_rem(f: &[LaurentPoly], g: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let mut r: Vec<LaurentPoly> = f.to_vec();
    uni_trim(&mut r);
    let dg = g.len() - 1;
    let lg = &g[dg];
    while r.len() >= g.len() {
        let dr = r.len() - 1;
        let lead = r[dr].clone();
        // r <- lg * r - lead * x^(dr-dg) * g
        for p in r.iter_mut() {
            *p = p.mul(lg);
        }
        for (i, gi) in g.iter().enumerate() {
            let idx = dr - dg + i;
            let t = lead.mul(gi);
            r[idx] = r[idx].sub(&t);
        }
        uni_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn univariate_gcd(mut f: Vec<LaurentPoly>, mut g: Vec<LaurentPoly>, inner_vars: usize) -> Vec<LaurentPoly> {
    uni_trim(&mut f);
    uni_trim(&mut g);
    if inner_vars == 0 {
        return univariate_gcd_rational(&f, &g);
    }
    let cf = uni_content(&f, inner_vars);
    let cg = uni_content(&g, inner_vars);
    let cont = cf.gcd(&cg);
    let mut a = uni_scale_div(&f, &cf);
    let mut b = uni_scale_div(&g, &cg);
    rat_normalize(&mut a);
    rat_normalize(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = uni_pseudo_rem(&a, &b);
        a = b;
        b = if r.is_empty() {
            r
        } else {
            let c = uni_content(&r, inner_vars);
            let mut rr = uni_scale_div(&r, &c);
            rat_normalize(&mut rr);
            rr
        };
    }
    // Reattach the content.
    a.iter().map(|p| p.mul(&cont)).collect()
}

/// Scale a coefficient vector by a positive rational so that all rational
/// coefficients become a primitive integer family; keeps pseudo-remainder
/// growth in check.
fn rat_normalize(c: &mut [LaurentPoly]) {
    let mut den = BigInt::one();
    for p in c.iter() {
        for (_, v) in p.terms() {
            den = den.lcm(v.denom());
        }
    }
    let mut num = BigInt::zero();
    for p in c.iter() {
        for (_, v) in p.terms() {
            num = num.gcd(&(v.numer() * (&den / v.denom())));
        }
    }
    if num.is_zero() || (num.is_one() && den.is_one()) {
        return;
    }
    let factor = BigRational::new(den, num);
    for p in c.iter_mut() {
        *p = p.scale(&factor);
    }
}

/// Fast path for one-variable gcd over the rationals: primitive PRS over
/// the integers.
fn univariate_gcd_rational(f: &[LaurentPoly], g: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let to_int = |c: &[LaurentPoly]| -> Vec<BigInt> {
        let rat: Vec<BigRational> = c
            .iter()
            .map(|p| p.terms().next().map(|(_, v)| v.clone()).unwrap_or_else(BigRational::zero))
            .collect();
        let mut den = BigInt::one();
        for v in &rat {
            den = den.lcm(v.denom());
        }
        let ints: Vec<BigInt> = rat.iter().map(|v| v.numer() * (&den / v.denom())).collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if content.is_zero() || content.is_one() {
            ints
        } else {
            ints.iter().map(|v| v / &content).collect()
        }
    };
    let trim = |v: &mut Vec<BigInt>| {
        while v.last().is_some_and(|x| x.is_zero()) {
            v.pop();
        }
    };
    let mut a = to_int(f);
    let mut b = to_int(g);
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        // Pseudo-remainder: lc(b)^(da-db+1) · a  mod  b, then primitive part.
        let db = b.len() - 1;
        let lb = b[db].clone();
        let mut r = a.clone();
        while r.len() >= b.len() {
            let dr = r.len() - 1;
            let lead = r[dr].clone();
            for x in r.iter_mut() {
                *x = &*x * &lb;
            }
            for (i, bi) in b.iter().enumerate() {
                let idx = dr - db + i;
                r[idx] = &r[idx] - &(&lead * bi);
            }
            trim(&mut r);
            if r.is_empty() {
                break;
            }
        }
        if !r.is_empty() {
            let mut content = BigInt::zero();
            for v in &r {
                content = content.gcd(v);
            }
            r = r.iter().map(|v| v / &content).collect();
        }
        a = b;
        b = r;
    }
    a.iter()
        .map(|v| LaurentPoly::constant(0, BigRational::from_integer(v.clone())))
        .collect()
}

fn parse_poly(text: &str, vars: &[String]) -> Result<LaurentPoly, String> {
    let nvars = vars.len();
    let mut p = LaurentPoly::zero(nvars);
    let mut chars = text.chars().peekable();
    let mut first = true;
    loop {
        skip_ws(&mut chars);
        if chars.peek().is_none() {
            if first {
                return Err("empty polynomial".into());
            }
            break;
        }
        let mut sign = BigRational::one();
        match chars.peek() {
            Some('+') => {
                chars.next();
            }
            Some('-') => {
                chars.next();
                sign = -sign;
            }
            _ if first => {}
            Some(c) => return Err(format!("expected '+' or '-', found '{}'", c)),
            None => break,
        }
        first = false;
        skip_ws(&mut chars);
        // term: [coefficient] {* var[^exp]}*
        let mut coeff = sign;
        let mut exp = vec![0i64; nvars];
        let mut saw_factor = false;
        loop {
            skip_ws(&mut chars);
            match chars.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = read_number(&mut chars)?;
                    coeff *= num;
                    saw_factor = true;
                }
                Some(c) if c.is_alphabetic() => {
                    let name = read_ident(&mut chars);
                    let idx = vars
                        .iter()
                        .position(|v| *v == name)
                        .ok_or_else(|| format!("unknown variable '{}'", name))?;
                    let mut e: i64 = 1;
                    skip_ws(&mut chars);
                    if chars.peek() == Some(&'^') {
                        chars.next();
                        skip_ws(&mut chars);
                        e = read_int(&mut chars)?;
                    }
                    exp[idx] += e;
                    saw_factor = true;
                }
                _ => break,
            }
            skip_ws(&mut chars);
            if chars.peek() == Some(&'*') {
                chars.next();
            } else {
                break;
            }
        }
        if !saw_factor {
            return Err("expected term".into());
        }
        p.add_term(exp, coeff);
    }
    Ok(p)
}

fn skip_ws(chars: &mut std::iter::Peekable<std::str::Chars>) {
    while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
        chars.next();
    }
}

fn read_ident(chars: &mut std::iter::Peekable<std::str::Chars>) -> String {
    let mut s = String::new();
    while matches!(chars.peek(), Some(c) if c.is_alphanumeric() || *c == '_') {
        s.push(chars.next().unwrap());
    }
    s
}

fn read_int(chars: &mut std::iter::Peekable<std::str::Chars>) -> Result<i64, String> {
    let mut s = String::new();
    if chars.peek() == Some(&'-') {
        s.push(chars.next().unwrap());
    }
    while matches!(chars.peek(), Some(c) if c.is_ascii_digit()) {
        s.push(chars.next().unwrap());
    }
    s.parse::<i64>().map_err(|e| format!("bad integer: {}", e))
}

fn read_number(chars: &mut std::iter::Peekable<std::str::Chars>) -> Result<BigRational, String> {
    let mut s = String::new();
    while matches!(chars.peek(), Some(c) if c.is_ascii_digit()) {
        s.push(chars.next().unwrap());
    }
    let numer: BigInt = s.parse().map_err(|e| format!("bad number: {}", e))?;
    skip_ws(chars);
    if chars.peek() == Some(&'/') {
        // Lookahead: only treat as fraction when digits follow.
        let mut clone = chars.clone();
        clone.next();
        skip_ws(&mut clone);
        if matches!(clone.peek(), Some(c) if c.is_ascii_digit()) {
            chars.next();
            skip_ws(chars);
            let mut d = String::new();
            while matches!(chars.peek(), Some(c) if c.is_ascii_digit()) {
                d.push(chars.next().unwrap());
            }
            let denom: BigInt = d.parse().map_err(|e| format!("bad number: {}", e))?;
            return Ok(BigRational::new(numer, denom));
        }
    }
    Ok(BigRational::from_integer(numer))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars2() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    fn p2(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, &vars2()).unwrap()
    }

    fn p1(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, &["x".to_string()]).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let a = p2("1 - x - y");
        let b = p2("x*y - x - y");
        let s = a.add(&b);
        assert_eq!(s, p2("1 - 2*x - 2*y + x*y"));
        let prod = a.mul(&b);
        assert_eq!(prod.coeff(&[1, 1]), BigRational::from_integer(BigInt::from(3)));
    }

    #[test]
    fn gcd_idempotent() {
        let a = p2("1 - x - y");
        assert!(a.gcd(&a).eq_up_to_unit(&a));
    }

    #[test]
    fn gcd_common_factor() {
        // x^2-1 and x^3-1 share exactly x-1.
        let a = p1("x^2 - 1");
        let b = p1("x^3 - 1");
        let g = a.gcd(&b);
        assert!(g.eq_up_to_unit(&p1("x - 1")));
    }

    #[test]
    fn gcd_with_unit() {
        let a = p2("x^2*y - 3*x + y^2");
        let g = a.gcd(&LaurentPoly::one(2));
        assert!(g.eq_up_to_unit(&LaurentPoly::one(2)));
    }

    #[test]
    fn gcd_both_zero_is_zero() {
        let z = LaurentPoly::zero(2);
        assert!(z.gcd(&z).is_zero());
    }

    #[test]
    fn gcd_two_variable_factor() {
        let f = p2("1 - x - y");
        let a = f.mul(&p2("x + y^2"));
        let b = f.mul(&p2("x*y - 2"));
        assert!(a.gcd(&b).eq_up_to_unit(&f));
    }

    #[test]
    fn gcd_laurent_inputs() {
        // Negative exponents are handled through unit normalization.
        let f = p2("x - 1");
        let a = f.mul(&p2("y - 1")).mul_monomial(&[-1, 0], &BigRational::one());
        let b = f.mul(&p2("y + 1")).mul_monomial(&[-3, 2], &BigRational::one());
        let g = a.gcd(&b);
        assert!(g.eq_up_to_unit(&f));
        assert!(a.exact_div(&g).is_some());
        assert!(b.exact_div(&g).is_some());
    }

    #[test]
    fn psi_degree_paper_values() {
        // 1-x-y in direction (1,0) has width 1.
        assert_eq!(p2("1 - x - y").psi_degree(&[1, 0]), Some(1));
        // a single monomial always has width 0.
        assert_eq!(p2("x^3*y^-2").psi_degree(&[5, -7]), Some(0));
        assert_eq!(LaurentPoly::zero(2).psi_degree(&[1, 0]), None);
    }

    #[test]
    fn psi_degree_multiplicative_and_symmetric() {
        let a = p2("1 - x - y");
        let b = p2("x*y - x - y + 2");
        for psi in [[1i64, 0], [0, 1], [1, 1], [2, -3]] {
            let da = a.psi_degree(&psi).unwrap();
            let db = b.psi_degree(&psi).unwrap();
            assert_eq!(a.mul(&b).psi_degree(&psi), Some(da + db));
            let neg = [-psi[0], -psi[1]];
            assert_eq!(a.psi_degree(&neg), Some(da));
            let k = 3i64;
            let scaled = [k * psi[0], k * psi[1]];
            assert_eq!(a.psi_degree(&scaled), Some(k.abs() * da));
        }
    }

    #[test]
    fn exact_division() {
        let a = p2("1 - x - y");
        let b = p2("x*y^-1 + 2");
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(p2("x + y").exact_div(&p2("x - y")).is_none());
    }

    #[test]
    fn normalization_is_canonical() {
        let a = p2("1 - x - y");
        let u = a.mul_monomial(&[3, -2], &BigRational::new(BigInt::from(-7), BigInt::from(2)));
        assert_eq!(u.normalize_unit(), a.normalize_unit());
        assert!(u.eq_up_to_unit(&a));
        assert!(!p2("1 - x + y").eq_up_to_unit(&a));
    }

    #[test]
    fn text_roundtrip() {
        let cases = ["3*x^2*y^-1 - 1/2", "1 - x - y", "x*y - x - y", "-x + 2", "7"];
        for c in cases {
            let p = p2(c);
            let back = LaurentPoly::parse(&p.to_text(&vars2()), &vars2()).unwrap();
            assert_eq!(p, back);
        }
    }
}
