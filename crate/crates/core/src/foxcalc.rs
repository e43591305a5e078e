//! Fox free derivatives, the bar involution on the free group ring, and
//! assembly of the presentation matrix of the first homology of the
//! universal torsion-free abelian cover rel basepoint.
//!
//! The derivative is the right-module variant determined by
//! `d(x_j)/d(x_i) = delta_ij` and `d(uv) = du + u·dv`, from which
//! `d(u^-1) = -u^-1·du` follows.  Because the homology is taken with right
//! module conventions, each matrix entry is the image of the *involuted*
//! derivative; for an abelian coefficient group the involution is exponent
//! negation on monomials and is applied as such after pushing forward.

use crate::abelian::AbelianizationData;
use crate::laurent::LaurentPoly;
use crate::words::{GroupPresentation, Word};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use std::collections::BTreeMap;

/// Element of the integral group ring of a free group.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupRingElt {
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElt {
    pub fn zero() -> Self {
        GroupRingElt::default()
    }

    pub fn one() -> Self {
        GroupRingElt::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        let mut e = GroupRingElt::default();
        e.add_word(w, BigInt::from(1));
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_word(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &other.terms {
            r.add_word(w.clone(), c.clone());
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
        let mut r = GroupRingElt::default();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                r.add_word(w1.multiply(w2), c1 * c2);
            }
        }
        r
    }

    /// Left multiplication by a single group element.
    pub fn mul_word_left(&self, w: &Word) -> Self {
        let mut r = GroupRingElt::default();
        for (u, c) in &self.terms {
            r.add_word(w.multiply(u), c.clone());
        }
        r
    }
}

/// The involution: coefficients fixed, every word inverted.
pub fn involution(e: &GroupRingElt) -> GroupRingElt {
    let mut r = GroupRingElt::default();
    for (w, c) in e.terms() {
        r.add_word(w.inverse(), c.clone());
    }
    r
}

/// Fox derivative of a word with respect to generator `i`.
///
/// Syllable powers use the closed forms
/// `d(x^k)/dx = 1 + x + … + x^(k-1)` and
/// `d(x^-k)/dx = -(x^-1 + … + x^-k)` to avoid letter-by-letter expansion.
pub fn fox_derivative(w: &Word, i: usize) -> GroupRingElt {
    let mut out = GroupRingElt::zero();
    let mut prefix = Word::identity();
    for &(g, e) in w.syllables() {
        if g == i {
            let mut local = GroupRingElt::zero();
            if e > 0 {
                for k in 0..e {
                    local.add_word(Word::power(g, k), BigInt::from(1));
                }
            } else {
                for k in 1..=-e {
                    local.add_word(Word::power(g, -k), BigInt::from(-1));
                }
            }
            out = out.add(&local.mul_word_left(&prefix));
        }
        prefix = prefix.multiply(&Word::power(g, e));
    }
    out
}

/// Presentation matrix of the rel-basepoint homology: rows are indexed by
/// generators, columns by relators, entries in the Laurent ring of the
/// torsion-free abelianization.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobianMatrix {
    pub entries: Vec<Vec<LaurentPoly>>,
    pub generator_names: Vec<String>,
    pub relator_names: Vec<String>,
    pub mu: usize,
}

impl JacobianMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, |r| r.len())
    }

    /// TSV dump with generator/relator headers; entries in polynomial text
    /// form over the given variable names.
    pub fn to_tsv(&self, vars: &[String]) -> String {
        let mut out = String::new();
        out.push('.');
        for rn in &self.relator_names {
            out.push('\t');
            out.push_str(rn);
        }
        out.push('\n');
        for (i, row) in self.entries.iter().enumerate() {
            out.push_str(&self.generator_names[i]);
            for e in row {
                out.push('\t');
                out.push_str(&e.to_text(vars));
            }
            out.push('\n');
        }
        out
    }
}

/// Push a free group ring element through the abelianization map into the
/// Laurent ring (no involution).
pub fn pushforward(e: &GroupRingElt, ab: &AbelianizationData) -> LaurentPoly {
    let ngens = ab.basis_map.first().map_or(0, |r| r.len());
    let mut p = LaurentPoly::zero(ab.mu);
    for (w, c) in e.terms() {
        let exps = ab.project(&w.exponent_sums(ngens));
        p.add_term(exps, BigRational::from_integer(c.clone()));
    }
    p
}

/// Assemble the Jacobian: entry `(i, j)` is the image of the involuted
/// derivative of relator `j` with respect to generator `i`.
pub fn jacobian(p: &GroupPresentation, ab: &AbelianizationData) -> JacobianMatrix {
    let l = p.num_generators();
    let entries: Vec<Vec<LaurentPoly>> = (0..l)
        .map(|i| {
            p.relators()
                .iter()
                .map(|r| pushforward(&fox_derivative(r, i), ab).invert_exponents())
                .collect()
        })
        .collect();
    JacobianMatrix {
        entries,
        generator_names: p.generator_names().to_vec(),
        relator_names: (1..=p.relators().len()).map(|j| format!("r{}", j)).collect(),
        mu: ab.mu,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::abelianize;
    use crate::words::GroupPresentation;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn word(p: &GroupPresentation, s: &str) -> Word {
        let text = format!("<{} | {}>", p.generator_names().join(","), s);
        GroupPresentation::parse(&text).unwrap().relators()[0].clone()
    }

    fn random_word<R: Rng>(rng: &mut R, ngens: usize, len: usize) -> Word {
        Word::from_syllables((0..len).map(|_| {
            (rng.gen_range(0..ngens), if rng.gen_bool(0.5) { 1 } else { -1 } * rng.gen_range(1..4i64))
        }))
    }

    #[test]
    fn derivative_of_generator() {
        let x = Word::generator(0);
        assert_eq!(fox_derivative(&x, 0), GroupRingElt::one());
        assert!(fox_derivative(&x, 1).is_zero());
    }

    #[test]
    fn derivative_of_inverse() {
        // d(x^-1)/dx = -x^-1
        let xi = Word::power(0, -1);
        let d = fox_derivative(&xi, 0);
        let mut expect = GroupRingElt::zero();
        expect.add_word(Word::power(0, -1), BigInt::from(-1));
        assert_eq!(d, expect);
    }

    #[test]
    fn derivative_product_rule_example() {
        // d(xy)/dy = x
        let p = GroupPresentation::free(2);
        let xy = word(&p, "a b");
        assert_eq!(fox_derivative(&xy, 1), GroupRingElt::from_word(Word::generator(0)));
    }

    #[test]
    fn product_and_inverse_rules_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let lu = rng.gen_range(0..5);
            let u = random_word(&mut rng, 3, lu);
            let lv = rng.gen_range(0..5);
            let v = random_word(&mut rng, 3, lv);
            for i in 0..3 {
                let lhs = fox_derivative(&u.multiply(&v), i);
                let rhs = fox_derivative(&u, i)
                    .add(&fox_derivative(&v, i).mul_word_left(&u));
                assert_eq!(lhs, rhs);
                let inv = fox_derivative(&u.inverse(), i);
                let expect = fox_derivative(&u, i).mul_word_left(&u.inverse()).neg();
                assert_eq!(inv, expect);
            }
        }
    }

    #[test]
    fn fundamental_identity_random() {
        // sum_i d(w)/dx_i · (x_i - 1) = w - 1 in the free group ring.
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let ngens = rng.gen_range(1..4usize);
            let len = rng.gen_range(0..6);
            let w = random_word(&mut rng, ngens, len);
            let mut acc = GroupRingElt::zero();
            for i in 0..ngens {
                let mut xi_minus_1 = GroupRingElt::from_word(Word::generator(i));
                xi_minus_1 = xi_minus_1.sub(&GroupRingElt::one());
                acc = acc.add(&fox_derivative(&w, i).mul(&xi_minus_1));
            }
            let expect = GroupRingElt::from_word(w.clone()).sub(&GroupRingElt::one());
            assert_eq!(acc, expect);
        }
    }

    #[test]
    fn involution_is_order_two_antimap() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let mut e = GroupRingElt::zero();
            let nterms = rng.gen_range(0..4);
            for _ in 0..nterms {
                let len = rng.gen_range(0..4);
                let w = random_word(&mut rng, 3, len);
                e.add_word(w, BigInt::from(rng.gen_range(-3..=3)));
            }
            assert_eq!(involution(&involution(&e)), e);
            let f = GroupRingElt::from_word(random_word(&mut rng, 3, 3));
            // bar(ef) = bar(f) bar(e)
            assert_eq!(involution(&e.mul(&f)), involution(&f).mul(&involution(&e)));
        }
    }

    #[test]
    fn involution_examples() {
        let p = GroupPresentation::free(2);
        let mut e = GroupRingElt::one();
        e.add_word(word(&p, "a b"), BigInt::from(2));
        let b = involution(&e);
        let mut expect = GroupRingElt::one();
        expect.add_word(word(&p, "B A"), BigInt::from(2));
        assert_eq!(b, expect);
    }

    #[test]
    fn trefoil_jacobian() {
        let p = GroupPresentation::parse("<a,b | a b a B A B>").unwrap();
        let ab = abelianize(&p);
        let j = jacobian(&p, &ab);
        assert_eq!((j.rows(), j.cols()), (2, 1));
        // Up to the involution and units, both entries are t^2 - t + 1.
        let delta = LaurentPoly::parse("x^2 - x + 1", &["x".to_string()]).unwrap();
        assert!(j.entries[0][0].eq_up_to_unit(&delta));
        assert!(j.entries[1][0].eq_up_to_unit(&delta));
    }

    #[test]
    fn relator_columns_satisfy_pushed_identity() {
        // sum_i entry(i,j) · (phi(x_i) - 1) = 0 since relators map to 1.
        let p = GroupPresentation::parse("<a,b,c | a b A B, a^2 c a C>").unwrap();
        let ab = abelianize(&p);
        let j = jacobian(&p, &ab);
        for jj in 0..j.cols() {
            let mut acc = LaurentPoly::zero(ab.mu);
            for i in 0..j.rows() {
                let cls = ab.generator_class(i);
                // The involuted identity pairs entries with (phi(x_i)^-1 - 1).
                let m = LaurentPoly::monomial(ab.mu, cls.iter().map(|x| -x).collect(), num::one());
                let factor = m.sub(&LaurentPoly::one(ab.mu));
                acc = acc.add(&j.entries[i][jj].mul(&factor));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn tsv_dump_shape() {
        let p = GroupPresentation::parse("<a,b | a b A B>").unwrap();
        let ab = abelianize(&p);
        let j = jacobian(&p, &ab);
        let tsv = j.to_tsv(&crate::laurent::default_var_names(ab.mu));
        let lines: Vec<&str> = tsv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with(".\tr1"));
        assert!(lines[1].starts_with("a\t"));
    }
}
