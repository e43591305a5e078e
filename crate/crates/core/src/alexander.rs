//! Classical and refined level-0 invariants.
//!
//! From the Jacobian presentation matrix this module computes:
//!
//! * the Alexander polynomial, as the gcd of the codimension-one minors
//!   after unit-pivot pre-simplification (determinants by fraction-free
//!   Bareiss elimination);
//! * the Alexander norm of a class `psi` (the `psi`-width of the
//!   polynomial's Newton polytope);
//! * the diagonal form of the module localized at a primitive class: the
//!   matrix is rewritten over the one-variable Laurent ring with
//!   rational-function coefficients (a commutative PID) and diagonalized
//!   by a gcd-based Smith algorithm with pivot = minimal `t`-degree;
//! * the rank `r0` (free rank of the rel-basepoint module minus one) and
//!   the degree `delta0(psi)` (content times the sum of the torsion
//!   `t`-degrees).

use crate::abelian::CohomologyClass;
use crate::foxcalc::JacobianMatrix;
use crate::laurent::LaurentPoly;
use crate::obstructions::BoundVerdict;
use crate::ratfunc::{OneVarPoly, RatFunc};
use num::rational::BigRational;
use num::One;
use serde::Serialize;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
    #[error("class must be primitive (content 1), got content {0}")]
    NotPrimitive(i64),
    #[error("class length {got} does not match beta1 = {expected}")]
    ClassLength { got: usize, expected: usize },
}

/// Diagonal shape of a finitely generated module over the localized ring:
/// torsion polynomials plus the free rank and leftover zero relation
/// columns.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalForm {
    /// Nonunit diagonal entries in monic normal form, `t`-degree >= 1.
    pub torsion: Vec<OneVarPoly>,
    /// Diagonal entries that turned out to be units.
    pub unit_entries: usize,
    /// Zero rows of the diagonal presentation: the free rank of the
    /// presented module.
    pub free_rank: usize,
    /// Zero relation columns left after diagonalization.
    pub zero_cols: usize,
    pub nvars: usize,
}

impl DiagonalForm {
    /// Multiset of torsion `t`-degrees, sorted ascending.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.torsion.iter().map(|p| p.degree().unwrap()).collect();
        d.sort_unstable();
        d
    }

    /// Dimension of the torsion submodule over the coefficient field.
    pub fn torsion_rank(&self) -> i64 {
        self.degrees().iter().sum()
    }
}

/// Rewrite a Laurent polynomial through the splitting of a primitive
/// class: each monomial's exponent vector maps to kernel-variable
/// exponents plus a `t`-power.
pub fn localize_poly(p: &LaurentPoly, class: &CohomologyClass) -> OneVarPoly {
    let mu = class.mu();
    assert_eq!(p.nvars(), mu);
    let mut out = OneVarPoly::zero(mu.saturating_sub(1));
    for (e, c) in p.terms() {
        let f = class.split_exponents(e);
        let tpow = f[mu - 1];
        let zexp = f[..mu - 1].to_vec();
        let mono = LaurentPoly::monomial(mu - 1, zexp, c.clone());
        out.add_term(tpow, RatFunc::from_poly(mono));
    }
    out
}

/// Localize the whole Jacobian at a primitive class.
pub fn localize(j: &JacobianMatrix, class: &CohomologyClass) -> Result<Vec<Vec<OneVarPoly>>, InvariantError> {
    if class.mu() != j.mu {
        return Err(InvariantError::ClassLength { got: class.mu(), expected: j.mu });
    }
    if !class.is_primitive() {
        return Err(InvariantError::NotPrimitive(class.content));
    }
    Ok(j.entries
        .iter()
        .map(|row| row.iter().map(|e| localize_poly(e, class)).collect())
        .collect())
}

/// Smith normal form over the localized PID.  Pivot selection: minimal
/// `t`-degree among the remaining entries, ties broken by column then row
/// order.  The resulting diagonal carries the divisibility chain, so the
/// degree multiset is presentation-invariant.
///
/// Rows are rescaled by units after every operation; without this the
/// rational-function coefficients of the Euclidean chain blow up.
pub fn smith_form(mat: &[Vec<OneVarPoly>], nvars: usize) -> DiagonalForm {
    let rows = mat.len();
    let cols = mat.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<OneVarPoly>> = mat.to_vec();
    for row in m.iter_mut() {
        unit_normalize_slice(&mut row.iter_mut().collect::<Vec<_>>());
    }
    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = find_pivot(&m, k) else {
            break;
        };
        m.swap(k, pi);
        swap_cols(&mut m, k, pj);
        'reduce: loop {
            // Clear column k.
            let mut i = k + 1;
            while i < rows {
                if m[i][k].is_zero() {
                    i += 1;
                    continue;
                }
                let (q, r) = m[i][k].divmod(&m[k][k]);
                let sub: Vec<OneVarPoly> = m[k].iter().map(|x| x.mul(&q)).collect();
                for (x, s) in m[i].iter_mut().zip(sub) {
                    *x = x.sub(&s);
                }
                debug_assert_eq!(m[i][k], r);
                unit_normalize_slice(&mut m[i].iter_mut().collect::<Vec<_>>());
                if !m[i][k].is_zero() {
                    // Remainder has strictly smaller degree: promote it.
                    m.swap(k, i);
                }
            }
            // Clear row k.
            let mut j = k + 1;
            while j < cols {
                if m[k][j].is_zero() {
                    j += 1;
                    continue;
                }
                let (q, _) = m[k][j].divmod(&m[k][k]);
                for row in m.iter_mut() {
                    let s = row[k].mul(&q);
                    row[j] = row[j].sub(&s);
                }
                let mut col: Vec<&mut OneVarPoly> = m.iter_mut().map(|row| &mut row[j]).collect();
                unit_normalize_slice(&mut col);
                if !m[k][j].is_zero() {
                    swap_cols(&mut m, k, j);
                    // Column operations may have refilled column k.
                    continue 'reduce;
                }
            }
            // Column k may have been refilled by the row clearing.
            if (k + 1..rows).any(|i| !m[i][k].is_zero()) {
                continue 'reduce;
            }
            // Divisibility pass: the pivot must divide the submatrix.
            let mut fixed = true;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if m[i][j].exact_div(&m[k][k]).is_none() {
                        let add: Vec<OneVarPoly> = m[i].clone();
                        for (x, a) in m[k].iter_mut().zip(add) {
                            *x = x.add(&a);
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        k += 1;
    }
    let mut torsion = Vec::new();
    let mut unit_entries = 0;
    for d in m.iter().take(k).enumerate().map(|(i, row)| &row[i]) {
        let n = d.normalize();
        if n.degree().unwrap() == 0 {
            unit_entries += 1;
        } else {
            torsion.push(n);
        }
    }
    DiagonalForm { torsion, unit_entries, free_rank: rows - k, zero_cols: cols - k, nvars }
}

/// Scale a family of polynomials by one unit of the Laurent ring so that
/// their joint coefficient family becomes a primitive integer polynomial
/// family: denominators cleared, common polynomial and rational content
/// divided out.
fn unit_normalize_slice(polys: &mut [&mut OneVarPoly]) {
    let Some(first) = polys.iter().find(|p| !p.is_zero()) else {
        return;
    };
    let nvars = first.nvars();
    let mut den_lcm = LaurentPoly::one(nvars);
    for p in polys.iter() {
        for (_, c) in p.coeffs() {
            den_lcm = den_lcm.lcm(c.denominator());
        }
    }
    let mut num_gcd = LaurentPoly::zero(nvars);
    for p in polys.iter() {
        for (_, c) in p.coeffs() {
            num_gcd = num_gcd.gcd(c.numerator());
        }
    }
    let unit = RatFunc::new(den_lcm, num_gcd);
    for p in polys.iter_mut() {
        **p = p.scale(&unit);
    }
    // Joint rational content.
    let mut den = num::BigInt::one();
    let mut num = num::BigInt::zero();
    use num::Integer;
    for p in polys.iter() {
        for (_, c) in p.coeffs() {
            for (_, v) in c.numerator().terms() {
                den = den.lcm(v.denom());
            }
        }
    }
    for p in polys.iter() {
        for (_, c) in p.coeffs() {
            for (_, v) in c.numerator().terms() {
                num = num.gcd(&(v.numer() * (&den / v.denom())));
            }
        }
    }
    if !num.is_zero() && !(num.is_one() && den.is_one()) {
        let factor = RatFunc::from_rational(nvars, BigRational::new(den, num));
        for p in polys.iter_mut() {
            **p = p.scale(&factor);
        }
    }
}

fn find_pivot(m: &[Vec<OneVarPoly>], k: usize) -> Option<(usize, usize)> {
    let rows = m.len();
    let cols = m[0].len();
    let mut best: Option<(i64, usize, usize)> = None;
    for j in k..cols {
        for i in k..rows {
            if let Some(d) = m[i][j].degree() {
                if best.map_or(true, |(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn swap_cols(m: &mut [Vec<OneVarPoly>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// Localize at a primitive class and diagonalize.
pub fn localize_and_diagonalize(
    j: &JacobianMatrix,
    class: &CohomologyClass,
) -> Result<DiagonalForm, InvariantError> {
    let mat = localize(j, class)?;
    let nvars = class.mu() - 1;
    if mat.is_empty() || mat[0].is_empty() {
        return Ok(DiagonalForm {
            torsion: Vec::new(),
            unit_entries: 0,
            free_rank: mat.len(),
            zero_cols: mat.first().map_or(0, |r| r.len()),
            nvars,
        });
    }
    Ok(smith_form(&mat, nvars))
}

/// `delta0` of a (possibly non-primitive) class from the diagonal form of
/// its primitive part: content times the torsion degree sum.
pub fn delta0(form: &DiagonalForm, class: &CohomologyClass) -> i64 {
    class.content * form.torsion_rank()
}

/// `r0` from a rel-basepoint diagonal form.  The rel-basepoint module
/// always has free rank at least one, so zero free rank means the input
/// was not such a module.
pub fn rank0(form: &DiagonalForm) -> Result<usize, InvariantError> {
    if form.free_rank == 0 {
        return Err(InvariantError::InternalConsistency(
            "rel-basepoint module has free rank 0".to_string(),
        ));
    }
    Ok(form.free_rank - 1)
}

/// Alexander polynomial: gcd of the codimension-one minors of the
/// presentation matrix, defined up to unit, zero when every minor
/// vanishes.  Unit-pivot pre-simplification shrinks the matrix before any
/// determinant is expanded.
pub fn alexander_polynomial(j: &JacobianMatrix) -> LaurentPoly {
    let mu = j.mu;
    let mut m = j.entries.clone();
    unit_pivot_simplify(&mut m);
    let s = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    if s == 0 || s == 1 {
        // Zero or one module generator: the relevant minor ideal is the
        // whole ring.
        return LaurentPoly::one(mu);
    }
    let size = s - 1;
    if cols < size {
        return LaurentPoly::zero(mu);
    }
    let mut g = LaurentPoly::zero(mu);
    let row_sets = subsets(s, size);
    let col_sets = subsets(cols, size);
    'outer: for rs in &row_sets {
        for cs in &col_sets {
            let sub: Vec<Vec<LaurentPoly>> =
                rs.iter().map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect()).collect();
            let det = bareiss_det(sub, mu);
            if det.is_zero() {
                continue;
            }
            g = g.gcd(&det);
            if g.is_unit_monomial() {
                break 'outer;
            }
        }
    }
    g.normalize_unit()
}

/// Alexander norm of `psi`: the `psi`-width of the polynomial; zero with a
/// vanishing flag when the polynomial is zero.
pub fn alexander_norm(delta: &LaurentPoly, psi: &[i64]) -> (i64, bool) {
    match delta.psi_degree(psi) {
        Some(d) => (d, false),
        None => (0, true),
    }
}

/// Remove a row and column at every `±monomial` pivot, updating the
/// complement so the presented module is unchanged.
fn unit_pivot_simplify(m: &mut Vec<Vec<LaurentPoly>>) {
    loop {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        if rows == 0 || cols == 0 {
            return;
        }
        let mut pivot = None;
        'search: for i in 0..rows {
            for j in 0..cols {
                if m[i][j].is_unit_monomial() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            return;
        };
        let p = m[pi][pj].clone();
        let (pe, pc) = p.terms().next().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let inv_e: Vec<i64> = pe.iter().map(|x| -x).collect();
        let inv_c = pc.recip();
        for i in 0..rows {
            if i == pi {
                continue;
            }
            let factor = m[i][pj].mul_monomial(&inv_e, &inv_c);
            if factor.is_zero() {
                continue;
            }
            for jj in 0..cols {
                if jj == pj {
                    continue;
                }
                let t = factor.mul(&m[pi][jj]);
                m[i][jj] = m[i][jj].sub(&t);
            }
        }
        m.remove(pi);
        for row in m.iter_mut() {
            row.remove(pj);
        }
    }
}

/// Fraction-free Bareiss determinant with row pivoting.
fn bareiss_det(mut m: Vec<Vec<LaurentPoly>>, nvars: usize) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one(nvars);
    }
    let mut sign = false;
    let mut prev = LaurentPoly::one(nvars);
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return LaurentPoly::zero(nvars);
            };
            m.swap(k, r);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[k][k].mul(&m[i][j]);
                let b = m[i][k].mul(&m[k][j]);
                m[i][j] = a.sub(&b).exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = LaurentPoly::zero(nvars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Everything the pipeline reports for one class.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub schema: u32,
    pub beta1: usize,
    pub torsion_h1: Vec<u64>,
    pub alexander_poly: String,
    pub psi: Vec<i64>,
    pub alex_norm: i64,
    pub delta_bar0: i64,
    pub r0: usize,
    pub delta0: i64,
    pub diagonal_degrees: Vec<i64>,
    pub flags: Vec<String>,
    pub verdicts: Vec<BoundVerdict>,
}

/// Apply a matrix of unit column scalings as a quick unit-equivalence test
/// helper: every polynomial of `a` equals the corresponding one of `b` up
/// to a unit.
pub fn diag_multiset_eq_up_to_unit(a: &[OneVarPoly], b: &[OneVarPoly]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut bn: Vec<OneVarPoly> = b.iter().map(|p| p.normalize()).collect();
    for p in a {
        let pn = p.normalize();
        match bn.iter().position(|q| *q == pn) {
            Some(i) => {
                bn.remove(i);
            }
            None => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{abelianize, make_class};
    use crate::foxcalc::jacobian;
    use crate::words::GroupPresentation;

    fn invariants(text: &str, psi: &[i64]) -> (LaurentPoly, DiagonalForm, usize, i64) {
        let p = GroupPresentation::parse(text).unwrap();
        let ab = abelianize(&p);
        let j = jacobian(&p, &ab);
        let delta = alexander_polynomial(&j);
        let class = make_class(&ab, psi).unwrap();
        let prim = make_class(&ab, &class.primitive_part()).unwrap();
        let form = localize_and_diagonalize(&j, &prim).unwrap();
        let r0 = rank0(&form).unwrap();
        let d0 = delta0(&form, &class);
        (delta, form, r0, d0)
    }

    #[test]
    fn trefoil_invariants() {
        let (delta, form, r0, d0) = invariants("<a,b | a b a B A B>", &[1]);
        let expect = LaurentPoly::parse("x^2 - x + 1", &["x".to_string()]).unwrap();
        assert!(delta.eq_up_to_unit(&expect));
        assert_eq!(r0, 0);
        assert_eq!(d0, 2);
        assert_eq!(form.degrees(), vec![2]);
        let (norm, vanish) = alexander_norm(&delta, &[1]);
        assert_eq!((norm, vanish), (2, false));
    }

    #[test]
    fn unknot_invariants() {
        let p = GroupPresentation::parse("<a | >").unwrap();
        let ab = abelianize(&p);
        let j = jacobian(&p, &ab);
        let delta = alexander_polynomial(&j);
        assert!(delta.eq_up_to_unit(&LaurentPoly::one(1)));
        let class = make_class(&ab, &[1]).unwrap();
        let form = localize_and_diagonalize(&j, &class).unwrap();
        assert_eq!(rank0(&form).unwrap(), 0);
        assert_eq!(delta0(&form, &class), 0);
    }

    #[test]
    fn free_group_rank_bookkeeping() {
        for m in 1..=5usize {
            let p = GroupPresentation::free(m);
            let ab = abelianize(&p);
            let j = jacobian(&p, &ab);
            let mut psi = vec![0i64; m];
            psi[0] = 1;
            let class = make_class(&ab, &psi).unwrap();
            let form = localize_and_diagonalize(&j, &class).unwrap();
            assert_eq!(rank0(&form).unwrap(), m - 1);
            assert_eq!(delta0(&form, &class), 0);
        }
    }

    #[test]
    fn three_torus_everything_vanishes() {
        let text = "<a,b,c | a b A B, a c A C, b c B C>";
        for psi in [[1i64, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [2, -1, 3]] {
            let (_, form, r0, d0) = invariants(text, &psi);
            assert_eq!(r0, 0, "psi = {:?}", psi);
            assert_eq!(d0, 0, "psi = {:?}", psi);
            assert!(form.degrees().is_empty());
        }
    }

    #[test]
    fn smith_form_on_direct_matrix() {
        // diag presentation [[t-1, 0], [0, (t-1)(t-2)], [0, 0]] over Q.
        let n = 0usize;
        let tm1 = {
            let mut p = OneVarPoly::t(n);
            p.add_term(0, RatFunc::from_rational(n, -BigRational::one()));
            p
        };
        let tm2 = {
            let mut p = OneVarPoly::t(n);
            p.add_term(0, RatFunc::from_rational(n, -BigRational::from_integer(2.into())));
            p
        };
        let prod = tm1.mul(&tm2);
        let z = OneVarPoly::zero(n);
        let mat = vec![
            vec![tm1.clone(), z.clone()],
            vec![z.clone(), prod],
            vec![z.clone(), z.clone()],
        ];
        let form = smith_form(&mat, n);
        assert_eq!(form.free_rank, 1);
        assert_eq!(form.degrees(), vec![1, 2]);
        // Non-diagonal presentation of the same module.
        let mat2 = vec![
            vec![tm1.clone(), tm1.mul(&tm2)],
            vec![tm1.mul(&tm1), tm1.mul(&tm1).mul(&tm2)],
        ];
        let form2 = smith_form(&mat2, n);
        // rank 1 matrix: one diagonal entry, one free row.
        assert_eq!(form2.free_rank, 1);
        assert_eq!(form2.degrees(), vec![1]);
    }

    #[test]
    fn rank0_zero_free_rank_is_error() {
        let n = 0usize;
        let one = OneVarPoly::one(n);
        let mat = vec![vec![one.clone()]];
        let form = smith_form(&mat, n);
        assert!(rank0(&form).is_err());
    }
}
