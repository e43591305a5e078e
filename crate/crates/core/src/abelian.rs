//! Abelianization via integer Smith normal form, cohomology classes, and
//! the splitting used to view the group ring of the torsion-free
//! abelianization as a one-variable Laurent ring over the kernel variables.

use crate::words::GroupPresentation;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use rand::Rng;
use thiserror::Error;

/// Torsion-free abelianization of a presented group.
///
/// `basis_map` is a `mu × l` integer matrix sending a generator's exponent
/// sum vector to coordinates in the torsion-free basis; it has rank `mu`
/// and kills every relator's exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianizationData {
    pub mu: usize,
    pub basis_map: Vec<Vec<i64>>,
    pub torsion_invariants: Vec<u64>,
}

impl AbelianizationData {
    /// Class of a single generator in the torsion-free basis.
    pub fn generator_class(&self, g: usize) -> Vec<i64> {
        self.basis_map.iter().map(|row| row[g]).collect()
    }

    /// Image of an exponent-sum vector.
    pub fn project(&self, exps: &[i64]) -> Vec<i64> {
        self.basis_map
            .iter()
            .map(|row| row.iter().zip(exps).map(|(a, b)| a * b).sum())
            .collect()
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ClassError {
    #[error("zero cohomology class rejected")]
    ZeroClass,
    #[error("class vector has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
}

/// An integer cohomology class with primitivity metadata and a chosen
/// splitting.
///
/// `u` is a unimodular `mu × mu` matrix whose last row is `psi/content`;
/// the change of variables it induces sends the last new variable to the
/// distinguished `t` and the first `mu − 1` new variables to generators of
/// the kernel of the primitive part of `psi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub psi: Vec<i64>,
    pub content: i64,
    pub u: Vec<Vec<i64>>,
    pub u_inv: Vec<Vec<i64>>,
}

impl CohomologyClass {
    pub fn mu(&self) -> usize {
        self.psi.len()
    }

    pub fn is_primitive(&self) -> bool {
        self.content == 1
    }

    pub fn primitive_part(&self) -> Vec<i64> {
        self.psi.iter().map(|x| x / self.content).collect()
    }

    /// New coordinates of an exponent vector: entries `0..mu-1` are kernel
    /// variable exponents, entry `mu-1` is the `t` exponent.
    pub fn split_exponents(&self, e: &[i64]) -> Vec<i64> {
        self.u.iter().map(|row| row.iter().zip(e).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn pairing(&self, e: &[i64]) -> i64 {
        self.psi.iter().zip(e).map(|(a, b)| a * b).sum()
    }
}

/// Compute the torsion-free abelianization of a presentation.
pub fn abelianize(p: &GroupPresentation) -> AbelianizationData {
    let l = p.num_generators();
    let m = p.relators().len();
    // Exponent matrix: rows = generators, columns = relators.
    let mut e = vec![vec![BigInt::zero(); m]; l];
    for (j, r) in p.relators().iter().enumerate() {
        for (i, v) in r.exponent_sums(l).into_iter().enumerate() {
            e[i][j] = BigInt::from(v);
        }
    }
    let snf = smith_normal_form(&e);
    let rank = snf.diag.iter().filter(|d| !d.is_zero()).count();
    let mu = l - rank;
    let basis_map: Vec<Vec<i64>> = snf.u[rank..]
        .iter()
        .map(|row| row.iter().map(big_to_i64).collect())
        .collect();
    let torsion_invariants = snf
        .diag
        .iter()
        .filter(|d| d.abs() > BigInt::one())
        .map(|d| big_to_i64(&d.abs()) as u64)
        .collect();
    AbelianizationData { mu, basis_map, torsion_invariants }
}

/// Build a cohomology class from its values in the torsion-free basis.
pub fn make_class(ab: &AbelianizationData, values: &[i64]) -> Result<CohomologyClass, ClassError> {
    if values.len() != ab.mu {
        return Err(ClassError::LengthMismatch { got: values.len(), expected: ab.mu });
    }
    make_class_free(values)
}

/// As [`make_class`] but without an ambient abelianization (for direct
/// matrix inputs).
pub fn make_class_free(values: &[i64]) -> Result<CohomologyClass, ClassError> {
    if values.iter().all(|&v| v == 0) {
        return Err(ClassError::ZeroClass);
    }
    let mu = values.len();
    let content = values.iter().fold(0i64, |acc, &v| acc.gcd(&v)).abs();
    let prim: Vec<i64> = values.iter().map(|v| v / content).collect();
    // Column-reduce prim to the last standard basis vector, tracking the
    // transformation m (so prim·m = e_mu) and its inverse.
    let mut r = prim.clone();
    let mut m = identity(mu);
    let mut m_inv = identity(mu);
    for i in 0..mu.saturating_sub(1) {
        if r[i] == 0 {
            continue;
        }
        let a = r[mu - 1];
        let b = r[i];
        let (g, s, t) = egcd(a, b);
        // Columns (mu-1, i) <- (mu-1, i) · [[s, -b/g], [t, a/g]].
        let (ag, bg) = (a / g, b / g);
        col_op2(&mut m, mu - 1, i, s, t, -bg, ag);
        // Inverse transform on the left of m_inv: [[ag, bg], [-t, s]].
        row_op2(&mut m_inv, mu - 1, i, ag, bg, -t, s);
        r[mu - 1] = g;
        r[i] = 0;
    }
    if r[mu - 1] < 0 {
        for row in m.iter_mut() {
            row[mu - 1] = -row[mu - 1];
        }
        m_inv[mu - 1].iter_mut().for_each(|x| *x = -*x);
        r[mu - 1] = -r[mu - 1];
    }
    debug_assert_eq!(r[mu - 1], 1);
    debug_assert!(r[..mu - 1].iter().all(|&x| x == 0));
    // u = m^-1, so the last row of u is prim and u·u_inv = 1.
    Ok(CohomologyClass { psi: values.to_vec(), content, u: m_inv, u_inv: m })
}

/// Solve for a class with prescribed values on generators: find integral
/// `psi` with `psi · class(g) = v` for every pair `(g, v)`.  `None` when
/// the system is inconsistent, underdetermined, or non-integral.
pub fn class_from_generator_values(
    ab: &AbelianizationData,
    pairs: &[(usize, i64)],
) -> Option<Vec<i64>> {
    let mu = ab.mu;
    // Equations: sum_k psi_k * basis_map[k][g] = v.
    let mut rows: Vec<(Vec<BigRational>, BigRational)> = pairs
        .iter()
        .map(|&(g, v)| {
            let coeffs = (0..mu)
                .map(|k| BigRational::from_integer(BigInt::from(ab.basis_map[k][g])))
                .collect::<Vec<_>>();
            (coeffs, BigRational::from_integer(BigInt::from(v)))
        })
        .collect();
    // Gaussian elimination.
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut col = 0;
    let mut used = vec![false; rows.len()];
    while col < mu {
        let pr = (0..rows.len()).find(|&i| !used[i] && !rows[i].0[col].is_zero());
        let Some(pr) = pr else {
            return None; // underdetermined
        };
        used[pr] = true;
        pivot_rows.push(pr);
        let inv = rows[pr].0[col].clone();
        for i in 0..rows.len() {
            if i == pr || rows[i].0[col].is_zero() {
                continue;
            }
            let f = &rows[i].0[col] / &inv;
            for k in 0..mu {
                let t = &rows[pr].0[k] * &f;
                rows[i].0[k] -= t;
            }
            let t = &rows[pr].1 * &f;
            rows[i].1 -= t;
        }
        col += 1;
    }
    // Back-substitute: each pivot row now has a single nonzero column.
    let mut psi = vec![BigRational::zero(); mu];
    for (c, &pr) in pivot_rows.iter().enumerate() {
        psi[c] = &rows[pr].1 / &rows[pr].0[c];
    }
    // All equations (including non-pivot ones) must hold.
    for &(g, v) in pairs {
        let lhs: BigRational = (0..mu)
            .map(|k| &psi[k] * BigRational::from_integer(BigInt::from(ab.basis_map[k][g])))
            .sum();
        if lhs != BigRational::from_integer(BigInt::from(v)) {
            return None;
        }
    }
    let mut out = Vec::with_capacity(mu);
    for x in psi {
        if !x.denom().is_one() {
            return None;
        }
        out.push(big_to_i64(x.numer()));
    }
    Some(out)
}

pub struct Snf {
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
    /// Diagonal entries, nonzero first, with the divisibility chain.
    pub diag: Vec<BigInt>,
}

/// Smith normal form over the integers with transformation tracking:
/// `u · a · v` is diagonal.  Pivots are chosen by minimal absolute value.
pub fn smith_normal_form(a: &[Vec<BigInt>]) -> Snf {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut u = identity_big(rows);
    let mut v = identity_big(cols);

    let mut k = 0;
    while k < rows.min(cols) {
        // Minimal nonzero absolute value in the trailing submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if !m[i][j].is_zero()
                    && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        m.swap(k, pi);
        u.swap(k, pi);
        swap_cols(&mut m, k, pj);
        swap_cols(&mut v, k, pj);
        loop {
            let mut clean = true;
            for i in k + 1..rows {
                if m[i][k].is_zero() {
                    continue;
                }
                let q = div_round(&m[i][k], &m[k][k]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let t = &m[k][j] * &q;
                        m[i][j] -= t;
                    }
                    for j in 0..rows {
                        let t = &u[k][j] * &q;
                        u[i][j] -= t;
                    }
                }
                if !m[i][k].is_zero() {
                    m.swap(k, i);
                    u.swap(k, i);
                    clean = false;
                }
            }
            for j in k + 1..cols {
                if m[k][j].is_zero() {
                    continue;
                }
                let q = div_round(&m[k][j], &m[k][k]);
                if !q.is_zero() {
                    for i in 0..rows {
                        let t = &m[i][k] * &q;
                        m[i][j] -= t;
                    }
                    for i in 0..cols {
                        let t = &v[i][k] * &q;
                        v[i][j] -= t;
                    }
                }
                if !m[k][j].is_zero() {
                    swap_cols(&mut m, k, j);
                    swap_cols(&mut v, k, j);
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        // Divisibility: fold any non-divisible entry into the pivot row.
        let mut redo = false;
        'scan: for i in k + 1..rows {
            for j in k + 1..cols {
                if !(&m[i][j] % &m[k][k]).is_zero() {
                    for jj in 0..cols {
                        let t = m[i][jj].clone();
                        m[k][jj] += t;
                    }
                    for jj in 0..rows {
                        let t = u[i][jj].clone();
                        u[k][jj] += t;
                    }
                    redo = true;
                    break 'scan;
                }
            }
        }
        if redo {
            continue;
        }
        if m[k][k].is_negative() {
            for j in 0..cols {
                m[k][j] = -m[k][j].clone();
            }
            for j in 0..rows {
                u[k][j] = -u[k][j].clone();
            }
        }
        k += 1;
    }
    let diag = (0..rows.min(cols)).map(|i| m[i][i].clone()).collect();
    Snf { u, v, diag }
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// Rounded division keeping |remainder| <= |d|/2, which speeds SNF up.
fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    if r.abs() * 2 > d.abs() {
        if (r.is_negative()) == (d.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn identity_big(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn big_to_i64(b: &BigInt) -> i64 {
    i64::try_from(b.clone()).expect("entry exceeds i64")
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g`, `g = gcd(a,b)`,
/// `g` having the sign of the gcd convention `g >= 0` unless both zero.
fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a >= 0 {
            (a, 1, 0)
        } else {
            (-a, -1, 0)
        }
    } else {
        let (g, s, t) = egcd(b, a.rem_euclid(b));
        (g, t, s - (a.div_euclid(b)) * t)
    }
}

/// Columns (c1, c2) <- (c1, c2) · [[a, c], [b, d]].
fn col_op2(m: &mut [Vec<i64>], c1: usize, c2: usize, a: i64, b: i64, c: i64, d: i64) {
    for row in m.iter_mut() {
        let x = row[c1];
        let y = row[c2];
        row[c1] = a * x + b * y;
        row[c2] = c * x + d * y;
    }
}

/// Rows (r1, r2) <- [[a, b], [c, d]] · (r1, r2).
fn row_op2(m: &mut [Vec<i64>], r1: usize, r2: usize, a: i64, b: i64, c: i64, d: i64) {
    let n = m[r1].len();
    for j in 0..n {
        let x = m[r1][j];
        let y = m[r2][j];
        m[r1][j] = a * x + b * y;
        m[r2][j] = c * x + d * y;
    }
}

/// Random unimodular matrix as a product of elementary shear and swap
/// matrices; used by the invariance test suites.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> Vec<Vec<i64>> {
    let mut m = identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        match rng.gen_range(0..3) {
            0 => {
                let c = rng.gen_range(-2..=2i64);
                for row in m.iter_mut() {
                    row[i] += c * row[j];
                }
            }
            1 => {
                for row in m.iter_mut() {
                    row.swap(i, j);
                }
            }
            _ => {
                for row in m.iter_mut() {
                    row[i] = -row[i];
                }
            }
        }
    }
    m
}

pub fn mat_mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let p = b[0].len();
    let k = b.len();
    let mut out = vec![vec![0i64; p]; n];
    for i in 0..n {
        for jj in 0..p {
            out[i][jj] = (0..k).map(|t| a[i][t] * b[t][jj]).sum();
        }
    }
    out
}

/// Inverse of a unimodular integer matrix (panics otherwise).
pub fn unimodular_inverse(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let snf = smith_normal_form(&big);
    assert!(snf.diag.iter().all(|d| d.abs().is_one()), "matrix is not unimodular");
    // u·m·v = d with d = diag(±1) ⟹ m^-1 = v·d^-1·u.
    let n_ = n;
    let mut inv = vec![vec![0i64; n_]; n_];
    for i in 0..n_ {
        for j in 0..n_ {
            let mut acc = BigInt::zero();
            for k in 0..n_ {
                let dk = &snf.diag[k];
                // d^-1 = d since entries are ±1.
                acc += &snf.v[i][k] * dk * &snf.u[k][j];
            }
            inv[i][j] = big_to_i64(&acc);
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::GroupPresentation;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn free_group_abelianization() {
        let p = GroupPresentation::parse("<a,b | >").unwrap();
        let ab = abelianize(&p);
        assert_eq!(ab.mu, 2);
        assert!(ab.torsion_invariants.is_empty());
    }

    #[test]
    fn trefoil_abelianization() {
        let p = GroupPresentation::parse("<a,b | a b a B A B>").unwrap();
        let ab = abelianize(&p);
        assert_eq!(ab.mu, 1);
        assert!(ab.torsion_invariants.is_empty());
        // Both meridians map to the same basis class.
        assert_eq!(ab.generator_class(0), ab.generator_class(1));
        assert_eq!(ab.generator_class(0)[0].abs(), 1);
    }

    #[test]
    fn klein_bottle_records_torsion() {
        let p = GroupPresentation::parse("<a,b | a b a B>").unwrap();
        let ab = abelianize(&p);
        assert_eq!(ab.mu, 1);
        assert_eq!(ab.torsion_invariants, vec![2]);
    }

    #[test]
    fn relators_die_in_basis() {
        let p = GroupPresentation::parse("<a,b,c | a^2 b C, b^3 c A>").unwrap();
        let ab = abelianize(&p);
        for r in p.relators() {
            let v = ab.project(&r.exponent_sums(3));
            assert!(v.iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn make_class_basics() {
        let ab = AbelianizationData { mu: 2, basis_map: vec![vec![1, 0], vec![0, 1]], torsion_invariants: vec![] };
        let c = make_class(&ab, &[1, 0]).unwrap();
        assert_eq!(c.content, 1);
        assert!(c.is_primitive());
        let c = make_class(&ab, &[2, 4]).unwrap();
        assert_eq!(c.content, 2);
        assert_eq!(c.primitive_part(), vec![1, 2]);
        assert!(matches!(make_class(&ab, &[0, 0]), Err(ClassError::ZeroClass)));
    }

    #[test]
    fn splitting_matrix_is_unimodular_with_psi_row() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let mu = rng.gen_range(1..5usize);
            let mut vals: Vec<i64> = (0..mu).map(|_| rng.gen_range(-6..=6)).collect();
            if vals.iter().all(|&v| v == 0) {
                vals[0] = 1;
            }
            let c = make_class_free(&vals).unwrap();
            // u · u_inv = identity.
            let prod = mat_mul_i64(&c.u, &c.u_inv);
            assert_eq!(prod, identity(mu));
            // Last row of u is the primitive part.
            assert_eq!(c.u[mu - 1], c.primitive_part());
            // Last coordinate of split exponents is the primitive pairing.
            let e: Vec<i64> = (0..mu).map(|_| rng.gen_range(-4..=4)).collect();
            let s = c.split_exponents(&e);
            let prim = c.primitive_part();
            let expect: i64 = prim.iter().zip(&e).map(|(a, b)| a * b).sum();
            assert_eq!(s[mu - 1], expect);
        }
    }

    #[test]
    fn snf_small_matrix() {
        // [[2,4],[6,8]] has Smith form diag(2, 4).
        let a = vec![
            vec![BigInt::from(2), BigInt::from(4)],
            vec![BigInt::from(6), BigInt::from(8)],
        ];
        let s = smith_normal_form(&a);
        assert_eq!(s.diag, vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn class_solving_from_generators() {
        let p = GroupPresentation::parse("<a,b | a b a B A B>").unwrap();
        let ab = abelianize(&p);
        let psi = class_from_generator_values(&ab, &[(0, 1), (1, 1)]).unwrap();
        assert_eq!(psi.len(), 1);
        assert_eq!(psi[0].abs(), 1);
        assert!(class_from_generator_values(&ab, &[(0, 1), (1, 2)]).is_none());
    }

    #[test]
    fn random_unimodular_invertible() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let n = rng.gen_range(1..4usize);
            let w = random_unimodular(&mut rng, n, 6);
            let wi = unimodular_inverse(&w);
            assert_eq!(mat_mul_i64(&w, &wi), identity(n));
        }
    }
}
