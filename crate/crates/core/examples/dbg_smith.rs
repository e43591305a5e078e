use thurston_bound::abelian::{abelianize, make_class};
use thurston_bound::alexander::*;
use thurston_bound::foxcalc::jacobian;
use thurston_bound::words::GroupPresentation;

fn main() {
    let text = "<a,b,c,d,e,f,g,h,i,j,k,l |
        b G i C I g, c J l A L j, f E h G H e, i H k J K h, l K e D E k,
        d A E a, e b F B, g B H b, h c I C, j C K c, k a L A>";
    let p = GroupPresentation::parse(text).unwrap();
    let ab = abelianize(&p);
    let j = jacobian(&p, &ab);
    let class = make_class(&ab, &[3, -2]).unwrap();
    let mat = localize(&j, &class).unwrap();
    let mut maxdeg = 0i64;
    let mut maxz = 0i64;
    for row in &mat {
        for e in row {
            if let Some(d) = e.degree() {
                maxdeg = maxdeg.max(d);
            }
            for (_, c) in e.coeffs() {
                for poly in [c.numerator(), c.denominator()] {
                    for (exp, _) in poly.terms() {
                        maxz = maxz.max(exp[0].abs());
                    }
                }
            }
        }
    }
    eprintln!("localized: {}x{}, max t-spread {}, max |z| exp {}", mat.len(), mat[0].len(), maxdeg, maxz);
    let form = smith_form_dbg(&mat, 1);
    eprintln!("degrees {:?} free {}", form.degrees(), form.free_rank);
}

// Copy of smith_form with instrumentation.
use thurston_bound::ratfunc::OneVarPoly;

fn size_of_poly(p: &OneVarPoly) -> usize {
    let mut sz = 0usize;
    for (_, c) in p.coeffs() {
        for poly in [c.numerator(), c.denominator()] {
            for (_, v) in poly.terms() {
                sz += v.numer().to_string().len() + v.denom().to_string().len();
            }
        }
    }
    sz
}
fn smith_form_dbg(mat: &[Vec<OneVarPoly>], nvars: usize) -> DiagonalForm {
    let rows = mat.len();
    let cols = mat[0].len();
    let mut m: Vec<Vec<OneVarPoly>> = mat.to_vec();
    let mut k = 0;
    let mut steps = 0u64;
    while k < rows.min(cols) {
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
        let Some((pd, pi, pj)) = best else { break };
        let mut zmax = 0i64;
        for row in &m {
            for e in row {
                for (_, c) in e.coeffs() {
                    for poly in [c.numerator(), c.denominator()] {
                        for (exp, _) in poly.terms() {
                            zmax = zmax.max(exp[0].abs());
                        }
                    }
                }
            }
        }
        eprintln!("k={} pivot deg {} at ({},{}), max |z| {} steps {}", k, pd, pi, pj, zmax, steps);
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            steps += 1;
            if steps % 20 == 0 {
                let mut zmax = 0i64;
                let mut tmax = 0i64;
                for row in &m {
                    for e in row {
                        if let Some(d) = e.degree() { tmax = tmax.max(d); }
                        for (_, c) in e.coeffs() {
                            for poly in [c.numerator(), c.denominator()] {
                                for (exp, _) in poly.terms() {
                                    zmax = zmax.max(exp[0].abs());
                                }
                            }
                        }
                    }
                }
                eprintln!("  ... k={} steps={} pivot_deg={:?} zmax={} tmax={}", k, steps, m[k][k].degree(), zmax, tmax);
            }
            if steps > 4000 {
                eprintln!("TOO MANY STEPS at k={}", k);
                return smith_form(&vec![vec![OneVarPoly::zero(nvars)]], nvars);
            }
            let mut i = k + 1;
            while i < rows {
                if m[i][k].is_zero() {
                    i += 1;
                    continue;
                }
                eprintln!("   divmod row {} entrydeg {:?} pivdeg {:?} size(entry)={} size(piv)={}",
                    i, m[i][k].degree(), m[k][k].degree(), size_of_poly(&m[i][k]), size_of_poly(&m[k][k]));
                let (q, _r) = m[i][k].divmod(&m[k][k]);
                eprintln!("     q size {}", size_of_poly(&q));
                let sub: Vec<OneVarPoly> = m[k].iter().map(|x| x.mul(&q)).collect();
                for (x, s) in m[i].iter_mut().zip(sub) {
                    *x = x.sub(&s);
                }
                if !m[i][k].is_zero() {
                    m.swap(k, i);
                }
            }
            let mut swapped = false;
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
                if !m[k][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(k, j);
                    }
                    swapped = true;
                    break;
                }
            }
            if swapped {
                continue;
            }
            if (k + 1..rows).any(|i| !m[i][k].is_zero()) {
                continue;
            }
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
    smith_form(mat, nvars)
}
