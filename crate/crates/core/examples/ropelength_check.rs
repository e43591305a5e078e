// scratch check: 12x11 presentation invariants
use thurston_bound::abelian::{abelianize, make_class, class_from_generator_values};
use thurston_bound::alexander::*;
use thurston_bound::foxcalc::jacobian;
use thurston_bound::laurent::LaurentPoly;
use thurston_bound::words::GroupPresentation;

fn main() {
    let text = "<a,b,c,d,e,f,g,h,i,j,k,l |
        b G i C I g,
        c J l A L j,
        f E h G H e,
        i H k J K h,
        l K e D E k,
        d A E a,
        e b F B,
        g B H b,
        h c I C,
        j C K c,
        k a L A>";
    let p = GroupPresentation::parse(text).unwrap();
    let ab = abelianize(&p);
    println!("mu = {}, torsion = {:?}", ab.mu, ab.torsion_invariants);
    for (i, n) in p.generator_names().iter().enumerate() {
        println!("  class({}) = {:?}", n, ab.generator_class(i));
    }
    let j = jacobian(&p, &ab);
    let delta = alexander_polynomial(&j);
    println!("Delta = {}", delta);
    // psi: 1 on meridian of component of a, 0 on component of d
    let psi = class_from_generator_values(&ab, &[(0,1),(3,0)]).unwrap();
    println!("psi = {:?}", psi);
    let class = make_class(&ab, &psi).unwrap();
    let form = localize_and_diagonalize(&j, &class).unwrap();
    println!("degrees = {:?}, free_rank = {}, units = {}, zero_cols = {}",
        form.degrees(), form.free_rank, form.unit_entries, form.zero_cols);
    println!("r0 = {}", rank0(&form).unwrap());
    println!("delta0 = {}", delta0(&form, &class));
    for t in &form.torsion {
        println!("torsion poly: {}", t);
    }
    // expected diagonal entries: images of 1-x-y and xy-x-y
    let vars = vec!["x".to_string(), "y".to_string()];
    let p1 = LaurentPoly::parse("1 - x - y", &vars).unwrap();
    let p2 = LaurentPoly::parse("x*y - x - y", &vars).unwrap();
    let i1 = localize_poly(&p1, &class).normalize();
    let i2 = localize_poly(&p2, &class).normalize();
    println!("image(1-x-y) = {}", i1);
    println!("image(xy-x-y) = {}", i2);
    let expected = vec![i1.clone(), i1, i2.clone(), i2];
    println!("multiset match: {}", diag_multiset_eq_up_to_unit(&form.torsion, &expected));
}
