use std::time::Instant;
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
    for psi in [[1i64, 0], [0, 1], [1, 1], [2, 1], [3, -2]] {
        let t0 = Instant::now();
        let class = make_class(&ab, &psi).unwrap();
        let form = localize_and_diagonalize(&j, &class).unwrap();
        let d0 = delta0(&form, &class);
        println!("psi={:?} d0={} degrees={:?} elapsed={:?}", psi, d0, form.degrees(), t0.elapsed());
    }
}
