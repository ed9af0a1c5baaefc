//! Checks defining relations for several representations and shows what a
//! violation looks like.

use std::collections::BTreeMap;

use braidrep::presentation::Mode;
use braidrep::{ExtensionParams, Gen, LaurentPoly, Matrix, Presentation, Representation};

fn main() {
    let t = LaurentPoly::t();
    for n in 2..=5 {
        let pres = Presentation::build(n, Mode::Braid, true).unwrap();
        let rep = Representation::standard(n, &t).unwrap();
        let bad = rep.verify_relations(&pres).unwrap();
        println!("standard, n = {n}: {} relations, {} violations", pres.relations.len(), bad.len());
    }

    let pres = Presentation::build(4, Mode::Singular, false).unwrap();
    let params = ExtensionParams::new("t^-1 - 3".parse().unwrap(), "2*t^2".parse().unwrap());
    let ext = Representation::singular_extension(4, &t, &params, false).unwrap();
    println!("singular extension, n = 4: {} violations", ext.verify_relations(&pres).unwrap().len());

    // a tau_1 that does not commute with sigma_1
    let mut images: BTreeMap<Gen, Matrix<LaurentPoly>> =
        Representation::standard(3, &t).unwrap().images().map(|(g, m)| (*g, m.clone())).collect();
    let skew = Matrix::from_rows(vec![
        vec![LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero()],
        vec![LaurentPoly::zero(), LaurentPoly::constant(2), LaurentPoly::zero()],
        vec![LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::one()],
    ]);
    images.insert(Gen::tau(1), skew);
    images.insert(Gen::tau(2), Matrix::identity(3));
    let broken = Representation::from_images(3, Mode::Singular, false, "broken", t, images).unwrap();
    let pres = Presentation::build(3, Mode::Singular, false).unwrap();
    for v in broken.verify_relations(&pres).unwrap() {
        println!("violated: {}", v.relation);
    }
}
