//! The five families of 2x2 involutions and the virtual singular
//! extensions they give on two strands.

use braidrep::presentation::Mode;
use braidrep::solver::{involution_classify, solve_involution_2x2};
use braidrep::{sample, ExtensionParams, InvolutionFamily, LaurentPoly, Presentation, Representation};

fn main() {
    for fam in solve_involution_2x2() {
        println!("family {}: {:?}, conditions {:?}", fam.family, fam.render_matrix(), fam.conditions);
    }

    let t = LaurentPoly::t();
    let pres = Presentation::build(2, Mode::VirtualSingular, false).unwrap();
    let params = ExtensionParams::new(LaurentPoly::constant(2), "t^-1".parse().unwrap());
    for id in 1..=5 {
        // p = 3, q = 2 gives r = -4 in family 1
        let fam = InvolutionFamily::from_id(id, LaurentPoly::constant(3), LaurentPoly::constant(2), t.clone()).unwrap();
        let rep = Representation::vsb2_extension(&t, &fam, &params, false).unwrap();
        println!("family {id}: {} violations", rep.verify_relations(&pres).unwrap().len());
    }

    let mut rng = sample::rng(sample::seed_from_env());
    let mut counts = [0usize; 5];
    for _ in 0..200 {
        let m = sample::involution(&mut rng);
        counts[involution_classify(&m).unwrap().id() as usize - 1] += 1;
    }
    println!("200 random involutions by family: {counts:?}");
}
