//! Finds commutators of pure braids whose image is the identity.

use braidrep::kernel::{candidate_pairs, certify, pure_commutator_word, KernelError};
use braidrep::{ExtensionParams, LaurentPoly, RationalFunction, Representation};

fn main() {
    let t = RationalFunction::t();
    let params = ExtensionParams::new(
        RationalFunction::from("1+t".parse::<LaurentPoly>().unwrap()),
        RationalFunction::from(LaurentPoly::constant(3)),
    );
    for n in [3, 4] {
        let rep = Representation::singular_extension(n, &t, &params, true).unwrap();
        for (p1, p2) in candidate_pairs(n) {
            let w = pure_commutator_word(p1, p2, n).unwrap();
            match certify(&rep, &w) {
                Ok(cert) => println!("n = {n}, [A{}{}, A{}{}]: {}", p1.0, p1.1, p2.0, p2.1, cert.to_json()),
                Err(e) => println!("n = {n}, [A{}{}, A{}{}]: {e}", p1.0, p1.1, p2.0, p2.1),
            }
        }
    }
    let rep = Representation::standard(5, &LaurentPoly::t()).unwrap();
    let far = pure_commutator_word((1, 2), (3, 4), 5).unwrap();
    assert!(matches!(certify(&rep, &far), Err(KernelError::TrivialWord(_))));
    println!("[A12, A34] on 5 strands reduces to the empty word and is rejected");
}
