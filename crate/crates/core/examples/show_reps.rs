//! Prints the standard, Burau and F representations of B_3 and a singular
//! extension of the standard one.

use braidrep::{ExtensionParams, LaurentPoly, Representation};

fn main() {
    let t = LaurentPoly::t();
    for rep in [
        Representation::standard(3, &t).unwrap(),
        Representation::burau(3, &t).unwrap(),
        Representation::f_rep(3, &t).unwrap(),
    ] {
        println!("{} (dim {})", rep.name, rep.dim);
        for (g, m) in rep.images() {
            print!("{g}:\n{m}");
        }
    }

    let params = ExtensionParams::new("1+t".parse().unwrap(), LaurentPoly::constant(2));
    let ext = Representation::singular_extension(3, &t, &params, false).unwrap();
    println!("singular extension, a = 1+t, c = 2");
    for (g, m) in ext.images() {
        print!("{g}:\n{m}");
    }
}
