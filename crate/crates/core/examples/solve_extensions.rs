//! Solves for every extension of the standard representation to the
//! singular braid group on 2 and 3 strands.

use braidrep::presentation::Mode;
use braidrep::solver::{assemble_extension, laurent_representability, solve_linear, block_form_check};
use braidrep::{Gen, LaurentPoly, Presentation, Representation};

fn main() {
    let t = LaurentPoly::t();
    for n in [2, 3] {
        let pres = Presentation::build(n, Mode::Singular, false).unwrap();
        let known = Representation::standard(n, &t).unwrap();
        let taus: Vec<Gen> = (1..n).map(Gen::tau).collect();
        let sys = assemble_extension(&pres, &known, &taus).unwrap();
        println!(
            "n = {n}: {} unknowns, {} equations ({} identically zero, {} duplicates dropped)",
            sys.unknowns.len(),
            sys.equations.len(),
            sys.discarded_zero,
            sys.discarded_duplicate
        );
        for k in 0..sys.equations.len().min(6) {
            println!("  {} = 0", sys.render_equation(k));
        }
        let fam = solve_linear(&sys).unwrap();
        println!("  free: {:?}", fam.free_names());
        println!("  {}", serde_json::to_string(&fam.to_json()["bindings"]).unwrap());
        println!("  representable over Z[t, t^-1]: {}", laurent_representability(&fam).representable);
        if let Some(check) = block_form_check(&fam) {
            println!(
                "  block form: raw {}, after setting {:?} to 1: {}",
                check.raw_matches, check.imposed, check.matches_after_imposing
            );
        }
    }
}
