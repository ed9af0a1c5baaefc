//! Sweeps the singular extension over a grid of t and (a, c) and compares
//! each verdict with the predicted one.

use braidrep::irreducibility::{grid_cells, grid_report, is_irreducible, SpecializedRep};
use braidrep::{sample, Q};

fn main() {
    let q = |n: i64, d: i64| Q::new(n.into(), d.into());
    let spec = SpecializedRep::singular_extension(3, &q(1, 1), &q(2, 1), &q(-1, 1)).unwrap();
    let v = is_irreducible(&spec);
    println!("n = 3, t = 1, a = 2, c = -1: {}", v.to_json());

    let mut rng = sample::rng(sample::seed_from_env());
    let mut acs = vec![(q(2, 1), q(-1, 1)), (q(0, 1), q(1, 1)), (q(3, 1), q(-1, 1))];
    while acs.len() < 6 {
        let (a, c) = sample::ac_pair(&mut rng, &q(1, 1));
        if a != c && a != -c.clone() {
            acs.push((a, c));
        }
    }
    let cells = grid_cells(&[2, 3, 4], &[q(1, 1), q(2, 1), q(-1, 1)], &acs);
    let report = grid_report(&cells).unwrap();
    print!("{}", report.to_csv());
    println!("{}", report.summary_json());
}
