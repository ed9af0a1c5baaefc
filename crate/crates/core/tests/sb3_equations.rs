//! The SB_3 system against the reference list of 32 equations.

use std::collections::BTreeMap;

use braidrep::presentation::Mode;
use braidrep::solver::{assemble_extension, ConstraintSystem, LinearExpr};
use braidrep::{Gen, LaurentPoly, Presentation, RationalFunction, Representation, Ring};

const REFERENCE: [&str; 32] = [
    "-b_1+d_1t", "-a_1t+e_1t", "-c_1+f_1t", "a_1-e_1", "c_1-f_1", "g_1-h_1", "h_1-g_1t",
    "b_2-c_2", "c_2-b_2t", "-d_2+g_2t", "-f_2+h_2t", "-e_2t+i_2t", "d_2-g_2", "e_2-i_2",
    "-b_2+g_1t^2", "-c_2+h_1t^2", "-a_2t^2+i_1t^2", "a_1-e_2", "b_1-f_2", "c_1-d_2t^2",
    "d_1-h_2", "e_1-i_2", "f_1-g_2t^2", "-c_1+d_2t", "-a_1t+e_2t", "-b_1t+f_2t",
    "-f_1+g_2t", "-d_1t+h_2t", "-e_1t+i_2t", "a_2-i_1", "b_2-g_1t", "c_2-h_1t",
];

fn system() -> ConstraintSystem {
    let pres = Presentation::build(3, Mode::Singular, false).unwrap();
    let known = Representation::standard(3, &LaurentPoly::t()).unwrap();
    assemble_extension(&pres, &known, &[Gen::tau(1), Gen::tau(2)]).unwrap()
}

/// Parses terms like `-a_1t^2` into a linear expression.
fn parse(sys: &ConstraintSystem, src: &str) -> LinearExpr {
    let mut out = LinearExpr::zero();
    let mut rest = src;
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let name = format!("{}{}", &term[0..1], &term[2..3]);
        let power = match &term[3..] {
            "" => 0,
            "t" => 1,
            p => p.trim_start_matches("t^").parse().unwrap(),
        };
        let coef = RationalFunction::from(LaurentPoly::monomial(sign, power));
        let v = sys.var_id(&name).unwrap_or_else(|| panic!("unknown {name}"));
        out = out.add(&LinearExpr::var(v).scale(&coef));
    }
    out
}

fn canonical_up_to_sign(e: &LinearExpr) -> LinearExpr {
    let neg = e.scale(&RationalFunction::from_i64(-1));
    if format!("{neg:?}") < format!("{e:?}") {
        neg
    } else {
        e.clone()
    }
}

#[test]
fn eighteen_unknowns_and_thirty_two_equations() {
    let sys = system();
    assert_eq!(sys.unknowns.len(), 18);
    assert_eq!(sys.equations.len(), 32);
    assert!(sys.nonlinear_residue.is_empty());
}

#[test]
fn equations_match_reference_list_up_to_sign() {
    let sys = system();
    let mut reference: BTreeMap<String, usize> = BTreeMap::new();
    for src in REFERENCE {
        *reference.entry(format!("{:?}", canonical_up_to_sign(&parse(&sys, src)))).or_default() += 1;
    }
    let mut ours: BTreeMap<String, usize> = BTreeMap::new();
    for e in &sys.equations {
        *ours.entry(format!("{:?}", canonical_up_to_sign(e))).or_default() += 1;
    }
    let total = |m: &BTreeMap<String, usize>| m.values().sum::<usize>();
    assert_eq!(total(&reference), 32);
    let only_ours: Vec<String> = sys
        .equations
        .iter()
        .filter(|e| !reference.contains_key(&format!("{:?}", canonical_up_to_sign(e))))
        .map(|e| e.render(&sys.unknowns))
        .collect();
    let only_reference: Vec<&str> = REFERENCE
        .iter()
        .copied()
        .filter(|src| !ours.contains_key(&format!("{:?}", canonical_up_to_sign(&parse(&sys, src)))))
        .collect();
    assert!(
        only_ours.is_empty() && only_reference.is_empty() && ours == reference,
        "ours only: {only_ours:?}\nreference only: {only_reference:?}"
    );
}
