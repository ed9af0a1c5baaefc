//! Involutive `2x2` matrices `[[p, q], [r, s]]`.

use std::collections::BTreeMap;

use serde_json::json;

use crate::matrix::Matrix;
use crate::ratfunc::RationalFunction;
use crate::rep::InvolutionFamily;
use crate::ring::{Field, Ring, Q};

use super::sympoly::{SymPoly, VarId};
use super::SolverError;

const P: VarId = 0;
const Q_: VarId = 1;
const R: VarId = 2;
const S: VarId = 3;

pub fn involution_names() -> Vec<String> {
    ["p", "q", "r", "s"].iter().map(|s| s.to_string()).collect()
}

/// The entries of `N^2 - I` for `N = [[p, q], [r, s]]`, row-major.
pub fn involution_system() -> Vec<SymPoly> {
    let nu = Matrix::from_vec(2, 2, (0..4).map(SymPoly::var).collect());
    let sq = nu.mul(&nu).expect("square");
    sq.sub(&Matrix::identity(2)).expect("square").entries().to_vec()
}

/// One family of solutions: `nu = numerator / denominator`.
#[derive(Debug, Clone)]
pub struct InvolutionSolution {
    pub family: u8,
    pub conditions: Vec<String>,
    pub free: Vec<String>,
    pub bindings: BTreeMap<String, String>,
    pub numerator: Matrix<SymPoly>,
    pub denominator: SymPoly,
}

impl InvolutionSolution {
    /// `N^2 = den^2 I`, i.e. `nu^2 = I` as rational functions of the
    /// free parameters.
    pub fn squares_to_identity(&self) -> bool {
        let d2 = self.denominator.mul(&self.denominator);
        self.numerator.mul(&self.numerator).ok() == Some(Matrix::scalar(2, &d2))
    }

    pub fn render_matrix(&self) -> Vec<Vec<String>> {
        let names = involution_names();
        let den = &self.denominator;
        (0..2)
            .map(|r| {
                (0..2)
                    .map(|c| {
                        let e = self.numerator.get(r, c);
                        let single_var = match den.vars().as_slice() {
                            [v] if *den == SymPoly::var(*v) => Some(*v),
                            _ => None,
                        };
                        let quotient = e
                            .div_exact(den)
                            .or_else(|| single_var.and_then(|v| e.div_by_var(v)));
                        match quotient {
                            Some(v) => v.render(&names),
                            None => format!("({})/{}", e.render(&names), den.render(&names)),
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "family": self.family,
            "conditions": self.conditions,
            "free": self.free,
            "bindings": self.bindings,
            "matrix": self.render_matrix(),
            "squares_to_identity": self.squares_to_identity(),
        })
    }
}

fn substitute_all(eqs: &[SymPoly], v: VarId, value: &SymPoly) -> Vec<SymPoly> {
    let map = BTreeMap::from([(v, value.clone())]);
    eqs.iter().map(|e| e.substitute(&map)).collect()
}

/// Solves `e = 0` for `v` when `e` has a constant nonzero coefficient in `v`.
fn solve_for(e: &SymPoly, v: VarId) -> SymPoly {
    let coef = e.coefficient_of(v);
    let rest = e.sub(&coef.mul(&SymPoly::var(v)));
    rest.neg().div_exact(&coef).expect("constant coefficient")
}

/// Rational roots of a polynomial in `v` alone.
fn univariate_roots(e: &SymPoly, v: VarId) -> Vec<Q> {
    let mut coeffs = vec![Q::from_i64(0); e.degree_in(v) + 1];
    for (m, c) in e.terms() {
        debug_assert!(m.iter().all(|&x| x == v));
        coeffs[m.len()] = c.as_rational().expect("rational coefficient");
    }
    Q::roots_in_field(&coeffs)
}

fn constant(v: &Q) -> SymPoly {
    SymPoly::constant(RationalFunction::from_rational(v))
}

/// The five families of involutions, derived by the case split
/// `q != 0`; `q = 0, r != 0`; `q = 0, r = 0`.
pub fn solve_involution_2x2() -> Vec<InvolutionSolution> {
    let names = involution_names();
    let eqs = involution_system();
    let var = SymPoly::var;
    let mut out = Vec::new();

    // q != 0: the (1,2) entry is q(p + s)
    let s_val = solve_for(&eqs[1].div_by_var(Q_).expect("q divides"), S);
    let eqs1 = substitute_all(&eqs, S, &s_val);
    let r_coef = eqs1[0].coefficient_of(R);
    let r_num = eqs1[0].sub(&r_coef.mul(&var(R))).neg();
    assert!(eqs1.iter().all(|e| e.substitute_fraction(R, &r_num, &r_coef).is_zero()));
    out.push(InvolutionSolution {
        family: 1,
        conditions: vec!["q != 0".into(), "q divides 1 - p^2".into()],
        free: vec!["p".into(), "q".into()],
        bindings: BTreeMap::from([
            ("s".to_string(), s_val.render(&names)),
            (
                "r".to_string(),
                format!("({})/{}", r_num.render(&names), r_coef.render(&names)),
            ),
        ]),
        numerator: Matrix::from_rows(vec![
            vec![var(P).mul(&r_coef), var(Q_).mul(&r_coef)],
            vec![r_num.clone(), s_val.mul(&r_coef)],
        ]),
        denominator: r_coef,
    });

    let eqs0 = substitute_all(&eqs, Q_, &SymPoly::zero());
    // q = 0, r != 0: the (2,1) entry is r(p + s)
    let s_val = solve_for(&eqs0[2].div_by_var(R).expect("r divides"), S);
    let eqs2 = substitute_all(&eqs0, S, &s_val);
    for p0 in univariate_roots(&eqs2[0], P) {
        let rest = substitute_all(&eqs2, P, &constant(&p0));
        if !rest.iter().all(SymPoly::is_zero) {
            continue;
        }
        let s0 = s_val.substitute(&BTreeMap::from([(P, constant(&p0))]));
        let family = if p0 < Q::from_i64(0) { 2 } else { 3 };
        out.push(InvolutionSolution {
            family,
            conditions: vec!["q = 0".into()],
            free: vec!["r".into()],
            bindings: BTreeMap::from([
                ("p".to_string(), p0.to_string()),
                ("q".to_string(), "0".to_string()),
                ("s".to_string(), s0.render(&names)),
            ]),
            numerator: Matrix::from_rows(vec![
                vec![constant(&p0), SymPoly::zero()],
                vec![var(R), s0],
            ]),
            denominator: SymPoly::one(),
        });
    }

    // q = 0, r = 0: p^2 = s^2 = 1; p = -s is family 2 or 3 at r = 0
    let eqs3 = substitute_all(&eqs0, R, &SymPoly::zero());
    for p0 in univariate_roots(&eqs3[0], P) {
        for s0 in univariate_roots(&eqs3[3], S) {
            if p0 != s0 {
                continue;
            }
            let family = if p0 < Q::from_i64(0) { 4 } else { 5 };
            out.push(InvolutionSolution {
                family,
                conditions: vec!["q = 0".into(), "r = 0".into()],
                free: Vec::new(),
                bindings: ["p", "q", "r", "s"]
                    .iter()
                    .zip([&p0, &Q::from_i64(0), &Q::from_i64(0), &s0])
                    .map(|(k, v)| (k.to_string(), v.to_string()))
                    .collect(),
                numerator: Matrix::scalar(2, &constant(&p0)),
                denominator: SymPoly::one(),
            });
        }
    }
    out.sort_by_key(|f| f.family);
    out
}

/// Finds the family of an involution over a field and recovers its
/// parameters.
pub fn involution_classify<F: Field>(m: &Matrix<F>) -> Result<InvolutionFamily<F>, SolverError> {
    if m.rows() != 2 || m.cols() != 2 || !m.mul(m)?.is_identity() {
        return Err(SolverError::NotInvolution);
    }
    let (p, q, r, s) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    let one = F::one();
    let minus = one.neg();
    let fam = if !q.is_zero() {
        InvolutionFamily::General { p: p.clone(), q: q.clone() }
    } else if *p == minus && *s == one {
        InvolutionFamily::LowerLeftNeg { r: r.clone() }
    } else if *p == one && *s == minus {
        InvolutionFamily::LowerLeftPos { r: r.clone() }
    } else if *p == minus && *s == minus {
        InvolutionFamily::MinusIdentity
    } else if *p == one && *s == one {
        InvolutionFamily::Identity
    } else {
        return Err(SolverError::Unclassifiable);
    };
    match fam.matrix() {
        Ok(rebuilt) if rebuilt == *m => Ok(fam),
        _ => Err(SolverError::Unclassifiable),
    }
}
