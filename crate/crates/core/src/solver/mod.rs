//! Solving for unknown generator images.
//!
//! Unknown matrix entries become symbolic variables, every relation of a
//! presentation is expanded into scalar equations, and the linear part is
//! eliminated over `Q(t)`.

mod involution;
mod linear;
mod sympoly;

use std::collections::{BTreeMap, HashSet};

use serde_json::json;

use crate::laurent::LaurentPoly;
use crate::matrix::{Matrix, MatrixError};
use crate::presentation::{Gen, Presentation};
use crate::ratfunc::RationalFunction;
use crate::rep::Representation;
use crate::ring::Ring;

pub use involution::{
    involution_classify, involution_names, involution_system, solve_involution_2x2,
    InvolutionSolution,
};
pub use linear::LinearExpr;
pub use sympoly::{SymPoly, VarId};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SolverError {
    #[error("{0}")]
    ModeMismatch(String),
    #[error("no image, known or unknown, for {0}")]
    UnassignedGenerator(Gen),
    #[error("inverse of the unknown generator {0} appears in a relation")]
    UnknownInverse(Gen),
    #[error("system has {0} nonlinear equations")]
    NonlinearSystem(usize),
    #[error("inconsistent equation: {witness} = 0")]
    Inconsistent { witness: String },
    #[error("matrix is not an involution")]
    NotInvolution,
    #[error("involution matches none of the five families")]
    Unclassifiable,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Where an equation came from: relation text and matrix entry (zero based).
#[derive(Debug, Clone, PartialEq)]
pub struct EquationSource {
    pub relation: String,
    pub row: usize,
    pub col: usize,
}

/// Scalar equations `expr = 0` in named unknowns.
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    pub unknowns: Vec<String>,
    pub equations: Vec<LinearExpr>,
    pub sources: Vec<EquationSource>,
    pub nonlinear_residue: Vec<SymPoly>,
    /// Identically zero entries of relations that involve an unknown.
    pub discarded_zero: usize,
    /// Entries equal to an earlier equation up to sign.
    pub discarded_duplicate: usize,
    /// Unknown generators and their entry variables in row-major order.
    pub layout: Vec<(Gen, Vec<VarId>)>,
    pub dim: usize,
}

impl ConstraintSystem {
    pub fn var_id(&self, name: &str) -> Option<VarId> {
        self.unknowns.iter().position(|u| u == name)
    }

    pub fn render_equation(&self, k: usize) -> String {
        self.equations[k].render(&self.unknowns)
    }
}

/// Variable names for the entries of unknown generator images:
/// `a, b, c, d` for one `2x2` unknown, `a1, .., i1, a2, .., i2` for
/// several `3x3` unknowns of one kind.
pub fn default_names(unknown_gens: &[Gen], dim: usize) -> Vec<(Gen, Vec<String>)> {
    let same_kind = unknown_gens.windows(2).all(|w| w[0].kind == w[1].kind);
    unknown_gens
        .iter()
        .map(|g| {
            let names = (0..dim * dim)
                .map(|k| {
                    let base = if dim * dim <= 26 {
                        char::from(b'a' + k as u8).to_string()
                    } else {
                        format!("x{}_{}", k / dim + 1, k % dim + 1)
                    };
                    if unknown_gens.len() == 1 {
                        base
                    } else if same_kind {
                        format!("{base}{}", g.index)
                    } else {
                        format!("{base}_{g}")
                    }
                })
                .collect();
            (*g, names)
        })
        .collect()
}

fn lift(m: &Matrix<LaurentPoly>) -> Matrix<SymPoly> {
    m.map(|x| SymPoly::constant(RationalFunction::from(x.clone())))
}

/// Expands every relation of `pres` into scalar equations. `known` must
/// cover every generator not listed in `unknowns`.
pub fn assemble(
    pres: &Presentation,
    known: &BTreeMap<Gen, Matrix<SymPoly>>,
    unknowns: &[(Gen, Vec<String>)],
    dim: usize,
) -> Result<ConstraintSystem, SolverError> {
    let gens = pres.generators();
    for (g, names) in unknowns {
        if !gens.contains(g) {
            return Err(SolverError::ModeMismatch(format!(
                "{g} is not a generator of the {:?} presentation on {} strands",
                pres.mode, pres.n
            )));
        }
        if names.len() != dim * dim {
            return Err(SolverError::ModeMismatch(format!(
                "{g} needs {} names, got {}",
                dim * dim,
                names.len()
            )));
        }
    }
    let mut names = Vec::new();
    let mut images: BTreeMap<Gen, Matrix<SymPoly>> = BTreeMap::new();
    let mut layout = Vec::new();
    for (g, entry_names) in unknowns {
        let ids: Vec<VarId> = (names.len()..names.len() + dim * dim).collect();
        names.extend(entry_names.iter().cloned());
        images.insert(*g, Matrix::from_vec(dim, dim, ids.iter().map(|&v| SymPoly::var(v)).collect()));
        layout.push((*g, ids));
    }
    let mut inverses: BTreeMap<Gen, Matrix<SymPoly>> = BTreeMap::new();
    for g in &gens {
        if images.contains_key(g) {
            continue;
        }
        let m = known.get(g).ok_or(SolverError::UnassignedGenerator(*g))?;
        if m.rows() != dim || m.cols() != dim {
            return Err(SolverError::ModeMismatch(format!(
                "{g} has a {}x{} image, expected {dim}x{dim}",
                m.rows(),
                m.cols()
            )));
        }
        images.insert(*g, m.clone());
    }
    let unknown_set: HashSet<Gen> = unknowns.iter().map(|(g, _)| *g).collect();

    let mut eval = |w: &crate::presentation::Word| -> Result<Matrix<SymPoly>, SolverError> {
        let mut acc = Matrix::identity(dim);
        for l in w.letters() {
            let m = if l.exp == 1 {
                images[&l.gen].clone()
            } else {
                if unknown_set.contains(&l.gen) {
                    return Err(SolverError::UnknownInverse(l.gen));
                }
                match inverses.get(&l.gen) {
                    Some(m) => m.clone(),
                    None => {
                        let inv = images[&l.gen].inverse()?;
                        inverses.insert(l.gen, inv.clone());
                        inv
                    }
                }
            };
            acc = acc.mul(&m)?;
        }
        Ok(acc)
    };

    let mut sys = ConstraintSystem {
        unknowns: names,
        equations: Vec::new(),
        sources: Vec::new(),
        nonlinear_residue: Vec::new(),
        discarded_zero: 0,
        discarded_duplicate: 0,
        layout,
        dim,
    };
    let mut seen: HashSet<SymPoly> = HashSet::new();
    for rel in &pres.relations {
        let involves_unknown = rel
            .lhs
            .letters()
            .iter()
            .chain(rel.rhs.letters())
            .any(|l| unknown_set.contains(&l.gen));
        let diff = eval(&rel.lhs)?.sub(&eval(&rel.rhs)?)?;
        for r in 0..dim {
            for c in 0..dim {
                let e = diff.get(r, c);
                if e.is_zero() {
                    if involves_unknown {
                        sys.discarded_zero += 1;
                    }
                    continue;
                }
                if seen.contains(e) || seen.contains(&e.neg()) {
                    sys.discarded_duplicate += 1;
                    continue;
                }
                seen.insert(e.clone());
                match LinearExpr::from_poly(e) {
                    Some(lin) => {
                        sys.equations.push(lin);
                        sys.sources.push(EquationSource {
                            relation: rel.to_string(),
                            row: r,
                            col: c,
                        });
                    }
                    None => sys.nonlinear_residue.push(e.clone()),
                }
            }
        }
    }
    Ok(sys)
}

/// Assembles the system for extending `known` to the generators
/// `unknown_gens`, with entry names from [`default_names`].
pub fn assemble_extension(
    pres: &Presentation,
    known: &Representation<LaurentPoly>,
    unknown_gens: &[Gen],
) -> Result<ConstraintSystem, SolverError> {
    if known.n != pres.n || known.mode > pres.mode {
        return Err(SolverError::ModeMismatch(format!(
            "representation ({} strands, {:?}) does not restrict from presentation ({} strands, {:?})",
            known.n, known.mode, pres.n, pres.mode
        )));
    }
    let images: BTreeMap<Gen, Matrix<SymPoly>> = known
        .images()
        .filter(|(g, _)| !unknown_gens.contains(g))
        .map(|(g, m)| (*g, lift(m)))
        .collect();
    assemble(pres, &images, &default_names(unknown_gens, known.dim), known.dim)
}

/// Solved linear system: every pivot unknown bound to an affine expression
/// in the free unknowns.
#[derive(Debug, Clone)]
pub struct SolutionFamily {
    pub unknowns: Vec<String>,
    pub free: Vec<VarId>,
    pub bindings: BTreeMap<VarId, LinearExpr>,
    pub discarded_zero: usize,
    pub discarded_duplicate: usize,
    pub layout: Vec<(Gen, Vec<VarId>)>,
    pub dim: usize,
    /// Nonlinear equations left after substituting the bindings.
    pub residue: Vec<SymPoly>,
}

impl SolutionFamily {
    /// The value of any unknown: its binding, or itself when free.
    pub fn value(&self, v: VarId) -> LinearExpr {
        self.bindings.get(&v).cloned().unwrap_or_else(|| LinearExpr::var(v))
    }

    pub fn free_names(&self) -> Vec<String> {
        self.free.iter().map(|&v| self.unknowns[v].clone()).collect()
    }

    pub fn binding_of(&self, name: &str) -> Option<String> {
        let v = self.unknowns.iter().position(|u| u == name)?;
        Some(self.value(v).render(&self.unknowns))
    }

    /// The solved image of an unknown generator.
    pub fn image(&self, g: Gen) -> Option<Vec<Vec<LinearExpr>>> {
        let (_, ids) = self.layout.iter().find(|(h, _)| *h == g)?;
        Some(ids.chunks(self.dim).map(|row| row.iter().map(|&v| self.value(v)).collect()).collect())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let bindings: serde_json::Map<String, serde_json::Value> = self
            .bindings
            .iter()
            .map(|(v, e)| (self.unknowns[*v].clone(), json!(e.render(&self.unknowns))))
            .collect();
        json!({
            "free": self.free_names(),
            "bindings": bindings,
            "discarded_zero_equations": self.discarded_zero,
            "discarded_duplicate_equations": self.discarded_duplicate,
            "nonlinear_residue": self
                .residue
                .iter()
                .map(|p| p.render(&self.unknowns))
                .collect::<Vec<_>>(),
        })
    }

    /// Substitutes random rational values for `t` and the free unknowns
    /// into every equation of `sys`; returns the indices that fail.
    pub fn spot_check(&self, sys: &ConstraintSystem, rng: &mut impl rand::Rng) -> Vec<usize> {
        let t0 = loop {
            let v: i64 = rng.gen_range(-9..=9);
            if v != 0 {
                break v;
            }
        };
        let mut values = BTreeMap::new();
        for &v in &self.free {
            values.insert(v, RationalFunction::from_i64(rng.gen_range(-20..=20)));
        }
        for (&v, e) in &self.bindings {
            values.insert(v, e.eval(&values).expect("bindings use free unknowns only"));
        }
        let t0 = crate::ring::Q::from_integer(t0.into());
        sys.equations
            .iter()
            .enumerate()
            .filter(|(_, eq)| {
                let val = eq.eval(&values).expect("all unknowns valued");
                !Ring::is_zero(&val.eval(&t0).expect("no pole at the sample point"))
            })
            .map(|(k, _)| k)
            .collect()
    }
}

fn render_rows(m: &[Vec<LinearExpr>], names: &[String]) -> Vec<Vec<String>> {
    m.iter().map(|row| row.iter().map(|e| e.render(names)).collect()).collect()
}

fn is_unit_coeff(c: &RationalFunction) -> bool {
    c.is_one() || c.neg().is_one()
}

/// Solves a purely linear system.
pub fn solve_linear(sys: &ConstraintSystem) -> Result<SolutionFamily, SolverError> {
    if !sys.nonlinear_residue.is_empty() {
        return Err(SolverError::NonlinearSystem(sys.nonlinear_residue.len()));
    }
    solve_linear_part(sys)
}

/// Eliminates the linear equations and substitutes the result into the
/// nonlinear ones, which are returned as the residue.
///
/// Equations are processed in order and the rows are kept fully reduced.
/// The pivot of a new row is the latest unknown (in reading order) with a
/// coefficient of `±1`, or the latest unknown if there is none, so the
/// earliest entries of each generator tend to stay free.
pub fn solve_linear_part(sys: &ConstraintSystem) -> Result<SolutionFamily, SolverError> {
    let mut rows: Vec<(VarId, LinearExpr)> = Vec::new();
    for (k, eq) in sys.equations.iter().enumerate() {
        let mut e = eq.clone();
        for (p, row) in &rows {
            let c = e.coeff(*p);
            if !c.is_zero() {
                e = e.sub(&row.scale(&c));
            }
        }
        if e.coeffs.is_empty() {
            if e.constant.is_zero() {
                continue;
            }
            return Err(SolverError::Inconsistent {
                witness: sys.render_equation(k),
            });
        }
        let pivot = e
            .coeffs
            .iter()
            .rev()
            .find(|(_, c)| is_unit_coeff(c))
            .or_else(|| e.coeffs.iter().next_back())
            .map(|(v, _)| *v)
            .expect("nonempty");
        let inv = RationalFunction::one()
            .div_exact(&e.coeff(pivot))
            .expect("nonzero pivot");
        let e = e.scale(&inv);
        for (_, row) in rows.iter_mut() {
            let c = row.coeff(pivot);
            if !c.is_zero() {
                *row = row.sub(&e.scale(&c));
            }
        }
        rows.push((pivot, e));
    }
    let pivots: HashSet<VarId> = rows.iter().map(|(p, _)| *p).collect();
    let bindings: BTreeMap<VarId, LinearExpr> = rows
        .into_iter()
        .map(|(p, row)| {
            let mut rest = row;
            rest.coeffs.remove(&p);
            (p, rest.scale(&RationalFunction::one().neg()))
        })
        .collect();
    let free: Vec<VarId> = (0..sys.unknowns.len()).filter(|v| !pivots.contains(v)).collect();
    let subst: BTreeMap<VarId, SymPoly> = bindings.iter().map(|(v, e)| (*v, e.to_poly())).collect();
    let residue = sys
        .nonlinear_residue
        .iter()
        .map(|p| p.substitute(&subst))
        .filter(|p| !p.is_zero())
        .collect();
    Ok(SolutionFamily {
        unknowns: sys.unknowns.clone(),
        free,
        bindings,
        discarded_zero: sys.discarded_zero,
        discarded_duplicate: sys.discarded_duplicate,
        layout: sys.layout.clone(),
        dim: sys.dim,
        residue,
    })
}

/// Bindings whose values are not in `Z[t, t^-1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RepresentabilityReport {
    pub representable: bool,
    pub flagged: Vec<(String, String)>,
}

pub fn laurent_representability(fam: &SolutionFamily) -> RepresentabilityReport {
    let flagged: Vec<(String, String)> = fam
        .bindings
        .iter()
        .filter(|(_, e)| {
            e.constant.as_laurent().is_none() || e.coeffs.values().any(|c| c.as_laurent().is_none())
        })
        .map(|(v, e)| (fam.unknowns[*v].clone(), e.render(&fam.unknowns)))
        .collect();
    RepresentabilityReport {
        representable: flagged.is_empty(),
        flagged,
    }
}

/// Comparison of a solved singular extension with the block form
/// `I ⊕ [[a, ct], [c, a]] ⊕ I` at every singular generator.
#[derive(Debug, Clone)]
pub struct FormCheck {
    pub a: String,
    pub c: String,
    pub raw_matches: bool,
    pub raw_mismatches: Vec<String>,
    /// Outer diagonal unknowns set to 1 before the second comparison.
    pub imposed: Vec<String>,
    pub matches_after_imposing: bool,
    pub mismatches_after_imposing: Vec<String>,
    /// Free unknowns other than those carrying `a` and `c`.
    pub extra_free: Vec<String>,
    pub images: Vec<(Gen, Vec<Vec<String>>)>,
}

impl FormCheck {
    pub fn to_json(&self) -> serde_json::Value {
        let images: serde_json::Map<String, serde_json::Value> = self
            .images
            .iter()
            .map(|(g, m)| (g.to_string(), json!(m)))
            .collect();
        json!({
            "a": self.a,
            "c": self.c,
            "raw_matches": self.raw_matches,
            "raw_mismatches": self.raw_mismatches,
            "extra_free": self.extra_free,
            "imposed_outer_entries_one": self.imposed,
            "matches_after_imposing": self.matches_after_imposing,
            "mismatches_after_imposing": self.mismatches_after_imposing,
            "images": images,
        })
    }
}

fn expected_block_form(a: &LinearExpr, c: &LinearExpr, i: usize, n: usize) -> Vec<Vec<LinearExpr>> {
    let t = RationalFunction::t();
    let entry = |r: usize, col: usize| {
        let (bi, bj) = (r as isize - (i as isize - 1), col as isize - (i as isize - 1));
        match (bi, bj) {
            (0, 0) | (1, 1) => a.clone(),
            (0, 1) => c.scale(&t),
            (1, 0) => c.clone(),
            _ if r == col => LinearExpr::constant(RationalFunction::one()),
            _ => LinearExpr::zero(),
        }
    };
    (0..n).map(|r| (0..n).map(|col| entry(r, col)).collect()).collect()
}

fn compare_form(fam: &SolutionFamily, a: &LinearExpr, c: &LinearExpr, subst: &BTreeMap<VarId, LinearExpr>) -> Vec<String> {
    let n = fam.dim;
    let mut out = Vec::new();
    for (g, _) in &fam.layout {
        let got = fam.image(*g).expect("layout generator");
        let want = expected_block_form(a, c, g.index, n);
        for r in 0..n {
            for col in 0..n {
                let lhs = apply(&got[r][col], subst);
                if lhs != want[r][col] {
                    out.push(format!(
                        "{g}[{},{}]: {} vs {}",
                        r + 1,
                        col + 1,
                        lhs.render(&fam.unknowns),
                        want[r][col].render(&fam.unknowns)
                    ));
                }
            }
        }
    }
    out
}

fn apply(e: &LinearExpr, subst: &BTreeMap<VarId, LinearExpr>) -> LinearExpr {
    subst.iter().fold(e.clone(), |acc, (v, val)| acc.substitute(*v, val))
}

/// Checks a solved singular extension against the block form, first as
/// solved and then after setting every free outer diagonal entry to 1.
/// `a` and `c` are read off the first singular generator's block.
pub fn block_form_check(fam: &SolutionFamily) -> Option<FormCheck> {
    let (g0, _) = fam.layout.first()?;
    let first = fam.image(*g0)?;
    let i0 = g0.index - 1;
    let a = first[i0][i0].clone();
    let c = first[i0 + 1][i0].clone();
    let raw = compare_form(fam, &a, &c, &BTreeMap::new());

    let mut subst = BTreeMap::new();
    for (g, _) in &fam.layout {
        let img = fam.image(*g)?;
        for k in 0..fam.dim {
            if k + 1 == g.index || k == g.index {
                continue;
            }
            let e = &img[k][k];
            if e.constant.is_zero() && e.coeffs.len() == 1 {
                let (&v, coef) = e.coeffs.iter().next().expect("one term");
                if coef.is_one() && fam.free.contains(&v) {
                    subst.insert(v, LinearExpr::constant(RationalFunction::one()));
                }
            }
        }
    }
    let imposed_a = apply(&a, &subst);
    let imposed_c = apply(&c, &subst);
    let after = compare_form(fam, &imposed_a, &imposed_c, &subst);

    let ac_vars: HashSet<VarId> = a.coeffs.keys().chain(c.coeffs.keys()).copied().collect();
    Some(FormCheck {
        a: a.render(&fam.unknowns),
        c: c.render(&fam.unknowns),
        raw_matches: raw.is_empty(),
        raw_mismatches: raw,
        imposed: subst.keys().map(|&v| fam.unknowns[v].clone()).collect(),
        matches_after_imposing: after.is_empty(),
        mismatches_after_imposing: after,
        extra_free: fam
            .free
            .iter()
            .filter(|v| !ac_vars.contains(v))
            .map(|&v| fam.unknowns[v].clone())
            .collect(),
        images: fam
            .layout
            .iter()
            .map(|(g, _)| (*g, render_rows(&fam.image(*g).expect("layout"), &fam.unknowns)))
            .collect(),
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Mode;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sb(n: usize) -> (ConstraintSystem, SolutionFamily) {
        let pres = Presentation::build(n, Mode::Singular, false).unwrap();
        let rep = Representation::standard(n, &LaurentPoly::t()).unwrap();
        let taus: Vec<Gen> = (1..n).map(Gen::tau).collect();
        let sys = assemble_extension(&pres, &rep, &taus).unwrap();
        let fam = solve_linear_part(&sys).unwrap();
        (sys, fam)
    }

    #[test]
    fn sb2_equations_and_family() {
        let (sys, fam) = sb(2);
        assert_eq!(sys.unknowns, ["a", "b", "c", "d"]);
        assert_eq!(sys.equations.len(), 3);
        assert!(sys.nonlinear_residue.is_empty());
        assert_eq!(fam.free_names(), ["a", "c"]);
        assert_eq!(fam.binding_of("d").unwrap(), "a");
        assert_eq!(fam.binding_of("b").unwrap(), "c*t^1");
    }

    #[test]
    fn sb3_counts() {
        let (sys, fam) = sb(3);
        assert_eq!(sys.unknowns.len(), 18);
        assert_eq!(sys.equations.len(), 32);
        assert_eq!(sys.discarded_zero, 2);
        assert_eq!(sys.discarded_duplicate, 2);
        assert_eq!(fam.free_names(), ["a1", "d1", "i1"]);
        let check = block_form_check(&fam).unwrap();
        assert!(!check.raw_matches);
        assert_eq!(check.extra_free, ["i1"]);
        assert_eq!(check.imposed, ["i1"]);
        assert!(check.matches_after_imposing, "{:?}", check.mismatches_after_imposing);
    }

    #[test]
    fn round_trip_substitution() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..=3 {
            let (sys, fam) = sb(n);
            for _ in 0..20 {
                assert!(fam.spot_check(&sys, &mut rng).is_empty());
            }
        }
    }

    #[test]
    fn nothing_unknown_gives_empty_system() {
        let pres = Presentation::build(4, Mode::Braid, true).unwrap();
        let rep = Representation::standard(4, &LaurentPoly::t()).unwrap();
        let sys = assemble_extension(&pres, &rep, &[]).unwrap();
        assert!(sys.equations.is_empty() && sys.nonlinear_residue.is_empty());
    }

    #[test]
    fn inconsistent_toy_system() {
        let one = RationalFunction::one();
        let sys = ConstraintSystem {
            unknowns: vec!["a".into()],
            equations: vec![
                LinearExpr::var(0).sub(&LinearExpr::constant(one.clone())),
                LinearExpr::var(0).sub(&LinearExpr::constant(one.add(&one))),
            ],
            sources: Vec::new(),
            nonlinear_residue: Vec::new(),
            discarded_zero: 0,
            discarded_duplicate: 0,
            layout: Vec::new(),
            dim: 1,
        };
        match solve_linear(&sys) {
            Err(SolverError::Inconsistent { witness }) => assert_eq!(witness, "a - 2"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn representability_flags_denominators() {
        let y: RationalFunction = "1/(t+1)".parse().unwrap();
        let mut fam = sb(2).1;
        assert!(laurent_representability(&fam).representable);
        fam.bindings.insert(3, LinearExpr::var(0).scale(&y));
        let rep = laurent_representability(&fam);
        assert!(!rep.representable);
        assert_eq!(rep.flagged[0].0, "d");
    }

    #[test]
    fn unassigned_and_mode_errors() {
        let pres = Presentation::build(2, Mode::Singular, false).unwrap();
        let err = assemble(&pres, &BTreeMap::new(), &default_names(&[Gen::tau(1)], 2), 2);
        assert_eq!(err.unwrap_err(), SolverError::UnassignedGenerator(Gen::sigma(1)));
        let braid = Presentation::build(2, Mode::Braid, true).unwrap();
        let rep = Representation::standard(2, &LaurentPoly::t()).unwrap();
        assert!(matches!(
            assemble_extension(&braid, &rep, &[Gen::tau(1)]),
            Err(SolverError::ModeMismatch(_))
        ));
    }
}
