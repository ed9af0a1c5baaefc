//! Irreducibility of specialized representations.
//!
//! A set of `d x d` matrices over a field acts irreducibly over the
//! algebraic closure iff the unital algebra it generates is all of
//! `M_d`. That dimension is a rank, so exact rational data decides the
//! question over `C` without leaving `Q`.

use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::json;

use crate::laurent::LaurentPoly;
use crate::matrix::{Matrix, Subspace};
use crate::presentation::Gen;
use crate::ratfunc::RationalFunction;
use crate::rep::{ExtensionParams, RepError, Representation};
use crate::ring::{Field, Ring, Q};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IrreducibilityError {
    #[error("t must be nonzero")]
    ZeroT,
    #[error("tau block is singular: a^2 - t c^2 = 0 at t = {t0}, a = {a}, c = {c}")]
    SingularTau { t0: String, a: String, c: String },
    #[error("cannot specialize: {0}")]
    Specialization(String),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// Where `t` lives after specialization.
#[derive(Debug, Clone, PartialEq)]
pub enum TValue {
    At(Q),
    Symbolic,
}

impl fmt::Display for TValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TValue::At(v) => write!(f, "{v}"),
            TValue::Symbolic => write!(f, "t"),
        }
    }
}

/// A representation whose entries lie in a field.
#[derive(Debug, Clone)]
pub struct SpecializedRep<F> {
    pub rep: Representation<F>,
    pub t0: TValue,
}

impl SpecializedRep<Q> {
    pub fn at(rep: &Representation<LaurentPoly>, t0: &Q) -> Result<Self, IrreducibilityError> {
        if Zero::is_zero(t0) {
            return Err(IrreducibilityError::ZeroT);
        }
        let rep = rep
            .specialize(t0)
            .map_err(|e| IrreducibilityError::Specialization(e.to_string()))?;
        Ok(Self {
            rep,
            t0: TValue::At(t0.clone()),
        })
    }

    /// `singular_extension(n, a, c)` built directly over `Q`.
    pub fn singular_extension(n: usize, t0: &Q, a: &Q, c: &Q) -> Result<Self, IrreducibilityError> {
        if Zero::is_zero(t0) {
            return Err(IrreducibilityError::ZeroT);
        }
        let params = ExtensionParams::new(a.clone(), c.clone());
        if Ring::is_zero(&params.tau_det(t0)) {
            return Err(IrreducibilityError::SingularTau {
                t0: t0.to_string(),
                a: a.to_string(),
                c: c.to_string(),
            });
        }
        let rep = Representation::singular_extension(n, t0, &params, true)?;
        Ok(Self {
            rep,
            t0: TValue::At(t0.clone()),
        })
    }
}

impl SpecializedRep<RationalFunction> {
    /// Keeps `t` transcendental by passing to the fraction field.
    pub fn symbolic(rep: &Representation<LaurentPoly>) -> Self {
        Self {
            rep: rep.over_fraction_field(),
            t0: TValue::Symbolic,
        }
    }
}

impl<F: Field> SpecializedRep<F> {
    pub fn dim(&self) -> usize {
        self.rep.dim
    }

    pub fn images(&self) -> Vec<Matrix<F>> {
        self.rep.images().map(|(_, m)| m.clone()).collect()
    }

    pub fn generators(&self) -> Vec<Gen> {
        self.rep.images().map(|(g, _)| *g).collect()
    }
}

/// Dimension of the unital algebra generated by `mats`, all `d x d`.
pub fn burnside_span<F: Field>(mats: &[Matrix<F>], d: usize) -> usize {
    let full = d * d;
    let mut basis: Subspace<F> = Subspace::zero(full);
    let id = Matrix::<F>::identity(d);
    basis.try_extend(&id.vectorize());
    let mut frontier = vec![id];
    while let Some(m) = frontier.pop() {
        if basis.dim() == full {
            break;
        }
        for g in mats {
            let p = g.mul(&m).expect("square matrices of one size");
            if basis.try_extend(&p.vectorize()) {
                frontier.push(p);
            }
        }
    }
    basis.dim()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Irreducible,
    Reducible,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Irreducible => "irreducible",
            Status::Reducible => "reducible",
        })
    }
}

#[derive(Debug, Clone)]
pub struct IrreducibilityVerdict<F> {
    pub status: Status,
    pub span_dim: usize,
    pub dim: usize,
    /// A proper nonzero subspace invariant under every image, if one was
    /// found with entries in the base field.
    pub witness: Option<Subspace<F>>,
}

impl<F: Field> IrreducibilityVerdict<F> {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "status": self.status.to_string(),
            "span_dim": self.span_dim,
            "dim": self.dim,
            "witness": self.witness.as_ref().map(|w| w
                .basis
                .iter()
                .map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>()),
        })
    }
}

pub fn is_irreducible<F: Field>(spec: &SpecializedRep<F>) -> IrreducibilityVerdict<F> {
    verdict_for(&spec.images(), spec.dim())
}

/// The verdict for an arbitrary family of `d x d` matrices.
pub fn verdict_for<F: Field>(mats: &[Matrix<F>], d: usize) -> IrreducibilityVerdict<F> {
    let span_dim = burnside_span(mats, d);
    if span_dim == d * d {
        return IrreducibilityVerdict {
            status: Status::Irreducible,
            span_dim,
            dim: d,
            witness: None,
        };
    }
    let witness = find_witness(mats, d)
        .filter(|w| w.dim() > 0 && w.dim() < d && mats.iter().all(|m| w.is_invariant_under(m)));
    IrreducibilityVerdict {
        status: Status::Reducible,
        span_dim,
        dim: d,
        witness,
    }
}

fn ones<F: Field>(d: usize) -> Vec<F> {
    vec![F::one(); d]
}

fn is_proper<F: Field>(s: &Subspace<F>, d: usize) -> bool {
    s.dim() > 0 && s.dim() < d
}

fn find_witness<F: Field>(mats: &[Matrix<F>], d: usize) -> Option<Subspace<F>> {
    if d < 2 {
        return None;
    }
    if all_ones_invariant(mats, d) {
        return Some(Subspace::span(d, &[ones(d)]));
    }
    let fixed = common_fixed_space(mats, d);
    if is_proper(&fixed, d) {
        return Some(fixed);
    }
    if let Some(v) = common_eigenvector(mats, d) {
        return Some(Subspace::span(d, &[v]));
    }
    // an invariant hyperplane is the annihilator of a common eigenvector
    // of the transposes
    let transposed: Vec<Matrix<F>> = mats.iter().map(Matrix::transpose).collect();
    let w = common_eigenvector(&transposed, d)?;
    Some(Matrix::from_rows(vec![w]).nullspace())
}

/// Vectors fixed by every image: the nullspace of the stacked `M - I`.
pub fn common_fixed_space<F: Field>(mats: &[Matrix<F>], d: usize) -> Subspace<F> {
    let id = Matrix::<F>::identity(d);
    let mut rows: Vec<Vec<F>> = Vec::new();
    for m in mats {
        let diff = m.sub(&id).expect("same size");
        rows.extend((0..d).map(|i| diff.row(i).to_vec()));
    }
    if rows.is_empty() {
        return Subspace::span(d, &(0..d).map(|i| unit(d, i)).collect::<Vec<_>>());
    }
    Matrix::from_rows(rows).nullspace()
}

fn unit<F: Field>(d: usize, i: usize) -> Vec<F> {
    (0..d).map(|k| if k == i { F::one() } else { F::zero() }).collect()
}

/// A vector that is an eigenvector of every matrix, searched among
/// eigenvalues in the base field.
fn common_eigenvector<F: Field>(mats: &[Matrix<F>], d: usize) -> Option<Vec<F>> {
    let full = Subspace::span(d, &(0..d).map(|i| unit(d, i)).collect::<Vec<_>>());
    let s = refine(mats, full)?;
    s.basis.into_iter().next()
}

/// Depth-first intersection of eigenspaces, one matrix at a time.
fn refine<F: Field>(mats: &[Matrix<F>], current: Subspace<F>) -> Option<Subspace<F>> {
    let Some((m, rest)) = mats.split_first() else {
        return Some(current);
    };
    let cp = m.char_poly().ok()?;
    for lambda in F::roots_in_field(&cp) {
        let shifted = m.sub(&Matrix::scalar(m.rows(), &lambda)).expect("square");
        let inter = intersect(&current, &shifted.nullspace());
        if inter.dim() > 0 {
            if let Some(found) = refine(rest, inter) {
                return Some(found);
            }
        }
    }
    None
}

/// `U ∩ W` via the kernel of `[U^T | -W^T]`.
fn intersect<F: Field>(u: &Subspace<F>, w: &Subspace<F>) -> Subspace<F> {
    let d = u.ambient;
    if u.dim() == 0 || w.dim() == 0 {
        return Subspace::zero(d);
    }
    let k = u.dim() + w.dim();
    let sys = Matrix::from_fn(d, k, |r, c| {
        if c < u.dim() {
            u.basis[c][r].clone()
        } else {
            w.basis[c - u.dim()][r].neg()
        }
    });
    let kernel = sys.nullspace();
    let vecs: Vec<Vec<F>> = kernel
        .basis
        .iter()
        .map(|coef| {
            (0..d)
                .map(|r| {
                    (0..u.dim()).fold(F::zero(), |acc, j| acc.add(&coef[j].mul(&u.basis[j][r])))
                })
                .collect()
        })
        .collect();
    Subspace::span(d, &vecs)
}

fn all_ones_invariant<F: Field>(mats: &[Matrix<F>], d: usize) -> bool {
    let line = Subspace::span(d, &[ones::<F>(d)]);
    mats.iter().all(|m| line.is_invariant_under(m))
}

/// True iff every image maps `(1, .., 1)` to a multiple of itself.
pub fn all_ones_check<F: Field>(spec: &SpecializedRep<F>) -> bool {
    all_ones_invariant(&spec.images(), spec.dim())
}

/// The smallest subspace containing `v` and invariant under `mats`.
pub fn invariant_closure<F: Field>(mats: &[Matrix<F>], v: &[F]) -> Subspace<F> {
    let d = v.len();
    let mut s = Subspace::zero(d);
    if !s.try_extend(v) {
        return s;
    }
    let mut frontier = vec![v.to_vec()];
    while let Some(x) = frontier.pop() {
        for m in mats {
            let y = m.mul_vec(&x).expect("matching size");
            if s.try_extend(&y) {
                frontier.push(y);
            }
        }
    }
    s
}

/// One cell of a parameter sweep over `singular_extension(n, a, c)` at `t0`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridCell {
    pub n: usize,
    pub t0: Q,
    pub a: Q,
    pub c: Q,
}

#[derive(Debug, Clone)]
pub struct GridRow {
    pub index: usize,
    pub cell: GridCell,
    pub span_dim: usize,
    pub verdict: Status,
    pub predicted: Status,
    pub all_ones_invariant: bool,
    /// Two-strand cells, where the computed verdict is expected to differ
    /// from the general statement.
    pub divergence_watch: bool,
}

impl GridRow {
    pub fn agree(&self) -> bool {
        self.verdict == self.predicted
    }
}

/// Irreducible iff `t0 != 1` or `a + c != 1`.
pub fn predicted_status(cell: &GridCell) -> Status {
    if cell.t0 != Q::from_i64(1) || &cell.a + &cell.c != Q::from_i64(1) {
        Status::Irreducible
    } else {
        Status::Reducible
    }
}

#[derive(Debug, Clone)]
pub struct GridReport {
    pub rows: Vec<GridRow>,
}

impl GridReport {
    pub fn agreements(&self) -> usize {
        self.rows.iter().filter(|r| r.agree()).count()
    }

    pub fn divergences(&self) -> Vec<&GridRow> {
        self.rows.iter().filter(|r| !r.agree()).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["n", "t0", "a", "c", "span_dim", "verdict", "predicted", "agree"])
            .expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.cell.n.to_string(),
                r.cell.t0.to_string(),
                r.cell.a.to_string(),
                r.cell.c.to_string(),
                r.span_dim.to_string(),
                r.verdict.to_string(),
                r.predicted.to_string(),
                r.agree().to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    pub fn summary_json(&self) -> serde_json::Value {
        let divergences: Vec<serde_json::Value> = self
            .divergences()
            .into_iter()
            .map(|r| {
                json!({
                    "index": r.index,
                    "n": r.cell.n,
                    "t0": r.cell.t0.to_string(),
                    "a": r.cell.a.to_string(),
                    "c": r.cell.c.to_string(),
                    "span_dim": r.span_dim,
                    "verdict": r.verdict.to_string(),
                    "predicted": r.predicted.to_string(),
                    "watch": r.divergence_watch,
                })
            })
            .collect();
        json!({
            "cells": self.rows.len(),
            "agreements": self.agreements(),
            "divergences": divergences,
        })
    }
}

/// Evaluates every cell, in parallel, reporting rows in cell order.
pub fn grid_report(cells: &[GridCell]) -> Result<GridReport, IrreducibilityError> {
    for cell in cells {
        if Zero::is_zero(&cell.t0) {
            return Err(IrreducibilityError::ZeroT);
        }
        let det = ExtensionParams::new(cell.a.clone(), cell.c.clone()).tau_det(&cell.t0);
        if Ring::is_zero(&det) {
            return Err(IrreducibilityError::SingularTau {
                t0: cell.t0.to_string(),
                a: cell.a.to_string(),
                c: cell.c.to_string(),
            });
        }
    }
    let rows = cells
        .par_iter()
        .enumerate()
        .map(|(index, cell)| {
            let spec = SpecializedRep::singular_extension(cell.n, &cell.t0, &cell.a, &cell.c)?;
            let images = spec.images();
            let span_dim = burnside_span(&images, spec.dim());
            let verdict = if span_dim == spec.dim() * spec.dim() {
                Status::Irreducible
            } else {
                Status::Reducible
            };
            Ok(GridRow {
                index,
                cell: cell.clone(),
                span_dim,
                verdict,
                predicted: predicted_status(cell),
                all_ones_invariant: all_ones_invariant(&images, spec.dim()),
                divergence_watch: cell.n == 2,
            })
        })
        .collect::<Result<Vec<_>, IrreducibilityError>>()?;
    Ok(GridReport { rows })
}

/// Cartesian product of strand counts, `t` values and `(a, c)` pairs.
pub fn grid_cells(ns: &[usize], ts: &[Q], acs: &[(Q, Q)]) -> Vec<GridCell> {
    let mut out = Vec::new();
    for &n in ns {
        for t0 in ts {
            for (a, c) in acs {
                out.push(GridCell {
                    n,
                    t0: t0.clone(),
                    a: a.clone(),
                    c: c.clone(),
                });
            }
        }
    }
    out
}
