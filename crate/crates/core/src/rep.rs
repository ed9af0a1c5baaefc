//! Concrete representations: the standard, Burau and F representations of
//! `B_n`, their singular extensions and the virtual extensions on two strands.

use std::collections::BTreeMap;

use serde_json::json;

use crate::laurent::{LaurentError, LaurentPoly};
use crate::matrix::{Matrix, MatrixError};
use crate::presentation::{Gen, Kind, Mode, Presentation, Relation, Word};
use crate::ratfunc::RationalFunction;
use crate::ring::{Ring, Q};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RepError {
    #[error("need at least 2 strands, got {0}")]
    BadStrandCount(usize),
    #[error("tau image is not invertible: determinant {det}")]
    NonInvertibleTau { det: String },
    #[error("q = {q} does not divide 1 - p^2 = {value}")]
    DivisibilityViolation { q: String, value: String },
    #[error("family 1 needs q != 0")]
    ZeroQ,
    #[error("virtual extensions are only defined on 2 strands here")]
    UnsupportedStrandCount,
    #[error("no image assigned to {0}")]
    UnassignedGenerator(Gen),
    #[error("{0} has no inverse in this representation")]
    NonInvertibleLetter(Gen),
    #[error("representation ({rep_n} strands, {rep_mode:?}) cannot be checked against presentation ({pres_n} strands, {pres_mode:?})")]
    ModeMismatch {
        rep_n: usize,
        rep_mode: Mode,
        pres_n: usize,
        pres_mode: Mode,
    },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// The two free entries `a`, `c` of the singular block `[[a, ct], [c, a]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionParams<T> {
    pub a: T,
    pub c: T,
}

impl<T: Ring> ExtensionParams<T> {
    pub fn new(a: T, c: T) -> Self {
        Self { a, c }
    }

    pub fn tau_block(&self, t: &T) -> Matrix<T> {
        Matrix::from_rows(vec![
            vec![self.a.clone(), self.c.mul(t)],
            vec![self.c.clone(), self.a.clone()],
        ])
    }

    /// `a^2 - t c^2`, the determinant of the singular block.
    pub fn tau_det(&self, t: &T) -> T {
        self.a.mul(&self.a).sub(&t.mul(&self.c.mul(&self.c)))
    }
}

/// The five shapes of an involutive `2x2` image of the virtual generator.
#[derive(Debug, Clone, PartialEq)]
pub enum InvolutionFamily<T> {
    /// `[[p, q], [(1 - p^2)/q, -p]]`, `q != 0`
    General { p: T, q: T },
    /// `[[-1, 0], [r, 1]]`
    LowerLeftNeg { r: T },
    /// `[[1, 0], [r, -1]]`
    LowerLeftPos { r: T },
    /// `-I`
    MinusIdentity,
    /// `I`
    Identity,
}

impl<T: Ring> InvolutionFamily<T> {
    pub fn id(&self) -> u8 {
        match self {
            InvolutionFamily::General { .. } => 1,
            InvolutionFamily::LowerLeftNeg { .. } => 2,
            InvolutionFamily::LowerLeftPos { .. } => 3,
            InvolutionFamily::MinusIdentity => 4,
            InvolutionFamily::Identity => 5,
        }
    }

    /// Builds family `id` from whichever of `p, q, r` it uses.
    pub fn from_id(id: u8, p: T, q: T, r: T) -> Option<Self> {
        Some(match id {
            1 => InvolutionFamily::General { p, q },
            2 => InvolutionFamily::LowerLeftNeg { r },
            3 => InvolutionFamily::LowerLeftPos { r },
            4 => InvolutionFamily::MinusIdentity,
            5 => InvolutionFamily::Identity,
            _ => return None,
        })
    }

    /// The image of the virtual generator. In family 1 the lower-left entry
    /// `(1 - p^2)/q` must be an element of the entry ring.
    pub fn matrix(&self) -> Result<Matrix<T>, RepError> {
        let (o, z) = (T::one(), T::zero());
        let m = |a: &T, b: &T, c: &T, d: &T| {
            Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]])
        };
        Ok(match self {
            InvolutionFamily::General { p, q } => {
                if q.is_zero() {
                    return Err(RepError::ZeroQ);
                }
                let value = o.sub(&p.mul(p));
                let r = value
                    .div_exact(q)
                    .ok_or_else(|| RepError::DivisibilityViolation {
                        q: q.to_string(),
                        value: value.to_string(),
                    })?;
                m(p, q, &r, &p.neg())
            }
            InvolutionFamily::LowerLeftNeg { r } => m(&o.neg(), &z, r, &o),
            InvolutionFamily::LowerLeftPos { r } => m(&o, &z, r, &o.neg()),
            InvolutionFamily::MinusIdentity => Matrix::scalar(2, &o.neg()),
            InvolutionFamily::Identity => Matrix::identity(2),
        })
    }

    pub fn params(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        match self {
            InvolutionFamily::General { p, q } => {
                out.insert("p".into(), p.to_string());
                out.insert("q".into(), q.to_string());
            }
            InvolutionFamily::LowerLeftNeg { r } | InvolutionFamily::LowerLeftPos { r } => {
                out.insert("r".into(), r.to_string());
            }
            _ => {}
        }
        out
    }
}

/// A violated relation together with `image(lhs) - image(rhs)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation<T> {
    pub relation: Relation,
    pub difference: Matrix<T>,
}

/// An assignment of matrices to generators.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation<T> {
    pub n: usize,
    pub dim: usize,
    pub mode: Mode,
    /// Whether `tau` images are required to be invertible.
    pub group: bool,
    pub name: String,
    /// The value used for `t` in the generator blocks.
    pub t: T,
    pub params: BTreeMap<String, String>,
    images: BTreeMap<Gen, Matrix<T>>,
    inverses: BTreeMap<Gen, Matrix<T>>,
}

fn sigma_block<T: Ring>(t: &T) -> Matrix<T> {
    Matrix::from_rows(vec![vec![T::zero(), t.clone()], vec![T::one(), T::zero()]])
}

impl<T: Ring> Representation<T> {
    /// Assembles a representation from explicit images, precomputing the
    /// inverses that exist. In group mode every image must be invertible.
    pub fn from_images(
        n: usize,
        mode: Mode,
        group: bool,
        name: &str,
        t: T,
        images: BTreeMap<Gen, Matrix<T>>,
    ) -> Result<Self, RepError> {
        if n < 2 {
            return Err(RepError::BadStrandCount(n));
        }
        let dim = images.values().next().map_or(n, Matrix::rows);
        let mut inverses = BTreeMap::new();
        for (g, m) in &images {
            match m.inverse() {
                Ok(inv) => {
                    inverses.insert(*g, inv);
                }
                Err(MatrixError::NotInvertible { det } | MatrixError::NotUnitDeterminant { det })
                    if g.kind == Kind::Tau =>
                {
                    if group {
                        return Err(RepError::NonInvertibleTau { det });
                    }
                }
                Err(MatrixError::NotInvertible { .. } | MatrixError::NotUnitDeterminant { .. }) => {
                    // sigma and nu images are exercised only through evaluation
                }
                Err(e) => return Err(e.into()),
            }
        }
        Ok(Self {
            n,
            dim,
            mode,
            group,
            name: name.to_string(),
            t,
            params: BTreeMap::new(),
            images,
            inverses,
        })
    }

    /// A homogeneous local representation: `block` embedded at every index.
    fn local(
        n: usize,
        mode: Mode,
        group: bool,
        name: &str,
        t: &T,
        blocks: &[(Kind, Matrix<T>)],
    ) -> Result<Self, RepError> {
        if n < 2 {
            return Err(RepError::BadStrandCount(n));
        }
        let mut images = BTreeMap::new();
        for (kind, block) in blocks {
            for i in 1..n {
                images.insert(Gen { kind: *kind, index: i }, Matrix::block_embed(block, i, n)?);
            }
        }
        Self::from_images(n, mode, group, name, t.clone(), images)
    }

    /// `s_i -> I ⊕ [[0, t], [1, 0]] ⊕ I`.
    pub fn standard(n: usize, t: &T) -> Result<Self, RepError> {
        Self::local(n, Mode::Braid, true, "standard", t, &[(Kind::Sigma, sigma_block(t))])
    }

    /// `s_i -> I ⊕ [[1 - t, t], [1, 0]] ⊕ I`.
    pub fn burau(n: usize, t: &T) -> Result<Self, RepError> {
        let block = Matrix::from_rows(vec![
            vec![T::one().sub(t), t.clone()],
            vec![T::one(), T::zero()],
        ]);
        Self::local(n, Mode::Braid, true, "burau", t, &[(Kind::Sigma, block)])
    }

    /// The `(n+1)`-dimensional F-representation with block
    /// `[[1, 1, 0], [0, -t, 0], [0, t, 1]]`.
    pub fn f_rep(n: usize, t: &T) -> Result<Self, RepError> {
        let (o, z) = (T::one(), T::zero());
        let block = Matrix::from_rows(vec![
            vec![o.clone(), o.clone(), z.clone()],
            vec![z.clone(), t.neg(), z.clone()],
            vec![z.clone(), t.clone(), o],
        ]);
        Self::local(n, Mode::Braid, true, "f", t, &[(Kind::Sigma, block)])
    }

    /// Standard `s_i` together with `t_i -> I ⊕ [[a, ct], [c, a]] ⊕ I`.
    pub fn singular_extension(
        n: usize,
        t: &T,
        params: &ExtensionParams<T>,
        group: bool,
    ) -> Result<Self, RepError> {
        let mut rep = Self::local(
            n,
            Mode::Singular,
            group,
            "singular-ext",
            t,
            &[(Kind::Sigma, sigma_block(t)), (Kind::Tau, params.tau_block(t))],
        )?;
        rep.params.insert("a".into(), params.a.to_string());
        rep.params.insert("c".into(), params.c.to_string());
        Ok(rep)
    }

    /// Extension to the virtual singular braid group on two strands with the
    /// virtual generator sent to a matrix of the chosen involution family.
    pub fn vsb2_extension(
        t: &T,
        family: &InvolutionFamily<T>,
        params: &ExtensionParams<T>,
        group: bool,
    ) -> Result<Self, RepError> {
        let nu = family.matrix()?;
        let mut rep = Self::local(
            2,
            Mode::VirtualSingular,
            group,
            "vsb2",
            t,
            &[
                (Kind::Sigma, sigma_block(t)),
                (Kind::Tau, params.tau_block(t)),
                (Kind::Nu, nu),
            ],
        )?;
        rep.params.insert("a".into(), params.a.to_string());
        rep.params.insert("c".into(), params.c.to_string());
        rep.params.insert("family".into(), family.id().to_string());
        rep.params.extend(family.params());
        Ok(rep)
    }

    pub fn image(&self, g: Gen) -> Option<&Matrix<T>> {
        self.images.get(&g)
    }

    pub fn images(&self) -> impl Iterator<Item = (&Gen, &Matrix<T>)> {
        self.images.iter()
    }

    pub fn inverse_image(&self, g: Gen) -> Option<&Matrix<T>> {
        self.inverses.get(&g)
    }

    /// Images of the generators of the given kinds, ordered by generator.
    pub fn images_of(&self, kinds: &[Kind]) -> Vec<Matrix<T>> {
        self.images
            .iter()
            .filter(|(g, _)| kinds.contains(&g.kind))
            .map(|(_, m)| m.clone())
            .collect()
    }

    /// Ordered product of the letter images.
    pub fn evaluate_word(&self, w: &Word) -> Result<Matrix<T>, RepError> {
        let mut acc = Matrix::identity(self.dim);
        for l in w.letters() {
            let m = if l.exp == 1 {
                self.images
                    .get(&l.gen)
                    .ok_or(RepError::UnassignedGenerator(l.gen))?
            } else {
                if !self.images.contains_key(&l.gen) {
                    return Err(RepError::UnassignedGenerator(l.gen));
                }
                if l.gen.kind == Kind::Tau && !self.group {
                    return Err(RepError::NonInvertibleLetter(l.gen));
                }
                self.inverses
                    .get(&l.gen)
                    .ok_or(RepError::NonInvertibleLetter(l.gen))?
            };
            acc = acc.mul(m)?;
        }
        Ok(acc)
    }

    /// Every relation whose two sides have different images. The
    /// presentation may describe a subgroup (for instance `B_n` inside `SB_n`).
    pub fn verify_relations(&self, pres: &Presentation) -> Result<Vec<Violation<T>>, RepError> {
        if pres.n != self.n || pres.mode > self.mode {
            return Err(RepError::ModeMismatch {
                rep_n: self.n,
                rep_mode: self.mode,
                pres_n: pres.n,
                pres_mode: pres.mode,
            });
        }
        let mut out = Vec::new();
        for rel in &pres.relations {
            let diff = self.evaluate_word(&rel.lhs)?.sub(&self.evaluate_word(&rel.rhs)?)?;
            if !diff.is_zero() {
                out.push(Violation {
                    relation: rel.clone(),
                    difference: diff,
                });
            }
        }
        Ok(out)
    }

    /// `{"n":..,"dim":..,"domain":..,"assignment":{"s1":Matrix,..}}`
    pub fn to_json(&self) -> serde_json::Value {
        let assignment: serde_json::Map<String, serde_json::Value> = self
            .images
            .iter()
            .map(|(g, m)| (g.to_string(), m.to_json()))
            .collect();
        json!({
            "n": self.n,
            "dim": self.dim,
            "domain": T::domain_name(),
            "assignment": assignment,
        })
    }

    pub fn map_entries<U: Ring, E>(
        &self,
        t: U,
        mut f: impl FnMut(&T) -> Result<U, E>,
    ) -> Result<Representation<U>, E> {
        let mut images = BTreeMap::new();
        for (g, m) in &self.images {
            images.insert(*g, m.try_map(&mut f)?);
        }
        let mut inverses = BTreeMap::new();
        for (g, m) in &self.inverses {
            inverses.insert(*g, m.try_map(&mut f)?);
        }
        Ok(Representation {
            n: self.n,
            dim: self.dim,
            mode: self.mode,
            group: self.group,
            name: self.name.clone(),
            t,
            params: self.params.clone(),
            images,
            inverses,
        })
    }
}

impl Representation<LaurentPoly> {
    /// Specializes `t` to a nonzero rational. Inverses that do not survive
    /// (for a tau block whose determinant vanishes at `t0`) are dropped.
    pub fn specialize(&self, t0: &Q) -> Result<Representation<Q>, LaurentError> {
        let mut rep = self.map_entries(t0.clone(), |x| x.eval(t0))?;
        rep.params.insert("t".into(), t0.to_string());
        let images: Vec<(Gen, Matrix<Q>)> =
            rep.images.iter().map(|(g, m)| (*g, m.clone())).collect();
        for (g, m) in images {
            if m.det().map(|d| Ring::is_zero(&d)).unwrap_or(true) {
                rep.inverses.remove(&g);
            }
        }
        Ok(rep)
    }

    /// The same representation viewed over the fraction field `Q(t)`.
    pub fn over_fraction_field(&self) -> Representation<RationalFunction> {
        self.map_entries::<_, std::convert::Infallible>(RationalFunction::t(), |x| {
            Ok(RationalFunction::from(x.clone()))
        })
        .expect("infallible")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn m(rows: &[&[&str]]) -> Matrix<LaurentPoly> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| lp(s)).collect()).collect())
    }

    fn t() -> LaurentPoly {
        LaurentPoly::t()
    }

    #[test]
    fn standard_images() {
        let r2 = Representation::standard(2, &t()).unwrap();
        assert_eq!(r2.image(Gen::sigma(1)).unwrap(), &m(&[&["0", "t"], &["1", "0"]]));
        let r3 = Representation::standard(3, &t()).unwrap();
        assert_eq!(
            r3.image(Gen::sigma(2)).unwrap(),
            &m(&[&["1", "0", "0"], &["0", "0", "t"], &["0", "1", "0"]])
        );
        for n in 2..=6 {
            let r = Representation::standard(n, &t()).unwrap();
            for i in 1..n {
                assert_eq!(r.image(Gen::sigma(i)).unwrap().det().unwrap(), lp("-t"));
            }
        }
        assert_eq!(
            Representation::standard(1, &t()).unwrap_err(),
            RepError::BadStrandCount(1)
        );
    }

    #[test]
    fn burau_and_f_blocks() {
        let b = Representation::burau(2, &t()).unwrap();
        assert_eq!(b.image(Gen::sigma(1)).unwrap(), &m(&[&["1 - t", "t"], &["1", "0"]]));
        let f = Representation::f_rep(2, &t()).unwrap();
        assert_eq!(f.dim, 3);
        assert_eq!(
            f.image(Gen::sigma(1)).unwrap(),
            &m(&[&["1", "1", "0"], &["0", "-t", "0"], &["0", "t", "1"]])
        );
        assert_eq!(Representation::f_rep(4, &t()).unwrap().dim, 5);
    }

    #[test]
    fn singular_blocks() {
        let p = ExtensionParams::new(lp("1 + t"), lp("2"));
        let r = Representation::singular_extension(3, &t(), &p, false).unwrap();
        assert_eq!(
            r.image(Gen::tau(1)).unwrap(),
            &m(&[&["1 + t", "2*t", "0"], &["2", "1 + t", "0"], &["0", "0", "1"]])
        );
        let id = ExtensionParams::new(lp("1"), lp("0"));
        let r = Representation::singular_extension(4, &t(), &id, true).unwrap();
        for i in 1..4 {
            assert!(r.image(Gen::tau(i)).unwrap().is_identity());
        }
    }

    #[test]
    fn group_mode_demands_unit_tau_determinant() {
        let p = ExtensionParams::new(lp("1"), lp("1"));
        assert!(matches!(
            Representation::singular_extension(2, &t(), &p, true),
            Err(RepError::NonInvertibleTau { .. })
        ));
        let rep = Representation::singular_extension(2, &t(), &p, false).unwrap();
        let w: Word = "t1^-1".parse().unwrap();
        assert_eq!(
            rep.evaluate_word(&w).unwrap_err(),
            RepError::NonInvertibleLetter(Gen::tau(1))
        );
        // a = t, c = 1: a^2 - t c^2 = t^2 - t, not a unit; a = 0, c = 1: -t, a unit
        let unit = ExtensionParams::new(lp("0"), lp("1"));
        assert!(Representation::singular_extension(3, &t(), &unit, true).is_ok());
    }

    #[test]
    fn involution_families() {
        let z = LaurentPoly::zero;
        let ext = ExtensionParams::new(lp("1"), lp("0"));
        let fam4 = InvolutionFamily::MinusIdentity;
        let rep = Representation::vsb2_extension(&t(), &fam4, &ext, true).unwrap();
        assert_eq!(rep.image(Gen::nu(1)).unwrap(), &m(&[&["-1", "0"], &["0", "-1"]]));
        let fam1 = InvolutionFamily::General { p: z(), q: lp("1") };
        assert_eq!(fam1.matrix().unwrap(), m(&[&["0", "1"], &["1", "0"]]));
        let fam2 = InvolutionFamily::LowerLeftNeg { r: z() };
        assert_eq!(fam2.matrix().unwrap(), m(&[&["-1", "0"], &["0", "1"]]));
        let bad = InvolutionFamily::General { p: lp("t"), q: lp("t + 2") };
        assert!(matches!(bad.matrix(), Err(RepError::DivisibilityViolation { .. })));
        let good = InvolutionFamily::General { p: lp("t"), q: lp("1 - t") };
        assert_eq!(good.matrix().unwrap().get(1, 0), &lp("1 + t"));
        assert_eq!(
            InvolutionFamily::General { p: lp("1"), q: z() }.matrix(),
            Err(RepError::ZeroQ)
        );
        // over a field the divisibility condition disappears
        let fq = InvolutionFamily::General { p: q(1, 3), q: q(5, 1) };
        assert_eq!(fq.matrix().unwrap().get(1, 0), &q(8, 45));
    }

    #[test]
    fn word_evaluation() {
        let r = Representation::standard(2, &t()).unwrap();
        assert!(r.evaluate_word(&Word::empty()).unwrap().is_identity());
        assert!(r.evaluate_word(&"s1 s1^-1".parse().unwrap()).unwrap().is_identity());
        assert_eq!(
            r.evaluate_word(&"s1 s1".parse().unwrap()).unwrap(),
            m(&[&["t", "0"], &["0", "t"]])
        );
        assert_eq!(
            r.evaluate_word(&"t1".parse().unwrap()).unwrap_err(),
            RepError::UnassignedGenerator(Gen::tau(1))
        );
    }

    #[test]
    fn relation_checks() {
        let pres = Presentation::build(4, Mode::Braid, true).unwrap();
        let r = Representation::standard(4, &t()).unwrap();
        assert!(r.verify_relations(&pres).unwrap().is_empty());

        let sing = Presentation::build(4, Mode::Singular, true).unwrap();
        assert!(matches!(r.verify_relations(&sing), Err(RepError::ModeMismatch { .. })));

        let mut images = BTreeMap::new();
        images.insert(Gen::sigma(1), m(&[&["0", "t"], &["1", "0"]]));
        images.insert(Gen::tau(1), m(&[&["1", "1"], &["0", "1"]]));
        let bad = Representation::from_images(2, Mode::Singular, false, "custom", t(), images).unwrap();
        let pres2 = Presentation::build(2, Mode::Singular, false).unwrap();
        let v = bad.verify_relations(&pres2).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].relation.to_string(), "t1 s1 = s1 t1");
        assert!(!v[0].difference.is_zero());
    }

    #[test]
    fn specialization_and_fraction_field() {
        let p = ExtensionParams::new(lp("2"), lp("-1"));
        let r = Representation::singular_extension(3, &t(), &p, false).unwrap();
        let s = r.specialize(&q(1, 1)).unwrap();
        assert_eq!(s.image(Gen::tau(1)).unwrap().get(0, 1), &q(-1, 1));
        let pres = Presentation::build(3, Mode::Singular, false).unwrap();
        assert!(s.verify_relations(&pres).unwrap().is_empty());
        let f = r.over_fraction_field();
        assert!(f.verify_relations(&pres).unwrap().is_empty());
        assert!(r.specialize(&q(0, 1)).is_err());
    }

    #[test]
    fn json_shape() {
        let r = Representation::standard(2, &t()).unwrap();
        let j = r.to_json();
        assert_eq!(j["n"], 2);
        assert_eq!(j["dim"], 2);
        assert_eq!(j["domain"], "laurent");
        assert_eq!(j["assignment"]["s1"]["entries"][0][1], "t^1");
    }
}
