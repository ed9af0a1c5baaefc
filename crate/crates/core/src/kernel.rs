//! Nontrivial words with identity image.
//!
//! The images of the pure braid generators under the standard
//! representation are diagonal, so commutators of pure braids lie in the
//! kernel of the standard representation and of every singular extension.
//! Whether a word is nontrivial in the group is not decided here; the
//! certificate carries a citation tag instead.

use std::collections::BTreeMap;

use serde_json::json;

use crate::matrix::Matrix;
use crate::presentation::{commutator, pure_braid_generator, PresentationError, Word};
use crate::rep::{RepError, Representation};
use crate::ring::Ring;

/// Tag recording that nontriviality of pure braid commutators is taken
/// from the literature, not computed.
pub const NONTRIVIALITY_CITED: &str = "cited:pure-braid-commutator";

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum KernelError {
    #[error("kernel probes need at least 3 strands, got {0}")]
    BadStrandCount(usize),
    #[error("commutators need inverses; representation is in monoid mode")]
    MonoidMode,
    #[error("word is empty after free reduction")]
    EmptyWord,
    #[error("word {0} is trivial by far commutation and cancellation")]
    TrivialWord(String),
    #[error("image of {word} is not the identity")]
    NotInKernel { word: String, image: String },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct KernelCertificate {
    pub word: Word,
    pub n: usize,
    pub params: BTreeMap<String, String>,
    pub domain: &'static str,
    pub image_is_identity: bool,
    pub nontriviality: &'static str,
}

impl KernelCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "word": self.word.to_string(),
            "n": self.n,
            "params": self.params,
            "domain": self.domain,
            "image": if self.image_is_identity { "identity" } else { "non-identity" },
            "nontriviality": self.nontriviality,
        })
    }
}

/// `[A_ij, A_kl]` as a word in the sigma generators.
pub fn pure_commutator_word(
    p1: (usize, usize),
    p2: (usize, usize),
    n: usize,
) -> Result<Word, KernelError> {
    let u = pure_braid_generator(p1.0, p1.1, n)?;
    let v = pure_braid_generator(p2.0, p2.1, n)?;
    Ok(commutator(&u, &v, true)?)
}

fn check_rep<T: Ring>(rep: &Representation<T>) -> Result<(), KernelError> {
    if rep.n < 3 {
        return Err(KernelError::BadStrandCount(rep.n));
    }
    if !rep.group {
        return Err(KernelError::MonoidMode);
    }
    Ok(())
}

/// The image of `[A_ij, A_kl]`.
pub fn pure_commutator_image<T: Ring>(
    rep: &Representation<T>,
    p1: (usize, usize),
    p2: (usize, usize),
) -> Result<Matrix<T>, KernelError> {
    check_rep(rep)?;
    let w = pure_commutator_word(p1, p2, rep.n)?;
    Ok(rep.evaluate_word(&w)?)
}

/// Certifies that `word` lies in the kernel of `rep`. Words that reduce to
/// the empty word by cancellation and far commutation are rejected.
pub fn certify<T: Ring>(rep: &Representation<T>, word: &Word) -> Result<KernelCertificate, KernelError> {
    check_rep(rep)?;
    let reduced = word.free_reduce();
    if reduced.is_empty() {
        return Err(KernelError::EmptyWord);
    }
    if reduced.reduce_with_commutations().is_empty() {
        return Err(KernelError::TrivialWord(reduced.to_string()));
    }
    let image = rep.evaluate_word(&reduced)?;
    if !image.is_identity() {
        return Err(KernelError::NotInKernel {
            word: reduced.to_string(),
            image: image.to_string(),
        });
    }
    let mut params = rep.params.clone();
    params.insert("name".into(), rep.name.clone());
    Ok(KernelCertificate {
        word: reduced,
        n: rep.n,
        params,
        domain: T::domain_name(),
        image_is_identity: true,
        nontriviality: NONTRIVIALITY_CITED,
    })
}

/// Pairs of pure braid generators sharing exactly one strand index.
pub fn candidate_pairs(n: usize) -> Vec<((usize, usize), (usize, usize))> {
    let gens: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for (k, &p) in gens.iter().enumerate() {
        for &q in &gens[k + 1..] {
            let shared = [p.0, p.1].iter().filter(|x| **x == q.0 || **x == q.1).count();
            if shared == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use crate::rep::ExtensionParams;

    fn t() -> LaurentPoly {
        LaurentPoly::t()
    }

    #[test]
    fn a12_image_is_diagonal() {
        let rep = Representation::standard(3, &t()).unwrap();
        let img = rep.evaluate_word(&pure_braid_generator(1, 2, 3).unwrap()).unwrap();
        let expect = Matrix::from_rows(vec![
            vec![t(), LaurentPoly::zero(), LaurentPoly::zero()],
            vec![LaurentPoly::zero(), t(), LaurentPoly::zero()],
            vec![LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::one()],
        ]);
        assert_eq!(img, expect);
    }

    #[test]
    fn commutator_in_kernel_of_standard_and_extension() {
        let rep = Representation::standard(3, &t()).unwrap();
        assert!(pure_commutator_image(&rep, (1, 2), (1, 3)).unwrap().is_identity());
        let params = ExtensionParams::new("1+t".parse().unwrap(), LaurentPoly::constant(2));
        let ext = Representation::singular_extension(3, &t(), &params, false).unwrap();
        assert!(matches!(
            pure_commutator_image(&ext, (1, 2), (1, 3)),
            Err(KernelError::MonoidMode)
        ));
        let ext = Representation::singular_extension(3, &t(), &ExtensionParams::new(t(), LaurentPoly::zero()), true)
            .unwrap();
        let w = pure_commutator_word((1, 2), (1, 3), 3).unwrap();
        let cert = certify(&ext, &w).unwrap();
        assert_eq!(cert.word.len(), 12);
        assert_eq!(cert.nontriviality, NONTRIVIALITY_CITED);
        assert_eq!(cert.to_json()["image"], "identity");
    }

    #[test]
    fn trivial_words_rejected() {
        let rep = Representation::standard(5, &t()).unwrap();
        let w = pure_commutator_word((1, 2), (3, 4), 5).unwrap();
        assert!(matches!(certify(&rep, &w), Err(KernelError::TrivialWord(_))));
        let w = pure_commutator_word((1, 2), (1, 2), 5).unwrap();
        assert_eq!(certify(&rep, &w), Err(KernelError::EmptyWord));
        assert!(pure_commutator_image(&rep, (1, 2), (1, 2)).unwrap().is_identity());
    }

    #[test]
    fn sigma_is_not_in_kernel() {
        let rep = Representation::standard(3, &t()).unwrap();
        let w: Word = "s1".parse().unwrap();
        assert!(matches!(certify(&rep, &w), Err(KernelError::NotInKernel { .. })));
    }

    #[test]
    fn candidates_share_one_strand() {
        let c = candidate_pairs(3);
        assert_eq!(c, vec![((1, 2), (1, 3)), ((1, 2), (2, 3)), ((1, 3), (2, 3))]);
        assert!(candidate_pairs(4).iter().all(|(p, q)| p != q));
    }
}
