//! Generators, words and relation sets for `B_n`, `SB_n` and `VSB_n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("need at least 2 strands, got {0}")]
    BadStrandCount(usize),
    #[error("invalid index pair ({i}, {j}) for {n} strands")]
    BadIndices { i: usize, j: usize, n: usize },
    #[error("tau letters have no inverse in the monoid")]
    InverseUnavailable,
    #[error("cannot parse word `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// The three generator families: ordinary crossings, singular crossings and
/// virtual crossings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    Sigma,
    Tau,
    Nu,
}

impl Kind {
    pub fn prefix(self) -> char {
        match self {
            Kind::Sigma => 's',
            Kind::Tau => 't',
            Kind::Nu => 'v',
        }
    }
}

/// A generator without exponent, e.g. `s2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub kind: Kind,
    pub index: usize,
}

impl Gen {
    pub fn sigma(index: usize) -> Self {
        Self { kind: Kind::Sigma, index }
    }
    pub fn tau(index: usize) -> Self {
        Self { kind: Kind::Tau, index }
    }
    pub fn nu(index: usize) -> Self {
        Self { kind: Kind::Nu, index }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.prefix(), self.index)
    }
}

impl FromStr for Gen {
    type Err = PresentationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let l: Letter = s.parse()?;
        if l.exp != 1 {
            return Err(PresentationError::Parse {
                input: s.into(),
                reason: "generator names carry no exponent".into(),
            });
        }
        Ok(l.gen)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Gen,
    /// +1 or -1.
    pub exp: i8,
}

impl Letter {
    pub fn new(gen: Gen, exp: i8) -> Self {
        debug_assert!(exp == 1 || exp == -1);
        Self { gen, exp }
    }

    pub fn inverse(self) -> Self {
        Self {
            gen: self.gen,
            exp: -self.exp,
        }
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.gen == other.gen && self.exp == -other.exp
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 1 {
            write!(f, "{}", self.gen)
        } else {
            write!(f, "{}^-1", self.gen)
        }
    }
}

impl FromStr for Letter {
    type Err = PresentationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| PresentationError::Parse {
            input: s.into(),
            reason: reason.into(),
        };
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('s') => Kind::Sigma,
            Some('t') => Kind::Tau,
            Some('v') => Kind::Nu,
            _ => return Err(err("letter must start with s, t or v")),
        };
        let rest = chars.as_str();
        let (idx, exp) = match rest.split_once('^') {
            None => (rest, 1),
            Some((i, "-1")) => (i, -1),
            Some((i, "1")) => (i, 1),
            Some(_) => return Err(err("exponent must be 1 or -1")),
        };
        let index: usize = idx.parse().map_err(|_| err("bad index"))?;
        if index == 0 {
            return Err(err("indices start at 1"));
        }
        Ok(Letter::new(Gen { kind, index }, exp))
    }
}

/// A word in the generators; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letter(gen: Gen, exp: i8) -> Self {
        Self(vec![Letter::new(gen, exp)])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Formal inverse: reversed letters with flipped exponents.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn contains_kind(&self, kind: Kind) -> bool {
        self.0.iter().any(|l| l.gen.kind == kind)
    }

    pub fn max_index(&self) -> usize {
        self.0.iter().map(|l| l.gen.index).max().unwrap_or(0)
    }

    /// Cancels adjacent `g g^-1` pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last().is_some_and(|&p| p.is_inverse_of(l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Free reduction that may also slide a letter past neighbours it
    /// commutes with by a defining relation before cancelling it.
    ///
    /// Sound for the group, not complete: an empty result proves the word is
    /// trivial, a nonempty one proves nothing.
    pub fn reduce_with_commutations(&self) -> Word {
        let mut w = self.free_reduce().0;
        'outer: loop {
            for i in 0..w.len() {
                for j in i + 1..w.len() {
                    if w[i].is_inverse_of(w[j]) {
                        w.remove(j);
                        w.remove(i);
                        w = Word(w).free_reduce().0;
                        continue 'outer;
                    }
                    if !letters_commute(w[i], w[j]) {
                        break;
                    }
                }
            }
            return Word(w);
        }
    }
}

/// Commutation of two letters that follows directly from a single defining
/// relation of `VSB_n`: far commutation among crossings and singular
/// crossings, far commutation of virtual with non-virtual letters, and
/// `tau_i` with `sigma_i`.
pub fn letters_commute(a: Letter, b: Letter) -> bool {
    let far = a.gen.index.abs_diff(b.gen.index) >= 2;
    match (a.gen.kind, b.gen.kind) {
        _ if a.gen == b.gen => true,
        (Kind::Nu, Kind::Nu) => false,
        (Kind::Nu, _) | (_, Kind::Nu) => far,
        (Kind::Sigma, Kind::Tau) | (Kind::Tau, Kind::Sigma) => far || a.gen.index == b.gen.index,
        _ => far,
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parses space-separated letters such as `s1 s2^-1 t1 v1`; `1` or the empty
/// string is the identity.
impl FromStr for Word {
    type Err = PresentationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::empty());
        }
        s.split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Letter>, _>>()
            .map(Word)
    }
}

fn s(i: usize) -> Word {
    Word::letter(Gen::sigma(i), 1)
}
fn t(i: usize) -> Word {
    Word::letter(Gen::tau(i), 1)
}
fn v(i: usize) -> Word {
    Word::letter(Gen::nu(i), 1)
}

fn prod(ws: &[Word]) -> Word {
    ws.iter().fold(Word::empty(), |acc, w| acc.concat(w))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Braid,
    Singular,
    VirtualSingular,
}

impl Mode {
    pub fn kinds(self) -> &'static [Kind] {
        match self {
            Mode::Braid => &[Kind::Sigma],
            Mode::Singular => &[Kind::Sigma, Kind::Tau],
            Mode::VirtualSingular => &[Kind::Sigma, Kind::Tau, Kind::Nu],
        }
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "braid" => Ok(Mode::Braid),
            "singular" => Ok(Mode::Singular),
            "virtual" | "virtual-singular" | "virtual_singular" => Ok(Mode::VirtualSingular),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

/// The families of defining relations, in presentation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    /// `s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}`
    BraidTriple,
    /// `s_i s_j = s_j s_i`, `|i-j| >= 2`
    SigmaFar,
    /// `t_i t_j = t_j t_i`, `|i-j| >= 2`
    TauFar,
    /// `t_i s_j = s_j t_i`, `|i-j| >= 2`
    TauSigmaFar,
    /// `t_i s_i = s_i t_i`
    TauSigmaSame,
    /// `s_i s_{i+1} t_i = t_{i+1} s_i s_{i+1}`
    TauSlideUp,
    /// `s_{i+1} s_i t_{i+1} = t_i s_{i+1} s_i`
    TauSlideDown,
    /// `v_i^2 = 1`
    NuInvolution,
    /// `v_i v_{i+1} v_i = v_{i+1} v_i v_{i+1}`
    NuTriple,
    /// `v_i s_{i+1} v_i = v_{i+1} s_i v_{i+1}`
    NuSigmaMixed,
    /// `v_i t_{i+1} v_i = v_{i+1} t_i v_{i+1}`
    NuTauMixed,
    /// `v_i s_j = s_j v_i`, `|i-j| >= 2`
    NuSigmaFar,
    /// `v_i t_j = t_j v_i`, `|i-j| >= 2`
    NuTauFar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub kind: RelationKind,
    pub lhs: Word,
    pub rhs: Word,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub n: usize,
    pub mode: Mode,
    /// Whether `tau` letters are invertible (group rather than monoid).
    pub group: bool,
    pub relations: Vec<Relation>,
}

impl Presentation {
    /// Instantiates every defining relation for `n` strands.
    ///
    /// Order: by relation family, then by index pair lexicographically.
    pub fn build(n: usize, mode: Mode, group: bool) -> Result<Self, PresentationError> {
        if n < 2 {
            return Err(PresentationError::BadStrandCount(n));
        }
        let m = n - 1; // generators per family
        let mut rels = Vec::new();
        let mut push = |kind, lhs, rhs| rels.push(Relation { kind, lhs, rhs });
        let adjacent = 1..m; // i with i+1 <= m
        let far_pairs: Vec<(usize, usize)> = (1..=m)
            .flat_map(|i| (i + 2..=m).map(move |j| (i, j)))
            .collect();
        let far_ordered: Vec<(usize, usize)> = (1..=m)
            .flat_map(|i| (1..=m).filter(move |j| i.abs_diff(*j) >= 2).map(move |j| (i, j)))
            .collect();

        for i in adjacent.clone() {
            push(
                RelationKind::BraidTriple,
                prod(&[s(i), s(i + 1), s(i)]),
                prod(&[s(i + 1), s(i), s(i + 1)]),
            );
        }
        for &(i, j) in &far_pairs {
            push(RelationKind::SigmaFar, prod(&[s(i), s(j)]), prod(&[s(j), s(i)]));
        }
        if mode >= Mode::Singular {
            for &(i, j) in &far_pairs {
                push(RelationKind::TauFar, prod(&[t(i), t(j)]), prod(&[t(j), t(i)]));
            }
            for &(i, j) in &far_ordered {
                push(RelationKind::TauSigmaFar, prod(&[t(i), s(j)]), prod(&[s(j), t(i)]));
            }
            for i in 1..=m {
                push(RelationKind::TauSigmaSame, prod(&[t(i), s(i)]), prod(&[s(i), t(i)]));
            }
            for i in adjacent.clone() {
                push(
                    RelationKind::TauSlideUp,
                    prod(&[s(i), s(i + 1), t(i)]),
                    prod(&[t(i + 1), s(i), s(i + 1)]),
                );
            }
            for i in adjacent.clone() {
                push(
                    RelationKind::TauSlideDown,
                    prod(&[s(i + 1), s(i), t(i + 1)]),
                    prod(&[t(i), s(i + 1), s(i)]),
                );
            }
        }
        if mode >= Mode::VirtualSingular {
            for i in 1..=m {
                push(RelationKind::NuInvolution, prod(&[v(i), v(i)]), Word::empty());
            }
            for i in adjacent.clone() {
                push(
                    RelationKind::NuTriple,
                    prod(&[v(i), v(i + 1), v(i)]),
                    prod(&[v(i + 1), v(i), v(i + 1)]),
                );
            }
            for i in adjacent.clone() {
                push(
                    RelationKind::NuSigmaMixed,
                    prod(&[v(i), s(i + 1), v(i)]),
                    prod(&[v(i + 1), s(i), v(i + 1)]),
                );
            }
            for i in adjacent.clone() {
                push(
                    RelationKind::NuTauMixed,
                    prod(&[v(i), t(i + 1), v(i)]),
                    prod(&[v(i + 1), t(i), v(i + 1)]),
                );
            }
            for &(i, j) in &far_ordered {
                push(RelationKind::NuSigmaFar, prod(&[v(i), s(j)]), prod(&[s(j), v(i)]));
            }
            for &(i, j) in &far_ordered {
                push(RelationKind::NuTauFar, prod(&[v(i), t(j)]), prod(&[t(j), v(i)]));
            }
        }
        Ok(Self {
            n,
            mode,
            group,
            relations: rels,
        })
    }

    pub fn generators(&self) -> Vec<Gen> {
        self.mode
            .kinds()
            .iter()
            .flat_map(|&kind| (1..self.n).map(move |index| Gen { kind, index }))
            .collect()
    }

    pub fn relations_of(&self, kind: RelationKind) -> impl Iterator<Item = &Relation> {
        self.relations.iter().filter(move |r| r.kind == kind)
    }
}

/// The pure braid generator `A_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1`.
pub fn pure_braid_generator(i: usize, j: usize, n: usize) -> Result<Word, PresentationError> {
    if i == 0 || i >= j || j > n {
        return Err(PresentationError::BadIndices { i, j, n });
    }
    let conj = Word((i + 1..j).rev().map(|k| Letter::new(Gen::sigma(k), 1)).collect());
    let core = prod(&[s(i), s(i)]);
    Ok(prod(&[conj.clone(), core, conj.inverse()]))
}

/// `u v u^-1 v^-1`. In monoid mode `tau` letters cannot be inverted.
pub fn commutator(u: &Word, v: &Word, group: bool) -> Result<Word, PresentationError> {
    if !group && (u.contains_kind(Kind::Tau) || v.contains_kind(Kind::Tau)) {
        return Err(PresentationError::InverseUnavailable);
    }
    Ok(prod(&[u.clone(), v.clone(), u.inverse(), v.inverse()]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn braid_three_strands() {
        let p = Presentation::build(3, Mode::Braid, true).unwrap();
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.relations[0].lhs, w("s1 s2 s1"));
        assert_eq!(p.relations[0].rhs, w("s2 s1 s2"));
    }

    #[test]
    fn singular_two_strands() {
        let p = Presentation::build(2, Mode::Singular, true).unwrap();
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.relations[0].to_string(), "t1 s1 = s1 t1");
    }

    #[test]
    fn singular_three_strands_tau_relations() {
        let p = Presentation::build(3, Mode::Singular, true).unwrap();
        let tau: Vec<String> = p
            .relations
            .iter()
            .filter(|r| r.lhs.contains_kind(Kind::Tau) || r.rhs.contains_kind(Kind::Tau))
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            tau,
            vec![
                "t1 s1 = s1 t1",
                "t2 s2 = s2 t2",
                "s1 s2 t1 = t2 s1 s2",
                "s2 s1 t2 = t1 s2 s1"
            ]
        );
    }

    #[test]
    fn virtual_two_strands() {
        let p = Presentation::build(2, Mode::VirtualSingular, true).unwrap();
        let nu: Vec<String> = p
            .relations
            .iter()
            .filter(|r| r.lhs.contains_kind(Kind::Nu))
            .map(ToString::to_string)
            .collect();
        assert_eq!(nu, vec!["v1 v1 = 1"]);
    }

    #[test]
    fn bad_strand_count() {
        assert_eq!(
            Presentation::build(1, Mode::Braid, true),
            Err(PresentationError::BadStrandCount(1))
        );
    }

    #[test]
    fn relation_counts_closed_form() {
        for n in 2..=8usize {
            let b = Presentation::build(n, Mode::Braid, true).unwrap();
            let braid = (n - 2) + (n - 2) * n.saturating_sub(3) / 2;
            assert_eq!(b.relations.len(), braid, "n={n}");
            let sg = Presentation::build(n, Mode::Singular, true).unwrap();
            let far = (n - 2) * n.saturating_sub(3) / 2;
            let singular = far + 2 * far + (n - 1) + 2 * (n - 2);
            assert_eq!(sg.relations.len(), braid + singular, "n={n}");
            let vs = Presentation::build(n, Mode::VirtualSingular, true).unwrap();
            let virt = (n - 1) + 3 * (n - 2) + 4 * far;
            assert_eq!(vs.relations.len(), braid + singular + virt, "n={n}");
        }
    }

    #[test]
    fn no_out_of_range_indices() {
        for n in 2..=7 {
            let p = Presentation::build(n, Mode::VirtualSingular, false).unwrap();
            for r in &p.relations {
                assert!(r.lhs.max_index() < n && r.rhs.max_index() < n);
                assert!(r.lhs.letters().iter().chain(r.rhs.letters()).all(|l| l.gen.index >= 1));
            }
        }
    }

    #[test]
    fn monoid_flag_keeps_relations() {
        let g = Presentation::build(4, Mode::Singular, true).unwrap();
        let m = Presentation::build(4, Mode::Singular, false).unwrap();
        assert_eq!(g.relations, m.relations);
    }

    #[test]
    fn pure_braid_words() {
        assert_eq!(pure_braid_generator(1, 2, 4).unwrap(), w("s1 s1"));
        assert_eq!(pure_braid_generator(1, 3, 3).unwrap(), w("s2 s1 s1 s2^-1"));
        for n in 2..=7 {
            for j in 2..=n {
                for i in 1..j {
                    let a = pure_braid_generator(i, j, n).unwrap();
                    assert_eq!(a.len(), 2 * (j - i - 1) + 2);
                    assert_eq!(a.free_reduce(), a);
                }
            }
        }
        assert!(pure_braid_generator(2, 2, 3).is_err());
        assert!(pure_braid_generator(1, 4, 3).is_err());
        assert!(pure_braid_generator(0, 1, 3).is_err());
    }

    #[test]
    fn commutators() {
        let x = w("s1 s2^-1 t1");
        assert!(commutator(&x, &Word::empty(), true).unwrap().free_reduce().is_empty());
        assert!(commutator(&w("s1"), &w("s1"), true).unwrap().free_reduce().is_empty());
        let a12 = pure_braid_generator(1, 2, 3).unwrap();
        let a13 = pure_braid_generator(1, 3, 3).unwrap();
        assert_eq!(commutator(&a12, &a13, true).unwrap().len(), 12);
        assert_eq!(
            commutator(&w("t1"), &w("s1"), false),
            Err(PresentationError::InverseUnavailable)
        );
        assert!(commutator(&w("s1"), &w("s2"), false).is_ok());
    }

    #[test]
    fn free_reduction_examples() {
        assert!(w("s1 s1^-1").free_reduce().is_empty());
        assert_eq!(w("s1 s2 s2^-1 s1").free_reduce(), w("s1 s1"));
        assert_eq!(w("v1 s2 s2^-1 v1^-1 s3").free_reduce(), w("s3"));
    }

    #[test]
    fn commutation_aware_reduction() {
        let a12 = pure_braid_generator(1, 2, 5).unwrap();
        let a34 = pure_braid_generator(3, 4, 5).unwrap();
        let c = commutator(&a12, &a34, true).unwrap();
        assert!(!c.free_reduce().is_empty());
        assert!(c.reduce_with_commutations().is_empty());
        let a13 = pure_braid_generator(1, 3, 3).unwrap();
        let c = commutator(&a12, &a13, true).unwrap();
        assert!(!c.reduce_with_commutations().is_empty());
    }

    #[test]
    fn word_text_format() {
        let x = w("s1 s2^-1 t1 v1");
        assert_eq!(x.to_string(), "s1 s2^-1 t1 v1");
        assert_eq!(w(&x.to_string()), x);
        assert_eq!(Word::empty().to_string(), "1");
        assert!(w("1").is_empty());
        for bad in ["x1", "s0", "s1^2", "s", "s1^"] {
            assert!(bad.parse::<Word>().is_err(), "{bad}");
        }
    }
}
