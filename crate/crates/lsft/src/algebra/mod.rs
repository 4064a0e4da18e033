//! Exact Z/2 algebra core.
//!
//! Polynomials come in two disciplines: commutative monomials with a Laurent
//! exponent of the loop variable `t`, and free (ordered-word) monomials used
//! by the Chekanov-Eliashberg style algebras. Coefficients are always Z/2, so
//! a polynomial is just a set of monomials and addition is symmetric
//! difference.

mod bracket;
mod derivation;
mod grading;
mod poly;

pub use bracket::{BracketTable, GlueRule};
pub use derivation::Derivation;
pub use grading::GradingTable;
pub use poly::{Monomial, Poly};

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Monomial discipline of an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Discipline {
    /// Commutative generators with an integer t-exponent per monomial.
    Commutative,
    /// Free associative words; no t.
    FreeWord,
}

/// A tagged algebra generator.
///
/// `Q`/`P` index crossings and right cusps. The alpha and beta families are
/// indexed by pairs of dividing-line points with `i < j`; the `L`/`R` tags
/// distinguish the two lines of a middle or two-sided algebra, while the
/// untagged `Alpha`/`Beta` live in one-line algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GeneratorId {
    Q(u32),
    P(u32),
    AlphaL(u32, u32),
    AlphaR(u32, u32),
    BetaL(u32, u32),
    BetaR(u32, u32),
    Alpha(u32, u32),
    Beta(u32, u32),
}

impl GeneratorId {
    pub fn alpha(i: u32, j: u32) -> Self {
        assert!(i < j, "alpha indices must satisfy i < j");
        GeneratorId::Alpha(i, j)
    }

    pub fn beta(i: u32, j: u32) -> Self {
        assert!(i < j, "beta indices must satisfy i < j");
        GeneratorId::Beta(i, j)
    }

    pub fn alpha_l(i: u32, j: u32) -> Self {
        assert!(i < j);
        GeneratorId::AlphaL(i, j)
    }

    pub fn alpha_r(i: u32, j: u32) -> Self {
        assert!(i < j);
        GeneratorId::AlphaR(i, j)
    }

    pub fn beta_l(i: u32, j: u32) -> Self {
        assert!(i < j);
        GeneratorId::BetaL(i, j)
    }

    pub fn beta_r(i: u32, j: u32) -> Self {
        assert!(i < j);
        GeneratorId::BetaR(i, j)
    }

    /// Short machine-stable tag used by the JSON forms.
    pub fn tag(&self) -> &'static str {
        match self {
            GeneratorId::Q(_) => "q",
            GeneratorId::P(_) => "p",
            GeneratorId::AlphaL(..) => "aL",
            GeneratorId::AlphaR(..) => "aR",
            GeneratorId::BetaL(..) => "bL",
            GeneratorId::BetaR(..) => "bR",
            GeneratorId::Alpha(..) => "a",
            GeneratorId::Beta(..) => "b",
        }
    }

    pub fn indices(&self) -> (u32, u32) {
        match *self {
            GeneratorId::Q(i) | GeneratorId::P(i) => (i, 0),
            GeneratorId::AlphaL(i, j)
            | GeneratorId::AlphaR(i, j)
            | GeneratorId::BetaL(i, j)
            | GeneratorId::BetaR(i, j)
            | GeneratorId::Alpha(i, j)
            | GeneratorId::Beta(i, j) => (i, j),
        }
    }

    pub fn is_pq(&self) -> bool {
        matches!(self, GeneratorId::Q(_) | GeneratorId::P(_))
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GeneratorId::Q(i) => write!(f, "q{i}"),
            GeneratorId::P(i) => write!(f, "p{i}"),
            GeneratorId::AlphaL(i, j) => write_pair(f, "aL", i, j),
            GeneratorId::AlphaR(i, j) => write_pair(f, "aR", i, j),
            GeneratorId::BetaL(i, j) => write_pair(f, "bL", i, j),
            GeneratorId::BetaR(i, j) => write_pair(f, "bR", i, j),
            GeneratorId::Alpha(i, j) => write_pair(f, "a", i, j),
            GeneratorId::Beta(i, j) => write_pair(f, "b", i, j),
        }
    }
}

fn write_pair(f: &mut fmt::Formatter<'_>, tag: &str, i: u32, j: u32) -> fmt::Result {
    if i < 10 && j < 10 {
        write!(f, "{tag}{i}{j}")
    } else {
        write!(f, "{tag}{i}_{j}")
    }
}

/// A generator-to-polynomial assignment extended multiplicatively, i.e. an
/// algebra map on generators. `t` maps to `t` unless overridden.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenMap {
    pub discipline: Discipline,
    pub images: BTreeMap<GeneratorId, Poly>,
    /// Image of `t`; `None` means `t` is fixed.
    pub t_image: Option<Poly>,
}

impl GenMap {
    pub fn new(discipline: Discipline) -> Self {
        GenMap { discipline, images: BTreeMap::new(), t_image: None }
    }

    pub fn insert(&mut self, g: GeneratorId, image: Poly) {
        self.images.insert(g, image);
    }

    pub fn image_of(&self, g: GeneratorId) -> Result<&Poly> {
        self.images.get(&g).ok_or(Error::UnknownGenerator { gen: g.to_string() })
    }

    /// Apply the map to a polynomial, extending additively and
    /// multiplicatively.
    pub fn apply(&self, x: &Poly) -> Result<Poly> {
        let mut out = Poly::zero(self.discipline);
        for m in x.monomials() {
            let mut term = Poly::one(self.discipline);
            match m {
                Monomial::Commutative { gens, t_exp } => {
                    for (g, e) in gens {
                        let img = self.image_of(*g)?;
                        for _ in 0..*e {
                            term = term.mul(&img.clone())?;
                        }
                    }
                    if *t_exp != 0 {
                        match &self.t_image {
                            None => term = term.mul(&Poly::t_power(*t_exp))?,
                            Some(tf) => {
                                if *t_exp < 0 {
                                    return Err(Error::UnknownGenerator { gen: "t^-1".into() });
                                }
                                for _ in 0..*t_exp {
                                    term = term.mul(&tf.clone())?;
                                }
                            }
                        }
                    }
                }
                Monomial::Word(word) => {
                    for g in word {
                        let img = self.image_of(*g)?;
                        term = term.mul(img)?;
                    }
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Compose `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &GenMap) -> Result<GenMap> {
        let mut out = GenMap::new(self.discipline);
        for (g, img) in &other.images {
            out.insert(*g, self.apply(img)?);
        }
        out.t_image = match &other.t_image {
            None => self.t_image.clone(),
            Some(tf) => Some(self.apply(tf)?),
        };
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_display() {
        assert_eq!(GeneratorId::Q(3).to_string(), "q3");
        assert_eq!(GeneratorId::alpha_l(1, 3).to_string(), "aL13");
        assert_eq!(GeneratorId::beta_r(3, 4).to_string(), "bR34");
        assert_eq!(GeneratorId::alpha(10, 13).to_string(), "a10_13");
    }

    #[test]
    fn canonical_order_by_tag_then_indices() {
        let mut v = vec![
            GeneratorId::beta(1, 2),
            GeneratorId::P(0),
            GeneratorId::Q(2),
            GeneratorId::Q(0),
            GeneratorId::alpha(1, 4),
            GeneratorId::alpha(1, 2),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                GeneratorId::Q(0),
                GeneratorId::Q(2),
                GeneratorId::P(0),
                GeneratorId::alpha(1, 2),
                GeneratorId::alpha(1, 4),
                GeneratorId::beta(1, 2),
            ]
        );
    }
}
