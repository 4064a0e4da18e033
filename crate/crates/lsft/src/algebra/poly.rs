use super::{Discipline, GeneratorId};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A monomial: either a commutative generator multiset with a t-exponent, or
/// an ordered generator word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Monomial {
    Commutative {
        /// Generator -> positive exponent, canonically sorted.
        gens: BTreeMap<GeneratorId, u32>,
        t_exp: i64,
    },
    Word(Vec<GeneratorId>),
}

impl Monomial {
    pub fn one(discipline: Discipline) -> Self {
        match discipline {
            Discipline::Commutative => Monomial::Commutative { gens: BTreeMap::new(), t_exp: 0 },
            Discipline::FreeWord => Monomial::Word(Vec::new()),
        }
    }

    pub fn discipline(&self) -> Discipline {
        match self {
            Monomial::Commutative { .. } => Discipline::Commutative,
            Monomial::Word(_) => Discipline::FreeWord,
        }
    }

    pub fn generator(discipline: Discipline, g: GeneratorId) -> Self {
        match discipline {
            Discipline::Commutative => {
                Monomial::Commutative { gens: [(g, 1)].into_iter().collect(), t_exp: 0 }
            }
            Discipline::FreeWord => Monomial::Word(vec![g]),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Monomial::Commutative { gens, t_exp } => gens.is_empty() && *t_exp == 0,
            Monomial::Word(w) => w.is_empty(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        match (self, other) {
            (
                Monomial::Commutative { gens: a, t_exp: ta },
                Monomial::Commutative { gens: b, t_exp: tb },
            ) => {
                let mut gens = a.clone();
                for (g, e) in b {
                    *gens.entry(*g).or_insert(0) += e;
                }
                Ok(Monomial::Commutative { gens, t_exp: ta + tb })
            }
            (Monomial::Word(a), Monomial::Word(b)) => {
                let mut w = a.clone();
                w.extend_from_slice(b);
                Ok(Monomial::Word(w))
            }
            _ => Err(Error::DisciplineMismatch {
                left: self.discipline(),
                right: other.discipline(),
            }),
        }
    }

    /// Generators with their multiplicities (word letters are counted).
    pub fn generator_counts(&self) -> BTreeMap<GeneratorId, u32> {
        match self {
            Monomial::Commutative { gens, .. } => gens.clone(),
            Monomial::Word(w) => {
                let mut m = BTreeMap::new();
                for g in w {
                    *m.entry(*g).or_insert(0) += 1;
                }
                m
            }
        }
    }

    pub fn t_exp(&self) -> i64 {
        match self {
            Monomial::Commutative { t_exp, .. } => *t_exp,
            Monomial::Word(_) => 0,
        }
    }

    pub fn contains(&self, g: GeneratorId) -> bool {
        match self {
            Monomial::Commutative { gens, .. } => gens.contains_key(&g),
            Monomial::Word(w) => w.contains(&g),
        }
    }

    /// Abelianize a word monomial (identity on commutative ones).
    pub fn abelianized(&self) -> Monomial {
        match self {
            Monomial::Commutative { .. } => self.clone(),
            Monomial::Word(w) => {
                let mut gens = BTreeMap::new();
                for g in w {
                    *gens.entry(*g).or_insert(0) += 1;
                }
                Monomial::Commutative { gens, t_exp: 0 }
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = Vec::new();
        match self {
            Monomial::Commutative { gens, t_exp } => {
                match *t_exp {
                    0 => {}
                    1 => parts.push("t".into()),
                    e => parts.push(format!("t^{e}")),
                }
                for (g, e) in gens {
                    match *e {
                        1 => parts.push(g.to_string()),
                        e => parts.push(format!("{g}^{e}")),
                    }
                }
            }
            Monomial::Word(w) => {
                for g in w {
                    parts.push(g.to_string());
                }
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// A Z/2 polynomial: a set of monomials, addition by symmetric difference.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    discipline: Discipline,
    monomials: BTreeSet<Monomial>,
}

impl Poly {
    pub fn zero(discipline: Discipline) -> Self {
        Poly { discipline, monomials: BTreeSet::new() }
    }

    pub fn one(discipline: Discipline) -> Self {
        Poly::from_monomial(Monomial::one(discipline))
    }

    pub fn generator(discipline: Discipline, g: GeneratorId) -> Self {
        Poly::from_monomial(Monomial::generator(discipline, g))
    }

    /// `t^k` in the commutative discipline.
    pub fn t_power(k: i64) -> Self {
        Poly::from_monomial(Monomial::Commutative { gens: BTreeMap::new(), t_exp: k })
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let d = m.discipline();
        Poly { discipline: d, monomials: [m].into_iter().collect() }
    }

    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(
        discipline: Discipline,
        it: I,
    ) -> Result<Self> {
        let mut p = Poly::zero(discipline);
        for m in it {
            if m.discipline() != discipline {
                return Err(Error::DisciplineMismatch { left: discipline, right: m.discipline() });
            }
            p.toggle(m);
        }
        Ok(p)
    }

    pub fn discipline(&self) -> Discipline {
        self.discipline
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Flip the presence of a monomial (Z/2 addition of one term).
    pub fn toggle(&mut self, m: Monomial) {
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        if self.discipline != other.discipline {
            return Err(Error::DisciplineMismatch {
                left: self.discipline,
                right: other.discipline,
            });
        }
        let mut out = self.clone();
        for m in &other.monomials {
            out.toggle(m.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        if self.discipline != other.discipline {
            return Err(Error::DisciplineMismatch {
                left: self.discipline,
                right: other.discipline,
            });
        }
        let mut out = Poly::zero(self.discipline);
        for a in &self.monomials {
            for b in &other.monomials {
                out.toggle(a.mul(b)?);
            }
        }
        Ok(out)
    }

    pub fn mul_gen(&self, g: GeneratorId) -> Poly {
        self.mul(&Poly::generator(self.discipline, g)).expect("same discipline")
    }

    /// Map every word monomial to its commutative image.
    pub fn abelianized(&self) -> Poly {
        let mut out = Poly::zero(Discipline::Commutative);
        for m in &self.monomials {
            out.toggle(m.abelianized());
        }
        out
    }

    /// Set t = 1 (commutative discipline only; identity otherwise).
    pub fn set_t_to_one(&self) -> Poly {
        let mut out = Poly::zero(self.discipline);
        for m in &self.monomials {
            match m {
                Monomial::Commutative { gens, .. } => {
                    out.toggle(Monomial::Commutative { gens: gens.clone(), t_exp: 0 })
                }
                w => out.toggle(w.clone()),
            }
        }
        out
    }

    /// Drop every monomial containing a `P` generator.
    pub fn without_p(&self) -> Poly {
        let mut out = Poly::zero(self.discipline);
        for m in &self.monomials {
            let has_p = m.generator_counts().keys().any(|g| matches!(g, GeneratorId::P(_)));
            if !has_p {
                out.toggle(m.clone());
            }
        }
        out
    }

    /// Deterministic text form: monomials in canonical order joined by " + ".
    pub fn text(&self) -> String {
        if self.monomials.is_empty() {
            return "0".into();
        }
        self.monomials.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" + ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

/// JSON form of a monomial: `{"t": k, "gens": [[tag, i, j, exp], ...]}`.
#[derive(Serialize, Deserialize)]
struct MonomialJson {
    t: i64,
    gens: Vec<(String, u32, u32, u32)>,
}

impl Poly {
    pub fn to_json(&self) -> serde_json::Value {
        let arr: Vec<MonomialJson> = self
            .monomials
            .iter()
            .map(|m| {
                let t = m.t_exp();
                let gens = match m {
                    Monomial::Commutative { gens, .. } => gens
                        .iter()
                        .map(|(g, e)| {
                            let (i, j) = g.indices();
                            (g.tag().to_string(), i, j, *e)
                        })
                        .collect(),
                    Monomial::Word(w) => w
                        .iter()
                        .map(|g| {
                            let (i, j) = g.indices();
                            (g.tag().to_string(), i, j, 1)
                        })
                        .collect(),
                };
                MonomialJson { t, gens }
            })
            .collect();
        serde_json::to_value(arr).expect("poly json")
    }

    pub fn from_json(discipline: Discipline, v: &serde_json::Value) -> Result<Poly> {
        let arr: Vec<MonomialJson> = serde_json::from_value(v.clone())
            .map_err(|e| Error::MalformedInput { line: 0, msg: format!("poly json: {e}") })?;
        let mut out = Poly::zero(discipline);
        for mj in arr {
            let mut gens: Vec<(GeneratorId, u32)> = Vec::new();
            for (tag, i, j, e) in mj.gens {
                let g = match tag.as_str() {
                    "q" => GeneratorId::Q(i),
                    "p" => GeneratorId::P(i),
                    "aL" => GeneratorId::AlphaL(i, j),
                    "aR" => GeneratorId::AlphaR(i, j),
                    "bL" => GeneratorId::BetaL(i, j),
                    "bR" => GeneratorId::BetaR(i, j),
                    "a" => GeneratorId::Alpha(i, j),
                    "b" => GeneratorId::Beta(i, j),
                    other => {
                        return Err(Error::MalformedInput {
                            line: 0,
                            msg: format!("unknown generator tag {other}"),
                        })
                    }
                };
                gens.push((g, e));
            }
            let m = match discipline {
                Discipline::Commutative => Monomial::Commutative {
                    gens: gens.into_iter().collect(),
                    t_exp: mj.t,
                },
                Discipline::FreeWord => {
                    let mut w = Vec::new();
                    for (g, e) in gens {
                        for _ in 0..e {
                            w.push(g);
                        }
                    }
                    Monomial::Word(w)
                }
            };
            out.toggle(m);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(i: u32) -> Poly {
        Poly::generator(Discipline::Commutative, GeneratorId::Q(i))
    }
    fn p(i: u32) -> Poly {
        Poly::generator(Discipline::Commutative, GeneratorId::P(i))
    }

    #[test]
    fn char_two_addition() {
        let x = q(0).mul(&p(1)).unwrap();
        assert!(x.add(&x).unwrap().is_zero());
        let a = p(1);
        let b = p(0).add(&p(2)).unwrap();
        assert_eq!(a.add(&b).unwrap().text(), "p0 + p1 + p2");
    }

    #[test]
    fn triple_term_cancellation() {
        // q0 p1 q1 + q0 p1 q1 + q0 p2 q2 = q0 p2 q2
        let m1 = q(0).mul(&p(1)).unwrap().mul(&q(1)).unwrap();
        let m2 = q(0).mul(&p(2)).unwrap().mul(&q(2)).unwrap();
        let s = m1.add(&m1).unwrap().add(&m2).unwrap();
        assert_eq!(s, m2);
    }

    #[test]
    fn t_inverse_is_structural() {
        let t = Poly::t_power(1);
        let tinv = Poly::t_power(-1);
        assert_eq!(t.mul(&tinv).unwrap(), Poly::one(Discipline::Commutative));
    }

    #[test]
    fn mul_by_zero() {
        let z = Poly::zero(Discipline::Commutative);
        assert!(q(0).mul(&z).unwrap().is_zero());
    }

    #[test]
    fn distribution_matches_table() {
        // q0 * (p1 q1 + p2 q2) = q0 p1 q1 + q0 p2 q2
        let s = p(1).mul(&q(1)).unwrap().add(&p(2).mul(&q(2)).unwrap()).unwrap();
        let got = q(0).mul(&s).unwrap();
        assert_eq!(got.text(), "q0*q1*p1 + q0*q2*p2");
    }

    #[test]
    fn discipline_mismatch_detected() {
        let w = Poly::generator(Discipline::FreeWord, GeneratorId::Q(0));
        assert!(matches!(q(0).add(&w), Err(Error::DisciplineMismatch { .. })));
    }

    #[test]
    fn word_multiplication_concatenates() {
        let a = Poly::generator(Discipline::FreeWord, GeneratorId::Q(0));
        let b = Poly::generator(Discipline::FreeWord, GeneratorId::Q(1));
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        assert_ne!(ab, ba);
        assert_eq!(ab.text(), "q0*q1");
    }

    #[test]
    fn json_round_trip() {
        let x = Poly::t_power(-2)
            .mul(&q(0))
            .unwrap()
            .add(&p(3).mul(&p(3)).unwrap())
            .unwrap();
        let v = x.to_json();
        let back = Poly::from_json(Discipline::Commutative, &v).unwrap();
        assert_eq!(x, back);
    }
}
