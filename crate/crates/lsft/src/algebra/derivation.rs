use super::{Discipline, GeneratorId, Monomial, Poly};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// A Leibniz derivation given by its values on generators.
///
/// Over Z/2 there are no signs: d(uv) = d(u)v + u d(v) in both disciplines.
/// `t_image` holds d(t); it is zero except for bordered string differentials,
/// where the t-loop crosses every dividing-line jump once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub discipline: Discipline,
    pub images: BTreeMap<GeneratorId, Poly>,
    /// d(t) = t_image (and d(t^-1) = t^-2 * t_image). None means zero.
    pub t_image: Option<Poly>,
}

impl Derivation {
    pub fn new(discipline: Discipline) -> Self {
        Derivation { discipline, images: BTreeMap::new(), t_image: None }
    }

    pub fn insert(&mut self, g: GeneratorId, image: Poly) {
        self.images.insert(g, image);
    }

    pub fn image_of(&self, g: GeneratorId) -> Result<&Poly> {
        self.images.get(&g).ok_or(Error::UnknownGenerator { gen: g.to_string() })
    }

    pub fn apply_gen(&self, g: GeneratorId) -> Result<Poly> {
        self.image_of(g).cloned()
    }

    /// Leibniz extension to a monomial.
    fn apply_monomial(&self, m: &Monomial) -> Result<Poly> {
        let mut out = Poly::zero(self.discipline);
        match m {
            Monomial::Commutative { gens, t_exp } => {
                // d(g^e * rest) = e g^{e-1} d(g) rest; only odd e survives.
                for (g, e) in gens {
                    if e % 2 == 0 {
                        continue;
                    }
                    let mut rest = gens.clone();
                    if *e == 1 {
                        rest.remove(g);
                    } else {
                        rest.insert(*g, e - 1);
                    }
                    let rest_m = Monomial::Commutative { gens: rest, t_exp: *t_exp };
                    let term =
                        Poly::from_monomial(rest_m).mul(self.image_of(*g)?)?;
                    out = out.add(&term)?;
                }
                if t_exp.rem_euclid(2) == 1 {
                    if let Some(dt) = &self.t_image {
                        // d(t^k) = k t^{k-1} d(t); d(t) itself already carries
                        // one factor of t in our uses, but we keep the general
                        // rule: multiply by t^{k-1}.
                        let term = Poly::t_power(t_exp - 1).mul(dt)?;
                        let rest =
                            Monomial::Commutative { gens: gens.clone(), t_exp: 0 };
                        out = out.add(&Poly::from_monomial(rest).mul(&term)?)?;
                    }
                }
            }
            Monomial::Word(w) => {
                for (i, g) in w.iter().enumerate() {
                    let left = Poly::from_monomial(Monomial::Word(w[..i].to_vec()));
                    let right = Poly::from_monomial(Monomial::Word(w[i + 1..].to_vec()));
                    let term = left.mul(self.image_of(*g)?)?.mul(&right)?;
                    out = out.add(&term)?;
                }
            }
        }
        Ok(out)
    }

    /// Apply to a polynomial by linearity.
    pub fn apply(&self, x: &Poly) -> Result<Poly> {
        if x.discipline() != self.discipline {
            return Err(Error::DisciplineMismatch {
                left: self.discipline,
                right: x.discipline(),
            });
        }
        let mut out = Poly::zero(self.discipline);
        for m in x.monomials() {
            out = out.add(&self.apply_monomial(m)?)?;
        }
        Ok(out)
    }

    /// Pointwise sum of two derivations on the same generator set.
    pub fn add(&self, other: &Derivation) -> Result<Derivation> {
        let mut out = Derivation::new(self.discipline);
        let keys: std::collections::BTreeSet<_> =
            self.images.keys().chain(other.images.keys()).copied().collect();
        for g in keys {
            let zero = Poly::zero(self.discipline);
            let a = self.images.get(&g).unwrap_or(&zero);
            let b = other.images.get(&g).unwrap_or(&zero);
            out.insert(g, a.add(b)?);
        }
        out.t_image = match (&self.t_image, &other.t_image) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (Some(a), Some(b)) => {
                let s = a.add(b)?;
                if s.is_zero() {
                    None
                } else {
                    Some(s)
                }
            }
        };
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(d: Discipline, g: GeneratorId) -> Poly {
        Poly::generator(d, g)
    }

    #[test]
    fn leibniz_forced_on_products() {
        // D(q0) = p1, D(q1) = p0: derive(q0 q1) = p1 q1 + q0 p0.
        let d = Discipline::Commutative;
        let mut dv = Derivation::new(d);
        dv.insert(GeneratorId::Q(0), gen(d, GeneratorId::P(1)));
        dv.insert(GeneratorId::Q(1), gen(d, GeneratorId::P(0)));
        let x = gen(d, GeneratorId::Q(0)).mul(&gen(d, GeneratorId::Q(1))).unwrap();
        let got = dv.apply(&x).unwrap();
        let want = gen(d, GeneratorId::P(1))
            .mul(&gen(d, GeneratorId::Q(1)))
            .unwrap()
            .add(&gen(d, GeneratorId::Q(0)).mul(&gen(d, GeneratorId::P(0))).unwrap())
            .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn derivation_kills_units() {
        let d = Discipline::Commutative;
        let dv = Derivation::new(d);
        assert!(dv.apply(&Poly::one(d)).unwrap().is_zero());
    }

    #[test]
    fn squares_die_in_char_two() {
        let d = Discipline::Commutative;
        let mut dv = Derivation::new(d);
        dv.insert(GeneratorId::Q(0), Poly::one(d));
        let sq = gen(d, GeneratorId::Q(0)).mul(&gen(d, GeneratorId::Q(0))).unwrap();
        assert!(dv.apply(&sq).unwrap().is_zero());
    }

    #[test]
    fn word_leibniz_keeps_order() {
        let d = Discipline::FreeWord;
        let mut dv = Derivation::new(d);
        dv.insert(GeneratorId::Q(0), Poly::one(d));
        dv.insert(GeneratorId::Q(1), Poly::zero(d));
        // d(q1 q0 q1) = q1 * 1 * q1 = q1 q1.
        let w = Poly::from_monomial(Monomial::Word(vec![
            GeneratorId::Q(1),
            GeneratorId::Q(0),
            GeneratorId::Q(1),
        ]));
        let got = dv.apply(&w).unwrap();
        assert_eq!(got.text(), "q1*q1");
    }
}
