use super::{GeneratorId, Monomial};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Integer gradings for the generators of one algebra, plus the degree of `t`
/// and an optional reduction modulus (0 means no reduction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingTable {
    pub degrees: BTreeMap<GeneratorId, i64>,
    pub t_degree: i64,
    pub modulus: i64,
}

impl GradingTable {
    pub fn new(t_degree: i64, modulus: i64) -> Self {
        assert!(modulus >= 0);
        GradingTable { degrees: BTreeMap::new(), t_degree, modulus }
    }

    pub fn set(&mut self, g: GeneratorId, degree: i64) {
        self.degrees.insert(g, degree);
    }

    pub fn reduce(&self, d: i64) -> i64 {
        if self.modulus == 0 {
            d
        } else {
            d.rem_euclid(self.modulus)
        }
    }

    pub fn degree_of(&self, g: GeneratorId) -> Result<i64> {
        self.degrees
            .get(&g)
            .copied()
            .map(|d| self.reduce(d))
            .ok_or(Error::UngradedGenerator { gen: g.to_string() })
    }

    /// Degree of a monomial: sum of generator degrees plus `t_exp * t_degree`,
    /// reduced by the modulus.
    pub fn degree(&self, m: &Monomial) -> Result<i64> {
        let mut d = m.t_exp() * self.t_degree;
        for (g, e) in m.generator_counts() {
            let dg = self
                .degrees
                .get(&g)
                .copied()
                .ok_or(Error::UngradedGenerator { gen: g.to_string() })?;
            d += dg * e as i64;
        }
        Ok(self.reduce(d))
    }

    /// Degree of a polynomial if homogeneous, `Ok(None)` for zero.
    pub fn homogeneous_degree(&self, p: &super::Poly) -> Result<Option<i64>> {
        let mut deg = None;
        for m in p.monomials() {
            let d = self.degree(m)?;
            match deg {
                None => deg = Some(d),
                Some(prev) if prev == d => {}
                Some(prev) => {
                    return Err(Error::UngradedGenerator {
                        gen: format!("inhomogeneous polynomial: degrees {prev} and {d}"),
                    })
                }
            }
        }
        Ok(deg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Discipline, Poly};

    #[test]
    fn unit_has_degree_zero() {
        let g = GradingTable::new(0, 0);
        assert_eq!(g.degree(&Monomial::one(Discipline::Commutative)).unwrap(), 0);
    }

    #[test]
    fn beta_degree_example() {
        let mut g = GradingTable::new(0, 0);
        g.set(GeneratorId::beta_l(1, 3), -1);
        assert_eq!(g.degree_of(GeneratorId::beta_l(1, 3)).unwrap(), -1);
    }

    #[test]
    fn telescoping_alpha_pair() {
        // |aL12| + |aR12| = (mu1 - mu2 - 1) + (mu2 - mu1 - 1) = -2.
        let (mu1, mu2) = (0i64, -1i64);
        let mut g = GradingTable::new(0, 0);
        g.set(GeneratorId::alpha_l(1, 2), mu1 - mu2 - 1);
        g.set(GeneratorId::alpha_r(1, 2), mu2 - mu1 - 1);
        let m = Poly::generator(Discipline::Commutative, GeneratorId::alpha_l(1, 2))
            .mul(&Poly::generator(Discipline::Commutative, GeneratorId::alpha_r(1, 2)))
            .unwrap();
        let mono = m.monomials().next().unwrap().clone();
        assert_eq!(g.degree(&mono).unwrap(), -2);
    }

    #[test]
    fn modulus_reduction() {
        let mut g = GradingTable::new(-4, 4);
        g.set(GeneratorId::Q(0), 5);
        assert_eq!(g.degree_of(GeneratorId::Q(0)).unwrap(), 1);
        let m = Monomial::Commutative { gens: Default::default(), t_exp: 1 };
        assert_eq!(g.degree(&m).unwrap(), 0);
    }
}
