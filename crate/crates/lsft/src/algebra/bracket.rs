use super::{Discipline, GeneratorId, GradingTable, Monomial, Poly};
use crate::error::{Error, Result};

/// Which alpha family a chain-gluing rule acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AlphaFamily {
    Plain,
    Left,
    Right,
}

impl AlphaFamily {
    fn alpha(&self, i: u32, j: u32) -> GeneratorId {
        match self {
            AlphaFamily::Plain => GeneratorId::Alpha(i, j),
            AlphaFamily::Left => GeneratorId::AlphaL(i, j),
            AlphaFamily::Right => GeneratorId::AlphaR(i, j),
        }
    }

    fn matches_alpha(&self, g: GeneratorId) -> Option<(u32, u32)> {
        match (self, g) {
            (AlphaFamily::Plain, GeneratorId::Alpha(i, j)) => Some((i, j)),
            (AlphaFamily::Left, GeneratorId::AlphaL(i, j)) => Some((i, j)),
            (AlphaFamily::Right, GeneratorId::AlphaR(i, j)) => Some((i, j)),
            _ => None,
        }
    }

    fn matches_beta(&self, g: GeneratorId) -> Option<(u32, u32)> {
        match (self, g) {
            (AlphaFamily::Plain, GeneratorId::Beta(i, j)) => Some((i, j)),
            (AlphaFamily::Left, GeneratorId::BetaL(i, j)) => Some((i, j)),
            (AlphaFamily::Right, GeneratorId::BetaR(i, j)) => Some((i, j)),
            _ => None,
        }
    }
}

/// One directed gluing rule. `arrow(x, y)` applies each rule with its first
/// slot taken from `x` and second from `y`; the symmetric bracket is
/// `arrow(x, y) + arrow(y, x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GlueRule {
    /// p_i in x glues to q_i in y, producing 1.
    PQ,
    /// alpha_ij in x glues to alpha_jk in y, producing alpha_ik.
    AlphaChain(AlphaFamily),
    /// beta_kl in x against alpha_ij in y with exactly one shared index,
    /// producing alpha_ij again.
    BetaAlpha(AlphaFamily),
}

/// The SFT bracket of one algebra: a symmetric biderivation generated by
/// gluing rules on generator pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketTable {
    pub rules: Vec<GlueRule>,
}

impl BracketTable {
    /// Closed theory: only p/q gluing.
    pub fn closed() -> Self {
        BracketTable { rules: vec![GlueRule::PQ] }
    }

    /// One-line bordered theory (left or right half algebra).
    pub fn one_line() -> Self {
        BracketTable {
            rules: vec![
                GlueRule::PQ,
                GlueRule::AlphaChain(AlphaFamily::Plain),
                GlueRule::BetaAlpha(AlphaFamily::Plain),
            ],
        }
    }

    /// Two-line theory (middle and two-sided algebras). Generators with
    /// different line tags never glue.
    pub fn two_line() -> Self {
        BracketTable {
            rules: vec![
                GlueRule::PQ,
                GlueRule::AlphaChain(AlphaFamily::Left),
                GlueRule::AlphaChain(AlphaFamily::Right),
                GlueRule::BetaAlpha(AlphaFamily::Left),
                GlueRule::BetaAlpha(AlphaFamily::Right),
            ],
        }
    }

    /// Asymmetric gluing: p's and alpha-left-slots of `x` against q's and
    /// alpha-right-slots of `y`.
    pub fn arrow(&self, x: &Poly, y: &Poly) -> Result<Poly> {
        if x.discipline() != Discipline::Commutative || y.discipline() != Discipline::Commutative {
            return Err(Error::DisciplineMismatch {
                left: x.discipline(),
                right: y.discipline(),
            });
        }
        let mut out = Poly::zero(Discipline::Commutative);
        for mx in x.monomials() {
            for my in y.monomials() {
                self.arrow_monomials(mx, my, &mut out)?;
            }
        }
        Ok(out)
    }

    fn arrow_monomials(&self, mx: &Monomial, my: &Monomial, out: &mut Poly) -> Result<()> {
        let gx = mx.generator_counts();
        let gy = my.generator_counts();
        for rule in &self.rules {
            match rule {
                GlueRule::PQ => {
                    for (g, a) in &gx {
                        let GeneratorId::P(i) = g else { continue };
                        if let Some(b) = gy.get(&GeneratorId::Q(*i)) {
                            if (a * b) % 2 == 1 {
                                let m = mul3(
                                    &divide(mx, *g),
                                    &divide(my, GeneratorId::Q(*i)),
                                    None,
                                )?;
                                out.toggle(m);
                            }
                        }
                    }
                }
                GlueRule::AlphaChain(fam) => {
                    for (g, a) in &gx {
                        let Some((i, j)) = fam.matches_alpha(*g) else { continue };
                        for (h, b) in &gy {
                            let Some((j2, k)) = fam.matches_alpha(*h) else { continue };
                            if j2 != j {
                                continue;
                            }
                            if (a * b) % 2 == 1 {
                                let m = mul3(
                                    &divide(mx, *g),
                                    &divide(my, *h),
                                    Some(fam.alpha(i, k)),
                                )?;
                                out.toggle(m);
                            }
                        }
                    }
                }
                GlueRule::BetaAlpha(fam) => {
                    for (g, a) in &gx {
                        let Some((k, l)) = fam.matches_beta(*g) else { continue };
                        for (h, b) in &gy {
                            let Some((i, j)) = fam.matches_alpha(*h) else { continue };
                            let shared = [i, j]
                                .iter()
                                .filter(|x| **x == k || **x == l)
                                .count();
                            if shared != 1 {
                                continue;
                            }
                            if (a * b) % 2 == 1 {
                                // alpha_ij survives: divide out beta only.
                                let m = mul3(&divide(mx, *g), my, None)?;
                                out.toggle(m);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Symmetric SFT bracket.
    pub fn bracket(&self, x: &Poly, y: &Poly) -> Result<Poly> {
        self.arrow(x, y)?.add(&self.arrow(y, x)?)
    }

    /// Bracket of two single generators (the raw table).
    pub fn gen_bracket(&self, g: GeneratorId, h: GeneratorId) -> Result<Poly> {
        let d = Discipline::Commutative;
        self.bracket(&Poly::generator(d, g), &Poly::generator(d, h))
    }

    /// Check deg{x,y} = deg x + deg y + 1 on every nonzero generator-pair
    /// bracket. Returns offending pairs.
    pub fn check_degrees(
        &self,
        grading: &GradingTable,
        gens: &[GeneratorId],
    ) -> Result<Vec<(GeneratorId, GeneratorId)>> {
        let mut bad = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            for h in &gens[i..] {
                let b = self.gen_bracket(*g, *h)?;
                if b.is_zero() {
                    continue;
                }
                let want = grading.reduce(grading.degree_of(*g)? + grading.degree_of(*h)? + 1);
                match grading.homogeneous_degree(&b)? {
                    Some(d) if d == want => {}
                    _ => bad.push((*g, *h)),
                }
            }
        }
        Ok(bad)
    }
}

fn divide(m: &Monomial, g: GeneratorId) -> Monomial {
    match m {
        Monomial::Commutative { gens, t_exp } => {
            let mut gens = gens.clone();
            match gens.get_mut(&g) {
                Some(e) if *e > 1 => *e -= 1,
                Some(_) => {
                    gens.remove(&g);
                }
                None => panic!("divide: {g} not in monomial"),
            }
            Monomial::Commutative { gens, t_exp: *t_exp }
        }
        Monomial::Word(_) => panic!("bracket is commutative-only"),
    }
}

fn mul3(a: &Monomial, b: &Monomial, extra: Option<GeneratorId>) -> Result<Monomial> {
    let mut m = a.mul(b)?;
    if let Some(g) = extra {
        m = m.mul(&Monomial::generator(Discipline::Commutative, g))?;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(g: GeneratorId) -> Poly {
        Poly::generator(Discipline::Commutative, g)
    }

    #[test]
    fn pq_gluing_is_asymmetric() {
        let b = BracketTable::closed();
        let one = Poly::one(Discipline::Commutative);
        assert_eq!(b.arrow(&gp(GeneratorId::P(1)), &gp(GeneratorId::Q(1))).unwrap(), one);
        assert!(b.arrow(&gp(GeneratorId::Q(1)), &gp(GeneratorId::P(1))).unwrap().is_zero());
    }

    #[test]
    fn alpha_chain_gluing() {
        let b = BracketTable::one_line();
        let a12 = gp(GeneratorId::alpha(1, 2));
        let a23 = gp(GeneratorId::alpha(2, 3));
        assert_eq!(b.arrow(&a12, &a23).unwrap(), gp(GeneratorId::alpha(1, 3)));
        assert!(b.arrow(&a23, &a12).unwrap().is_zero());
        assert_eq!(b.bracket(&a12, &a23).unwrap(), gp(GeneratorId::alpha(1, 3)));
    }

    #[test]
    fn bracket_kills_units() {
        let b = BracketTable::one_line();
        let one = Poly::one(Discipline::Commutative);
        assert!(b.bracket(&gp(GeneratorId::P(0)), &one).unwrap().is_zero());
    }

    #[test]
    fn beta_incidence() {
        let b = BracketTable::one_line();
        let a13 = gp(GeneratorId::alpha(1, 3));
        let b34 = gp(GeneratorId::beta(3, 4));
        let b13 = gp(GeneratorId::beta(1, 3));
        assert_eq!(b.bracket(&a13, &b34).unwrap(), a13);
        // both indices shared: no gluing
        assert!(b.bracket(&a13, &b13).unwrap().is_zero());
    }

    #[test]
    fn cross_line_brackets_vanish() {
        let b = BracketTable::two_line();
        let al = gp(GeneratorId::alpha_l(1, 2));
        let ar = gp(GeneratorId::alpha_r(2, 3));
        assert!(b.bracket(&al, &ar).unwrap().is_zero());
    }

    #[test]
    fn bracket_equals_arrow_plus_arrow_transposed() {
        let b = BracketTable::one_line();
        let x = gp(GeneratorId::P(1))
            .mul(&gp(GeneratorId::alpha(1, 2)))
            .unwrap()
            .add(&gp(GeneratorId::beta(1, 2)))
            .unwrap();
        let y = gp(GeneratorId::Q(1)).mul(&gp(GeneratorId::alpha(2, 4))).unwrap();
        let lhs = b.bracket(&x, &y).unwrap();
        let rhs = b.arrow(&x, &y).unwrap().add(&b.arrow(&y, &x).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
