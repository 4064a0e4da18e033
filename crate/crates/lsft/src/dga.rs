//! Differential graded algebras and their morphisms, with the generic
//! verification machinery (d squared, degrees, chain maps, brackets).

use crate::algebra::{
    BracketTable, Derivation, Discipline, GenMap, GeneratorId, GradingTable, Poly,
};
use crate::error::Result;
use crate::report::{Check, Report};

/// A generator-presented differential graded algebra over Z/2.
#[derive(Debug, Clone)]
pub struct Dga {
    pub name: String,
    pub discipline: Discipline,
    pub generators: Vec<GeneratorId>,
    pub grading: GradingTable,
    pub differential: Derivation,
    pub hamiltonian: Option<Poly>,
    pub bracket: Option<BracketTable>,
    /// Whether the algebra carries the Laurent generator t.
    pub has_t: bool,
}

impl Dga {
    pub fn d(&self, x: &Poly) -> Result<Poly> {
        self.differential.apply(x)
    }

    pub fn d_gen(&self, g: GeneratorId) -> Result<Poly> {
        self.differential.apply_gen(g)
    }

    pub fn gen_poly(&self, g: GeneratorId) -> Poly {
        Poly::generator(self.discipline, g)
    }

    /// d∘d on every generator (and on t when present).
    pub fn check_d_squared(&self) -> Result<Check> {
        let mut failures = Vec::new();
        for &g in &self.generators {
            let dd = self.d(&self.d_gen(g)?)?;
            if !dd.is_zero() {
                failures.push(format!("d²({g}) = {dd}"));
            }
        }
        if self.has_t {
            if let Some(dt) = &self.differential.t_image {
                let ddt = self.d(dt)?;
                if !ddt.is_zero() {
                    failures.push(format!("d²(t) = {ddt}"));
                }
            }
        }
        Ok(Check::new(format!("d²=0 on {}", self.name), failures))
    }

    /// deg d(g) = deg g - 1 on every generator with a graded differential.
    pub fn check_degree(&self) -> Result<Check> {
        let mut failures = Vec::new();
        for &g in &self.generators {
            let dg = self.d_gen(g)?;
            if dg.is_zero() {
                continue;
            }
            let want = self.grading.reduce(self.grading.degree_of(g)? - 1);
            match self.grading.homogeneous_degree(&dg) {
                Ok(Some(deg)) if deg == want => {}
                Ok(Some(deg)) => {
                    failures.push(format!("deg d({g}) = {deg}, expected {want}"))
                }
                Ok(None) => {}
                Err(_) => failures.push(format!("d({g}) is not homogeneous")),
            }
        }
        Ok(Check::new(format!("deg(d) = -1 on {}", self.name), failures))
    }

    /// Jacobi identity of the bracket over all generator triples.
    pub fn check_jacobi(&self) -> Result<Check> {
        let mut failures = Vec::new();
        if let Some(b) = &self.bracket {
            let gens = &self.generators;
            for (i, &x) in gens.iter().enumerate() {
                for (j, &y) in gens.iter().enumerate().skip(i) {
                    for &z in gens.iter().skip(j) {
                        let (xp, yp, zp) =
                            (self.gen_poly(x), self.gen_poly(y), self.gen_poly(z));
                        let t1 = b.bracket(&xp, &b.bracket(&yp, &zp)?)?;
                        let t2 = b.bracket(&yp, &b.bracket(&zp, &xp)?)?;
                        let t3 = b.bracket(&zp, &b.bracket(&xp, &yp)?)?;
                        let sum = t1.add(&t2)?.add(&t3)?;
                        if !sum.is_zero() {
                            failures.push(format!("jacobi({x},{y},{z}) = {sum}"));
                        }
                    }
                }
            }
        }
        Ok(Check::new(format!("Jacobi identity on {}", self.name), failures))
    }

    /// deg {x,y} = deg x + deg y + 1 on nonzero generator brackets.
    pub fn check_bracket_degree(&self) -> Result<Check> {
        let mut failures = Vec::new();
        if let Some(b) = &self.bracket {
            for pair in b.check_degrees(&self.grading, &self.generators)? {
                failures.push(format!("bracket degree off at ({}, {})", pair.0, pair.1));
            }
        }
        Ok(Check::new(format!("bracket degree +1 on {}", self.name), failures))
    }
}

/// An algebra map between two DGAs, given on generators.
#[derive(Debug, Clone)]
pub struct DgaMorphism {
    pub name: String,
    pub source: String,
    pub target: String,
    pub map: GenMap,
}

impl DgaMorphism {
    pub fn apply(&self, x: &Poly) -> Result<Poly> {
        self.map.apply(x)
    }

    pub fn apply_gen(&self, g: GeneratorId) -> Result<Poly> {
        self.map.image_of(g).cloned()
    }

    /// d_target ∘ f = f ∘ d_source on every source generator (and t).
    pub fn check_chain_map(&self, source: &Dga, target: &Dga) -> Result<Check> {
        let mut failures = Vec::new();
        for &g in &source.generators {
            let lhs = target.d(self.map.image_of(g)?)?;
            let rhs = self.apply(&source.d_gen(g)?)?;
            if lhs != rhs {
                let diff = lhs.add(&rhs)?;
                failures.push(format!("{}({g}): d∘f + f∘d = {diff}", self.name));
            }
        }
        if source.has_t {
            let zero = Poly::zero(source.discipline);
            let dt_src = source.differential.t_image.clone().unwrap_or_else(|| zero.clone());
            let t_img = self
                .map
                .t_image
                .clone()
                .unwrap_or_else(|| Poly::t_power(1));
            let lhs = target.d(&t_img)?;
            let rhs = self.apply(&dt_src)?;
            if lhs != rhs {
                failures.push(format!("{}(t): d∘f + f∘d = {}", self.name, lhs.add(&rhs)?));
            }
        }
        Ok(Check::new(
            format!("chain map {}: {} -> {}", self.name, self.source, self.target),
            failures,
        ))
    }

    /// Morphisms preserve degree (modulo the target's modulus).
    pub fn check_degree(&self, source: &Dga, target: &Dga) -> Result<Check> {
        let mut failures = Vec::new();
        for &g in &source.generators {
            let img = self.map.image_of(g)?;
            if img.is_zero() {
                continue;
            }
            let want = target.grading.reduce(source.grading.degree_of(g)?);
            match target.grading.homogeneous_degree(img) {
                Ok(Some(deg)) if deg == want => {}
                Ok(Some(deg)) => failures.push(format!(
                    "deg {}({g}) = {deg}, expected {want}",
                    self.name
                )),
                Ok(None) => {}
                Err(_) => failures.push(format!("{}({g}) is not homogeneous", self.name)),
            }
        }
        Ok(Check::new(
            format!("degree 0 morphism {}: {} -> {}", self.name, self.source, self.target),
            failures,
        ))
    }
}

/// Check that two compositions agree on every generator of the common
/// source: commutativity of a square.
pub fn check_square(
    name: &str,
    source: &Dga,
    top: &DgaMorphism,
    right: &DgaMorphism,
    left: &DgaMorphism,
    bottom: &DgaMorphism,
) -> Result<Check> {
    let mut failures = Vec::new();
    for &g in &source.generators {
        let via_top = right.apply(top.map.image_of(g)?)?;
        let via_left = bottom.apply(left.map.image_of(g)?)?;
        if via_top != via_left {
            failures.push(format!("square at {g}: {via_top} vs {via_left}"));
        }
    }
    Ok(Check::new(name.to_string(), failures))
}

/// Report wrapper for a batch of checks.
pub fn run_checks(name: &str, checks: Vec<Check>) -> Report {
    Report { name: name.to_string(), checks }
}
