//! The commutative rational SFT algebra of a closed diagram: generators p, q
//! and the Laurent loop variable t, the Hamiltonian counting all admissible
//! disks, the p/q bracket, and the differential d = {h,·} + delta_str.

use crate::algebra::{BracketTable, Derivation, Discipline, GeneratorId, GradingTable, Poly};
use crate::dga::Dga;
use crate::diagram::{ChordKind, FrontDiagram};
use crate::disks::{disks_to_poly, sweep_disks, SweepConfig, SweepMode};
use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::strings::{delta_str, StringContext};

const D: Discipline = Discipline::Commutative;

/// A commutative SFT algebra with its differential split into the SFT and
/// string parts.
pub struct LsftAlgebra {
    pub dga: Dga,
    pub delta: Derivation,
    pub d_sft: Derivation,
}

/// Assemble d = {h,·} + delta on the given generators.
pub fn sft_plus_string(
    gens: &[GeneratorId],
    h: &Poly,
    bracket: &BracketTable,
    delta: &Derivation,
) -> Result<(Derivation, Derivation)> {
    let mut d_sft = Derivation::new(D);
    for &g in gens {
        d_sft.insert(g, bracket.bracket(h, &Poly::generator(D, g))?);
    }
    // d(t) = {h, t} + delta(t) = delta(t).
    let total = d_sft.add(delta)?;
    Ok((d_sft, total))
}

pub fn build_lsft(d: &FrontDiagram, cfg: &SweepConfig) -> Result<LsftAlgebra> {
    if d.piece.mark_column.is_none() {
        return Err(Error::MissingBasePoint);
    }
    let disks = sweep_disks(&d.piece, SweepMode::All, cfg)?;
    let h = disks_to_poly(&disks, &|_| None)?;
    let mut generators = Vec::new();
    for chord in &d.piece.chords {
        generators.push(GeneratorId::Q(chord.label));
        generators.push(GeneratorId::P(chord.label));
    }
    generators.sort();
    let (mu, _) = d.piece.maslov()?;
    let (_, rot) = d.classical_invariants()?;
    let modulus = 2 * rot.abs();
    let mut grading = GradingTable::new(-2 * rot, modulus);
    for chord in &d.piece.chords {
        let deg = match chord.kind {
            ChordKind::RightCusp => 1,
            ChordKind::Crossing => mu[chord.desc] - mu[chord.asc],
        };
        grading.set(GeneratorId::Q(chord.label), deg);
        grading.set(GeneratorId::P(chord.label), -1 - deg);
    }
    let ctx = StringContext::new(&d.piece, vec![])?;
    let delta = delta_str(&ctx, true)?;
    let bracket = BracketTable::closed();
    let (d_sft, differential) = sft_plus_string(&generators, &h, &bracket, &delta)?;
    Ok(LsftAlgebra {
        dga: Dga {
            name: "SFT".into(),
            discipline: D,
            generators,
            grading,
            differential,
            hamiltonian: Some(h),
            bracket: Some(bracket),
            has_t: true,
        },
        delta,
        d_sft,
    })
}

/// The master identity: delta(h) + (h -> h) = 0.
pub fn verify_qme(a: &LsftAlgebra) -> Result<Check> {
    qme_check(&a.dga, &a.delta)
}

pub fn qme_check(dga: &Dga, delta: &Derivation) -> Result<Check> {
    let mut failures = Vec::new();
    let h = dga.hamiltonian.as_ref().expect("SFT algebra has a Hamiltonian");
    let bracket = dga.bracket.as_ref().expect("SFT algebra has a bracket");
    let lhs = delta.apply(h)?;
    let rhs = bracket.arrow(h, h)?;
    let sum = lhs.add(&rhs)?;
    if !sum.is_zero() {
        failures.push(format!("delta(h) + h->h = {sum}"));
    }
    Ok(Check::new(format!("master equation on {}", dga.name), failures))
}

pub fn verify_d_squared(dga: &Dga) -> Result<Check> {
    dga.check_d_squared()
}

/// Identity suite of the closed SFT algebra.
pub fn verify_lsft(a: &LsftAlgebra) -> Result<Report> {
    let mut report = Report::new("closed SFT algebra");
    report.push(a.dga.check_d_squared()?);
    report.push(a.dga.check_degree()?);
    report.push(verify_qme(a)?);
    report.push(a.dga.check_bracket_degree()?);
    Ok(report)
}
