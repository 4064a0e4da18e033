use super::*;
use crate::algebra::Discipline;
use crate::diagram::{builtin_source, FrontDiagram};
use crate::strings::LineFamily;

fn poly(s: &str) -> crate::algebra::Poly {
    crate::textform::parse_poly(s, Discipline::Commutative).unwrap()
}

fn no_family(_: crate::diagram::LineId) -> Option<LineFamily> {
    None
}

#[test]
fn trefoil_hamiltonian_disks() {
    let d = FrontDiagram::parse(builtin_source("trefoil").unwrap()).unwrap();
    let disks = sweep_disks(&d.piece, SweepMode::All, &SweepConfig::default()).unwrap();
    let h = disks_to_poly(&disks, &no_family).unwrap();
    // Loop terms p3 + p4 are added by the builder, not the enumerator.
    let expected = poly(
        "t*q0*q1*q2*p3 + q0*q1*q2*p4 + t*q0*p3 + t*q2*p3 + p0*p1 + p1*p2 + q0*p4 + q2*p4",
    );
    assert_eq!(h, expected);
    assert_eq!(disks.len(), 8, "each monomial comes from exactly one disk");
}

#[test]
fn unknot_hamiltonian_disks() {
    let d = FrontDiagram::parse(builtin_source("unknot").unwrap()).unwrap();
    let disks = sweep_disks(&d.piece, SweepMode::All, &SweepConfig::default()).unwrap();
    let h = disks_to_poly(&disks, &no_family).unwrap();
    // The oval disk: one positive corner at the cusp, one base passage.
    assert_eq!(h, poly("t*p0"));
}

#[test]
fn trefoil_ce_readings() {
    let d = FrontDiagram::parse(builtin_source("trefoil").unwrap()).unwrap();
    let disks = sweep_disks(&d.piece, SweepMode::All, &SweepConfig::default()).unwrap();
    // Disks with one positive corner at the top cusp (label 3), read from it.
    let words: Vec<Vec<crate::algebra::GeneratorId>> = disks
        .iter()
        .filter(|disk| disk.positive_corners() == vec![3])
        .filter_map(|disk| disk.word_from_positive())
        .collect();
    let mut texts: Vec<String> = words
        .iter()
        .map(|w| {
            w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*")
        })
        .collect();
    texts.sort();
    assert_eq!(texts, vec!["q0", "q2", "q2*q1*q0"]);
}

#[test]
fn trefoil_half_hamiltonians() {
    let d = FrontDiagram::parse(builtin_source("trefoil").unwrap()).unwrap();
    let (left, _mid, right) = d.split().unwrap();
    let fam = |_: crate::diagram::LineId| Some(LineFamily::Plain);

    let ldisks = sweep_disks(&left.piece, SweepMode::All, &SweepConfig::default()).unwrap();
    let hl = disks_to_poly(&ldisks, &fam).unwrap();
    assert_eq!(hl, poly("t*q0*a12 + p0*a23 + q0*a34 + t*a13 + a24"));

    let rdisks = sweep_disks(&right.piece, SweepMode::All, &SweepConfig::default()).unwrap();
    let hr = disks_to_poly(&rdisks, &fam).unwrap();
    // loop terms p3 + p4 are added by the builder
    assert_eq!(
        hr,
        poly("p3*a12 + p3*q2*q1*a12 + p3*q2*a13 + p4*a34 + p4*q2*q1*a34 + p4*q2*a24 + p2*p1 + p1*a23")
    );
}

#[test]
fn trefoil_marked_division_disks() {
    // D-disks feeding the gluing morphisms: right-approached disks for (2,3)
    // give p1; left-approached for (1,2) give t*q0.
    let d = FrontDiagram::parse(builtin_source("trefoil").unwrap()).unwrap();
    let fam = |_: crate::diagram::LineId| Some(LineFamily::Plain);
    let cfg = SweepConfig::default();

    let r23 =
        sweep_disks(&d.piece, SweepMode::MarkedFromEast { divide: 0, i: 2, j: 3 }, &cfg).unwrap();
    assert_eq!(disks_to_poly(&r23, &fam).unwrap(), poly("p1"));

    let r12 =
        sweep_disks(&d.piece, SweepMode::MarkedFromEast { divide: 0, i: 1, j: 2 }, &cfg).unwrap();
    assert_eq!(disks_to_poly(&r12, &fam).unwrap(), poly("p3 + q1*q2*p3"));

    let l12 =
        sweep_disks(&d.piece, SweepMode::MarkedFromWest { divide: 0, i: 1, j: 2 }, &cfg).unwrap();
    assert_eq!(disks_to_poly(&l12, &fam).unwrap(), poly("t*q0"));

    let l13 =
        sweep_disks(&d.piece, SweepMode::MarkedFromWest { divide: 0, i: 1, j: 3 }, &cfg).unwrap();
    assert_eq!(disks_to_poly(&l13, &fam).unwrap(), poly("t"));

    let l14 =
        sweep_disks(&d.piece, SweepMode::MarkedFromWest { divide: 0, i: 1, j: 4 }, &cfg).unwrap();
    assert!(disks_to_poly(&l14, &fam).unwrap().is_zero());

    let l24 =
        sweep_disks(&d.piece, SweepMode::MarkedFromWest { divide: 0, i: 2, j: 4 }, &cfg).unwrap();
    assert_eq!(disks_to_poly(&l24, &fam).unwrap(), poly("1"));

    // Right-approached disks never reach west of the line.
    let div_col = d.piece.divides[0];
    for disk in r23.iter().chain(r12.iter()) {
        assert!(disk.west_col >= div_col, "right disk strays west of the line");
    }
}
