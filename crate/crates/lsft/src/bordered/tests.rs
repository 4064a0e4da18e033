use super::*;
use crate::diagram::{builtin_source, FrontDiagram};

fn poly(s: &str) -> Poly {
    crate::textform::parse_poly(s, D).unwrap()
}

fn ctx() -> BorderedContext {
    let d = FrontDiagram::parse(builtin_source("trefoil").unwrap()).unwrap();
    build_bordered(&d, &SweepConfig::default()).unwrap()
}

fn check_rows(name: &str, der: &Derivation, rows: &[(&str, &str)]) {
    for (g, want) in rows {
        let gid = crate::textform::parse_generator(g).unwrap();
        let got = der.apply_gen(gid).unwrap();
        assert_eq!(got, poly(want), "{name}({g})");
    }
}

#[test]
fn golden_full_sft_tables() {
    let c = ctx();
    check_rows(
        "delta",
        &c.sft.delta,
        &[
            ("q0", "q0*q1*p1 + q0*q2*p2"),
            ("p0", "p0*q0*p0 + p0*q1*p1 + p0*q2*p2"),
            ("q1", "q1*q0*p0 + q1*q2*p2"),
            ("p1", "p1*q0*p0 + p1*q1*p1 + p1*q2*p2"),
            ("q2", "q2*q0*p0 + q2*q1*p1"),
            ("p2", "p2*q0*p0 + p2*q1*p1 + p2*q2*p2"),
            ("q3", "q3*p3*q3"),
            ("p3", "0"),
            ("q4", "q4*p4*q4"),
            ("p4", "0"),
        ],
    );
    check_rows(
        "d_sft",
        &c.sft.d_sft,
        &[
            ("q0", "p1"),
            ("p0", "t*q1*q2*p3 + q1*q2*p4 + t*p3 + p4"),
            ("q1", "p0 + p2"),
            ("p1", "t*q0*q2*p3 + q0*q2*p4"),
            ("q2", "p1"),
            ("p2", "t*q0*q1*p3 + q0*q1*p4 + t*p3 + p4"),
            ("q3", "t*q0*q1*q2 + t*q0 + t*q2 + 1"),
            ("p3", "0"),
            ("q4", "q0*q1*q2 + q0 + q2 + 1"),
            ("p4", "0"),
        ],
    );
    assert_eq!(
        c.sft.dga.hamiltonian.as_ref().unwrap(),
        &poly(
            "t*q0*q1*q2*p3 + q0*q1*q2*p4 + t*q0*p3 + t*q2*p3 + p0*p1 + p1*p2 + q0*p4 + q2*p4 + p3 + p4"
        )
    );
}

#[test]
fn golden_middle_tables() {
    let c = ctx();
    check_rows(
        "delta_middle",
        &c.middle.delta,
        &[
            ("aL12", "bR12*aL12"),
            ("aL13", "bR12*aL13 + bL24*aL13 + bR34*aL13 + aL12*aL23"),
            ("aL14", "bR12*aL14 + bL24*aL14 + aL12*aL24 + aL13*aL34"),
            ("aL23", "bL24*aL23 + bR34*aL23"),
            ("aL24", "bL24*aL24 + aL23*aL34"),
            ("aL34", "bR34*aL34"),
            ("aR12", "bR12*aR12"),
            ("aR13", "bR12*aR13 + bL24*aR13 + bR34*aR13 + aR12*aR23"),
            ("aR14", "bR12*aR14 + bL24*aR14 + aR12*aR24 + aR13*aR34"),
            ("aR23", "bL24*aR23 + bR34*aR23"),
            ("aR24", "bL24*aR24 + aR23*aR34"),
            ("aR34", "bR34*aR34"),
            ("bL13", "bL13*bL13"),
            ("bL24", "bL24*bL24"),
            ("bR12", "bR12*bR12"),
            ("bR34", "bR34*bR34"),
        ],
    );
    check_rows(
        "d_sft_middle",
        &c.middle.d_sft,
        &[
            ("aL12", "aL13*aR23 + aL14*aR24"),
            ("aL13", "aL14*aR34"),
            ("aL14", "0"),
            ("aL23", "aL13*aR12 + aL24*aR34"),
            ("aL24", "aL14*aR12"),
            ("aL34", "aL14*aR13 + aL24*aR23"),
            ("aR12", "aR13*aL23 + aR14*aL24"),
            ("aR13", "aR14*aL34"),
            ("aR14", "0"),
            ("aR23", "aR13*aL12 + aR24*aL34"),
            ("aR24", "aR14*aL12"),
            ("aR34", "aR14*aL13 + aR24*aL23"),
            ("bL13", "aL12*aR12 + aL14*aR14 + aL23*aR23 + aL34*aR34"),
            ("bL24", "aL12*aR12 + aL14*aR14 + aL23*aR23 + aL34*aR34"),
            ("bR12", "aL13*aR13 + aL14*aR14 + aL23*aR23 + aL24*aR24"),
            ("bR34", "aL13*aR13 + aL14*aR14 + aL23*aR23 + aL24*aR24"),
        ],
    );
    assert_eq!(
        c.middle.dga.hamiltonian.as_ref().unwrap(),
        &poly("aL12*aR12 + aL13*aR13 + aL14*aR14 + aL23*aR23 + aL24*aR24 + aL34*aR34")
    );
    assert_eq!(c.middle.dga.generators.len(), 16);
}

#[test]
fn golden_left_tables() {
    let c = ctx();
    check_rows(
        "delta_left",
        &c.left.delta,
        &[
            ("a12", "b12*a12"),
            ("a13", "b12*a13 + p0*q0*a13 + b34*a13 + a12*a23"),
            ("a14", "b12*a14 + p0*q0*a14 + a12*a24 + a13*a34"),
            ("a23", "p0*q0*a23 + b34*a23"),
            ("a24", "p0*q0*a24 + a23*a34"),
            ("a34", "b34*a34"),
            ("b12", "b12*b12"),
            ("b34", "b34*b34"),
            ("p0", "p0*q0*p0 + p0*b34"),
            ("q0", "b34*q0"),
        ],
    );
    // The printed table's delta(t) = 0 is inconsistent with d² = 0; the
    // t-loop crosses both closure jumps.
    assert_eq!(c.left.delta.t_image.as_ref().unwrap(), &poly("t*b12 + t*b34"));
    check_rows(
        "d_sft_left",
        &c.left.d_sft,
        &[
            ("a12", "a13*p0 + a14"),
            ("a13", "a14*q0"),
            ("a14", "0"),
            ("a23", "t*a13*q0 + a24*q0"),
            ("a24", "t*a14*q0"),
            ("a34", "t*a14 + a24*p0"),
            ("b12", "t*a13 + a23*p0 + a24"),
            ("b34", "t*a13 + a23*p0 + a24"),
            ("p0", "t*a12 + a34"),
            ("q0", "a23"),
        ],
    );
    assert_eq!(
        c.left.dga.hamiltonian.as_ref().unwrap(),
        &poly("t*q0*a12 + p0*a23 + q0*a34 + t*a13 + a24")
    );
}

#[test]
fn golden_right_tables() {
    let c = ctx();
    check_rows(
        "delta_right",
        &c.right.delta,
        &[
            ("a12", "p2*q2*a12 + p1*q1*a12"),
            ("a13", "b24*a13 + a12*a23"),
            ("a14", "p2*q2*a14 + p1*q1*a14 + b24*a14 + a12*a24 + a13*a34"),
            ("a23", "b24*a23 + p2*q2*a23 + p1*q1*a23"),
            ("a24", "b24*a24 + a23*a34"),
            ("a34", "p2*q2*a34 + p1*q1*a34"),
            ("b13", "b13*b13"),
            ("b24", "b24*b24"),
            ("p1", "b24*p1 + p2*q2*p1 + p1*q1*p1"),
            ("q1", "b24*q1 + q2*p2*q1"),
            ("p2", "b24*p2 + p1*q1*p2 + p2*q2*p2"),
            ("q2", "b24*q2 + q1*p1*q2"),
            ("p3", "0"),
            ("q3", "q3*p3*q3"),
            ("p4", "0"),
            ("q4", "q4*p4*q4"),
        ],
    );
    check_rows(
        "d_sft_right",
        &c.right.d_sft,
        &[
            ("a12", "a13*p1 + a14*p4*q2"),
            ("a13", "a14*p4*q2*q1 + a14*p4"),
            ("a14", "0"),
            ("a23", "a13*p3*q2*q1 + a13*p3 + a24*p4*q2*q1 + a24*p4"),
            ("a24", "a14*p3*q2*q1 + a14*p3"),
            ("a34", "a14*p3*q2 + a24*p1"),
            ("b13", "p3*q2*q1*a12 + p3*a12 + p1*a23 + p4*q2*q1*a34 + p4*a34"),
            ("b24", "p3*q2*q1*a12 + p3*a12 + p1*a23 + p4*q2*q1*a34 + p4*a34"),
            ("p1", "p3*q2*a12 + p4*q2*a34"),
            ("q1", "p2 + a23"),
            ("p2", "p3*q1*a12 + p3*a13 + p4*q1*a34 + p4*a24"),
            ("q2", "p1"),
            ("p3", "0"),
            ("q3", "1 + q2*q1*a12 + a12 + q2*a13"),
            ("p4", "0"),
            ("q4", "1 + q2*q1*a34 + a34 + q2*a24"),
        ],
    );
    assert_eq!(
        c.right.dga.hamiltonian.as_ref().unwrap(),
        &poly(
            "p3 + p4 + p3*a12 + p3*q2*q1*a12 + p3*q2*a13 + p4*a34 + p4*q2*q1*a34 + p4*q2*a24 + p2*p1 + p1*a23"
        )
    );
}

#[test]
fn golden_morphism_tables() {
    let c = ctx();
    let rows_ell = [
        ("aL12", "t*q0"),
        ("aL13", "t"),
        ("aL14", "0"),
        ("aL23", "p0"),
        ("aL24", "1"),
        ("aL34", "q0"),
        ("aR12", "a12"),
        ("aR13", "a13"),
        ("aR14", "a14"),
        ("aR23", "a23"),
        ("aR24", "a24"),
        ("aR34", "a34"),
        ("bL13", "p0*q0"),
        ("bL24", "p0*q0"),
        ("bR12", "b12"),
        ("bR34", "b34"),
    ];
    for (g, want) in rows_ell {
        let gid = crate::textform::parse_generator(g).unwrap();
        assert_eq!(c.maps.ell.apply_gen(gid).unwrap(), poly(want), "ell({g})");
    }
    let rows_r = [
        ("aL12", "a12"),
        ("aL13", "a13"),
        ("aL14", "a14"),
        ("aL23", "a23"),
        ("aL24", "a24"),
        ("aL34", "a34"),
        ("aR12", "p3 + q1*q2*p3"),
        ("aR13", "p3*q2"),
        ("aR14", "0"),
        ("aR23", "p1"),
        ("aR24", "p4*q2"),
        ("aR34", "p4 + q1*q2*p4"),
        ("bL13", "b13"),
        ("bL24", "b24"),
        ("bR12", "p2*q2 + p1*q1"),
        ("bR34", "p2*q2 + p1*q1"),
    ];
    for (g, want) in rows_r {
        let gid = crate::textform::parse_generator(g).unwrap();
        assert_eq!(c.maps.r.apply_gen(gid).unwrap(), poly(want), "r({g})");
    }
    let rows_l = [
        ("a12", "p3 + q1*q2*p3"),
        ("a13", "p3*q2"),
        ("a14", "0"),
        ("a23", "p1"),
        ("a24", "p4*q2"),
        ("a34", "p4 + q1*q2*p4"),
        ("b12", "p2*q2 + p1*q1"),
        ("b34", "p2*q2 + p1*q1"),
        ("p0", "p0"),
        ("q0", "q0"),
    ];
    for (g, want) in rows_l {
        let gid = crate::textform::parse_generator(g).unwrap();
        assert_eq!(c.maps.cap_l.apply_gen(gid).unwrap(), poly(want), "L({g})");
    }
    let rows_cap_r = [
        ("a12", "q0*t"),
        ("a13", "t"),
        ("a14", "0"),
        ("a23", "p0"),
        ("a24", "1"),
        ("a34", "q0"),
        ("b13", "p0*q0"),
        ("b24", "p0*q0"),
        ("p1", "p1"),
        ("q1", "q1"),
        ("p3", "p3"),
        ("q4", "q4"),
    ];
    for (g, want) in rows_cap_r {
        let gid = crate::textform::parse_generator(g).unwrap();
        assert_eq!(c.maps.cap_r.apply_gen(gid).unwrap(), poly(want), "R({g})");
    }
}

#[test]
fn bordered_suite_passes_on_trefoil() {
    let c = ctx();
    let report = verify_bordered_suite(&c).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn trivial_braid_matches_middle_algebra() {
    let d = FrontDiagram::parse(builtin_source("trefoil").unwrap()).unwrap();
    let (_, mid, _) = d.split().unwrap();
    let middle = build_middle_sft(&mid).unwrap();
    let ts = TwoSidedDiagram::from_middle(&mid).unwrap();
    let lr = build_lr_sft(&ts, &SweepConfig::default()).unwrap();
    assert_eq!(lr.dga.generators, middle.dga.generators);
    assert_eq!(
        lr.dga.hamiltonian.as_ref().unwrap(),
        middle.dga.hamiltonian.as_ref().unwrap()
    );
    for &g in &middle.dga.generators {
        assert_eq!(
            lr.dga.d_gen(g).unwrap(),
            middle.dga.d_gen(g).unwrap(),
            "two-sided vs middle differential at {g}"
        );
        assert_eq!(
            lr.dga.grading.degree_of(g).unwrap(),
            middle.dga.grading.degree_of(g).unwrap(),
            "grading at {g}"
        );
    }
}
