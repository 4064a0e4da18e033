use super::*;
use crate::error::Error;

fn trefoil() -> FrontDiagram {
    FrontDiagram::parse(builtin_source("trefoil").unwrap()).unwrap()
}

#[test]
fn parse_trefoil() {
    let d = trefoil();
    assert_eq!(d.piece.chords.len(), 5);
    assert_eq!(d.piece.labels(), vec![0, 1, 2, 3, 4]);
    assert_eq!(d.piece.divide_points(0).len(), 4);
    // crossings 0,1,2 left to right; cusp 3 above cusp 4
    let c3 = d.piece.chord_by_label(3).unwrap();
    let c4 = d.piece.chord_by_label(4).unwrap();
    assert_eq!(d.piece.chords[c3].kind, ChordKind::RightCusp);
    assert_eq!(d.piece.chords[c4].kind, ChordKind::RightCusp);
}

#[test]
fn parse_unknot() {
    let d = FrontDiagram::parse("front v1\nlcusp 1\nrcusp 1\n").unwrap();
    assert_eq!(d.piece.chords.len(), 1);
    assert_eq!(d.piece.chords[0].kind, ChordKind::RightCusp);
}

#[test]
fn parse_empty_is_malformed() {
    assert!(matches!(
        FrontDiagram::parse("front v1\n"),
        Err(Error::MalformedInput { .. })
    ));
}

#[test]
fn validate_rejects_cusp_before_crossing() {
    let err = FrontDiagram::parse("front v1\nlcusp 1\nlcusp 3\nrcusp 1\ncross 1\nrcusp 1\n");
    assert!(matches!(err, Err(Error::NonSimpleFront { .. })));
}

#[test]
fn row_out_of_range() {
    let err = FrontDiagram::parse("front v1\nlcusp 1\ncross 2\nrcusp 1\n");
    assert!(matches!(err, Err(Error::RowOutOfRange { .. })));
}

#[test]
fn connectivity_examples() {
    let bl = Pairing::new(4, vec![(1, 3), (2, 4)]).unwrap();
    let br = Pairing::new(4, vec![(1, 2), (3, 4)]).unwrap();
    assert!(pairing_connectivity(&bl, &br).unwrap());
    let bl2 = Pairing::new(4, vec![(1, 2), (3, 4)]).unwrap();
    assert!(!pairing_connectivity(&bl2, &br).unwrap());
    let b2 = Pairing::new(2, vec![(1, 2)]).unwrap();
    assert!(pairing_connectivity(&b2, &b2).unwrap());
}

#[test]
fn disconnected_middle_rejected() {
    let b = Pairing::new(4, vec![(1, 2), (3, 4)]).unwrap();
    let err = MiddleData::new(4, b.clone(), b, vec![0, 0, 0, 0]);
    assert!(matches!(err, Err(Error::Disconnected)));
}

#[test]
fn maslov_unknot() {
    let d = FrontDiagram::parse("front v1\nlcusp 1\nrcusp 1\n").unwrap();
    let (mu, defect) = d.piece.maslov().unwrap();
    assert_eq!(defect, 0);
    assert_eq!(mu.len(), 2);
    assert_eq!(mu[0] - mu[1], 1);
}

#[test]
fn maslov_trefoil_divide_points() {
    let d = trefoil();
    let (mu, defect) = d.piece.maslov().unwrap();
    assert_eq!(defect, 0);
    let pts = d.piece.divide_points(0);
    let vals: Vec<i64> = pts.iter().map(|&t| mu[t]).collect();
    assert_eq!(vals, vec![0, -1, -1, -2]);
}

#[test]
fn classical_invariants_trefoil() {
    let d = trefoil();
    assert_eq!(d.classical_invariants().unwrap(), (1, 0));
    // reversing orientation flips rot, keeps tb
    let d2 = FrontDiagram::from_events(d.piece.events.clone(), true).unwrap();
    let (tb, rot) = d2.classical_invariants().unwrap();
    assert_eq!(tb, 1);
    assert_eq!(rot, 0);
}

#[test]
fn classical_invariants_unknot() {
    let d = FrontDiagram::parse(builtin_source("unknot").unwrap()).unwrap();
    assert_eq!(d.classical_invariants().unwrap(), (-1, 0));
}

#[test]
fn split_trefoil() {
    let d = trefoil();
    let (left, mid, right) = d.split().unwrap();
    assert_eq!(mid.n, 4);
    assert_eq!(mid.beta_left.pairs, vec![(1, 3), (2, 4)]);
    assert_eq!(mid.beta_right.pairs, vec![(1, 2), (3, 4)]);
    assert_eq!(mid.mu, vec![0, -1, -1, -2]);
    assert_eq!(left.piece.chords.len(), 1);
    assert_eq!(right.piece.chords.len(), 4);
    // re-gluing the event lists reproduces the original (marks aside)
    let mut glued: Vec<EventKind> = left
        .piece
        .events
        .iter()
        .filter(|e| !matches!(e.kind, EventKind::Mark(_)))
        .map(|e| e.kind.clone())
        .collect();
    glued.push(EventKind::Divide);
    glued.extend(right.piece.events.iter().map(|e| e.kind.clone()));
    let orig: Vec<EventKind> = d
        .piece
        .events
        .iter()
        .filter(|e| !matches!(e.kind, EventKind::Mark(_)))
        .map(|e| e.kind.clone())
        .collect();
    assert_eq!(glued, orig);
}

#[test]
fn split_unknot() {
    let d = FrontDiagram::parse(builtin_source("unknot-divided").unwrap()).unwrap();
    let (_, mid, _) = d.split().unwrap();
    assert_eq!(mid.n, 2);
    assert_eq!(mid.beta_left.pairs, vec![(1, 2)]);
    assert_eq!(mid.beta_right.pairs, vec![(1, 2)]);
}

#[test]
fn split_nested_cusps() {
    // dividing line just right of two nested left cusps
    let d = FrontDiagram::parse(
        "front v1\nlcusp 1\nlcusp 2\ndivide\ncross 2\nrcusp 1\nrcusp 1\n",
    );
    // the inner cusp pairs (2,3), the outer (1,4)
    let d = d.unwrap();
    let (left, mid, _right) = d.split().unwrap();
    assert_eq!(left.piece.chords.len(), 0);
    assert_eq!(mid.beta_left.pairs, vec![(1, 4), (2, 3)]);
}

#[test]
fn no_dividing_line_errors() {
    let d = FrontDiagram::parse(builtin_source("unknot").unwrap()).unwrap();
    assert!(matches!(d.split(), Err(Error::NoDividingLine)));
}

#[test]
fn trace_unknot() {
    let d = FrontDiagram::parse(builtin_source("unknot").unwrap()).unwrap();
    let t = d.trace().unwrap();
    let chord_ends =
        t.sites.iter().filter(|s| matches!(s.kind, trace::SiteKind::ChordEnd { .. })).count();
    assert_eq!(chord_ends, 2);
    let marks = t.sites.iter().filter(|s| s.kind == trace::SiteKind::Mark).count();
    assert_eq!(marks, 1);
    // mark is rotated to the end
    assert_eq!(t.sites.last().unwrap().kind, trace::SiteKind::Mark);
}

#[test]
fn trace_visits_each_chord_end_once() {
    let d = trefoil();
    let t = d.trace().unwrap();
    for chord in 0..d.piece.chords.len() {
        let n = t
            .sites
            .iter()
            .filter(|s| matches!(s.kind, trace::SiteKind::ChordEnd { chord: c } if c == chord))
            .count();
        assert_eq!(n, 2, "chord {chord} endpoint passages");
    }
    // each dividing-line point appears once per cycle
    for p in 1..=4 {
        let n = t
            .sites
            .iter()
            .filter(|s| {
                matches!(s.kind, trace::SiteKind::MPoint { line: trace::LineId::Divide(0), point } if point == p)
            })
            .count();
        assert_eq!(n, 1);
    }
}

#[test]
fn trace_left_half_jumps() {
    let d = trefoil();
    let (left, _, _) = d.split().unwrap();
    let t = left.trace().unwrap();
    let jumps: Vec<(u32, u32)> = t
        .sites
        .iter()
        .filter_map(|s| match s.kind {
            trace::SiteKind::Jump { from, to, .. } => Some((from, to)),
            _ => None,
        })
        .collect();
    // closure pairing is beta_right = {(1,2),(3,4)}
    assert_eq!(jumps.len(), 2);
    for (a, b) in jumps {
        assert!(left.closure.contains(a, b));
    }
}
