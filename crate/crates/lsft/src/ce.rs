//! The Chekanov-Eliashberg algebra of a closed simple front and its bordered
//! version for cut diagrams: left, middle, and right algebras with the four
//! gluing morphisms and the pushout checks.

use crate::algebra::{Derivation, Discipline, GenMap, GeneratorId, GradingTable, Monomial, Poly};
use crate::dga::{check_square, Dga, DgaMorphism};
use crate::diagram::{ChordKind, FrontDiagram, HalfDiagram, LineId, MiddleData, Side};
use crate::disks::{sweep_disks, DiskBoundary, SweepConfig, SweepMode};
use crate::error::{Error, Result};
use crate::report::Report;

const D: Discipline = Discipline::FreeWord;

fn word_poly(words: Vec<Vec<GeneratorId>>) -> Poly {
    let mut p = Poly::zero(D);
    for w in words {
        p.toggle(Monomial::Word(w));
    }
    p
}

/// Sum of front-disk boundary words with one positive corner at the given
/// chord label.
pub fn ce_disks(disks: &[DiskBoundary], label: u32) -> Poly {
    word_poly(
        disks
            .iter()
            .filter(|d| d.positive_corners() == vec![label])
            .filter_map(|d| d.word_from_positive())
            .collect(),
    )
}

/// Crossing gradings from the Maslov potential: over-strand minus
/// under-strand; right cusps sit in degree 1.
fn chord_gradings(
    piece: &crate::diagram::Piece,
    mu: &[i64],
    t_degree: i64,
    modulus: i64,
) -> GradingTable {
    let mut g = GradingTable::new(t_degree, modulus);
    for chord in &piece.chords {
        let deg = match chord.kind {
            ChordKind::RightCusp => 1,
            ChordKind::Crossing => mu[chord.desc] - mu[chord.asc],
        };
        g.set(GeneratorId::Q(chord.label), deg);
        g.set(GeneratorId::P(chord.label), -1 - deg);
    }
    g
}

/// The Chekanov-Eliashberg algebra of a closed simple front.
pub fn build_ce(d: &FrontDiagram, cfg: &SweepConfig) -> Result<Dga> {
    let disks = sweep_disks(&d.piece, SweepMode::All, cfg)?;
    let (mu, _) = d.piece.maslov()?;
    let modulus = d.grading_modulus()?;
    let grading = chord_gradings(&d.piece, &mu, 0, modulus);
    let mut differential = Derivation::new(D);
    let mut generators = Vec::new();
    for chord in &d.piece.chords {
        let g = GeneratorId::Q(chord.label);
        generators.push(g);
        // The resolved cusp loop disk contributes the constant term itself.
        let dq = ce_disks(&disks, chord.label);
        differential.insert(g, dq);
    }
    let mut grading_q = GradingTable::new(0, modulus);
    for &g in &generators {
        grading_q.set(g, grading.degree_of(g)?);
    }
    Ok(Dga {
        name: "CE".into(),
        discipline: D,
        generators,
        grading: grading_q,
        differential,
        hamiltonian: None,
        bracket: None,
        has_t: false,
    })
}

/// Middle algebra on n strands: generators a_ij, d(a_ij) = sum a_ik a_kj.
pub fn build_sivek_middle(n: u32, mu: &[i64]) -> Result<Dga> {
    let mut generators = Vec::new();
    let mut differential = Derivation::new(D);
    let mut grading = GradingTable::new(0, 0);
    for i in 1..=n {
        for j in i + 1..=n {
            let a = GeneratorId::alpha(i, j);
            generators.push(a);
            grading.set(a, mu[i as usize - 1] - mu[j as usize - 1] - 1);
            let mut img = Poly::zero(D);
            for k in i + 1..j {
                img.toggle(Monomial::Word(vec![
                    GeneratorId::alpha(i, k),
                    GeneratorId::alpha(k, j),
                ]));
            }
            differential.insert(a, img);
        }
    }
    Ok(Dga {
        name: "bordered-CE middle".into(),
        discipline: D,
        generators,
        grading,
        differential,
        hamiltonian: None,
        bracket: None,
        has_t: false,
    })
}

/// Left algebra: the subalgebra of disks confined to the left half-plane.
pub fn build_sivek_left(h: &HalfDiagram, cfg: &SweepConfig) -> Result<Dga> {
    assert_eq!(h.side, Side::Left);
    let disks = sweep_disks(&h.piece, SweepMode::All, cfg)?;
    let mu = half_mu(h)?;
    let grading = chord_gradings(&h.piece, &mu, 0, 0);
    let mut generators = Vec::new();
    let mut differential = Derivation::new(D);
    for chord in &h.piece.chords {
        let g = GeneratorId::Q(chord.label);
        generators.push(g);
        // Disks entirely in the left half-plane: no wall segments.
        let words: Vec<Vec<GeneratorId>> = disks
            .iter()
            .filter(|disk| disk.m_segments.is_empty())
            .filter(|disk| disk.positive_corners() == vec![chord.label])
            .filter_map(|disk| disk.word_from_positive())
            .collect();
        let dq = word_poly(words);
        differential.insert(g, dq);
    }
    let mut grading_q = GradingTable::new(0, 0);
    for &g in &generators {
        grading_q.set(g, grading.degree_of(g)?);
    }
    Ok(Dga {
        name: "bordered-CE left".into(),
        discipline: D,
        generators,
        grading: grading_q,
        differential,
        hamiltonian: None,
        bracket: None,
        has_t: false,
    })
}

/// Maslov potential of a half diagram's threads, pinned to the boundary
/// values.
fn half_mu(h: &HalfDiagram) -> Result<Vec<i64>> {
    let wall = h
        .piece
        .columns
        .iter()
        .find_map(|c| match &c.kind {
            crate::diagram::ColumnKind::WestWall { points }
            | crate::diagram::ColumnKind::EastWall { points } => Some(points.clone()),
            _ => None,
        })
        .unwrap_or_default();
    let seeds: Vec<(usize, i64)> =
        wall.iter().enumerate().map(|(k, &t)| (t, h.mu[k])).collect();
    let (mu, _) = h.piece.maslov_seeded(&seeds)?;
    Ok(mu)
}

/// Right algebra: crossings, cusps, and boundary generators a_ij, with the
/// differential counting right half-disks (reading the wall segment as a_ij)
/// and disks confined to the right half-plane.
pub fn build_sivek_right(h: &HalfDiagram, cfg: &SweepConfig) -> Result<Dga> {
    assert_eq!(h.side, Side::Right);
    let disks = sweep_disks(&h.piece, SweepMode::All, cfg)?;
    let mu = half_mu(h)?;
    let grading_chords = chord_gradings(&h.piece, &mu, 0, 0);
    let n = h.n;
    let mut generators = Vec::new();
    let mut differential = Derivation::new(D);
    let mut grading = GradingTable::new(0, 0);
    for chord in &h.piece.chords {
        let g = GeneratorId::Q(chord.label);
        generators.push(g);
        grading.set(g, grading_chords.degree_of(g)?);
        // One positive corner at the chord; at most one wall segment can
        // appear (right disks never return to the wall twice).
        let words: Vec<Vec<GeneratorId>> = disks
            .iter()
            .filter(|disk| disk.positive_corners() == vec![chord.label])
            .filter_map(|disk| disk.word_from_positive())
            .collect();
        let dq = word_poly(words);
        differential.insert(g, dq);
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let a = GeneratorId::alpha(i, j);
            generators.push(a);
            grading.set(a, h.mu[i as usize - 1] - h.mu[j as usize - 1] - 1);
            let mut img = Poly::zero(D);
            for k in i + 1..j {
                img.toggle(Monomial::Word(vec![
                    GeneratorId::alpha(i, k),
                    GeneratorId::alpha(k, j),
                ]));
            }
            differential.insert(a, img);
        }
    }
    Ok(Dga {
        name: "bordered-CE right".into(),
        discipline: D,
        generators,
        grading,
        differential,
        hamiltonian: None,
        bracket: None,
        has_t: false,
    })
}

/// No-positive-corner half-disk expansions of the boundary generators: the
/// words of left half-disks with a distinguished wall segment (i, j), read
/// from the segment.
fn left_half_disk_words(
    left_disks: &[DiskBoundary],
    i: u32,
    j: u32,
) -> Vec<Vec<GeneratorId>> {
    let mut words = Vec::new();
    for disk in left_disks {
        // Exactly one boundary segment on the line, and no positive corners.
        if !disk.positive_corners().is_empty() || disk.m_segments.len() != 1 {
            continue;
        }
        for pos in disk.segment_positions(LineId::East, i, j) {
            words.push(disk.read_from(pos));
        }
    }
    words
}

/// The four maps of the bordered Chekanov-Eliashberg theory.
pub struct SivekMaps {
    pub ell: DgaMorphism,
    pub r: DgaMorphism,
    pub cap_l: DgaMorphism,
    pub cap_r: DgaMorphism,
}

pub fn sivek_maps(
    left: &HalfDiagram,
    mid: &MiddleData,
    right: &HalfDiagram,
    cfg: &SweepConfig,
) -> Result<SivekMaps> {
    let left_disks = sweep_disks(&left.piece, SweepMode::All, cfg)?;
    let n = mid.n;
    // ell and R expand a_ij over no-positive-corner left half-disks; the
    // same words feed both, read into different algebras.
    let mut ell = GenMap::new(D);
    let mut cap_r = GenMap::new(D);
    for i in 1..=n {
        for j in i + 1..=n {
            let words = left_half_disk_words(&left_disks, i, j);
            ell.insert(GeneratorId::alpha(i, j), word_poly(words.clone()));
            cap_r.insert(GeneratorId::alpha(i, j), word_poly(words));
        }
    }
    // r is the inclusion of boundary generators; L the inclusion of left
    // crossings and cusps.
    let mut r = GenMap::new(D);
    for i in 1..=n {
        for j in i + 1..=n {
            let a = GeneratorId::alpha(i, j);
            r.insert(a, Poly::generator(D, a));
        }
    }
    let mut cap_l = GenMap::new(D);
    for chord in &left.piece.chords {
        let g = GeneratorId::Q(chord.label);
        cap_l.insert(g, Poly::generator(D, g));
    }
    for chord in &right.piece.chords {
        let g = GeneratorId::Q(chord.label);
        cap_r.insert(g, Poly::generator(D, g));
    }
    Ok(SivekMaps {
        ell: DgaMorphism {
            name: "ell".into(),
            source: "bordered-CE middle".into(),
            target: "bordered-CE left".into(),
            map: ell,
        },
        r: DgaMorphism {
            name: "r".into(),
            source: "bordered-CE middle".into(),
            target: "bordered-CE right".into(),
            map: r,
        },
        cap_l: DgaMorphism {
            name: "L".into(),
            source: "bordered-CE left".into(),
            target: "CE".into(),
            map: cap_l,
        },
        cap_r: DgaMorphism {
            name: "R".into(),
            source: "bordered-CE right".into(),
            target: "CE".into(),
            map: cap_r,
        },
    })
}

/// Everything the bordered Chekanov-Eliashberg theory asserts about a cut
/// diagram.
pub struct SivekContext {
    pub ce: Dga,
    pub left: Dga,
    pub middle: Dga,
    pub right: Dga,
    pub maps: SivekMaps,
}

pub fn build_sivek(d: &FrontDiagram, cfg: &SweepConfig) -> Result<SivekContext> {
    let (left, mid, right) = d.split()?;
    Ok(SivekContext {
        ce: build_ce(d, cfg)?,
        left: build_sivek_left(&left, cfg)?,
        middle: build_sivek_middle(mid.n, &mid.mu)?,
        right: build_sivek_right(&right, cfg)?,
        maps: sivek_maps(&left, &mid, &right, cfg)?,
    })
}

/// The universal map out of the pushout: every generator of the glued
/// algebra is L(s) or R(s) for exactly one bordered generator s, so a pair
/// of morphisms f, g with f∘ell = g∘r induces a map on the glued algebra.
pub fn induced_map(
    ctx: &SivekContext,
    f: &DgaMorphism,
    g: &DgaMorphism,
    target_name: &str,
) -> Result<DgaMorphism> {
    let mut map = GenMap::new(f.map.discipline);
    for &q in &ctx.ce.generators {
        // classified by which half owns the chord
        if ctx.left.generators.contains(&q) {
            map.insert(q, f.map.image_of(q)?.clone());
        } else {
            map.insert(q, g.map.image_of(q)?.clone());
        }
    }
    Ok(DgaMorphism {
        name: "induced".into(),
        source: "CE".into(),
        target: target_name.into(),
        map,
    })
}

pub fn verify_sivek_pushout(ctx: &SivekContext) -> Result<Report> {
    let mut report = Report::new("bordered Chekanov-Eliashberg pushout");
    for dga in [&ctx.ce, &ctx.left, &ctx.middle, &ctx.right] {
        report.push(dga.check_d_squared()?);
        report.push(dga.check_degree()?);
    }
    report.push(ctx.maps.ell.check_chain_map(&ctx.middle, &ctx.left)?);
    report.push(ctx.maps.r.check_chain_map(&ctx.middle, &ctx.right)?);
    report.push(ctx.maps.cap_l.check_chain_map(&ctx.left, &ctx.ce)?);
    report.push(ctx.maps.cap_r.check_chain_map(&ctx.right, &ctx.ce)?);
    report.push(check_square(
        "L∘ell = R∘r on the middle algebra",
        &ctx.middle,
        &ctx.maps.ell,
        &ctx.maps.cap_l,
        &ctx.maps.r,
        &ctx.maps.cap_r,
    )?);
    // Generator coverage: the glued generators are exactly the images of the
    // left generators under L and the right chord generators under R.
    let mut failures = Vec::new();
    for &q in &ctx.ce.generators {
        let in_left = ctx.left.generators.contains(&q);
        let in_right = ctx.right.generators.contains(&q);
        if in_left == in_right {
            failures.push(format!("generator {q} covered by {} halves", u8::from(in_left) * 2));
        }
    }
    if ctx.ce.generators.len()
        != ctx.left.generators.len()
            + ctx.right.generators.iter().filter(|g| g.is_pq()).count()
    {
        failures.push("generator counts do not partition".into());
    }
    report.push(crate::report::Check::new("pushout generator coverage".into(), failures));
    // Universal property against the glued algebra itself.
    let induced = induced_map(ctx, &ctx.maps.cap_l, &ctx.maps.cap_r, "CE")?;
    report.push(induced.check_chain_map(&ctx.ce, &ctx.ce)?);
    let mut failures = Vec::new();
    for &s in &ctx.left.generators {
        let img = ctx.maps.cap_l.map.image_of(s)?;
        if induced.apply(img)? != *img {
            failures.push(format!("induced∘L differs from f at {s}"));
        }
    }
    for &s in &ctx.right.generators {
        let img = ctx.maps.cap_r.map.image_of(s)?;
        if induced.apply(img)? != *img {
            failures.push(format!("induced∘R differs from g at {s}"));
        }
    }
    report.push(crate::report::Check::new("induced map commutes".into(), failures));
    Ok(report)
}

/// Abelianized CE differential with t set to one: the comparison form used
/// against the p-free part of the SFT differential.
pub fn ce_abelianized(ce: &Dga, g: GeneratorId) -> Result<Poly> {
    Ok(ce.d_gen(g)?.abelianized().set_t_to_one())
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::SearchBudgetExceeded { .. } | Error::BudgetExceeded { .. })
    }
}
