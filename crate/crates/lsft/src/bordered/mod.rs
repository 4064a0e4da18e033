//! Bordered SFT algebras of cut diagrams: the middle algebra of a dividing
//! line, the left and right half-knot algebras, two-sided algebras, the
//! gluing morphisms, and the identity suite culminating in the pushout
//! square onto the closed commutative SFT algebra.

use crate::algebra::{
    BracketTable, Derivation, Discipline, GenMap, GeneratorId, GradingTable, Poly,
};
use crate::dga::{check_square, Dga, DgaMorphism};
use crate::diagram::{
    BasePoint, ChordKind, ColumnKind, Event, EventKind, FrontDiagram, HalfDiagram, KnotTrace,
    LineId, MiddleData, Pairing, Piece, Side, SiteKind,
};
use crate::disks::{sweep_disks, DiskBoundary, SweepConfig, SweepMode};
use crate::error::{Error, Result};
use crate::lsft::{qme_check, sft_plus_string, LsftAlgebra};
use crate::report::{Check, Report};
use crate::strings::{delta_str, delta_str_middle, LineFamily, StringContext};

const D: Discipline = Discipline::Commutative;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BorderedSide {
    Middle,
    Left,
    Right,
    TwoSided,
}

/// A bordered SFT algebra: a commutative DGA with Hamiltonian and bracket,
/// its differential split into SFT and string parts.
pub struct BorderedAlgebra {
    pub dga: Dga,
    pub delta: Derivation,
    pub d_sft: Derivation,
    pub side: BorderedSide,
    /// The middle algebra's quadratic correction (the analogue of half the
    /// self-bracket of the Hamiltonian).
    pub h2: Option<Poly>,
}

fn gen(g: GeneratorId) -> Poly {
    Poly::generator(D, g)
}

/// Middle algebra of a dividing line.
pub fn build_middle_sft(mid: &MiddleData) -> Result<BorderedAlgebra> {
    let n = mid.n;
    let mut generators = Vec::new();
    let mut grading = GradingTable::new(0, 0);
    for i in 1..=n {
        for j in i + 1..=n {
            let (mi, mj) = (mid.mu_of(i), mid.mu_of(j));
            let al = GeneratorId::alpha_l(i, j);
            let ar = GeneratorId::alpha_r(i, j);
            generators.push(al);
            generators.push(ar);
            grading.set(al, mi - mj - 1);
            grading.set(ar, mj - mi - 1);
        }
    }
    for &(i, j) in &mid.beta_left.pairs {
        let b = GeneratorId::beta_l(i, j);
        generators.push(b);
        grading.set(b, -1);
    }
    for &(i, j) in &mid.beta_right.pairs {
        let b = GeneratorId::beta_r(i, j);
        generators.push(b);
        grading.set(b, -1);
    }
    generators.sort();

    // Hamiltonian and its quadratic correction.
    let mut h = Poly::zero(D);
    let mut h2 = Poly::zero(D);
    for i in 1..=n {
        for j in i + 1..=n {
            h = h.add(&gen(GeneratorId::alpha_l(i, j)).mul(&gen(GeneratorId::alpha_r(i, j)))?)?;
            for k in i + 1..j {
                h2 = h2.add(
                    &gen(GeneratorId::alpha_r(i, k))
                        .mul(&gen(GeneratorId::alpha_r(k, j)))?
                        .mul(&gen(GeneratorId::alpha_l(i, j)))?,
                )?;
                h2 = h2.add(
                    &gen(GeneratorId::alpha_l(i, k))
                        .mul(&gen(GeneratorId::alpha_l(k, j)))?
                        .mul(&gen(GeneratorId::alpha_r(i, j)))?,
                )?;
            }
        }
    }

    let delta = delta_str_middle(mid)?;
    // SFT part by the closed formulas; the bracket/Hamiltonian form is a
    // cross-check in the verification suite.
    let mut d_sft = Derivation::new(D);
    for i in 1..=n {
        for j in i + 1..=n {
            for (this, other) in [(LineFamily::Left, LineFamily::Right), (LineFamily::Right, LineFamily::Left)]
            {
                let mut img = Poly::zero(D);
                for k in j + 1..=n {
                    img = img.add(&gen(this.alpha(i, k)).mul(&gen(other.alpha(j, k)))?)?;
                }
                for k in 1..i {
                    img = img.add(&gen(this.alpha(k, j)).mul(&gen(other.alpha(k, i)))?)?;
                }
                d_sft.insert(this.alpha(i, j), img);
            }
        }
    }
    for (pairs, fam) in [(&mid.beta_left.pairs, LineFamily::Left), (&mid.beta_right.pairs, LineFamily::Right)]
    {
        for &(i, j) in pairs {
            let mut img = Poly::zero(D);
            let add_pair = |a: u32, b: u32, img: &mut Poly| -> Result<()> {
                *img = img.add(
                    &gen(GeneratorId::alpha_l(a, b)).mul(&gen(GeneratorId::alpha_r(a, b)))?,
                )?;
                Ok(())
            };
            for k in 1..i {
                add_pair(k, i, &mut img)?;
            }
            for k in i + 1..=n {
                if k != j {
                    add_pair(i, k, &mut img)?;
                }
            }
            for k in 1..j {
                if k != i {
                    add_pair(k, j, &mut img)?;
                }
            }
            for k in j + 1..=n {
                add_pair(j, k, &mut img)?;
            }
            d_sft.insert(fam.beta(i, j), img);
        }
    }
    let differential = d_sft.add(&delta)?;
    Ok(BorderedAlgebra {
        dga: Dga {
            name: "SFT middle".into(),
            discipline: D,
            generators,
            grading,
            differential,
            hamiltonian: Some(h),
            bracket: Some(BracketTable::two_line()),
            has_t: false,
        },
        delta,
        d_sft,
        side: BorderedSide::Middle,
        h2: Some(h2),
    })
}

/// Half-knot algebra of a left or right half diagram.
pub fn build_side_sft(h: &HalfDiagram, cfg: &SweepConfig) -> Result<BorderedAlgebra> {
    let (line, has_t) = match h.side {
        Side::Left => (LineId::East, true),
        Side::Right => (LineId::West, false),
    };
    let n = h.n;
    let mut generators = Vec::new();
    let mut grading = GradingTable::new(h.t_degree, 0);
    let mu_threads = half_thread_mu(h)?;
    for chord in &h.piece.chords {
        let deg = match chord.kind {
            ChordKind::RightCusp => 1,
            ChordKind::Crossing => mu_threads[chord.desc] - mu_threads[chord.asc],
        };
        generators.push(GeneratorId::Q(chord.label));
        generators.push(GeneratorId::P(chord.label));
        grading.set(GeneratorId::Q(chord.label), deg);
        grading.set(GeneratorId::P(chord.label), -1 - deg);
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let a = GeneratorId::alpha(i, j);
            generators.push(a);
            let (mi, mj) = (h.mu[i as usize - 1], h.mu[j as usize - 1]);
            // East-boundary segments grade like right half-disk ends,
            // west-boundary ones oppositely.
            grading.set(a, if line == LineId::East { mj - mi - 1 } else { mi - mj - 1 });
        }
    }
    for &(i, j) in &h.closure.pairs {
        let b = GeneratorId::beta(i, j);
        generators.push(b);
        grading.set(b, -1);
    }
    generators.sort();

    let disks = sweep_disks(&h.piece, SweepMode::All, cfg)?;
    let fam = |_l: LineId| Some(LineFamily::Plain);
    let ham = crate::disks::disks_to_poly(&disks, &fam)?;
    let ctx = StringContext::new(&h.piece, vec![(line, LineFamily::Plain)])?;
    let delta = delta_str(&ctx, has_t)?;
    let bracket = BracketTable::one_line();
    let (d_sft, differential) = sft_plus_string(&generators, &ham, &bracket, &delta)?;
    Ok(BorderedAlgebra {
        dga: Dga {
            name: match h.side {
                Side::Left => "SFT left".into(),
                Side::Right => "SFT right".into(),
            },
            discipline: D,
            generators,
            grading,
            differential,
            hamiltonian: Some(ham),
            bracket: Some(bracket),
            has_t,
        },
        delta,
        d_sft,
        side: if h.side == Side::Left { BorderedSide::Left } else { BorderedSide::Right },
        h2: None,
    })
}

fn half_thread_mu(h: &HalfDiagram) -> Result<Vec<i64>> {
    let wall = h
        .piece
        .columns
        .iter()
        .find_map(|c| match &c.kind {
            ColumnKind::WestWall { points } | ColumnKind::EastWall { points } => {
                Some(points.clone())
            }
            _ => None,
        })
        .unwrap_or_default();
    let seeds: Vec<(usize, i64)> = wall.iter().enumerate().map(|(k, &t)| (t, h.mu[k])).collect();
    Ok(h.piece.maslov_seeded(&seeds)?.0)
}

/// Sum of p_k q_k over the chords passed an odd number of times on the
/// trace arc between two wall points that stays inside the piece.
fn strand_pq_sum(trace: &KnotTrace, piece: &Piece, line: LineId, i: u32, j: u32) -> Result<Poly> {
    let a = trace
        .point_position(line, i)
        .ok_or(Error::MalformedInput { line: 0, msg: format!("no wall point {i}") })?;
    let b = trace
        .point_position(line, j)
        .ok_or(Error::MalformedInput { line: 0, msg: format!("no wall point {j}") })?;
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let len = trace.sites.len();
    let direct: Vec<usize> = (a + 1..b).collect();
    let wrap: Vec<usize> = (b + 1..len).chain(0..a).collect();
    let has_jump = |arc: &[usize]| {
        arc.iter().any(|&p| matches!(trace.sites[p].kind, SiteKind::Jump { .. }))
    };
    let arc = if !has_jump(&direct) {
        direct
    } else if !has_jump(&wrap) {
        wrap
    } else {
        return Err(Error::MalformedInput {
            line: 0,
            msg: format!("points {i},{j} are not strand-paired"),
        });
    };
    let mut counts: std::collections::BTreeMap<usize, u32> = Default::default();
    for p in arc {
        if let SiteKind::ChordEnd { chord } = trace.sites[p].kind {
            *counts.entry(chord).or_insert(0) += 1;
        }
    }
    let mut out = Poly::zero(D);
    for (chord, c) in counts {
        if c % 2 == 1 {
            let label = piece.chords[chord].label;
            out = out.add(&gen(GeneratorId::P(label)).mul(&gen(GeneratorId::Q(label)))?)?;
        }
    }
    Ok(out)
}

/// Boundary-segment expansions: for every disk occurrence of a marked-line
/// segment (i,j), the disk monomial divided by that segment.
fn marked_disk_poly(disks: &[DiskBoundary]) -> Result<Poly> {
    let fam = |_l: LineId| Some(LineFamily::Plain);
    let mut out = Poly::zero(D);
    for d in disks {
        out.toggle(d.monomial(&fam)?);
    }
    Ok(out)
}

/// The four morphisms of the bordered SFT theory for a once-cut diagram.
pub struct BorderedMaps {
    pub ell: DgaMorphism,
    pub r: DgaMorphism,
    pub cap_l: DgaMorphism,
    pub cap_r: DgaMorphism,
}

pub struct BorderedContext {
    pub sft: LsftAlgebra,
    pub middle: BorderedAlgebra,
    pub left: BorderedAlgebra,
    pub right: BorderedAlgebra,
    pub maps: BorderedMaps,
}

pub fn build_bordered(d: &FrontDiagram, cfg: &SweepConfig) -> Result<BorderedContext> {
    let (left, mid, right) = d.split()?;
    let sft = crate::lsft::build_lsft(d, cfg)?;
    let middle = build_middle_sft(&mid)?;
    let left_alg = build_side_sft(&left, cfg)?;
    let right_alg = build_side_sft(&right, cfg)?;
    let maps = build_morphisms(d, &left, &mid, &right, cfg)?;
    Ok(BorderedContext { sft, middle, left: left_alg, right: right_alg, maps })
}

pub fn build_morphisms(
    d: &FrontDiagram,
    left: &HalfDiagram,
    mid: &MiddleData,
    right: &HalfDiagram,
    cfg: &SweepConfig,
) -> Result<BorderedMaps> {
    let n = mid.n;
    let fam = |_l: LineId| Some(LineFamily::Plain);
    let left_disks = sweep_disks(&left.piece, SweepMode::All, cfg)?;
    let right_disks = sweep_disks(&right.piece, SweepMode::All, cfg)?;
    let left_trace = crate::diagram::trace_piece(&left.piece)?;
    let right_trace = crate::diagram::trace_piece(&right.piece)?;

    let mut ell = GenMap::new(D);
    let mut r = GenMap::new(D);
    for i in 1..=n {
        for j in i + 1..=n {
            // Half-disk expansions of the same-side boundary generators.
            let mut ell_img = Poly::zero(D);
            for disk in &left_disks {
                let m = disk.monomial(&fam)?;
                for _occ in disk.segment_positions(LineId::East, i, j) {
                    let quotient = divide_once(&m, GeneratorId::alpha(i, j))?;
                    ell_img = ell_img.add(&quotient)?;
                }
            }
            ell.insert(GeneratorId::alpha_l(i, j), ell_img);
            ell.insert(GeneratorId::alpha_r(i, j), gen(GeneratorId::alpha(i, j)));
            let mut r_img = Poly::zero(D);
            for disk in &right_disks {
                let m = disk.monomial(&fam)?;
                for _occ in disk.segment_positions(LineId::West, i, j) {
                    let quotient = divide_once(&m, GeneratorId::alpha(i, j))?;
                    r_img = r_img.add(&quotient)?;
                }
            }
            r.insert(GeneratorId::alpha_r(i, j), r_img);
            r.insert(GeneratorId::alpha_l(i, j), gen(GeneratorId::alpha(i, j)));
        }
    }
    for &(i, j) in &mid.beta_left.pairs {
        ell.insert(
            GeneratorId::beta_l(i, j),
            strand_pq_sum(&left_trace, &left.piece, LineId::East, i, j)?,
        );
        r.insert(GeneratorId::beta_l(i, j), gen(GeneratorId::beta(i, j)));
    }
    for &(i, j) in &mid.beta_right.pairs {
        ell.insert(GeneratorId::beta_r(i, j), gen(GeneratorId::beta(i, j)));
        r.insert(
            GeneratorId::beta_r(i, j),
            strand_pq_sum(&right_trace, &right.piece, LineId::West, i, j)?,
        );
    }

    // L and R into the closed algebra: p, q, t map to themselves, boundary
    // generators expand over marked division disks and strand sums.
    let mut cap_l = GenMap::new(D);
    for chord in &left.piece.chords {
        cap_l.insert(GeneratorId::Q(chord.label), gen(GeneratorId::Q(chord.label)));
        cap_l.insert(GeneratorId::P(chord.label), gen(GeneratorId::P(chord.label)));
    }
    let mut cap_r = GenMap::new(D);
    for chord in &right.piece.chords {
        cap_r.insert(GeneratorId::Q(chord.label), gen(GeneratorId::Q(chord.label)));
        cap_r.insert(GeneratorId::P(chord.label), gen(GeneratorId::P(chord.label)));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let east =
                sweep_disks(&d.piece, SweepMode::MarkedFromEast { divide: 0, i, j }, cfg)?;
            cap_l.insert(GeneratorId::alpha(i, j), marked_disk_poly(&east)?);
            let west =
                sweep_disks(&d.piece, SweepMode::MarkedFromWest { divide: 0, i, j }, cfg)?;
            cap_r.insert(GeneratorId::alpha(i, j), marked_disk_poly(&west)?);
        }
    }
    for &(i, j) in &mid.beta_right.pairs {
        // The left algebra's beta generators are the right-side strands.
        cap_l.insert(
            GeneratorId::beta(i, j),
            strand_pq_sum(&right_trace, &right.piece, LineId::West, i, j)?,
        );
    }
    for &(i, j) in &mid.beta_left.pairs {
        cap_r.insert(
            GeneratorId::beta(i, j),
            strand_pq_sum(&left_trace, &left.piece, LineId::East, i, j)?,
        );
    }

    Ok(BorderedMaps {
        ell: DgaMorphism {
            name: "ell".into(),
            source: "SFT middle".into(),
            target: "SFT left".into(),
            map: ell,
        },
        r: DgaMorphism {
            name: "r".into(),
            source: "SFT middle".into(),
            target: "SFT right".into(),
            map: r,
        },
        cap_l: DgaMorphism {
            name: "L".into(),
            source: "SFT left".into(),
            target: "SFT".into(),
            map: cap_l,
        },
        cap_r: DgaMorphism {
            name: "R".into(),
            source: "SFT right".into(),
            target: "SFT".into(),
            map: cap_r,
        },
    })
}

/// Remove one factor of `g` from every monomial of `m` (which contains it).
fn divide_once(m: &crate::algebra::Monomial, g: GeneratorId) -> Result<Poly> {
    let crate::algebra::Monomial::Commutative { gens, t_exp } = m else {
        return Err(Error::DisciplineMismatch {
            left: Discipline::Commutative,
            right: Discipline::FreeWord,
        });
    };
    let mut gens = gens.clone();
    match gens.get_mut(&g) {
        Some(e) if *e > 1 => *e -= 1,
        Some(_) => {
            gens.remove(&g);
        }
        None => {
            return Err(Error::UnknownGenerator { gen: g.to_string() });
        }
    }
    Ok(Poly::from_monomial(crate::algebra::Monomial::Commutative { gens, t_exp: *t_exp }))
}

/// Check that delta is a derivation of the bracket on all generator pairs.
fn check_delta_bracket_derivation(alg: &BorderedAlgebra) -> Result<Check> {
    let mut failures = Vec::new();
    let b = alg.dga.bracket.as_ref().expect("bordered algebras carry brackets");
    let gens = &alg.dga.generators;
    for (idx, &x) in gens.iter().enumerate() {
        for &y in gens.iter().skip(idx) {
            let (xp, yp) = (gen(x), gen(y));
            let lhs = alg.delta.apply(&b.bracket(&xp, &yp)?)?;
            let rhs = b
                .bracket(&alg.delta.apply(&xp)?, &yp)?
                .add(&b.bracket(&xp, &alg.delta.apply(&yp)?)?)?;
            if lhs != rhs {
                failures.push(format!("delta{{{x},{y}}} mismatch: {}", lhs.add(&rhs)?));
            }
        }
    }
    Ok(Check::new(format!("delta is a bracket derivation on {}", alg.dga.name), failures))
}

fn check_delta_squared(alg: &BorderedAlgebra) -> Result<Check> {
    let mut failures = Vec::new();
    for &g in &alg.dga.generators {
        let dd = alg.delta.apply(&alg.delta.apply_gen(g)?)?;
        if !dd.is_zero() {
            failures.push(format!("delta²({g}) = {dd}"));
        }
    }
    Ok(Check::new(format!("delta² = 0 on {}", alg.dga.name), failures))
}

/// The full identity suite of the bordered theory on a once-cut diagram.
pub fn verify_bordered_suite(ctx: &BorderedContext) -> Result<Report> {
    let mut report = Report::new("bordered SFT suite");
    report.push(ctx.sft.dga.check_d_squared()?);
    report.push(ctx.sft.dga.check_degree()?);
    report.push(qme_check(&ctx.sft.dga, &ctx.sft.delta)?);
    for alg in [&ctx.middle, &ctx.left, &ctx.right] {
        report.push(alg.dga.check_d_squared()?);
        report.push(alg.dga.check_degree()?);
        report.push(alg.dga.check_jacobi()?);
        report.push(alg.dga.check_bracket_degree()?);
        report.push(check_delta_squared(alg)?);
        report.push(check_delta_bracket_derivation(alg)?);
    }
    // Middle-specific identities.
    {
        let m = &ctx.middle;
        let h = m.dga.hamiltonian.as_ref().unwrap();
        let h2 = m.h2.as_ref().unwrap();
        let b = m.dga.bracket.as_ref().unwrap();
        let mut failures = Vec::new();
        let lhs = m.delta.apply(h)?;
        if lhs != *h2 {
            failures.push(format!("delta(h) + h2 = {}", lhs.add(h2)?));
        }
        report.push(Check::new("delta(h) = h2 on SFT middle".into(), failures));
        let mut failures = Vec::new();
        for &x in &m.dga.generators {
            let xp = gen(x);
            let lhs = b.bracket(h, &b.bracket(h, &xp)?)?;
            let rhs = b.bracket(h2, &xp)?;
            if lhs != rhs {
                failures.push(format!("{{h,{{h,{x}}}}} + {{h2,{x}}} = {}", lhs.add(&rhs)?));
            }
        }
        report.push(Check::new("{h,{h,x}} = {h2,x} on SFT middle".into(), failures));
        let mut failures = Vec::new();
        for &x in &m.dga.generators {
            let lhs = m.d_sft.apply_gen(x)?;
            let rhs = b.bracket(h, &gen(x))?;
            if lhs != rhs {
                failures.push(format!("closed formula vs {{h,{x}}}: {}", lhs.add(&rhs)?));
            }
        }
        report.push(Check::new("SFT part equals {h,.} on SFT middle".into(), failures));
    }
    // Half-algebra master equations.
    for alg in [&ctx.left, &ctx.right] {
        report.push(qme_check(&alg.dga, &alg.delta)?);
    }
    // Morphisms.
    report.push(ctx.maps.ell.check_chain_map(&ctx.middle.dga, &ctx.left.dga)?);
    report.push(ctx.maps.r.check_chain_map(&ctx.middle.dga, &ctx.right.dga)?);
    report.push(ctx.maps.cap_l.check_chain_map(&ctx.left.dga, &ctx.sft.dga)?);
    report.push(ctx.maps.cap_r.check_chain_map(&ctx.right.dga, &ctx.sft.dga)?);
    report.push(ctx.maps.ell.check_degree(&ctx.middle.dga, &ctx.left.dga)?);
    report.push(ctx.maps.r.check_degree(&ctx.middle.dga, &ctx.right.dga)?);
    report.push(ctx.maps.cap_l.check_degree(&ctx.left.dga, &ctx.sft.dga)?);
    report.push(ctx.maps.cap_r.check_degree(&ctx.right.dga, &ctx.sft.dga)?);
    report.push(check_square(
        "L∘ell = R∘r on the middle algebra",
        &ctx.middle.dga,
        &ctx.maps.ell,
        &ctx.maps.cap_l,
        &ctx.maps.r,
        &ctx.maps.cap_r,
    )?);
    // Pushout generator coverage: every closed generator comes from exactly
    // one half.
    let mut failures = Vec::new();
    for &g in &ctx.sft.dga.generators {
        let in_left = ctx.left.dga.generators.contains(&g);
        let in_right = ctx.right.dga.generators.contains(&g);
        if in_left == in_right {
            failures.push(format!("{g} covered twice or never"));
        }
    }
    report.push(Check::new("pushout generator coverage".into(), failures));
    // Universal map against the closed algebra itself.
    let induced = induced_sft_map(ctx, &ctx.maps.cap_l, &ctx.maps.cap_r, "SFT")?;
    report.push(induced.check_chain_map(&ctx.sft.dga, &ctx.sft.dga)?);
    Ok(report)
}

/// Universal pushout map: classify each closed generator as the image of a
/// left or right generator and route it through f or g accordingly.
pub fn induced_sft_map(
    ctx: &BorderedContext,
    f: &DgaMorphism,
    g: &DgaMorphism,
    target: &str,
) -> Result<DgaMorphism> {
    let mut map = GenMap::new(D);
    for &x in &ctx.sft.dga.generators {
        if ctx.left.dga.generators.contains(&x) {
            map.insert(x, f.map.image_of(x)?.clone());
        } else {
            map.insert(x, g.map.image_of(x)?.clone());
        }
    }
    map.t_image = f.map.t_image.clone();
    Ok(DgaMorphism { name: "induced".into(), source: "SFT".into(), target: target.into(), map })
}

// ---------------------------------------------------------------------------
// Two-sided diagrams.

/// A diagram piece with dividing lines on both sides (either possibly
/// empty), closed up by pairings beyond each line.
pub struct TwoSidedDiagram {
    pub piece: Piece,
    pub mu_west: Vec<i64>,
    pub mu_east: Vec<i64>,
    pub t_degree: i64,
}

impl TwoSidedDiagram {
    /// The trivial-braid realization of a dividing line.
    pub fn from_middle(mid: &MiddleData) -> Result<TwoSidedDiagram> {
        let piece = Piece::build(
            Vec::new(),
            mid.n,
            mid.n,
            Some(mid.beta_left.clone()),
            Some(mid.beta_right.clone()),
            BasePoint::Anchor { west: true, point: 1 },
            false,
        )?;
        Ok(TwoSidedDiagram {
            piece,
            mu_west: mid.mu.clone(),
            mu_east: mid.mu.clone(),
            t_degree: 0,
        })
    }

    /// A half diagram as a two-sided diagram with one empty line.
    pub fn from_half(h: &HalfDiagram) -> TwoSidedDiagram {
        match h.side {
            Side::Left => TwoSidedDiagram {
                piece: h.piece.clone(),
                mu_west: Vec::new(),
                mu_east: h.mu.clone(),
                t_degree: h.t_degree,
            },
            Side::Right => TwoSidedDiagram {
                piece: h.piece.clone(),
                mu_west: h.mu.clone(),
                mu_east: Vec::new(),
                t_degree: h.t_degree,
            },
        }
    }

    /// Glue two adjacent two-sided diagrams along their shared line, keeping
    /// the line as an interior dividing column.
    pub fn glue(a: &TwoSidedDiagram, b: &TwoSidedDiagram) -> Result<TwoSidedDiagram> {
        if a.piece.east_n != b.piece.west_n || a.mu_east != b.mu_west {
            return Err(Error::BoundaryMismatch {
                msg: format!(
                    "east boundary ({}) vs west boundary ({})",
                    a.piece.east_n, b.piece.west_n
                ),
            });
        }
        let mut events: Vec<Event> = a.piece.events.clone();
        events.push(Event::new(EventKind::Divide));
        events.extend(b.piece.events.clone());
        let base = if a.piece.mark_column.is_some() || b.piece.mark_column.is_some() {
            BasePoint::Inside
        } else if a.piece.west_n > 0 {
            BasePoint::Anchor { west: true, point: 1 }
        } else {
            BasePoint::Anchor { west: false, point: 1 }
        };
        let piece = Piece::build(
            events,
            a.piece.west_n,
            b.piece.east_n,
            a.piece.west_closure.clone(),
            b.piece.east_closure.clone(),
            base,
            a.piece.flipped,
        )?;
        // Chords keep their constituent labels, in order.
        let mut glued = TwoSidedDiagram {
            piece,
            mu_west: a.mu_west.clone(),
            mu_east: b.mu_east.clone(),
            t_degree: a.t_degree.max(b.t_degree),
        };
        let labels: Vec<u32> = a
            .piece
            .chords
            .iter()
            .map(|c| c.label)
            .chain(b.piece.chords.iter().map(|c| c.label))
            .collect();
        // Relabel only when the halves carry disjoint labels.
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() == labels.len() {
            for (chord, label) in glued.piece.chords.iter_mut().zip(labels) {
                chord.label = label;
            }
        }
        Ok(glued)
    }

    fn mu_threads(&self) -> Result<Vec<i64>> {
        let mut seeds: Vec<(usize, i64)> = Vec::new();
        for col in &self.piece.columns {
            match &col.kind {
                ColumnKind::WestWall { points } => {
                    for (k, &t) in points.iter().enumerate() {
                        seeds.push((t, self.mu_west[k]));
                    }
                }
                ColumnKind::EastWall { points } => {
                    for (k, &t) in points.iter().enumerate() {
                        seeds.push((t, self.mu_east[k]));
                    }
                }
                _ => {}
            }
        }
        Ok(self.piece.maslov_seeded(&seeds)?.0)
    }

    fn lines(&self) -> Vec<(LineId, LineFamily)> {
        let mut v = Vec::new();
        if self.piece.west_n > 0 {
            v.push((LineId::West, LineFamily::Left));
        }
        if self.piece.east_n > 0 {
            v.push((LineId::East, LineFamily::Right));
        }
        v
    }
}

/// The SFT algebra of a two-sided diagram.
pub fn build_lr_sft(ts: &TwoSidedDiagram, cfg: &SweepConfig) -> Result<BorderedAlgebra> {
    let has_t = matches!(ts.piece.base, BasePoint::Inside);
    let mut generators = Vec::new();
    let mut grading = GradingTable::new(ts.t_degree, 0);
    let mu_threads = ts.mu_threads()?;
    for chord in &ts.piece.chords {
        let deg = match chord.kind {
            ChordKind::RightCusp => 1,
            ChordKind::Crossing => mu_threads[chord.desc] - mu_threads[chord.asc],
        };
        generators.push(GeneratorId::Q(chord.label));
        generators.push(GeneratorId::P(chord.label));
        grading.set(GeneratorId::Q(chord.label), deg);
        grading.set(GeneratorId::P(chord.label), -1 - deg);
    }
    let m = ts.piece.west_n;
    for i in 1..=m {
        for j in i + 1..=m {
            let a = GeneratorId::alpha_l(i, j);
            generators.push(a);
            grading.set(a, ts.mu_west[i as usize - 1] - ts.mu_west[j as usize - 1] - 1);
        }
    }
    let n = ts.piece.east_n;
    for i in 1..=n {
        for j in i + 1..=n {
            let a = GeneratorId::alpha_r(i, j);
            generators.push(a);
            grading.set(a, ts.mu_east[j as usize - 1] - ts.mu_east[i as usize - 1] - 1);
        }
    }
    if let Some(p) = &ts.piece.west_closure {
        for &(i, j) in &p.pairs {
            let b = GeneratorId::beta_l(i, j);
            generators.push(b);
            grading.set(b, -1);
        }
    }
    if let Some(p) = &ts.piece.east_closure {
        for &(i, j) in &p.pairs {
            let b = GeneratorId::beta_r(i, j);
            generators.push(b);
            grading.set(b, -1);
        }
    }
    generators.sort();

    let disks = sweep_disks(&ts.piece, SweepMode::All, cfg)?;
    let fam = |l: LineId| match l {
        LineId::West => Some(LineFamily::Left),
        LineId::East => Some(LineFamily::Right),
        LineId::Divide(_) => None,
    };
    let ham = crate::disks::disks_to_poly(&disks, &fam)?;
    let ctx = StringContext::new(&ts.piece, ts.lines())?;
    let delta = delta_str(&ctx, has_t)?;
    let bracket = BracketTable::two_line();
    let (d_sft, differential) = sft_plus_string(&generators, &ham, &bracket, &delta)?;
    Ok(BorderedAlgebra {
        dga: Dga {
            name: "SFT two-sided".into(),
            discipline: D,
            generators,
            grading,
            differential,
            hamiltonian: Some(ham),
            bracket: Some(bracket),
            has_t,
        },
        delta,
        d_sft,
        side: BorderedSide::TwoSided,
        h2: None,
    })
}

/// Extend the algebra of the right constituent into the glued algebra: its
/// west-line generators expand over disks and strands of the left side.
pub fn lr_extend_right(
    a: &TwoSidedDiagram,
    b: &TwoSidedDiagram,
    glued: &TwoSidedDiagram,
    cfg: &SweepConfig,
) -> Result<DgaMorphism> {
    lr_extend(a, b, glued, false, cfg)
}

/// Extend the algebra of the left constituent into the glued algebra.
pub fn lr_extend_left(
    a: &TwoSidedDiagram,
    b: &TwoSidedDiagram,
    glued: &TwoSidedDiagram,
    cfg: &SweepConfig,
) -> Result<DgaMorphism> {
    lr_extend(a, b, glued, true, cfg)
}

fn lr_extend(
    a: &TwoSidedDiagram,
    b: &TwoSidedDiagram,
    glued: &TwoSidedDiagram,
    from_left: bool,
    cfg: &SweepConfig,
) -> Result<DgaMorphism> {
    let inner_divide = 0usize; // the glued piece's single interior line
    let div_col = glued.piece.divides[inner_divide];
    let source_piece = if from_left { &a.piece } else { &b.piece };
    // Chord label correspondence by position.
    let offset = if from_left { 0 } else { a.piece.chords.len() };
    let mut map = GenMap::new(D);
    for (k, chord) in source_piece.chords.iter().enumerate() {
        let target_label = glued.piece.chords[offset + k].label;
        map.insert(GeneratorId::Q(chord.label), gen(GeneratorId::Q(target_label)));
        map.insert(GeneratorId::P(chord.label), gen(GeneratorId::P(target_label)));
    }
    // Outer-line generators map to themselves.
    let (outer_n, outer_closure) = if from_left {
        (a.piece.west_n, &a.piece.west_closure)
    } else {
        (b.piece.east_n, &b.piece.east_closure)
    };
    let outer_fam = if from_left { LineFamily::Left } else { LineFamily::Right };
    for i in 1..=outer_n {
        for j in i + 1..=outer_n {
            let g = outer_fam.alpha(i, j);
            map.insert(g, gen(g));
        }
    }
    if let Some(p) = outer_closure {
        for &(i, j) in &p.pairs {
            let g = outer_fam.beta(i, j);
            map.insert(g, gen(g));
        }
    }
    // Inner-line generators expand over marked disks and strand sums.
    let inner_n = a.piece.east_n;
    let inner_fam = if from_left { LineFamily::Right } else { LineFamily::Left };
    let glue_fam = |l: LineId| match l {
        LineId::West => Some(LineFamily::Left),
        LineId::East => Some(LineFamily::Right),
        LineId::Divide(_) => None,
    };
    for i in 1..=inner_n {
        for j in i + 1..=inner_n {
            let mode = if from_left {
                SweepMode::MarkedFromEast { divide: inner_divide, i, j }
            } else {
                SweepMode::MarkedFromWest { divide: inner_divide, i, j }
            };
            let disks = sweep_disks(&glued.piece, mode, cfg)?;
            let mut img = Poly::zero(D);
            for disk in &disks {
                img = img.add(&Poly::from_monomial(disk.monomial(&glue_fam)?))?;
            }
            map.insert(inner_fam.alpha(i, j), img);
        }
    }
    // Beta generators of the inner line: passage sums along the arc through
    // the other constituent.
    let inner_pairing: &Pairing = if from_left {
        b.piece.west_closure.as_ref().expect("inner pairing")
    } else {
        a.piece.east_closure.as_ref().expect("inner pairing")
    };
    let trace = crate::diagram::trace_piece(&glued.piece)?;
    for &(i, j) in &inner_pairing.pairs {
        let img = cross_side_sum(&trace, &glued.piece, inner_divide, div_col, i, j, !from_left)?;
        map.insert(inner_fam.beta(i, j), img);
    }
    Ok(DgaMorphism {
        name: if from_left { "glue-left".into() } else { "glue-right".into() },
        source: "SFT two-sided".into(),
        target: "SFT two-sided".into(),
        map,
    })
}

/// Passage sum (p_k q_k for chords, outer beta for wall jumps) along the arc
/// between two inner-line points through the chosen side.
fn cross_side_sum(
    trace: &KnotTrace,
    piece: &Piece,
    divide: usize,
    div_col: usize,
    i: u32,
    j: u32,
    west_side: bool,
) -> Result<Poly> {
    let line = LineId::Divide(divide);
    let a = trace.point_position(line, i).ok_or(Error::MalformedInput {
        line: 0,
        msg: format!("no inner point {i}"),
    })?;
    let b = trace.point_position(line, j).ok_or(Error::MalformedInput {
        line: 0,
        msg: format!("no inner point {j}"),
    })?;
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let len = trace.sites.len();
    let direct: Vec<usize> = (a + 1..b).collect();
    let wrap: Vec<usize> = (b + 1..len).chain(0..a).collect();
    let on_side = |arc: &[usize]| {
        arc.iter().all(|&p| {
            let col = trace.sites[p].column;
            if matches!(trace.sites[p].kind, SiteKind::Mark) {
                return true;
            }
            if west_side {
                col <= div_col
            } else {
                col >= div_col
            }
        })
    };
    let arc = if on_side(&direct) {
        direct
    } else if on_side(&wrap) {
        wrap
    } else {
        return Err(Error::MalformedInput {
            line: 0,
            msg: format!("inner points {i},{j} not paired through one side"),
        });
    };
    let mut chords: std::collections::BTreeMap<usize, u32> = Default::default();
    let mut betas: std::collections::BTreeMap<GeneratorId, u32> = Default::default();
    for p in arc {
        match trace.sites[p].kind {
            SiteKind::ChordEnd { chord } => *chords.entry(chord).or_insert(0) += 1,
            SiteKind::Jump { line, from, to } => {
                let fam = match line {
                    LineId::West => LineFamily::Left,
                    LineId::East => LineFamily::Right,
                    LineId::Divide(_) => continue,
                };
                let (x, y) = if from < to { (from, to) } else { (to, from) };
                *betas.entry(fam.beta(x, y)).or_insert(0) += 1;
            }
            _ => {}
        }
    }
    let mut out = Poly::zero(D);
    for (chord, c) in chords {
        if c % 2 == 1 {
            let label = piece.chords[chord].label;
            out = out.add(&gen(GeneratorId::P(label)).mul(&gen(GeneratorId::Q(label)))?)?;
        }
    }
    for (beta, c) in betas {
        if c % 2 == 1 {
            out = out.add(&gen(beta))?;
        }
    }
    Ok(out)
}

/// Build the four algebras of three adjacent two-sided diagrams and check
/// the gluing pushout square.
pub fn lr_pushout(
    a: &TwoSidedDiagram,
    b: &TwoSidedDiagram,
    c: &TwoSidedDiagram,
    cfg: &SweepConfig,
) -> Result<Report> {
    let ab = TwoSidedDiagram::glue(a, b)?;
    let bc = TwoSidedDiagram::glue(b, c)?;
    let abc = TwoSidedDiagram::glue(&ab, c)?;
    let alg_b = build_lr_sft(b, cfg)?;
    let alg_ab = build_lr_sft(&ab, cfg)?;
    let alg_bc = build_lr_sft(&bc, cfg)?;
    let alg_abc = build_lr_sft(&abc, cfg)?;
    let b_to_ab = lr_extend_right(a, b, &ab, cfg)?;
    let b_to_bc = lr_extend_left(b, c, &bc, cfg)?;
    let ab_to_abc = lr_extend_left(&ab, c, &abc, cfg)?;
    let bc_to_abc = lr_extend_right(a, &bc, &abc, cfg)?;

    let mut report = Report::new("two-sided gluing pushout");
    for alg in [&alg_b, &alg_ab, &alg_bc, &alg_abc] {
        report.push(alg.dga.check_d_squared()?);
    }
    report.push(b_to_ab.check_chain_map(&alg_b.dga, &alg_ab.dga)?);
    report.push(b_to_bc.check_chain_map(&alg_b.dga, &alg_bc.dga)?);
    report.push(ab_to_abc.check_chain_map(&alg_ab.dga, &alg_abc.dga)?);
    report.push(bc_to_abc.check_chain_map(&alg_bc.dga, &alg_abc.dga)?);
    report.push(check_square(
        "gluing square commutes",
        &alg_b.dga,
        &b_to_ab,
        &ab_to_abc,
        &b_to_bc,
        &bc_to_abc,
    )?);
    Ok(report)
}

#[cfg(test)]
mod tests;
