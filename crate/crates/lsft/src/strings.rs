//! Broken-closed-string engine: canonical representatives for generators,
//! insertion counting, and the string differentials of the closed, half,
//! middle, and two-sided algebras.
//!
//! Strings live on the cyclic knot trace. A generator's canonical string
//! jumps across its chord and travels the arc between the two chord
//! endpoints that avoids the base location; insertions are the interior
//! chord-endpoint passages (contributing p_k q_k), the dividing-line jumps
//! taken (contributing the pairing's beta), and the splittings of any
//! dividing-line segment the string carries (alpha_ij -> alpha_ik alpha_kj).

use crate::algebra::{Derivation, Discipline, GeneratorId, Poly};
use crate::diagram::{ChordKind, KnotTrace, LineId, MiddleData, Piece, SiteKind};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// How the walls of a piece name their alpha/beta generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineFamily {
    Plain,
    Left,
    Right,
}

impl LineFamily {
    pub fn alpha(&self, i: u32, j: u32) -> GeneratorId {
        match self {
            LineFamily::Plain => GeneratorId::alpha(i, j),
            LineFamily::Left => GeneratorId::alpha_l(i, j),
            LineFamily::Right => GeneratorId::alpha_r(i, j),
        }
    }

    pub fn beta(&self, i: u32, j: u32) -> GeneratorId {
        match self {
            LineFamily::Plain => GeneratorId::beta(i, j),
            LineFamily::Left => GeneratorId::beta_l(i, j),
            LineFamily::Right => GeneratorId::beta_r(i, j),
        }
    }
}

/// Trace plus naming data: everything the walker needs about one context.
pub struct StringContext<'a> {
    pub piece: &'a Piece,
    pub trace: KnotTrace,
    /// Wall lines carrying alpha/beta generators, with their family tag.
    pub lines: Vec<(LineId, LineFamily)>,
}

impl<'a> StringContext<'a> {
    pub fn new(piece: &'a Piece, lines: Vec<(LineId, LineFamily)>) -> Result<Self> {
        let trace = crate::diagram::trace_piece(piece)?;
        Ok(StringContext { piece, trace, lines })
    }

    fn family_of(&self, line: LineId) -> Option<LineFamily> {
        self.lines.iter().find(|(l, _)| *l == line).map(|(_, f)| *f)
    }

    fn chord_label(&self, chord: usize) -> u32 {
        self.piece.chords[chord].label
    }
}

/// One cyclic broken closed string, as trace-site data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrokenString {
    pub segments: Vec<StringSegment>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StringSegment {
    /// Consecutive trace positions the string passes through continuously.
    ArcRun { positions: Vec<usize> },
    /// Corner of the string at a chord.
    ChordJump { chord: usize },
    /// A monotone path along a wall between points i < j.
    MSegment { line: LineId, i: u32, j: u32 },
}

impl BrokenString {
    pub fn describe(&self, ctx: &StringContext) -> String {
        let mut parts = Vec::new();
        for seg in &self.segments {
            match seg {
                StringSegment::ArcRun { positions } => {
                    let sites: Vec<String> = positions
                        .iter()
                        .map(|&p| describe_site(ctx, p))
                        .collect();
                    parts.push(format!("arc[{}]", sites.join(" ")));
                }
                StringSegment::ChordJump { chord } => {
                    parts.push(format!("jump(chord {})", ctx.chord_label(*chord)))
                }
                StringSegment::MSegment { i, j, .. } => parts.push(format!("wall({i},{j})")),
            }
        }
        parts.join(" ")
    }
}

fn describe_site(ctx: &StringContext, pos: usize) -> String {
    match ctx.trace.sites[pos].kind {
        SiteKind::ChordEnd { chord } => format!("c{}", ctx.chord_label(chord)),
        SiteKind::MPoint { point, .. } => format!("m{point}"),
        SiteKind::Jump { from, to, .. } => format!("j{from}-{to}"),
        SiteKind::Mark => "*".into(),
    }
}

/// Canonical representative of a p/q/alpha/t generator.
///
/// For a chord generator the string turns at the chord and travels the arc
/// between its two endpoint passages avoiding the base; whether the far
/// endpoint is passed (the self insertion) depends on the corner kind, which
/// is pinned by requiring the string's corners to be holomorphic.
pub fn string_for(ctx: &StringContext, gen: GeneratorId) -> Result<BrokenString> {
    match gen {
        GeneratorId::Q(label) | GeneratorId::P(label) => {
            let chord = ctx
                .piece
                .chord_by_label(label)
                .ok_or(Error::UnknownGenerator { gen: gen.to_string() })?;
            let (x, y) = ctx.trace.chord_positions(chord);
            let kind = ctx.piece.chords[chord].kind;
            let include_far = match (kind, gen) {
                (ChordKind::Crossing, GeneratorId::P(_)) => true,
                (ChordKind::RightCusp, GeneratorId::Q(_)) => true,
                _ => false,
            };
            let end = if include_far { y + 1 } else { y };
            Ok(BrokenString {
                segments: vec![
                    StringSegment::ChordJump { chord },
                    StringSegment::ArcRun { positions: (x + 1..end).collect() },
                ],
            })
        }
        GeneratorId::Alpha(i, j) | GeneratorId::AlphaL(i, j) | GeneratorId::AlphaR(i, j) => {
            let line = ctx
                .lines
                .iter()
                .find(|(l, f)| f.alpha(i, j) == gen && line_has_points(ctx, *l))
                .map(|(l, _)| *l)
                .ok_or(Error::NotRepresentable { gen: gen.to_string() })?;
            let pi = ctx
                .trace
                .point_position(line, i)
                .ok_or(Error::NotRepresentable { gen: gen.to_string() })?;
            let pj = ctx
                .trace
                .point_position(line, j)
                .ok_or(Error::NotRepresentable { gen: gen.to_string() })?;
            let (a, b) = if pi < pj { (pi, pj) } else { (pj, pi) };
            Ok(BrokenString {
                segments: vec![
                    StringSegment::MSegment { line, i, j },
                    StringSegment::ArcRun { positions: (a + 1..b).collect() },
                ],
            })
        }
        GeneratorId::Beta(..) | GeneratorId::BetaL(..) | GeneratorId::BetaR(..) => {
            Err(Error::NotRepresentable { gen: gen.to_string() })
        }
    }
}

fn line_has_points(ctx: &StringContext, line: LineId) -> bool {
    ctx.trace.point_position(line, 1).is_some()
}

/// The t-loop: once around the whole trace.
pub fn string_for_t(ctx: &StringContext) -> BrokenString {
    BrokenString {
        segments: vec![StringSegment::ArcRun {
            positions: (0..ctx.trace.sites.len()).collect(),
        }],
    }
}

/// Sum of the insertions into a string, as the coefficient polynomial
/// (pq passages and beta jumps) plus the alpha-splitting terms.
pub fn insertions(ctx: &StringContext, s: &BrokenString) -> Result<(Poly, Poly)> {
    let d = Discipline::Commutative;
    let mut chord_counts: BTreeMap<usize, u32> = BTreeMap::new();
    let mut jump_counts: BTreeMap<GeneratorId, u32> = BTreeMap::new();
    let mut splits = Poly::zero(d);
    for seg in &s.segments {
        match seg {
            StringSegment::ArcRun { positions } => {
                for &pos in positions {
                    match ctx.trace.sites[pos].kind {
                        SiteKind::ChordEnd { chord } => {
                            *chord_counts.entry(chord).or_insert(0) += 1;
                        }
                        SiteKind::Jump { line, from, to } => {
                            let fam = ctx.family_of(line).ok_or(Error::MalformedInput {
                                line: 0,
                                msg: "jump on a line without generators".into(),
                            })?;
                            let (i, j) = if from < to { (from, to) } else { (to, from) };
                            *jump_counts.entry(fam.beta(i, j)).or_insert(0) += 1;
                        }
                        SiteKind::MPoint { .. } | SiteKind::Mark => {}
                    }
                }
            }
            StringSegment::ChordJump { .. } => {}
            StringSegment::MSegment { line, i, j } => {
                let fam = ctx.family_of(*line).ok_or(Error::MalformedInput {
                    line: 0,
                    msg: "segment on a line without generators".into(),
                })?;
                for k in *i + 1..*j {
                    let term = Poly::generator(d, fam.alpha(*i, k))
                        .mul(&Poly::generator(d, fam.alpha(k, *j)))?;
                    splits = splits.add(&term)?;
                }
            }
        }
    }
    let mut coeff = Poly::zero(d);
    for (chord, count) in chord_counts {
        if count % 2 == 1 {
            let label = ctx.chord_label(chord);
            let term = Poly::generator(d, GeneratorId::P(label))
                .mul(&Poly::generator(d, GeneratorId::Q(label)))?;
            coeff = coeff.add(&term)?;
        }
    }
    for (beta, count) in jump_counts {
        if count % 2 == 1 {
            coeff = coeff.add(&Poly::generator(d, beta))?;
        }
    }
    Ok((coeff, splits))
}

/// String differential of a walker context: defined on every p/q generator
/// of the piece, every alpha/beta of its generator-carrying walls, and t.
pub fn delta_str(ctx: &StringContext, include_t: bool) -> Result<Derivation> {
    let d = Discipline::Commutative;
    let mut der = Derivation::new(d);
    for chord in &ctx.piece.chords {
        for gen in [GeneratorId::Q(chord.label), GeneratorId::P(chord.label)] {
            let s = string_for(ctx, gen)?;
            let (coeff, _) = insertions(ctx, &s)?;
            der.insert(gen, coeff.mul(&Poly::generator(d, gen))?);
        }
    }
    for (line, fam) in &ctx.lines {
        let n = wall_size(ctx, *line);
        for i in 1..=n {
            for j in i + 1..=n {
                let gen = fam.alpha(i, j);
                let s = string_for(ctx, gen)?;
                let (coeff, splits) = insertions(ctx, &s)?;
                der.insert(gen, coeff.mul(&Poly::generator(d, gen))?.add(&splits)?);
            }
        }
        // beta generators: delta(beta) = beta^2
        let closure = closure_of(ctx, *line);
        if let Some(pairing) = closure {
            for &(i, j) in &pairing.pairs {
                let b = fam.beta(i, j);
                let bp = Poly::generator(d, b);
                der.insert(b, bp.mul(&bp)?);
            }
        }
    }
    if include_t {
        // The t-loop crosses every closure jump once.
        let s = string_for_t(ctx);
        let (coeff, _) = insertions(ctx, &s)?;
        if !coeff.is_zero() {
            der.t_image = Some(coeff.mul(&Poly::t_power(1))?);
        }
    }
    Ok(der)
}

fn wall_size(ctx: &StringContext, line: LineId) -> u32 {
    match line {
        LineId::West => ctx.piece.west_n,
        LineId::East => ctx.piece.east_n,
        LineId::Divide(idx) => ctx.piece.divide_points(idx).len() as u32,
    }
}

fn closure_of<'a>(ctx: &'a StringContext, line: LineId) -> Option<&'a crate::diagram::Pairing> {
    match line {
        LineId::West => ctx.piece.west_closure.as_ref(),
        LineId::East => ctx.piece.east_closure.as_ref(),
        LineId::Divide(_) => None,
    }
}

/// The walk data of the middle algebra: the beta generators used by the
/// alternating walk from point 1 up to the first occurrence of each point.
#[derive(Debug, Clone)]
pub struct PathSet {
    pub point: u32,
    pub betas: Vec<GeneratorId>,
}

impl PathSet {
    pub fn gamma(&self) -> Poly {
        let mut p = Poly::zero(Discipline::Commutative);
        for b in &self.betas {
            p = p.add(&Poly::generator(Discipline::Commutative, *b)).expect("same discipline");
        }
        p
    }
}

/// Walk 1 -> betaR(1) -> betaL(betaR(1)) -> ... collecting prefixes.
pub fn gamma_paths(mid: &MiddleData) -> Result<Vec<PathSet>> {
    if !crate::diagram::pairing_connectivity(&mid.beta_left, &mid.beta_right)? {
        return Err(Error::Disconnected);
    }
    let n = mid.n;
    let mut sets: Vec<Option<PathSet>> = vec![None; n as usize + 1];
    sets[1] = Some(PathSet { point: 1, betas: Vec::new() });
    let mut cur = 1u32;
    let mut use_right = true;
    let mut prefix: Vec<GeneratorId> = Vec::new();
    for _ in 0..n {
        let next = if use_right { mid.beta_right.apply(cur) } else { mid.beta_left.apply(cur) };
        let (i, j) = if cur < next { (cur, next) } else { (next, cur) };
        let beta = if use_right { GeneratorId::beta_r(i, j) } else { GeneratorId::beta_l(i, j) };
        prefix.push(beta);
        if sets[next as usize].is_none() {
            sets[next as usize] = Some(PathSet { point: next, betas: prefix.clone() });
        }
        cur = next;
        use_right = !use_right;
    }
    Ok(sets.into_iter().skip(1).map(|s| s.expect("connected walk covers all points")).collect())
}

/// Closed-form string differential of the middle algebra.
pub fn delta_str_middle(mid: &MiddleData) -> Result<Derivation> {
    let d = Discipline::Commutative;
    let gammas: Vec<Poly> = gamma_paths(mid)?.into_iter().map(|p| p.gamma()).collect();
    let gamma = |i: u32| -> &Poly { &gammas[i as usize - 1] };
    let mut der = Derivation::new(d);
    let n = mid.n;
    for i in 1..=n {
        for j in i + 1..=n {
            for fam in [LineFamily::Left, LineFamily::Right] {
                let a = fam.alpha(i, j);
                let mut val = gamma(i).add(gamma(j))?.mul(&Poly::generator(d, a))?;
                for k in i + 1..j {
                    val = val.add(
                        &Poly::generator(d, fam.alpha(i, k))
                            .mul(&Poly::generator(d, fam.alpha(k, j)))?,
                    )?;
                }
                der.insert(a, val);
            }
        }
    }
    for &(i, j) in &mid.beta_left.pairs {
        let b = GeneratorId::beta_l(i, j);
        let bp = Poly::generator(d, b);
        der.insert(b, bp.mul(&bp)?);
    }
    for &(i, j) in &mid.beta_right.pairs {
        let b = GeneratorId::beta_r(i, j);
        let bp = Poly::generator(d, b);
        der.insert(b, bp.mul(&bp)?);
    }
    Ok(der)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{builtin_source, FrontDiagram, Pairing};

    fn poly(s: &str) -> Poly {
        crate::textform::parse_poly(s, Discipline::Commutative).unwrap()
    }

    fn trefoil_ctx_check(gen: GeneratorId, expected: &str) {
        let d = FrontDiagram::parse(builtin_source("trefoil").unwrap()).unwrap();
        let ctx = StringContext::new(&d.piece, vec![]).unwrap();
        let der = delta_str(&ctx, true).unwrap();
        assert_eq!(der.apply_gen(gen).unwrap(), poly(expected), "delta({gen})");
    }

    #[test]
    fn full_trefoil_delta_rows() {
        trefoil_ctx_check(GeneratorId::Q(0), "q0*q1*p1 + q0*q2*p2");
        trefoil_ctx_check(GeneratorId::P(0), "q0*p0*p0 + q1*p0*p1 + q2*p0*p2");
        trefoil_ctx_check(GeneratorId::Q(1), "q0*q1*p0 + q1*q2*p2");
        trefoil_ctx_check(GeneratorId::Q(2), "q0*q2*p0 + q1*q2*p1");
        trefoil_ctx_check(GeneratorId::Q(3), "q3*q3*p3");
        trefoil_ctx_check(GeneratorId::P(3), "0");
        trefoil_ctx_check(GeneratorId::Q(4), "q4*q4*p4");
        trefoil_ctx_check(GeneratorId::P(4), "0");
    }

    #[test]
    fn gamma_paths_examples() {
        let bl = Pairing::new(4, vec![(1, 3), (2, 4)]).unwrap();
        let br = Pairing::new(4, vec![(1, 2), (3, 4)]).unwrap();
        let mid = MiddleData::new(4, bl, br, vec![0, -1, -1, -2]).unwrap();
        let paths = gamma_paths(&mid).unwrap();
        assert!(paths[0].betas.is_empty());
        assert_eq!(paths[1].gamma(), poly("bR12"));
        assert_eq!(paths[2].gamma(), poly("bR12 + bL24 + bR34"));
        assert_eq!(paths[3].gamma(), poly("bR12 + bL24"));
    }

    #[test]
    fn middle_delta_examples() {
        let bl = Pairing::new(4, vec![(1, 3), (2, 4)]).unwrap();
        let br = Pairing::new(4, vec![(1, 2), (3, 4)]).unwrap();
        let mid = MiddleData::new(4, bl, br, vec![0, -1, -1, -2]).unwrap();
        let der = delta_str_middle(&mid).unwrap();
        assert_eq!(
            der.apply_gen(GeneratorId::alpha_l(1, 4)).unwrap(),
            poly("bR12*aL14 + bL24*aL14 + aL12*aL24 + aL13*aL34")
        );
        assert_eq!(der.apply_gen(GeneratorId::alpha_l(3, 4)).unwrap(), poly("bR34*aL34"));
        assert_eq!(
            der.apply_gen(GeneratorId::beta_l(1, 3)).unwrap(),
            poly("bL13*bL13")
        );
    }
}
