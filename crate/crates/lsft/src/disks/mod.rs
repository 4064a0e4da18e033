//! Admissible-disk enumeration in simple fronts.
//!
//! The primary enumerator sweeps the diagram column by column, maintaining
//! the multiset of open boundary intervals of a partial immersed disk. An
//! independent brute-force oracle re-enumerates boundary circuits directly
//! and filters them by region data; the two must agree (tested on the whole
//! regression corpus).

mod oracle;
mod sweep;

pub use oracle::oracle_disks;
pub use sweep::{sweep_disks, SweepMode};

use crate::algebra::{Discipline, GeneratorId, Monomial, Poly};
use crate::diagram::LineId;
use serde::Serialize;

/// Corner sign: positive corners read p, negative read q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Pos,
    Neg,
}

/// One letter of a disk's boundary word, in boundary order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DiskLetter {
    /// Positive corner at the chord with this label.
    P(u32),
    /// Negative corner.
    Q(u32),
    /// Boundary segment on a wall or dividing line between points i < j;
    /// `marked` flags the distinguished segment of a marked enumeration.
    Seg { line: LineId, i: u32, j: u32, marked: bool },
}

/// A completed admissible disk, up to reparametrization.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DiskBoundary {
    /// Corner multiset (chord label, sign), sorted.
    pub corners: Vec<(u32, Sign)>,
    /// Net signed base-point passages.
    pub t_exp: i64,
    /// Wall segments (line, i, j, marked), sorted.
    pub m_segments: Vec<(LineId, u32, u32, bool)>,
    /// Cyclic boundary word, canonically rotated.
    pub word: Vec<DiskLetter>,
    /// Westmost and eastmost column the disk touches.
    pub west_col: usize,
    pub east_col: usize,
}

impl DiskBoundary {
    pub fn positive_corners(&self) -> Vec<u32> {
        self.corners.iter().filter(|(_, s)| *s == Sign::Pos).map(|(l, _)| *l).collect()
    }

    /// Commutative monomial of the boundary: p/q letters, alpha letters named
    /// by the given wall-family map, and the t power. Marked segments are
    /// skipped.
    pub fn monomial(
        &self,
        family: &dyn Fn(LineId) -> Option<crate::strings::LineFamily>,
    ) -> crate::error::Result<Monomial> {
        let mut m = Monomial::one(Discipline::Commutative);
        for letter in &self.word {
            let g = match *letter {
                DiskLetter::P(l) => Some(GeneratorId::P(l)),
                DiskLetter::Q(l) => Some(GeneratorId::Q(l)),
                DiskLetter::Seg { marked: true, .. } => None,
                DiskLetter::Seg { line, i, j, .. } => match family(line) {
                    Some(f) => Some(f.alpha(i, j)),
                    None => {
                        return Err(crate::error::Error::MalformedInput {
                            line: 0,
                            msg: "disk segment on a line without generators".into(),
                        })
                    }
                },
            };
            if let Some(g) = g {
                m = m.mul(&Monomial::generator(Discipline::Commutative, g))?;
            }
        }
        if self.t_exp != 0 {
            m = m.mul(&Monomial::Commutative { gens: Default::default(), t_exp: self.t_exp })?;
        }
        Ok(m)
    }

    /// Boundary word rotated to start just after the unique positive corner,
    /// with the positive corner dropped: the Chekanov-Eliashberg reading.
    /// Marked segments are dropped; unmarked segments read as plain alphas.
    pub fn word_from_positive(&self) -> Option<Vec<GeneratorId>> {
        let pos: Vec<usize> = self
            .word
            .iter()
            .enumerate()
            .filter(|(_, l)| matches!(l, DiskLetter::P(_)))
            .map(|(i, _)| i)
            .collect();
        if pos.len() != 1 {
            return None;
        }
        Some(self.read_from(pos[0]))
    }

    /// Boundary word read counterclockwise starting just after position
    /// `anchor` (which is dropped), mapping segments to plain alphas.
    pub fn read_from(&self, anchor: usize) -> Vec<GeneratorId> {
        let n = self.word.len();
        let mut out = Vec::new();
        for k in 1..n {
            let letter = self.word[(anchor + k) % n];
            match letter {
                DiskLetter::P(l) => out.push(GeneratorId::P(l)),
                DiskLetter::Q(l) => out.push(GeneratorId::Q(l)),
                DiskLetter::Seg { i, j, .. } => out.push(GeneratorId::alpha(i, j)),
            }
        }
        out
    }

    /// Positions of unmarked segments on the given line equal to (i, j).
    pub fn segment_positions(&self, line: LineId, i: u32, j: u32) -> Vec<usize> {
        self.word
            .iter()
            .enumerate()
            .filter(|(_, l)| {
                matches!(l, DiskLetter::Seg { line: sl, i: si, j: sj, .. }
                    if *sl == line && *si == i && *sj == j)
            })
            .map(|(k, _)| k)
            .collect()
    }
}

/// Pretty boundary word for dumps.
pub fn word_text(word: &[DiskLetter]) -> String {
    word.iter()
        .map(|l| match l {
            DiskLetter::P(i) => format!("p{i}"),
            DiskLetter::Q(i) => format!("q{i}"),
            DiskLetter::Seg { i, j, marked, .. } => {
                if *marked {
                    format!("[{i},{j}]")
                } else {
                    format!("a{i}{j}")
                }
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Fold a disk list into a Z/2 commutative polynomial of boundary monomials.
pub fn disks_to_poly(
    disks: &[DiskBoundary],
    family: &dyn Fn(LineId) -> Option<crate::strings::LineFamily>,
) -> crate::error::Result<Poly> {
    let mut p = Poly::zero(Discipline::Commutative);
    for d in disks {
        p.toggle(d.monomial(family)?);
    }
    Ok(p)
}

/// Search caps; hitting one raises SearchBudgetExceeded rather than
/// silently truncating.
#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    pub max_intervals: usize,
    pub max_corners: usize,
    /// Sheets of one birth event a single disk may use.
    pub max_birth_multiplicity: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { max_intervals: 16, max_corners: 32, max_birth_multiplicity: 2 }
    }
}

#[cfg(test)]
mod tests;
