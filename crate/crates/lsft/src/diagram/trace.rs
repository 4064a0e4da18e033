use super::{
    BasePoint, ChordKind, Dir, Feature, Piece, ThreadEnd, ThreadId,
};
use crate::error::{Error, Result};

/// Which vertical line a boundary site belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LineId {
    Divide(usize),
    West,
    East,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SiteKind {
    /// Passage of one endpoint of a chord (crossing or cusp loop).
    ChordEnd { chord: usize },
    /// Passage of a dividing-line or wall point.
    MPoint { line: LineId, point: u32 },
    /// Closure jump between paired wall points.
    Jump { line: LineId, from: u32, to: u32 },
    /// The base point pair.
    Mark,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Site {
    pub kind: SiteKind,
    pub thread: Option<ThreadId>,
    pub column: usize,
}

/// Cyclic site sequence of the (closed-up) knot, rotated so that the base
/// location sits between the last and first entries.
#[derive(Debug, Clone)]
pub struct KnotTrace {
    pub sites: Vec<Site>,
    pub thread_direction: Vec<Dir>,
    /// Kinds of each chord, for insertion rules.
    pub chord_kinds: Vec<ChordKind>,
}

impl KnotTrace {
    /// Positions of the two endpoint passages of a chord.
    pub fn chord_positions(&self, chord: usize) -> (usize, usize) {
        let mut it = self
            .sites
            .iter()
            .enumerate()
            .filter(|(_, s)| matches!(s.kind, SiteKind::ChordEnd { chord: c } if c == chord))
            .map(|(i, _)| i);
        let a = it.next().expect("chord endpoint in trace");
        let b = it.next().expect("second chord endpoint in trace");
        (a, b)
    }

    /// Position of a wall point site on the given line.
    pub fn point_position(&self, line: LineId, point: u32) -> Option<usize> {
        self.sites.iter().position(
            |s| matches!(s.kind, SiteKind::MPoint { line: l, point: p } if l == line && p == point),
        )
    }
}

pub fn trace_closed(piece: &Piece) -> Result<KnotTrace> {
    trace_piece(piece)
}

/// Walk the piece, hopping at cusps and jumping across closed-up walls.
pub fn trace_piece(piece: &Piece) -> Result<KnotTrace> {
    if piece.threads.is_empty() {
        return Err(Error::MalformedInput { line: 0, msg: "empty diagram".into() });
    }
    // Starting thread and direction.
    let (start_thread, start_dir) = match &piece.base {
        BasePoint::Anchor { west, point } => {
            let col = if *west {
                piece
                    .columns
                    .iter()
                    .position(|c| matches!(c.kind, super::ColumnKind::WestWall { .. }))
            } else {
                piece
                    .columns
                    .iter()
                    .position(|c| matches!(c.kind, super::ColumnKind::EastWall { .. }))
            }
            .ok_or(Error::MissingBasePoint)?;
            let points = match &piece.columns[col].kind {
                super::ColumnKind::WestWall { points } | super::ColumnKind::EastWall { points } => {
                    points
                }
                _ => unreachable!(),
            };
            let t = *points
                .get(*point as usize - 1)
                .ok_or(Error::MalformedInput { line: 0, msg: "anchor out of range".into() })?;
            (t, if *west { Dir::East } else { Dir::West })
        }
        _ => {
            // Mark thread if present, else topmost thread of the first column.
            match piece.mark_column {
                Some(col) => {
                    let super::ColumnKind::Mark { thread } = piece.columns[col].kind else {
                        unreachable!()
                    };
                    (thread, if piece.flipped { Dir::East } else { Dir::West })
                }
                None => {
                    let t = piece
                        .columns
                        .iter()
                        .find_map(|c| c.east.first().copied().or_else(|| c.west.first().copied()))
                        .expect("nonempty diagram");
                    (t, if piece.flipped { Dir::East } else { Dir::West })
                }
            }
        }
    };

    let mut sites: Vec<Site> = Vec::new();
    let mut dirs = vec![Dir::East; piece.threads.len()];
    let mut thread = start_thread;
    let mut dir = start_dir;
    let mut visited = vec![false; piece.threads.len()];
    let budget = 4 * piece.threads.len() + 8;
    let mut steps = 0;

    loop {
        steps += 1;
        if steps > budget {
            return Err(Error::MultiComponent);
        }
        if visited[thread] {
            // Completed the loop.
            break;
        }
        visited[thread] = true;
        dirs[thread] = dir;
        // Emit the thread's interior features in travel order.
        let feats: Vec<(usize, Feature)> = match dir {
            Dir::East => piece.threads[thread].features.clone(),
            Dir::West => {
                let mut f = piece.threads[thread].features.clone();
                f.reverse();
                f
            }
        };
        for (col, f) in feats {
            match f {
                Feature::ChordEnd { chord } => sites.push(Site {
                    kind: SiteKind::ChordEnd { chord },
                    thread: Some(thread),
                    column: col,
                }),
                Feature::MPoint { divide, point } => sites.push(Site {
                    kind: SiteKind::MPoint { line: LineId::Divide(divide), point },
                    thread: Some(thread),
                    column: col,
                }),
                Feature::Mark => {
                    sites.push(Site { kind: SiteKind::Mark, thread: Some(thread), column: col })
                }
                Feature::WestPoint { .. } | Feature::EastPoint { .. } => {}
            }
        }
        // Hop at the terminus.
        let terminus = match dir {
            Dir::East => piece.threads[thread].east_end,
            Dir::West => piece.threads[thread].west_end,
        };
        match terminus {
            ThreadEnd::LeftCusp { partner, .. } => {
                thread = partner;
                dir = Dir::East;
            }
            ThreadEnd::RightCusp { partner, .. } => {
                thread = partner;
                dir = Dir::West;
            }
            ThreadEnd::Boundary { point } => {
                let west = dir == Dir::West;
                let line = if west { LineId::West } else { LineId::East };
                let col = wall_column(piece, west)?;
                let closure = if west { &piece.west_closure } else { &piece.east_closure };
                let Some(pairing) = closure else {
                    return Err(Error::MissingBasePoint);
                };
                let to = pairing.apply(point);
                sites.push(Site {
                    kind: SiteKind::MPoint { line, point },
                    thread: Some(thread),
                    column: col,
                });
                sites.push(Site {
                    kind: SiteKind::Jump { line, from: point, to },
                    thread: None,
                    column: col,
                });
                let points = wall_points(piece, west)?;
                let next = points[to as usize - 1];
                sites.push(Site {
                    kind: SiteKind::MPoint { line, point: to },
                    thread: Some(next),
                    column: col,
                });
                if visited[next] {
                    break;
                }
                thread = next;
                dir = if west { Dir::East } else { Dir::West };
            }
        }
    }

    // Rotate: the base gap goes between the last and first sites. For an
    // anchored trace the anchor point site (emitted by the closing jump)
    // comes first; for a marked trace the mark comes last.
    let rotate = match &piece.base {
        BasePoint::Anchor { west, point } => {
            let line = if *west { LineId::West } else { LineId::East };
            sites
                .iter()
                .position(
                    |s| matches!(s.kind, SiteKind::MPoint { line: l, point: p } if l == line && p == *point),
                )
                .unwrap_or(0)
        }
        _ => match sites.iter().position(|s| s.kind == SiteKind::Mark) {
            Some(i) => (i + 1) % sites.len(),
            None => 0,
        },
    };
    sites.rotate_left(rotate);

    Ok(KnotTrace {
        sites,
        thread_direction: dirs,
        chord_kinds: piece.chords.iter().map(|c| c.kind).collect(),
    })
}

fn wall_column(piece: &Piece, west: bool) -> Result<usize> {
    piece
        .columns
        .iter()
        .position(|c| {
            if west {
                matches!(c.kind, super::ColumnKind::WestWall { .. })
            } else {
                matches!(c.kind, super::ColumnKind::EastWall { .. })
            }
        })
        .ok_or(Error::MissingBasePoint)
}

fn wall_points(piece: &Piece, west: bool) -> Result<Vec<ThreadId>> {
    let col = wall_column(piece, west)?;
    match &piece.columns[col].kind {
        super::ColumnKind::WestWall { points } | super::ColumnKind::EastWall { points } => {
            Ok(points.clone())
        }
        _ => unreachable!(),
    }
}
