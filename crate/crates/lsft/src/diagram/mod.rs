//! Diagram data model: simple fronts, half-diagrams, two-sided diagrams,
//! middle data, and the cyclic knot trace.
//!
//! A diagram is an ordered left-to-right event word. Events act on the list
//! of strands currently crossing a vertical line; rows are 1-indexed from the
//! top. The computed layout tracks threads (maximal cusp-to-cusp or
//! boundary-to-boundary arcs), columns, and chords (crossings and right
//! cusps, which both carry generators).

mod parse;
mod trace;

pub use parse::{builtin_names, builtin_source, parse_middle, ParsedInput};
pub use trace::{trace_piece, KnotTrace, LineId, Site, SiteKind};

use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EventKind {
    LeftCusp(usize),
    Crossing(usize, Option<u32>),
    RightCusp(usize),
    Divide,
    Mark(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Event {
    pub kind: EventKind,
    /// Source line for error messages; 0 when constructed programmatically.
    pub line: usize,
}

impl Event {
    pub fn new(kind: EventKind) -> Self {
        Event { kind, line: 0 }
    }
}

pub type ThreadId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordKind {
    Crossing,
    RightCusp,
}

/// A crossing or right cusp; both carry a q (and in SFT theories a p)
/// generator.
#[derive(Debug, Clone)]
pub struct Chord {
    pub label: u32,
    pub kind: ChordKind,
    pub column: usize,
    /// Descending thread (west-upper at a crossing): the over-strand.
    pub desc: ThreadId,
    /// Ascending thread (west-lower): the under-strand.
    pub asc: ThreadId,
}

#[derive(Debug, Clone)]
pub enum ColumnKind {
    LeftCusp { upper: ThreadId, lower: ThreadId },
    Crossing { chord: usize },
    RightCusp { chord: usize },
    /// Dividing line; `points[k]` is the thread at 1-based point k+1.
    Divide { index: usize, points: Vec<ThreadId> },
    Mark { thread: ThreadId },
    /// Western or eastern wall of a piece.
    WestWall { points: Vec<ThreadId> },
    EastWall { points: Vec<ThreadId> },
}

#[derive(Debug, Clone)]
pub struct Column {
    pub kind: ColumnKind,
    /// Threads on the west side, top to bottom.
    pub west: Vec<ThreadId>,
    /// Threads on the east side, top to bottom.
    pub east: Vec<ThreadId>,
}

/// What a thread encounters, west to east.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Feature {
    ChordEnd { chord: usize },
    MPoint { divide: usize, point: u32 },
    Mark,
    WestPoint { point: u32 },
    EastPoint { point: u32 },
}

#[derive(Debug, Clone)]
pub struct Thread {
    /// Ordered west-to-east (column, feature) list.
    pub features: Vec<(usize, Feature)>,
    /// West terminus: left cusp column or west wall point.
    pub west_end: ThreadEnd,
    pub east_end: ThreadEnd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThreadEnd {
    LeftCusp { column: usize, partner: ThreadId },
    RightCusp { column: usize, chord: usize, partner: ThreadId },
    Boundary { point: u32 },
}

/// A fixed-point-free involution on {1..n}, stored as sorted pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    pub n: u32,
    pub pairs: Vec<(u32, u32)>,
}

impl Pairing {
    pub fn new(n: u32, mut pairs: Vec<(u32, u32)>) -> Result<Pairing> {
        for p in pairs.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        pairs.sort();
        let mut seen = vec![false; n as usize + 1];
        for &(i, j) in &pairs {
            if i == j || i == 0 || j > n || seen[i as usize] || seen[j as usize] {
                return Err(Error::NotInvolution);
            }
            seen[i as usize] = true;
            seen[j as usize] = true;
        }
        if seen.iter().skip(1).any(|s| !s) {
            return Err(Error::NotInvolution);
        }
        Ok(Pairing { n, pairs })
    }

    pub fn apply(&self, i: u32) -> u32 {
        for &(a, b) in &self.pairs {
            if a == i {
                return b;
            }
            if b == i {
                return a;
            }
        }
        panic!("point {i} outside pairing domain")
    }

    pub fn contains(&self, i: u32, j: u32) -> bool {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.pairs.contains(&(i, j))
    }
}

/// True iff alternating application of the right then left pairing starting
/// at 1 visits every point: the glued-up strands form one loop.
pub fn pairing_connectivity(beta_left: &Pairing, beta_right: &Pairing) -> Result<bool> {
    if beta_left.n != beta_right.n {
        return Err(Error::NotInvolution);
    }
    let n = beta_left.n;
    if n == 0 {
        return Ok(true);
    }
    let mut visited = vec![false; n as usize + 1];
    let mut cur = 1u32;
    let mut use_right = true;
    let mut count: usize = 0;
    loop {
        if !visited[cur as usize] {
            visited[cur as usize] = true;
            count += 1;
        }
        cur = if use_right { beta_right.apply(cur) } else { beta_left.apply(cur) };
        use_right = !use_right;
        if cur == 1 && use_right {
            break;
        }
        if count > n as usize {
            break;
        }
    }
    if !visited[1] {
        visited[1] = true;
        count += 1;
    }
    Ok(count == n as usize)
}

/// Boundary data of a dividing line: the two pairings and the Maslov
/// potential of its points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiddleData {
    pub n: u32,
    pub beta_left: Pairing,
    pub beta_right: Pairing,
    pub mu: Vec<i64>,
}

impl MiddleData {
    pub fn new(n: u32, beta_left: Pairing, beta_right: Pairing, mu: Vec<i64>) -> Result<Self> {
        if n % 2 != 0 || beta_left.n != n || beta_right.n != n || mu.len() != n as usize {
            return Err(Error::NotInvolution);
        }
        if !pairing_connectivity(&beta_left, &beta_right)? {
            return Err(Error::Disconnected);
        }
        Ok(MiddleData { n, beta_left, beta_right, mu })
    }

    pub fn mu_of(&self, point: u32) -> i64 {
        self.mu[point as usize - 1]
    }
}

/// Where the base point pair lives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasePoint {
    /// On an arc inside the diagram (explicit `mark` event or the
    /// left-of-the-dividing-line convention).
    Inside,
    /// Outside the piece; the trace is anchored at a boundary point.
    Anchor { west: bool, point: u32 },
    None,
}

/// A diagram piece: a closed front (no walls), a half-diagram (one wall), or
/// a two-sided diagram (both walls).
#[derive(Debug, Clone)]
pub struct Piece {
    pub events: Vec<Event>,
    pub west_n: u32,
    pub east_n: u32,
    /// Closure pairing beyond the west wall (how the outside connects the
    /// west points), if the piece is to be closed up there.
    pub west_closure: Option<Pairing>,
    pub east_closure: Option<Pairing>,
    pub base: BasePoint,
    /// Flip the default knot orientation.
    pub flipped: bool,

    // Computed layout.
    pub columns: Vec<Column>,
    pub threads: Vec<Thread>,
    pub chords: Vec<Chord>,
    pub divides: Vec<usize>,
    pub mark_column: Option<usize>,
}

impl Piece {
    /// Lay out a piece from its event word and boundary sizes.
    pub fn build(
        events: Vec<Event>,
        west_n: u32,
        east_n: u32,
        west_closure: Option<Pairing>,
        east_closure: Option<Pairing>,
        base: BasePoint,
        flipped: bool,
    ) -> Result<Piece> {
        let mut piece = Piece {
            events,
            west_n,
            east_n,
            west_closure,
            east_closure,
            base,
            flipped,
            columns: Vec::new(),
            threads: Vec::new(),
            chords: Vec::new(),
            divides: Vec::new(),
            mark_column: None,
        };
        piece.layout()?;
        Ok(piece)
    }

    fn new_thread(&mut self) -> ThreadId {
        self.threads.push(Thread {
            features: Vec::new(),
            west_end: ThreadEnd::Boundary { point: 0 },
            east_end: ThreadEnd::Boundary { point: 0 },
        });
        self.threads.len() - 1
    }

    fn layout(&mut self) -> Result<()> {
        // West wall threads.
        let mut strands: Vec<ThreadId> = Vec::new();
        for p in 0..self.west_n {
            let t = self.new_thread();
            self.threads[t].west_end = ThreadEnd::Boundary { point: p + 1 };
            self.threads[t].features.push((0, Feature::WestPoint { point: p + 1 }));
            strands.push(t);
        }
        if self.west_n > 0 {
            self.columns.push(Column {
                kind: ColumnKind::WestWall { points: strands.clone() },
                west: Vec::new(),
                east: strands.clone(),
            });
        }

        let mut explicit: BTreeMap<usize, u32> = BTreeMap::new();
        let mut rcusp_cols: Vec<(usize, usize)> = Vec::new(); // (column, row) in event order
        let mut seen_rcusp = false;
        let mut rcusp_initial: Option<Vec<ThreadId>> = None;

        let events = self.events.clone();
        for ev in &events {
            let col = self.columns.len();
            let west = strands.clone();
            match ev.kind {
                EventKind::LeftCusp(row) => {
                    if seen_rcusp {
                        return Err(Error::NonSimpleFront {
                            msg: format!("left cusp after a right cusp (line {})", ev.line),
                        });
                    }
                    if row < 1 || row > strands.len() + 1 {
                        return Err(Error::RowOutOfRange {
                            line: ev.line,
                            row,
                            strands: strands.len(),
                        });
                    }
                    let upper = self.new_thread();
                    let lower = self.new_thread();
                    self.threads[upper].west_end =
                        ThreadEnd::LeftCusp { column: col, partner: lower };
                    self.threads[lower].west_end =
                        ThreadEnd::LeftCusp { column: col, partner: upper };
                    strands.insert(row - 1, lower);
                    strands.insert(row - 1, upper);
                    self.columns.push(Column {
                        kind: ColumnKind::LeftCusp { upper, lower },
                        west,
                        east: strands.clone(),
                    });
                }
                EventKind::Crossing(row, label) => {
                    if seen_rcusp {
                        return Err(Error::NonSimpleFront {
                            msg: format!("crossing after a right cusp (line {})", ev.line),
                        });
                    }
                    if row < 1 || row >= strands.len() {
                        return Err(Error::RowOutOfRange {
                            line: ev.line,
                            row,
                            strands: strands.len(),
                        });
                    }
                    let desc = strands[row - 1]; // west-upper descends eastward
                    let asc = strands[row];
                    let chord_idx = self.chords.len();
                    self.chords.push(Chord {
                        label: 0,
                        kind: ChordKind::Crossing,
                        column: col,
                        desc,
                        asc,
                    });
                    if let Some(l) = label {
                        explicit.insert(chord_idx, l);
                    }
                    self.threads[desc].features.push((col, Feature::ChordEnd { chord: chord_idx }));
                    self.threads[asc].features.push((col, Feature::ChordEnd { chord: chord_idx }));
                    strands.swap(row - 1, row);
                    self.columns.push(Column {
                        kind: ColumnKind::Crossing { chord: chord_idx },
                        west,
                        east: strands.clone(),
                    });
                }
                EventKind::RightCusp(row) => {
                    if !seen_rcusp {
                        seen_rcusp = true;
                        rcusp_initial = Some(strands.clone());
                    }
                    if row < 1 || row >= strands.len() {
                        return Err(Error::RowOutOfRange {
                            line: ev.line,
                            row,
                            strands: strands.len(),
                        });
                    }
                    // Resolved form: the cusp is a crossing (the loop
                    // chord) followed by a smooth eastward turn.
                    let upper = strands[row - 1];
                    let lower = strands[row];
                    let chord_idx = self.chords.len();
                    self.chords.push(Chord {
                        label: 0,
                        kind: ChordKind::RightCusp,
                        column: col,
                        desc: upper,
                        asc: lower,
                    });
                    self.threads[upper].features.push((col, Feature::ChordEnd { chord: chord_idx }));
                    self.threads[lower].features.push((col, Feature::ChordEnd { chord: chord_idx }));
                    rcusp_cols.push((col, row));
                    strands.swap(row - 1, row);
                    self.columns.push(Column {
                        kind: ColumnKind::Crossing { chord: chord_idx },
                        west,
                        east: strands.clone(),
                    });
                    // The turn joining the swapped strands.
                    let turn_col = self.columns.len();
                    let west_turn = strands.clone();
                    self.threads[upper].east_end =
                        ThreadEnd::RightCusp { column: turn_col, chord: chord_idx, partner: lower };
                    self.threads[lower].east_end =
                        ThreadEnd::RightCusp { column: turn_col, chord: chord_idx, partner: upper };
                    strands.remove(row - 1);
                    strands.remove(row - 1);
                    self.columns.push(Column {
                        kind: ColumnKind::RightCusp { chord: chord_idx },
                        west: west_turn,
                        east: strands.clone(),
                    });
                }
                EventKind::Divide => {
                    if seen_rcusp {
                        return Err(Error::NonSimpleFront {
                            msg: format!("dividing line after a right cusp (line {})", ev.line),
                        });
                    }
                    let index = self.divides.len();
                    self.divides.push(col);
                    for (k, &t) in strands.iter().enumerate() {
                        self.threads[t]
                            .features
                            .push((col, Feature::MPoint { divide: index, point: k as u32 + 1 }));
                    }
                    self.columns.push(Column {
                        kind: ColumnKind::Divide { index, points: strands.clone() },
                        west,
                        east: strands.clone(),
                    });
                }
                EventKind::Mark(row) => {
                    if seen_rcusp {
                        return Err(Error::MalformedInput {
                            line: ev.line,
                            msg: "mark must precede right cusps".into(),
                        });
                    }
                    if row < 1 || row > strands.len() {
                        return Err(Error::RowOutOfRange {
                            line: ev.line,
                            row,
                            strands: strands.len(),
                        });
                    }
                    if self.mark_column.is_some() {
                        return Err(Error::MalformedInput {
                            line: ev.line,
                            msg: "more than one mark".into(),
                        });
                    }
                    let t = strands[row - 1];
                    self.mark_column = Some(col);
                    self.threads[t].features.push((col, Feature::Mark));
                    self.columns.push(Column {
                        kind: ColumnKind::Mark { thread: t },
                        west,
                        east: strands.clone(),
                    });
                }
            }
        }

        // East wall.
        if strands.len() != self.east_n as usize {
            return Err(Error::MalformedInput {
                line: 0,
                msg: format!(
                    "strand count after all events is {}, expected {}",
                    strands.len(),
                    self.east_n
                ),
            });
        }
        if self.east_n > 0 {
            let col = self.columns.len();
            for (k, &t) in strands.iter().enumerate() {
                self.threads[t].east_end = ThreadEnd::Boundary { point: k as u32 + 1 };
                self.threads[t].features.push((col, Feature::EastPoint { point: k as u32 + 1 }));
            }
            self.columns.push(Column {
                kind: ColumnKind::EastWall { points: strands.clone() },
                west: strands.clone(),
                east: Vec::new(),
            });
        }

        self.assign_labels(&explicit, &rcusp_cols, rcusp_initial)?;
        Ok(())
    }

    /// Crossings get labels left to right, then right cusps top to bottom.
    fn assign_labels(
        &mut self,
        explicit: &BTreeMap<usize, u32>,
        rcusp_cols: &[(usize, usize)],
        rcusp_initial: Option<Vec<ThreadId>>,
    ) -> Result<()> {
        let mut used = std::collections::BTreeSet::new();
        let mut next = 0u32;
        for (idx, chord) in self.chords.iter_mut().enumerate() {
            if chord.kind != ChordKind::Crossing {
                continue;
            }
            let label = match explicit.get(&idx) {
                Some(l) => *l,
                None => {
                    while used.contains(&next) {
                        next += 1;
                    }
                    next
                }
            };
            if !used.insert(label) {
                return Err(Error::DuplicateLabel { label: label.to_string() });
            }
            chord.label = label;
        }
        // Order cusps by the position of their upper strand in the strand
        // list at the start of the cusp block; that is top-to-bottom.
        if !rcusp_cols.is_empty() {
            let initial = rcusp_initial.expect("cusp block start recorded");
            let mut order: Vec<(usize, usize)> = Vec::new(); // (orig index, chord)
            for &(col, row) in rcusp_cols {
                // `col` is the loop-crossing column of the cusp.
                let ColumnKind::Crossing { chord } = self.columns[col].kind else {
                    unreachable!()
                };
                let upper_thread = self.columns[col].west[row - 1];
                let orig = initial
                    .iter()
                    .position(|&t| t == upper_thread)
                    .expect("cusp strand in initial list");
                order.push((orig, chord));
            }
            order.sort();
            for (_, chord) in order {
                while used.contains(&next) {
                    next += 1;
                }
                used.insert(next);
                self.chords[chord].label = next;
            }
        }
        Ok(())
    }

    pub fn chord_by_label(&self, label: u32) -> Option<usize> {
        self.chords.iter().position(|c| c.label == label)
    }

    /// Number of points on a dividing line.
    pub fn divide_points(&self, index: usize) -> &[ThreadId] {
        let col = self.divides[index];
        match &self.columns[col].kind {
            ColumnKind::Divide { points, .. } => points,
            _ => unreachable!(),
        }
    }

    /// Sorted chord labels.
    pub fn labels(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.chords.iter().map(|c| c.label).collect();
        v.sort();
        v
    }

    pub fn is_closed(&self) -> bool {
        self.west_n == 0 && self.east_n == 0
    }

    /// Maslov potential per thread over the integers, normalized so the
    /// topmost thread of the leftmost column is 0. Returns (values, defect)
    /// where defect is the holonomy (2|rot| for a closed knot); potentials
    /// are consistent modulo the defect.
    pub fn maslov(&self) -> Result<(Vec<i64>, i64)> {
        let seed = self
            .columns
            .iter()
            .find_map(|c| c.east.first().copied().or_else(|| c.west.first().copied()));
        self.maslov_seeded(&seed.map(|t| (t, 0)).into_iter().collect::<Vec<_>>())
    }

    /// Maslov potential with prescribed thread values (e.g. wall points of a
    /// half diagram).
    pub fn maslov_seeded(&self, seeds: &[(ThreadId, i64)]) -> Result<(Vec<i64>, i64)> {
        let n = self.threads.len();
        if n == 0 {
            return Ok((Vec::new(), 0));
        }
        let mut mu = vec![None::<i64>; n];
        // relations: upper = lower + 1 at every cusp
        let mut rels: Vec<(ThreadId, ThreadId)> = Vec::new(); // (upper, lower)
        for col in &self.columns {
            match col.kind {
                ColumnKind::LeftCusp { upper, lower } => rels.push((upper, lower)),
                ColumnKind::RightCusp { chord } => {
                    let c = &self.chords[chord];
                    rels.push((c.desc, c.asc)); // desc is the upper branch
                }
                _ => {}
            }
        }
        for &(t, v) in seeds {
            mu[t] = Some(v);
        }
        let mut defect = 0i64;
        let propagate = |mu: &mut Vec<Option<i64>>, defect: &mut i64| {
            let mut changed = true;
            while changed {
                changed = false;
                for &(u, l) in &rels {
                    match (mu[u], mu[l]) {
                        (Some(a), None) => {
                            mu[l] = Some(a - 1);
                            changed = true;
                        }
                        (None, Some(b)) => {
                            mu[u] = Some(b + 1);
                            changed = true;
                        }
                        (Some(a), Some(b)) => {
                            let d = (a - (b + 1)).abs();
                            if d != 0 {
                                *defect = gcd(*defect, d);
                            }
                        }
                        (None, None) => {}
                    }
                }
            }
        };
        propagate(&mut mu, &mut defect);
        // Seed any remaining components at their topmost occurrence.
        for col in &self.columns {
            for &t in col.east.iter().chain(col.west.iter()) {
                if mu[t].is_none() {
                    mu[t] = Some(0);
                    propagate(&mut mu, &mut defect);
                }
            }
        }
        Ok((mu.into_iter().map(|v| v.unwrap_or(0)).collect(), defect))
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A closed simple front diagram.
#[derive(Debug, Clone)]
pub struct FrontDiagram {
    pub piece: Piece,
}

/// Validation findings; an empty list means valid.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Error>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid")
        } else {
            for v in &self.violations {
                writeln!(f, "violation: {v}")?;
            }
            Ok(())
        }
    }
}

impl FrontDiagram {
    pub fn from_events(events: Vec<Event>, flipped: bool) -> Result<FrontDiagram> {
        if events.is_empty() {
            return Err(Error::MalformedInput { line: 0, msg: "empty event list".into() });
        }
        let has_mark = events.iter().any(|e| matches!(e.kind, EventKind::Mark(_)));
        let has_divide = events.iter().any(|e| matches!(e.kind, EventKind::Divide));
        let mut events = events;
        if !has_mark && has_divide {
            // Convention: base point on the topmost strand immediately left
            // of the (first) dividing line.
            let pos = events
                .iter()
                .position(|e| matches!(e.kind, EventKind::Divide))
                .expect("divide present");
            events.insert(pos, Event::new(EventKind::Mark(1)));
        }
        let base =
            if has_mark || has_divide { BasePoint::Inside } else { BasePoint::None };
        let piece = Piece::build(events, 0, 0, None, None, base, flipped)?;
        let d = FrontDiagram { piece };
        let report = d.validate();
        match report.violations.into_iter().next() {
            None => Ok(d),
            Some(v) => Err(v),
        }
    }

    pub fn parse(text: &str) -> Result<FrontDiagram> {
        parse::parse_front(text)
    }

    /// Confirm the closed-diagram invariants; findings are listed rather than
    /// thrown.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.piece.divides.len() > 2 {
            violations.push(Error::MalformedInput {
                line: 0,
                msg: "more than two dividing lines".into(),
            });
        }
        let lcusps = self
            .piece
            .columns
            .iter()
            .filter(|c| matches!(c.kind, ColumnKind::LeftCusp { .. }))
            .count();
        let rcusps = self
            .piece
            .chords
            .iter()
            .filter(|c| c.kind == ChordKind::RightCusp)
            .count();
        if lcusps != rcusps {
            violations.push(Error::NonSimpleFront {
                msg: format!("{lcusps} left cusps vs {rcusps} right cusps"),
            });
        }
        match trace::trace_closed(&self.piece) {
            Ok(t) => {
                let threads_visited: std::collections::BTreeSet<_> =
                    t.sites.iter().filter_map(|s| s.thread).collect();
                if threads_visited.len() != self.piece.threads.len() {
                    violations.push(Error::MultiComponent);
                }
            }
            Err(e) => violations.push(e),
        }
        ValidationReport { violations }
    }

    /// (Thurston-Bennequin, rotation) of the oriented diagram.
    pub fn classical_invariants(&self) -> Result<(i64, i64)> {
        let t = self.trace()?;
        let dirs = &t.thread_direction;
        let mut writhe = 0i64;
        let mut rcusps = 0i64;
        for c in &self.piece.chords {
            match c.kind {
                ChordKind::RightCusp => rcusps += 1,
                ChordKind::Crossing => {
                    // Direction vectors at the crossing: desc runs NW-SE,
                    // asc runs SW-NE.
                    let over = if dirs[c.desc] == Dir::East { (1i64, -1i64) } else { (-1, 1) };
                    let under = if dirs[c.asc] == Dir::East { (1i64, 1i64) } else { (-1, -1) };
                    let cross = over.0 * under.1 - over.1 * under.0;
                    writhe += if cross > 0 { 1 } else { -1 };
                }
            }
        }
        let mut down = 0i64;
        let mut up = 0i64;
        for col in &self.piece.columns {
            match col.kind {
                ColumnKind::LeftCusp { upper, lower } => {
                    // Traversed downward iff we arrive on the upper thread
                    // (heading west) and leave on the lower (heading east).
                    if dirs[upper] == Dir::West && dirs[lower] == Dir::East {
                        down += 1;
                    } else {
                        up += 1;
                    }
                }
                ColumnKind::RightCusp { chord } => {
                    let c = &self.piece.chords[chord];
                    // desc = upper branch; traversed downward when the walk
                    // arrives heading east on it.
                    if dirs[c.desc] == Dir::East {
                        down += 1;
                    } else {
                        up += 1;
                    }
                }
                _ => {}
            }
        }
        let rot = (down - up) / 2;
        Ok((writhe - rcusps, rot))
    }

    pub fn trace(&self) -> Result<KnotTrace> {
        trace::trace_closed(&self.piece)
    }

    /// Grading modulus 2|rot| (0 means Z).
    pub fn grading_modulus(&self) -> Result<i64> {
        let (_, rot) = self.classical_invariants()?;
        Ok(2 * rot.abs())
    }

    /// Cut at the single dividing line.
    pub fn split(&self) -> Result<(HalfDiagram, MiddleData, HalfDiagram)> {
        match self.piece.divides.len() {
            0 => return Err(Error::NoDividingLine),
            1 => {}
            _ => return Err(Error::TwoDividingLines),
        }
        split_at(self, 0)
    }
}

/// Left or right half of a cut diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone)]
pub struct HalfDiagram {
    pub side: Side,
    pub piece: Piece,
    pub n: u32,
    pub mu: Vec<i64>,
    /// Closure pairing (how the *other* side connects the points).
    pub closure: Pairing,
    /// Degree of t inherited from the closed diagram (-2 rot), 0 standalone.
    pub t_degree: i64,
}

impl HalfDiagram {
    pub fn trace(&self) -> Result<KnotTrace> {
        trace::trace_piece(&self.piece)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    East,
    West,
}

fn split_at(d: &FrontDiagram, divide: usize) -> Result<(HalfDiagram, MiddleData, HalfDiagram)> {
    let div_col = d.piece.divides[divide];
    let points = d.piece.divide_points(divide).to_vec();
    let n = points.len() as u32;
    let (mu_threads, _) = d.piece.maslov()?;
    let mu: Vec<i64> = points.iter().map(|&t| mu_threads[t]).collect();

    // Events strictly before / after the divide event, dropping marks and
    // the divide itself.
    let mut left_events = Vec::new();
    let mut right_events = Vec::new();
    let mut divides_seen = 0usize;
    for ev in &d.piece.events {
        match ev.kind {
            EventKind::Divide => {
                if divides_seen == divide {
                    divides_seen += 1;
                    continue;
                }
                if divides_seen < divide {
                    left_events.push(ev.clone());
                } else {
                    right_events.push(ev.clone());
                }
                divides_seen += 1;
            }
            EventKind::Mark(_) => continue,
            _ => {
                if divides_seen <= divide {
                    left_events.push(ev.clone());
                } else {
                    right_events.push(ev.clone());
                }
            }
        }
    }

    // Pairings through each half, by walking the half's threads.
    let beta_left = half_pairing(&d.piece, divide, Side::Left)?;
    let beta_right = half_pairing(&d.piece, divide, Side::Right)?;

    // Base convention: topmost strand immediately left of the line.
    left_events.push(Event::new(EventKind::Mark(1)));
    let mut left_piece = Piece::build(
        left_events,
        0,
        n,
        None,
        Some(beta_right.clone()),
        BasePoint::Inside,
        d.piece.flipped,
    )?;
    let mut right_piece = Piece::build(
        right_events,
        n,
        0,
        Some(beta_left.clone()),
        None,
        BasePoint::Anchor { west: true, point: 1 },
        d.piece.flipped,
    )?;
    // Generators keep the labels of the uncut diagram.
    {
        let mut right_parent =
            d.piece.chords.iter().filter(|c| c.column > div_col).map(|c| c.label);
        for chord in right_piece.chords.iter_mut() {
            chord.label = right_parent.next().expect("right half chord count");
        }
        let mut left_parent =
            d.piece.chords.iter().filter(|c| c.column < div_col).map(|c| c.label);
        for chord in left_piece.chords.iter_mut() {
            chord.label = left_parent.next().expect("left half chord count");
        }
    }
    let mid = MiddleData::new(n, beta_left.clone(), beta_right.clone(), mu.clone())?;
    let (_, rot) = d.classical_invariants()?;
    let left = HalfDiagram {
        side: Side::Left,
        piece: left_piece,
        n,
        mu: mu.clone(),
        closure: beta_right,
        t_degree: -2 * rot,
    };
    let right = HalfDiagram {
        side: Side::Right,
        piece: right_piece,
        n,
        mu,
        closure: beta_left,
        t_degree: -2 * rot,
    };
    Ok((left, mid, right))
}

/// Pair the points of a dividing line through one side of the diagram: walk
/// from each point into the given side, hopping at cusps, until the walk
/// first returns to the line.
fn half_pairing(piece: &Piece, divide: usize, side: Side) -> Result<Pairing> {
    let div_col = piece.divides[divide];
    let points = piece.divide_points(divide);
    let n = points.len() as u32;
    let point_at = |thread: ThreadId| -> Option<u32> {
        piece.threads[thread].features.iter().find_map(|(c, f)| match f {
            Feature::MPoint { divide: dv, point } if *c == div_col && *dv == divide => Some(*point),
            _ => None,
        })
    };
    let mut pairs = Vec::new();
    let mut seen = vec![false; n as usize + 1];
    for start in 1..=n {
        if seen[start as usize] {
            continue;
        }
        let mut thread = points[start as usize - 1];
        let mut dir = if side == Side::Left { Dir::West } else { Dir::East };
        let end: u32;
        let mut steps = 0;
        loop {
            steps += 1;
            if steps > 2 * piece.threads.len() + 2 {
                return Err(Error::MultiComponent);
            }
            let terminus = match dir {
                Dir::West => piece.threads[thread].west_end,
                Dir::East => piece.threads[thread].east_end,
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
                ThreadEnd::Boundary { .. } => return Err(Error::MultiComponent),
            }
            // A thread meets the divide column at most once; its alignment
            // with the travel direction is guaranteed because every right
            // cusp is east of the line and the hop directions alternate.
            if let Some(p) = point_at(thread) {
                end = p;
                break;
            }
        }
        seen[start as usize] = true;
        seen[end as usize] = true;
        pairs.push((start, end));
    }
    Pairing::new(n, pairs)
}

#[cfg(test)]
mod tests;
