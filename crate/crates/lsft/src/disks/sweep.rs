//! Column-sweep disk enumerator.
//!
//! The sweep walks the columns of a piece (westward in general, eastward for
//! pieces whose only wall is on the east) carrying the multiset of open
//! boundary intervals of a partial disk. Interval endpoints live on threads;
//! passing a crossing keeps the endpoint's thread, a corner switches it.
//! Boundary words are assembled in ropes spliced at merges and deaths, so
//! completed disks carry their full cyclic boundary word.

use super::{DiskBoundary, DiskLetter, Sign, SweepConfig};
use crate::diagram::{ColumnKind, Dir, LineId, Piece, ThreadId};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::collections::VecDeque;

/// What to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Every admissible disk (wall segments allowed on any wall).
    All,
    /// Disks with exactly one marked segment on the given dividing line,
    /// approached from the east: the disk lies locally east of the line.
    MarkedFromEast { divide: usize, i: u32, j: u32 },
    /// Marked segment approached from the west; the rest of the disk may
    /// cross the line freely (loop-back disks).
    MarkedFromWest { divide: usize, i: u32, j: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Ival {
    top: ThreadId,
    bot: ThreadId,
    top_rope: usize,
    bot_rope: usize,
    comp: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
struct State {
    intervals: Vec<Ival>,
    ropes: Vec<VecDeque<DiskLetter>>,
    corners: Vec<(u32, Sign)>,
    t_exp: i64,
    segs: Vec<(LineId, u32, u32, bool)>,
    circuit: Option<Vec<DiskLetter>>,
    marked_done: bool,
    west_col: usize,
    east_col: usize,
    touched: bool,
}

impl State {
    fn canonical(mut self) -> State {
        // Renumber ropes in order of first reference from sorted intervals,
        // renumber components likewise.
        self.intervals.sort_by(|a, b| {
            (a.top, a.bot, &self.ropes[a.top_rope], &self.ropes[a.bot_rope]).cmp(&(
                b.top,
                b.bot,
                &self.ropes[b.top_rope],
                &self.ropes[b.bot_rope],
            ))
        });
        let mut rope_map: BTreeMap<usize, usize> = BTreeMap::new();
        let mut comp_map: BTreeMap<u32, u32> = BTreeMap::new();
        for iv in &self.intervals {
            for r in [iv.top_rope, iv.bot_rope] {
                let next = rope_map.len();
                rope_map.entry(r).or_insert(next);
            }
            let next = comp_map.len() as u32;
            comp_map.entry(iv.comp).or_insert(next);
        }
        let mut ropes = vec![VecDeque::new(); rope_map.len()];
        for (old, new) in &rope_map {
            ropes[*new] = std::mem::take(&mut self.ropes[*old]);
        }
        for iv in &mut self.intervals {
            iv.top_rope = rope_map[&iv.top_rope];
            iv.bot_rope = rope_map[&iv.bot_rope];
            iv.comp = comp_map[&iv.comp];
        }
        self.ropes = ropes;
        self.corners.sort();
        self.segs.sort();
        if let Some(c) = &mut self.circuit {
            *c = canonical_rotation(c);
        }
        self
    }

    fn next_comp(&self) -> u32 {
        self.intervals.iter().map(|i| i.comp + 1).max().unwrap_or(0)
    }

    fn components(&self) -> usize {
        let mut c: Vec<u32> = self.intervals.iter().map(|i| i.comp).collect();
        c.sort();
        c.dedup();
        c.len()
    }
}

fn canonical_rotation(word: &[DiskLetter]) -> Vec<DiskLetter> {
    if word.is_empty() {
        return Vec::new();
    }
    let n = word.len();
    let mut best: Option<Vec<DiskLetter>> = None;
    for s in 0..n {
        let rot: Vec<DiskLetter> = (0..n).map(|k| word[(s + k) % n]).collect();
        if best.as_ref().map_or(true, |b| rot < *b) {
            best = Some(rot);
        }
    }
    best.unwrap()
}

struct Sweep<'a> {
    piece: &'a Piece,
    mode: SweepMode,
    cfg: SweepConfig,
    eastward: bool,
    thread_dir: Vec<Dir>,
    /// Merge capacity strictly beyond each column in sweep order.
    merge_capacity: Vec<usize>,
}

pub fn sweep_disks(
    piece: &Piece,
    mode: SweepMode,
    cfg: &SweepConfig,
) -> Result<Vec<DiskBoundary>> {
    let eastward = piece.east_n > 0 && piece.west_n == 0;
    // Thread directions are needed only for base-point signs.
    let thread_dir = if piece.mark_column.is_some() {
        crate::diagram::trace_piece(piece)?.thread_direction
    } else {
        vec![Dir::East; piece.threads.len()]
    };
    let ncols = piece.columns.len();
    let order: Vec<usize> =
        if eastward { (0..ncols).collect() } else { (0..ncols).rev().collect() };
    // merge_capacity[k] = how many merges are still possible strictly after
    // processing step k: merges happen at crossings, plus left cusps when
    // sweeping westward or right cusps when sweeping eastward.
    let mut merge_capacity = vec![0usize; ncols];
    {
        let mut acc = 0usize;
        for k in (0..ncols).rev() {
            merge_capacity[k] = acc;
            acc += match piece.columns[order[k]].kind {
                ColumnKind::Crossing { .. } => cfg.max_birth_multiplicity,
                ColumnKind::LeftCusp { .. } if !eastward => cfg.max_birth_multiplicity,
                ColumnKind::RightCusp { .. } if eastward => cfg.max_birth_multiplicity,
                _ => 0,
            };
        }
    }

    let sweep = Sweep { piece, mode, cfg: *cfg, eastward, thread_dir, merge_capacity };

    let mut init = State::default();
    init.west_col = usize::MAX;
    let mut states: BTreeMap<State, u64> = BTreeMap::new();
    states.insert(init, 1);
    for (k, &col) in order.iter().enumerate() {
        let mut next: BTreeMap<State, u64> = BTreeMap::new();
        for (state, mult) in states {
            for s in sweep.step(state, col)? {
                // Prune: components must be joinable by the remaining merges.
                let comps = s.components();
                if comps > 0 && comps - 1 > sweep.merge_capacity[k] {
                    continue;
                }
                if s.intervals.len() > cfg.max_intervals {
                    return Err(Error::SearchBudgetExceeded {
                        msg: format!(
                            "more than {} simultaneous boundary intervals",
                            cfg.max_intervals
                        ),
                    });
                }
                if s.corners.len() > cfg.max_corners {
                    return Err(Error::SearchBudgetExceeded {
                        msg: format!("more than {} corners", cfg.max_corners),
                    });
                }
                *next.entry(s.canonical()).or_insert(0) += mult;
            }
        }
        states = next;
    }

    let mut out = Vec::new();
    for (state, mult) in states {
        if !state.intervals.is_empty() {
            continue;
        }
        let Some(word) = state.circuit else { continue };
        if let SweepMode::MarkedFromEast { .. } | SweepMode::MarkedFromWest { .. } = mode {
            if !state.marked_done {
                continue;
            }
        }
        let disk = DiskBoundary {
            corners: state.corners,
            t_exp: state.t_exp,
            m_segments: state.segs,
            word,
            west_col: state.west_col,
            east_col: state.east_col,
        };
        for _ in 0..mult {
            out.push(disk.clone());
        }
    }
    out.sort();
    Ok(out)
}

impl<'a> Sweep<'a> {
    /// All successor states of `state` across one column.
    fn step(&self, state: State, col: usize) -> Result<Vec<State>> {
        let column = &self.piece.columns[col];
        let mut outs: Vec<State> = Vec::new();
        match &column.kind {
            ColumnKind::Mark { thread } => {
                let mut s = state;
                for iv in &s.intervals {
                    if iv.top == *thread {
                        s.t_exp += if self.thread_dir[*thread] == Dir::West { 1 } else { -1 };
                    }
                    if iv.bot == *thread {
                        s.t_exp += if self.thread_dir[*thread] == Dir::East { 1 } else { -1 };
                    }
                }
                outs.push(s);
            }
            ColumnKind::Divide { index, points } => {
                self.step_divide(state, col, *index, points, &mut outs)?;
            }
            ColumnKind::WestWall { points } | ColumnKind::EastWall { points } => {
                let west = matches!(column.kind, ColumnKind::WestWall { .. });
                let line = if west { LineId::West } else { LineId::East };
                let terminal = west != self.eastward; // westward ends at West wall
                if terminal {
                    self.wall_deaths(state, col, line, points, &mut outs)?;
                } else {
                    self.wall_births(state, col, line, points, &mut outs)?;
                }
            }
            ColumnKind::LeftCusp { upper, lower } => {
                let (u, l) = (*upper, *lower);
                if self.eastward {
                    self.turn_birth_side(state, col, u, l, &mut outs)?;
                } else {
                    self.turn_death_side(state, col, u, l, &mut outs)?;
                }
            }
            ColumnKind::RightCusp { chord } => {
                // The smooth eastward turn of a resolved right cusp; its
                // strands sit swapped relative to the loop crossing.
                let c = &self.piece.chords[*chord];
                let (u, l) = (c.asc, c.desc);
                if self.eastward {
                    self.turn_death_side(state, col, u, l, &mut outs)?;
                } else {
                    self.turn_birth_side(state, col, u, l, &mut outs)?;
                }
            }
            ColumnKind::Crossing { chord } => {
                self.step_crossing(state, col, *chord, &mut outs)?;
            }
        }
        Ok(outs)
    }

    /// Smooth turn processed on its opening side: cap births, and splits of
    /// intervals around the turn point. A spanning interval may split
    /// outside the turn ([X,u]+[l,Y]) or through its wedge ([X,l]+[u,Y]).
    fn turn_birth_side(
        &self,
        state: State,
        col: usize,
        u: ThreadId,
        l: ThreadId,
        outs: &mut Vec<State>,
    ) -> Result<()> {
        let side = if self.eastward {
            &self.piece.columns[col].east
        } else {
            &self.piece.columns[col].west
        };
        let row = |t: ThreadId| side.iter().position(|&x| x == t);
        let (Some(ru), Some(_rl)) = (row(u), row(l)) else {
            outs.push(state);
            return Ok(());
        };
        let mut spanning: Vec<usize> = Vec::new();
        for (idx, iv) in state.intervals.iter().enumerate() {
            match (row(iv.top), row(iv.bot)) {
                (Some(rt), Some(rb)) if rt < ru && rb > ru + 1 => spanning.push(idx),
                _ => {}
            }
        }
        // Each spanning interval independently: no split, outside split, or
        // wedge split.
        let mut bases: Vec<State> = vec![state];
        for &idx in spanning.iter().rev() {
            let mut next = Vec::new();
            for s in bases {
                next.push(s.clone());
                for (c1, c2) in [(u, l), (l, u)] {
                    let mut s2 = s.clone();
                    s2.touch(col);
                    let iv = s2.intervals[idx].clone();
                    let rope = s2.ropes.len();
                    s2.ropes.push(VecDeque::new());
                    let piece1 = Ival {
                        top: iv.top,
                        bot: c1,
                        top_rope: iv.top_rope,
                        bot_rope: rope,
                        comp: iv.comp,
                    };
                    let piece2 = Ival {
                        top: c2,
                        bot: iv.bot,
                        top_rope: rope,
                        bot_rope: iv.bot_rope,
                        comp: iv.comp,
                    };
                    s2.intervals[idx] = piece1;
                    s2.intervals.push(piece2);
                    next.push(s2);
                }
            }
            bases = next;
        }
        for s in bases {
            for births in 0..=self.cfg.max_birth_multiplicity {
                let mut sb = s.clone();
                if births > 0 && sb.circuit.is_some() {
                    break;
                }
                for _ in 0..births {
                    sb.touch(col);
                    let rope = sb.ropes.len();
                    sb.ropes.push(VecDeque::new());
                    let comp = sb.next_comp();
                    sb.intervals.push(Ival { top: u, bot: l, top_rope: rope, bot_rope: rope, comp });
                }
                outs.push(sb);
            }
        }
        Ok(())
    }

    /// Smooth turn processed on its closing side: exact caps die; facing
    /// arcs merge around the turn, either outside it (bot-on-u with
    /// top-on-l) or through the wedge (bot-on-l with top-on-u). Stray
    /// endpoints on the turn threads abandon the branch.
    fn turn_death_side(
        &self,
        state: State,
        col: usize,
        u: ThreadId,
        l: ThreadId,
        outs: &mut Vec<State>,
    ) -> Result<()> {
        // Arcs by thread and edge kind.
        let mut bots_on_u: Vec<usize> = Vec::new();
        let mut tops_on_l: Vec<usize> = Vec::new();
        let mut tops_on_u: Vec<usize> = Vec::new();
        let mut bots_on_l: Vec<usize> = Vec::new();
        for (idx, iv) in state.intervals.iter().enumerate() {
            if iv.bot == u {
                bots_on_u.push(idx);
            }
            if iv.top == l {
                tops_on_l.push(idx);
            }
            if iv.top == u {
                tops_on_u.push(idx);
            }
            if iv.bot == l {
                bots_on_l.push(idx);
            }
        }
        if bots_on_u.len() != tops_on_l.len() || tops_on_u.len() != bots_on_l.len() {
            return Ok(());
        }
        let interacting =
            !(bots_on_u.is_empty() && tops_on_u.is_empty() && bots_on_l.is_empty());
        // Outside family: each bot-arc-on-u joins a top-arc-on-l.
        // Wedge family: each bot-arc-on-l joins a top-arc-on-u; a pair within
        // one interval (the exact cap [u, l]) closes it.
        for perm1 in permutations(&tops_on_l) {
            for perm2 in permutations(&tops_on_u) {
                let mut s = state.clone();
                if interacting {
                    s.touch(col);
                }
                let mut repr: Vec<usize> = (0..s.intervals.len()).collect();
                let find = |repr: &Vec<usize>, mut i: usize| {
                    while repr[i] != i {
                        i = repr[i];
                    }
                    i
                };
                let mut ok = true;
                let pairs = bots_on_u
                    .iter()
                    .zip(&perm1)
                    .map(|(&up, &lo)| (up, lo))
                    .chain(bots_on_l.iter().zip(&perm2).map(|(&up, &lo)| (up, lo)));
                for (upper_idx, lower_idx) in pairs {
                    let up_live = find(&repr, upper_idx);
                    let lo_live = find(&repr, lower_idx);
                    if up_live == lo_live {
                        if !self.apply_death(&mut s, up_live, vec![]) {
                            ok = false;
                            break;
                        }
                    } else {
                        if !self.apply_merge(&mut s, up_live, lo_live, vec![]) {
                            ok = false;
                            break;
                        }
                        repr[lo_live] = up_live;
                    }
                }
                if !ok {
                    continue;
                }
                s.intervals.retain(|iv| iv.top != usize::MAX);
                if s.circuit.is_some() && !s.intervals.is_empty() {
                    continue;
                }
                outs.push(s);
            }
        }
        Ok(())
    }

    /// Kill interval `idx` (marking it for removal), splicing its ropes with
    /// the given letters between bot- and top-chains (in sweep convention).
    /// Returns false on an illegal early circuit.
    fn apply_death(&self, s: &mut State, idx: usize, letters: Vec<DiskLetter>) -> bool {
        let iv = s.intervals[idx].clone();
        let (a, b) = if self.eastward {
            (iv.top_rope, iv.bot_rope)
        } else {
            (iv.bot_rope, iv.top_rope)
        };
        if a == b {
            if s.circuit.is_some() {
                return false; // two closed circuits
            }
            let mut word: Vec<DiskLetter> = s.ropes[a].iter().copied().collect();
            word.extend(letters);
            s.circuit = Some(word);
            s.ropes[a].clear();
        } else {
            let tail: Vec<DiskLetter> = s.ropes[b].iter().copied().collect();
            for letter in letters {
                s.ropes[a].push_back(letter);
            }
            s.ropes[a].extend(tail);
            s.ropes[b].clear();
            for other in s.intervals.iter_mut() {
                if other.top_rope == b {
                    other.top_rope = a;
                }
                if other.bot_rope == b {
                    other.bot_rope = a;
                }
            }
        }
        // mark for removal
        s.intervals[idx].top = usize::MAX;
        s.intervals[idx].bot = usize::MAX;
        true
    }

    /// Merge upper and lower intervals around a junction carrying `letters`.
    fn apply_merge(
        &self,
        s: &mut State,
        upper_idx: usize,
        lower_idx: usize,
        letters: Vec<DiskLetter>,
    ) -> bool {
        let upper = s.intervals[upper_idx].clone();
        let lower = s.intervals[lower_idx].clone();
        let (a, b) = if self.eastward {
            (lower.top_rope, upper.bot_rope)
        } else {
            (upper.bot_rope, lower.top_rope)
        };
        if a == b {
            return false; // would close a circuit while boundary remains
        }
        let tail: Vec<DiskLetter> = s.ropes[b].iter().copied().collect();
        for letter in letters {
            s.ropes[a].push_back(letter);
        }
        s.ropes[a].extend(tail);
        s.ropes[b].clear();
        for other in s.intervals.iter_mut() {
            if other.top_rope == b {
                other.top_rope = a;
            }
            if other.bot_rope == b {
                other.bot_rope = a;
            }
        }
        let comp = upper.comp.min(lower.comp);
        let old = upper.comp.max(lower.comp);
        let merged = Ival {
            top: upper.top,
            bot: lower.bot,
            top_rope: s.intervals[upper_idx].top_rope,
            bot_rope: s.intervals[lower_idx].bot_rope,
            comp,
        };
        for iv in s.intervals.iter_mut() {
            if iv.comp == old {
                iv.comp = comp;
            }
        }
        s.intervals[upper_idx] = merged;
        s.intervals[lower_idx].top = usize::MAX;
        s.intervals[lower_idx].bot = usize::MAX;
        true
    }

    fn step_crossing(
        &self,
        state: State,
        col: usize,
        chord: usize,
        outs: &mut Vec<State>,
    ) -> Result<()> {
        let c = &self.piece.chords[chord];
        let label = c.label;
        // Arriving side: east of the column for a westward sweep. On the
        // east side rows are (asc, desc) top to bottom, on the west side
        // (desc, asc).
        let (upper_arr, lower_arr) = if self.eastward { (c.desc, c.asc) } else { (c.asc, c.desc) };

        // Intervals spanning both crossing threads exactly must close at the
        // convex corner between the arriving rays: their departing sides
        // would otherwise invert.
        let mut s0 = state;
        let exact: Vec<usize> = s0
            .intervals
            .iter()
            .enumerate()
            .filter(|(_, iv)| iv.top == upper_arr && iv.bot == lower_arr)
            .map(|(i, _)| i)
            .collect();
        if !exact.is_empty() {
            s0.touch(col);
        }
        for &idx in &exact {
            s0.corners.push((label, Sign::Pos));
            if !self.apply_death(&mut s0, idx, vec![DiskLetter::P(label)]) {
                return Ok(());
            }
        }
        s0.intervals.retain(|iv| iv.top != usize::MAX);
        if s0.circuit.is_some() && !s0.intervals.is_empty() {
            return Ok(());
        }

        // Switch choices for the remaining endpoints on the crossing
        // threads: a bottom endpoint on the arriving upper thread or a top
        // endpoint on the arriving lower thread may turn at a negative
        // corner; the opposite kinds can only pass through.
        let bot_sw: Vec<usize> = s0
            .intervals
            .iter()
            .enumerate()
            .filter(|(_, iv)| iv.bot == upper_arr)
            .map(|(i, _)| i)
            .collect();
        let top_sw: Vec<usize> = s0
            .intervals
            .iter()
            .enumerate()
            .filter(|(_, iv)| iv.top == lower_arr)
            .map(|(i, _)| i)
            .collect();
        for bot_mask in subsets(&bot_sw) {
            for top_mask in subsets(&top_sw) {
                let mut s1 = s0.clone();
                if !bot_mask.is_empty() || !top_mask.is_empty() {
                    s1.touch(col);
                }
                for &idx in &bot_mask {
                    let other = if s1.intervals[idx].bot == c.asc { c.desc } else { c.asc };
                    s1.intervals[idx].bot = other;
                    s1.corners.push((label, Sign::Neg));
                    let rope = s1.intervals[idx].bot_rope;
                    if self.eastward {
                        s1.ropes[rope].push_front(DiskLetter::Q(label));
                    } else {
                        s1.ropes[rope].push_back(DiskLetter::Q(label));
                    }
                }
                for &idx in &top_mask {
                    let other = if s1.intervals[idx].top == c.asc { c.desc } else { c.asc };
                    s1.intervals[idx].top = other;
                    s1.corners.push((label, Sign::Neg));
                    let rope = s1.intervals[idx].top_rope;
                    if self.eastward {
                        s1.ropes[rope].push_back(DiskLetter::Q(label));
                    } else {
                        s1.ropes[rope].push_front(DiskLetter::Q(label));
                    }
                }
                // A switch may have produced an exactly inverted interval.
                let inverted = s1.intervals.iter().any(|iv| {
                    (self.eastward && iv.top == c.desc && iv.bot == c.asc)
                        || (!self.eastward && iv.top == c.asc && iv.bot == c.desc)
                });
                if inverted {
                    continue;
                }
                // Births at the corner opening toward the departing side.
                for births in 0..=self.cfg.max_birth_multiplicity {
                    let mut s3 = s1.clone();
                    if births > 0 && s3.circuit.is_some() {
                        break;
                    }
                    for _ in 0..births {
                        s3.touch(col);
                        s3.corners.push((label, Sign::Pos));
                        let rope = s3.ropes.len();
                        s3.ropes.push([DiskLetter::P(label)].into_iter().collect());
                        let comp = s3.next_comp();
                        let (bt, bb) =
                            if self.eastward { (c.asc, c.desc) } else { (c.desc, c.asc) };
                        s3.intervals.push(Ival {
                            top: bt,
                            bot: bb,
                            top_rope: rope,
                            bot_rope: rope,
                            comp,
                        });
                    }
                    outs.push(s3);
                }
            }
        }
        Ok(())
    }

    fn step_divide(
        &self,
        state: State,
        col: usize,
        index: usize,
        points: &[ThreadId],
        outs: &mut Vec<State>,
    ) -> Result<()> {
        match self.mode {
            SweepMode::All => outs.push(state),
            SweepMode::MarkedFromEast { divide, i, j } if divide == index => {
                // The marked segment is a death of an interval spanning
                // exactly (i, j), approached from the east: westward sweep.
                let ti = points[i as usize - 1];
                let tj = points[j as usize - 1];
                if state.marked_done {
                    outs.push(state);
                    return Ok(());
                }
                for (idx, iv) in state.intervals.iter().enumerate() {
                    if iv.top == ti && iv.bot == tj {
                        let mut s = state.clone();
                        s.touch(col);
                        let letter =
                            DiskLetter::Seg { line: LineId::Divide(index), i, j, marked: true };
                        s.segs.push((LineId::Divide(index), i, j, true));
                        if self.apply_death(&mut s, idx, vec![letter]) {
                            s.intervals.retain(|iv| iv.top != usize::MAX);
                            if s.circuit.is_some() && !s.intervals.is_empty() {
                                continue;
                            }
                            s.marked_done = true;
                            outs.push(s);
                        }
                    }
                }
                // The no-death branch cannot mark later; drop it.
            }
            SweepMode::MarkedFromWest { divide, i, j } if divide == index => {
                if state.marked_done {
                    outs.push(state);
                    return Ok(());
                }
                let ti = points[i as usize - 1];
                let tj = points[j as usize - 1];
                let mut s = state;
                s.touch(col);
                if s.circuit.is_some() {
                    return Ok(());
                }
                let letter = DiskLetter::Seg { line: LineId::Divide(index), i, j, marked: true };
                s.segs.push((LineId::Divide(index), i, j, true));
                let rope = s.ropes.len();
                s.ropes.push([letter].into_iter().collect());
                let comp = s.next_comp();
                s.intervals.push(Ival { top: ti, bot: tj, top_rope: rope, bot_rope: rope, comp });
                s.marked_done = true;
                outs.push(s);
            }
            _ => outs.push(state),
        }
        Ok(())
    }

    /// Terminal wall: every interval dies as a boundary segment.
    fn wall_deaths(
        &self,
        state: State,
        col: usize,
        line: LineId,
        points: &[ThreadId],
        outs: &mut Vec<State>,
    ) -> Result<()> {
        let mut s = state;
        if !s.intervals.is_empty() {
            s.touch(col);
        }
        let point_of = |t: ThreadId| points.iter().position(|&x| x == t).map(|k| k as u32 + 1);
        loop {
            let Some(idx) = s.intervals.iter().position(|iv| iv.top != usize::MAX) else {
                break;
            };
            let iv = s.intervals[idx].clone();
            let (Some(i), Some(j)) = (point_of(iv.top), point_of(iv.bot)) else {
                return Ok(()); // endpoint not on the wall: no completion
            };
            let letter = DiskLetter::Seg { line, i, j, marked: false };
            s.segs.push((line, i, j, false));
            if !self.apply_death(&mut s, idx, vec![letter]) {
                return Ok(());
            }
            s.intervals.retain(|x| x.top != usize::MAX);
            if s.circuit.is_some() && !s.intervals.is_empty() {
                return Ok(()); // disconnected
            }
        }
        outs.push(s);
        Ok(())
    }

    /// Initial wall: branch over multisets of wall-segment births.
    fn wall_births(
        &self,
        state: State,
        col: usize,
        line: LineId,
        points: &[ThreadId],
        outs: &mut Vec<State>,
    ) -> Result<()> {
        let n = points.len() as u32;
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                pairs.push((i, j));
            }
        }
        // Recursive chooser over pair multiplicities.
        fn rec(
            sweep: &Sweep,
            s: State,
            col: usize,
            line: LineId,
            points: &[ThreadId],
            pairs: &[(u32, u32)],
            k: usize,
            outs: &mut Vec<State>,
        ) {
            outs.push(s.clone());
            if k >= pairs.len() || s.intervals.len() >= sweep.cfg.max_intervals {
                return;
            }
            for (pk, &(i, j)) in pairs.iter().enumerate().skip(k) {
                let mut s2 = s.clone();
                s2.touch(col);
                let letter = DiskLetter::Seg { line, i, j, marked: false };
                s2.segs.push((line, i, j, false));
                let rope = s2.ropes.len();
                s2.ropes.push([letter].into_iter().collect());
                let comp = s2.next_comp();
                s2.intervals.push(Ival {
                    top: points[i as usize - 1],
                    bot: points[j as usize - 1],
                    top_rope: rope,
                    bot_rope: rope,
                    comp,
                });
                rec(sweep, s2, col, line, points, pairs, pk, outs);
            }
        }
        if state.circuit.is_some() {
            outs.push(state);
            return Ok(());
        }
        rec(self, state, col, line, points, &pairs, 0, outs);
        // rec pushed every prefix state including duplicates of the base;
        // dedup happens in the sweep's state map.
        Ok(())
    }
}

impl State {
    fn touch(&mut self, col: usize) {
        if !self.touched {
            self.west_col = col;
            self.east_col = col;
            self.touched = true;
        } else {
            self.west_col = self.west_col.min(col);
            self.east_col = self.east_col.max(col);
        }
    }
}

/// All subsets of a slice of indices.
fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &x in items {
        let mut more = Vec::new();
        for s in &out {
            let mut t = s.clone();
            t.push(x);
            more.push(t);
        }
        out.extend(more);
    }
    out
}

/// All permutations of a slice.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (k, &x) in items.iter().enumerate() {
        let mut rest: Vec<usize> = items.to_vec();
        rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}
