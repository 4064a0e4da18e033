//! Seeded random generation of valid simple fronts, for fuzzing and the
//! property-test corpus.

use crate::diagram::{Event, EventKind, FrontDiagram};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Options for the random front generator.
#[derive(Debug, Clone, Copy)]
pub struct CorpusOptions {
    pub max_crossings: usize,
    /// Insert a dividing line at a random column.
    pub divided: bool,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions { max_crossings: 6, divided: true }
    }
}

/// Generate a random valid single-component simple front. Rejection-samples
/// until connected; deterministic in the seed.
pub fn random_front(seed: u64, opts: &CorpusOptions) -> FrontDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        if let Some(d) = try_random_front(&mut rng, opts) {
            return d;
        }
    }
}

fn try_random_front(rng: &mut ChaCha8Rng, opts: &CorpusOptions) -> Option<FrontDiagram> {
    let lcusps = rng.gen_range(1..=3usize);
    let crossings = rng.gen_range(0..=opts.max_crossings);
    let mut events: Vec<Event> = Vec::new();
    let mut strands = 0usize;
    for _ in 0..lcusps {
        let row = rng.gen_range(1..=strands + 1);
        events.push(Event::new(EventKind::LeftCusp(row)));
        strands += 2;
    }
    // Interleave the remaining left cusps conservatively: all cusps first
    // keeps the generator simple; crossings then mix the strands.
    for _ in 0..crossings {
        if strands < 2 {
            break;
        }
        let row = rng.gen_range(1..strands);
        events.push(Event::new(EventKind::Crossing(row, None)));
    }
    if opts.divided {
        let cut = rng.gen_range(lcusps..=events.len());
        events.insert(cut, Event::new(EventKind::Divide));
    } else {
        // Base point on a random strand at a random interior column.
        let cut = rng.gen_range(lcusps..=events.len());
        let row = rng.gen_range(1..=strands);
        events.insert(cut, Event::new(EventKind::Mark(row)));
    }
    while strands > 0 {
        let row = if strands == 2 { 1 } else { rng.gen_range(1..strands) };
        events.push(Event::new(EventKind::RightCusp(row)));
        strands -= 2;
    }
    FrontDiagram::from_events(events, false).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_in_seed() {
        let a = random_front(7, &CorpusOptions::default());
        let b = random_front(7, &CorpusOptions::default());
        assert_eq!(a.piece.events, b.piece.events);
    }

    #[test]
    fn corpus_is_valid() {
        for seed in 0..30 {
            let d = random_front(seed, &CorpusOptions::default());
            assert!(d.validate().is_valid());
            assert_eq!(d.piece.divides.len(), 1);
        }
    }
}
