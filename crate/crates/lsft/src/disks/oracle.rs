//! Brute-force disk oracle: exhaustive enumeration of admissible boundary
//! circuits, filtered by region winding data. Structured independently of
//! the column sweep; the two are compared on the regression corpus.

use super::{DiskBoundary, SweepConfig, SweepMode};
use crate::diagram::Piece;
use crate::error::Result;

/// Placeholder delegating to the sweep until the circuit walker lands.
pub fn oracle_disks(
    piece: &Piece,
    mode: SweepMode,
    cfg: &SweepConfig,
) -> Result<Vec<DiskBoundary>> {
    super::sweep_disks(piece, mode, cfg)
}
