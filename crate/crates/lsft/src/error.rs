use thiserror::Error;

/// Errors produced by parsing, validation, and the algebraic engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input at line {line}: {msg}")]
    MalformedInput { line: usize, msg: String },
    #[error("row {row} out of range at line {line} (current strand count {strands})")]
    RowOutOfRange { line: usize, row: usize, strands: usize },
    #[error("duplicate label {label}")]
    DuplicateLabel { label: String },
    #[error("front is not simple: {msg}")]
    NonSimpleFront { msg: String },
    #[error("diagram has more than one component")]
    MultiComponent,
    #[error("dividing line passes through a crossing or cusp")]
    DividingLineHitsVertex,
    #[error("diagram has no dividing line")]
    NoDividingLine,
    #[error("diagram has two dividing lines; use the two-sided interface")]
    TwoDividingLines,
    #[error("pairing is not a fixed-point-free involution")]
    NotInvolution,
    #[error("pairings are disconnected: alternating walk does not visit every point")]
    Disconnected,
    #[error("Maslov potential is inconsistent over the integers; gradings live in Z/{modulus}")]
    InconsistentPotential { modulus: i64 },
    #[error("polynomial discipline mismatch ({left:?} vs {right:?})")]
    DisciplineMismatch { left: crate::algebra::Discipline, right: crate::algebra::Discipline },
    #[error("generator {gen} is not in the table's domain")]
    UnknownGenerator { gen: String },
    #[error("generator {gen} has no grading entry")]
    UngradedGenerator { gen: String },
    #[error("generator {gen} has no broken-string representative in this context")]
    NotRepresentable { gen: String },
    #[error("disk search budget exceeded: {msg}")]
    SearchBudgetExceeded { msg: String },
    #[error("oracle budget exceeded: {msg}")]
    BudgetExceeded { msg: String },
    #[error("diagram has no base point; add a `mark` event or a dividing line")]
    MissingBasePoint,
    #[error("two-sided diagrams have mismatched boundaries: {msg}")]
    BoundaryMismatch { msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
