use thiserror::Error;

/// Errors produced by ccdh construction, file parsing, and the closed-form
/// calculators.
#[derive(Debug, Error)]
pub enum RhError {
    /// The input has no edges (possibly after dropping loops/duplicates).
    /// Distances over degree distributions are undefined for empty graphs.
    #[error("empty graph: no edges remain after simplification")]
    EmptyGraph,

    /// The smooth ccdh is only defined for arguments >= 1.
    #[error("smooth ccdh evaluated at x = {0}, outside its domain [1, inf)")]
    Domain(f64),

    /// A parameter violates a documented constraint; the message names it.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The complete-vs-cycle closed form has no stated case for this pair.
    #[error("no closed-form case covers complete {n} vs cycle {m}")]
    FormulaCoverage { n: u64, m: u64 },

    /// An edge-list or ccdh file failed to parse.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A ccdh file parsed but violates the format invariants.
    #[error("invalid ccdh data: {0}")]
    Format(String),

    /// A perturbation would leave no vertices of positive degree.
    #[error("perturbation empties the graph")]
    EmptyResult,

    /// The requested perturbation mode has no realizable edit.
    #[error("no applicable perturbations")]
    NoPerturbations,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, RhError>;
