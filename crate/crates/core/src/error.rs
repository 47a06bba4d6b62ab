use thiserror::Error;

/// Errors raised across the library. The CLI maps each variant to an exit code
/// through [`Error::exit_code`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("node label {label} out of range for graph with {node_count} nodes")]
    LabelOutOfRange { label: usize, node_count: usize },

    #[error("graph must have at least one node")]
    EmptyGraph,

    #[error("edge {{{0}, {0}}} is a self-loop")]
    SelfLoop(usize),

    #[error("edge {{{0}, {1}}} appears more than once")]
    ParallelEdge(usize, usize),

    #[error("cannot finalize: {self_loops} unrepaired self-loops and {parallel} unrepaired parallel edges")]
    UnrepairedDefects { self_loops: usize, parallel: usize },

    #[error("edge {{{0}, {1}}} is not present")]
    MissingEdge(usize, usize),

    #[error("node pool has no remaining degree to sample from")]
    PoolExhausted,

    #[error("invalid distribution parameters: {0}")]
    InvalidDistribution(String),

    #[error("invalid degree counts: {0}")]
    InvalidCounts(String),

    #[error("fit failed for {family}: {reason}")]
    FitFailed { family: String, reason: String },

    #[error("invalid degree sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid sequence request: {0}")]
    InvalidRequest(String),

    #[error("no valid degree sequence after {attempts} attempts ({sum_misses} wrong sums, {non_graphical} non-graphical)")]
    SamplingExhausted {
        attempts: usize,
        sum_misses: usize,
        non_graphical: usize,
    },

    #[error("tree phase stalled: {unvisited} unvisited nodes but the visited set has no remaining degree")]
    TreeDeadEnd { unvisited: usize },

    #[error("edge-switch budget of {budget} draws exhausted while repairing a {kind}")]
    SwitchBudgetExhausted { kind: &'static str, budget: usize },

    #[error("generation failed after {attempts} attempts; last failure: {last}")]
    RestartsExhausted { attempts: usize, last: String },

    #[error("no connectivity-restoring swap available: {0}")]
    NoConnectingSwap(String),

    #[error("invalid cost matrix: {0}")]
    InvalidCostMatrix(String),

    #[error("invalid relabeling: {0}")]
    InvalidRelabeling(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("metric undefined: {0}")]
    Undefined(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown format: {0}")]
    UnknownFormat(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// 2 = bad input, 3 = algorithmic exhaustion or failure, 4 = internal invariant.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            PoolExhausted
            | FitFailed { .. }
            | SamplingExhausted { .. }
            | TreeDeadEnd { .. }
            | SwitchBudgetExhausted { .. }
            | RestartsExhausted { .. }
            | NoConnectingSwap(_)
            | Undefined(_) => 3,
            Invariant(_) => 4,
            _ => 2,
        }
    }

    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
