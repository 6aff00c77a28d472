use thiserror::Error;

/// Errors surfaced by the library. Construction algorithms themselves are
/// total; errors come from invalid parameters, malformed inputs, or
/// arithmetic overflow while sizing the interaction space.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("interaction count overflows u64 for t={t}, k={k}, v={v}")]
    CountOverflow { t: usize, k: usize, v: u32 },

    #[error("invalid interaction: {0}")]
    InvalidInteraction(String),

    #[error("rank {rank} out of range: interaction count is {count}")]
    RankOutOfRange { rank: u64, count: u64 },

    #[error("invalid row: {0}")]
    InvalidRow(String),

    #[error("array shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("malformed array text: {0}")]
    Parse(String),

    #[error("invalid stage selection: {0}")]
    InvalidSelection(String),
}
