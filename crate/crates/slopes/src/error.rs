use tdlc_padic::PadicError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlopeError {
    #[error("matrix is singular")]
    SingularInput,
    #[error("automorphism is not expansive (slope 0 present)")]
    NotExpansive,
    #[error("no window up to m = {cap} splits along the slope subspaces")]
    CapExceeded { cap: usize },
    #[error(transparent)]
    Padic(#[from] PadicError),
    #[error("invalid input: {0}")]
    BadInput(String),
}
