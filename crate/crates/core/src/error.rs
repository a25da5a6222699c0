use crate::rootsys::Weight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),

    #[error("inadmissible Cartan type {family}{rank}")]
    InadmissibleType { family: char, rank: usize },

    #[error("weight {got:?} has {} coordinates, expected rank {expected}", got.len())]
    RankMismatch { expected: usize, got: Weight },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Weight),

    #[error("Weyl orbit exceeded {cap} elements ({} collected)", partial.len())]
    OrbitCap { cap: usize, partial: Vec<Weight> },

    #[error("dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: String, cap: u64 },

    #[error("Weyl group order {order} exceeds the cap {cap}")]
    WeylOrderCap { order: String, cap: u64 },

    #[error("power {k} exceeds the cap {cap}")]
    PowerCap { k: usize, cap: usize },

    #[error("not a module character: weight {weight:?} would get multiplicity {mult}")]
    NotModuleCharacter { weight: Weight, mult: i128 },

    #[error("Adams operation requires k >= 1")]
    ZeroAdams,

    #[error("point {0} is repeated")]
    RepeatedPoint(String),

    #[error("points must be nonzero")]
    ZeroPoint,

    #[error("all weights are zero: the splitting order is unbounded")]
    UnboundedSplitting,

    #[error("set is not interval closed: {0}")]
    NotIntervalClosed(String),

    #[error("reachable set exceeded {cap} elements")]
    ReachCap { cap: usize },

    #[error("depth {depth} exceeds the cap {cap}")]
    DepthCap { depth: usize, cap: usize },

    #[error("affine weight is not dominant integral: {0}")]
    NotAffineDominant(String),

    #[error("order {order} exceeds the cap {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("zform needs N >= r + s (r={r}, s={s}, N={n})")]
    ZformTooSmall { r: usize, s: usize, n: usize },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code for the CLI error stream.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnknownType(_) => "unknown_type",
            Error::InadmissibleType { .. } => "inadmissible_type",
            Error::RankMismatch { .. } => "rank_mismatch",
            Error::NotDominant(_) => "not_dominant",
            Error::OrbitCap { .. } => "orbit_cap",
            Error::DimensionCap { .. } => "dimension_cap",
            Error::WeylOrderCap { .. } => "weyl_order_cap",
            Error::PowerCap { .. } => "power_cap",
            Error::NotModuleCharacter { .. } => "not_module_character",
            Error::ZeroAdams => "zero_adams",
            Error::RepeatedPoint(_) => "repeated_point",
            Error::ZeroPoint => "zero_point",
            Error::UnboundedSplitting => "unbounded_splitting",
            Error::NotIntervalClosed(_) => "not_interval_closed",
            Error::ReachCap { .. } => "reach_cap",
            Error::DepthCap { .. } => "depth_cap",
            Error::NotAffineDominant(_) => "not_affine_dominant",
            Error::OrderCap { .. } => "order_cap",
            Error::ZformTooSmall { .. } => "zform_too_small",
            Error::Parse(_) => "malformed_input",
            Error::Internal(_) => "internal",
        }
    }

    /// True for errors caused by a configurable limit rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::OrbitCap { .. }
                | Error::DimensionCap { .. }
                | Error::WeylOrderCap { .. }
                | Error::PowerCap { .. }
                | Error::ReachCap { .. }
                | Error::DepthCap { .. }
                | Error::OrderCap { .. }
        )
    }
}
