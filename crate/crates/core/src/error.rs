use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator {generator} is not a permutation of 0..{degree}: {reason}")]
    NotAPermutation {
        generator: usize,
        degree: usize,
        reason: String,
    },
    #[error("group closure exceeds the element cap of {cap}")]
    ClosureTooLarge { cap: usize },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("set is not a subgroup")]
    NotASubgroup,
    #[error("group order {order} exceeds the subgroup-enumeration cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("element set is not closed under intersection: nodes {0} and {1}")]
    NotMeetClosed(usize, usize),
    #[error("element set has no unique {0} under inclusion")]
    NoUniqueBound(&'static str),
    #[error("lattice is empty")]
    EmptyLattice,
    #[error("nodes {0} and {1} are not comparable")]
    NotComparable(usize, usize),
    #[error("group is abelian")]
    GroupIsAbelian,
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("{path}: {message}")]
    InvalidGroupFile { path: String, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    /// True for the errors caused by hitting one of the configured caps.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(
            self,
            Error::ClosureTooLarge { .. } | Error::OrderCapExceeded { .. }
        )
    }
}

/// The two size caps that bound exhaustive work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of elements in any constructed group.
    pub order_cap: usize,
    /// Maximum group order for which all subgroups are enumerated.
    pub subgroup_cap: usize,
}

impl Limits {
    pub const DEFAULT_ORDER_CAP: usize = 10080;
    pub const DEFAULT_SUBGROUP_CAP: usize = 256;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: Self::DEFAULT_ORDER_CAP,
            subgroup_cap: Self::DEFAULT_SUBGROUP_CAP,
        }
    }
}
