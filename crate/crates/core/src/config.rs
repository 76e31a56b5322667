//! Interpretation switches and size limits.

use std::fmt;
use std::str::FromStr;

/// Which elements count as ordered idempotents.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum IdempotentReading {
    /// `e ≤ e²`.
    #[default]
    Leq,
    /// `e = e²`.
    Eq,
}

/// Quantifier over ordered-idempotent pairs in the condition `ef ∈ (eSfSe]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Quantifier {
    #[default]
    ForAll,
    Exists,
}

/// Meaning of "`e` and `f` are H-commutative".
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum HCommutation {
    /// `ef H fe`.
    #[default]
    HRelated,
    /// `ef = fe`.
    Equal,
}

/// The interpretation choices threaded through classification and verification.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Readings {
    pub idempotent: IdempotentReading,
    pub linv_quantifier: Quantifier,
    pub h_commutation: HCommutation,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown {what} `{value}`")]
pub struct UnknownOption {
    what: &'static str,
    value: String,
}

impl FromStr for IdempotentReading {
    type Err = UnknownOption;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "leq" => Ok(IdempotentReading::Leq),
            "eq" => Ok(IdempotentReading::Eq),
            _ => Err(UnknownOption {
                what: "idempotent reading",
                value: s.into(),
            }),
        }
    }
}

impl FromStr for Quantifier {
    type Err = UnknownOption;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "forall" => Ok(Quantifier::ForAll),
            "exists" => Ok(Quantifier::Exists),
            _ => Err(UnknownOption {
                what: "quantifier",
                value: s.into(),
            }),
        }
    }
}

impl FromStr for HCommutation {
    type Err = UnknownOption;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "h" => Ok(HCommutation::HRelated),
            "eq" => Ok(HCommutation::Equal),
            _ => Err(UnknownOption {
                what: "H-commutation reading",
                value: s.into(),
            }),
        }
    }
}

impl fmt::Display for IdempotentReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdempotentReading::Leq => "leq",
            IdempotentReading::Eq => "eq",
        })
    }
}

impl fmt::Display for Quantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantifier::ForAll => "forall",
            Quantifier::Exists => "exists",
        })
    }
}

impl fmt::Display for HCommutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HCommutation::HRelated => "h",
            HCommutation::Equal => "eq",
        })
    }
}

/// Environment variable that overrides [`Limits::max_n`].
pub const MAX_N_ENV: &str = "OSG_MAX_N";

/// Size bounds for the exponential algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest structure accepted for analysis, and largest power-semigroup carrier.
    pub max_n: usize,
    /// Largest structure for the subset-scan ideal oracle.
    pub oracle_n: usize,
    /// Largest structure for the subsemigroup scan behind the union-of-group-like test.
    pub union_n: usize,
    /// Largest order enumerated exhaustively without an explicit override.
    pub enumerate_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 12,
            oracle_n: 8,
            union_n: 10,
            enumerate_n: 4,
        }
    }
}

impl Limits {
    /// Defaults, with `max_n` and `union_n` raised or lowered by `OSG_MAX_N` if set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            let v = v.clamp(1, crate::set::MAX_ELEMENTS);
            limits.max_n = v;
            limits.union_n = v;
        }
        limits
    }
}

/// Hard ceiling for enumeration, reachable only with an explicit override.
pub const ENUMERATE_HARD_MAX: usize = 5;
