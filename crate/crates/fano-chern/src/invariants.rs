//! Numeric invariants of the model families and the inequality skeleton
//! used when chaining families.
//!
//! Everything here is closed-form arithmetic on small integers: the
//! dimension of a minimal family, the chain-length invariants of the four
//! model families, and the rational lower bounds that drive the chain
//! construction. No geometry is verified; impossible parameter combinations
//! are reported as flags, not errors, so the functions double as sanity
//! checkers for hypothetical inputs.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The four worked-example Fano manifolds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ModelFamily {
    /// Projective space of dimension `n >= 1`.
    ProjectiveSpace { n: u32 },
    /// Smooth quadric hypersurface of dimension `n >= 3`.
    Quadric { n: u32 },
    /// Blow-up of projective `n`-space along a linear subspace of dimension
    /// `m`, with `0 <= m <= n - 1`.
    BlowupLinearSubspace { n: u32, m: u32 },
    /// Product of a quadric of dimension `m + 1` and projective `m`-space,
    /// `m >= 1`.
    QuadricTimesProjective { m: u32 },
}

impl ModelFamily {
    pub fn projective_space(n: u32) -> Result<Self> {
        let family = ModelFamily::ProjectiveSpace { n };
        family.validate()?;
        Ok(family)
    }

    pub fn quadric(n: u32) -> Result<Self> {
        let family = ModelFamily::Quadric { n };
        family.validate()?;
        Ok(family)
    }

    pub fn blowup_linear_subspace(n: u32, m: u32) -> Result<Self> {
        let family = ModelFamily::BlowupLinearSubspace { n, m };
        family.validate()?;
        Ok(family)
    }

    pub fn quadric_times_projective(m: u32) -> Result<Self> {
        let family = ModelFamily::QuadricTimesProjective { m };
        family.validate()?;
        Ok(family)
    }

    pub fn validate(&self) -> Result<()> {
        let reason = match *self {
            ModelFamily::ProjectiveSpace { n } if n < 1 => {
                format!("projective space needs n >= 1, got n={n}")
            }
            ModelFamily::Quadric { n } if n < 3 => {
                format!("quadric needs n >= 3, got n={n}")
            }
            ModelFamily::BlowupLinearSubspace { n, m } if n < 1 || m + 1 > n => {
                format!("blow-up needs 0 <= m <= n - 1, got n={n}, m={m}")
            }
            ModelFamily::QuadricTimesProjective { m } if m < 1 => {
                format!("product family needs m >= 1, got m={m}")
            }
            _ => return Ok(()),
        };
        Err(Error::InvalidModel { reason })
    }

    /// Dimension of the manifold itself.
    pub fn ambient_dim(&self) -> u32 {
        match *self {
            ModelFamily::ProjectiveSpace { n } => n,
            ModelFamily::Quadric { n } => n,
            ModelFamily::BlowupLinearSubspace { n, .. } => n,
            ModelFamily::QuadricTimesProjective { m } => 2 * m + 1,
        }
    }
}

impl fmt::Display for ModelFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ModelFamily::ProjectiveSpace { n } => write!(f, "P:{n}"),
            ModelFamily::Quadric { n } => write!(f, "Q:{n}"),
            ModelFamily::BlowupLinearSubspace { n, m } => write!(f, "Bl:{n},{m}"),
            ModelFamily::QuadricTimesProjective { m } => write!(f, "QxP:{m}"),
        }
    }
}

impl FromStr for ModelFamily {
    type Err = Error;

    /// Parses the compact grammar `P:n`, `Q:n`, `Bl:n,m`, `QxP:m`.
    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: String| Error::ParseModel {
            input: s.to_owned(),
            reason,
        };
        let (head, args) = s
            .split_once(':')
            .ok_or_else(|| fail("expected one of P:n, Q:n, Bl:n,m, QxP:m".to_owned()))?;
        let parse_u32 = |text: &str, what: &str| {
            text.parse::<u32>()
                .map_err(|e| fail(format!("bad {what} {text:?}: {e}")))
        };
        match head {
            "P" => ModelFamily::projective_space(parse_u32(args, "dimension")?),
            "Q" => ModelFamily::quadric(parse_u32(args, "dimension")?),
            "Bl" => {
                let (n, m) = args
                    .split_once(',')
                    .ok_or_else(|| fail("blow-up takes two parameters n,m".to_owned()))?;
                ModelFamily::blowup_linear_subspace(
                    parse_u32(n, "dimension")?,
                    parse_u32(m, "center dimension")?,
                )
            }
            "QxP" => ModelFamily::quadric_times_projective(parse_u32(args, "parameter")?),
            other => Err(fail(format!(
                "unknown family {other:?}; expected P, Q, Bl or QxP"
            ))),
        }
    }
}

/// Minimum and maximum length of chains of minimal families that the
/// manifold supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantPair {
    pub min_chain_length: u32,
    pub max_chain_length: u32,
}

/// The chain-length invariants of a model family.
pub fn model_invariants(family: &ModelFamily) -> Result<InvariantPair> {
    family.validate()?;
    let (min_chain_length, max_chain_length) = match *family {
        ModelFamily::ProjectiveSpace { n } => (n, n),
        ModelFamily::Quadric { n } => ((n + 1) / 2, (n + 1) / 2),
        ModelFamily::BlowupLinearSubspace { m, .. } => (m + 1, m + 1),
        ModelFamily::QuadricTimesProjective { m } => ((m + 2) / 2, m),
    };
    Ok(InvariantPair {
        min_chain_length,
        max_chain_length,
    })
}

/// The space of minimal curves through a general point, when on record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PolarizedBase {
    ProjectiveSpace { n: u32 },
    Quadric { n: u32 },
}

impl fmt::Display for PolarizedBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PolarizedBase::ProjectiveSpace { n } => write!(f, "P:{n}"),
            PolarizedBase::Quadric { n } => write!(f, "Q:{n}"),
        }
    }
}

/// Polarization carried by a minimal family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Polarization {
    Hyperplane,
}

impl fmt::Display for Polarization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Polarization::Hyperplane => write!(f, "hyperplane"),
        }
    }
}

/// A minimal family together with its polarization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PolarizedFamily {
    pub space: PolarizedBase,
    pub polarization: Polarization,
}

impl fmt::Display for PolarizedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.space, self.polarization)
    }
}

/// The polarized minimal family of a model, for the three models where one
/// is on record; the product family is rejected.
pub fn model_polarized_family(family: &ModelFamily) -> Result<PolarizedFamily> {
    family.validate()?;
    let space = match *family {
        ModelFamily::ProjectiveSpace { n } => PolarizedBase::ProjectiveSpace { n: n - 1 },
        ModelFamily::Quadric { n } => PolarizedBase::Quadric { n: n - 2 },
        ModelFamily::BlowupLinearSubspace { m, .. } => PolarizedBase::ProjectiveSpace { n: m },
        ModelFamily::QuadricTimesProjective { .. } => {
            return Err(Error::NoPolarizedFamily {
                model: family.to_string(),
            })
        }
    };
    Ok(PolarizedFamily {
        space,
        polarization: Polarization::Hyperplane,
    })
}

/// Dimension of a minimal family of anticanonical degree `degree` on an
/// `ambient_dim`-fold, with consistency flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinimalFamilyDim {
    /// `degree - 2`.
    pub dim: u32,
    /// Whether `dim <= ambient_dim - 1`; inputs violating it describe no
    /// actual family.
    pub within_bound: bool,
    /// Whether `dim = ambient_dim - 1` exactly, the value characterizing
    /// projective space.
    pub attains_bound: bool,
}

pub fn minimal_family_dim(anticanonical_degree: u32, ambient_dim: u32) -> Result<MinimalFamilyDim> {
    if anticanonical_degree < 2 {
        return Err(Error::DegreeTooSmall {
            degree: anticanonical_degree,
        });
    }
    if ambient_dim < 1 {
        return Err(Error::InvalidRange {
            reason: "ambient dimension must be >= 1".to_owned(),
        });
    }
    let dim = anticanonical_degree - 2;
    Ok(MinimalFamilyDim {
        dim,
        within_bound: dim <= ambient_dim - 1,
        attains_bound: dim == ambient_dim - 1,
    })
}

/// Outcome of testing the chain-construction hypothesis
/// `2 <= N <= 100` and `d1 >= N^2 - N - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub length_in_range: bool,
    pub degree_sufficient: bool,
    /// One entry per failed clause; empty exactly when the check holds.
    pub reasons: Vec<String>,
}

impl HypothesisCheck {
    pub fn holds(&self) -> bool {
        self.reasons.is_empty()
    }
}

pub fn chain_hypothesis(n: i64, d1: i64) -> HypothesisCheck {
    let mut reasons = Vec::new();
    let length_in_range = (2..=100).contains(&n);
    if !length_in_range {
        reasons.push(format!("chain length must satisfy 2 <= N <= 100, got N={n}"));
    }
    let threshold = i128::from(n) * i128::from(n) - i128::from(n) - 1;
    let degree_sufficient = i128::from(d1) >= threshold;
    if !degree_sufficient {
        reasons.push(format!(
            "base degree must be at least N^2 - N - 1 = {threshold}, got d1={d1}"
        ));
    }
    HypothesisCheck {
        length_in_range,
        degree_sufficient,
        reasons,
    }
}

/// Lower bound `-(M-1) + (d1+2)/M - 2` on the anticanonical degree excess
/// of the `M`-th family in a chain with base degree `d1`.
pub fn chain_dim_lower_bound(m: u32, d1: u64) -> Result<Rational> {
    if m < 2 {
        return Err(Error::ChainTooShort { length: m });
    }
    Ok(-Rational::from(m - 1) + Rational::from(d1 + 2) / Rational::from(m) - Rational::from(2u32))
}

/// Lower bound `(d1/2) * a2 - 2` on the second family's dimension, valid
/// when the ambient second Chern character is nef.
pub fn second_family_dim_bound(d1: u64, a2: u64) -> Rational {
    assert!(a2 >= 1, "step degree must be >= 1");
    Rational::from(d1) / Rational::from(2u32) * Rational::from(a2) - Rational::from(2u32)
}
