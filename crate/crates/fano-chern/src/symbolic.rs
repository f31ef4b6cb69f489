//! Formal pushforward calculus on chains of families.
//!
//! Classes on the i-th family in a chain are finite rational combinations of
//! basis symbols built from three ingredients: powers of the polarization
//! class `c1(L_i)`, ambient Chern characters `ch_k(X)`, and the pushforward
//! operator `T` that moves a class one step down the chain. The calculus
//! rewrites terms under `T` without ever evaluating them on a concrete
//! variety, which makes it an exact, independent route to the coefficients
//! of [`crate::coefficients`]: expanding the chain with every step degree 1
//! must reproduce `b(i, j, k)` term for term.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::combinatorics::{factorial, signed_bernoulli_weights};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// How a basis term behaves under the pushforward operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TermKind {
    /// A bare power of the polarization class, `c1(L_i)^p`.
    Pure,
    /// `T^k(ch_k(X))` times a polarization power: the Chern factor is fully
    /// contracted to a scalar and rides along under further pushforwards.
    ScalarChern,
    /// `T^i(ch_k(X))` with `k > i`: the Chern factor still carries positive
    /// codimension and absorbs further pushforwards itself.
    CycleChern,
}

/// One basis symbol at a fixed chain depth.
///
/// `chern_index` 0 marks a pure polarization power; otherwise the term
/// carries `T^min(k, depth)(ch_k(X))` times `c1(L_depth)^l_power`. Depth 0
/// terms are the ambient classes `ch_k(X)` themselves and carry no
/// polarization factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisTerm {
    depth: u32,
    chern_index: u32,
    l_power: u32,
}

impl BasisTerm {
    /// A pure polarization power `c1(L_depth)^l_power`.
    pub fn pure(depth: u32, l_power: u32) -> Self {
        assert!(depth >= 1, "pure terms live at depth >= 1");
        BasisTerm {
            depth,
            chern_index: 0,
            l_power,
        }
    }

    /// A Chern-carrying term `T^min(k,depth)(ch_k(X)) c1(L_depth)^l_power`.
    pub fn chern(depth: u32, chern_index: u32, l_power: u32) -> Self {
        assert!(chern_index >= 1, "chern terms need index >= 1");
        assert!(
            depth >= 1 || l_power == 0,
            "depth-0 terms carry no polarization factor"
        );
        BasisTerm {
            depth,
            chern_index,
            l_power,
        }
    }

    /// The ambient class `ch_degree(X)` at depth 0.
    pub fn ambient(degree: u32) -> Self {
        BasisTerm::chern(0, degree, 0)
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn chern_index(&self) -> u32 {
        self.chern_index
    }

    pub fn l_power(&self) -> u32 {
        self.l_power
    }

    pub fn kind(&self) -> TermKind {
        if self.chern_index == 0 {
            TermKind::Pure
        } else if self.chern_index <= self.depth {
            TermKind::ScalarChern
        } else {
            TermKind::CycleChern
        }
    }

    /// Number of pushforwards already applied to the Chern factor.
    pub fn t_order(&self) -> u32 {
        self.chern_index.min(self.depth)
    }

    /// Codimension of the cycle the term represents. The scalar Chern
    /// factor contributes nothing; an uncontracted one contributes its
    /// residual degree `k - depth`.
    pub fn codimension(&self) -> u32 {
        match self.kind() {
            TermKind::Pure | TermKind::ScalarChern => self.l_power,
            TermKind::CycleChern => (self.chern_index - self.depth) + self.l_power,
        }
    }
}

impl fmt::Display for BasisTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.chern_index >= 1 {
            let inner = if self.chern_index == 1 {
                "c1(X)".to_owned()
            } else {
                format!("ch_{}(X)", self.chern_index)
            };
            parts.push(match self.t_order() {
                0 => inner,
                1 => format!("T({inner})"),
                t => format!("T^{t}({inner})"),
            });
        }
        if self.l_power >= 1 {
            let base = format!("c1(L_{})", self.depth);
            parts.push(if self.l_power == 1 {
                base
            } else {
                format!("{base}^{}", self.l_power)
            });
        }
        if parts.is_empty() {
            // The unit class: a pure term with no polarization factor.
            return write!(f, "1");
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// A homogeneous formal class: a finite rational combination of basis terms
/// sharing one depth and one codimension. Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalClass {
    depth: u32,
    codim: u32,
    terms: BTreeMap<BasisTerm, Rational>,
}

impl FormalClass {
    /// The zero class of the given depth and codimension.
    pub fn zero(depth: u32, codim: u32) -> Self {
        assert!(codim >= 1, "classes have positive codimension");
        FormalClass {
            depth,
            codim,
            terms: BTreeMap::new(),
        }
    }

    /// The ambient Chern character `ch_degree(X)` as a depth-0 class.
    pub fn ambient_chern(degree: u32) -> Self {
        let mut class = FormalClass::zero(0, degree);
        class.add_term(BasisTerm::ambient(degree), Rational::one());
        class
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn codimension(&self) -> u32 {
        self.codim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates terms in ascending `chern_index` order.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisTerm, &Rational)> {
        self.terms.iter()
    }

    /// Adds `coefficient * term`, dropping the entry if it cancels to zero.
    ///
    /// Panics if the term's depth or codimension disagrees with the class;
    /// mixing inhomogeneous terms is a programming error in this calculus.
    pub fn add_term(&mut self, term: BasisTerm, coefficient: Rational) {
        assert_eq!(term.depth(), self.depth, "term depth mismatch");
        assert_eq!(term.codimension(), self.codim, "term codimension mismatch");
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(term).or_insert_with(Rational::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&term);
        }
    }

    /// Coefficient of a term, zero when absent.
    pub fn coefficient(&self, term: &BasisTerm) -> Rational {
        self.terms.get(term).cloned().unwrap_or_else(Rational::zero)
    }

    /// The canonical basis term with the given Chern index for this class's
    /// depth and codimension, or `None` when the index is out of range.
    ///
    /// In a homogeneous class every stored term is one of these, so the
    /// class is exactly its vector of [`alpha_coefficients`].
    ///
    /// [`alpha_coefficients`]: FormalClass::alpha_coefficients
    pub fn basis_term(&self, chern_index: u32) -> Option<BasisTerm> {
        if chern_index == 0 {
            if self.depth == 0 {
                return None;
            }
            return Some(BasisTerm::pure(self.depth, self.codim));
        }
        if chern_index <= self.depth {
            Some(BasisTerm::chern(self.depth, chern_index, self.codim))
        } else if chern_index <= self.depth + self.codim {
            let l_power = self.depth + self.codim - chern_index;
            Some(BasisTerm::chern(self.depth, chern_index, l_power))
        } else {
            None
        }
    }

    /// Coefficient of the basis term with the given Chern index.
    pub fn alpha_coefficient(&self, chern_index: u32) -> Rational {
        self.basis_term(chern_index)
            .map(|t| self.coefficient(&t))
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficients of every basis term, indexed by Chern index
    /// `0..=depth + codim`.
    pub fn alpha_coefficients(&self) -> Vec<Rational> {
        (0..=self.depth + self.codim)
            .map(|k| self.alpha_coefficient(k))
            .collect()
    }

    /// Multiplies every coefficient by `factor`.
    pub fn scale(&mut self, factor: &Rational) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for coefficient in self.terms.values_mut() {
            *coefficient *= factor;
        }
    }
}

impl fmt::Display for FormalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (position, (term, coefficient)) in self.terms.iter().enumerate() {
            if position == 0 {
                write!(f, "{coefficient} {term}")?;
            } else if coefficient.is_negative() {
                write!(f, " - {} {term}", coefficient.abs())?;
            } else {
                write!(f, " + {coefficient} {term}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for FormalClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct TermRecord<'a> {
            k: u32,
            kind: TermKind,
            l_power: u32,
            coefficient: &'a Rational,
        }
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(term, coefficient)| TermRecord {
                k: term.chern_index(),
                kind: term.kind(),
                l_power: term.l_power(),
                coefficient,
            })
            .collect();
        let mut state = serializer.serialize_struct("FormalClass", 3)?;
        state.serialize_field("depth", &self.depth)?;
        state.serialize_field("codim", &self.codim)?;
        state.serialize_field("terms", &records)?;
        state.end()
    }
}

/// Applies the pushforward to one term and multiplies by
/// `c1(L)^extra_l_power` on the next family, returning the rewritten term
/// and the scalar multiplier it picks up.
///
/// The multiplier is always `a^l_power`: the rewrite consumes the full
/// polarization power. Pure and scalar-Chern terms trade one polarization
/// power for the step (`l_power - 1 + extra_l_power`); a cycle-Chern term
/// absorbs the pushforward into its Chern factor and keeps its polarization
/// power (`l_power + extra_l_power`), contracting to scalar kind exactly
/// when its index reaches the new depth.
pub fn pushforward_term(
    term: &BasisTerm,
    a: u64,
    extra_l_power: u32,
) -> Result<(BasisTerm, Rational)> {
    if a == 0 {
        return Err(Error::InvalidChain {
            reason: "step degree must be >= 1".to_owned(),
        });
    }
    if term.codimension() == 0 {
        return Err(Error::PushforwardOfScalar {
            depth: term.depth(),
            chern_index: term.chern_index(),
        });
    }
    let multiplier = Rational::from(a).pow(term.l_power() as i32);
    let depth = term.depth() + 1;
    let next = match term.kind() {
        // codimension >= 1 forces l_power >= 1 for these two kinds
        TermKind::Pure => BasisTerm {
            depth,
            chern_index: 0,
            l_power: term.l_power() - 1 + extra_l_power,
        },
        TermKind::ScalarChern => BasisTerm {
            depth,
            chern_index: term.chern_index(),
            l_power: term.l_power() - 1 + extra_l_power,
        },
        TermKind::CycleChern => BasisTerm {
            depth,
            chern_index: term.chern_index(),
            l_power: term.l_power() + extra_l_power,
        },
    };
    Ok((next, multiplier))
}

fn window_error(degree: u32, depth: u32, got: String) -> Error {
    Error::IncompleteChernWindow {
        degree,
        max_degree: degree + 1,
        depth,
        got,
    }
}

/// One Chern step: builds `ch_j` of the next family from `ch_1..ch_{j+1}`
/// of the current one.
///
/// `prev[d-1]` must hold the degree-`d` class; entries beyond `j+1` are
/// ignored, so a full triangular window can be passed as-is. With weights
/// `w_m = (-1)^m B_m / m!` the step is
/// `sum_{m=0}^{j} w_m * T(ch_{j+1-m}) * c1(L)^m  -  (1/j!) c1(L)^j`.
pub fn chern_next(j: u32, prev: &[FormalClass], a: u64) -> Result<FormalClass> {
    if j < 1 {
        return Err(Error::InvalidRange {
            reason: "chern step needs degree j >= 1".to_owned(),
        });
    }
    let depth = match prev.first() {
        Some(class) => class.depth(),
        None => return Err(window_error(j, 0, "empty window".to_owned())),
    };
    if prev.len() < (j + 1) as usize {
        return Err(window_error(
            j,
            depth,
            format!("only degrees 1..={}", prev.len()),
        ));
    }
    for (slot, class) in prev.iter().take((j + 1) as usize).enumerate() {
        let degree = slot as u32 + 1;
        if class.depth() != depth || class.codimension() != degree {
            return Err(window_error(
                j,
                depth,
                format!(
                    "slot {slot} holds depth {} codim {}, want depth {depth} codim {degree}",
                    class.depth(),
                    class.codimension()
                ),
            ));
        }
    }

    let weights = signed_bernoulli_weights(j);
    let mut out = FormalClass::zero(depth + 1, j);
    for m in 0..=j {
        let w = &weights[m as usize];
        if w.is_zero() {
            continue;
        }
        // The window stops at degree 1: ch_0 never enters the sum.
        debug_assert!(j + 1 - m >= 1);
        let source = &prev[(j - m) as usize];
        for (term, coefficient) in source.terms() {
            let (next, multiplier) = pushforward_term(term, a, m)?;
            out.add_term(next, w * coefficient * multiplier);
        }
    }
    out.add_term(
        BasisTerm::pure(depth + 1, j),
        -Rational::from(factorial(j)).recip(),
    );
    Ok(out)
}

/// A chain description: how many families are stacked, and the step degree
/// `a_i` each pushforward multiplies in.
///
/// The first step never consumes a polarization power on ambient classes,
/// so only degrees `a_2..a_i` are recorded; a chain of length `i` carries
/// `i - 1` of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainConfig {
    length: u32,
    step_degrees: Vec<u64>,
}

impl ChainConfig {
    pub fn new(length: u32, step_degrees: Vec<u64>) -> Result<Self> {
        if length < 1 {
            return Err(Error::InvalidChain {
                reason: "chain length must be >= 1".to_owned(),
            });
        }
        if step_degrees.len() != (length - 1) as usize {
            return Err(Error::InvalidChain {
                reason: format!(
                    "chain of length {length} needs {} step degrees, got {}",
                    length - 1,
                    step_degrees.len()
                ),
            });
        }
        if step_degrees.iter().any(|&a| a == 0) {
            return Err(Error::InvalidChain {
                reason: "step degrees must be >= 1".to_owned(),
            });
        }
        Ok(ChainConfig {
            length,
            step_degrees,
        })
    }

    /// Chain of the given length with every step degree 1.
    pub fn uniform(length: u32) -> Result<Self> {
        if length < 1 {
            return Err(Error::InvalidChain {
                reason: "chain length must be >= 1".to_owned(),
            });
        }
        ChainConfig::new(length, vec![1; (length - 1) as usize])
    }

    /// Chain inferred from its step degrees: `n` degrees give length `n+1`.
    pub fn from_step_degrees(step_degrees: Vec<u64>) -> Result<Self> {
        let length = step_degrees.len() as u32 + 1;
        ChainConfig::new(length, step_degrees)
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn step_degrees(&self) -> &[u64] {
        &self.step_degrees
    }

    fn degree_for_step(&self, depth: u32) -> u64 {
        if depth <= 1 {
            1
        } else {
            self.step_degrees[(depth - 2) as usize]
        }
    }
}

/// Expands `ch_j` of the last family in the chain over basis terms.
///
/// Iterates [`chern_next`] from the ambient classes, carrying the
/// triangular window `ch_1..ch_{j + length - d}` at each depth `d`.
pub fn expand_chain(cfg: &ChainConfig, j: u32) -> Result<FormalClass> {
    if j < 1 {
        return Err(Error::InvalidRange {
            reason: "expansion needs degree j >= 1".to_owned(),
        });
    }
    let mut window: Vec<FormalClass> = (1..=j + cfg.length())
        .map(FormalClass::ambient_chern)
        .collect();
    for depth in 1..=cfg.length() {
        let a = cfg.degree_for_step(depth);
        let top = j + cfg.length() - depth;
        window = (1..=top)
            .map(|degree| chern_next(degree, &window, a))
            .collect::<Result<_>>()?;
    }
    Ok(window.pop().expect("window holds degrees 1..=j"))
}

/// Evaluated coefficient of `c1(L_i)` in the degree-1 expansion when the
/// contracted Chern factor is replaced by the chain's base degree:
/// `-i + (d1 + 2)/(i + 1)`.
pub fn c1_coefficient(i: u32, d1: u64) -> Rational {
    assert!(i >= 1, "chain depth must be >= 1");
    -Rational::from(i) + Rational::from(d1 + 2) / Rational::from(i + 1)
}

/// Evaluated coefficient of `c1(L_i)^2` in the degree-2 expansion:
/// `-i/2 + i(d1 + 2) / (2(i + 1)(i + 2))`.
pub fn ch2_coefficient(i: u32, d1: u64) -> Rational {
    assert!(i >= 1, "chain depth must be >= 1");
    let i_rat = Rational::from(i);
    let half = Rational::new(1, 2);
    let denominator = Rational::from(2u32) * Rational::from(i + 1) * Rational::from(i + 2);
    -&i_rat * &half + i_rat * Rational::from(d1 + 2) / denominator
}
