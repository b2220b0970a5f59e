//! Leveled quotient diagrams and the signed crossing tally η̃.
//!
//! A `LeveledQuotient` is the combinatorial content of a pseudo-fundamental
//! region: a cyclic sequence of arcs, an integer level per arc, a jump in
//! `{+1, -1, 0}` between consecutive arcs recording passage through the axis
//! half-plane, and signed crossings between arcs.  Each crossing is tallied
//! at the index difference `level(over) - level(under)`; the resulting map
//! `i ↦ c_i` must be symmetric (`c_i = c_{-i}`), which is how transcription
//! errors surface.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Sign of a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        })
    }
}

/// A signed crossing between two arcs of the leveled diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeveledCrossing {
    pub sign: Sign,
    pub over: String,
    pub under: String,
}

/// The leveled quotient-diagram data: arcs in cyclic order, levels, jumps,
/// and signed crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeveledQuotient {
    arcs: Vec<String>,
    levels: BTreeMap<String, i64>,
    jumps: Vec<i64>,
    crossings: Vec<LeveledCrossing>,
}

/// The symmetric tally `i ↦ c_i` of crossing signs by index difference.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EtaTilde {
    coeffs: BTreeMap<i64, i64>,
}

/// Validation errors for leveled quotient data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientError {
    /// Jumps do not sum to zero around the cycle, i.e. `lk(O, L) != 0`.
    NonzeroHolonomy { sum: i64 },
    /// An explicit level contradicts the level reconstructed from jumps.
    JumpMismatch { arc: String, explicit: i64, reconstructed: i64 },
    /// A jump value outside `{+1, -1, 0}`.
    BadJump { arc: String, jump: i64 },
    /// A crossing references an arc that is not part of the cycle.
    UnknownArc { arc: String },
    /// An arc id occurs twice in the cycle.
    DuplicateArc { arc: String },
    /// The diagram has no arcs at all.
    Empty,
    /// The crossing tally violates `c_i = c_{-i}`.
    AsymmetricTally { index: i64, c_pos: i64, c_neg: i64 },
}

impl fmt::Display for QuotientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientError::NonzeroHolonomy { sum } => {
                write!(f, "jumps sum to {sum}, expected 0 (lk(O, L) must vanish)")
            }
            QuotientError::JumpMismatch { arc, explicit, reconstructed } => write!(
                f,
                "arc {arc}: explicit level {explicit} contradicts level {reconstructed} reconstructed from jumps"
            ),
            QuotientError::BadJump { arc, jump } => {
                write!(f, "arc {arc}: jump {jump} is not one of +1, -1, 0")
            }
            QuotientError::UnknownArc { arc } => write!(f, "crossing references unknown arc {arc}"),
            QuotientError::DuplicateArc { arc } => write!(f, "arc {arc} declared twice"),
            QuotientError::Empty => write!(f, "diagram has no arcs"),
            QuotientError::AsymmetricTally { index, c_pos, c_neg } => write!(
                f,
                "tally is not symmetric: c_{index} = {c_pos} but c_-{index} = {c_neg}"
            ),
        }
    }
}

/// Reconstructs the level map from the first arc's level and the jump
/// sequence. `jumps[i]` is the passage between arc `i` and arc `i+1`
/// (cyclically), so `level(arc_{i+1}) = level(arc_i) + jumps[i]`.
pub fn assign_levels(
    arcs: &[String],
    first_level: i64,
    jumps: &[i64],
) -> Result<BTreeMap<String, i64>, QuotientError> {
    let sum: i64 = jumps.iter().sum();
    if sum != 0 {
        return Err(QuotientError::NonzeroHolonomy { sum });
    }
    let mut levels = BTreeMap::new();
    let mut level = first_level;
    for (arc, &jump) in arcs.iter().zip(jumps.iter()) {
        levels.insert(arc.clone(), level);
        level += jump;
    }
    Ok(levels)
}

impl LeveledQuotient {
    /// Builds and validates a leveled quotient.
    ///
    /// `explicit_levels` must contain the first arc; other entries are
    /// optional and are cross-checked against the reconstruction from jumps.
    /// `jumps` has one entry per arc (passage to the next arc, cyclically).
    pub fn new(
        arcs: Vec<String>,
        explicit_levels: &BTreeMap<String, i64>,
        jumps: Vec<i64>,
        crossings: Vec<LeveledCrossing>,
    ) -> Result<Self, QuotientError> {
        if arcs.is_empty() {
            return Err(QuotientError::Empty);
        }
        let mut seen = BTreeMap::new();
        for arc in &arcs {
            if seen.insert(arc.clone(), ()).is_some() {
                return Err(QuotientError::DuplicateArc { arc: arc.clone() });
            }
        }
        for (arc, &jump) in arcs.iter().zip(jumps.iter()) {
            if !(-1..=1).contains(&jump) {
                return Err(QuotientError::BadJump { arc: arc.clone(), jump });
            }
        }
        let first_level = explicit_levels.get(&arcs[0]).copied().unwrap_or(0);
        let levels = assign_levels(&arcs, first_level, &jumps)?;
        for (arc, &explicit) in explicit_levels {
            if !levels.contains_key(arc) {
                return Err(QuotientError::UnknownArc { arc: arc.clone() });
            }
            let reconstructed = levels[arc];
            if explicit != reconstructed {
                return Err(QuotientError::JumpMismatch {
                    arc: arc.clone(),
                    explicit,
                    reconstructed,
                });
            }
        }
        for c in &crossings {
            for arc in [&c.over, &c.under] {
                if !levels.contains_key(arc) {
                    return Err(QuotientError::UnknownArc { arc: arc.clone() });
                }
            }
        }
        Ok(Self { arcs, levels, jumps, crossings })
    }

    /// Arc ids in cyclic order.
    pub fn arcs(&self) -> &[String] {
        &self.arcs
    }

    /// Level of an arc.
    pub fn level(&self, arc: &str) -> Option<i64> {
        self.levels.get(arc).copied()
    }

    /// Jump following each arc, in cycle order.
    pub fn jumps(&self) -> &[i64] {
        &self.jumps
    }

    pub fn crossings(&self) -> &[LeveledCrossing] {
        &self.crossings
    }

    /// Index difference `level(over) - level(under)` of a crossing.
    pub fn index_difference(&self, c: &LeveledCrossing) -> i64 {
        self.levels[&c.over] - self.levels[&c.under]
    }

    /// Largest `|level(over) - level(under)|` over all crossings.
    pub fn max_level_difference(&self) -> i64 {
        self.crossings
            .iter()
            .map(|c| self.index_difference(c).abs())
            .max()
            .unwrap_or(0)
    }

    /// Tallies crossing signs by index difference and checks the symmetry
    /// `c_i = c_{-i}`.
    pub fn tally_eta_tilde(&self) -> Result<EtaTilde, QuotientError> {
        let mut coeffs: BTreeMap<i64, i64> = BTreeMap::new();
        for c in &self.crossings {
            let d = self.index_difference(c);
            *coeffs.entry(d).or_insert(0) += c.sign.value();
        }
        coeffs.retain(|_, v| *v != 0);
        let tilde = EtaTilde { coeffs };
        tilde.check_symmetric()?;
        Ok(tilde)
    }
}

impl EtaTilde {
    /// Builds an η̃ from `(index, coefficient)` pairs, pruning zeros and
    /// checking symmetry.
    pub fn new<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Result<Self, QuotientError> {
        let mut coeffs: BTreeMap<i64, i64> = BTreeMap::new();
        for (i, c) in pairs {
            *coeffs.entry(i).or_insert(0) += c;
        }
        coeffs.retain(|_, v| *v != 0);
        let tilde = Self { coeffs };
        tilde.check_symmetric()?;
        Ok(tilde)
    }

    fn check_symmetric(&self) -> Result<(), QuotientError> {
        for (&i, &c) in &self.coeffs {
            if i <= 0 {
                continue;
            }
            let mirror = self.coeff(-i);
            if mirror != c {
                return Err(QuotientError::AsymmetricTally { index: i, c_pos: c, c_neg: mirror });
            }
        }
        for (&i, &c) in &self.coeffs {
            if i < 0 && self.coeff(-i) != c {
                return Err(QuotientError::AsymmetricTally {
                    index: -i,
                    c_pos: self.coeff(-i),
                    c_neg: c,
                });
            }
        }
        Ok(())
    }

    /// Coefficient `c_i` (zero if absent).
    pub fn coeff(&self, i: i64) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    /// Nonzero coefficients in increasing index order.
    pub fn coeffs(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&i, &c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest `|i|` with `c_i != 0`.
    pub fn support_radius(&self) -> i64 {
        self.coeffs.keys().map(|i| i.abs()).max().unwrap_or(0)
    }
}
