//! Independent verification of η from its definition: linking numbers of the
//! lifts of the quotient longitude in the infinite cyclic cover of the axis
//! complement.
//!
//! The base leveled diagram is cut along the axis half-plane and `2N+1`
//! shifted copies are laid out and reconnected.  Each lifted longitude runs
//! along two adjacent window sheets (the two sides of the lifted band), so a
//! base crossing whose arcs sit at levels `u` over `v` produces, per
//! translate pair meeting in a common window, four cover crossings with the
//! alternating sign pattern of a band crossing.  The linking numbers
//! `lk(pushoff[0], lift[i])` computed from the resulting diagram equal the
//! η coefficients for `|i| ≥ 2`; the `i = 0, ±1` coefficients are pinned by
//! the exact identities `η(1) = η(-1) = 0` (the total lift of a preferred
//! longitude has zero linking with the full preimage, in both parities),
//! which is also how the bracket normalization fixes them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::ToPrimitive;

use crate::diagram::{Component, Crossing, LinkDiagram};
use crate::eta::compute_eta;
use crate::quotient::{LeveledQuotient, QuotientError, Sign};

/// Errors from cover construction and the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverError {
    /// The truncation depth does not cover the level differences (or the η
    /// support) of the input.
    DepthTooSmall { required: i64, given: i64 },
    /// The underlying leveled diagram failed validation (asymmetric tally).
    Quotient(QuotientError),
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverError::DepthTooSmall { required, given } => {
                write!(f, "depth {given} too small, need at least {required}")
            }
            CoverError::Quotient(e) => write!(f, "{e}"),
        }
    }
}

impl From<QuotientError> for CoverError {
    fn from(e: QuotientError) -> Self {
        CoverError::Quotient(e)
    }
}

/// Where a cover crossing came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCrossing {
    /// Index into the base diagram's crossing list.
    pub base: usize,
    /// Lift index of the over strand.
    pub over_lift: i64,
    /// Lift index of the under strand.
    pub under_lift: i64,
    /// Whether this is a pushoff duplicate of a lift[0] incidence.
    pub pushoff: bool,
}

/// A truncated diagram of the lifts `lift[-N] ... lift[N]` plus the parallel
/// copy `pushoff[0]` of `lift[0]`.
#[derive(Clone, Debug)]
pub struct TruncatedCover {
    pub depth: i64,
    pub diagram: LinkDiagram,
    /// One entry per crossing of `diagram`, in order.
    pub provenance: Vec<CoverCrossing>,
    /// Count of crossing copies discarded because a participating lift fell
    /// outside the truncation range.
    pub clipped: usize,
}

/// Upper bound for the support radius of η computable from this input:
/// one more than the largest level difference at a crossing.
pub fn support_radius_bound(q: &LeveledQuotient) -> i64 {
    let d = q.max_level_difference();
    if q.crossings().is_empty() {
        0
    } else {
        d + 1
    }
}

/// The depth the CLI uses when none is given: support radius plus two, so
/// the stability margin is observable.
pub fn default_depth(q: &LeveledQuotient) -> i64 {
    support_radius_bound(q) + 2
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Comp {
    Lift(i64),
    Pushoff,
}

impl Comp {
    fn name(self) -> String {
        match self {
            Comp::Lift(k) => format!("lift[{k}]"),
            Comp::Pushoff => String::from("pushoff[0]"),
        }
    }
}

/// A strand of the cover before arc subdivision: one side of one base arc in
/// one component. `back` marks the reversed side running on the next window
/// sheet.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Strand {
    comp: Comp,
    pos: usize,
    back: bool,
}

struct RawCrossing {
    sign: Sign,
    over: Strand,
    under: Strand,
    info: CoverCrossing,
}

/// Builds the truncated cover diagram.
///
/// Requires `N ≥ max |level difference|` over the crossings of `q`.
pub fn build_truncated_cover(
    q: &LeveledQuotient,
    depth: i64,
) -> Result<TruncatedCover, CoverError> {
    let max_diff = q.max_level_difference();
    if depth < max_diff || depth < 1 {
        return Err(CoverError::DepthTooSmall { required: max_diff.max(1), given: depth });
    }

    let arcs = q.arcs();
    let pos_of: BTreeMap<&str, usize> =
        arcs.iter().enumerate().map(|(i, a)| (a.as_str(), i)).collect();
    let level_of = |pos: usize| q.level(&arcs[pos]).expect("arc has a level");

    let mut raw: Vec<RawCrossing> = Vec::new();
    let mut clipped = 0usize;

    for (bi, c) in q.crossings().iter().enumerate() {
        let po = pos_of[c.over.as_str()];
        let pu = pos_of[c.under.as_str()];
        let u = level_of(po);
        let v = level_of(pu);
        for over_back in [false, true] {
            for under_back in [false, true] {
                // Window sheets must coincide: u + over_back + k1 = v + under_back + k2.
                let offset = (u + over_back as i64) - (v + under_back as i64);
                // Matching sides of the band keep the base sign reversed;
                // opposite sides restore it (one strand runs backwards).
                let sign = if over_back == under_back { c.sign.flip() } else { c.sign };
                for k1 in -depth..=depth {
                    let k2 = k1 + offset;
                    if k2.abs() > depth {
                        clipped += 1;
                        continue;
                    }
                    raw.push(RawCrossing {
                        sign,
                        over: Strand { comp: Comp::Lift(k1), pos: po, back: over_back },
                        under: Strand { comp: Comp::Lift(k2), pos: pu, back: under_back },
                        info: CoverCrossing {
                            base: bi,
                            over_lift: k1,
                            under_lift: k2,
                            pushoff: false,
                        },
                    });
                }
            }
        }
    }

    // pushoff[0] repeats every crossing pattern lift[0] has with the other
    // lifts, so its linking numbers with lift[i], i != 0, agree with
    // lift[0]'s.
    let mut pushoff_raw: Vec<RawCrossing> = Vec::new();
    for rc in &raw {
        let over0 = rc.over.comp == Comp::Lift(0);
        let under0 = rc.under.comp == Comp::Lift(0);
        if over0 && !under0 {
            pushoff_raw.push(RawCrossing {
                sign: rc.sign,
                over: Strand { comp: Comp::Pushoff, ..rc.over },
                under: rc.under,
                info: CoverCrossing { pushoff: true, ..rc.info.clone() },
            });
        } else if under0 && !over0 {
            pushoff_raw.push(RawCrossing {
                sign: rc.sign,
                over: rc.over,
                under: Strand { comp: Comp::Pushoff, ..rc.under },
                info: CoverCrossing { pushoff: true, ..rc.info.clone() },
            });
        }
    }
    raw.extend(pushoff_raw);

    // Subdivide each component's strand cycle into arcs at under incidences.
    let m = arcs.len();
    let comps: Vec<Comp> =
        (-depth..=depth).map(Comp::Lift).chain([Comp::Pushoff]).collect();

    let mut under_events: BTreeMap<Strand, Vec<usize>> = BTreeMap::new();
    for (ci, rc) in raw.iter().enumerate() {
        under_events.entry(rc.under).or_default().push(ci);
    }

    let cycle_of = |comp: Comp| -> Vec<Strand> {
        let fwd = (0..m).map(move |pos| Strand { comp, pos, back: false });
        let bwd = (0..m).rev().map(move |pos| Strand { comp, pos, back: true });
        fwd.chain(bwd).collect()
    };

    let mut under_in_arc: BTreeMap<usize, String> = BTreeMap::new();
    let mut under_out_arc: BTreeMap<usize, String> = BTreeMap::new();
    let mut over_arc_of_strand: BTreeMap<Strand, String> = BTreeMap::new();
    let mut components: Vec<Component> = Vec::new();

    for comp in comps {
        let cycle = cycle_of(comp);
        let events: Vec<usize> = cycle
            .iter()
            .flat_map(|s| under_events.get(s).cloned().unwrap_or_default())
            .collect();
        let name = comp.name();
        if events.is_empty() {
            let arc = format!("{name}:0");
            for s in cycle {
                over_arc_of_strand.insert(s, arc.clone());
            }
            components.push(Component { name, arcs: alloc::vec![arc], unknot: false });
            continue;
        }
        let p = events.len();
        let arc_id = |e: usize| format!("{name}:{e}");
        for (e, &ci) in events.iter().enumerate() {
            under_out_arc.insert(ci, arc_id(e));
            under_in_arc.insert(ci, arc_id((e + p - 1) % p));
        }
        // The arc entering the walk start is the one opened by the last event.
        let mut current = arc_id(p - 1);
        let mut event_iter = events.iter().enumerate();
        let mut next_event: Option<(usize, usize)> = event_iter.next().map(|(e, &ci)| (e, ci));
        for s in cycle {
            over_arc_of_strand.insert(s, current.clone());
            let mut count = under_events.get(&s).map(Vec::len).unwrap_or(0);
            while count > 0 {
                let (e, _ci) = next_event.expect("event counts agree");
                current = arc_id(e);
                next_event = event_iter.next().map(|(e2, &ci2)| (e2, ci2));
                count -= 1;
            }
        }
        let arcs = (0..p).map(arc_id).collect();
        components.push(Component { name, arcs, unknot: false });
    }

    let mut crossings = Vec::with_capacity(raw.len());
    let mut provenance = Vec::with_capacity(raw.len());
    for (ci, rc) in raw.iter().enumerate() {
        let over = over_arc_of_strand[&rc.over].clone();
        crossings.push(Crossing {
            sign: rc.sign,
            over_in: over.clone(),
            over_out: over,
            under_in: under_in_arc[&ci].clone(),
            under_out: under_out_arc[&ci].clone(),
        });
        provenance.push(rc.info.clone());
    }

    let diagram = LinkDiagram::new(components, crossings)
        .expect("generated cover diagram satisfies the arc invariants");
    Ok(TruncatedCover { depth, diagram, provenance, clipped })
}

/// Oracle coefficients of η, indexed by the covering translate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCoefficients {
    pub depth: i64,
    /// `a_i` for `1 ≤ |i| ≤ depth`; zeros are kept out.
    pub by_index: BTreeMap<i64, i64>,
    /// `a_0`, pinned by `Σ_i a_i = lk(L', L) = 0`.
    pub zero: i64,
}

impl OracleCoefficients {
    pub fn coeff(&self, i: i64) -> i64 {
        if i == 0 {
            self.zero
        } else {
            self.by_index.get(&i).copied().unwrap_or(0)
        }
    }
}

/// Computes η coefficients from the truncated cover: `lk(pushoff[0],
/// lift[i])` for `|i| ≥ 2`, with `a_{±1}` and `a_0` pinned by the vanishing
/// of η at `-1` and `1`. Needs `depth` at least one more than the η support
/// radius so the whole support is visible.
pub fn oracle_coefficients(
    q: &LeveledQuotient,
    depth: i64,
) -> Result<OracleCoefficients, CoverError> {
    let required = support_radius_bound(q) + 1;
    if depth < required {
        return Err(CoverError::DepthTooSmall { required, given: depth });
    }
    let cover = build_truncated_cover(q, depth)?;
    let mut by_index: BTreeMap<i64, i64> = BTreeMap::new();
    for i in (-depth..=depth).filter(|&i| i.abs() >= 2) {
        let lk = cover
            .diagram
            .linking_number("pushoff[0]", &format!("lift[{i}]"))
            .expect("cover components exist and close up");
        if lk != 0 {
            by_index.insert(i, lk);
        }
    }
    // η(1) = η(-1) = 0 pin the remaining coefficients: the odd-index sum and
    // the weighted even-index sum both vanish.
    let odd_tail: i64 = by_index
        .iter()
        .filter(|(&i, _)| i >= 3 && i % 2 != 0)
        .map(|(_, &a)| a)
        .sum();
    let even_tail: i64 = by_index
        .iter()
        .filter(|(&i, _)| i >= 2 && i % 2 == 0)
        .map(|(_, &a)| a)
        .sum();
    let a1 = -odd_tail;
    let a0 = -2 * even_tail;
    if a1 != 0 {
        by_index.insert(1, a1);
        by_index.insert(-1, a1);
    }
    Ok(OracleCoefficients { depth, by_index, zero: a0 })
}

/// Result of comparing the oracle against the substitution pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub depth: i64,
    pub oracle: BTreeMap<i64, i64>,
    pub algorithm: BTreeMap<i64, i64>,
    /// Indices where the two computations disagree; empty means `match`.
    pub mismatches: Vec<i64>,
}

impl CrossCheck {
    pub fn is_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Runs both computations of η and compares them coefficient by coefficient.
pub fn cross_check(q: &LeveledQuotient, depth: i64) -> Result<CrossCheck, CoverError> {
    let oracle = oracle_coefficients(q, depth)?;
    let eta = compute_eta(q)?;

    let mut oracle_map: BTreeMap<i64, i64> = oracle.by_index.clone();
    if oracle.zero != 0 {
        oracle_map.insert(0, oracle.zero);
    }
    let mut algorithm: BTreeMap<i64, i64> = BTreeMap::new();
    for (e, c) in eta.terms() {
        let c = c.to_i64().expect("eta coefficient fits in i64");
        algorithm.insert(e, c);
    }
    let mut mismatches: Vec<i64> = Vec::new();
    let indices: alloc::collections::BTreeSet<i64> =
        oracle_map.keys().chain(algorithm.keys()).copied().collect();
    for i in indices {
        let a = oracle_map.get(&i).copied().unwrap_or(0);
        let b = algorithm.get(&i).copied().unwrap_or(0);
        if a != b {
            mismatches.push(i);
        }
    }
    Ok(CrossCheck { depth, oracle: oracle_map, algorithm, mismatches })
}
