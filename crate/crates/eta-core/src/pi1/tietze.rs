//! Tietze simplification with a replayable move log, and the sound-only
//! triviality certifier.
//!
//! The certifier mechanizes one proof shape: simplify, then accept only if
//! the presentation is empty, or if every pair of surviving generators has
//! its commutator among the relators *and* the abelianization is trivial —
//! an abelian group equal to its own trivial H_1. Anything else is
//! `Inconclusive`, never "nontrivial".

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::{GroupPresentation, Word};

/// Default cap multiplier for relator growth during substitution.
pub const LENGTH_CAP_FACTOR: usize = 4;
/// Default move budget.
pub const DEFAULT_BUDGET: usize = 10_000;

/// One logged simplification step. Indices refer to the relator list at the
/// moment the move is applied, so a log replays deterministically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// Replace relator `relator` by its cyclic reduction.
    CyclicReduce { relator: usize },
    /// Remove an empty relator.
    RemoveTrivial { relator: usize },
    /// Remove relator `relator`, a cyclic rotate/invert duplicate of `keep`.
    RemoveDuplicate { relator: usize, keep: usize },
    /// In relator `target`, the `take` letters at `at` equal the prefix of
    /// rotation `rotation` of relator `using` (inverted first if `inverted`);
    /// they are replaced by the inverse of the rotation's remainder.
    SubstituteSubword {
        target: usize,
        using: usize,
        inverted: bool,
        rotation: usize,
        at: usize,
        take: usize,
    },
    /// Replace relator `target` by the reduced product
    /// `rotate(target, target_rotation) * rotate(using^±, using_rotation)`,
    /// which must be strictly shorter than `target`.
    ReplaceByProduct {
        target: usize,
        target_rotation: usize,
        using: usize,
        using_inverted: bool,
        using_rotation: usize,
    },
    /// Remove generator `gen`, which occurs exactly once in relator
    /// `relator`; solve that relator for it and substitute everywhere else.
    EliminateGenerator { gen: String, relator: usize },
    /// Detection only: relator `relator` is the commutator of `a` and `b`.
    CommutatorFound { a: String, b: String, relator: usize },
    /// Detection only: the abelianization has these invariant factors.
    AbelianizationComputed { factors: Vec<BigInt> },
}

/// A failed certificate replay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayError {
    pub step: usize,
    pub reason: String,
}

impl fmt::Display for ReplayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "replay failed at step {}: {}", self.step, self.reason)
    }
}

fn replay_err(step: usize, reason: impl Into<String>) -> ReplayError {
    ReplayError { step, reason: reason.into() }
}

/// Applies one move to a presentation, verifying its side conditions.
pub fn apply_move(p: &mut GroupPresentation, mv: &Move, step: usize) -> Result<(), ReplayError> {
    match mv {
        Move::CyclicReduce { relator } => {
            let r = p
                .relators
                .get(*relator)
                .ok_or_else(|| replay_err(step, "relator index out of range"))?;
            p.relators[*relator] = r.cyclic_reduce();
            Ok(())
        }
        Move::RemoveTrivial { relator } => {
            let r = p
                .relators
                .get(*relator)
                .ok_or_else(|| replay_err(step, "relator index out of range"))?;
            if !r.is_empty() {
                return Err(replay_err(step, "relator is not trivial"));
            }
            p.relators.remove(*relator);
            Ok(())
        }
        Move::RemoveDuplicate { relator, keep } => {
            let a = p
                .relators
                .get(*relator)
                .ok_or_else(|| replay_err(step, "relator index out of range"))?;
            let b = p
                .relators
                .get(*keep)
                .ok_or_else(|| replay_err(step, "keep index out of range"))?;
            if a.cyclic_canonical() != b.cyclic_canonical() {
                return Err(replay_err(step, "relators are not cyclic duplicates"));
            }
            p.relators.remove(*relator);
            Ok(())
        }
        Move::SubstituteSubword { target, using, inverted, rotation, at, take } => {
            if *target == *using {
                return Err(replay_err(step, "cannot substitute a relator into itself"));
            }
            let rho_src = p
                .relators
                .get(*using)
                .ok_or_else(|| replay_err(step, "using index out of range"))?;
            let rho = if *inverted { rho_src.inverse() } else { rho_src.clone() };
            let rho = rho.rotate(*rotation);
            let t = p
                .relators
                .get(*target)
                .ok_or_else(|| replay_err(step, "target index out of range"))?
                .clone();
            if *at + *take > t.len() || *take > rho.len() {
                return Err(replay_err(step, "substitution window out of range"));
            }
            if t.letters()[*at..*at + *take] != rho.letters()[..*take] {
                return Err(replay_err(step, "substitution window does not match"));
            }
            let prefix = Word::new(t.letters()[..*at].to_vec());
            let suffix = Word::new(t.letters()[*at + *take..].to_vec());
            let remainder = Word::new(rho.letters()[*take..].to_vec());
            p.relators[*target] = prefix.concat(&remainder.inverse()).concat(&suffix);
            Ok(())
        }
        Move::EliminateGenerator { gen, relator } => {
            let def = elimination_definition(p, gen, *relator)
                .ok_or_else(|| replay_err(step, "generator does not occur exactly once"))?;
            let gi = p
                .gens
                .iter()
                .position(|g| g == gen)
                .ok_or_else(|| replay_err(step, "generator not present"))?;
            p.gens.remove(gi);
            p.relators.remove(*relator);
            for w in &mut p.relators {
                *w = w.substitute(gen, &def);
            }
            Ok(())
        }
        Move::CommutatorFound { a, b, relator } => {
            let r = p
                .relators
                .get(*relator)
                .ok_or_else(|| replay_err(step, "relator index out of range"))?;
            if r.cyclic_canonical() != Word::commutator(a, b).cyclic_canonical() {
                return Err(replay_err(step, "relator is not the claimed commutator"));
            }
            Ok(())
        }
        Move::AbelianizationComputed { factors } => {
            if p.abelianization() != *factors {
                return Err(replay_err(step, "abelianization factors differ"));
            }
            Ok(())
        }
    }
}

/// Recognizes a literal commutator relator `[a, b]` up to rotation and
/// inversion, returning the participating generators.
fn commutator_pair(r: &Word) -> Option<(String, String)> {
    if r.len() != 4 {
        return None;
    }
    let mut gens: Vec<&str> = r.letters().iter().map(|l| l.gen.as_str()).collect();
    gens.sort_unstable();
    gens.dedup();
    if gens.len() != 2 {
        return None;
    }
    let (a, b) = (gens[0], gens[1]);
    (r.cyclic_canonical() == Word::commutator(a, b).cyclic_canonical())
        .then(|| (String::from(a), String::from(b)))
}

/// Solves a relator for a generator occurring exactly once: rotating
/// `r = g^e T` gives `g = T^{-1}` (e = +1) or `g = T` (e = -1). Returns the
/// definition word, which cannot contain `gen`.
fn solve_for(r: &Word, gen: &str) -> Option<Word> {
    if r.occurrences(gen) != 1 {
        return None;
    }
    let pos = r.letters().iter().position(|l| l.gen == gen)?;
    let rotated = r.rotate(pos);
    let head = &rotated.letters()[0];
    let tail = Word::new(rotated.letters()[1..].to_vec());
    Some(if head.inv { tail } else { tail.inverse() })
}

/// One strictly shortening rewrite of `word` by some relator: a stretch of
/// more than half of a rotated relator (or its inverse) is replaced by the
/// inverse of the remainder. Relators failing `usable` are skipped. Returns
/// the rewrite parameters and the result, deterministically preferring the
/// biggest gain, then the smallest (relator, inverted, rotation, position).
fn find_word_shortening(
    word: &Word,
    relators: &[Word],
    usable: impl Fn(usize, &Word) -> bool,
) -> Option<(usize, bool, usize, usize, usize, Word)> {
    let mut best: Option<(usize, usize, bool, usize, usize, usize)> = None;
    for (using, u) in relators.iter().enumerate() {
        if !usable(using, u) {
            continue;
        }
        let ulen = u.len();
        if ulen == 0 || ulen > 2 * word.len() {
            continue;
        }
        for inverted in [false, true] {
            let base = if inverted { u.inverse() } else { u.clone() };
            for rotation in 0..ulen {
                let rho = base.rotate(rotation);
                if rho.len() != ulen {
                    continue;
                }
                for take in (ulen / 2 + 1..=ulen.min(word.len())).rev() {
                    let gain = 2 * take - ulen;
                    if best.map(|(g, ..)| gain <= g).unwrap_or(false) {
                        break;
                    }
                    if let Some(at) = find_subword(word, rho.letters(), take) {
                        best = Some((gain, using, inverted, rotation, at, take));
                        break;
                    }
                }
            }
        }
    }
    let (_gain, using, inverted, rotation, at, take) = best?;
    let base = if inverted { relators[using].inverse() } else { relators[using].clone() };
    let rho = base.rotate(rotation);
    let prefix = Word::new(word.letters()[..at].to_vec());
    let suffix = Word::new(word.letters()[at + take..].to_vec());
    let remainder = Word::new(rho.letters()[take..].to_vec());
    let result = prefix.concat(&remainder.inverse()).concat(&suffix);
    Some((using, inverted, rotation, at, take, result))
}

/// The definition word used when eliminating `gen` through `relator`:
/// solve the relator for the generator, then shorten the result to a
/// fixpoint against the relators not involving the generator. Each
/// shortening step multiplies by a conjugate of a relator, so the reduced
/// word still equals the generator in the presented group; this is what
/// lets conjugates collapse through an available commutator instead of
/// ballooning under substitution.
fn elimination_definition(p: &GroupPresentation, gen: &str, relator: usize) -> Option<Word> {
    let r = p.relators.get(relator)?;
    let mut def = solve_for(r, gen)?;
    loop {
        let step = find_word_shortening(&def, &p.relators, |_, u| u.occurrences(gen) == 0);
        match step {
            Some((.., next)) => def = next,
            None => return Some(def),
        }
    }
}

/// Result of a simplification run.
#[derive(Clone, Debug)]
pub struct SimplifyOutcome {
    pub presentation: GroupPresentation,
    pub moves: Vec<Move>,
    pub budget_exhausted: bool,
}

struct Engine {
    p: GroupPresentation,
    moves: Vec<Move>,
    budget: usize,
    cap: usize,
    exhausted: bool,
}

impl Engine {
    fn spent(&self) -> usize {
        self.moves.len()
    }

    fn push(&mut self, mv: Move) -> bool {
        if self.spent() >= self.budget {
            self.exhausted = true;
            return false;
        }
        let step = self.moves.len();
        apply_move(&mut self.p, &mv, step).expect("engine only emits applicable moves");
        self.moves.push(mv);
        true
    }

    /// One pass of cyclic reduction, trivial-relator and duplicate removal.
    /// Returns true if anything changed.
    fn normalize(&mut self) -> bool {
        let mut changed = false;
        loop {
            let mut acted = false;
            for i in 0..self.p.relators.len() {
                let r = &self.p.relators[i];
                if r.cyclic_reduce().len() < r.len() {
                    if !self.push(Move::CyclicReduce { relator: i }) {
                        return changed;
                    }
                    acted = true;
                }
            }
            if let Some(i) = self.p.relators.iter().position(Word::is_empty) {
                if !self.push(Move::RemoveTrivial { relator: i }) {
                    return changed;
                }
                changed = true;
                continue;
            }
            let mut dup: Option<(usize, usize)> = None;
            'outer: for i in 0..self.p.relators.len() {
                for j in 0..i {
                    if self.p.relators[i].cyclic_canonical()
                        == self.p.relators[j].cyclic_canonical()
                    {
                        dup = Some((i, j));
                        break 'outer;
                    }
                }
            }
            if let Some((i, j)) = dup {
                if !self.push(Move::RemoveDuplicate { relator: i, keep: j }) {
                    return changed;
                }
                changed = true;
                continue;
            }
            if !acted {
                return changed;
            }
            changed = true;
        }
    }

    /// Best elimination candidate: a generator occurring exactly once in
    /// some relator, ranked by definition length then by substitution cost,
    /// subject to the length cap on every rewritten relator.
    ///
    /// Generators appearing in a literal commutator relator are kept alive
    /// (except for renamings and killers): substituting a long definition
    /// into the commutator would hide the commutativity that the
    /// conjugate-collapsing rewrites and the final certification check
    /// depend on.
    fn try_eliminate(&mut self) -> bool {
        let mut protected: alloc::collections::BTreeSet<String> =
            alloc::collections::BTreeSet::new();
        for r in &self.p.relators {
            if let Some((a, b)) = commutator_pair(r) {
                protected.insert(a);
                protected.insert(b);
            }
        }
        let mut candidates: Vec<(usize, usize, String, usize)> = Vec::new();
        for (i, r) in self.p.relators.iter().enumerate() {
            for l in r.letters() {
                if r.occurrences(&l.gen) == 1 {
                    let def_len = r.len() - 1;
                    if def_len > 1 && protected.contains(&l.gen) {
                        continue;
                    }
                    let cost: usize = self
                        .p
                        .relators
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != i)
                        .map(|(_, w)| w.occurrences(&l.gen) * def_len)
                        .sum();
                    candidates.push((def_len, cost, l.gen.clone(), i));
                }
            }
        }
        // Rank by the reduced definition, which is what substitution will
        // actually insert.
        let mut ranked: Vec<(usize, usize, String, usize)> = Vec::new();
        for (_raw_len, _cost, gen, i) in candidates {
            let def = elimination_definition(&self.p, &gen, i).expect("candidate occurs once");
            let cost: usize = self
                .p
                .relators
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, w)| w.occurrences(&gen) * def.len())
                .sum();
            ranked.push((def.len(), cost, gen, i));
        }
        ranked.sort();
        ranked.dedup();
        for (_def_len, _cost, gen, i) in ranked {
            let def = elimination_definition(&self.p, &gen, i).expect("candidate occurs once");
            let fits = self
                .p
                .relators
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .all(|(_, w)| w.substitute(&gen, &def).len() <= self.cap);
            if fits {
                return self.push(Move::EliminateGenerator { gen, relator: i });
            }
        }
        false
    }

    /// Best strictly shortening subword substitution between two relators.
    fn try_shorten(&mut self) -> bool {
        let mut best: Option<(usize, Move)> = None;
        for target in 0..self.p.relators.len() {
            let t = &self.p.relators[target];
            if t.is_empty() {
                continue;
            }
            if let Some((using, inverted, rotation, at, take, _result)) =
                find_word_shortening(t, &self.p.relators, |idx, _| idx != target)
            {
                let gain = 2 * take - self.p.relators[using].len();
                if best.as_ref().map(|(g, _)| gain > *g).unwrap_or(true) {
                    best = Some((
                        gain,
                        Move::SubstituteSubword { target, using, inverted, rotation, at, take },
                    ));
                }
            }
        }
        match best {
            Some((_, mv)) => self.push(mv),
            None => false,
        }
    }
}

fn find_subword(haystack: &Word, needle: &[super::Letter], take: usize) -> Option<usize> {
    let h = haystack.letters();
    if take > h.len() {
        return None;
    }
    (0..=h.len() - take).find(|&at| h[at..at + take] == needle[..take])
}

/// Simplifies a presentation within the move budget. The relator length cap
/// is `LENGTH_CAP_FACTOR` times the longest input relator.
pub fn tietze_simplify(p: &GroupPresentation, budget: usize) -> SimplifyOutcome {
    let max_len = p.relators.iter().map(Word::len).max().unwrap_or(0);
    let cap = (LENGTH_CAP_FACTOR * max_len).max(8);
    let mut engine = Engine {
        p: p.clone(),
        moves: Vec::new(),
        budget,
        cap,
        exhausted: false,
    };
    loop {
        engine.normalize();
        if engine.exhausted {
            break;
        }
        // Shortening first keeps definitions small before they are
        // substituted around; with a commutator relator in play this is what
        // collapses conjugates step by step.
        if engine.try_shorten() {
            continue;
        }
        if engine.exhausted {
            break;
        }
        if engine.try_eliminate() {
            continue;
        }
        break;
    }
    SimplifyOutcome {
        presentation: engine.p,
        moves: engine.moves,
        budget_exhausted: engine.exhausted,
    }
}

/// A replayable record that a presentation presents the trivial group.
#[derive(Clone, Debug)]
pub struct TrivialityCertificate {
    pub moves: Vec<Move>,
    pub terminal: GroupPresentation,
}

impl TrivialityCertificate {
    /// Replays the move log from `input` and checks it reproduces the
    /// terminal presentation.
    pub fn replay(&self, input: &GroupPresentation) -> Result<GroupPresentation, ReplayError> {
        let mut p = input.clone();
        for (step, mv) in self.moves.iter().enumerate() {
            apply_move(&mut p, mv, step)?;
        }
        if p != self.terminal {
            return Err(replay_err(
                self.moves.len(),
                "terminal presentation differs from certificate",
            ));
        }
        Ok(p)
    }
}

/// Outcome of the certifier: a certificate, or an honest refusal.
#[derive(Clone, Debug)]
pub enum CertifyOutcome {
    Certified(TrivialityCertificate),
    Inconclusive { reason: String, budget_exhausted: bool },
}

impl CertifyOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, CertifyOutcome::Certified(_))
    }
}

/// Attempts to certify that the presented group is trivial.
///
/// Sound by construction: a certificate is issued only when, after
/// simplification, either no generators survive, or every pair of surviving
/// generators has its commutator among the relators and the abelianization
/// is trivial. The converse never holds — failure is reported as
/// `Inconclusive`, not as nontriviality.
pub fn certify_trivial(p: &GroupPresentation, budget: usize) -> CertifyOutcome {
    let SimplifyOutcome { presentation, mut moves, budget_exhausted } =
        tietze_simplify(p, budget);
    if budget_exhausted {
        return CertifyOutcome::Inconclusive {
            reason: String::from("move budget exhausted"),
            budget_exhausted: true,
        };
    }
    if presentation.gens.is_empty() {
        let factors = presentation.abelianization();
        moves.push(Move::AbelianizationComputed { factors });
        return CertifyOutcome::Certified(TrivialityCertificate {
            moves,
            terminal: presentation,
        });
    }
    // Every surviving pair must visibly commute.
    for (i, a) in presentation.gens.iter().enumerate() {
        for b in presentation.gens.iter().skip(i + 1) {
            let want = Word::commutator(a, b).cyclic_canonical();
            let found = presentation
                .relators
                .iter()
                .position(|r| r.cyclic_canonical() == want);
            match found {
                Some(idx) => moves.push(Move::CommutatorFound {
                    a: a.clone(),
                    b: b.clone(),
                    relator: idx,
                }),
                None => {
                    return CertifyOutcome::Inconclusive {
                        reason: alloc::format!("no commutator relator for {a}, {b}"),
                        budget_exhausted: false,
                    }
                }
            }
        }
    }
    let factors = presentation.abelianization();
    if !factors.is_empty() {
        return CertifyOutcome::Inconclusive {
            reason: String::from("abelianization is nontrivial"),
            budget_exhausted: false,
        };
    }
    moves.push(Move::AbelianizationComputed { factors });
    CertifyOutcome::Certified(TrivialityCertificate { moves, terminal: presentation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn pres(gens: &[&str], relators: &[Word]) -> GroupPresentation {
        GroupPresentation::new(
            gens.iter().map(|s| s.to_string()).collect(),
            relators.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn eliminate_redundant_generator() {
        let p = pres(&["x", "y"], &[Word::from_pairs(&[("x", 1), ("y", -1)])]);
        let out = tietze_simplify(&p, DEFAULT_BUDGET);
        assert_eq!(out.presentation.generators().len(), 1);
        assert!(out.presentation.relators().is_empty());
        assert!(!out.budget_exhausted);
    }

    #[test]
    fn free_reduction_collapses() {
        // x x^-1 is already reduced away by Word construction; a cyclically
        // reducible relator y x y^-1 shrinks to x and eliminates x.
        let p = pres(&["x", "y"], &[Word::from_pairs(&[("y", 1), ("x", 1), ("y", -1)])]);
        let out = tietze_simplify(&p, DEFAULT_BUDGET);
        assert_eq!(out.presentation.generators(), &["y".to_string()]);
        assert!(out.presentation.relators().is_empty());
    }

    #[test]
    fn single_generator_killed() {
        let p = pres(&["x"], &[Word::from_pairs(&[("x", 1)])]);
        let out = certify_trivial(&p, DEFAULT_BUDGET);
        assert!(out.is_certified());
        if let CertifyOutcome::Certified(cert) = out {
            let replayed = cert.replay(&p).unwrap();
            assert!(replayed.generators().is_empty());
        }
    }

    #[test]
    fn abelian_rank_two_not_certified() {
        let p = pres(&["x", "y"], &[Word::commutator("x", "y")]);
        let out = certify_trivial(&p, DEFAULT_BUDGET);
        assert!(!out.is_certified());
        if let CertifyOutcome::Inconclusive { reason, .. } = out {
            assert!(reason.contains("abelianization"));
        }
    }

    #[test]
    fn binary_icosahedral_is_inconclusive() {
        // <a, b | (ab)^2 a^-3, a^3 b^-5>: perfect but nontrivial; the
        // certifier must refuse.
        let r1 = Word::from_pairs(&[("a", 1), ("b", 1), ("a", 1), ("b", 1), ("a", -3)]);
        let r2 = Word::from_pairs(&[("a", 3), ("b", -5)]);
        let p = pres(&["a", "b"], &[r1, r2]);
        assert!(p.abelianization().is_empty());
        let out = certify_trivial(&p, DEFAULT_BUDGET);
        assert!(!out.is_certified());
    }

    #[test]
    fn commutator_plus_killers_certify() {
        let p = pres(
            &["x", "y"],
            &[
                Word::commutator("x", "y"),
                // y x y x^-2 y^-1 x reduces to y under commutativity; its
                // abelianized exponents are (0, 1).
                Word::from_pairs(&[("y", 1), ("x", 1), ("y", 1), ("x", -2), ("y", -1), ("x", 1)]),
                Word::from_pairs(&[("x", 1), ("x", 1), ("y", 1), ("y", -2), ("x", -1), ("y", 1)]),
            ],
        );
        let out = certify_trivial(&p, DEFAULT_BUDGET);
        assert!(out.is_certified());
        if let CertifyOutcome::Certified(cert) = out {
            cert.replay(&p).unwrap();
        }
    }

    #[test]
    fn budget_exhaustion_flagged() {
        let p = pres(&["x", "y"], &[Word::from_pairs(&[("y", 1), ("x", 1), ("y", -1)])]);
        let out = tietze_simplify(&p, 1);
        assert!(out.budget_exhausted);
        let cert = certify_trivial(&p, 1);
        assert!(!cert.is_certified());
    }

    #[test]
    fn replay_rejects_tampering() {
        let p = pres(&["x"], &[Word::from_pairs(&[("x", 1)])]);
        let out = certify_trivial(&p, DEFAULT_BUDGET);
        let CertifyOutcome::Certified(cert) = out else { panic!("certified") };
        // Replaying against a different presentation fails.
        let other = pres(&["x"], &[Word::from_pairs(&[("x", 2)])]);
        assert!(cert.replay(&other).is_err());
    }

    #[test]
    fn shortening_substitution_used() {
        // Second relator contains the first's square; shortening must kick
        // in because no elimination applies to <x | x^3, x^5> ... which the
        // engine reduces via subword substitution to <x | x^3, x^-1>-ish and
        // then eliminates: the group is trivial.
        let p = pres(&["x"], &[Word::from_pairs(&[("x", 3)]), Word::from_pairs(&[("x", 5)])]);
        let out = certify_trivial(&p, DEFAULT_BUDGET);
        assert!(out.is_certified());
    }
}
