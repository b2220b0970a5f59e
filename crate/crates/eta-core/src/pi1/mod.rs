//! Fundamental-group machinery: free-group words, finite presentations,
//! Wirtinger presentations of link complements, surgery and handle relators,
//! and abelianization via Smith normal form. Tietze simplification and the
//! triviality certifier live in [`tietze`]; the handle-cobordism presentation
//! templates live in [`family`].

pub mod family;
pub mod tietze;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::diagram::{DiagramError, LinkDiagram};
use crate::quotient::Sign;
use crate::snf::{cokernel_invariant_factors, IntMatrix};

/// A single letter `g` or `g^{-1}` of a free-group word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Letter {
    pub gen: String,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: impl Into<String>, inv: bool) -> Self {
        Self { gen: gen.into(), inv }
    }

    pub fn inverse(&self) -> Self {
        Self { gen: self.gen.clone(), inv: !self.inv }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inv {
            write!(f, "{}^-1", self.gen)
        } else {
            f.write_str(&self.gen)
        }
    }
}

/// A freely reduced word in a free group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Self { letters: Vec::new() }
    }

    /// Builds a word and freely reduces it.
    pub fn new(letters: Vec<Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
        for l in letters {
            if out.last().map(|p| p.gen == l.gen && p.inv != l.inv).unwrap_or(false) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self { letters: out }
    }

    /// Convenience constructor from `(generator, exponent)` pairs; exponents
    /// expand into repeated letters.
    pub fn from_pairs(pairs: &[(&str, i32)]) -> Self {
        let mut letters = Vec::new();
        for &(g, e) in pairs {
            for _ in 0..e.unsigned_abs() {
                letters.push(Letter::new(g, e < 0));
            }
        }
        Self::new(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Self::new(letters)
    }

    /// Rotation by `k`: moves the first `k` letters to the end (a cyclic
    /// permutation, i.e. a conjugate of the word).
    pub fn rotate(&self, k: usize) -> Self {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Self::new(letters)
    }

    /// Strips matching first/last letters: the shortest conjugate.
    pub fn cyclic_reduce(&self) -> Self {
        let mut letters = self.letters.clone();
        while letters.len() >= 2 {
            let first = &letters[0];
            let last = letters.last().expect("nonempty");
            if first.gen == last.gen && first.inv != last.inv {
                letters.pop();
                letters.remove(0);
            } else {
                break;
            }
        }
        Self::new(letters)
    }

    /// Canonical representative of the cyclic word up to rotation and
    /// inversion, for duplicate and commutator detection.
    pub fn cyclic_canonical(&self) -> Self {
        let reduced = self.cyclic_reduce();
        if reduced.is_empty() {
            return reduced;
        }
        let n = reduced.len();
        let mut best: Option<Word> = None;
        for w in [reduced.clone(), reduced.inverse()] {
            for k in 0..n {
                let cand = w.rotate(k);
                if best.as_ref().map(|b| cand.letters < b.letters).unwrap_or(true) {
                    best = Some(cand);
                }
            }
        }
        best.expect("nonempty word has rotations")
    }

    /// Number of letters (of either sign) on the given generator.
    pub fn occurrences(&self, gen: &str) -> usize {
        self.letters.iter().filter(|l| l.gen == gen).count()
    }

    /// Replaces every `g^{±1}` by `def^{±1}` and reduces.
    pub fn substitute(&self, gen: &str, def: &Word) -> Self {
        let mut letters = Vec::new();
        for l in &self.letters {
            if l.gen == gen {
                let rep = if l.inv { def.inverse() } else { def.clone() };
                letters.extend(rep.letters);
            } else {
                letters.push(l.clone());
            }
        }
        Self::new(letters)
    }

    /// The commutator `[a, b] = a^{-1} b^{-1} a b`.
    pub fn commutator(a: &str, b: &str) -> Self {
        Self::new(alloc::vec![
            Letter::new(a, true),
            Letter::new(b, true),
            Letter::new(a, false),
            Letter::new(b, false),
        ])
    }

    pub fn render(&self) -> String {
        if self.letters.is_empty() {
            return String::from("1");
        }
        let mut parts: Vec<String> = Vec::new();
        for l in &self.letters {
            parts.push(l.to_string());
        }
        parts.join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Errors from presentation construction and the diagram-facing operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pi1Error {
    UndeclaredGenerator { name: String },
    UnknownComponent { name: String },
    MissingFraming { component: String },
    /// No transcribed handle-cobordism template for these parameters.
    TemplateUnavailable { m: i64, n: i64 },
    Diagram(DiagramError),
}

impl fmt::Display for Pi1Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pi1Error::UndeclaredGenerator { name } => write!(f, "undeclared generator {name}"),
            Pi1Error::UnknownComponent { name } => write!(f, "unknown component {name}"),
            Pi1Error::MissingFraming { component } => {
                write!(f, "component {component} has no framing")
            }
            Pi1Error::TemplateUnavailable { m, n } => {
                write!(f, "no transcribed template for W_{{{m},{n}}}; m, n <= 3 are available")
            }
            Pi1Error::Diagram(e) => write!(f, "{e}"),
        }
    }
}

impl From<DiagramError> for Pi1Error {
    fn from(e: DiagramError) -> Self {
        Pi1Error::Diagram(e)
    }
}

/// A finite group presentation: named generators and freely reduced relator
/// words over them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    gens: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    /// Builds a presentation, rejecting relators over undeclared generators.
    pub fn new(gens: Vec<String>, relators: Vec<Word>) -> Result<Self, Pi1Error> {
        let declared: BTreeSet<&str> = gens.iter().map(String::as_str).collect();
        for r in &relators {
            for l in r.letters() {
                if !declared.contains(l.gen.as_str()) {
                    return Err(Pi1Error::UndeclaredGenerator { name: l.gen.clone() });
                }
            }
        }
        Ok(Self { gens, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.gens
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Appends a handle-attachment relator. Empty words are dropped as
    /// no-ops; undeclared generators are rejected.
    pub fn add_handle_relator(&mut self, word: Word) -> Result<(), Pi1Error> {
        let declared: BTreeSet<&str> = self.gens.iter().map(String::as_str).collect();
        for l in word.letters() {
            if !declared.contains(l.gen.as_str()) {
                return Err(Pi1Error::UndeclaredGenerator { name: l.gen.clone() });
            }
        }
        if !word.is_empty() {
            self.relators.push(word);
        }
        Ok(())
    }

    /// Appends several relators at once (surgery relators; empty entries are
    /// kept out of the relator list but are legal input).
    pub fn add_relators(&mut self, words: Vec<Word>) -> Result<(), Pi1Error> {
        for w in words {
            self.add_handle_relator(w)?;
        }
        Ok(())
    }

    /// Exponent-sum matrix (relators x generators).
    pub fn exponent_matrix(&self) -> IntMatrix {
        let index: BTreeMap<&str, usize> =
            self.gens.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
        let mut m = IntMatrix::zero(self.relators.len(), self.gens.len());
        for (i, r) in self.relators.iter().enumerate() {
            for l in r.letters() {
                let j = index[l.gen.as_str()];
                *m.at_mut(i, j) += if l.inv { -1 } else { 1 };
            }
        }
        m
    }

    /// Invariant factors of the abelianization: finite factors (> 1) then a
    /// `0` per infinite cyclic summand. Empty means trivial H_1.
    pub fn abelianization(&self) -> Vec<BigInt> {
        cokernel_invariant_factors(self.exponent_matrix())
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} |", self.gens.join(" "))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {r}")?;
        }
        write!(f, " >")
    }
}

/// Meridian generator of a component: its first arc, or the component name
/// itself for an `unknot` component (which contributes a crossingless
/// generator of its own).
fn meridian_of(d: &LinkDiagram, name: &str) -> Result<String, Pi1Error> {
    let comp = d
        .component(name)
        .ok_or_else(|| Pi1Error::UnknownComponent { name: name.to_string() })?;
    Ok(if comp.unknot { comp.name.clone() } else { comp.arcs[0].clone() })
}

/// Wirtinger presentation of the link complement: one generator per arc (one
/// per crossingless unknot component) and, per crossing of sign `s` with
/// over-arc `g` and under strand `u -> v`, the relator `v^{-1} g^{-s} u g^s`.
pub fn wirtinger(d: &LinkDiagram) -> GroupPresentation {
    let mut gens: Vec<String> = Vec::new();
    for comp in d.components() {
        if comp.unknot {
            gens.push(comp.name.clone());
        } else {
            gens.extend(comp.arcs.iter().cloned());
        }
    }
    let mut relators = Vec::new();
    for c in d.crossings() {
        let s_inv = c.sign == Sign::Pos;
        relators.push(Word::new(alloc::vec![
            Letter::new(c.under_out.clone(), true),
            Letter::new(c.over_in.clone(), s_inv),
            Letter::new(c.under_in.clone(), false),
            Letter::new(c.over_in.clone(), !s_inv),
        ]));
    }
    GroupPresentation::new(gens, relators).expect("wirtinger generators cover all arcs")
}

/// The 0-framed longitude of a component, read along its arcs: the product
/// of `over^sign` at each undercrossing, times `meridian^{-writhe}`. The
/// walk starts at the component's first listed arc, which is also the
/// meridian used for the framing correction.
pub fn longitude(d: &LinkDiagram, name: &str) -> Result<Word, Pi1Error> {
    let comp = d
        .component(name)
        .ok_or_else(|| Pi1Error::UnknownComponent { name: name.to_string() })?;
    if comp.unknot {
        return Ok(Word::empty());
    }
    let mut letters = Vec::new();
    for arc in &comp.arcs {
        for c in d.crossings() {
            if c.under_in == *arc {
                letters.push(Letter::new(c.over_in.clone(), c.sign == Sign::Neg));
            }
        }
    }
    let w = d.writhe(name)?;
    let meridian = meridian_of(d, name)?;
    for _ in 0..w.unsigned_abs() {
        letters.push(Letter::new(meridian.clone(), w > 0));
    }
    Ok(Word::new(letters))
}

/// Surgery relators: one per component, `longitude * meridian^framing`.
pub fn surgery_relators(
    d: &LinkDiagram,
    framings: &BTreeMap<String, i64>,
) -> Result<Vec<Word>, Pi1Error> {
    for name in framings.keys() {
        if d.component(name).is_none() {
            return Err(Pi1Error::UnknownComponent { name: name.clone() });
        }
    }
    let mut out = Vec::new();
    for comp in d.components() {
        let f = *framings
            .get(&comp.name)
            .ok_or_else(|| Pi1Error::MissingFraming { component: comp.name.clone() })?;
        let lon = longitude(d, &comp.name)?;
        let meridian = meridian_of(d, &comp.name)?;
        let mut letters = lon.letters().to_vec();
        for _ in 0..f.unsigned_abs() {
            letters.push(Letter::new(meridian.clone(), f < 0));
        }
        out.push(Word::new(letters));
    }
    Ok(out)
}
