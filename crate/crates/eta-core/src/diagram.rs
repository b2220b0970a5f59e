//! Oriented link diagrams at the Gauss-code level: named components, long
//! arcs terminated by undercrossings, and signed crossing records.
//!
//! Crossing signs are stored explicitly rather than derived from a planar
//! embedding — every computation here (linking numbers, writhe, Wirtinger
//! input) needs only signs and over/under incidence, and planar
//! realizability is not checked.  Arcs split at undercrossings only, so each
//! arc appears exactly once as under-incoming and once as under-outgoing;
//! an arc may pass over any number of crossings.  Closed components with no
//! undercrossings are either declared `unknot` (no arcs, unreferencable) or
//! carry a single closed arc.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use crate::quotient::Sign;

/// One component of a link diagram. `arcs` lists the component's arcs in
/// cyclic order along the orientation; an `unknot` component has no arcs and
/// no crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub name: String,
    pub arcs: Vec<String>,
    pub unknot: bool,
}

/// A crossing record. The over strand runs `over_in -> over_out` (the two
/// are the same arc unless an encoding splits over-strands, which this crate
/// never produces), the under strand `under_in -> under_out`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub sign: Sign,
    pub over_in: String,
    pub over_out: String,
    pub under_in: String,
    pub under_out: String,
}

/// A validated oriented link diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    components: Vec<Component>,
    crossings: Vec<Crossing>,
    owner: BTreeMap<String, String>,
}

/// A single validation violation; `validate` reports these as data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation(pub String);

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Errors from diagram construction and queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramError {
    /// Validation failed; the first violation is carried verbatim.
    Consistency(String),
    UnknownComponent { name: String },
    SameComponent { name: String },
    /// The signed inter-component crossing sum was odd, which cannot happen
    /// for closed components.
    OddCrossingSum { c1: String, c2: String, sum: i64 },
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::Consistency(msg) => write!(f, "inconsistent diagram: {msg}"),
            DiagramError::UnknownComponent { name } => write!(f, "unknown component {name}"),
            DiagramError::SameComponent { name } => {
                write!(f, "linking number needs two distinct components, got {name} twice")
            }
            DiagramError::OddCrossingSum { c1, c2, sum } => write!(
                f,
                "signed crossing sum between {c1} and {c2} is odd ({sum}); diagram is not closed"
            ),
        }
    }
}

impl LinkDiagram {
    /// Builds a diagram and validates it, failing on the first violation.
    pub fn new(components: Vec<Component>, crossings: Vec<Crossing>) -> Result<Self, DiagramError> {
        let d = Self::new_unchecked(components, crossings);
        let report = d.validate();
        match report.into_iter().next() {
            None => Ok(d),
            Some(v) => Err(DiagramError::Consistency(v.0)),
        }
    }

    /// Builds without validating; `validate` lists violations as data.
    pub fn new_unchecked(components: Vec<Component>, crossings: Vec<Crossing>) -> Self {
        let mut owner = BTreeMap::new();
        for comp in &components {
            for arc in &comp.arcs {
                owner.insert(arc.clone(), comp.name.clone());
            }
        }
        Self { components, crossings, owner }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn component(&self, name: &str) -> Option<&Component> {
        self.components.iter().find(|c| c.name == name)
    }

    /// Component owning an arc.
    pub fn arc_component(&self, arc: &str) -> Option<&str> {
        self.owner.get(arc).map(String::as_str)
    }

    /// Checks every structural invariant, returning one violation per
    /// failure. An empty report means the diagram is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut report = Vec::new();
        let mut names = BTreeSet::new();
        for comp in &self.components {
            if !names.insert(comp.name.clone()) {
                report.push(Violation(format!("component {} declared twice", comp.name)));
            }
            if comp.unknot && !comp.arcs.is_empty() {
                report.push(Violation(format!(
                    "unknot component {} must not list arcs",
                    comp.name
                )));
            }
            if !comp.unknot && comp.arcs.is_empty() {
                report.push(Violation(format!("component {} has no arcs", comp.name)));
            }
        }
        let mut arc_seen = BTreeSet::new();
        for comp in &self.components {
            for arc in &comp.arcs {
                if !arc_seen.insert(arc.clone()) {
                    report.push(Violation(format!("arc {arc} declared twice")));
                }
            }
        }

        // Crossing slots must reference declared arcs; over strands must not
        // split.
        let mut under_in: BTreeMap<&str, usize> = BTreeMap::new();
        let mut under_out: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            let unknown: BTreeSet<&String> = [&c.over_in, &c.over_out, &c.under_in, &c.under_out]
                .into_iter()
                .filter(|arc| !self.owner.contains_key(arc.as_str()))
                .collect();
            for arc in unknown {
                report.push(Violation(format!("crossing {i} references unknown arc {arc}")));
            }
            if c.over_in != c.over_out {
                report.push(Violation(format!(
                    "crossing {i}: over strand splits ({} -> {})",
                    c.over_in, c.over_out
                )));
            }
            *under_in.entry(c.under_in.as_str()).or_insert(0) += 1;
            *under_out.entry(c.under_out.as_str()).or_insert(0) += 1;
        }
        if !report.is_empty() {
            return report;
        }

        // Each arc is under-incoming exactly once and under-outgoing exactly
        // once, except the single closed arc of a crossingless-under
        // component.
        for comp in &self.components {
            let closed_single =
                comp.arcs.len() == 1 && under_in.get(comp.arcs[0].as_str()).is_none();
            for arc in &comp.arcs {
                let ins = under_in.get(arc.as_str()).copied().unwrap_or(0);
                let outs = under_out.get(arc.as_str()).copied().unwrap_or(0);
                if closed_single {
                    if outs != 0 {
                        report.push(Violation(format!(
                            "closed arc {arc} appears as under-outgoing"
                        )));
                    }
                    continue;
                }
                if ins != 1 {
                    report.push(Violation(format!(
                        "arc {arc} appears {ins} times as under-incoming, expected 1"
                    )));
                }
                if outs != 1 {
                    report.push(Violation(format!(
                        "arc {arc} appears {outs} times as under-outgoing, expected 1"
                    )));
                }
            }
        }
        if !report.is_empty() {
            return report;
        }

        // The successor relation under-in -> under-out must trace each
        // component's listed cyclic order.
        let mut succ: BTreeMap<&str, &str> = BTreeMap::new();
        for c in &self.crossings {
            succ.insert(c.under_in.as_str(), c.under_out.as_str());
        }
        for comp in &self.components {
            if comp.arcs.len() <= 1 {
                continue;
            }
            let k = comp.arcs.len();
            for i in 0..k {
                let here = comp.arcs[i].as_str();
                let next = comp.arcs[(i + 1) % k].as_str();
                match succ.get(here) {
                    Some(&s) if s == next => {}
                    Some(&s) => report.push(Violation(format!(
                        "component {}: arc {here} continues to {s}, but {next} is listed next",
                        comp.name
                    ))),
                    None => report.push(Violation(format!(
                        "component {}: arc {here} has no undercrossing continuation",
                        comp.name
                    ))),
                }
            }
        }
        report
    }

    fn component_checked(&self, name: &str) -> Result<&Component, DiagramError> {
        self.component(name)
            .ok_or_else(|| DiagramError::UnknownComponent { name: String::from(name) })
    }

    /// Linking number of two distinct components: half the signed sum over
    /// crossings with one strand in each. Errs rather than halving an odd
    /// sum.
    pub fn linking_number(&self, c1: &str, c2: &str) -> Result<i64, DiagramError> {
        self.component_checked(c1)?;
        self.component_checked(c2)?;
        if c1 == c2 {
            return Err(DiagramError::SameComponent { name: String::from(c1) });
        }
        let mut sum = 0i64;
        for c in &self.crossings {
            let over = self.owner.get(&c.over_in).map(String::as_str);
            let under = self.owner.get(&c.under_in).map(String::as_str);
            let pair = (over == Some(c1) && under == Some(c2))
                || (over == Some(c2) && under == Some(c1));
            if pair {
                sum += c.sign.value();
            }
        }
        if sum % 2 != 0 {
            return Err(DiagramError::OddCrossingSum {
                c1: String::from(c1),
                c2: String::from(c2),
                sum,
            });
        }
        Ok(sum / 2)
    }

    /// Writhe of a component: the signed sum over its self-crossings.
    pub fn writhe(&self, name: &str) -> Result<i64, DiagramError> {
        self.component_checked(name)?;
        let mut sum = 0i64;
        for c in &self.crossings {
            let over = self.owner.get(&c.over_in).map(String::as_str);
            let under = self.owner.get(&c.under_in).map(String::as_str);
            if over == Some(name) && under == Some(name) {
                sum += c.sign.value();
            }
        }
        Ok(sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn comp(name: &str, arcs: &[&str]) -> Component {
        Component {
            name: name.to_string(),
            arcs: arcs.iter().map(|s| s.to_string()).collect(),
            unknot: false,
        }
    }

    fn cx(sign: Sign, over: &str, under_in: &str, under_out: &str) -> Crossing {
        Crossing {
            sign,
            over_in: over.to_string(),
            over_out: over.to_string(),
            under_in: under_in.to_string(),
            under_out: under_out.to_string(),
        }
    }

    /// Positive Hopf link: each component one arc, passing under once.
    fn hopf(sign: Sign) -> LinkDiagram {
        LinkDiagram::new(
            vec![comp("A", &["a"]), comp("B", &["b"])],
            vec![cx(sign, "a", "b", "b"), cx(sign, "b", "a", "a")],
        )
        .unwrap()
    }

    #[test]
    fn hopf_linking_number_by_sign() {
        assert_eq!(hopf(Sign::Pos).linking_number("A", "B").unwrap(), 1);
        assert_eq!(hopf(Sign::Neg).linking_number("A", "B").unwrap(), -1);
    }

    #[test]
    fn linking_number_symmetric() {
        let d = hopf(Sign::Pos);
        assert_eq!(
            d.linking_number("A", "B").unwrap(),
            d.linking_number("B", "A").unwrap()
        );
    }

    #[test]
    fn unlink_has_zero_linking() {
        let d = LinkDiagram::new(
            vec![
                Component { name: "A".to_string(), arcs: vec![], unknot: true },
                Component { name: "B".to_string(), arcs: vec![], unknot: true },
            ],
            vec![],
        )
        .unwrap();
        assert_eq!(d.linking_number("A", "B").unwrap(), 0);
    }

    #[test]
    fn component_errors() {
        let d = hopf(Sign::Pos);
        assert!(matches!(
            d.linking_number("A", "Z"),
            Err(DiagramError::UnknownComponent { .. })
        ));
        assert!(matches!(
            d.linking_number("A", "A"),
            Err(DiagramError::SameComponent { .. })
        ));
        assert!(matches!(d.writhe("Z"), Err(DiagramError::UnknownComponent { .. })));
    }

    /// Standard positive trefoil: arcs a1, a2, a3, three positive crossings.
    fn trefoil() -> LinkDiagram {
        LinkDiagram::new(
            vec![comp("K", &["a1", "a2", "a3"])],
            vec![
                cx(Sign::Pos, "a3", "a1", "a2"),
                cx(Sign::Pos, "a1", "a2", "a3"),
                cx(Sign::Pos, "a2", "a3", "a1"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn trefoil_writhe() {
        assert_eq!(trefoil().writhe("K").unwrap(), 3);
    }

    #[test]
    fn unknot_writhe() {
        let d = LinkDiagram::new(
            vec![Component { name: "U".to_string(), arcs: vec![], unknot: true }],
            vec![],
        )
        .unwrap();
        assert_eq!(d.writhe("U").unwrap(), 0);
    }

    /// Standard figure-eight diagram: two positive and two negative
    /// crossings, writhe zero.
    fn figure8() -> LinkDiagram {
        LinkDiagram::new(
            vec![comp("K", &["a1", "a2", "a3", "a4"])],
            vec![
                cx(Sign::Pos, "a3", "a1", "a2"),
                cx(Sign::Neg, "a1", "a2", "a3"),
                cx(Sign::Pos, "a2", "a3", "a4"),
                cx(Sign::Neg, "a4", "a4", "a1"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn figure8_writhe_zero() {
        assert_eq!(figure8().writhe("K").unwrap(), 0);
    }

    #[test]
    fn validate_unknown_arc() {
        let d = LinkDiagram::new_unchecked(
            vec![comp("A", &["a"])],
            vec![cx(Sign::Pos, "a", "ghost", "ghost")],
        );
        let report = d.validate();
        assert_eq!(report.len(), 1);
        assert!(report[0].0.contains("ghost"));
    }

    #[test]
    fn validate_arc_used_twice_as_outgoing() {
        let d = LinkDiagram::new_unchecked(
            vec![comp("A", &["a", "b"])],
            vec![cx(Sign::Pos, "a", "a", "b"), cx(Sign::Pos, "a", "b", "b")],
        );
        assert!(d
            .validate()
            .iter()
            .any(|v| v.0.contains("under-outgoing")));
    }

    #[test]
    fn validate_split_cycle() {
        // Two 1-cycles where the listed component claims a single 2-cycle.
        let d = LinkDiagram::new_unchecked(
            vec![comp("A", &["a", "b"])],
            vec![cx(Sign::Pos, "a", "a", "a"), cx(Sign::Pos, "b", "b", "b")],
        );
        assert!(d.validate().iter().any(|v| v.0.contains("listed next")));
    }

    #[test]
    fn validate_hopf_clean() {
        assert!(hopf(Sign::Pos).validate().is_empty());
        assert!(trefoil().validate().is_empty());
        assert!(figure8().validate().is_empty());
    }
}
