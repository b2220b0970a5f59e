//! Presentation templates for the handle cobordisms `W_{m,n}`.
//!
//! The base `(1,1)` presentation has the ten Wirtinger generators and
//! relators of the surgery-link complement, the two 0-framed longitude
//! relators, and the attaching-sphere relator `x1 x5^-1`. Larger `m` and
//! `n` extend it by half-twist blocks: one new generator and one new
//! conjugation relator per added half twist, alternating between the two
//! strands of the twisted pair, with the box's exit arcs rewired into the
//! relators that consume them. Templates are transcribed for `m, n <= 3`;
//! other parameters are refused rather than guessed.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{GroupPresentation, Letter, Pi1Error, Word};

const MAX_TEMPLATE: i64 = 3;

fn w(pairs: &[(&str, i32)]) -> Word {
    Word::from_pairs(pairs)
}

/// Name of the j-th generator along a twist chain: the base names for
/// `j <= 1`, then suffixed variants.
fn chain_name(base0: &str, base1: &str, j: usize) -> String {
    match j {
        0 => base0.to_string(),
        1 => base1.to_string(),
        2 => format!("{base1}b"),
        3 => format!("{base1}c"),
        _ => format!("{base1}{j}"),
    }
}

/// The transcribed presentation of `π₁(W_{m,n})` for `m, n <= 3`.
///
/// For `(1, 1)` this is exactly the 10-generator, 13-relator presentation of
/// the cobordism built on the surgery link; the relators come in the order:
/// ten crossing relators, two 0-framed longitudes, one attaching sphere.
pub fn w_family_presentation(m: i64, n: i64) -> Result<GroupPresentation, Pi1Error> {
    if !(1..=MAX_TEMPLATE).contains(&m) || !(1..=MAX_TEMPLATE).contains(&n) {
        return Err(Pi1Error::TemplateUnavailable { m, n });
    }
    let m = m as usize;
    let n = n as usize;

    // X/Y clasp chain (the n box): a_0 = x3, a_1 = x4, ...; b_0 = y3, b_1 = y4, ...
    let a: Vec<String> = (0..=n).map(|j| chain_name("x3", "x4", j)).collect();
    let b: Vec<String> = (0..=n).map(|j| chain_name("y3", "y4", j)).collect();
    // X self-clasp chain (the m box): p_1 = x2, ...; q_1 = x5, ...
    let p: Vec<String> = (0..=m).map(|j| chain_name("x1", "x2", j)).collect();
    let q: Vec<String> = (0..=m).map(|j| chain_name("x4", "x5", j)).collect();

    let mut gens: Vec<String> = ["x1", "x2", "x3", "x4", "x5", "y1", "y2", "y3", "y4", "y5"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for j in 2..=n {
        gens.push(a[j].clone());
        gens.push(b[j].clone());
    }
    for j in 2..=m {
        gens.push(p[j].clone());
        gens.push(q[j].clone());
    }

    let an = a[n].as_str();
    let bn = b[n].as_str();
    let pm = p[m].as_str();
    let qm = q[m].as_str();

    let mut relators: Vec<Word> = Vec::new();
    // (1)-(8): crossing relators away from the twist boxes, with the box
    // exit arcs substituted in.
    relators.push(w(&[("y1", -1), ("x1", -1), ("y5", 1), ("x1", 1)]));
    relators.push(w(&[("x1", -1), ("y5", -1), (qm, 1), ("y5", 1)]));
    relators.push(w(&[("x2", -1), ("x5", -1), ("x1", 1), ("x5", 1)]));
    relators.push(w(&[("y5", -1), ("y1", -1), (bn, 1), ("y1", 1)]));
    relators.push(w(&[("y2", -1), ("x2", -1), ("y1", 1), ("x2", 1)]));
    relators.push(w(&[("x3", -1), ("y2", -1), (pm, 1), ("y2", 1)]));
    relators.push(w(&[("x5", -1), ("x3", -1), (an, 1), ("x3", 1)]));
    relators.push(w(&[("y3", -1), (bn, -1), ("y2", 1), (bn, 1)]));
    // (9)-(10) and their half-twist continuations: the negative clasp
    // between the X and Y strands, alternating undercrossings.
    for j in 1..=n {
        relators.push(w(&[(&a[j], -1), (&b[j], 1), (&a[j - 1], 1), (&b[j], -1)]));
        relators.push(w(&[(&b[j], -1), (&a[j - 1], 1), (&b[j - 1], 1), (&a[j - 1], -1)]));
    }
    // Half-twist continuations of the X self-clasp: the printed pattern
    // x_{k+1}^-1 x_l^-1 x_k x_l, one generator and one relator per twist.
    for j in 2..=m {
        relators.push(w(&[(&q[j], -1), (&p[j - 1], -1), (&q[j - 1], 1), (&p[j - 1], 1)]));
        relators.push(w(&[(&p[j], -1), (&q[j], -1), (&p[j - 1], 1), (&q[j], 1)]));
    }
    // (11), (12): 0-framed longitudes of the two surgery-link components.
    relators.push(Word::new(alloc::vec![
        Letter::new("y5", false),
        Letter::new(qm, false),
        Letter::new("y2", false),
        Letter::new("x3", true),
        Letter::new("x3", true),
        Letter::new(bn, true),
        Letter::new("x3", false),
    ]));
    relators.push(Word::new(alloc::vec![
        Letter::new("x1", false),
        Letter::new(pm, false),
        Letter::new(bn, false),
        Letter::new("y3", true),
        Letter::new("y3", true),
        Letter::new("x3", true),
        Letter::new("y1", false),
    ]));
    // (13): the attaching sphere of the 2-handle.
    relators.push(w(&[("x1", 1), (qm, -1)]));

    GroupPresentation::new(gens, relators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pi1::tietze::{certify_trivial, CertifyOutcome, DEFAULT_BUDGET};

    #[test]
    fn base_template_shape() {
        let p = w_family_presentation(1, 1).unwrap();
        assert_eq!(p.generators().len(), 10);
        assert_eq!(p.relators().len(), 13);
    }

    #[test]
    fn base_template_relators_verbatim() {
        let p = w_family_presentation(1, 1).unwrap();
        let expected = [
            "y1^-1 x1^-1 y5 x1",
            "x1^-1 y5^-1 x5 y5",
            "x2^-1 x5^-1 x1 x5",
            "y5^-1 y1^-1 y4 y1",
            "y2^-1 x2^-1 y1 x2",
            "x3^-1 y2^-1 x2 y2",
            "x5^-1 x3^-1 x4 x3",
            "y3^-1 y4^-1 y2 y4",
            "x4^-1 y4 x3 y4^-1",
            "y4^-1 x3 y3 x3^-1",
            "y5 x5 y2 x3^-1 x3^-1 y4^-1 x3",
            "x1 x2 y4 y3^-1 y3^-1 x3^-1 y1",
            "x1 x5^-1",
        ];
        let rendered: Vec<String> =
            p.relators().iter().map(|r| r.render()).collect();
        assert_eq!(rendered, expected);
    }

    #[test]
    fn template_sizes_grow_by_half_twists() {
        let p = w_family_presentation(1, 2).unwrap();
        assert_eq!(p.generators().len(), 12);
        assert_eq!(p.relators().len(), 15);
        let p = w_family_presentation(3, 3).unwrap();
        assert_eq!(p.generators().len(), 18);
        assert_eq!(p.relators().len(), 21);
    }

    #[test]
    fn unavailable_templates_refused() {
        assert!(matches!(
            w_family_presentation(4, 1),
            Err(Pi1Error::TemplateUnavailable { m: 4, n: 1 })
        ));
        assert!(matches!(
            w_family_presentation(1, 0),
            Err(Pi1Error::TemplateUnavailable { .. })
        ));
    }

    #[test]
    fn all_templates_have_trivial_homology() {
        for m in 1..=3 {
            for n in 1..=3 {
                let p = w_family_presentation(m, n).unwrap();
                assert!(p.abelianization().is_empty(), "W_{{{m},{n}}}");
            }
        }
    }

    #[test]
    fn base_certifies_with_replay() {
        let p = w_family_presentation(1, 1).unwrap();
        match certify_trivial(&p, DEFAULT_BUDGET) {
            CertifyOutcome::Certified(cert) => {
                cert.replay(&p).unwrap();
            }
            CertifyOutcome::Inconclusive { reason, .. } => {
                panic!("W_{{1,1}} must certify, got: {reason}")
            }
        }
    }

    #[test]
    fn extended_templates_certify() {
        for (m, n) in [(1, 2), (2, 1), (2, 2), (3, 1), (1, 3), (3, 3)] {
            let p = w_family_presentation(m, n).unwrap();
            let out = certify_trivial(&p, DEFAULT_BUDGET);
            assert!(out.is_certified(), "W_{{{m},{n}}} did not certify");
        }
    }
}
