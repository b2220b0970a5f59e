use eta_core::pi1::family::w_family_presentation;
use eta_core::pi1::tietze::{tietze_simplify, DEFAULT_BUDGET};

#[test]
fn dbg_w22() {
    let p = w_family_presentation(2, 2).unwrap();
    let out = tietze_simplify(&p, DEFAULT_BUDGET);
    for mv in &out.moves {
        println!("  {mv:?}");
    }
    println!("gens: {:?}", out.presentation.generators());
    for r in out.presentation.relators() {
        println!("rel ({}): {}", r.len(), r);
    }
}
