//! Every closed-form constructor on a generated pair that satisfies its
//! hypotheses, checked against the direct group inverse and against the
//! alternative routes.
//!
//! cargo run --example block_formulas [seed]

use blockinv::block::route_checks;
use blockinv::instance::{gen_pair, GenSpec};
use blockinv::{assemble_m, block_group_inverse, group_inverse, Theorem};

fn main() -> blockinv::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    for theorem in Theorem::ALL {
        let (e, f) = gen_pair(&GenSpec::new(theorem, 3, 1, true, seed))?;
        let r = block_group_inverse(theorem, &e, &f)?;
        let direct = group_inverse(&assemble_m(&e, &f, theorem.shape())?)?;
        let routes = route_checks(&e, &f, &r)?;
        let held = routes.iter().filter(|c| c.holds).count();
        println!(
            "{theorem:7} {:6} agrees with direct: {:5} routes {held}/{}",
            theorem.shape(),
            r.assembled == direct,
            routes.len()
        );
    }
    let (e, f) = gen_pair(&GenSpec::new(Theorem::EfF0Left, 2, 1, true, seed))?;
    println!("\nE =\n{e}\nF =\n{f}\nM^# =\n{}", block_group_inverse(Theorem::EfF0Left, &e, &f)?.assembled);
    Ok(())
}
