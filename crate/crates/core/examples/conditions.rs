//! Hypothesis reports: residuals, the λ in EF = λFE, and how a failed
//! condition surfaces from the constructors.
//!
//! cargo run --example conditions

use blockinv::block::ef_i0_commuting;
use blockinv::{block_group_inverse, check_conditions, Error, Matrix, Theorem};

fn main() -> blockinv::Result<()> {
    let e = Matrix::from_int_rows([[0, 1], [1, 0]]);
    let f = Matrix::from_int_rows([[1, 0], [0, -1]]);
    let report = check_conditions(&e, &f, Theorem::EfI0Commuting)?;
    for c in &report.conditions {
        let lambda = c.lambda.as_ref().map(|l| format!(" (lambda = {l})")).unwrap_or_default();
        let role = format!("{:?}", c.role);
        println!("{:24} {role:12} holds={}{lambda}", c.name.name(), c.holds);
    }
    let r = ef_i0_commuting(&e, &f)?;
    println!("M^# =\n{}", r.assembled);

    let z = Matrix::zeros(1, 1);
    let report = check_conditions(&z, &z, Theorem::EiF0Right)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    match block_group_inverse(Theorem::EiF0Right, &z, &z) {
        Err(Error::BlockNotGroupInvertible { condition, .. }) => println!("no group inverse: {condition} fails"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
