//! The identical-subblock representation on a 2×2 complex example, with
//! every intermediate printed.
//!
//! cargo run --example worked_example

use blockinv::block::ef_f0_right;
use blockinv::{group_inverse, Matrix};

fn main() -> blockinv::Result<()> {
    let e = Matrix::from_int_rows([[1, 2], [0, -1]]);
    let f = Matrix::from_str_rows([["i", "i"], ["0", "0"]])?;
    let r = ef_f0_right(&e, &f)?;
    for (name, m) in &r.intermediates {
        println!("{name} =\n{m}");
    }
    println!("Gamma =\n{}\nDelta =\n{}\nLambda =\n{}\nXi =\n{}", r.gamma, r.delta, r.lambda_blk, r.xi);
    println!("M^# =\n{}", r.assembled);
    let m = r.block_matrix(&e, &f)?;
    assert_eq!(group_inverse(&m)?, r.assembled);
    Ok(())
}
