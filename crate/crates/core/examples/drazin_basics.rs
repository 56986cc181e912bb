//! Drazin index, Drazin inverse, spectral idempotent and group inverse.
//!
//! cargo run --example drazin_basics

use blockinv::{drazin, drazin_index, group_inverse, Error, Matrix};

fn main() -> blockinv::Result<()> {
    let f = Matrix::from_str_rows([["i", "i"], ["0", "0"]])?;
    let d = drazin(&f)?;
    println!("F =\n{f}\nindex {}\nF^D =\n{}\nF^pi =\n{}", d.index, d.drazin, d.spectral_idempotent);

    // Invertible part plus a nilpotent Jordan block of size 3.
    let t = Matrix::from_int_rows([
        [2, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [0, 0, 0, 0],
    ]);
    let d = drazin(&t)?;
    println!("T has index {}\nT^D =\n{}", d.index, d.drazin);
    assert_eq!(&(&d.drazin * &t) * &d.drazin, d.drazin);
    assert_eq!(&d.drazin * &t, &t * &d.drazin);

    let nil = Matrix::from_int_rows([[0, 1], [0, 0]]);
    match group_inverse(&nil) {
        Err(Error::NotGroupInvertible { index }) => println!("[[0,1],[0,0]] has index {index}, no group inverse"),
        other => println!("unexpected: {other:?}"),
    }
    println!("index of the identity: {}", drazin_index(&Matrix::identity(3))?);
    Ok(())
}
