//! Scalars and matrices over ℚ(i): parsing, canonical printing, elimination.
//!
//! cargo run --example exact_arithmetic

use blockinv::{parse_scalar, GaussianRational, Matrix};

fn main() -> blockinv::Result<()> {
    let a = parse_scalar("2/3-5/7i")?;
    let b: GaussianRational = "1+i".parse()?;
    println!("a = {a}, b = {b}");
    println!("a*b = {}, a/b = {}, |b|^2 = {}", &a * &b, a.checked_div(&b)?, b.norm_sqr());
    println!("i*i = {}", &GaussianRational::i() * &GaussianRational::i());

    // Offsets point at the offending byte.
    if let Err(e) = parse_scalar("1+2") {
        println!("parse error: {e}");
    }

    let m = Matrix::from_str_rows([["i", "i", "1"], ["2", "2", "0"], ["0", "0", "1/2"]])?;
    let rr = m.rref();
    println!("M =\n{m}\nrref =\n{}\nrank {} pivots {:?}", rr.reduced, rr.rank, rr.pivot_cols);
    println!("kernel basis =\n{}", m.kernel_basis());

    let e = Matrix::from_int_rows([[1, 2], [0, -1]]);
    let i = Matrix::identity(2);
    let z = Matrix::zeros(2, 2);
    let p = Matrix::block2x2(&z, &i, &i, &-&e)?;
    println!("P^-1 =\n{}", p.inverse()?);
    println!("as JSON: {}", serde_json::to_string(&e).expect("serializable"));
    Ok(())
}
