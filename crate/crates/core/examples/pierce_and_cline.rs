//! The two tools behind the closed forms: block-triangular Drazin inverses
//! through a Pierce decomposition, and Cline's formula.
//!
//! cargo run --example pierce_and_cline

use blockinv::block::BlockShape;
use blockinv::drazin::block_triangular_obstruction;
use blockinv::{assemble_m, block_triangular_drazin, cline, drazin, group_inverse, Matrix};

fn main() -> blockinv::Result<()> {
    let e = Matrix::from_int_rows([[1, 0], [1, 1]]);
    let f = Matrix::from_int_rows([[1, 0], [0, 0]]);
    let m = assemble_m(&e, &f, BlockShape::EiF0)?;

    // diag(FF^#, I) makes the upper-right corner vanish.
    let idem = Matrix::block_diag(&(&f * &group_inverse(&f)?), &Matrix::identity(2));
    let split = m.pierce_split(&idem)?;
    println!("b corner is zero: {}", split.b.is_zero());
    println!("d^pi c a^pi =\n{}", block_triangular_obstruction(&split.a, &split.c, &split.d)?);
    let via_corners = split.lower_triangular_drazin()?;
    println!("M^D via corners =\n{via_corners}");
    assert_eq!(via_corners, drazin(&m)?.drazin);

    // Shaped blocks: [[a, 0], [c, d]].
    let a = Matrix::from_int_rows([[1, 1], [0, 0]]);
    let d = Matrix::from_int_rows([[0]]);
    let c = Matrix::from_int_rows([[1, 2]]);
    let tri = block_triangular_drazin(&a, &c, &d)?;
    println!("[[a,0],[c,d]]^D =\n{tri}");

    // (AB)^D = A ((BA)^D)^2 B with AB = [[E, F], [F, 0]].
    let e = Matrix::from_int_rows([[1, 2], [0, -1]]);
    let f = Matrix::from_str_rows([["i", "i"], ["0", "0"]])?;
    let left = Matrix::block2x2(&e, &Matrix::identity(2), &f, &Matrix::zeros(2, 2))?;
    let right = Matrix::block_diag(&Matrix::identity(2), &f);
    let via_cline = cline(&left, &right)?;
    println!("Cline: index {}\n{}", via_cline.index, via_cline.drazin);
    assert_eq!(via_cline.drazin, drazin(&assemble_m(&e, &f, BlockShape::EfF0)?)?.drazin);
    Ok(())
}
