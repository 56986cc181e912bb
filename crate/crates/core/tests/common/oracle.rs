//! A Drazin inverse that shares nothing with the library's algorithm:
//! repeated full-rank factorisation.
//!
//! Write `A = B₁C₁` with both factors of full rank, then keep factoring
//! `CᵢBᵢ = Bᵢ₊₁Cᵢ₊₁` until `CₖBₖ` is invertible or zero. Then
//! `A^D = B₁⋯Bₖ (CₖBₖ)^{-(k+1)} Cₖ⋯C₁`, or zero in the nilpotent case.

use blockinv::Matrix;

/// `A = B C` with `B` the pivot columns of `A` and `C` the nonzero rows of
/// its reduced echelon form.
pub fn full_rank_factor(a: &Matrix) -> (Matrix, Matrix) {
    let rr = a.rref();
    let b = a.select_cols(&rr.pivot_cols);
    let c = rr.reduced.block(0, 0, rr.rank, a.cols());
    (b, c)
}

/// Index by the rank sequence of explicit powers.
pub fn index(a: &Matrix) -> usize {
    let n = a.rows();
    let mut ranks = vec![n];
    let mut p = Matrix::identity(n);
    loop {
        p = &p * a;
        ranks.push(p.rank());
        let k = ranks.len() - 1;
        if ranks[k] == ranks[k - 1] {
            return k - 1;
        }
    }
}

pub fn drazin(a: &Matrix) -> Matrix {
    let n = a.rows();
    assert_eq!(n, a.cols());
    let mut bs: Vec<Matrix> = Vec::new();
    let mut cs: Vec<Matrix> = Vec::new();
    let mut x = a.clone();
    loop {
        if x.is_zero() {
            return Matrix::zeros(n, n);
        }
        if x.rows() == x.rank() && !bs.is_empty() {
            break;
        }
        if bs.is_empty() && x.rank() == n {
            return x.inverse().unwrap();
        }
        let (b, c) = full_rank_factor(&x);
        x = &c * &b;
        bs.push(b);
        cs.push(c);
    }
    let k = bs.len();
    let inv = x.inverse().unwrap();
    let mut mid = Matrix::identity(inv.rows());
    for _ in 0..=k {
        mid = &mid * &inv;
    }
    let left = bs.iter().fold(Matrix::identity(n), |acc, b| &acc * b);
    let right = cs.iter().rev().fold(mid, |acc, c| &acc * c);
    &left * &right
}
