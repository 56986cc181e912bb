#![allow(dead_code)]

pub mod oracle;

use blockinv::{GaussianRational, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_entry(rng: &mut ChaCha8Rng) -> GaussianRational {
    let re = rng.random_range(-3..=3);
    let den = if rng.random_bool(0.2) { 2 } else { 1 };
    let im = if rng.random_bool(0.2) { rng.random_range(-2..=2) } else { 0 };
    GaussianRational::from_parts((re, den), (im, 1))
}

pub fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small_entry(rng))
}

fn unit_triangular(n: usize, lower: bool, rng: &mut ChaCha8Rng) -> Matrix {
    Matrix::from_fn(n, n, |r, c| {
        if r == c {
            GaussianRational::one()
        } else if (r > c) == lower {
            GaussianRational::from_integer(rng.random_range(-2..=2))
        } else {
            GaussianRational::zero()
        }
    })
}

/// A similarity with an integral inverse.
pub fn random_basis(n: usize, rng: &mut ChaCha8Rng) -> (Matrix, Matrix) {
    let p = &unit_triangular(n, true, rng) * &unit_triangular(n, false, rng);
    let inv = p.inverse().unwrap();
    (p, inv)
}

/// Strictly upper triangular with a random sparsity pattern, so nilpotent of
/// varying index.
pub fn random_nilpotent(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    Matrix::from_fn(n, n, |r, c| {
        if c > r && rng.random_bool(0.6) {
            small_entry(rng)
        } else {
            GaussianRational::zero()
        }
    })
}

/// A mix of dense, low-rank, group invertible and high-index matrices.
pub fn random_square(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    match rng.random_range(0..4) {
        0 => random_matrix(n, n, rng),
        1 => {
            let k = rng.random_range(0..=n);
            &random_matrix(n, k, rng) * &random_matrix(k, n, rng)
        }
        2 => {
            let r = rng.random_range(0..=n);
            let core = Matrix::block_diag(&random_matrix(r, r, rng), &Matrix::zeros(n - r, n - r));
            let (p, p_inv) = random_basis(n, rng);
            &(&p * &core) * &p_inv
        }
        _ => {
            let r = rng.random_range(0..=n);
            let core = Matrix::block_diag(&random_matrix(r, r, rng), &random_nilpotent(n - r, rng));
            let (p, p_inv) = random_basis(n, rng);
            &(&p * &core) * &p_inv
        }
    }
}

/// Index at most one, with rank drawn at random.
pub fn random_group_invertible(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let r = rng.random_range(0..=n);
        let c = random_matrix(r, r, rng);
        if c.inverse().is_err() {
            continue;
        }
        let (p, p_inv) = random_basis(n, rng);
        return &(&p * &Matrix::block_diag(&c, &Matrix::zeros(n - r, n - r))) * &p_inv;
    }
}
