//! Drazin and group inverses.
//!
//! The Drazin inverse of a square `A` with index `k` is the unique `S` with
//! `AS = SA`, `SAS = S` and `A^{k+1} S = A^k`. It is computed from the
//! core-nilpotent decomposition: in a basis made of `range(A^k)` followed by
//! `null(A^k)`, `A = diag(C, N)` with `C` invertible and `N` nilpotent, and
//! `A^D = P diag(C⁻¹, 0) P⁻¹`.

use crate::error::{Error, Result};
use crate::matrix::{kernel_from_rref, Matrix, PierceSplit};

/// `T^D`, the Drazin index, and the spectral idempotent `T^π = I - T T^D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrazinResult {
    pub drazin: Matrix,
    pub index: usize,
    pub spectral_idempotent: Matrix,
}

impl DrazinResult {
    pub fn is_group_invertible(&self) -> bool {
        self.index <= 1
    }

    /// The group inverse, if the index allows one.
    pub fn group(&self) -> Result<&Matrix> {
        if self.is_group_invertible() {
            Ok(&self.drazin)
        } else {
            Err(Error::NotGroupInvertible { index: self.index })
        }
    }
}

/// Smallest `k ≥ 0` with `rank(A^k) = rank(A^{k+1})`; 0 exactly when `A` is
/// invertible.
pub fn drazin_index(a: &Matrix) -> Result<usize> {
    Ok(index_and_power(a)?.0)
}

/// Returns the index together with `A^index`.
fn index_and_power(a: &Matrix) -> Result<(usize, Matrix)> {
    let n = a.require_square()?;
    let mut power = Matrix::identity(n);
    let mut rank = n;
    let mut k = 0;
    loop {
        let next = &power * a;
        let next_rank = next.rank();
        if next_rank == rank {
            return Ok((k, power));
        }
        power = next;
        rank = next_rank;
        k += 1;
    }
}

pub fn drazin(a: &Matrix) -> Result<DrazinResult> {
    let n = a.require_square()?;
    let (index, ak) = index_and_power(a)?;
    let rr = ak.rref();
    let r = rr.rank;
    let drazin = if r == 0 {
        Matrix::zeros(n, n)
    } else {
        let range = ak.select_cols(&rr.pivot_cols);
        let null = kernel_from_rref(&rr, n);
        let p = Matrix::hstack(&[&range, &null])?;
        let p_inv = p.inverse()?;
        let p_inv_top = p_inv.block(0, 0, r, n);
        let core = &(&p_inv_top * a) * &range;
        let core_inv = core.inverse()?;
        &(&range * &core_inv) * &p_inv_top
    };
    let spectral_idempotent = &Matrix::identity(n) - &(a * &drazin);
    Ok(DrazinResult {
        drazin,
        index,
        spectral_idempotent,
    })
}

/// `A^#`, or `NotGroupInvertible` carrying the actual index.
pub fn group_inverse(a: &Matrix) -> Result<Matrix> {
    let d = drazin(a)?;
    d.group()?;
    Ok(d.drazin)
}

/// `I - A A^D`.
pub fn spectral_idempotent(a: &Matrix) -> Result<Matrix> {
    Ok(drazin(a)?.spectral_idempotent)
}

/// Drazin inverse of `AB` through Cline's formula `(AB)^D = A ((BA)^D)² B`.
pub fn cline(a: &Matrix, b: &Matrix) -> Result<DrazinResult> {
    let (m, n) = a.shape();
    if b.shape() != (n, m) {
        return Err(Error::ShapeMismatch {
            op: "cline",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let ba_d = drazin(&(b * a))?.drazin;
    let dr = &(a * &(&ba_d * &ba_d)) * b;
    let ab = a * b;
    let index = drazin_index(&ab)?;
    let spectral_idempotent = &Matrix::identity(m) - &(&ab * &dr);
    Ok(DrazinResult {
        drazin: dr,
        index,
        spectral_idempotent,
    })
}

/// The correction block `z = (d^#)² c a^π + d^π c (a^#)² - d^# c a^#`.
fn triangular_correction(a: &Matrix, c: &Matrix, d: &Matrix) -> Result<(Matrix, Matrix, Matrix)> {
    let ad = drazin(a)?;
    let dd = drazin(d)?;
    let a_g = ad.group()?;
    let d_g = dd.group()?;
    let z = &(&(&(d_g * d_g) * c) * &ad.spectral_idempotent)
        + &(&(&(&dd.spectral_idempotent * c) * a_g) * a_g)
        - &(&(d_g * c) * a_g);
    Ok((a_g.clone(), z, d_g.clone()))
}

/// Drazin inverse of the lower block-triangular `[[a, 0], [c, d]]` when `a`
/// and `d` are group invertible: `[[a^#, 0], [z, d^#]]`.
pub fn block_triangular_drazin(a: &Matrix, c: &Matrix, d: &Matrix) -> Result<Matrix> {
    let p = a.require_square()?;
    let q = d.require_square()?;
    if c.shape() != (q, p) {
        return Err(Error::ShapeMismatch {
            op: "block_triangular_drazin",
            left: (q, p),
            right: c.shape(),
        });
    }
    let (a_g, z, d_g) = triangular_correction(a, c, d)?;
    Matrix::block2x2(&a_g, &Matrix::zeros(p, q), &z, &d_g)
}

/// `d^π c a^π`; `[[a, 0], [c, d]]` is group invertible iff this vanishes
/// (given group invertible `a` and `d`).
pub fn block_triangular_obstruction(a: &Matrix, c: &Matrix, d: &Matrix) -> Result<Matrix> {
    let a_pi = spectral_idempotent(a)?;
    let d_pi = spectral_idempotent(d)?;
    d_pi.checked_mul(c)?.checked_mul(&a_pi)
}

impl PierceSplit {
    /// Drazin inverse of `T = a + c + d` when the `b` corner vanishes, with
    /// corners kept at full size: `T^D = a^# + z + d^#`.
    pub fn lower_triangular_drazin(&self) -> Result<Matrix> {
        if !self.b.is_zero() {
            return Err(Error::ShapeMismatch {
                op: "lower_triangular_drazin (b corner is nonzero)",
                left: self.b.shape(),
                right: self.b.shape(),
            });
        }
        let (a_g, z, d_g) = triangular_correction(&self.a, &self.c, &self.d)?;
        Ok(&(&a_g + &z) + &d_g)
    }
}
