//! Independent routes to the same group inverse: similarity, transposition,
//! delegation, the Pierce block-triangular route, Cline's formula, and
//! the agreement of expanded and factored closed forms.

use serde::Serialize;

use super::conditions::Ingredients;
use super::formulas::{
    ef_f0_left_expanded_blocks, ef_f0_right_proof_blocks, ef_f0_right_statement_blocks, ef_i0_left,
    ef_i0_left_blocks, ef_f0_group_e, ei_f0_right_blocks, subblock_pieces, BlockGroupInverse,
};
use super::{assemble_m, BlockShape, Theorem};
use crate::drazin::{block_triangular_obstruction, cline, drazin};
use crate::error::Result;
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RouteCheck {
    pub name: String,
    pub holds: bool,
}

fn check(name: &str, holds: bool) -> RouteCheck {
    RouteCheck {
        name: name.to_string(),
        holds,
    }
}

fn conjugate(p_inv: &Matrix, x: &Matrix, p: &Matrix) -> Matrix {
    &(p_inv * x) * p
}

/// Evaluates every alternative route for `result`, which must come from the
/// constructor for `result.theorem` applied to `(E, F)`.
pub fn route_checks(e: &Matrix, f: &Matrix, result: &BlockGroupInverse) -> Result<Vec<RouteCheck>> {
    let ing = Ingredients::new(e, f)?;
    let n = ing.n();
    let i = Matrix::identity(n);
    let z = Matrix::zeros(n, n);
    let got = &result.assembled;
    let mut out = Vec::new();
    match result.theorem {
        Theorem::EiF0Right => {
            // e = diag(FF^#, I) splits M into a lower block-triangular form.
            let m = assemble_m(e, f, BlockShape::EiF0)?;
            let idem = Matrix::block_diag(&(f * ing.fd()), &i);
            let split = m.pierce_split(&idem)?;
            out.push(check("pierce corner b vanishes", split.b.is_zero()));
            out.push(check(
                "pierce d^pi c a^pi = 0",
                block_triangular_obstruction(&split.a, &split.c, &split.d)?.is_zero(),
            ));
            out.push(check("pierce block-triangular route", &split.lower_triangular_drazin()? == got));
        }
        Theorem::EfI0Right => {
            let p = Matrix::block2x2(&z, &i, &i, &-e)?;
            let p_inv = Matrix::block2x2(e, &i, &i, &z)?;
            let base = Matrix::block2x2_from(ei_f0_right_blocks(&ing));
            out.push(check("similarity with thm2.1", &conjugate(&p_inv, &base, &p) == got));
        }
        Theorem::EfI0Left => {
            let closed = Matrix::block2x2_from(ef_i0_left_blocks(&ing));
            out.push(check("closed form = transpose route", &closed == got));
        }
        Theorem::EiF0Left => {
            let p = Matrix::block2x2(e, &i, &i, &z)?;
            let p_inv = Matrix::block2x2(&z, &i, &i, &-e)?;
            let base = ef_i0_left(e, f)?.assembled;
            out.push(check("similarity with thm2.3", &conjugate(&p_inv, &base, &p) == got));
        }
        Theorem::EfI0Commuting => {
            out.push(check("delegation to thm2.3", &ef_i0_left(e, f)?.assembled == got));
        }
        Theorem::EfF0Right => {
            let statement = ef_f0_right_statement_blocks(&ing);
            for ((name, s), p) in ["Gamma", "Delta", "Lambda", "Xi"].iter().zip(&statement).zip(result.blocks()) {
                out.push(check(&format!("statement {name} = proof {name}"), s == p));
            }
            let pieces = subblock_pieces(&ing);
            let n_mat = Matrix::block2x2(e, &i, &(f * f), &z)?;
            let n_drazin = Matrix::block2x2(&pieces.alpha, &pieces.beta, &pieces.gamma, &pieces.delta)?;
            out.push(check("N^D closed form = direct", drazin(&n_mat)?.drazin == n_drazin));
            let a = Matrix::block2x2(e, &i, f, &z)?;
            let b = Matrix::block_diag(&i, f);
            out.push(check("cline M^D = A (N^D)^2 B", &cline(&a, &b)?.drazin == got));
        }
        Theorem::EfF0Left => {
            let [g, d, l, x] = ef_f0_left_expanded_blocks(&ing);
            out.push(check("expanded Gamma", g == result.gamma));
            out.push(check("expanded Xi", x == result.xi));
            out.push(check("expanded Lambda expression = upper-right block", l == result.delta));
            out.push(check("expanded Delta expression = lower-left block", d == result.lambda_blk));
        }
        Theorem::EfF0GroupE => {
            // Factored form on the transpose: needs only F^π EF = 0.
            let t = ing.transposed()?;
            let pieces = subblock_pieces(&t);
            let mirrored = Matrix::block2x2_from(ef_f0_right_proof_blocks(&t, &pieces)).transpose();
            out.push(check("closed form = transposed factored route", &mirrored == got));
        }
        Theorem::EfF0Commuting => {
            out.push(check("delegation to cor3.3", &ef_f0_group_e(e, f)?.assembled == got));
        }
    }
    Ok(out)
}

/// Residuals of the identities `F²α = 0`, `EαF = 0`, `FE^πF^π = 0` and
/// `FαF = 0` that make `M M^D M = M` in the identical-subblock case.
pub fn subblock_side_conditions(e: &Matrix, f: &Matrix) -> Result<Vec<(String, Matrix)>> {
    let ing = Ingredients::new(e, f)?;
    let alpha = subblock_pieces(&ing).alpha;
    Ok(vec![
        ("F^2 alpha".to_string(), &(f * f) * &alpha),
        ("E alpha F".to_string(), &(e * &alpha) * f),
        ("F E^pi F^pi".to_string(), &(f * ing.epi()) * ing.fpi()),
        ("F alpha F".to_string(), &(f * &alpha) * f),
    ])
}
