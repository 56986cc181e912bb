use std::collections::BTreeMap;

use serde::Serialize;

use super::conditions::{report_for, ConditionReport, Ingredients};
use super::{assemble_m, Theorem};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// A group inverse `[[Γ, Δ], [Λ, Ξ]]` produced by a closed form, together
/// with the intermediate matrices the formula used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockGroupInverse {
    pub theorem: Theorem,
    pub gamma: Matrix,
    pub delta: Matrix,
    #[serde(rename = "lambda")]
    pub lambda_blk: Matrix,
    pub xi: Matrix,
    pub assembled: Matrix,
    pub intermediates: BTreeMap<String, Matrix>,
    pub conditions: ConditionReport,
}

impl BlockGroupInverse {
    fn from_blocks(theorem: Theorem, [gamma, delta, lambda_blk, xi]: [Matrix; 4], conditions: ConditionReport) -> Self {
        let assembled = Matrix::block2x2(&gamma, &delta, &lambda_blk, &xi).expect("blocks share one size");
        BlockGroupInverse {
            theorem,
            gamma,
            delta,
            lambda_blk,
            xi,
            assembled,
            intermediates: BTreeMap::new(),
            conditions,
        }
    }

    fn from_assembled(theorem: Theorem, assembled: Matrix, conditions: ConditionReport) -> Self {
        let blocks = assembled.quarters().expect("assembled inverse is 2n x 2n");
        Self::from_blocks(theorem, blocks, conditions)
    }

    fn with(mut self, name: &str, m: &Matrix) -> Self {
        self.intermediates.insert(name.to_string(), m.clone());
        self
    }

    fn with_ingredients(self, ing: &Ingredients) -> Self {
        self.with("E^D", ing.ed())
            .with("E^pi", ing.epi())
            .with("F^#", ing.fd())
            .with("F^pi", ing.fpi())
    }

    /// The block matrix this is the group inverse of.
    pub fn block_matrix(&self, e: &Matrix, f: &Matrix) -> Result<Matrix> {
        assemble_m(e, f, self.theorem.shape())
    }

    pub fn blocks(&self) -> [&Matrix; 4] {
        [&self.gamma, &self.delta, &self.lambda_blk, &self.xi]
    }
}

/// Computes the ingredients and refuses unless every standing hypothesis
/// and the equivalence condition hold.
fn admit(theorem: Theorem, e: &Matrix, f: &Matrix) -> Result<(Ingredients, ConditionReport)> {
    let ing = Ingredients::new(e, f)?;
    let report = report_for(theorem, &ing);
    if let Some(condition) = report.standing_failure() {
        return Err(Error::HypothesisViolated {
            theorem: theorem.id().to_string(),
            condition,
        });
    }
    if let Some(c) = report.equivalence_failure() {
        return Err(Error::BlockNotGroupInvertible {
            theorem: theorem.id().to_string(),
            condition: c.name().to_string(),
        });
    }
    Ok((ing, report))
}

/// `[[E, I], [F, 0]]` under `FEF^π = 0`:
///
/// ```text
/// Γ = E^D F^π                  Δ = F^# + (E^D F^π)² - E^D F^π E F^#
/// Λ = F F^#                    Ξ = -F F^# E F^#
/// ```
pub(crate) fn ei_f0_right_blocks(ing: &Ingredients) -> [Matrix; 4] {
    let (e, f, fs) = (&ing.e, &ing.f, ing.fd());
    let edfp = ing.ed() * ing.fpi();
    let ffs = f * fs;
    [
        edfp.clone(),
        &(fs + &(&edfp * &edfp)) - &(&(&edfp * e) * fs),
        ffs.clone(),
        -(&(&ffs * e) * fs),
    ]
}

/// `[[E, F], [I, 0]]` under `FEF^π = 0`:
///
/// ```text
/// Γ = F^π E^D F^π              Δ = I - F^π E^D F^π E
/// Λ = F^# + (E^D F^π)² - E^D F^π E F^#
/// Ξ = E^D F^π - F^# E - (E^D F^π)² E + E^D F^π E F^# E
/// ```
pub(crate) fn ef_i0_right_blocks(ing: &Ingredients) -> [Matrix; 4] {
    let (e, fs, fpi) = (&ing.e, ing.fd(), ing.fpi());
    let edfp = ing.ed() * fpi;
    let edfp2 = &edfp * &edfp;
    let fp_ed_fp = fpi * &edfp;
    let lambda = &(fs + &edfp2) - &(&(&edfp * e) * fs);
    let xi = &(&(&edfp - &(fs * e)) - &(&edfp2 * e)) + &(&(&(&edfp * e) * fs) * e);
    [fp_ed_fp.clone(), &ing.identity() - &(&fp_ed_fp * e), lambda, xi]
}

/// `[[E, F], [I, 0]]` under `F^π EF = 0`, written out:
///
/// ```text
/// Γ = F^π E^D                  Δ = F F^#
/// Λ = F^# + (F^π E^D)² - F^# E F^π E^D
/// Ξ = -F^# E F F^#
/// ```
pub(crate) fn ef_i0_left_blocks(ing: &Ingredients) -> [Matrix; 4] {
    let (e, f, fs) = (&ing.e, &ing.f, ing.fd());
    let fped = ing.fpi() * ing.ed();
    let ffs = f * fs;
    [
        fped.clone(),
        ffs.clone(),
        &(fs + &(&fped * &fped)) - &(&(fs * e) * &fped),
        -(&(fs * e) * &ffs),
    ]
}

/// `[[E, I], [F, 0]]` under `F^π EF = 0`:
///
/// ```text
/// Γ = F^π E^D F^π              Δ = F^# + (F^π E^D)² - F^# E F^π E^D
/// Λ = I - E F^π E^D F^π
/// Ξ = F^π E^D - E F^# - E (F^π E^D)² + E F^# E F^π E^D
/// ```
pub(crate) fn ei_f0_left_blocks(ing: &Ingredients) -> [Matrix; 4] {
    let (e, fs, fpi) = (&ing.e, ing.fd(), ing.fpi());
    let fped = fpi * ing.ed();
    let fped2 = &fped * &fped;
    let fp_ed_fp = &fped * fpi;
    let delta = &(fs + &fped2) - &(&(fs * e) * &fped);
    let xi = &(&(&fped - &(e * fs)) - &(e * &fped2)) + &(&(&(e * fs) * e) * &fped);
    [fp_ed_fp.clone(), delta, &ing.identity() - &(e * &fp_ed_fp), xi]
}

/// Blocks `α, β, γ, δ` of `N^D` for `N = [[E, I], [F², 0]]`. `N` itself
/// has index 2 whenever `E^π F^π ≠ 0`; only the Drazin inverse is needed.
pub(crate) struct SubblockPieces {
    pub alpha: Matrix,
    pub beta: Matrix,
    pub gamma: Matrix,
    pub delta: Matrix,
}

/// ```text
/// α = E^D F^π + E^π F^π E (F^#)²
/// β = (F^#)² + E^D F^π E^D F^π - E^π F^π E (F^#)² E (F^#)² - E^D F^π E (F^#)²
/// γ = F F^#
/// δ = -F F^# E (F^#)²
/// ```
pub(crate) fn subblock_pieces(ing: &Ingredients) -> SubblockPieces {
    let (e, f, fs) = (&ing.e, &ing.f, ing.fd());
    let fs2 = fs * fs;
    let edfp = ing.ed() * ing.fpi();
    let w = &(&(ing.epi() * ing.fpi()) * e) * &fs2;
    let e_fs2 = e * &fs2;
    let ffs = f * fs;
    SubblockPieces {
        alpha: &edfp + &w,
        beta: &(&(&fs2 + &(&edfp * &edfp)) - &(&w * &e_fs2)) - &(&edfp * &e_fs2),
        gamma: ffs.clone(),
        delta: -(&ffs * &e_fs2),
    }
}

/// `M^D = [[E, I], [F, 0]] (N^D)² diag(I, F)`, multiplied out:
///
/// ```text
/// Γ = (Eα + γ)α + (Eβ + δ)γ    Δ = (Eα + γ)βF + (Eβ + δ)δF
/// Λ = F(α² + βγ)               Ξ = F(αβ + βδ)F
/// ```
pub(crate) fn ef_f0_right_proof_blocks(ing: &Ingredients, p: &SubblockPieces) -> [Matrix; 4] {
    let (e, f) = (&ing.e, &ing.f);
    let (a, b, g, d) = (&p.alpha, &p.beta, &p.gamma, &p.delta);
    let left = &(e * a) + g;
    let right = &(e * b) + d;
    [
        &(&left * a) + &(&right * g),
        &(&(&left * b) * f) + &(&(&right * d) * f),
        f * &(&(a * a) + &(b * g)),
        &(f * &(&(a * b) + &(b * d))) * f,
    ]
}

/// The expanded closed form for `[[E, F], [F, 0]]` under `FEF^π = 0`, with
/// `D` standing for `E^D` (or `E^#` when `E` is group invertible):
///
/// ```text
/// Γ = [I - E^π F^π][D F^π + E^π F^π E (F^#)²] + E^π F^π E (F^#)²
/// Δ = [I - E^π F^π][F^# - E^π F^π E (F^#)² E F^# - D F^π E F^#] - E^π F^π E (F^#)² E F^#
/// Λ = F[D F^π + E^π F^π E (F^#)²]² + F^# - F E^π F^π [E (F^#)²]² - F D F^π E (F^#)²
/// Ξ = [F D F^π + F E^π F^π E (F^#)²][F^# - E^π F^π E (F^#)² E F^# - D F^π E F^#]
///     - [F^# - F E^π F^π E (F^#)² E (F^#)² - F D F^π E (F^#)²] E F^#
/// ```
pub(crate) fn ef_f0_right_statement_blocks(ing: &Ingredients) -> [Matrix; 4] {
    let (e, f, fs) = (&ing.e, &ing.f, ing.fd());
    let fs2 = fs * fs;
    let e_fs2 = e * &fs2;
    let epfp = ing.epi() * ing.fpi();
    let edfp = ing.ed() * ing.fpi();
    let w = &epfp * &e_fs2;
    let u = &ing.identity() - &epfp;
    let head = &edfp + &w;
    let e_fs = e * fs;
    let tail = &(fs - &(&w * &e_fs)) - &(&edfp * &e_fs);
    let gamma = &(&u * &head) + &w;
    let delta = &(&u * &tail) - &(&w * &e_fs);
    let lambda = &(&(&(f * &(&head * &head)) + fs) - &(&(f * &epfp) * &(&e_fs2 * &e_fs2))) - &(&(f * &edfp) * &e_fs2);
    let inner = &(fs - &(&(&(f * &w) * e) * &fs2)) - &(&(f * &edfp) * &e_fs2);
    let xi = &(&(f * &head) * &tail) - &(&inner * &e_fs);
    [gamma, delta, lambda, xi]
}

/// The expanded transpose-side closed form for `[[E, F], [F, 0]]` under
/// `F^π EF = 0`, labelled `(Γ, Δ, Λ, Ξ)`:
///
/// ```text
/// Γ = [F^π E^D + (F^#)² E F^π E^π][I - F^π E^π] + (F^#)² E F^π E^π
/// Δ = [F^# - F^# E (F^#)² E F^π E^π - F^# E F^π E^D][I - F^π E^π] - F^# E (F^#)² E F^π E^π
/// Λ = [F^π E^D + (F^#)² E F^π E^π]² F + F^# - [(F^#)² E]² F^π E^π F - (F^#)² E F^π E^D F
/// Ξ = [F^# - F^# E (F^#)² E F^π E^π - F^# E F^π E^D][F^π E^D F + (F^#)² E F^π E^π F]
///     - F^# E [F^# - (F^#)² E (F^#)² E F^π E^π F - (F^#)² E F^π E^D F]
/// ```
///
/// Transposing the `FEF^π = 0` form puts the `Λ` expression in the upper
/// right and the `Δ` expression in the lower left, the reverse of the labels.
pub(crate) fn ef_f0_left_expanded_blocks(ing: &Ingredients) -> [Matrix; 4] {
    let (e, f, fs) = (&ing.e, &ing.f, ing.fd());
    let fs2 = fs * fs;
    let fs2_e = &fs2 * e;
    let fpep = ing.fpi() * ing.epi();
    let fped = ing.fpi() * ing.ed();
    let w = &fs2_e * &fpep;
    let u = &ing.identity() - &fpep;
    let head = &fped + &w;
    let fs_e = fs * e;
    let tail = &(fs - &(&fs_e * &w)) - &(&fs_e * &fped);
    let gamma = &(&head * &u) + &w;
    let delta = &(&tail * &u) - &(&fs_e * &w);
    let lambda = &(&(&(&(&head * &head) * f) + fs) - &(&(&(&fs2_e * &fs2_e) * &fpep) * f)) - &(&(&fs2_e * &fped) * f);
    let inner = &(fs - &(&(&(&fs2_e * &fs2_e) * &fpep) * f)) - &(&(&fs2_e * &fped) * f);
    let xi = &(&tail * &(&(&fped * f) + &(&w * f))) - &(&fs_e * &inner);
    [gamma, delta, lambda, xi]
}

/// `[[E, I], [F, 0]]` under `FEF^π = 0`. Group invertible iff `F` is group
/// invertible and `E^π F^π = 0`.
pub fn ei_f0_right(e: &Matrix, f: &Matrix) -> Result<BlockGroupInverse> {
    let theorem = Theorem::EiF0Right;
    let (ing, report) = admit(theorem, e, f)?;
    Ok(BlockGroupInverse::from_blocks(theorem, ei_f0_right_blocks(&ing), report).with_ingredients(&ing))
}

/// `[[E, F], [I, 0]]` under `FEF^π = 0`; same existence criterion as
/// [`ei_f0_right`], to which it is similar via `P = [[0, I], [I, -E]]`.
pub fn ef_i0_right(e: &Matrix, f: &Matrix) -> Result<BlockGroupInverse> {
    let theorem = Theorem::EfI0Right;
    let (ing, report) = admit(theorem, e, f)?;
    Ok(BlockGroupInverse::from_blocks(theorem, ef_i0_right_blocks(&ing), report).with_ingredients(&ing))
}

/// `[[E, F], [I, 0]]` under `F^π EF = 0`, computed by applying
/// [`ei_f0_right`] to `(Eᵀ, Fᵀ)` and transposing. Group invertible iff `F`
/// is group invertible and `F^π E^π = 0`.
pub fn ef_i0_left(e: &Matrix, f: &Matrix) -> Result<BlockGroupInverse> {
    let theorem = Theorem::EfI0Left;
    let (ing, report) = admit(theorem, e, f)?;
    let t = ing.transposed()?;
    let mirrored = Matrix::block2x2_from(ei_f0_right_blocks(&t));
    Ok(BlockGroupInverse::from_assembled(theorem, mirrored.transpose(), report).with_ingredients(&ing))
}

/// `[[E, I], [F, 0]]` under `F^π EF = 0`; similar to [`ef_i0_left`] via
/// `P = [[E, I], [I, 0]]`.
pub fn ei_f0_left(e: &Matrix, f: &Matrix) -> Result<BlockGroupInverse> {
    let theorem = Theorem::EiF0Left;
    let (ing, report) = admit(theorem, e, f)?;
    Ok(BlockGroupInverse::from_blocks(theorem, ei_f0_left_blocks(&ing), report).with_ingredients(&ing))
}

/// `[[E, F], [I, 0]]` when `EF = λFE` or `EF² = FEF`. Either law forces
/// `F^π EF = 0` once `F` is group invertible, and the result is that of
/// [`ef_i0_left`].
pub fn ef_i0_commuting(e: &Matrix, f: &Matrix) -> Result<BlockGroupInverse> {
    let theorem = Theorem::EfI0Commuting;
    let (_, report) = admit(theorem, e, f)?;
    let mut out = ef_i0_left(e, f)?;
    out.theorem = theorem;
    out.conditions = report;
    Ok(out)
}

/// `[[E, F], [F, 0]]` with `F` group invertible and `FEF^π = 0`. Group
/// invertible iff `E E^π F^π = 0`.
///
/// The result goes through `N = [[E, I], [F², 0]]`: `M = AB` and `N = BA`
/// for `A = [[E, I], [F, 0]]`, `B = diag(I, F)`, so Cline's formula gives
/// `M^D = A (N^D)² B`. The expanded closed form is recorded alongside under
/// the `statement:` intermediates.
pub fn ef_f0_right(e: &Matrix, f: &Matrix) -> Result<BlockGroupInverse> {
    let theorem = Theorem::EfF0Right;
    let (ing, report) = admit(theorem, e, f)?;
    Ok(ef_f0_right_with(theorem, &ing, report))
}

fn ef_f0_right_with(theorem: Theorem, ing: &Ingredients, report: ConditionReport) -> BlockGroupInverse {
    let pieces = subblock_pieces(ing);
    let statement = ef_f0_right_statement_blocks(ing);
    let n_drazin = Matrix::block2x2(&pieces.alpha, &pieces.beta, &pieces.gamma, &pieces.delta)
        .expect("pieces share one size");
    let mut out = BlockGroupInverse::from_blocks(theorem, ef_f0_right_proof_blocks(ing, &pieces), report)
        .with_ingredients(ing)
        .with("alpha", &pieces.alpha)
        .with("beta", &pieces.beta)
        .with("gamma_N", &pieces.gamma)
        .with("delta_N", &pieces.delta)
        .with("N^D", &n_drazin);
    for (name, m) in ["Gamma", "Delta", "Lambda", "Xi"].iter().zip(statement.iter()) {
        out = out.with(&format!("statement:{name}"), m);
    }
    out
}

/// `[[E, F], [F, 0]]` with `F` group invertible and `F^π EF = 0`, computed
/// by applying [`ef_f0_right`] to `(Eᵀ, Fᵀ)` and transposing. Group
/// invertible iff `F^π E^π E = 0`.
pub fn ef_f0_left(e: &Matrix, f: &Matrix) -> Result<BlockGroupInverse> {
    let theorem = Theorem::EfF0Left;
    let (ing, report) = admit(theorem, e, f)?;
    ef_f0_left_with(theorem, &ing, report)
}

fn ef_f0_left_with(theorem: Theorem, ing: &Ingredients, report: ConditionReport) -> Result<BlockGroupInverse> {
    let t = ing.transposed()?;
    let pieces = subblock_pieces(&t);
    let mirrored = Matrix::block2x2_from(ef_f0_right_proof_blocks(&t, &pieces));
    let expanded = ef_f0_left_expanded_blocks(ing);
    let mut out = BlockGroupInverse::from_assembled(theorem, mirrored.transpose(), report).with_ingredients(ing);
    for (name, m) in ["Gamma", "Delta", "Lambda", "Xi"].iter().zip(expanded.iter()) {
        out = out.with(&format!("expanded:{name}"), m);
    }
    Ok(out)
}

/// `[[E, F], [F, 0]]` with `E` and `F` group invertible and `F^π EF = 0`;
/// always group invertible.
///
/// The expanded closed form is the `FEF^π = 0` one with `E^#` in place of
/// `E^D`, valid when `FEF^π = 0` also holds. When it does not, the
/// transposed form is used, which needs only `F^π EF = 0`.
pub fn ef_f0_group_e(e: &Matrix, f: &Matrix) -> Result<BlockGroupInverse> {
    let theorem = Theorem::EfF0GroupE;
    let (ing, report) = admit(theorem, e, f)?;
    group_e_with(theorem, &ing, report)
}

fn group_e_with(theorem: Theorem, ing: &Ingredients, report: ConditionReport) -> Result<BlockGroupInverse> {
    let right_holds = (&(&ing.f * &ing.e) * ing.fpi()).is_zero();
    if right_holds {
        let blocks = ef_f0_right_statement_blocks(ing);
        Ok(BlockGroupInverse::from_blocks(theorem, blocks, report)
            .with_ingredients(ing)
            .with("E^#", ing.ed()))
    } else {
        let t = ing.transposed()?;
        let mirrored = Matrix::block2x2_from(ef_f0_right_statement_blocks(&t));
        Ok(BlockGroupInverse::from_assembled(theorem, mirrored.transpose(), report)
            .with_ingredients(ing)
            .with("E^#", ing.ed()))
    }
}

/// [`ef_f0_group_e`] reached through `EF = λFE` or `EF² = FEF`.
pub fn ef_f0_commuting(e: &Matrix, f: &Matrix) -> Result<BlockGroupInverse> {
    let theorem = Theorem::EfF0Commuting;
    let (ing, report) = admit(theorem, e, f)?;
    group_e_with(theorem, &ing, report)
}

/// Dispatches to the constructor for `theorem`.
pub fn block_group_inverse(theorem: Theorem, e: &Matrix, f: &Matrix) -> Result<BlockGroupInverse> {
    match theorem {
        Theorem::EiF0Right => ei_f0_right(e, f),
        Theorem::EfI0Right => ef_i0_right(e, f),
        Theorem::EfI0Left => ef_i0_left(e, f),
        Theorem::EiF0Left => ei_f0_left(e, f),
        Theorem::EfI0Commuting => ef_i0_commuting(e, f),
        Theorem::EfF0Right => ef_f0_right(e, f),
        Theorem::EfF0Left => ef_f0_left(e, f),
        Theorem::EfF0GroupE => ef_f0_group_e(e, f),
        Theorem::EfF0Commuting => ef_f0_commuting(e, f),
    }
}

impl Matrix {
    pub(crate) fn block2x2_from([a, b, c, d]: [Matrix; 4]) -> Matrix {
        Matrix::block2x2(&a, &b, &c, &d).expect("blocks share one size")
    }
}
