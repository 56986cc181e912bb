//! Seeded generation of `(E, F)` pairs that satisfy, or selectively
//! violate, the hypotheses of each representation, and the harness that
//! compares every constructor against a direct group inverse.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64`, so a [`GenSpec`]
//! (seed included) always reproduces the same pair.
//!
//! Pairs are built in a basis adapted to `F`. With `F = P diag(C, 0) P⁻¹`
//! and `Ẽ = P⁻¹ E P = [[E11, E12], [E21, E22]]`:
//!
//! * `FEF^π = 0` iff `E12 = 0`, and then `E^π F^π = 0` iff `E22` is
//!   invertible while `E E^π F^π = 0` iff `E22` is group invertible;
//! * `F^π EF = 0` iff `E21 = 0`, with the same conditions on `E22` for
//!   `F^π E^π = 0` and `F^π E^π E = 0`.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::block::{
    assemble_m, block_group_inverse, check_conditions, route_checks, BlockGroupInverse, ConditionReport,
    RouteCheck, Theorem,
};
use crate::drazin::drazin;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::GaussianRational;

const MAX_ATTEMPTS: usize = 64;

/// Entries are `a/b (+ c/d i)` with `|a|, |c| ≤ max_abs` and
/// `1 ≤ b, d ≤ max_den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EntryPool {
    pub max_abs: i64,
    pub max_den: i64,
    pub complex: bool,
}

impl Default for EntryPool {
    fn default() -> Self {
        EntryPool {
            max_abs: 3,
            max_den: 3,
            complex: true,
        }
    }
}

impl EntryPool {
    fn rational(&self, rng: &mut ChaCha8Rng) -> (i64, i64) {
        let num = rng.random_range(-self.max_abs..=self.max_abs);
        let den = if self.max_den > 1 && rng.random_bool(0.25) {
            rng.random_range(2..=self.max_den)
        } else {
            1
        };
        (num, den)
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng) -> GaussianRational {
        let re = self.rational(rng);
        let im = if self.complex && rng.random_bool(0.2) {
            self.rational(rng)
        } else {
            (0, 1)
        };
        GaussianRational::from_parts(re, im)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenSpec {
    pub n: usize,
    pub rank_f: usize,
    pub theorem: Theorem,
    pub satisfy_equivalence: bool,
    pub seed: u64,
    pub pool: EntryPool,
}

impl GenSpec {
    pub fn new(theorem: Theorem, n: usize, rank_f: usize, satisfy_equivalence: bool, seed: u64) -> Self {
        GenSpec {
            n,
            rank_f,
            theorem,
            satisfy_equivalence,
            seed,
            pool: EntryPool::default(),
        }
    }
}

fn random_matrix(rows: usize, cols: usize, pool: &EntryPool, rng: &mut ChaCha8Rng) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| pool.sample(rng))
}

/// A random invertible matrix and its inverse. Falls back to a unit
/// lower-triangular matrix if resampling keeps hitting singular ones.
fn random_invertible(n: usize, pool: &EntryPool, rng: &mut ChaCha8Rng) -> (Matrix, Matrix) {
    for _ in 0..MAX_ATTEMPTS {
        let m = random_matrix(n, n, pool, rng);
        if let Ok(inv) = m.inverse() {
            return (m, inv);
        }
    }
    let m = Matrix::from_fn(n, n, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Equal => GaussianRational::one(),
        std::cmp::Ordering::Greater => pool.sample(rng),
        std::cmp::Ordering::Less => GaussianRational::zero(),
    });
    let inv = m.inverse().expect("unit triangular");
    (m, inv)
}

/// A random change of basis `L U` with unit-triangular factors whose
/// entries are Gaussian integers, so the inverse stays integral and entry
/// growth stays mild.
fn random_unimodular(n: usize, pool: &EntryPool, rng: &mut ChaCha8Rng) -> (Matrix, Matrix) {
    let entry = |rng: &mut ChaCha8Rng| {
        let re = rng.random_range(-2..=2);
        let im = if pool.complex && rng.random_bool(0.15) { rng.random_range(-1..=1) } else { 0 };
        GaussianRational::from_parts((re, 1), (im, 1))
    };
    let mut tri = |lower: bool| {
        Matrix::from_fn(n, n, |r, c| {
            if r == c {
                GaussianRational::one()
            } else if (r > c) == lower {
                entry(rng)
            } else {
                GaussianRational::zero()
            }
        })
    };
    let l = tri(true);
    let u = tri(false);
    let p = &l * &u;
    let inv = p.inverse().expect("unit triangular factors");
    (p, inv)
}

/// `P diag(C, 0) P⁻¹` with `C` an invertible `r × r`; returns the matrix
/// and `(P, P⁻¹, C)`.
fn group_invertible_parts(n: usize, r: usize, pool: &EntryPool, rng: &mut ChaCha8Rng) -> (Matrix, Matrix, Matrix, Matrix) {
    let (c, _) = random_invertible(r, pool, rng);
    let (p, p_inv) = random_unimodular(n, pool, rng);
    let core = Matrix::block_diag(&c, &Matrix::zeros(n - r, n - r));
    (&(&p * &core) * &p_inv, p, p_inv, c)
}

fn random_group_invertible(n: usize, pool: &EntryPool, rng: &mut ChaCha8Rng) -> Matrix {
    let r = rng.random_range(0..=n);
    group_invertible_parts(n, r, pool, rng).0
}

/// A random `n × n` matrix of rank `r`, with index ≤ 1.
pub fn gen_group_invertible(n: usize, r: usize, seed: u64) -> Result<Matrix> {
    if r > n {
        return Err(Error::GenerationExhausted {
            attempts: 0,
            reason: format!("rank {r} exceeds size {n}"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(group_invertible_parts(n, r, &EntryPool::default(), &mut rng).0)
}

/// `Q diag(D, 0) Q⁻¹`: singular, arbitrary otherwise. Requires `m ≥ 1`.
fn random_singular(m: usize, pool: &EntryPool, rng: &mut ChaCha8Rng) -> Matrix {
    let d = random_matrix(m - 1, m - 1, pool, rng);
    let (q, q_inv) = random_unimodular(m, pool, rng);
    &(&q * &Matrix::block_diag(&d, &Matrix::zeros(1, 1))) * &q_inv
}

/// `Q diag(D, J) Q⁻¹` with `J` a 2 × 2 nilpotent Jordan block, so the
/// index is at least 2. Requires `m ≥ 2`.
fn random_index_two_plus(m: usize, pool: &EntryPool, rng: &mut ChaCha8Rng) -> Matrix {
    let d = random_matrix(m - 2, m - 2, pool, rng);
    let j = Matrix::from_int_rows([[0, 1], [0, 0]]);
    let (q, q_inv) = random_unimodular(m, pool, rng);
    &(&q * &Matrix::block_diag(&d, &j)) * &q_inv
}

/// `a₀ I + a₁ C`, which commutes with `C`.
fn polynomial_in(c: &Matrix, pool: &EntryPool, rng: &mut ChaCha8Rng) -> Matrix {
    let a0 = pool.sample(rng);
    let a1 = pool.sample(rng);
    &Matrix::identity(c.rows()).scale(&a0) + &c.scale(&a1)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    /// `E12 = 0`
    Right,
    /// `E21 = 0`
    Left,
    /// `E21 = 0` with `E11 C = C E11`, and `E12 = 0` or `E11 = 0` mixed in
    Commuting,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Tail {
    Invertible,
    Singular,
    GroupInvertible,
    IndexTwoPlus,
}

fn plan(theorem: Theorem, satisfy: bool) -> (Family, Tail) {
    use Tail::*;
    match theorem {
        Theorem::EiF0Right | Theorem::EfI0Right => (Family::Right, if satisfy { Invertible } else { Singular }),
        Theorem::EfI0Left | Theorem::EiF0Left => (Family::Left, if satisfy { Invertible } else { Singular }),
        Theorem::EfI0Commuting => (Family::Commuting, if satisfy { Invertible } else { Singular }),
        Theorem::EfF0Right => (Family::Right, if satisfy { GroupInvertible } else { IndexTwoPlus }),
        Theorem::EfF0Left => (Family::Left, if satisfy { GroupInvertible } else { IndexTwoPlus }),
        Theorem::EfF0GroupE => (Family::Left, GroupInvertible),
        Theorem::EfF0Commuting => (Family::Commuting, GroupInvertible),
    }
}

/// Ranks of `F` for which `spec`'s target is reachable at size `n`.
pub fn feasible_ranks(theorem: Theorem, n: usize, satisfy_equivalence: bool) -> Option<RangeInclusive<usize>> {
    if n == 0 {
        return None;
    }
    if satisfy_equivalence {
        return Some(0..=n);
    }
    if !theorem.has_equivalence() {
        return None;
    }
    let slack = match plan(theorem, false).1 {
        Tail::IndexTwoPlus => 2,
        _ => 1,
    };
    (n >= slack).then(|| 0..=n - slack)
}

fn candidate(spec: &GenSpec, rng: &mut ChaCha8Rng) -> (Matrix, Matrix) {
    let (n, r, pool) = (spec.n, spec.rank_f, &spec.pool);
    let m = n - r;
    let (family, tail) = plan(spec.theorem, spec.satisfy_equivalence);
    let (f, p, p_inv, c) = group_invertible_parts(n, r, pool, rng);

    let e22 = match tail {
        _ if m == 0 => Matrix::zeros(0, 0),
        Tail::Invertible => random_invertible(m, pool, rng).0,
        Tail::Singular => random_singular(m, pool, rng),
        Tail::GroupInvertible => random_group_invertible(m, pool, rng),
        Tail::IndexTwoPlus if m >= 2 => random_index_two_plus(m, pool, rng),
        Tail::IndexTwoPlus => random_matrix(m, m, pool, rng),
    };
    let group_e = spec.theorem == Theorem::EfF0GroupE;
    let (e11, e12, e21) = match family {
        Family::Right => (random_matrix(r, r, pool, rng), Matrix::zeros(r, m), random_matrix(m, r, pool, rng)),
        Family::Left => {
            let e11 = if group_e && rng.random_bool(0.25) {
                random_group_invertible(r, pool, rng)
            } else {
                random_matrix(r, r, pool, rng)
            };
            (e11, random_matrix(r, m, pool, rng), Matrix::zeros(m, r))
        }
        Family::Commuting => {
            // 0: EF = FE, 1: EF = 0, 2: EF² = FEF
            let kind = rng.random_range(0..3);
            let e11 = if kind == 1 {
                Matrix::zeros(r, r)
            } else {
                polynomial_in(&c, pool, rng)
            };
            let e12 = if kind == 0 {
                Matrix::zeros(r, m)
            } else {
                random_matrix(r, m, pool, rng)
            };
            (e11, e12, Matrix::zeros(m, r))
        }
    };
    let adapted = Matrix::block2x2(&e11, &e12, &e21, &e22).expect("block sizes agree");
    (&(&p * &adapted) * &p_inv, f)
}

fn hits_target(report: &ConditionReport, satisfy: bool) -> bool {
    report.standing_holds() && report.equivalence_holds() == satisfy
}

/// Generates `(E, F)` meeting every standing hypothesis of `spec.theorem`,
/// with the equivalence condition true or false as requested. Every
/// returned pair has been re-checked with [`check_conditions`].
pub fn gen_pair(spec: &GenSpec) -> Result<(Matrix, Matrix)> {
    if spec.n == 0 || spec.rank_f > spec.n {
        return Err(Error::GenerationExhausted {
            attempts: 0,
            reason: format!("invalid size {} / rank {}", spec.n, spec.rank_f),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..MAX_ATTEMPTS {
        let (e, f) = candidate(spec, &mut rng);
        let report = check_conditions(&e, &f, spec.theorem)?;
        if hits_target(&report, spec.satisfy_equivalence) {
            return Ok((e, f));
        }
    }
    Err(Error::GenerationExhausted {
        attempts: MAX_ATTEMPTS,
        reason: format!(
            "{} n={} rank_f={} satisfy_equivalence={}",
            spec.theorem, spec.n, spec.rank_f, spec.satisfy_equivalence
        ),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Constructor and oracle produced the same group inverse.
    AgreeExists,
    /// Constructor certified non-existence and the oracle found index ≥ 2.
    AgreeNotExists,
    /// A standing hypothesis failed, so the representation makes no claim.
    Inapplicable,
    #[serde(rename = "MISMATCH")]
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleOutcome {
    GroupInverse(Matrix),
    NotGroupInvertible { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub spec: Option<GenSpec>,
    pub conditions: ConditionReport,
    #[serde(serialize_with = "serialize_formula")]
    pub formula_result: std::result::Result<BlockGroupInverse, Error>,
    pub oracle_result: OracleOutcome,
    pub verdict: Verdict,
}

fn serialize_formula<S: serde::Serializer>(
    r: &std::result::Result<BlockGroupInverse, Error>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(1))?;
    match r {
        Ok(b) => map.serialize_entry("assembled", &b.assembled)?,
        Err(e) => map.serialize_entry("error", &e.to_string())?,
    }
    map.end()
}

/// Runs the constructor for `theorem` and the direct group inverse of the
/// assembled block matrix, and classifies the outcome.
pub fn verify_instance(e: &Matrix, f: &Matrix, theorem: Theorem) -> Result<VerificationReport> {
    let conditions = check_conditions(e, f, theorem)?;
    let m = assemble_m(e, f, theorem.shape())?;
    let d = drazin(&m)?;
    let oracle_result = if d.index <= 1 {
        OracleOutcome::GroupInverse(d.drazin)
    } else {
        OracleOutcome::NotGroupInvertible { index: d.index }
    };
    let formula_result = block_group_inverse(theorem, e, f);
    let verdict = match (&formula_result, &oracle_result) {
        (Ok(b), OracleOutcome::GroupInverse(g)) if &b.assembled == g => Verdict::AgreeExists,
        (Err(Error::BlockNotGroupInvertible { .. }), OracleOutcome::NotGroupInvertible { .. }) => {
            Verdict::AgreeNotExists
        }
        (Err(Error::HypothesisViolated { .. }), _) => Verdict::Inapplicable,
        _ => Verdict::Mismatch,
    };
    Ok(VerificationReport {
        spec: None,
        conditions,
        formula_result,
        oracle_result,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignConfig {
    pub theorem: Theorem,
    pub trials: usize,
    pub max_n: usize,
    pub seed: u64,
    /// Generate instances that violate the equivalence condition.
    pub negative: bool,
    pub pool: EntryPool,
}

impl CampaignConfig {
    pub fn new(theorem: Theorem, trials: usize, max_n: usize, seed: u64) -> Self {
        CampaignConfig {
            theorem,
            trials,
            max_n,
            seed,
            negative: false,
            pool: EntryPool::default(),
        }
    }

    /// The spec for trial `k`: sizes cycle through the feasible ones and the
    /// rank of `F` is drawn from a generator seeded by `seed + k`.
    pub fn trial_spec(&self, k: usize) -> Result<GenSpec> {
        let satisfy = !self.negative;
        let sizes: Vec<usize> = (1..=self.max_n)
            .filter(|&n| feasible_ranks(self.theorem, n, satisfy).is_some())
            .collect();
        if sizes.is_empty() {
            return Err(Error::GenerationExhausted {
                attempts: 0,
                reason: format!(
                    "{} has no feasible size up to {} with satisfy_equivalence={satisfy}",
                    self.theorem, self.max_n
                ),
            });
        }
        let n = sizes[k % sizes.len()];
        let ranks = feasible_ranks(self.theorem, n, satisfy).expect("filtered above");
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed.wrapping_add(k as u64));
        let rank_f = rng.random_range(ranks);
        Ok(GenSpec {
            n,
            rank_f,
            theorem: self.theorem,
            satisfy_equivalence: satisfy,
            seed: rng.random(),
            pool: self.pool,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialOutcome {
    pub trial: usize,
    pub spec: GenSpec,
    pub verdict: Verdict,
    /// Names of alternative routes that disagreed with the constructor.
    pub failed_routes: Vec<String>,
    #[serde(skip)]
    pub pair: (Matrix, Matrix),
    #[serde(skip)]
    pub routes: Vec<RouteCheck>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CampaignSummary {
    pub trials: usize,
    pub agree_exists: usize,
    pub agree_not_exists: usize,
    pub inapplicable: usize,
    pub mismatch: usize,
    pub route_failures: usize,
}

impl CampaignSummary {
    pub fn clean(&self) -> bool {
        self.mismatch == 0 && self.route_failures == 0 && self.inapplicable == 0
    }
}

pub fn run_trial(k: usize, spec: GenSpec) -> Result<TrialOutcome> {
    let (e, f) = gen_pair(&spec)?;
    let mut report = verify_instance(&e, &f, spec.theorem)?;
    report.spec = Some(spec.clone());
    let routes = match &report.formula_result {
        Ok(b) => route_checks(&e, &f, b)?,
        Err(_) => Vec::new(),
    };
    let failed_routes = routes.iter().filter(|r| !r.holds).map(|r| r.name.clone()).collect();
    Ok(TrialOutcome {
        trial: k,
        spec,
        verdict: report.verdict,
        failed_routes,
        pair: (e, f),
        routes,
    })
}

/// Runs every trial (in parallel on the current rayon pool); outcomes are
/// ordered by trial index.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<(Vec<TrialOutcome>, CampaignSummary)> {
    let specs: Vec<GenSpec> = (0..cfg.trials).map(|k| cfg.trial_spec(k)).collect::<Result<_>>()?;
    let outcomes: Vec<TrialOutcome> = specs
        .into_par_iter()
        .enumerate()
        .map(|(k, spec)| run_trial(k, spec))
        .collect::<Result<_>>()?;
    let mut summary = CampaignSummary {
        trials: outcomes.len(),
        ..Default::default()
    };
    for o in &outcomes {
        match o.verdict {
            Verdict::AgreeExists => summary.agree_exists += 1,
            Verdict::AgreeNotExists => summary.agree_not_exists += 1,
            Verdict::Inapplicable => summary.inapplicable += 1,
            Verdict::Mismatch => summary.mismatch += 1,
        }
        if !o.failed_routes.is_empty() {
            summary.route_failures += 1;
        }
    }
    Ok((outcomes, summary))
}
