use serde::Serialize;

use super::Theorem;
use crate::drazin::{drazin, DrazinResult};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::GaussianRational;

/// `E`, `F` and their Drazin data, computed once and shared by the condition
/// checks and the closed forms.
#[derive(Debug, Clone)]
pub struct Ingredients {
    pub e: Matrix,
    pub f: Matrix,
    pub e_drazin: DrazinResult,
    pub f_drazin: DrazinResult,
}

impl Ingredients {
    pub fn new(e: &Matrix, f: &Matrix) -> Result<Self> {
        let n = e.require_square()?;
        if f.shape() != (n, n) {
            return Err(Error::ShapeMismatch {
                op: "block operands",
                left: e.shape(),
                right: f.shape(),
            });
        }
        Ok(Ingredients {
            e: e.clone(),
            f: f.clone(),
            e_drazin: drazin(e)?,
            f_drazin: drazin(f)?,
        })
    }

    pub fn n(&self) -> usize {
        self.e.rows()
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.n())
    }

    /// `E^D`
    pub fn ed(&self) -> &Matrix {
        &self.e_drazin.drazin
    }

    /// `E^π`
    pub fn epi(&self) -> &Matrix {
        &self.e_drazin.spectral_idempotent
    }

    /// `F^D`, which is `F^#` whenever `F` is group invertible.
    pub fn fd(&self) -> &Matrix {
        &self.f_drazin.drazin
    }

    /// `F^π`
    pub fn fpi(&self) -> &Matrix {
        &self.f_drazin.spectral_idempotent
    }

    pub fn transposed(&self) -> Result<Ingredients> {
        Ingredients::new(&self.e.transpose(), &self.f.transpose())
    }
}

/// A single checkable identity about `E` and `F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    #[serde(rename = "FEF^pi=0")]
    FEFpi,
    #[serde(rename = "E^pi F^pi=0")]
    EpiFpi,
    #[serde(rename = "EE^pi F^pi=0")]
    EEpiFpi,
    #[serde(rename = "F^pi EF=0")]
    FpiEF,
    #[serde(rename = "F^pi E^pi=0")]
    FpiEpi,
    #[serde(rename = "F^pi E^pi E=0")]
    FpiEpiE,
    #[serde(rename = "F group-invertible")]
    FGroupInvertible,
    #[serde(rename = "E group-invertible")]
    EGroupInvertible,
    #[serde(rename = "EF=lambda FE")]
    Commutes,
    #[serde(rename = "EF^2=FEF")]
    SquareCommutes,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::FEFpi => "FEF^pi=0",
            Condition::EpiFpi => "E^pi F^pi=0",
            Condition::EEpiFpi => "EE^pi F^pi=0",
            Condition::FpiEF => "F^pi EF=0",
            Condition::FpiEpi => "F^pi E^pi=0",
            Condition::FpiEpiE => "F^pi E^pi E=0",
            Condition::FGroupInvertible => "F group-invertible",
            Condition::EGroupInvertible => "E group-invertible",
            Condition::Commutes => "EF=lambda FE",
            Condition::SquareCommutes => "EF^2=FEF",
        }
    }

    /// Evaluates the condition; `holds` iff the residual is zero.
    pub fn evaluate(self, ing: &Ingredients) -> (Matrix, Option<GaussianRational>) {
        let (e, f) = (&ing.e, &ing.f);
        match self {
            Condition::FEFpi => (&(f * e) * ing.fpi(), None),
            Condition::EpiFpi => (ing.epi() * ing.fpi(), None),
            Condition::EEpiFpi => (&(e * ing.epi()) * ing.fpi(), None),
            Condition::FpiEF => (&(ing.fpi() * e) * f, None),
            Condition::FpiEpi => (ing.fpi() * ing.epi(), None),
            Condition::FpiEpiE => (&(ing.fpi() * ing.epi()) * e, None),
            // A = A² A^D exactly when ind(A) ≤ 1.
            Condition::FGroupInvertible => (&(&(f * f) * ing.fd()) - f, None),
            Condition::EGroupInvertible => (&(&(e * e) * ing.ed()) - e, None),
            Condition::Commutes => commutation_residual(e, f),
            Condition::SquareCommutes => (&(&(e * f) * f) - &(&(f * e) * f), None),
        }
    }
}

/// Searches λ with `EF = λFE`. `EF = 0` always admits λ = 0. Otherwise λ is
/// read off the first nonzero entry of `FE` and verified on every entry.
fn commutation_residual(e: &Matrix, f: &Matrix) -> (Matrix, Option<GaussianRational>) {
    let ef = e * f;
    let fe = f * e;
    if ef.is_zero() {
        return (ef, Some(GaussianRational::zero()));
    }
    let Some(pos) = fe.entries().iter().position(|x| !x.is_zero()) else {
        return (ef, None);
    };
    let lambda = &ef.entries()[pos] / &fe.entries()[pos];
    let residual = &ef - &fe.scale(&lambda);
    let found = residual.is_zero().then_some(lambda);
    (residual, found)
}

/// How a condition enters a representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    /// Must hold for the representation to apply.
    Standing,
    /// At least one of the alternatives must hold.
    Alternative,
    /// Holds iff the block matrix is group invertible (given the standing
    /// hypotheses).
    Equivalence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionEntry {
    pub name: Condition,
    pub role: Role,
    pub holds: bool,
    pub residual: Matrix,
    pub lambda: Option<GaussianRational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub theorem: Theorem,
    pub conditions: Vec<ConditionEntry>,
}

impl ConditionReport {
    pub fn get(&self, c: Condition) -> Option<&ConditionEntry> {
        self.conditions.iter().find(|e| e.name == c)
    }

    /// Name of the first failing standing hypothesis, if any. Alternatives
    /// are checked as a group.
    pub fn standing_failure(&self) -> Option<String> {
        let alternatives: Vec<&ConditionEntry> =
            self.conditions.iter().filter(|c| c.role == Role::Alternative).collect();
        if !alternatives.is_empty() && !alternatives.iter().any(|c| c.holds) {
            let names: Vec<&str> = alternatives.iter().map(|c| c.name.name()).collect();
            return Some(names.join(" or "));
        }
        self.conditions
            .iter()
            .find(|c| c.role == Role::Standing && !c.holds)
            .map(|c| c.name.name().to_string())
    }

    pub fn equivalence_failure(&self) -> Option<Condition> {
        self.conditions
            .iter()
            .find(|c| c.role == Role::Equivalence && !c.holds)
            .map(|c| c.name)
    }

    pub fn standing_holds(&self) -> bool {
        self.standing_failure().is_none()
    }

    pub fn equivalence_holds(&self) -> bool {
        self.equivalence_failure().is_none()
    }
}

pub(crate) fn condition_plan(theorem: Theorem) -> Vec<(Condition, Role)> {
    use Condition::*;
    use Role::*;
    match theorem {
        Theorem::EiF0Right | Theorem::EfI0Right => {
            vec![(FEFpi, Standing), (FGroupInvertible, Equivalence), (EpiFpi, Equivalence)]
        }
        Theorem::EfI0Left | Theorem::EiF0Left => {
            vec![(FpiEF, Standing), (FGroupInvertible, Equivalence), (FpiEpi, Equivalence)]
        }
        Theorem::EfI0Commuting => vec![
            (Commutes, Alternative),
            (SquareCommutes, Alternative),
            (FpiEF, Standing),
            (FGroupInvertible, Equivalence),
            (FpiEpi, Equivalence),
        ],
        Theorem::EfF0Right => vec![(FGroupInvertible, Standing), (FEFpi, Standing), (EEpiFpi, Equivalence)],
        Theorem::EfF0Left => vec![(FGroupInvertible, Standing), (FpiEF, Standing), (FpiEpiE, Equivalence)],
        Theorem::EfF0GroupE => vec![(EGroupInvertible, Standing), (FGroupInvertible, Standing), (FpiEF, Standing)],
        Theorem::EfF0Commuting => vec![
            (Commutes, Alternative),
            (SquareCommutes, Alternative),
            (EGroupInvertible, Standing),
            (FGroupInvertible, Standing),
            (FpiEF, Standing),
        ],
    }
}

pub(crate) fn report_for(theorem: Theorem, ing: &Ingredients) -> ConditionReport {
    let conditions = condition_plan(theorem)
        .into_iter()
        .map(|(name, role)| {
            let (residual, lambda) = name.evaluate(ing);
            let holds = residual.is_zero();
            ConditionEntry {
                name,
                role,
                holds,
                residual,
                lambda,
            }
        })
        .collect();
    ConditionReport { theorem, conditions }
}

/// Evaluates every hypothesis of `theorem` on `(E, F)`. Never fails on
/// mathematical grounds; only malformed shapes are errors.
pub fn check_conditions(e: &Matrix, f: &Matrix, theorem: Theorem) -> Result<ConditionReport> {
    Ok(report_for(theorem, &Ingredients::new(e, f)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> (Matrix, Matrix) {
        (
            Matrix::from_int_rows([[1, 2], [0, -1]]),
            Matrix::from_str_rows([["i", "i"], ["0", "0"]]).unwrap(),
        )
    }

    #[test]
    fn worked_example_conditions() {
        let (e, f) = example();
        let r = check_conditions(&e, &f, Theorem::EfF0Right).unwrap();
        assert!(r.get(Condition::FEFpi).unwrap().holds);
        assert!(r.get(Condition::EEpiFpi).unwrap().holds);
        assert!(r.standing_holds() && r.equivalence_holds());
    }

    #[test]
    fn zero_operands() {
        let z = Matrix::zeros(1, 1);
        let r = check_conditions(&z, &z, Theorem::EiF0Right).unwrap();
        assert!(r.get(Condition::FGroupInvertible).unwrap().holds);
        let c = r.get(Condition::EpiFpi).unwrap();
        assert!(!c.holds);
        assert_eq!(c.residual, Matrix::identity(1));
        assert_eq!(r.equivalence_failure(), Some(Condition::EpiFpi));
    }

    #[test]
    fn diagonal_commute_with_lambda_one() {
        let e = Matrix::from_int_rows([[2, 0], [0, 3]]);
        let f = Matrix::from_int_rows([[1, 0], [0, 5]]);
        let r = check_conditions(&e, &f, Theorem::EfI0Commuting).unwrap();
        let c = r.get(Condition::Commutes).unwrap();
        assert!(c.holds);
        assert_eq!(c.lambda, Some(GaussianRational::one()));
    }

    #[test]
    fn lambda_search() {
        // EF = -FE
        let e = Matrix::from_int_rows([[1, 0], [0, -1]]);
        let f = Matrix::from_int_rows([[0, 1], [1, 0]]);
        let (res, lambda) = commutation_residual(&e, &f);
        assert!(res.is_zero());
        assert_eq!(lambda, Some(GaussianRational::from_integer(-1)));

        // EF = 0 admits λ = 0 even though FE ≠ 0.
        let e = Matrix::from_int_rows([[0, 1], [0, 0]]);
        let f = Matrix::from_int_rows([[1, 0], [0, 0]]);
        assert_eq!(commutation_residual(&e, &f).1, Some(GaussianRational::zero()));

        // FE = 0 but EF ≠ 0: no λ.
        let (res, lambda) = commutation_residual(&f, &e);
        assert_eq!(lambda, None);
        assert!(!res.is_zero());
    }

    #[test]
    fn neither_commutation_law() {
        let e = Matrix::from_int_rows([[0, 1], [1, 0]]);
        let f = Matrix::from_int_rows([[1, 0], [0, 0]]);
        let r = check_conditions(&e, &f, Theorem::EfI0Commuting).unwrap();
        assert!(!r.get(Condition::Commutes).unwrap().holds);
        assert!(!r.get(Condition::SquareCommutes).unwrap().holds);
        assert_eq!(r.standing_failure().as_deref(), Some("EF=lambda FE or EF^2=FEF"));
    }

    #[test]
    fn holds_iff_residual_zero() {
        let (e, f) = example();
        for t in Theorem::ALL {
            let r = check_conditions(&e, &f, t).unwrap();
            for c in &r.conditions {
                assert_eq!(c.holds, c.residual.is_zero(), "{t} {:?}", c.name);
            }
        }
    }
}
