//! Fixed inputs with known outputs, each confirmed against the oracle.

mod common;

use blockinv::block::{
    ef_f0_commuting, ef_f0_group_e, ef_f0_left, ef_f0_right, ef_i0_commuting, ef_i0_left, ef_i0_right, ei_f0_left,
    ei_f0_right, Condition,
};
use blockinv::instance::{verify_instance, Verdict};
use blockinv::{assemble_m, check_conditions, cline, drazin, group_inverse, BlockShape, Error, Matrix, Theorem};
use common::oracle;

fn ints<const R: usize, const C: usize>(rows: [[i64; C]; R]) -> Matrix {
    Matrix::from_int_rows(rows)
}

fn lower_pair() -> (Matrix, Matrix) {
    (ints([[1, 0], [1, 1]]), ints([[1, 0], [0, 0]]))
}

fn worked_pair() -> (Matrix, Matrix) {
    (
        ints([[1, 2], [0, -1]]),
        Matrix::from_str_rows([["i", "i"], ["0", "0"]]).unwrap(),
    )
}

fn worked_inverse() -> Matrix {
    Matrix::from_str_rows([
        ["0", "1", "-i", "-i"],
        ["0", "-1", "0", "0"],
        ["-i", "-i", "1", "1"],
        ["0", "0", "0", "0"],
    ])
    .unwrap()
}

fn swap_blocks(n: usize) -> Matrix {
    let i = Matrix::identity(n);
    let z = Matrix::zeros(n, n);
    Matrix::block2x2(&z, &i, &i, &z).unwrap()
}

fn oracle_for(e: &Matrix, f: &Matrix, shape: BlockShape) -> Matrix {
    let m = assemble_m(e, f, shape).unwrap();
    assert!(oracle::index(&m) <= 1);
    oracle::drazin(&m)
}

#[test]
fn lower_pair_first_shape() {
    let (e, f) = lower_pair();
    let expected = ints([[0, 0, 1, 0], [0, 1, -1, 1], [1, 0, -1, 0], [0, 0, 0, 0]]);
    assert_eq!(oracle_for(&e, &f, BlockShape::EiF0), expected);
    assert_eq!(ei_f0_right(&e, &f).unwrap().assembled, expected);
    let v = verify_instance(&e, &f, Theorem::EiF0Right).unwrap();
    assert_eq!(v.verdict, Verdict::AgreeExists);
}

#[test]
fn lower_pair_conjugated_shape() {
    let (e, f) = lower_pair();
    let i = Matrix::identity(2);
    let z = Matrix::zeros(2, 2);
    let p = Matrix::block2x2(&z, &i, &i, &-&e).unwrap();
    let p_inv = Matrix::block2x2(&e, &i, &i, &z).unwrap();
    assert_eq!(p.inverse().unwrap(), p_inv);
    let base = ei_f0_right(&e, &f).unwrap().assembled;
    let got = ef_i0_right(&e, &f).unwrap().assembled;
    assert_eq!(got, &(&p_inv * &base) * &p);
    assert_eq!(got, oracle_for(&e, &f, BlockShape::EfI0));
}

#[test]
fn transposed_lower_pair() {
    let (e, f) = lower_pair();
    let (et, ft) = (e.transpose(), f.transpose());
    let got = ef_i0_left(&et, &ft).unwrap().assembled;
    assert_eq!(got, oracle_for(&et, &ft, BlockShape::EfI0));
    let mirrored = ints([[0, 0, 1, 0], [0, 1, -1, 1], [1, 0, -1, 0], [0, 0, 0, 0]]).transpose();
    assert_eq!(mirrored, ei_f0_right(&e, &f).unwrap().assembled.transpose());
    assert_eq!(got, mirrored);
    let conj = ei_f0_left(&et, &ft).unwrap().assembled;
    assert_eq!(conj, oracle_for(&et, &ft, BlockShape::EiF0));
}

#[test]
fn swap_matrix_is_its_own_group_inverse() {
    for n in 1..=3 {
        let e = Matrix::zeros(n, n);
        let f = Matrix::identity(n);
        let swap = swap_blocks(n);
        for r in [
            ei_f0_right(&e, &f),
            ef_i0_right(&e, &f),
            ef_i0_left(&e, &f),
            ei_f0_left(&e, &f),
            ef_i0_commuting(&e, &f),
            ef_f0_right(&e, &f),
            ef_f0_left(&e, &f),
            ef_f0_group_e(&e, &f),
        ] {
            let r = r.unwrap();
            assert_eq!(r.assembled, swap, "{}", r.theorem);
        }
        let r = ef_f0_right(&e, &f).unwrap();
        assert!(r.gamma.is_zero() && r.xi.is_zero());
        assert!(r.delta.is_identity() && r.lambda_blk.is_identity());
    }
}

#[test]
fn zero_pair_has_no_group_inverse() {
    let z = Matrix::zeros(1, 1);
    for theorem in [Theorem::EiF0Right, Theorem::EfI0Right, Theorem::EfI0Left, Theorem::EiF0Left] {
        assert!(
            matches!(blockinv::block_group_inverse(theorem, &z, &z), Err(Error::BlockNotGroupInvertible { .. })),
            "{theorem}"
        );
        assert_eq!(oracle::index(&assemble_m(&z, &z, theorem.shape()).unwrap()), 2);
    }
    let report = check_conditions(&z, &z, Theorem::EiF0Right).unwrap();
    let entry = report.get(Condition::EpiFpi).unwrap();
    assert!(!entry.holds);
    assert_eq!(entry.residual, Matrix::identity(1));
    assert!(report.get(Condition::FGroupInvertible).unwrap().holds);
}

#[test]
fn worked_example_through_every_route() {
    let (e, f) = worked_pair();
    let report = check_conditions(&e, &f, Theorem::EfF0Right).unwrap();
    assert!(report.get(Condition::FEFpi).unwrap().holds);
    assert!(report.get(Condition::EEpiFpi).unwrap().holds);
    assert_eq!(oracle_for(&e, &f, BlockShape::EfF0), worked_inverse());

    let a = Matrix::block2x2(&e, &Matrix::identity(2), &f, &Matrix::zeros(2, 2)).unwrap();
    let b = Matrix::block_diag(&Matrix::identity(2), &f);
    let m = &a * &b;
    assert_eq!(m, assemble_m(&e, &f, BlockShape::EfF0).unwrap());
    assert_eq!(cline(&a, &b).unwrap().drazin, oracle::drazin(&m));

    let v = verify_instance(&e, &f, Theorem::EfF0Right).unwrap();
    assert_eq!(v.verdict, Verdict::AgreeExists);
}

#[test]
fn transposed_worked_example() {
    let (e, f) = worked_pair();
    let (et, ft) = (e.transpose(), f.transpose());
    assert_eq!(et, ints([[1, 0], [2, -1]]));
    let got = ef_f0_left(&et, &ft).unwrap().assembled;
    assert_eq!(got, worked_inverse().transpose());
    assert_eq!(got, oracle_for(&et, &ft, BlockShape::EfF0));
}

#[test]
fn group_invertible_e_examples() {
    let cases = [
        (ints([[2, 0], [0, 3]]), ints([[1, 0], [0, 0]])),
        (Matrix::identity(2), Matrix::identity(2)),
    ];
    for (e, f) in cases {
        let want = oracle_for(&e, &f, BlockShape::EfF0);
        assert_eq!(ef_f0_group_e(&e, &f).unwrap().assembled, want);
        assert_eq!(ef_f0_commuting(&e, &f).unwrap().assembled, want);
    }
    let m = assemble_m(&Matrix::identity(2), &Matrix::identity(2), BlockShape::EfF0).unwrap();
    assert_eq!(ef_f0_group_e(&Matrix::identity(2), &Matrix::identity(2)).unwrap().assembled, m.inverse().unwrap());

    let nil = ints([[0, 1], [0, 0]]);
    assert!(matches!(
        ef_f0_group_e(&nil, &Matrix::identity(2)),
        Err(Error::HypothesisViolated { .. })
    ));
}

#[test]
fn commuting_examples() {
    let (e, f) = (ints([[2, 0], [0, 3]]), ints([[1, 0], [0, 0]]));
    let r = ef_i0_commuting(&e, &f).unwrap();
    let entry = r.conditions.get(Condition::Commutes).unwrap();
    assert!(entry.holds);
    assert_eq!(entry.lambda, Some(1.into()));
    assert_eq!(r.assembled, oracle_for(&e, &f, BlockShape::EfI0));

    let id = Matrix::identity(2);
    let r = ef_i0_commuting(&Matrix::zeros(2, 2), &id).unwrap();
    assert_eq!(r.conditions.get(Condition::Commutes).unwrap().lambda, Some(0.into()));
    assert_eq!(r.assembled, assemble_m(&Matrix::zeros(2, 2), &id, BlockShape::EfI0).unwrap());

    let (e, f) = (ints([[0, 1], [1, 0]]), ints([[1, 0], [0, 0]]));
    let report = check_conditions(&e, &f, Theorem::EfI0Commuting).unwrap();
    assert!(!report.get(Condition::Commutes).unwrap().holds);
    assert!(!report.get(Condition::SquareCommutes).unwrap().holds);
    assert!(matches!(ef_i0_commuting(&e, &f), Err(Error::HypothesisViolated { .. })));
}

#[test]
fn pierce_corner_of_first_shape() {
    let (e, f) = worked_pair();
    let m = assemble_m(&e, &f, BlockShape::EiF0).unwrap();
    let f_sharp = group_inverse(&f).unwrap();
    let f_pi = drazin(&f).unwrap().spectral_idempotent;
    let idem = Matrix::block_diag(&(&f * &f_sharp), &Matrix::identity(2));
    let split = m.pierce_split(&idem).unwrap();
    assert!(split.b.is_zero());
    let expected_c = Matrix::block2x2(
        &(&(&(&f_pi * &e) * &f) * &f_sharp),
        &f_pi,
        &Matrix::zeros(2, 2),
        &Matrix::zeros(2, 2),
    )
    .unwrap();
    assert_eq!(split.c, expected_c);
    assert_eq!(split.reconstruct(), m);
    assert_eq!(split.lower_triangular_drazin().unwrap(), oracle::drazin(&m));
}

#[test]
fn lower_pair_pierce_corners() {
    let (e, f) = lower_pair();
    let m = assemble_m(&e, &f, BlockShape::EiF0).unwrap();
    let idem = Matrix::block_diag(&(&f * &group_inverse(&f).unwrap()), &Matrix::identity(2));
    let split = m.pierce_split(&idem).unwrap();
    assert_eq!(split.lower_triangular_drazin().unwrap(), oracle::drazin(&m));
}
