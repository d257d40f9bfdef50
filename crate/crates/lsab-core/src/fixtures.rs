//! Small named algebras used across the test suites and the documentation.

use crate::algebra::{Algebra, AlgebraKind};
use crate::form::BilinearForm;
use crate::scalar::Scalar;

/// The zero algebra of dimension 1.
pub fn z1() -> Algebra {
    Algebra::zero("Z1", AlgebraKind::LeftSymmetric, 1)
}

/// The zero algebra of dimension 2.
pub fn z2() -> Algebra {
    Algebra::zero("Z2", AlgebraKind::LeftSymmetric, 2)
}

/// The zero algebra of dimension 3.
pub fn z3() -> Algebra {
    Algebra::zero("Z3", AlgebraKind::LeftSymmetric, 3)
}

/// The field as a one-dimensional algebra: `e . e = e`.
pub fn e1() -> Algebra {
    Algebra::from_int_entries("E1", AlgebraKind::LeftSymmetric, 1, &[(0, 0, 0, 1)])
}

/// Dimension 2, `e1 . e2 = e2`, all other products zero.
pub fn a2() -> Algebra {
    Algebra::from_int_entries("A2", AlgebraKind::LeftSymmetric, 2, &[(0, 1, 1, 1)])
}

/// The truncated Gel'fand table: `u0 * u1 = u0`, `u1 * u1 = u1`.
pub fn n2() -> Algebra {
    Algebra::from_int_entries(
        "N2",
        AlgebraKind::Novikov,
        2,
        &[(0, 1, 0, 1), (1, 1, 1, 1)],
    )
}

/// The left-symmetric algebra induced on aff(1) by its symplectic form:
/// `e1 * e1 = -e1`, `e2 * e1 = -e2`.
pub fn s2() -> Algebra {
    Algebra::from_int_entries(
        "S2",
        AlgebraKind::LeftSymmetric,
        2,
        &[(0, 0, 0, -1), (1, 0, 1, -1)],
    )
}

/// The six left-symmetric fixtures exercised by the acceptance suite.
pub fn lsa_fixtures() -> Vec<Algebra> {
    vec![z1(), z2(), e1(), a2(), n2(), s2()]
}

/// The non-abelian two-dimensional Lie algebra `[e1, e2] = e2`.
pub fn aff1() -> Algebra {
    Algebra::from_int_entries("aff1", AlgebraKind::Lie, 2, &[(0, 1, 1, 1), (1, 0, 1, -1)])
}

/// Its symplectic form `omega(e1, e2) = 1`.
pub fn omega_aff1() -> BilinearForm {
    BilinearForm::from_int_entries(2, &[(0, 1, 1), (1, 0, -1)])
}

/// The three-dimensional Heisenberg algebra `[e1, e2] = e3`.
pub fn heis3() -> Algebra {
    Algebra::from_int_entries("heis3", AlgebraKind::Lie, 3, &[(0, 1, 2, 1), (1, 0, 2, -1)])
}

/// Heisenberg plus a central line: `[e1, e2] = e3`, `e4` central.
/// 2-step nilpotent and symplectic, the positive case of the nilpotency
/// criterion for symplectically induced bialgebras.
pub fn g4_nilpotent() -> Algebra {
    Algebra::from_int_entries("g4", AlgebraKind::Lie, 4, &[(0, 1, 2, 1), (1, 0, 2, -1)])
}

/// A symplectic form on `g4`: `omega = e1* ^ e3* + e2* ^ e4*`.
pub fn omega_g4() -> BilinearForm {
    BilinearForm::from_int_entries(
        4,
        &[(0, 2, 1), (2, 0, -1), (1, 3, 1), (3, 1, -1)],
    )
}

/// The dual numbers `F[x]/(x^2)` with basis `{1, x}`: a commutative
/// associative algebra carrying the Euler derivation `x d/dx`.
pub fn dual_numbers() -> Algebra {
    Algebra::from_int_entries(
        "dual-numbers",
        AlgebraKind::Associative,
        2,
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
    )
}

/// `F[x]/(x^3)` with basis `{1, x, x^2}`.
pub fn truncated_poly3() -> Algebra {
    Algebra::from_int_entries(
        "trunc-poly-3",
        AlgebraKind::Associative,
        3,
        &[
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (1, 0, 1, 1),
            (0, 2, 2, 1),
            (2, 0, 2, 1),
            (1, 1, 2, 1),
        ],
    )
}

/// Canonical `r`-tensor coefficient helper for doubles: the identity-shaped
/// symmetric tensor `sum_i e_i (x) e_i` on a space of dimension `n`.
pub fn identity_tensor(n: usize) -> crate::tensor::Tensor2 {
    crate::tensor::Tensor2::from_fn(n, n, |i, j| {
        if i == j {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}
