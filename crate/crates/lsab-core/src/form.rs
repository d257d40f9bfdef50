//! Bilinear forms and the form conditions of the structure
//! theory: Lie and left-symmetric 2-cocycles, invariant and trace forms,
//! left-invariant forms, and Hessian data.

use std::fmt;

use crate::algebra::Algebra;
use crate::matrix::Matrix;
use crate::report::CheckReport;
use crate::scalar::{dot, Scalar};

/// A bilinear form stored as the matrix `B[i][j] = B(e_i, e_j)`.
#[derive(Clone, PartialEq, Eq)]
pub struct BilinearForm {
    dim: usize,
    b: Vec<Scalar>,
}

impl BilinearForm {
    pub fn zeros(dim: usize) -> Self {
        BilinearForm {
            dim,
            b: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_matrix(&Matrix::identity(dim))
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut b = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                b.push(f(i, j));
            }
        }
        BilinearForm { dim, b }
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        assert!(m.is_square());
        Self::from_fn(m.rows(), |i, j| m.get(i, j).clone())
    }

    pub fn from_int_entries(dim: usize, entries: &[(usize, usize, i64)]) -> Self {
        let mut form = BilinearForm::zeros(dim);
        for &(i, j, v) in entries {
            form.set(i, j, Scalar::from_int(v));
        }
        form
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.b[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.b[i * self.dim + j] = v;
    }

    /// `B(x, y)` on coordinate vectors.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut acc = Scalar::zero();
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            let row: Scalar = dot(&(0..self.dim).map(|j| self.get(i, j).clone()).collect::<Vec<_>>(), y);
            acc = acc + &x[i] * &row;
        }
        acc
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_skew(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix().invert().is_ok()
    }

    /// The skew part `omega(x,y) = B(x,y) - B(y,x)`.
    pub fn skew_part(&self) -> BilinearForm {
        BilinearForm::from_fn(self.dim, |i, j| self.get(i, j) - self.get(j, i))
    }
}

impl fmt::Debug for BilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BilinearForm {:?}", self.matrix())
    }
}

/// Lie-algebra 2-cocycle: the cyclic sum
/// `omega([x,y],z) + omega([y,z],x) + omega([z,x],y)` vanishes.
/// Preconditions: skew `omega`, skew table. Nondegeneracy is reported as a
/// note; together with a passing verdict it makes `omega` symplectic.
pub fn check_lie_2cocycle(g: &Algebra, omega: &BilinearForm) -> CheckReport {
    let mut report = CheckReport::new("lie-2cocycle");
    if omega.dim() != g.dim() {
        report.fail_note("form dimension does not match the algebra");
        return report;
    }
    if !omega.is_skew() {
        report.fail_note("form is not skew-symmetric");
    }
    if !g.table_is_skew() {
        report.fail_note("algebra table is not skew-symmetric");
        return report;
    }
    let n = g.dim();
    let e = |i: usize| crate::scalar::unit_vec(n, i);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let s = omega.eval(&g.product_basis(i, j), &e(k))
                    + omega.eval(&g.product_basis(j, k), &e(i))
                    + omega.eval(&g.product_basis(k, i), &e(j));
                report.check_zero(&[i, j, k], vec![s]);
            }
        }
    }
    report.add_note(if omega.is_nondegenerate() {
        "nondegenerate"
    } else {
        "degenerate"
    });
    report.sorted()
}

/// Left-symmetric 2-cocycle:
/// `B(xy,z) - B(x,yz) = B(yx,z) - B(y,xz)`.
pub fn check_lsa_2cocycle(a: &Algebra, b: &BilinearForm) -> CheckReport {
    let mut report = CheckReport::new("lsa-2cocycle");
    if b.dim() != a.dim() {
        report.fail_note("form dimension does not match the algebra");
        return report;
    }
    let n = a.dim();
    let e = |i: usize| crate::scalar::unit_vec(n, i);
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let lhs = b.eval(&a.product_basis(i, j), &e(k)) - b.eval(&e(i), &a.product_basis(j, k));
                let rhs = b.eval(&a.product_basis(j, i), &e(k)) - b.eval(&e(j), &a.product_basis(i, k));
                report.check_zero(&[i, j, k], vec![lhs - rhs]);
            }
        }
    }
    report.sorted()
}

/// Invariance for a Lie algebra: `B([x,y],z) = B(x,[y,z])`.
pub fn check_invariant_form(g: &Algebra, b: &BilinearForm) -> CheckReport {
    let mut report = CheckReport::new("invariant-form");
    if b.dim() != g.dim() {
        report.fail_note("form dimension does not match the algebra");
        return report;
    }
    if !g.table_is_skew() {
        report.fail_note("algebra table is not skew-symmetric");
        return report;
    }
    let n = g.dim();
    let e = |i: usize| crate::scalar::unit_vec(n, i);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = b.eval(&g.product_basis(i, j), &e(k));
                let rhs = b.eval(&e(i), &g.product_basis(j, k));
                report.check_zero(&[i, j, k], vec![lhs - rhs]);
            }
        }
    }
    report.sorted()
}

/// Trace form: `B(xy,z) = B(x,yz)`.
pub fn check_trace_form(a: &Algebra, b: &BilinearForm) -> CheckReport {
    let mut report = CheckReport::new("trace-form");
    if b.dim() != a.dim() {
        report.fail_note("form dimension does not match the algebra");
        return report;
    }
    let n = a.dim();
    let e = |i: usize| crate::scalar::unit_vec(n, i);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = b.eval(&a.product_basis(i, j), &e(k));
                let rhs = b.eval(&e(i), &a.product_basis(j, k));
                report.check_zero(&[i, j, k], vec![lhs - rhs]);
            }
        }
    }
    report.sorted()
}

/// Left-invariance: `B(xy,z) = -B(y,xz)`.
pub fn check_left_invariant_form(a: &Algebra, b: &BilinearForm) -> CheckReport {
    let mut report = CheckReport::new("left-invariant-form");
    if b.dim() != a.dim() {
        report.fail_note("form dimension does not match the algebra");
        return report;
    }
    let n = a.dim();
    let e = |i: usize| crate::scalar::unit_vec(n, i);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = b.eval(&a.product_basis(i, j), &e(k));
                let rhs = -b.eval(&e(j), &a.product_basis(i, k));
                report.check_zero(&[i, j, k], vec![lhs - rhs]);
            }
        }
    }
    report.sorted()
}

/// Hessian data: symmetric, positive definite (all leading principal minors
/// positive, exactly) and a 2-cocycle per. When `b` is the identity
/// matrix the orthonormal-basis condition is reported as a note.
pub fn check_hessian(a: &Algebra, b: &BilinearForm) -> CheckReport {
    let mut report = CheckReport::new("hessian");
    if b.dim() != a.dim() {
        report.fail_note("form dimension does not match the algebra");
        return report;
    }
    if !b.is_symmetric() {
        report.fail_note("form is not symmetric");
    }
    for (k, minor) in b.matrix().leading_principal_minors().iter().enumerate() {
        if !minor.is_positive() {
            report.push_violation(crate::report::Violation {
                indices: vec![k + 1],
                residual: vec![minor.clone()],
                note: Some("leading principal minor not positive".to_owned()),
            });
        }
    }
    report.absorb(check_lsa_2cocycle(a, b));
    if b.matrix() == Matrix::identity(a.dim()) {
        let mut ortho_ok = true;
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                for k in 0..a.dim() {
                    let v = a.c(i, j, k) - a.c(j, i, k) + a.c(i, k, j) - a.c(j, k, i);
                    if !v.is_zero() {
                        ortho_ok = false;
                        report.add_note(format!("orthonormal-symmetry fails at ({i},{j},{k}): residual {v}"));
                    }
                }
            }
        }
        if ortho_ok {
            report.add_note("orthonormal-symmetry holds in the given basis");
        }
    }
    report.sorted()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraKind;
    use crate::fixtures;

    #[test]
    fn lie_2cocycle_on_aff1() {
        let rep = check_lie_2cocycle(&fixtures::aff1(), &fixtures::omega_aff1());
        assert!(rep.passes());
        assert!(rep.notes.iter().any(|n| n == "nondegenerate"));
    }

    #[test]
    fn lie_2cocycle_on_heisenberg_form() {
        // omega(e1,e2)=1, omega(e1,e3)=1: the cyclic sums all cancel
        let omega = BilinearForm::from_int_entries(
            3,
            &[(0, 1, 1), (1, 0, -1), (0, 2, 1), (2, 0, -1)],
        );
        let rep = check_lie_2cocycle(&fixtures::heis3(), &omega);
        assert!(rep.passes());
        assert!(rep.notes.iter().any(|n| n == "degenerate"));
    }

    #[test]
    fn abelian_passes_any_skew_form() {
        let g = fixtures::z3().with_kind(AlgebraKind::Lie).unwrap();
        let omega = BilinearForm::from_int_entries(3, &[(0, 1, 2), (1, 0, -2)]);
        assert!(check_lie_2cocycle(&g, &omega).passes());
    }

    #[test]
    fn lsa_2cocycle_examples() {
        assert!(check_lsa_2cocycle(&fixtures::a2(), &BilinearForm::zeros(2)).passes());
        let b1 = BilinearForm::from_int_entries(1, &[(0, 0, 1)]);
        assert!(check_lsa_2cocycle(&fixtures::e1(), &b1).passes());
        // A2 with the identity form: evaluated exactly, fails at (0,1,1)
        let rep = check_lsa_2cocycle(&fixtures::a2(), &BilinearForm::identity(2));
        assert!(!rep.passes());
        assert_eq!(rep.violations[0].indices, vec![0, 1, 1]);
    }

    #[test]
    fn trace_form_is_2cocycle() {
        // the trace form on E1 is a trace form hence a 2-cocycle
        let b = BilinearForm::from_int_entries(1, &[(0, 0, 1)]);
        assert!(check_trace_form(&fixtures::e1(), &b).passes());
        assert!(check_lsa_2cocycle(&fixtures::e1(), &b).passes());
        let rep = check_trace_form(&fixtures::a2(), &BilinearForm::identity(2));
        assert!(!rep.passes());
    }

    #[test]
    fn invariant_form_examples() {
        let g = fixtures::z2().with_kind(AlgebraKind::Lie).unwrap();
        assert!(check_invariant_form(&g, &BilinearForm::identity(2)).passes());
        // B([e1,e2],e2) = 1 but B(e1,[e2,e2]) = 0
        let rep = check_invariant_form(&fixtures::aff1(), &BilinearForm::identity(2));
        assert!(!rep.passes());
        assert_eq!(rep.violations[0].indices, vec![0, 1, 1]);
    }

    #[test]
    fn left_invariant_form_examples() {
        assert!(check_left_invariant_form(&fixtures::z2(), &BilinearForm::identity(2)).passes());
        assert!(check_left_invariant_form(&fixtures::a2(), &BilinearForm::zeros(2)).passes());
    }

    #[test]
    fn hessian_examples() {
        let rep = check_hessian(&fixtures::z2(), &BilinearForm::identity(2));
        assert!(rep.passes());
        assert!(rep.notes.iter().any(|n| n.contains("orthonormal-symmetry holds")));

        let b1 = BilinearForm::from_int_entries(1, &[(0, 0, 1)]);
        assert!(check_hessian(&fixtures::e1(), &b1).passes());

        let rep = check_hessian(&fixtures::a2(), &BilinearForm::identity(2));
        assert!(!rep.passes());
        assert!(rep.notes.iter().any(|n| n.contains("orthonormal-symmetry fails")));
    }

    #[test]
    fn skew_part_of_lsa_cocycle_is_lie_cocycle() {
        // the skew part of a 2-cocycle on E1 with the trace form
        let a = fixtures::e1();
        let b = BilinearForm::from_int_entries(1, &[(0, 0, 1)]);
        let omega = b.skew_part();
        let g = a.sub_adjacent_lie().unwrap();
        assert!(check_lie_2cocycle(&g, &omega).passes());
    }
}
