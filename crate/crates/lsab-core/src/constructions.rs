//! Realizations of left-symmetric algebras from other data: derivations of
//! commutative associative algebras, classical r-matrices, Rota-Baxter
//! operators, dot-product vectors, symplectic forms and central extensions.

use crate::algebra::{Algebra, AlgebraKind};
use crate::error::{Error, Result};
use crate::form::{check_lie_2cocycle, BilinearForm};
use crate::matrix::Matrix;
use crate::report::CheckReport;
use crate::scalar::{unit_vec, vec_add, vec_scale, vec_sub, Scalar};

/// The Leibniz rule `D(xy) = D(x)y + x D(y)` on basis pairs.
pub fn check_derivation(a: &Algebra, d: &Matrix) -> CheckReport {
    let mut report = CheckReport::new("derivation");
    if d.rows() != a.dim() || d.cols() != a.dim() {
        report.fail_note("map dimension does not match the algebra");
        return report;
    }
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = d.apply(&a.product_basis(i, j));
            let rhs = vec_add(
                &a.product(&d.column(i), &unit_vec(n, j)),
                &a.product(&unit_vec(n, i), &d.column(j)),
            );
            report.check_zero(&[i, j], vec_sub(&lhs, &rhs));
        }
    }
    report.sorted()
}

/// Which deformation parameter the Novikov construction uses.
#[derive(Clone, Debug)]
pub enum NovikovVariant {
    /// `a = 0`: `x * y = x . D(y)`.
    Gelfand,
    /// `a` a field scalar: `x * y = x . D(y) + a (x . y)`.
    Filipov(Scalar),
    /// `a` a fixed element of the algebra: `x * y = x . D(y) + a . x . y`.
    Xu(Vec<Scalar>),
}

/// The Novikov algebra `x *_a y = x . D(y) + a . x . y` on a
/// commutative associative algebra with derivation `D`. Preconditions are
/// checked, and the output is verified Novikov before it is returned (the
/// Xu variant carries no extra stated precondition, so a failure there
/// surfaces as an error rather than a mis-tagged table).
pub fn novikov_from_derivation(
    a: &Algebra,
    d: &Matrix,
    variant: &NovikovVariant,
) -> Result<Algebra> {
    let mut pre = CheckReport::new("novikov-construction-preconditions");
    pre.absorb(a.check_commutative());
    pre.absorb(a.check_associative());
    pre.absorb(check_derivation(a, d));
    if !pre.passes() {
        return Err(Error::precondition(pre));
    }
    let n = a.dim();
    let mut entries: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut prod = a.product(&unit_vec(n, i), &d.column(j));
            match variant {
                NovikovVariant::Gelfand => {}
                NovikovVariant::Filipov(scalar) => {
                    prod = vec_add(&prod, &vec_scale(scalar, &a.product_basis(i, j)));
                }
                NovikovVariant::Xu(elem) => {
                    if elem.len() != n {
                        return Err(Error::DimensionMismatch(
                            "Xu element length does not match the algebra".to_owned(),
                        ));
                    }
                    prod = vec_add(&prod, &a.product(elem, &a.product_basis(i, j)));
                }
            }
            for (k, v) in prod.into_iter().enumerate() {
                if !v.is_zero() {
                    entries.push((i, j, k, v));
                }
            }
        }
    }
    let out = Algebra::from_entries(format!("{}*", a.name()), AlgebraKind::Novikov, n, &entries)?;
    let post = out.check_novikov();
    if !post.passes() {
        return Err(Error::precondition(post));
    }
    Ok(out)
}

/// The operator form of the classical Yang-Baxter equation:
/// `[R(x), R(y)] = R([R(x), y] + [x, R(y)])`.
pub fn check_operator_cybe(g: &Algebra, r: &Matrix) -> CheckReport {
    let mut report = CheckReport::new("operator-cybe");
    if r.rows() != g.dim() || r.cols() != g.dim() {
        report.fail_note("map dimension does not match the algebra");
        return report;
    }
    report.absorb(g.check_jacobi());
    let n = g.dim();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = g.bracket(&r.column(i), &r.column(j));
            let inner = vec_add(
                &g.bracket(&r.column(i), &unit_vec(n, j)),
                &g.bracket(&unit_vec(n, i), &r.column(j)),
            );
            report.check_zero(&[i, j], vec_sub(&lhs, &r.apply(&inner)));
        }
    }
    report.sorted()
}

/// The left-symmetric product `x * y = [R(x), y]` of a classical
/// r-matrix.
pub fn lsa_from_rmatrix(g: &Algebra, r: &Matrix) -> Result<Algebra> {
    let pre = check_operator_cybe(g, r);
    if !pre.passes() {
        return Err(Error::precondition(pre));
    }
    let n = g.dim();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let col = g.bracket(&r.column(i), &unit_vec(n, j));
            for (k, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    entries.push((i, j, k, v));
                }
            }
        }
    }
    Algebra::from_entries(
        format!("{}·R", g.name()),
        AlgebraKind::LeftSymmetric,
        n,
        &entries,
    )
}

/// The Rota-Baxter identity:
/// `R(x)R(y) + R(xy) = R(R(x)y + xR(y))`.
pub fn check_rota_baxter(a: &Algebra, r: &Matrix) -> CheckReport {
    let mut report = CheckReport::new("rota-baxter");
    if r.rows() != a.dim() || r.cols() != a.dim() {
        report.fail_note("map dimension does not match the algebra");
        return report;
    }
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = vec_add(
                &a.product(&r.column(i), &r.column(j)),
                &r.apply(&a.product_basis(i, j)),
            );
            let inner = vec_add(
                &a.product(&r.column(i), &unit_vec(n, j)),
                &a.product(&unit_vec(n, i), &r.column(j)),
            );
            report.check_zero(&[i, j], vec_sub(&lhs, &r.apply(&inner)));
        }
    }
    report.sorted()
}

/// `x * y = R(x)y - yR(x) - xy` on an associative algebra with a
/// Rota-Baxter operator.
pub fn lsa_from_rota_baxter(a: &Algebra, r: &Matrix) -> Result<Algebra> {
    let mut pre = CheckReport::new("rota-baxter-preconditions");
    pre.absorb(a.check_associative());
    pre.absorb(check_rota_baxter(a, r));
    if !pre.passes() {
        return Err(Error::precondition(pre));
    }
    let n = a.dim();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let ej = unit_vec(n, j);
            let mut prod = vec_sub(
                &a.product(&r.column(i), &ej),
                &a.product(&ej, &r.column(i)),
            );
            prod = vec_sub(&prod, &a.product_basis(i, j));
            for (k, v) in prod.into_iter().enumerate() {
                if !v.is_zero() {
                    entries.push((i, j, k, v));
                }
            }
        }
    }
    Algebra::from_entries(
        format!("{}·RB", a.name()),
        AlgebraKind::LeftSymmetric,
        n,
        &entries,
    )
}

/// `u * v = (u,v)a + (u,a)v` for the standard dot product on
/// rational coordinates.
pub fn lsa_from_dot_vector(dim: usize, a: &[Scalar]) -> Result<Algebra> {
    if a.len() != dim {
        return Err(Error::DimensionMismatch(format!(
            "vector length {} does not match dimension {dim}",
            a.len()
        )));
    }
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            // (e_i, e_j) a  +  (e_i, a) e_j
            if i == j {
                for (k, v) in a.iter().enumerate() {
                    if !v.is_zero() {
                        entries.push((i, j, k, v.clone()));
                    }
                }
            }
            if !a[i].is_zero() {
                entries.push((i, j, j, a[i].clone()));
            }
        }
    }
    Algebra::from_entries("dotvec", AlgebraKind::LeftSymmetric, dim, &entries)
}

/// The compatible left-symmetric product of a symplectic Lie algebra
/// for each basis pair `(i, j)` solve the `n x n` system
/// `omega(e_i * e_j, e_k) = -omega(e_j, [e_i, e_k])`.
pub fn lsa_from_symplectic(g: &Algebra, omega: &BilinearForm) -> Result<Algebra> {
    let mut pre = CheckReport::new("symplectic-preconditions");
    pre.absorb(check_lie_2cocycle(g, omega));
    if omega.dim() == g.dim() && !omega.is_nondegenerate() {
        pre.fail_note("form is degenerate");
    }
    if !pre.passes() {
        return Err(Error::precondition(pre));
    }
    let n = g.dim();
    // coefficient matrix M[k][m] = omega(e_m, e_k), shared by every system
    let m = Matrix::from_fn(n, n, |k, mm| omega.get(mm, k).clone());
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let rhs: Vec<Scalar> = (0..n)
                .map(|k| -omega.eval(&unit_vec(n, j), &g.product_basis(i, k)))
                .collect();
            let prod = m.solve(&rhs)?;
            for (k, v) in prod.into_iter().enumerate() {
                if !v.is_zero() {
                    entries.push((i, j, k, v));
                }
            }
        }
    }
    Algebra::from_entries(
        format!("{}·ω", g.name()),
        AlgebraKind::LeftSymmetric,
        n,
        &entries,
    )
}

/// The central extension `x * y = x . y + B(x,y) c` by a one-
/// dimensional center. Defined for any `B`; the result is left-symmetric
/// exactly when `B` is a 2-cocycle, which is itself a tested property.
pub fn central_extension(a: &Algebra, b: &BilinearForm) -> Result<Algebra> {
    if b.dim() != a.dim() {
        return Err(Error::DimensionMismatch(
            "form dimension does not match the algebra".to_owned(),
        ));
    }
    let n = a.dim();
    let mut entries = Vec::new();
    for (i, j, k, v) in a.entries() {
        if !v.is_zero() {
            entries.push((i, j, k, v.clone()));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let v = b.get(i, j);
            if !v.is_zero() {
                entries.push((i, j, n, v.clone()));
            }
        }
    }
    Algebra::from_entries(
        format!("{}+Fc", a.name()),
        AlgebraKind::Generic,
        n + 1,
        &entries,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::form::check_lsa_2cocycle;
    use crate::scalar::vec_is_zero;

    fn euler_derivation_on_dual_numbers() -> Matrix {
        // D(1) = 0, D(x) = x
        Matrix::from_int_rows(&[&[0, 0], &[0, 1]])
    }

    #[test]
    fn euler_derivation_is_a_derivation() {
        assert!(
            check_derivation(&fixtures::dual_numbers(), &euler_derivation_on_dual_numbers())
                .passes()
        );
    }

    #[test]
    fn ddx_is_not_a_derivation_of_dual_numbers() {
        // Leibniz fails on (x, x): D(x^2) = 0 but 2x D(x) = 2x
        let ddx = Matrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        let report = check_derivation(&fixtures::dual_numbers(), &ddx);
        assert!(!report.passes());
        assert_eq!(report.violations[0].indices, vec![1, 1]);
        assert!(novikov_from_derivation(
            &fixtures::dual_numbers(),
            &ddx,
            &NovikovVariant::Gelfand
        )
        .is_err());
    }

    #[test]
    fn gelfand_on_euler_derivation_gives_a2() {
        // 1 * x = x, everything else zero: the A2 table
        let out = novikov_from_derivation(
            &fixtures::dual_numbers(),
            &euler_derivation_on_dual_numbers(),
            &NovikovVariant::Gelfand,
        )
        .unwrap();
        assert_eq!(out.product_basis(0, 1), unit_vec(2, 1));
        assert!(vec_is_zero(&out.product_basis(1, 0)));
        assert!(vec_is_zero(&out.product_basis(1, 1)));
        assert!(out.check_novikov().passes());
    }

    #[test]
    fn zero_derivation_gelfand_gives_zero_algebra() {
        let out = novikov_from_derivation(
            &fixtures::dual_numbers(),
            &Matrix::zeros(2, 2),
            &NovikovVariant::Gelfand,
        )
        .unwrap();
        assert!((0..2).all(|i| (0..2).all(|j| vec_is_zero(&out.product_basis(i, j)))));
    }

    #[test]
    fn filipov_and_xu_variants_are_novikov() {
        let a = fixtures::dual_numbers();
        let d = euler_derivation_on_dual_numbers();
        let filipov =
            novikov_from_derivation(&a, &d, &NovikovVariant::Filipov(Scalar::one())).unwrap();
        assert!(filipov.check_novikov().passes());
        // 1 * 1 = 1.D(1) + 1.1 = 1
        assert_eq!(filipov.product_basis(0, 0), unit_vec(2, 0));
        let xu = novikov_from_derivation(
            &a,
            &d,
            &NovikovVariant::Xu(vec![Scalar::zero(), Scalar::one()]),
        )
        .unwrap();
        assert!(xu.check_novikov().passes());
    }

    #[test]
    fn operator_cybe_examples() {
        let g = fixtures::aff1();
        assert!(check_operator_cybe(&g, &Matrix::zeros(2, 2)).passes());

        let abelian = fixtures::z2().with_kind(AlgebraKind::Lie).unwrap();
        assert!(check_operator_cybe(&abelian, &Matrix::identity(2)).passes());

        // R = id on aff(1): [e1,e2] = e2 but R(2[e1,e2]) = 2e2
        let report = check_operator_cybe(&g, &Matrix::identity(2));
        assert!(!report.passes());
        assert_eq!(report.violations[0].indices, vec![0, 1]);
        assert_eq!(
            report.violations[0].residual,
            vec![Scalar::zero(), Scalar::from_int(-1)]
        );
    }

    #[test]
    fn rmatrix_projection_gives_a2() {
        // R = projection onto e1 satisfies on aff(1) and twists it to A2
        let g = fixtures::aff1();
        let proj = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        let out = lsa_from_rmatrix(&g, &proj).unwrap();
        assert_eq!(out.product_basis(0, 1), unit_vec(2, 1));
        assert!(vec_is_zero(&out.product_basis(0, 0)));
        assert!(vec_is_zero(&out.product_basis(1, 0)));
        assert!(vec_is_zero(&out.product_basis(1, 1)));
        assert!(out.check_left_symmetric().passes());
        // sub-adjacent commutator recovers the aff(1) bracket
        let g2 = out.sub_adjacent_lie().unwrap();
        assert_eq!(g2.product_basis(0, 1), unit_vec(2, 1));
    }

    #[test]
    fn rmatrix_zero_gives_zero_algebra() {
        let out = lsa_from_rmatrix(&fixtures::aff1(), &Matrix::zeros(2, 2)).unwrap();
        assert!((0..2).all(|i| (0..2).all(|j| vec_is_zero(&out.product_basis(i, j)))));
    }

    #[test]
    fn rota_baxter_zero_operator() {
        // R = 0 satisfies; the product is the negated one
        let a = fixtures::e1();
        assert!(check_rota_baxter(&a, &Matrix::zeros(1, 1)).passes());
        let out = lsa_from_rota_baxter(&a, &Matrix::zeros(1, 1)).unwrap();
        assert_eq!(out.product_basis(0, 0), vec![Scalar::from_int(-1)]);
        assert!(out.check_left_symmetric().passes());

        let z = fixtures::z2().with_kind(AlgebraKind::Associative).unwrap();
        let out = lsa_from_rota_baxter(&z, &Matrix::identity(2)).unwrap();
        assert!((0..2).all(|i| (0..2).all(|j| vec_is_zero(&out.product_basis(i, j)))));
    }

    #[test]
    fn rota_baxter_on_dual_numbers() {
        // R(1) = 0, R(x) = x: both sides of land in multiples of x
        let a = fixtures::dual_numbers();
        let r = Matrix::from_int_rows(&[&[0, 0], &[0, 1]]);
        assert!(check_rota_baxter(&a, &r).passes());
        let out = lsa_from_rota_baxter(&a, &r).unwrap();
        assert!(out.check_left_symmetric().passes());
    }

    #[test]
    fn dot_vector_tables() {
        let zero = lsa_from_dot_vector(2, &[Scalar::zero(), Scalar::zero()]).unwrap();
        assert!((0..2).all(|i| (0..2).all(|j| vec_is_zero(&zero.product_basis(i, j)))));

        let one = lsa_from_dot_vector(1, &[Scalar::one()]).unwrap();
        assert_eq!(one.product_basis(0, 0), vec![Scalar::from_int(2)]);

        let out = lsa_from_dot_vector(2, &unit_vec(2, 0)).unwrap();
        assert_eq!(
            out.product_basis(0, 0),
            vec![Scalar::from_int(2), Scalar::zero()]
        );
        assert_eq!(out.product_basis(0, 1), unit_vec(2, 1));
        assert!(vec_is_zero(&out.product_basis(1, 0)));
        assert_eq!(out.product_basis(1, 1), unit_vec(2, 0));
        assert!(out.check_left_symmetric().passes());
    }

    #[test]
    fn symplectic_construction_recovers_s2() {
        let out = lsa_from_symplectic(&fixtures::aff1(), &fixtures::omega_aff1()).unwrap();
        let s2 = fixtures::s2();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(out.product_basis(i, j), s2.product_basis(i, j));
            }
        }
        assert!(out.check_left_symmetric().passes());
        let g = out.sub_adjacent_lie().unwrap();
        assert_eq!(g.product_basis(0, 1), unit_vec(2, 1));
    }

    #[test]
    fn symplectic_on_abelian_gives_zero_algebra() {
        let g = fixtures::z2().with_kind(AlgebraKind::Lie).unwrap();
        let out = lsa_from_symplectic(&g, &fixtures::omega_aff1()).unwrap();
        assert!((0..2).all(|i| (0..2).all(|j| vec_is_zero(&out.product_basis(i, j)))));
    }

    #[test]
    fn symplectic_construction_is_idempotent_on_s2() {
        let s2 = fixtures::s2();
        let g = s2.sub_adjacent_lie().unwrap();
        let again = lsa_from_symplectic(&g, &fixtures::omega_aff1()).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(again.product_basis(i, j), s2.product_basis(i, j));
            }
        }
    }

    #[test]
    fn symplectic_rejects_degenerate_forms() {
        assert!(lsa_from_symplectic(&fixtures::aff1(), &BilinearForm::zeros(2)).is_err());
    }

    #[test]
    fn central_extension_verdict_tracks_the_cocycle() {
        // B = 0: direct sum with a zero line
        let ext = central_extension(&fixtures::a2(), &BilinearForm::zeros(2)).unwrap();
        assert!(ext.check_left_symmetric().passes());

        // E1 with the trace form: e*e = e + c is left-symmetric
        let b = BilinearForm::from_int_entries(1, &[(0, 0, 1)]);
        let ext = central_extension(&fixtures::e1(), &b).unwrap();
        assert_eq!(ext.product_basis(0, 0), vec![Scalar::one(), Scalar::one()]);
        assert!(ext.check_left_symmetric().passes());

        // A2 with B = E11 IS a cocycle (every product lands on e2), so the
        // extension stays left-symmetric
        let e11 = BilinearForm::from_int_entries(2, &[(0, 0, 1)]);
        assert!(check_lsa_2cocycle(&fixtures::a2(), &e11).passes());
        assert!(central_extension(&fixtures::a2(), &e11)
            .unwrap()
            .check_left_symmetric()
            .passes());

        // the identity form is not a cocycle of A2: the extension fails
        let bad = BilinearForm::identity(2);
        assert!(!check_lsa_2cocycle(&fixtures::a2(), &bad).passes());
        let ext = central_extension(&fixtures::a2(), &bad).unwrap();
        assert!(!ext.check_left_symmetric().passes());
    }
}
