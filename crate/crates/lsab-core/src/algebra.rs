//! Algebras given by structure constants, and the pointwise identity
//! checkers for left-symmetry, Jacobi, associativity and their relatives.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::CheckReport;
use crate::scalar::{unit_vec, vec_sub, Scalar};

/// What an algebra claims to be. Constructions tag their outputs; checkers
/// verify claims on demand. Only `Lie` has a structural consequence: its
/// table is forced skew at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    LeftSymmetric,
    Lie,
    Associative,
    Novikov,
    Generic,
}

impl AlgebraKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            AlgebraKind::LeftSymmetric => "left-symmetric",
            AlgebraKind::Lie => "lie",
            AlgebraKind::Associative => "associative",
            AlgebraKind::Novikov => "novikov",
            AlgebraKind::Generic => "generic",
        }
    }

    pub fn parse(s: &str) -> Option<AlgebraKind> {
        Some(match s {
            "left-symmetric" => AlgebraKind::LeftSymmetric,
            "lie" => AlgebraKind::Lie,
            "associative" => AlgebraKind::Associative,
            "novikov" => AlgebraKind::Novikov,
            "generic" => AlgebraKind::Generic,
            _ => return None,
        })
    }
}

/// A finite-dimensional algebra over the rationals:
/// `e_i . e_j = sum_k c[i][j][k] e_k`.
///
/// For `Lie` kind the table is the bracket itself and is required skew.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    dim: usize,
    c: Vec<Scalar>,
    kind: AlgebraKind,
}

impl Algebra {
    /// Builds an algebra from a full `n^3` table, row-major in `(i, j, k)`.
    pub fn new(name: impl Into<String>, kind: AlgebraKind, dim: usize, c: Vec<Scalar>) -> Result<Self> {
        if c.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "structure table has {} entries, expected {}",
                c.len(),
                dim * dim * dim
            )));
        }
        let alg = Algebra {
            name: name.into(),
            dim,
            c,
            kind,
        };
        if kind == AlgebraKind::Lie {
            for i in 0..dim {
                for j in 0..=i {
                    for k in 0..dim {
                        if *alg.c(i, j, k) != -alg.c(j, i, k) {
                            return Err(Error::NotSkew { i, j, k });
                        }
                    }
                }
            }
        }
        Ok(alg)
    }

    pub fn from_entries(
        name: impl Into<String>,
        kind: AlgebraKind,
        dim: usize,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self> {
        let mut c = vec![Scalar::zero(); dim * dim * dim];
        for (i, j, k, v) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "entry ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            c[(i * dim + j) * dim + k] = &c[(i * dim + j) * dim + k] + v;
        }
        Algebra::new(name, kind, dim, c)
    }

    /// Integer-entry table, mostly for tests and fixtures.
    pub fn from_int_entries(
        name: impl Into<String>,
        kind: AlgebraKind,
        dim: usize,
        entries: &[(usize, usize, usize, i64)],
    ) -> Self {
        let entries: Vec<_> = entries
            .iter()
            .map(|&(i, j, k, v)| (i, j, k, Scalar::from_int(v)))
            .collect();
        Algebra::from_entries(name, kind, dim, &entries).expect("valid fixture table")
    }

    /// The algebra with every product zero.
    pub fn zero(name: impl Into<String>, kind: AlgebraKind, dim: usize) -> Self {
        Algebra::new(name, kind, dim, vec![Scalar::zero(); dim * dim * dim])
            .expect("zero table is valid for every kind")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rename(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: AlgebraKind) -> Result<Self> {
        Algebra::new(std::mem::take(&mut self.name), kind, self.dim, self.c)
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        let n = self.dim;
        self.c.iter().enumerate().map(move |(flat, v)| {
            let k = flat % n;
            let j = (flat / n) % n;
            let i = flat / (n * n);
            (i, j, k, v)
        })
    }

    /// Coordinates of `e_i . e_j`.
    pub fn product_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// Coordinates of `x . y` for coordinate vectors.
    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "product: bad x length");
        assert_eq!(y.len(), self.dim, "product: bad y length");
        let mut out = vec![Scalar::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..self.dim {
                    let v = self.c(i, j, k);
                    if !v.is_zero() {
                        out[k] = &out[k] + &(&xy * v);
                    }
                }
            }
        }
        out
    }

    /// The bracket attached to this algebra: the product itself for `Lie`
    /// kind, the commutator `xy - yx` otherwise (the sub-adjacent bracket).
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        if self.kind == AlgebraKind::Lie {
            self.product(x, y)
        } else {
            vec_sub(&self.product(x, y), &self.product(y, x))
        }
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        if self.kind == AlgebraKind::Lie {
            self.product_basis(i, j)
        } else {
            vec_sub(&self.product_basis(i, j), &self.product_basis(j, i))
        }
    }

    /// The associator `(x, y, z) = (xy)z - x(yz)`.
    pub fn associator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        vec_sub(
            &self.product(&self.product(x, y), z),
            &self.product(x, &self.product(y, z)),
        )
    }

    fn associator_basis(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let n = self.dim;
        self.associator(&unit_vec(n, i), &unit_vec(n, j), &unit_vec(n, k))
    }

    /// Matrix of `L_{e_i}`: column `j` holds the coordinates of `e_i . e_j`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.c(i, j, k).clone())
    }

    /// Matrix of `R_{e_i}`: column `j` holds the coordinates of `e_j . e_i`.
    pub fn right_mult(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.c(j, i, k).clone())
    }

    /// `ad_{e_i}` for the bracket of this algebra: `L_i` for `Lie` kind,
    /// `L_i - R_i` otherwise.
    pub fn ad_matrix(&self, i: usize) -> Matrix {
        if self.kind == AlgebraKind::Lie {
            self.left_mult(i)
        } else {
            &self.left_mult(i) - &self.right_mult(i)
        }
    }

    pub fn left_mult_of(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.dim);
        let mut m = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            if !x[i].is_zero() {
                m = &m + &self.left_mult(i).scale(&x[i]);
            }
        }
        m
    }

    pub fn right_mult_of(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.dim);
        let mut m = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            if !x[i].is_zero() {
                m = &m + &self.right_mult(i).scale(&x[i]);
            }
        }
        m
    }

    pub fn ad_matrix_of(&self, x: &[Scalar]) -> Matrix {
        if self.kind == AlgebraKind::Lie {
            self.left_mult_of(x)
        } else {
            &self.left_mult_of(x) - &self.right_mult_of(x)
        }
    }

    pub fn l_matrices(&self) -> Vec<Matrix> {
        (0..self.dim).map(|i| self.left_mult(i)).collect()
    }

    pub fn r_matrices(&self) -> Vec<Matrix> {
        (0..self.dim).map(|i| self.right_mult(i)).collect()
    }

    pub fn ad_matrices(&self) -> Vec<Matrix> {
        (0..self.dim).map(|i| self.ad_matrix(i)).collect()
    }

    /// Is the raw table skew-symmetric in its first two indices?
    pub fn table_is_skew(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..=i).all(|j| (0..self.dim).all(|k| *self.c(i, j, k) == -self.c(j, i, k)))
        })
    }

    /// The commutator table `c[i][j][k] - c[j][i][k]` as a `Lie`-kind algebra,
    /// without any left-symmetry precondition.
    pub fn commutator_algebra(&self, name: impl Into<String>) -> Algebra {
        let n = self.dim;
        let mut c = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c[(i * n + j) * n + k] = self.c(i, j, k) - self.c(j, i, k);
                }
            }
        }
        Algebra::new(name, AlgebraKind::Lie, n, c).expect("commutator table is skew")
    }

    /// The sub-adjacent Lie algebra `G(A)` of a left-symmetric algebra.
    pub fn sub_adjacent_lie(&self) -> Result<Algebra> {
        let ls = self.check_left_symmetric();
        if !ls.passes() {
            return Err(Error::precondition(ls));
        }
        Ok(self.commutator_algebra(format!("G({})", self.name)))
    }

    /// Left-symmetry: the associator is symmetric in its first two slots.
    pub fn check_left_symmetric(&self) -> CheckReport {
        let mut report = CheckReport::new("left-symmetric");
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in 0..self.dim {
                    let diff = vec_sub(
                        &self.associator_basis(i, j, k),
                        &self.associator_basis(j, i, k),
                    );
                    report.check_zero(&[i, j, k], diff);
                }
            }
        }
        report.sorted()
    }

    /// Jacobi identity for a skew table.
    pub fn check_jacobi(&self) -> CheckReport {
        let mut report = CheckReport::new("jacobi");
        if !self.table_is_skew() {
            report.fail_note("table is not skew-symmetric");
            return report;
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let mut sum = self.product(&self.product_basis(i, j), &unit_vec(self.dim, k));
                    let t2 = self.product(&self.product_basis(j, k), &unit_vec(self.dim, i));
                    let t3 = self.product(&self.product_basis(k, i), &unit_vec(self.dim, j));
                    for m in 0..self.dim {
                        sum[m] = &sum[m] + &t2[m];
                        sum[m] = &sum[m] + &t3[m];
                    }
                    report.check_zero(&[i, j, k], sum);
                }
            }
        }
        report.sorted()
    }

    pub fn check_associative(&self) -> CheckReport {
        let mut report = CheckReport::new("associative");
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    report.check_zero(&[i, j, k], self.associator_basis(i, j, k));
                }
            }
        }
        report.sorted()
    }

    pub fn check_commutative(&self) -> CheckReport {
        let mut report = CheckReport::new("commutative");
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                report.check_zero(
                    &[i, j],
                    vec_sub(&self.product_basis(i, j), &self.product_basis(j, i)),
                );
            }
        }
        report.sorted()
    }

    /// `[L_x, L_y] = L_[x,y]` and `[L_x, R_y] = R_xy - R_y R_x`
    /// on all basis pairs.
    pub fn check_regular_rep(&self) -> CheckReport {
        let mut report = CheckReport::new("regular-representation");
        let l = self.l_matrices();
        let r = self.r_matrices();
        let combine = |mats: &[Matrix], coeffs: &[Scalar]| -> Matrix {
            let mut m = Matrix::zeros(self.dim, self.dim);
            for (k, coeff) in coeffs.iter().enumerate() {
                if !coeff.is_zero() {
                    m = &m + &mats[k].scale(coeff);
                }
            }
            m
        };
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i < j {
                    let lhs = Matrix::commutator(&l[i], &l[j]);
                    let rhs = combine(&l, &vec_sub(&self.product_basis(i, j), &self.product_basis(j, i)));
                    report.check_zero_noted("left-mult-bracket", &[i, j], (&lhs - &rhs).flatten());
                }
                let lhs = Matrix::commutator(&l[i], &r[j]);
                let rhs = &combine(&r, &self.product_basis(i, j)) - &(&r[j] * &r[i]);
                report.check_zero_noted("left-right-mult-compat", &[i, j], (&lhs - &rhs).flatten());
            }
        }
        report.sorted()
    }

    /// Novikov: left-symmetric with pairwise commuting right multiplications.
    pub fn check_novikov(&self) -> CheckReport {
        let mut report = CheckReport::new("novikov");
        report.absorb(self.check_left_symmetric());
        let r = self.r_matrices();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                report.check_zero_noted(
                    "right-mult-commute",
                    &[i, j],
                    Matrix::commutator(&r[i], &r[j]).flatten(),
                );
            }
        }
        report.sorted()
    }

    /// `[[x,y],z] = 0` for a Lie algebra.
    pub fn check_2step_nilpotent(&self) -> CheckReport {
        let mut report = CheckReport::new("2-step-nilpotent");
        if !self.table_is_skew() {
            report.fail_note("table is not skew-symmetric");
            return report;
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in 0..self.dim {
                    let v = self.product(&self.product_basis(i, j), &unit_vec(self.dim, k));
                    report.check_zero(&[i, j, k], v);
                }
            }
        }
        report.sorted()
    }

    /// Direct sum with all cross products zero.
    pub fn direct_sum(&self, other: &Algebra, name: impl Into<String>) -> Algebra {
        let n = self.dim;
        let m = other.dim;
        let kind = if self.kind == other.kind {
            self.kind
        } else {
            AlgebraKind::Generic
        };
        let mut entries = Vec::new();
        for (i, j, k, v) in self.entries() {
            if !v.is_zero() {
                entries.push((i, j, k, v.clone()));
            }
        }
        for (i, j, k, v) in other.entries() {
            if !v.is_zero() {
                entries.push((i + n, j + n, k + n, v.clone()));
            }
        }
        Algebra::from_entries(name, kind, n + m, &entries).expect("direct sum table is valid")
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra {} ({}, dim {}) {{", self.name, self.kind.as_str(), self.dim)?;
        for (i, j, k, v) in self.entries() {
            if !v.is_zero() {
                write!(f, " c[{i}][{j}][{k}]={v}")?;
            }
        }
        write!(f, " }}")
    }
}
