//! Elements of `A (x) B` and `A (x) B (x) C` as dense coefficient arrays,
//! with the leg permutations and per-leg operator actions used throughout
//! the coboundary theory.

use std::fmt;

use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// An element of a tensor product of two coordinate spaces:
/// `t = sum coeff[i][j] a_i (x) b_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor2 {
    dim_a: usize,
    dim_b: usize,
    data: Vec<Scalar>,
}

impl Tensor2 {
    pub fn zeros(dim_a: usize, dim_b: usize) -> Self {
        Tensor2 {
            dim_a,
            dim_b,
            data: vec![Scalar::zero(); dim_a * dim_b],
        }
    }

    pub fn from_fn(dim_a: usize, dim_b: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut t = Tensor2::zeros(dim_a, dim_b);
        for i in 0..dim_a {
            for j in 0..dim_b {
                t.set(i, j, f(i, j));
            }
        }
        t
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.dim_b + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.dim_b + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        let cur = self.get(i, j) + v;
        self.set(i, j, cur);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// The exchange operator: `sigma(t)[i][j] = t[j][i]`.
    pub fn swap_legs(&self) -> Tensor2 {
        Tensor2::from_fn(self.dim_b, self.dim_a, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.dim_a == self.dim_b && *self == self.swap_legs()
    }

    pub fn is_skew(&self) -> bool {
        self.dim_a == self.dim_b
            && (0..self.dim_a)
                .all(|i| (0..self.dim_b).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    /// Reads the tensor as a linear map `B* -> A`: the matrix whose column
    /// `j` is `sum_i coeff[i][j] a_i`.
    pub fn as_map(&self) -> Matrix {
        Matrix::from_fn(self.dim_a, self.dim_b, |r, c| self.get(r, c).clone())
    }

    pub fn from_map(m: &Matrix) -> Tensor2 {
        Tensor2::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).clone())
    }

    /// `(M (x) 1) t`.
    pub fn apply_left(&self, m: &Matrix) -> Tensor2 {
        assert_eq!(m.cols(), self.dim_a);
        Tensor2::from_fn(m.rows(), self.dim_b, |i, j| {
            (0..self.dim_a).map(|p| m.get(i, p) * self.get(p, j)).sum()
        })
    }

    /// `(1 (x) M) t`.
    pub fn apply_right(&self, m: &Matrix) -> Tensor2 {
        assert_eq!(m.cols(), self.dim_b);
        Tensor2::from_fn(self.dim_a, m.rows(), |i, j| {
            (0..self.dim_b).map(|p| m.get(j, p) * self.get(i, p)).sum()
        })
    }

    /// Flat coordinates with `a_i (x) b_j` at index `i * dim_b + j`.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn from_flat(dim_a: usize, dim_b: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), dim_a * dim_b);
        Tensor2 { dim_a, dim_b, data }
    }

    pub fn add(&self, other: &Tensor2) -> Tensor2 {
        assert_eq!((self.dim_a, self.dim_b), (other.dim_a, other.dim_b));
        Tensor2::from_fn(self.dim_a, self.dim_b, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Tensor2) -> Tensor2 {
        assert_eq!((self.dim_a, self.dim_b), (other.dim_a, other.dim_b));
        Tensor2::from_fn(self.dim_a, self.dim_b, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn neg(&self) -> Tensor2 {
        Tensor2::from_fn(self.dim_a, self.dim_b, |i, j| -self.get(i, j))
    }
}

impl fmt::Debug for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor2 {}x{} {{", self.dim_a, self.dim_b)?;
        let mut first = true;
        for i in 0..self.dim_a {
            for j in 0..self.dim_b {
                if !self.get(i, j).is_zero() {
                    if !first {
                        write!(f, ",")?;
                    }
                    write!(f, " ({i},{j})={}", self.get(i, j))?;
                    first = false;
                }
            }
        }
        write!(f, " }}")
    }
}

/// An element of a triple tensor product, `t = sum coeff[i][j][k] a_i (x) b_j (x) c_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(dims: [usize; 3]) -> Self {
        Tensor3 {
            dims,
            data: vec![Scalar::zero(); dims[0] * dims[1] * dims[2]],
        }
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let idx = self.idx(i, j, k);
        self.data[idx] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let idx = self.idx(i, j, k);
        let cur = &self.data[idx] + v;
        self.data[idx] = cur;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims, other.dims);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Tensor3 { dims: self.dims, data }
    }

    pub fn sub(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims, other.dims);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Tensor3 { dims: self.dims, data }
    }

    pub fn neg(&self) -> Tensor3 {
        Tensor3 {
            dims: self.dims,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    /// `sigma_123 (x (x) y (x) z) = z (x) x (x) y`, i.e. the result picks its
    /// `(i,j,k)` coefficient from position `(j,k,i)`.
    pub fn sigma_123(&self) -> Tensor3 {
        let dims = [self.dims[2], self.dims[0], self.dims[1]];
        let mut t = Tensor3::zeros(dims);
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                for k in 0..dims[2] {
                    t.set(i, j, k, self.get(j, k, i).clone());
                }
            }
        }
        t
    }

    /// Transposition of the first two legs.
    pub fn swap_legs01(&self) -> Tensor3 {
        let dims = [self.dims[1], self.dims[0], self.dims[2]];
        let mut t = Tensor3::zeros(dims);
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                for k in 0..dims[2] {
                    t.set(i, j, k, self.get(j, i, k).clone());
                }
            }
        }
        t
    }

    /// `sigma_132 (x (x) y (x) z) = y (x) z (x) x`: coefficient from `(k,i,j)`.
    pub fn sigma_132(&self) -> Tensor3 {
        let dims = [self.dims[1], self.dims[2], self.dims[0]];
        let mut t = Tensor3::zeros(dims);
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                for k in 0..dims[2] {
                    t.set(i, j, k, self.get(k, i, j).clone());
                }
            }
        }
        t
    }

    /// Applies a linear operator on one tensor leg (0, 1 or 2).
    pub fn apply_leg(&self, leg: usize, m: &Matrix) -> Tensor3 {
        assert_eq!(m.cols(), self.dims[leg], "apply_leg: dimension mismatch");
        let mut dims = self.dims;
        dims[leg] = m.rows();
        let mut t = Tensor3::zeros(dims);
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                for k in 0..self.dims[2] {
                    let v = self.get(i, j, k);
                    if v.is_zero() {
                        continue;
                    }
                    match leg {
                        0 => {
                            for p in 0..m.rows() {
                                let add = m.get(p, i) * v;
                                t.add_to(p, j, k, &add);
                            }
                        }
                        1 => {
                            for p in 0..m.rows() {
                                let add = m.get(p, j) * v;
                                t.add_to(i, p, k, &add);
                            }
                        }
                        2 => {
                            for p in 0..m.rows() {
                                let add = m.get(p, k) * v;
                                t.add_to(i, j, p, &add);
                            }
                        }
                        _ => panic!("leg out of range"),
                    }
                }
            }
        }
        t
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    /// Every nonzero coefficient with its index triple.
    pub fn nonzero_entries(&self) -> Vec<([usize; 3], Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                for k in 0..self.dims[2] {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        out.push(([i, j, k], v.clone()));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3 {:?} {{", self.dims)?;
        for ([i, j, k], v) in self.nonzero_entries() {
            write!(f, " ({i},{j},{k})={v}")?;
        }
        write!(f, " }}")
    }
}
