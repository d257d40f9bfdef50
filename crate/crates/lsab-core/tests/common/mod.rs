//! Shared generators and independent oracles for the property and
//! acceptance suites. Everything is seeded: per-case seeds derive
//! deterministically from a root seed.

#![allow(dead_code)]

use lsab_core::algebra::{Algebra, AlgebraKind};
use lsab_core::constructions;
use lsab_core::fixtures;
use lsab_core::form::BilinearForm;
use lsab_core::matrix::Matrix;
use lsab_core::scalar::Scalar;
use lsab_core::tensor::{Tensor2, Tensor3};

use rand::prelude::*;
use rand_chacha::ChaCha20Rng;

pub const ROOT_SEED: u64 = 0x15AB_2008;

pub fn rng(case: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(ROOT_SEED.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ case)
}

/// Sparse rational entries in {-2, -1, -1/2, 0, 1/2, 1, 2}, zero-heavy.
pub fn sparse_scalar(rng: &mut ChaCha20Rng, zero_weight: u32) -> Scalar {
    if rng.gen_ratio(zero_weight, zero_weight + 2) {
        return Scalar::zero();
    }
    match rng.gen_range(0..6) {
        0 => Scalar::from_int(-2),
        1 => Scalar::from_int(-1),
        2 => Scalar::ratio(-1, 2),
        3 => Scalar::ratio(1, 2),
        4 => Scalar::from_int(1),
        _ => Scalar::from_int(2),
    }
}

pub fn random_matrix(rng: &mut ChaCha20Rng, rows: usize, cols: usize, zero_weight: u32) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| sparse_scalar(rng, zero_weight))
}

pub fn random_nonsingular_matrix(rng: &mut ChaCha20Rng, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, n, n, 1);
        if m.invert().is_ok() {
            return m;
        }
    }
}

pub fn random_tensor(rng: &mut ChaCha20Rng, n: usize) -> Tensor2 {
    Tensor2::from_fn(n, n, |_, _| sparse_scalar(rng, 2))
}

pub fn random_symmetric_tensor(rng: &mut ChaCha20Rng, n: usize) -> Tensor2 {
    let mut t = Tensor2::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = sparse_scalar(rng, 1);
            t.set(i, j, v.clone());
            t.set(j, i, v);
        }
    }
    t
}

pub fn random_nondegenerate_symmetric_tensor(rng: &mut ChaCha20Rng, n: usize) -> Tensor2 {
    loop {
        let t = random_symmetric_tensor(rng, n);
        if t.as_map().invert().is_ok() {
            return t;
        }
    }
}

/// A random sparse product table of the given kind tag.
pub fn random_sparse_table(rng: &mut ChaCha20Rng, dim: usize) -> Algebra {
    let entries: Vec<(usize, usize, usize, Scalar)> = (0..dim * dim * dim)
        .filter_map(|flat| {
            let v = sparse_scalar(rng, 6);
            if v.is_zero() {
                None
            } else {
                let k = flat % dim;
                let j = (flat / dim) % dim;
                let i = flat / (dim * dim);
                Some((i, j, k, v))
            }
        })
        .collect();
    Algebra::from_entries("random", AlgebraKind::Generic, dim, &entries).expect("table shape")
}

/// A random left-symmetric algebra of the requested dimension, mixing the
/// realization constructions with rejection-sampled sparse tables.
pub fn random_left_symmetric(rng: &mut ChaCha20Rng, dim: usize) -> Algebra {
    assert!(dim >= 1);
    for _ in 0..200 {
        let strategy = rng.gen_range(0..6);
        let candidate: Option<Algebra> = match strategy {
            // zero algebra
            0 => Some(Algebra::zero("rand-zero", AlgebraKind::LeftSymmetric, dim)),
            // dot-product family, always left-symmetric
            1 => {
                let a: Vec<Scalar> = (0..dim).map(|_| sparse_scalar(rng, 1)).collect();
                constructions::lsa_from_dot_vector(dim, &a).ok()
            }
            // a fixture of the right dimension, when there is one
            2 => fixtures::lsa_fixtures()
                .into_iter()
                .filter(|a| a.dim() == dim)
                .choose(rng),
            // central extension of a smaller random algebra by a cocycle
            3 if dim >= 2 => {
                let base = random_left_symmetric(rng, dim - 1);
                let b = random_lsa_cocycle(rng, &base);
                constructions::central_extension(&base, &b)
                    .ok()
                    .and_then(|e| e.with_kind(AlgebraKind::LeftSymmetric).ok())
            }
            // direct sum of two smaller random algebras
            4 if dim >= 2 => {
                let split = rng.gen_range(1..dim);
                let left = random_left_symmetric(rng, split);
                let right = random_left_symmetric(rng, dim - split);
                left.direct_sum(&right, "rand-sum")
                    .with_kind(AlgebraKind::LeftSymmetric)
                    .ok()
            }
            // sparse rejection sampling
            _ => {
                let t = random_sparse_table(rng, dim);
                if t.check_left_symmetric().passes() {
                    t.with_kind(AlgebraKind::LeftSymmetric).ok()
                } else {
                    None
                }
            }
        };
        if let Some(a) = candidate {
            if a.check_left_symmetric().passes() {
                return a.rename(format!("rand-lsa-{dim}"));
            }
        }
    }
    Algebra::zero("rand-fallback", AlgebraKind::LeftSymmetric, dim)
}

/// Basis of the linear space of 2-cocycles of a left-symmetric
/// algebra, by exact nullspace computation on the n^2 unknowns `b_uv`.
pub fn lsa_cocycle_space(a: &Algebra) -> Vec<BilinearForm> {
    let n = a.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                // B(e_i e_j, e_k) - B(e_i, e_j e_k) - B(e_j e_i, e_k) + B(e_j, e_i e_k)
                for u in 0..n {
                    row[u * n + k] = &row[u * n + k] + &(a.c(i, j, u) - a.c(j, i, u));
                    row[i * n + u] = &row[i * n + u] - a.c(j, k, u);
                    row[j * n + u] = &row[j * n + u] + a.c(i, k, u);
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(rows)
        .nullspace()
        .into_iter()
        .map(|v| BilinearForm::from_fn(n, |i, j| v[i * n + j].clone()))
        .collect()
}

/// A random element of the 2-cocycle space.
pub fn random_lsa_cocycle(rng: &mut ChaCha20Rng, a: &Algebra) -> BilinearForm {
    let basis = lsa_cocycle_space(a);
    let n = a.dim();
    let mut out = BilinearForm::zeros(n);
    for b in &basis {
        let c = sparse_scalar(rng, 1);
        if c.is_zero() {
            continue;
        }
        out = BilinearForm::from_fn(n, |i, j| out.get(i, j) + &(&c * b.get(i, j)));
    }
    out
}

/// Basis of the derivation space of an algebra (Leibniz-rule nullspace on
/// the n^2 matrix unknowns `d_uv`).
pub fn derivation_space(a: &Algebra) -> Vec<Matrix> {
    let n = a.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                // D(e_i e_j)_k - (D(e_i) e_j)_k - (e_i D(e_j))_k
                for v in 0..n {
                    row[k * n + v] = &row[k * n + v] + a.c(i, j, v);
                }
                for u in 0..n {
                    row[u * n + i] = &row[u * n + i] - a.c(u, j, k);
                    row[u * n + j] = &row[u * n + j] - a.c(i, u, k);
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(rows)
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |u, w| v[u * n + w].clone()))
        .collect()
}

pub fn random_derivation(rng: &mut ChaCha20Rng, a: &Algebra) -> Matrix {
    let n = a.dim();
    let mut out = Matrix::zeros(n, n);
    for d in derivation_space(a) {
        let c = sparse_scalar(rng, 1);
        if !c.is_zero() {
            out = &out + &d.scale(&c);
        }
    }
    out
}

/// Basis of the skew 2-cocycle space of a Lie algebra, on the upper
/// triangular unknowns `w_ij` (i < j).
pub fn lie_cocycle_space(g: &Algebra) -> Vec<BilinearForm> {
    let n = g.dim();
    let upper: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let var = |i: usize, j: usize| -> Option<(usize, bool)> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => Some((upper.iter().position(|&(a, b)| (a, b) == (i, j)).unwrap(), false)),
            Greater => Some((upper.iter().position(|&(a, b)| (a, b) == (j, i)).unwrap(), true)),
            Equal => None,
        }
    };
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut row = vec![Scalar::zero(); upper.len()];
                // omega([x,y],z) cyclic: coefficient of w_uv in each term
                let mut add_term = |a: usize, b: usize, z: usize| {
                    // omega([e_a, e_b], e_z) = sum_u br_au..  c(a,b,u) w_{u,z}
                    for u in 0..n {
                        let c = g.c(a, b, u);
                        if c.is_zero() {
                            continue;
                        }
                        if let Some((idx, flip)) = var(u, z) {
                            row[idx] = if flip { &row[idx] - c } else { &row[idx] + c };
                        }
                    }
                };
                add_term(i, j, k);
                add_term(j, k, i);
                add_term(k, i, j);
                rows.push(row);
            }
        }
    }
    if upper.is_empty() {
        return Vec::new();
    }
    let m = if rows.is_empty() {
        Matrix::zeros(1, upper.len())
    } else {
        Matrix::from_rows(rows)
    };
    m.nullspace()
        .into_iter()
        .map(|v| {
            let mut f = BilinearForm::zeros(n);
            for (idx, &(i, j)) in upper.iter().enumerate() {
                f.set(i, j, v[idx].clone());
                f.set(j, i, -v[idx].clone());
            }
            f
        })
        .collect()
}

/// A random nondegenerate symplectic form on `g`, when one exists in the
/// sampled span.
pub fn random_symplectic_form(rng: &mut ChaCha20Rng, g: &Algebra) -> Option<BilinearForm> {
    let basis = lie_cocycle_space(g);
    if basis.is_empty() {
        return None;
    }
    let n = g.dim();
    for _ in 0..50 {
        let mut out = BilinearForm::zeros(n);
        for b in &basis {
            let c = sparse_scalar(rng, 1);
            if !c.is_zero() {
                out = BilinearForm::from_fn(n, |i, j| out.get(i, j) + &(&c * b.get(i, j)));
            }
        }
        if out.is_nondegenerate() {
            return Some(out);
        }
    }
    None
}

// ---------------------------------------------------------------------
// Independent oracles: rank-one expansion of the displayed leg products.
// These follow the published term-by-term expansions directly and share no
// index bookkeeping with the library implementation.
// ---------------------------------------------------------------------

fn rank_one_terms(r: &Tensor2) -> Vec<(Scalar, usize, usize)> {
    let mut terms = Vec::new();
    for p in 0..r.dim_a() {
        for q in 0..r.dim_b() {
            let c = r.get(p, q);
            if !c.is_zero() {
                terms.push((c.clone(), p, q));
            }
        }
    }
    terms
}

/// `-r12.r13 + r12.r23 + [r13, r23]` expanded term by term.
pub fn oracle_s_equation_tensor(a: &Algebra, r: &Tensor2) -> Tensor3 {
    let n = a.dim();
    let terms = rank_one_terms(r);
    let mut t = Tensor3::zeros([n, n, n]);
    for (la, pa, qa) in &terms {
        for (lb, pb, qb) in &terms {
            let coeff = la * lb;
            for k in 0..n {
                // -(e_pa . e_pb) (x) e_qa (x) e_qb
                let c = a.c(*pa, *pb, k);
                if !c.is_zero() {
                    t.add_to(k, *qa, *qb, &-(&coeff * c));
                }
                // + e_pa (x) (e_qa . e_pb) (x) e_qb
                let c = a.c(*qa, *pb, k);
                if !c.is_zero() {
                    t.add_to(*pa, k, *qb, &(&coeff * c));
                }
                // + e_pa (x) e_pb (x) [e_qa, e_qb]
                let c = a.c(*qa, *qb, k) - a.c(*qb, *qa, k);
                if !c.is_zero() {
                    t.add_to(*pa, *pb, k, &(&coeff * &c));
                }
            }
        }
    }
    t
}

/// `[r12,r13] + [r12,r23] + [r13,r23]` expanded term by term (Lie table).
pub fn oracle_cybe_tensor(g: &Algebra, r: &Tensor2) -> Tensor3 {
    let n = g.dim();
    let terms = rank_one_terms(r);
    let mut t = Tensor3::zeros([n, n, n]);
    for (la, pa, qa) in &terms {
        for (lb, pb, qb) in &terms {
            let coeff = la * lb;
            for k in 0..n {
                // [e_pa, e_pb] (x) e_qa (x) e_qb
                let c = g.c(*pa, *pb, k);
                if !c.is_zero() {
                    t.add_to(k, *qa, *qb, &(&coeff * c));
                }
                // e_pa (x) [e_qa, e_pb] (x) e_qb
                let c = g.c(*qa, *pb, k);
                if !c.is_zero() {
                    t.add_to(*pa, k, *qb, &(&coeff * c));
                }
                // e_pa (x) e_pb (x) [e_qa, e_qb]
                let c = g.c(*qa, *qb, k);
                if !c.is_zero() {
                    t.add_to(*pa, *pb, k, &(&coeff * c));
                }
            }
        }
    }
    t
}

/// The five terms of `[[r,r]]` per the displayed expansions after
/// the displayed leg expansions: indices `alpha = (a_i, b_i)`, `beta = (a_j, b_j)`.
pub fn oracle_s_bracket(a: &Algebra, r: &Tensor2) -> Tensor3 {
    let n = a.dim();
    let terms = rank_one_terms(r);
    let mut t = Tensor3::zeros([n, n, n]);
    let br = |x: usize, y: usize, k: usize| a.c(x, y, k) - a.c(y, x, k);
    for (li, ai, bi) in &terms {
        for (lj, aj, bj) in &terms {
            let coeff = li * lj;
            for k in 0..n {
                // + (a_i . a_j) (x) b_j (x) b_i
                let c = a.c(*ai, *aj, k);
                if !c.is_zero() {
                    t.add_to(k, *bj, *bi, &(&coeff * c));
                }
                // - b_j (x) (a_i . a_j) (x) b_i
                let c = a.c(*ai, *aj, k);
                if !c.is_zero() {
                    t.add_to(*bj, k, *bi, &-(&coeff * c));
                }
                // + a_j (x) [a_i, b_j] (x) b_i
                let c = br(*ai, *bj, k);
                if !c.is_zero() {
                    t.add_to(*aj, k, *bi, &(&coeff * &c));
                }
                // - [a_i, b_j] (x) a_j (x) b_i
                let c = br(*ai, *bj, k);
                if !c.is_zero() {
                    t.add_to(k, *aj, *bi, &-(&coeff * &c));
                }
                // - a_i (x) a_j (x) [b_i, b_j]
                let c = br(*bi, *bj, k);
                if !c.is_zero() {
                    t.add_to(*ai, *aj, k, &-(&coeff * &c));
                }
            }
        }
    }
    t
}
