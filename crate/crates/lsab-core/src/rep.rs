//! Representations, bimodules, 1-cocycles, semidirect sums and matched
//! pairs of both Lie and left-symmetric algebras.

use crate::algebra::{Algebra, AlgebraKind};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::CheckReport;
use crate::scalar::{unit_vec, vec_sub, Scalar};
use crate::tensor::Tensor2;

/// A linear map from an algebra into `gl(V)`: one `module_dim x module_dim`
/// matrix per basis element of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    alg_dim: usize,
    module_dim: usize,
    mats: Vec<Matrix>,
}

impl Representation {
    pub fn new(alg_dim: usize, module_dim: usize, mats: Vec<Matrix>) -> Result<Self> {
        if mats.len() != alg_dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {alg_dim} matrices, got {}",
                mats.len()
            )));
        }
        for m in &mats {
            if m.rows() != module_dim || m.cols() != module_dim {
                return Err(Error::DimensionMismatch(format!(
                    "representation matrix is {}x{}, expected {module_dim}x{module_dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation {
            alg_dim,
            module_dim,
            mats,
        })
    }

    pub fn zero(alg_dim: usize, module_dim: usize) -> Self {
        Representation {
            alg_dim,
            module_dim,
            mats: vec![Matrix::zeros(module_dim, module_dim); alg_dim],
        }
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    /// Matrix of the image of `e_i`.
    pub fn act(&self, i: usize) -> &Matrix {
        &self.mats[i]
    }

    /// Matrix of the image of a coordinate vector.
    pub fn act_vec(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.alg_dim);
        let mut m = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = &m + &self.mats[i].scale(c);
            }
        }
        m
    }

    /// The dual representation: `rho*(x) = -rho(x)^T` in dual bases with
    /// `<e_i*, e_j> = delta_ij`.
    pub fn dual(&self) -> Representation {
        Representation {
            alg_dim: self.alg_dim,
            module_dim: self.module_dim,
            mats: self.mats.iter().map(|m| -&m.transpose()).collect(),
        }
    }

    pub fn sub(&self, other: &Representation) -> Representation {
        assert_eq!(self.alg_dim, other.alg_dim);
        assert_eq!(self.module_dim, other.module_dim);
        Representation {
            alg_dim: self.alg_dim,
            module_dim: self.module_dim,
            mats: self
                .mats
                .iter()
                .zip(&other.mats)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Representation {
        Representation {
            alg_dim: self.alg_dim,
            module_dim: self.module_dim,
            mats: self.mats.iter().map(|m| -m).collect(),
        }
    }

    /// The tensor-sum action `rho (x) 1 + 1 (x) mu` on `V (x) W`, flattened
    /// with `v_a (x) w_b` at index `a * dim W + b`.
    pub fn tensor_sum(&self, other: &Representation) -> Representation {
        assert_eq!(self.alg_dim, other.alg_dim, "tensor_sum: different algebras");
        let iv = Matrix::identity(self.module_dim);
        let iw = Matrix::identity(other.module_dim);
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| &a.kronecker(&iw) + &iv.kronecker(b))
            .collect();
        Representation {
            alg_dim: self.alg_dim,
            module_dim: self.module_dim * other.module_dim,
            mats,
        }
    }
}

impl Algebra {
    /// The regular representation `L` of this algebra.
    pub fn left_rep(&self) -> Representation {
        Representation::new(self.dim(), self.dim(), self.l_matrices()).expect("square mats")
    }

    /// The right-multiplication family `R` as a Representation-shaped carrier.
    pub fn right_rep(&self) -> Representation {
        Representation::new(self.dim(), self.dim(), self.r_matrices()).expect("square mats")
    }

    /// The adjoint representation of the bracket attached to this algebra.
    pub fn ad_rep(&self) -> Representation {
        Representation::new(self.dim(), self.dim(), self.ad_matrices()).expect("square mats")
    }
}

/// `[rho(x), rho(y)] = rho([x,y])` on all basis pairs.
pub fn check_lie_rep(g: &Algebra, rho: &Representation) -> CheckReport {
    let mut report = CheckReport::new("lie-representation");
    if rho.alg_dim() != g.dim() {
        report.fail_note("representation is over an algebra of a different dimension");
        return report;
    }
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let lhs = Matrix::commutator(rho.act(i), rho.act(j));
            let rhs = rho.act_vec(&g.bracket_basis(i, j));
            report.check_zero(&[i, j], (&lhs - &rhs).flatten());
        }
    }
    report.sorted()
}

/// A bimodule `(S, T)` of a left-symmetric algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub s: Representation,
    pub t: Representation,
}

/// The bimodule identities as matrix identities on basis pairs.
pub fn check_bimodule(a: &Algebra, s: &Representation, t: &Representation) -> CheckReport {
    let mut report = CheckReport::new("bimodule");
    if s.alg_dim() != a.dim() || t.alg_dim() != a.dim() || s.module_dim() != t.module_dim() {
        report.fail_note("action dimensions are inconsistent");
        return report;
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            if i < j {
                // is the rep property of S for the commutator bracket
                let lhs = Matrix::commutator(s.act(i), s.act(j));
                let rhs = s.act_vec(&vec_sub(&a.product_basis(i, j), &a.product_basis(j, i)));
                report.check_zero_noted("left-action", &[i, j], (&lhs - &rhs).flatten());
            }
            // S(x)T(y) - T(y)S(x) = T(xy) - T(y)T(x)
            let lhs = &(s.act(i) * t.act(j)) - &(t.act(j) * s.act(i));
            let rhs = &t.act_vec(&a.product_basis(i, j)) - &(t.act(j) * t.act(i));
            report.check_zero_noted("mixed-action", &[i, j], (&lhs - &rhs).flatten());
        }
    }
    report.sorted()
}

fn semidirect_lsa_table(a: &Algebra, s: &Representation, t: &Representation, kind: AlgebraKind) -> Algebra {
    let n = a.dim();
    let m = s.module_dim();
    let mut entries: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for (i, j, k, v) in a.entries() {
        if !v.is_zero() {
            entries.push((i, j, k, v.clone()));
        }
    }
    for i in 0..n {
        for b in 0..m {
            for k in 0..m {
                let v = s.act(i).get(k, b);
                if !v.is_zero() {
                    entries.push((i, n + b, n + k, v.clone()));
                }
                let w = t.act(i).get(k, b);
                if !w.is_zero() {
                    entries.push((n + b, i, n + k, w.clone()));
                }
            }
        }
    }
    Algebra::from_entries(format!("{}⋉V", a.name()), kind, n + m, &entries)
        .expect("semidirect table is well-formed")
}

/// The semidirect sum `A ⋉_{S,T} V`. Requires `(S, T)` to pass the
/// bimodule check.
pub fn semidirect_lsa(a: &Algebra, s: &Representation, t: &Representation) -> Result<Algebra> {
    let pre = check_bimodule(a, s, t);
    if !pre.passes() {
        return Err(Error::precondition(pre));
    }
    Ok(semidirect_lsa_table(a, s, t, AlgebraKind::LeftSymmetric))
}

/// Same table without the bimodule precondition; tagged `Generic`.
pub fn semidirect_lsa_unchecked(a: &Algebra, s: &Representation, t: &Representation) -> Algebra {
    semidirect_lsa_table(a, s, t, AlgebraKind::Generic)
}

/// The semidirect Lie algebra `G ⋉_rho V`:
/// `[x + u, y + v] = [x,y] + rho(x)v - rho(y)u`.
pub fn semidirect_lie(g: &Algebra, rho: &Representation) -> Result<Algebra> {
    let mut pre = CheckReport::new("semidirect-lie-preconditions");
    if !g.table_is_skew() {
        pre.fail_note("base table is not skew-symmetric");
    }
    pre.absorb(check_lie_rep(g, rho));
    if !pre.passes() {
        return Err(Error::precondition(pre));
    }
    let n = g.dim();
    let m = rho.module_dim();
    let mut entries: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for (i, j, k, v) in g.entries() {
        if !v.is_zero() {
            entries.push((i, j, k, v.clone()));
        }
    }
    for i in 0..n {
        for b in 0..m {
            for k in 0..m {
                let v = rho.act(i).get(k, b);
                if !v.is_zero() {
                    entries.push((i, n + b, n + k, v.clone()));
                    entries.push((n + b, i, n + k, -v));
                }
            }
        }
    }
    Algebra::from_entries(format!("{}⋉V", g.name()), AlgebraKind::Lie, n + m, &entries)
}

/// `(S* - T*, -T*)` on the dual module.
pub fn dual_bimodule(s: &Representation, t: &Representation) -> Bimodule {
    let sd = s.dual();
    let td = t.dual();
    Bimodule {
        s: sd.sub(&td),
        t: td.neg(),
    }
}

/// Three conditions on a bimodule `(S, T)`, each as its own report:
/// `(S-T, -T)` bimodule, `(S*, T*)` bimodule, `T` commuting pairwise.
/// The first two are mutually equivalent; under the uniform
/// negative-transpose dual convention they hold exactly when the `T(e_i)`
/// pairwise anticommute, so the third verdict can differ.
pub fn check_dual_pair_conditions(a: &Algebra, s: &Representation, t: &Representation) -> [CheckReport; 3] {
    let first = check_bimodule(a, &s.sub(t), &t.neg());
    let second = check_bimodule(a, &s.dual(), &t.dual());
    let mut third = CheckReport::new("right-actions-commute");
    for i in 0..a.dim() {
        for j in i + 1..a.dim() {
            third.check_zero(&[i, j], Matrix::commutator(t.act(i), t.act(j)).flatten());
        }
    }
    [first, second, third.sorted()]
}

/// A linear map `delta: G -> V (x) W` given on basis elements, the shape of
/// the comultiplications `alpha`, `beta` and of Lie bialgebra cobrackets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleMap {
    source_dim: usize,
    images: Vec<Tensor2>,
}

impl CocycleMap {
    pub fn new(images: Vec<Tensor2>) -> Self {
        assert!(!images.is_empty(), "cocycle map needs at least one image");
        let (da, db) = (images[0].dim_a(), images[0].dim_b());
        assert!(
            images.iter().all(|t| t.dim_a() == da && t.dim_b() == db),
            "cocycle images must share their shape"
        );
        CocycleMap {
            source_dim: images.len(),
            images,
        }
    }

    /// Reads the constants of `alg` as a map into the tensor square:
    /// `e_k -> sum_ij c[i][j][k] e_i (x) e_j` (the comultiplication coefficient convention).
    pub fn from_algebra_constants(alg: &Algebra) -> Self {
        let n = alg.dim();
        let images = (0..n)
            .map(|k| Tensor2::from_fn(n, n, |i, j| alg.c(i, j, k).clone()))
            .collect();
        CocycleMap::new(images)
    }

    /// Inverse of `from_algebra_constants`: the algebra on the dual space
    /// whose constants are the coefficients of this map.
    pub fn dual_algebra(&self, name: impl Into<String>, kind: AlgebraKind) -> Result<Algebra> {
        let n = self.source_dim;
        if self.images[0].dim_a() != n || self.images[0].dim_b() != n {
            return Err(Error::DimensionMismatch(
                "cocycle images are not square of the source dimension".to_owned(),
            ));
        }
        let mut entries = Vec::new();
        for (k, img) in self.images.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    if !img.get(i, j).is_zero() {
                        entries.push((i, j, k, img.get(i, j).clone()));
                    }
                }
            }
        }
        Algebra::from_entries(name, kind, n, &entries)
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn image(&self, k: usize) -> &Tensor2 {
        &self.images[k]
    }

    pub fn image_flat(&self, k: usize) -> Vec<Scalar> {
        self.images[k].flatten()
    }

    /// Image of a coordinate vector, flattened.
    pub fn apply_flat(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.source_dim);
        let len = self.images[0].flatten().len();
        let mut out = vec![Scalar::zero(); len];
        for (k, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(self.images[k].flatten()) {
                *o = &*o + &(c * &v);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Tensor2::is_zero)
    }
}

/// The 1-cocycle identity:
/// `delta([x,y]) = rho(x) delta(y) - rho(y) delta(x)` on basis pairs.
pub fn check_1cocycle(g: &Algebra, rho: &Representation, delta: &CocycleMap) -> CheckReport {
    let mut report = CheckReport::new("1-cocycle");
    if rho.alg_dim() != g.dim() || delta.source_dim() != g.dim() {
        report.fail_note("cocycle shape does not match the algebra");
        return report;
    }
    if delta.image_flat(0).len() != rho.module_dim() {
        report.fail_note("cocycle images do not live in the representation module");
        return report;
    }
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let lhs = delta.apply_flat(&g.bracket_basis(i, j));
            let rhs = vec_sub(
                &rho.act(i).apply(&delta.image_flat(j)),
                &rho.act(j).apply(&delta.image_flat(i)),
            );
            report.check_zero(&[i, j], vec_sub(&lhs, &rhs));
        }
    }
    report.sorted()
}

/// The representation `L (x) 1 + 1 (x) ad` of the sub-adjacent Lie algebra
/// on the tensor square, the action driving the bialgebra conditions.
pub fn rep_l_tensor_ad(a: &Algebra) -> Representation {
    a.left_rep().tensor_sum(&a.ad_rep())
}

/// Matched-pair compatibility for Lie algebras,.
/// Preconditions (Jacobi for both, representation property for both) are
/// absorbed into the report.
pub fn check_matched_pair_lie(
    g: &Algebra,
    h: &Algebra,
    rho: &Representation,
    mu: &Representation,
) -> CheckReport {
    let mut report = CheckReport::new("matched-pair-lie");
    if rho.alg_dim() != g.dim()
        || rho.module_dim() != h.dim()
        || mu.alg_dim() != h.dim()
        || mu.module_dim() != g.dim()
    {
        report.fail_note("action dimensions are inconsistent");
        return report;
    }
    report.absorb(g.check_jacobi());
    report.absorb(h.check_jacobi());
    {
        let mut sub = check_lie_rep(g, rho);
        sub.identity = "rho-representation".to_owned();
        report.absorb(sub);
        let mut sub = check_lie_rep(h, mu);
        sub.identity = "mu-representation".to_owned();
        report.absorb(sub);
    }
    let n = g.dim();
    let m = h.dim();
    let eg = |i: usize| unit_vec(n, i);
    let eh = |p: usize| unit_vec(m, p);
    // rho(x)[a,b] - [rho(x)a, b] - [a, rho(x)b]
    //         + rho(mu(a)x)b - rho(mu(b)x)a = 0
    for i in 0..n {
        for p in 0..m {
            for q in p + 1..m {
                let mut acc = rho.act(i).apply(&h.bracket_basis(p, q));
                let t = h.bracket(&rho.act(i).column(p), &eh(q));
                let u = h.bracket(&eh(p), &rho.act(i).column(q));
                let v = rho.act_vec(&mu.act(p).column(i)).column(q);
                let w = rho.act_vec(&mu.act(q).column(i)).column(p);
                for k in 0..m {
                    acc[k] = &acc[k] - &t[k];
                    acc[k] = &acc[k] - &u[k];
                    acc[k] = &acc[k] + &v[k];
                    acc[k] = &acc[k] - &w[k];
                }
                report.check_zero_noted("action-on-second-bracket", &[i, p, q], acc);
            }
        }
    }
    // mu(a)[x,y] - [mu(a)x, y] - [x, mu(a)y]
    //         + mu(rho(x)a)y - mu(rho(y)a)x = 0
    for p in 0..m {
        for i in 0..n {
            for j in i + 1..n {
                let mut acc = mu.act(p).apply(&g.bracket_basis(i, j));
                let t = g.bracket(&mu.act(p).column(i), &eg(j));
                let u = g.bracket(&eg(i), &mu.act(p).column(j));
                let v = mu.act_vec(&rho.act(i).column(p)).column(j);
                let w = mu.act_vec(&rho.act(j).column(p)).column(i);
                for k in 0..n {
                    acc[k] = &acc[k] - &t[k];
                    acc[k] = &acc[k] - &u[k];
                    acc[k] = &acc[k] + &v[k];
                    acc[k] = &acc[k] - &w[k];
                }
                report.check_zero_noted("action-on-first-bracket", &[p, i, j], acc);
            }
        }
    }
    report.sorted()
}

/// The Lie bracket on `G + H`, built whether or not the matched-pair
/// conditions hold; Jacobi of the result is exactly their conjunction.
pub fn lie_from_matched_pair_unchecked(
    g: &Algebra,
    h: &Algebra,
    rho: &Representation,
    mu: &Representation,
) -> Algebra {
    let n = g.dim();
    let m = h.dim();
    let mut entries: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for (i, j, k, v) in g.entries() {
        if !v.is_zero() {
            entries.push((i, j, k, v.clone()));
        }
    }
    for (p, q, k, v) in h.entries() {
        if !v.is_zero() {
            entries.push((n + p, n + q, n + k, v.clone()));
        }
    }
    // [x, a] = -mu(a)x + rho(x)a
    for i in 0..n {
        for p in 0..m {
            for k in 0..n {
                let v = mu.act(p).get(k, i);
                if !v.is_zero() {
                    entries.push((i, n + p, k, -v.clone()));
                    entries.push((n + p, i, k, v.clone()));
                }
            }
            for k in 0..m {
                let v = rho.act(i).get(k, p);
                if !v.is_zero() {
                    entries.push((i, n + p, n + k, v.clone()));
                    entries.push((n + p, i, n + k, -v.clone()));
                }
            }
        }
    }
    Algebra::from_entries(
        format!("{}⋈{}", g.name(), h.name()),
        AlgebraKind::Lie,
        n + m,
        &entries,
    )
    .expect("the table is skew by construction")
}

/// The matched-pair double `G ⋈ H`, with the compatibility check as
/// a precondition.
pub fn lie_from_matched_pair(
    g: &Algebra,
    h: &Algebra,
    rho: &Representation,
    mu: &Representation,
) -> Result<Algebra> {
    let pre = check_matched_pair_lie(g, h, rho, mu);
    if !pre.passes() {
        return Err(Error::precondition(pre));
    }
    Ok(lie_from_matched_pair_unchecked(g, h, rho, mu))
}

/// A matched pair of left-symmetric algebras: `l_A, r_A` act
/// on `B`, `l_B, r_B` act on `A`.
#[derive(Clone, Debug)]
pub struct MatchedPairLsa {
    pub a: Algebra,
    pub b: Algebra,
    pub l_a: Representation,
    pub r_a: Representation,
    pub l_b: Representation,
    pub r_b: Representation,
}

impl MatchedPairLsa {
    pub fn new(
        a: Algebra,
        b: Algebra,
        l_a: Representation,
        r_a: Representation,
        l_b: Representation,
        r_b: Representation,
    ) -> Result<Self> {
        let (n, m) = (a.dim(), b.dim());
        let ok = l_a.alg_dim() == n
            && r_a.alg_dim() == n
            && l_a.module_dim() == m
            && r_a.module_dim() == m
            && l_b.alg_dim() == m
            && r_b.alg_dim() == m
            && l_b.module_dim() == n
            && r_b.module_dim() == n;
        if !ok {
            return Err(Error::DimensionMismatch(
                "matched-pair actions have inconsistent shapes".to_owned(),
            ));
        }
        Ok(MatchedPairLsa {
            a,
            b,
            l_a,
            r_a,
            l_b,
            r_b,
        })
    }

    /// Bimodule preconditions plus the verbatim compatibility identities
    ///.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new("matched-pair-lsa");
        {
            let mut sub = check_bimodule(&self.a, &self.l_a, &self.r_a);
            sub.identity = "bimodule-of-A".to_owned();
            report.absorb(sub);
            let mut sub = check_bimodule(&self.b, &self.l_b, &self.r_b);
            sub.identity = "bimodule-of-B".to_owned();
            report.absorb(sub);
        }
        let n = self.a.dim();
        let m = self.b.dim();
        let ea = |i: usize| unit_vec(n, i);
        let eb = |p: usize| unit_vec(m, p);
        let (a, b) = (&self.a, &self.b);
        let (la, ra, lb, rb) = (&self.l_a, &self.r_a, &self.l_b, &self.r_b);

        // r_A(x)[a,b] = r_A(l_B(b)x)a - r_A(l_B(a)x)b
        //        + a o (r_A(x)b) - b o (r_A(x)a)
        for i in 0..n {
            for p in 0..m {
                for q in p + 1..m {
                    let br = vec_sub(&b.product_basis(p, q), &b.product_basis(q, p));
                    let lhs = ra.act(i).apply(&br);
                    let t1 = ra.act_vec(&lb.act(q).column(i)).column(p);
                    let t2 = ra.act_vec(&lb.act(p).column(i)).column(q);
                    let t3 = b.product(&eb(p), &ra.act(i).column(q));
                    let t4 = b.product(&eb(q), &ra.act(i).column(p));
                    let mut res = lhs;
                    for k in 0..m {
                        res[k] = &res[k] - &t1[k];
                        res[k] = &res[k] + &t2[k];
                        res[k] = &res[k] - &t3[k];
                        res[k] = &res[k] + &t4[k];
                    }
                    report.check_zero_noted("right-action-on-b", &[i, p, q], res);
                }
            }
        }
        // l_A(x)(a o b) = -l_A(l_B(a)x - r_B(a)x)b + (l_A(x)a - r_A(x)a) o b
        //        + r_A(r_B(b)x)a + a o (l_A(x)b)
        for i in 0..n {
            for p in 0..m {
                for q in 0..m {
                    let lhs = la.act(i).apply(&b.product_basis(p, q));
                    let arg = vec_sub(&lb.act(p).column(i), &rb.act(p).column(i));
                    let t1 = la.act_vec(&arg).column(q);
                    let t2 = b.product(
                        &vec_sub(&la.act(i).column(p), &ra.act(i).column(p)),
                        &eb(q),
                    );
                    let t3 = ra.act_vec(&rb.act(q).column(i)).column(p);
                    let t4 = b.product(&eb(p), &la.act(i).column(q));
                    let mut res = lhs;
                    for k in 0..m {
                        res[k] = &res[k] + &t1[k];
                        res[k] = &res[k] - &t2[k];
                        res[k] = &res[k] - &t3[k];
                        res[k] = &res[k] - &t4[k];
                    }
                    report.check_zero_noted("left-action-on-b", &[i, p, q], res);
                }
            }
        }
        // r_B(a)[x,y] = r_B(l_A(y)a)x - r_B(l_A(x)a)y
        //        + x . (r_B(a)y) - y . (r_B(a)x)
        for p in 0..m {
            for i in 0..n {
                for j in i + 1..n {
                    let br = vec_sub(&a.product_basis(i, j), &a.product_basis(j, i));
                    let lhs = rb.act(p).apply(&br);
                    let t1 = rb.act_vec(&la.act(j).column(p)).column(i);
                    let t2 = rb.act_vec(&la.act(i).column(p)).column(j);
                    let t3 = a.product(&ea(i), &rb.act(p).column(j));
                    let t4 = a.product(&ea(j), &rb.act(p).column(i));
                    let mut res = lhs;
                    for k in 0..n {
                        res[k] = &res[k] - &t1[k];
                        res[k] = &res[k] + &t2[k];
                        res[k] = &res[k] - &t3[k];
                        res[k] = &res[k] + &t4[k];
                    }
                    report.check_zero_noted("right-action-on-a", &[p, i, j], res);
                }
            }
        }
        // l_B(a)(x . y) = -l_B(l_A(x)a - r_A(x)a)y + (l_B(a)x - r_B(a)x) . y
        //        + r_B(r_A(y)a)x + x . (l_B(a)y)
        for p in 0..m {
            for i in 0..n {
                for j in 0..n {
                    let lhs = lb.act(p).apply(&a.product_basis(i, j));
                    let arg = vec_sub(&la.act(i).column(p), &ra.act(i).column(p));
                    let t1 = lb.act_vec(&arg).column(j);
                    let t2 = a.product(
                        &vec_sub(&lb.act(p).column(i), &rb.act(p).column(i)),
                        &ea(j),
                    );
                    let t3 = rb.act_vec(&ra.act(j).column(p)).column(i);
                    let t4 = a.product(&ea(i), &lb.act(p).column(j));
                    let mut res = lhs;
                    for k in 0..n {
                        res[k] = &res[k] + &t1[k];
                        res[k] = &res[k] - &t2[k];
                        res[k] = &res[k] - &t3[k];
                        res[k] = &res[k] - &t4[k];
                    }
                    report.check_zero_noted("left-action-on-a", &[p, i, j], res);
                }
            }
        }
        report.sorted()
    }

    /// The product table on `A + B`, built unconditionally.
    pub fn build_unchecked(&self) -> Algebra {
        let n = self.a.dim();
        let m = self.b.dim();
        let mut entries: Vec<(usize, usize, usize, Scalar)> = Vec::new();
        for (i, j, k, v) in self.a.entries() {
            if !v.is_zero() {
                entries.push((i, j, k, v.clone()));
            }
        }
        for (p, q, k, v) in self.b.entries() {
            if !v.is_zero() {
                entries.push((n + p, n + q, n + k, v.clone()));
            }
        }
        for i in 0..n {
            for q in 0..m {
                // e_i * f_q = r_B(f_q)e_i + l_A(e_i)f_q
                for k in 0..n {
                    let v = self.r_b.act(q).get(k, i);
                    if !v.is_zero() {
                        entries.push((i, n + q, k, v.clone()));
                    }
                }
                for k in 0..m {
                    let v = self.l_a.act(i).get(k, q);
                    if !v.is_zero() {
                        entries.push((i, n + q, n + k, v.clone()));
                    }
                }
                // f_q * e_i = l_B(f_q)e_i + r_A(e_i)f_q
                for k in 0..n {
                    let v = self.l_b.act(q).get(k, i);
                    if !v.is_zero() {
                        entries.push((n + q, i, k, v.clone()));
                    }
                }
                for k in 0..m {
                    let v = self.r_a.act(i).get(k, q);
                    if !v.is_zero() {
                        entries.push((n + q, i, n + k, v.clone()));
                    }
                }
            }
        }
        Algebra::from_entries(
            format!("{}⋈{}", self.a.name(), self.b.name()),
            AlgebraKind::Generic,
            n + m,
            &entries,
        )
        .expect("the table is well-formed")
    }

    /// `A ⋈ B` with the matched-pair conditions as a precondition; the
    /// result is tagged left-symmetric.
    pub fn build(&self) -> Result<Algebra> {
        let pre = self.check();
        if !pre.passes() {
            return Err(Error::precondition(pre));
        }
        self.build_unchecked().with_kind(AlgebraKind::LeftSymmetric)
    }
}

/// The `(rho, mu)`-linked conditions.
pub fn check_linked_pair(
    a: &Algebra,
    b: &Algebra,
    rho: &Representation,
    mu: &Representation,
) -> CheckReport {
    let mut report = CheckReport::new("linked-pair");
    if rho.alg_dim() != a.dim()
        || rho.module_dim() != b.dim()
        || mu.alg_dim() != b.dim()
        || mu.module_dim() != a.dim()
    {
        report.fail_note("action dimensions are inconsistent");
        return report;
    }
    {
        let g = a.commutator_algebra("G(A)");
        let h = b.commutator_algebra("G(B)");
        let mut sub = check_lie_rep(&g, rho);
        sub.identity = "rho-representation".to_owned();
        report.absorb(sub);
        let mut sub = check_lie_rep(&h, mu);
        sub.identity = "mu-representation".to_owned();
        report.absorb(sub);
    }
    let n = a.dim();
    let m = b.dim();
    let ea = |i: usize| unit_vec(n, i);
    let eb = |p: usize| unit_vec(m, p);
    // rho(x)(a o b) = rho(x)a o b + a o (rho(x)b) - rho(mu(a)x)b
    for i in 0..n {
        for p in 0..m {
            for q in 0..m {
                let lhs = rho.act(i).apply(&b.product_basis(p, q));
                let t1 = b.product(&rho.act(i).column(p), &eb(q));
                let t2 = b.product(&eb(p), &rho.act(i).column(q));
                let t3 = rho.act_vec(&mu.act(p).column(i)).column(q);
                let mut res = lhs;
                for k in 0..m {
                    res[k] = &res[k] - &t1[k];
                    res[k] = &res[k] - &t2[k];
                    res[k] = &res[k] + &t3[k];
                }
                report.check_zero_noted("leibniz-on-b", &[i, p, q], res);
            }
        }
    }
    // mu(a)(x . y) = mu(a)x . y + x . (mu(a)y) - mu(rho(x)a)y
    for p in 0..m {
        for i in 0..n {
            for j in 0..n {
                let lhs = mu.act(p).apply(&a.product_basis(i, j));
                let t1 = a.product(&mu.act(p).column(i), &ea(j));
                let t2 = a.product(&ea(i), &mu.act(p).column(j));
                let t3 = mu.act_vec(&rho.act(i).column(p)).column(j);
                let mut res = lhs;
                for k in 0..n {
                    res[k] = &res[k] - &t1[k];
                    res[k] = &res[k] - &t2[k];
                    res[k] = &res[k] + &t3[k];
                }
                report.check_zero_noted("leibniz-on-a", &[p, i, j], res);
            }
        }
    }
    report.sorted()
}

/// The `(rho, mu)`-linked sum with product:
/// `(x+a) * (y+b) = (x.y + mu(a)y) + (a o b + rho(x)b)`.
pub fn linked_pair_lsa(
    a: &Algebra,
    b: &Algebra,
    rho: &Representation,
    mu: &Representation,
) -> Result<Algebra> {
    let pre = check_linked_pair(a, b, rho, mu);
    if !pre.passes() {
        return Err(Error::precondition(pre));
    }
    let n = a.dim();
    let m = b.dim();
    let mut entries: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for (i, j, k, v) in a.entries() {
        if !v.is_zero() {
            entries.push((i, j, k, v.clone()));
        }
    }
    for (p, q, k, v) in b.entries() {
        if !v.is_zero() {
            entries.push((n + p, n + q, n + k, v.clone()));
        }
    }
    for i in 0..n {
        for p in 0..m {
            for k in 0..m {
                let v = rho.act(i).get(k, p);
                if !v.is_zero() {
                    entries.push((i, n + p, n + k, v.clone()));
                }
            }
            for k in 0..n {
                let v = mu.act(p).get(k, i);
                if !v.is_zero() {
                    entries.push((n + p, i, k, v.clone()));
                }
            }
        }
    }
    Algebra::from_entries(
        format!("{}+{}", a.name(), b.name()),
        AlgebraKind::LeftSymmetric,
        n + m,
        &entries,
    )
}
