//! Brute-force exterior-algebra oracle for small simple Lie algebras.
//!
//! The algebra is realized by matrices (`sl(n+1)`, `so`, `sp`, and `G2`
//! folded out of `so(8)`), root vectors are generated by brackets of the
//! Chevalley generators, and everything downstream works with the resulting
//! structure constants. Whatever signs the realization produces, the Jacobi
//! sweep at build time is what certifies the table.
//!
//! Wedge monomials are bitmasks over the basis. All operators preserve
//! weight, so matrices are assembled and reduced one weight block at a time.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::AbelianIdeal;
use crate::limits::Limits;
use crate::linalg;
use crate::rootsys::{Family, RootSystem};
use crate::{q_int, Q};

type Mat = Vec<Vec<Q>>;
/// Sparse vector in some basis.
type Sparse = Vec<(usize, Q)>;
/// Sparse wedge vector keyed by monomial bitmask.
type WedgeVec = HashMap<u32, Q>;

fn zero_mat(d: usize) -> Mat {
    vec![vec![Q::zero(); d]; d]
}

fn unit(d: usize, a: usize, b: usize) -> Mat {
    let mut m = zero_mat(d);
    m[a][b] = Q::one();
    m
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let d = a.len();
    let mut out = zero_mat(d);
    for i in 0..d {
        for k in 0..d {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..d {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn mat_lin(a: &Mat, ca: &Q, b: &Mat, cb: &Q) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x * ca + y * cb).collect())
        .collect()
}

fn commutator(a: &Mat, b: &Mat) -> Mat {
    mat_lin(&mat_mul(a, b), &Q::one(), &mat_mul(b, a), &-Q::one())
}

fn transpose(a: &Mat) -> Mat {
    let d = a.len();
    (0..d).map(|i| (0..d).map(|j| a[j][i].clone()).collect()).collect()
}

fn is_zero_mat(a: &Mat) -> bool {
    a.iter().all(|r| r.iter().all(|x| x.is_zero()))
}

/// A classical matrix realization: dimension, the form `J` (a signed
/// permutation, so `J^-1 = J^T`) or none for `sl`, and the matrix units
/// `E_ab` whose projections are the raising Chevalley generators.
struct Realization {
    dim: usize,
    form: Option<Mat>,
    raising: Vec<Vec<(usize, usize)>>,
}

impl Realization {
    /// `A - J^T A^T J`, the projection onto the Lie algebra of `J`.
    fn project(&self, a: &Mat) -> Mat {
        match &self.form {
            None => a.clone(),
            Some(j) => {
                let t = mat_mul(&mat_mul(&transpose(j), &transpose(a)), j);
                mat_lin(a, &Q::one(), &t, &-Q::one())
            }
        }
    }

    fn generator(&self, units: &[(usize, usize)], transposed: bool) -> Mat {
        let mut acc = zero_mat(self.dim);
        for &(a, b) in units {
            let (a, b) = if transposed { (b, a) } else { (a, b) };
            acc = mat_lin(&acc, &Q::one(), &self.project(&unit(self.dim, a, b)), &Q::one());
        }
        acc
    }
}

fn antidiagonal(d: usize, sign: impl Fn(usize) -> i64) -> Mat {
    let mut j = zero_mat(d);
    for a in 0..d {
        j[a][d - 1 - a] = q_int(sign(a));
    }
    j
}

/// Orthogonal realization of `D_n` on `2n` coordinates, `e_a` having weight
/// `eps_{a+1}` and `e_{2n-1-a}` weight `-eps_{a+1}`.
fn d_units(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut r: Vec<Vec<(usize, usize)>> = (0..n - 1).map(|i| vec![(i, i + 1)]).collect();
    r.push(vec![(n - 2, n)]);
    r
}

fn realization(rs: &RootSystem) -> Result<Realization> {
    let ty = rs.cartan_type();
    let n = ty.rank;
    let chain = |n: usize| (0..n).map(|i| vec![(i, i + 1)]).collect::<Vec<_>>();
    Ok(match ty.family {
        Family::A => Realization {
            dim: n + 1,
            form: None,
            raising: chain(n),
        },
        Family::B => Realization {
            dim: 2 * n + 1,
            form: Some(antidiagonal(2 * n + 1, |_| 1)),
            raising: chain(n),
        },
        Family::C => Realization {
            dim: 2 * n,
            form: Some(antidiagonal(2 * n, |a| if a < n { 1 } else { -1 })),
            raising: chain(n),
        },
        Family::D => Realization {
            dim: 2 * n,
            form: Some(antidiagonal(2 * n, |_| 1)),
            raising: d_units(n),
        },
        Family::G => {
            // Fold the three outer nodes of D4 onto the short simple root.
            let short = (0..2)
                .find(|&i| !rs.is_long(rs.root_index(&unit_root(2, i)).unwrap()))
                .unwrap();
            let d4 = d_units(4);
            let folded = [d4[0].clone(), d4[2].clone(), d4[3].clone()].concat();
            let mut raising = vec![Vec::new(); 2];
            raising[short] = folded;
            raising[1 - short] = d4[1].clone();
            Realization {
                dim: 8,
                form: Some(antidiagonal(8, |_| 1)),
                raising,
            }
        }
        Family::E | Family::F => {
            return Err(Error::Unsupported(format!(
                "no matrix realization for {ty} in the exterior-algebra oracle"
            )))
        }
    })
}

fn unit_root(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i] = 1;
    v
}

/// Structure constants, Killing form and Killing-dual basis of a simple Lie
/// algebra, in the basis `e_phi` (positive roots, in root-system order),
/// `f_phi` (same order), then `h_1, ..., h_l`.
#[derive(Debug, Clone)]
pub struct LieAlgebraTable {
    rs: RootSystem,
    labels: Vec<String>,
    weights: Vec<Vec<i64>>,
    /// `bracket[a][b]` = coordinates of `[x_a, x_b]`.
    bracket: Vec<Vec<Sparse>>,
    killing: Mat,
    /// `dual[j]` = coordinates of `y_j` with `kappa(x_i, y_j) = delta_ij`.
    dual: Vec<Sparse>,
    /// `dual_ad[j][b]` = coordinates of `[y_j, x_b]`.
    dual_ad: Vec<Vec<Sparse>>,
}

/// Outcome of the exhaustive structural checks on a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableCheck {
    pub dim: usize,
    pub triples: usize,
    pub antisymmetry_failures: usize,
    pub jacobi_failures: usize,
    pub killing_rank: usize,
    pub casimir_is_identity: bool,
}

impl TableCheck {
    pub fn passed(&self) -> bool {
        self.antisymmetry_failures == 0
            && self.jacobi_failures == 0
            && self.killing_rank == self.dim
            && self.casimir_is_identity
    }
}

/// Builds the table and runs [`LieAlgebraTable::check`]; any failure is an
/// error.
pub fn build_chevalley(rs: &RootSystem, limits: &Limits) -> Result<LieAlgebraTable> {
    limits.guard("Lie algebra dimension", rs.dim_g() as u128, limits.max_lie_dim as u128)?;
    let table = LieAlgebraTable::from_matrices(rs)?;
    let check = table.check();
    if !check.passed() {
        return Err(Error::Invariant(format!(
            "structure constants for {} failed self-check: {check:?}",
            rs.cartan_type()
        )));
    }
    Ok(table)
}

impl LieAlgebraTable {
    fn from_matrices(rs: &RootSystem) -> Result<Self> {
        let real = realization(rs)?;
        let l = rs.rank();
        let np = rs.num_positive();
        let mut e: Vec<Mat> = real.raising.iter().map(|u| real.generator(u, false)).collect();
        let mut f: Vec<Mat> = real.raising.iter().map(|u| real.generator(u, true)).collect();
        let mut h = Vec::with_capacity(l);
        for i in 0..l {
            let hi = commutator(&e[i], &f[i]);
            // rescale f_i so that [h_i, e_i] = 2 e_i
            let c = proportionality(&commutator(&hi, &e[i]), &e[i])
                .ok_or_else(|| Error::Invariant("e_i is not an h_i eigenvector".into()))?;
            let s = q_int(2) / c;
            f[i] = mat_lin(&f[i], &s, &f[i], &Q::zero());
            h.push(mat_lin(&hi, &s, &hi, &Q::zero()));
        }
        for i in 0..l {
            for j in 0..l {
                let want = q_int(rs.cartan()[i][j]);
                if proportionality(&commutator(&h[i], &e[j]), &e[j]) != Some(want.clone())
                    && !(want.is_zero() && is_zero_mat(&commutator(&h[i], &e[j])))
                {
                    return Err(Error::Invariant(format!(
                        "[h_{i}, e_{j}] does not match the Cartan matrix"
                    )));
                }
            }
        }

        // root vectors, by height
        let mut pos: Vec<Option<Mat>> = vec![None; np];
        let mut neg: Vec<Option<Mat>> = vec![None; np];
        let mut order: Vec<usize> = (0..np).collect();
        order.sort_by_key(|&a| rs.height(a));
        for &a in &order {
            let phi = &rs.positive_roots()[a];
            if rs.height(a) == 1 {
                let i = phi.iter().position(|&c| c == 1).unwrap();
                pos[a] = Some(e[i].clone());
                neg[a] = Some(f[i].clone());
                continue;
            }
            let (i, b) = (0..l)
                .filter_map(|i| {
                    let mut beta = phi.clone();
                    beta[i] -= 1;
                    rs.root_index(&beta).map(|b| (i, b))
                })
                .next()
                .expect("every non-simple positive root is a simple root plus a root");
            let ep = commutator(&e[i], pos[b].as_ref().unwrap());
            let fp = commutator(&f[i], neg[b].as_ref().unwrap());
            if is_zero_mat(&ep) || is_zero_mat(&fp) {
                return Err(Error::Invariant(format!("root vector for {phi:?} vanished")));
            }
            pos[a] = Some(ep);
            neg[a] = Some(fp);
        }
        e = pos.into_iter().map(Option::unwrap).collect();
        f = neg.into_iter().map(Option::unwrap).collect();

        let mut basis = e;
        basis.extend(f);
        basis.extend(h.iter().cloned());
        let mut weights: Vec<Vec<i64>> = rs.positive_roots().to_vec();
        weights.extend(rs.positive_roots().iter().map(|p| p.iter().map(|c| -c).collect::<Vec<_>>()));
        weights.extend((0..l).map(|_| vec![0; l]));
        let mut labels: Vec<String> = Vec::with_capacity(basis.len());
        for prefix in ["e", "f"] {
            for phi in rs.positive_roots() {
                let c: Vec<String> = phi.iter().map(|x| x.to_string()).collect();
                labels.push(format!("{prefix}[{}]", c.join(",")));
            }
        }
        labels.extend((1..=l).map(|i| format!("h{i}")));

        let index_of: HashMap<Vec<i64>, usize> = weights
            .iter()
            .enumerate()
            .take(2 * np)
            .map(|(a, w)| (w.clone(), a))
            .collect();
        let h_columns: Vec<Vec<Q>> = h.iter().map(|m| m.concat()).collect();
        let coords = |m: &Mat, w: &[i64]| -> Result<Sparse> {
            if is_zero_mat(m) {
                return Ok(Vec::new());
            }
            if w.iter().all(|&c| c == 0) {
                let x = linalg::solve_columns(&h_columns, &m.concat())
                    .ok_or_else(|| Error::Invariant("weight-zero bracket outside the Cartan".into()))?;
                return Ok(x.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (2 * np + i, c)).collect());
            }
            let a = *index_of
                .get(w)
                .ok_or_else(|| Error::Invariant(format!("nonzero bracket of weight {w:?}")))?;
            let c = proportionality(m, &basis[a])
                .ok_or_else(|| Error::Invariant("root space is not one-dimensional".into()))?;
            Ok(vec![(a, c)])
        };
        let n = basis.len();
        let mut bracket = vec![vec![Vec::new(); n]; n];
        for a in 0..n {
            for b in 0..n {
                let w: Vec<i64> = weights[a].iter().zip(&weights[b]).map(|(x, y)| x + y).collect();
                bracket[a][b] = coords(&commutator(&basis[a], &basis[b]), &w)?;
            }
        }

        let mut table = LieAlgebraTable {
            rs: rs.clone(),
            labels,
            weights,
            bracket,
            killing: Vec::new(),
            dual: Vec::new(),
            dual_ad: Vec::new(),
        };
        table.killing = table.compute_killing();
        let inv = linalg::inverse(&table.killing)
            .ok_or_else(|| Error::Invariant("Killing form is degenerate".into()))?;
        // y_j = sum_k inv[k][j] x_k
        table.dual = (0..n)
            .map(|j| {
                (0..n)
                    .filter(|&k| !inv[k][j].is_zero())
                    .map(|k| (k, inv[k][j].clone()))
                    .collect()
            })
            .collect();
        table.dual_ad = (0..n)
            .map(|j| (0..n).map(|b| table.bracket_combo(&table.dual[j], b)).collect())
            .collect();
        Ok(table)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Root-coordinate weight of each basis vector.
    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, Q)] {
        &self.bracket[a][b]
    }

    pub fn killing_matrix(&self) -> &[Vec<Q>] {
        &self.killing
    }

    /// Coordinates of `[sum c_k x_k, x_b]`.
    fn bracket_combo(&self, combo: &[(usize, Q)], b: usize) -> Sparse {
        let mut acc = vec![Q::zero(); self.dim()];
        for (k, c) in combo {
            for (t, v) in &self.bracket[*k][b] {
                acc[*t] += c * v;
            }
        }
        acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    }

    fn ad_dense(&self, a: usize) -> Mat {
        let n = self.dim();
        let mut m = zero_mat(n);
        for b in 0..n {
            for (c, v) in &self.bracket[a][b] {
                m[*c][b] = v.clone();
            }
        }
        m
    }

    fn compute_killing(&self) -> Mat {
        let ads: Vec<Mat> = (0..self.dim()).map(|a| self.ad_dense(a)).collect();
        let n = self.dim();
        let mut k = zero_mat(n);
        for a in 0..n {
            for b in a..n {
                let p = mat_mul(&ads[a], &ads[b]);
                let tr = (0..n).fold(Q::zero(), |t, i| t + &p[i][i]);
                k[a][b] = tr.clone();
                k[b][a] = tr;
            }
        }
        k
    }

    /// Antisymmetry and Jacobi over every basis triple, Killing rank, and
    /// `sum_j ad(x_j) ad(y_j) = 1`.
    pub fn check(&self) -> TableCheck {
        let n = self.dim();
        let dense = |s: &[(usize, Q)]| {
            let mut v = vec![Q::zero(); n];
            for (i, c) in s {
                v[*i] += c;
            }
            v
        };
        let mut antisymmetry_failures = 0;
        for a in 0..n {
            for b in 0..n {
                let x = dense(&self.bracket[a][b]);
                let y = dense(&self.bracket[b][a]);
                if x.iter().zip(&y).any(|(p, q)| !(p + q).is_zero()) {
                    antisymmetry_failures += 1;
                }
            }
        }
        // [a, [b, c]] + [b, [c, a]] + [c, [a, b]]
        let nested = |a: usize, b: usize, c: usize, acc: &mut Vec<Q>| {
            for (t, v) in &self.bracket[b][c] {
                for (u, w) in &self.bracket[a][*t] {
                    acc[*u] += v * w;
                }
            }
        };
        let mut jacobi_failures = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut acc = vec![Q::zero(); n];
                    nested(a, b, c, &mut acc);
                    nested(b, c, a, &mut acc);
                    nested(c, a, b, &mut acc);
                    if acc.iter().any(|x| !x.is_zero()) {
                        jacobi_failures += 1;
                    }
                }
            }
        }
        let killing_rank = linalg::rank(&self.killing);
        let mut cas = zero_mat(n);
        for j in 0..n {
            for b in 0..n {
                for (t, v) in &self.dual_ad[j][b] {
                    for (u, w) in &self.bracket[j][*t] {
                        cas[*u][b] += v * w;
                    }
                }
            }
        }
        let casimir_is_identity = (0..n).all(|i| {
            (0..n).all(|j| cas[i][j] == if i == j { Q::one() } else { Q::zero() })
        });
        TableCheck {
            dim: n,
            triples: n * n * n,
            antisymmetry_failures,
            jacobi_failures,
            killing_rank,
            casimir_is_identity,
        }
    }

    fn guard_wedge(&self, k: usize, limits: &Limits) -> Result<()> {
        let size: BigInt = binomial(BigInt::from(self.dim()), BigInt::from(k));
        let size = u128::try_from(size).unwrap_or(u128::MAX);
        limits.guard("exterior power dimension", size, limits.max_wedge_dim)
    }

    fn mask_weight(&self, mask: u32) -> Vec<i64> {
        let mut w = vec![0; self.rs.rank()];
        for b in bits(mask) {
            for (x, y) in w.iter_mut().zip(&self.weights[b]) {
                *x += y;
            }
        }
        w
    }

    /// `k`-subsets of the basis grouped by total weight.
    fn blocks(&self, k: usize) -> BTreeMap<Vec<i64>, Vec<u32>> {
        let mut out: BTreeMap<Vec<i64>, Vec<u32>> = BTreeMap::new();
        for m in k_subsets(self.dim(), k) {
            out.entry(self.mask_weight(m)).or_default().push(m);
        }
        out
    }

    /// `theta(Cas)` applied to one wedge monomial.
    fn casimir_on(&self, mask: u32) -> WedgeVec {
        let mut out = WedgeVec::new();
        for j in 0..self.dim() {
            let mid = apply_derivation(&self.dual_ad[j], mask, &Q::one());
            for (m, c) in mid {
                for (m2, c2) in apply_derivation(&self.bracket[j], m, &c) {
                    *out.entry(m2).or_insert_with(Q::zero) += c2;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Matrix of `theta(Cas) - shift` on one weight block, as rows indexed by
    /// output monomial.
    fn shifted_block(&self, masks: &[u32], shift: &Q) -> Mat {
        let pos: HashMap<u32, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut mat = zero_mat(masks.len());
        for (col, &m) in masks.iter().enumerate() {
            for (out, c) in self.casimir_on(m) {
                let row = pos[&out];
                mat[row][col] += c;
            }
            mat[col][col] -= shift;
        }
        mat
    }

    fn casimir_blocks(&self, k: usize) -> Vec<(Vec<i64>, Mat)> {
        self.blocks(k)
            .into_iter()
            .map(|(w, masks)| {
                let m = self.shifted_block(&masks, &Q::zero());
                (w, m)
            })
            .collect()
    }

    /// Dimension of the `theta(Cas)`-eigenspace for eigenvalue `k` on
    /// `wedge^k g`.
    pub fn casimir_eigenspace_dim(&self, k: usize, limits: &Limits) -> Result<usize> {
        self.guard_wedge(k, limits)?;
        let kq = q_int(k as i64);
        Ok(self
            .casimir_blocks(k)
            .into_iter()
            .map(|(_, m)| linalg::nullity(&subtract_scalar(m, &kq)))
            .sum())
    }

    /// Largest eigenvalue of `theta(Cas)` on `wedge^k g`. Candidates are the
    /// Casimir values of dominant block weights, tried from the top; the
    /// highest weight vector of any constituent lies in such a block.
    pub fn max_casimir_eigenvalue(&self, k: usize, limits: &Limits) -> Result<Q> {
        self.guard_wedge(k, limits)?;
        let blocks = self.casimir_blocks(k);
        let mut candidates: Vec<(Q, usize)> = blocks
            .iter()
            .enumerate()
            .filter_map(|(i, (w, _))| {
                let wt = self.rs.root_to_weight(w);
                wt.is_dominant().then(|| (self.rs.casimir_unchecked(&wt), i))
            })
            .collect();
        candidates.sort_by(|a, b| b.0.cmp(&a.0));
        for (c, i) in candidates {
            if linalg::nullity(&subtract_scalar(blocks[i].1.clone(), &c)) > 0 {
                return Ok(c);
            }
        }
        Err(Error::Invariant(format!("no eigenvalue found on wedge^{k}")))
    }

    /// `d x_a = 1/2 sum_j x_j ^ [y_j, x_a]` in `wedge^2 g`.
    fn coboundary(&self, a: usize) -> WedgeVec {
        let half = Q::new(BigInt::one(), BigInt::from(2));
        let mut out = WedgeVec::new();
        for j in 0..self.dim() {
            for (c, v) in &self.dual_ad[j][a] {
                if *c == j {
                    continue;
                }
                let mask = (1u32 << j) | (1u32 << c);
                let sign = if j < *c { Q::one() } else { -Q::one() };
                *out.entry(mask).or_insert_with(Q::zero) += sign * v * &half;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Dimension of the degree-`k` part of the ideal generated by `d g`.
    pub fn dg_ideal_dim(&self, k: usize, limits: &Limits) -> Result<usize> {
        self.guard_wedge(k, limits)?;
        if k < 2 {
            return Ok(0);
        }
        let n = self.dim();
        let ds: Vec<WedgeVec> = (0..n).map(|a| self.coboundary(a)).collect();
        let blocks = self.blocks(k);
        let index: HashMap<u32, (Vec<i64>, usize)> = blocks
            .iter()
            .flat_map(|(w, masks)| masks.iter().enumerate().map(move |(i, &m)| (m, (w.clone(), i))))
            .collect();
        let mut rows: BTreeMap<Vec<i64>, Vec<Vec<Q>>> = BTreeMap::new();
        for (a, da) in ds.iter().enumerate() {
            for t in k_subsets(n, k - 2) {
                let mut v: HashMap<u32, Q> = HashMap::new();
                for (p, c) in da {
                    if p & t != 0 {
                        continue;
                    }
                    let s = merge_sign(*p, t);
                    *v.entry(p | t).or_insert_with(Q::zero) += if s { c.clone() } else { -c.clone() };
                }
                v.retain(|_, c| !c.is_zero());
                if v.is_empty() {
                    continue;
                }
                let mut w = self.weights[a].clone();
                for (x, y) in w.iter_mut().zip(self.mask_weight(t)) {
                    *x += y;
                }
                let width = blocks[&w].len();
                let mut row = vec![Q::zero(); width];
                for (m, c) in v {
                    let (bw, i) = &index[&m];
                    debug_assert_eq!(bw, &w);
                    row[*i] = c;
                }
                rows.entry(w).or_default().push(row);
            }
        }
        Ok(rows.values().map(|r| linalg::rank(r)).sum())
    }

    /// For each ideal, whether `e_phi1 ^ ... ^ e_phik` is a `theta(Cas)`
    /// eigenvector, and with which eigenvalue.
    pub fn verify_ideal_top_vectors(&self, ideals: &[AbelianIdeal]) -> Vec<TopVector> {
        ideals
            .iter()
            .map(|xi| {
                let mask = xi.roots().iter().fold(0u32, |m, &r| m | (1 << r));
                let image = self.casimir_on(mask);
                let eigenvalue = if image.is_empty() {
                    Some(Q::zero())
                } else if image.len() == 1 && image.contains_key(&mask) {
                    Some(image[&mask].clone())
                } else {
                    None
                };
                TopVector {
                    roots: xi.roots().to_vec(),
                    k: xi.dim(),
                    eigenvalue: eigenvalue.as_ref().map(|q| q.to_string()),
                    passed: eigenvalue == Some(q_int(xi.dim() as i64)),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopVector {
    pub roots: Vec<usize>,
    pub k: usize,
    /// Exact eigenvalue, or `None` if the vector is not an eigenvector.
    pub eigenvalue: Option<String>,
    pub passed: bool,
}

fn subtract_scalar(mut m: Mat, c: &Q) -> Mat {
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= c;
    }
    m
}

/// `c` with `a = c b`, if `b != 0` and `a` is such a multiple.
fn proportionality(a: &Mat, b: &Mat) -> Option<Q> {
    let (i, j) = b
        .iter()
        .enumerate()
        .find_map(|(i, r)| r.iter().position(|x| !x.is_zero()).map(|j| (i, j)))?;
    let c = &a[i][j] / &b[i][j];
    let ok = a
        .iter()
        .zip(b)
        .all(|(ra, rb)| ra.iter().zip(rb).all(|(x, y)| *x == y * &c));
    ok.then_some(c)
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |b| mask & (1 << b) != 0)
}

/// All `k`-element bitmasks over `n` bits, ascending.
pub fn k_subsets(n: usize, k: usize) -> Vec<u32> {
    fn rec(start: usize, n: usize, k: usize, cur: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for b in start..=n - k {
            rec(b + 1, n, k - 1, cur | (1 << b), out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out.sort_unstable();
    out
}

/// True when concatenating the sorted monomials `p` then `t` is an even
/// permutation of their sorted union.
fn merge_sign(p: u32, t: u32) -> bool {
    let inversions: u32 = bits(p).map(|b| (t & ((1u32 << b) - 1)).count_ones()).sum();
    inversions % 2 == 0
}

/// Extends the operator `op` (column `b` = image of `x_b`) to a derivation
/// of the exterior algebra and applies it to `scale * monomial`.
fn apply_derivation(op: &[Sparse], mask: u32, scale: &Q) -> Vec<(u32, Q)> {
    let mut out = Vec::new();
    for b in bits(mask) {
        let rest = mask & !(1 << b);
        for (c, v) in &op[b] {
            if rest & (1 << c) != 0 {
                continue;
            }
            let (lo, hi) = if *c < b { (*c, b) } else { (b, *c) };
            let between = rest & ((1u32 << hi) - 1) & !((1u32 << (lo + 1)) - 1);
            let val = v * scale;
            let val = if between.count_ones() % 2 == 0 { val } else { -val };
            out.push((rest | (1 << c), val));
        }
    }
    out
}

/// `binomial(dim g, k) - dim (dg)^k`.
pub fn quotient_dim(table: &LieAlgebraTable, k: usize, limits: &Limits) -> Result<BigInt> {
    let total: BigInt = binomial(BigInt::from(table.dim()), BigInt::from(k));
    Ok(total - BigInt::from(table.dg_ideal_dim(k, limits)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{dim_ck, enumerate_abelian_ideals, max_dim};

    fn table(label: &str) -> LieAlgebraTable {
        let rs = RootSystem::new(label.parse().unwrap()).unwrap();
        build_chevalley(&rs, &Limits::default()).unwrap()
    }

    #[test]
    fn subsets_and_signs() {
        assert_eq!(k_subsets(4, 2).len(), 6);
        assert_eq!(k_subsets(3, 0), vec![0]);
        assert!(k_subsets(2, 3).is_empty());
        assert!(merge_sign(0b01, 0b10));
        assert!(!merge_sign(0b10, 0b01));
        assert!(merge_sign(0b1100, 0b0011));
    }

    #[test]
    fn small_tables_check_out() {
        for t in ["A1", "A2", "B2", "C2", "G2"] {
            let tb = table(t);
            let c = tb.check();
            assert!(c.passed(), "{t}: {c:?}");
            assert_eq!(c.dim, tb.root_system().dim_g());
        }
        assert_eq!(table("B2").check().killing_rank, 10);
        assert_eq!(table("A2").check().triples, 512);
    }

    #[test]
    fn a3_only_behind_a_raised_ceiling() {
        let rs = RootSystem::new("A3".parse().unwrap()).unwrap();
        assert!(matches!(
            build_chevalley(&rs, &Limits::default()),
            Err(Error::ScaleExceeded { .. })
        ));
        let lim = Limits {
            max_lie_dim: 15,
            ..Limits::default()
        };
        assert!(build_chevalley(&rs, &lim).unwrap().check().passed());
        let f4 = RootSystem::new("F4".parse().unwrap()).unwrap();
        assert!(matches!(
            build_chevalley(&f4, &Limits::unbounded()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn larger_classical_tables() {
        for t in ["B3", "C3", "D4", "A4"] {
            let rs = RootSystem::new(t.parse().unwrap()).unwrap();
            let tb = build_chevalley(&rs, &Limits::unbounded()).unwrap();
            assert_eq!(tb.dim(), rs.dim_g());
        }
    }

    #[test]
    fn casimir_examples() {
        let lim = Limits::default();
        let a1 = table("A1");
        assert_eq!(a1.casimir_eigenspace_dim(0, &lim).unwrap(), 1);
        assert_eq!(a1.casimir_eigenspace_dim(1, &lim).unwrap(), 3);
        assert_eq!(a1.casimir_eigenspace_dim(2, &lim).unwrap(), 0);
        assert_eq!(a1.dg_ideal_dim(2, &lim).unwrap(), 3);
        let a2 = table("A2");
        assert_eq!(a2.casimir_eigenspace_dim(2, &lim).unwrap(), 20);
        assert_eq!(a2.dg_ideal_dim(2, &lim).unwrap(), 8);
        assert_eq!(a2.dg_ideal_dim(1, &lim).unwrap(), 0);
    }

    #[test]
    fn casimir_is_identity_on_g() {
        let lim = Limits::default();
        for t in ["A1", "A2", "B2", "G2"] {
            let tb = table(t);
            for (_, m) in tb.casimir_blocks(1) {
                for (i, row) in m.iter().enumerate() {
                    for (j, x) in row.iter().enumerate() {
                        assert_eq!(*x, if i == j { Q::one() } else { Q::zero() });
                    }
                }
            }
            assert_eq!(tb.max_casimir_eigenvalue(1, &lim).unwrap(), Q::one());
        }
    }

    #[test]
    fn direct_sum_and_ideal_count() {
        let lim = Limits::default();
        for t in ["A1", "A2", "B2"] {
            let tb = table(t);
            let rs = tb.root_system().clone();
            let ideals = enumerate_abelian_ideals(&rs);
            for k in 0..=rs.dual_coxeter_number() as usize {
                let c = tb.casimir_eigenspace_dim(k, &lim).unwrap();
                let q = quotient_dim(&tb, k, &lim).unwrap();
                assert_eq!(BigInt::from(c), q, "{t} k={k}");
                assert_eq!(BigInt::from(c), dim_ck(&rs, &ideals, k), "{t} k={k}");
            }
        }
    }

    #[test]
    fn max_eigenvalue_sweep_a1_a2() {
        let lim = Limits::default();
        for t in ["A1", "A2"] {
            let tb = table(t);
            let rs = tb.root_system().clone();
            let malcev = max_dim(&enumerate_abelian_ideals(&rs));
            for k in 0..=tb.dim() {
                let top = tb.max_casimir_eigenvalue(k, &lim).unwrap();
                assert!(top <= q_int(k as i64), "{t} k={k}: {top}");
                assert_eq!(top == q_int(k as i64), k <= malcev, "{t} k={k}");
            }
        }
    }

    #[test]
    fn top_vectors() {
        for t in ["A2", "G2"] {
            let tb = table(t);
            let ideals = enumerate_abelian_ideals(tb.root_system());
            let rows = tb.verify_ideal_top_vectors(&ideals);
            assert!(rows.iter().all(|r| r.passed), "{t}: {rows:?}");
            assert_eq!(rows[0].eigenvalue.as_deref(), Some("0"));
            if t == "G2" {
                assert!(rows.iter().any(|r| r.k == 3 && r.eigenvalue.as_deref() == Some("3")));
            }
        }
    }

    #[test]
    fn wedge_ceiling() {
        let tb = table("G2");
        let lim = Limits {
            max_wedge_dim: 100,
            ..Limits::default()
        };
        assert!(matches!(
            tb.casimir_eigenspace_dim(3, &lim),
            Err(Error::ScaleExceeded { .. })
        ));
    }
}
