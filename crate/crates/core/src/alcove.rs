//! Dominant alcoves of the affine Weyl group.
//!
//! A point `x` of the real Cartan subalgebra is carried as the vector of its
//! simple-root values `alpha_i(x)`. The affine walls are the integer level
//! sets `phi(x) = n`, the fundamental alcove `A_1` is
//! `{alpha_i(x) > 0, psi(x) < 1}`, and the translation lattice is spanned by
//! the coroots (integral on every root). Every affine element is an integer
//! affine map in these coordinates.
//!
//! Each dominant alcove `A_sigma` is tracked by `x_sigma = sigma(x0)`, where
//! `x0` is the image of `2 rho` under the Killing identification
//! (`alpha_i(x0) = (alpha_i, alpha_i)_K`). Since `x0` is interior to `A_1`,
//! `x_sigma` is interior to `A_sigma`; it gives `n_phi(sigma)` as floors and
//! `lambda^sigma` through `2(lambda^sigma + rho) = x_sigma`.
//!
//! Enumeration is breadth-first by length. The open dominant chamber is
//! convex, so the segment from an interior point of a dominant alcove of
//! length `n + 1` to `x0` crosses a facet into a dominant alcove of length
//! `n`. Hence every dominant alcove of length `n + 1` is `sigma * s` for some
//! dominant `sigma` of length `n` and one of the `l + 1` affine simple
//! reflections `s`. The same argument applies inside any convex dominant
//! region such as `k * A_1`, which is what [`enumerate_dominant_within`]
//! relies on.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::{q_int, Q};

/// A point of the Cartan subalgebra as the values `alpha_i(x) = num[i] / den`.
///
/// Stored in lowest terms, so equality and hashing are exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanPoint {
    num: Vec<i64>,
    den: i64,
}

impl CartanPoint {
    pub fn new(mut num: Vec<i64>, mut den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        if den < 0 {
            den = -den;
            num.iter_mut().for_each(|x| *x = -*x);
        }
        let g = num.iter().fold(den, |g, &x| g.gcd(&x));
        if g > 1 {
            num.iter_mut().for_each(|x| *x /= g);
            den /= g;
        }
        CartanPoint { num, den }
    }

    pub fn from_values(values: &[Q]) -> Self {
        let den = values
            .iter()
            .fold(BigInt::from(1), |l, v| l.lcm(v.denom()));
        let num = values
            .iter()
            .map(|v| (v.numer() * (&den / v.denom())).to_i64().expect("coordinate fits in i64"))
            .collect();
        CartanPoint::new(num, den.to_i64().expect("denominator fits in i64"))
    }

    pub fn rank(&self) -> usize {
        self.num.len()
    }

    /// `alpha_i(x)`.
    pub fn value(&self, i: usize) -> Q {
        Q::new(self.num[i].into(), self.den.into())
    }

    pub fn values(&self) -> Vec<Q> {
        (0..self.rank()).map(|i| self.value(i)).collect()
    }

    /// Numerator of `phi(x)` over the common denominator.
    fn eval_scaled(&self, phi: &[i64]) -> i64 {
        phi.iter().zip(&self.num).map(|(c, v)| c * v).sum()
    }

    /// `phi(x)` for a root (or any root-lattice vector) `phi`.
    pub fn eval(&self, phi: &[i64]) -> Q {
        Q::new(self.eval_scaled(phi).into(), self.den.into())
    }

    /// True when no root takes an integer value at this point.
    pub fn is_regular(&self, rs: &RootSystem) -> bool {
        rs.positive_roots()
            .iter()
            .all(|phi| self.eval_scaled(phi) % self.den != 0)
    }

    fn apply(&self, map: &AffineMap) -> CartanPoint {
        let n = self.rank();
        let num = (0..n)
            .map(|j| {
                (0..n).map(|i| map.lin[j][i] * self.num[i]).sum::<i64>() + self.den * map.shift[j]
            })
            .collect();
        CartanPoint::new(num, self.den)
    }
}

/// `v -> lin * v + shift` on simple-root value vectors; all entries integral.
#[derive(Debug, Clone, PartialEq, Eq)]
struct AffineMap {
    lin: Vec<Vec<i64>>,
    shift: Vec<i64>,
}

impl AffineMap {
    fn identity(n: usize) -> Self {
        AffineMap {
            lin: (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect(),
            shift: vec![0; n],
        }
    }

    /// Reflection in the wall `phi(x) = level`.
    fn reflection(rs: &RootSystem, phi: &[i64], level: i64) -> Self {
        let n = rs.rank();
        // s(v)_j = v_j - (phi(v) - level) <alpha_j, phi^vee>
        let k: Vec<i64> = (0..n)
            .map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                rs.pairing_with_coroot(&e, phi)
            })
            .collect();
        let lin = (0..n)
            .map(|j| (0..n).map(|i| (i == j) as i64 - k[j] * phi[i]).collect())
            .collect();
        let shift = k.iter().map(|kj| level * kj).collect();
        AffineMap { lin, shift }
    }

    /// `self o other`.
    fn compose(&self, other: &AffineMap) -> AffineMap {
        let n = self.shift.len();
        let lin = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| (0..n).map(|m| self.lin[j][m] * other.lin[m][i]).sum())
                    .collect()
            })
            .collect();
        let shift = (0..n)
            .map(|j| (0..n).map(|m| self.lin[j][m] * other.shift[m]).sum::<i64>() + self.shift[j])
            .collect();
        AffineMap { lin, shift }
    }
}

/// The `l + 1` affine simple reflections `s_1, ..., s_l, s_{psi,1}`.
fn affine_generators(rs: &RootSystem) -> Vec<AffineMap> {
    let n = rs.rank();
    let mut gens: Vec<AffineMap> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            AffineMap::reflection(rs, &e, 0)
        })
        .collect();
    gens.push(AffineMap::reflection(rs, rs.psi(), 1));
    gens
}

/// The base point `x0`, image of `2 rho`.
pub fn base_point(rs: &RootSystem) -> CartanPoint {
    double_shifted_point(rs, &Weight::zero(rs.rank()))
}

/// The point representing `2 (lambda + rho)`.
pub fn double_shifted_point(rs: &RootSystem, w: &Weight) -> CartanPoint {
    let values: Vec<Q> = (0..rs.rank())
        .map(|i| rs.to_killing(q_int(w.coords[i] + 1) * rs.simple_norms()[i].clone()))
        .collect();
    CartanPoint::from_values(&values)
}

/// Fundamental-weight coordinates of the weight identified with a point.
pub fn point_to_weight(rs: &RootSystem, p: &CartanPoint) -> Vec<Q> {
    let scale = q_int(4 * rs.dual_coxeter_number() as i64);
    (0..rs.rank())
        .map(|i| p.value(i) * scale.clone() / rs.simple_norms()[i].clone())
        .collect()
}

/// A dominant alcove `A_sigma`, `sigma` in `W_f^+`, with its derived data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineElement {
    map: AffineMap,
    translation: Vec<i64>,
    x_sigma: CartanPoint,
    n_vec: Vec<u32>,
    length: u32,
    lambda: Weight,
    cas: u64,
}

impl AffineElement {
    fn from_map(rs: &RootSystem, x0: &CartanPoint, map: AffineMap) -> Result<Self> {
        let x = x0.apply(&map);
        Self::with_point(rs, map, x)
    }

    fn with_point(rs: &RootSystem, map: AffineMap, x: CartanPoint) -> Result<Self> {
        let n = rs.rank();
        let mut n_vec = Vec::with_capacity(rs.num_positive());
        for phi in rs.positive_roots() {
            let s = x.eval_scaled(phi);
            if s <= 0 || s % x.den == 0 {
                return Err(Error::Invariant(format!(
                    "x_sigma not dominant and regular: {:?}/{}",
                    x.num, x.den
                )));
            }
            n_vec.push((s / x.den) as u32);
        }
        let length = n_vec.iter().sum();
        let cas = n_vec.iter().map(|&k| (k as u64) * (k as u64 + 1) / 2).sum();

        let w = point_to_weight(rs, &x);
        let mut coords = Vec::with_capacity(n);
        for v in w {
            let half = v / q_int(2) - q_int(1);
            if !half.is_integer() {
                return Err(Error::Invariant("lambda^sigma is not integral".into()));
            }
            coords.push(half.to_integer().to_i64().unwrap());
        }

        // z = sum m_i alpha_i^vee with alpha_j(z) = sum_i m_i a_ij.
        let inv = rs.cartan_inverse();
        let mut translation = Vec::with_capacity(n);
        for i in 0..n {
            let m: Q = (0..n)
                .map(|j| inv[j][i].clone() * q_int(map.shift[j]))
                .fold(Q::zero(), |a, b| a + b);
            if !m.is_integer() {
                return Err(Error::Invariant("translation not in the coroot lattice".into()));
            }
            translation.push(m.to_integer().to_i64().unwrap());
        }

        Ok(AffineElement {
            map,
            translation,
            x_sigma: x,
            n_vec,
            length,
            lambda: Weight::new(coords),
            cas,
        })
    }

    pub fn identity(rs: &RootSystem) -> Self {
        Self::from_map(rs, &base_point(rs), AffineMap::identity(rs.rank()))
            .expect("identity alcove is dominant")
    }

    pub fn x_sigma(&self) -> &CartanPoint {
        &self.x_sigma
    }

    /// `n_phi(sigma)` in the positive-root order of the root system.
    pub fn n_vec(&self) -> &[u32] {
        &self.n_vec
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    /// `lambda^sigma` in fundamental-weight coordinates.
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// `Cas(lambda^sigma) = sum_phi n_phi (n_phi + 1) / 2`.
    pub fn cas(&self) -> u64 {
        self.cas
    }

    /// Linear part `w^sigma` acting on simple-root value vectors.
    pub fn linear_part(&self) -> &[Vec<i64>] {
        &self.map.lin
    }

    /// `z^sigma` in the coroot basis.
    pub fn translation(&self) -> &[i64] {
        &self.translation
    }

    /// `alpha_i(z^sigma)`.
    pub fn translation_values(&self) -> &[i64] {
        &self.map.shift
    }

    /// `sigma(x)` for an arbitrary point.
    pub fn apply(&self, p: &CartanPoint) -> CartanPoint {
        p.apply(&self.map)
    }

    /// `L(sigma) = n_psi(sigma)`, the largest entry of the n-vector.
    pub fn chain_length(&self) -> u32 {
        self.n_vec.iter().copied().max().unwrap_or(0)
    }

    /// Number of positive roots sent to negative roots by `w^sigma`.
    pub fn weyl_length(&self, rs: &RootSystem) -> u32 {
        let n = rs.rank();
        let w = &self.map.lin;
        rs.positive_roots()
            .iter()
            // phi o w has simple-root coordinates W^T c.
            .filter(|c| (0..n).any(|i| (0..n).map(|j| c[j] * w[j][i]).sum::<i64>() < 0))
            .count() as u32
    }

    /// `(2 rho, z^sigma)` = sum over positive roots of `phi(z^sigma)`.
    pub fn two_rho_on_translation(&self, rs: &RootSystem) -> i64 {
        rs.positive_roots()
            .iter()
            .map(|c| c.iter().zip(&self.map.shift).map(|(a, b)| a * b).sum::<i64>())
            .sum()
    }

    /// Positive roots with `n_phi = 1`, when every `n_phi` is 0 or 1.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n_vec.len()).filter(|&i| self.n_vec[i] == 1).collect()
    }
}

/// True iff `A_sigma` lies in `2 A_1`, i.e. every `n_phi(sigma)` is 0 or 1.
pub fn in_wf2(e: &AffineElement) -> bool {
    e.chain_length() <= 1
}

/// Dominant alcoves of length at most `max_length`, ordered by length and
/// then lexicographically by n-vector.
pub fn enumerate_dominant(rs: &RootSystem, max_length: u32) -> Vec<AffineElement> {
    enumerate_dominant_within(rs, max_length, |_| true)
}

/// Like [`enumerate_dominant`] but only walks through alcoves accepted by
/// `keep`. Complete for regions that are convex unions of alcoves, such as
/// `{sigma : n_psi(sigma) < k}`.
pub fn enumerate_dominant_within<F>(rs: &RootSystem, max_length: u32, keep: F) -> Vec<AffineElement>
where
    F: Fn(&AffineElement) -> bool,
{
    let x0 = base_point(rs);
    let gens = affine_generators(rs);
    let identity = AffineElement::identity(rs);
    if !keep(&identity) {
        return Vec::new();
    }
    let mut all = vec![identity.clone()];
    let mut level = vec![identity];
    for n in 0..max_length {
        let mut next: HashMap<CartanPoint, AffineElement> = HashMap::new();
        for e in &level {
            for g in &gens {
                let map = e.map.compose(g);
                let x = x0.apply(&map);
                if next.contains_key(&x) {
                    continue;
                }
                if (0..rs.rank()).any(|i| x.num[i] <= 0) {
                    continue;
                }
                let len: i64 = rs
                    .positive_roots()
                    .iter()
                    .map(|phi| Integer::div_floor(&x.eval_scaled(phi), &x.den))
                    .sum();
                if len != n as i64 + 1 {
                    continue;
                }
                let el = AffineElement::with_point(rs, map, x.clone())
                    .expect("dominant neighbour of a dominant alcove is well formed");
                if keep(&el) {
                    next.insert(x, el);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        let mut lvl: Vec<AffineElement> = next.into_values().collect();
        lvl.sort_by(|a, b| a.n_vec.cmp(&b.n_vec));
        all.extend(lvl.iter().cloned());
        level = lvl;
    }
    all
}

/// Dominant alcoves with `Cas(lambda^sigma) <= max_cas`. Walking to length
/// `max_cas` suffices because `Cas >= length`.
pub fn enumerate_by_cas(rs: &RootSystem, max_cas: u64) -> Vec<AffineElement> {
    enumerate_dominant(rs, max_cas as u32)
        .into_iter()
        .filter(|e| e.cas() <= max_cas)
        .collect()
}

/// The `2^l` elements of `W_f^(2)`.
pub fn enumerate_wf2(rs: &RootSystem) -> Vec<AffineElement> {
    enumerate_dominant_within(rs, rs.num_positive() as u32, in_wf2)
}

/// Result of folding a point into the closed fundamental alcove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Folded {
    pub point: CartanPoint,
    /// `(-1)^(number of reflections applied)`.
    pub parity: i8,
    /// False when the input lies on some wall; parity is then not meaningful.
    pub regular: bool,
}

/// Folds `p` into the closure of `A_1` by reflecting in violated walls.
pub fn reduce_to_fundamental(rs: &RootSystem, p: &CartanPoint) -> Folded {
    let regular = p.is_regular(rs);
    let gens = affine_generators(rs);
    let n = rs.rank();
    let mut x = p.clone();
    let mut flips = 0u64;
    loop {
        if let Some(i) = (0..n).find(|&i| x.num[i] < 0) {
            x = x.apply(&gens[i]);
        } else if x.eval_scaled(rs.psi()) > x.den {
            x = x.apply(&gens[n]);
        } else {
            break;
        }
        flips += 1;
    }
    Folded {
        point: x,
        parity: if flips % 2 == 0 { 1 } else { -1 },
        regular,
    }
}

/// `chi_lambda(a_P)`: the fold parity when `2(lambda + rho)` folds onto `x0`,
/// otherwise 0.
pub fn chi_at_ap(rs: &RootSystem, w: &Weight) -> Result<i8> {
    if w.coords.len() != rs.rank() {
        return Err(Error::RankMismatch {
            got: w.coords.len(),
            rank: rs.rank(),
        });
    }
    if !w.is_dominant() {
        return Err(Error::NotDominant(w.coords.clone()));
    }
    let folded = reduce_to_fundamental(rs, &double_shifted_point(rs, w));
    if folded.point == base_point(rs) {
        Ok(folded.parity)
    } else {
        Ok(0)
    }
}

/// `Delta_i(sigma) = {phi : n_phi(sigma) >= i}` for `i = 0..=n_psi(sigma)`,
/// as lists of positive-root indices.
pub fn ideal_chain(e: &AffineElement) -> Vec<Vec<usize>> {
    (0..=e.chain_length())
        .map(|i| (0..e.n_vec.len()).filter(|&r| e.n_vec[r] >= i).collect())
        .collect()
}

/// True when `set` is an upper set of the positive roots: `phi` in the set,
/// `phi + beta` a root, implies `phi + beta` in the set.
pub fn is_root_ideal(rs: &RootSystem, set: &[usize]) -> bool {
    let member: Vec<bool> = membership(rs, set);
    set.iter().all(|&i| {
        rs.positive_roots().iter().all(|beta| {
            let sum: Vec<i64> = rs.positive_roots()[i].iter().zip(beta).map(|(a, b)| a + b).collect();
            rs.root_index(&sum).is_none_or(|k| member[k])
        })
    })
}

/// True when no two roots of `set` (possibly equal) sum to a root.
pub fn is_abelian(rs: &RootSystem, set: &[usize]) -> bool {
    set.iter().all(|&i| {
        set.iter().all(|&j| {
            let sum: Vec<i64> = rs.positive_roots()[i]
                .iter()
                .zip(&rs.positive_roots()[j])
                .map(|(a, b)| a + b)
                .collect();
            rs.root_index(&sum).is_none()
        })
    })
}

pub(crate) fn membership(rs: &RootSystem, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; rs.num_positive()];
    for &i in set {
        m[i] = true;
    }
    m
}

/// One row of an alcove listing.
#[derive(Debug, Clone, Serialize)]
pub struct AlcoveRecord {
    pub length: u32,
    pub n_vec: Vec<u32>,
    pub lambda: Vec<i64>,
    pub cas: u64,
    pub dim: String,
    pub sign: i8,
    pub in_wf2: bool,
}

pub fn alcove_record(rs: &RootSystem, e: &AffineElement) -> AlcoveRecord {
    AlcoveRecord {
        length: e.length(),
        n_vec: e.n_vec().to_vec(),
        lambda: e.lambda().coords.clone(),
        cas: e.cas(),
        dim: rs
            .weyl_dimension(e.lambda())
            .expect("lambda^sigma is dominant")
            .to_string(),
        sign: if e.length() % 2 == 0 { 1 } else { -1 },
        in_wf2: in_wf2(e),
    }
}

/// `sigma(rho) - rho` as a weight, the tempting but wrong formula for
/// `lambda^sigma`; kept to exhibit where it differs.
pub fn naive_shifted_weight(rs: &RootSystem, e: &AffineElement) -> Vec<Q> {
    let x0 = base_point(rs);
    let half = CartanPoint::new(x0.num.clone(), x0.den * 2);
    point_to_weight(rs, &e.apply(&half))
        .into_iter()
        .map(|v| v - q_int(1))
        .collect()
}

impl AffineElement {
    /// `sum_phi n_phi(sigma) phi` in simple-root coordinates.
    pub fn root_partition_sum(&self, rs: &RootSystem) -> Vec<i64> {
        let mut out = vec![0i64; rs.rank()];
        for (k, phi) in self.n_vec.iter().zip(rs.positive_roots()) {
            for (o, c) in out.iter_mut().zip(phi) {
                *o += *k as i64 * c;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn length_zero_is_identity() {
        for t in ["A1", "A3", "B2", "G2", "F4"] {
            let r = rs(t);
            let all = enumerate_dominant(&r, 0);
            assert_eq!(all.len(), 1);
            assert_eq!(all[0].lambda(), &Weight::zero(r.rank()));
            assert_eq!(all[0].cas(), 0);
            assert_eq!(all[0].length(), 0);
        }
    }

    #[test]
    fn a1_chain() {
        let r = rs("A1");
        let all = enumerate_dominant(&r, 5);
        assert_eq!(all.len(), 6);
        for (n, e) in all.iter().enumerate() {
            let n = n as u32;
            assert_eq!(e.length(), n);
            assert_eq!(e.n_vec(), &[n]);
            // n alpha = 2n omega.
            assert_eq!(e.lambda(), &Weight::new(vec![2 * n as i64]));
            assert_eq!(e.cas(), (n * (n + 1) / 2) as u64);
            assert_eq!(r.weyl_dimension(e.lambda()).unwrap(), BigInt::from(2 * n + 1));
        }
    }

    #[test]
    fn a2_counts_by_length() {
        let r = rs("A2");
        let all = enumerate_dominant(&r, 5);
        let mut counts = [0; 6];
        for e in &all {
            counts[e.length() as usize] += 1;
        }
        assert_eq!(counts, [1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn wf2_membership() {
        let r = rs("A1");
        let all = enumerate_dominant(&r, 2);
        assert!(in_wf2(&all[0]));
        assert!(in_wf2(&all[1]));
        assert!(!in_wf2(&all[2]));
        for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"] {
            let r = rs(t);
            assert_eq!(enumerate_wf2(&r).len(), 1 << r.rank(), "{t}");
        }
    }

    #[test]
    fn fold_examples() {
        let r = rs("A2");
        let x0 = base_point(&r);
        let f = reduce_to_fundamental(&r, &x0);
        assert_eq!(f, Folded { point: x0.clone(), parity: 1, regular: true });
        for e in enumerate_dominant(&r, 6) {
            let f = reduce_to_fundamental(&r, e.x_sigma());
            assert_eq!(f.point, x0);
            assert_eq!(f.parity as i32, if e.length() % 2 == 0 { 1 } else { -1 });
            assert!(f.regular);
        }
        let a1 = rs("A1");
        let on_wall = CartanPoint::new(vec![1], 1);
        assert!(!reduce_to_fundamental(&a1, &on_wall).regular);
    }

    #[test]
    fn chi_examples() {
        for t in ["A1", "A2", "B2", "G2", "C3"] {
            let r = rs(t);
            assert_eq!(chi_at_ap(&r, &Weight::zero(r.rank())).unwrap(), 1);
            let psi = r.root_to_weight(r.psi());
            assert_eq!(chi_at_ap(&r, &psi).unwrap(), -1, "{t}");
        }
        let a2 = rs("A2");
        assert_eq!(chi_at_ap(&a2, &Weight::new(vec![1, 0])).unwrap(), 0);
        assert!(chi_at_ap(&a2, &Weight::new(vec![-1, 0])).is_err());
    }

    #[test]
    fn chains() {
        let r = rs("A1");
        let all = enumerate_dominant(&r, 2);
        assert_eq!(ideal_chain(&all[0]), vec![vec![0]]);
        assert_eq!(ideal_chain(&all[2]), vec![vec![0], vec![0], vec![0]]);
        assert_eq!(all[2].lambda(), &Weight::new(vec![4]));
        let g2 = rs("G2");
        for e in enumerate_wf2(&g2).into_iter().skip(1) {
            let chain = ideal_chain(&e);
            assert_eq!(chain.len(), 2);
            assert!(is_root_ideal(&g2, &chain[1]) && is_abelian(&g2, &chain[1]));
        }
    }

    #[test]
    fn naive_formula_differs() {
        // The unique length-1 alcove is the reflection in the psi-wall, which
        // carries a nonzero translation.
        let r = rs("A1");
        let e = &enumerate_dominant(&r, 1)[1];
        let naive = naive_shifted_weight(&r, e);
        let actual: Vec<Q> = e.lambda().coords.iter().map(|&c| q_int(c)).collect();
        assert_ne!(naive, actual);
        // Identity: both vanish.
        let id = AffineElement::identity(&r);
        assert!(naive_shifted_weight(&r, &id).iter().all(|v| v.is_zero()));
    }

    #[test]
    fn eval_matches_values() {
        let p = CartanPoint::from_values(&[Q::one() / q_int(3), q_int(2)]);
        assert_eq!(p.eval(&[1, 1]), Q::new(7.into(), 3.into()));
        assert_eq!(p.value(1), q_int(2));
    }
}
