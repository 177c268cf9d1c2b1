//! Exact root-system data for the complex simple Lie types `A_l` through `G_2`.
//!
//! Roots are integer vectors in the simple-root basis, weights are integer
//! vectors in the fundamental-weight basis. Two inner products coexist:
//!
//! * the *standard* form, normalized so that long roots have square length 2,
//!   which makes every Cartan pairing integral;
//! * the *Killing* form, in which the highest root has square length
//!   `1 / h_dual`. All Casimir values are taken in this normalization.
//!
//! The conversion between them is [`RootSystem::to_killing`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{q_int, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A simple type such as `A4` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{:?}{}", family, rank)))
        }
    }

    /// Number of positive roots, from the classification.
    pub fn expected_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Every valid type of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for family in [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ] {
            for rank in 1..=max_rank {
                if let Ok(t) = CartanType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::ParseType(s.to_string())),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| Error::ParseType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    pub fn rho(rank: usize) -> Self {
        Weight {
            coords: vec![1; rank],
        }
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Immutable Cartan, root and weight data for one simple type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: CartanType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    highest_root: usize,
    simple_norms: Vec<Q>,
    norms_std: Vec<Q>,
    gram: Vec<Vec<Q>>,
    cartan_inv: Vec<Vec<Q>>,
    /// `(alpha_i, alpha_i)_std * norm_scale`, all integers.
    scaled_norms: Vec<i64>,
    h: u32,
    h_dual: u32,
    exponents: Vec<u32>,
}

fn cartan_matrix(ty: CartanType) -> Vec<Vec<i64>> {
    let n = ty.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match ty.family {
        Family::A | Family::B | Family::C => {
            for i in 0..n - 1 {
                bond(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                bond(i, i + 1);
            }
            bond(n - 3, n - 1);
        }
        Family::E => {
            bond(0, 2);
            bond(1, 3);
            for i in 2..n - 1 {
                bond(i, i + 1);
            }
        }
        Family::F => {
            for i in 0..3 {
                bond(i, i + 1);
            }
        }
        Family::G => bond(0, 1),
    }
    // a[i][j] = <alpha_j, alpha_i^vee>; the short root of a multiple bond sees
    // the long one with pairing -2 or -3.
    match ty.family {
        Family::B => a[n - 1][n - 2] = -2,
        Family::C => a[n - 2][n - 1] = -2,
        Family::F => a[2][1] = -2,
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

/// Squared lengths d_i with d_i a_ij = d_j a_ji, scaled so the longest is 2.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<Q> {
    let n = cartan.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(Q::one());
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().unwrap();
                d[j] = Some(di * q_int(cartan[i][j]) / q_int(cartan[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.expect("Dynkin diagram is connected")).collect();
    let max = d.iter().cloned().fold(Q::zero(), |m, x| if x > m { x } else { m });
    let scale = q_int(2) / max;
    d.into_iter().map(|x| x * scale.clone()).collect()
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| q_int(x)).collect();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("Cartan matrix is invertible");
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= p.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let v = a[col][c].clone() * f.clone();
                    a[r][c] -= v;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    RootSystem::new(CartanType::new(family, rank)?)
}

impl RootSystem {
    pub fn new(ty: CartanType) -> Result<Self> {
        let n = ty.rank;
        let cartan = cartan_matrix(ty);
        let simple_norms = symmetrizer(&cartan);
        let gram: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| q_int(cartan[i][j]) * simple_norms[i].clone() / q_int(2))
                    .collect()
            })
            .collect();
        for i in 0..n {
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Invariant(format!("{ty}: form not symmetric")));
                }
            }
        }

        // Closure by root strings, one height at a time.
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut layer: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        while !layer.is_empty() {
            layer.sort();
            for r in &layer {
                index.insert(r.clone(), roots.len());
                roots.push(r.clone());
            }
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if index.contains_key(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !next.contains(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            layer = next;
        }
        if roots.len() != ty.expected_positive_roots() {
            return Err(Error::Invariant(format!(
                "{ty}: closure produced {} positive roots, expected {}",
                roots.len(),
                ty.expected_positive_roots()
            )));
        }
        let highest_root = roots.len() - 1;

        let norms_std: Vec<Q> = roots.iter().map(|r| inner(&gram, r, r)).collect();
        let psi = &roots[highest_root];
        if norms_std[highest_root] != q_int(2) {
            return Err(Error::Invariant(format!("{ty}: highest root is not long")));
        }

        let height = |r: &Vec<i64>| r.iter().sum::<i64>();
        let h = (height(psi) + 1) as u32;
        // <rho, psi^vee> = (rho, psi)_std since (psi, psi) = 2; (rho, alpha_i) = d_i / 2.
        let rho_psi: Q = (0..n)
            .map(|i| q_int(psi[i]) * simple_norms[i].clone() / q_int(2))
            .fold(Q::zero(), |a, b| a + b);
        let h_dual = (rho_psi + Q::one())
            .to_integer()
            .to_u32()
            .ok_or_else(|| Error::Invariant("dual Coxeter number".into()))?;

        // Exponents: the multiplicity of j is (#roots of height j) - (#roots of height j+1).
        let max_h = height(psi) as usize;
        let mut by_height = vec![0usize; max_h + 2];
        for r in &roots {
            by_height[height(r) as usize] += 1;
        }
        let mut exponents = Vec::new();
        for j in 1..=max_h {
            for _ in 0..by_height[j] - by_height[j + 1] {
                exponents.push(j as u32);
            }
        }

        let lcm_den = simple_norms
            .iter()
            .fold(BigInt::one(), |l, d| l.lcm(d.denom()));
        let scaled_norms: Vec<i64> = simple_norms
            .iter()
            .map(|d| (d * Q::from_integer(lcm_den.clone())).to_integer().to_i64().unwrap())
            .collect();

        let cartan_inv = invert(&cartan);
        Ok(RootSystem {
            ty,
            cartan,
            positive_roots: roots,
            root_index: index,
            highest_root,
            simple_norms,
            norms_std,
            gram,
            cartan_inv,
            scaled_norms,
            h,
            h_dual,
            exponents,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// `a[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inverse(&self) -> &[Vec<Q>] {
        &self.cartan_inv
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    pub fn highest_root(&self) -> usize {
        self.highest_root
    }

    pub fn psi(&self) -> &[i64] {
        &self.positive_roots[self.highest_root]
    }

    pub fn height(&self, idx: usize) -> i64 {
        self.positive_roots[idx].iter().sum()
    }

    /// `(alpha_i, alpha_i)_std`.
    pub fn simple_norms(&self) -> &[Q] {
        &self.simple_norms
    }

    /// `(phi, phi)_std` for every positive root.
    pub fn norms_std(&self) -> &[Q] {
        &self.norms_std
    }

    pub fn norm_killing(&self, idx: usize) -> Q {
        self.to_killing(self.norms_std[idx].clone())
    }

    pub fn is_long(&self, idx: usize) -> bool {
        self.norms_std[idx] == q_int(2)
    }

    pub fn coxeter_number(&self) -> u32 {
        self.h
    }

    pub fn dual_coxeter_number(&self) -> u32 {
        self.h_dual
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn dim_g(&self) -> usize {
        2 * self.positive_roots.len() + self.rank()
    }

    /// Standard-form value to Killing-form value.
    pub fn to_killing(&self, std_value: Q) -> Q {
        std_value / q_int(2 * self.h_dual as i64)
    }

    /// `<beta, alpha_i^vee>` for a root-lattice vector `beta`.
    pub fn coroot_pairing(&self, beta: &[i64], i: usize) -> i64 {
        (0..self.rank()).map(|j| beta[j] * self.cartan[i][j]).sum()
    }

    /// `<beta, phi^vee> = 2 (beta, phi) / (phi, phi)` for root-lattice vectors.
    pub fn pairing_with_coroot(&self, beta: &[i64], phi: &[i64]) -> i64 {
        let num = inner(&self.gram, beta, phi) * q_int(2);
        let v = num / inner(&self.gram, phi, phi);
        debug_assert!(v.is_integer());
        v.to_integer().to_i64().unwrap()
    }

    /// Standard inner product of two root-lattice vectors.
    pub fn root_inner_std(&self, a: &[i64], b: &[i64]) -> Q {
        inner(&self.gram, a, b)
    }

    /// Fundamental-weight coordinates of a root-lattice vector.
    pub fn root_to_weight(&self, c: &[i64]) -> Weight {
        let n = self.rank();
        Weight::new(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * c[j]).sum())
                .collect(),
        )
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<Q> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.cartan_inv[i][j].clone() * q_int(w.coords[j]))
                    .fold(Q::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// Integer simple-root coordinates if the weight lies in the root lattice.
    pub fn root_lattice_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        self.weight_to_root_coords(w)
            .into_iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }

    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.root_lattice_coords(w).is_some()
    }

    /// `(lambda, phi)_std` with lambda in weight coordinates, phi in root coordinates.
    pub fn weight_root_std(&self, w: &Weight, phi: &[i64]) -> Q {
        (0..self.rank())
            .map(|i| q_int(w.coords[i] * phi[i]) * self.simple_norms[i].clone() / q_int(2))
            .fold(Q::zero(), |a, b| a + b)
    }

    /// Standard inner product of two weights.
    pub fn weight_inner_std(&self, a: &Weight, b: &Weight) -> Q {
        let cb = self.weight_to_root_coords(b);
        (0..self.rank())
            .map(|i| q_int(a.coords[i]) * cb[i].clone() * self.simple_norms[i].clone() / q_int(2))
            .fold(Q::zero(), |x, y| x + y)
    }

    fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.coords.len() != self.rank() {
            return Err(Error::RankMismatch {
                got: w.coords.len(),
                rank: self.rank(),
            });
        }
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.coords.clone()));
        }
        Ok(())
    }

    /// `Cas(lambda) = (lambda, lambda + 2 rho)` in the Killing normalization.
    pub fn casimir_eigenvalue(&self, w: &Weight) -> Result<Q> {
        self.check_weight(w)?;
        Ok(self.casimir_unchecked(w))
    }

    pub(crate) fn casimir_unchecked(&self, w: &Weight) -> Q {
        let two_rho = Weight::new(vec![2; self.rank()]);
        let v = self.weight_inner_std(w, w) + self.weight_inner_std(&two_rho, w);
        self.to_killing(v)
    }

    /// Weyl dimension formula, evaluated with integer-scaled pairings.
    pub fn weyl_dimension(&self, w: &Weight) -> Result<BigInt> {
        self.check_weight(w)?;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for phi in &self.positive_roots {
            let mut a = 0i64;
            let mut b = 0i64;
            for i in 0..self.rank() {
                let t = phi[i] * self.scaled_norms[i];
                a += (w.coords[i] + 1) * t;
                b += t;
            }
            num *= a;
            den *= b;
        }
        let (d, r) = num.div_rem(&den);
        if !r.is_zero() {
            return Err(Error::Invariant(format!("Weyl product not integral for {w}")));
        }
        Ok(d)
    }

    /// `m` with `2m + 1 = #{phi > 0 : (psi, phi) > 0}`; expected to be `h_dual - 2`.
    pub fn heisenberg_count(&self) -> u32 {
        let psi = self.psi();
        let count = self
            .positive_roots
            .iter()
            .filter(|phi| self.root_inner_std(psi, phi).is_positive())
            .count() as u32;
        assert!(count % 2 == 1, "odd count of roots pairing positively with psi");
        (count - 1) / 2
    }

    /// Sum of a set of positive roots, in root coordinates.
    pub fn sum_roots<'a>(&self, idx: impl IntoIterator<Item = &'a usize>) -> Vec<i64> {
        let mut out = vec![0; self.rank()];
        for &i in idx {
            for (o, c) in out.iter_mut().zip(&self.positive_roots[i]) {
                *o += c;
            }
        }
        out
    }
}

fn inner(gram: &[Vec<Q>], a: &[i64], b: &[i64]) -> Q {
    let mut s = Q::zero();
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                s += gram[i][j].clone() * BigRational::from_integer(BigInt::from(x * y));
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn rank_one_data() {
        let a1 = rs("A1");
        assert_eq!(a1.num_positive(), 1);
        assert_eq!(a1.dual_coxeter_number(), 2);
        assert_eq!(a1.dim_g(), 3);
    }

    #[test]
    fn g2_and_a4_data() {
        let g2 = rs("G2");
        assert_eq!(g2.num_positive(), 6);
        assert_eq!(g2.dual_coxeter_number(), 4);
        assert_eq!(g2.coxeter_number(), 6);
        assert_eq!(g2.dim_g(), 14);
        assert_eq!(g2.psi(), &[3, 2]);
        let a4 = rs("A4");
        assert_eq!(a4.dim_g(), 24);
        assert_eq!(a4.dual_coxeter_number(), 5);
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(matches!(build_root_system(Family::D, 2), Err(Error::InvalidType(_))));
        assert!(matches!(build_root_system(Family::F, 5), Err(Error::InvalidType(_))));
        assert!(matches!(build_root_system(Family::E, 9), Err(Error::InvalidType(_))));
        assert!("X3".parse::<CartanType>().is_err());
        assert!("A".parse::<CartanType>().is_err());
    }

    #[test]
    fn dual_coxeter_numbers() {
        let expect = [
            ("A3", 4, 4),
            ("B3", 6, 5),
            ("C3", 6, 4),
            ("D5", 8, 8),
            ("E6", 12, 12),
            ("E7", 18, 18),
            ("E8", 30, 30),
            ("F4", 12, 9),
            ("G2", 6, 4),
        ];
        for (t, h, hd) in expect {
            let r = rs(t);
            assert_eq!(r.coxeter_number(), h, "{t}");
            assert_eq!(r.dual_coxeter_number(), hd, "{t}");
        }
    }

    #[test]
    fn exponents_of_known_types() {
        assert_eq!(rs("D4").exponents(), &[1, 3, 3, 5]);
        assert_eq!(rs("E6").exponents(), &[1, 4, 5, 7, 8, 11]);
        assert_eq!(rs("G2").exponents(), &[1, 5]);
        assert_eq!(rs("F4").exponents(), &[1, 5, 7, 11]);
    }

    #[test]
    fn casimir_examples() {
        for t in ["A1", "A2", "B2", "G2", "D4"] {
            let r = rs(t);
            let psi = r.root_to_weight(r.psi());
            assert_eq!(r.casimir_eigenvalue(&psi).unwrap(), Q::one(), "{t}");
            assert_eq!(r.casimir_eigenvalue(&Weight::zero(r.rank())).unwrap(), Q::zero());
        }
        // A1, lambda = 2 alpha = 4 omega.
        let a1 = rs("A1");
        assert_eq!(a1.casimir_eigenvalue(&Weight::new(vec![4])).unwrap(), q_int(3));
        assert!(matches!(
            a1.casimir_eigenvalue(&Weight::new(vec![-1])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn weyl_dimension_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.weyl_dimension(&Weight::zero(2)).unwrap(), BigInt::one());
        assert_eq!(a2.weyl_dimension(&Weight::new(vec![3, 0])).unwrap(), BigInt::from(10));
        // psi + alpha_1 = (2,1) + (1,0) in root coordinates = 3 omega_1.
        assert_eq!(a2.root_to_weight(&[2, 1]), Weight::new(vec![3, 0]));
        for t in ["A3", "B3", "C3", "G2", "F4", "E6"] {
            let r = rs(t);
            let psi = r.root_to_weight(r.psi());
            assert_eq!(r.weyl_dimension(&psi).unwrap(), BigInt::from(r.dim_g()), "{t}");
        }
        assert!(a2.weyl_dimension(&Weight::new(vec![0, -2])).is_err());
    }

    #[test]
    fn heisenberg_examples() {
        assert_eq!(rs("A1").heisenberg_count(), 0);
        assert_eq!(rs("A2").heisenberg_count(), 1);
        assert_eq!(rs("G2").heisenberg_count(), 2);
    }

    #[test]
    fn root_lattice_membership() {
        let a2 = rs("A2");
        assert!(!a2.in_root_lattice(&Weight::new(vec![1, 0])));
        assert!(a2.in_root_lattice(&Weight::new(vec![1, 1])));
        assert_eq!(a2.root_lattice_coords(&Weight::new(vec![3, 0])), Some(vec![2, 1]));
    }

    #[test]
    fn invariants_for_all_types_up_to_rank_8() {
        for ty in CartanType::all_up_to_rank(8) {
            let r = RootSystem::new(ty).unwrap();
            let n = r.rank();
            assert_eq!(r.num_positive(), (r.dim_g() - n) / 2);
            // psi dominates every positive root.
            for phi in r.positive_roots() {
                assert!(r.psi().iter().zip(phi).all(|(a, b)| a >= b), "{ty}");
            }
            let exps: u32 = r.exponents().iter().sum();
            assert_eq!(exps as usize, r.num_positive(), "{ty}");
            // prod (1 + t^{2m+1}) has degree dim g.
            let deg: u32 = r.exponents().iter().map(|m| 2 * m + 1).sum();
            assert_eq!(deg as usize, r.dim_g(), "{ty}");
            // Killing norms: long roots 1/h_dual, every reciprocal a positive integer.
            for i in 0..r.num_positive() {
                let k = r.norm_killing(i);
                let recip = Q::one() / k.clone();
                assert!(recip.is_integer() && recip.is_positive(), "{ty}");
                if r.is_long(i) {
                    assert_eq!(recip, q_int(r.dual_coxeter_number() as i64));
                }
            }
            // (2 rho, alpha_i)_K = (alpha_i, alpha_i)_K and (2 rho, psi)_K = 1 - (psi, psi)_K.
            let two_rho = Weight::new(vec![2; n]);
            for i in 0..n {
                let mut e = vec![0; n];
                e[i] = 1;
                let lhs = r.to_killing(r.weight_root_std(&two_rho, &e));
                assert_eq!(lhs, r.to_killing(r.simple_norms()[i].clone()));
            }
            let lhs = r.to_killing(r.weight_root_std(&two_rho, r.psi()));
            assert_eq!(lhs, Q::one() - r.norm_killing(r.highest_root()));
            let psi = r.root_to_weight(r.psi());
            assert_eq!(r.casimir_eigenvalue(&psi).unwrap(), Q::one(), "{ty}");
            if n <= 6 {
                assert_eq!(r.heisenberg_count() + 2, r.dual_coxeter_number(), "{ty}");
            }
        }
    }
}
