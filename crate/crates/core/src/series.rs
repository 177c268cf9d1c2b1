//! Exact power series and polynomials.
//!
//! Three independent routes lead to the coefficients `b_k` of
//! `prod_n (1 - x^n)^d`:
//!
//! * [`euler_power`] multiplies out binomial expansions of each factor;
//! * [`alcove_coeffs`] sums signed Weyl dimensions over dominant alcoves;
//! * [`f_poly`] / [`f_poly_direct`] give `b_k = f_k(d)` from polynomials in `d`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::alcove::enumerate_dominant;
use crate::rootsys::RootSystem;
use crate::{q_frac, q_int, Q};

/// Dense integer power series truncated after `x^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn zero(order: usize) -> Self {
        IntSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least its constant term");
        IntSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &IntSeries) -> IntSeries {
        let order = self.order().min(other.order());
        IntSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
        }
    }

    /// Schoolbook product modulo `x^(order + 1)`.
    pub fn mul(&self, other: &IntSeries) -> IntSeries {
        let order = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntSeries { coeffs: out }
    }

    pub fn pow(&self, mut e: u32) -> IntSeries {
        let mut base = self.clone();
        let mut acc = IntSeries::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// `(1 - x^n)^e` truncated at `order`.
fn binomial_factor(n: usize, e: u32, order: usize) -> IntSeries {
    let mut s = IntSeries::zero(order);
    let mut j = 0usize;
    while j * n <= order && j as u32 <= e {
        let c: BigInt = binomial(BigInt::from(e), BigInt::from(j));
        s.coeffs[j * n] = if j % 2 == 0 { c } else { -c };
        j += 1;
    }
    s
}

/// Coefficients of `prod_{n>=1} (1 - x^n)^e` through `x^order`.
pub fn euler_power(e: u32, order: usize) -> IntSeries {
    let mut acc = IntSeries::one(order);
    for n in 1..=order {
        acc = acc.mul(&binomial_factor(n, e, order));
    }
    acc
}

/// `b_k = sum over dominant alcoves with Cas(lambda^sigma) = k of
/// (-1)^length dim V_{lambda^sigma}`, for `k <= order`.
pub fn alcove_coeffs(rs: &RootSystem, order: usize) -> IntSeries {
    let mut s = IntSeries::zero(order);
    for e in enumerate_dominant(rs, order as u32) {
        let k = e.cas() as usize;
        if k > order {
            continue;
        }
        let d = rs.weyl_dimension(e.lambda()).expect("lambda^sigma is dominant");
        if e.length() % 2 == 0 {
            s.coeffs[k] += d;
        } else {
            s.coeffs[k] -= d;
        }
    }
    s
}

/// `prod_i 1 / (1 - t^{m_i})` over the exponents, through `t^order`.
pub fn bott_series(rs: &RootSystem, order: usize) -> IntSeries {
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for &m in rs.exponents() {
        let m = m as usize;
        // multiply by the geometric series in t^m
        for k in m..=order {
            let prev = c[k - m].clone();
            c[k] += prev;
        }
    }
    IntSeries { coeffs: c }
}

/// `mu(m) = sum_{d | m} 1/d`.
pub fn mu(m: u64) -> Q {
    assert!(m >= 1, "mu is defined on positive integers");
    (1..=m)
        .filter(|d| m % d == 0)
        .map(|d| q_frac(1, d as i64))
        .fold(Q::zero(), |a, b| a + b)
}

/// Dense polynomial with exact rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Q>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        RatPoly::new(vec![c])
    }

    /// The monomial `s`.
    pub fn var() -> Self {
        RatPoly::new(vec![Q::zero(), Q::one()])
    }

    /// `scale * prod (s - r)`.
    pub fn from_roots(scale: Q, roots: &[i64]) -> Self {
        let mut p = RatPoly::constant(scale);
        for &r in roots {
            p = p.mul(&RatPoly::new(vec![q_int(-r), Q::one()]));
        }
        p
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn scale(&self, c: &Q) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return RatPoly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    /// Horner evaluation.
    pub fn eval(&self, s: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * s + c)
    }

    pub fn eval_int(&self, s: i64) -> Q {
        self.eval(&q_int(s))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Integer roots, found among divisors of the lowest nonzero coefficient
    /// after clearing denominators. Returned with multiplicity, ascending.
    pub fn integer_roots(&self) -> Vec<i64> {
        let mut p = self.clone();
        let mut roots = Vec::new();
        while p.degree().unwrap_or(0) > 0 && p.coeff(0).is_zero() {
            roots.push(0);
            p = RatPoly::new(p.coeffs[1..].to_vec());
        }
        loop {
            let Some(deg) = p.degree() else { break };
            if deg == 0 {
                break;
            }
            let l = p.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
            let c0 = (p.coeff(0) * Q::from_integer(l)).to_integer().abs();
            let Some(c0) = c0.to_i64() else { break };
            let found = (1..=c0)
                .filter(|d| c0 % d == 0)
                .flat_map(|d| [d, -d])
                .find(|&r| p.eval_int(r).is_zero());
            match found {
                Some(r) => {
                    roots.push(r);
                    p = p.divide_linear(r);
                }
                None => break,
            }
        }
        roots.sort_unstable();
        roots
    }

    /// Quotient by `(s - r)`, assuming `r` is a root.
    fn divide_linear(&self, r: i64) -> RatPoly {
        let n = self.coeffs.len();
        let mut q = vec![Q::zero(); n - 1];
        let mut carry = Q::zero();
        let rq = q_int(r);
        for i in (1..n).rev() {
            carry = self.coeffs[i].clone() + carry * rq.clone();
            q[i - 1] = carry.clone();
        }
        RatPoly::new(q)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "s")?,
                1 => write!(f, "{a}*s")?,
                _ if a.is_one() => write!(f, "s^{i}")?,
                _ => write!(f, "{a}*s^{i}")?,
            }
        }
        Ok(())
    }
}

/// `f_0, ..., f_kmax` from `k f_k = -s sum_{m=1}^k m mu(m) f_{k-m}`.
pub fn f_polys(kmax: usize) -> Vec<RatPoly> {
    let weights: Vec<Q> = (1..=kmax as u64).map(|m| mu(m) * q_int(m as i64)).collect();
    let mut fs = vec![RatPoly::constant(Q::one())];
    let minus_s = RatPoly::new(vec![Q::zero(), -Q::one()]);
    for k in 1..=kmax {
        let mut acc = RatPoly::zero();
        for m in 1..=k {
            acc = acc.add(&fs[k - m].scale(&weights[m - 1]));
        }
        fs.push(acc.mul(&minus_s).scale(&q_frac(1, k as i64)));
    }
    fs
}

/// `f_k(s)`, the coefficient of `x^k` in the `s`-th power of the Euler product.
pub fn f_poly(k: usize) -> RatPoly {
    f_polys(k).pop().unwrap()
}

/// `f_k(s) = sum_n q_{k,n} (-s)^n / n!`, where `q_{k,n}` sums
/// `mu(m_1) ... mu(m_n)` over ordered compositions of `k` into `n` parts.
pub fn f_poly_direct(k: usize) -> RatPoly {
    if k == 0 {
        return RatPoly::constant(Q::one());
    }
    let mus: Vec<Q> = (0..=k as u64).map(|m| if m == 0 { Q::zero() } else { mu(m) }).collect();
    let mut q = vec![Q::zero(); k + 1];
    fn walk(rest: usize, parts: usize, prod: Q, mus: &[Q], q: &mut [Q]) {
        if rest == 0 {
            q[parts] += prod;
            return;
        }
        for m in 1..=rest {
            walk(rest - m, parts + 1, prod.clone() * mus[m].clone(), mus, q);
        }
    }
    walk(k, 0, Q::one(), &mus, &mut q);
    let mut coeffs = vec![Q::zero(); k + 1];
    let mut fact = BigInt::one();
    for n in 1..=k {
        fact *= n;
        let sign = if n % 2 == 0 { Q::one() } else { -Q::one() };
        coeffs[n] = q[n].clone() * sign / Q::from_integer(fact.clone());
    }
    RatPoly::new(coeffs)
}

/// Lagrange interpolation through distinct nodes.
pub fn interpolate(points: &[(Q, Q)]) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = RatPoly::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                let lin = RatPoly::new(vec![-xj.clone(), Q::one()]);
                basis = basis.mul(&lin).scale(&(Q::one() / (xi.clone() - xj.clone())));
            }
        }
        acc = acc.add(&basis);
    }
    acc
}

/// `dim (wedge^n u^-)_k` for `n <= max_n`, `k <= max_k`: the coefficient of
/// `y^n x^k` in `prod_{j>=1} (1 + y x^j)^{dim g}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedTable {
    /// `entries[n][k]`.
    entries: Vec<Vec<BigInt>>,
}

impl BigradedTable {
    pub fn entry(&self, n: usize, k: usize) -> &BigInt {
        &self.entries[n][k]
    }

    pub fn max_n(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn max_k(&self) -> usize {
        self.entries[0].len() - 1
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// `sum_n (-1)^n entry(n, k)` for every `k`.
    pub fn euler_characteristic(&self) -> Vec<BigInt> {
        (0..=self.max_k())
            .map(|k| {
                (0..=self.max_n()).fold(BigInt::zero(), |acc, n| {
                    if n % 2 == 0 {
                        acc + &self.entries[n][k]
                    } else {
                        acc - &self.entries[n][k]
                    }
                })
            })
            .collect()
    }
}

pub fn bigraded_dims(dim_g: u32, max_n: usize, max_k: usize) -> BigradedTable {
    let mut t = vec![vec![BigInt::zero(); max_k + 1]; max_n + 1];
    t[0][0] = BigInt::one();
    for j in 1..=max_k {
        // (1 + y x^j)^dim_g = sum_i C(dim_g, i) y^i x^{ij}
        let mut next = vec![vec![BigInt::zero(); max_k + 1]; max_n + 1];
        for n in 0..=max_n {
            for k in 0..=max_k {
                if t[n][k].is_zero() {
                    continue;
                }
                let mut i = 0usize;
                while n + i <= max_n && k + i * j <= max_k && i as u32 <= dim_g {
                    let c: BigInt = binomial(BigInt::from(dim_g), BigInt::from(i));
                    next[n + i][k + i * j] += &t[n][k] * c;
                    i += 1;
                }
            }
        }
        t = next;
    }
    BigradedTable { entries: t }
}

#[derive(Debug, Clone, Serialize)]
pub struct LehmerReport {
    pub kmax: usize,
    /// `f_k(24)` for `k = 1..=kmax`, as decimal strings.
    pub values: Vec<String>,
    /// The `k` with `f_k(24) = 0`.
    pub zeros: Vec<usize>,
}

/// Evaluates `f_k(24)` exactly for `1 <= k <= kmax` and collects the zeros.
pub fn lehmer_probe(kmax: usize) -> LehmerReport {
    let fs = f_polys(kmax);
    let mut values = Vec::with_capacity(kmax);
    let mut zeros = Vec::new();
    for (k, f) in fs.iter().enumerate().skip(1) {
        let v = f.eval_int(24);
        if v.is_zero() {
            zeros.push(k);
        }
        values.push(v.to_string());
    }
    LehmerReport { kmax, values, zeros }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn pentagonal_and_triangular() {
        let e1 = euler_power(1, 7);
        assert_eq!(e1.coeffs(), ints(&[1, -1, -1, 0, 0, 1, 0, 1]).as_slice());
        let e3 = euler_power(3, 6);
        assert_eq!(e3.coeffs(), ints(&[1, -3, 0, 5, 0, 0, -7]).as_slice());
        assert_eq!(euler_power(24, 1).coeff(1), &BigInt::from(-24));
    }

    #[test]
    fn euler_power_matches_repeated_product() {
        let base = euler_power(1, 12);
        assert_eq!(base.pow(8), euler_power(8, 12));
        assert_eq!(base.pow(24), euler_power(24, 12));
    }

    #[test]
    fn alcove_route_small() {
        let a2 = RootSystem::new("A2".parse().unwrap()).unwrap();
        let s = alcove_coeffs(&a2, 2);
        assert_eq!(s.coeffs(), ints(&[1, -8, 20]).as_slice());
        let a4 = RootSystem::new("A4".parse().unwrap()).unwrap();
        let s = alcove_coeffs(&a4, 5);
        assert_eq!(s.coeffs(), ints(&[1, -24, 252, -1472, 4830, -6048]).as_slice());
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu(1), Q::one());
        assert_eq!(mu(2), q_frac(3, 2));
        assert_eq!(mu(4), q_frac(7, 4));
        assert_eq!(mu(6), q_frac(12, 6));
    }

    #[test]
    fn low_f_polys() {
        assert_eq!(f_poly(1), RatPoly::new(vec![Q::zero(), -Q::one()]));
        assert_eq!(f_poly(2), RatPoly::from_roots(q_frac(1, 2), &[0, 3]));
        assert_eq!(f_poly(3), RatPoly::from_roots(q_frac(-1, 6), &[0, 1, 8]));
        assert_eq!(f_poly(4), RatPoly::from_roots(q_frac(1, 24), &[0, 1, 3, 14]));
        for k in 0..=10 {
            assert_eq!(f_poly(k), f_poly_direct(k), "k = {k}");
            assert_eq!(f_poly(k).degree(), Some(k));
            if k >= 1 {
                assert!(f_poly(k).coeff(0).is_zero());
            }
        }
    }

    #[test]
    fn f_poly_evaluates_to_series() {
        let fs = f_polys(20);
        for d in [3u32, 8, 14, 24, 78] {
            let s = euler_power(d, 20);
            for (k, f) in fs.iter().enumerate() {
                assert_eq!(f.eval_int(d as i64), Q::from_integer(s.coeff(k).clone()));
            }
        }
    }

    #[test]
    fn integer_roots_and_display() {
        assert_eq!(f_poly(4).integer_roots(), vec![0, 1, 3, 14]);
        assert_eq!(f_poly(3).integer_roots(), vec![0, 1, 8]);
        assert_eq!(f_poly(1).to_string(), "-s");
        assert_eq!(f_poly(2).to_string(), "1/2*s^2 - 3/2*s");
    }

    #[test]
    fn bott_examples() {
        let a1 = RootSystem::new("A1".parse().unwrap()).unwrap();
        assert!(bott_series(&a1, 10).coeffs().iter().all(|c| c.is_one()));
        let a2 = RootSystem::new("A2".parse().unwrap()).unwrap();
        assert_eq!(bott_series(&a2, 5).coeffs(), ints(&[1, 1, 2, 2, 3, 3]).as_slice());
        let d4 = RootSystem::new("D4".parse().unwrap()).unwrap();
        // 1/((1-t)(1-t^3)^2(1-t^5))
        assert_eq!(bott_series(&d4, 6).coeffs(), ints(&[1, 1, 1, 3, 3, 4, 7]).as_slice());
    }

    #[test]
    fn bigraded_examples() {
        let t = bigraded_dims(3, 6, 6);
        assert_eq!(t.entry(0, 0), &BigInt::one());
        for k in 1..=6 {
            assert_eq!(t.entry(1, k), &BigInt::from(3));
            for n in k + 1..=6 {
                assert!(t.entry(n, k).is_zero());
            }
        }
        let chi = t.euler_characteristic();
        assert_eq!(chi[3], BigInt::from(5));
        assert_eq!(chi, euler_power(3, 6).coeffs().to_vec());
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let f = f_poly(3);
        let pts: Vec<(Q, Q)> = [0i64, 2, 5, 7].iter().map(|&x| (q_int(x), f.eval_int(x))).collect();
        assert_eq!(interpolate(&pts), f);
    }

    #[test]
    fn lehmer_small() {
        let r = lehmer_probe(6);
        assert!(r.zeros.is_empty());
        assert_eq!(&r.values[..5], &["-24", "252", "-1472", "4830", "-6048"]);
    }
}
