//! Abelian ideals of the Borel subalgebra, encoded as root subsets.
//!
//! The enumeration is a depth-first search over upper sets of the root
//! poset and never consults the alcove side; the match with `W_f^(2)` is
//! checked afterwards.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::alcove::{enumerate_by_cas, enumerate_wf2, in_wf2, is_abelian, is_root_ideal, AffineElement};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rootsys::{RootSystem, Weight};
use crate::{q_int, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianIdeal {
    /// Positive-root indices, ascending.
    roots: Vec<usize>,
    /// `lambda_xi`, the sum of the roots, in fundamental-weight coordinates.
    lambda: Weight,
}

impl AbelianIdeal {
    /// Validates the ideal and abelian properties.
    pub fn new(rs: &RootSystem, mut roots: Vec<usize>) -> Result<Self> {
        roots.sort_unstable();
        roots.dedup();
        if roots.iter().any(|&i| i >= rs.num_positive())
            || !is_root_ideal(rs, &roots)
            || !is_abelian(rs, &roots)
        {
            return Err(Error::NotAbelianIdeal);
        }
        let lambda = rs.root_to_weight(&rs.sum_roots(&roots));
        Ok(AbelianIdeal { roots, lambda })
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn dim(&self) -> usize {
        self.roots.len()
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }
}

/// All abelian ideals, sorted by dimension and then by `lambda_xi`.
pub fn enumerate_abelian_ideals(rs: &RootSystem) -> Vec<AbelianIdeal> {
    let roots = rs.positive_roots();
    let m = roots.len();
    // Decreasing height: everything above a root is decided before it.
    let order: Vec<usize> = (0..m).rev().collect();
    // covers[i]: indices of phi + alpha_j that are roots.
    let covers: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (0..rs.rank())
                .filter_map(|j| {
                    let mut up = roots[i].clone();
                    up[j] += 1;
                    rs.root_index(&up)
                })
                .collect()
        })
        .collect();
    let mut sums = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            let s: Vec<i64> = roots[i].iter().zip(&roots[j]).map(|(a, b)| a + b).collect();
            sums[i][j] = rs.root_index(&s).is_some();
        }
    }

    let mut out = Vec::new();
    let mut chosen = vec![false; m];
    let mut stack: Vec<usize> = Vec::new();
    fn dfs(
        pos: usize,
        order: &[usize],
        covers: &[Vec<usize>],
        sums: &[Vec<bool>],
        chosen: &mut Vec<bool>,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == order.len() {
            out.push(stack.clone());
            return;
        }
        let r = order[pos];
        dfs(pos + 1, order, covers, sums, chosen, stack, out);
        let closed = covers[r].iter().all(|&c| chosen[c]);
        let commutes = !sums[r][r] && stack.iter().all(|&s| !sums[r][s]);
        if closed && commutes {
            chosen[r] = true;
            stack.push(r);
            dfs(pos + 1, order, covers, sums, chosen, stack, out);
            stack.pop();
            chosen[r] = false;
        }
    }
    let mut raw = Vec::new();
    dfs(0, &order, &covers, &sums, &mut chosen, &mut stack, &mut raw);
    for set in raw {
        out.push(AbelianIdeal::new(rs, set).expect("search only yields abelian ideals"));
    }
    out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.lambda.cmp(&b.lambda)));
    out
}

/// The element of `W_f^(2)` whose n-vector is the indicator of the ideal,
/// looked up in an enumerated `W_f^(2)` table.
pub fn ideal_to_sigma(
    rs: &RootSystem,
    ideal: &AbelianIdeal,
    wf2: &[AffineElement],
) -> Result<AffineElement> {
    let mut want = vec![0u32; rs.num_positive()];
    for &i in ideal.roots() {
        want[i] = 1;
    }
    wf2.iter()
        .find(|e| e.n_vec() == want.as_slice())
        .cloned()
        .ok_or(Error::NoMatchingAlcove)
}

/// `{phi : n_phi(sigma) = 1}` for `sigma` in `W_f^(2)`.
pub fn sigma_to_ideal(rs: &RootSystem, e: &AffineElement) -> Result<AbelianIdeal> {
    if !in_wf2(e) {
        return Err(Error::NotInWf2);
    }
    AbelianIdeal::new(rs, e.support())
}

/// `dim C_k = sum over k-dimensional abelian ideals of dim V_{lambda_xi}`.
pub fn dim_ck(rs: &RootSystem, ideals: &[AbelianIdeal], k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    ideals
        .iter()
        .filter(|i| i.dim() == k)
        .map(|i| rs.weyl_dimension(i.lambda()).expect("lambda_xi is dominant"))
        .fold(BigInt::zero(), |a, b| a + b)
}

/// Maximal dimension of an abelian ideal.
pub fn max_dim(ideals: &[AbelianIdeal]) -> usize {
    ideals.iter().map(|i| i.dim()).max().unwrap_or(0)
}

fn k_subsets(m: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > m {
        return;
    }
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + m - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `|rho + <Phi>|^2 - |rho|^2` in the Killing form, for a multiset of roots.
fn shifted_norm_gain(rs: &RootSystem, mu: &[i64]) -> Q {
    // (mu + rho, mu + rho) - (rho, rho) = (mu, mu) + (2 rho, mu)
    let two_rho = Weight::new(vec![2; rs.rank()]);
    rs.to_killing(rs.root_inner_std(mu, mu) + rs.weight_root_std(&two_rho, mu))
}

#[derive(Debug, Clone, Serialize)]
pub struct KostantReport {
    pub k: usize,
    pub subsets: u128,
    pub violations: Vec<Vec<usize>>,
    pub equality_sets: Vec<Vec<usize>>,
    /// Root sets of the k-dimensional abelian ideals.
    pub ideal_sets: Vec<Vec<usize>>,
    pub equality_is_ideals: bool,
}

impl KostantReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.equality_is_ideals
    }
}

/// Checks `|rho + <Phi>|^2 - |rho|^2 <= k` over every k-subset of positive
/// roots and compares the equality cases with the abelian ideals.
pub fn verify_kostant_inequality(
    rs: &RootSystem,
    k: usize,
    ideals: &[AbelianIdeal],
    limits: &Limits,
) -> Result<KostantReport> {
    let m = rs.num_positive();
    let count: u128 = binomial(m as u128, k as u128);
    limits.guard("k-subsets of positive roots", count, limits.max_candidates)?;
    let bound = q_int(k as i64);
    let mut violations = Vec::new();
    let mut equality_sets = Vec::new();
    k_subsets(m, k, |s| {
        let gain = shifted_norm_gain(rs, &rs.sum_roots(s));
        if gain > bound {
            violations.push(s.to_vec());
        } else if gain == bound {
            equality_sets.push(s.to_vec());
        }
    });
    let mut ideal_sets: Vec<Vec<usize>> = ideals
        .iter()
        .filter(|i| i.dim() == k)
        .map(|i| i.roots().to_vec())
        .collect();
    ideal_sets.sort();
    equality_sets.sort();
    Ok(KostantReport {
        k,
        subsets: count,
        equality_is_ideals: equality_sets == ideal_sets,
        violations,
        equality_sets,
        ideal_sets,
    })
}

/// `c(q) = sum_i q_i (q_i + 1) / 2`.
pub fn partition_cost(q: &[u32]) -> u64 {
    q.iter().map(|&x| x as u64 * (x as u64 + 1) / 2).sum()
}

#[derive(Debug, Clone, Serialize)]
pub struct RootPartitionReport {
    pub cas_ceiling: u64,
    pub partitions: u128,
    pub violations: Vec<Vec<u32>>,
    pub equality_cases: Vec<Vec<u32>>,
    pub alcove_partitions: Vec<Vec<u32>>,
    pub equality_is_alcoves: bool,
}

impl RootPartitionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.equality_is_alcoves
    }
}

/// For every root partition `q` with `c(q) <= cas_ceiling`, checks
/// `c(q) >= Cas(eta(q))` and that equality holds exactly for the partitions
/// `q^sigma` given by the n-vectors of dominant alcoves.
pub fn verify_root_partition_bound(
    rs: &RootSystem,
    cas_ceiling: u64,
    limits: &Limits,
) -> Result<RootPartitionReport> {
    let m = rs.num_positive();
    // Each q_i is at most t with t(t+1)/2 <= ceiling.
    let mut tmax = 0u32;
    while ((tmax as u64 + 1) * (tmax as u64 + 2)) / 2 <= cas_ceiling {
        tmax += 1;
    }
    let bound = (tmax as u128 + 1).checked_pow(m as u32).unwrap_or(u128::MAX);
    limits.guard("root partitions", bound, limits.max_candidates)?;

    let mut violations = Vec::new();
    let mut equality_cases = Vec::new();
    let mut visited: u128 = 0;
    let mut q = vec![0u32; m];
    fn walk(
        rs: &RootSystem,
        pos: usize,
        budget: u64,
        q: &mut Vec<u32>,
        visited: &mut u128,
        violations: &mut Vec<Vec<u32>>,
        equality: &mut Vec<Vec<u32>>,
        ceiling: u64,
    ) {
        if pos == q.len() {
            *visited += 1;
            let cost = q_int((ceiling - budget) as i64);
            let mut mu = vec![0i64; rs.rank()];
            for (k, phi) in q.iter().zip(rs.positive_roots()) {
                for (o, c) in mu.iter_mut().zip(phi) {
                    *o += *k as i64 * c;
                }
            }
            let gain = shifted_norm_gain(rs, &mu);
            if cost < gain {
                violations.push(q.clone());
            } else if cost == gain {
                equality.push(q.clone());
            }
            return;
        }
        let mut v = 0u32;
        loop {
            let c = v as u64 * (v as u64 + 1) / 2;
            if c > budget {
                break;
            }
            q[pos] = v;
            walk(rs, pos + 1, budget - c, q, visited, violations, equality, ceiling);
            v += 1;
        }
        q[pos] = 0;
    }
    walk(
        rs,
        0,
        cas_ceiling,
        &mut q,
        &mut visited,
        &mut violations,
        &mut equality_cases,
        cas_ceiling,
    );
    let mut alcove_partitions: Vec<Vec<u32>> = enumerate_by_cas(rs, cas_ceiling)
        .iter()
        .map(|e| e.n_vec().to_vec())
        .collect();
    alcove_partitions.sort();
    equality_cases.sort();
    Ok(RootPartitionReport {
        cas_ceiling,
        partitions: visited,
        equality_is_alcoves: equality_cases == alcove_partitions,
        violations,
        equality_cases,
        alcove_partitions,
    })
}

/// Convenience: ideals together with the `W_f^(2)` table and the matching.
pub fn match_ideals(rs: &RootSystem) -> Result<Vec<(AbelianIdeal, AffineElement)>> {
    let ideals = enumerate_abelian_ideals(rs);
    let wf2 = enumerate_wf2(rs);
    ideals
        .into_iter()
        .map(|i| {
            let e = ideal_to_sigma(rs, &i, &wf2)?;
            Ok((i, e))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::{chi_at_ap, enumerate_dominant};

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a1_and_a2_ideals() {
        let a1 = rs("A1");
        let i1 = enumerate_abelian_ideals(&a1);
        assert_eq!(i1.len(), 2);
        assert_eq!(i1[0].roots(), &[] as &[usize]);
        assert_eq!(i1[1].roots(), &[0]);

        // A2 roots in order: alpha_2 = (0,1), alpha_1 = (1,0), psi.
        let a2 = rs("A2");
        let i2 = enumerate_abelian_ideals(&a2);
        let sets: Vec<Vec<usize>> = i2.iter().map(|i| i.roots().to_vec()).collect();
        // {alpha_2, psi} has lambda = 3 omega_2 = (0,3), sorting first.
        assert_eq!(sets, vec![vec![], vec![2], vec![0, 2], vec![1, 2]]);
        assert_eq!(AbelianIdeal::new(&a2, vec![0, 1, 2]), Err(Error::NotAbelianIdeal));
        assert_eq!(AbelianIdeal::new(&a2, vec![0]), Err(Error::NotAbelianIdeal));
    }

    #[test]
    fn peterson_count_e6() {
        assert_eq!(enumerate_abelian_ideals(&rs("E6")).len(), 64);
    }

    #[test]
    fn bijection_round_trip() {
        for t in ["A1", "A2", "A3", "B2", "C3", "G2", "D4", "B3"] {
            let r = rs(t);
            let wf2 = enumerate_wf2(&r);
            for ideal in enumerate_abelian_ideals(&r) {
                let e = ideal_to_sigma(&r, &ideal, &wf2).unwrap();
                assert_eq!(e.length() as usize, ideal.dim());
                assert_eq!(e.cas() as usize, ideal.dim());
                assert_eq!(e.lambda(), ideal.lambda());
                assert_eq!(sigma_to_ideal(&r, &e).unwrap(), ideal);
            }
        }
        let a1 = rs("A1");
        let long = &enumerate_dominant(&a1, 2)[2];
        assert_eq!(sigma_to_ideal(&a1, long), Err(Error::NotInWf2));
    }

    #[test]
    fn a2_length_one_matches_psi() {
        let a2 = rs("A2");
        let all = enumerate_dominant(&a2, 1);
        let ideal = AbelianIdeal::new(&a2, vec![2]).unwrap();
        assert_eq!(ideal_to_sigma(&a2, &ideal, &enumerate_wf2(&a2)).unwrap(), all[1]);
    }

    #[test]
    fn dim_ck_examples() {
        for t in ["A1", "A2", "G2", "B3"] {
            let r = rs(t);
            let ideals = enumerate_abelian_ideals(&r);
            assert_eq!(dim_ck(&r, &ideals, 0), BigInt::one());
            assert_eq!(dim_ck(&r, &ideals, 1), BigInt::from(r.dim_g()), "{t}");
        }
        let a2 = rs("A2");
        let ideals = enumerate_abelian_ideals(&a2);
        assert_eq!(dim_ck(&a2, &ideals, 2), BigInt::from(20));
        assert_eq!(dim_ck(&a2, &ideals, 3), BigInt::zero());
    }

    #[test]
    fn ideal_signs() {
        for t in ["A2", "B2", "G2", "A3"] {
            let r = rs(t);
            for i in enumerate_abelian_ideals(&r) {
                let expect = if i.dim() % 2 == 0 { 1 } else { -1 };
                assert_eq!(chi_at_ap(&r, i.lambda()).unwrap(), expect);
            }
        }
    }

    #[test]
    fn kostant_examples() {
        let lim = Limits::default();
        let a2 = rs("A2");
        let ideals = enumerate_abelian_ideals(&a2);
        let rep = verify_kostant_inequality(&a2, 2, &ideals, &lim).unwrap();
        assert_eq!(rep.subsets, 3);
        assert_eq!(rep.equality_sets, vec![vec![0, 2], vec![1, 2]]);
        assert!(rep.passed());
        let rep0 = verify_kostant_inequality(&a2, 0, &ideals, &lim).unwrap();
        assert_eq!(rep0.equality_sets, vec![Vec::<usize>::new()]);
        let g2 = rs("G2");
        let gi = enumerate_abelian_ideals(&g2);
        let rep4 = verify_kostant_inequality(&g2, 4, &gi, &lim).unwrap();
        assert!(rep4.equality_sets.is_empty() && rep4.passed());
        let tight = Limits {
            max_candidates: 2,
            ..Limits::default()
        };
        assert!(matches!(
            verify_kostant_inequality(&a2, 2, &ideals, &tight),
            Err(Error::ScaleExceeded { .. })
        ));
    }

    #[test]
    fn root_partition_examples() {
        let lim = Limits::default();
        let a1 = rs("A1");
        let rep = verify_root_partition_bound(&a1, 10, &lim).unwrap();
        // Every (n) is an equality case.
        assert_eq!(rep.equality_cases, vec![vec![0], vec![1], vec![2], vec![3], vec![4]]);
        assert!(rep.passed());
        let a2 = rs("A2");
        let rep = verify_root_partition_bound(&a2, 4, &lim).unwrap();
        assert!(rep.passed());
        assert!(rep.equality_cases.contains(&vec![0, 0, 0]));
        assert!(!rep.equality_cases.contains(&vec![1, 1, 0]));
        assert_eq!(partition_cost(&[1, 1, 0]), 2);
    }
}
