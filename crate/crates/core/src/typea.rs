//! Type A through partitions: an `SU(m)` weight `lambda` is the partition
//! `q` with `q_i - q_{i+1} = lambda_i` and `q_m = 0`. Dominant alcoves land
//! exactly on partitions whose m-core is empty.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use serde::Serialize;

use crate::alcove::{chi_at_ap, enumerate_dominant};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rootsys::{build_root_system, Family, Weight};

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `q_i = lambda_i + ... + lambda_{m-1}`.
pub fn weight_to_partition(w: &Weight, m: usize) -> Result<Partition> {
    if w.coords.len() + 1 != m {
        return Err(Error::RankMismatch {
            got: w.coords.len(),
            rank: m.saturating_sub(1),
        });
    }
    if !w.is_dominant() {
        return Err(Error::NotDominant(w.coords.clone()));
    }
    let mut parts = Vec::with_capacity(m - 1);
    let mut acc = 0u32;
    for &c in w.coords.iter().rev() {
        acc += c as u32;
        parts.push(acc);
    }
    Ok(Partition::new(parts))
}

pub fn partition_to_weight(p: &Partition, m: usize) -> Result<Weight> {
    if p.num_parts() > m - 1 {
        return Err(Error::TooManyParts {
            parts: p.num_parts(),
            max: m - 1,
        });
    }
    let q = |i: usize| p.parts.get(i).copied().unwrap_or(0) as i64;
    Ok(Weight::new((0..m - 1).map(|i| q(i) - q(i + 1)).collect()))
}

/// Beta-numbers `q_i + L - i` (1-based `i`) for a set of length `L`, where
/// `L` is the part count padded up to a positive multiple of `m`.
fn beta_set(p: &Partition, m: usize) -> (BTreeSet<u64>, usize) {
    let len = p.num_parts().max(1).div_ceil(m) * m;
    let set = (0..len)
        .map(|i| p.parts.get(i).copied().unwrap_or(0) as u64 + (len - 1 - i) as u64)
        .collect();
    (set, len)
}

fn from_beta_set(set: &BTreeSet<u64>) -> Partition {
    let len = set.len() as u64;
    Partition::new(
        set.iter()
            .rev()
            .enumerate()
            .map(|(i, &b)| (b + 1 + i as u64 - len) as u32)
            .collect(),
    )
}

/// Removes rim m-hooks until none is left; `pick(n)` chooses which of the
/// `n` currently removable beta-numbers (ascending) to move next.
pub fn m_core_by<F>(p: &Partition, m: usize, mut pick: F) -> Partition
where
    F: FnMut(usize) -> usize,
{
    assert!(m >= 2, "m-cores need m >= 2");
    let (mut set, _) = beta_set(p, m);
    let m = m as u64;
    loop {
        let movable: Vec<u64> = set
            .iter()
            .copied()
            .filter(|&b| b >= m && !set.contains(&(b - m)))
            .collect();
        if movable.is_empty() {
            break;
        }
        let b = movable[pick(movable.len()) % movable.len()];
        set.remove(&b);
        set.insert(b - m);
    }
    from_beta_set(&set)
}

pub fn m_core(p: &Partition, m: usize) -> Partition {
    m_core_by(p, m, |_| 0)
}

pub fn has_null_core(p: &Partition, m: usize) -> bool {
    m_core(p, m).is_empty()
}

/// Partitions of `n` into at most `max_parts` parts, in reverse
/// lexicographic order.
pub fn partitions_with_parts(n: u32, max_parts: usize) -> Vec<Partition> {
    fn rec(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n` into at most `k` parts, by the usual
/// recurrence; used to size enumerations before running them.
fn count_partitions(n: usize, k: usize) -> u128 {
    // parts of size <= k, which by conjugation is the same count
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for j in 1..=k {
        for t in j..=n {
            p[t] = p[t].saturating_add(p[t - j]);
        }
    }
    p[n]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NullCoreCount {
    pub m: usize,
    pub k: usize,
    pub count: u64,
    /// `binomial(m + k - 2, m - 2)`.
    pub expected: String,
}

impl NullCoreCount {
    pub fn matches(&self) -> bool {
        self.count.to_string() == self.expected
    }
}

/// Counts partitions of `m k` with at most `m - 1` parts and empty m-core.
pub fn count_null_cores(m: usize, k: usize, limits: &Limits) -> Result<NullCoreCount> {
    if m < 2 {
        return Err(Error::Unsupported(format!("m-cores need m >= 2, got {m}")));
    }
    let n = m * k;
    limits.guard(
        "partitions to scan",
        count_partitions(n, m - 1),
        limits.max_candidates,
    )?;
    let count = partitions_with_parts(n as u32, m - 1)
        .iter()
        .filter(|p| has_null_core(p, m))
        .count() as u64;
    let expected: BigInt = binomial(BigInt::from(m + k - 2), BigInt::from(m - 2));
    Ok(NullCoreCount {
        m,
        k,
        count,
        expected: expected.to_string(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CorrespondenceRow {
    pub length: u32,
    pub lambda: Vec<i64>,
    pub partition: Partition,
    pub size: u64,
    pub null_core: bool,
    pub chi: i8,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorrespondenceReport {
    pub m: usize,
    pub max_length: u32,
    pub rows: Vec<CorrespondenceRow>,
    /// Rows whose partition has a nonempty m-core.
    pub non_null: Vec<usize>,
    /// Pairs of rows with the same partition.
    pub duplicates: Vec<(usize, usize)>,
    /// Rows whose size is not a multiple of `m`.
    pub bad_sizes: Vec<usize>,
    /// Rows with `chi_lambda(a_P) != (-1)^length`.
    pub sign_mismatches: Vec<usize>,
    /// Largest size surveyed for partitions not reached by any row.
    pub survey_size: u64,
    /// Null-core partitions (at most `m - 1` parts) of size at most
    /// `survey_size` that no row produced. Informational only.
    pub unmatched: Vec<Partition>,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.non_null.is_empty()
            && self.duplicates.is_empty()
            && self.bad_sizes.is_empty()
            && self.sign_mismatches.is_empty()
    }
}

/// Maps every dominant alcove of `A_{m-1}` up to `max_length` to the
/// partition of `lambda^sigma` and checks it has null m-core, that the map
/// is injective, and that the character sign is `(-1)^length`.
pub fn verify_alcove_cores(m: usize, max_length: u32, limits: &Limits) -> Result<CorrespondenceReport> {
    if m < 2 {
        return Err(Error::Unsupported(format!("m-cores need m >= 2, got {m}")));
    }
    limits.guard("alcove length", max_length as u128, limits.max_length as u128)?;
    let rs = build_root_system(Family::A, m - 1)?;
    let mut rows = Vec::new();
    for e in enumerate_dominant(&rs, max_length) {
        let partition = weight_to_partition(e.lambda(), m)?;
        rows.push(CorrespondenceRow {
            length: e.length(),
            lambda: e.lambda().coords.clone(),
            size: partition.size(),
            null_core: has_null_core(&partition, m),
            chi: chi_at_ap(&rs, e.lambda())?,
            partition,
        });
    }
    let non_null = (0..rows.len()).filter(|&i| !rows[i].null_core).collect();
    let bad_sizes = (0..rows.len())
        .filter(|&i| rows[i].size % m as u64 != 0)
        .collect();
    let sign_mismatches = (0..rows.len())
        .filter(|&i| {
            let want = if rows[i].length % 2 == 0 { 1 } else { -1 };
            rows[i].chi != want
        })
        .collect();
    let mut duplicates = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if rows[i].partition == rows[j].partition {
                duplicates.push((i, j));
            }
        }
    }

    let survey_size = m as u64 * max_length as u64;
    let hit: HashSet<&Partition> = rows.iter().map(|r| &r.partition).collect();
    let mut unmatched = Vec::new();
    for k in 0..=max_length as u64 {
        let n = k * m as u64;
        limits.guard(
            "partitions to survey",
            count_partitions(n as usize, m - 1),
            limits.max_candidates,
        )?;
        for p in partitions_with_parts(n as u32, m - 1) {
            if !hit.contains(&p) && has_null_core(&p, m) {
                unmatched.push(p);
            }
        }
    }
    Ok(CorrespondenceReport {
        m,
        max_length,
        rows,
        non_null,
        duplicates,
        bad_sizes,
        sign_mismatches,
        survey_size,
        unmatched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(xs: &[u32]) -> Partition {
        Partition::new(xs.to_vec())
    }

    #[test]
    fn weight_partition_examples() {
        assert_eq!(weight_to_partition(&Weight::zero(2), 3).unwrap(), Partition::empty());
        assert_eq!(weight_to_partition(&Weight::new(vec![1, 1]), 3).unwrap(), part(&[2, 1]));
        assert_eq!(weight_to_partition(&Weight::new(vec![3, 0]), 3).unwrap(), part(&[3]));
        assert_eq!(
            partition_to_weight(&part(&[3, 2, 1]), 3),
            Err(Error::TooManyParts { parts: 3, max: 2 })
        );
        assert!(weight_to_partition(&Weight::new(vec![1, -1]), 3).is_err());
    }

    #[test]
    fn core_examples() {
        assert_eq!(m_core(&Partition::empty(), 3), Partition::empty());
        assert_eq!(m_core(&part(&[3]), 3), Partition::empty());
        assert_eq!(m_core(&part(&[2, 1]), 3), Partition::empty());
        assert_eq!(m_core(&part(&[1]), 3), part(&[1]));
        assert_eq!(m_core(&part(&[3, 1]), 2), Partition::empty());
        assert_eq!(m_core(&part(&[2, 1]), 2), part(&[2, 1]));
        // no hook of length 3 anywhere: 5,4,2,1 / 2,1
        assert_eq!(m_core(&part(&[4, 2]), 3), part(&[4, 2]));
        assert_eq!(m_core(&part(&[3, 3]), 3), Partition::empty());
    }

    #[test]
    fn null_core_counts() {
        let lim = Limits::default();
        for m in 2..=6 {
            assert_eq!(count_null_cores(m, 0, &lim).unwrap().count, 1);
            for k in 0..=4 {
                let c = count_null_cores(m, k, &lim).unwrap();
                assert!(c.matches(), "m={m} k={k}: {c:?}");
            }
        }
        assert_eq!(count_null_cores(3, 1, &lim).unwrap().count, 2);
        assert_eq!(count_null_cores(5, 1, &lim).unwrap().count, 4);
        let tight = Limits {
            max_candidates: 3,
            ..Limits::default()
        };
        assert!(matches!(
            count_null_cores(4, 3, &tight),
            Err(Error::ScaleExceeded { .. })
        ));
    }

    #[test]
    fn alcove_cores_small() {
        let lim = Limits::default();
        let r = verify_alcove_cores(3, 1, &lim).unwrap();
        assert!(r.passed());
        assert_eq!(r.rows[0].partition, Partition::empty());
        assert_eq!(r.rows[1].partition, part(&[2, 1]));
        for m in 3..=5 {
            let r = verify_alcove_cores(m, 6, &lim).unwrap();
            assert!(r.passed(), "m = {m}");
        }
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_with_parts(5, 4).len(), 6);
        assert_eq!(count_partitions(5, 4), 6);
        assert_eq!(partitions_with_parts(10, 3).len() as u128, count_partitions(10, 3));
    }

    proptest! {
        #[test]
        fn weight_round_trip(m in 2usize..=6, coords in proptest::collection::vec(0i64..=5, 5)) {
            let w = Weight::new(coords[..m - 1].to_vec());
            let p = weight_to_partition(&w, m).unwrap();
            prop_assert!(p.num_parts() < m);
            prop_assert_eq!(partition_to_weight(&p, m).unwrap(), w);
        }

        #[test]
        fn core_is_order_independent(
            parts in proptest::collection::vec(1u32..=9, 0..7),
            m in 2usize..=5,
            picks in proptest::collection::vec(0usize..100, 64),
        ) {
            let p = Partition::new(parts);
            let canonical = m_core(&p, m);
            let mut it = picks.into_iter().cycle();
            let shuffled = m_core_by(&p, m, |_| it.next().unwrap());
            prop_assert_eq!(&shuffled, &canonical);
            prop_assert_eq!(m_core(&canonical, m), canonical.clone());
            prop_assert_eq!((p.size() - canonical.size()) % m as u64, 0);
        }
    }
}
