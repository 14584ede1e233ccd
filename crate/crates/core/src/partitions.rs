//! Fixed-length partitions, dominance order and the staircase shift.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing vector of nonnegative parts with fixed length `n`
/// (trailing zeros are kept).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("length must be at least 1".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn zero(n: usize) -> Self {
        Partition(vec![0; n])
    }

    /// Parses `"2,1,0"`; unsorted input is rejected, not sorted.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 1-based index and `λ_{n+1} = 0`.
    pub fn part(&self, i: usize) -> u32 {
        assert!(i >= 1, "parts are 1-indexed");
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ_{i,j} = λ_i − λ_j` (1-based, `λ_{n+1} = 0`).
    pub fn diff(&self, i: usize, j: usize) -> i64 {
        self.part(i) as i64 - self.part(j) as i64
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Drops the last part (which the caller expects to be zero).
    pub fn truncate_last(&self) -> Partition {
        Partition(self.0[..self.0.len() - 1].to_vec())
    }

    /// Appends a zero part.
    pub fn append_zero(&self) -> Partition {
        let mut v = self.0.clone();
        v.push(0);
        Partition(v)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

pub fn weight(lambda: &Partition) -> u32 {
    lambda.weight()
}

/// `μ ⪯ λ`: equal weight and every prefix sum of `μ` bounded by that of `λ`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.len() != lambda.len() {
        return Err(Error::InvalidPartition(format!(
            "length mismatch {} vs {}",
            mu.len(),
            lambda.len()
        )));
    }
    if mu.weight() != lambda.weight() {
        return Ok(false);
    }
    let (mut a, mut b) = (0u32, 0u32);
    for (m, l) in mu.parts().iter().zip(lambda.parts()) {
        a += m;
        b += l;
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strictly decreasing `μ = λ + δ`, `δ = (n−1, …, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ShiftedPartition(Vec<u32>);

impl ShiftedPartition {
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }
}

pub fn staircase_shift(lambda: &Partition) -> ShiftedPartition {
    let n = lambda.len() as u32;
    ShiftedPartition(
        lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &l)| l + n - 1 - i as u32)
            .collect(),
    )
}

/// All length-`n` partitions of weight `≤ max_weight`, ordered by weight and
/// then reverse-lexicographically.
pub fn enumerate_partitions(max_weight: u32, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        let mut cur = Vec::with_capacity(n);
        fill(w, n, w, &mut cur, &mut out);
    }
    out
}

fn fill(remaining: u32, slots: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if slots == 0 {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
        }
        return;
    }
    if remaining > cap.saturating_mul(slots as u32) {
        return;
    }
    for p in (0..=cap.min(remaining)).rev() {
        cur.push(p);
        fill(remaining - p, slots - 1, p, cur, out);
        cur.pop();
    }
}

/// Partitions of exactly weight `w` with length `n`.
pub fn partitions_of(w: u32, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    fill(w, n, w, &mut Vec::with_capacity(n), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&p(&[2, 1, 0])), 3);
        assert_eq!(weight(&p(&[0, 0])), 0);
        assert_eq!(weight(&p(&[3, 3, 1])), 7);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[1, 1, 1]), &p(&[3, 0, 0])).unwrap());
        assert!(dominance_leq(&p(&[2, 1]), &p(&[2, 1])).unwrap());
        assert!(dominance_leq(&p(&[2, 2, 0]), &p(&[3, 1, 0])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1, 0]), &p(&[2, 2, 0])).unwrap());
        assert!(dominance_leq(&p(&[2, 1]), &p(&[2, 1, 0])).is_err());
    }

    #[test]
    fn shifts() {
        assert_eq!(staircase_shift(&p(&[1, 0])).parts(), &[2, 0]);
        assert_eq!(staircase_shift(&p(&[0, 0, 0])).parts(), &[2, 1, 0]);
        assert_eq!(staircase_shift(&p(&[2, 1, 0])).parts(), &[4, 2, 0]);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(1, 2), vec![p(&[0, 0]), p(&[1, 0])]);
        assert_eq!(
            enumerate_partitions(2, 2),
            vec![p(&[0, 0]), p(&[1, 0]), p(&[2, 0]), p(&[1, 1])]
        );
    }

    #[test]
    fn enumeration_count_matches_brute_force() {
        // brute force: every vector in [0, w]^n that is weakly decreasing
        fn brute(max_w: u32, n: usize) -> usize {
            let mut count = 0;
            let total = (max_w as usize + 1).pow(n as u32);
            for code in 0..total {
                let mut v = Vec::with_capacity(n);
                let mut c = code;
                for _ in 0..n {
                    v.push((c % (max_w as usize + 1)) as u32);
                    c /= max_w as usize + 1;
                }
                if v.windows(2).all(|w| w[0] >= w[1]) && v.iter().sum::<u32>() <= max_w {
                    count += 1;
                }
            }
            count
        }
        assert_eq!(brute(4, 3), 11);
        assert_eq!(enumerate_partitions(4, 3).len(), 11);
        for (w, n) in [(5, 2), (6, 4), (3, 1)] {
            assert_eq!(enumerate_partitions(w, n).len(), brute(w, n));
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(Partition::parse("2,1,0").unwrap(), p(&[2, 1, 0]));
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("a").is_err());
        assert_eq!(p(&[3, 1]).part(3), 0);
        assert_eq!(p(&[3, 1]).diff(1, 2), 2);
        assert_eq!(p(&[3, 1]).diff(2, 3), 1);
    }

    #[test]
    fn json_form() {
        assert_eq!(serde_json::to_string(&p(&[2, 1, 0])).unwrap(), "[2,1,0]");
        let back: Partition = serde_json::from_str("[2,1,0]").unwrap();
        assert_eq!(back, p(&[2, 1, 0]));
        assert!(serde_json::from_str::<Partition>("[0,1]").is_err());
    }
}
