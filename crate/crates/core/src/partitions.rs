//! Partition combinatorics behind the decomposition of `V ⊗ V*` for GL(n|n).
//!
//! `P(n,n)` is the set of partitions fitting in an `n × n` box. The exterior
//! algebra of `n × n` matrices splits as `⊕ ρ_α ⊠ ρ_{αᵀ}` over `P(n,n)`,
//! and the self-conjugate members of `P(n,n)` label the maximally atypical
//! Kac pieces of `V ⊗ V*`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::par::{self, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition {partition} has more than {n} rows")]
    TooManyRows { partition: Partition, n: usize },
    #[error("not a partition: {0}")]
    NotPartition(String),
}

/// A weakly decreasing list of positive parts; the empty list is `∅`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Partition::new(Vec::<u32>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl Partition {
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
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

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.part(0);
        Partition(
            (0..cols)
                .map(|c| self.0.iter().take_while(|&&p| p > c).count() as u32)
                .collect(),
        )
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.transpose()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn fits_box(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `"2,1"`, `"(2,1)"`, `"[2,1]"`, `""` and `"∅"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| PartitionError::NotPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// All partitions in the `n × n` box, in lexicographic order.
pub fn box_partitions(n: usize) -> Vec<Partition> {
    fn rec(rows_left: usize, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        if rows_left == 0 {
            return;
        }
        for p in 1..=max_part {
            cur.push(p);
            rec(rows_left - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n as u32, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Self-conjugate partitions in the `n × n` box, built from their diagonal
/// hooks: a set of distinct odd hook lengths `2k+1 <= 2n-1` determines the
/// partition, which nests hooks of arm = leg = k along the diagonal.
pub fn self_conjugate_partitions(n: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = (0u64..1 << n)
        .map(|mask| {
            // arms in decreasing order
            let arms: Vec<u32> = (0..n as u32).rev().filter(|k| mask >> k & 1 == 1).collect();
            let d = arms.len();
            let rows: Vec<u32> = (0..n)
                .map(|r| {
                    if r < d {
                        // diagonal cell (r,r) plus `arm` cells to the right
                        r as u32 + 1 + arms[r]
                    } else {
                        // hooks whose leg reaches down to row r
                        arms.iter()
                            .enumerate()
                            .filter(|&(i, &leg)| leg as usize >= r - i)
                            .count() as u32
                    }
                })
                .collect();
            Partition::new(rows).expect("nested hooks form a partition")
        })
        .collect();
    out.sort();
    out
}

pub fn count_self_conjugate(n: usize) -> usize {
    self_conjugate_partitions(n).len()
}

/// Dimension of the irreducible GL(n) representation with highest weight
/// `alpha` (Weyl's formula).
pub fn gl_dim(alpha: &Partition, n: usize) -> Result<BigUint, PartitionError> {
    if alpha.len() > n {
        return Err(PartitionError::TooManyRows {
            partition: alpha.clone(),
            n,
        });
    }
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..n {
        for j in i + 1..n {
            let diff = alpha.part(i) as u64 + (j - i) as u64 - alpha.part(j) as u64;
            num *= diff;
            den *= (j - i) as u64;
        }
    }
    Ok(num / den)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CauchyReport {
    pub n: usize,
    pub pairs: Vec<(Partition, Partition)>,
    pub total: BigUint,
}

impl CauchyReport {
    /// `2^{n²}`, the dimension of the exterior algebra on `n × n` matrices.
    pub fn expected_total(&self) -> BigUint {
        BigUint::from(1u32) << (self.n * self.n)
    }

    pub fn holds(&self) -> bool {
        self.total == self.expected_total()
    }
}

pub fn cauchy_check(n: usize) -> CauchyReport {
    cauchy_check_with(n, Mode::default())
}

pub fn cauchy_check_with(n: usize, mode: Mode) -> CauchyReport {
    let parts = box_partitions(n);
    let terms = par::map(mode, &parts, |a| {
        let t = a.transpose();
        let d = gl_dim(a, n).expect("box partition") * gl_dim(&t, n).expect("box partition");
        ((a.clone(), t), d)
    });
    let total = terms.iter().map(|(_, d)| d).sum();
    CauchyReport {
        n,
        pairs: terms.into_iter().map(|(p, _)| p).collect(),
        total,
    }
}

/// Littlewood–Richardson coefficient `c^ν_{λμ}`: the number of LR tableaux
/// of skew shape `ν/λ` and content `μ`.
pub fn lr_mult(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) {
        return 0;
    }
    let rows = nu.len();
    // cells of ν/λ in reverse reading order: top to bottom, right to left
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| {
            (lambda.part(r) as usize..nu.part(r) as usize)
                .rev()
                .map(move |c| (r, c))
        })
        .collect();
    let mut grid: Vec<Vec<u32>> = (0..rows).map(|r| vec![0; nu.part(r) as usize]).collect();
    let mut count = vec![0u32; mu.len() + 1];
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut [Vec<u32>],
        count: &mut [u32],
        lambda: &Partition,
        mu: &Partition,
    ) -> u64 {
        let Some(&(r, c)) = cells.get(k) else {
            return 1;
        };
        let hi = match grid[r].get(c + 1) {
            Some(&right) if right > 0 => right,
            _ => mu.len() as u32,
        };
        let lo = if r > 0 && c >= lambda.part(r - 1) as usize {
            grid[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi {
            let vi = v as usize;
            if count[vi] >= mu.part(vi - 1) || (vi > 1 && count[vi] + 1 > count[vi - 1]) {
                continue;
            }
            count[vi] += 1;
            grid[r][c] = v;
            total += fill(k + 1, cells, grid, count, lambda, mu);
            grid[r][c] = 0;
            count[vi] -= 1;
        }
        total
    }
    fill(0, &cells, &mut grid, &mut count, lambda, mu)
}

/// All `ν` with nonzero `c^ν_{λμ}` and their coefficients.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> Vec<(Partition, u64)> {
    let size = (lambda.size() + mu.size()) as usize;
    partitions_of(size)
        .into_iter()
        .filter(|nu| nu.len() <= lambda.len() + mu.len() && nu.contains(lambda) && nu.contains(mu))
        .filter_map(|nu| {
            let c = lr_mult(lambda, mu, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// All partitions of `k`, in lexicographic order.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn rec(rest: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max_part)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k as u32, k as u32, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// One Kac piece of `V ⊗ V*` for GL(n|n).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VvStarEntry {
    pub alpha: Partition,
    pub transpose: Partition,
    pub is_max_atypical: bool,
    pub degree: i64,
    pub dim: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VvStarFlag {
    pub n: usize,
    pub entries: Vec<VvStarEntry>,
}

impl VvStarFlag {
    pub fn max_atypical(&self) -> impl Iterator<Item = &VvStarEntry> {
        self.entries.iter().filter(|e| e.is_max_atypical)
    }

    pub fn max_atypical_count(&self) -> usize {
        self.max_atypical().count()
    }

    /// Lowest degree among the maximally atypical pieces (the socle side of
    /// `P(Ber^{-n})`).
    pub fn min_max_atypical_degree(&self) -> Option<i64> {
        self.max_atypical().map(|e| e.degree).min()
    }

    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let lo = self.entries.iter().map(|e| e.degree).min()?;
        let hi = self.entries.iter().map(|e| e.degree).max()?;
        Some((lo, hi))
    }
}

/// The Kac flag of `V ⊗ V* = F₀(Ber^{-n})`: one piece per `α ∈ P(n,n)`
/// with even-part weight `-reverse(α) - (n,..,n)` and degree `-n² - |α|`.
pub fn vv_star_flag(n: usize) -> VvStarFlag {
    vv_star_flag_with(n, Mode::default())
}

pub fn vv_star_flag_with(n: usize, mode: Mode) -> VvStarFlag {
    let nn = (n * n) as i64;
    let parts = box_partitions(n);
    let entries = par::map(mode, &parts, |a| {
        let t = a.transpose();
        VvStarEntry {
            is_max_atypical: *a == t,
            degree: -nn - a.size() as i64,
            dim: gl_dim(a, n).expect("box partition") * gl_dim(&t, n).expect("box partition"),
            alpha: a.clone(),
            transpose: t,
        }
    });
    VvStarFlag { n, entries }
}

/// Even-part weights `(0,..,0,-i,..,-i)` of the radical layers of `V(1)`.
pub fn radical_layer_weights(n: usize) -> Vec<Vec<i64>> {
    (0..=n)
        .map(|i| {
            (0..n)
                .map(|k| if k >= n - i { -(i as i64) } else { 0 })
                .collect()
        })
        .collect()
}
