//! Partitions, transposes, containment and horizontal strips.
//!
//! Parts are stored largest first. Diagrams follow the convention where each
//! part is drawn as a column, so "row `m`" of a partition has `transpose[m-1]`
//! boxes. A part index beyond the stored parts reads as zero.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: part {index} is {value} after {previous}")]
    NotDecreasing { index: usize, previous: u32, value: u32 },
    #[error("could not parse partition {0:?}")]
    Parse(String),
    #[error("inner partition is not contained in the outer one at part {index}")]
    NotContained { index: usize },
    #[error("not a horizontal strip: part {index} grows by {diff}")]
    NotHorizontalStrip { index: usize, diff: u32 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Trailing zeros are dropped; any other zero or increase is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for i in 1..parts.len() {
            if parts[i] > parts[i - 1] || parts[i] == 0 {
                return Err(PartitionError::NotDecreasing {
                    index: i + 1,
                    previous: parts[i - 1],
                    value: parts[i],
                });
            }
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary part sizes into a partition, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Zero-based part access with missing parts read as zero.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let n = self.first();
        Partition((1..=n).map(|i| self.0.iter().filter(|&&x| x >= i).count() as u32).collect())
    }

    /// Length of row `m` (one-based), i.e. the number of parts `>= m`.
    pub fn row(&self, m: u32) -> u32 {
        if m == 0 {
            return self.0.len() as u32;
        }
        self.0.iter().filter(|&&x| x >= m).count() as u32
    }

    /// `inner <= self` componentwise.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.0.len() <= self.0.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Accepts `"5,3,1"`, with `""` or `"0"` for the empty partition. Surrounding
/// parentheses or brackets are tolerated.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

/// The skew diagram `outer - inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewStrip {
    outer: Partition,
    inner: Partition,
}

impl SkewStrip {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, PartitionError> {
        for i in 0..inner.len() {
            if inner.part(i) > outer.part(i) {
                return Err(PartitionError::NotContained { index: i + 1 });
            }
        }
        Ok(SkewStrip { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Total number of boxes.
    pub fn size(&self) -> u32 {
        self.outer.weight() - self.inner.weight()
    }

    /// Number of boxes in row `m`.
    pub fn boxes_in_row(&self, m: u32) -> u32 {
        self.outer.row(m) - self.inner.row(m)
    }

    /// Returns the strip length if no part grows by more than one.
    pub fn is_horizontal_strip(&self) -> Result<u32, PartitionError> {
        for i in 0..self.outer.len() {
            let diff = self.outer.part(i) - self.inner.part(i);
            if diff > 1 {
                return Err(PartitionError::NotHorizontalStrip { index: i + 1, diff });
            }
        }
        Ok(self.size())
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
