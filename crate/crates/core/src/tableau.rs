//! LR-tableaux stored as chains of partitions `[γ^0, ..., γ^s]`.
//!
//! The boxes of `γ^ℓ - γ^{ℓ-1}` carry the label `ℓ`. Each step must be a
//! horizontal strip (no part grows by more than one) and consecutive strips
//! must satisfy the lattice permutation property: for `ℓ >= 2` and every `h`,
//! the boxes of strip `ℓ` in parts `>= h` are no more than those of strip
//! `ℓ - 1` in parts `>= h`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{Partition, PartitionError, SkewStrip};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("a tableau needs at least one partition")]
    EmptyChain,
    #[error("step {ell} does not contain the previous partition")]
    NotIncreasing { ell: usize },
    #[error("step {ell} is not a horizontal strip at part {part}")]
    NotHorizontalStrip { ell: usize, part: usize },
    #[error("lattice permutation property fails at step {ell}, part {h}")]
    LatticeViolation { ell: usize, h: usize },
    #[error("step {ell} adds no boxes")]
    EmptyStrip { ell: usize },
    #[error("label {ell} is outside 1..={s}")]
    IndexOutOfRange { ell: usize, s: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct LRTableau {
    chain: Vec<Partition>,
}

fn suffix_sums(outer: &Partition, inner: &Partition) -> Vec<u32> {
    let n = outer.len();
    let mut out = vec![0; n + 1];
    for i in (0..n).rev() {
        out[i] = out[i + 1] + outer.part(i) - inner.part(i);
    }
    out
}

impl LRTableau {
    pub fn validate(chain: Vec<Partition>) -> Result<Self, TableauError> {
        if chain.is_empty() {
            return Err(TableauError::EmptyChain);
        }
        let mut prev_sums: Option<Vec<u32>> = None;
        for ell in 1..chain.len() {
            let (inner, outer) = (&chain[ell - 1], &chain[ell]);
            let strip = SkewStrip::new(outer.clone(), inner.clone())
                .map_err(|_| TableauError::NotIncreasing { ell })?;
            match strip.is_horizontal_strip() {
                Ok(_) => {}
                Err(PartitionError::NotHorizontalStrip { index, .. }) => {
                    return Err(TableauError::NotHorizontalStrip { ell, part: index })
                }
                Err(e) => unreachable!("{e}"),
            }
            let sums = suffix_sums(outer, inner);
            if let Some(prev) = &prev_sums {
                for (h, &s) in sums.iter().enumerate() {
                    if s > prev.get(h).copied().unwrap_or(0) {
                        return Err(TableauError::LatticeViolation { ell, h: h + 1 });
                    }
                }
            }
            if sums[0] == 0 {
                return Err(TableauError::EmptyStrip { ell });
            }
            prev_sums = Some(sums);
        }
        Ok(LRTableau { chain })
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    /// Largest label.
    pub fn s(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn gamma(&self) -> &Partition {
        &self.chain[0]
    }

    pub fn beta(&self) -> &Partition {
        self.chain.last().expect("nonempty chain")
    }

    /// `α` with `α'_ℓ` the size of strip `ℓ`.
    pub fn alpha(&self) -> Partition {
        let dual: Vec<u32> = self
            .chain
            .windows(2)
            .map(|w| w[1].weight() - w[0].weight())
            .collect();
        Partition::new(dual).expect("lattice property keeps strip sizes decreasing").transpose()
    }

    /// Number of boxes labelled `ell` in row `m`; rows past the diagram hold
    /// no boxes.
    pub fn count_boxes(&self, ell: usize, m: u32) -> Result<u32, TableauError> {
        let strip = self.reduce(ell)?;
        Ok(strip.boxes_in_row(m))
    }

    /// Like [`count_boxes`](Self::count_boxes), but labels past `s` count zero.
    pub fn boxes_or_zero(&self, ell: usize, m: u32) -> u32 {
        if ell == 0 || ell > self.s() {
            0
        } else {
            self.chain[ell].row(m) - self.chain[ell - 1].row(m)
        }
    }

    /// The skew strip `[γ^{ℓ-1}, γ^ℓ]`.
    pub fn reduce(&self, ell: usize) -> Result<SkewStrip, TableauError> {
        if ell == 0 || ell > self.s() {
            return Err(TableauError::IndexOutOfRange { ell, s: self.s() });
        }
        Ok(SkewStrip::new(self.chain[ell].clone(), self.chain[ell - 1].clone())
            .expect("validated chain is increasing"))
    }

    /// Label of the box in part `i` (zero-based) at height `r` (one-based);
    /// `Some(0)` for a box of `γ`, `None` outside `β`.
    pub fn label_at(&self, i: usize, r: u32) -> Option<usize> {
        if r == 0 || r > self.beta().part(i) {
            return None;
        }
        self.chain.iter().position(|g| g.part(i) >= r)
    }
}

impl<'de> Deserialize<'de> for LRTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let chain = Vec::<Partition>::deserialize(d)?;
        LRTableau::validate(chain).map_err(serde::de::Error::custom)
    }
}

/// All LR-tableaux of type `(alpha, beta, gamma)` in lexicographic order of
/// their chains.
pub fn enumerate(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Vec<LRTableau> {
    if alpha.weight() + gamma.weight() != beta.weight() || !beta.contains(gamma) {
        return Vec::new();
    }
    let sizes = alpha.transpose();
    let mut out = Vec::new();
    let mut chain = vec![gamma.clone()];
    extend_chain(beta, sizes.parts(), &mut chain, &mut out);
    out.sort();
    out
}

fn extend_chain(
    beta: &Partition,
    sizes: &[u32],
    chain: &mut Vec<Partition>,
    out: &mut Vec<LRTableau>,
) {
    let ell = chain.len();
    if ell > sizes.len() {
        if chain.last() == Some(beta) {
            out.push(LRTableau { chain: chain.clone() });
        }
        return;
    }
    let prev = chain.last().expect("nonempty").clone();
    let bound = if ell >= 2 { Some(suffix_sums(&chain[ell - 1], &chain[ell - 2])) } else { None };
    let mut strips = Vec::new();
    let mut parts: Vec<u32> = (0..beta.len()).map(|i| prev.part(i)).collect();
    choose_strip(beta, &prev, &mut parts, 0, sizes[ell - 1], &mut strips);
    for next in strips {
        if let Some(bound) = &bound {
            let sums = suffix_sums(&next, &prev);
            if sums.iter().enumerate().any(|(h, &s)| s > bound.get(h).copied().unwrap_or(0)) {
                continue;
            }
        }
        chain.push(next);
        extend_chain(beta, sizes, chain, out);
        chain.pop();
    }
}

/// Adds one box to `remaining` distinct parts of `prev`, staying inside `beta`
/// and keeping the parts weakly decreasing.
fn choose_strip(
    beta: &Partition,
    prev: &Partition,
    parts: &mut Vec<u32>,
    i: usize,
    remaining: u32,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::new(parts.clone()).expect("strip keeps parts decreasing"));
        return;
    }
    if i >= parts.len() || (parts.len() - i) < remaining as usize {
        return;
    }
    let grown = prev.part(i) + 1;
    let fits_above = i == 0 || grown <= parts[i - 1];
    if grown <= beta.part(i) && fits_above {
        parts[i] = grown;
        choose_strip(beta, prev, parts, i + 1, remaining - 1, out);
        parts[i] = prev.part(i);
    }
    choose_strip(beta, prev, parts, i + 1, remaining, out);
}

/// The LR-coefficient `c^β_{α,γ}`.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> usize {
    enumerate(alpha, beta, gamma).len()
}
