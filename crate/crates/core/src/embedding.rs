//! Submodule embeddings `(A ⊆ B)` with `B = ⊕ Z/p^{β_i}` in standard
//! coordinates and `A` given by generator columns.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::module::{self, annihilator, quotient, span_type, Quotient};
use crate::partition::Partition;
use crate::ring::{Matrix, RingCtx, RingError};
use crate::tableau::LRTableau;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("generator {generator} has {found} coordinates, expected {expected}")]
    DimensionMismatch { generator: usize, expected: usize, found: usize },
    #[error("generator {generator}, coordinate {coord}: {value} is out of range for p^{exp}")]
    EntryOutOfRange { generator: usize, coord: usize, value: i64, exp: u32 },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("submodule is not semisimple (p·A ≠ 0)")]
    NotSemisimpleSubmodule,
}

#[derive(Clone, Debug)]
struct Derived {
    alpha: Partition,
    gamma: Partition,
    chain: Vec<Partition>,
}

/// An object of the category of embeddings.
#[derive(Clone)]
pub struct Embedding {
    ctx: RingCtx,
    beta: Partition,
    gens: Matrix,
    derived: OnceLock<Derived>,
}

impl PartialEq for Embedding {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.p() == other.ctx.p() && self.beta == other.beta && self.gens == other.gens
    }
}

impl Eq for Embedding {}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Embedding")
            .field("p", &self.ctx.p())
            .field("beta", &self.beta)
            .field("generators", &self.gens.columns())
            .finish()
    }
}

impl Embedding {
    /// Generators are the columns of `gens`; entries must already be reduced
    /// modulo `p^{β_i}`.
    pub fn new(p: u64, beta: Partition, gens: Matrix) -> Result<Self, EmbeddingError> {
        let ctx = RingCtx::for_exponents(p, beta.parts().iter().copied())?;
        if gens.rows() != beta.len() {
            return Err(EmbeddingError::DimensionMismatch {
                generator: 0,
                expected: beta.len(),
                found: gens.rows(),
            });
        }
        for j in 0..gens.cols() {
            for (i, &e) in beta.parts().iter().enumerate() {
                if gens[(i, j)] >= ctx.pow(e) {
                    return Err(EmbeddingError::EntryOutOfRange {
                        generator: j,
                        coord: i,
                        value: gens[(i, j)] as i64,
                        exp: e,
                    });
                }
            }
        }
        Ok(Embedding { ctx, beta, gens, derived: OnceLock::new() })
    }

    /// Generators given as rows of possibly negative integers; each entry
    /// must satisfy `|v| < p^{β_i}` and is reduced into `[0, p^{β_i})`.
    pub fn from_signed_rows(
        p: u64,
        beta: Partition,
        rows: &[Vec<i64>],
    ) -> Result<Self, EmbeddingError> {
        let ctx = RingCtx::for_exponents(p, beta.parts().iter().copied())?;
        let mut cols = Vec::with_capacity(rows.len());
        for (j, row) in rows.iter().enumerate() {
            if row.len() != beta.len() {
                return Err(EmbeddingError::DimensionMismatch {
                    generator: j,
                    expected: beta.len(),
                    found: row.len(),
                });
            }
            let mut col = Vec::with_capacity(row.len());
            for (i, (&v, &e)) in row.iter().zip(beta.parts()).enumerate() {
                let m = ctx.pow(e) as i128;
                if (v as i128).abs() >= m {
                    return Err(EmbeddingError::EntryOutOfRange {
                        generator: j,
                        coord: i,
                        value: v,
                        exp: e,
                    });
                }
                col.push((v as i128).rem_euclid(m) as u64);
            }
            cols.push(col);
        }
        Embedding::new(p, beta.clone(), Matrix::from_columns(beta.len(), &cols))
    }

    fn from_reduced(ctx: &RingCtx, beta: Partition, mut gens: Matrix) -> Self {
        gens.reduce_rows(ctx, beta.parts());
        let ctx = RingCtx::for_exponents(ctx.p(), beta.parts().iter().copied())
            .expect("cap only shrinks");
        Embedding { ctx, beta, gens, derived: OnceLock::new() }
    }

    pub fn p(&self) -> u64 {
        self.ctx.p()
    }

    pub fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn exps(&self) -> &[u32] {
        self.beta.parts()
    }

    /// Generators of `A` as columns.
    pub fn gens(&self) -> &Matrix {
        &self.gens
    }

    /// Generators of `A` as rows, the file layout.
    pub fn generator_rows(&self) -> Vec<Vec<u64>> {
        self.gens.columns()
    }

    fn derived(&self) -> &Derived {
        self.derived.get_or_init(|| {
            let alpha = span_type(&self.ctx, self.exps(), &self.gens);
            let chain: Vec<Partition> =
                (0..=alpha.first()).map(|ell| self.quotient_by_power(ell).ty).collect();
            let gamma = chain[0].clone();
            Derived { alpha, gamma, chain }
        })
    }

    /// `type(A)`.
    pub fn alpha(&self) -> &Partition {
        &self.derived().alpha
    }

    /// `type(B/A)`.
    pub fn gamma(&self) -> &Partition {
        &self.derived().gamma
    }

    /// Loewy length of `A`.
    pub fn s(&self) -> usize {
        self.alpha().first() as usize
    }

    /// `[type(B/p^ℓ A) : 0 <= ℓ <= s]`, before validation.
    pub fn chain(&self) -> &[Partition] {
        &self.derived().chain
    }

    /// The LR-tableau of the embedding.
    ///
    /// Panics if the chain fails validation, which cannot happen for an embedding.
    pub fn lr_tableau(&self) -> LRTableau {
        LRTableau::validate(self.chain().to_vec())
            .unwrap_or_else(|e| panic!("chain of {self:?} is not an LR-tableau: {e}"))
    }

    /// Generators `p^ℓ · g`.
    pub fn scaled_gens(&self, ell: u32) -> Matrix {
        let mut g = self.gens.scale(&self.ctx, self.ctx.pow_mod(ell));
        g.reduce_rows(&self.ctx, self.exps());
        g
    }

    /// `B / p^ℓ A` with its coordinate map.
    pub fn quotient_by_power(&self, ell: u32) -> Quotient {
        quotient(&self.ctx, self.exps(), &self.scaled_gens(ell))
    }

    /// Whether `p^n B = 0`.
    pub fn in_s(&self, n: u32) -> bool {
        self.beta.first() <= n
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        module::in_span(&self.ctx, self.exps(), &self.gens, x)
    }

    /// `(p^{ℓ-1}A / p^ℓ A ⊆ B / p^ℓ A)` for `1 <= ℓ <= s`.
    pub fn subfactor(&self, ell: usize) -> Result<Embedding, EmbeddingError> {
        if ell == 0 || ell > self.s() {
            return Err(EmbeddingError::IndexOutOfRange(format!(
                "subfactor {ell} of an embedding with s = {}",
                self.s()
            )));
        }
        Ok(self.reduced(ell as u32))
    }

    /// The reduced embedding for any `ℓ >= 1`; zero submodule once `ℓ > s`.
    pub fn reduced(&self, ell: u32) -> Embedding {
        assert!(ell >= 1);
        let q = self.quotient_by_power(ell);
        let gens = q.map.mul(&self.ctx, &self.scaled_gens(ell - 1));
        Embedding::from_reduced(&self.ctx, q.ty, gens)
    }

    /// Whether `p·A = 0`.
    pub fn is_semisimple_sub(&self) -> bool {
        let g = self.scaled_gens(1);
        (0..g.rows()).all(|i| g.row(i).iter().all(|&x| x == 0))
    }

    /// Picket decomposition `⊕ P^{β_i}_{β_i - γ_i}` of an object with `p·A = 0`,
    /// largest `m` first.
    pub fn decompose_s1(&self) -> Result<Vec<Picket>, EmbeddingError> {
        if !self.is_semisimple_sub() {
            return Err(EmbeddingError::NotSemisimpleSubmodule);
        }
        let gamma = self.gamma();
        Ok((0..self.beta.len())
            .map(|i| {
                let m = self.beta.part(i);
                let ell = m - gamma.part(i);
                debug_assert!(ell <= 1);
                Picket { ell, m }
            })
            .collect())
    }

    /// `(ann_{B*} A ⊆ B*)`, with `B*` identified with `B` through the standard
    /// pairing.
    pub fn dual(&self) -> Embedding {
        let u = annihilator(&self.ctx, self.exps(), &self.gens);
        Embedding::from_reduced(&self.ctx, self.beta.clone(), u)
    }

    /// Direct sum, with coordinates re-sorted so the ambient type stays a
    /// partition.
    pub fn direct_sum(&self, other: &Embedding) -> Embedding {
        assert_eq!(self.p(), other.p(), "direct sum over different primes");
        let mut exps: Vec<(u32, usize)> = self
            .exps()
            .iter()
            .chain(other.exps())
            .copied()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        exps.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let r1 = self.beta.len();
        let k1 = self.gens.cols();
        let mut gens = Matrix::zeros(exps.len(), k1 + other.gens.cols());
        for (new_i, &(_, old_i)) in exps.iter().enumerate() {
            if old_i < r1 {
                for j in 0..k1 {
                    gens[(new_i, j)] = self.gens[(old_i, j)];
                }
            } else {
                for j in 0..other.gens.cols() {
                    gens[(new_i, k1 + j)] = other.gens[(old_i - r1, j)];
                }
            }
        }
        let beta = Partition::new(exps.iter().map(|e| e.0).collect()).expect("sorted");
        let ctx = RingCtx::for_exponents(self.p(), beta.parts().iter().copied()).expect("fits");
        Embedding::from_reduced(&ctx, beta, gens)
    }
}

/// `P_ℓ^m = ((p^{m-ℓ}) ⊆ Z/p^m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Picket {
    pub ell: u32,
    pub m: u32,
}

impl fmt::Display for Picket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P_{}^{}", self.ell, self.m)
    }
}

impl Picket {
    pub fn new(ell: u32, m: u32) -> Result<Self, EmbeddingError> {
        if ell > m {
            return Err(EmbeddingError::IndexOutOfRange(format!("picket P_{ell}^{m}")));
        }
        Ok(Picket { ell, m })
    }

    pub fn to_embedding(self, p: u64) -> Result<Embedding, EmbeddingError> {
        picket_sum(p, &[self])
    }
}

/// Direct sum of pickets; summands must be listed with `m` weakly decreasing
/// and zero pickets (`m = 0`) are dropped.
pub fn picket_sum(p: u64, pickets: &[Picket]) -> Result<Embedding, EmbeddingError> {
    let pickets: Vec<Picket> = pickets.iter().copied().filter(|q| q.m > 0).collect();
    let beta = Partition::new(pickets.iter().map(|q| q.m).collect())
        .map_err(|e| EmbeddingError::InvalidPartition(e.to_string()))?;
    let ctx = RingCtx::for_exponents(p, beta.parts().iter().copied())?;
    let mut cols = Vec::new();
    for (i, q) in pickets.iter().enumerate() {
        if q.ell > q.m {
            return Err(EmbeddingError::IndexOutOfRange(format!("picket {q}")));
        }
        if q.ell > 0 {
            let mut c = vec![0; pickets.len()];
            c[i] = ctx.pow(q.m - q.ell);
            cols.push(c);
        }
    }
    Embedding::new(p, beta, Matrix::from_columns(pickets.len(), &cols))
}

/// `C_ℓ^m` in `S(n)`: the kernel embedding `(incl, -can)` of
/// `P^{n+ℓ-m}` into `P^n ⊕ P^{ℓ-1}` for `ℓ < m`, and `P_n^n` for `ℓ = m`.
pub fn construct_c(p: u64, n: u32, ell: u32, m: u32) -> Result<Embedding, EmbeddingError> {
    if !(1 <= ell && ell <= m && m <= n) {
        return Err(EmbeddingError::IndexOutOfRange(format!("C needs 1 <= {ell} <= {m} <= {n}")));
    }
    if ell == m {
        return Picket::new(n, n)?.to_embedding(p);
    }
    let beta = Partition::new(vec![n, ell - 1]).expect("n >= ell - 1");
    let row = if ell == 1 {
        vec![(p as i64).pow(m - ell)]
    } else {
        vec![(p as i64).pow(m - ell), -1]
    };
    Embedding::from_signed_rows(p, beta, &[row])
}

/// `A_q^m` in `S(n)`: `P_0^n` for `q = 0`, otherwise the dual of
/// `C_{m-q}^m`.
pub fn construct_a(p: u64, n: u32, q: u32, m: u32) -> Result<Embedding, EmbeddingError> {
    if !(q < m && m <= n) {
        return Err(EmbeddingError::IndexOutOfRange(format!("A needs 0 <= {q} < {m} <= {n}")));
    }
    if q == 0 {
        return Picket::new(0, n)?.to_embedding(p);
    }
    Ok(construct_c(p, n, m - q, m)?.dual())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MorphismKind {
    /// Sink map `g_ℓ^m` into `P_ℓ^m`.
    G,
    /// Source map `h_q^m` out of `P_q^m`.
    H,
}

/// A map between direct sums of pickets whose components are scalars on the
/// cyclic ambient modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicketMorphism {
    pub kind: MorphismKind,
    pub index: u32,
    pub m: u32,
    pub source: Vec<Picket>,
    pub target: Vec<Picket>,
    /// `target.len() x source.len()`.
    pub matrix: Matrix,
}

impl PicketMorphism {
    pub fn source_embedding(&self, p: u64) -> Embedding {
        picket_sum(p, &self.source).expect("summands are sorted")
    }

    pub fn target_embedding(&self, p: u64) -> Embedding {
        picket_sum(p, &self.target).expect("summands are sorted")
    }
}

fn nonzero(pickets: Vec<Picket>) -> Vec<Picket> {
    pickets.into_iter().filter(|q| q.m > 0).collect()
}

/// `g_ℓ^m`: `P_{m-1}^m -> P_m^m` for `ℓ = m`,
/// `P_{ℓ-1}^m ⊕ P_ℓ^{m-1} -> P_ℓ^m` for `1 <= ℓ < m`, and
/// `P_0^{m-1} -> P_0^m` for `ℓ = 0`; every component is an inclusion.
pub fn make_g(p: u64, ell: u32, m: u32) -> Result<PicketMorphism, EmbeddingError> {
    if ell > m || m == 0 {
        return Err(EmbeddingError::IndexOutOfRange(format!("g_{ell}^{m}")));
    }
    let target = vec![Picket { ell, m }];
    let (source, comps) = if ell == m {
        (vec![Picket { ell: m - 1, m }], vec![1])
    } else if ell == 0 {
        (nonzero(vec![Picket { ell: 0, m: m - 1 }]), vec![p])
    } else {
        (vec![Picket { ell: ell - 1, m }, Picket { ell, m: m - 1 }], vec![1, p])
    };
    let comps = &comps[..source.len()];
    Ok(PicketMorphism {
        kind: MorphismKind::G,
        index: ell,
        m,
        matrix: Matrix::from_rows_with_cols(&[comps.to_vec()], source.len()),
        source,
        target,
    })
}

/// `h_q^m`: `P_0^m -> P_1^m` for `q = 0`,
/// `P_q^m -> P_{q+1}^m ⊕ P_{q-1}^{m-1}` for `1 <= q < m`, and
/// `P_m^m -> P_{m-1}^{m-1}` for `q = m`; every component is onto the ambient
/// and onto the factor.
pub fn make_h(q: u32, m: u32) -> Result<PicketMorphism, EmbeddingError> {
    if q > m || m == 0 {
        return Err(EmbeddingError::IndexOutOfRange(format!("h_{q}^{m}")));
    }
    let source = vec![Picket { ell: q, m }];
    let target = if q == 0 {
        vec![Picket { ell: 1, m }]
    } else if q == m {
        nonzero(vec![Picket { ell: m - 1, m: m - 1 }])
    } else {
        vec![Picket { ell: q + 1, m }, Picket { ell: q - 1, m: m - 1 }]
    };
    let rows: Vec<Vec<u64>> = target.iter().map(|_| vec![1]).collect();
    Ok(PicketMorphism {
        kind: MorphismKind::H,
        index: q,
        m,
        matrix: Matrix::from_rows_with_cols(&rows, 1),
        source,
        target,
    })
}
