//! Finite-length modules `⊕ Z/p^{e_i}` in explicit coordinates.
//!
//! A vector of exponents `e` describes the module; an element is a vector
//! whose `i`-th entry is read modulo `p^{e_i}`. Submodules are given by
//! generator columns. Everything reduces to Smith normal form over a ring
//! `Z/p^N` whose cap `N` is at least every exponent in play.

use crate::partition::Partition;
use crate::ring::{snf, Matrix, RingCtx};

/// A module of known type in standard coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FLModule {
    ctx: RingCtx,
    ty: Partition,
}

impl FLModule {
    /// Panics if a part exceeds the ring cap.
    pub fn new(ctx: RingCtx, ty: Partition) -> Self {
        assert!(ty.first() <= ctx.cap(), "type {ty} exceeds cap {}", ctx.cap());
        FLModule { ctx, ty }
    }

    pub fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    pub fn ty(&self) -> &Partition {
        &self.ty
    }

    pub fn length(&self) -> u32 {
        self.ty.weight()
    }

    pub fn loewy_length(&self) -> u32 {
        self.ty.first()
    }
}

/// `ambient / <relations>`, relations given as columns.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub ambient: FLModule,
    pub relations: Matrix,
}

/// Type of a quotient plus the surjection onto its standard coordinates.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub ty: Partition,
    /// `ty.len() x r`; row `c` is read modulo `p^{ty_c}`.
    pub map: Matrix,
}

impl Quotient {
    pub fn exps(&self) -> &[u32] {
        self.ty.parts()
    }

    /// Image of a vector in quotient coordinates.
    pub fn apply(&self, ctx: &RingCtx, v: &[u64]) -> Vec<u64> {
        let mut w = self.map.mul_vec(ctx, v);
        for (x, &e) in w.iter_mut().zip(self.ty.parts()) {
            *x %= ctx.pow(e);
        }
        w
    }
}

pub fn type_of_quotient(pr: &Presentation) -> Quotient {
    quotient(pr.ambient.ctx(), pr.ambient.ty().parts(), &pr.relations)
}

/// Quotient of `⊕ Z/p^{exps_i}` by the span of the columns of `relations`.
///
/// Runs SNF on `[diag(p^{exps}) | relations]`; the rows of the left transform
/// with positive valuation form the coordinate map, largest factor first.
pub fn quotient(ctx: &RingCtx, exps: &[u32], relations: &Matrix) -> Quotient {
    let r = exps.len();
    assert_eq!(relations.rows(), r, "relations live in the ambient");
    let diag: Vec<u64> = exps.iter().map(|&e| ctx.pow_mod(e)).collect();
    let full = Matrix::diagonal(&diag).hconcat(relations);
    let res = snf(ctx, &full);
    let mut idx: Vec<usize> = (0..r).filter(|&i| res.diag_valuations[i] > 0).collect();
    idx.sort_by(|&a, &b| res.diag_valuations[b].cmp(&res.diag_valuations[a]));
    let ty = Partition::new(idx.iter().map(|&i| res.diag_valuations[i]).collect())
        .expect("sorted valuations");
    let mut map = res.left.select_rows(&idx);
    map.reduce_rows(ctx, ty.parts());
    Quotient { ty, map }
}

/// Generators (columns) of the kernel of the homomorphism
/// `⊕ Z/p^{dom} -> ⊕ Z/p^{cod}` given by `map` (`cod.len() x dom.len()`).
///
/// The codomain is embedded in `(Z/p^N)^s` by scaling row `c` with
/// `p^{N - cod_c}`, which makes the kernel that of a plain matrix over `Z/p^N`.
pub fn kernel(ctx: &RingCtx, dom: &[u32], cod: &[u32], map: &Matrix) -> Matrix {
    let (s, n) = (cod.len(), dom.len());
    assert_eq!((map.rows(), map.cols()), (s, n), "map shape");
    let mut k = map.clone();
    for (c, &e) in cod.iter().enumerate() {
        let scale = ctx.pow_mod(ctx.cap() - e);
        for j in 0..n {
            k[(c, j)] = ctx.mul(k[(c, j)] % ctx.pow(e), scale);
        }
    }
    let res = snf(ctx, &k);
    let mut gens = Vec::new();
    for i in 0..n {
        let factor = match res.diag_valuations.get(i) {
            Some(&d) => ctx.pow_mod(ctx.cap() - d),
            None => 1,
        };
        if factor == 0 {
            continue;
        }
        let mut col: Vec<u64> = (0..n).map(|row| ctx.mul(res.right[(row, i)], factor)).collect();
        for (x, &e) in col.iter_mut().zip(dom) {
            *x %= ctx.pow(e);
        }
        if col.iter().any(|&x| x != 0) {
            gens.push(col);
        }
    }
    Matrix::from_columns(n, &gens)
}

/// Length of the submodule generated by `gens` inside `⊕ Z/p^{exps}`.
pub fn span_length(ctx: &RingCtx, exps: &[u32], gens: &Matrix) -> u32 {
    exps.iter().sum::<u32>() - quotient(ctx, exps, gens).ty.weight()
}

/// Type of the submodule generated by `gens`.
///
/// Scaling coordinate `i` by `p^{N - exps_i}` embeds the module into
/// `(Z/p^N)^r`; the image of a matrix with SNF valuations `d` is then
/// `⊕ Z/p^{N - d}`.
pub fn span_type(ctx: &RingCtx, exps: &[u32], gens: &Matrix) -> Partition {
    let mut scaled = gens.clone();
    for (i, &e) in exps.iter().enumerate() {
        let f = ctx.pow_mod(ctx.cap() - e);
        for j in 0..gens.cols() {
            scaled[(i, j)] = ctx.mul(scaled[(i, j)], f);
        }
    }
    let res = snf(ctx, &scaled);
    Partition::from_unsorted(res.diag_valuations.iter().map(|&d| ctx.cap() - d).collect())
}

/// Whether `x` lies in the span of `gens`.
pub fn in_span(ctx: &RingCtx, exps: &[u32], gens: &Matrix, x: &[u64]) -> bool {
    let q = quotient(ctx, exps, gens);
    q.apply(ctx, x).iter().all(|&v| v == 0)
}

pub fn reduce_vec(ctx: &RingCtx, exps: &[u32], v: &mut [u64]) {
    for (x, &e) in v.iter_mut().zip(exps) {
        *x %= ctx.pow(e);
    }
}

/// `len Hom_R(M(x), P^m) = Σ min(x_i, m)`.
pub fn hom_length(x: &Partition, m: u32) -> u32 {
    x.parts().iter().map(|&xi| xi.min(m)).sum()
}

/// Row `m` of `x` recovered from Hom lengths into `P^m` and `P^{m-1}`.
pub fn row_via_homs(x: &Partition, m: u32) -> u32 {
    assert!(m >= 1);
    hom_length(x, m) - hom_length(x, m - 1)
}

/// `M(λ)` is identified with its own dual through the pairing
/// `<e_i, e_j> = δ_ij p^{N - λ_i}` into `Z/p^N`.
pub fn dual_coordinates(x: &FLModule) -> FLModule {
    x.clone()
}

pub fn pairing(ctx: &RingCtx, exps: &[u32], x: &[u64], y: &[u64]) -> u64 {
    let mut acc = 0;
    for ((&a, &b), &e) in x.iter().zip(y).zip(exps) {
        let t = ctx.mul(ctx.mul(a, b), ctx.pow_mod(ctx.cap() - e));
        acc = ctx.add(acc, t);
    }
    acc
}

/// Generators of `{y : <g, y> = 0 for every generator g}`.
pub fn annihilator(ctx: &RingCtx, exps: &[u32], gens: &Matrix) -> Matrix {
    let k = gens.cols();
    let mut eval = Matrix::zeros(k, exps.len());
    for g in 0..k {
        for (i, &e) in exps.iter().enumerate() {
            eval[(g, i)] = ctx.mul(gens[(i, g)], ctx.pow_mod(ctx.cap() - e));
        }
    }
    kernel(ctx, exps, &vec![ctx.cap(); k], &eval)
}
