//! Morphisms of embeddings and the quotients `Hom(M, P_ℓ^m) / Im Hom(M, g_ℓ^m)`
//! and `Hom(P_q^m, M) / Im Hom(h_q^m, M)`.
//!
//! A morphism `(A ⊆ B) -> (A' ⊆ B')` is a matrix `F` on ambient coordinates.
//! R-linearity forces `F_ij ∈ p^{max(0, β'_i - β_j)} Z/p^{β'_i}`, so the
//! R-module `Hom_R(B, B')` is parametrized by `t_ij ∈ Z/p^{min(β'_i, β_j)}`
//! through `F_ij = p^{max(0, β'_i - β_j)} t_ij`. Preserving the submodule
//! is then a linear condition on `t`, and every Hom group in this module is
//! a kernel computed by one Smith normal form.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::embedding::{construct_a, construct_c, make_g, make_h, Embedding, EmbeddingError, Picket};
use crate::module::{hom_length, kernel, quotient, Quotient};
use crate::random::SplitMix64;
use crate::ring::{Matrix, RingCtx};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("embedding is not in S({n}): largest part is {largest}")]
    NotInSn { n: u32, largest: u32 },
    #[error("routes disagree at ({index}, {m}): {routes:?}")]
    RouteDisagreement { index: u32, m: u32, routes: Vec<(Route, u32)> },
    #[error("composite map does not lie in the Hom group it should")]
    ImageNotContained,
    #[error("quotient at ({index}, {m}) is not killed by p")]
    NotElementary { index: u32, m: u32 },
}

/// `Hom_R(⊕ Z/p^{src}, ⊕ Z/p^{tgt})` with its parametrization.
#[derive(Clone, Debug)]
pub struct HomGroup {
    ctx: RingCtx,
    src: Vec<u32>,
    tgt: Vec<u32>,
    exps: Vec<u32>,
    shifts: Vec<u32>,
}

impl HomGroup {
    pub fn new(p: u64, src: &[u32], tgt: &[u32]) -> Self {
        let ctx = RingCtx::for_exponents(p, src.iter().chain(tgt).copied())
            .expect("exponents come from valid embeddings");
        let mut exps = Vec::with_capacity(src.len() * tgt.len());
        let mut shifts = Vec::with_capacity(src.len() * tgt.len());
        for &bi in tgt {
            for &bj in src {
                exps.push(bi.min(bj));
                shifts.push(bi.saturating_sub(bj));
            }
        }
        HomGroup { ctx, src: src.to_vec(), tgt: tgt.to_vec(), exps, shifts }
    }

    pub fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    /// Exponents of the parameter module.
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn length(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn matrix(&self, params: &[u64]) -> Matrix {
        let n = self.src.len();
        let mut f = Matrix::zeros(self.tgt.len(), n);
        for i in 0..self.tgt.len() {
            for j in 0..n {
                let k = i * n + j;
                let v = self.ctx.mul(params[k], self.ctx.pow_mod(self.shifts[k]));
                f[(i, j)] = v % self.ctx.pow(self.tgt[i]);
            }
        }
        f
    }

    /// Parameters of an R-linear map; panics if `f` is not R-linear.
    pub fn params(&self, f: &Matrix) -> Vec<u64> {
        let n = self.src.len();
        assert_eq!((f.rows(), f.cols()), (self.tgt.len(), n), "map shape");
        let mut t = Vec::with_capacity(self.exps.len());
        for i in 0..self.tgt.len() {
            for j in 0..n {
                let k = i * n + j;
                let v = f[(i, j)] % self.ctx.pow(self.tgt[i]);
                let d = self.ctx.pow(self.shifts[k]);
                assert_eq!(v % d, 0, "map is not R-linear at ({i}, {j})");
                t.push((v / d) % self.ctx.pow(self.exps[k]));
            }
        }
        t
    }

    fn param_columns(&self, maps: &[Matrix]) -> Matrix {
        let cols: Vec<Vec<u64>> = maps.iter().map(|f| self.params(f)).collect();
        Matrix::from_columns(self.exps.len(), &cols)
    }

    /// Quotient of the whole group by the span of `maps`.
    pub fn quotient_by(&self, maps: &[Matrix]) -> Quotient {
        quotient(&self.ctx, &self.exps, &self.param_columns(maps))
    }

    pub fn span_length(&self, maps: &[Matrix]) -> u32 {
        self.length() - self.quotient_by(maps).ty.weight()
    }

    pub fn in_span(&self, maps: &[Matrix], f: &Matrix) -> bool {
        let q = self.quotient_by(maps);
        is_zero(&q.apply(&self.ctx, &self.params(f)))
    }

    /// `left ∘ right`, reduced into the target coordinates.
    pub fn compose(&self, left: &Matrix, right: &Matrix) -> Matrix {
        let mut f = left.mul(&self.ctx, right);
        f.reduce_rows(&self.ctx, &self.tgt);
        f
    }
}

fn is_zero(v: &[u64]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// A subgroup of `Hom_R(B, B')` with explicit generators.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub group: HomGroup,
    pub gens: Vec<Matrix>,
    pub length: u32,
}

impl HomSpace {
    fn from_param_kernel(group: HomGroup, kernel_cols: &Matrix) -> Self {
        let gens: Vec<Matrix> = kernel_cols.columns().iter().map(|t| group.matrix(t)).collect();
        let length = group.span_length(&gens);
        HomSpace { group, gens, length }
    }

    pub fn contains(&self, f: &Matrix) -> bool {
        self.group.in_span(&self.gens, f)
    }
}

/// `Hom_S(source, target)`: ambient maps carrying the source submodule into
/// the target submodule.
pub fn hom_space(source: &Embedding, target: &Embedding) -> HomSpace {
    let group = HomGroup::new(source.p(), source.exps(), target.exps());
    let ctx = *group.ctx();
    let qt = target.quotient_by_power(0);
    let n = source.exps().len();
    let gens = source.gens();
    let mut cod = Vec::new();
    let mut rows = Vec::new();
    for g in 0..gens.cols() {
        for c in 0..qt.ty.len() {
            let mut row = vec![0u64; group.exps.len()];
            for i in 0..target.exps().len() {
                for j in 0..n {
                    let k = i * n + j;
                    let v = ctx.mul(qt.map[(c, i)], ctx.pow_mod(group.shifts[k]));
                    row[k] = ctx.mul(v, gens[(j, g)]);
                }
            }
            rows.push(row);
            cod.push(qt.ty.part(c));
        }
    }
    let phi = Matrix::from_rows_with_cols(&rows, group.exps.len());
    let k = kernel(&ctx, &group.exps.clone(), &cod, &phi);
    HomSpace::from_param_kernel(group, &k)
}

/// `Hom_S(M, P_ℓ^m) = Hom_R(B / p^ℓ A, P^m)`, generated by the standard maps
/// out of the quotient pulled back to `B`.
pub fn hom_to_picket(m_emb: &Embedding, ell: u32, m: u32) -> HomSpace {
    assert!(ell <= m, "hom_to_picket needs ell <= m");
    let group = HomGroup::new(m_emb.p(), m_emb.exps(), &[m]);
    if m == 0 {
        return HomSpace { group, gens: Vec::new(), length: 0 };
    }
    let ctx = *group.ctx();
    let x = m_emb.quotient_by_power(ell);
    let gens: Vec<Matrix> = (0..x.ty.len())
        .map(|c| {
            let shift = ctx.pow_mod(m.saturating_sub(x.ty.part(c)));
            let row: Vec<u64> =
                x.map.row(c).iter().map(|&v| ctx.mul(v, shift) % ctx.pow(m)).collect();
            Matrix::from_rows_with_cols(&[row], m_emb.exps().len())
        })
        .collect();
    HomSpace { group, gens, length: hom_length(&x.ty, m) }
}

/// `Hom_S(P_q^m, M)`: images `b` of the cyclic generator with `p^m b = 0` and
/// `p^{m-q} b ∈ A`.
pub fn hom_from_picket(q: u32, m: u32, m_emb: &Embedding) -> HomSpace {
    assert!(q <= m, "hom_from_picket needs q <= m");
    let group = HomGroup::new(m_emb.p(), &[m], m_emb.exps());
    if m == 0 {
        return HomSpace { group, gens: Vec::new(), length: 0 };
    }
    let ctx = *group.ctx();
    let qa = m_emb.quotient_by_power(0);
    let lift = ctx.pow_mod(m - q);
    let rows: Vec<Vec<u64>> = (0..qa.ty.len())
        .map(|c| {
            (0..m_emb.exps().len())
                .map(|i| {
                    let v = ctx.mul(qa.map[(c, i)], ctx.pow_mod(group.shifts[i]));
                    ctx.mul(v, lift)
                })
                .collect()
        })
        .collect();
    let phi = Matrix::from_rows_with_cols(&rows, group.exps.len());
    let k = kernel(&ctx, &group.exps.clone(), qa.ty.parts(), &phi);
    HomSpace::from_param_kernel(group, &k)
}

/// Dimension of `space / <image>`, checking that the image lies inside and
/// that the quotient is killed by `p`.
fn cokernel_dim(space: &HomSpace, image: &[Matrix], index: u32, m: u32) -> Result<u32, HomError> {
    let g = &space.group;
    let q_space = g.quotient_by(&space.gens);
    for f in image {
        if !is_zero(&q_space.apply(g.ctx(), &g.params(f))) {
            return Err(HomError::ImageNotContained);
        }
    }
    let q_image = g.quotient_by(image);
    let p = g.ctx().p();
    for h in &space.gens {
        let ph = h.scale(g.ctx(), p);
        if !is_zero(&q_image.apply(g.ctx(), &g.params(&ph))) {
            return Err(HomError::NotElementary { index, m });
        }
    }
    Ok(space.length - (g.length() - q_image.ty.weight()))
}

/// `Im Hom_S(M, g_ℓ^m)` as maps `B -> P^m`.
pub fn image_through_g(m_emb: &Embedding, ell: u32, m: u32) -> Result<Vec<Matrix>, HomError> {
    let g = make_g(m_emb.p(), ell, m)?;
    let src = g.source_embedding(m_emb.p());
    let through = hom_space(m_emb, &src);
    let group = HomGroup::new(m_emb.p(), m_emb.exps(), &[m]);
    Ok(through.gens.iter().map(|f| group.compose(&g.matrix, f)).collect())
}

/// `Im Hom_S(h_q^m, M)` as maps `P^m -> B`.
pub fn image_through_h(q: u32, m: u32, m_emb: &Embedding) -> Result<Vec<Matrix>, HomError> {
    let h = make_h(q, m)?;
    let tgt = h.target_embedding(m_emb.p());
    let through = hom_space(&tgt, m_emb);
    let group = HomGroup::new(m_emb.p(), &[m], m_emb.exps());
    Ok(through.gens.iter().map(|f| group.compose(f, &h.matrix)).collect())
}

/// Maps `M -> P_ℓ^m` that factor through one of the inclusions
/// `P_a^b -> P_ℓ^m` (multiplication by `p^{m-b}`).
pub fn image_through_inclusions(
    m_emb: &Embedding,
    m: u32,
    inclusions: &[Picket],
) -> Vec<Matrix> {
    let group = HomGroup::new(m_emb.p(), m_emb.exps(), &[m]);
    let mut out = Vec::new();
    for pk in inclusions {
        assert!(pk.m <= m);
        let Ok(src) = pk.to_embedding(m_emb.p()) else { continue };
        if pk.m == 0 {
            continue;
        }
        let incl = Matrix::from_rows(&[vec![group.ctx().pow_mod(m - pk.m)]]);
        for f in hom_space(m_emb, &src).gens {
            out.push(group.compose(&incl, &f));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Route {
    /// Box count read off the LR-tableau.
    Tableau,
    /// Alternating sum of Hom lengths into `P^m`, `P^{m-1}`.
    Formula,
    /// Multiplicity of `P_1^m` in the reduced embedding.
    Subfactor,
    /// Cokernel of composition with the sink/source map.
    Oracle,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Route::Tableau => "tableau",
            Route::Formula => "formula",
            Route::Subfactor => "subfactor",
            Route::Oracle => "oracle",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    /// `ℓ` for maps into pickets, `q` for maps out of them.
    pub index: u32,
    pub m: u32,
    pub dim: u32,
    pub routes: Vec<(Route, u32)>,
}

impl QuotientReport {
    fn agreed(index: u32, m: u32, routes: Vec<(Route, u32)>) -> Result<Self, HomError> {
        let dim = routes[0].1;
        if routes.iter().any(|r| r.1 != dim) {
            return Err(HomError::RouteDisagreement { index, m, routes });
        }
        Ok(QuotientReport { index, m, dim, routes })
    }

    pub fn route(&self, route: Route) -> Option<u32> {
        self.routes.iter().find(|r| r.0 == route).map(|r| r.1)
    }
}

fn check_to_picket_range(ell: u32, m: u32) -> Result<(), HomError> {
    if ell == 0 || ell > m {
        return Err(HomError::IndexOutOfRange(format!("need 1 <= {ell} <= {m}")));
    }
    Ok(())
}

fn picket_multiplicity(pickets: &[Picket], ell: u32, m: u32) -> u32 {
    pickets.iter().filter(|q| q.ell == ell && q.m == m).count() as u32
}

/// One route for `dim Hom(M, P_ℓ^m) / Im Hom(M, g_ℓ^m)`.
pub fn route_to_picket(m_emb: &Embedding, ell: u32, m: u32, route: Route) -> Result<u32, HomError> {
    check_to_picket_range(ell, m)?;
    match route {
        Route::Tableau => Ok(m_emb.lr_tableau().boxes_or_zero(ell as usize, m)),
        Route::Formula => {
            let upper = m_emb.quotient_by_power(ell).ty;
            let lower = m_emb.quotient_by_power(ell - 1).ty;
            let v = if ell < m {
                hom_length(&upper, m) as i64 - hom_length(&upper, m - 1) as i64
                    - hom_length(&lower, m) as i64
                    + hom_length(&lower, m - 1) as i64
            } else {
                hom_length(&upper, m) as i64 - hom_length(&lower, m) as i64
            };
            Ok(u32::try_from(v).expect("box counts are nonnegative"))
        }
        Route::Subfactor => {
            let pickets = m_emb.reduced(ell).decompose_s1()?;
            Ok(picket_multiplicity(&pickets, 1, m))
        }
        Route::Oracle => {
            let space = hom_to_picket(m_emb, ell, m);
            let image = image_through_g(m_emb, ell, m)?;
            cokernel_dim(&space, &image, ell, m)
        }
    }
}

/// All four routes; they must agree.
pub fn quotient_dim_to_picket(m_emb: &Embedding, ell: u32, m: u32) -> Result<QuotientReport, HomError> {
    let routes = [Route::Tableau, Route::Formula, Route::Subfactor, Route::Oracle]
        .into_iter()
        .map(|r| Ok((r, route_to_picket(m_emb, ell, m, r)?)))
        .collect::<Result<Vec<_>, HomError>>()?;
    QuotientReport::agreed(ell, m, routes)
}

/// One route for `dim Hom(P_q^m, M) / Im Hom(h_q^m, M)`. The tableau and
/// subfactor routes read the dual embedding at label `m - q`; for `q = m`
/// only the formula `α'_m` and the oracle apply.
pub fn route_from_picket(
    q: u32,
    m: u32,
    m_emb: &Embedding,
    route: Route,
) -> Result<Option<u32>, HomError> {
    if m == 0 || q > m {
        return Err(HomError::IndexOutOfRange(format!("need 0 <= {q} <= {m}, m >= 1")));
    }
    let ell = m - q;
    Ok(match route {
        Route::Tableau if ell >= 1 => {
            Some(m_emb.dual().lr_tableau().boxes_or_zero(ell as usize, m))
        }
        Route::Subfactor if ell >= 1 => {
            let pickets = m_emb.dual().reduced(ell).decompose_s1()?;
            Some(picket_multiplicity(&pickets, 1, m))
        }
        Route::Formula if ell == 0 => Some(m_emb.alpha().row(m)),
        Route::Oracle => {
            let space = hom_from_picket(q, m, m_emb);
            let image = image_through_h(q, m, m_emb)?;
            Some(cokernel_dim(&space, &image, q, m)?)
        }
        _ => None,
    })
}

pub fn quotient_dim_from_picket(q: u32, m: u32, m_emb: &Embedding) -> Result<QuotientReport, HomError> {
    let mut routes = Vec::new();
    for r in [Route::Tableau, Route::Formula, Route::Subfactor, Route::Oracle] {
        if let Some(v) = route_from_picket(q, m, m_emb, r)? {
            routes.push((r, v));
        }
    }
    QuotientReport::agreed(q, m, routes)
}

/// One verification cell: three independent counts at `(ℓ, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub ell: u32,
    pub m: u32,
    pub count_tableau: u32,
    pub count_subfactor: u32,
    pub count_hom: u32,
}

impl SweepRow {
    pub fn agree(&self) -> bool {
        self.count_tableau == self.count_subfactor && self.count_subfactor == self.count_hom
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Maps into pickets, read on the tableau of `M`.
    IntoPickets,
    /// Maps out of pickets, read on the tableau of the dual.
    FromPickets,
}

/// All cells `1 <= ℓ <= m <= max_m`, sorted by `(ℓ, m)`. For
/// [`Direction::FromPickets`] the cell `(ℓ, m)` uses `q = m - ℓ`.
pub fn sweep(m_emb: &Embedding, direction: Direction, max_m: u32) -> Result<Vec<SweepRow>, HomError> {
    let dual = m_emb.dual();
    let cells: Vec<(u32, u32)> =
        (1..=max_m).flat_map(|m| (1..=m).map(move |ell| (ell, m))).collect();
    let mut rows = cells
        .par_iter()
        .map(|&(ell, m)| -> Result<SweepRow, HomError> {
            let (t, s, h) = match direction {
                Direction::IntoPickets => (
                    route_to_picket(m_emb, ell, m, Route::Tableau)?,
                    route_to_picket(m_emb, ell, m, Route::Subfactor)?,
                    route_to_picket(m_emb, ell, m, Route::Oracle)?,
                ),
                Direction::FromPickets => {
                    let q = m - ell;
                    let t = dual.lr_tableau().boxes_or_zero(ell as usize, m);
                    let s = picket_multiplicity(&dual.reduced(ell).decompose_s1()?, 1, m);
                    let h = route_from_picket(q, m, m_emb, Route::Oracle)?.expect("oracle applies");
                    (t, s, h)
                }
            };
            Ok(SweepRow { ell, m, count_tableau: t, count_subfactor: s, count_hom: h })
        })
        .collect::<Result<Vec<_>, _>>()?;
    rows.sort_by_key(|r| (r.ell, r.m));
    Ok(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// Outcome of a non-degeneracy check of the composition pairing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingReport {
    pub side: Side,
    pub n: u32,
    pub index: u32,
    pub m: u32,
    /// Dimension of the one-dimensional target quotient (should be 1).
    pub target_dim: u32,
    /// Dimension of the quotient whose cosets are tested.
    pub quotient_dim: u32,
    pub cosets_checked: u64,
    pub exhaustive: bool,
    pub failures: u64,
}

impl PairingReport {
    pub fn vacuous(&self) -> bool {
        self.quotient_dim == 0
    }

    pub fn non_degenerate(&self) -> bool {
        self.target_dim == 1 && self.failures == 0
    }
}

/// Largest number of cosets enumerated exhaustively; beyond it a seeded
/// sample of this size is drawn.
pub const MAX_COSETS: u64 = 1 << 10;

/// Elements of `space` whose classes form a basis of `space / <image>`.
fn quotient_basis(space: &HomSpace, image: &[Matrix]) -> Vec<Matrix> {
    let mut span = image.to_vec();
    let mut basis = Vec::new();
    for h in &space.gens {
        if !space.group.in_span(&span, h) {
            span.push(h.clone());
            basis.push(h.clone());
        }
    }
    basis
}

/// Coefficient vectors in `F_p^d \ {0}`, all of them or a seeded sample.
fn coset_coefficients(p: u64, d: u32, seed: u64) -> (Vec<Vec<u64>>, bool) {
    let total = (p as u128).pow(d);
    if total - 1 <= MAX_COSETS as u128 {
        let all = (1..total as u64)
            .map(|mut k| {
                (0..d)
                    .map(|_| {
                        let c = k % p;
                        k /= p;
                        c
                    })
                    .collect()
            })
            .collect();
        (all, true)
    } else {
        let mut rng = SplitMix64::new(seed);
        let mut out = Vec::new();
        while (out.len() as u64) < MAX_COSETS {
            let v: Vec<u64> = (0..d).map(|_| rng.below(p)).collect();
            if v.iter().any(|&c| c != 0) {
                out.push(v);
            }
        }
        (out, false)
    }
}

fn combine(group: &HomGroup, basis: &[Matrix], coeffs: &[u64]) -> Matrix {
    let mut acc = group.matrix(&vec![0; group.exps().len()]);
    for (b, &c) in basis.iter().zip(coeffs) {
        let t = b.scale(group.ctx(), c);
        for i in 0..acc.rows() {
            for j in 0..acc.cols() {
                acc[(i, j)] = group.ctx().add(acc[(i, j)], t[(i, j)]);
            }
        }
    }
    acc.reduce_rows(group.ctx(), &group.tgt);
    acc
}

fn check_sn(m_emb: &Embedding, n: u32) -> Result<(), HomError> {
    if !m_emb.in_s(n) {
        return Err(HomError::NotInSn { n, largest: m_emb.beta().first() });
    }
    Ok(())
}

/// Left non-degeneracy of
/// `Hom(M, P_ℓ^m)/Im × Hom(C_ℓ^m, M) -> Hom(C_ℓ^m, P_ℓ^m)/Im`.
pub fn pairing_left(n: u32, ell: u32, m: u32, m_emb: &Embedding) -> Result<PairingReport, HomError> {
    check_sn(m_emb, n)?;
    if !(1 <= ell && ell <= m && m <= n) {
        return Err(HomError::IndexOutOfRange(format!("need 1 <= {ell} <= {m} <= {n}")));
    }
    let p = m_emb.p();
    let c = construct_c(p, n, ell, m)?;
    let c_space = hom_to_picket(&c, ell, m);
    let c_image = image_through_g(&c, ell, m)?;
    let target_dim = cokernel_dim(&c_space, &c_image, ell, m)?;
    let c_quot = c_space.group.quotient_by(&c_image);

    let space = hom_to_picket(m_emb, ell, m);
    let image = image_through_g(m_emb, ell, m)?;
    let d = cokernel_dim(&space, &image, ell, m)?;
    let basis = quotient_basis(&space, &image);
    assert_eq!(basis.len() as u32, d);
    let maps_in = hom_space(&c, m_emb).gens;

    let (coeffs, exhaustive) = coset_coefficients(p, d, u64::from(ell) << 32 | u64::from(m));
    let mut failures = 0;
    for cv in &coeffs {
        let r = combine(&space.group, &basis, cv);
        let witnessed = maps_in.iter().any(|q| {
            let rq = c_space.group.compose(&r, q);
            !is_zero(&c_quot.apply(c_space.group.ctx(), &c_space.group.params(&rq)))
        });
        if !witnessed {
            failures += 1;
        }
    }
    Ok(PairingReport {
        side: Side::Left,
        n,
        index: ell,
        m,
        target_dim,
        quotient_dim: d,
        cosets_checked: coeffs.len() as u64,
        exhaustive,
        failures,
    })
}

/// Right non-degeneracy of
/// `Hom(M, A_q^m) × Hom(P_q^m, M)/Im -> Hom(P_q^m, A_q^m)/Im`.
pub fn pairing_right(n: u32, q: u32, m: u32, m_emb: &Embedding) -> Result<PairingReport, HomError> {
    check_sn(m_emb, n)?;
    if !(q < m && m <= n) {
        return Err(HomError::IndexOutOfRange(format!("need 0 <= {q} < {m} <= {n}")));
    }
    let p = m_emb.p();
    let a = construct_a(p, n, q, m)?;
    let a_space = hom_from_picket(q, m, &a);
    let a_image = image_through_h(q, m, &a)?;
    let target_dim = cokernel_dim(&a_space, &a_image, q, m)?;
    let a_quot = a_space.group.quotient_by(&a_image);

    let space = hom_from_picket(q, m, m_emb);
    let image = image_through_h(q, m, m_emb)?;
    let d = cokernel_dim(&space, &image, q, m)?;
    let basis = quotient_basis(&space, &image);
    assert_eq!(basis.len() as u32, d);
    let maps_out = hom_space(m_emb, &a).gens;

    let (coeffs, exhaustive) = coset_coefficients(p, d, u64::from(q) << 32 | u64::from(m));
    let mut failures = 0;
    for cv in &coeffs {
        let t = combine(&space.group, &basis, cv);
        let witnessed = maps_out.iter().any(|u| {
            let ut = a_space.group.compose(u, &t);
            !is_zero(&a_quot.apply(a_space.group.ctx(), &a_space.group.params(&ut)))
        });
        if !witnessed {
            failures += 1;
        }
    }
    Ok(PairingReport {
        side: Side::Right,
        n,
        index: q,
        m,
        target_dim,
        quotient_dim: d,
        cosets_checked: coeffs.len() as u64,
        exhaustive,
        failures,
    })
}
