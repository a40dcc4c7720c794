//! Brute-force oracles that work element by element on small groups. None of
//! them touch the Smith normal form.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use picketlab::partition::partitions_of;
use picketlab::random::SplitMix64;
use picketlab::{Embedding, Matrix, Partition};

/// `⊕ Z/p^{exps_i}` with elements numbered in mixed radix.
#[derive(Clone, Debug)]
pub struct Group {
    pub p: u64,
    pub exps: Vec<u32>,
    pub moduli: Vec<u64>,
    pub order: usize,
}

impl Group {
    pub fn new(p: u64, exps: &[u32]) -> Self {
        let moduli: Vec<u64> = exps.iter().map(|&e| p.pow(e)).collect();
        let order = moduli.iter().product::<u64>() as usize;
        Group { p, exps: exps.to_vec(), moduli, order }
    }

    pub fn encode(&self, v: &[u64]) -> usize {
        let mut idx = 0usize;
        for (x, m) in v.iter().zip(&self.moduli).rev() {
            idx = idx * *m as usize + (*x % m) as usize;
        }
        idx
    }

    pub fn decode(&self, mut idx: usize) -> Vec<u64> {
        self.moduli
            .iter()
            .map(|&m| {
                let x = (idx % m as usize) as u64;
                idx /= m as usize;
                x
            })
            .collect()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.decode(a), self.decode(b));
        let s: Vec<u64> = x.iter().zip(&y).zip(&self.moduli).map(|((a, b), m)| (a + b) % m).collect();
        self.encode(&s)
    }

    pub fn scale(&self, a: usize, k: u64) -> usize {
        let x = self.decode(a);
        let s: Vec<u64> = x.iter().zip(&self.moduli).map(|(a, m)| (a * (k % m)) % m).collect();
        self.encode(&s)
    }

    /// Membership table of the subgroup generated by `gens`.
    pub fn span(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.add(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn image_scaled(&self, set: &[bool], k: u64) -> Vec<bool> {
        let mut out = vec![false; self.order];
        for (x, _) in set.iter().enumerate().filter(|(_, &b)| b) {
            out[self.scale(x, k)] = true;
        }
        out
    }

    /// Type of `G / X`, read off the orders of `(G/X)[p^j]`.
    pub fn quotient_type(&self, x: &[bool]) -> Partition {
        let size_x = x.iter().filter(|&&b| b).count();
        let top = self.exps.iter().copied().max().unwrap_or(0);
        let mut logs = vec![0u32];
        for j in 1..=top {
            let pj = self.p.pow(j);
            let count = (0..self.order).filter(|&b| x[self.scale(b, pj)]).count() / size_x;
            logs.push(log_p(self.p, count));
        }
        let transpose: Vec<u32> = (1..logs.len()).map(|j| logs[j] - logs[j - 1]).collect();
        Partition::new(transpose).expect("socle layers shrink").transpose()
    }
}

pub fn log_p(p: u64, mut n: usize) -> u32 {
    let mut k = 0;
    while n > 1 {
        assert_eq!(n % p as usize, 0, "not a power of p");
        n /= p as usize;
        k += 1;
    }
    k
}

/// Every subgroup of a group of order at most 64, each with a generating set.
pub fn all_subgroups(g: &Group) -> Vec<Vec<usize>> {
    assert!(g.order <= 64);
    let mask = |set: &[bool]| set.iter().enumerate().filter(|(_, &b)| b).fold(0u64, |m, (i, _)| m | 1 << i);
    let mut found: HashMap<u64, Vec<usize>> = HashMap::new();
    let mut queue = VecDeque::new();
    found.insert(1, Vec::new());
    queue.push_back((1u64, Vec::new()));
    while let Some((m, gens)) = queue.pop_front() {
        for x in 0..g.order {
            if m >> x & 1 == 1 {
                continue;
            }
            let mut next: Vec<usize> = gens.clone();
            next.push(x);
            let nm = mask(&g.span(&next));
            if let std::collections::hash_map::Entry::Vacant(v) = found.entry(nm) {
                v.insert(next.clone());
                queue.push_back((nm, next));
            }
        }
    }
    let mut out: Vec<(u64, Vec<usize>)> = found.into_iter().collect();
    out.sort();
    out.into_iter().map(|(_, g)| g).collect()
}

pub fn embedding_from(g: &Group, beta: &Partition, gens: &[usize]) -> Embedding {
    let cols: Vec<Vec<u64>> = gens.iter().map(|&x| g.decode(x)).collect();
    Embedding::new(g.p, beta.clone(), Matrix::from_columns(beta.len(), &cols)).unwrap()
}

/// Every embedding `(A ⊆ B)` with `p = 2` and `|β| <= max_weight`, one per
/// subgroup `A`.
pub fn exhaustive_corpus(max_weight: u32) -> Vec<Embedding> {
    let mut out = Vec::new();
    for w in 1..=max_weight {
        for beta in partitions_of(w) {
            let g = Group::new(2, beta.parts());
            for gens in all_subgroups(&g) {
                out.push(embedding_from(&g, &beta, &gens));
            }
        }
    }
    out
}

/// Random embeddings with `p ∈ {2, 3}`, `|β| <= max_weight`, `<= 3`
/// generators.
pub fn random_corpus(count: usize, max_weight: u32, seed: u64) -> Vec<Embedding> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            let p = if rng.below(2) == 0 { 2 } else { 3 };
            let w = 1 + rng.below(max_weight as u64) as u32;
            let shapes = partitions_of(w);
            let beta = &shapes[rng.below(shapes.len() as u64) as usize];
            let gens = rng.below(4) as usize;
            picketlab::random::random_embedding(p, beta, gens, rng.next_u64()).unwrap()
        })
        .collect()
}

/// Brute-force data of one embedding: the group, `A` and `p^ℓ A`.
pub struct Brute {
    pub g: Group,
    pub a: Vec<bool>,
}

impl Brute {
    pub fn new(e: &Embedding) -> Self {
        let g = Group::new(e.p(), e.exps());
        let gens: Vec<usize> = e.generator_rows().iter().map(|r| g.encode(r)).collect();
        let a = g.span(&gens);
        Brute { g, a }
    }

    pub fn power(&self, ell: u32) -> Vec<bool> {
        self.g.image_scaled(&self.a, self.g.p.pow(ell))
    }

    /// `type(B / p^ℓ A)`.
    pub fn chain_entry(&self, ell: u32) -> Partition {
        self.g.quotient_type(&self.power(ell))
    }

    /// Multiplicity of `P_1^m` in `(p^{ℓ-1}A / p^ℓ A ⊆ B / p^ℓ A)`, as
    /// `dim(Ā ∩ p^{m-1}B̄) - dim(Ā ∩ p^m B̄)` inside the socle.
    pub fn s1_multiplicity(&self, ell: u32, m: u32) -> u32 {
        let x = self.power(ell);
        let abar = self.power(ell - 1);
        let size_x = x.iter().filter(|&&b| b).count();
        let all = vec![true; self.g.order];
        let layer = |h: u32| -> u32 {
            let ph = self.g.image_scaled(&all, self.g.p.pow(h));
            // p^h B + X
            let mut sum = vec![false; self.g.order];
            for (u, _) in ph.iter().enumerate().filter(|(_, &b)| b) {
                for (v, _) in x.iter().enumerate().filter(|(_, &b)| b) {
                    sum[self.g.add(u, v)] = true;
                }
            }
            let n = (0..self.g.order).filter(|&y| abar[y] && sum[y]).count();
            log_p(self.g.p, n / size_x)
        };
        layer(m - 1) - layer(m)
    }
}

/// Number of standard LR fillings of the skew shape `β/γ` (rows are parts)
/// with content `α`: semistandard, reverse reading word a lattice word.
pub fn lr_filler(alpha: &Partition, beta: &Partition, gamma: &Partition) -> usize {
    if !beta.contains(gamma) || alpha.weight() + gamma.weight() != beta.weight() {
        return 0;
    }
    // cells in reading order: top row first, right to left
    let mut cells = Vec::new();
    for r in 0..beta.len() {
        for c in (gamma.part(r)..beta.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let width = beta.first() as usize;
    let mut grid = vec![vec![0usize; width]; beta.len()];
    let mut counts = vec![0u32; alpha.len() + 1];
    fill(&cells, 0, alpha, gamma, &mut grid, &mut counts)
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    alpha: &Partition,
    gamma: &Partition,
    grid: &mut Vec<Vec<usize>>,
    counts: &mut Vec<u32>,
) -> usize {
    let Some(&(r, c)) = cells.get(k) else { return 1 };
    let mut total = 0;
    for v in 1..=alpha.len() {
        if counts[v] >= alpha.part(v - 1) {
            continue;
        }
        if v > 1 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        // row weakly increasing: right neighbour already filled
        if c + 1 < grid[r].len() && grid[r][c + 1] != 0 && v > grid[r][c + 1] {
            continue;
        }
        // column strictly increasing
        if r > 0 && (c as u32) >= gamma.part(r - 1) && grid[r - 1][c] >= v {
            continue;
        }
        grid[r][c] = v;
        counts[v] += 1;
        total += fill(cells, k + 1, alpha, gamma, grid, counts);
        counts[v] -= 1;
        grid[r][c] = 0;
    }
    total
}

/// Partitions contained in `beta`.
pub fn subpartitions(beta: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    sub_rec(beta, 0, u32::MAX, &mut cur, &mut out);
    out
}

fn sub_rec(beta: &Partition, i: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if i == beta.len() {
        out.push(Partition::new(cur.clone()).unwrap());
        return;
    }
    for v in 0..=beta.part(i).min(cap) {
        cur.push(v);
        sub_rec(beta, i + 1, v, cur, out);
        cur.pop();
    }
}
