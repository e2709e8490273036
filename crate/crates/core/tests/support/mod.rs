//! Independent reference implementations used by the integration tests.
//!
//! Nothing here calls into the combinatorics it is meant to check: graphs
//! are read back through `adjacent` only, and all algorithms are written
//! from the definitions with plain matrices.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};

use raag_paut::presentation::{GroupPresentation, Relator};
use raag_paut::Graph;

/// Every labeled graph on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(move |mask| Graph::from_edge_mask(n, mask))
}

/// Every labeled graph on `1..=max_n` vertices.
pub fn all_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(labeled_graphs).collect()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    (0..n).map(|a| (0..n).map(|b| g.adjacent(a, b)).collect()).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Lexicographically least adjacency bit string over all relabelings.
pub fn canonical_form(g: &Graph) -> Vec<bool> {
    let adj = adjacency(g);
    let n = adj.len();
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut bits = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    bits.push(adj[p[i]][p[j]]);
                }
            }
            bits
        })
        .min()
        .unwrap_or_default()
}

/// One representative per isomorphism class, on `1..=max_n` vertices.
pub fn isomorphism_classes(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut seen = BTreeSet::new();
        for g in labeled_graphs(n) {
            if seen.insert(canonical_form(&g)) {
                out.push(g);
            }
        }
    }
    out
}

/// Components of the subgraph induced on `keep`, as a component label per vertex.
fn component_labels(adj: &[Vec<bool>], keep: &[bool]) -> Vec<Option<usize>> {
    let n = adj.len();
    let mut label = vec![None; n];
    let mut next = 0;
    for s in 0..n {
        if !keep[s] || label[s].is_some() {
            continue;
        }
        let mut stack = vec![s];
        label[s] = Some(next);
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if keep[y] && adj[x][y] && label[y].is_none() {
                    label[y] = Some(next);
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    label
}

/// Condition (*) straight from the definition: no four pairwise
/// non-adjacent vertices in four distinct components of `Γ` minus the
/// common link of the four.
pub fn star_condition_oracle(g: &Graph) -> bool {
    let adj = adjacency(g);
    let n = adj.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    if q.iter().any(|&x| q.iter().any(|&y| x != y && adj[x][y])) {
                        continue;
                    }
                    let keep: Vec<bool> = (0..n).map(|x| !q.iter().all(|&y| adj[x][y])).collect();
                    let label = component_labels(&adj, &keep);
                    let ls: BTreeSet<_> = q.iter().map(|&x| label[x]).collect();
                    if ls.len() == 4 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// SIL-pairs via separating intersections of links: non-adjacent `v, w`
/// with a component of `Γ ∖ (lk(v) ∩ lk(w))` containing neither.
pub fn has_sil_pair_oracle(g: &Graph) -> bool {
    let adj = adjacency(g);
    let n = adj.len();
    for v in 0..n {
        for w in v + 1..n {
            if adj[v][w] {
                continue;
            }
            let keep: Vec<bool> = (0..n).map(|x| !(adj[v][x] && adj[w][x])).collect();
            let label = component_labels(&adj, &keep);
            let has_other = (0..n).any(|x| keep[x] && label[x] != label[v] && label[x] != label[w]);
            if has_other {
                return true;
            }
        }
    }
    false
}

/// Clique counts by brute force over vertex subsets.
pub fn clique_counts_oracle(g: &Graph) -> Vec<u64> {
    let adj = adjacency(g);
    let n = adj.len();
    let mut counts = vec![0u64; n + 1];
    for mask in 0u32..1 << n {
        let vs: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if vs.iter().all(|&a| vs.iter().all(|&b| a == b || adj[a][b])) {
            counts[vs.len()] += 1;
        }
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

/// A letter of `A_Γ`: vertex and exponent `±1`.
pub type Letter = (usize, i8);

/// Reduced words of `A_Γ` in lexicographic normal form.
///
/// Two reduced words represent the same element exactly when they differ
/// by commuting adjacent letters, so sorting each commutation class to its
/// least representative decides equality.
pub struct RaagOracle {
    adj: Vec<Vec<bool>>,
}

impl RaagOracle {
    pub fn new(g: &Graph) -> Self {
        RaagOracle { adj: adjacency(g) }
    }

    fn commute(&self, a: usize, b: usize) -> bool {
        a == b || self.adj[a][b]
    }

    /// Cancels `x^e … x^{-e}` whenever every letter between commutes with `x`.
    pub fn reduce(&self, word: &[Letter]) -> Vec<Letter> {
        let mut w = word.to_vec();
        'outer: loop {
            for i in 0..w.len() {
                for j in i + 1..w.len() {
                    if w[j].0 == w[i].0 {
                        if w[j].1 == -w[i].1 {
                            w.remove(j);
                            w.remove(i);
                            continue 'outer;
                        }
                        break;
                    }
                    if !self.commute(w[j].0, w[i].0) {
                        break;
                    }
                }
            }
            return w;
        }
    }

    pub fn normal_form(&self, word: &[Letter]) -> Vec<Letter> {
        let mut rest = self.reduce(word);
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            // letters that can be shuffled to the front
            let best = (0..rest.len())
                .filter(|&i| rest[..i].iter().all(|l| l.0 != rest[i].0 && self.commute(l.0, rest[i].0)))
                .min_by_key(|&i| rest[i])
                .expect("first letter is always movable");
            out.push(rest.remove(best));
        }
        out
    }

    pub fn equal(&self, a: &[Letter], b: &[Letter]) -> bool {
        self.normal_form(a) == self.normal_form(b)
    }
}

/// An automorphism of `A_Γ` given by the images of the vertices.
#[derive(Clone, Debug)]
pub struct Automorphism {
    pub images: Vec<Vec<Letter>>,
}

pub fn inverse_word(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|&(x, e)| (x, -e)).collect()
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism { images: (0..n).map(|x| vec![(x, 1)]).collect() }
    }

    /// `x ↦ v⁻¹ x v` for `x ∈ base`.
    pub fn partial_conjugation(n: usize, actor: usize, base: &[usize]) -> Self {
        let mut a = Automorphism::identity(n);
        for &x in base {
            a.images[x] = vec![(actor, -1), (x, 1), (actor, 1)];
        }
        a
    }

    pub fn apply(&self, w: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::new();
        for &(x, e) in w {
            if e > 0 {
                out.extend(self.images[x].iter().copied());
            } else {
                out.extend(inverse_word(&self.images[x]));
            }
        }
        out
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Automorphism, oracle: &RaagOracle) -> Automorphism {
        Automorphism { images: self.images.iter().map(|w| oracle.normal_form(&other.apply(w))).collect() }
    }
}

/// Dense rank over the rationals.
pub fn dense_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        let pivot: Vec<BigRational> = rows[rank].iter().map(|x| x * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x -= &f * p;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// `dim (T(V)/(R))_n` computed inside `V^{⊗n}` directly: the degree-`n`
/// part of the ideal is spanned by `e_u ⊗ r ⊗ e_w` over all words `u, w`.
pub fn tensor_hilbert_oracle(m: usize, relations: &[Vec<(usize, BigRational)>], max_degree: usize) -> Vec<u64> {
    let mut out = vec![1u64];
    for n in 1..=max_degree {
        let total = m.pow(n as u32);
        if n < 2 || relations.is_empty() {
            out.push(total as u64);
            continue;
        }
        let mut rows = Vec::new();
        for i in 0..=n - 2 {
            let right = n - 2 - i;
            for u in 0..m.pow(i as u32) {
                for w in 0..m.pow(right as u32) {
                    for r in relations {
                        let mut row = vec![BigRational::zero(); total];
                        for (c, q) in r {
                            let idx = (u * m * m + c) * m.pow(right as u32) + w;
                            row[idx] += q;
                        }
                        rows.push(row);
                    }
                }
            }
        }
        out.push((total - dense_rank(rows)) as u64);
    }
    out
}

/// Graded dimensions of the RAAG Lie algebra from `∏ (1 - t^n)^{d_n} = P_Γ(-t)`,
/// peeling off one degree at a time.
pub fn raag_dims_oracle(clique_counts: &[u64], max_degree: usize) -> Vec<u64> {
    let target: Vec<i128> = (0..=max_degree)
        .map(|k| {
            let c = clique_counts.get(k).copied().unwrap_or(0) as i128;
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    let mut current = vec![0i128; max_degree + 1];
    current[0] = 1;
    let mut dims = Vec::new();
    for n in 1..=max_degree {
        // multiplying by (1 - t^n)^d changes the t^n coefficient by -d
        let d = current[n] - target[n];
        dims.push(d as u64);
        for _ in 0..d {
            for i in (n..=max_degree).rev() {
                current[i] -= current[i - n];
            }
        }
    }
    dims
}

/// Nonempty unions of components of `Γ ∖ st(v)`, for each vertex, straight
/// from the definition (components found by search on the adjacency matrix).
pub fn all_partial_conjugations(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let adj = adjacency(g);
    let n = adj.len();
    let mut out = Vec::new();
    for v in 0..n {
        let keep: Vec<bool> = (0..n).map(|x| x != v && !adj[v][x]).collect();
        let label = component_labels(&adj, &keep);
        let count = label.iter().flatten().max().map_or(0, |m| m + 1);
        for mask in 1u32..1 << count {
            let base: Vec<usize> = (0..n).filter(|&x| label[x].is_some_and(|l| mask >> l & 1 == 1)).collect();
            out.push((v, base));
        }
    }
    out
}

pub fn one() -> BigRational {
    BigRational::one()
}

impl Automorphism {
    /// `c_K^v` raised to `e = ±1`.
    pub fn partial_conjugation_pow(n: usize, actor: usize, base: &[usize], e: i8) -> Self {
        let mut a = Automorphism::identity(n);
        for &x in base {
            a.images[x] = vec![(actor, -e), (x, 1), (actor, e)];
        }
        a
    }
}

/// The automorphism of `A_Γ` obtained by substituting the generators of `p`.
pub fn evaluate_word(g: &Graph, p: &GroupPresentation, word: &[(usize, i8)]) -> Automorphism {
    let oracle = RaagOracle::new(g);
    let n = g.vertex_count();
    word.iter().fold(Automorphism::identity(n), |acc, &(i, e)| {
        let c = &p.generators[i];
        acc.then(&Automorphism::partial_conjugation_pow(n, c.actor, &c.base.to_vec(), e), &oracle)
    })
}

/// Commutator relators must be the identity; product relators must be
/// conjugation by their common actor.
pub fn relator_holds(g: &Graph, p: &GroupPresentation, r: &Relator) -> bool {
    let oracle = RaagOracle::new(g);
    let n = g.vertex_count();
    let phi = evaluate_word(g, p, &r.word().0);
    match r {
        Relator::Commutator { .. } => (0..n).all(|x| oracle.equal(&phi.images[x], &[(x, 1)])),
        Relator::Product { factors } => {
            let v = p.generators[factors[0]].actor;
            if factors.iter().any(|&f| p.generators[f].actor != v) {
                return false;
            }
            [1i8, -1].iter().any(|&s| (0..n).all(|x| oracle.equal(&phi.images[x], &[(v, -s), (x, 1), (v, s)])))
        }
    }
}

pub fn relator_text(p: &GroupPresentation, r: &Relator) -> String {
    r.word().0.iter().map(|&(i, e)| format!("{}^{e}", p.label(i))).collect::<Vec<_>>().join(" ")
}

/// Random labeled graphs on `1..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (1..=max_n, any::<u64>()).prop_map(|(n, bits)| {
        let pairs = n * (n - 1) / 2;
        Graph::from_edge_mask(n, if pairs == 64 { bits } else { bits & ((1u64 << pairs) - 1) })
    })
}
