//! Finite simple graphs and the link/star/component combinatorics that
//! drive everything else in the crate.
//!
//! Vertices are interned to dense indices `0..n` when a [`Graph`] is built;
//! all set operations run on [`VertexSet`] bitmasks.

mod io;
mod vertex_set;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use io::{parse_graph, parse_json_graph, parse_text_graph, GraphFormat};
pub use vertex_set::{Iter as VertexIter, VertexSet, MAX_VERTICES};

/// A finite simple graph with named vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from vertex names and index pairs.
    pub fn new(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        if n > MAX_VERTICES {
            return Err(Error::input(format!("graph has {n} vertices; at most {MAX_VERTICES} are supported")));
        }
        let mut seen = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if let Some(j) = seen.insert(name.as_str(), i) {
                return Err(Error::input(format!("duplicate vertex identifier {name:?} (positions {j} and {i})")));
            }
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::input(format!("edge ({a}, {b}) references a vertex outside 0..{n}")));
            }
            if a == b {
                return Err(Error::input(format!("self-loop at vertex {:?}", names[a])));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(Graph { names, adj })
    }

    /// Builds a graph from names, with edges given by name.
    pub fn from_names(names: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut idx_edges = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let ia = *index.get(a).ok_or_else(|| Error::input(format!("unknown vertex {a:?} in edge")))?;
            let ib = *index.get(b).ok_or_else(|| Error::input(format!("unknown vertex {b:?} in edge")))?;
            idx_edges.push((ia, ib));
        }
        Graph::new(names, &idx_edges)
    }

    /// Graph on `0..n` (names are the decimal indices) with the given edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Graph::new((0..n).map(|i| i.to_string()).collect(), edges)
    }

    /// Graph on `0..n` whose edge set is encoded by a bitmask over the
    /// pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut edges = Vec::new();
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::from_edges(n, &edges).expect("edge mask graph is valid")
    }

    pub fn discrete(n: usize) -> Self {
        Graph::from_edges(n, &[]).expect("discrete graph is valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::from_edges(n, &edges).expect("complete graph is valid")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path graph is valid")
    }

    /// Star `K_{1,k}`: center `0`, leaves `1..=k`.
    pub fn star_graph(k: usize) -> Self {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::from_edges(k + 1, &edges).expect("star graph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, nbrs) in self.adj.iter().enumerate() {
            for b in nbrs.iter().filter(|&b| b > a) {
                out.push((a, b));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    /// `lk(v)`; panics on an out-of-range index.
    pub fn link(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `st(v) = lk(v) ∪ {v}`.
    pub fn star(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// `Γ ∖ st(v)`.
    pub fn star_complement(&self, v: usize) -> VertexSet {
        self.vertices().difference(self.star(v))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::input(format!("vertex index {v} is not a vertex of a {}-vertex graph", self.vertex_count())))
        }
    }

    pub fn check_subset(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            let extra = s.difference(self.vertices()).to_vec();
            Err(Error::input(format!("vertex set contains non-vertices {extra:?}")))
        }
    }

    /// Link and star of `v`.
    pub fn neighborhood(&self, v: usize) -> Result<(VertexSet, VertexSet)> {
        self.check_vertex(v)?;
        Ok((self.link(v), self.star(v)))
    }

    /// Same as [`Graph::neighborhood`], addressing the vertex by name.
    pub fn neighborhood_of(&self, name: &str) -> Result<(VertexSet, VertexSet)> {
        let v = self.vertex(name).ok_or_else(|| Error::input(format!("unknown vertex {name:?}")))?;
        self.neighborhood(v)
    }

    /// Connected components of the subgraph induced on `s`, ordered by least vertex.
    pub fn induced_components(&self, s: VertexSet) -> Result<Vec<VertexSet>> {
        self.check_subset(s)?;
        Ok(self.components_within(s))
    }

    pub(crate) fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(seed) = rest.min() {
            let comp = self.reach(seed, s);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Component of `s` containing `seed`.
    pub(crate) fn reach(&self, seed: usize, s: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(seed);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next = next.union(self.adj[u]);
            }
            next = next.intersection(s).difference(comp);
            comp = comp.union(next);
            frontier = next;
        }
        comp
    }

    /// Connected components of `Γ ∖ st(v)`.
    pub fn star_components(&self, v: usize) -> Vec<VertexSet> {
        self.components_within(self.star_complement(v))
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.components_within(self.vertices()).len() == 1
    }

    pub fn is_complete(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.star(v) == self.vertices())
    }

    /// Vertices adjacent to every other vertex; they generate the center of `A_Γ`.
    pub fn cone_vertices(&self) -> VertexSet {
        (0..self.vertex_count()).filter(|&v| self.star(v) == self.vertices()).collect()
    }

    /// `Γ₀`: vertices not adjacent to every other vertex.
    pub fn non_cone_vertices(&self) -> VertexSet {
        self.vertices().difference(self.cone_vertices())
    }

    /// Vertices of `s` adjacent to every other vertex of `s`.
    pub fn cone_vertices_within(&self, s: VertexSet) -> VertexSet {
        s.iter().filter(|&v| s.is_subset(self.star(v))).collect()
    }

    /// Induced subgraph on `s`, together with the map from new to old indices.
    pub fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = s.to_vec();
        let mut new_of = vec![usize::MAX; self.vertex_count()];
        for (i, &o) in old.iter().enumerate() {
            new_of[o] = i;
        }
        let adj = old.iter().map(|&o| self.adj[o].intersection(s).iter().map(|u| new_of[u]).collect()).collect();
        let names = old.iter().map(|&o| self.names[o].clone()).collect();
        (Graph { names, adj }, old)
    }

    /// Disjoint union; the names of `other` are suffixed with `'` on collision.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.vertex_count();
        let mut names = self.names.clone();
        for name in &other.names {
            let mut candidate = name.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(a, b)| (a + n, b + n)));
        Graph::new(names, &edges)
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        let parts: Vec<&str> = s.iter().map(|v| self.name(v)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Classifies the components of `Γ∖st(v)` and `Γ∖st(w)` as dominant,
    /// shared or subordinate relative to the non-adjacent pair `(v, w)`.
    pub fn classify_components(&self, v: usize, w: usize) -> Result<Classification> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if v == w {
            return Err(Error::domain(format!(
                "classification needs two distinct vertices, got {:?} twice",
                self.name(v)
            )));
        }
        if self.adjacent(v, w) {
            return Err(Error::domain(format!(
                "vertices {:?} and {:?} are adjacent; classification is undefined",
                self.name(v),
                self.name(w)
            )));
        }
        let v_comps = self.star_components(v);
        let w_comps = self.star_components(w);
        let dom_w = *v_comps.iter().find(|c| c.contains(w)).expect("w lies off st(v)");
        let dom_v = *w_comps.iter().find(|c| c.contains(v)).expect("v lies off st(w)");

        let classify = |comps: &[VertexSet], other: &[VertexSet], opposite: usize, other_dom: VertexSet| {
            comps
                .iter()
                .map(|&c| {
                    let class = if c.contains(opposite) {
                        ComponentClass::Dominant { opposite }
                    } else if other.contains(&c) {
                        ComponentClass::Shared
                    } else if c.is_subset(other_dom) {
                        ComponentClass::Subordinate
                    } else {
                        return Err(Error::internal(format!(
                            "component {} escapes the dominant/shared/subordinate trichotomy",
                            self.format_set(c)
                        )));
                    };
                    Ok((c, class))
                })
                .collect::<Result<Vec<_>>>()
        };
        let v_side = classify(&v_comps, &w_comps, w, dom_v)?;
        let w_side = classify(&w_comps, &v_comps, v, dom_w)?;
        Ok(Classification { v, w, v_side, w_side })
    }

    /// Every non-adjacent pair `v < w` with at least one shared component.
    pub fn find_sil_pairs(&self) -> Vec<SilPair> {
        let n = self.vertex_count();
        let comps: Vec<Vec<VertexSet>> = (0..n).map(|v| self.star_components(v)).collect();
        let mut out = Vec::new();
        for v in 0..n {
            for w in v + 1..n {
                if self.adjacent(v, w) {
                    continue;
                }
                let shared: Vec<VertexSet> = comps[v].iter().filter(|c| comps[w].contains(c)).copied().collect();
                if !shared.is_empty() {
                    out.push(SilPair { v, w, shared });
                }
            }
        }
        out
    }

    /// Tests condition (*): no four pairwise non-adjacent vertices lie in
    /// four distinct components of `Γ ∖ ∩ lk(v_i)`.
    ///
    /// The witness, when present, is the lexicographically least violating
    /// quadruple.
    pub fn check_star_condition(&self) -> StarCondition {
        let n = self.vertex_count();
        let all = self.vertices();
        for a in 0..n {
            let ind_a = all.difference(self.star(a));
            for b in ind_a.iter().filter(|&b| b > a) {
                let ind_b = ind_a.difference(self.star(b));
                for c in ind_b.iter().filter(|&c| c > b) {
                    let ind_c = ind_b.difference(self.star(c));
                    for d in ind_c.iter().filter(|&d| d > c) {
                        let links = self
                            .link(a)
                            .intersection(self.link(b))
                            .intersection(self.link(c))
                            .intersection(self.link(d));
                        let rest = all.difference(links);
                        let ca = self.reach(a, rest);
                        if ca.contains(b) || ca.contains(c) || ca.contains(d) {
                            continue;
                        }
                        let cb = self.reach(b, rest);
                        if cb.contains(c) || cb.contains(d) {
                            continue;
                        }
                        if self.reach(c, rest).contains(d) {
                            continue;
                        }
                        return StarCondition { holds: false, witness: Some([a, b, c, d]) };
                    }
                }
            }
        }
        StarCondition { holds: true, witness: None }
    }

    /// `[c0, c1, ...]` with `c_k` the number of `k`-cliques (`c0 = 1`).
    pub fn clique_polynomial(&self) -> Vec<u64> {
        fn extend(g: &Graph, size: usize, candidates: VertexSet, counts: &mut Vec<u64>) {
            for v in candidates {
                if counts.len() <= size + 1 {
                    counts.push(0);
                }
                counts[size + 1] += 1;
                let next = candidates.intersection(g.link(v));
                let next: VertexSet = next.iter().filter(|&u| u > v).collect();
                extend(g, size + 1, next, counts);
            }
        }
        let mut counts = vec![1];
        extend(self, 0, self.vertices(), &mut counts);
        counts
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> =
            self.edges().into_iter().map(|(a, b)| format!("{}-{}", self.names[a], self.names[b])).collect();
        write!(f, "Graph({:?}; {})", self.names, edges.join(" "))
    }
}

/// Label of a component relative to a non-adjacent pair `(v, w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum ComponentClass {
    /// Contains the opposite vertex of the pair.
    Dominant {
        opposite: usize,
    },
    Subordinate,
    Shared,
}

/// Output of [`Graph::classify_components`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub v: usize,
    pub w: usize,
    /// Components of `Γ ∖ st(v)`.
    pub v_side: Vec<(VertexSet, ComponentClass)>,
    /// Components of `Γ ∖ st(w)`.
    pub w_side: Vec<(VertexSet, ComponentClass)>,
}

impl Classification {
    pub fn class_of(&self, actor: usize, component: VertexSet) -> Option<ComponentClass> {
        let side = if actor == self.v {
            &self.v_side
        } else if actor == self.w {
            &self.w_side
        } else {
            return None;
        };
        side.iter().find(|(c, _)| *c == component).map(|&(_, k)| k)
    }

    pub fn has_shared(&self) -> bool {
        self.v_side.iter().any(|(_, k)| *k == ComponentClass::Shared)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SilPair {
    pub v: usize,
    pub w: usize,
    pub shared: Vec<VertexSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StarCondition {
    pub holds: bool,
    pub witness: Option<[usize; 4]>,
}
