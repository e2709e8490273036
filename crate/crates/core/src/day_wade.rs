//! Relative automorphism groups `POut(A_Γ, 𝒢, ℋ^t)` and their recursive
//! decomposition into a subnormal series with free abelian and
//! Fouxe-Rabinovitch factors.
//!
//! Families never list the singletons explicitly; they are adjoined
//! implicitly everywhere, and impose no condition on partial conjugations.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::presentation::{omega_split, reindex, OmegaPartition, PartialConjugation};

/// Largest graph [`saturate`] enumerates by default.
pub const SATURATION_VERTEX_CAP: usize = 16;

/// Version tag of the JSON decomposition schema.
pub const DECOMPOSITION_FORMAT_VERSION: u32 = 1;

const MAX_ATOMS_PER_VERTEX: usize = 24;

/// A set of proper nonempty vertex subsets, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct SpecialFamily(BTreeSet<VertexSet>);

impl SpecialFamily {
    pub fn empty() -> Self {
        SpecialFamily::default()
    }

    pub fn new(g: &Graph, members: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let mut out = BTreeSet::new();
        for s in members {
            check_proper(g, s)?;
            out.insert(s);
        }
        Ok(SpecialFamily(out))
    }

    pub fn members(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.0.contains(&s)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn with(&self, s: VertexSet) -> Self {
        let mut out = self.clone();
        out.0.insert(s);
        out
    }

    fn check(&self, g: &Graph) -> Result<()> {
        self.members().try_for_each(|s| check_proper(g, s))
    }

    /// `{Δ ∩ Θ : Θ ∈ self} ∖ {∅, Δ}`, re-indexed onto the subgraph with old indices `old`.
    fn restrict(&self, delta: VertexSet, old: &[usize]) -> SpecialFamily {
        SpecialFamily(
            self.members()
                .map(|t| t.intersection(delta))
                .filter(|s| !s.is_empty() && *s != delta)
                .map(|s| reindex(s, old))
                .collect(),
        )
    }
}

fn check_proper(g: &Graph, s: VertexSet) -> Result<()> {
    g.check_subset(s)?;
    if s.is_empty() || s == g.vertices() {
        return Err(Error::input(format!("{} is not a proper nonempty vertex set", g.format_set(s))));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpecialAction {
    pub preserves: bool,
    pub acts_trivially: bool,
}

fn action(g: &Graph, c: PartialConjugation, delta: VertexSet) -> SpecialAction {
    let disjoint = c.base.is_disjoint(delta);
    let swallowed = delta.difference(g.star(c.actor)).is_subset(c.base);
    let inside = delta.contains(c.actor);
    SpecialAction { preserves: disjoint || swallowed || inside, acts_trivially: disjoint || swallowed }
}

/// Whether `c` preserves the special subgroup on `delta`, and whether it
/// acts on it by a conjugation.
pub fn pc_action_on_special(g: &Graph, c: &PartialConjugation, delta: VertexSet) -> Result<SpecialAction> {
    c.validate(g)?;
    check_proper(g, delta)?;
    Ok(action(g, *c, delta))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RelativeConjugation {
    pub conjugation: PartialConjugation,
    /// The base is a single block of the relative Ω-partition.
    pub minimal: bool,
}

/// For every vertex `v`, the minimal admissible bases: the admissible bases
/// are exactly the nonempty unions of these.
///
/// Each member `Δ` (of `𝒢` when `v ∉ Δ`, of `ℋ` always) forces the
/// components of `Γ∖st(v)` meeting `Δ∖st(v)` to be taken all together or
/// not at all.
fn atoms(g: &Graph, fam_g: &SpecialFamily, fam_h: &SpecialFamily) -> Vec<Vec<VertexSet>> {
    g.vertices()
        .iter()
        .map(|v| {
            let comps = g.star_components(v);
            let mut class: Vec<usize> = (0..comps.len()).collect();
            let constraints = fam_g.members().filter(|d| !d.contains(v)).chain(fam_h.members());
            for d in constraints {
                let t = d.difference(g.star(v));
                let hit: Vec<usize> = (0..comps.len()).filter(|&i| comps[i].meets(t)).collect();
                if let Some((&first, rest)) = hit.split_first() {
                    let target = class[first];
                    for &i in rest {
                        let old = class[i];
                        if old != target {
                            class.iter_mut().filter(|c| **c == old).for_each(|c| *c = target);
                        }
                    }
                }
            }
            let mut blocks: Vec<VertexSet> = Vec::new();
            let mut labels: Vec<usize> = class.clone();
            labels.sort_unstable();
            labels.dedup();
            for l in labels {
                blocks
                    .push((0..comps.len()).filter(|&i| class[i] == l).fold(VertexSet::EMPTY, |a, i| a.union(comps[i])));
            }
            blocks.sort();
            blocks
        })
        .collect()
}

/// The minimal relative partial conjugations, one per block.
fn atom_generators(atoms: &[Vec<VertexSet>]) -> Vec<PartialConjugation> {
    atoms
        .iter()
        .enumerate()
        .flat_map(|(v, list)| list.iter().map(move |&base| PartialConjugation { actor: v, base }))
        .collect()
}

/// Every partial conjugation `c_K^v` preserving each member of `𝒢` and
/// acting trivially on each member of `ℋ`, ordered by `(v, K)`.
///
/// The list has `Σ_v (2^{a_v} - 1)` entries where `a_v` is the number of
/// minimal bases at `v`; a resource error is raised past 24 of them.
pub fn relative_partial_conjugations(
    g: &Graph,
    fam_g: &SpecialFamily,
    fam_h: &SpecialFamily,
) -> Result<Vec<RelativeConjugation>> {
    fam_g.check(g)?;
    fam_h.check(g)?;
    let mut out = Vec::new();
    for (v, list) in atoms(g, fam_g, fam_h).into_iter().enumerate() {
        if list.len() > MAX_ATOMS_PER_VERTEX {
            return Err(Error::Resource {
                degree: None,
                message: format!("{} has {} minimal bases; too many unions to list", g.name(v), list.len()),
            });
        }
        for mask in 1u32..(1 << list.len()) {
            let base = (0..list.len()).filter(|i| mask >> i & 1 == 1).fold(VertexSet::EMPTY, |a, i| a.union(list[i]));
            out.push(RelativeConjugation {
                conjugation: PartialConjugation { actor: v, base },
                minimal: mask.count_ones() == 1,
            });
        }
    }
    out.sort_by_key(|r| r.conjugation);
    Ok(out)
}

/// The Ω-partition whose blocks are the minimal relative bases.
pub fn relative_omega(g: &Graph, fam_g: &SpecialFamily, fam_h: &SpecialFamily) -> Result<OmegaPartition> {
    fam_g.check(g)?;
    fam_h.check(g)?;
    OmegaPartition::new(g, atoms(g, fam_g, fam_h))
}

/// All proper special subgroups preserved by the relative group, with the default vertex cap.
pub fn saturate(g: &Graph, fam_g: &SpecialFamily, fam_h: &SpecialFamily) -> Result<SpecialFamily> {
    saturate_with_cap(g, fam_g, fam_h, SATURATION_VERTEX_CAP)
}

pub fn saturate_with_cap(g: &Graph, fam_g: &SpecialFamily, fam_h: &SpecialFamily, cap: usize) -> Result<SpecialFamily> {
    fam_g.check(g)?;
    fam_h.check(g)?;
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::Resource {
            degree: None,
            message: format!("saturation enumerates subsets of {n} vertices; the cap is {cap}"),
        });
    }
    let gens = atom_generators(&atoms(g, fam_g, fam_h));
    let mut out: BTreeSet<VertexSet> = fam_g.members().collect();
    for bits in 1u64..(1u64 << n) - 1 {
        let d = VertexSet::from_bits(bits);
        if gens.iter().all(|&c| action(g, c, d).preserves) {
            out.insert(d);
        }
    }
    Ok(SpecialFamily(out))
}

/// Components of `s` when two vertices are also joined by lying in a common member of `fam`.
pub fn g_components(g: &Graph, fam: &SpecialFamily, s: VertexSet) -> Vec<VertexSet> {
    let s = s.intersection(g.vertices());
    let mut left = s;
    let mut out = Vec::new();
    while let Some(seed) = left.min() {
        let mut comp = VertexSet::singleton(seed);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next = next.union(g.link(u).intersection(s));
                for m in fam.members().filter(|m| m.contains(u)) {
                    next = next.union(m.intersection(s));
                }
            }
            frontier = next.difference(comp);
            comp = comp.union(next);
        }
        left = left.difference(comp);
        out.push(comp);
    }
    out
}

/// `(|Γ|, 2^|Γ| - r)` with `r` the number of vertex subsets acted on trivially.
fn complexity_of(g: &Graph, gens: &[PartialConjugation]) -> (usize, u64) {
    let n = g.vertex_count();
    let trivial = (0u64..1u64 << n)
        .filter(|&bits| gens.iter().all(|&c| action(g, c, VertexSet::from_bits(bits)).acts_trivially))
        .count() as u64;
    (n, (1u64 << n) - trivial)
}

/// The complexity pair that strictly drops along every split.
pub fn complexity(g: &Graph, fam_g: &SpecialFamily, fam_h: &SpecialFamily) -> Result<(usize, u64)> {
    if g.vertex_count() > SATURATION_VERTEX_CAP {
        return Err(Error::Resource { degree: None, message: "complexity needs subset enumeration".into() });
    }
    fam_g.check(g)?;
    fam_h.check(g)?;
    Ok(complexity_of(g, &atom_generators(&atoms(g, fam_g, fam_h))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrStructure {
    /// Two factors: `Inn(G_1) × Inn(G_2)`; the graphs define the inner factors.
    DirectInn { inner: [Graph; 2] },
    /// Three factors: `Z ⋊ H` with `Z` the RAAG on `z_graph` and `H` of the
    /// given abelianization ranks, one per factor.
    SemidirectZH { z_graph: Graph, h_graphs: Vec<Graph> },
    /// Four or more factors; no RAAG structure is claimed.
    Unresolved,
}

impl FrStructure {
    pub fn h_ranks(&self) -> Option<Vec<usize>> {
        match self {
            FrStructure::SemidirectZH { h_graphs, .. } => Some(h_graphs.iter().map(Graph::vertex_count).collect()),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    /// Kernel `POut(A_Γ, 𝒢, (ℋ ∪ {Δ})^t)` and image in `POut(A_Δ, 𝒢_Δ, ℋ_Δ^t)`.
    Split {
        delta: VertexSet,
        kernel: Box<DecompositionNode>,
        quotient: Box<DecompositionNode>,
    },
    /// Isomorphic to the relative group over `Γ ∖ Z`, with `Z` the central vertices.
    CenterQuotient {
        center: VertexSet,
        child: Box<DecompositionNode>,
    },
    LeafFreeAbelian {
        rank: usize,
    },
    LeafFouxeRabinovitch {
        components: Vec<VertexSet>,
        structure: FrStructure,
        star_ok: bool,
    },
    LeafTrivial,
}

/// A node of the decomposition tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionNode {
    pub graph: Graph,
    /// Saturated `𝒢`.
    pub family_g: SpecialFamily,
    pub family_h: SpecialFamily,
    pub omega: OmegaPartition,
    pub complexity: (usize, u64),
    pub kind: NodeKind,
}

/// Decomposes `POut(A_Γ, 𝒢, ℋ^t)`, whose generators are the blocks of `omega`.
pub fn decompose(
    g: &Graph,
    fam_g: &SpecialFamily,
    fam_h: &SpecialFamily,
    omega: &OmegaPartition,
) -> Result<DecompositionNode> {
    omega.validate(g)?;
    fam_g.check(g)?;
    fam_h.check(g)?;
    build(g, fam_g, fam_h, omega)
}

/// [`decompose`] for `POut(A_Γ)` itself.
pub fn decompose_pout(g: &Graph) -> Result<DecompositionNode> {
    decompose(g, &SpecialFamily::empty(), &SpecialFamily::empty(), &OmegaPartition::standard(g))
}

fn build(g: &Graph, fam_g: &SpecialFamily, fam_h: &SpecialFamily, omega: &OmegaPartition) -> Result<DecompositionNode> {
    let sat = saturate(g, fam_g, fam_h)?;
    let gens = atom_generators(&atoms(g, &sat, fam_h));
    let complexity = complexity_of(g, &gens);
    let node = |kind| DecompositionNode {
        graph: g.clone(),
        family_g: sat.clone(),
        family_h: fam_h.clone(),
        omega: omega.clone(),
        complexity,
        kind,
    };
    let nontrivial = |d: VertexSet| gens.iter().any(|&c| !action(g, c, d).acts_trivially);

    if let Some(delta) = sat.members().find(|&d| nontrivial(d)) {
        // drop vertices of Δ adjacent to all of Δ; what is left is still
        // preserved and still moved
        let core = delta.difference(g.cone_vertices_within(delta));
        if !sat.contains(core) || !nontrivial(core) {
            return Err(Error::internal(format!("stripping cone vertices from {} failed", g.format_set(delta))));
        }
        let split = omega_split(g, omega, core)?;
        let kernel = build(g, &sat, &fam_h.with(core), &split.h_partition(g)?)?;
        let (sub, old, omega_p) = split.p_restricted(g)?;
        let quotient = build(&sub, &sat.restrict(core, &old), &fam_h.restrict(core, &old), &omega_p)?;
        for child in [&kernel, &quotient] {
            if child.complexity >= complexity {
                return Err(Error::internal(format!(
                    "complexity {:?} did not drop below {:?} when splitting on {}",
                    child.complexity,
                    complexity,
                    g.format_set(core)
                )));
            }
        }
        return Ok(node(NodeKind::Split { delta: core, kernel: Box::new(kernel), quotient: Box::new(quotient) }));
    }

    let comps = g_components(g, &sat, g.vertices());
    if comps.len() >= 2 {
        let inner = |d: VertexSet| g.induced(d.difference(g.cone_vertices_within(d))).0;
        let structure = match comps.len() {
            2 => FrStructure::DirectInn { inner: [inner(comps[0]), inner(comps[1])] },
            3 => FrStructure::SemidirectZH { z_graph: g.clone(), h_graphs: comps.iter().map(|&d| inner(d)).collect() },
            _ => FrStructure::Unresolved,
        };
        let star_ok = comps.len() <= 3;
        return Ok(node(NodeKind::LeafFouxeRabinovitch { components: comps, structure, star_ok }));
    }
    if !g.is_connected() {
        return Ok(node(NodeKind::LeafFreeAbelian { rank: omega.outer_rank() }));
    }
    let center = g.cone_vertices();
    if center == g.vertices() {
        return Ok(node(NodeKind::LeafTrivial));
    }
    if center.is_empty() {
        return Ok(node(NodeKind::LeafFreeAbelian { rank: omega.outer_rank() }));
    }
    let core = g.vertices().difference(center);
    let (sub, old) = g.induced(core);
    let blocks = old.iter().map(|&v| omega.blocks(v).iter().map(|&b| reindex(b, &old)).collect()).collect();
    let child =
        build(&sub, &sat.restrict(core, &old), &fam_h.restrict(core, &old), &OmegaPartition::new(&sub, blocks)?)?;
    Ok(node(NodeKind::CenterQuotient { center, child: Box::new(child) }))
}

fn join(a: &Graph, b: &Graph) -> Graph {
    let u = a.disjoint_union(b).expect("names made distinct");
    let n = a.vertex_count();
    let mut edges = u.edges();
    for i in 0..n {
        for j in 0..b.vertex_count() {
            edges.push((i, n + j));
        }
    }
    Graph::new(u.names().to_vec(), &edges).expect("valid join")
}

fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[&str; 2]> = g.edges().into_iter().map(|(a, b)| [g.name(a), g.name(b)]).collect();
    json!({ "vertices": g.names(), "edges": edges })
}

fn set_json(g: &Graph, s: VertexSet) -> Value {
    json!(s.iter().map(|v| g.name(v)).collect::<Vec<_>>())
}

impl DecompositionNode {
    pub fn children(&self) -> Vec<&DecompositionNode> {
        match &self.kind {
            NodeKind::Split { kernel, quotient, .. } => vec![kernel, quotient],
            NodeKind::CenterQuotient { child, .. } => vec![child],
            _ => Vec::new(),
        }
    }

    /// All nodes, parents before children, kernels before quotients.
    pub fn nodes(&self) -> Vec<&DecompositionNode> {
        let mut out = vec![self];
        for c in self.children() {
            out.extend(c.nodes());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let g = &self.graph;
        let mut v = json!({
            "graph": graph_json(g),
            "family_g": self.family_g.members().map(|s| set_json(g, s)).collect::<Vec<_>>(),
            "family_h": self.family_h.members().map(|s| set_json(g, s)).collect::<Vec<_>>(),
            "omega": g.vertices().iter().map(|x| {
                json!({ "vertex": g.name(x), "blocks": self.omega.blocks(x).iter().map(|&b| set_json(g, b)).collect::<Vec<_>>() })
            }).collect::<Vec<_>>(),
            "complexity": [self.complexity.0, self.complexity.1],
        });
        let kind = match &self.kind {
            NodeKind::Split { delta, kernel, quotient } => json!({
                "type": "split",
                "delta": set_json(g, *delta),
                "kernel": kernel.to_json(),
                "quotient": quotient.to_json(),
            }),
            NodeKind::CenterQuotient { center, child } => json!({
                "type": "center_quotient",
                "center": set_json(g, *center),
                "child": child.to_json(),
            }),
            NodeKind::LeafFreeAbelian { rank } => json!({ "type": "free_abelian", "rank": rank }),
            NodeKind::LeafTrivial => json!({ "type": "trivial" }),
            NodeKind::LeafFouxeRabinovitch { components, structure, star_ok } => {
                let structure = match structure {
                    FrStructure::DirectInn { inner } => json!({
                        "type": "direct_inn",
                        "inner_graphs": inner.iter().map(graph_json).collect::<Vec<_>>(),
                    }),
                    FrStructure::SemidirectZH { z_graph, h_graphs } => json!({
                        "type": "semidirect_zh",
                        "z_graph": graph_json(z_graph),
                        "h_ranks": h_graphs.iter().map(Graph::vertex_count).collect::<Vec<_>>(),
                    }),
                    FrStructure::Unresolved => json!({ "type": "unresolved" }),
                };
                json!({
                    "type": "fouxe_rabinovitch",
                    "components": components.iter().map(|&c| set_json(g, c)).collect::<Vec<_>>(),
                    "structure": structure,
                    "star_ok": star_ok,
                })
            }
        };
        v["node"] = kind;
        v
    }

    /// Indented, one line per node.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0, "");
        out
    }

    fn render_into(&self, out: &mut String, depth: usize, prefix: &str) {
        let g = &self.graph;
        let pad = "  ".repeat(depth);
        let vs = g.format_set(g.vertices());
        let line = match &self.kind {
            NodeKind::Split { delta, .. } => format!("split on {}", g.format_set(*delta)),
            NodeKind::CenterQuotient { center, .. } => format!("remove center {}", g.format_set(*center)),
            NodeKind::LeafFreeAbelian { rank } => format!("free abelian, rank {rank}"),
            NodeKind::LeafTrivial => "trivial".to_string(),
            NodeKind::LeafFouxeRabinovitch { components, structure, star_ok } => {
                let comps: Vec<String> = components.iter().map(|&c| g.format_set(c)).collect();
                let shape = match structure {
                    FrStructure::DirectInn { inner } => {
                        format!("Inn x Inn, inner ranks {} and {}", inner[0].vertex_count(), inner[1].vertex_count())
                    }
                    FrStructure::SemidirectZH { z_graph, h_graphs } => format!(
                        "Z x| H, Z on {} vertices, H ranks {:?}",
                        z_graph.vertex_count(),
                        h_graphs.iter().map(Graph::vertex_count).collect::<Vec<_>>()
                    ),
                    FrStructure::Unresolved => "four or more factors, unresolved".to_string(),
                };
                let flag = if *star_ok { "" } else { " [outside (*)]" };
                format!("Fouxe-Rabinovitch over {}: {shape}{flag}", comps.join(" "))
            }
        };
        let _ = writeln!(out, "{pad}{prefix}{line}  (graph {vs}, complexity {:?})", self.complexity);
        match &self.kind {
            NodeKind::Split { kernel, quotient, .. } => {
                kernel.render_into(out, depth + 1, "kernel: ");
                quotient.render_into(out, depth + 1, "quotient: ");
            }
            NodeKind::CenterQuotient { child, .. } => child.render_into(out, depth + 1, ""),
            _ => {}
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    FreeAbelian,
    Raag,
    /// Fouxe-Rabinovitch factor with four or more free factors.
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesFactor {
    pub kind: FactorKind,
    pub gr1_rank: usize,
    /// Defining graph for RAAG factors (free abelian factors use the complete graph).
    pub graph: Option<Graph>,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubnormalSeries {
    pub factors: Vec<SeriesFactor>,
    pub total_gr1: usize,
}

fn raag_factor(graph: Graph) -> Option<SeriesFactor> {
    let n = graph.vertex_count();
    if n == 0 {
        return None;
    }
    let description = if graph.edge_count() == 0 {
        format!("free RAAG rank {n}")
    } else if graph.is_complete() {
        format!("free abelian RAAG rank {n}")
    } else {
        format!("RAAG on {n} vertices with {} edges", graph.edge_count())
    };
    Some(SeriesFactor { kind: FactorKind::Raag, gr1_rank: n, graph: Some(graph), description })
}

/// Flattens the tree into its factors, kernels first.
pub fn series_summary(root: &DecompositionNode) -> SubnormalSeries {
    let mut factors = Vec::new();
    collect_factors(root, &mut factors);
    let total_gr1 = factors.iter().map(|f| f.gr1_rank).sum();
    SubnormalSeries { factors, total_gr1 }
}

fn collect_factors(node: &DecompositionNode, out: &mut Vec<SeriesFactor>) {
    match &node.kind {
        NodeKind::Split { kernel, quotient, .. } => {
            collect_factors(kernel, out);
            collect_factors(quotient, out);
        }
        NodeKind::CenterQuotient { child, .. } => collect_factors(child, out),
        NodeKind::LeafTrivial => {}
        NodeKind::LeafFreeAbelian { rank } => {
            if *rank > 0 {
                out.push(SeriesFactor {
                    kind: FactorKind::FreeAbelian,
                    gr1_rank: *rank,
                    graph: Some(Graph::complete(*rank)),
                    description: format!("free abelian rank {rank}"),
                });
            }
        }
        NodeKind::LeafFouxeRabinovitch { structure, .. } => match structure {
            FrStructure::DirectInn { inner } => out.extend(raag_factor(join(&inner[0], &inner[1]))),
            FrStructure::SemidirectZH { z_graph, h_graphs } => {
                out.extend(raag_factor(z_graph.clone()));
                let h = h_graphs.iter().skip(1).fold(h_graphs[0].clone(), |acc, x| join(&acc, x));
                out.extend(raag_factor(h));
            }
            FrStructure::Unresolved => {
                let rank = node.omega.outer_rank();
                if rank > 0 {
                    out.push(SeriesFactor {
                        kind: FactorKind::Unresolved,
                        gr1_rank: rank,
                        graph: None,
                        description: format!("Fouxe-Rabinovitch group with gr_1 rank {rank}, structure unresolved"),
                    });
                }
            }
        },
    }
}

impl SubnormalSeries {
    pub fn to_json(&self) -> Value {
        json!({
            "factors": self.factors.iter().map(|f| {
                let mut v = json!({ "kind": f.kind, "gr1_rank": f.gr1_rank, "description": f.description });
                if let Some(g) = &f.graph {
                    v["graph"] = graph_json(g);
                }
                v
            }).collect::<Vec<_>>(),
            "total_gr1": self.total_gr1,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if self.factors.is_empty() {
            out.push_str("no nontrivial factors\n");
        }
        for (i, f) in self.factors.iter().enumerate() {
            let _ = writeln!(out, "N{}/N{}: {} (gr_1 rank {})", i + 1, i, f.description, f.gr1_rank);
        }
        let _ = writeln!(out, "total gr_1 rank: {}", self.total_gr1);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    fn empty() -> SpecialFamily {
        SpecialFamily::empty()
    }

    #[test]
    fn action_examples() {
        let g = Graph::discrete(3);
        let (u, v, w) = (0, 1, 2);
        let c = PartialConjugation::new(&g, v, set(&[u])).unwrap();
        let a = pc_action_on_special(&g, &c, set(&[u])).unwrap();
        assert!(a.preserves && a.acts_trivially);
        let a = pc_action_on_special(&g, &c, set(&[w])).unwrap();
        assert!(a.preserves && a.acts_trivially);
        let a = pc_action_on_special(&g, &c, set(&[u, w])).unwrap();
        assert!(!a.preserves && !a.acts_trivially);
        assert!(pc_action_on_special(&g, &c, g.vertices()).is_err());
    }

    #[test]
    fn relative_generators_examples() {
        let g = Graph::discrete(3);
        let all = relative_partial_conjugations(&g, &empty(), &empty()).unwrap();
        assert_eq!(all.len(), 9);
        assert_eq!(all.iter().filter(|r| r.minimal).count(), 6);
        let h = SpecialFamily::new(&g, [set(&[0, 2])]).unwrap();
        let rel = relative_partial_conjugations(&g, &empty(), &h).unwrap();
        let of_v: Vec<VertexSet> =
            rel.iter().filter(|r| r.conjugation.actor == 1).map(|r| r.conjugation.base).collect();
        assert_eq!(of_v, vec![set(&[0, 2])]);
        assert!(relative_partial_conjugations(&Graph::complete(3), &empty(), &empty()).unwrap().is_empty());
    }

    #[test]
    fn saturation_examples() {
        let g = Graph::discrete(3);
        let s = saturate(&g, &empty(), &empty()).unwrap();
        assert_eq!(s.members().collect::<Vec<_>>(), vec![set(&[0]), set(&[1]), set(&[2])]);
        let path = Graph::path(3);
        assert!(saturate(&path, &empty(), &empty()).unwrap().contains(set(&[0, 1])));
        assert_eq!(saturate(&Graph::complete(3), &empty(), &empty()).unwrap().len(), 6);
        assert!(matches!(
            saturate_with_cap(&Graph::discrete(5), &empty(), &empty(), 4),
            Err(Error::Resource { degree: None, .. })
        ));
    }

    #[test]
    fn g_component_examples() {
        let g = Graph::discrete(3);
        let singles = SpecialFamily::new(&g, [set(&[0]), set(&[1]), set(&[2])]).unwrap();
        assert_eq!(g_components(&g, &singles, g.vertices()).len(), 3);
        let pair = SpecialFamily::new(&g, [set(&[0, 1])]).unwrap();
        assert_eq!(g_components(&g, &pair, g.vertices()), vec![set(&[0, 1]), set(&[2])]);
        let path = Graph::path(3);
        assert_eq!(g_components(&path, &empty(), path.vertices()).len(), 1);
    }

    #[test]
    fn decomposition_examples() {
        let two = decompose_pout(&Graph::discrete(2)).unwrap();
        match &two.kind {
            NodeKind::LeafFouxeRabinovitch { components, structure: FrStructure::DirectInn { inner }, star_ok } => {
                assert_eq!(components.len(), 2);
                assert!(inner.iter().all(|g| g.vertex_count() == 0));
                assert!(star_ok);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(series_summary(&two).total_gr1, 0);
        assert!(series_summary(&two).factors.is_empty());

        let three = decompose_pout(&Graph::discrete(3)).unwrap();
        match &three.kind {
            NodeKind::LeafFouxeRabinovitch { components, structure, .. } => {
                assert_eq!(components.len(), 3);
                assert_eq!(structure.h_ranks(), Some(vec![0, 0, 0]));
            }
            other => panic!("{other:?}"),
        }
        let s = series_summary(&three);
        assert_eq!(s.total_gr1, 3);
        assert_eq!(s.factors.len(), 1);
        assert_eq!(s.factors[0].description, "free RAAG rank 3");

        let p4 = decompose_pout(&Graph::path(4)).unwrap();
        assert_eq!(p4.kind, NodeKind::LeafFreeAbelian { rank: 0 });

        assert_eq!(series_summary(&decompose_pout(&Graph::star_graph(3)).unwrap()).total_gr1, 3);
    }
}
