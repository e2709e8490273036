//! Partial conjugations, Ω-partitions and finite presentations of
//! `PAut(A_Γ)`, `POut(A_Γ)` and PAut-like groups.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{ComponentClass, Graph, VertexSet};

/// Version tag written into exported presentations.
pub const PRESENTATION_FORMAT_VERSION: u32 = 1;

/// The automorphism conjugating every vertex of `base` by `actor`.
///
/// `base` is a nonempty union of components of `Γ ∖ st(actor)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PartialConjugation {
    pub actor: usize,
    pub base: VertexSet,
}

impl PartialConjugation {
    pub fn new(g: &Graph, actor: usize, base: VertexSet) -> Result<Self> {
        let c = PartialConjugation { actor, base };
        c.validate(g)?;
        Ok(c)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        g.check_vertex(self.actor)?;
        g.check_subset(self.base)?;
        if self.base.is_empty() {
            return Err(Error::input("partial conjugation with empty base"));
        }
        let comp = g.star_complement(self.actor);
        if !self.base.is_subset(comp) {
            return Err(Error::input(format!("base {} meets st({})", g.format_set(self.base), g.name(self.actor))));
        }
        for c in g.star_components(self.actor) {
            if c.meets(self.base) && !c.is_subset(self.base) {
                return Err(Error::input(format!(
                    "base {} splits the component {} of Γ∖st({})",
                    g.format_set(self.base),
                    g.format_set(c),
                    g.name(self.actor)
                )));
            }
        }
        Ok(())
    }

    /// `c_{base}^actor`, e.g. `c_{b,c}^a`.
    pub fn label(&self, g: &Graph) -> String {
        let names: Vec<&str> = self.base.iter().map(|v| g.name(v)).collect();
        format!("c_{{{}}}^{}", names.join(","), g.name(self.actor))
    }
}

/// For every vertex `v`, a partition of `Γ ∖ st(v)` into unions of components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OmegaPartition {
    blocks: Vec<Vec<VertexSet>>,
}

/// The standard partition: every block is a single component of `Γ ∖ st(v)`.
pub fn standard_omega(g: &Graph) -> OmegaPartition {
    OmegaPartition { blocks: g.vertices().iter().map(|v| g.star_components(v)).collect() }
}

impl OmegaPartition {
    /// Checks every invariant; blocks are sorted into canonical order.
    pub fn new(g: &Graph, mut blocks: Vec<Vec<VertexSet>>) -> Result<Self> {
        for list in &mut blocks {
            list.sort();
        }
        check_structure(g, &blocks)?;
        let omega = OmegaPartition { blocks };
        omega.check_relations(g)?;
        Ok(omega)
    }

    pub fn standard(g: &Graph) -> Self {
        standard_omega(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.blocks.len()
    }

    /// `Ω^v`, in canonical order.
    pub fn blocks(&self, v: usize) -> &[VertexSet] {
        &self.blocks[v]
    }

    pub fn all_blocks(&self) -> &[Vec<VertexSet>] {
        &self.blocks
    }

    /// The block of `Ω^actor` containing `x`, if any.
    pub fn block_containing(&self, actor: usize, x: usize) -> Option<VertexSet> {
        self.blocks[actor].iter().copied().find(|b| b.contains(x))
    }

    /// Partial conjugations by blocks, in generator order.
    pub fn generators(&self) -> Vec<PartialConjugation> {
        let mut out: Vec<PartialConjugation> = self
            .blocks
            .iter()
            .enumerate()
            .flat_map(|(v, list)| list.iter().map(move |&base| PartialConjugation { actor: v, base }))
            .collect();
        out.sort();
        out
    }

    /// `Σ_v max(|Ω^v| - 1, 0)`: the rank of the degree-one part after the
    /// inner relations are imposed.
    pub fn outer_rank(&self) -> usize {
        self.blocks.iter().map(|l| l.len().saturating_sub(1)).sum()
    }

    /// Class of the block `a ∈ Ω^v` relative to the non-adjacent pair `(v, w)`.
    pub fn block_class(&self, v: usize, w: usize, a: VertexSet) -> Option<ComponentClass> {
        if a.contains(w) {
            return Some(ComponentClass::Dominant { opposite: w });
        }
        if self.blocks[w].contains(&a) {
            return Some(ComponentClass::Shared);
        }
        match self.block_containing(w, v) {
            Some(d) if a.is_subset(d) => Some(ComponentClass::Subordinate),
            _ => None,
        }
    }

    /// Every non-dominant block is subordinate or shared, for each non-adjacent pair.
    pub fn check_relations(&self, g: &Graph) -> Result<()> {
        for v in g.vertices() {
            for w in g.star_complement(v) {
                for &a in &self.blocks[v] {
                    if self.block_class(v, w, a).is_none() {
                        return Err(Error::validation(format!(
                            "block {} of Ω^{} is neither dominant, subordinate nor shared relative to {}",
                            g.format_set(a),
                            g.name(v),
                            g.name(w)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Re-checks all invariants against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        check_structure(g, &self.blocks)?;
        self.check_relations(g)
    }
}

fn check_structure(g: &Graph, blocks: &[Vec<VertexSet>]) -> Result<()> {
    if blocks.len() != g.vertex_count() {
        return Err(Error::validation(format!(
            "Ω-partition lists {} vertices, graph has {}",
            blocks.len(),
            g.vertex_count()
        )));
    }
    for (v, list) in blocks.iter().enumerate() {
        let comp = g.star_complement(v);
        let comps = g.star_components(v);
        let mut seen = VertexSet::EMPTY;
        for &b in list {
            let bad = |why: &str| Error::validation(format!("block {} of Ω^{}: {why}", g.format_set(b), g.name(v)));
            if b.is_empty() {
                return Err(bad("empty block"));
            }
            if !b.is_subset(comp) {
                return Err(bad("not contained in Γ∖st(v)"));
            }
            if b.meets(seen) {
                return Err(bad("overlaps another block"));
            }
            if comps.iter().any(|c| c.meets(b) && !c.is_subset(b)) {
                return Err(bad("not a union of components of Γ∖st(v)"));
            }
            seen = seen.union(b);
        }
        if seen != comp {
            return Err(Error::validation(format!(
                "blocks of Ω^{} miss {}",
                g.name(v),
                g.format_set(comp.difference(seen))
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PresentationKind {
    PAut,
    POut,
    PAutLike,
}

/// A word in the generators; exponents are `±1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupWord(pub Vec<(usize, i8)>);

impl GroupWord {
    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A defining relator.
///
/// `Commutator { left, right }` is `[∏ left, ∏ right]` with
/// `[x, y] = x⁻¹y⁻¹xy`; the generators within a side pairwise commute in
/// every relator produced here, so sides are stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Relator {
    Commutator { left: Vec<usize>, right: Vec<usize> },
    Product { factors: Vec<usize> },
}

impl Relator {
    pub fn commutator(mut left: Vec<usize>, mut right: Vec<usize>) -> Relator {
        left.sort_unstable();
        right.sort_unstable();
        if (left.len(), &left) > (right.len(), &right) {
            std::mem::swap(&mut left, &mut right);
        }
        Relator::Commutator { left, right }
    }

    pub fn word(&self) -> GroupWord {
        match self {
            Relator::Commutator { left, right } => {
                let x = GroupWord(left.iter().map(|&g| (g, 1)).collect());
                let y = GroupWord(right.iter().map(|&g| (g, 1)).collect());
                let mut w = x.inverse().0;
                w.extend(y.inverse().0);
                w.extend(x.0);
                w.extend(y.0);
                GroupWord(w)
            }
            Relator::Product { factors } => GroupWord(factors.iter().map(|&g| (g, 1)).collect()),
        }
    }

    /// Whether this is `[x, y]` for two single generators.
    pub fn is_simple_commutator(&self) -> bool {
        matches!(self, Relator::Commutator { left, right } if left.len() == 1 && right.len() == 1)
    }

    fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        let (a, b): (&[usize], &[usize]) = match self {
            Relator::Commutator { left, right } => (left, right),
            Relator::Product { factors } => (factors, &[]),
        };
        a.iter().chain(b).copied()
    }
}

/// A finite presentation by partial conjugations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub kind: PresentationKind,
    pub vertex_names: Vec<String>,
    pub generators: Vec<PartialConjugation>,
    pub relators: Vec<Relator>,
}

/// Presentation of the PAut-like group with generators the blocks of `omega`.
pub fn paut_like_presentation(g: &Graph, omega: &OmegaPartition) -> Result<GroupPresentation> {
    omega.validate(g)?;
    let generators = omega.generators();
    let index: HashMap<(usize, VertexSet), usize> =
        generators.iter().enumerate().map(|(i, c)| ((c.actor, c.base), i)).collect();
    let idx = |v: usize, b: VertexSet| index[&(v, b)];
    let mut relators = BTreeSet::new();

    for (i, ci) in generators.iter().enumerate() {
        for (j, cj) in generators.iter().enumerate().skip(i + 1) {
            let (v, a, w, b) = (ci.actor, ci.base, cj.actor, cj.base);
            let commute = if v == w || g.adjacent(v, w) {
                true
            } else {
                let class_a = omega.block_class(v, w, a);
                let class_b = omega.block_class(w, v, b);
                class_a == Some(ComponentClass::Subordinate)
                    || class_b == Some(ComponentClass::Subordinate)
                    || (a != b && class_a == Some(ComponentClass::Shared) && class_b == Some(ComponentClass::Shared))
            };
            if commute {
                relators.insert(Relator::commutator(vec![i], vec![j]));
            }
        }
    }

    for v in g.vertices() {
        for w in g.star_complement(v).iter().filter(|&w| w > v) {
            let d_v = omega.block_containing(w, v).expect("v lies in a block of Ω^w");
            let d_w = omega.block_containing(v, w).expect("w lies in a block of Ω^v");
            for &a in omega.blocks(v) {
                if omega.block_class(v, w, a) != Some(ComponentClass::Shared) {
                    continue;
                }
                relators.insert(Relator::commutator(vec![idx(v, a)], vec![idx(w, a), idx(w, d_v)]));
                relators.insert(Relator::commutator(vec![idx(v, a), idx(v, d_w)], vec![idx(w, a)]));
            }
        }
    }

    let kind = if *omega == standard_omega(g) { PresentationKind::PAut } else { PresentationKind::PAutLike };
    Ok(GroupPresentation {
        kind,
        vertex_names: g.names().to_vec(),
        generators,
        relators: relators.into_iter().collect(),
    })
}

/// [`paut_like_presentation`] plus one product relator `∏_{A ∈ Ω^v} c_A^v` per vertex.
pub fn pout_presentation(g: &Graph, omega: &OmegaPartition) -> Result<GroupPresentation> {
    let mut p = paut_like_presentation(g, omega)?;
    let mut extra = Vec::new();
    for v in g.vertices() {
        let factors: Vec<usize> =
            p.generators.iter().enumerate().filter(|(_, c)| c.actor == v).map(|(i, _)| i).collect();
        if !factors.is_empty() {
            extra.push(Relator::Product { factors });
        }
    }
    p.relators.extend(extra);
    p.relators.sort();
    p.kind = PresentationKind::POut;
    Ok(p)
}

/// True iff every relator is a commutator of two single generators.
pub fn is_raag_shaped(p: &GroupPresentation) -> bool {
    p.relators.iter().all(Relator::is_simple_commutator)
}

impl GroupPresentation {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn label(&self, i: usize) -> String {
        let c = &self.generators[i];
        let names: Vec<&str> = c.base.iter().map(|v| self.vertex_names[v].as_str()).collect();
        format!("c_{{{}}}^{}", names.join(","), self.vertex_names[c.actor])
    }

    pub fn words(&self) -> Vec<GroupWord> {
        self.relators.iter().map(Relator::word).collect()
    }

    /// Checks that relators only mention existing generators.
    pub fn validate(&self) -> Result<()> {
        let n = self.generators.len();
        for r in &self.relators {
            if let Some(bad) = r.generators().find(|&g| g >= n) {
                return Err(Error::validation(format!("relator mentions generator {bad} of {n}")));
            }
        }
        Ok(())
    }

    fn side(&self, gens: &[usize]) -> String {
        gens.iter().map(|&i| self.label(i)).collect::<Vec<_>>().join(" ")
    }

    fn relator_text(&self, r: &Relator) -> String {
        match r {
            Relator::Commutator { left, right } => format!("[{}, {}]", self.side(left), self.side(right)),
            Relator::Product { factors } => self.side(factors),
        }
    }

    /// Plain text export: a header, then `gen:` and `rel:` lines.
    pub fn to_text(&self) -> String {
        let mut out = format!("# raag-paut presentation v{PRESENTATION_FORMAT_VERSION}\n");
        let _ = writeln!(out, "kind: {:?}", self.kind);
        for i in 0..self.generators.len() {
            let _ = writeln!(out, "gen: {}", self.label(i));
        }
        for r in &self.relators {
            let _ = writeln!(out, "rel: {}", self.relator_text(r));
        }
        out
    }

    /// JSON export with generator descriptors and relator index arrays.
    pub fn to_json(&self) -> serde_json::Value {
        let generators: Vec<_> = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, c)| {
                json!({
                    "label": self.label(i),
                    "actor": self.vertex_names[c.actor],
                    "base": c.base.iter().map(|v| self.vertex_names[v].clone()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let relators: Vec<_> = self
            .relators
            .iter()
            .map(|r| {
                let mut v = serde_json::to_value(r).expect("relators serialize");
                v["word"] = serde_json::to_value(r.word()).expect("words serialize");
                v["text"] = json!(self.relator_text(r));
                v
            })
            .collect();
        json!({
            "format": "raag-paut/presentation",
            "version": PRESENTATION_FORMAT_VERSION,
            "kind": self.kind,
            "vertices": self.vertex_names,
            "generators": generators,
            "relators": relators,
        })
    }
}

/// Blocks produced by [`omega_split`], indexed by vertex of the ambient graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OmegaSplit {
    pub delta: VertexSet,
    /// `Ω_P^v`: for `v ∈ Δ`, the blocks of `Ω^v` meeting `Δ`; empty otherwise.
    pub p: Vec<Vec<VertexSet>>,
    /// `Ω_H^v`: blocks missing `Δ` plus their union `S^v` of the rest, for `v ∈ Δ`; `Ω^v` otherwise.
    pub h: Vec<Vec<VertexSet>>,
}

/// Splits `omega` along `delta` into the data for the kernel and the quotient.
pub fn omega_split(g: &Graph, omega: &OmegaPartition, delta: VertexSet) -> Result<OmegaSplit> {
    g.check_subset(delta)?;
    if delta.is_empty() || delta == g.vertices() {
        return Err(Error::input(format!("{} is not a proper nonempty vertex set", g.format_set(delta))));
    }
    if omega.vertex_count() != g.vertex_count() {
        return Err(Error::validation("Ω-partition does not match the graph"));
    }
    if let Some(v) = delta.iter().find(|&v| delta.is_subset(g.star(v))) {
        return Err(Error::domain(format!(
            "{} lies in st({}) for its own vertex {}; the split needs no such vertex",
            g.format_set(delta),
            g.name(v),
            g.name(v)
        )));
    }
    let mut p = vec![Vec::new(); g.vertex_count()];
    let mut h = omega.all_blocks().to_vec();
    for v in delta {
        let (meet, miss): (Vec<VertexSet>, Vec<VertexSet>) = omega.blocks(v).iter().partition(|b| b.meets(delta));
        let s: VertexSet = meet.iter().fold(VertexSet::EMPTY, |acc, &b| acc.union(b));
        let mut hv = miss;
        if !s.is_empty() {
            hv.push(s);
        }
        hv.sort();
        h[v] = hv;
        p[v] = meet;
    }
    Ok(OmegaSplit { delta, p, h })
}

impl OmegaSplit {
    /// `Ω_H` as a validated partition of `g`.
    pub fn h_partition(&self, g: &Graph) -> Result<OmegaPartition> {
        OmegaPartition::new(g, self.h.clone())
    }

    /// The graph induced on `Δ` with old indices, and `Ω_P` intersected with `Δ` on it.
    pub fn p_restricted(&self, g: &Graph) -> Result<(Graph, Vec<usize>, OmegaPartition)> {
        let (sub, old) = g.induced(self.delta);
        let blocks = old
            .iter()
            .map(|&v| self.p[v].iter().map(|b| reindex(b.intersection(self.delta), &old)).collect::<Vec<_>>())
            .collect();
        let omega = OmegaPartition::new(&sub, blocks)?;
        Ok((sub, old, omega))
    }
}

/// Maps a subset of old vertices onto the indices of an induced subgraph.
pub(crate) fn reindex(s: VertexSet, old: &[usize]) -> VertexSet {
    old.iter().enumerate().filter(|(_, &o)| s.contains(o)).map(|(i, _)| i).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    fn abc_path() -> Graph {
        Graph::from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn standard_omega_examples() {
        let d = Graph::discrete(3);
        assert_eq!(standard_omega(&d).blocks(1), &[set(&[0]), set(&[2])]);
        let p = abc_path();
        let om = standard_omega(&p);
        assert_eq!(om.blocks(0), &[set(&[2])]);
        assert!(om.blocks(1).is_empty());
        assert!(standard_omega(&Graph::complete(3)).all_blocks().iter().all(Vec::is_empty));
    }

    #[test]
    fn discrete_three_presentation_counts() {
        let g = Graph::discrete(3);
        let p = paut_like_presentation(&g, &standard_omega(&g)).unwrap();
        assert_eq!(p.kind, PresentationKind::PAut);
        assert_eq!(p.generators.len(), 6);
        assert_eq!(p.relators.len(), 9);
        assert_eq!(p.relators.iter().filter(|r| r.is_simple_commutator()).count(), 3);
        assert!(!is_raag_shaped(&p));
        let q = pout_presentation(&g, &standard_omega(&g)).unwrap();
        assert_eq!(q.relators.len(), 12);
        assert_eq!(q.kind, PresentationKind::POut);
    }

    #[test]
    fn path_and_complete_presentations() {
        let g = abc_path();
        let p = paut_like_presentation(&g, &standard_omega(&g)).unwrap();
        assert_eq!(p.generators.len(), 2);
        assert!(p.relators.is_empty());
        assert!(is_raag_shaped(&p));
        let q = pout_presentation(&g, &standard_omega(&g)).unwrap();
        assert_eq!(q.relators, vec![Relator::Product { factors: vec![0] }, Relator::Product { factors: vec![1] }]);
        let k = Graph::complete(3);
        let p = pout_presentation(&k, &standard_omega(&k)).unwrap();
        assert!(p.generators.is_empty() && p.relators.is_empty());
    }

    #[test]
    fn commutator_word_convention() {
        let r = Relator::commutator(vec![4, 2], vec![1]);
        assert_eq!(r, Relator::Commutator { left: vec![1], right: vec![2, 4] });
        assert_eq!(r.word().0, vec![(1, -1), (4, -1), (2, -1), (1, 1), (2, 1), (4, 1)]);
    }

    #[test]
    fn omega_split_examples() {
        let g = Graph::discrete(3);
        let s = omega_split(&g, &standard_omega(&g), set(&[0, 1])).unwrap();
        assert_eq!(s.p[0], vec![set(&[1])]);
        assert_eq!(s.h[0], vec![set(&[1]), set(&[2])]);
        s.h_partition(&g).unwrap();

        let g = Graph::discrete(4);
        let s = omega_split(&g, &standard_omega(&g), set(&[0, 1, 2])).unwrap();
        assert_eq!(s.p[0], vec![set(&[1]), set(&[2])]);
        assert_eq!(s.h[0], vec![set(&[1, 2]), set(&[3])]);
        assert_eq!(s.h[3], standard_omega(&g).blocks(3));

        assert!(matches!(omega_split(&g, &standard_omega(&g), set(&[0])), Err(Error::Domain(_))));
        assert!(matches!(omega_split(&g, &standard_omega(&g), g.vertices()), Err(Error::Input(_))));
    }

    #[test]
    fn invalid_omega_names_block() {
        let g = Graph::discrete(4);
        // relative to 3, the merged block {1,2} of Ω^0 has no class
        let mut blocks = standard_omega(&g).all_blocks().to_vec();
        blocks[0] = vec![set(&[1, 2]), set(&[3])];
        let err = OmegaPartition::new(&g, blocks).unwrap_err();
        assert!(matches!(err, Error::Validation(ref m) if m.contains("{1,2} of Ω^0")), "{err}");
        // the same merge is fine in the discrete graph on three vertices
        let g = Graph::discrete(3);
        OmegaPartition::new(&g, vec![vec![set(&[1, 2])], vec![set(&[0]), set(&[2])], vec![set(&[0]), set(&[1])]])
            .unwrap();
        let err =
            OmegaPartition::new(&g, vec![vec![set(&[1])], vec![set(&[0]), set(&[2])], vec![set(&[0]), set(&[1])]])
                .unwrap_err();
        assert!(err.to_string().contains("miss"));
    }

    #[test]
    fn exports_have_headers() {
        let g = Graph::discrete(3);
        let p = paut_like_presentation(&g, &standard_omega(&g)).unwrap();
        let text = p.to_text();
        assert!(text.starts_with("# raag-paut presentation v1\n"));
        assert_eq!(text.lines().filter(|l| l.starts_with("gen: ")).count(), 6);
        assert!(text.contains("rel: [c_{1}^0, c_{2}^0]"));
        let js = p.to_json();
        assert_eq!(js["version"], 1);
        assert_eq!(js["relators"].as_array().unwrap().len(), 9);
    }
}
