//! Quadratic Lie presentations of the lower central series Lie algebras
//! and their graded dimensions.

mod lyndon;

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{ComputeOptions, Echelon, Field, FieldRef, Rationals, SparseRow};
use crate::presentation::{
    paut_like_presentation, pout_presentation, standard_omega, GroupPresentation, OmegaPartition, Relator,
};
use crate::series::{witt_number, GradedDims};

use lyndon::{lyndon_words, Bracketer, Word};

/// Default degree bound for dimension tables.
pub const DEFAULT_MAX_DEGREE: usize = 4;

/// `Σ q_ij [g_i, g_j]` with `i < j`, sorted, no zero coefficients.
pub type LieRelator = Vec<((usize, usize), BigRational)>;

/// A Lie algebra presented by degree-one generators, linear relations and
/// quadratic relators, over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadLiePresentation {
    pub generators: Vec<String>,
    pub linear_relations: Vec<SparseRow<BigRational>>,
    pub quadratic_relators: Vec<LieRelator>,
}

/// Which Lie algebra [`lie_presentation`] builds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieVariant {
    PAut,
    POut,
    Raag,
    PAutLike(OmegaPartition),
    POutLike(OmegaPartition),
}

impl QuadLiePresentation {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Free Lie algebra on `m` generators.
    pub fn free(m: usize) -> Self {
        QuadLiePresentation {
            generators: (0..m).map(|i| format!("x{i}")).collect(),
            linear_relations: Vec::new(),
            quadratic_relators: Vec::new(),
        }
    }

    /// Builds a presentation from bracket lists; terms are normalized.
    pub fn from_relators(
        generators: Vec<String>,
        relators: impl IntoIterator<Item = Vec<((usize, usize), BigRational)>>,
    ) -> Result<Self> {
        let m = generators.len();
        let mut quadratic_relators = Vec::new();
        for r in relators {
            let mut acc = BTreeMap::new();
            for ((i, j), q) in r {
                if i >= m || j >= m {
                    return Err(Error::input(format!("bracket [{i}, {j}] mentions a missing generator")));
                }
                add_bracket(&mut acc, i, j, q);
            }
            let r: LieRelator = acc.into_iter().collect();
            if !r.is_empty() {
                quadratic_relators.push(r);
            }
        }
        Ok(QuadLiePresentation { generators, linear_relations: Vec::new(), quadratic_relators })
    }

    pub(crate) fn check(&self) -> Result<()> {
        let m = self.generators.len();
        let bad = self.quadratic_relators.iter().flatten().any(|((i, j), q)| i >= j || *j >= m || q.is_zero())
            || self.linear_relations.iter().flatten().any(|(i, q)| *i >= m || q.is_zero());
        if bad {
            return Err(Error::input("Lie presentation is not in normalized form"));
        }
        Ok(())
    }
}

fn add_bracket(acc: &mut BTreeMap<(usize, usize), BigRational>, i: usize, j: usize, q: BigRational) {
    use std::cmp::Ordering::*;
    let (key, q) = match i.cmp(&j) {
        Equal => return,
        Less => ((i, j), q),
        Greater => ((j, i), -q),
    };
    let e = acc.entry(key).or_insert_with(BigRational::zero);
    *e += q;
    if e.is_zero() {
        acc.remove(&key);
    }
}

/// Translates a group presentation: `[∏ X, ∏ Y]` becomes `[Σ X, Σ Y]` and
/// each product relator becomes a linear relation.
pub fn lie_from_group(p: &GroupPresentation) -> Result<QuadLiePresentation> {
    let generators: Vec<String> = (0..p.generator_count()).map(|i| p.label(i)).collect();
    let mut quadratic = Vec::new();
    let mut linear = Vec::new();
    for r in &p.relators {
        match r {
            Relator::Commutator { left, right } => {
                let terms = left.iter().flat_map(|&a| right.iter().map(move |&b| ((a, b), BigRational::one())));
                quadratic.push(terms.collect::<Vec<_>>());
            }
            Relator::Product { factors } => {
                let mut row: SparseRow<BigRational> = factors.iter().map(|&f| (f, BigRational::one())).collect();
                row.sort_by_key(|(c, _)| *c);
                linear.push(row);
            }
        }
    }
    let mut l = QuadLiePresentation::from_relators(generators, quadratic)?;
    l.linear_relations = linear;
    Ok(l)
}

/// The quadratic Lie presentation of `gr(G)` for the chosen group `G` over `g`.
pub fn lie_presentation(g: &Graph, variant: &LieVariant) -> Result<QuadLiePresentation> {
    match variant {
        LieVariant::Raag => {
            let one = BigRational::one;
            QuadLiePresentation::from_relators(
                g.names().to_vec(),
                g.edges().into_iter().map(|(a, b)| vec![((a, b), one())]),
            )
        }
        LieVariant::PAut => lie_from_group(&paut_like_presentation(g, &standard_omega(g))?),
        LieVariant::POut => lie_from_group(&pout_presentation(g, &standard_omega(g))?),
        LieVariant::PAutLike(omega) => lie_from_group(&paut_like_presentation(g, omega)?),
        LieVariant::POutLike(omega) => lie_from_group(&pout_presentation(g, omega)?),
    }
}

/// Removes the linear relations by solving each for its canonically last
/// generator and substituting into the quadratic relators.
pub fn eliminate_linear(l: &QuadLiePresentation) -> Result<QuadLiePresentation> {
    l.check()?;
    if l.linear_relations.is_empty() {
        return Ok(l.clone());
    }
    let m = l.generators.len();
    let mut ech = Echelon::new(Rationals, m);
    for row in &l.linear_relations {
        let mut rev: SparseRow<BigRational> = row.iter().map(|(c, q)| (m - 1 - c, q.clone())).collect();
        rev.sort_by_key(|(c, _)| *c);
        ech.insert(rev);
    }
    if ech.rank() != l.linear_relations.len() {
        return Err(Error::internal("linear relations are dependent"));
    }
    // expression of every old generator in the old free generators
    let mut expr: Vec<Vec<(usize, BigRational)>> = (0..m).map(|i| vec![(i, BigRational::one())]).collect();
    let mut solved = vec![false; m];
    for row in ech.rref() {
        let pivot = m - 1 - row[0].0;
        solved[pivot] = true;
        expr[pivot] = row[1..].iter().map(|(c, q)| (m - 1 - c, -q.clone())).collect();
    }
    let mut new_index = vec![usize::MAX; m];
    let mut generators = Vec::new();
    for i in (0..m).filter(|&i| !solved[i]) {
        new_index[i] = generators.len();
        generators.push(l.generators[i].clone());
    }
    let relators = l.quadratic_relators.iter().map(|r| {
        let mut terms = Vec::new();
        for ((a, b), q) in r {
            for (x, alpha) in &expr[*a] {
                for (y, beta) in &expr[*b] {
                    terms.push(((new_index[*x], new_index[*y]), q * alpha * beta));
                }
            }
        }
        terms
    });
    QuadLiePresentation::from_relators(generators, relators.collect::<Vec<_>>())
}

/// Graded dimensions `d_1..d_D` of a presentation without linear relations.
pub fn graded_dims(l: &QuadLiePresentation, max_degree: usize) -> Result<GradedDims> {
    graded_dims_with(l, max_degree, &ComputeOptions::default())
}

pub fn graded_dims_with(l: &QuadLiePresentation, max_degree: usize, opts: &ComputeOptions) -> Result<GradedDims> {
    if !l.linear_relations.is_empty() {
        return Err(Error::input("presentation has linear relations; call eliminate_linear first"));
    }
    ideal_graded_dims_with(l, max_degree, opts)
}

/// Graded dimensions of the quotient of the free Lie algebra by the ideal
/// generated by the linear relations and the quadratic relators together.
pub fn ideal_graded_dims(l: &QuadLiePresentation, max_degree: usize) -> Result<GradedDims> {
    ideal_graded_dims_with(l, max_degree, &ComputeOptions::default())
}

pub fn ideal_graded_dims_with(l: &QuadLiePresentation, max_degree: usize, opts: &ComputeOptions) -> Result<GradedDims> {
    l.check()?;
    if max_degree < 1 {
        return Err(Error::input("degree bound must be at least 1"));
    }
    if l.generators.len() > u16::MAX as usize {
        return Err(Error::input("too many generators"));
    }
    opts.run(|f| match f.visit() {
        FieldRef::Rational(q) => dims_over(q, l, max_degree, opts),
        FieldRef::Prime(p) => dims_over(p, l, max_degree, opts),
    })
}

fn dims_over<F: Field>(
    field: &F,
    l: &QuadLiePresentation,
    max_degree: usize,
    opts: &ComputeOptions,
) -> Result<GradedDims> {
    let m = l.generators.len();
    let lift = |q: &BigRational| field.from_rational(q);

    let mut prev = Echelon::new(field.clone(), m);
    for row in &l.linear_relations {
        let r = row.iter().map(|(c, q)| Ok((*c, lift(q)?))).collect::<Result<Vec<_>>>()?;
        prev.insert(r);
    }
    let mut dims = vec![(m - prev.rank()) as u64];
    let mut prev_words: Vec<Word> = (0..m as u16).map(|x| vec![x]).collect();
    let mut bracketer = Bracketer::default();

    for n in 2..=max_degree {
        let witt = witt_number(m as u64, n)?;
        let word_bytes = (witt as usize).saturating_mul(n * 2 + 48);
        opts.check_guard(n, word_bytes)?;
        let words = lyndon_words(m, n);
        debug_assert_eq!(words.len() as u64, witt);
        let index: std::collections::HashMap<&[u16], usize> =
            words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
        let mut cur = Echelon::new(field.clone(), words.len());

        if n == 2 {
            for r in &l.quadratic_relators {
                let mut row = r
                    .iter()
                    .map(|((i, j), q)| Ok((index[[*i as u16, *j as u16].as_slice()], lift(q)?)))
                    .collect::<Result<Vec<_>>>()?;
                row.sort_by_key(|(c, _)| *c);
                cur.insert(row);
            }
        }

        for (k, row) in prev.rows().iter().enumerate() {
            for x in 0..m as u16 {
                let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
                for (col, coef) in row {
                    for (w, c) in bracketer.bracket(&prev_words[*col], &[x]).iter() {
                        let term = field.mul(coef, &field.from_i64(*c));
                        let slot = acc.entry(index[w.as_slice()]).or_insert_with(|| field.zero());
                        *slot = field.add(slot, &term);
                    }
                }
                let sparse: SparseRow<F::Elem> = acc.into_iter().filter(|(_, e)| !field.is_zero(e)).collect();
                if !sparse.is_empty() {
                    cur.insert(sparse);
                }
            }
            if k % 64 == 0 {
                opts.check_guard(n, word_bytes + cur.bytes_estimate() + bracketer.memo_len() * 96)?;
            }
        }
        dims.push(witt - cur.rank() as u64);
        prev = cur;
        prev_words = words;
    }
    Ok(GradedDims(dims))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn abc_path() -> Graph {
        Graph::from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn raag_presentation_of_path() {
        let l = lie_presentation(&abc_path(), &LieVariant::Raag).unwrap();
        assert_eq!(l.generators, vec!["a", "b", "c"]);
        assert_eq!(l.quadratic_relators, vec![vec![((0, 1), q(1))], vec![((1, 2), q(1))]]);
    }

    #[test]
    fn paut_and_pout_shapes() {
        let g = Graph::discrete(3);
        let l = lie_presentation(&g, &LieVariant::PAut).unwrap();
        assert_eq!((l.generators.len(), l.quadratic_relators.len(), l.linear_relations.len()), (6, 9, 0));
        let p = lie_presentation(&abc_path(), &LieVariant::POut).unwrap();
        assert_eq!((p.generators.len(), p.quadratic_relators.len(), p.linear_relations.len()), (2, 0, 2));
        assert_eq!(eliminate_linear(&p).unwrap().generators.len(), 0);
        let o = eliminate_linear(&lie_presentation(&g, &LieVariant::POut).unwrap()).unwrap();
        assert_eq!(o.generators.len(), 3);
        assert!(o.linear_relations.is_empty());
    }

    #[test]
    fn small_dimension_tables() {
        assert_eq!(graded_dims(&QuadLiePresentation::free(2), 4).unwrap().0, vec![2, 1, 2, 3]);
        let abelian =
            QuadLiePresentation::from_relators(vec!["x".into(), "y".into()], vec![vec![((1, 0), q(-1))]]).unwrap();
        assert_eq!(graded_dims(&abelian, 4).unwrap().0, vec![2, 0, 0, 0]);
        let g = Graph::discrete(3);
        let l = lie_presentation(&g, &LieVariant::PAut).unwrap();
        assert_eq!(graded_dims(&l, 2).unwrap().0, vec![6, 6]);
    }

    #[test]
    fn pout_of_discrete_three_is_free() {
        let g = Graph::discrete(3);
        let l = eliminate_linear(&lie_presentation(&g, &LieVariant::POut).unwrap()).unwrap();
        assert_eq!(graded_dims(&l, 4).unwrap().0, vec![3, 3, 8, 18]);
    }

    #[test]
    fn errors() {
        let l = QuadLiePresentation::free(2);
        assert!(matches!(graded_dims(&l, 0), Err(Error::Input(_))));
        let p = lie_presentation(&abc_path(), &LieVariant::POut).unwrap();
        assert!(matches!(graded_dims(&p, 2), Err(Error::Input(_))));
        let tight = ComputeOptions { memory_guard: 1000, ..Default::default() };
        let big = QuadLiePresentation::free(6);
        match graded_dims_with(&big, 5, &tight) {
            Err(Error::Resource { degree: Some(d), .. }) => assert!(d >= 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn modular_path_agrees() {
        let g = Graph::discrete(3);
        let l = lie_presentation(&g, &LieVariant::PAut).unwrap();
        let fast = ComputeOptions { arithmetic: crate::linalg::Arithmetic::Modular { seed: 7 }, ..Default::default() };
        assert_eq!(graded_dims_with(&l, 4, &fast).unwrap(), graded_dims(&l, 4).unwrap());
    }
}
