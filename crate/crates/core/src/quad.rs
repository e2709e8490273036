//! Quadratic associative algebras `T(V)/(R)`: enveloping algebras of the
//! quadratic Lie presentations, Hilbert series, quadratic duals and the
//! numerical Koszul cross-check.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lie::{lie_presentation, LieVariant, QuadLiePresentation};
use crate::linalg::{orthogonal_complement, ComputeOptions, Echelon, Field, FieldRef, Rationals, SparseRow};
use crate::series::{inverse_alternating, HilbertSeries};

/// `T(V)/(R)` with `dim V = m` and `R ⊆ V⊗V`; coordinate `i·m + j` is `e_i⊗e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticAlgebra {
    m: usize,
    relations: Vec<SparseRow<BigRational>>,
}

impl QuadraticAlgebra {
    /// Canonicalizes the span of `rows` to reduced row echelon form.
    pub fn new(m: usize, rows: impl IntoIterator<Item = SparseRow<BigRational>>) -> Result<Self> {
        let mut ech = Echelon::new(Rationals, m * m);
        for mut row in rows {
            row.sort_by_key(|(c, _)| *c);
            if row.iter().any(|(c, _)| *c >= m * m) {
                return Err(Error::input(format!("relation coordinate out of range for m = {m}")));
            }
            row.retain(|(_, q)| !q.is_zero());
            ech.insert(row);
        }
        Ok(QuadraticAlgebra { m, relations: ech.rref() })
    }

    pub fn free(m: usize) -> Self {
        QuadraticAlgebra { m, relations: Vec::new() }
    }

    /// The polynomial algebra: `e_i⊗e_j - e_j⊗e_i` for `i < j`.
    pub fn polynomial(m: usize) -> Self {
        let rows = (0..m).flat_map(|i| (i + 1..m).map(move |j| commutator_row(m, i, j, BigRational::one())));
        QuadraticAlgebra::new(m, rows.collect::<Vec<_>>()).expect("coordinates in range")
    }

    pub fn generator_count(&self) -> usize {
        self.m
    }

    /// Basis of `R` in reduced row echelon form.
    pub fn relation_space(&self) -> &[SparseRow<BigRational>] {
        &self.relations
    }

    pub fn relation_dim(&self) -> usize {
        self.relations.len()
    }
}

fn commutator_row(m: usize, i: usize, j: usize, q: BigRational) -> SparseRow<BigRational> {
    let mut row = vec![(i * m + j, q.clone()), (j * m + i, -q)];
    row.sort_by_key(|(c, _)| *c);
    row
}

/// `U(𝔤)` for `𝔤` presented without linear relations.
pub fn enveloping_quadratic(l: &QuadLiePresentation) -> Result<QuadraticAlgebra> {
    if !l.linear_relations.is_empty() {
        return Err(Error::input("presentation has linear relations; call eliminate_linear first"));
    }
    let m = l.generator_count();
    let rows = l.quadratic_relators.iter().map(|r| {
        let mut acc = std::collections::BTreeMap::<usize, BigRational>::new();
        for ((i, j), q) in r {
            for (c, e) in commutator_row(m, *i, *j, q.clone()) {
                *acc.entry(c).or_insert_with(BigRational::zero) += e;
            }
        }
        acc.into_iter().filter(|(_, q)| !q.is_zero()).collect::<SparseRow<_>>()
    });
    QuadraticAlgebra::new(m, rows.collect::<Vec<_>>())
}

/// `A^! = T(V*)/(R^⊥)` under the pairing `⟨e_i⊗e_j, e*_k⊗e*_l⟩ = δ_ik δ_jl`.
pub fn quadratic_dual(a: &QuadraticAlgebra) -> QuadraticAlgebra {
    let perp = orthogonal_complement(&Rationals, a.m * a.m, &a.relations);
    QuadraticAlgebra::new(a.m, perp).expect("complement coordinates in range")
}

/// `[h_0, ..., h_D]` with `h_n = dim A_n`.
pub fn algebra_hilbert(a: &QuadraticAlgebra, max_degree: usize) -> Result<HilbertSeries> {
    algebra_hilbert_with(a, max_degree, &ComputeOptions::default())
}

pub fn algebra_hilbert_with(a: &QuadraticAlgebra, max_degree: usize, opts: &ComputeOptions) -> Result<HilbertSeries> {
    let coeffs = opts.run(|f| match f.visit() {
        FieldRef::Rational(q) => hilbert_over(q, a, max_degree, opts),
        FieldRef::Prime(p) => hilbert_over(p, a, max_degree, opts),
    })?;
    HilbertSeries::new(coeffs)
}

fn hilbert_over<F: Field>(
    field: &F,
    a: &QuadraticAlgebra,
    max_degree: usize,
    opts: &ComputeOptions,
) -> Result<Vec<u64>> {
    let m = a.m;
    let mut h = vec![1u64];
    if max_degree == 0 {
        return Ok(h);
    }
    h.push(m as u64);
    let relations: Vec<SparseRow<F::Elem>> = a
        .relations
        .iter()
        .map(|r| r.iter().map(|(c, q)| Ok((*c, field.from_rational(q)?))).collect())
        .collect::<Result<_>>()?;

    // Normal forms of the degree n-1 ambient words (normal word of degree n-2, letter)
    // as combinations of degree n-1 normal words. Degree one: every letter is normal.
    let mut nf_prev: Vec<SparseRow<F::Elem>> = (0..m).map(|x| vec![(x, field.one())]).collect();
    let mut count_prevprev = 1usize;
    let mut count_prev = m;

    for n in 2..=max_degree {
        let ambient = count_prev * m;
        let entry = field.elem_bytes() + 8;
        opts.check_guard(n, ambient.saturating_mul(16) + nf_prev.iter().map(|r| r.len() * entry).sum::<usize>())?;
        let mut ech = Echelon::new(field.clone(), ambient);
        for s in 0..count_prevprev {
            for r in &relations {
                let mut acc = std::collections::BTreeMap::<usize, F::Elem>::new();
                for (col, c) in r {
                    let (x, b) = (col / m, col % m);
                    for (u, d) in &nf_prev[s * m + x] {
                        let slot = acc.entry(u * m + b).or_insert_with(|| field.zero());
                        *slot = field.add(slot, &field.mul(c, d));
                    }
                }
                let row: SparseRow<F::Elem> = acc.into_iter().filter(|(_, e)| !field.is_zero(e)).collect();
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
            if s % 64 == 0 {
                opts.check_guard(n, ambient.saturating_mul(16) + ech.bytes_estimate())?;
            }
        }
        let count = ambient - ech.rank();
        h.push(count as u64);
        if n == max_degree {
            break;
        }
        let mut normal_index = vec![usize::MAX; ambient];
        let mut next = 0;
        for (col, slot) in normal_index.iter_mut().enumerate() {
            if !ech.is_pivot(col) {
                *slot = next;
                next += 1;
            }
        }
        let mut nf: Vec<SparseRow<F::Elem>> = vec![Vec::new(); ambient];
        for (col, row) in nf.iter_mut().enumerate() {
            if normal_index[col] != usize::MAX {
                *row = vec![(normal_index[col], field.one())];
            }
        }
        for row in ech.rref() {
            nf[row[0].0] = row[1..].iter().map(|(c, e)| (normal_index[*c], field.neg(e))).collect();
        }
        nf_prev = nf;
        count_prevprev = count_prev;
        count_prev = count;
    }
    Ok(h)
}

/// Outcome of [`koszul_numeric_test`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NumericKoszulCheck {
    pub degree: usize,
    pub pass: bool,
    pub first_failure: Option<usize>,
}

/// Checks `Σ_i (-1)^i h^!_i h_{n-i} = 0` for `1 ≤ n ≤ D`.
///
/// This is only a necessary condition for Koszulness.
pub fn koszul_numeric_test(ha: &HilbertSeries, hdual: &HilbertSeries, degree: usize) -> Result<NumericKoszulCheck> {
    if ha.degree() < degree || hdual.degree() < degree {
        return Err(Error::input(format!(
            "series must reach degree {degree} (got {} and {})",
            ha.degree(),
            hdual.degree()
        )));
    }
    let (a, d) = (ha.coeffs(), hdual.coeffs());
    let first_failure = (1..=degree).find(|&n| {
        let sum: i128 = (0..=n)
            .map(|i| {
                let t = d[i] as i128 * a[n - i] as i128;
                if i % 2 == 0 {
                    t
                } else {
                    -t
                }
            })
            .sum();
        sum != 0
    });
    Ok(NumericKoszulCheck { degree, pass: first_failure.is_none(), first_failure })
}

/// Both sides of the Hilbert series identity for the RAAG enveloping algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrobergCheck {
    pub pass: bool,
    pub lhs: HilbertSeries,
    pub rhs: HilbertSeries,
}

/// Compares the Hilbert series of `U(gr A_Γ)` with `1/P_Γ(-t)` through degree `D`.
pub fn froberg_check(g: &Graph, max_degree: usize) -> Result<FrobergCheck> {
    if max_degree < 1 {
        return Err(Error::input("degree bound must be at least 1"));
    }
    let a = enveloping_quadratic(&lie_presentation(g, &LieVariant::Raag)?)?;
    let lhs = algebra_hilbert(&a, max_degree)?;
    let rhs = inverse_alternating(&g.clique_polynomial(), max_degree)?;
    Ok(FrobergCheck { pass: lhs == rhs, lhs, rhs })
}
