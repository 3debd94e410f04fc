use std::fmt;

use crate::coxeter::{format_word, DescentFree, ElementId, ElementTable};
use crate::error::{Error, Result};
use crate::hecke::Representation;
use crate::poly::Poly;
use crate::ring::Ring;
use crate::series::{Matrix, MatrixSeries, RationalFunction};

/// A subset `D ⊆ W` whose twisted Poincaré series can be formed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorSet {
    /// The parabolic subgroup `W_I` (must be finite).
    Parabolic(Vec<usize>),
    /// Minimal coset representatives of `W_I` inside `W_J`.
    Cosets { i: Vec<usize>, j: Vec<usize>, side: DescentFree },
    /// `{wᵏ : k ≥ 0}` for the element spelled by `word`, assumed to satisfy
    /// `ℓ(wᵏ) = k·ℓ(w)`.
    Cyclic(Vec<usize>),
    /// An explicit finite list.
    Elements(Vec<ElementId>),
}

impl FactorSet {
    /// The elements of a finite set; `None` for cyclic sets.
    pub fn elements(&self, table: &ElementTable) -> Result<Option<Vec<ElementId>>> {
        Ok(Some(match self {
            FactorSet::Parabolic(i) => table.parabolic(i)?,
            FactorSet::Cosets { i, j, side } => table.min_coset_reps(i, j, *side)?,
            FactorSet::Elements(e) => e.clone(),
            FactorSet::Cyclic(_) => return Ok(None),
        }))
    }
}

fn set_label(gens: &[usize]) -> String {
    let g: Vec<String> = gens.iter().map(|s| (s + 1).to_string()).collect();
    format!("{{{}}}", g.join(","))
}

impl fmt::Display for FactorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorSet::Parabolic(i) => write!(f, "W_{}", set_label(i)),
            FactorSet::Cosets { i, j, side: DescentFree::Right } => {
                write!(f, "W_{}/{}", set_label(j), set_label(i))
            }
            FactorSet::Cosets { i, j, side: DescentFree::Left } => {
                write!(f, "W_{}\\{}", set_label(i), set_label(j))
            }
            FactorSet::Cyclic(word) => write!(f, "<{}>", format_word(word)),
            FactorSet::Elements(e) => write!(f, "[{} elements]", e.len()),
        }
    }
}

/// `D(ρ,u) = Σ_{w ∈ D} ρ(e_w) u^{ℓ(w)}`, exactly.
#[derive(Clone, Debug, PartialEq)]
pub enum TwistedSeries<R> {
    /// A matrix polynomial, for finite `D`.
    Finite(Matrix<Poly<R>>),
    /// `(I − A u^step)⁻¹` for `D = {wᵏ}`, `A = ρ(e_w)`, `step = ℓ(w)`.
    Geometric { generator: Matrix<R>, step: usize },
}

impl<R: Ring> TwistedSeries<R> {
    pub fn dim(&self) -> usize {
        match self {
            TwistedSeries::Finite(m) => m.rows(),
            TwistedSeries::Geometric { generator, .. } => generator.rows(),
        }
    }

    /// Truncation through `u^order`.
    pub fn expand(&self, order: usize) -> MatrixSeries<R> {
        let d = self.dim();
        match self {
            TwistedSeries::Finite(m) => {
                let mut coeffs = vec![Matrix::zeros(d, d); order + 1];
                for i in 0..d {
                    for j in 0..d {
                        for (k, c) in m[(i, j)].coeffs().iter().enumerate().take(order + 1) {
                            coeffs[k][(i, j)] = c.clone();
                        }
                    }
                }
                MatrixSeries::new(d, coeffs, order)
            }
            TwistedSeries::Geometric { generator, step } => {
                let mut s = MatrixSeries::identity(d, order);
                let mut power = Matrix::identity(d);
                let mut k = *step;
                while *step > 0 && k <= order {
                    power = power.mul(generator);
                    s.add_term(k, &power);
                    k += step;
                }
                s
            }
        }
    }

    /// `det D(ρ,u)` as an exact rational function.
    pub fn det(&self) -> Result<RationalFunction<R>> {
        match self {
            TwistedSeries::Finite(m) => Ok(RationalFunction::from_poly(m.det())),
            TwistedSeries::Geometric { generator, step } => {
                let den = generator.det_one_minus()?.substitute_power(*step);
                RationalFunction::new(Poly::one(), den)
            }
        }
    }
}

/// The twisted Poincaré series of `set`; `rep` must have been validated on
/// `table`.
pub fn twisted_series<R: Ring>(
    table: &ElementTable,
    set: &FactorSet,
    rep: &Representation<R>,
) -> Result<TwistedSeries<R>> {
    if rep.bound() != table.bound() || rep.rank() != table.system().rank() {
        return Err(Error::Shape("representation was validated on a different table".into()));
    }
    if let FactorSet::Cyclic(word) = set {
        for &s in word {
            table.system().check_generator(s)?;
        }
        return Ok(TwistedSeries::Geometric { generator: rep.word_image(word), step: word.len() });
    }
    let elements = set.elements(table)?.expect("finite set");
    let d = rep.dim();
    let mut entries: Vec<Vec<R>> = vec![Vec::new(); d * d];
    for w in elements {
        let l = table.length(w);
        let img = rep.image(w);
        for i in 0..d {
            for j in 0..d {
                let c = &img[(i, j)];
                if c.is_zero() {
                    continue;
                }
                let e = &mut entries[i * d + j];
                if e.len() <= l {
                    e.resize(l + 1, R::zero());
                }
                e[l].add_assign(c);
            }
        }
    }
    let mut m = Matrix::zeros(d, d);
    for (idx, coeffs) in entries.into_iter().enumerate() {
        m[(idx / d, idx % d)] = Poly::new(coeffs);
    }
    Ok(TwistedSeries::Finite(m))
}
