use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::coxeter::{format_word, ElementId, ElementTable};
use crate::error::{Error, RelationViolation, Result};
use crate::ring::{bigint_from_json, rational_from_json, QPoly, Ring};
use crate::series::Matrix;

// path-independence is checked on this many table elements at most
const PATH_CHECK_LIMIT: usize = 4096;

/// Matrices for the generators `e_s` that satisfy the Hecke relations, with
/// `ρ(e_w)` precomputed for every element of the table it was validated on.
#[derive(Clone, Debug)]
pub struct Representation<R> {
    dim: usize,
    q: R,
    generators: Vec<Matrix<R>>,
    images: Vec<Matrix<R>>,
    bound: usize,
}

impl<R: Ring> Representation<R> {
    /// Checks the quadratic and braid relations exactly, then builds
    /// `ρ(e_w)` along the table's reduced words and confirms that other
    /// reduced words give the same product.
    pub fn validate(table: &ElementTable, generators: Vec<Matrix<R>>, q: R) -> Result<Self> {
        let system = table.system();
        let k = system.rank();
        if generators.len() != k {
            return Err(RelationViolation::GeneratorCount { expected: k, got: generators.len() }.into());
        }
        let dim = generators[0].rows();
        for (s, g) in generators.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(RelationViolation::Dimension { generator: s + 1, dim }.into());
            }
        }
        let id = Matrix::identity(dim);
        let q_id = Matrix::scalar(dim, q.clone());
        for (s, g) in generators.iter().enumerate() {
            if !g.add(&id).mul(&g.sub(&q_id)).is_zero() {
                return Err(RelationViolation::Quadratic { generator: s + 1 }.into());
            }
        }
        for s in 0..k {
            for t in s + 1..k {
                let Some(m) = system.m(s, t) else { continue };
                let alt = |a: usize, b: usize| {
                    (0..m as usize).fold(id.clone(), |acc, i| acc.mul(&generators[if i % 2 == 0 { a } else { b }]))
                };
                if alt(s, t) != alt(t, s) {
                    return Err(RelationViolation::Braid { s: s + 1, t: t + 1, m }.into());
                }
            }
        }
        let mut images: Vec<Matrix<R>> = Vec::with_capacity(table.len());
        for w in table.ids() {
            let word = table.element(w).word();
            let img = match word.split_last() {
                None => id.clone(),
                Some((&s, prefix)) => {
                    let parent = table.element_of_word(prefix)?;
                    images[parent.index()].mul(&generators[s])
                }
            };
            images.push(img);
        }
        for w in table.ids().take(PATH_CHECK_LIMIT) {
            for (s, g) in generators.iter().enumerate() {
                if !table.has_right_descent(w, s) {
                    continue;
                }
                let ws = table.right_neighbor(w, s).expect("descent lies in the table");
                if images[ws.index()].mul(g) != images[w.index()] {
                    let word = format_word(table.element(w).word());
                    return Err(RelationViolation::PathDependence { word }.into());
                }
            }
        }
        Ok(Representation { dim, q, generators, images, bound: table.bound() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q(&self) -> &R {
        &self.q
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Matrix<R>] {
        &self.generators
    }

    pub fn generator(&self, s: usize) -> &Matrix<R> {
        &self.generators[s]
    }

    /// Bound of the table the cache was built on.
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// `ρ(e_w)` for a table element.
    pub fn image(&self, w: ElementId) -> &Matrix<R> {
        &self.images[w.index()]
    }

    /// `ρ(e_{s_1})⋯ρ(e_{s_r})`; equals `ρ(e_w)` when the word is reduced.
    pub fn word_image(&self, word: &[usize]) -> Matrix<R> {
        word.iter().fold(Matrix::identity(self.dim), |acc, &s| acc.mul(&self.generators[s]))
    }

    /// Applies a ring map to every matrix and validates the result afresh.
    pub fn map_scalars<S: Ring>(&self, table: &ElementTable, f: impl Fn(&R) -> S) -> Result<Representation<S>> {
        let gens = self.generators.iter().map(|g| g.map(&f)).collect();
        Representation::validate(table, gens, f(&self.q))
    }

    pub fn to_json(&self, scalar: &str) -> Value {
        let gens: serde_json::Map<String, Value> =
            self.generators.iter().enumerate().map(|(s, g)| (format!("s{}", s + 1), g.to_json())).collect();
        let mut v = json!({ "dim": self.dim, "generators": gens, "scalar": scalar });
        if scalar == "rational" {
            v["q"] = self.q.to_json();
        }
        v
    }
}

impl Representation<QPoly> {
    /// Specializes the formal parameter to a rational value.
    pub fn at_q(&self, table: &ElementTable, q: &BigRational) -> Result<Representation<BigRational>> {
        self.map_scalars(table, |c| c.eval(q))
    }
}

/// A `k`-dimensional representation on the span of the simple roots,
/// deforming the geometric representation:
///
/// `e_s α_s = −α_s`, `e_s α_t = q α_t + c_st α_s` (t ≠ s),
///
/// with `c_st = −A_st q` for `s < t` and `c_st = −A_st` for `s > t`, so that
/// `c_st c_ts = q A_st A_ts`. At `q = 1` it is the negated reflection
/// representation twisted by the sign character.
pub fn reflection_representation(table: &ElementTable) -> Result<Representation<QPoly>> {
    let cartan = table.system().cartan();
    let k = cartan.len();
    let q = QPoly::q();
    let gens = (0..k)
        .map(|s| {
            let mut m = Matrix::zeros(k, k);
            for t in 0..k {
                if t == s {
                    m[(s, s)] = QPoly::constant(-1);
                    continue;
                }
                m[(t, t)] = q.clone();
                let a = QPoly::constant(-cartan[s][t]);
                m[(s, t)] = if s < t { a.mul(&q) } else { a };
            }
            m
        })
        .collect();
    Representation::validate(table, gens, q)
}

/// A representation read from JSON, over whichever scalars it declared.
#[derive(Clone, Debug)]
pub enum IngestedRepresentation {
    Rational(Representation<BigRational>),
    QPoly(Representation<QPoly>),
}

impl IngestedRepresentation {
    pub fn dim(&self) -> usize {
        match self {
            IngestedRepresentation::Rational(r) => r.dim(),
            IngestedRepresentation::QPoly(r) => r.dim(),
        }
    }
}

/// Reads `{dim, generators: {s1: [[..]], ..}, scalar, q, characteristic}`.
///
/// With `scalar = "rational"` entries are integers, `[num, den]` pairs or
/// `"a/b"` strings and `q` is required. With `scalar = "q-poly"` entries are
/// integers or ascending coefficient lists in `q`; a given `q` then
/// specializes the representation to rationals.
pub fn ingest_representation(table: &ElementTable, v: &Value) -> Result<IngestedRepresentation> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("representation must be a JSON object".into()))?;
    if let Some(c) = obj.get("characteristic") {
        let c = c.as_u64().ok_or_else(|| Error::Parse("characteristic must be a nonnegative integer".into()))?;
        if c != 0 {
            return Err(Error::PositiveCharacteristic(c));
        }
    }
    let dim =
        obj.get("dim").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing integer field \"dim\"".into()))?
            as usize;
    let gens = obj
        .get("generators")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Parse("missing object field \"generators\"".into()))?;
    let k = table.system().rank();
    let mut keyed: BTreeMap<usize, &Value> = BTreeMap::new();
    for (key, m) in gens {
        let idx = key
            .strip_prefix('s')
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&i| (1..=k).contains(&i))
            .ok_or_else(|| Error::Parse(format!("unknown generator key {key:?}")))?;
        keyed.insert(idx - 1, m);
    }
    if keyed.len() != k {
        return Err(RelationViolation::GeneratorCount { expected: k, got: keyed.len() }.into());
    }
    let scalar = obj.get("scalar").and_then(Value::as_str).unwrap_or("rational");
    let q = obj.get("q");
    match scalar {
        "rational" => {
            let q = q
                .and_then(rational_from_json)
                .ok_or_else(|| Error::Parse("rational representations need a rational \"q\"".into()))?;
            let mats = keyed
                .values()
                .enumerate()
                .map(|(s, m)| parse_matrix(m, dim, s, rational_from_json))
                .collect::<Result<Vec<_>>>()?;
            Ok(IngestedRepresentation::Rational(Representation::validate(table, mats, q)?))
        }
        "q-poly" => {
            let mats = keyed
                .values()
                .enumerate()
                .map(|(s, m)| parse_matrix(m, dim, s, qpoly_from_json))
                .collect::<Result<Vec<_>>>()?;
            match q {
                None | Some(Value::Null) => {
                    Ok(IngestedRepresentation::QPoly(Representation::validate(table, mats, QPoly::q())?))
                }
                Some(qv) => {
                    let q = rational_from_json(qv).ok_or_else(|| Error::Parse(format!("bad q value {qv}")))?;
                    let mats = mats.iter().map(|m| m.map(|c| c.eval(&q))).collect();
                    Ok(IngestedRepresentation::Rational(Representation::validate(table, mats, q)?))
                }
            }
        }
        other => Err(Error::Parse(format!("unknown scalar kind {other:?}"))),
    }
}

fn qpoly_from_json(v: &Value) -> Option<QPoly> {
    match v {
        Value::Array(cs) => cs.iter().map(bigint_from_json).collect::<Option<Vec<BigInt>>>().map(QPoly::from_coeffs),
        _ => bigint_from_json(v).map(|c| QPoly::from_coeffs(vec![c])),
    }
}

fn parse_matrix<R: Ring>(v: &Value, dim: usize, s: usize, entry: impl Fn(&Value) -> Option<R>) -> Result<Matrix<R>> {
    let bad_shape = || Error::Representation(RelationViolation::Dimension { generator: s + 1, dim });
    let rows = v.as_array().ok_or_else(bad_shape)?;
    if rows.len() != dim {
        return Err(bad_shape());
    }
    let mut out = Vec::with_capacity(dim);
    for row in rows {
        let row = row.as_array().filter(|r| r.len() == dim).ok_or_else(bad_shape)?;
        out.push(
            row.iter()
                .map(|x| entry(x).ok_or_else(|| Error::Parse(format!("bad matrix entry {x} for s{}", s + 1))))
                .collect::<Result<Vec<R>>>()?,
        );
    }
    Matrix::from_rows(out)
}
