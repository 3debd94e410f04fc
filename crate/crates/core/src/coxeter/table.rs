use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};

pub const DEFAULT_BOUND: usize = 24;
pub const DEFAULT_ELEMENT_LIMIT: usize = 5_000_000;
pub const ELEMENT_LIMIT_ENV: &str = "WEYLZETA_MAX_ELEMENTS";

/// Element cap for enumeration: `WEYLZETA_MAX_ELEMENTS` if set and valid,
/// otherwise [`DEFAULT_ELEMENT_LIMIT`].
pub fn element_limit() -> usize {
    std::env::var(ELEMENT_LIMIT_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_ELEMENT_LIMIT)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(pub usize);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    matrix: Vec<i64>,
    length: usize,
    word: Vec<usize>,
}

impl GroupElement {
    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// A reduced word, 0-based generator indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }
}

/// Result of [`ElementTable::multiply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Product {
    pub element: ElementId,
    pub length_additive: bool,
}

/// Which descent condition selects minimal coset representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentFree {
    /// `W_{J/I}`: `ℓ(ws) > ℓ(w)` for all `s ∈ I`.
    Right,
    /// `W_{I\J}`: `ℓ(sw) > ℓ(w)` for all `s ∈ I`.
    Left,
}

/// All elements of length at most `bound`, found by breadth-first search
/// from the identity under right multiplication by generators.
#[derive(Clone, Debug)]
pub struct ElementTable {
    system: CoxeterSystem,
    bound: usize,
    elements: Vec<GroupElement>,
    index: HashMap<Vec<i64>, ElementId>,
    layers: Vec<Vec<ElementId>>,
    right: Vec<Vec<Option<ElementId>>>,
    left: Vec<Vec<Option<ElementId>>>,
    complete: bool,
}

impl ElementTable {
    pub fn enumerate(system: &CoxeterSystem, bound: usize) -> Result<Self> {
        Self::enumerate_with_limit(system, bound, element_limit())
    }

    pub fn enumerate_with_limit(system: &CoxeterSystem, bound: usize, limit: usize) -> Result<Self> {
        let k = system.rank();
        let id = system.identity_matrix();
        let mut elements = vec![GroupElement { matrix: id.clone(), length: 0, word: Vec::new() }];
        let mut index = HashMap::from([(id, ElementId::IDENTITY)]);
        let mut layers = vec![vec![ElementId::IDENTITY]];
        for len in 0..bound {
            let mut next = Vec::new();
            for &w in &layers[len] {
                for s in 0..k {
                    let m = system.right_mul(&elements[w.0].matrix, s);
                    if index.contains_key(&m) {
                        continue;
                    }
                    if elements.len() >= limit {
                        return Err(Error::ElementLimit { limit });
                    }
                    let nid = ElementId(elements.len());
                    let mut word = elements[w.0].word.clone();
                    word.push(s);
                    index.insert(m.clone(), nid);
                    elements.push(GroupElement { matrix: m, length: len + 1, word });
                    next.push(nid);
                }
            }
            if next.is_empty() {
                break;
            }
            layers.push(next);
        }
        Ok(Self::link(system.clone(), bound, elements, index, layers))
    }

    fn link(
        system: CoxeterSystem,
        bound: usize,
        elements: Vec<GroupElement>,
        index: HashMap<Vec<i64>, ElementId>,
        layers: Vec<Vec<ElementId>>,
    ) -> Self {
        let k = system.rank();
        let mut right = Vec::with_capacity(elements.len());
        let mut left = Vec::with_capacity(elements.len());
        for e in &elements {
            right.push((0..k).map(|s| index.get(&system.right_mul(&e.matrix, s)).copied()).collect());
            left.push((0..k).map(|s| index.get(&system.left_mul(s, &e.matrix)).copied()).collect());
        }
        let complete = right.iter().all(|r: &Vec<Option<ElementId>>| r.iter().all(Option::is_some));
        ElementTable { system, bound, elements, index, layers, right, left, complete }
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// True when the whole (finite) group fits below the bound.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.elements.len()).map(ElementId)
    }

    pub fn element(&self, id: ElementId) -> &GroupElement {
        &self.elements[id.0]
    }

    pub fn length(&self, id: ElementId) -> usize {
        self.elements[id.0].length
    }

    pub fn layers(&self) -> &[Vec<ElementId>] {
        &self.layers
    }

    /// Number of elements of each length `0..=bound` (trailing zeros for
    /// finite groups).
    pub fn layer_sizes(&self) -> Vec<usize> {
        (0..=self.bound).map(|k| self.layers.get(k).map_or(0, Vec::len)).collect()
    }

    pub fn lookup(&self, matrix: &[i64]) -> Option<ElementId> {
        self.index.get(matrix).copied()
    }

    /// `w·s`, or `None` when it lies beyond the bound.
    pub fn right_neighbor(&self, w: ElementId, s: usize) -> Option<ElementId> {
        self.right[w.0][s]
    }

    /// `s·w`, or `None` when it lies beyond the bound.
    pub fn left_neighbor(&self, s: usize, w: ElementId) -> Option<ElementId> {
        self.left[w.0][s]
    }

    pub fn generator(&self, s: usize) -> Result<ElementId> {
        self.system.check_generator(s)?;
        self.right[0][s].ok_or(Error::OutOfBound { bound: self.bound })
    }

    pub fn has_right_descent(&self, w: ElementId, s: usize) -> bool {
        self.right[w.0][s].is_some_and(|v| self.length(v) < self.length(w))
    }

    pub fn has_left_descent(&self, s: usize, w: ElementId) -> bool {
        self.left[w.0][s].is_some_and(|v| self.length(v) < self.length(w))
    }

    /// Element for a word of 0-based generator indices.
    pub fn element_of_word(&self, word: &[usize]) -> Result<ElementId> {
        let mut cur = ElementId::IDENTITY;
        for &s in word {
            self.system.check_generator(s)?;
            cur = self.right[cur.0][s].ok_or(Error::OutOfBound { bound: self.bound })?;
        }
        Ok(cur)
    }

    pub fn multiply(&self, w: ElementId, v: ElementId) -> Result<Product> {
        let mut cur = w;
        for &s in &self.elements[v.0].word {
            cur = self.right[cur.0][s].ok_or(Error::OutOfBound { bound: self.bound })?;
        }
        let length_additive = self.length(cur) == self.length(w) + self.length(v);
        Ok(Product { element: cur, length_additive })
    }

    /// `w⁻¹`, the reversed reduced word.
    pub fn inverse(&self, w: ElementId) -> ElementId {
        let word: Vec<usize> = self.elements[w.0].word.iter().rev().copied().collect();
        self.element_of_word(&word).expect("inverse has the same length")
    }

    /// Elements of the parabolic subgroup `W_J`, sorted by id (hence by length).
    /// Fails when `W_J` is not entirely inside the table.
    pub fn parabolic(&self, generators: &[usize]) -> Result<Vec<ElementId>> {
        for &g in generators {
            self.system.check_generator(g)?;
        }
        let mut seen = vec![false; self.elements.len()];
        seen[0] = true;
        let mut out = vec![ElementId::IDENTITY];
        let mut queue = VecDeque::from([ElementId::IDENTITY]);
        while let Some(w) = queue.pop_front() {
            for &s in generators {
                let Some(v) = self.right[w.0][s] else {
                    return Err(Error::ParabolicNotContained { generators: generators.to_vec() });
                };
                if !seen[v.0] {
                    seen[v.0] = true;
                    out.push(v);
                    queue.push_back(v);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Minimal coset representatives inside `W_J` with respect to `W_I`,
    /// `I ⊆ J`. The left-descent-free set is taken inside `W_J`, not `W`.
    pub fn min_coset_reps(&self, i: &[usize], j: &[usize], side: DescentFree) -> Result<Vec<ElementId>> {
        if let Some(_bad) = i.iter().find(|s| !j.contains(s)) {
            return Err(Error::NotSubset { sub: i.to_vec(), sup: j.to_vec() });
        }
        let group = self.parabolic(j)?;
        Ok(group
            .into_iter()
            .filter(|&w| {
                i.iter().all(|&s| match side {
                    DescentFree::Right => !self.has_right_descent(w, s),
                    DescentFree::Left => !self.has_left_descent(s, w),
                })
            })
            .collect())
    }

    /// Word rendering such as `s3s2s1`, `e` for the identity.
    pub fn word_string(&self, w: ElementId) -> String {
        format_word(&self.elements[w.0].word)
    }

    /// Line-oriented export: a header, then `length<TAB>word<TAB>entries`
    /// per element with the matrix entries row-major and space-separated.
    pub fn to_text(&self) -> String {
        let mut out = format!("# weylzeta element table\t{}\t{}\n", self.system.type_tag(), self.bound);
        for e in &self.elements {
            let entries: Vec<String> = e.matrix.iter().map(i64::to_string).collect();
            out.push_str(&format!("{}\t{}\t{}\n", e.length, format_word(&e.word), entries.join(" ")));
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output for `system`, checking every
    /// line: the word must be reduced for its stated length, evaluate to the
    /// stated matrix, and the layers must be exactly what enumeration
    /// would produce.
    pub fn from_text(system: &CoxeterSystem, text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty table".into()))?;
        let fields: Vec<&str> = header.split('\t').collect();
        if fields.len() != 3 || !fields[0].starts_with('#') {
            return Err(Error::Parse(format!("bad header {header:?}")));
        }
        if fields[1] != system.type_tag() {
            return Err(Error::Parse(format!("table is for {}, not {}", fields[1], system.type_tag())));
        }
        let bound: usize = fields[2].parse().map_err(|_| Error::Parse(format!("bad bound {:?}", fields[2])))?;
        let mut elements = Vec::new();
        let mut index = HashMap::new();
        let mut layers: Vec<Vec<ElementId>> = Vec::new();
        for (n, line) in lines.enumerate() {
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 3 {
                return Err(Error::Parse(format!("line {}: expected 3 tab-separated fields", n + 2)));
            }
            let length: usize = cols[0].parse().map_err(|_| Error::Parse(format!("line {}: bad length", n + 2)))?;
            let word = parse_word(cols[1])?;
            let matrix: Vec<i64> = cols[2]
                .split_whitespace()
                .map(|x| x.parse().map_err(|_| Error::Parse(format!("line {}: bad entry {x:?}", n + 2))))
                .collect::<Result<_>>()?;
            if word.len() != length || length > bound {
                return Err(Error::Parse(format!("line {}: word length disagrees with {length}", n + 2)));
            }
            if system.word_matrix(&word)? != matrix {
                return Err(Error::Parse(format!("line {}: matrix does not match word", n + 2)));
            }
            let id = ElementId(elements.len());
            if index.insert(matrix.clone(), id).is_some() {
                return Err(Error::Parse(format!("line {}: duplicate element", n + 2)));
            }
            if layers.len() <= length {
                layers.resize(length + 1, Vec::new());
            }
            layers[length].push(id);
            elements.push(GroupElement { matrix, length, word });
        }
        let table = Self::link(system.clone(), bound, elements, index, layers);
        let fresh = Self::enumerate(system, bound)?;
        if fresh.layer_sizes() != table.layer_sizes()
            || fresh
                .ids()
                .any(|w| table.lookup(fresh.element(w).matrix()).is_none_or(|v| table.length(v) != fresh.length(w)))
        {
            return Err(Error::Parse("table contents are not the elements of the stated lengths".into()));
        }
        Ok(table)
    }
}

pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|s| format!("s{}", s + 1)).collect()
}

/// Parses `s3s2s1` (or `e`) into 0-based generator indices.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(Vec::new());
    }
    let Some(rest) = s.strip_prefix('s') else {
        return Err(Error::Parse(format!("bad word {s:?}")));
    };
    rest.split('s')
        .map(|d| match d.parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => Err(Error::Parse(format!("bad word {s:?}"))),
        })
        .collect()
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_system;

    #[test]
    fn a2_layers() {
        let t = ElementTable::enumerate(&build_system("A2", None).unwrap(), 3).unwrap();
        assert_eq!(t.layer_sizes(), vec![1, 2, 2, 1]);
        assert!(t.is_complete());
    }

    #[test]
    fn affine_a2_layers() {
        let t = ElementTable::enumerate(&build_system("A2t", None).unwrap(), 4).unwrap();
        assert_eq!(t.layer_sizes(), vec![1, 3, 6, 9, 12]);
        assert!(!t.is_complete());
        let t0 = ElementTable::enumerate(&build_system("G2t", None).unwrap(), 0).unwrap();
        assert_eq!(t0.layer_sizes(), vec![1]);
    }

    #[test]
    fn multiplication_flags() {
        let t = ElementTable::enumerate(&build_system("A2t", None).unwrap(), 8).unwrap();
        let s1 = t.generator(0).unwrap();
        let s2 = t.generator(1).unwrap();
        let p = t.multiply(s1, s1).unwrap();
        assert_eq!((p.element, p.length_additive), (ElementId::IDENTITY, false));
        let p = t.multiply(s1, s2).unwrap();
        assert_eq!((t.length(p.element), p.length_additive), (2, true));
        let w1 = t.element_of_word(&[2, 1, 0]).unwrap();
        let p = t.multiply(w1, w1).unwrap();
        assert_eq!((t.length(p.element), p.length_additive), (6, true));
        let big = t.multiply(w1, w1).unwrap().element;
        assert_eq!(t.multiply(big, w1).unwrap_err(), Error::OutOfBound { bound: 8 });
    }

    #[test]
    fn exchange_property() {
        let t = ElementTable::enumerate(&build_system("C2t", None).unwrap(), 10).unwrap();
        for w in t.ids().filter(|&w| t.length(w) < 10) {
            for s in 0..3 {
                let v = t.right_neighbor(w, s).unwrap();
                assert_eq!(t.length(v).abs_diff(t.length(w)), 1);
            }
        }
    }

    #[test]
    fn coset_representatives() {
        let t = ElementTable::enumerate(&build_system("A2t", None).unwrap(), 6).unwrap();
        let reps = t.min_coset_reps(&[1], &[0, 1], DescentFree::Right).unwrap();
        let words: Vec<String> = reps.iter().map(|&w| t.word_string(w)).collect();
        assert_eq!(words, ["e", "s1", "s2s1"]);
        assert_eq!(t.min_coset_reps(&[], &[0, 1], DescentFree::Right).unwrap(), t.parabolic(&[0, 1]).unwrap());
        assert_eq!(t.min_coset_reps(&[0, 1], &[0, 1], DescentFree::Left).unwrap(), vec![ElementId::IDENTITY]);
        assert!(matches!(t.min_coset_reps(&[2], &[0, 1], DescentFree::Left), Err(Error::NotSubset { .. })));
        assert!(matches!(t.parabolic(&[0, 1, 2]), Err(Error::ParabolicNotContained { .. })));
    }

    #[test]
    fn coset_factorization_is_length_additive_bijection() {
        for tag in ["A2t", "C2t", "G2t"] {
            let t = ElementTable::enumerate(&build_system(tag, None).unwrap(), 12).unwrap();
            for j in [[0usize, 1], [1, 2], [0, 2]] {
                let wj = t.parabolic(&j).unwrap();
                for i in [&j[..1], &j[1..]] {
                    let wi = t.parabolic(i).unwrap();
                    let reps = t.min_coset_reps(i, &j, DescentFree::Right).unwrap();
                    assert_eq!(reps.len() * wi.len(), wj.len());
                    let mut hit = std::collections::HashSet::new();
                    for &a in &reps {
                        for &b in &wi {
                            let p = t.multiply(a, b).unwrap();
                            assert!(p.length_additive);
                            assert!(hit.insert(p.element));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn element_limit_is_enforced() {
        let sys = build_system("A2t", None).unwrap();
        assert_eq!(ElementTable::enumerate_with_limit(&sys, 10, 50).unwrap_err(), Error::ElementLimit { limit: 50 });
    }

    #[test]
    fn text_round_trip() {
        let sys = build_system("G2t", None).unwrap();
        let t = ElementTable::enumerate(&sys, 5).unwrap();
        let text = t.to_text();
        let back = ElementTable::from_text(&sys, &text).unwrap();
        assert_eq!(back.layer_sizes(), t.layer_sizes());
        assert_eq!(back.to_text(), text);
        let broken = text.replacen("\n1\ts1\t", "\n1\ts2\t", 1);
        assert!(ElementTable::from_text(&sys, &broken).is_err());
        assert_eq!(parse_word("s3s1s2").unwrap(), vec![2, 0, 1]);
    }
}
