//! The generalized Schur superalgebra `T^A(n,d)` in its η-basis.
//!
//! A basis element is a Σ_d-orbit of triples `(b, r, s)`, stored as the
//! sorted word of letters `(b_k, r_k, s_k)`. Letters are ordered by color
//! (the heredity basis order), then row, then column; every sign in this
//! module is relative to that order.

mod heredity;
mod product;
mod special;
pub mod words;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::Zero;
use thiserror::Error;

use crate::combinatorics::CombError;
use crate::exactlin::{Scalar, SparseVector};
use crate::superalg::{HeredityData, Parity};

pub use heredity::{HeredityBasis, TableauElement};
pub use product::Coproduct;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchurError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("words have different lengths")]
    LengthMismatch,
    #[error("requires d ≤ n (d={d}, n={n})")]
    DegreeBound { d: usize, n: usize },
    #[error("requires {small} ≤ {big}")]
    WidthBound { small: usize, big: usize },
    #[error("letter out of range: {0}")]
    LetterRange(String),
    #[error("element is not in the span of the basis of T({n},{d})")]
    NotInBasis { n: usize, d: usize },
    #[error(transparent)]
    Comb(#[from] CombError),
}

/// A matrix-unit letter `ξ^b_{row,col}`; rows and columns are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub color: u16,
    pub row: u8,
    pub col: u8,
}

impl Letter {
    pub fn new(color: usize, row: usize, col: usize) -> Self {
        Letter { color: color as u16, row: row as u8, col: col as u8 }
    }

    pub fn color(self) -> usize {
        self.color as usize
    }
}

pub type Word = Vec<Letter>;

/// Orbit minimum: letters sorted, odd letters not repeated.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OrbitTriple(Vec<Letter>);

impl OrbitTriple {
    pub fn empty() -> Self {
        OrbitTriple(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn colors(&self) -> Vec<usize> {
        self.0.iter().map(|l| l.color()).collect()
    }

    pub fn rows(&self) -> Vec<usize> {
        self.0.iter().map(|l| l.row as usize).collect()
    }

    pub fn cols(&self) -> Vec<usize> {
        self.0.iter().map(|l| l.col as usize).collect()
    }

    pub fn max_index(&self) -> usize {
        self.0.iter().map(|l| l.row.max(l.col) as usize).max().unwrap_or(0)
    }

    pub(crate) fn from_sorted(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.windows(2).all(|w| w[0] <= w[1]));
        OrbitTriple(letters)
    }

    pub fn render(&self, alg: &HeredityData) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let b: Vec<String> = self.0.iter().map(|l| alg.basis_name(l.color())).collect();
        let r: String = self.0.iter().map(|l| l.row.to_string()).collect::<Vec<_>>().join(",");
        let s: String = self.0.iter().map(|l| l.col.to_string()).collect::<Vec<_>>().join(",");
        format!("eta[{}; {}; {}]", b.join(","), r, s)
    }
}

/// Number of pairs `k < l` of odd letters with `w_k > w_l`.
pub fn odd_inversions(alg: &HeredityData, w: &[Letter]) -> usize {
    let mut count = 0;
    for k in 0..w.len() {
        if !alg.parity(w[k].color()).is_odd() {
            continue;
        }
        for l in k + 1..w.len() {
            if alg.parity(w[l].color()).is_odd() && w[k] > w[l] {
                count += 1;
            }
        }
    }
    count
}

/// Sorts a word into its orbit minimum. Returns the sign `(−1)^{⟨w⟩}` relating
/// `η_w` to `η_min`, or `None` when an odd letter repeats (the element is zero).
pub fn canonicalize(alg: &HeredityData, w: &[Letter]) -> Option<(OrbitTriple, i8)> {
    let sign = if odd_inversions(alg, w) % 2 == 0 { 1 } else { -1 };
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|p| p[0] == p[1] && alg.parity(p[0].color()).is_odd()) {
        return None;
    }
    Some((OrbitTriple(sorted), sign))
}

/// [`canonicalize`] on three parallel words of basis indices and 1-based rows and columns.
pub fn canonicalize_words(
    alg: &HeredityData,
    b: &[usize],
    r: &[usize],
    s: &[usize],
) -> Result<Option<(OrbitTriple, i8)>, SchurError> {
    if b.len() != r.len() || b.len() != s.len() {
        return Err(SchurError::LengthMismatch);
    }
    let w: Word = (0..b.len()).map(|k| Letter::new(b[k], r[k], s[k])).collect();
    Ok(canonicalize(alg, &w))
}

/// `[T]!_c`: product of factorials of multiplicities of letters with color in `B_c`.
pub fn c_factorial(alg: &HeredityData, t: &OrbitTriple) -> u64 {
    let mut out = 1u64;
    let mut k = 0;
    let w = t.letters();
    while k < w.len() {
        let mut m = 1;
        while k + m < w.len() && w[k + m] == w[k] {
            m += 1;
        }
        if alg.in_bc(w[k].color()) {
            out *= (1..=m as u64).product::<u64>();
        }
        k += m;
    }
    out
}

pub fn triple_parity(alg: &HeredityData, t: &OrbitTriple) -> Parity {
    t.letters().iter().fold(Parity::Even, |p, l| p.add(alg.parity(l.color())))
}

/// Element of `T(n,d)` in the η-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TElement {
    degree: usize,
    terms: BTreeMap<OrbitTriple, Scalar>,
}

impl TElement {
    pub fn zero(degree: usize) -> Self {
        TElement { degree, terms: BTreeMap::new() }
    }

    /// The degree-0 unit.
    pub fn unit0() -> Self {
        Self::basis(OrbitTriple::empty())
    }

    pub fn basis(t: OrbitTriple) -> Self {
        let degree = t.degree();
        let mut terms = BTreeMap::new();
        terms.insert(t, Scalar::from_integer(1.into()));
        TElement { degree, terms }
    }

    pub fn from_terms(degree: usize, items: impl IntoIterator<Item = (OrbitTriple, Scalar)>) -> Self {
        let mut e = Self::zero(degree);
        for (t, c) in items {
            debug_assert_eq!(t.degree(), degree);
            e.add_term(t, &c);
        }
        e
    }

    pub fn add_term(&mut self, t: OrbitTriple, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(t.clone()).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<OrbitTriple, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, t: &OrbitTriple) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &TElement) {
        for (t, v) in &other.terms {
            self.add_term(t.clone(), &(c * v));
        }
    }

    pub fn add(&self, other: &TElement) -> TElement {
        let mut e = self.clone();
        e.add_scaled(&Scalar::from_integer(1.into()), other);
        e
    }

    pub fn sub(&self, other: &TElement) -> TElement {
        let mut e = self.clone();
        e.add_scaled(&Scalar::from_integer((-1).into()), other);
        e
    }

    pub fn scaled(&self, c: &Scalar) -> TElement {
        let mut e = Self::zero(self.degree);
        e.add_scaled(c, self);
        e
    }

    /// Every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn max_index(&self) -> usize {
        self.terms.keys().map(|t| t.max_index()).max().unwrap_or(0)
    }

    /// Homogeneous parity of the support, `None` for zero or mixed.
    pub fn parity(&self, alg: &HeredityData) -> Option<Parity> {
        let mut ps = self.terms.keys().map(|t| triple_parity(alg, t));
        let first = ps.next()?;
        ps.all(|p| p == first).then_some(first)
    }

    pub fn render(&self, alg: &HeredityData) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(t, c)| if c.is_integer() && *c.numer() == 1.into() { t.render(alg) } else { format!("{c}*{}", t.render(alg)) })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for OrbitTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| format!("({},{},{})", l.color, l.row, l.col)).collect();
        write!(f, "[{}]", parts.join(""))
    }
}

/// Distinct permutations of an orbit minimum with their signs, grouped by row word.
pub(crate) struct Orbit {
    pub words: Vec<(Word, bool)>,
    pub by_rows: HashMap<Vec<u8>, Vec<usize>>,
}

fn next_permutation(w: &mut [Letter]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

pub struct BasisIndex {
    triples: Vec<OrbitTriple>,
    index: HashMap<OrbitTriple, usize>,
}

impl BasisIndex {
    pub fn triples(&self) -> &[OrbitTriple] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn position(&self, t: &OrbitTriple) -> Option<usize> {
        self.index.get(t).copied()
    }
}

type ProductCache = Mutex<HashMap<(OrbitTriple, OrbitTriple), Arc<Vec<(OrbitTriple, Scalar)>>>>;
type CoproductCache = Mutex<HashMap<OrbitTriple, Arc<Vec<(OrbitTriple, OrbitTriple, Scalar)>>>>;

/// `T^A(n, d)` for all `d` at a fixed width `n`, with memoized structure constants.
pub struct SchurAlgebra {
    alg: Arc<HeredityData>,
    n: usize,
    letters: Vec<Letter>,
    orbits: Mutex<HashMap<OrbitTriple, Arc<Orbit>>>,
    products: ProductCache,
    coproducts: CoproductCache,
    bases: Mutex<HashMap<usize, Arc<BasisIndex>>>,
    heredity: Mutex<HashMap<usize, Arc<HeredityBasis>>>,
    ideals: Mutex<HashMap<(usize, usize), Arc<crate::exactlin::Subspace>>>,
}

impl SchurAlgebra {
    pub fn new(alg: Arc<HeredityData>, n: usize) -> Self {
        assert!((1..=255).contains(&n), "width must lie in 1..=255");
        let mut letters = Vec::new();
        for b in 0..alg.dim() {
            for r in 1..=n {
                for s in 1..=n {
                    letters.push(Letter::new(b, r, s));
                }
            }
        }
        SchurAlgebra {
            alg,
            n,
            letters,
            orbits: Default::default(),
            products: Default::default(),
            coproducts: Default::default(),
            bases: Default::default(),
            heredity: Default::default(),
            ideals: Default::default(),
        }
    }

    pub fn heredity_data(&self) -> &HeredityData {
        &self.alg
    }

    pub fn heredity_arc(&self) -> Arc<HeredityData> {
        self.alg.clone()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letter(&self, b: usize, r: usize, s: usize) -> Result<Letter, SchurError> {
        if b >= self.alg.dim() || r == 0 || s == 0 || r > self.n || s > self.n {
            return Err(SchurError::LetterRange(format!("({b},{r},{s})")));
        }
        Ok(Letter::new(b, r, s))
    }

    pub fn canonicalize(&self, w: &[Letter]) -> Option<(OrbitTriple, i8)> {
        canonicalize(&self.alg, w)
    }

    /// `η^b_{r,s}` for an arbitrary representative, as a signed basis element.
    pub fn eta(&self, b: &[usize], r: &[usize], s: &[usize]) -> Result<TElement, SchurError> {
        for k in 0..b.len().min(r.len()).min(s.len()) {
            self.letter(b[k], r[k], s[k])?;
        }
        Ok(match canonicalize_words(&self.alg, b, r, s)? {
            None => TElement::zero(b.len()),
            Some((t, sign)) => TElement::basis(t).scaled(&Scalar::from_integer(sign.into())),
        })
    }

    pub fn c_factorial(&self, t: &OrbitTriple) -> u64 {
        c_factorial(&self.alg, t)
    }

    fn is_odd(&self, l: Letter) -> bool {
        self.alg.parity(l.color()).is_odd()
    }

    /// All orbit minima of degree `d`, in increasing order.
    pub fn enumerate_basis(&self, d: usize) -> Vec<OrbitTriple> {
        fn rec(alg: &SchurAlgebra, start: usize, left: usize, cur: &mut Vec<Letter>, out: &mut Vec<OrbitTriple>) {
            if left == 0 {
                out.push(OrbitTriple(cur.clone()));
                return;
            }
            for k in start..alg.letters.len() {
                let l = alg.letters[k];
                cur.push(l);
                let next = if alg.is_odd(l) { k + 1 } else { k };
                rec(alg, next, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, 0, d, &mut Vec::with_capacity(d), &mut out);
        out
    }

    pub fn basis_index(&self, d: usize) -> Arc<BasisIndex> {
        if let Some(b) = self.bases.lock().unwrap().get(&d) {
            return b.clone();
        }
        let triples = self.enumerate_basis(d);
        let index = triples.iter().enumerate().map(|(k, t)| (t.clone(), k)).collect();
        let b = Arc::new(BasisIndex { triples, index });
        self.bases.lock().unwrap().insert(d, b.clone());
        b
    }

    pub fn dim(&self, d: usize) -> usize {
        self.basis_index(d).len()
    }

    pub fn to_vector(&self, u: &TElement) -> Result<SparseVector, SchurError> {
        let basis = self.basis_index(u.degree());
        let items = u
            .terms()
            .iter()
            .map(|(t, c)| basis.position(t).map(|k| (k, c.clone())))
            .collect::<Option<Vec<_>>>()
            .ok_or(SchurError::NotInBasis { n: self.n, d: u.degree() })?;
        Ok(SparseVector::from_entries(basis.len(), items).expect("positions are in range"))
    }

    pub fn from_vector(&self, d: usize, v: &SparseVector) -> TElement {
        let basis = self.basis_index(d);
        TElement::from_terms(d, v.entries().iter().map(|(k, c)| (basis.triples()[*k].clone(), c.clone())))
    }

    pub(crate) fn orbit(&self, t: &OrbitTriple) -> Arc<Orbit> {
        if let Some(o) = self.orbits.lock().unwrap().get(t) {
            return o.clone();
        }
        let mut w = t.0.clone();
        let mut words = Vec::new();
        loop {
            let neg = odd_inversions(&self.alg, &w) % 2 == 1;
            words.push((w.clone(), neg));
            if !next_permutation(&mut w) {
                break;
            }
        }
        let mut by_rows: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
        for (k, (w, _)) in words.iter().enumerate() {
            by_rows.entry(w.iter().map(|l| l.row).collect()).or_default().push(k);
        }
        let o = Arc::new(Orbit { words, by_rows });
        self.orbits.lock().unwrap().insert(t.clone(), o.clone());
        o
    }
}

#[cfg(test)]
mod tests;
