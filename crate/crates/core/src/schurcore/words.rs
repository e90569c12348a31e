//! Arithmetic in the ambient tensor powers `M_n(A)^{⊗d}`, word by word.
//!
//! Slow and literal: products are letterwise with the Koszul sign, the
//! coproduct is deconcatenation, and the star product sums signed shuffles.
//! Used to cross-check the η-basis formulas.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{c_factorial, odd_inversions, Letter, OrbitTriple, TElement, Word};
use crate::exactlin::Scalar;
use crate::superalg::HeredityData;

pub type WordElement = BTreeMap<Word, Scalar>;

fn add(map: &mut WordElement, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(w.clone()).or_insert_with(Scalar::zero);
    *e += c;
    if e.is_zero() {
        map.remove(&w);
    }
}

fn is_odd(alg: &HeredityData, l: Letter) -> bool {
    alg.parity(l.color()).is_odd()
}

/// All permutations of `0..d`, in lexicographic order.
pub fn permutations(d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(d - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, d - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// `(v_1⊗⋯⊗v_d)^σ = (−1)^{⟨σ;v⟩} v_{σ1}⊗⋯⊗v_{σd}`, with `σ` as a 0-based image list.
pub fn act(alg: &HeredityData, w: &[Letter], sigma: &[usize]) -> (Word, bool) {
    let d = w.len();
    let mut inv_pos = vec![0; d];
    for (j, &s) in sigma.iter().enumerate() {
        inv_pos[s] = j;
    }
    let mut count = 0;
    for k in 0..d {
        for l in k + 1..d {
            if inv_pos[k] > inv_pos[l] && is_odd(alg, w[k]) && is_odd(alg, w[l]) {
                count += 1;
            }
        }
    }
    (sigma.iter().map(|&s| w[s]).collect(), count % 2 == 1)
}

/// `ξ^b_{r,s} = Σ_{w ∼ T} (−1)^{⟨T⟩+⟨w⟩} w`, built by summing over all of `Σ_d` and
/// keeping the distinct words.
pub fn xi_words(alg: &HeredityData, t: &[Letter]) -> WordElement {
    let base = odd_inversions(alg, t);
    let mut seen = BTreeMap::new();
    for sigma in permutations(t.len()) {
        let w: Word = sigma.iter().map(|&k| t[k]).collect();
        seen.entry(w.clone()).or_insert_with(|| {
            let neg = (base + odd_inversions(alg, &w)) % 2 == 1;
            Scalar::from_integer(if neg { -1 } else { 1 }.into())
        });
    }
    seen.into_iter().collect()
}

/// η-basis element to ambient words: `η_T = [T]!_c ξ_T`.
pub fn expand(alg: &HeredityData, u: &TElement) -> WordElement {
    let mut out = WordElement::new();
    for (t, c) in u.terms() {
        let f = Scalar::from_integer(BigInt::from(c_factorial(alg, t)));
        for (w, s) in xi_words(alg, t.letters()) {
            add(&mut out, w, c * &f * s);
        }
    }
    out
}

/// Reads η-coordinates off the sorted words of a Σ_d-invariant element.
pub fn collect(alg: &HeredityData, x: &WordElement, d: usize) -> TElement {
    let mut out = TElement::zero(d);
    for (w, c) in x {
        let sorted = w.windows(2).all(|p| p[0] < p[1] || (p[0] == p[1] && !is_odd(alg, p[0])));
        if sorted {
            let t = OrbitTriple::from_sorted(w.clone());
            let f = Scalar::from_integer(BigInt::from(c_factorial(alg, &t)));
            out.add_term(t, &(c / f));
        }
    }
    out
}

/// Invariance under all adjacent transpositions.
pub fn is_invariant(alg: &HeredityData, x: &WordElement) -> bool {
    let Some(d) = x.keys().next().map(Vec::len) else { return true };
    for k in 0..d.saturating_sub(1) {
        let mut sigma: Vec<usize> = (0..d).collect();
        sigma.swap(k, k + 1);
        let mut y = WordElement::new();
        for (w, c) in x {
            let (v, neg) = act(alg, w, &sigma);
            add(&mut y, v, if neg { -c.clone() } else { c.clone() });
        }
        if &y != x {
            return false;
        }
    }
    true
}

/// `(a_1⊗⋯)(b_1⊗⋯) = (−1)^{⟨a,b⟩} a_1b_1⊗⋯` with `ξ^a_{r,s} ξ^c_{t,u} = δ_{st} ξ^{ac}_{r,u}`.
pub fn word_mul(alg: &HeredityData, x: &WordElement, y: &WordElement) -> WordElement {
    let mut out = WordElement::new();
    for (w1, c1) in x {
        for (w2, c2) in y {
            if w1.len() != w2.len() || w1.iter().zip(w2).any(|(a, b)| a.col != b.row) {
                continue;
            }
            let mut koszul = 0;
            for k in 0..w1.len() {
                for l in 0..k {
                    if is_odd(alg, w1[k]) && is_odd(alg, w2[l]) {
                        koszul += 1;
                    }
                }
            }
            let mut acc: Vec<(Word, i64)> = vec![(Vec::new(), if koszul % 2 == 1 { -1 } else { 1 })];
            for k in 0..w1.len() {
                let prods = alg.product(w1[k].color(), w2[k].color());
                acc = acc
                    .into_iter()
                    .flat_map(|(prefix, c)| {
                        prods.iter().map(move |&(b, kappa)| {
                            let mut p = prefix.clone();
                            p.push(Letter::new(b, w1[k].row as usize, w2[k].col as usize));
                            (p, c * kappa)
                        })
                    })
                    .collect();
            }
            for (w, c) in acc {
                add(&mut out, w, c1 * c2 * Scalar::from_integer(c.into()));
            }
        }
    }
    out
}

/// Deconcatenation `w ↦ w_{≤e} ⊗ w_{>e}`.
pub fn word_split(x: &WordElement, e: usize) -> BTreeMap<(Word, Word), Scalar> {
    let mut out = BTreeMap::new();
    for (w, c) in x {
        let key = (w[..e].to_vec(), w[e..].to_vec());
        let v: &mut Scalar = out.entry(key).or_insert_with(Scalar::zero);
        *v += c;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `w_1 * w_2 = Σ_{σ ∈ shortest coset representatives} (w_1⊗w_2)^σ`.
pub fn word_star(alg: &HeredityData, x: &WordElement, y: &WordElement) -> WordElement {
    let mut out = WordElement::new();
    for (w1, c1) in x {
        for (w2, c2) in y {
            let c = w1.len();
            let d = c + w2.len();
            let cat: Word = w1.iter().chain(w2).copied().collect();
            for sigma in permutations(d) {
                // shortest representatives keep each block in its original order
                let pos = |v: usize| sigma.iter().position(|&s| s == v).unwrap();
                let ok = (1..c).all(|k| pos(k - 1) < pos(k)) && (c + 1..d).all(|k| pos(k - 1) < pos(k));
                if !ok {
                    continue;
                }
                let (w, neg) = act(alg, &cat, &sigma);
                let v = c1 * c2;
                add(&mut out, w, if neg { -v } else { v });
            }
        }
    }
    out
}
