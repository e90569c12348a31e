//! Product, coproduct and star product on the η-basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{triple_parity, Letter, OrbitTriple, SchurAlgebra, SchurError, TElement};
use crate::exactlin::Scalar;
use crate::superalg::HeredityData;

/// An element of `T ⊗ T`, keyed by pairs of basis triples.
pub type Coproduct = BTreeMap<(OrbitTriple, OrbitTriple), Scalar>;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn add_into(map: &mut Coproduct, key: (OrbitTriple, OrbitTriple), c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(key.clone()).or_insert_with(Scalar::zero);
    *e += c;
    if e.is_zero() {
        map.remove(&key);
    }
}

/// Runs of equal letters: `(letter, multiplicity)`.
fn runs(t: &OrbitTriple) -> Vec<(Letter, usize)> {
    let mut out: Vec<(Letter, usize)> = Vec::new();
    for &l in t.letters() {
        match out.last_mut() {
            Some((m, k)) if *m == l => *k += 1,
            _ => out.push((l, 1)),
        }
    }
    out
}

impl SchurAlgebra {
    fn basis_product(&self, t: &OrbitTriple, u: &OrbitTriple) -> Arc<Vec<(OrbitTriple, Scalar)>> {
        let key = (t.clone(), u.clone());
        if let Some(p) = self.products.lock().unwrap().get(&key) {
            return p.clone();
        }
        let alg: &HeredityData = &self.alg;
        let ot = self.orbit(t);
        let ou = self.orbit(u);
        let d = t.degree();
        let mut acc: HashMap<Vec<Letter>, i64> = HashMap::new();
        let mut cur: Vec<Letter> = Vec::with_capacity(d);
        for (w1, neg1) in &ot.words {
            let cols: Vec<u8> = w1.iter().map(|l| l.col).collect();
            let Some(group) = ou.by_rows.get(&cols) else { continue };
            for &k2 in group {
                let (w2, neg2) = &ou.words[k2];
                // ⟨a′, c′⟩ = #{k > l : a′_k odd, c′_l odd}
                let mut koszul = 0usize;
                let mut odd_c = 0usize;
                for k in 0..d {
                    if alg.parity(w1[k].color()).is_odd() {
                        koszul += odd_c;
                    }
                    if alg.parity(w2[k].color()).is_odd() {
                        odd_c += 1;
                    }
                }
                let neg = (*neg1 as usize + *neg2 as usize + koszul) % 2 == 1;
                cur.clear();
                expand_letters(alg, w1, w2, 0, &mut cur, if neg { -1 } else { 1 }, &mut acc);
            }
        }
        let scale = BigInt::from(self.c_factorial(t)) * BigInt::from(self.c_factorial(u));
        let mut out: Vec<(OrbitTriple, Scalar)> = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(w, c)| {
                let o = OrbitTriple::from_sorted(w);
                let den = BigInt::from(self.c_factorial(&o));
                (o, Scalar::new(BigInt::from(c) * &scale, den))
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        let out = Arc::new(out);
        self.products.lock().unwrap().insert(key, out.clone());
        out
    }

    /// Product in `T(n,d)`.
    pub fn multiply(&self, u: &TElement, v: &TElement) -> Result<TElement, SchurError> {
        if u.degree() != v.degree() {
            return Err(SchurError::DegreeMismatch(u.degree(), v.degree()));
        }
        let mut out = TElement::zero(u.degree());
        for (t, a) in u.terms() {
            for (s, b) in v.terms() {
                let ab = a * b;
                for (o, c) in self.basis_product(t, s).iter() {
                    out.add_term(o.clone(), &(&ab * c));
                }
            }
        }
        Ok(out)
    }

    /// `Δ(η_T)` as a list of `(T¹, T², coefficient)` over all splittings.
    pub fn basis_coproduct(&self, t: &OrbitTriple) -> Arc<Vec<(OrbitTriple, OrbitTriple, Scalar)>> {
        if let Some(c) = self.coproducts.lock().unwrap().get(t) {
            return c.clone();
        }
        let rs = runs(t);
        let total = BigInt::from(self.c_factorial(t));
        let mut out = Vec::new();
        let mut take = vec![0usize; rs.len()];
        loop {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (k, &(l, m)) in rs.iter().enumerate() {
                left.extend(std::iter::repeat(l).take(take[k]));
                right.extend(std::iter::repeat(l).take(m - take[k]));
            }
            // odd letters of the right part that precede odd letters of the left part
            let mut inv = 0usize;
            for p in &left {
                if self.is_odd(*p) {
                    inv += right.iter().filter(|q| self.is_odd(**q) && *q < p).count();
                }
            }
            let t1 = OrbitTriple::from_sorted(left);
            let t2 = OrbitTriple::from_sorted(right);
            let den = BigInt::from(self.c_factorial(&t1)) * BigInt::from(self.c_factorial(&t2));
            let mut c = Scalar::new(total.clone(), den);
            if inv % 2 == 1 {
                c = -c;
            }
            out.push((t1, t2, c));
            let mut k = 0;
            while k < rs.len() && take[k] == rs[k].1 {
                take[k] = 0;
                k += 1;
            }
            if k == rs.len() {
                break;
            }
            take[k] += 1;
        }
        let out = Arc::new(out);
        self.coproducts.lock().unwrap().insert(t.clone(), out.clone());
        out
    }

    pub fn coproduct(&self, u: &TElement) -> Coproduct {
        let mut out = Coproduct::new();
        for (t, a) in u.terms() {
            for (t1, t2, c) in self.basis_coproduct(t).iter() {
                add_into(&mut out, (t1.clone(), t2.clone()), a * c);
            }
        }
        out
    }

    /// The part of `Δ(u)` in `T(n,e) ⊗ T(n,d−e)`.
    pub fn coproduct_part(&self, u: &TElement, e: usize) -> Coproduct {
        self.coproduct(u).into_iter().filter(|((t1, _), _)| t1.degree() == e).collect()
    }

    /// `η_T * η_U`: the signed shuffles of `T` and `U` that land on a sorted word.
    fn basis_star(&self, t: &OrbitTriple, u: &OrbitTriple) -> Option<(OrbitTriple, Scalar)> {
        let mut merged: Vec<Letter> = t.letters().iter().chain(u.letters()).copied().collect();
        merged.sort_unstable();
        let out = OrbitTriple::from_sorted(merged);
        let mut mult = 1u64;
        for (l, m) in runs(&out) {
            if m > 1 && self.is_odd(l) {
                return None;
            }
            let m1 = t.letters().iter().filter(|x| **x == l).count() as u64;
            mult *= binomial(m as u64, m1);
        }
        let mut inv = 0usize;
        for p in t.letters() {
            if self.is_odd(*p) {
                inv += u.letters().iter().filter(|q| self.is_odd(**q) && *q < p).count();
            }
        }
        let num = BigInt::from(mult) * BigInt::from(self.c_factorial(t)) * BigInt::from(self.c_factorial(u));
        let mut c = Scalar::new(num, BigInt::from(self.c_factorial(&out)));
        if inv % 2 == 1 {
            c = -c;
        }
        Some((out, c))
    }

    /// Star product `T(n,c) × T(n,d−c) → T(n,d)`.
    pub fn star(&self, u: &TElement, v: &TElement) -> TElement {
        let mut out = TElement::zero(u.degree() + v.degree());
        for (t, a) in u.terms() {
            for (s, b) in v.terms() {
                if let Some((o, c)) = self.basis_star(t, s) {
                    out.add_term(o, &(a * b * c));
                }
            }
        }
        out
    }

    fn koszul_pair(&self, b: &OrbitTriple, a2: &OrbitTriple) -> bool {
        triple_parity(&self.alg, b).is_odd() && triple_parity(&self.alg, a2).is_odd()
    }

    /// `(a⊗b)(a′⊗b′) = (−1)^{|b||a′|} aa′ ⊗ bb′` with degrees matched slotwise.
    pub fn tensor_multiply(&self, x: &Coproduct, y: &Coproduct) -> Coproduct {
        let mut out = Coproduct::new();
        for ((a, b), c1) in x {
            for ((a2, b2), c2) in y {
                if a.degree() != a2.degree() || b.degree() != b2.degree() {
                    continue;
                }
                let mut c = c1 * c2;
                if self.koszul_pair(b, a2) {
                    c = -c;
                }
                for (p, cp) in self.basis_product(a, a2).iter() {
                    for (q, cq) in self.basis_product(b, b2).iter() {
                        add_into(&mut out, (p.clone(), q.clone()), &c * cp * cq);
                    }
                }
            }
        }
        out
    }

    /// `(a⊗b)*(a′⊗b′) = (−1)^{|b||a′|} (a*a′) ⊗ (b*b′)`.
    pub fn tensor_star(&self, x: &Coproduct, y: &Coproduct) -> Coproduct {
        let mut out = Coproduct::new();
        for ((a, b), c1) in x {
            for ((a2, b2), c2) in y {
                let mut c = c1 * c2;
                if self.koszul_pair(b, a2) {
                    c = -c;
                }
                let (Some((p, cp)), Some((q, cq))) = (self.basis_star(a, a2), self.basis_star(b, b2)) else {
                    continue;
                };
                add_into(&mut out, (p, q), c * cp * cq);
            }
        }
        out
    }
}

fn expand_letters(
    alg: &HeredityData,
    w1: &[Letter],
    w2: &[Letter],
    k: usize,
    cur: &mut Vec<Letter>,
    coef: i64,
    acc: &mut HashMap<Vec<Letter>, i64>,
) {
    if k == w1.len() {
        let e = acc.entry(cur.clone()).or_insert(0);
        *e += coef;
        return;
    }
    for &(b, kappa) in alg.product(w1[k].color(), w2[k].color()) {
        let l = Letter::new(b, w1[k].row as usize, w2[k].col as usize);
        if let Some(&prev) = cur.last() {
            // only sorted words without repeated odd letters record ξ-coefficients
            if l < prev || (l == prev && alg.parity(b).is_odd()) {
                continue;
            }
        }
        cur.push(l);
        expand_letters(alg, w1, w2, k + 1, cur, coef * kappa, acc);
        cur.pop();
    }
}
