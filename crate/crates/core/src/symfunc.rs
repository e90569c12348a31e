//! Symmetric polynomials, Schur functions and Littlewood–Richardson
//! coefficients, and the character pipeline for standard modules.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::combinatorics::{Composition, Flavor, Multicomposition, Multipartition, Partition};
use crate::superalg::{HeredityData, Parity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("color {0} has no unique left idempotent")]
    NoLeftIdempotent(String),
    #[error("polynomial is not a nonnegative combination of Schur polynomials")]
    NotSchurPositive,
    #[error("slot count mismatch: {0} vs {1}")]
    SlotMismatch(usize, usize),
}

/// Homogeneous symmetric polynomial in `nvars` variables, stored by monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    nvars: usize,
    terms: BTreeMap<Composition, i64>,
}

impl SymPoly {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Composition, i64> {
        &self.terms
    }

    pub fn coefficient(&self, exps: &[usize]) -> i64 {
        self.terms.get(&Composition::new(exps.to_vec())).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Coefficients agree on every `Σ_n`-orbit of exponents.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(k, v)| {
            let mut sorted = k.parts().to_vec();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            self.terms.get(&Composition::new(sorted)) == Some(v)
        })
    }
}

fn ssyt_contents(lambda: &Partition, n: usize) -> Vec<Vec<usize>> {
    fn rec(lam: &Partition, n: usize, r: usize, s: usize, rows: &mut Vec<Vec<usize>>, content: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == lam.length() {
            out.push(content.clone());
            return;
        }
        let (nr, ns) = if s + 1 == lam.part(r) { (r + 1, 0) } else { (r, s + 1) };
        let lo_row = if s > 0 { rows[r][s - 1] } else { 1 };
        let lo_col = if r > 0 { rows[r - 1][s] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=n {
            rows[r].push(v);
            content[v - 1] += 1;
            rec(lam, n, nr, ns, rows, content, out);
            content[v - 1] -= 1;
            rows[r].pop();
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.length()];
    rec(lambda, n, 0, 0, &mut rows, &mut vec![0; n], &mut out);
    out
}

type SchurCache = Mutex<HashMap<(Partition, usize), Arc<SymPoly>>>;

fn schur_cache() -> &'static SchurCache {
    static C: OnceLock<SchurCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// `s_λ(z_1,…,z_n)` as a sum over semistandard tableaux.
pub fn schur_poly(lambda: &Partition, n: usize) -> Arc<SymPoly> {
    let key = (lambda.clone(), n);
    if let Some(p) = schur_cache().lock().unwrap().get(&key) {
        return p.clone();
    }
    let mut terms: BTreeMap<Composition, i64> = BTreeMap::new();
    for c in ssyt_contents(lambda, n) {
        *terms.entry(Composition::new(c)).or_insert(0) += 1;
    }
    let p = Arc::new(SymPoly { nvars: n, terms });
    schur_cache().lock().unwrap().insert(key, p.clone());
    p
}

type LrCache = Mutex<HashMap<(Partition, Partition), Arc<BTreeMap<Partition, i64>>>>;

fn lr_cache() -> &'static LrCache {
    static C: OnceLock<LrCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn dominant_part(p: &SymPoly) -> BTreeMap<Composition, i64> {
    p.terms
        .iter()
        .filter(|(k, _)| k.parts().windows(2).all(|w| w[0] >= w[1]))
        .map(|(k, v)| (k.clone(), *v))
        .collect()
}

/// Schur expansion `s_μ s_ν = Σ c^λ_{μν} s_λ`, found by expanding in
/// `|μ|+|ν|` variables and peeling leading monomials.
pub fn schur_product(mu: &Partition, nu: &Partition) -> Arc<BTreeMap<Partition, i64>> {
    let key = (mu.clone(), nu.clone());
    if let Some(p) = lr_cache().lock().unwrap().get(&key) {
        return p.clone();
    }
    let n = mu.size() + nu.size();
    let mut out = BTreeMap::new();
    if n == 0 {
        out.insert(Partition::empty(), 1);
    } else {
        let a = schur_poly(mu, n);
        let b = schur_poly(nu, n);
        let mut prod: BTreeMap<Composition, i64> = BTreeMap::new();
        for (ka, va) in &a.terms {
            for (kb, vb) in &b.terms {
                let sum: Vec<usize> = ka.parts().iter().zip(kb.parts()).map(|(x, y)| x + y).collect();
                if sum.windows(2).all(|w| w[0] >= w[1]) {
                    *prod.entry(Composition::new(sum)).or_insert(0) += va * vb;
                }
            }
        }
        prod.retain(|_, v| *v != 0);
        while let Some((lead, c)) = prod.iter().next_back().map(|(k, v)| (k.clone(), *v)) {
            let lam = lead.as_partition().expect("dominant exponents are partitions");
            out.insert(lam.clone(), c);
            for (k, v) in dominant_part(&schur_poly(&lam, n)) {
                let e = prod.entry(k.clone()).or_insert(0);
                *e -= c * v;
                if *e == 0 {
                    prod.remove(&k);
                }
            }
        }
    }
    let out = Arc::new(out);
    lr_cache().lock().unwrap().insert(key, out.clone());
    out
}

/// `c^λ_{μ,ν}`.
pub fn lr_coeff(mu: &Partition, nu: &Partition, lambda: &Partition) -> i64 {
    if mu.size() + nu.size() != lambda.size() {
        return 0;
    }
    schur_product(mu, nu).get(lambda).copied().unwrap_or(0)
}

/// `Δ(s_λ) = Σ c^λ_{μν} s_μ ⊗ s_ν`.
pub fn coproduct_schur(lambda: &Partition) -> Vec<(Partition, Partition, i64)> {
    let d = lambda.size();
    let mut out = Vec::new();
    for k in 0..=d {
        for mu in Partition::all(k, k) {
            for nu in Partition::all(d - k, d - k) {
                let c = lr_coeff(&mu, &nu, lambda);
                if c != 0 {
                    out.push((mu.clone(), nu, c));
                }
            }
        }
    }
    out
}

/// Coefficients of the `(m−1)`-fold iterated coproduct of `s_λ`, splitting off the first slot each time.
pub fn iterated_lr(lambda: &Partition, m: usize) -> BTreeMap<Vec<Partition>, i64> {
    assert!(m >= 1, "iterated coproduct needs at least one slot");
    let mut out = BTreeMap::new();
    if m == 1 {
        out.insert(vec![lambda.clone()], 1);
        return out;
    }
    for (mu, rho, c) in coproduct_schur(lambda) {
        for (rest, c2) in iterated_lr(&rho, m - 1) {
            let mut key = vec![mu.clone()];
            key.extend(rest);
            *out.entry(key).or_insert(0) += c * c2;
        }
    }
    out
}

/// As [`iterated_lr`] but splitting off the last slot each time.
pub fn iterated_lr_right(lambda: &Partition, m: usize) -> BTreeMap<Vec<Partition>, i64> {
    assert!(m >= 1, "iterated coproduct needs at least one slot");
    let mut out = BTreeMap::new();
    if m == 1 {
        out.insert(vec![lambda.clone()], 1);
        return out;
    }
    for (rho, nu, c) in coproduct_schur(lambda) {
        for (mut key, c2) in iterated_lr_right(&rho, m - 1) {
            key.push(nu.clone());
            *out.entry(key).or_insert(0) += c * c2;
        }
    }
    out
}

/// A finite combination of tensor products of Schur functions, one partition per slot.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    slots: usize,
    terms: BTreeMap<Multipartition, i64>,
}

impl SchurExpansion {
    pub fn new(slots: usize) -> Self {
        SchurExpansion { slots, terms: BTreeMap::new() }
    }

    pub fn from_terms(slots: usize, terms: impl IntoIterator<Item = (Multipartition, i64)>) -> Self {
        let mut e = Self::new(slots);
        for (k, v) in terms {
            e.add_term(k, v);
        }
        e
    }

    pub fn single(key: Multipartition) -> Self {
        let slots = key.slots();
        let mut e = Self::new(slots);
        e.add_term(key, 1);
        e
    }

    pub fn add_term(&mut self, key: Multipartition, c: i64) {
        debug_assert_eq!(key.slots(), self.slots);
        let e = self.terms.entry(key.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn terms(&self) -> &BTreeMap<Multipartition, i64> {
        &self.terms
    }

    pub fn coefficient(&self, key: &Multipartition) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Slotwise product via Littlewood–Richardson expansion.
    pub fn mul(&self, other: &SchurExpansion) -> Result<SchurExpansion, SymError> {
        if self.slots != other.slots {
            return Err(SymError::SlotMismatch(self.slots, other.slots));
        }
        let mut out = SchurExpansion::new(self.slots);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut acc: Vec<(Vec<Partition>, i64)> = vec![(Vec::new(), ca * cb)];
                for t in 0..self.slots {
                    let prod = schur_product(a.component(t), b.component(t));
                    acc = acc
                        .into_iter()
                        .flat_map(|(prefix, c)| {
                            prod.iter().map(move |(p, k)| {
                                let mut q = prefix.clone();
                                q.push(p.clone());
                                (q, c * k)
                            })
                        })
                        .collect();
                }
                for (key, c) in acc {
                    out.add_term(Multipartition::new(key), c);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| if *c == 1 { format!("s[{k}]") } else { format!("{c}*s[{k}]") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Polynomial in the tensor product of `slots` copies of `Sym(nvars)`, by monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSymPoly {
    slots: usize,
    nvars: usize,
    terms: BTreeMap<Multicomposition, i64>,
}

impl MultiSymPoly {
    pub fn zero(slots: usize, nvars: usize) -> Self {
        MultiSymPoly { slots, nvars, terms: BTreeMap::new() }
    }

    pub fn one(slots: usize, nvars: usize) -> Self {
        Self::monomial(Multicomposition::zero(slots, nvars))
    }

    pub fn monomial(mu: Multicomposition) -> Self {
        let mut p = MultiSymPoly { slots: mu.slots(), nvars: mu.width(), terms: BTreeMap::new() };
        p.add_term(mu, 1);
        p
    }

    pub fn from_terms(slots: usize, nvars: usize, terms: impl IntoIterator<Item = (Multicomposition, i64)>) -> Self {
        let mut p = Self::zero(slots, nvars);
        for (k, v) in terms {
            p.add_term(k, v);
        }
        p
    }

    pub fn add_term(&mut self, key: Multicomposition, c: i64) {
        let e = self.terms.entry(key.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Multicomposition, i64> {
        &self.terms
    }

    pub fn coefficient(&self, key: &Multicomposition) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients.
    pub fn eval_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &MultiSymPoly) -> MultiSymPoly {
        let mut p = self.clone();
        for (k, v) in &other.terms {
            p.add_term(k.clone(), *v);
        }
        p
    }

    pub fn scaled(&self, c: i64) -> MultiSymPoly {
        let mut p = Self::zero(self.slots, self.nvars);
        for (k, v) in &self.terms {
            p.add_term(k.clone(), v * c);
        }
        p
    }

    pub fn sub(&self, other: &MultiSymPoly) -> MultiSymPoly {
        self.add(&other.scaled(-1))
    }

    pub fn mul(&self, other: &MultiSymPoly) -> MultiSymPoly {
        let mut p = Self::zero(self.slots, self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let key = Multicomposition::new(
                    a.components()
                        .iter()
                        .zip(b.components())
                        .map(|(x, y)| Composition::new(x.parts().iter().zip(y.parts()).map(|(u, v)| u + v).collect()))
                        .collect(),
                );
                p.add_term(key, ca * cb);
            }
        }
        p
    }

    /// `ρ_n` applied slotwise to a Schur expansion.
    pub fn from_schur(e: &SchurExpansion, nvars: usize) -> MultiSymPoly {
        let mut p = Self::zero(e.slots(), nvars);
        for (key, c) in e.terms() {
            let mut acc: Vec<(Vec<Composition>, i64)> = vec![(Vec::new(), *c)];
            for t in 0..e.slots() {
                let s = schur_poly(key.component(t), nvars);
                acc = acc
                    .into_iter()
                    .flat_map(|(prefix, c)| {
                        s.terms.iter().map(move |(m, k)| {
                            let mut q = prefix.clone();
                            q.push(m.clone());
                            (q, c * k)
                        })
                    })
                    .collect();
            }
            for (k, v) in acc {
                p.add_term(Multicomposition::new(k), v);
            }
        }
        p
    }

    /// Schur expansion, peeling the lexicographically largest monomial.
    pub fn to_schur(&self) -> Result<SchurExpansion, SymError> {
        let mut rest = self.clone();
        let mut out = SchurExpansion::new(self.slots);
        while let Some((lead, c)) = rest.terms.iter().next_back().map(|(k, v)| (k.clone(), *v)) {
            let Some(nu) = lead.as_multipartition() else {
                return Err(SymError::NotSchurPositive);
            };
            out.add_term(nu.clone(), c);
            rest = rest.sub(&Self::from_schur(&SchurExpansion::single(nu), self.nvars).scaled(c));
        }
        Ok(out)
    }

    pub fn monomial_name(key: &Multicomposition) -> String {
        let slot = |c: &Composition| {
            let s: String = c
                .parts()
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(r, e)| if *e == 1 { format!("z{}", r + 1) } else { format!("z{}^{}", r + 1, e) })
                .collect();
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        };
        key.components().iter().map(slot).collect::<Vec<_>>().join("|")
    }
}

impl fmt::Display for MultiSymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| {
                let m = Self::monomial_name(k);
                if *c == 1 {
                    m
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Conjugates the partition in every odd slot.
pub fn superconjugate_tr(p: &SchurExpansion, parities: &[Parity]) -> SchurExpansion {
    let mut out = SchurExpansion::new(p.slots());
    for (k, c) in p.terms() {
        let key = Multipartition::new(
            k.components()
                .iter()
                .zip(parities)
                .map(|(lam, par)| if par.is_odd() { lam.conjugate() } else { lam.clone() })
                .collect(),
        );
        out.add_term(key, *c);
    }
    out
}

/// `χ`: multiplies the slots of colors sharing a left idempotent `j` into slot `j`.
pub fn chi_merge(p: &SchurExpansion, alg: &HeredityData, i: usize) -> Result<SchurExpansion, SymError> {
    let colors = alg.colors(Flavor::X, i);
    if p.slots() != colors.len() {
        return Err(SymError::SlotMismatch(p.slots(), colors.len()));
    }
    let targets: Vec<usize> = (0..colors.len())
        .map(|r| alg.x_left_idem(i, r).ok_or_else(|| SymError::NoLeftIdempotent(colors[r].name.clone())))
        .collect::<Result<_, _>>()?;
    let l = alg.num_components();
    let mut out = SchurExpansion::new(l);
    for (key, c) in p.terms() {
        let mut acc = SchurExpansion::from_terms(l, [(Multipartition::empty(l), *c)]);
        for (r, &j) in targets.iter().enumerate() {
            let f = Multipartition::iota(l, j, key.component(r));
            acc = acc.mul(&SchurExpansion::single(f))?;
        }
        for (k, v) in acc.terms() {
            out.add_term(k.clone(), *v);
        }
    }
    Ok(out)
}

/// `ρ_n ∘ χ ∘ tr ∘ Δ^{t−1}(s_λ)` with `t = |X(i)|`.
pub fn character_pipeline(lambda: &Partition, i: usize, alg: &HeredityData, n: usize) -> Result<MultiSymPoly, SymError> {
    let colors = alg.colors(Flavor::X, i);
    let t = colors.len();
    let split = SchurExpansion::from_terms(
        t,
        iterated_lr(lambda, t).into_iter().map(|(k, v)| (Multipartition::new(k), v)),
    );
    let parities: Vec<Parity> = colors.iter().map(|c| c.parity).collect();
    let merged = chi_merge(&superconjugate_tr(&split, &parities), alg, i)?;
    Ok(MultiSymPoly::from_schur(&merged, n))
}

/// Predicted multiplicities `c^ν_{λμ}` of `Δ(ι_i(ν))` in `Δ(ι_i(λ)) ⊗ Δ(ι_i(μ))`.
pub fn product_character_prediction(lambda: &Partition, mu: &Partition, n: usize) -> BTreeMap<Partition, i64> {
    schur_product(lambda, mu)
        .iter()
        .filter(|(nu, _)| nu.length() <= n)
        .map(|(nu, c)| (nu.clone(), *c))
        .collect()
}

/// Componentwise products `∏_j c^{ν^(j)}_{λ^(j) μ^(j)}`.
pub fn multi_lr(lambda: &Multipartition, mu: &Multipartition) -> BTreeMap<Multipartition, i64> {
    let e = SchurExpansion::single(lambda.clone())
        .mul(&SchurExpansion::single(mu.clone()))
        .expect("slot counts agree");
    e.terms().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{omega_lambda, PSet};
    use crate::superalg::fixtures;
    use proptest::prelude::*;

    fn p(xs: &[usize]) -> Partition {
        Partition::new(xs.to_vec()).unwrap()
    }

    fn mp(cs: &[&[usize]]) -> Multipartition {
        Multipartition::new(cs.iter().map(|c| p(c)).collect())
    }

    /// LR coefficients by counting skew tableaux of shape λ/μ with content ν
    /// whose reverse reading word is a lattice word.
    fn lr_oracle(mu: &Partition, nu: &Partition, lam: &Partition) -> i64 {
        if mu.size() + nu.size() != lam.size() || (0..mu.length()).any(|r| mu.part(r) > lam.part(r)) {
            return 0;
        }
        let rows: Vec<(usize, usize)> = (0..lam.length()).map(|r| (mu.part(r), lam.part(r))).collect();
        let cells: Vec<(usize, usize)> = rows.iter().enumerate().flat_map(|(r, &(a, b))| (a..b).map(move |s| (r, s))).collect();
        let mut fill: HashMap<(usize, usize), usize> = HashMap::new();
        fn rec(k: usize, cells: &[(usize, usize)], nu: &Partition, mu: &Partition, fill: &mut HashMap<(usize, usize), usize>, count: &mut i64) {
            if k == cells.len() {
                // reverse reading word: rows top to bottom, right to left
                let mut seen = vec![0usize; nu.length() + 1];
                let mut order: Vec<(usize, usize)> = cells.to_vec();
                order.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
                for c in order {
                    let v = fill[&c];
                    seen[v] += 1;
                    if v > 1 && seen[v] > seen[v - 1] {
                        return;
                    }
                }
                if (1..=nu.length()).all(|v| seen[v] == nu.part(v - 1)) {
                    *count += 1;
                }
                return;
            }
            let (r, s) = cells[k];
            for v in 1..=nu.length().max(1) {
                if nu.length() == 0 {
                    break;
                }
                if s > mu.part(r) && fill[&(r, s - 1)] > v {
                    continue;
                }
                if r > 0 && s >= mu.part(r - 1) {
                    if let Some(&up) = fill.get(&(r - 1, s)) {
                        if up >= v {
                            continue;
                        }
                    }
                }
                fill.insert((r, s), v);
                rec(k + 1, cells, nu, mu, fill, count);
                fill.remove(&(r, s));
            }
        }
        if cells.is_empty() {
            return if nu.is_empty() { 1 } else { 0 };
        }
        let mut count = 0;
        rec(0, &cells, nu, mu, &mut fill, &mut count);
        count
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_poly(&p(&[]), 3).terms().len(), 1);
        assert_eq!(schur_poly(&p(&[]), 3).eval_ones(), 1);
        let s = schur_poly(&p(&[1, 1]), 2);
        assert_eq!(s.terms().len(), 1);
        assert_eq!(s.coefficient(&[1, 1]), 1);
        let s = schur_poly(&p(&[2]), 2);
        assert_eq!((s.coefficient(&[2, 0]), s.coefficient(&[1, 1]), s.coefficient(&[0, 2])), (1, 1, 1));
        assert_eq!(s.eval_ones(), 3);
    }

    #[test]
    fn schur_vanishes_with_too_many_parts() {
        for d in 0..=5 {
            for lam in Partition::all(d, d) {
                for n in 1..=4 {
                    let s = schur_poly(&lam, n);
                    assert_eq!(s.is_zero(), lam.length() > n);
                    assert!(s.is_symmetric());
                }
            }
        }
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[]), &p(&[2, 1])), 1);
        assert_eq!(lr_coeff(&p(&[2]), &p(&[1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coeff(&p(&[2]), &p(&[1]), &p(&[3])), 1);
        assert_eq!(lr_coeff(&p(&[2]), &p(&[2]), &p(&[2, 2])), 1);
        assert_eq!(lr_coeff(&p(&[2]), &p(&[2]), &p(&[3])), 0);
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn lr_matches_skew_tableau_count() {
        for d in 0..=5 {
            for lam in Partition::all(d, d) {
                for k in 0..=d {
                    for mu in Partition::all(k, k) {
                        for nu in Partition::all(d - k, d - k) {
                            assert_eq!(lr_coeff(&mu, &nu, &lam), lr_oracle(&mu, &nu, &lam), "{mu} {nu} {lam}");
                            assert_eq!(lr_coeff(&mu, &nu, &lam), lr_coeff(&nu, &mu, &lam));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn iterated_examples() {
        let m1 = iterated_lr(&p(&[2, 1]), 1);
        assert_eq!(m1.len(), 1);
        let m2 = iterated_lr(&p(&[1]), 2);
        assert_eq!(m2.get(&vec![p(&[1]), p(&[])]), Some(&1));
        assert_eq!(m2.get(&vec![p(&[]), p(&[1])]), Some(&1));
        assert_eq!(m2.len(), 2);
        assert_eq!(iterated_lr(&p(&[2, 1]), 2).get(&vec![p(&[1]), p(&[1, 1])]), Some(&1));
    }

    #[test]
    fn coassociativity() {
        for d in 0..=4 {
            for lam in Partition::all(d, d) {
                assert_eq!(iterated_lr(&lam, 3), iterated_lr_right(&lam, 3));
            }
        }
    }

    #[test]
    fn products_at_all_ones() {
        for n in 1..=3 {
            for a in 0..=4 {
                for b in 0..=(4 - a) {
                    for mu in Partition::all(a, a) {
                        for nu in Partition::all(b, b) {
                            let lhs: i64 = schur_product(&mu, &nu)
                                .iter()
                                .map(|(lam, c)| c * schur_poly(lam, n).eval_ones())
                                .sum();
                            assert_eq!(lhs, schur_poly(&mu, n).eval_ones() * schur_poly(&nu, n).eval_ones());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pieri_bridge() {
        for d in 0..=4 {
            for lam in Partition::all(d, d) {
                for c in 1..=3 {
                    let n = d + c;
                    let omega: Vec<Partition> = omega_lambda(&lam, c, n)
                        .unwrap()
                        .iter()
                        .map(|pset: &PSet| pset.add_to(&lam.padded(n).unwrap()).as_partition().unwrap())
                        .collect();
                    for nu in Partition::all(d + c, n) {
                        let k = lr_coeff(&lam, &Partition::column(c), &nu);
                        assert!(k == 0 || k == 1);
                        assert_eq!(k == 1, omega.contains(&nu), "{lam} {c} {nu}");
                    }
                }
            }
        }
    }

    #[test]
    fn tr_examples() {
        let e = SchurExpansion::single(mp(&[&[2], &[1]]));
        assert_eq!(superconjugate_tr(&e, &[Parity::Even, Parity::Even]), e);
        let t = superconjugate_tr(&SchurExpansion::single(mp(&[&[2]])), &[Parity::Odd]);
        assert_eq!(t, SchurExpansion::single(mp(&[&[1, 1]])));
        let pars = [Parity::Odd, Parity::Even];
        let e = SchurExpansion::from_terms(2, [(mp(&[&[2, 1], &[3]]), 2), (mp(&[&[3], &[]]), -1)]);
        assert_eq!(superconjugate_tr(&superconjugate_tr(&e, &pars), &pars), e);
    }

    #[test]
    fn chi_examples() {
        let triv = fixtures::trivial();
        let e = SchurExpansion::single(mp(&[&[2, 1]]));
        assert_eq!(chi_merge(&e, &triv, 0).unwrap(), e);
        let u = fixtures::super_ut();
        let e = SchurExpansion::single(mp(&[&[1], &[1]]));
        assert_eq!(chi_merge(&e, &u, 1).unwrap(), SchurExpansion::single(mp(&[&[1], &[1]])));
        // e2 goes to slot 2 (position 1), x to slot 1 (position 0)
        let e = SchurExpansion::single(mp(&[&[2], &[]]));
        assert_eq!(chi_merge(&e, &u, 1).unwrap(), SchurExpansion::single(mp(&[&[], &[2]])));
        let q = fixtures::quiver2();
        let e = SchurExpansion::single(mp(&[&[1], &[1]]));
        // for component 1 of the quiver, e1 ↦ slot 1 and a ↦ slot 0
        assert_eq!(chi_merge(&e, &q, 1).unwrap(), SchurExpansion::single(mp(&[&[1], &[1]])));
    }

    #[test]
    fn chi_same_slot_multiplies() {
        // two colors with the same left idempotent: use the merge on a fake two-slot input
        // through the product it must realize
        let a = SchurExpansion::single(mp(&[&[1]]));
        let prod = a.mul(&a).unwrap();
        assert_eq!(prod, SchurExpansion::from_terms(1, [(mp(&[&[2]]), 1), (mp(&[&[1, 1]]), 1)]));
    }

    #[test]
    fn pipeline_examples() {
        let triv = fixtures::trivial();
        for n in 1..=3 {
            for d in 0..=3 {
                for lam in Partition::all(d, n) {
                    let ch = character_pipeline(&lam, 0, &triv, n).unwrap();
                    let s = schur_poly(&lam, n);
                    let expect = MultiSymPoly::from_terms(
                        1,
                        n,
                        s.terms().iter().map(|(k, v)| (Multicomposition::new(vec![k.clone()]), *v)),
                    );
                    assert_eq!(ch, expect);
                }
            }
        }
        let u = fixtures::super_ut();
        let ch = character_pipeline(&p(&[1]), 1, &u, 2).unwrap();
        let schur = ch.to_schur().unwrap();
        assert_eq!(schur, SchurExpansion::from_terms(2, [(mp(&[&[], &[1]]), 1), (mp(&[&[1], &[]]), 1)]));
        let ch = character_pipeline(&p(&[2]), 1, &u, 2).unwrap();
        assert_eq!(
            ch.to_schur().unwrap(),
            SchurExpansion::from_terms(2, [(mp(&[&[], &[2]]), 1), (mp(&[&[1], &[1]]), 1), (mp(&[&[1, 1], &[]]), 1)])
        );
    }

    #[test]
    fn prediction_examples() {
        assert_eq!(product_character_prediction(&p(&[2, 1]), &p(&[]), 3), BTreeMap::from([(p(&[2, 1]), 1)]));
        assert_eq!(
            product_character_prediction(&p(&[1]), &p(&[1]), 2),
            BTreeMap::from([(p(&[2]), 1), (p(&[1, 1]), 1)])
        );
        assert_eq!(
            product_character_prediction(&p(&[2, 1]), &p(&[1]), 4),
            BTreeMap::from([(p(&[3, 1]), 1), (p(&[2, 2]), 1), (p(&[2, 1, 1]), 1)])
        );
    }

    fn small_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0usize..3, 0..3).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn schur_views_round_trip(a in small_partition(), b in small_partition(), n in 1usize..4, c in 1i64..3) {
            let e = SchurExpansion::from_terms(2, [(Multipartition::new(vec![a.clone(), b.clone()]), c), (Multipartition::new(vec![b, a]), 1)]);
            let e = SchurExpansion::from_terms(2, e.terms().iter().filter(|(k, _)| k.max_length() <= n).map(|(k, v)| (k.clone(), *v)));
            let poly = MultiSymPoly::from_schur(&e, n);
            prop_assert_eq!(poly.to_schur().unwrap(), e);
        }

        #[test]
        fn monomial_product_matches_lr(a in small_partition(), b in small_partition(), n in 1usize..4) {
            let pa = MultiSymPoly::from_schur(&SchurExpansion::single(Multipartition::new(vec![a.clone()])), n);
            let pb = MultiSymPoly::from_schur(&SchurExpansion::single(Multipartition::new(vec![b.clone()])), n);
            let lr = SchurExpansion::from_terms(1, schur_product(&a, &b).iter().map(|(k, v)| (Multipartition::new(vec![k.clone()]), *v)));
            prop_assert_eq!(pa.mul(&pb), MultiSymPoly::from_schur(&lr, n));
        }
    }
}
