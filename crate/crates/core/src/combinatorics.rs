//! Partitions, multipartitions, the dominance and ≤_I orders, colored
//! tableaux and the P-set combinatorics of one-column tensor filtrations.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::superalg::{HeredityData, Parity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotPartition(Vec<usize>),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("partition {0} has more than {1} parts")]
    TooManyParts(String, usize),
    #[error("requires d+c ≤ n (d={d}, c={c}, n={n})")]
    DegreeBound { d: usize, c: usize, n: usize },
    #[error("cannot parse {0:?}: {1}")]
    Parse(String, String),
    #[error("color {0} has no unique idempotent")]
    NoIdempotent(String),
    #[error("covering pairs of the poset contain a cycle")]
    Cycle,
}

/// Finite poset on positions `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Reflexive-transitive closure of covering pairs `(a, b)` meaning `a < b`.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Self, CombError> {
        let mut leq = vec![vec![false; size]; size];
        for (a, row) in leq.iter_mut().enumerate() {
            row[a] = true;
        }
        for &(a, b) in covers {
            leq[a][b] = true;
        }
        for k in 0..size {
            for a in 0..size {
                if leq[a][k] {
                    for b in 0..size {
                        if leq[k][b] {
                            leq[a][b] = true;
                        }
                    }
                }
            }
        }
        for a in 0..size {
            for b in 0..size {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(CombError::Cycle);
                }
            }
        }
        Ok(Poset { leq })
    }

    pub fn chain(size: usize) -> Self {
        let covers: Vec<_> = (1..size).map(|k| (k - 1, k)).collect();
        Self::from_covers(size, &covers).expect("a chain has no cycles")
    }

    pub fn size(&self) -> usize {
        self.leq.len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    /// Covering pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|k| self.lt(a, k) && self.lt(k, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    write!(f, "{}", s.join(","))
}

fn parse_parts(s: &str) -> Result<Vec<usize>, CombError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| CombError::Parse(s.to_string(), e.to_string()))
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, CombError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombError::NotPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Single column `(1^c)`.
    pub fn column(c: usize) -> Self {
        Partition(vec![1; c])
    }

    pub fn parse(s: &str) -> Result<Self, CombError> {
        Self::new(parse_parts(s)?)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn part(&self, r: usize) -> usize {
        self.0.get(r).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(0);
        Partition((1..=m).map(|r| self.0.iter().filter(|&&p| p >= r).count()).collect())
    }

    pub fn padded(&self, n: usize) -> Result<Composition, CombError> {
        if self.length() > n {
            return Err(CombError::TooManyParts(self.to_string(), n));
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Ok(Composition(v))
    }

    /// All partitions of `d` with at most `max_parts` parts, in reverse lexicographic order.
    pub fn all(d: usize, max_parts: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, d, max_parts, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn zero(n: usize) -> Self {
        Composition(vec![0; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn add_unit(&mut self, r: usize) {
        self.0[r] += 1;
    }

    /// The partition obtained by trimming zeros, if the parts are weakly decreasing.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }

    /// `σλ` with `(σλ)_{σ(r)} = λ_r`; `sigma` holds 1-based images.
    pub fn permuted(&self, sigma: &[usize]) -> Composition {
        let mut out = vec![0; self.0.len()];
        for (r, &v) in self.0.iter().enumerate() {
            out[sigma[r] - 1] = v;
        }
        Composition(out)
    }

    pub fn truncated(&self, n: usize) -> Composition {
        Composition(self.0[..n.min(self.0.len())].to_vec())
    }

    /// All compositions of `d` into `n` parts.
    pub fn all(n: usize, d: usize) -> Vec<Composition> {
        fn rec(n: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if cur.len() + 1 == n {
                cur.push(rem);
                out.push(Composition(cur.clone()));
                cur.pop();
                return;
            }
            for v in (0..=rem).rev() {
                cur.push(v);
                rec(n, rem - v, cur, out);
                cur.pop();
            }
        }
        if n == 0 {
            return if d == 0 { vec![Composition(Vec::new())] } else { Vec::new() };
        }
        let mut out = Vec::new();
        rec(n, d, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Dominance `λ ⊴ μ` on compositions of the same size and length.
pub fn dominance_leq(lambda: &Composition, mu: &Composition) -> Result<bool, CombError> {
    if lambda.len() != mu.len() {
        return Err(CombError::LengthMismatch(lambda.len(), mu.len()));
    }
    if lambda.size() != mu.size() {
        return Err(CombError::SizeMismatch(lambda.size(), mu.size()));
    }
    let (mut a, mut b) = (0, 0);
    for (x, y) in lambda.parts().iter().zip(mu.parts()) {
        a += x;
        b += y;
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

fn dominance_padded(a: &[usize], b: &[usize]) -> bool {
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for r in 0..n {
        sa += a.get(r).copied().unwrap_or(0);
        sb += b.get(r).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    sa == sb
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition(components)
    }

    pub fn empty(slots: usize) -> Self {
        Multipartition(vec![Partition::empty(); slots])
    }

    /// `ι_i(λ)`: λ placed in slot `i`, empty elsewhere.
    pub fn iota(slots: usize, i: usize, lambda: &Partition) -> Self {
        let mut v = vec![Partition::empty(); slots];
        v[i] = lambda.clone();
        Multipartition(v)
    }

    /// Parses `"2,1|1"`; a single component needs no bar.
    pub fn parse(s: &str, slots: usize) -> Result<Self, CombError> {
        let comps: Vec<&str> = s.split('|').collect();
        if comps.len() != slots {
            return Err(CombError::Parse(
                s.to_string(),
                format!("expected {slots} components separated by '|'"),
            ));
        }
        Ok(Multipartition(comps.into_iter().map(Partition::parse).collect::<Result<_, _>>()?))
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.0[i]
    }

    pub fn slots(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|p| p.size()).sum()
    }

    /// ‖λ‖ = (|λ^(s)|)_s.
    pub fn norm(&self) -> Vec<usize> {
        self.0.iter().map(|p| p.size()).collect()
    }

    pub fn max_length(&self) -> usize {
        self.0.iter().map(|p| p.length()).max().unwrap_or(0)
    }

    pub fn padded(&self, n: usize) -> Result<Multicomposition, CombError> {
        Ok(Multicomposition(self.0.iter().map(|p| p.padded(n)).collect::<Result<_, _>>()?))
    }

    /// Componentwise sum of two multipartitions (row by row).
    pub fn add(&self, other: &Multipartition) -> Multipartition {
        let comps = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| {
                let m = a.length().max(b.length());
                Partition::new((0..m).map(|r| a.part(r) + b.part(r)).collect())
                    .expect("sum of partitions is a partition")
            })
            .collect();
        Multipartition(comps)
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("|"))
    }
}

impl Serialize for Multipartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multicomposition(Vec<Composition>);

impl Multicomposition {
    pub fn new(components: Vec<Composition>) -> Self {
        Multicomposition(components)
    }

    pub fn zero(slots: usize, n: usize) -> Self {
        Multicomposition(vec![Composition::zero(n); slots])
    }

    pub fn components(&self) -> &[Composition] {
        &self.0
    }

    pub fn component(&self, i: usize) -> &Composition {
        &self.0[i]
    }

    pub fn slots(&self) -> usize {
        self.0.len()
    }

    pub fn width(&self) -> usize {
        self.0.first().map(|c| c.len()).unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|c| c.size()).sum()
    }

    pub fn norm(&self) -> Vec<usize> {
        self.0.iter().map(|c| c.size()).collect()
    }

    pub fn add_unit(&mut self, slot: usize, r: usize) {
        self.0[slot].add_unit(r);
    }

    pub fn as_multipartition(&self) -> Option<Multipartition> {
        self.0.iter().map(|c| c.as_partition()).collect::<Option<Vec<_>>>().map(Multipartition)
    }

    pub fn permuted(&self, sigma: &[Vec<usize>]) -> Multicomposition {
        Multicomposition(self.0.iter().zip(sigma).map(|(c, s)| c.permuted(s)).collect())
    }

    pub fn truncated(&self, n: usize) -> Multicomposition {
        Multicomposition(self.0.iter().map(|c| c.truncated(n)).collect())
    }

    /// All multicompositions with `slots` components of width `n` and total size `d`.
    pub fn all(slots: usize, n: usize, d: usize) -> Vec<Multicomposition> {
        let mut out = Vec::new();
        for sizes in Composition::all(slots, d) {
            let mut acc: Vec<Vec<Composition>> = vec![Vec::new()];
            for &s in sizes.parts() {
                let opts = Composition::all(n, s);
                acc = acc
                    .into_iter()
                    .flat_map(|prefix| {
                        opts.iter().map(move |c| {
                            let mut p = prefix.clone();
                            p.push(c.clone());
                            p
                        })
                    })
                    .collect();
            }
            out.extend(acc.into_iter().map(Multicomposition));
        }
        out
    }
}

impl fmt::Display for Multicomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("|"))
    }
}

impl Serialize for Multicomposition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

fn tails(poset: &Poset, sizes: &[usize]) -> Vec<usize> {
    (0..poset.size())
        .map(|s| (0..poset.size()).filter(|&t| poset.leq(s, t)).map(|t| sizes[t]).sum())
        .collect()
}

/// ≤_I on multicompositions given as lists of parts per slot.
fn leq_i_parts(poset: &Poset, a: &[&[usize]], b: &[&[usize]]) -> bool {
    let na: Vec<usize> = a.iter().map(|p| p.iter().sum()).collect();
    let nb: Vec<usize> = b.iter().map(|p| p.iter().sum()).collect();
    if na == nb {
        return a.iter().zip(b).all(|(x, y)| dominance_padded(x, y));
    }
    let ta = tails(poset, &na);
    let tb = tails(poset, &nb);
    ta.iter().zip(&tb).all(|(x, y)| x <= y)
}

/// `λ ≤_I μ` for multipartitions of equal total degree.
pub fn order_leq_i(poset: &Poset, lambda: &Multipartition, mu: &Multipartition) -> Result<bool, CombError> {
    if lambda.size() != mu.size() {
        return Err(CombError::SizeMismatch(lambda.size(), mu.size()));
    }
    if lambda.slots() != poset.size() || mu.slots() != poset.size() {
        return Err(CombError::LengthMismatch(lambda.slots(), poset.size()));
    }
    let a: Vec<&[usize]> = lambda.components().iter().map(|p| p.parts()).collect();
    let b: Vec<&[usize]> = mu.components().iter().map(|p| p.parts()).collect();
    Ok(leq_i_parts(poset, &a, &b))
}

/// `λ ≤_I μ` for multicompositions of equal total degree.
pub fn order_leq_i_comp(
    poset: &Poset,
    lambda: &Multicomposition,
    mu: &Multicomposition,
) -> Result<bool, CombError> {
    if lambda.size() != mu.size() {
        return Err(CombError::SizeMismatch(lambda.size(), mu.size()));
    }
    let a: Vec<&[usize]> = lambda.components().iter().map(|p| p.parts()).collect();
    let b: Vec<&[usize]> = mu.components().iter().map(|p| p.parts()).collect();
    Ok(leq_i_parts(poset, &a, &b))
}

/// All I-multipartitions of `d` with at most `n` parts per component, listed
/// so that larger elements in ≤_I come first.
pub fn enumerate_multipartitions(n: usize, d: usize, poset: &Poset) -> Vec<Multipartition> {
    let slots = poset.size();
    let mut all = Vec::new();
    for sizes in Composition::all(slots, d) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &s in sizes.parts() {
            let opts = Partition::all(s, n);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    opts.iter().map(move |p| {
                        let mut q = prefix.clone();
                        q.push(p.clone());
                        q
                    })
                })
                .collect();
        }
        all.extend(acc.into_iter().map(Multipartition));
    }
    descending_linear_extension(poset, all)
}

/// Kahn's algorithm: repeatedly emit the first remaining element that is maximal.
fn descending_linear_extension(poset: &Poset, items: Vec<Multipartition>) -> Vec<Multipartition> {
    let m = items.len();
    let mut above = vec![0usize; m];
    let mut lt = vec![vec![false; m]; m];
    for a in 0..m {
        for b in 0..m {
            if a != b && order_leq_i(poset, &items[a], &items[b]).unwrap_or(false) {
                lt[a][b] = true;
                above[a] += 1;
            }
        }
    }
    let mut done = vec![false; m];
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        let k = (0..m).find(|&k| !done[k] && above[k] == 0).expect("≤_I is acyclic");
        done[k] = true;
        for a in 0..m {
            if lt[a][k] {
                above[a] -= 1;
            }
        }
        out.push(items[k].clone());
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Flavor {
    X,
    Y,
}

/// Entry of a colored tableau: a letter in `[n]` (1-based) and the rank of
/// its color in the X(i) or Y(i) list of the host component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub letter: usize,
    pub color: usize,
}

/// A color of the heredity data: component position and rank within X or Y.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorRef {
    pub component: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredTableau {
    shape: Multipartition,
    flavor: Flavor,
    entries: Vec<Vec<Vec<Entry>>>,
}

impl ColoredTableau {
    pub fn from_entries(shape: Multipartition, flavor: Flavor, entries: Vec<Vec<Vec<Entry>>>) -> Self {
        ColoredTableau { shape, flavor, entries }
    }

    /// `T^λ`: node `(r, s)` of every component filled with `r^{e_i}`.
    pub fn initial(shape: &Multipartition, flavor: Flavor) -> Self {
        let entries = shape
            .components()
            .iter()
            .map(|p| {
                p.parts()
                    .iter()
                    .enumerate()
                    .map(|(r, &len)| vec![Entry { letter: r + 1, color: 0 }; len])
                    .collect()
            })
            .collect();
        ColoredTableau { shape: shape.clone(), flavor, entries }
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn entries(&self) -> &[Vec<Vec<Entry>>] {
        &self.entries
    }

    pub fn is_initial(&self) -> bool {
        *self == Self::initial(&self.shape, self.flavor)
    }

    pub fn max_letter(&self) -> usize {
        self.nodes().map(|(_, _, _, e)| e.letter).max().unwrap_or(0)
    }

    /// Nodes `(component, row, column, entry)` in reading order.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize, usize, Entry)> + '_ {
        self.entries.iter().enumerate().flat_map(|(i, rows)| {
            rows.iter().enumerate().flat_map(move |(r, row)| {
                row.iter().enumerate().map(move |(s, &e)| (i, r, s, e))
            })
        })
    }

    pub fn render(&self, alg: &HeredityData) -> String {
        let comps: Vec<String> = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, rows)| {
                let rs: Vec<String> = rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|e| format!("{}^{}", e.letter, alg.color(self.flavor, i, e.color).name))
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                rs.join(" / ")
            })
            .collect();
        comps.join(" | ")
    }
}

fn color_parity(alg: &HeredityData, flavor: Flavor, i: usize, rank: usize) -> Parity {
    alg.color(flavor, i, rank).parity
}

/// Independent check of the row and column conditions.
pub fn is_standard(t: &ColoredTableau, alg: &HeredityData, n: usize) -> bool {
    for (i, rows) in t.entries.iter().enumerate() {
        let ncolors = alg.colors(t.flavor, i).len();
        if rows.len() != t.shape.component(i).length() {
            return false;
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != t.shape.component(i).part(r) {
                return false;
            }
            for (s, e) in row.iter().enumerate() {
                if e.letter < 1 || e.letter > n || e.color >= ncolors {
                    return false;
                }
                let p = color_parity(alg, t.flavor, i, e.color);
                if s > 0 {
                    let left = row[s - 1];
                    if left > *e || (left == *e && p == Parity::Odd) {
                        return false;
                    }
                }
                if r > 0 {
                    let up = rows[r - 1][s];
                    if up > *e || (up == *e && p == Parity::Even) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// All standard colored tableaux of the given shape with letters `≤ n`,
/// in lexicographic order of reading words.
pub fn enumerate_std_tableaux(
    shape: &Multipartition,
    flavor: Flavor,
    alg: &HeredityData,
    n: usize,
) -> Vec<ColoredTableau> {
    let mut per_comp: Vec<Vec<Vec<Vec<Entry>>>> = Vec::new();
    for (i, lam) in shape.components().iter().enumerate() {
        let parities: Vec<Parity> = alg.colors(flavor, i).iter().map(|c| c.parity).collect();
        let alphabet: Vec<Entry> = (1..=n)
            .flat_map(|l| (0..parities.len()).map(move |c| Entry { letter: l, color: c }))
            .collect();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<Entry>> = lam.parts().iter().map(|&len| Vec::with_capacity(len)).collect();
        fill(lam, &alphabet, &parities, 0, 0, &mut rows, &mut out);
        per_comp.push(out);
    }
    let mut acc: Vec<Vec<Vec<Vec<Entry>>>> = vec![Vec::new()];
    for opts in per_comp {
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |o| {
                    let mut p = prefix.clone();
                    p.push(o.clone());
                    p
                })
            })
            .collect();
    }
    acc.into_iter()
        .map(|entries| ColoredTableau { shape: shape.clone(), flavor, entries })
        .collect()
}

fn fill(
    lam: &Partition,
    alphabet: &[Entry],
    parities: &[Parity],
    r: usize,
    s: usize,
    rows: &mut Vec<Vec<Entry>>,
    out: &mut Vec<Vec<Vec<Entry>>>,
) {
    if r == lam.length() {
        out.push(rows.clone());
        return;
    }
    let (nr, ns) = if s + 1 == lam.part(r) { (r + 1, 0) } else { (r, s + 1) };
    for &e in alphabet {
        let p = parities[e.color];
        if s > 0 {
            let left = rows[r][s - 1];
            if left > e || (left == e && p == Parity::Odd) {
                continue;
            }
        }
        if r > 0 {
            let up = rows[r - 1][s];
            if up > e || (up == e && p == Parity::Even) {
                continue;
            }
        }
        rows[r].push(e);
        fill(lam, alphabet, parities, nr, ns, rows, out);
        rows[r].pop();
    }
}

/// The letter word and color word read along rows, components in order.
pub fn reading_word(t: &ColoredTableau) -> (Vec<usize>, Vec<ColorRef>) {
    t.nodes()
        .map(|(i, _, _, e)| (e.letter, ColorRef { component: i, rank: e.color }))
        .unzip()
}

/// The row index word `l^λ` (1-based rows) of the shape, read like the entries.
pub fn row_word(t: &ColoredTableau) -> Vec<usize> {
    t.nodes().map(|(_, r, _, _)| r + 1).collect()
}

/// Weight of a tableau: each entry `l^c` contributes `ε_l` in the slot of
/// the left idempotent of `c` (X-tableaux) or the right idempotent (Y-tableaux).
pub fn tableau_weight(t: &ColoredTableau, alg: &HeredityData) -> Result<Multicomposition, CombError> {
    let n = alg_width_hint(t);
    tableau_weight_at(t, alg, n)
}

fn alg_width_hint(t: &ColoredTableau) -> usize {
    t.max_letter().max(t.shape.max_length())
}

/// As [`tableau_weight`], padded to width `n`.
pub fn tableau_weight_at(t: &ColoredTableau, alg: &HeredityData, n: usize) -> Result<Multicomposition, CombError> {
    let mut w = Multicomposition::zero(alg.num_components(), n);
    for (i, _, _, e) in t.nodes() {
        let j = match t.flavor {
            Flavor::X => alg.x_left_idem(i, e.color),
            Flavor::Y => alg.y_right_idem(i, e.color),
        }
        .ok_or_else(|| CombError::NoIdempotent(alg.color(t.flavor, i, e.color).name.clone()))?;
        w.add_unit(j, e.letter - 1);
    }
    Ok(w)
}

/// A `c`-subset of `[n]`, sorted increasing, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PSet(Vec<usize>);

impl PSet {
    pub fn new(mut elems: Vec<usize>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        PSet(elems)
    }

    pub fn elems(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ + ε_P` on a width-`n` composition.
    pub fn add_to(&self, lambda: &Composition) -> Composition {
        let mut v = lambda.clone();
        for &p in &self.0 {
            v.add_unit(p - 1);
        }
        v
    }

    /// All `c`-subsets of `[n]` in lexicographic order.
    pub fn all(n: usize, c: usize) -> Vec<PSet> {
        fn rec(start: usize, n: usize, c: usize, cur: &mut Vec<usize>, out: &mut Vec<PSet>) {
            if cur.len() == c {
                out.push(PSet(cur.clone()));
                return;
            }
            for p in start..=n {
                cur.push(p);
                rec(p + 1, n, c, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(1, n, c, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for PSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        write_parts(f, &self.0)?;
        write!(f, "}}")
    }
}

impl Serialize for PSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// `Ω_λ`: the `c`-subsets `P` with `λ + ε_P` a partition, in lexicographic order.
pub fn omega_lambda(lambda: &Partition, c: usize, n: usize) -> Result<Vec<PSet>, CombError> {
    let d = lambda.size();
    if d + c > n {
        return Err(CombError::DegreeBound { d, c, n });
    }
    let lam = lambda.padded(n)?;
    Ok(PSet::all(n, c)
        .into_iter()
        .filter(|p| p.add_to(&lam).as_partition().is_some())
        .collect())
}

/// Orbits of the row stabilizer `Σ_λ` on `c`-subsets, keyed by their minimum.
pub fn orbit_decomposition(lambda: &Partition, c: usize, n: usize) -> Result<BTreeMap<PSet, Vec<PSet>>, CombError> {
    let d = lambda.size();
    if d + c > n {
        return Err(CombError::DegreeBound { d, c, n });
    }
    let lam = lambda.padded(n)?;
    // blocks of equal parts
    let mut block_of = vec![0usize; n];
    for r in 1..n {
        block_of[r] = if lam.parts()[r] == lam.parts()[r - 1] { block_of[r - 1] } else { block_of[r - 1] + 1 };
    }
    let nblocks = block_of[n.saturating_sub(1)] + 1;
    let signature = |p: &PSet| {
        let mut v = vec![0usize; nblocks];
        for &x in p.elems() {
            v[block_of[x - 1]] += 1;
        }
        v
    };
    let mut by_sig: BTreeMap<Vec<usize>, Vec<PSet>> = BTreeMap::new();
    for p in PSet::all(n, c) {
        by_sig.entry(signature(&p)).or_default().push(p);
    }
    Ok(by_sig
        .into_values()
        .map(|orbit| (orbit.iter().min().cloned().expect("orbits are nonempty"), orbit))
        .collect())
}
