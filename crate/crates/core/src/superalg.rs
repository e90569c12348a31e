//! The base superalgebra: heredity data, its axioms, and base standard modules.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::cli::format::{AlgebraFile, ColorEntry, ComponentEntry, ProductEntry};
use crate::combinatorics::{Flavor, Poset};
use crate::exactlin::{scalar, LinalgError, Scalar, SparseMatrix, SparseVector, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Option<Parity> {
        match b {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn add(self, other: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ other.bit()).unwrap()
    }

    /// `(-1)^{|a||b|}` as a boolean "negate".
    pub fn koszul(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

impl Serialize for Parity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.bit())
    }
}

impl<'de> Deserialize<'de> for Parity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let b = u8::deserialize(d)?;
        Parity::from_bit(b).ok_or_else(|| serde::de::Error::custom(format!("parity must be 0 or 1, got {b}")))
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Color {
    pub name: String,
    pub parity: Parity,
}

#[derive(Clone, Debug)]
pub struct Component {
    pub label: i64,
    pub x: Vec<Color>,
    pub y: Vec<Color>,
}

/// Basis element `x·y` with `x ∈ X(i)`, `y ∈ Y(i)` given by ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisElt {
    pub component: usize,
    pub x: usize,
    pub y: usize,
    pub parity: Parity,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("duplicate component label {0}")]
    DuplicateComponent(i64),
    #[error("unknown component label {0}")]
    UnknownComponent(i64),
    #[error("component {0}: X and Y must both start with the initial element e{0}")]
    MissingInitial(i64),
    #[error("component {0}: initial element must be even")]
    OddInitial(i64),
    #[error("duplicate color name {0} in {1}")]
    DuplicateColor(String, &'static str),
    #[error("poset covering pairs contain a cycle")]
    PosetCycle,
    #[error("unknown basis element [{0}, {1}]")]
    UnknownBasis(String, String),
    #[error("product of [{0}] and [{1}] is missing")]
    MissingProduct(String, String),
    #[error("product of [{0}] and [{1}] is listed twice")]
    DuplicateProduct(String, String),
    #[error("color {name}: declared leftIdem {declared} but the table gives {computed}")]
    LeftIdemMismatch { name: String, declared: i64, computed: String },
    #[error("element leaves the standard module: {0}")]
    NotInStandardModule(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub type AElement = SparseVector;

#[derive(Clone, Debug)]
pub struct HeredityData {
    name: String,
    components: Vec<Component>,
    poset: Poset,
    basis: Vec<BasisElt>,
    index: HashMap<(usize, usize, usize), usize>,
    table: Vec<Vec<Vec<(usize, i64)>>>,
    left_idem: Vec<Option<usize>>,
    right_idem: Vec<Option<usize>>,
    declared_left: HashMap<(Flavor, usize, usize), i64>,
    unit: Option<SparseVector>,
}

impl HeredityData {
    pub fn from_file(file: &AlgebraFile) -> Result<Self, AlgebraError> {
        let mut label_pos: HashMap<i64, usize> = HashMap::new();
        let mut components = Vec::new();
        let mut declared_left = HashMap::new();
        for (pos, c) in file.components.iter().enumerate() {
            if label_pos.insert(c.i, pos).is_some() {
                return Err(AlgebraError::DuplicateComponent(c.i));
            }
            let init = format!("e{}", c.i);
            for (list, flavor) in [(&c.x, Flavor::X), (&c.y, Flavor::Y)] {
                match list.first() {
                    Some(e) if e.name == init => {
                        if e.parity != Parity::Even {
                            return Err(AlgebraError::OddInitial(c.i));
                        }
                    }
                    _ => return Err(AlgebraError::MissingInitial(c.i)),
                }
                for (r, e) in list.iter().enumerate() {
                    if let Some(l) = e.left_idem {
                        declared_left.insert((flavor, pos, r), l);
                    }
                }
            }
            components.push(Component {
                label: c.i,
                x: c.x.iter().map(|e| Color { name: e.name.clone(), parity: e.parity }).collect(),
                y: c.y.iter().map(|e| Color { name: e.name.clone(), parity: e.parity }).collect(),
            });
        }
        for (list, what) in [(Flavor::X, "X"), (Flavor::Y, "Y")] {
            let mut seen = std::collections::HashSet::new();
            for c in &components {
                let colors = if list == Flavor::X { &c.x } else { &c.y };
                for col in colors {
                    if !seen.insert(col.name.clone()) {
                        return Err(AlgebraError::DuplicateColor(col.name.clone(), what));
                    }
                }
            }
        }
        let mut covers = Vec::new();
        for [a, b] in &file.poset {
            let pa = *label_pos.get(a).ok_or(AlgebraError::UnknownComponent(*a))?;
            let pb = *label_pos.get(b).ok_or(AlgebraError::UnknownComponent(*b))?;
            covers.push((pa, pb));
        }
        let poset = Poset::from_covers(components.len(), &covers).map_err(|_| AlgebraError::PosetCycle)?;

        let mut basis = Vec::new();
        let mut index = HashMap::new();
        let mut by_name: HashMap<(String, String), usize> = HashMap::new();
        for (i, c) in components.iter().enumerate() {
            for (xr, x) in c.x.iter().enumerate() {
                for (yr, y) in c.y.iter().enumerate() {
                    index.insert((i, xr, yr), basis.len());
                    by_name.insert((x.name.clone(), y.name.clone()), basis.len());
                    basis.push(BasisElt { component: i, x: xr, y: yr, parity: x.parity.add(y.parity) });
                }
            }
        }
        let lookup = |p: &[String; 2]| -> Result<usize, AlgebraError> {
            by_name
                .get(&(p[0].clone(), p[1].clone()))
                .copied()
                .ok_or_else(|| AlgebraError::UnknownBasis(p[0].clone(), p[1].clone()))
        };
        let nb = basis.len();
        let mut table: Vec<Vec<Option<Vec<(usize, i64)>>>> = vec![vec![None; nb]; nb];
        for ProductEntry { left, right, result } in &file.products {
            let a = lookup(left)?;
            let c = lookup(right)?;
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for (coef, pair) in result {
                *acc.entry(lookup(pair)?).or_insert(0) += coef;
            }
            if table[a][c].is_some() {
                return Err(AlgebraError::DuplicateProduct(left.join(","), right.join(",")));
            }
            table[a][c] = Some(acc.into_iter().filter(|(_, v)| *v != 0).collect());
        }
        let mut full = Vec::with_capacity(nb);
        for (a, row) in table.into_iter().enumerate() {
            let mut r = Vec::with_capacity(nb);
            for (c, entry) in row.into_iter().enumerate() {
                match entry {
                    Some(e) => r.push(e),
                    None => {
                        let name = |b: usize| {
                            let e = basis[b];
                            let comp = &components[e.component];
                            format!("{},{}", comp.x[e.x].name, comp.y[e.y].name)
                        };
                        return Err(AlgebraError::MissingProduct(name(a), name(c)));
                    }
                }
            }
            full.push(r);
        }
        let mut alg = HeredityData {
            name: file.name.clone(),
            components,
            poset,
            basis,
            index,
            table: full,
            left_idem: Vec::new(),
            right_idem: Vec::new(),
            declared_left,
            unit: None,
        };
        alg.left_idem = (0..nb).map(|b| alg.compute_idem(b, true)).collect();
        alg.right_idem = (0..nb).map(|b| alg.compute_idem(b, false)).collect();
        alg.unit = alg.solve_unit()?;
        for (&(flavor, i, r), &declared) in &alg.declared_left {
            let computed = match flavor {
                Flavor::X => alg.x_left_idem(i, r),
                Flavor::Y => alg.left_idem[alg.basis_index(i, 0, r)],
            };
            if computed.map(|j| alg.components[j].label) != Some(declared) {
                return Err(AlgebraError::LeftIdemMismatch {
                    name: alg.color(flavor, i, r).name.clone(),
                    declared,
                    computed: computed.map(|j| alg.components[j].label.to_string()).unwrap_or("none".into()),
                });
            }
        }
        Ok(alg)
    }

    /// Serializes back to the file format, products in basis order.
    pub fn to_file(&self) -> AlgebraFile {
        let pair = |b: usize| -> [String; 2] {
            let e = self.basis[b];
            let c = &self.components[e.component];
            [c.x[e.x].name.clone(), c.y[e.y].name.clone()]
        };
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let entry = |flavor: Flavor, r: usize, col: &Color| {
                    let computed = match flavor {
                        Flavor::X => self.x_left_idem(i, r),
                        Flavor::Y => self.left_idem[self.basis_index(i, 0, r)],
                    };
                    let left_idem = self
                        .declared_left
                        .get(&(flavor, i, r))
                        .copied()
                        .or_else(|| computed.map(|j| self.components[j].label));
                    ColorEntry { name: col.name.clone(), parity: col.parity, left_idem }
                };
                ComponentEntry {
                    i: c.label,
                    x: c.x.iter().enumerate().map(|(r, col)| entry(Flavor::X, r, col)).collect(),
                    y: c.y.iter().enumerate().map(|(r, col)| entry(Flavor::Y, r, col)).collect(),
                }
            })
            .collect();
        let mut products = Vec::new();
        for a in 0..self.basis.len() {
            for c in 0..self.basis.len() {
                products.push(ProductEntry {
                    left: pair(a),
                    right: pair(c),
                    result: self.table[a][c].iter().map(|&(b, k)| (k, pair(b))).collect(),
                });
            }
        }
        let poset = self
            .poset
            .covers()
            .into_iter()
            .map(|(a, b)| [self.components[a].label, self.components[b].label])
            .collect();
        AlgebraFile { name: self.name.clone(), poset, components, products }
    }

    fn compute_idem(&self, b: usize, left: bool) -> Option<usize> {
        let mut found = None;
        for j in 0..self.components.len() {
            let e = self.initial(j);
            let prod = if left { &self.table[e][b] } else { &self.table[b][e] };
            if prod.is_empty() {
                continue;
            }
            if prod.as_slice() == [(b, 1)] && found.is_none() {
                found = Some(j);
            } else {
                return None;
            }
        }
        found
    }

    fn solve_unit(&self) -> Result<Option<SparseVector>, AlgebraError> {
        let nb = self.basis.len();
        let rows = 2 * nb * nb;
        // column for unknown u_b: entries (c, k) of b·c and c·b
        let mut cols = Vec::with_capacity(nb);
        for b in 0..nb {
            let mut items = Vec::new();
            for c in 0..nb {
                for &(k, v) in &self.table[b][c] {
                    items.push((c * nb + k, scalar(v)));
                }
                for &(k, v) in &self.table[c][b] {
                    items.push((nb * nb + c * nb + k, scalar(v)));
                }
            }
            cols.push(SparseVector::from_entries(rows, items)?);
        }
        let mut rhs_items = Vec::new();
        for c in 0..nb {
            rhs_items.push((c * nb + c, Scalar::one()));
            rhs_items.push((nb * nb + c * nb + c, Scalar::one()));
        }
        let rhs = SparseVector::from_entries(rows, rhs_items)?;
        let mut span = Subspace::new_tracked(rows);
        let mut kept = Vec::new();
        for (b, col) in cols.iter().enumerate() {
            if span.insert(col)? {
                kept.push(b);
            }
        }
        Ok(span.member(&rhs)?.map(|coords| {
            SparseVector::from_entries(nb, coords.entries().iter().map(|(j, v)| (kept[*j], v.clone())))
                .expect("indices are basis positions")
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn label(&self, i: usize) -> i64 {
        self.components[i].label
    }

    pub fn position(&self, label: i64) -> Option<usize> {
        self.components.iter().position(|c| c.label == label)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn colors(&self, flavor: Flavor, i: usize) -> &[Color] {
        match flavor {
            Flavor::X => &self.components[i].x,
            Flavor::Y => &self.components[i].y,
        }
    }

    pub fn color(&self, flavor: Flavor, i: usize, rank: usize) -> &Color {
        &self.colors(flavor, i)[rank]
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElt] {
        &self.basis
    }

    pub fn basis_index(&self, i: usize, x: usize, y: usize) -> usize {
        self.index[&(i, x, y)]
    }

    pub fn initial(&self, i: usize) -> usize {
        self.basis_index(i, 0, 0)
    }

    pub fn parity(&self, b: usize) -> Parity {
        self.basis[b].parity
    }

    /// `b ∈ B_c`: both factors odd.
    pub fn in_bc(&self, b: usize) -> bool {
        let e = self.basis[b];
        let c = &self.components[e.component];
        c.x[e.x].parity.is_odd() && c.y[e.y].parity.is_odd()
    }

    /// `b ∈ B_a`: both factors even.
    pub fn in_ba(&self, b: usize) -> bool {
        let e = self.basis[b];
        let c = &self.components[e.component];
        !c.x[e.x].parity.is_odd() && !c.y[e.y].parity.is_odd()
    }

    pub fn product(&self, a: usize, c: usize) -> &[(usize, i64)] {
        &self.table[a][c]
    }

    pub fn basis_name(&self, b: usize) -> String {
        let e = self.basis[b];
        let c = &self.components[e.component];
        match (e.x, e.y) {
            (0, 0) | (_, 0) => c.x[e.x].name.clone(),
            (0, _) => c.y[e.y].name.clone(),
            _ => format!("{}{}", c.x[e.x].name, c.y[e.y].name),
        }
    }

    /// Unique `j` with `e_j b = b` and `e_k b = 0` otherwise.
    pub fn left_idem(&self, b: usize) -> Option<usize> {
        self.left_idem[b]
    }

    pub fn right_idem(&self, b: usize) -> Option<usize> {
        self.right_idem[b]
    }

    pub fn x_left_idem(&self, i: usize, rank: usize) -> Option<usize> {
        self.left_idem[self.basis_index(i, rank, 0)]
    }

    pub fn y_right_idem(&self, i: usize, rank: usize) -> Option<usize> {
        self.right_idem[self.basis_index(i, 0, rank)]
    }

    pub fn unit(&self) -> Option<&SparseVector> {
        self.unit.as_ref()
    }

    pub fn element(&self, b: usize) -> AElement {
        SparseVector::unit(self.dim(), b)
    }

    /// Parity of a homogeneous element, `None` for zero or mixed support.
    pub fn parity_of(&self, a: &AElement) -> Option<Parity> {
        let mut ps = a.entries().iter().map(|(b, _)| self.parity(*b));
        let first = ps.next()?;
        ps.all(|p| p == first).then_some(first)
    }

    pub fn multiply(&self, a: &AElement, c: &AElement) -> AElement {
        let mut items = Vec::new();
        for (i, x) in a.entries() {
            for (j, y) in c.entries() {
                for &(k, v) in &self.table[*i][*j] {
                    items.push((k, x * y * scalar(v)));
                }
            }
        }
        SparseVector::from_entries(self.dim(), items).expect("table indices are basis positions")
    }

    fn is_above(&self, j: usize, i: usize) -> bool {
        self.poset.lt(i, j)
    }

    /// The base standard module `Δ(i)` with basis `X(i)`.
    pub fn standard_module(&self, i: usize) -> BaseStandardModule {
        BaseStandardModule { component: i, parities: self.components[i].x.iter().map(|c| c.parity).collect() }
    }

    /// Coordinates of `a·x` on `X(i)` after discarding `A^{>i}`; `None` if something else remains.
    fn left_reduce(&self, i: usize, v: &AElement) -> Option<SparseVector> {
        let k = self.components[i].x.len();
        let mut items = Vec::new();
        for (b, c) in v.entries() {
            let e = self.basis[*b];
            if self.is_above(e.component, i) {
                continue;
            }
            if e.component == i && e.y == 0 {
                items.push((e.x, c.clone()));
            } else {
                return None;
            }
        }
        Some(SparseVector::from_entries(k, items).unwrap())
    }

    fn right_reduce(&self, i: usize, v: &AElement) -> Option<SparseVector> {
        let k = self.components[i].y.len();
        let mut items = Vec::new();
        for (b, c) in v.entries() {
            let e = self.basis[*b];
            if self.is_above(e.component, i) {
                continue;
            }
            if e.component == i && e.x == 0 {
                items.push((e.y, c.clone()));
            } else {
                return None;
            }
        }
        Some(SparseVector::from_entries(k, items).unwrap())
    }

    /// Checks the heredity axioms and lists every failure found.
    pub fn verify_axioms(&self) -> AxiomReport {
        let mut failures = Vec::new();
        let nb = self.dim();
        let name = |b: usize| self.basis_name(b);
        // (a): associativity, parity, unit
        for a in 0..nb {
            for c in 0..nb {
                let p = self.parity(a).add(self.parity(c));
                for &(k, _) in self.product(a, c) {
                    if self.parity(k) != p {
                        failures.push(AxiomFailure::new('a', format!("{}·{} is not homogeneous of parity {p}", name(a), name(c))));
                        break;
                    }
                }
            }
        }
        for a in 0..nb {
            let ea = self.element(a);
            for c in 0..nb {
                let ac = self.multiply(&ea, &self.element(c));
                for e in 0..nb {
                    let ee = self.element(e);
                    let lhs = self.multiply(&ac, &ee);
                    let rhs = self.multiply(&ea, &self.multiply(&self.element(c), &ee));
                    if lhs != rhs {
                        failures.push(AxiomFailure::new(
                            'a',
                            format!("({}·{})·{} ≠ {}·({}·{})", name(a), name(c), name(e), name(a), name(c), name(e)),
                        ));
                    }
                }
            }
        }
        if self.unit.is_none() {
            failures.push(AxiomFailure::new('a', "the table has no unit".to_string()));
        }
        // (b)
        for (i, comp) in self.components.iter().enumerate() {
            for xr in 0..comp.x.len() {
                let x = self.element(self.basis_index(i, xr, 0));
                for a in 0..nb {
                    let ax = self.multiply(&self.element(a), &x);
                    if self.left_reduce(i, &ax).is_none() {
                        failures.push(AxiomFailure::new(
                            'b',
                            format!("{}·{} is not in span X({}) modulo A^>{}", name(a), comp.x[xr].name, comp.label, comp.label),
                        ));
                    }
                }
            }
            for yr in 0..comp.y.len() {
                let y = self.element(self.basis_index(i, 0, yr));
                for a in 0..nb {
                    let ya = self.multiply(&y, &self.element(a));
                    if self.right_reduce(i, &ya).is_none() {
                        failures.push(AxiomFailure::new(
                            'b',
                            format!("{}·{} is not in span Y({}) modulo A^>{}", comp.y[yr].name, name(a), comp.label, comp.label),
                        ));
                    }
                }
            }
        }
        // (c)
        for (i, comp) in self.components.iter().enumerate() {
            let ei = self.element(self.initial(i));
            for xr in 0..comp.x.len() {
                let x = self.element(self.basis_index(i, xr, 0));
                if self.multiply(&x, &ei) != x {
                    failures.push(AxiomFailure::new('c', format!("{}·e{} ≠ {}", comp.x[xr].name, comp.label, comp.x[xr].name)));
                }
                let expect = if xr == 0 { x.clone() } else { SparseVector::zero(nb) };
                if self.multiply(&ei, &x) != expect {
                    failures.push(AxiomFailure::new('c', format!("e{}·{} ≠ δ·{}", comp.label, comp.x[xr].name, comp.x[xr].name)));
                }
                for j in 0..self.components.len() {
                    let p = self.multiply(&self.element(self.initial(j)), &x);
                    if !(p.is_zero() || p == x) {
                        failures.push(AxiomFailure::new('c', format!("e{}·{} is neither 0 nor {}", self.label(j), comp.x[xr].name, comp.x[xr].name)));
                    }
                }
            }
            for yr in 0..comp.y.len() {
                let y = self.element(self.basis_index(i, 0, yr));
                if self.multiply(&ei, &y) != y {
                    failures.push(AxiomFailure::new('c', format!("e{}·{} ≠ {}", comp.label, comp.y[yr].name, comp.y[yr].name)));
                }
                let expect = if yr == 0 { y.clone() } else { SparseVector::zero(nb) };
                if self.multiply(&y, &ei) != expect {
                    failures.push(AxiomFailure::new('c', format!("{}·e{} ≠ δ·{}", comp.y[yr].name, comp.label, comp.y[yr].name)));
                }
                for j in 0..self.components.len() {
                    let p = self.multiply(&y, &self.element(self.initial(j)));
                    if !(p.is_zero() || p == y) {
                        failures.push(AxiomFailure::new('c', format!("{}·e{} is neither 0 nor {}", comp.y[yr].name, self.label(j), comp.y[yr].name)));
                    }
                }
            }
        }
        AxiomReport { failures }
    }

    /// `B_a` spans a subalgebra containing `1_A`.
    pub fn is_conforming(&self) -> bool {
        let ba: Vec<usize> = (0..self.dim()).filter(|&b| self.in_ba(b)).collect();
        let inside = |v: &AElement| v.entries().iter().all(|(b, _)| self.in_ba(*b));
        for &a in &ba {
            for &c in &ba {
                if self.product(a, c).iter().any(|(k, _)| !self.in_ba(*k)) {
                    return false;
                }
            }
        }
        self.unit.as_ref().is_some_and(inside)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: char,
    pub detail: String,
}

impl AxiomFailure {
    fn new(axiom: char, detail: String) -> Self {
        AxiomFailure { axiom, detail }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self, axiom: char) -> bool {
        self.failures.iter().any(|f| f.axiom == axiom)
    }
}

/// `Δ(i) = A e_i / A^{>i} e_i` with basis `{v_x | x ∈ X(i)}`.
#[derive(Clone, Debug)]
pub struct BaseStandardModule {
    component: usize,
    parities: Vec<Parity>,
}

impl BaseStandardModule {
    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    /// Matrix of `a` on the basis `{v_x}`.
    pub fn action(&self, alg: &HeredityData, a: &AElement) -> Result<SparseMatrix, AlgebraError> {
        let i = self.component;
        let mut cols = Vec::new();
        for xr in 0..self.dim() {
            let x = alg.element(alg.basis_index(i, xr, 0));
            let ax = alg.multiply(a, &x);
            let col = alg
                .left_reduce(i, &ax)
                .ok_or_else(|| AlgebraError::NotInStandardModule(alg.color(Flavor::X, i, xr).name.clone()))?;
            cols.push(col);
        }
        Ok(SparseMatrix::from_columns(self.dim(), cols)?)
    }
}

/// Built-in heredity data used throughout tests and examples.
pub mod fixtures {
    use super::*;

    fn color(name: &str, parity: u8, left: i64) -> ColorEntry {
        ColorEntry { name: name.into(), parity: Parity::from_bit(parity).unwrap(), left_idem: Some(left) }
    }

    fn pair(x: &str, y: &str) -> [String; 2] {
        [x.to_string(), y.to_string()]
    }

    /// Builds a file from a list of basis pairs and a sparse product rule.
    fn file(
        name: &str,
        poset: Vec<[i64; 2]>,
        components: Vec<ComponentEntry>,
        basis: &[(&str, &str)],
        rule: impl Fn(usize, usize) -> Vec<(i64, usize)>,
    ) -> AlgebraFile {
        let mut products = Vec::new();
        for (a, (ax, ay)) in basis.iter().enumerate() {
            for (c, (cx, cy)) in basis.iter().enumerate() {
                products.push(ProductEntry {
                    left: pair(ax, ay),
                    right: pair(cx, cy),
                    result: rule(a, c).into_iter().map(|(k, b)| (k, pair(basis[b].0, basis[b].1))).collect(),
                });
            }
        }
        AlgebraFile { name: name.into(), poset, components, products }
    }

    pub fn trivial_file() -> AlgebraFile {
        file(
            "trivial",
            vec![],
            vec![ComponentEntry { i: 0, x: vec![color("e0", 0, 0)], y: vec![color("e0", 0, 0)] }],
            &[("e0", "e0")],
            |_, _| vec![(1, 0)],
        )
    }

    /// Upper-triangular superalgebra with basis `e1, x, e2`, `x` odd.
    pub fn super_ut_file() -> AlgebraFile {
        // basis order: e1, e2, x (=x·e2)
        let basis = [("e1", "e1"), ("e2", "e2"), ("x", "e2")];
        file(
            "superUT",
            vec![[1, 2]],
            vec![
                ComponentEntry { i: 1, x: vec![color("e1", 0, 1)], y: vec![color("e1", 0, 1)] },
                ComponentEntry { i: 2, x: vec![color("e2", 0, 2), color("x", 1, 1)], y: vec![color("e2", 0, 2)] },
            ],
            &basis,
            |a, c| match (a, c) {
                (0, 0) => vec![(1, 0)],
                (1, 1) => vec![(1, 1)],
                (0, 2) | (2, 1) => vec![(1, 2)],
                _ => vec![],
            },
        )
    }

    /// `M_{1|1}` with one component, `X = {E11, E21}`, `Y = {E11, E12}`.
    /// Not conforming and `E21` has no left idempotent; useful for negative tests.
    pub fn matrix_1_1_file() -> AlgebraFile {
        // matrix units: e0 = E11, b = E12, a = E21, ab = E22
        let basis = [("e0", "e0"), ("e0", "b"), ("a", "e0"), ("a", "b")];
        let unit = |k: usize| match k {
            0 => (1, 1),
            1 => (1, 2),
            2 => (2, 1),
            _ => (2, 2),
        };
        let of = |(r, s): (usize, usize)| match (r, s) {
            (1, 1) => 0,
            (1, 2) => 1,
            (2, 1) => 2,
            _ => 3,
        };
        file(
            "matrix11",
            vec![],
            vec![ComponentEntry {
                i: 0,
                x: vec![color("e0", 0, 0), ColorEntry { name: "a".into(), parity: Parity::Odd, left_idem: None }],
                y: vec![color("e0", 0, 0), color("b", 1, 0)],
            }],
            &basis,
            move |a, c| {
                let (p, q) = unit(a);
                let (u, v) = unit(c);
                if q == u {
                    vec![(1, of((p, v)))]
                } else {
                    vec![]
                }
            },
        )
    }

    /// Two-vertex quiver superalgebra: odd arrows `a: 1→0`, `b: 0→1`,
    /// loop `ab` at 0, `ba = 0`.
    pub fn quiver2_file() -> AlgebraFile {
        let basis = [("e0", "e0"), ("e1", "e1"), ("e1", "b"), ("a", "e1"), ("a", "b")];
        // paths as (source, target, name); products concatenate when they meet
        let nonzero = [
            ("e0", "e0", "e0"),
            ("e0", "a", "a"),
            ("e0", "ab", "ab"),
            ("e1", "e1", "e1"),
            ("e1", "b", "b"),
            ("a", "e1", "a"),
            ("a", "b", "ab"),
            ("b", "e0", "b"),
            ("ab", "e0", "ab"),
        ];
        let short = |k: usize| -> &'static str { ["e0", "e1", "b", "a", "ab"][k] };
        file(
            "quiver2",
            vec![[0, 1]],
            vec![
                ComponentEntry { i: 0, x: vec![color("e0", 0, 0)], y: vec![color("e0", 0, 0)] },
                ComponentEntry { i: 1, x: vec![color("e1", 0, 1), color("a", 1, 0)], y: vec![color("e1", 0, 1), color("b", 1, 1)] },
            ],
            &basis,
            move |a, c| {
                nonzero
                    .iter()
                    .filter(|(l, r, _)| *l == short(a) && *r == short(c))
                    .map(|(_, _, p)| (1, (0..5).find(|&k| short(k) == *p).unwrap()))
                    .collect()
            },
        )
    }

    pub fn trivial() -> HeredityData {
        HeredityData::from_file(&trivial_file()).expect("fixture is well formed")
    }

    pub fn super_ut() -> HeredityData {
        HeredityData::from_file(&super_ut_file()).expect("fixture is well formed")
    }

    pub fn matrix_1_1() -> HeredityData {
        HeredityData::from_file(&matrix_1_1_file()).expect("fixture is well formed")
    }

    pub fn quiver2() -> HeredityData {
        HeredityData::from_file(&quiver2_file()).expect("fixture is well formed")
    }
}
