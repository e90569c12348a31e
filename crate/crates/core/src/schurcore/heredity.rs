//! Heredity data of `T(n,d)`: `X_S = η^{x^S}_{l^S, l^λ}` and `Y_T = η^{y^T}_{l^λ, l^T}`.

use std::sync::Arc;

use crate::combinatorics::{
    enumerate_multipartitions, enumerate_std_tableaux, order_leq_i, row_word, ColoredTableau, Flavor, Multipartition,
};
use crate::exactlin::{Subspace, SparseVector};
use crate::superalg::{AxiomFailure, AxiomReport};

use super::{SchurAlgebra, SchurError, TElement};

#[derive(Clone, Debug)]
pub struct TableauElement {
    pub tableau: ColoredTableau,
    pub element: TElement,
}

/// `Λ_+^I(n,d)` in descending order together with `X(λ)` and `Y(λ)` for each shape.
#[derive(Clone, Debug)]
pub struct HeredityBasis {
    pub d: usize,
    pub shapes: Vec<Multipartition>,
    pub x: Vec<Vec<TableauElement>>,
    pub y: Vec<Vec<TableauElement>>,
}

impl HeredityBasis {
    pub fn shape_index(&self, lambda: &Multipartition) -> Option<usize> {
        self.shapes.iter().position(|s| s == lambda)
    }

    pub fn x_count(&self) -> usize {
        self.x.iter().map(Vec::len).sum()
    }

    pub fn y_count(&self) -> usize {
        self.y.iter().map(Vec::len).sum()
    }
}

impl SchurAlgebra {
    /// `X_S` or `Y_S` according to the flavor of the tableau.
    pub fn tableau_element(&self, t: &ColoredTableau) -> Result<TElement, SchurError> {
        let alg = &self.alg;
        let rows = row_word(t);
        let mut b = Vec::new();
        let mut letters = Vec::new();
        for (i, _, _, e) in t.nodes() {
            b.push(match t.flavor() {
                Flavor::X => alg.basis_index(i, e.color, 0),
                Flavor::Y => alg.basis_index(i, 0, e.color),
            });
            letters.push(e.letter);
        }
        match t.flavor() {
            Flavor::X => self.eta(&b, &letters, &rows),
            Flavor::Y => self.eta(&b, &rows, &letters),
        }
    }

    /// The idempotent `η_λ` of a multipartition with at most `n` parts per component.
    pub fn shape_idempotent(&self, lambda: &Multipartition) -> Result<TElement, SchurError> {
        self.eta_idempotent(&lambda.padded(self.n)?)
    }

    pub fn heredity_elements(&self, d: usize) -> Result<HeredityBasis, SchurError> {
        if d > self.n {
            return Err(SchurError::DegreeBound { d, n: self.n });
        }
        let shapes = enumerate_multipartitions(self.n, d, self.alg.poset());
        let mut x = Vec::new();
        let mut y = Vec::new();
        for lam in &shapes {
            for (flavor, out) in [(Flavor::X, &mut x), (Flavor::Y, &mut y)] {
                let elems = enumerate_std_tableaux(lam, flavor, &self.alg, self.n)
                    .into_iter()
                    .map(|t| Ok(TableauElement { element: self.tableau_element(&t)?, tableau: t }))
                    .collect::<Result<Vec<_>, SchurError>>()?;
                out.push(elems);
            }
        }
        Ok(HeredityBasis { d, shapes, x, y })
    }

    /// Memoized [`Self::heredity_elements`].
    pub fn heredity_basis(&self, d: usize) -> Result<Arc<HeredityBasis>, SchurError> {
        if let Some(h) = self.heredity.lock().unwrap().get(&d) {
            return Ok(h.clone());
        }
        let h = Arc::new(self.heredity_elements(d)?);
        self.heredity.lock().unwrap().insert(d, h.clone());
        Ok(h)
    }

    /// Memoized [`Self::upper_ideal`] for the shared basis of degree `d`.
    pub fn upper_ideal_of(&self, d: usize, k: usize) -> Result<Arc<Subspace>, SchurError> {
        if let Some(s) = self.ideals.lock().unwrap().get(&(d, k)) {
            return Ok(s.clone());
        }
        let hb = self.heredity_basis(d)?;
        let s = Arc::new(self.upper_ideal(&hb, k)?);
        self.ideals.lock().unwrap().insert((d, k), s.clone());
        Ok(s)
    }

    /// `T^{>λ}` for the shape at position `k`: the span of `X_S Y_U` over shapes `μ >_I λ`.
    pub fn upper_ideal(&self, hb: &HeredityBasis, k: usize) -> Result<Subspace, SchurError> {
        let lam = &hb.shapes[k];
        let mut vecs = Vec::new();
        for (m, mu) in hb.shapes.iter().enumerate() {
            if m == k || !order_leq_i(self.alg.poset(), lam, mu)? {
                continue;
            }
            for xs in &hb.x[m] {
                for yu in &hb.y[m] {
                    vecs.push(self.to_vector(&self.multiply(&xs.element, &yu.element)?)?);
                }
            }
        }
        Ok(Subspace::span(self.dim(hb.d), &vecs).expect("vectors share the ambient dimension"))
    }

    /// Checks the axioms of heredity data for `T(n,d)` with the data of [`Self::heredity_elements`].
    pub fn verify_heredity(&self, d: usize) -> Result<AxiomReport, SchurError> {
        let hb = self.heredity_elements(d)?;
        let dim = self.dim(d);
        let mut report = AxiomReport::default();
        let mut fail = |axiom: char, detail: String| report.failures.push(AxiomFailure { axiom, detail });
        let render = |t: &ColoredTableau| t.render(&self.alg);

        // (a) the products X_S Y_U form a basis
        let mut all = Vec::new();
        for k in 0..hb.shapes.len() {
            for xs in &hb.x[k] {
                for yu in &hb.y[k] {
                    all.push(self.to_vector(&self.multiply(&xs.element, &yu.element)?)?);
                }
            }
        }
        let span = Subspace::span(dim, &all).expect("vectors share the ambient dimension");
        if all.len() != dim || span.rank() != dim {
            fail('a', format!("{} products of rank {} in dimension {dim}", all.len(), span.rank()));
        }

        let basis: Vec<TElement> = self.enumerate_basis(d).into_iter().map(TElement::basis).collect();
        let idems: Vec<TElement> = hb.shapes.iter().map(|s| self.shape_idempotent(s)).collect::<Result<_, _>>()?;
        for (k, lam) in hb.shapes.iter().enumerate() {
            let ideal = self.upper_ideal(&hb, k)?;
            // (b) a X_S ∈ span X(λ) + T^{>λ} and Y_U a ∈ span Y(λ) + T^{>λ}
            for (flavor, list) in [(Flavor::X, &hb.x[k]), (Flavor::Y, &hb.y[k])] {
                let mut target = ideal.clone();
                for e in list {
                    target.insert(&self.to_vector(&e.element)?).expect("dimensions agree");
                }
                for e in list {
                    for a in &basis {
                        let p = match flavor {
                            Flavor::X => self.multiply(a, &e.element)?,
                            Flavor::Y => self.multiply(&e.element, a)?,
                        };
                        if !target.contains(&self.to_vector(&p)?).expect("dimensions agree") {
                            fail('b', format!("{} times {} leaves the span for {lam}", a.render(&self.alg), render(&e.tableau)));
                        }
                    }
                }
            }
            // (c) idempotent identities
            let eta = &idems[k];
            for xs in &hb.x[k] {
                let x = &xs.element;
                if xs.tableau.is_initial() && x != eta {
                    fail('c', format!("X of the initial {lam}-tableau is not η_λ"));
                }
                if &self.multiply(x, eta)? != x {
                    fail('c', format!("X_S η_λ ≠ X_S for {}", render(&xs.tableau)));
                }
                let left = self.multiply(eta, x)?;
                let expect = if xs.tableau.is_initial() { x.clone() } else { TElement::zero(d) };
                if left != expect {
                    fail('c', format!("η_λ X_S ≠ δ X_S for {}", render(&xs.tableau)));
                }
                for mu in &idems {
                    let p = self.multiply(mu, x)?;
                    if !p.is_zero() && &p != x {
                        fail('c', format!("η_μ X_S ∉ {{X_S, 0}} for {}", render(&xs.tableau)));
                    }
                }
            }
            for yu in &hb.y[k] {
                let y = &yu.element;
                if yu.tableau.is_initial() && y != eta {
                    fail('c', format!("Y of the initial {lam}-tableau is not η_λ"));
                }
                if &self.multiply(eta, y)? != y {
                    fail('c', format!("η_λ Y_U ≠ Y_U for {}", render(&yu.tableau)));
                }
                let right = self.multiply(y, eta)?;
                let expect = if yu.tableau.is_initial() { y.clone() } else { TElement::zero(d) };
                if right != expect {
                    fail('c', format!("Y_U η_λ ≠ δ Y_U for {}", render(&yu.tableau)));
                }
                for mu in &idems {
                    let p = self.multiply(y, mu)?;
                    if !p.is_zero() && &p != y {
                        fail('c', format!("Y_U η_μ ∉ {{Y_U, 0}} for {}", render(&yu.tableau)));
                    }
                }
            }
        }
        Ok(report)
    }

    /// Coordinates of an element of `T(n,d)` in the basis of the ambient space.
    pub fn vectors(&self, elems: &[TElement]) -> Result<Vec<SparseVector>, SchurError> {
        elems.iter().map(|e| self.to_vector(e)).collect()
    }
}
