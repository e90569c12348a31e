//! Modules over `T(n,d)`: standard modules as quotients of `T(n,d)η_λ`, tensor
//! products through the coproduct, truncations, formal characters, and the
//! one-color filtration of `Δ(λ) ⊗ Δ(ω_c)`.

mod filtration;
mod multiplicity;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::combinatorics::{
    enumerate_std_tableaux, tableau_weight_at, ColoredTableau, CombError, Composition, Flavor, Multicomposition,
    Multipartition,
};
use crate::exactlin::{LinalgError, Quotient, SparseMatrix, SparseVector, Subspace};
use crate::schurcore::{triple_parity, OrbitTriple, SchurAlgebra, SchurError, TElement};
use crate::superalg::Parity;
use crate::symfunc::{character_pipeline, MultiSymPoly, SymError};

pub use filtration::{build_filtration, truncated_tensor_filtration, FiltrationReport, FiltrationStep};
pub use multiplicity::{
    costandard_character, decompose_character, verify_multiplicities, MultiplicityReport,
};

/// `ch V = Σ_μ (dim η_μ V) z^μ`.
pub type CharacterVector = MultiSymPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModError {
    #[error(transparent)]
    Schur(#[from] SchurError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Comb(#[from] CombError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error("{0} is not in Λ_+^I({1},{2})")]
    NotDominant(String, usize, usize),
    #[error("the action leaves the module: {0}")]
    LeavesModule(String),
    #[error("not a standard-positive character: {0}")]
    NotStandardPositive(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("element of degree {0} acting on a module of degree {1}")]
    Degree(usize, usize),
    #[error("requires N ≥ d (N={big}, d={d})")]
    TruncationBound { big: usize, d: usize },
}

enum Kind {
    Standard {
        lambda: Multipartition,
        tableaux: Vec<ColoredTableau>,
        reps: Vec<TElement>,
        vectors: Vec<SparseVector>,
        quotient: Quotient,
    },
    Tensor(ModuleRep, ModuleRep),
    Compressed {
        parent: ModuleRep,
        basis: Vec<SparseVector>,
        span: Subspace,
    },
}

struct Inner {
    schur: Arc<SchurAlgebra>,
    degree: usize,
    parities: Vec<Parity>,
    weights: Vec<Multicomposition>,
    labels: Vec<String>,
    kind: Kind,
    columns: Mutex<HashMap<(OrbitTriple, usize), Arc<SparseVector>>>,
}

/// A finite-dimensional `T(n,d)`-supermodule with a homogeneous weight basis.
#[derive(Clone)]
pub struct ModuleRep(Arc<Inner>);

impl std::fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ModuleRep")
            .field("n", &self.n())
            .field("degree", &self.degree())
            .field("dim", &self.dim())
            .finish()
    }
}

fn add_weights(a: &Multicomposition, b: &Multicomposition) -> Multicomposition {
    Multicomposition::new(
        a.components()
            .iter()
            .zip(b.components())
            .map(|(x, y)| Composition::new(x.parts().iter().zip(y.parts()).map(|(u, v)| u + v).collect()))
            .collect(),
    )
}

impl ModuleRep {
    fn build(schur: Arc<SchurAlgebra>, degree: usize, parities: Vec<Parity>, weights: Vec<Multicomposition>, labels: Vec<String>, kind: Kind) -> Self {
        ModuleRep(Arc::new(Inner { schur, degree, parities, weights, labels, kind, columns: Mutex::new(HashMap::new()) }))
    }

    pub fn schur(&self) -> &Arc<SchurAlgebra> {
        &self.0.schur
    }

    pub fn n(&self) -> usize {
        self.0.schur.n()
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn dim(&self) -> usize {
        self.0.parities.len()
    }

    pub fn parity(&self, k: usize) -> Parity {
        self.0.parities[k]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.0.parities
    }

    pub fn weight(&self, k: usize) -> &Multicomposition {
        &self.0.weights[k]
    }

    pub fn weights(&self) -> &[Multicomposition] {
        &self.0.weights
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    /// Highest weight of a standard module.
    pub fn lambda(&self) -> Option<&Multipartition> {
        match &self.0.kind {
            Kind::Standard { lambda, .. } => Some(lambda),
            _ => None,
        }
    }

    /// The X-tableaux indexing the basis of a standard module.
    pub fn tableaux(&self) -> Option<&[ColoredTableau]> {
        match &self.0.kind {
            Kind::Standard { tableaux, .. } => Some(tableaux),
            _ => None,
        }
    }

    /// Representatives `X_T η_λ ∈ T(n,d)` of the basis of a standard module.
    pub fn representatives(&self) -> Option<&[TElement]> {
        match &self.0.kind {
            Kind::Standard { reps, .. } => Some(reps),
            _ => None,
        }
    }

    /// Dimension of the space the basis vectors live in.
    pub fn ambient_dim(&self) -> usize {
        match &self.0.kind {
            Kind::Standard { vectors, .. } => vectors.first().map_or(self.0.schur.dim(self.0.degree), |v| v.dim()),
            Kind::Tensor(..) => self.dim(),
            Kind::Compressed { parent, .. } => parent.dim(),
        }
    }

    /// Basis vectors in the ambient space: `T(n,d)` for standard modules, the
    /// parent module for compressions, unit vectors for tensor products.
    pub fn basis_vectors(&self) -> Vec<SparseVector> {
        match &self.0.kind {
            Kind::Standard { vectors, .. } => vectors.clone(),
            Kind::Tensor(..) => (0..self.dim()).map(|k| SparseVector::unit(self.dim(), k)).collect(),
            Kind::Compressed { basis, .. } => basis.clone(),
        }
    }

    /// Index of the basis vector of the initial tableau in a standard module.
    pub fn highest_weight_index(&self) -> Option<usize> {
        self.tableaux()?.iter().position(|t| t.is_initial())
    }

    /// `η_t v_k` for a basis triple `t`, cached.
    pub fn apply_basis(&self, t: &OrbitTriple, k: usize) -> Result<Arc<SparseVector>, ModError> {
        if t.degree() != self.degree() {
            return Err(ModError::Degree(t.degree(), self.degree()));
        }
        let key = (t.clone(), k);
        if let Some(v) = self.0.columns.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = Arc::new(self.compute_column(t, k)?);
        self.0.columns.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }

    fn compute_column(&self, t: &OrbitTriple, k: usize) -> Result<SparseVector, ModError> {
        let schur = &self.0.schur;
        match &self.0.kind {
            Kind::Standard { reps, quotient, .. } => {
                let p = schur.multiply(&TElement::basis(t.clone()), &reps[k])?;
                let v = schur.to_vector(&p)?;
                quotient
                    .coords(&v)?
                    .ok_or_else(|| ModError::LeavesModule(format!("{} on {}", t.render(schur.heredity_data()), self.0.labels[k])))
            }
            Kind::Tensor(left, right) => {
                let q = right.dim();
                let (i, j) = (k / q, k % q);
                let mut out = SparseVector::zero(self.dim());
                for (t1, t2, c) in schur.basis_coproduct(t).iter() {
                    if t1.degree() != left.degree() {
                        continue;
                    }
                    let a = left.apply_basis(t1, i)?;
                    if a.is_zero() {
                        continue;
                    }
                    let b = right.apply_basis(t2, j)?;
                    if b.is_zero() {
                        continue;
                    }
                    // (ξ′⊗ξ″)(v⊗w) = (−1)^{|ξ″||v|} ξ′v ⊗ ξ″w
                    let neg = triple_parity(schur.heredity_data(), t2).is_odd() && left.parity(i).is_odd();
                    let coef = if neg { -c.clone() } else { c.clone() };
                    out.add_scaled(&coef, &a.kron(&b));
                }
                Ok(out)
            }
            Kind::Compressed { parent, basis, span } => {
                let w = parent.apply_triple(t, &basis[k])?;
                span.member(&w)?
                    .ok_or_else(|| ModError::LeavesModule(format!("{} leaves the compressed module", t.render(schur.heredity_data()))))
            }
        }
    }

    /// `η_t v` for a basis triple and an arbitrary vector.
    pub fn apply_triple(&self, t: &OrbitTriple, v: &SparseVector) -> Result<SparseVector, ModError> {
        let mut out = SparseVector::zero(self.dim());
        for (k, c) in v.entries() {
            out.add_scaled(c, &*self.apply_basis(t, *k)?);
        }
        Ok(out)
    }

    pub fn apply(&self, u: &TElement, v: &SparseVector) -> Result<SparseVector, ModError> {
        if u.degree() != self.degree() {
            return Err(ModError::Degree(u.degree(), self.degree()));
        }
        let mut out = SparseVector::zero(self.dim());
        for (t, c) in u.terms() {
            out.add_scaled(c, &self.apply_triple(t, v)?);
        }
        Ok(out)
    }

    /// The matrix of `u` on the basis.
    pub fn action_matrix(&self, u: &TElement) -> Result<SparseMatrix, ModError> {
        let cols = (0..self.dim())
            .map(|k| self.apply(u, &SparseVector::unit(self.dim(), k)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SparseMatrix::from_columns(self.dim(), cols)?)
    }

    /// `Σ_μ rank(η_μ) z^μ`, from the action of the weight idempotents.
    pub fn character(&self) -> Result<CharacterVector, ModError> {
        let schur = &self.0.schur;
        let l = schur.heredity_data().num_components();
        let mut ch = MultiSymPoly::zero(l, self.n());
        if self.dim() == 0 {
            return Ok(ch);
        }
        for mu in Multicomposition::all(l, self.n(), self.degree()) {
            let e = schur.eta_idempotent(&mu)?;
            let r = self.action_matrix(&e)?.rank();
            if r > 0 {
                ch.add_term(mu, r as i64);
            }
        }
        Ok(ch)
    }

    /// `Σ_k z^{wt(v_k)}` from the recorded basis weights.
    pub fn weight_character(&self) -> CharacterVector {
        let l = self.0.schur.heredity_data().num_components();
        MultiSymPoly::from_terms(l, self.n(), self.0.weights.iter().map(|w| (w.clone(), 1)))
    }
}

/// `Δ(λ) = T(n,d)η_λ / T^{>λ}η_λ` with basis the classes of `X_T η_λ`, `T ∈ Std^X(λ)`.
pub fn standard_module(schur: &Arc<SchurAlgebra>, lambda: &Multipartition) -> Result<ModuleRep, ModError> {
    let n = schur.n();
    let d = lambda.size();
    let hb = schur.heredity_basis(d)?;
    let k = hb
        .shape_index(lambda)
        .ok_or_else(|| ModError::NotDominant(lambda.to_string(), n, d))?;
    let ideal = schur.upper_ideal_of(d, k)?;
    let eta = schur.shape_idempotent(lambda)?;
    let alg = schur.heredity_data();
    let mut tableaux = Vec::new();
    let mut reps = Vec::new();
    let mut parities = Vec::new();
    let mut weights = Vec::new();
    let mut labels = Vec::new();
    for xs in &hb.x[k] {
        let rep = schur.multiply(&xs.element, &eta)?;
        parities.push(xs.element.parity(alg).unwrap_or(Parity::Even));
        weights.push(tableau_weight_at(&xs.tableau, alg, n)?);
        labels.push(xs.tableau.render(alg));
        tableaux.push(xs.tableau.clone());
        reps.push(rep);
    }
    let vectors = schur.vectors(&reps)?;
    let quotient = Quotient::new((*ideal).clone(), &vectors)?;
    Ok(ModuleRep::build(
        schur.clone(),
        d,
        parities,
        weights,
        labels,
        Kind::Standard { lambda: lambda.clone(), tableaux, reps, vectors, quotient },
    ))
}

fn same_algebra(a: &SchurAlgebra, b: &SchurAlgebra) -> bool {
    a.n() == b.n() && Arc::ptr_eq(&a.heredity_arc(), &b.heredity_arc())
}

/// `V ⊗ W` over `T(n, d_1 + d_2)` through the coproduct; basis `v_i ⊗ w_j` at index `i·dim W + j`.
pub fn tensor(v: &ModuleRep, w: &ModuleRep) -> Result<ModuleRep, ModError> {
    if !same_algebra(v.schur(), w.schur()) {
        return Err(ModError::AlgebraMismatch);
    }
    let mut parities = Vec::new();
    let mut weights = Vec::new();
    let mut labels = Vec::new();
    for i in 0..v.dim() {
        for j in 0..w.dim() {
            parities.push(v.parity(i).add(w.parity(j)));
            weights.push(add_weights(v.weight(i), w.weight(j)));
            labels.push(format!("({}) ⊗ ({})", v.labels()[i], w.labels()[j]));
        }
    }
    Ok(ModuleRep::build(
        v.schur().clone(),
        v.degree() + w.degree(),
        parities,
        weights,
        labels,
        Kind::Tensor(v.clone(), w.clone()),
    ))
}

/// `η^N_m(d) V` as a module over the width-`m` algebra `small`.
pub fn compress(parent: &ModuleRep, small: &Arc<SchurAlgebra>) -> Result<ModuleRep, ModError> {
    let big = parent.schur();
    if !Arc::ptr_eq(&big.heredity_arc(), &small.heredity_arc()) {
        return Err(ModError::AlgebraMismatch);
    }
    let m = small.n();
    let d = parent.degree();
    let e = big.truncation_idempotent(m, d)?;
    let mut span = Subspace::new_tracked(parent.dim());
    let mut basis = Vec::new();
    let mut parities = Vec::new();
    let mut weights = Vec::new();
    let mut labels = Vec::new();
    for k in 0..parent.dim() {
        let col = parent.apply(&e, &SparseVector::unit(parent.dim(), k))?;
        if col.is_zero() || !span.insert(&col)? {
            continue;
        }
        let wt = parent.weight(k);
        if wt.components().iter().any(|c| c.parts().iter().skip(m).any(|&x| x > 0)) {
            return Err(ModError::LeavesModule(format!("weight {wt} survives truncation to width {m}")));
        }
        basis.push(col);
        parities.push(parent.parity(k));
        weights.push(wt.truncated(m));
        labels.push(parent.labels()[k].clone());
    }
    Ok(ModuleRep::build(
        small.clone(),
        d,
        parities,
        weights,
        labels,
        Kind::Compressed { parent: parent.clone(), basis, span },
    ))
}

/// `Δ_m(λ) = η^N_m(d) Δ_N(λ)`, with `big` of width `N ≥ d` and `small` of width `m`.
pub fn truncated_standard(
    big: &Arc<SchurAlgebra>,
    small: &Arc<SchurAlgebra>,
    lambda: &Multipartition,
) -> Result<ModuleRep, ModError> {
    let d = lambda.size();
    if big.n() < d {
        return Err(ModError::TruncationBound { big: big.n(), d });
    }
    if small.n() > big.n() {
        return Err(SchurError::WidthBound { small: small.n(), big: big.n() }.into());
    }
    compress(&standard_module(big, lambda)?, small)
}

/// `Σ_{T ∈ Std^X(λ)} z^{α(T)}`.
pub fn tableau_character(schur: &SchurAlgebra, lambda: &Multipartition) -> Result<CharacterVector, ModError> {
    let alg = schur.heredity_data();
    let n = schur.n();
    let mut ch = MultiSymPoly::zero(alg.num_components(), n);
    for t in enumerate_std_tableaux(lambda, Flavor::X, alg, n) {
        ch.add_term(tableau_weight_at(&t, alg, n)?, 1);
    }
    Ok(ch)
}

/// `∏_i ch Δ(ι_i(λ^(i)))` with each factor from the symmetric-function pipeline.
pub fn pipeline_character(schur: &SchurAlgebra, lambda: &Multipartition) -> Result<CharacterVector, ModError> {
    let alg = schur.heredity_data();
    let n = schur.n();
    let mut ch = MultiSymPoly::one(alg.num_components(), n);
    for (i, part) in lambda.components().iter().enumerate() {
        if !part.is_empty() {
            ch = ch.mul(&character_pipeline(part, i, alg, n)?);
        }
    }
    Ok(ch)
}

/// Dimension of `Δ(λ)` from the tableau count.
pub fn standard_dim(schur: &SchurAlgebra, lambda: &Multipartition) -> usize {
    enumerate_std_tableaux(lambda, Flavor::X, schur.heredity_data(), schur.n()).len()
}
