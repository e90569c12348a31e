//! The chain `0 = M_0 ⊆ M_1 ⊆ ⋯ ⊆ M_t = Δ(λ) ⊗ Δ(ω_c)` with
//! `M_r = T(n,d+c)⟨v_λ ⊗ w_{P_s} | s ≤ r⟩`, and its truncations.

use std::sync::Arc;

use crate::combinatorics::{
    enumerate_std_tableaux, omega_lambda, CombError, Flavor, Multipartition, Partition, PSet,
};
use crate::exactlin::{SparseVector, Subspace};
use crate::schurcore::{SchurAlgebra, SchurError};
use crate::superalg::Parity;

use super::{standard_module, tensor, truncated_standard, ModError, ModuleRep};

#[derive(Clone, Debug)]
pub struct FiltrationStep {
    pub pset: PSet,
    /// `ι_i(λ + ε_P)`.
    pub factor: Multipartition,
    pub generator: SparseVector,
    pub parity: Parity,
    /// `dim M_r`.
    pub dim: usize,
    pub quotient_dim: usize,
    /// `dim Δ(factor)` from the tableau count.
    pub expected_dim: usize,
    /// `η_ν g − g ∈ M_{r−1}`.
    pub weight_ok: bool,
    /// `y g ∈ M_{r−1}` for every Y-element other than `η_ν`.
    pub y_annihilated: bool,
    /// The factor vanishes after truncation.
    pub skipped: bool,
}

#[derive(Clone, Debug)]
pub struct FiltrationReport {
    pub lambda: Partition,
    pub c: usize,
    pub i: usize,
    pub n: usize,
    /// Width of the algebra the chain was built over, when truncated.
    pub truncated_from: Option<usize>,
    pub tensor_dim: usize,
    pub steps: Vec<FiltrationStep>,
    pub chain: Vec<Subspace>,
    pub generation: bool,
    pub y_annihilation: bool,
    pub dimension_sum: bool,
}

impl FiltrationReport {
    pub fn certified(&self) -> bool {
        self.generation && self.y_annihilation && self.dimension_sum
    }

    /// Factors that survive, in chain order.
    pub fn factors(&self) -> Vec<Multipartition> {
        self.steps.iter().filter(|s| !s.skipped).map(|s| s.factor.clone()).collect()
    }
}

fn homogeneous_parity(m: &ModuleRep, v: &SparseVector) -> Option<Parity> {
    let mut it = v.entries().iter().map(|(k, _)| m.parity(*k));
    let p = it.next()?;
    it.all(|q| q == p).then_some(p)
}

pub(super) struct Built {
    pub report: FiltrationReport,
    pub module: ModuleRep,
}

pub(super) fn build(schur: &Arc<SchurAlgebra>, lambda: &Partition, c: usize, i: usize) -> Result<Built, ModError> {
    let n = schur.n();
    let d = lambda.size();
    if d + c > n {
        return Err(CombError::DegreeBound { d, c, n }.into());
    }
    let alg = schur.heredity_data();
    let l = alg.num_components();
    let lam = Multipartition::iota(l, i, lambda);
    let mu = Multipartition::iota(l, i, &Partition::column(c));
    let v = standard_module(schur, &lam)?;
    let w = standard_module(schur, &mu)?;
    let m = tensor(&v, &w)?;
    let dim = m.dim();

    let vl = v.highest_weight_index().expect("standard modules have an initial tableau");
    let v_lambda = SparseVector::unit(v.dim(), vl);
    let w_mu = SparseVector::unit(w.dim(), w.highest_weight_index().expect("initial tableau"));
    let e = alg.initial(i);
    let top: Vec<usize> = (1..=c).collect();

    let hb = schur.heredity_basis(d + c)?;
    let basis = schur.basis_index(d + c);
    let mut chain = Vec::new();
    let mut steps = Vec::new();
    let mut cur = Subspace::new(dim);
    for p in omega_lambda(lambda, c, n)? {
        let shape = p
            .add_to(&lambda.padded(n)?)
            .as_partition()
            .expect("Ω_λ only holds dominant sums");
        let factor = Multipartition::iota(l, i, &shape);
        let eta_p = schur.eta(&vec![e; c], p.elems(), &top)?;
        let w_p = w.apply(&eta_p, &w_mu)?;
        let g = v_lambda.kron(&w_p);

        let eta_nu = schur.shape_idempotent(&factor)?;
        let weight_ok = cur.contains(&m.apply(&eta_nu, &g)?.sub(&g))?;
        let k = hb.shape_index(&factor).ok_or_else(|| ModError::NotDominant(factor.to_string(), n, d + c))?;
        let mut y_annihilated = true;
        'shapes: for (s, ys) in hb.y.iter().enumerate() {
            for y in ys {
                if s == k && y.tableau.is_initial() {
                    continue;
                }
                if !cur.contains(&m.apply(&y.element, &g)?)? {
                    y_annihilated = false;
                    break 'shapes;
                }
            }
        }

        let before = cur.rank();
        for t in basis.triples() {
            cur.insert(&m.apply_triple(t, &g)?)?;
        }
        let expected_dim = enumerate_std_tableaux(&factor, Flavor::X, alg, n).len();
        steps.push(FiltrationStep {
            pset: p,
            factor,
            parity: homogeneous_parity(&m, &g).unwrap_or(Parity::Even),
            generator: g,
            dim: cur.rank(),
            quotient_dim: cur.rank() - before,
            expected_dim,
            weight_ok,
            y_annihilated,
            skipped: false,
        });
        chain.push(cur.clone());
    }

    let total: usize = steps.iter().map(|s| s.expected_dim).sum();
    let report = FiltrationReport {
        lambda: lambda.clone(),
        c,
        i,
        n,
        truncated_from: None,
        tensor_dim: dim,
        generation: cur.rank() == dim,
        y_annihilation: steps.iter().all(|s| s.weight_ok && s.y_annihilated),
        dimension_sum: total == dim && steps.iter().all(|s| s.quotient_dim == s.expected_dim),
        steps,
        chain,
    };
    Ok(Built { report, module: m })
}

/// The chain for `Δ(ι_i(λ)) ⊗ Δ(ι_i(ω_c))`, certified step by step.
pub fn build_filtration(schur: &Arc<SchurAlgebra>, lambda: &Partition, c: usize, i: usize) -> Result<FiltrationReport, ModError> {
    Ok(build(schur, lambda, c, i)?.report)
}

/// Compresses the width-`N` chain of `big` by `η^N_m(d+c)`, `m` the width of `small`.
pub fn truncated_tensor_filtration(
    big: &Arc<SchurAlgebra>,
    small: &Arc<SchurAlgebra>,
    lambda: &Partition,
    c: usize,
    i: usize,
) -> Result<FiltrationReport, ModError> {
    let d = lambda.size();
    if big.n() < d + c {
        return Err(ModError::TruncationBound { big: big.n(), d: d + c });
    }
    let m = small.n();
    if m > big.n() {
        return Err(SchurError::WidthBound { small: m, big: big.n() }.into());
    }
    let Built { report: full, module } = build(big, lambda, c, i)?;
    let alg = big.heredity_data();
    let l = alg.num_components();
    let e = big.truncation_idempotent(m, d + c)?;

    let mut chain = Vec::new();
    let mut steps = Vec::new();
    let mut before = 0;
    for (step, sub) in full.steps.iter().zip(&full.chain) {
        let images = sub
            .rows()
            .iter()
            .map(|r| module.apply(&e, r))
            .collect::<Result<Vec<_>, _>>()?;
        let compressed = Subspace::span(module.dim(), &images)?;
        let expected_dim = enumerate_std_tableaux(&step.factor, Flavor::X, alg, m).len();
        let quotient_dim = compressed.rank() - before;
        before = compressed.rank();
        steps.push(FiltrationStep {
            quotient_dim,
            expected_dim,
            dim: compressed.rank(),
            skipped: expected_dim == 0 && quotient_dim == 0,
            ..step.clone()
        });
        chain.push(compressed);
    }

    let lam = Multipartition::iota(l, i, lambda);
    let mu = Multipartition::iota(l, i, &Partition::column(c));
    let tensor_dim = truncated_standard(big, small, &lam)?.dim() * truncated_standard(big, small, &mu)?.dim();
    let total: usize = steps.iter().map(|s| s.expected_dim).sum();
    Ok(FiltrationReport {
        lambda: lambda.clone(),
        c,
        i,
        n: m,
        truncated_from: Some(big.n()),
        tensor_dim,
        generation: before == tensor_dim,
        y_annihilation: full.y_annihilation && full.generation,
        dimension_sum: full.dimension_sum && total == tensor_dim && steps.iter().all(|s| s.quotient_dim == s.expected_dim),
        steps,
        chain,
    })
}
