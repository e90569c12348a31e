//! Standard multiplicities from characters, and costandard characters.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::combinatorics::{
    enumerate_multipartitions, enumerate_std_tableaux, order_leq_i, tableau_weight_at, CombError, Flavor,
    Multipartition,
};
use crate::schurcore::{SchurAlgebra, SchurError};
use crate::symfunc::{multi_lr, MultiSymPoly};

use super::{standard_dim, standard_module, tableau_character, tensor, CharacterVector, ModError};

/// Peels `ch` into standard characters along the descending linear extension of `≤_I`.
pub fn decompose_character(
    schur: &SchurAlgebra,
    ch: &CharacterVector,
    d: usize,
) -> Result<BTreeMap<Multipartition, i64>, ModError> {
    let n = schur.n();
    let mut residual = ch.clone();
    let mut out = BTreeMap::new();
    for lam in enumerate_multipartitions(n, d, schur.heredity_data().poset()) {
        let m = residual.coefficient(&lam.padded(n)?);
        if m < 0 {
            return Err(ModError::NotStandardPositive(format!("coefficient {m} at {lam}")));
        }
        if m > 0 {
            residual = residual.sub(&tableau_character(schur, &lam)?.scaled(m));
            out.insert(lam, m);
        }
    }
    if !residual.is_zero() {
        return Err(ModError::NotStandardPositive(format!("residual {residual}")));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct MultiplicityReport {
    pub lambda: Multipartition,
    pub mu: Multipartition,
    pub observed: BTreeMap<Multipartition, i64>,
    pub predicted: BTreeMap<Multipartition, i64>,
    /// `Δ(λ+μ)` appears once.
    pub top_once: bool,
    /// Every other factor is `<_I λ+μ`.
    pub others_below: bool,
    /// `dim Δ(κ) = ∏_i dim Δ(ι_i(κ^(i)))` for `κ ∈ {λ, μ}`.
    pub decomposition_ok: bool,
}

impl MultiplicityReport {
    pub fn agree(&self) -> bool {
        self.observed == self.predicted
    }

    pub fn passed(&self) -> bool {
        self.agree() && self.top_once && self.others_below && self.decomposition_ok
    }
}

fn component_dims_agree(schur: &Arc<SchurAlgebra>, kappa: &Multipartition) -> Result<bool, ModError> {
    let l = kappa.slots();
    let whole = standard_module(schur, kappa)?.dim();
    let mut prod = 1;
    for (i, part) in kappa.components().iter().enumerate() {
        prod *= standard_module(schur, &Multipartition::iota(l, i, part))?.dim();
    }
    Ok(whole == prod && whole == standard_dim(schur, kappa))
}

/// Decomposes `ch(Δ(λ) ⊗ Δ(μ))` and compares with componentwise LR products.
pub fn verify_multiplicities(
    schur: &Arc<SchurAlgebra>,
    lambda: &Multipartition,
    mu: &Multipartition,
) -> Result<MultiplicityReport, ModError> {
    let n = schur.n();
    let (d, c) = (lambda.size(), mu.size());
    if d + c > n {
        return Err(CombError::DegreeBound { d, c, n }.into());
    }
    let v = standard_module(schur, lambda)?;
    let w = standard_module(schur, mu)?;
    let ch = tensor(&v, &w)?.character()?;
    let observed = decompose_character(schur, &ch, d + c)?;
    let predicted: BTreeMap<Multipartition, i64> =
        multi_lr(lambda, mu).into_iter().filter(|(nu, _)| nu.max_length() <= n).collect();
    let top = lambda.add(mu);
    let top_once = observed.get(&top) == Some(&1);
    let poset = schur.heredity_data().poset();
    let mut others_below = true;
    for nu in observed.keys() {
        if nu != &top && !order_leq_i(poset, nu, &top)? {
            others_below = false;
        }
    }
    let decomposition_ok = component_dims_agree(schur, lambda)? && component_dims_agree(schur, mu)?;
    Ok(MultiplicityReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        observed,
        predicted,
        top_once,
        others_below,
        decomposition_ok,
    })
}

/// `Σ_{T ∈ Std^Y(λ)} z^{α(T)}`, the character of `∇(λ)`.
pub fn costandard_character(schur: &SchurAlgebra, lambda: &Multipartition) -> Result<CharacterVector, ModError> {
    let n = schur.n();
    let d = lambda.size();
    if d > n {
        return Err(SchurError::DegreeBound { d, n }.into());
    }
    let alg = schur.heredity_data();
    let mut ch = MultiSymPoly::zero(alg.num_components(), n);
    for t in enumerate_std_tableaux(lambda, Flavor::Y, alg, n) {
        ch.add_term(tableau_weight_at(&t, alg, n)?, 1);
    }
    Ok(ch)
}
