//! Weight idempotents, Weyl group elements, the unit and truncation idempotents.

use num_bigint::BigInt;

use super::{Letter, OrbitTriple, SchurAlgebra, SchurError, TElement};
use crate::combinatorics::{Composition, Multicomposition};
use crate::exactlin::Scalar;

impl SchurAlgebra {
    /// `η^{e}_λ = η^{e^d}_{l^λ, l^λ}` for the basis index `e` of an idempotent.
    pub fn eta_weight(&self, e: usize, lambda: &Composition) -> Result<TElement, SchurError> {
        if lambda.len() > self.n {
            return Err(SchurError::WidthBound { small: lambda.len(), big: self.n });
        }
        let mut w = Vec::new();
        for (r, &m) in lambda.parts().iter().enumerate() {
            w.extend(std::iter::repeat(self.letter(e, r + 1, r + 1)?).take(m));
        }
        Ok(TElement::basis(OrbitTriple::from_sorted(w)))
    }

    /// `η_λ = η^{e_0}_{λ^(0)} * ⋯ * η^{e_l}_{λ^(l)}`.
    pub fn eta_idempotent(&self, lambda: &Multicomposition) -> Result<TElement, SchurError> {
        let mut acc = TElement::unit0();
        for (i, comp) in lambda.components().iter().enumerate() {
            let e = self.eta_weight(self.alg.initial(i), comp)?;
            acc = self.star(&acc, &e);
        }
        Ok(acc)
    }

    /// `(ξ^{e_i}_σ)^{⊗k}` where `σ` lists the 1-based images of `1..=n`.
    fn weyl_power(&self, i: usize, sigma: &[usize], k: usize) -> Result<TElement, SchurError> {
        let e = self.alg.initial(i);
        let mut out = TElement::zero(k);
        let mut cols = vec![1usize; k];
        if k == 0 {
            return Ok(TElement::unit0());
        }
        // multisets of columns; each orbit appears once with coefficient 1
        loop {
            let w: Vec<Letter> = cols
                .iter()
                .map(|&c| self.letter(e, sigma[c - 1], c))
                .collect::<Result<_, _>>()?;
            let (t, sign) = self.canonicalize(&w).expect("even letters never vanish");
            out.add_term(t, &Scalar::from_integer(sign.into()));
            let mut p = k;
            while p > 0 && cols[p - 1] == self.n {
                p -= 1;
            }
            if p == 0 {
                break;
            }
            let v = cols[p - 1] + 1;
            for c in cols.iter_mut().skip(p - 1) {
                *c = v;
            }
        }
        Ok(out)
    }

    /// `ξ_d(σ) = Σ_{d_0+⋯+d_l=d} (ξ^{e_0}_{σ^(0)})^{⊗d_0} * ⋯ * (ξ^{e_l}_{σ^(l)})^{⊗d_l}`.
    pub fn weyl_element(&self, sigma: &[Vec<usize>], d: usize) -> Result<TElement, SchurError> {
        let l = self.alg.num_components();
        assert_eq!(sigma.len(), l, "one permutation per component");
        for s in sigma {
            let mut sorted = s.clone();
            sorted.sort_unstable();
            if sorted != (1..=self.n).collect::<Vec<_>>() {
                return Err(SchurError::LetterRange(format!("{s:?} is not a permutation of 1..={}", self.n)));
            }
        }
        let mut out = TElement::zero(d);
        for split in Composition::all(l, d) {
            let mut acc = TElement::unit0();
            for (i, &k) in split.parts().iter().enumerate() {
                acc = self.star(&acc, &self.weyl_power(i, &sigma[i], k)?);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// `(E^n_m)^{⊗d}` with `E^n_m = Σ_{r ≤ m} ξ^{1_A}_{r,r}`; needs a unit in `A`.
    pub fn truncation_idempotent(&self, m: usize, d: usize) -> Result<TElement, SchurError> {
        if m > self.n {
            return Err(SchurError::WidthBound { small: m, big: self.n });
        }
        let unit = self.alg.unit().expect("heredity data has a unit");
        let mut e = TElement::zero(1);
        for r in 1..=m {
            for (b, c) in unit.entries() {
                e.add_term(OrbitTriple::from_sorted(vec![self.letter(*b, r, r)?]), c);
            }
        }
        // E is even, so E^{*d} = d! E^{⊗d}
        let mut acc = TElement::unit0();
        for _ in 0..d {
            acc = self.star(&acc, &e);
        }
        let fact: BigInt = (1..=d as u64).map(BigInt::from).product();
        Ok(acc.scaled(&Scalar::new(1.into(), fact)))
    }

    /// The unit of `T(n,d)`.
    pub fn one(&self, d: usize) -> TElement {
        self.truncation_idempotent(self.n, d).expect("full width")
    }

    /// Basis of `η^n_m(d) T(n,d) η^n_m(d)`: triples with all indices `≤ m`.
    pub fn compressed_basis(&self, m: usize, d: usize) -> Result<Vec<OrbitTriple>, SchurError> {
        if m > self.n {
            return Err(SchurError::WidthBound { small: m, big: self.n });
        }
        Ok(self.enumerate_basis(d).into_iter().filter(|t| t.max_index() <= m).collect())
    }
}
