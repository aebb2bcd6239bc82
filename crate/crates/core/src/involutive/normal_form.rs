use crate::error::{Error, Result};
use crate::involutive::separation::{Division, SeparationTable};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::reduce::reduce_with;

/// A polynomial set prepared for repeated involutive reduction.
pub struct InvolutiveReducer<'a> {
    basis: &'a [Polynomial],
    table: SeparationTable,
}

impl<'a> InvolutiveReducer<'a> {
    /// Fails for Janet division when two elements share a leading monomial.
    pub fn new(basis: &'a [Polynomial], division: Division) -> Result<Self> {
        if basis.iter().any(Polynomial::is_zero) {
            return Err(Error::Input("zero polynomial in reduction set".into()));
        }
        let lms: Vec<Monomial> = basis.iter().map(|p| p.lm().unwrap().clone()).collect();
        let table = SeparationTable::new(division, &lms).map_err(|e| match e {
            Error::Input(msg) => Error::Precondition(msg),
            other => other,
        })?;
        Ok(InvolutiveReducer { basis, table })
    }

    pub fn table(&self) -> &SeparationTable {
        &self.table
    }

    pub fn basis(&self) -> &[Polynomial] {
        self.basis
    }

    pub fn divisor(&self, w: &Monomial) -> Option<usize> {
        let ord = self.basis.first()?.ring().ordering();
        self.table.divisor(w, ord)
    }

    /// Involutive normal form: no remaining term has an involutive divisor.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        reduce_with(f, self.basis, false, |t| self.divisor(t))
    }

    /// Reduces every term except the leading one.
    pub fn tail_normal_form(&self, f: &Polynomial) -> Polynomial {
        reduce_with(f, self.basis, true, |t| self.divisor(t))
    }
}

/// `NF_J(h, F)` or `NF_P(h, F)`.
pub fn involutive_nf(h: &Polynomial, basis: &[Polynomial], division: Division) -> Result<Polynomial> {
    if let Some(g) = basis.first() {
        if !g.same_ring(h) {
            return Err(Error::Context("polynomial and basis over different rings".into()));
        }
    }
    Ok(InvolutiveReducer::new(basis, division)?.normal_form(h))
}
