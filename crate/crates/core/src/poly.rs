//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are stored strictly descending under the ring's ordering, with no
//! zero coefficients; the empty term list is the zero polynomial.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::coeff::{Coeff, Field};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrdering, OrderKind, VarContext};

/// Variables, ordering and coefficient field shared by a family of polynomials.
///
/// `rank` is the number of module positions; it is `1` for the polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: VarContext,
    ordering: MonomialOrdering,
    field: Field,
    rank: usize,
}

impl Ring {
    pub fn new(vars: VarContext, order: OrderKind, field: Field) -> Arc<Ring> {
        Arc::new(Ring {
            vars,
            ordering: MonomialOrdering::new(order),
            field,
            rank: 1,
        })
    }

    /// Free module of the given rank over the polynomial ring.
    pub fn module(vars: VarContext, ordering: MonomialOrdering, field: Field, rank: usize) -> Arc<Ring> {
        Arc::new(Ring {
            vars,
            ordering,
            field,
            rank: rank.max(1),
        })
    }

    pub fn vars(&self) -> &VarContext {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn ordering(&self) -> &MonomialOrdering {
        &self.ordering
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.ordering.compare(a, b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: Coeff,
}

#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Self {
        Self::term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial) -> Self {
        Self::term(ring, ring.field.one(), m)
    }

    pub fn term(ring: &Arc<Ring>, c: Coeff, m: Monomial) -> Self {
        let terms = if ring.field.is_zero(&c) {
            Vec::new()
        } else {
            vec![Term { mono: m, coeff: c }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal monomials, drops zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let field = ring.field;
        let mut raw: Vec<Term> = terms
            .into_iter()
            .map(|(mono, coeff)| Term { mono, coeff })
            .collect();
        raw.sort_by(|a, b| ring.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !field.is_zero(&t.coeff));
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Terms must already be strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !ring.field.is_zero(&t.coeff)));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading monomial; `None` for zero.
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn lc(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.mono)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| self.ring.field.is_one(c))
    }

    /// Everything but the leading term.
    pub fn tail(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::Context(
                "polynomials belong to different rings, orderings or fields".into(),
            ))
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_scaled(&self.ring.field.one(), &Monomial::one(self.ring.nvars()), other))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let minus_one = self.ring.field.neg(&self.ring.field.one());
        Ok(self.add_scaled(&minus_one, &Monomial::one(self.ring.nvars()), other))
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.clone(),
                    coeff: field.neg(&t.coeff),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    /// `c * m * self`. `m` is a ring monomial; module positions are kept.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        let field = self.ring.field;
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.mul(m),
                    coeff: field.mul(&t.coeff, c),
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        self.mul_term(&self.ring.field.one(), m)
    }

    /// Prolongation by the variable `x_i`.
    pub fn mul_var(&self, i: usize) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.mul_var(i),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// Full product. Only defined for ring elements (position 0) on at least one side.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.terms.iter().any(|t| t.mono.position() != 0)
            && other.terms.iter().any(|t| t.mono.position() != 0)
        {
            return Err(Error::Domain("product of two module elements".into()));
        }
        let (a, b) = if other.terms.iter().any(|t| t.mono.position() != 0) {
            (other, self)
        } else {
            (self, other)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for t in &b.terms {
            acc = acc.add_scaled(&t.coeff, &t.mono, a);
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::constant(&self.ring, self.ring.field.one());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn make_monic(&self) -> Polynomial {
        match self.lc() {
            None => self.clone(),
            Some(c) if self.ring.field.is_one(c) => self.clone(),
            Some(c) => {
                let inv = self.ring.field.inv(c);
                self.scale(&inv)
            }
        }
    }

    /// `self + c * m * g`, merging the sorted term lists.
    pub(crate) fn add_scaled(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: merge_scaled(&self.ring, &self.terms, c, m, &g.terms),
        }
    }

    pub fn display(&self) -> PolyDisplay<'_> {
        PolyDisplay { poly: self }
    }
}

/// `a + c * m * b` on descending term slices.
pub(crate) fn merge_scaled(ring: &Ring, a: &[Term], c: &Coeff, m: &Monomial, b: &[Term]) -> Vec<Term> {
    let field = ring.field;
    let scaled = |t: &Term| Term {
        mono: t.mono.mul(m),
        coeff: field.mul(&t.coeff, c),
    };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut a = a.iter().peekable();
    let mut b = b.iter().map(scaled).peekable();
    loop {
        let ord = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => ring.cmp(&x.mono, &y.mono),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match ord {
            Ordering::Greater => out.push(a.next().unwrap().clone()),
            Ordering::Less => out.push(b.next().unwrap()),
            Ordering::Equal => {
                let x = a.next().unwrap();
                let y = b.next().unwrap();
                let s = field.add(&x.coeff, &y.coeff);
                if !field.is_zero(&s) {
                    out.push(Term { mono: y.mono, coeff: s });
                }
            }
        }
    }
    out
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.display())
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = &self.poly.ring;
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, t) in self.poly.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = ring.field.is_one(&abs);
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else if unit {
                write!(f, "{}", t.mono.display(&ring.vars))?;
            } else {
                write!(f, "{abs}*{}", t.mono.display(&ring.vars))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display().fmt(f)
    }
}

/// Sorts a polynomial list by descending leading monomial; zeros go last.
pub fn sort_by_lm_desc(polys: &mut [Polynomial]) {
    polys.sort_by(|a, b| match (a.lm(), b.lm()) {
        (Some(x), Some(y)) => a.ring.cmp(y, x),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => Ordering::Equal,
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ring() -> Arc<Ring> {
        Ring::new(
            VarContext::new(&["x", "y", "z", "t"]).unwrap(),
            OrderKind::DegRevLex,
            Field::Rational,
        )
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        parse_poly(r, s).unwrap()
    }

    #[test]
    fn cancellation() {
        let r = ring();
        let s = p(&r, "x^2*y - z").add(&p(&r, "z")).unwrap();
        assert_eq!(s, p(&r, "x^2*y"));
        assert!(p(&r, "x - y").sub(&p(&r, "x - y")).unwrap().is_zero());
    }

    #[test]
    fn monic_and_term_product() {
        let r = ring();
        assert_eq!(p(&r, "3*x*y - 3*z").make_monic(), p(&r, "x*y - z"));
        let prod = p(&r, "z*t + x").mul(&p(&r, "z")).unwrap();
        assert_eq!(prod.to_string(), "z^2*t + x*z");
        assert_eq!(p(&r, "x + 1").pow(2).unwrap(), p(&r, "x^2 + 2*x + 1"));
    }

    #[test]
    fn context_mismatch() {
        let r = ring();
        let other = Ring::new(
            VarContext::new(&["x", "y", "z", "t"]).unwrap(),
            OrderKind::DegRevLex,
            Field::Prime(7),
        );
        let a = p(&r, "x");
        let b = parse_poly(&other, "x").unwrap();
        assert!(matches!(a.add(&b), Err(Error::Context(_))));
    }

    #[test]
    fn display_rationals() {
        let r = ring();
        assert_eq!(p(&r, "-1/2*x + 4*y*z - 1").to_string(), "4*y*z - 1/2*x - 1");
    }
}
