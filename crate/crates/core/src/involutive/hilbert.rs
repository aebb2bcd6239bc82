//! Hilbert functions read off an involutive basis.
//!
//! Involutive cones of a complete set are disjoint and cover the monomial
//! ideal, so the ideal's Hilbert function is a sum of cone sizes.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::involutive::completion::is_complete;
use crate::involutive::separation::{separation, Division};
use crate::monomial::Monomial;

/// `sum_u t^deg(u) / (1 - t)^m_u` over the generators of a complete set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    nvars: usize,
    rank: usize,
    /// `(deg u, number of multiplicative variables of u)` per generator.
    cones: Vec<(u32, usize)>,
}

/// Number of monomials of degree `d` in `m` variables.
pub fn monomial_count(d: u32, m: usize) -> BigUint {
    if m == 0 {
        return if d == 0 { BigUint::one() } else { BigUint::zero() };
    }
    // C(d + m - 1, m - 1)
    let k = (m - 1) as u64;
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc = acc * BigUint::from(d as u64 + i) / BigUint::from(i);
    }
    acc
}

impl HilbertSeries {
    /// Requires `set` to be an involutive basis of its monomial ideal.
    /// `rank` is the number of module positions (1 for ideals).
    pub fn new(set: &[Monomial], division: Division, rank: usize) -> Result<Self> {
        let Some(first) = set.first() else {
            return Err(Error::Input("empty monomial set".into()));
        };
        if !is_complete(set, division)? {
            return Err(Error::Precondition(format!(
                "monomial set is not a {division} basis of its ideal"
            )));
        }
        let mult = separation(division, set)?;
        Ok(HilbertSeries {
            nvars: first.nvars(),
            rank: rank.max(1),
            cones: set.iter().zip(mult).map(|(u, m)| (u.degree(), m.len())).collect(),
        })
    }

    pub fn cones(&self) -> &[(u32, usize)] {
        &self.cones
    }

    /// Number of degree-`d` monomials in the ideal.
    pub fn ideal_fn(&self, d: u32) -> BigUint {
        self.cones
            .iter()
            .filter(|(deg, _)| *deg <= d)
            .map(|&(deg, m)| monomial_count(d - deg, m))
            .sum()
    }

    /// Hilbert function of the quotient: `rank * C(n-1+d, d) - ideal_fn(d)`.
    pub fn quotient_fn(&self, d: u32) -> BigUint {
        monomial_count(d, self.nvars) * BigUint::from(self.rank) - self.ideal_fn(d)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cones = self.cones.clone();
        cones.sort();
        for (i, (deg, m)) in cones.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let num = match deg {
                0 => "1".to_string(),
                1 => "t".to_string(),
                d => format!("t^{d}"),
            };
            match m {
                0 => write!(f, "{num}")?,
                1 => write!(f, "{num}/(1-t)")?,
                m => write!(f, "{num}/(1-t)^{m}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutive::completion::janet_completion;
    use crate::monomial::{MonomialOrdering, OrderKind};

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn infinite_pommaret_values() {
        let ord = MonomialOrdering::new(OrderKind::DegRevLex);
        let u = janet_completion(&[m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[0, 0, 2])], &ord);
        let hs = HilbertSeries::new(&u, Division::Janet, 1).unwrap();
        assert_eq!(hs.ideal_fn(0), BigUint::zero());
        assert_eq!(hs.ideal_fn(2), BigUint::from(3u32));
        assert_eq!(hs.ideal_fn(3), BigUint::from(7u32));
        assert_eq!(hs.quotient_fn(1), BigUint::from(3u32));
    }

    #[test]
    fn incomplete_set_rejected() {
        let u = vec![m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        assert!(matches!(
            HilbertSeries::new(&u, Division::Janet, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn counts() {
        assert_eq!(monomial_count(3, 3), BigUint::from(10u32));
        assert_eq!(monomial_count(0, 0), BigUint::one());
        assert_eq!(monomial_count(2, 0), BigUint::zero());
    }
}
