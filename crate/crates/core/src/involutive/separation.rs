//! Janet and Pommaret separations of variables, involutive divisors and cones.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrdering, VarSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Division {
    Janet,
    Pommaret,
}

impl fmt::Display for Division {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Division::Janet => "janet",
            Division::Pommaret => "pommaret",
        })
    }
}

impl std::str::FromStr for Division {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "janet" | "j" => Ok(Division::Janet),
            "pommaret" | "p" => Ok(Division::Pommaret),
            other => Err(Error::Input(format!("unknown division `{other}`"))),
        }
    }
}

/// Which kind of cone to test membership in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeKind {
    Full,
    Pommaret,
    Janet,
}

/// Pommaret multiplicative variables: `x_k, ..., x_n` where `x_k` is the
/// lowest variable occurring in `u`; every variable for `u = 1`.
pub fn pommaret_mult(u: &Monomial) -> VarSet {
    let n = u.nvars();
    match u.class() {
        None => VarSet::all(n),
        Some(k) => VarSet::all(n).difference(VarSet::all(k)),
    }
}

/// Janet multiplicative variables of every element of `set`.
///
/// `x_i` is multiplicative for `u` iff `deg_i(u)` is maximal among the
/// elements agreeing with `u` in the degrees of `x_1, ..., x_{i-1}` (and in
/// the module position). Duplicates are rejected.
pub fn janet_mult(set: &[Monomial]) -> Result<Vec<VarSet>> {
    let Some(first) = set.first() else {
        return Ok(Vec::new());
    };
    let n = first.nvars();
    for (i, u) in set.iter().enumerate() {
        if u.nvars() != n {
            return Err(Error::Context("monomials over different variable lists".into()));
        }
        if set[..i].contains(u) {
            return Err(Error::Input(format!("duplicate monomial {u:?} in Janet separation")));
        }
    }
    let mut out = vec![VarSet::EMPTY; set.len()];
    for (k, u) in set.iter().enumerate() {
        let mut group: Vec<&Monomial> = set.iter().filter(|v| v.position() == u.position()).collect();
        for i in 0..n {
            let top = group.iter().map(|v| v.deg_i(i)).max().unwrap_or(0);
            if u.deg_i(i) == top {
                out[k].insert(i);
            }
            group.retain(|v| v.deg_i(i) == u.deg_i(i));
        }
    }
    Ok(out)
}

/// Multiplicative variables for `u` per division (`set` only matters for Janet).
pub fn separation(division: Division, set: &[Monomial]) -> Result<Vec<VarSet>> {
    match division {
        Division::Janet => janet_mult(set),
        Division::Pommaret => Ok(set.iter().map(pommaret_mult).collect()),
    }
}

/// `w ∈ u · L` where `L` is the set of monomials in the variables `mult`.
pub fn in_involutive_cone(u: &Monomial, mult: VarSet, w: &Monomial) -> bool {
    u.divides(w)
        && u
            .exps()
            .iter()
            .zip(w.exps())
            .enumerate()
            .all(|(i, (a, b))| a == b || mult.contains(i))
}

/// Multiplicative / nonmultiplicative split for every element of a monomial set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationTable {
    division: Division,
    nvars: usize,
    monomials: Vec<Monomial>,
    mult: Vec<VarSet>,
}

impl SeparationTable {
    pub fn new(division: Division, set: &[Monomial]) -> Result<Self> {
        let mult = separation(division, set)?;
        Ok(SeparationTable {
            division,
            nvars: set.first().map_or(0, Monomial::nvars),
            monomials: set.to_vec(),
            mult,
        })
    }

    pub fn division(&self) -> Division {
        self.division
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn mult(&self, k: usize) -> VarSet {
        self.mult[k]
    }

    pub fn nonmult(&self, k: usize) -> VarSet {
        self.mult[k].complement(self.nvars)
    }

    pub fn index_of(&self, u: &Monomial) -> Option<usize> {
        self.monomials.iter().position(|v| v == u)
    }

    /// Involutive divisor of `w`. Janet divisors are unique; among several
    /// Pommaret divisors the largest under `ord` is returned.
    pub fn divisor(&self, w: &Monomial, ord: &MonomialOrdering) -> Option<usize> {
        let mut found: Option<usize> = None;
        for (k, u) in self.monomials.iter().enumerate() {
            if !in_involutive_cone(u, self.mult[k], w) {
                continue;
            }
            match self.division {
                Division::Janet => {
                    debug_assert!(found.is_none(), "Janet divisors are unique");
                    return Some(k);
                }
                Division::Pommaret => {
                    found = match found {
                        Some(b) if ord.compare(&self.monomials[b], u) != Ordering::Less => Some(b),
                        _ => Some(k),
                    };
                }
            }
        }
        found
    }

    pub fn in_cone(&self, w: &Monomial) -> bool {
        self.monomials
            .iter()
            .zip(&self.mult)
            .any(|(u, &m)| in_involutive_cone(u, m, w))
    }
}

/// Involutive divisor of `w` in `set`, as an element of `set`.
pub fn involutive_divisor(
    w: &Monomial,
    set: &[Monomial],
    division: Division,
    ord: &MonomialOrdering,
) -> Result<Option<Monomial>> {
    let table = SeparationTable::new(division, set)?;
    Ok(table.divisor(w, ord).map(|k| set[k].clone()))
}

/// Membership of `w` in `C(U)`, `C_P(U)` or `C_J(U)`.
pub fn cone_member(w: &Monomial, set: &[Monomial], kind: ConeKind) -> Result<bool> {
    Ok(match kind {
        ConeKind::Full => set.iter().any(|u| u.divides(w)),
        ConeKind::Pommaret => SeparationTable::new(Division::Pommaret, set)?.in_cone(w),
        ConeKind::Janet => SeparationTable::new(Division::Janet, set)?.in_cone(w),
    })
}
