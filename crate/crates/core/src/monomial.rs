//! Exponent-vector monomials over a fixed, ordered list of variables.
//!
//! Variable `0` is the highest variable: every ordering here satisfies
//! `x_1 > x_2 > ... > x_n`. A monomial may also carry a module position,
//! which is always `0` for elements of the polynomial ring itself and names
//! the unknown `y_j` when monomials encode derivatives.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Upper bound on the number of variables; separations are stored as `u64` bit masks.
pub const MAX_VARS: usize = 64;

/// The ordered variable list `x_1, ..., x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Vec<String>,
}

impl VarContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Input("variable list is empty".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::Input(format!(
                "at most {MAX_VARS} variables are supported, got {}",
                names.len()
            )));
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref().trim();
            if name.is_empty() {
                return Err(Error::Input("empty variable name".into()));
            }
            if out.iter().any(|n| n == name) {
                return Err(Error::Input(format!("duplicate variable `{name}`")));
            }
            out.push(name.to_string());
        }
        Ok(VarContext { names: out })
    }

    /// `x1, ..., xn`.
    pub fn indexed(prefix: &str, n: usize) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Renders a variable set as `x, y, z` in declared order, or `-` when empty.
    pub fn fmt_vars(&self, vars: VarSet) -> String {
        if vars.is_empty() {
            return "-".to_string();
        }
        vars.iter(self.len())
            .map(|i| self.names[i].as_str())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// A set of variable indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn all(n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        if n == MAX_VARS {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut s = VarSet::EMPTY;
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    /// Complement within the first `n` variables.
    pub fn complement(self, n: usize) -> VarSet {
        VarSet::all(n).difference(self)
    }

    pub fn iter(self, n: usize) -> impl Iterator<Item = usize> {
        (0..n).filter(move |&i| self.contains(i))
    }
}

/// `x_1^{d_1} ... x_n^{d_n}`, optionally tagged with a module position.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
    pos: u32,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: vec![0; n].into_boxed_slice(),
            degree: 0,
            pos: 0,
        }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial {
            exps: exps.into_boxed_slice(),
            degree: 1,
            pos: 0,
        }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .expect("monomial degree overflow");
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
            pos: 0,
        }
    }

    pub fn with_position(mut self, pos: u32) -> Self {
        self.pos = pos;
        self
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn deg_i(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn position(&self) -> u32 {
        self.pos
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Variables occurring with positive exponent.
    pub fn support(&self) -> VarSet {
        VarSet::from_indices(self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i))
    }

    /// Index of the lowest variable that occurs, i.e. `k` in `x_1^{d_1}...x_k^{d_k}`, `d_k > 0`.
    pub fn class(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.pos == other.pos
            && self.degree <= other.degree
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, defined when `self | other`. The result is a ring monomial.
    pub fn quotient_of(&self, other: &Monomial) -> Result<Monomial> {
        if !self.divides(other) {
            return Err(Error::Domain(format!(
                "{:?} does not divide {:?}",
                self.exps, other.exps
            )));
        }
        Ok(self.quotient_unchecked(other))
    }

    pub(crate) fn quotient_unchecked(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(b, a)| b - a)
            .collect();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree: other.degree - self.degree,
            pos: 0,
        }
    }

    /// Componentwise maximum; keeps `self`'s position.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial::new(exps).with_position(self.pos)
    }

    /// Product with a ring monomial (or another monomial); keeps `self`'s position.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        let degree = self
            .degree
            .checked_add(other.degree)
            .expect("degree overflow");
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
            pos: self.pos,
        }
    }

    /// `self * x_i`.
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = exps[i].checked_add(1).expect("exponent overflow");
        Monomial {
            exps,
            degree: self.degree.checked_add(1).expect("degree overflow"),
            pos: self.pos,
        }
    }

    /// Renders as `x^2*y*z^3` (`1` for the unit monomial).
    pub fn display<'a>(&'a self, ctx: &'a VarContext) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, ctx }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pos == 0 {
            write!(f, "{:?}", self.exps)
        } else {
            write!(f, "{:?}@{}", self.exps, self.pos)
        }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ctx: &'a VarContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ctx.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OrderKind {
    Lex,
    DegLex,
    #[default]
    DegRevLex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "lex" => Ok(OrderKind::Lex),
            "deglex" => Ok(OrderKind::DegLex),
            "degrevlex" => Ok(OrderKind::DegRevLex),
            other => Err(Error::Input(format!("unknown ordering `{other}`"))),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How module positions enter the comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PositionRule {
    /// Compare the monomials first, positions only break ties.
    #[default]
    TermOverPosition,
    /// Compare positions first.
    PositionOverTerm,
}

/// An admissible ordering compatible with `x_1 > x_2 > ... > x_n`,
/// extended to module monomials by a position rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MonomialOrdering {
    kind: OrderKind,
    rule: PositionRule,
    /// `rank[j]` is the priority of position `j`; lower rank is greater.
    /// Empty means the identity ranking `y_1 > y_2 > ...`.
    rank: Vec<u32>,
}

impl MonomialOrdering {
    pub fn new(kind: OrderKind) -> Self {
        MonomialOrdering {
            kind,
            rule: PositionRule::default(),
            rank: Vec::new(),
        }
    }

    /// Module ordering; `position_order` lists positions from greatest to least.
    pub fn with_positions(
        kind: OrderKind,
        rule: PositionRule,
        position_order: &[u32],
    ) -> Result<Self> {
        let m = position_order.len();
        let mut rank = vec![u32::MAX; m];
        for (r, &p) in position_order.iter().enumerate() {
            let p = p as usize;
            if p >= m || rank[p] != u32::MAX {
                return Err(Error::Input(format!(
                    "position order {position_order:?} is not a permutation"
                )));
            }
            rank[p] = r as u32;
        }
        Ok(MonomialOrdering { kind, rule, rank })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn position_rule(&self) -> PositionRule {
        self.rule
    }

    fn rank_of(&self, pos: u32) -> u32 {
        self.rank.get(pos as usize).copied().unwrap_or(pos)
    }

    /// Ordering of two ring monomials ignoring positions.
    pub fn compare_terms(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => cmp_lex(&a.exps, &b.exps),
            OrderKind::DegLex => a
                .degree
                .cmp(&b.degree)
                .then_with(|| cmp_lex(&a.exps, &b.exps)),
            OrderKind::DegRevLex => a
                .degree
                .cmp(&b.degree)
                .then_with(|| cmp_revlex(&a.exps, &b.exps)),
        }
    }

    fn compare_positions(&self, a: &Monomial, b: &Monomial) -> Ordering {
        // lower rank is the greater position
        self.rank_of(b.pos).cmp(&self.rank_of(a.pos))
    }

    /// Total admissible comparison. Both monomials must have the same length.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.exps.len(), b.exps.len());
        match self.rule {
            PositionRule::TermOverPosition => self
                .compare_terms(a, b)
                .then_with(|| self.compare_positions(a, b)),
            PositionRule::PositionOverTerm => self
                .compare_positions(a, b)
                .then_with(|| self.compare_terms(a, b)),
        }
    }

    /// As [`compare`](Self::compare) but reports monomials over different variable lists.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.exps.len() != b.exps.len() {
            return Err(Error::Context(format!(
                "monomials over {} and {} variables",
                a.exps.len(),
                b.exps.len()
            )));
        }
        Ok(self.compare(a, b))
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

// equal degree assumed: the smaller exponent in the last differing variable wins
fn cmp_revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}
