//! Nuclei and prenuclei as total tables on the elements of a lattice, and
//! the three manifestations of a nucleus: the map `j`, its division set
//! `D_j = {[a,b] : b ≤ j(a)}` and its free set `F_j = {[a,b] : j(a) ∧ b = a}`.
//!
//! A prenucleus here is a monotone inflator that preserves binary meets;
//! idempotence is not required.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval_set::IntervalSet;
use crate::lattice::{Elem, Lattice};

/// A nucleus: inflating, idempotent, and `j(a ∧ b) = j(a) ∧ j(b)`.
///
/// Nuclei order lexicographically by table, which is the order the
/// assembly lists them in.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Nucleus(Vec<Elem>);

/// A monotone, meet-preserving inflator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Prenucleus(Vec<Elem>);

fn table_error(l: &Lattice, f: &[Elem]) -> Option<String> {
    if f.len() != l.size() {
        return Some(format!(
            "table has {} entries, lattice has {}",
            f.len(),
            l.size()
        ));
    }
    if let Some(x) = f.iter().position(|&y| y >= l.size()) {
        return Some(format!("image of `{}` is out of range", l.label(x)));
    }
    None
}

/// Reason `f` fails to be a monotone meet-preserving inflator.
fn prenucleus_error(l: &Lattice, f: &[Elem]) -> Option<String> {
    if let Some(e) = table_error(l, f) {
        return Some(e);
    }
    for a in l.elements() {
        if !l.leq(a, f[a]) {
            return Some(format!("`{}` is not below its image", l.label(a)));
        }
    }
    for a in l.elements() {
        for b in l.elements() {
            if l.leq(a, b) && !l.leq(f[a], f[b]) {
                return Some(format!(
                    "not monotone at `{}` ≤ `{}`",
                    l.label(a),
                    l.label(b)
                ));
            }
            if f[l.meet(a, b)] != l.meet(f[a], f[b]) {
                return Some(format!(
                    "meet of `{}` and `{}` not preserved",
                    l.label(a),
                    l.label(b)
                ));
            }
        }
    }
    None
}

fn nucleus_error(l: &Lattice, f: &[Elem]) -> Option<String> {
    prenucleus_error(l, f).or_else(|| {
        l.elements()
            .find(|&a| f[f[a]] != f[a])
            .map(|a| format!("not idempotent at `{}`", l.label(a)))
    })
}

pub fn is_nucleus(l: &Lattice, f: &[Elem]) -> bool {
    nucleus_error(l, f).is_none()
}

pub fn is_prenucleus(l: &Lattice, f: &[Elem]) -> bool {
    prenucleus_error(l, f).is_none()
}

impl Prenucleus {
    pub fn new(l: &Lattice, table: Vec<Elem>) -> Result<Prenucleus> {
        match prenucleus_error(l, &table) {
            None => Ok(Prenucleus(table)),
            Some(e) => Err(Error::NotAPrenucleus(e)),
        }
    }

    pub fn table(&self) -> &[Elem] {
        &self.0
    }
}

impl From<Nucleus> for Prenucleus {
    fn from(j: Nucleus) -> Prenucleus {
        Prenucleus(j.0)
    }
}

impl Nucleus {
    /// Checks every nucleus law.
    pub fn new(l: &Lattice, table: Vec<Elem>) -> Result<Nucleus> {
        match nucleus_error(l, &table) {
            None => Ok(Nucleus(table)),
            Some(e) => Err(Error::NotANucleus(e)),
        }
    }

    /// Parses `x↦y` (or `x->y`) pairs separated by commas; every element
    /// must appear once.
    pub fn parse(l: &Lattice, text: &str) -> Result<Nucleus> {
        let text = text.trim().strip_prefix("j:").unwrap_or(text).trim();
        let mut table = vec![None; l.size()];
        for (k, item) in split_top_level(text).into_iter().enumerate() {
            let item = item.trim();
            let (x, y) = item
                .split_once('↦')
                .or_else(|| item.split_once("->"))
                .ok_or_else(|| Error::Syntax {
                    line: 1,
                    col: k + 1,
                    msg: format!("expected `x↦y`, found `{item}`"),
                })?;
            table[l.elem(x.trim())?] = Some(l.elem(y.trim())?);
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(x, y)| {
                y.ok_or_else(|| Error::NotANucleus(format!("no image for `{}`", l.label(x))))
            })
            .collect::<Result<Vec<_>>>()?;
        Nucleus::new(l, table)
    }

    pub(crate) fn new_unchecked(table: Vec<Elem>) -> Nucleus {
        Nucleus(table)
    }

    pub fn identity(l: &Lattice) -> Nucleus {
        Nucleus(l.elements().collect())
    }

    /// The constant map onto the top.
    pub fn top(l: &Lattice) -> Nucleus {
        Nucleus(vec![l.top(); l.size()])
    }

    /// The closure `a ↦ ⋀{s ∈ fixed : a ≤ s}`, checked to be a nucleus.
    pub fn from_fixed(l: &Lattice, fixed: &[Elem]) -> Result<Nucleus> {
        let table = l
            .elements()
            .map(|a| l.meet_all(fixed.iter().copied().filter(|&s| l.leq(a, s))))
            .collect();
        Nucleus::new(l, table)
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.0[x]
    }

    pub fn table(&self) -> &[Elem] {
        &self.0
    }

    pub fn fixed_points(&self) -> Vec<Elem> {
        (0..self.0.len()).filter(|&x| self.0[x] == x).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Pointwise order.
    pub fn leq(&self, l: &Lattice, other: &Nucleus) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| l.leq(a, b))
    }

    /// `D_j = {[a,b] : b ≤ j(a)}`.
    pub fn dset(&self, l: &Lattice) -> IntervalSet {
        IntervalSet::from_fn(l, |iv| l.leq(iv.hi, self.apply(iv.lo)))
    }

    /// `F_j = {[a,b] : j(a) ∧ b = a}`, the intervals with `j ≤ χ(a,b)`.
    pub fn fset(&self, l: &Lattice) -> IntervalSet {
        IntervalSet::from_fn(l, |iv| l.meet(self.apply(iv.lo), iv.hi) == iv.lo)
    }

    pub fn display<'a>(&'a self, l: &'a Lattice) -> NucleusDisplay<'a> {
        NucleusDisplay { l, j: self }
    }
}

/// Splits on commas outside parentheses, so product labels `(x,y)` survive.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

/// Prints `j: 0↦x0, 1↦x1, …` with labels.
pub struct NucleusDisplay<'a> {
    l: &'a Lattice,
    j: &'a Nucleus,
}

impl fmt::Display for NucleusDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("j: ")?;
        for x in self.l.elements() {
            if x > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}↦{}", self.l.label(x), self.l.label(self.j.apply(x)))?;
        }
        Ok(())
    }
}

/// Iterates a monotone inflator until it stops changing. The result is the
/// closure operator onto the fixed points of `f`.
pub(crate) fn iterate_to_closure(l: &Lattice, f: &[Elem]) -> Vec<Elem> {
    l.elements()
        .map(|a| {
            let mut x = a;
            while f[x] != x {
                x = f[x];
            }
            x
        })
        .collect()
}

/// `k^∞`, the least nucleus above a prenucleus. Finite chains bound the
/// number of rounds.
pub fn idempotent_closure(l: &Lattice, k: &Prenucleus) -> Nucleus {
    let table = iterate_to_closure(l, &k.0);
    debug_assert!(is_nucleus(l, &table));
    Nucleus(table)
}

/// Pointwise supremum of a family of maps; the empty family gives the
/// identity.
pub fn pointwise_sup(l: &Lattice, js: &[Nucleus]) -> Vec<Elem> {
    l.elements()
        .map(|a| js.iter().fold(a, |acc, j| l.join(acc, j.apply(a))))
        .collect()
}

/// Pointwise meet, always a nucleus; the empty family gives the top nucleus.
pub fn nucleus_meet(l: &Lattice, js: &[Nucleus]) -> Nucleus {
    Nucleus(
        l.elements()
            .map(|a| js.iter().fold(l.top(), |acc, j| l.meet(acc, j.apply(a))))
            .collect(),
    )
}

/// Join in the assembly by iterating the pointwise supremum to a fixpoint.
///
/// The pointwise supremum of nuclei need not preserve meets in a modular
/// lattice, but its fixed points are the common fixed points of the family,
/// so its closure is the nucleus onto that set.
pub fn nucleus_join_iterative(l: &Lattice, js: &[Nucleus]) -> Nucleus {
    let table = iterate_to_closure(l, &pointwise_sup(l, js));
    debug_assert!(is_nucleus(l, &table));
    Nucleus(table)
}

/// `|D|(a) = ⋁{x : [a,x] ∈ D}` for a division set `D`.
pub fn nucleus_from_dset(l: &Lattice, d: &IntervalSet) -> Result<Nucleus> {
    if let Some(f) = l.division_failure(d) {
        return Err(Error::NotADivisionSet(f.describe(l)));
    }
    let table: Vec<Elem> = l
        .elements()
        .map(|a| l.join_all(l.elements().filter(|&x| d.has(l, a, x))))
        .collect();
    Nucleus::new(l, table).map_err(|e| Error::InternalDisagreement(e.to_string()))
}

/// `ϱ(a) = ⋀{x ≥ a : [x,1] ∈ F}` for a free set `F`.
pub fn nucleus_from_fset_tops(l: &Lattice, f: &IntervalSet) -> Result<Nucleus> {
    if let Some(fl) = l.free_failure(f) {
        return Err(Error::NotAFreeSet(fl.describe(l)));
    }
    let tops: Vec<Elem> = l.elements().filter(|&x| f.has(l, x, l.top())).collect();
    Nucleus::from_fixed(l, &tops).map_err(|e| Error::InternalDisagreement(e.to_string()))
}

/// ξ through the division closure of the seed.
pub fn xi_by_closure(l: &Lattice, seed: &IntervalSet) -> Nucleus {
    nucleus_from_dset(l, &l.division_closure(seed)).expect("division closures are division sets")
}
