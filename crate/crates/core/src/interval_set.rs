//! Sets of intervals and their place in the hierarchy
//! abstract ⊇ basic ⊇ congruence ⊇ division, plus division-free, stable
//! and DDF sets.
//!
//! Trivial intervals are members of every division set and every free set.
//! Printers leave them out.
//!
//! The clauses quantifying over arbitrary families (directed joins in
//! pre-division sets, arbitrary meets in free and DDF sets) are checked in
//! binary form. For a finite lattice the binary form implies the family
//! form by induction on the family size; the empty family only produces a
//! trivial interval.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::lattice::{Elem, Lattice};
use crate::nucleus::Nucleus;

/// A set of intervals of one lattice, stored as a bitset over its
/// [`IntervalIndex`](crate::IntervalIndex).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    bits: FixedBitSet,
}

impl IntervalSet {
    pub fn empty(l: &Lattice) -> IntervalSet {
        IntervalSet {
            bits: FixedBitSet::with_capacity(l.intervals().len()),
        }
    }

    /// The set 𝒪 of trivial intervals.
    pub fn trivial(l: &Lattice) -> IntervalSet {
        IntervalSet::from_fn(l, Interval::is_trivial)
    }

    pub fn full(l: &Lattice) -> IntervalSet {
        let mut bits = FixedBitSet::with_capacity(l.intervals().len());
        bits.insert_range(..);
        IntervalSet { bits }
    }

    pub fn from_fn(l: &Lattice, mut keep: impl FnMut(&Interval) -> bool) -> IntervalSet {
        let mut s = IntervalSet::empty(l);
        for (i, iv) in l.intervals().all().iter().enumerate() {
            if keep(iv) {
                s.bits.insert(i);
            }
        }
        s
    }

    pub fn from_intervals<I: IntoIterator<Item = Interval>>(l: &Lattice, ivs: I) -> IntervalSet {
        let mut s = IntervalSet::empty(l);
        for iv in ivs {
            s.insert(l, iv);
        }
        s
    }

    /// Parses `[lo,hi]` label pairs; trivial intervals are added.
    pub fn from_labels(l: &Lattice, pairs: &[(&str, &str)]) -> Result<IntervalSet> {
        let mut s = IntervalSet::trivial(l);
        for (lo, hi) in pairs {
            s.insert(l, Interval::parse(l, lo, hi)?);
        }
        Ok(s)
    }

    pub fn contains(&self, l: &Lattice, iv: Interval) -> bool {
        l.intervals()
            .index(iv.lo, iv.hi)
            .is_some_and(|i| self.bits.contains(i))
    }

    #[inline]
    pub(crate) fn has(&self, l: &Lattice, lo: Elem, hi: Elem) -> bool {
        l.intervals()
            .index(lo, hi)
            .is_some_and(|i| self.bits.contains(i))
    }

    /// Returns whether the interval was newly added.
    pub fn insert(&mut self, l: &Lattice, iv: Interval) -> bool {
        let i = l.intervals().index_of(iv);
        !self.bits.put(i)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter<'a>(&'a self, l: &'a Lattice) -> impl Iterator<Item = Interval> + 'a {
        self.bits.ones().map(move |i| l.intervals().get(i))
    }

    /// Nontrivial members in index order.
    pub fn nontrivial(&self, l: &Lattice) -> Vec<Interval> {
        self.iter(l).filter(|iv| !iv.is_trivial()).collect()
    }

    pub fn is_subset(&self, other: &IntervalSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        IntervalSet { bits }
    }

    pub fn intersection(&self, other: &IntervalSet) -> IntervalSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        IntervalSet { bits }
    }

    /// Members as label pairs, trivial ones elided.
    pub fn label_pairs(&self, l: &Lattice) -> Vec<[String; 2]> {
        self.nontrivial(l)
            .into_iter()
            .map(|iv| [l.label(iv.lo).to_string(), l.label(iv.hi).to_string()])
            .collect()
    }

    pub fn display<'a>(&'a self, l: &'a Lattice) -> SetDisplay<'a> {
        SetDisplay { l, set: self }
    }
}

/// Prints `{[a,b],[c,d]}` with trivial intervals elided.
pub struct SetDisplay<'a> {
    l: &'a Lattice,
    set: &'a IntervalSet,
}

impl fmt::Display for SetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, iv) in self.set.nontrivial(self.l).into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", iv.display(self.l))?;
        }
        f.write_str("}")
    }
}

/// One closure rule an interval set can be asked to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    Nonempty,
    /// Closed under similarity.
    Similarity,
    /// Closed under all subintervals.
    Subinterval,
    /// `[a,b] ∈ S ⇒ [a,x] ∈ S`.
    LowerSubinterval,
    /// `[a,b],[b,c] ∈ S ⇒ [a,c] ∈ S`.
    Abutting,
    /// `[a,x],[a,y] ∈ S ⇒ [a,x∨y] ∈ S`.
    Join,
    /// `[a,b] ∈ S`, `b` essential in `[a,c]` ⇒ `[a,c] ∈ S`.
    EssentialExtension,
    /// `[x,b],[y,b] ∈ S ⇒ [x∧y,b] ∈ S`.
    Meet,
}

/// A clause together with the premises that break it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseFailure {
    pub clause: Clause,
    pub premises: Vec<Interval>,
    pub missing: Option<Interval>,
}

impl ClauseFailure {
    pub fn describe(&self, l: &Lattice) -> String {
        let premises: Vec<String> = self
            .premises
            .iter()
            .map(|iv| iv.display(l).to_string())
            .collect();
        match self.missing {
            Some(m) => format!(
                "{:?} clause: from {} the set must contain {}",
                self.clause,
                premises.join(", "),
                m.display(l)
            ),
            None => format!("{:?} clause fails", self.clause),
        }
    }
}

/// Membership of a set in each class of the hierarchy.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SetFlags {
    pub is_abstract: bool,
    pub is_basic: bool,
    pub is_congruence: bool,
    pub is_predivision: bool,
    pub is_division: bool,
    pub is_free: bool,
    pub is_stable: bool,
    pub is_ddf: bool,
}

fn fail(clause: Clause, premises: Vec<Interval>, missing: Interval) -> Option<ClauseFailure> {
    Some(ClauseFailure {
        clause,
        premises,
        missing: Some(missing),
    })
}

impl Lattice {
    /// First failure of `clause` for `s`, if any.
    pub fn clause_failure(&self, s: &IntervalSet, clause: Clause) -> Option<ClauseFailure> {
        let members: Vec<Interval> = s.iter(self).collect();
        match clause {
            Clause::Nonempty => members.is_empty().then_some(ClauseFailure {
                clause,
                premises: vec![],
                missing: None,
            }),
            Clause::Similarity => {
                for &i in &members {
                    for j in self.similar_to(i) {
                        if !s.contains(self, j) {
                            return fail(clause, vec![i], j);
                        }
                    }
                }
                None
            }
            Clause::Subinterval => {
                for &i in &members {
                    for x in self.between(i.lo, i.hi) {
                        for y in self.between(x, i.hi) {
                            if !s.has(self, x, y) {
                                return fail(clause, vec![i], Interval { lo: x, hi: y });
                            }
                        }
                    }
                }
                None
            }
            Clause::LowerSubinterval => {
                for &i in &members {
                    for x in self.between(i.lo, i.hi) {
                        if !s.has(self, i.lo, x) {
                            return fail(clause, vec![i], Interval { lo: i.lo, hi: x });
                        }
                    }
                }
                None
            }
            Clause::Abutting => {
                for &i in &members {
                    for &j in members.iter().filter(|j| j.lo == i.hi) {
                        if !s.has(self, i.lo, j.hi) {
                            return fail(clause, vec![i, j], Interval { lo: i.lo, hi: j.hi });
                        }
                    }
                }
                None
            }
            Clause::Join => {
                for &i in &members {
                    for &j in members.iter().filter(|j| j.lo == i.lo) {
                        let hi = self.join(i.hi, j.hi);
                        if !s.has(self, i.lo, hi) {
                            return fail(clause, vec![i, j], Interval { lo: i.lo, hi });
                        }
                    }
                }
                None
            }
            Clause::EssentialExtension => {
                for &i in &members {
                    for c in self.elements().filter(|&c| self.leq(i.hi, c)) {
                        if self.essential_in(i.hi, i.lo, c) && !s.has(self, i.lo, c) {
                            return fail(clause, vec![i], Interval { lo: i.lo, hi: c });
                        }
                    }
                }
                None
            }
            Clause::Meet => {
                for &i in &members {
                    for &j in members.iter().filter(|j| j.hi == i.hi) {
                        let lo = self.meet(i.lo, j.lo);
                        if !s.has(self, lo, i.hi) {
                            return fail(clause, vec![i, j], Interval { lo, hi: i.hi });
                        }
                    }
                }
                None
            }
        }
    }

    fn holds(&self, s: &IntervalSet, clause: Clause) -> bool {
        self.clause_failure(s, clause).is_none()
    }

    /// Decides every flag of the hierarchy by exhaustive clause checks.
    pub fn classify_set(&self, s: &IntervalSet) -> SetFlags {
        use Clause::*;
        let similarity = self.holds(s, Similarity);
        let abutting = self.holds(s, Abutting);
        let essential = self.holds(s, EssentialExtension);
        let meet = self.holds(s, Meet);
        let is_abstract = self.holds(s, Nonempty) && similarity;
        let is_basic = is_abstract && self.holds(s, Subinterval);
        let is_congruence = is_basic && abutting;
        let is_predivision = is_basic && self.holds(s, Join);
        let is_division = is_congruence && is_predivision;
        let is_free =
            similarity && self.holds(s, LowerSubinterval) && abutting && essential && meet;
        let is_stable = is_division && essential;
        SetFlags {
            is_abstract,
            is_basic,
            is_congruence,
            is_predivision,
            is_division,
            is_free,
            is_stable,
            is_ddf: is_stable && meet,
        }
    }

    /// First broken division-set clause.
    pub fn division_failure(&self, s: &IntervalSet) -> Option<ClauseFailure> {
        use Clause::*;
        [Nonempty, Similarity, Subinterval, Abutting, Join]
            .into_iter()
            .find_map(|c| self.clause_failure(s, c))
    }

    /// First broken clause among those characterising the free sets of
    /// nuclei: similarity, lower subintervals, essential extensions, meets.
    pub fn free_failure(&self, s: &IntervalSet) -> Option<ClauseFailure> {
        use Clause::*;
        [Similarity, LowerSubinterval, EssentialExtension, Meet]
            .into_iter()
            .find_map(|c| self.clause_failure(s, c))
    }

    /// Least division set containing `seed`: closes under similarity,
    /// subintervals, abutting pairs and binary joins until nothing changes.
    pub fn division_closure(&self, seed: &IntervalSet) -> IntervalSet {
        let mut s = seed.union(&IntervalSet::trivial(self));
        let all = self.intervals().all();
        loop {
            let mut changed = false;
            let members: Vec<Interval> = s.iter(self).collect();
            for &i in &members {
                for x in self.between(i.lo, i.hi) {
                    for y in self.between(x, i.hi) {
                        changed |= s.insert(self, Interval { lo: x, hi: y });
                    }
                }
                for &j in all {
                    if self.are_similar(i, j) {
                        changed |= s.insert(self, j);
                    }
                }
            }
            let members: Vec<Interval> = s.iter(self).collect();
            for &i in &members {
                for &j in &members {
                    if j.lo == i.hi {
                        changed |= s.insert(self, Interval { lo: i.lo, hi: j.hi });
                    }
                    if j.lo == i.lo {
                        let hi = self.join(i.hi, j.hi);
                        changed |= s.insert(self, Interval { lo: i.lo, hi });
                    }
                }
            }
            if !changed {
                return s;
            }
        }
    }

    /// The free set of the nucleus `a ↦ ⋀{x ∈ tops : a ≤ x}`.
    pub fn free_set_from_tops(&self, tops: &[Elem]) -> Result<IntervalSet> {
        if !tops.contains(&self.top()) {
            return Err(Error::MissingTop);
        }
        let table = self
            .elements()
            .map(|a| self.meet_all(tops.iter().copied().filter(|&x| self.leq(a, x))))
            .collect();
        let j = Nucleus::new(self, table).map_err(|e| match e {
            Error::NotANucleus(msg) => Error::NotAFreeSeed(msg),
            other => other,
        })?;
        Ok(j.fset(self))
    }

    /// The nonsingular intervals: `[a,b]` such that no `[a,x]` with
    /// `x ≤ b` is similar to a nontrivial `[c,d]` with `c` essential in
    /// `[0,d]`.
    pub fn nonsingular_intervals(&self) -> IntervalSet {
        let bottom = self.bottom();
        let singular: Vec<Interval> = self
            .intervals()
            .nontrivial()
            .filter(|iv| self.essential_in(iv.lo, bottom, iv.hi))
            .collect();
        let tainted = IntervalSet::from_fn(self, |&iv| {
            singular.iter().any(|&s| self.are_similar(iv, s))
        });
        IntervalSet::from_fn(self, |iv| {
            self.between(iv.lo, iv.hi)
                .all(|x| !tainted.has(self, iv.lo, x))
        })
    }
}
