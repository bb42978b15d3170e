//! Intervals `[lo,hi]`, their dense index, and the similarity relation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lattice::{Elem, Lattice};

/// A pair `lo ≤ hi` of elements of some lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Elem,
    pub hi: Elem,
}

impl Interval {
    /// Checked constructor.
    pub fn new(l: &Lattice, lo: Elem, hi: Elem) -> Result<Interval> {
        if l.leq(lo, hi) {
            Ok(Interval { lo, hi })
        } else {
            Err(l.interval_error(lo, hi))
        }
    }

    /// Looks both ends up by label.
    pub fn parse(l: &Lattice, lo: &str, hi: &str) -> Result<Interval> {
        Interval::new(l, l.elem(lo)?, l.elem(hi)?)
    }

    pub fn is_trivial(&self) -> bool {
        self.lo == self.hi
    }

    /// `self ⊆ other`.
    pub fn is_subinterval_of(&self, l: &Lattice, other: &Interval) -> bool {
        l.leq(other.lo, self.lo) && l.leq(self.hi, other.hi)
    }

    pub fn display<'a>(&self, l: &'a Lattice) -> IntervalDisplay<'a> {
        IntervalDisplay { l, iv: *self }
    }
}

/// Prints an interval as `[lo_label,hi_label]`.
pub struct IntervalDisplay<'a> {
    l: &'a Lattice,
    iv: Interval,
}

impl fmt::Display for IntervalDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{}]",
            self.l.label(self.iv.lo),
            self.l.label(self.iv.hi)
        )
    }
}

/// Dense numbering of the intervals of a lattice, lexicographic by
/// `(lo, hi)` index, trivial intervals included.
#[derive(Clone, Debug)]
pub struct IntervalIndex {
    size: usize,
    list: Vec<Interval>,
    pos: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl IntervalIndex {
    pub(crate) fn build(n: usize, leq: &[bool]) -> IntervalIndex {
        let mut list = Vec::new();
        let mut pos = vec![NONE; n * n];
        for lo in 0..n {
            for hi in 0..n {
                if leq[lo * n + hi] {
                    pos[lo * n + hi] = list.len() as u32;
                    list.push(Interval { lo, hi });
                }
            }
        }
        IntervalIndex { size: n, list, pos }
    }

    /// Number of intervals (comparable pairs).
    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn all(&self) -> &[Interval] {
        &self.list
    }

    pub fn get(&self, i: usize) -> Interval {
        self.list[i]
    }

    /// Index of `[lo,hi]`, or `None` when `lo ≰ hi`.
    pub fn index(&self, lo: Elem, hi: Elem) -> Option<usize> {
        match self.pos[lo * self.size + hi] {
            NONE => None,
            p => Some(p as usize),
        }
    }

    pub fn index_of(&self, iv: Interval) -> usize {
        self.index(iv.lo, iv.hi)
            .expect("interval belongs to this lattice")
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = Interval> + '_ {
        self.list.iter().copied().filter(|iv| !iv.is_trivial())
    }
}

impl Lattice {
    /// All intervals in index order.
    pub fn enumerate_intervals(&self) -> Vec<Interval> {
        self.intervals().all().to_vec()
    }

    /// Similarity: `{I, J} = {[l, l∨r], [l∧r, r]}` for some `l, r`.
    ///
    /// Decided directly: with `I = [l, l∨r]` the witnesses are forced to be
    /// `l = I.lo`, `r = J.hi`, and symmetrically.
    pub fn are_similar(&self, i: Interval, j: Interval) -> bool {
        (self.join(i.lo, j.hi) == i.hi && self.meet(i.lo, j.hi) == j.lo)
            || (self.join(j.lo, i.hi) == j.hi && self.meet(j.lo, i.hi) == i.lo)
    }

    /// Intervals similar to `i`, in index order.
    pub fn similar_to(&self, i: Interval) -> impl Iterator<Item = Interval> + '_ {
        self.intervals()
            .all()
            .iter()
            .copied()
            .filter(move |&j| self.are_similar(i, j))
    }

    /// Nontrivial with nothing strictly between the ends.
    pub fn is_simple(&self, i: Interval) -> bool {
        self.covers(i.lo, i.hi)
    }

    /// Every element of the interval has a complement inside it.
    pub fn is_complemented_interval(&self, i: Interval) -> bool {
        self.between(i.lo, i.hi)
            .all(|x| self.has_complement_in(x, i.lo, i.hi))
    }

    /// Every nontrivial subinterval contains a simple one. Always true for a
    /// finite lattice; kept as an executable check.
    pub fn is_weakly_atomic(&self, i: Interval) -> bool {
        self.between(i.lo, i.hi).all(|c| {
            self.between(c, i.hi).all(|d| {
                c == d
                    || self
                        .between(c, d)
                        .any(|x| self.between(x, d).any(|y| self.covers(x, y)))
            })
        })
    }
}
