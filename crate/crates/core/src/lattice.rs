//! Finite bounded lattices stored as dense order, meet and join tables.
//!
//! Elements are the integers `0..size`. Labels only matter for parsing and
//! printing. Every [`Lattice`] value is a genuine bounded lattice: the
//! constructors reject anything else.
//!
//! Upper continuity is never checked. In a finite lattice every directed set
//! has a greatest element, so a finite modular lattice is already an idiom.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::IntervalIndex;

/// An element of a [`Lattice`], identified by its index.
pub type Elem = usize;

#[derive(Clone, Debug)]
pub struct Lattice {
    name: String,
    labels: Vec<String>,
    by_label: HashMap<String, Elem>,
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
    intervals: IntervalIndex,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.leq == other.leq
    }
}

impl Eq for Lattice {}

/// A witness that a lattice law fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// `a ≤ b` but `(a ∨ c) ∧ b ≠ a ∨ (c ∧ b)`.
    Modular { a: Elem, b: Elem, c: Elem },
    /// `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`.
    Distributive { a: Elem, b: Elem, c: Elem },
    /// `x` has no complement in the whole lattice.
    Uncomplemented { x: Elem },
}

impl Violation {
    /// The witness with element labels.
    pub fn describe(&self, l: &Lattice) -> String {
        let n = |x: Elem| l.label(x);
        match *self {
            Violation::Modular { a, b, c } => {
                format!("modular law fails at a={}, b={}, c={}", n(a), n(b), n(c))
            }
            Violation::Distributive { a, b, c } => {
                format!(
                    "distributive law fails at a={}, b={}, c={}",
                    n(a),
                    n(b),
                    n(c)
                )
            }
            Violation::Uncomplemented { x } => format!("{} has no complement", n(x)),
        }
    }
}

/// Which of the idiom and frame laws a lattice satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdiomReport {
    pub is_lattice: bool,
    pub is_modular: bool,
    pub is_distributive: bool,
    pub is_boolean: bool,
    /// The first failing law, present exactly when some flag is false.
    pub first_violation: Option<Violation>,
}

impl Lattice {
    /// Builds a lattice from its Hasse diagram.
    ///
    /// `covers` lists pairs `(lower, upper)`; the order is their
    /// reflexive-transitive closure.
    pub fn from_covers<S, T>(name: &str, labels: &[S], covers: &[(T, T)]) -> Result<Lattice>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut by_label = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if by_label.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (lo, hi) in covers {
            let lo = *by_label
                .get(lo.as_ref())
                .ok_or_else(|| Error::UnknownLabel(lo.as_ref().to_string()))?;
            let hi = *by_label
                .get(hi.as_ref())
                .ok_or_else(|| Error::UnknownLabel(hi.as_ref().to_string()))?;
            if lo == hi {
                return Err(Error::CyclicCovers(labels[lo].clone()));
            }
            leq[lo * n + hi] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::CyclicCovers(labels[i].clone()));
                }
            }
        }
        Lattice::from_order(name, labels, leq)
    }

    /// Builds a lattice from a full order table (`leq[x * n + y]` iff `x ≤ y`).
    ///
    /// The table must already be a partial order; meets and joins are derived.
    pub fn from_order(name: &str, labels: Vec<String>, leq: Vec<bool>) -> Result<Lattice> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        assert_eq!(leq.len(), n * n, "order table has the wrong shape");
        let mut by_label = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if by_label.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let le = |x: usize, y: usize| leq[x * n + y];

        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let glb = (0..n)
                    .filter(|&z| le(z, x) && le(z, y))
                    .find(|&z| (0..n).all(|w| !(le(w, x) && le(w, y)) || le(w, z)))
                    .ok_or_else(|| {
                        Error::NotALattice(labels[x].clone(), labels[y].clone(), "meet")
                    })?;
                let lub = (0..n)
                    .filter(|&z| le(x, z) && le(y, z))
                    .find(|&z| (0..n).all(|w| !(le(x, w) && le(y, w)) || le(z, w)))
                    .ok_or_else(|| {
                        Error::NotALattice(labels[x].clone(), labels[y].clone(), "join")
                    })?;
                meet[x * n + y] = glb;
                meet[y * n + x] = glb;
                join[x * n + y] = lub;
                join[y * n + x] = lub;
            }
        }
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| le(b, x)))
            .ok_or(Error::NoBoundedBottom)?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| le(x, t)))
            .ok_or(Error::NoBoundedTop)?;
        let intervals = IntervalIndex::build(n, &leq);
        Ok(Lattice {
            name: name.to_string(),
            labels,
            by_label,
            leq,
            meet,
            join,
            bottom,
            top,
            intervals,
        })
    }

    /// The `n`-element chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Lattice {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let covers: Vec<(String, String)> = (1..n)
            .map(|i| ((i - 1).to_string(), i.to_string()))
            .collect();
        Lattice::from_covers(&format!("chain{n}"), &labels, &covers).expect("chains are lattices")
    }

    /// The Boolean algebra of subsets of `atoms` letters (`0`, `a`, `b`, `ab`, …).
    pub fn boolean(atoms: usize) -> Lattice {
        assert!(atoms <= 6, "boolean cube too large");
        let label = |mask: usize| -> String {
            if mask == 0 {
                return "0".to_string();
            }
            (0..atoms)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| (b'a' + i as u8) as char)
                .collect()
        };
        let n = 1 << atoms;
        let labels: Vec<String> = (0..n).map(label).collect();
        let leq = (0..n * n)
            .map(|k| {
                let (x, y) = (k / n, k % n);
                x & !y == 0
            })
            .collect();
        Lattice::from_order(&format!("bool{atoms}"), labels, leq)
            .expect("subset lattices are lattices")
    }

    /// Cartesian product with the componentwise order. Labels read `(x,y)`.
    pub fn product(&self, other: &Lattice) -> Lattice {
        let (n, m) = (self.size(), other.size());
        let labels = (0..n * m)
            .map(|k| format!("({},{})", self.labels[k / m], other.labels[k % m]))
            .collect();
        let leq = (0..n * m * n * m)
            .map(|k| {
                let (p, q) = (k / (n * m), k % (n * m));
                self.leq(p / m, q / m) && other.leq(p % m, q % m)
            })
            .collect();
        Lattice::from_order(&format!("{}x{}", self.name, other.name), labels, leq)
            .expect("products of lattices are lattices")
    }

    /// The order dual: order reversed, meet and join swapped.
    pub fn dual(&self) -> Lattice {
        let n = self.size();
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = self.leq(y, x);
            }
        }
        let name = match self.name.strip_suffix("_op") {
            Some(base) => base.to_string(),
            None => format!("{}_op", self.name),
        };
        Lattice::from_order(&name, self.labels.clone(), leq)
            .expect("the dual of a lattice is a lattice")
    }

    /// Same lattice under a different name.
    pub fn renamed(mut self, name: &str) -> Lattice {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    /// Looks an element up by label.
    pub fn elem(&self, label: &str) -> Result<Elem> {
        self.by_label
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.size() + y]
    }

    #[inline]
    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.size() + y]
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.size() + y]
    }

    /// `⋀xs`; the empty meet is the top.
    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// `⋁xs`; the empty join is the bottom.
    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Elements of `[a,b]` in index order.
    pub fn between(&self, a: Elem, b: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.elements()
            .filter(move |&x| self.leq(a, x) && self.leq(x, b))
    }

    /// `y` covers `x`: `x < y` with nothing strictly between.
    pub fn covers(&self, x: Elem, y: Elem) -> bool {
        self.lt(x, y) && self.elements().all(|z| !(self.lt(x, z) && self.lt(z, y)))
    }

    /// The Hasse diagram as `(lower, upper)` pairs, sorted by index.
    pub fn cover_pairs(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for y in self.elements() {
                if self.covers(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn atoms(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&x| self.covers(self.bottom, x))
            .collect()
    }

    /// The interval index over all comparable pairs.
    pub fn intervals(&self) -> &IntervalIndex {
        &self.intervals
    }

    /// Checks the modular, distributive and Boolean laws exhaustively.
    pub fn validate_idiom(&self) -> IdiomReport {
        let mut modular = None;
        let mut distributive = None;
        'outer: for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    if modular.is_none()
                        && self.leq(a, b)
                        && self.meet(self.join(a, c), b) != self.join(a, self.meet(c, b))
                    {
                        modular = Some(Violation::Modular { a, b, c });
                    }
                    if distributive.is_none()
                        && self.meet(a, self.join(b, c))
                            != self.join(self.meet(a, b), self.meet(a, c))
                    {
                        distributive = Some(Violation::Distributive { a, b, c });
                    }
                    if modular.is_some() {
                        break 'outer;
                    }
                }
            }
        }
        let is_modular = modular.is_none();
        let is_distributive = is_modular && distributive.is_none();
        let uncomplemented = self
            .elements()
            .find(|&x| self.complements_of(x, self.bottom, self.top).is_empty())
            .map(|x| Violation::Uncomplemented { x });
        let is_boolean = is_distributive && uncomplemented.is_none();
        let first_violation = modular.or(distributive).or(if is_distributive {
            uncomplemented
        } else {
            None
        });
        IdiomReport {
            is_lattice: true,
            is_modular,
            is_distributive,
            is_boolean,
            first_violation,
        }
    }

    pub fn is_modular(&self) -> bool {
        self.validate_idiom().is_modular
    }

    pub fn is_distributive(&self) -> bool {
        self.validate_idiom().is_distributive
    }

    pub(crate) fn interval_error(&self, lo: Elem, hi: Elem) -> Error {
        Error::NotAnInterval {
            lo: self.label(lo).to_string(),
            hi: self.label(hi).to_string(),
        }
    }

    pub(crate) fn check_in(&self, x: Elem, a: Elem, b: Elem) -> Result<()> {
        if !self.leq(a, b) {
            return Err(self.interval_error(a, b));
        }
        if self.leq(a, x) && self.leq(x, b) {
            Ok(())
        } else {
            Err(Error::OutOfInterval {
                x: self.label(x).to_string(),
                lo: self.label(a).to_string(),
                hi: self.label(b).to_string(),
            })
        }
    }
}
