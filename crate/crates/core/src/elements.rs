//! Element-level predicates: essential elements, (pseudo)complements,
//! meet-irreducibility, independence and uniform dimension, and the
//! lattice conditions C1 and CSP.

use crate::error::Result;
use crate::lattice::{Elem, Lattice};

impl Lattice {
    /// `x` is essential in `[a,b]`: for every `y` in `[a,b]`, `x ∧ y = a`
    /// forces `y = a`.
    pub fn is_essential(&self, x: Elem, a: Elem, b: Elem) -> Result<bool> {
        self.check_in(x, a, b)?;
        Ok(self.essential_in(x, a, b))
    }

    pub(crate) fn essential_in(&self, x: Elem, a: Elem, b: Elem) -> bool {
        self.between(a, b).all(|y| y == a || self.meet(x, y) != a)
    }

    /// Maximal `y` in `[a,b]` with `x ∧ y = a`.
    pub fn pseudocomplements(&self, x: Elem, a: Elem, b: Elem) -> Result<Vec<Elem>> {
        self.check_in(x, a, b)?;
        Ok(self.pseudocomplements_of(x, a, b))
    }

    pub(crate) fn pseudocomplements_of(&self, x: Elem, a: Elem, b: Elem) -> Vec<Elem> {
        let disjoint: Vec<Elem> = self
            .between(a, b)
            .filter(|&y| self.meet(x, y) == a)
            .collect();
        disjoint
            .iter()
            .copied()
            .filter(|&y| !disjoint.iter().any(|&z| self.lt(y, z)))
            .collect()
    }

    /// All `y` in `[a,b]` with `x ∧ y = a` and `x ∨ y = b`.
    pub fn complements(&self, x: Elem, a: Elem, b: Elem) -> Result<Vec<Elem>> {
        self.check_in(x, a, b)?;
        Ok(self.complements_of(x, a, b))
    }

    pub(crate) fn complements_of(&self, x: Elem, a: Elem, b: Elem) -> Vec<Elem> {
        self.between(a, b)
            .filter(|&y| self.meet(x, y) == a && self.join(x, y) == b)
            .collect()
    }

    pub(crate) fn has_complement_in(&self, x: Elem, a: Elem, b: Elem) -> bool {
        self.between(a, b)
            .any(|y| self.meet(x, y) == a && self.join(x, y) == b)
    }

    /// Elements with a complement in the whole lattice.
    pub fn complemented_elements(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&x| self.has_complement_in(x, self.bottom(), self.top()))
            .collect()
    }

    /// `x ∧ y ≤ a` implies `x ≤ a` or `y ≤ a`.
    pub fn is_meet_irreducible(&self, a: Elem) -> bool {
        self.elements().all(|x| {
            self.leq(x, a)
                || self
                    .elements()
                    .all(|y| self.leq(y, a) || !self.leq(self.meet(x, y), a))
        })
    }

    /// Independence over `base`: every member meets the join of the others
    /// in exactly `base`. Members must lie above `base`.
    pub fn is_independent_over(&self, base: Elem, family: &[Elem]) -> bool {
        family.iter().enumerate().all(|(k, &x)| {
            let rest = self.join_all(
                family
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != k)
                    .map(|(_, &y)| y),
            );
            self.meet(x, self.join(rest, base)) == base
        })
    }

    /// Largest independent family of nonbottom elements, found by
    /// depth-first search. Independence is inherited by subfamilies, so
    /// failing prefixes are pruned.
    pub fn max_independent_family(&self) -> Vec<Elem> {
        fn grow(l: &Lattice, start: Elem, family: &mut Vec<Elem>, best: &mut Vec<Elem>) {
            if family.len() > best.len() {
                *best = family.clone();
            }
            for x in start..l.size() {
                if x == l.bottom() {
                    continue;
                }
                family.push(x);
                if l.is_independent_over(l.bottom(), family) {
                    grow(l, x + 1, family, best);
                }
                family.pop();
            }
        }
        let mut best = Vec::new();
        grow(self, 0, &mut Vec::new(), &mut best);
        best
    }

    /// Uniform dimension. Always finite for a finite lattice.
    pub fn uniform_dimension(&self) -> usize {
        self.max_independent_family().len()
    }

    /// `[a,b]` is uniform: nontrivial, and any two elements above `a` meet
    /// above `a`.
    pub fn is_uniform(&self, a: Elem, b: Elem) -> bool {
        self.lt(a, b)
            && self
                .between(a, b)
                .all(|x| x == a || self.between(a, b).all(|y| y == a || self.meet(x, y) != a))
    }

    /// Meet of all elements essential in `[0,1]`.
    pub fn cbd0(&self) -> Elem {
        let (b, t) = (self.bottom(), self.top());
        self.meet_all(self.elements().filter(|&x| self.essential_in(x, b, t)))
    }

    /// Join of all atoms.
    pub fn soc0(&self) -> Elem {
        self.join_all(self.atoms())
    }

    /// C1 on the whole lattice.
    pub fn satisfies_c1(&self) -> bool {
        self.satisfies_c1_in(self.bottom(), self.top())
    }

    /// C1 for the interval `[a,b]` read as a lattice: each `x` lies
    /// essentially in `[a,c]` for some `c` complemented in `[a,b]`.
    pub fn satisfies_c1_in(&self, a: Elem, b: Elem) -> bool {
        self.between(a, b).all(|x| {
            self.between(x, b)
                .any(|c| self.essential_in(x, a, c) && self.has_complement_in(c, a, b))
        })
    }

    /// Complement supremum property. The finite form asks that joins of two
    /// complemented elements be complemented; the strong form asks it of
    /// every family, decided by closing the complemented elements under
    /// joins.
    pub fn satisfies_csp(&self, strong: bool) -> bool {
        let comp = self.complemented_elements();
        let is_comp = |x: Elem| comp.contains(&x);
        if !strong {
            return comp
                .iter()
                .all(|&x| comp.iter().all(|&y| is_comp(self.join(x, y))));
        }
        let mut closure = vec![false; self.size()];
        closure[self.bottom()] = true;
        for &c in &comp {
            closure[c] = true;
        }
        loop {
            let mut changed = false;
            for x in self.elements() {
                for y in self.elements() {
                    if closure[x] && closure[y] && !closure[self.join(x, y)] {
                        closure[self.join(x, y)] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        self.elements().all(|x| !closure[x] || is_comp(x))
    }
}
