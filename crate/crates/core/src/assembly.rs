//! The assembly `N(A)`: every nucleus on a finite lattice, ordered
//! pointwise, together with the operations that need the whole family
//! (χ, ξ, joins by the χ-formula, Heyting negation).
//!
//! A nucleus is determined by its fixed set, which is meet-closed and
//! contains the top. Enumeration runs over those subsets and keeps the
//! closures that preserve binary meets.

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::interval_set::IntervalSet;
use crate::lattice::{Elem, Lattice};
use crate::nucleus::{self, Nucleus};

/// Largest lattice accepted by default.
pub const DEFAULT_CAP: usize = 14;

/// Above this size the subset search is refused whatever cap is asked for.
pub const HARD_CAP: usize = 24;

/// How [`AssemblyFrame::join`] computes a join.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum JoinMethod {
    /// `⋀{χ(a,1) : a fixed by every member}`.
    #[default]
    ChiFormula,
    /// Idempotent closure of the pointwise supremum.
    Iterative,
}

/// All nuclei on a host lattice.
#[derive(Clone, Debug)]
pub struct AssemblyFrame {
    host: Lattice,
    nuclei: Vec<Nucleus>,
    order: Vec<bool>,
    /// `chi[i]` indexes the nucleus `χ(a,b)` for the `i`-th interval.
    chi: Vec<usize>,
}

/// Every nucleus on `l`, in lexicographic order of tables.
pub fn enumerate_nuclei(l: &Lattice) -> Result<Vec<Nucleus>> {
    enumerate_nuclei_with_cap(l, DEFAULT_CAP)
}

pub fn enumerate_nuclei_with_cap(l: &Lattice, cap: usize) -> Result<Vec<Nucleus>> {
    let cap = cap.min(HARD_CAP);
    if l.size() > cap {
        return Err(Error::SizeCapExceeded {
            size: l.size(),
            cap,
        });
    }
    let others: Vec<Elem> = l.elements().filter(|&x| x != l.top()).collect();
    let mut out = Vec::new();
    let mut member = vec![false; l.size()];
    for mask in 0u32..(1u32 << others.len()) {
        member.iter_mut().for_each(|m| *m = false);
        member[l.top()] = true;
        for (k, &x) in others.iter().enumerate() {
            if mask & (1 << k) != 0 {
                member[x] = true;
            }
        }
        let fixed: Vec<Elem> = l.elements().filter(|&x| member[x]).collect();
        let meet_closed = fixed
            .iter()
            .all(|&x| fixed.iter().all(|&y| member[l.meet(x, y)]));
        if !meet_closed {
            continue;
        }
        if let Ok(j) = Nucleus::from_fixed(l, &fixed) {
            out.push(j);
        }
    }
    out.sort();
    Ok(out)
}

impl AssemblyFrame {
    /// Enumerates `N(A)` under the default size cap.
    pub fn new(l: &Lattice) -> Result<AssemblyFrame> {
        AssemblyFrame::with_cap(l, DEFAULT_CAP)
    }

    pub fn with_cap(l: &Lattice, cap: usize) -> Result<AssemblyFrame> {
        let nuclei = enumerate_nuclei_with_cap(l, cap)?;
        let m = nuclei.len();
        let mut order = vec![false; m * m];
        for (i, j) in nuclei.iter().enumerate() {
            for (k, h) in nuclei.iter().enumerate() {
                order[i * m + k] = j.leq(l, h);
            }
        }
        let mut frame = AssemblyFrame {
            host: l.clone(),
            nuclei,
            order,
            chi: Vec::new(),
        };
        frame.chi = l
            .intervals()
            .all()
            .iter()
            .map(|&iv| frame.compute_chi(iv))
            .collect::<Result<_>>()?;
        Ok(frame)
    }

    /// Pointwise join of every nucleus `j` with `j(a) ∧ b = a`, checked to be
    /// one of them.
    fn compute_chi(&self, iv: Interval) -> Result<usize> {
        let l = &self.host;
        let members: Vec<Nucleus> = self
            .nuclei
            .iter()
            .filter(|j| l.meet(j.apply(iv.lo), iv.hi) == iv.lo)
            .cloned()
            .collect();
        let sup = nucleus::pointwise_sup(l, &members);
        let found = self.nuclei.binary_search(&Nucleus::new_unchecked(sup));
        match found {
            Ok(i) if l.meet(self.nuclei[i].apply(iv.lo), iv.hi) == iv.lo => Ok(i),
            _ => Err(Error::InternalDisagreement(format!(
                "no largest nucleus j with j({0})∧{1} = {0}",
                l.label(iv.lo),
                l.label(iv.hi)
            ))),
        }
    }

    pub fn host(&self) -> &Lattice {
        &self.host
    }

    pub fn nuclei(&self) -> &[Nucleus] {
        &self.nuclei
    }

    pub fn len(&self) -> usize {
        self.nuclei.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nuclei.is_empty()
    }

    pub fn index_of(&self, j: &Nucleus) -> Option<usize> {
        self.nuclei.binary_search(j).ok()
    }

    /// Pointwise order between the `i`-th and `k`-th nuclei.
    pub fn leq(&self, i: usize, k: usize) -> bool {
        self.order[i * self.len() + k]
    }

    pub fn identity(&self) -> Nucleus {
        Nucleus::identity(&self.host)
    }

    pub fn top(&self) -> Nucleus {
        Nucleus::top(&self.host)
    }

    /// `N(A)` as a lattice. Each nucleus is labelled by its fixed set,
    /// e.g. `{0,S,T,U,R}`.
    pub fn as_lattice(&self) -> Lattice {
        let labels = self
            .nuclei
            .iter()
            .map(|j| {
                let fixed: Vec<&str> = j
                    .fixed_points()
                    .iter()
                    .map(|&x| self.host.label(x))
                    .collect();
                format!("{{{}}}", fixed.join(","))
            })
            .collect();
        Lattice::from_order(
            &format!("N({})", self.host.name()),
            labels,
            self.order.clone(),
        )
        .expect("the assembly is a lattice")
    }

    /// `χ(a,b)`, the largest nucleus with `j(a) ∧ b = a`.
    pub fn chi(&self, a: Elem, b: Elem) -> Result<&Nucleus> {
        let i = self
            .host
            .intervals()
            .index(a, b)
            .ok_or_else(|| self.host.interval_error(a, b))?;
        Ok(&self.nuclei[self.chi[i]])
    }

    pub fn chi_of(&self, iv: Interval) -> &Nucleus {
        &self.nuclei[self.chi[self.host.intervals().index_of(iv)]]
    }

    /// `ξ(C)`: the meet of all nuclei collapsing every interval of `seed`.
    pub fn xi(&self, seed: &IntervalSet) -> Nucleus {
        let l = &self.host;
        let collapsing: Vec<Nucleus> = self
            .nuclei
            .iter()
            .filter(|j| seed.iter(l).all(|iv| l.leq(iv.hi, j.apply(iv.lo))))
            .cloned()
            .collect();
        nucleus::nucleus_meet(l, &collapsing)
    }

    /// `ξ(a,b)` for a single interval.
    pub fn xi_interval(&self, a: Elem, b: Elem) -> Result<Nucleus> {
        let iv = Interval::new(&self.host, a, b)?;
        Ok(self.xi(&IntervalSet::from_intervals(&self.host, [iv])))
    }

    /// Pointwise meet; the empty family gives the top nucleus.
    pub fn meet(&self, js: &[Nucleus]) -> Nucleus {
        nucleus::nucleus_meet(&self.host, js)
    }

    /// Join in `N(A)`; the empty family gives the identity.
    pub fn join(&self, js: &[Nucleus], method: JoinMethod) -> Nucleus {
        let l = &self.host;
        match method {
            JoinMethod::Iterative => nucleus::nucleus_join_iterative(l, js),
            JoinMethod::ChiFormula => {
                let common = l.elements().filter(|&a| js.iter().all(|j| j.apply(a) == a));
                let chis: Vec<Nucleus> = common
                    .map(|a| self.chi_of(Interval { lo: a, hi: l.top() }).clone())
                    .collect();
                nucleus::nucleus_meet(l, &chis)
            }
        }
    }

    /// `¬j`, the largest `k` with `k ∧ j` the identity.
    pub fn heyting_negation(&self, j: &Nucleus) -> Nucleus {
        let id = self.identity();
        let disjoint: Vec<Nucleus> = self
            .nuclei
            .iter()
            .filter(|k| self.meet(&[(*k).clone(), j.clone()]) == id)
            .cloned()
            .collect();
        let neg = self.join(&disjoint, JoinMethod::ChiFormula);
        debug_assert!(disjoint.contains(&neg));
        neg
    }

    /// `⋀{χ(a,1) : [a,1] ∈ F}` for a free set `F`.
    pub fn nucleus_from_fset(&self, f: &IntervalSet) -> Result<Nucleus> {
        let l = &self.host;
        if let Some(fl) = l.free_failure(f) {
            return Err(Error::NotAFreeSet(fl.describe(l)));
        }
        let chis: Vec<Nucleus> = l
            .elements()
            .filter(|&a| f.has(l, a, l.top()))
            .map(|a| self.chi_of(Interval { lo: a, hi: l.top() }).clone())
            .collect();
        Ok(nucleus::nucleus_meet(l, &chis))
    }
}
