//! Quotient idioms `A_j`, intervals of quotients, saturated elements and the
//! j-relative notions of essentiality, pseudocomplement and cocriticality.
//!
//! Elements of the quotient lattice are numbered in host order of the fixed
//! points; [`QuotientIdiom::to_host`] and [`QuotientIdiom::to_quotient`]
//! translate.

use crate::assembly::AssemblyFrame;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::interval_set::IntervalSet;
use crate::lattice::{Elem, Lattice};
use crate::nucleus::Nucleus;

/// The fixed points of `j` with the host meet and the join `j(x ∨ y)`.
#[derive(Clone, Debug)]
pub struct QuotientIdiom {
    host: Lattice,
    j: Nucleus,
    fixed: Vec<Elem>,
    index: Vec<Option<Elem>>,
    lattice: Lattice,
}

impl QuotientIdiom {
    pub fn new(host: &Lattice, j: &Nucleus) -> QuotientIdiom {
        let fixed = j.fixed_points();
        let mut index = vec![None; host.size()];
        for (q, &x) in fixed.iter().enumerate() {
            index[x] = Some(q);
        }
        let labels = fixed.iter().map(|&x| host.label(x).to_string()).collect();
        let leq = fixed
            .iter()
            .flat_map(|&x| fixed.iter().map(move |&y| (x, y)))
            .map(|(x, y)| host.leq(x, y))
            .collect();
        let lattice = Lattice::from_order(&format!("{}_j", host.name()), labels, leq)
            .expect("fixed sets of nuclei are lattices");
        QuotientIdiom {
            host: host.clone(),
            j: j.clone(),
            fixed,
            index,
            lattice,
        }
    }

    pub fn host(&self) -> &Lattice {
        &self.host
    }

    pub fn nucleus(&self) -> &Nucleus {
        &self.j
    }

    /// Fixed points in host numbering.
    pub fn fixed(&self) -> &[Elem] {
        &self.fixed
    }

    /// `A_j` as a lattice in its own right.
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn to_host(&self, q: Elem) -> Elem {
        self.fixed[q]
    }

    /// Quotient index of a fixed host element.
    pub fn to_quotient(&self, x: Elem) -> Option<Elem> {
        self.index[x]
    }

    /// `x ↦ j(x)` as a quotient element.
    pub fn project(&self, x: Elem) -> Elem {
        self.index[self.j.apply(x)].expect("images are fixed")
    }

    /// Join in `A_j` computed from the host, `j(x ∨ y)`.
    pub fn join_via_host(&self, x: Elem, y: Elem) -> Elem {
        self.j.apply(self.host.join(x, y))
    }

    /// `Q_j([a,b]) = [j(a), j(b)]` in `A_j`.
    pub fn interval_of_quotients(&self, iv: Interval) -> Interval {
        Interval {
            lo: self.project(iv.lo),
            hi: self.project(iv.hi),
        }
    }

    /// Reads a quotient interval as a host interval.
    pub fn u_j(&self, q: Interval) -> Interval {
        Interval {
            lo: self.to_host(q.lo),
            hi: self.to_host(q.hi),
        }
    }

    /// `x ∈ [a,b]` with `[x,b] ∈ F_j`, i.e. `j(x) ∧ b = x`.
    pub fn saturated_elements(&self, iv: Interval) -> Vec<Elem> {
        self.host
            .between(iv.lo, iv.hi)
            .filter(|&x| self.host.meet(self.j.apply(x), iv.hi) == x)
            .collect()
    }

    /// `j(x)` is essential in `Q_j([a,b])`.
    pub fn is_j_essential(&self, x: Elem, iv: Interval) -> Result<bool> {
        self.host.check_in(x, iv.lo, iv.hi)?;
        Ok(self.j_essential_clauses(x, iv)[2])
    }

    /// The five equivalent forms of j-essentiality, in order:
    /// (1) `c ∈ [a,b]`, `x ∧ c ≤ j(a)` ⇒ `c ≤ j(a)`;
    /// (2) `j(x) ∧ b` satisfies (1);
    /// (3) `j(x)` essential in `[j(a), j(b)]` inside `A_j`;
    /// (4) `x ∨ (j(a) ∧ b)` essential in `[j(a) ∧ b, b]`;
    /// (5) `j(x) ∧ b` essential in `[j(a) ∧ b, b]`.
    pub fn j_essential_clauses(&self, x: Elem, iv: Interval) -> [bool; 5] {
        let (l, j) = (&self.host, &self.j);
        let (a, b) = (iv.lo, iv.hi);
        let ja = j.apply(a);
        let host_form = |y: Elem| {
            l.between(a, b)
                .all(|c| !l.leq(l.meet(y, c), ja) || l.leq(c, ja))
        };
        let jxb = l.meet(j.apply(x), b);
        let q = self.interval_of_quotients(iv);
        let ql = &self.lattice;
        let low = l.meet(ja, b);
        [
            host_form(x),
            host_form(jxb),
            ql.essential_in(self.project(x), q.lo, q.hi),
            l.essential_in(l.join(x, low), low, b),
            l.essential_in(jxb, low, b),
        ]
    }

    /// Maximal `d ∈ [a,b]` with `[a, c ∧ d] ∈ D_j`.
    pub fn j_pseudocomplements(&self, c: Elem, iv: Interval) -> Result<Vec<Elem>> {
        let (l, j) = (&self.host, &self.j);
        l.check_in(c, iv.lo, iv.hi)?;
        let ja = j.apply(iv.lo);
        let ok: Vec<Elem> = l
            .between(iv.lo, iv.hi)
            .filter(|&d| l.leq(l.meet(c, d), ja))
            .collect();
        let out: Vec<Elem> = ok
            .iter()
            .copied()
            .filter(|&d| !ok.iter().any(|&e| l.lt(d, e)))
            .collect();
        for &d in &out {
            if l.meet(j.apply(d), iv.hi) != d {
                return Err(Error::InternalDisagreement(format!(
                    "j-pseudocomplement `{}` is not saturated",
                    l.label(d)
                )));
            }
        }
        Ok(out)
    }

    /// Every `x` in the interval is its lower end or `[x,b] ∈ D_j`.
    pub fn is_j_cocritical(&self, iv: Interval) -> bool {
        self.host
            .between(iv.lo, iv.hi)
            .all(|x| x == iv.lo || self.host.leq(iv.hi, self.j.apply(x)))
    }

    /// A family of atoms of `A_j`, each meeting the join of the earlier ones
    /// in the bottom, taken greedily in index order.
    pub fn atom_family(&self) -> Vec<Elem> {
        let ql = &self.lattice;
        let mut family = Vec::new();
        let mut acc = ql.bottom();
        for p in ql.atoms() {
            if ql.meet(p, acc) == ql.bottom() {
                family.push(p);
                acc = ql.join(acc, p);
            }
        }
        family
    }

    /// An independent family of atoms joins to the top. True for a one-point
    /// quotient, where the empty join is already the top.
    pub fn is_semisimple_finite(&self) -> bool {
        let ql = &self.lattice;
        ql.join_all(self.atom_family()) == ql.top()
    }
}

/// Uniform dimension of `A` against the semisimple structure of `A_ζ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SemisimpleReport {
    pub uniform_dimension: usize,
    pub semisimple: bool,
    pub atom_family_size: usize,
}

impl SemisimpleReport {
    /// Finite uniform dimension (always) against a semisimple finite `A_ζ`
    /// with as many atoms in the decomposition.
    pub fn holds(&self) -> bool {
        self.semisimple && self.uniform_dimension == self.atom_family_size
    }
}

pub fn check_ssid(l: &Lattice, zeta: &Nucleus) -> SemisimpleReport {
    let q = QuotientIdiom::new(l, zeta);
    SemisimpleReport {
        uniform_dimension: l.uniform_dimension(),
        semisimple: q.is_semisimple_finite(),
        atom_family_size: q.atom_family().len(),
    }
}

/// `U_j Q_j(I(A))`: the host intervals `[j(a), j(b)]`.
pub fn uq_image(l: &Lattice, j: &Nucleus) -> IntervalSet {
    IntervalSet::from_intervals(
        l,
        l.intervals().all().iter().map(|iv| Interval {
            lo: j.apply(iv.lo),
            hi: j.apply(iv.hi),
        }),
    )
}

/// `a ↦ ¬¬a` with `¬x = ⋁{y : y ∧ x = 0}`, on a distributive lattice.
pub fn double_negation(l: &Lattice) -> Result<Nucleus> {
    if !l.is_distributive() {
        return Err(Error::NotApplicable(format!(
            "`{}` is not distributive",
            l.name()
        )));
    }
    let neg = |x: Elem| l.join_all(l.elements().filter(|&y| l.meet(x, y) == l.bottom()));
    Nucleus::new(l, l.elements().map(|x| neg(neg(x))).collect())
}

/// The Boolean-algebra checks on the intervals of quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanQuotientReport {
    pub is_boolean: bool,
    /// On a Boolean lattice, the first nucleus `j` and member of `F_j` outside
    /// `U_j Q_j(I(A))`. `None` when the lattice is not Boolean or no such
    /// pair exists.
    pub uq_counterexample: Option<(Nucleus, Interval)>,
    /// `U_j Q_j(I(A)) ⊆ F_j` for every nucleus.
    pub uq_inside_fset: bool,
    /// Whether `U Q(I(A)) = F` for the double negation nucleus.
    pub negneg_equality: bool,
    /// A member of `F_¬¬` outside `U Q(I(A))`, when there is one.
    pub witness: Option<Interval>,
}

impl BooleanQuotientReport {
    /// Boolean iff the ¬¬ equality holds.
    pub fn characterisation_holds(&self) -> bool {
        self.is_boolean == self.negneg_equality
    }

    /// On a Boolean lattice, `U_j Q_j(I(A)) = F_j` for every nucleus.
    pub fn equality_for_all_nuclei(&self) -> Option<bool> {
        self.is_boolean.then_some(self.uq_counterexample.is_none())
    }
}

pub fn boolean_quotient_checks(frame: &AssemblyFrame) -> Result<BooleanQuotientReport> {
    let l = frame.host();
    let nn = double_negation(l)?;
    let is_boolean = l.validate_idiom().is_boolean;
    let uq = uq_image(l, &nn);
    let f = nn.fset(l);
    let witness = f.iter(l).find(|iv| !uq.contains(l, *iv));
    let uq_counterexample = if is_boolean {
        frame.nuclei().iter().find_map(|j| {
            let uq = uq_image(l, j);
            j.fset(l)
                .iter(l)
                .find(|iv| !uq.contains(l, *iv))
                .map(|iv| (j.clone(), iv))
        })
    } else {
        None
    };
    let uq_inside_fset = frame
        .nuclei()
        .iter()
        .all(|j| uq_image(l, j).is_subset(&j.fset(l)));
    Ok(BooleanQuotientReport {
        is_boolean,
        uq_counterexample,
        uq_inside_fset,
        negneg_equality: uq == f,
        witness,
    })
}
