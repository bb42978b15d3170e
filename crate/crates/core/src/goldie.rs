//! The Goldie nucleus ζ, the Goldman nucleus ξ_sp, stability and DDF sets.

use crate::assembly::AssemblyFrame;
use crate::error::{Error, Result};
use crate::interval_set::{Clause, IntervalSet};
use crate::lattice::{Elem, Lattice};
use crate::nucleus::{self, Nucleus};

/// ζ with its two sets and the lattice data read alongside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldieAnalysis {
    pub zeta: Nucleus,
    /// `{[a,b] : a essential in [0,b]}`.
    pub dset: IntervalSet,
    /// The nonsingular intervals.
    pub fset: IntervalSet,
    pub goldman: Nucleus,
    pub zeta_is_ddf: bool,
    pub cbd0: Elem,
    pub soc0: Elem,
    pub c1: bool,
    pub csp: bool,
}

/// Intervals `[a,b]` with `a` essential in `[0,b]`.
pub fn essential_intervals(l: &Lattice) -> IntervalSet {
    IntervalSet::from_fn(l, |iv| l.essential_in(iv.lo, l.bottom(), iv.hi))
}

/// ζ = χ(0,1). The free-set and division-set descriptions are computed too
/// and must give the same nucleus.
pub fn goldie_nucleus(frame: &AssemblyFrame) -> Result<GoldieAnalysis> {
    let l = frame.host();
    let zeta = frame.chi(l.bottom(), l.top())?.clone();
    let fset = l.nonsingular_intervals();
    let dset = essential_intervals(l);
    let by_fset = frame.nucleus_from_fset(&fset)?;
    let by_dset = nucleus::nucleus_from_dset(l, &dset)?;
    for (route, j) in [
        ("nonsingular intervals", &by_fset),
        ("essential intervals", &by_dset),
    ] {
        if *j != zeta {
            return Err(Error::InternalDisagreement(format!(
                "χ(0,1) is {} but the {route} give {}",
                zeta.display(l),
                j.display(l)
            )));
        }
    }
    Ok(GoldieAnalysis {
        goldman: goldman_nucleus(frame),
        zeta_is_ddf: is_ddf(l, &zeta),
        cbd0: l.cbd0(),
        soc0: l.soc0(),
        c1: l.satisfies_c1(),
        csp: l.satisfies_csp(true),
        zeta,
        dset,
        fset,
    })
}

/// ξ_sp, the least nucleus collapsing every nonsingular simple interval.
pub fn goldman_nucleus(frame: &AssemblyFrame) -> Nucleus {
    let l = frame.host();
    let g = l.nonsingular_intervals();
    let seed = IntervalSet::from_fn(l, |iv| l.is_simple(*iv) && g.contains(l, *iv));
    frame.xi(&seed)
}

/// `D_j` is closed under essential extensions.
pub fn is_stable(l: &Lattice, j: &Nucleus) -> bool {
    l.clause_failure(&j.dset(l), Clause::EssentialExtension)
        .is_none()
}

/// Stable, and `D_j` is closed under meets of lower ends.
pub fn is_ddf(l: &Lattice, j: &Nucleus) -> bool {
    is_stable(l, j) && l.clause_failure(&j.dset(l), Clause::Meet).is_none()
}

/// The nucleus whose division set is `F_{¬ζ}`.
pub fn lowest_ddf_above_zeta(frame: &AssemblyFrame, zeta: &Nucleus) -> Result<Nucleus> {
    let l = frame.host();
    let neg = frame.heyting_negation(zeta);
    nucleus::nucleus_from_dset(l, &neg.fset(l))
}
