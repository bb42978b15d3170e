//! Golden listings for the three worked examples, compared against the
//! computed sets.
//!
//! The listings are stored as data, exactly as printed with the examples,
//! so a regression anywhere shows up as a mismatch against the source.

use std::fmt::Write;

use crate::assembly::AssemblyFrame;
use crate::corpus;
use crate::error::{Error, Result};
use crate::goldie;
use crate::interval_set::IntervalSet;
use crate::lattice::Lattice;

/// One compared quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

/// The outcome of a reproduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reproduction {
    pub name: String,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
}

impl Reproduction {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "reproduce {}", self.name).unwrap();
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            writeln!(out, "{tag} {}: {}", c.label, c.computed).unwrap();
            if !c.pass {
                writeln!(out, "     expected: {}", c.expected).unwrap();
            }
        }
        for w in &self.warnings {
            writeln!(out, "WARNING {w}").unwrap();
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "{verdict} {}", self.name).unwrap();
        out
    }
}

/// Names accepted by [`reproduce`].
pub const NAMES: [&str; 3] = ["exa1", "ex2", "diamond"];

const EXA1_DZETA: &str = "[I,R]";
const EXA1_FZETA: &str = "[0,S],[0,T],[0,U],[S,I],[T,I],[U,I],[0,I],[0,R],[S,R],[T,R],[U,R]";
const EXA1_DCHI_IR: &str = "[0,S],[0,T],[0,U],[S,I],[T,I],[U,I],[0,I]";
const EX2_DZETA: &str = "[I,U],[I,T],[I,S],[I,1],[S,1],[T,1],[U,1]";
const EX2_FZETA: &str = "[0,1],[0,I],[0,S],[0,T],[0,U]";
const EX2_DCHI_S1: &str = "[0,I]";
const DIAMOND_DZETA: &str = "[a,b],[a,c],[a,d],[a,1],[b,d],[c,d],[b,1],[c,1],[d,1]";
const DIAMOND_NONSINGULAR_CLAIM: &str = "[0,a]";

/// Parses a listing such as `[0,S],[S,I]`.
pub fn parse_listing(l: &Lattice, text: &str) -> Result<IntervalSet> {
    let mut pairs = Vec::new();
    for item in text.split("],") {
        let inner = item.trim().trim_start_matches('[').trim_end_matches(']');
        if inner.is_empty() {
            continue;
        }
        let (a, b) = inner.split_once(',').ok_or_else(|| Error::Syntax {
            line: 1,
            col: 1,
            msg: format!("bad interval `{item}`"),
        })?;
        pairs.push((a.trim(), b.trim()));
    }
    IntervalSet::from_labels(l, &pairs)
}

struct Checker<'a> {
    l: &'a Lattice,
    checks: Vec<Check>,
}

impl Checker<'_> {
    fn set(&mut self, label: &str, expected: &IntervalSet, computed: &IntervalSet) {
        self.checks.push(Check {
            label: label.to_string(),
            expected: expected.display(self.l).to_string(),
            computed: computed.display(self.l).to_string(),
            pass: expected == computed,
        });
    }

    fn listing(&mut self, label: &str, listing: &str, computed: &IntervalSet) -> Result<()> {
        let expected = parse_listing(self.l, listing)?;
        self.set(label, &expected, computed);
        Ok(())
    }

    fn eq<T: PartialEq>(&mut self, label: &str, left: &T, right: &T, shown: String) {
        self.checks.push(Check {
            label: label.to_string(),
            expected: "equal".to_string(),
            computed: shown,
            pass: left == right,
        });
    }
}

/// Runs one reproduction.
pub fn reproduce(name: &str) -> Result<Reproduction> {
    let l = match name {
        "exa1" => corpus::exa1(),
        "ex2" => corpus::ex2(),
        "diamond" => corpus::diamond(),
        other => {
            return Err(Error::NotApplicable(format!(
                "no reproduction named `{other}` (expected one of {})",
                NAMES.join(", ")
            )))
        }
    };
    let frame = AssemblyFrame::new(&l)?;
    let g = goldie::goldie_nucleus(&frame)?;
    let e = |s: &str| l.elem(s);
    let mut c = Checker {
        l: &l,
        checks: Vec::new(),
    };
    let mut warnings = Vec::new();
    let zeta_dset = g.zeta.dset(&l);
    let zeta_fset = g.zeta.fset(&l);

    match name {
        "exa1" => {
            let n = l.intervals().nontrivial().count();
            c.eq("nontrivial intervals", &n, &12, n.to_string());
            c.listing("D_ζ", EXA1_DZETA, &zeta_dset)?;
            c.listing("F_ζ", EXA1_FZETA, &zeta_fset)?;
            let chi0 = frame.chi(e("0")?, e("R")?)?;
            c.eq("ζ = χ(0,R)", &g.zeta, chi0, g.zeta.display(&l).to_string());
            let xi = frame.xi(&parse_listing(&l, EXA1_DZETA)?);
            c.eq("ζ = ξ{[I,R]}", &g.zeta, &xi, xi.display(&l).to_string());
            let chi = frame.chi(e("I")?, e("R")?)?;
            c.listing("D_χ(I,R)", EXA1_DCHI_IR, &chi.dset(&l))?;
            c.set("D_ζ = F_χ(I,R)", &zeta_dset, &chi.fset(&l));
        }
        "ex2" => {
            c.listing("D_ζ", EX2_DZETA, &zeta_dset)?;
            c.listing("F_ζ", EX2_FZETA, &zeta_fset)?;
            let chi_s = frame.chi(e("S")?, e("1")?)?;
            c.listing("D_χ(S,1)", EX2_DCHI_S1, &chi_s.dset(&l))?;
            c.set("D_ζ = F_χ(S,1)", &zeta_dset, &chi_s.fset(&l));
            let chi_t = frame.chi(e("T")?, e("1")?)?;
            let chi_u = frame.chi(e("U")?, e("1")?)?;
            c.eq(
                "χ(S,1) = χ(T,1)",
                chi_s,
                chi_t,
                chi_t.display(&l).to_string(),
            );
            c.eq(
                "χ(S,1) = χ(U,1)",
                chi_s,
                chi_u,
                chi_u.display(&l).to_string(),
            );
            let xi = frame.xi_interval(e("I")?, e("1")?)?;
            c.eq("ζ = ξ{[I,1]}", &g.zeta, &xi, xi.display(&l).to_string());
        }
        _ => {
            c.listing("D_ζ", DIAMOND_DZETA, &zeta_dset)?;
            let claim = parse_listing(&l, DIAMOND_NONSINGULAR_CLAIM)?;
            if claim != l.nonsingular_intervals() {
                warnings.push(format!(
                    "nonsingular intervals are {}, not only {}",
                    l.nonsingular_intervals().display(&l),
                    claim.display(&l)
                ));
            }
        }
    }
    Ok(Reproduction {
        name: name.to_string(),
        checks: c.checks,
        warnings,
    })
}
