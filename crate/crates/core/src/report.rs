//! Structured summaries of a lattice, rendered as text, JSON or DOT.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::assembly::{AssemblyFrame, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::goldie::{self, essential_intervals};
use crate::lattice::Lattice;
use crate::nucleus::{self, Nucleus};

/// Everything the `report` and `goldie` commands print.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub lattice: String,
    pub size: usize,
    pub modular: bool,
    pub distributive: bool,
    pub boolean: bool,
    pub intervals: usize,
    pub nontrivial_intervals: usize,
    pub uniform_dimension: usize,
    /// `None` above the enumeration cap.
    pub nuclei: Option<usize>,
    /// ζ as `[x, ζ(x)]` label pairs.
    pub zeta: Vec<[String; 2]>,
    /// ξ_sp, when the assembly was enumerated.
    pub goldman: Option<Vec<[String; 2]>>,
    pub division_set: Vec<[String; 2]>,
    pub free_set: Vec<[String; 2]>,
    pub nonsingular: Vec<[String; 2]>,
    pub zeta_is_ddf: bool,
    pub cbd0: String,
    pub soc0: String,
    pub c1: bool,
    pub csp: bool,
}

/// Output flavour for [`Report::render`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
}

fn table(l: &Lattice, j: &Nucleus) -> Vec<[String; 2]> {
    l.elements()
        .map(|x| [l.label(x).to_string(), l.label(j.apply(x)).to_string()])
        .collect()
}

impl Report {
    /// Builds the report. Above `cap` the nucleus count and ξ_sp are left
    /// out and ζ comes from its division set alone.
    pub fn build(l: &Lattice, cap: usize) -> Result<Report> {
        let idiom = l.validate_idiom();
        if !idiom.is_modular {
            return Err(Error::NotApplicable(format!(
                "`{}` is not modular",
                l.name()
            )));
        }
        let (nuclei, zeta, goldman, dset, fset) = match AssemblyFrame::with_cap(l, cap) {
            Ok(frame) => {
                let g = goldie::goldie_nucleus(&frame)?;
                (Some(frame.len()), g.zeta, Some(g.goldman), g.dset, g.fset)
            }
            Err(Error::SizeCapExceeded { .. }) => {
                let dset = essential_intervals(l);
                let zeta = nucleus::nucleus_from_dset(l, &dset)?;
                (None, zeta, None, dset, l.nonsingular_intervals())
            }
            Err(e) => return Err(e),
        };
        Ok(Report {
            lattice: l.name().to_string(),
            size: l.size(),
            modular: idiom.is_modular,
            distributive: idiom.is_distributive,
            boolean: idiom.is_boolean,
            intervals: l.intervals().len(),
            nontrivial_intervals: l.intervals().nontrivial().count(),
            uniform_dimension: l.uniform_dimension(),
            nuclei,
            goldman: goldman.map(|g| table(l, &g)),
            zeta_is_ddf: goldie::is_ddf(l, &zeta),
            free_set: zeta.fset(l).label_pairs(l),
            zeta: table(l, &zeta),
            division_set: dset.label_pairs(l),
            nonsingular: fset.label_pairs(l),
            cbd0: l.label(l.cbd0()).to_string(),
            soc0: l.label(l.soc0()).to_string(),
            c1: l.satisfies_c1(),
            csp: l.satisfies_csp(true),
        })
    }

    pub fn build_default(l: &Lattice) -> Result<Report> {
        Report::build(l, DEFAULT_CAP)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise") + "\n"
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let pairs = |v: &[[String; 2]]| {
            let items: Vec<String> = v.iter().map(|[a, b]| format!("[{a},{b}]")).collect();
            format!("{{{}}}", items.join(","))
        };
        let map = |v: &[[String; 2]]| {
            let items: Vec<String> = v.iter().map(|[a, b]| format!("{a}↦{b}")).collect();
            format!("j: {}", items.join(", "))
        };
        let mut out = String::new();
        let mut line = |k: &str, v: String| writeln!(out, "{k}: {v}").unwrap();
        line("lattice", self.lattice.clone());
        line("size", self.size.to_string());
        line("modular", self.modular.to_string());
        line("distributive", self.distributive.to_string());
        line("boolean", self.boolean.to_string());
        line("intervals", self.intervals.to_string());
        line(
            "nontrivial_intervals",
            self.nontrivial_intervals.to_string(),
        );
        line("uniform_dimension", self.uniform_dimension.to_string());
        line(
            "nuclei",
            self.nuclei
                .map_or("not enumerated".to_string(), |n| n.to_string()),
        );
        line("zeta", map(&self.zeta));
        line(
            "goldman",
            self.goldman
                .as_deref()
                .map_or("not computed".to_string(), map),
        );
        line("division_set", pairs(&self.division_set));
        line("free_set", pairs(&self.free_set));
        line("nonsingular", pairs(&self.nonsingular));
        line("zeta_is_ddf", self.zeta_is_ddf.to_string());
        line("cbd0", self.cbd0.clone());
        line("soc0", self.soc0.clone());
        line("c1", self.c1.to_string());
        line("csp", self.csp.to_string());
        out
    }

    pub fn render(&self, l: &Lattice, format: Format) -> Result<String> {
        Ok(match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
            Format::Dot => {
                let image = self
                    .zeta
                    .iter()
                    .map(|[_, b]| l.elem(b))
                    .collect::<Result<Vec<_>>>()?;
                let zeta = Nucleus::new(l, image)?;
                emit_dot(l, Some(&zeta))
            }
        })
    }
}

/// Hasse diagram as a DOT digraph, bottom at the bottom. Fixed points of
/// `j` are filled.
pub fn emit_dot(l: &Lattice, j: Option<&Nucleus>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", l.name().replace('"', "\\\"")).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for x in l.elements() {
        let fixed = j.is_some_and(|j| j.apply(x) == x);
        let style = if fixed {
            ", style=filled, fillcolor=lightblue"
        } else {
            ""
        };
        writeln!(
            out,
            "  n{x} [label=\"{}\"{style}];",
            l.label(x).replace('"', "\\\"")
        )
        .unwrap();
    }
    for (lo, hi) in l.cover_pairs() {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    out.push_str("}\n");
    out
}
