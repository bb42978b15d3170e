//! Built-in lattices. Every entry is modular.

use crate::format::parse_lattice;
use crate::lattice::Lattice;

/// A named lattice and where it comes from.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub lattice: Lattice,
    pub provenance: &'static str,
}

const EXA1: &str = include_str!("../corpus/exa1.lat");
const EX2: &str = include_str!("../corpus/ex2.lat");
const DIAMOND: &str = include_str!("../corpus/diamond.lat");
const M3: &str = include_str!("../corpus/m3.lat");
const M3_STACKED: &str = include_str!("../corpus/m3_stacked.lat");

fn load(text: &str) -> Lattice {
    parse_lattice(text).expect("corpus files parse")
}

/// `0 < S,T,U < I < R`: ideals of a six-element commutative ring.
pub fn exa1() -> Lattice {
    load(EXA1)
}

/// `0 < I < S,T,U < 1`, the dual of [`exa1`].
pub fn ex2() -> Lattice {
    load(EX2)
}

/// `0 < a < b,c < d < 1`.
pub fn diamond() -> Lattice {
    load(DIAMOND)
}

/// The five-element modular, non-distributive lattice.
pub fn m3() -> Lattice {
    load(M3)
}

/// Two copies of `M3` glued top to bottom.
pub fn m3_stacked() -> Lattice {
    load(M3_STACKED)
}

/// Looks an entry up by name.
pub fn get(name: &str) -> Option<Lattice> {
    all()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.lattice)
}

pub fn names() -> Vec<String> {
    all().into_iter().map(|e| e.name).collect()
}

/// The whole corpus in a fixed order.
pub fn all() -> Vec<CorpusEntry> {
    let entry = |lattice: Lattice, provenance| CorpusEntry {
        name: lattice.name().to_string(),
        lattice,
        provenance,
    };
    let mut out = vec![
        entry(exa1(), "ideal lattice of a trivial ring extension"),
        entry(ex2(), "dual of exa1"),
        entry(diamond(), "diamond between two chains"),
        entry(diamond().dual(), "dual of diamond"),
    ];
    for n in 2..=6 {
        out.push(entry(Lattice::chain(n), "chain generator"));
    }
    for k in 1..=4 {
        out.push(entry(Lattice::boolean(k), "Boolean cube generator"));
    }
    out.push(entry(m3(), "smallest non-distributive modular lattice"));
    out.push(entry(m3_stacked(), "two M3 blocks stacked"));
    out.push(entry(
        Lattice::chain(2).product(&Lattice::chain(3)),
        "product generator",
    ));
    out.push(entry(m3().product(&Lattice::chain(2)), "product generator"));
    out.push(entry(
        exa1().product(&Lattice::chain(2)),
        "product generator",
    ));
    out
}
