//! Brute-force oracles and sweep helpers shared by the integration tests.
//!
//! Nothing here calls the library routine it is compared against. The
//! oracles read only the order, meet and join tables of a [`Lattice`].

#![allow(dead_code)]

use idiom::corpus;
use idiom::{Elem, Interval, IntervalSet, Lattice};

/// Corpus lattices with at most `max` elements.
pub fn corpus_upto(max: usize) -> Vec<Lattice> {
    corpus::all()
        .into_iter()
        .map(|e| e.lattice)
        .filter(|l| l.size() <= max)
        .collect()
}

/// Elements sorted so that everything below `x` comes before `x`.
pub fn linear_extension(l: &Lattice) -> Vec<Elem> {
    let mut order: Vec<Elem> = l.elements().collect();
    order.sort_by_key(|&x| l.elements().filter(|&y| l.leq(y, x)).count());
    order
}

/// Every nucleus as a table, by backtracking over inflationary maps.
///
/// Elements are assigned in a linear extension; monotonicity and the meet
/// law are checked against every earlier element as soon as a value is
/// placed, idempotence once the table is full.
pub fn nuclei_by_tables(l: &Lattice) -> Vec<Vec<Elem>> {
    fn go(
        l: &Lattice,
        order: &[Elem],
        k: usize,
        table: &mut Vec<Option<Elem>>,
        out: &mut Vec<Vec<Elem>>,
    ) {
        if k == order.len() {
            let t: Vec<Elem> = table.iter().map(|v| v.unwrap()).collect();
            if l.elements().all(|x| t[t[x]] == t[x]) {
                out.push(t);
            }
            return;
        }
        let x = order[k];
        for v in l.elements().filter(|&v| l.leq(x, v)) {
            let ok = order[..k].iter().all(|&y| {
                let jy = table[y].unwrap();
                (!l.leq(y, x) || l.leq(jy, v))
                    && (!l.leq(x, y) || l.leq(v, jy))
                    && table[l.meet(x, y)].is_none_or(|m| m == l.meet(v, jy))
            });
            if ok {
                table[x] = Some(v);
                go(l, order, k + 1, table, out);
                table[x] = None;
            }
        }
    }
    let order = linear_extension(l);
    let mut out = Vec::new();
    go(l, &order, 0, &mut vec![None; l.size()], &mut out);
    out.sort();
    out
}

/// Every nucleus as a table, from the subsets that contain the top, are
/// closed under binary meets and whose closure map preserves binary meets.
pub fn nuclei_by_fixed_sets(l: &Lattice) -> Vec<Vec<Elem>> {
    let n = l.size();
    let others: Vec<Elem> = l.elements().filter(|&x| x != l.top()).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << others.len()) {
        let mut member = vec![false; n];
        member[l.top()] = true;
        for (i, &x) in others.iter().enumerate() {
            member[x] = mask >> i & 1 == 1;
        }
        let closed =
            (0..n).all(|x| (0..n).all(|y| !member[x] || !member[y] || member[l.meet(x, y)]));
        if !closed {
            continue;
        }
        let close = |x: Elem| {
            (0..n)
                .filter(|&f| member[f] && l.leq(x, f))
                .min_by_key(|&f| (0..n).filter(|&y| l.leq(y, f)).count())
                .unwrap()
        };
        let table: Vec<Elem> = (0..n).map(close).collect();
        let meets =
            (0..n).all(|x| (0..n).all(|y| table[l.meet(x, y)] == l.meet(table[x], table[y])));
        if meets {
            out.push(table);
        }
    }
    out.sort();
    out
}

/// Similarity as a relation on interval indices, built by scanning every
/// pair `(l, r)` and recording `[l∧r, l]` ~ `[r, l∨r]` both ways.
pub fn similarity_by_scan(l: &Lattice) -> Vec<Vec<bool>> {
    let ivs = l.intervals();
    let mut rel = vec![vec![false; ivs.len()]; ivs.len()];
    for a in l.elements() {
        for b in l.elements() {
            let lower = ivs.index(l.meet(a, b), a).unwrap();
            let upper = ivs.index(b, l.join(a, b)).unwrap();
            rel[lower][upper] = true;
            rel[upper][lower] = true;
        }
    }
    rel
}

pub fn modular_by_triples(l: &Lattice) -> bool {
    l.elements().all(|a| {
        l.elements().all(|b| {
            l.elements()
                .all(|c| !l.leq(a, c) || l.join(a, l.meet(b, c)) == l.meet(l.join(a, b), c))
        })
    })
}

pub fn distributive_by_triples(l: &Lattice) -> bool {
    l.elements().all(|a| {
        l.elements().all(|b| {
            l.elements()
                .all(|c| l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c)))
        })
    })
}

/// `x` essential in `[a,b]`, straight from the definition.
pub fn essential(l: &Lattice, x: Elem, a: Elem, b: Elem) -> bool {
    l.elements()
        .filter(|&y| l.leq(a, y) && l.leq(y, b))
        .all(|y| l.meet(x, y) != a || y == a)
}

/// Largest family of nonbottom elements, each meeting the join of the rest
/// in the bottom, over every subset.
pub fn uniform_dimension_by_subsets(l: &Lattice) -> usize {
    let nz: Vec<Elem> = l.elements().filter(|&x| x != l.bottom()).collect();
    let mut best = 0;
    for mask in 0u64..(1u64 << nz.len()) {
        let fam: Vec<Elem> = (0..nz.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| nz[i])
            .collect();
        if fam.len() <= best {
            continue;
        }
        let independent = (0..fam.len()).all(|k| {
            let rest = fam
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .fold(l.bottom(), |acc, (_, &y)| l.join(acc, y));
            l.meet(fam[k], rest) == l.bottom()
        });
        if independent {
            best = fam.len();
        }
    }
    best
}

/// Pointwise meet of tables; the empty family gives the constant top.
pub fn pointwise_meet(l: &Lattice, tables: &[&Vec<Elem>]) -> Vec<Elem> {
    l.elements()
        .map(|x| tables.iter().fold(l.top(), |acc, t| l.meet(acc, t[x])))
        .collect()
}

/// ξ of a seed: the meet of every oracle nucleus with `b ≤ j(a)` on each
/// seed interval.
pub fn xi_by_meet(l: &Lattice, nuclei: &[Vec<Elem>], seed: &[Interval]) -> Vec<Elem> {
    let collapsing: Vec<&Vec<Elem>> = nuclei
        .iter()
        .filter(|t| seed.iter().all(|iv| l.leq(iv.hi, t[iv.lo])))
        .collect();
    pointwise_meet(l, &collapsing)
}

/// χ(a,b): the pointwise join of every oracle nucleus with `j(a) ∧ b = a`.
pub fn chi_by_sup(l: &Lattice, nuclei: &[Vec<Elem>], a: Elem, b: Elem) -> Vec<Elem> {
    l.elements()
        .map(|x| {
            nuclei
                .iter()
                .filter(|t| l.meet(t[a], b) == a)
                .fold(l.bottom(), |acc, t| l.join(acc, t[x]))
        })
        .collect()
}

/// The first of the four division-set closure rules that `s` breaks, as a
/// readable message. The rules are checked by direct quantification.
pub fn closure_rule_failure(l: &Lattice, s: &IntervalSet) -> Option<String> {
    let has = |a: Elem, b: Elem| s.contains(l, Interval { lo: a, hi: b });
    let show = |a: Elem, b: Elem| format!("[{},{}]", l.label(a), l.label(b));
    let elems: Vec<Elem> = l.elements().collect();
    for &a in &elems {
        for &b in &elems {
            let (lo, hi) = ((l.meet(a, b), a), (b, l.join(a, b)));
            if has(lo.0, lo.1) != has(hi.0, hi.1) {
                return Some(format!(
                    "similarity: {} vs {}",
                    show(lo.0, lo.1),
                    show(hi.0, hi.1)
                ));
            }
        }
    }
    for iv in s.iter(l) {
        for &x in &elems {
            for &y in &elems {
                if l.leq(iv.lo, x) && l.leq(x, y) && l.leq(y, iv.hi) && !has(x, y) {
                    return Some(format!(
                        "subinterval: {} of {}",
                        show(x, y),
                        show(iv.lo, iv.hi)
                    ));
                }
            }
        }
    }
    for p in s.iter(l) {
        for q in s.iter(l) {
            if p.hi == q.lo && !has(p.lo, q.hi) {
                return Some(format!(
                    "abutting: {} then {}",
                    show(p.lo, p.hi),
                    show(q.lo, q.hi)
                ));
            }
            if p.lo == q.lo && !has(p.lo, l.join(p.hi, q.hi)) {
                return Some(format!(
                    "join: {} and {}",
                    show(p.lo, p.hi),
                    show(q.lo, q.hi)
                ));
            }
        }
    }
    None
}

/// `D_j = {[a,b] : b ≤ j(a)}` for a table.
pub fn dset_of(l: &Lattice, t: &[Elem]) -> IntervalSet {
    IntervalSet::from_fn(l, |iv| l.leq(iv.hi, t[iv.lo]))
}

/// `F_j = {[a,b] : j(a) ∧ b = a}` for a table.
pub fn fset_of(l: &Lattice, t: &[Elem]) -> IntervalSet {
    IntervalSet::from_fn(l, |iv| l.meet(t[iv.lo], iv.hi) == iv.lo)
}

/// Runs `check` over `items` and returns the first failure message.
pub fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    mut check: impl FnMut(&T) -> Option<String>,
) -> Option<String> {
    items.into_iter().find_map(|x| check(&x))
}

/// `Some(msg)` when `cond` is false.
pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    if cond {
        None
    } else {
        Some(msg())
    }
}
