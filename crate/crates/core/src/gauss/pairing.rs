//! Subdiagram counting: the pairing of an arrow diagram with a Gauss diagram.

use std::collections::HashMap;

use num_traits::Zero;

use super::formula::{ArrowTerm, GaussFormula};
use crate::diagrams::{Chord, GaussDiagram};
use crate::rational::{self, Rational};

/// Relative position data for a chord shape: for arrows `i < k` (ordered by
/// first endpoint), whether `first_k < second_i` and whether
/// `second_k < second_i`.
struct ShapeOrder {
    arity: usize,
    // rel[k][i] = (first_k < second_i, second_k < second_i)
    rel: Vec<Vec<(bool, bool)>>,
}

impl ShapeOrder {
    fn from_word(word: &[u8]) -> Self {
        let arity = word.len() / 2;
        let mut first = vec![usize::MAX; arity];
        let mut second = vec![0; arity];
        for (p, &a) in word.iter().enumerate() {
            let a = a as usize;
            if first[a] == usize::MAX {
                first[a] = p;
            } else {
                second[a] = p;
            }
        }
        let rel = (0..arity)
            .map(|k| (0..k).map(|i| (first[k] < second[i], second[k] < second[i])).collect())
            .collect();
        ShapeOrder { arity, rel }
    }
}

/// All embeddings of a chord shape into a set of chords given as
/// `(first, second)` pairs sorted by `first`. Each embedding lists chord
/// indices in order of first endpoint.
pub(crate) fn embeddings(word: &[u8], chords: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let shape = ShapeOrder::from_word(word);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(shape.arity);
    extend(&shape, chords, 0, &mut cur, &mut |e| out.push(e.to_vec()));
    out
}

fn extend(
    shape: &ShapeOrder,
    chords: &[(usize, usize)],
    from: usize,
    cur: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    let k = cur.len();
    if k == shape.arity {
        visit(cur);
        return;
    }
    let remaining = shape.arity - k;
    for j in from..(chords.len() + 1).saturating_sub(remaining) {
        let (f, s) = chords[j];
        let ok = cur.iter().enumerate().all(|(i, &c)| {
            let (fi_rel, si_rel) = shape.rel[k][i];
            (f < chords[c].1) == fi_rel && (s < chords[c].1) == si_rel
        });
        if ok {
            cur.push(j);
            extend(shape, chords, j + 1, cur, visit);
            cur.pop();
        }
    }
}

fn sorted_chords(d: &GaussDiagram) -> Vec<Chord> {
    let mut chords = d.chords();
    chords.sort_unstable_by_key(|c| c.first);
    chords
}

fn term_weight(term: &ArrowTerm, chosen: &[&Chord]) -> i64 {
    let mut w = 1i64;
    for (arrow, ch) in term.normalized().iter().zip(chosen) {
        if arrow.2 != ch.tail_first {
            return 0;
        }
        w *= arrow.3.weight(ch.sign) as i64;
        if w == 0 {
            return 0;
        }
    }
    w
}

/// Signed count of subdiagrams of `d` isomorphic to `term`, without the
/// coefficient.
pub fn pairing_count(term: &ArrowTerm, d: &GaussDiagram) -> i64 {
    let chords = sorted_chords(d);
    let pos: Vec<(usize, usize)> = chords.iter().map(|c| (c.first, c.second)).collect();
    let norm = term.normalized();
    let shape = ShapeOrder::from_word(&term.shape());
    let mut total = 0i64;
    let mut cur = Vec::with_capacity(norm.len());
    extend(&shape, &pos, 0, &mut cur, &mut |e| {
        let chosen: Vec<&Chord> = e.iter().map(|&i| &chords[i]).collect();
        total += term_weight(term, &chosen);
    });
    total
}

/// `<term, d>`: the coefficient times the signed subdiagram count.
pub fn pairing(term: &ArrowTerm, d: &GaussDiagram) -> Rational {
    term.coefficient() * rational::int(pairing_count(term, d))
}

/// Evaluates a Gauss diagram formula; terms sharing a chord shape share one
/// subdiagram enumeration.
pub fn evaluate(f: &GaussFormula, d: &GaussDiagram) -> Rational {
    let chords = sorted_chords(d);
    let pos: Vec<(usize, usize)> = chords.iter().map(|c| (c.first, c.second)).collect();
    let mut by_shape: HashMap<Vec<u8>, Vec<&ArrowTerm>> = HashMap::new();
    for t in f.terms() {
        by_shape.entry(t.shape()).or_default().push(t);
    }
    let mut total = Rational::zero();
    for (word, terms) in by_shape {
        let mut counts = vec![0i64; terms.len()];
        let shape = ShapeOrder::from_word(&word);
        let mut cur = Vec::with_capacity(shape.arity);
        extend(&shape, &pos, 0, &mut cur, &mut |e| {
            let chosen: Vec<&Chord> = e.iter().map(|&i| &chords[i]).collect();
            for (cnt, t) in counts.iter_mut().zip(&terms) {
                *cnt += term_weight(t, &chosen);
            }
        });
        for (cnt, t) in counts.into_iter().zip(&terms) {
            total += t.coefficient() * rational::int(cnt);
        }
    }
    total
}
