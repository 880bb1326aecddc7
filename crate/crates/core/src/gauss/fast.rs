//! `O(m log m)` evaluation of `c2`.

use crate::diagrams::{GaussDiagram, StarSkeleton};

struct Fenwick(Vec<i64>);

impl Fenwick {
    fn add(&mut self, mut i: usize, v: i64) {
        i += 1;
        while i < self.0.len() {
            self.0[i] += v;
            i += i & i.wrapping_neg();
        }
    }

    // Sum over indices < i.
    fn prefix(&self, mut i: usize) -> i64 {
        let mut s = 0;
        while i > 0 {
            s += self.0[i];
            i -= i & i.wrapping_neg();
        }
        s
    }
}

/// `c2` by a sweep: for each descending chord `q`, sum the signs of the
/// ascending chords `p` with `p1 < q1 < p2 < q2`.
pub fn c2_fast(d: &GaussDiagram) -> i64 {
    let chords = d.chords();
    let len = d.endpoints().len();
    let mut by_first: Vec<Option<usize>> = vec![None; len];
    for (c, ch) in chords.iter().enumerate() {
        by_first[ch.first] = Some(c);
    }
    let mut tree = Fenwick(vec![0; len + 1]);
    let mut total = 0;
    for c in by_first.into_iter().flatten() {
        let ch = &chords[c];
        if ch.tail_first {
            let inside = tree.prefix(ch.second) - tree.prefix(ch.first + 1);
            total += ch.sign as i64 * inside;
        } else {
            tree.add(ch.second, ch.sign as i64);
        }
    }
    total
}

/// [`c2_fast`] on the star diagram with the given ascending bits, without
/// building the Gauss diagram.
pub fn c2_star(skeleton: &StarSkeleton, ascending: &[bool]) -> i64 {
    let mut tree = Fenwick(vec![0; 2 * skeleton.len() + 1]);
    let mut total = 0;
    // Crossing ids already follow first positions.
    for (c, &(first, second)) in skeleton.positions().iter().enumerate() {
        let s = skeleton.sign(c, ascending[c]) as i64;
        if ascending[c] {
            tree.add(second, s);
        } else {
            total += s * (tree.prefix(second) - tree.prefix(first + 1));
        }
    }
    total
}
