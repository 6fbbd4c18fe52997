//! Linked-pair counting for curves carried by the ribbon graph.
//!
//! Two cyclically reduced words run through the vertex and along the edges
//! of the ribbon graph. Wherever they come together they travel side by side
//! along a maximal common segment (possibly of length zero, a single pass
//! through the vertex) and then separate. They must cross inside that
//! segment exactly when the side on which the first curve enters differs from
//! the side on which it leaves. Counting such linked segments gives the
//! geometric intersection number of the two classes, since reduced words
//! admit no bigons.

use crate::surface::{Letter, SurfaceSpec};

/// One linked pair: a point where the two curves must cross.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct LinkedPair {
    /// Vertex visit of the first word where the common segment starts.
    pub first: usize,
    /// Vertex visit of the second word (in the orientation that was matched).
    pub second: usize,
    /// Length of the common segment.
    pub shared: usize,
    /// The second word was matched against its inverse.
    pub reversed: bool,
    /// Orientation of (tangent of first, tangent of second) at the crossing,
    /// with both curves in their given orientations.
    pub sign: i32,
}

#[inline]
fn at(word: &[Letter], i: isize) -> Letter {
    let n = word.len() as isize;
    word[i.rem_euclid(n) as usize]
}

/// Outcome of scanning two words.
pub(crate) enum Scan {
    Pairs(Vec<LinkedPair>),
    /// The words share a bi-infinite common path: same or inverse classes, or
    /// (for self scans) a proper power.
    Parallel,
}

/// Enumerates linked pairs between cyclically reduced words `u` and `v`.
/// With `same = true` the words are the same curve and only pairs of
/// distinct passes are reported, each intersection twice.
pub(crate) fn linked_pairs(s: &SurfaceSpec, u: &[Letter], v: &[Letter], same: bool) -> Scan {
    let m = u.len();
    let n = v.len();
    if m == 0 || n == 0 {
        return Scan::Pairs(Vec::new());
    }
    let bound = m + n;
    let mut out = Vec::new();
    let v_inv: Vec<Letter> = crate::word::inverse(v);
    for (reversed, w) in [(false, v), (true, &v_inv[..])] {
        for i in 0..m {
            let p1 = at(u, i as isize - 1);
            for j in 0..n {
                if same && !reversed && i == j {
                    continue;
                }
                let p2 = at(w, j as isize - 1);
                if p1 == p2 {
                    continue;
                }
                let mut k = 0usize;
                while k < bound && at(u, (i + k) as isize) == at(w, (j + k) as isize) {
                    k += 1;
                }
                if k == bound {
                    return Scan::Parallel;
                }
                let sign = if k == 0 {
                    if reversed {
                        continue;
                    }
                    vertex_crossing(s, p1, u[i], p2, w[j])
                } else {
                    band_crossing(
                        s,
                        p1,
                        p2,
                        u[i],
                        at(u, (i + k - 1) as isize),
                        at(u, (i + k) as isize),
                        at(w, (j + k) as isize),
                    )
                };
                if let Some(sign) = sign {
                    out.push(LinkedPair {
                        first: i,
                        second: j,
                        shared: k,
                        reversed,
                        sign: if reversed { -sign } else { sign },
                    });
                }
            }
        }
    }
    Scan::Pairs(out)
}

/// Two passes through the vertex with four distinct half-edges: linked when
/// the chords interleave.
fn vertex_crossing(s: &SurfaceSpec, p1: Letter, q1: Letter, p2: Letter, q2: Letter) -> Option<i32> {
    let a = p1.end();
    let b = q1.start();
    let c = p2.end();
    let d = q2.start();
    if a == d || c == b {
        // The curves share an edge in opposite directions; that segment is
        // handled by the reversed scan.
        return None;
    }
    let ob = s.ccw(a, b);
    let oc = s.ccw(a, c);
    let od = s.ccw(a, d);
    match (oc < ob, od < ob) {
        (true, false) => Some(1),
        (false, true) => Some(-1),
        _ => None,
    }
}

/// A common segment `first ..= last`, entered from `p1`/`p2` and left
/// through `q1`/`q2`.
fn band_crossing(
    s: &SurfaceSpec,
    p1: Letter,
    p2: Letter,
    first: Letter,
    last: Letter,
    q1: Letter,
    q2: Letter,
) -> Option<i32> {
    let h0 = first.start();
    let enters_left = s.ccw(h0, p1.end()) < s.ccw(h0, p2.end());
    let h1 = last.end();
    let leaves_right = s.ccw(h1, q1.start()) < s.ccw(h1, q2.start());
    if enters_left == leaves_right {
        Some(if enters_left { 1 } else { -1 })
    } else {
        None
    }
}

/// Geometric intersection number of two distinct, non-isotopic classes, or
/// `None` when the words run parallel.
pub(crate) fn count(s: &SurfaceSpec, u: &[Letter], v: &[Letter]) -> Option<usize> {
    match linked_pairs(s, u, v, false) {
        Scan::Pairs(p) => Some(p.len()),
        Scan::Parallel => None,
    }
}

/// Algebraic intersection: sum of crossing signs, `None` when parallel.
pub(crate) fn algebraic(s: &SurfaceSpec, u: &[Letter], v: &[Letter]) -> Option<i64> {
    match linked_pairs(s, u, v, false) {
        Scan::Pairs(p) => Some(p.iter().map(|x| x.sign as i64).sum()),
        Scan::Parallel => None,
    }
}

/// Number of transverse self-crossings of a reduced word in minimal position,
/// `None` when the word is a proper power.
pub(crate) fn self_count(s: &SurfaceSpec, u: &[Letter]) -> Option<usize> {
    match linked_pairs(s, u, u, true) {
        Scan::Pairs(p) => Some(p.len() / 2),
        Scan::Parallel => None,
    }
}
