//! Independent oracles and generators shared by the integration tests.
//!
//! The oracles only use the public surface description (the counterclockwise
//! order of arc ends) and never call into the library's intersection or
//! twist code.
#![allow(dead_code)]

use std::sync::Arc;

use num_rational::Ratio;
use twistcert::mapping_class::{StandardCurveSystem, TwistFactor, TwistWord};
use twistcert::surface::ArcEnd;
use twistcert::{Curve, Letter, SurfaceSpec};

/// Counterclockwise position of each arc end around the vertex, indexed by
/// `2(arc-1) + (incoming as usize)`.
pub fn positions(s: &SurfaceSpec) -> Vec<usize> {
    let order = s.boundary_order();
    let mut pos = vec![0; order.len()];
    for (i, e) in order.iter().enumerate() {
        pos[2 * (e.arc as usize - 1) + usize::from(!e.outgoing)] = i;
    }
    pos
}

fn leave(l: Letter) -> usize {
    2 * (l.arc() as usize - 1) + usize::from(!l.is_forward())
}

fn arrive(l: Letter) -> usize {
    2 * (l.arc() as usize - 1) + usize::from(l.is_forward())
}

fn inv(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| l.inverse()).collect()
}

/// Ends of axes in the universal cover tree, compared by the
/// counterclockwise order of branches along the way.
struct Ray<'a> {
    period: &'a [Letter],
}

impl Ray<'_> {
    fn at(&self, i: usize) -> Letter {
        self.period[i % self.period.len()]
    }
}

/// Key of the `i`-th branching choice of a ray: at the base vertex the
/// absolute position, later the ccw offset from the edge we came in on.
fn branch(pos: &[usize], r: &Ray, i: usize) -> usize {
    let m = pos.len();
    if i == 0 {
        pos[leave(r.at(0))]
    } else {
        (pos[leave(r.at(i))] + m - pos[arrive(r.at(i - 1))]) % m
    }
}

/// `(common prefix length, ordering)`; `None` ordering when the rays agree
/// for `limit` letters (same end).
fn compare(pos: &[usize], a: &Ray, b: &Ray, limit: usize) -> (usize, Option<std::cmp::Ordering>) {
    for i in 0..limit {
        if a.at(i) != b.at(i) {
            return (i, Some(branch(pos, a, i).cmp(&branch(pos, b, i))));
        }
    }
    (limit, None)
}

/// Geometric intersection number from linked axes in the universal cover:
/// each crossing class is seen once per vertex the two axes share.
pub fn tree_iota(s: &SurfaceSpec, u: &[Letter], v: &[Letter]) -> Option<u64> {
    let pos = positions(s);
    let limit = 2 * (u.len() + v.len()) + 2;
    let mut total = Ratio::from_integer(0i64);
    for i in 0..u.len() {
        let uf: Vec<Letter> = u[i..].iter().chain(&u[..i]).copied().collect();
        let ub = inv(&uf);
        for j in 0..v.len() {
            let vf: Vec<Letter> = v[j..].iter().chain(&v[..j]).copied().collect();
            let vb = inv(&vf);
            let ends = [
                Ray { period: &uf },
                Ray { period: &ub },
                Ray { period: &vf },
                Ray { period: &vb },
            ];
            let mut shared = 1;
            for (x, y) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
                let (k, ord) = compare(&pos, &ends[x], &ends[y], limit);
                ord?;
                shared += k;
            }
            // v's ends relative to u's two ends in the linear order.
            let between = |y: usize| {
                let lo = compare(&pos, &ends[0], &ends[1], limit).1.unwrap();
                let (a, b) = if lo == std::cmp::Ordering::Less { (0, 1) } else { (1, 0) };
                compare(&pos, &ends[a], &ends[y], limit).1.unwrap() == std::cmp::Ordering::Less
                    && compare(&pos, &ends[y], &ends[b], limit).1.unwrap() == std::cmp::Ordering::Less
            };
            if between(2) != between(3) {
                total += Ratio::new(1, shared as i64);
            }
        }
    }
    assert!(total.is_integer(), "orbit counting must give an integer");
    Some(*total.numer() as u64)
}

/// The letters of `w`, as chords in the cut-open disk joining the side a
/// letter enters on to the side the next letter leaves from. Each point is
/// `(side position, rank along that side)`.
fn chords(pos: &[usize], words: &[&[Letter]], ranks: &[Vec<usize>], counts: &[usize]) -> Vec<((usize, usize), (usize, usize))> {
    let mut out = Vec::new();
    for (wi, w) in words.iter().enumerate() {
        let n = w.len();
        for i in 0..n {
            let a = w[i];
            let b = w[(i + 1) % n];
            let ra = ranks[wi][i];
            let rb = ranks[wi][(i + 1) % n];
            let m_a = counts[a.arc() as usize - 1];
            let m_b = counts[b.arc() as usize - 1];
            // Along the out side ranks run ccw; the glued in side runs them
            // backwards.
            let side_rank = |h: usize, r: usize, m: usize| if h.is_multiple_of(2) { r } else { m - 1 - r };
            let p = (pos[arrive(a)], side_rank(arrive(a), ra, m_a));
            let q = (pos[leave(b)], side_rank(leave(b), rb, m_b));
            out.push((p, q));
        }
    }
    out
}

fn interleave(c: ((usize, usize), (usize, usize)), d: ((usize, usize), (usize, usize))) -> bool {
    let (a, b) = if c.0 < c.1 { (c.0, c.1) } else { (c.1, c.0) };
    let inside = |x: (usize, usize)| a < x && x < b;
    inside(d.0) != inside(d.1)
}

/// Calls `f` with every assignment of ranks along each arc. Returns early
/// when `f` returns true.
fn for_each_placement(
    arcs: usize,
    words: &[&[Letter]],
    f: &mut dyn FnMut(&[Vec<usize>], &[usize]) -> bool,
) -> bool {
    let mut visits: Vec<Vec<(usize, usize)>> = vec![Vec::new(); arcs];
    for (wi, w) in words.iter().enumerate() {
        for (i, l) in w.iter().enumerate() {
            visits[l.arc() as usize - 1].push((wi, i));
        }
    }
    let counts: Vec<usize> = visits.iter().map(|v| v.len()).collect();
    let mut ranks: Vec<Vec<usize>> = words.iter().map(|w| vec![0; w.len()]).collect();
    let mut perms: Vec<Vec<usize>> = counts.iter().map(|&m| (0..m).collect()).collect();
    fn next_perm(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            p.reverse();
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }
    loop {
        for (k, v) in visits.iter().enumerate() {
            for (r, &(wi, i)) in v.iter().enumerate() {
                ranks[wi][i] = perms[k][r];
            }
        }
        if f(&ranks, &counts) {
            return true;
        }
        let mut k = 0;
        while k < arcs && !next_perm(&mut perms[k]) {
            k += 1;
        }
        if k == arcs {
            return false;
        }
    }
}

/// Number of placements the exhaustive oracles would try.
pub fn placement_count(arcs: usize, words: &[&[Letter]]) -> u64 {
    let mut counts = vec![0u64; arcs];
    for w in words {
        for l in w.iter() {
            counts[l.arc() as usize - 1] += 1;
        }
    }
    counts
        .iter()
        .map(|&m| (1..=m).fold(1u64, |acc, k| acc.saturating_mul(k)))
        .fold(1u64, |acc, f| acc.saturating_mul(f))
}

/// Whether some ordering of the strands on each arc draws the cyclic word
/// with no crossing inside the disk.
pub fn chord_simple(s: &SurfaceSpec, w: &[Letter]) -> bool {
    let pos = positions(s);
    for_each_placement(s.arc_count() as usize, &[w], &mut |ranks, counts| {
        let ch = chords(&pos, &[w], ranks, counts);
        (0..ch.len()).all(|i| (i + 1..ch.len()).all(|j| !interleave(ch[i], ch[j])))
    })
}

/// Least number of crossings between the chords of `u` and of `v` over all
/// joint strand orderings.
pub fn placement_iota(s: &SurfaceSpec, u: &[Letter], v: &[Letter]) -> u64 {
    let pos = positions(s);
    let mut best = u64::MAX;
    for_each_placement(s.arc_count() as usize, &[u, v], &mut |ranks, counts| {
        let ch = chords(&pos, &[u, v], ranks, counts);
        let (cu, cv) = ch.split_at(u.len());
        let x = cu
            .iter()
            .map(|&c| cv.iter().filter(|&&d| interleave(c, d)).count() as u64)
            .sum::<u64>();
        best = best.min(x);
        best == 0
    });
    best
}

/// `det(V - t Vᵀ)` for the Seifert matrix of `T(2, 2g+1)`: `-1` on the
/// diagonal and `1` just above it. Expanded over all permutations.
pub fn seifert_alexander(genus: usize) -> Vec<i64> {
    let n = 2 * genus;
    let mut v = vec![vec![0i64; n]; n];
    for i in 0..n {
        v[i][i] = -1;
        if i + 1 < n {
            v[i][i + 1] = 1;
        }
    }
    // Entry (i, j) of V - tVᵀ as a linear polynomial [constant, t].
    let entry = |i: usize, j: usize| [v[i][j], -v[j][i]];
    let mut det = vec![0i64; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1i64;
    let add = |perm: &[usize], sign: i64, det: &mut Vec<i64>| {
        let mut p = vec![sign];
        for (i, &j) in perm.iter().enumerate() {
            let e = entry(i, j);
            let mut q = vec![0i64; p.len() + 1];
            for (k, &x) in p.iter().enumerate() {
                q[k] += x * e[0];
                q[k + 1] += x * e[1];
            }
            p = q;
        }
        for (k, x) in p.into_iter().enumerate() {
            det[k] += x;
        }
    };
    add(&perm, sign, &mut det);
    // Heap's algorithm.
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            add(&perm, sign, &mut det);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    while det.last() == Some(&0) {
        det.pop();
    }
    let lead = det.iter().position(|&x| x != 0).unwrap();
    let mut det = det.split_off(lead);
    if *det.last().unwrap() < 0 {
        det.iter_mut().for_each(|x| *x = -*x);
    }
    det
}

/// Names usable as twist curves or targets: `a1.., b1.., c`.
pub fn system_curves(sys: &StandardCurveSystem) -> Vec<Curve> {
    sys.named_curves().into_iter().map(|(_, c)| c.clone()).collect()
}

/// A twist word from `(curve index, power)` pairs over the standard curves.
pub fn word_from(sys: &StandardCurveSystem, spec: &[(usize, i64)]) -> TwistWord {
    let curves = sys.named_curves();
    let factors = spec
        .iter()
        .map(|&(i, p)| {
            let (name, c) = &curves[i % curves.len()];
            TwistFactor::new(name.clone(), (*c).clone(), p)
        })
        .collect();
    TwistWord::new(sys.surface(), factors).unwrap()
}

pub fn surface(g: u32) -> Arc<SurfaceSpec> {
    Arc::new(SurfaceSpec::new(g).unwrap())
}

pub fn end(arc: u32, outgoing: bool) -> ArcEnd {
    ArcEnd { arc, outgoing }
}
