//! Dehn twist surgery on words.
//!
//! The twisting curve is laid out as an embedded curve in the thickened
//! ribbon graph: on every edge its strands run side by side, ordered by where
//! their continuations peel off. The target curve is routed through the same
//! bands, so every crossing between the two happens inside the vertex disk
//! and can be read off from the cyclic order of chord endpoints. At each
//! crossing the target is rerouted around the twisting curve.

use std::cmp::Ordering;

use crate::surface::{Letter, SurfaceSpec};
use crate::word;

#[inline]
fn at(w: &[Letter], i: isize) -> Letter {
    w[i.rem_euclid(w.len() as isize) as usize]
}

/// Letter `t` of the ray through strand `j`, read in the forward direction
/// of the edge that strand occupies.
#[inline]
fn ray(w: &[Letter], j: usize, t: usize) -> Letter {
    if w[j].is_forward() {
        at(w, j as isize + t as isize)
    } else {
        at(w, j as isize - t as isize).inverse()
    }
}

/// Left-to-right order of two strands on the same edge. `Equal` means the
/// strands never separate.
fn compare_strands(s: &SurfaceSpec, u: &[Letter], i: usize, v: &[Letter], j: usize) -> Ordering {
    let bound = u.len() + v.len();
    let mut arrival = ray(u, i, 0).end();
    for t in 1..=bound {
        let p = ray(u, i, t);
        let q = ray(v, j, t);
        if p != q {
            // Peeling off further counterclockwise means staying to the left.
            return s.ccw(arrival, q.start()).cmp(&s.ccw(arrival, p.start()));
        }
        arrival = p.end();
    }
    Ordering::Equal
}

/// Left-to-right coordinates (odd) of every strand of an embedded curve,
/// with the strands grouped by arc.
fn layout(s: &SurfaceSpec, about: &[Letter]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let arcs = s.arc_count() as usize;
    let mut per_arc: Vec<Vec<usize>> = vec![Vec::new(); arcs];
    for (j, l) in about.iter().enumerate() {
        per_arc[l.arc() as usize - 1].push(j);
    }
    let mut coord = vec![0usize; about.len()];
    for strands in &mut per_arc {
        strands.sort_by(|&x, &y| compare_strands(s, about, x, about, y));
        for (rank, &j) in strands.iter().enumerate() {
            coord[j] = 2 * rank + 1;
        }
    }
    (coord, per_arc)
}

/// Even coordinates placing each target strand between the strands of
/// `about`, or `None` if some target strand runs along `about` forever.
fn place_target(
    s: &SurfaceSpec,
    target: &[Letter],
    about: &[Letter],
    per_arc: &[Vec<usize>],
) -> Option<Vec<usize>> {
    let mut coord = vec![0usize; target.len()];
    for (i, l) in target.iter().enumerate() {
        let strands = &per_arc[l.arc() as usize - 1];
        let mut parallel = false;
        let left = strands.partition_point(|&j| match compare_strands(s, about, j, target, i) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => {
                parallel = true;
                false
            }
        });
        if parallel {
            return None;
        }
        coord[i] = 2 * left;
    }
    Some(coord)
}

/// Position of a strand endpoint on the boundary of the vertex disk,
/// increasing counterclockwise.
#[inline]
fn endpoint(s: &SurfaceSpec, half_edge: usize, coord: usize, width: usize) -> usize {
    let within = if half_edge.is_multiple_of(2) {
        // Leaving along an edge: counterclockwise runs right to left.
        width - 1 - coord
    } else {
        coord
    };
    s.slot(half_edge) * width + within
}

struct Chord {
    enter: usize,
    exit: usize,
}

fn chords(s: &SurfaceSpec, w: &[Letter], coord: &[usize], width: usize) -> Vec<Chord> {
    let n = w.len();
    (0..n)
        .map(|i| {
            let prev = (i + n - 1) % n;
            Chord {
                enter: endpoint(s, w[prev].end(), coord[prev], width),
                exit: endpoint(s, w[i].start(), coord[i], width),
            }
        })
        .collect()
}

/// A crossing of the target with the twisting curve, located on the target's
/// pass `visit` through the vertex.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Crossing {
    pub visit: usize,
    /// Pass of the twisting curve through the vertex.
    pub about_visit: usize,
    /// Orientation of (target tangent, twisting tangent).
    pub sign: i32,
    /// Counterclockwise offset used to order crossings along the target chord.
    order: usize,
}

/// Crossings of `target` with the embedded layout of `about`, in order along
/// `target`. `None` when the two run parallel.
pub(crate) fn crossings(s: &SurfaceSpec, target: &[Letter], about: &[Letter]) -> Option<Vec<Crossing>> {
    let (ac, per_arc) = layout(s, about);
    let tc = place_target(s, target, about, &per_arc)?;
    let width = 2 * about.len() + 2;
    let circle = s.half_edges() * width;
    let tch = chords(s, target, &tc, width);
    let ach = chords(s, about, &ac, width);
    let mut out = Vec::new();
    for (i, b) in tch.iter().enumerate() {
        let off = |p: usize| (p + circle - b.enter) % circle;
        let exit = off(b.exit);
        for (j, a) in ach.iter().enumerate() {
            let ea = off(a.enter);
            let xa = off(a.exit);
            let (sign, order) = match (ea < exit, xa < exit) {
                (true, false) => (1, ea),
                (false, true) => (-1, xa),
                _ => continue,
            };
            out.push(Crossing {
                visit: i,
                about_visit: j,
                sign,
                order,
            });
        }
    }
    out.sort_by_key(|c| (c.visit, c.order));
    Some(out)
}

/// The surgery word of `t_about^power(target)` before reduction. Right twists
/// (positive powers) turn right onto `about` at every crossing.
pub(crate) fn surgery(s: &SurfaceSpec, target: &[Letter], about: &[Letter], power: i64) -> Vec<Letter> {
    if power == 0 {
        return target.to_vec();
    }
    let Some(cross) = crossings(s, target, about) else {
        return target.to_vec();
    };
    let loop_len = about.len();
    let extra: usize = cross.len() * loop_len * power.unsigned_abs() as usize;
    let mut out = Vec::with_capacity(target.len() + extra);
    let mut next = 0;
    for (i, &letter) in target.iter().enumerate() {
        while next < cross.len() && cross[next].visit == i {
            let c = cross[next];
            let around = word::rotate(about, c.about_visit);
            let times = -(c.sign as i64) * power;
            let piece = if times > 0 {
                around
            } else {
                word::inverse(&around)
            };
            for _ in 0..times.unsigned_abs() {
                out.extend_from_slice(&piece);
            }
            next += 1;
        }
        out.push(letter);
    }
    out
}

#[cfg(test)]
fn layout_self_crossings(s: &SurfaceSpec, about: &[Letter]) -> usize {
    let (ac, _) = layout(s, about);
    let width = 2 * about.len() + 2;
    let circle = s.half_edges() * width;
    let ach = chords(s, about, &ac, width);
    let mut n = 0;
    for (i, a) in ach.iter().enumerate() {
        for b in &ach[i + 1..] {
            let off = |p: usize| (p + circle - a.enter) % circle;
            if (off(b.enter) < off(a.exit)) != (off(b.exit) < off(a.exit)) {
                n += 1;
            }
        }
    }
    n
}
