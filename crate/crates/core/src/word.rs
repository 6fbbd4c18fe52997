//! Free-group word utilities on cyclic words.

use crate::surface::Letter;

pub fn inverse(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|l| l.inverse()).collect()
}

/// Freely reduces, then strips cancelling letters across the wrap point.
pub fn cyclically_reduce(word: &[Letter]) -> Vec<Letter> {
    let mut stack: Vec<Letter> = Vec::with_capacity(word.len());
    for &l in word {
        if stack.last() == Some(&l.inverse()) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    let mut lo = 0;
    let mut hi = stack.len();
    while hi - lo >= 2 && stack[lo] == stack[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    stack.truncate(hi);
    stack.drain(..lo);
    stack
}

pub fn is_cyclically_reduced(word: &[Letter]) -> bool {
    let n = word.len();
    (0..n).all(|i| word[(i + 1) % n] != word[i].inverse())
}

pub fn rotate(word: &[Letter], start: usize) -> Vec<Letter> {
    let mut out = Vec::with_capacity(word.len());
    out.extend_from_slice(&word[start..]);
    out.extend_from_slice(&word[..start]);
    out
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
pub fn least_rotation(word: &[Letter]) -> usize {
    let n = word.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| word[i % n];
    let mut fail = vec![-1isize; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = fail[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k % n
}

/// Canonical representative of an unoriented cyclic word: the least rotation
/// of the word or of its inverse, whichever is smaller.
pub fn canonical(word: &[Letter]) -> Vec<Letter> {
    let fwd = rotate(word, least_rotation(word));
    let inv = inverse(word);
    let bwd = rotate(&inv, least_rotation(&inv));
    if bwd < fwd {
        bwd
    } else {
        fwd
    }
}

/// Smallest period `p` dividing `len` with `word` equal to its rotation by `p`.
pub fn primitive_period(word: &[Letter]) -> usize {
    let n = word.len();
    // Prefix function of the linear word gives the candidate period.
    let mut pi = vec![0usize; n];
    for i in 1..n {
        let mut k = pi[i - 1];
        while k > 0 && word[i] != word[k] {
            k = pi[k - 1];
        }
        if word[i] == word[k] {
            k += 1;
        }
        pi[i] = k;
    }
    let p = n - pi.last().copied().unwrap_or(0);
    if n > 0 && n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

pub fn is_primitive(word: &[Letter]) -> bool {
    primitive_period(word) == word.len()
}

/// Equality of cyclic words up to rotation.
pub fn cyclically_equal(a: &[Letter], b: &[Letter]) -> bool {
    a.len() == b.len() && rotate(a, least_rotation(a)) == rotate(b, least_rotation(b))
}
