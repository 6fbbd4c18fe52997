//! Hard-coded crossing words of the standard curves.
//!
//! Arcs `2i-1` and `2i` are dual to the handle generators `xᵢ`, `yᵢ`. The
//! chain is `α₁ = x₁`, `αᵢ = yᵢ₋₁⁻¹ xᵢ₋₁⁻¹ yᵢ₋₁ xᵢ` for `i ≥ 2`, and
//! `βᵢ = yᵢ`. The curve `c` bounds a neighbourhood of `α_g ∪ β_{g-1}`; its
//! word is the commutator of the two, reduced.

use crate::surface::Letter;

fn x(i: u32) -> Letter {
    Letter::new(2 * i - 1, true)
}

fn y(i: u32) -> Letter {
    Letter::new(2 * i, true)
}

/// `α₁, β₁, …, α_g, β_g` in chain order.
pub fn chain_words(genus: u32) -> Vec<Vec<Letter>> {
    let mut out = Vec::with_capacity(2 * genus as usize);
    for i in 1..=genus {
        if i == 1 {
            out.push(vec![x(1)]);
        } else {
            out.push(vec![y(i - 1).inverse(), x(i - 1).inverse(), y(i - 1), x(i)]);
        }
        out.push(vec![y(i)]);
    }
    out
}

pub fn alpha_word(genus: u32, i: u32) -> Vec<Letter> {
    chain_words(genus).swap_remove(2 * (i as usize - 1))
}

pub fn beta_word(genus: u32, i: u32) -> Vec<Letter> {
    chain_words(genus).swap_remove(2 * i as usize - 1)
}

pub fn c_word(genus: u32) -> Vec<Letter> {
    let h = genus - 1;
    vec![
        x(genus).inverse(),
        y(h).inverse(),
        x(h),
        y(h).inverse(),
        x(h).inverse(),
        y(h),
        x(genus),
        y(h),
    ]
}
