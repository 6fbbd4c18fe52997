//! First homology of the fibre surface in the chain basis
//! `([α₁], [β₁], …, [α_g], [β_g])`.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::intersection;
use crate::linalg::Matrix;
use crate::standard;
use crate::surface::{Letter, SurfaceSpec};

/// Integer coordinates in the chain basis, reported with the first nonzero
/// coordinate positive (curves are unoriented).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct HomologyClass {
    pub coordinates: Vec<i64>,
}

impl HomologyClass {
    pub fn new(mut coordinates: Vec<i64>) -> Self {
        if coordinates.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
            coordinates.iter_mut().for_each(|c| *c = -*c);
        }
        HomologyClass { coordinates }
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(|&c| c == 0)
    }

    pub fn dim(&self) -> usize {
        self.coordinates.len()
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coordinates.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Signed letter counts: the class of an oriented word in the basis dual to
/// the cut arcs.
pub(crate) fn abelianize(word: &[Letter], arcs: usize) -> Vec<i64> {
    let mut v = vec![0i64; arcs];
    for l in word {
        v[l.arc() as usize - 1] += if l.is_forward() { 1 } else { -1 };
    }
    v
}

/// Change of basis from arc-dual coordinates to the chain basis, and the
/// intersection form on the chain basis.
#[derive(Debug, Clone)]
pub(crate) struct HomologyBasis {
    to_chain: Matrix<i64>,
    form: Matrix<i64>,
}

impl HomologyBasis {
    pub(crate) fn standard(s: &SurfaceSpec) -> Self {
        let arcs = s.arc_count() as usize;
        let chain = standard::chain_words(s.genus());
        let columns: Vec<Vec<i64>> = chain.iter().map(|w| abelianize(w, arcs)).collect();
        let p = Matrix::from_rows(columns.clone()).transpose();
        let inv = p
            .map(|&x| Ratio::from(x))
            .inverse()
            .expect("chain curves must form a basis of first homology");
        let to_chain = inv.map(|r| {
            assert!(r.is_integer(), "chain basis must be unimodular");
            *r.numer()
        });
        let mut form = Matrix::zeros(arcs, arcs);
        for i in 0..arcs {
            for j in 0..arcs {
                if i != j {
                    form[(i, j)] = pairing_of_words(s, &chain[i], &chain[j]);
                }
            }
        }
        HomologyBasis { to_chain, form }
    }

    pub(crate) fn class_of(&self, word: &[Letter]) -> HomologyClass {
        let v = abelianize(word, self.to_chain.cols());
        HomologyClass::new(self.to_chain.mul_vec(&v))
    }

    /// Signed coordinates of the oriented word (no sign canonicalization).
    pub(crate) fn oriented_class(&self, word: &[Letter]) -> Vec<i64> {
        let v = abelianize(word, self.to_chain.cols());
        self.to_chain.mul_vec(&v)
    }

    pub(crate) fn form(&self) -> &Matrix<i64> {
        &self.form
    }
}

/// The pairing for which a right twist acts by `x ↦ x + ⟨x, γ⟩ γ`.
pub(crate) fn pairing_of_words(s: &SurfaceSpec, x: &[Letter], y: &[Letter]) -> i64 {
    -intersection::algebraic(s, x, y).unwrap_or(0)
}

/// The intersection form on the chain basis of `surface`.
pub fn intersection_form(surface: &SurfaceSpec) -> Matrix<i64> {
    surface.homology_basis().form().clone()
}

/// `xᵀ J y` for chain-basis coordinates.
pub fn pair(form: &Matrix<i64>, x: &[i64], y: &[i64]) -> i64 {
    let jy = form.mul_vec(y);
    x.iter().zip(&jy).map(|(a, b)| a * b).sum()
}
