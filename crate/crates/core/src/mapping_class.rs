//! The standard curve system, twist words and their homological action.

use std::fmt;
use std::sync::Arc;

use crate::curve::{normalize, Curve};
use crate::error::{Error, Result};
use crate::linalg::{LaurentPoly, Matrix, SymplecticMatrix};
use crate::scalar::Scalar;
use crate::standard;
use crate::surface::{Letter, SurfaceSpec};

/// `α₁…α_g`, `β₁…β_g` and `c` on the genus-g surface.
#[derive(Clone, Debug)]
pub struct StandardCurveSystem {
    surface: Arc<SurfaceSpec>,
    alphas: Vec<Curve>,
    betas: Vec<Curve>,
    c: Curve,
}

/// One expected intersection number of the standard system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anchor {
    pub left: String,
    pub right: String,
    pub expected: usize,
}

impl StandardCurveSystem {
    /// The hard-coded system, checked against every intersection anchor.
    pub fn new(genus: u32) -> Result<Self> {
        let surface = Arc::new(SurfaceSpec::new(genus)?);
        let chain = standard::chain_words(genus);
        let alphas: Vec<_> = chain.iter().step_by(2).cloned().collect();
        let betas: Vec<_> = chain.iter().skip(1).step_by(2).cloned().collect();
        let sys = Self::from_words(surface, &alphas, &betas, &standard::c_word(genus))?;
        sys.validate()?;
        Ok(sys)
    }

    /// Builds a system from arbitrary words without checking the anchors.
    /// Each word must still normalize to an essential simple curve.
    pub fn from_words(
        surface: Arc<SurfaceSpec>,
        alphas: &[Vec<Letter>],
        betas: &[Vec<Letter>],
        c: &[Letter],
    ) -> Result<Self> {
        let g = surface.genus() as usize;
        if alphas.len() != g || betas.len() != g {
            return Err(Error::InvalidSurface(format!(
                "expected {g} alphas and {g} betas, got {} and {}",
                alphas.len(),
                betas.len()
            )));
        }
        let norm = |w: &Vec<Letter>| normalize(w, &surface);
        Ok(StandardCurveSystem {
            alphas: alphas.iter().map(norm).collect::<Result<_>>()?,
            betas: betas.iter().map(norm).collect::<Result<_>>()?,
            c: normalize(c, &surface)?,
            surface: surface.clone(),
        })
    }

    pub fn genus(&self) -> u32 {
        self.surface.genus()
    }

    pub fn surface(&self) -> &Arc<SurfaceSpec> {
        &self.surface
    }

    /// `αᵢ`, 1-based.
    pub fn alpha(&self, i: u32) -> &Curve {
        &self.alphas[i as usize - 1]
    }

    /// `βᵢ`, 1-based.
    pub fn beta(&self, i: u32) -> &Curve {
        &self.betas[i as usize - 1]
    }

    pub fn c(&self) -> &Curve {
        &self.c
    }

    /// All `2g + 1` curves with their names, in chain order and `c` last.
    pub fn named_curves(&self) -> Vec<(String, &Curve)> {
        let mut out = Vec::new();
        for i in 1..=self.genus() {
            out.push((format!("a{i}"), self.alpha(i)));
            out.push((format!("b{i}"), self.beta(i)));
        }
        out.push(("c".to_string(), &self.c));
        out
    }

    /// The intersection number every pair is supposed to have: the chain
    /// pattern, plus `c` meeting `α_{g-1}` and `β_g` twice each.
    pub fn anchors(&self) -> Vec<Anchor> {
        let g = self.genus() as usize;
        let names: Vec<String> = self.named_curves().into_iter().map(|(n, _)| n).collect();
        let mut out = Vec::new();
        for i in 0..names.len() {
            for j in i + 1..names.len() {
                let expected = if j == names.len() - 1 {
                    if i == 2 * (g - 2) || i == 2 * g - 1 {
                        2
                    } else {
                        0
                    }
                } else {
                    usize::from(j == i + 1)
                };
                out.push(Anchor {
                    left: names[i].clone(),
                    right: names[j].clone(),
                    expected,
                });
            }
        }
        out
    }

    /// Checks every pairwise anchor and that `c` is nullhomologous.
    pub fn validate(&self) -> Result<()> {
        let curves = self.named_curves();
        let lookup = |name: &str| curves.iter().find(|(n, _)| n == name).map(|(_, c)| *c).unwrap();
        for a in self.anchors() {
            let got = lookup(&a.left).intersection_number(lookup(&a.right))?;
            if got != a.expected {
                return Err(Error::AnchorViolation {
                    fact: format!("i({}, {})", a.left, a.right),
                    expected: a.expected.to_string(),
                    computed: got.to_string(),
                });
            }
        }
        let hc = self.c.homology_class();
        if !hc.is_zero() {
            return Err(Error::AnchorViolation {
                fact: "[c] = 0".into(),
                expected: "0".into(),
                computed: hc.to_string(),
            });
        }
        Ok(())
    }

    /// `β_{g,n} = t_cⁿ(β_g)`.
    pub fn beta_gn(&self, n: i64) -> Result<Curve> {
        if n < 0 {
            return Err(Error::NegativePower(n));
        }
        self.beta(self.genus()).dehn_twist(&self.c, n)
    }

    /// `ψ = t_{β_{g-1}} ∘ … ∘ t_{β₁} ∘ t_{α_g} ∘ … ∘ t_{α₁}`.
    pub fn psi(&self) -> TwistWord {
        let g = self.genus();
        let mut factors = Vec::new();
        for i in (1..g).rev() {
            factors.push(TwistFactor::new(format!("b{i}"), self.beta(i).clone(), 1));
        }
        for i in (1..=g).rev() {
            factors.push(TwistFactor::new(format!("a{i}"), self.alpha(i).clone(), 1));
        }
        TwistWord {
            surface: self.surface.clone(),
            factors,
        }
    }

    /// `φₙ = t_{β_{g,n}} ∘ ψ`.
    pub fn phi(&self, n: i64) -> Result<TwistWord> {
        let b = self.beta_gn(n)?;
        let g = self.genus();
        let mut factors = vec![TwistFactor::new(format!("B[{g},{n}]"), b, 1)];
        factors.extend(self.psi().factors);
        Ok(TwistWord {
            surface: self.surface.clone(),
            factors,
        })
    }
}

pub fn standard_curve_system(genus: u32) -> Result<StandardCurveSystem> {
    StandardCurveSystem::new(genus)
}

pub fn beta_gn(genus: u32, n: i64) -> Result<Curve> {
    if n < 0 {
        return Err(Error::NegativePower(n));
    }
    StandardCurveSystem::new(genus)?.beta_gn(n)
}

pub fn monodromy_phi(genus: u32, n: i64) -> Result<TwistWord> {
    StandardCurveSystem::new(genus)?.phi(n)
}

pub fn monodromy_psi(genus: u32) -> Result<TwistWord> {
    Ok(StandardCurveSystem::new(genus)?.psi())
}

/// `t_curve^power`, with a display label.
#[derive(Clone, Debug)]
pub struct TwistFactor {
    pub label: String,
    pub curve: Curve,
    pub power: i64,
}

impl TwistFactor {
    pub fn new(label: impl Into<String>, curve: Curve, power: i64) -> Self {
        TwistFactor {
            label: label.into(),
            curve,
            power,
        }
    }
}

impl PartialEq for TwistFactor {
    fn eq(&self, other: &Self) -> bool {
        self.curve == other.curve && self.power == other.power
    }
}

impl Eq for TwistFactor {}

/// A product of twists, listed outermost first: `[f₁, f₂, f₃]` is
/// `f₁ ∘ f₂ ∘ f₃`.
#[derive(Clone, Debug)]
pub struct TwistWord {
    surface: Arc<SurfaceSpec>,
    factors: Vec<TwistFactor>,
}

impl PartialEq for TwistWord {
    fn eq(&self, other: &Self) -> bool {
        self.surface == other.surface && self.factors == other.factors
    }
}

impl Eq for TwistWord {}

impl TwistWord {
    /// Drops zero powers and merges adjacent factors about the same curve.
    pub fn new(surface: &Arc<SurfaceSpec>, factors: Vec<TwistFactor>) -> Result<Self> {
        if factors.iter().any(|f| **f.curve.surface() != **surface) {
            return Err(Error::SurfaceMismatch);
        }
        let mut out: Vec<TwistFactor> = Vec::new();
        for f in factors {
            match out.last_mut() {
                Some(last) if last.curve == f.curve => {
                    last.power += f.power;
                    if last.power == 0 {
                        out.pop();
                    }
                }
                _ if f.power == 0 => {}
                _ => out.push(f),
            }
        }
        Ok(TwistWord {
            surface: surface.clone(),
            factors: out,
        })
    }

    pub fn identity(surface: &Arc<SurfaceSpec>) -> Self {
        TwistWord {
            surface: surface.clone(),
            factors: Vec::new(),
        }
    }

    pub fn single(label: impl Into<String>, curve: Curve, power: i64) -> Self {
        let surface = curve.surface().clone();
        TwistWord::new(&surface, vec![TwistFactor::new(label, curve, power)]).expect("one factor")
    }

    pub fn surface(&self) -> &Arc<SurfaceSpec> {
        &self.surface
    }

    pub fn factors(&self) -> &[TwistFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &TwistWord) -> Result<TwistWord> {
        if self.surface != inner.surface {
            return Err(Error::SurfaceMismatch);
        }
        let mut f = self.factors.clone();
        f.extend(inner.factors.iter().cloned());
        TwistWord::new(&self.surface, f)
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord {
            surface: self.surface.clone(),
            factors: self
                .factors
                .iter()
                .rev()
                .map(|f| TwistFactor::new(f.label.clone(), f.curve.clone(), -f.power))
                .collect(),
        }
    }

    /// Image of `a`, innermost factor first. Factors disjoint from the
    /// current image are skipped.
    pub fn apply(&self, a: &Curve) -> Result<Curve> {
        if **a.surface() != *self.surface {
            return Err(Error::SurfaceMismatch);
        }
        let mut cur = a.clone();
        for f in self.factors.iter().rev() {
            if cur.intersection_number(&f.curve)? == 0 {
                continue;
            }
            cur = cur.dehn_twist(&f.curve, f.power)?;
        }
        Ok(cur)
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("id");
        }
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" . ")?;
            }
            write!(f, "T({})", x.label)?;
            if x.power != 1 {
                write!(f, "^{}", x.power)?;
            }
        }
        Ok(())
    }
}

pub fn apply_word(w: &TwistWord, a: &Curve) -> Result<Curve> {
    w.apply(a)
}

/// Intersection form of the chain basis, over `T`.
pub fn intersection_form<T: Scalar>(surface: &SurfaceSpec) -> Matrix<T> {
    surface.homology_basis().form().map(|&x| T::from_int(x))
}

/// `I - p γ γᵀ J`, the action `x ↦ x + p⟨x, γ⟩γ` of `t_γ^p`.
fn transvection<T: Scalar>(curve: &Curve, power: i64, form: &Matrix<T>) -> Matrix<T> {
    let basis = curve.surface().homology_basis();
    let gamma: Vec<T> = basis
        .oriented_class(curve.word())
        .into_iter()
        .map(T::from_int)
        .collect();
    let n = gamma.len();
    let gj: Vec<T> = (0..n)
        .map(|j| (0..n).fold(T::zero(), |acc, k| acc + gamma[k].clone() * form[(k, j)].clone()))
        .collect();
    let p = T::from_int(power);
    let mut m: Matrix<T> = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = m[(i, j)].clone() - p.clone() * gamma[i].clone() * gj[j].clone();
        }
    }
    m
}

/// Matrix of `w` on first homology in the chain basis.
pub fn homology_action<T: Scalar>(w: &TwistWord) -> SymplecticMatrix<T> {
    let form = intersection_form::<T>(&w.surface);
    let m = w
        .factors
        .iter()
        .fold(Matrix::identity(form.rows()), |acc, f| {
            &acc * &transvection(&f.curve, f.power, &form)
        });
    SymplecticMatrix::new(m, &form).expect("transvections preserve the intersection form")
}

/// `det(t I - M)` for the homological action, top coefficient `+1`.
pub fn alexander_polynomial<T: Scalar>(w: &TwistWord) -> LaurentPoly<T> {
    homology_action::<T>(w).characteristic_polynomial().normalized()
}
