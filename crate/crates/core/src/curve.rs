//! Essential simple closed curves, up to isotopy.
//!
//! A curve is stored as the canonical representative of its crossing word:
//! cyclically reduced (no bigon with any cut arc), then the least rotation of
//! the word or its inverse. Two curves are isotopic exactly when their
//! canonical words agree.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::homology::HomologyClass;
use crate::intersection;
use crate::surface::{format_word, parse_word, Letter, SurfaceSpec};
use crate::twist;
use crate::word;

#[derive(Clone)]
pub struct Curve {
    word: Vec<Letter>,
    surface: Arc<SurfaceSpec>,
}

impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word && same_surface(&self.surface, &other.surface)
    }
}

impl Eq for Curve {}

impl std::hash::Hash for Curve {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

fn same_surface(a: &Arc<SurfaceSpec>, b: &Arc<SurfaceSpec>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn check_arcs(raw: &[Letter], surface: &SurfaceSpec) -> Result<()> {
    match raw.iter().find(|l| l.arc() > surface.arc_count()) {
        Some(l) => Err(Error::UnknownArc(l.arc())),
        None => Ok(()),
    }
}

/// Bigon-free form of a raw crossing word, rejecting curves that are not
/// essential simple closed curves.
pub fn normalize(raw: &[Letter], surface: &Arc<SurfaceSpec>) -> Result<Curve> {
    check_arcs(raw, surface)?;
    let reduced = word::cyclically_reduce(raw);
    if reduced.is_empty() {
        return Err(Error::Inessential("word reduces to a point".into()));
    }
    let canon = word::canonical(&reduced);
    if canon == word::canonical(&surface.boundary_word()) {
        return Err(Error::Inessential("curve is parallel to the boundary".into()));
    }
    if !word::is_primitive(&reduced) {
        return Err(Error::NotSimple(format!(
            "word is a proper power (period {})",
            word::primitive_period(&reduced)
        )));
    }
    match intersection::self_count(surface, &reduced) {
        Some(0) => Ok(Curve {
            word: canon,
            surface: surface.clone(),
        }),
        Some(k) => Err(Error::NotSimple(format!("{k} forced self-crossings"))),
        None => Err(Error::NotSimple("word is a proper power".into())),
    }
}

/// Whether the cyclic word can be drawn without self-crossings. The empty
/// word is flagged as `false`.
pub fn validate_simple(raw: &[Letter], surface: &SurfaceSpec) -> bool {
    if check_arcs(raw, surface).is_err() {
        return false;
    }
    let reduced = word::cyclically_reduce(raw);
    !reduced.is_empty()
        && word::is_primitive(&reduced)
        && intersection::self_count(surface, &reduced) == Some(0)
}

/// Number of self-crossings of the class in minimal position, or `None` for
/// the empty word and proper powers.
pub fn self_intersection(raw: &[Letter], surface: &SurfaceSpec) -> Option<usize> {
    let reduced = word::cyclically_reduce(raw);
    if reduced.is_empty() {
        return None;
    }
    intersection::self_count(surface, &reduced)
}

impl Curve {
    /// Parses a token list such as `"e1+ e3- e2+"` and normalizes it.
    pub fn parse(text: &str, surface: &Arc<SurfaceSpec>) -> Result<Curve> {
        normalize(&parse_word(text)?, surface)
    }

    /// Canonicalizes a word known to describe a simple curve (the image of a
    /// simple curve under twists), skipping the simplicity scan.
    pub(crate) fn from_trusted(raw: &[Letter], surface: &Arc<SurfaceSpec>) -> Curve {
        let reduced = word::cyclically_reduce(raw);
        debug_assert!(!reduced.is_empty());
        Curve {
            word: word::canonical(&reduced),
            surface: surface.clone(),
        }
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn surface(&self) -> &Arc<SurfaceSpec> {
        &self.surface
    }

    fn check_surface(&self, other: &Curve) -> Result<()> {
        if same_surface(&self.surface, &other.surface) {
            Ok(())
        } else {
            Err(Error::SurfaceMismatch)
        }
    }

    pub fn is_isotopic(&self, other: &Curve) -> Result<bool> {
        self.check_surface(other)?;
        Ok(self.word == other.word)
    }

    /// Geometric intersection number; zero for a curve with itself.
    pub fn intersection_number(&self, other: &Curve) -> Result<usize> {
        self.check_surface(other)?;
        if self.word == other.word {
            return Ok(0);
        }
        Ok(intersection::count(&self.surface, &self.word, &other.word).unwrap_or(0))
    }

    /// Signed count of crossings, `+1` where (tangent of `self`, tangent of
    /// `other`) is positively oriented, in the orientations of the stored
    /// words.
    pub fn algebraic_intersection(&self, other: &Curve) -> Result<i64> {
        self.check_surface(other)?;
        if self.word == other.word {
            return Ok(0);
        }
        Ok(intersection::algebraic(&self.surface, &self.word, &other.word).unwrap_or(0))
    }

    /// `t_about^power(self)`: positive powers are right twists.
    pub fn dehn_twist(&self, about: &Curve, power: i64) -> Result<Curve> {
        self.check_surface(about)?;
        if power == 0 || self.word == about.word {
            return Ok(self.clone());
        }
        let raw = twist::surgery(&self.surface, &self.word, &about.word, power);
        Ok(Curve::from_trusted(&raw, &self.surface))
    }

    /// The surgery word of `t_about^power(self)` before any reduction.
    pub fn twist_surgery_word(&self, about: &Curve, power: i64) -> Result<Vec<Letter>> {
        self.check_surface(about)?;
        Ok(twist::surgery(&self.surface, &self.word, &about.word, power))
    }

    pub fn homology_class(&self) -> HomologyClass {
        self.surface.homology_basis().class_of(&self.word)
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.word))
    }
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Curve[{}]", format_word(&self.word))
    }
}

pub fn is_isotopic(a: &Curve, b: &Curve) -> Result<bool> {
    a.is_isotopic(b)
}

pub fn intersection_number(a: &Curve, b: &Curve) -> Result<usize> {
    a.intersection_number(b)
}

pub fn dehn_twist(target: &Curve, about: &Curve, power: i64) -> Result<Curve> {
    target.dehn_twist(about, power)
}

pub fn homology_class(a: &Curve) -> HomologyClass {
    a.homology_class()
}
