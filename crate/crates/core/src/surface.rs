//! The fibre surface: compact, oriented, genus g, one boundary circle.
//!
//! The surface is cut open along `2g` arcs into a single disk. Dually it
//! deformation retracts onto a ribbon graph with one vertex and `2g` loops,
//! one loop per arc. A curve in minimal position with the arcs is recorded
//! by the arcs it crosses, in order, which is the same thing as the loop
//! sequence it follows in the ribbon graph.
//!
//! Half-edges at the vertex are numbered `2(k-1)` (where a path crossing arc
//! `k` in the `+` direction leaves the vertex) and `2(k-1)+1` (where it comes
//! back). The boundary order lists the half-edges counterclockwise.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::Error;
use crate::homology::HomologyBasis;

/// A signed crossing with a cut arc. Arc ids are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter(i32);

impl Letter {
    pub fn new(arc: u32, forward: bool) -> Letter {
        assert!(arc > 0, "arc ids are 1-based");
        let a = arc as i32;
        Letter(if forward { a } else { -a })
    }

    pub fn arc(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_forward(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    /// Half-edge through which a path reading this letter leaves the vertex.
    #[inline]
    pub(crate) fn start(self) -> usize {
        let base = 2 * (self.arc() as usize - 1);
        if self.is_forward() {
            base
        } else {
            base + 1
        }
    }

    /// Half-edge through which a path reading this letter returns.
    #[inline]
    pub(crate) fn end(self) -> usize {
        self.inverse().start()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}{}", self.arc(), if self.is_forward() { '+' } else { '-' })
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Letter, Error> {
        let bad = || Error::BadToken(s.to_string());
        let body = s.strip_prefix('e').ok_or_else(bad)?;
        let (digits, sign) = body.split_at(body.len().saturating_sub(1));
        let forward = match sign {
            "+" => true,
            "-" => false,
            _ => return Err(bad()),
        };
        let arc: u32 = digits.parse().map_err(|_| bad())?;
        if arc == 0 {
            return Err(bad());
        }
        Ok(Letter::new(arc, forward))
    }
}

/// Parses a whitespace separated token list such as `"e1+ e3- e2+"`.
pub fn parse_word(text: &str) -> Result<Vec<Letter>, Error> {
    text.split_whitespace().map(str::parse).collect()
}

/// Renders a word as a token list, the inverse of [`parse_word`].
pub fn format_word(word: &[Letter]) -> String {
    let mut out = String::with_capacity(word.len() * 4);
    for (i, l) in word.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&l.to_string());
    }
    out
}

/// One end of a cut arc as it appears on the boundary of the cut-open disk.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ArcEnd {
    pub arc: u32,
    /// `true` for the side a `+` crossing leaves from.
    pub outgoing: bool,
}

impl ArcEnd {
    fn half_edge(self) -> usize {
        2 * (self.arc as usize - 1) + usize::from(!self.outgoing)
    }

    fn from_half_edge(h: usize) -> ArcEnd {
        ArcEnd {
            arc: (h / 2) as u32 + 1,
            outgoing: h.is_multiple_of(2),
        }
    }
}

impl fmt::Display for ArcEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}{}", self.arc, if self.outgoing { "out" } else { "in" })
    }
}

/// The genus-g surface with one boundary component and its cut system.
#[derive(Debug)]
pub struct SurfaceSpec {
    genus: u32,
    order: Vec<usize>,
    position: Vec<usize>,
    homology: OnceLock<HomologyBasis>,
}

impl PartialEq for SurfaceSpec {
    fn eq(&self, other: &Self) -> bool {
        self.genus == other.genus && self.order == other.order
    }
}

impl Eq for SurfaceSpec {}

impl SurfaceSpec {
    /// The standard cut system: arcs `2i-1`, `2i` span handle `i`, and the
    /// four ends of a handle sit together on the disk boundary.
    pub fn new(genus: u32) -> Result<SurfaceSpec, Error> {
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus));
        }
        let mut order = Vec::with_capacity(4 * genus as usize);
        for handle in 0..genus {
            let x = 2 * handle + 1;
            let y = x + 1;
            order.extend([
                ArcEnd { arc: x, outgoing: true },
                ArcEnd { arc: y, outgoing: true },
                ArcEnd { arc: x, outgoing: false },
                ArcEnd { arc: y, outgoing: false },
            ]);
        }
        SurfaceSpec::with_boundary_order(genus, &order)
    }

    /// Builds a surface from an explicit counterclockwise order of arc ends.
    /// The order must use every arc end once and glue to a single boundary
    /// circle.
    pub fn with_boundary_order(genus: u32, order: &[ArcEnd]) -> Result<SurfaceSpec, Error> {
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus));
        }
        let ends = 4 * genus as usize;
        if order.len() != ends {
            return Err(Error::InvalidSurface(format!(
                "expected {ends} arc ends, got {}",
                order.len()
            )));
        }
        let mut position = vec![usize::MAX; ends];
        for (i, end) in order.iter().enumerate() {
            if end.arc == 0 || end.arc > 2 * genus {
                return Err(Error::UnknownArc(end.arc));
            }
            let h = end.half_edge();
            if position[h] != usize::MAX {
                return Err(Error::InvalidSurface(format!("{end} listed twice")));
            }
            position[h] = i;
        }
        let spec = SurfaceSpec {
            genus,
            order: order.iter().map(|e| e.half_edge()).collect(),
            position,
            homology: OnceLock::new(),
        };
        let circles = spec.boundary_cycles().len();
        if circles != 1 {
            return Err(Error::InvalidSurface(format!(
                "gluing pattern has {circles} boundary circles, expected 1"
            )));
        }
        Ok(spec)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn arc_count(&self) -> u32 {
        2 * self.genus
    }

    pub fn cut_arcs(&self) -> impl Iterator<Item = u32> {
        1..=2 * self.genus
    }

    pub fn boundary_order(&self) -> Vec<ArcEnd> {
        self.order.iter().map(|&h| ArcEnd::from_half_edge(h)).collect()
    }

    /// V - E + F of the ribbon graph thickening: one vertex, 2g edges and
    /// one face per boundary circle.
    pub fn euler_characteristic(&self) -> i64 {
        1 - self.arc_count() as i64
    }

    #[inline]
    pub(crate) fn half_edges(&self) -> usize {
        self.order.len()
    }

    /// Counterclockwise distance from half-edge `from` to half-edge `to`.
    #[inline]
    pub(crate) fn ccw(&self, from: usize, to: usize) -> usize {
        let n = self.order.len();
        (self.position[to] + n - self.position[from]) % n
    }

    /// Counterclockwise slot of a half-edge, `0..4g`.
    #[inline]
    pub(crate) fn slot(&self, h: usize) -> usize {
        self.position[h]
    }

    fn next_ccw(&self, h: usize) -> usize {
        self.order[(self.position[h] + 1) % self.order.len()]
    }

    /// Letter sequences of the boundary circles, each read by leaving the
    /// vertex through the half-edge counterclockwise after the arrival.
    fn boundary_cycles(&self) -> Vec<Vec<Letter>> {
        let n = self.order.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for h0 in 0..n {
            if seen[h0] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut h = h0;
            while !seen[h] {
                seen[h] = true;
                let letter = Letter::new((h / 2) as u32 + 1, h % 2 == 0);
                cycle.push(letter);
                h = self.next_ccw(letter.end());
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// The word of a curve parallel to the boundary circle.
    pub fn boundary_word(&self) -> Vec<Letter> {
        self.boundary_cycles().swap_remove(0)
    }

    pub(crate) fn homology_basis(&self) -> &HomologyBasis {
        self.homology.get_or_init(|| HomologyBasis::standard(self))
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S(g={}) [", self.genus)?;
        for (i, end) in self.boundary_order().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{end}")?;
        }
        f.write_str("]")
    }
}
