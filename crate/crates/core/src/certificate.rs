//! The rank derivation for the knots `Kₙ`, as a replayable list of steps.
//!
//! Curve facts are recomputed from the kernel every time; exact triangles
//! only ever see the resulting intervals. Steps refer to earlier steps by
//! index, and rank facts name their curves with the expression language, so
//! a serialized certificate can be replayed from scratch.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::eval_expression;
use crate::floer::{
    hf_rank, lspace_obstruction, lspace_profile, staircase_from_alexander, triangle_propagate,
    RankInterval, Verdict,
};
use crate::mapping_class::{alexander_polynomial, StandardCurveSystem};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    RankFact,
    TrianglePropagation,
    ArithmeticBound,
    Conclusion,
}

/// How a step's output is obtained from its inputs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// Floer rank of two curves: 2 if isotopic, else `ι`.
    CurveRank,
    /// Knot Floer rank of the closure of `phi[0]` in grading `1 - g`, read
    /// from the staircase of its Alexander polynomial.
    TorusKnotRank,
    /// Third vertex of an exact triangle.
    ExactTriangle,
    /// Rank of a tensor product.
    Tensor,
    /// `lo(first) - hi(second)`, kept signed.
    LowerDifference,
    /// Staircase cap of one per grading.
    LSpaceCriterion,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepInput {
    Step(usize),
    /// A curve, in the expression language.
    Curve(String),
    /// A mapping class, such as `phi[0]`.
    Word(String),
    /// A quantity with no known bound, carried by name only.
    Unbounded(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StepOutput {
    Range { lo: i64, hi: Option<i64> },
    Verdict { verdict: Verdict },
}

impl StepOutput {
    fn interval(r: RankInterval) -> Self {
        StepOutput::Range {
            lo: r.lo as i64,
            hi: r.hi.map(|h| h as i64),
        }
    }

    fn lower(&self) -> Option<i64> {
        match self {
            StepOutput::Range { lo, .. } => Some(*lo),
            StepOutput::Verdict { .. } => None,
        }
    }

    fn upper(&self) -> Option<i64> {
        match self {
            StepOutput::Range { hi, .. } => *hi,
            StepOutput::Verdict { .. } => None,
        }
    }

    /// As a rank interval; negative lower bounds clamp to zero.
    fn as_interval(&self) -> Option<RankInterval> {
        match *self {
            StepOutput::Range { lo, hi } => Some(RankInterval {
                lo: lo.max(0) as u64,
                hi: hi.map(|h| h as u64),
            }),
            StepOutput::Verdict { .. } => None,
        }
    }
}

impl std::fmt::Display for StepOutput {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StepOutput::Range { lo, hi: Some(h) } if lo == h => write!(f, "= {lo}"),
            StepOutput::Range { lo, hi: Some(h) } => write!(f, "in [{lo}, {h}]"),
            StepOutput::Range { lo, hi: None } => write!(f, ">= {lo}"),
            StepOutput::Verdict { verdict } => write!(f, "{verdict}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Citation {
    pub anchor: String,
    pub quote: String,
}

fn cite(anchor: &str, quote: &str) -> Citation {
    Citation {
        anchor: anchor.into(),
        quote: quote.into(),
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct DerivationStep {
    pub index: usize,
    pub kind: StepKind,
    pub rule: Rule,
    /// The quantity being bounded.
    pub subject: String,
    pub inputs: Vec<StepInput>,
    pub output: StepOutput,
    pub citation: Citation,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub genus: u32,
    pub n: i64,
    pub steps: Vec<DerivationStep>,
    pub final_bound: i64,
    pub verdict: Verdict,
}

/// Appends steps and checks rank facts against their expected values.
struct Builder<'a> {
    sys: &'a StandardCurveSystem,
    steps: Vec<DerivationStep>,
}

impl<'a> Builder<'a> {
    fn push(
        &mut self,
        kind: StepKind,
        rule: Rule,
        subject: String,
        inputs: Vec<StepInput>,
        output: StepOutput,
        citation: Citation,
    ) -> usize {
        let index = self.steps.len();
        self.steps.push(DerivationStep {
            index,
            kind,
            rule,
            subject,
            inputs,
            output,
            citation,
        });
        index
    }

    fn out(&self, i: usize) -> StepOutput {
        self.steps[i].output
    }

    fn curve_rank(&mut self, left: &str, right: &str, expected: u64, citation: Citation) -> Result<usize> {
        let a = eval_expression(left, self.sys)?;
        let b = eval_expression(right, self.sys)?;
        let r = hf_rank(&a, &b)?;
        if r != expected {
            return Err(Error::AnchorViolation {
                fact: format!("rk HF({left}, {right})"),
                expected: expected.to_string(),
                computed: r.to_string(),
            });
        }
        Ok(self.push(
            StepKind::RankFact,
            Rule::CurveRank,
            format!("rk HF({left}, {right})"),
            vec![StepInput::Curve(left.into()), StepInput::Curve(right.into())],
            StepOutput::interval(RankInterval::exact(r)),
            citation,
        ))
    }

    fn triangle(&mut self, subject: String, a: usize, c: usize, citation: Citation) -> usize {
        let r = triangle_propagate(
            self.out(a).as_interval().unwrap(),
            self.out(c).as_interval().unwrap(),
        );
        self.push(
            StepKind::TrianglePropagation,
            Rule::ExactTriangle,
            subject,
            vec![StepInput::Step(a), StepInput::Step(c)],
            StepOutput::interval(r),
            citation,
        )
    }

    fn tensor(&mut self, subject: String, inputs: Vec<StepInput>) -> usize {
        let r = tensor_of(&inputs, |i| self.out(i).as_interval());
        self.push(
            StepKind::ArithmeticBound,
            Rule::Tensor,
            subject,
            inputs,
            StepOutput::interval(r.unwrap()),
            cite("tensor-rank", "rk (V ⊗ W) = rk V · rk W"),
        )
    }

    fn difference(&mut self, subject: String, a: usize, c: usize) -> usize {
        let lo = self.out(a).lower().unwrap() - self.out(c).upper().unwrap();
        self.push(
            StepKind::ArithmeticBound,
            Rule::LowerDifference,
            subject,
            vec![StepInput::Step(a), StepInput::Step(c)],
            StepOutput::Range { lo, hi: None },
            cite(
                "exact-triangle",
                "in an exact triangle, rk B >= rk C - rk A, so lower bounds subtract upper bounds",
            ),
        )
    }
}

fn tensor_of(inputs: &[StepInput], mut lookup: impl FnMut(usize) -> Option<RankInterval>) -> Option<RankInterval> {
    inputs.iter().try_fold(RankInterval::exact(1), |acc, x| {
        let r = match x {
            StepInput::Step(i) => lookup(*i)?,
            StepInput::Unbounded(_) => RankInterval::unknown(),
            StepInput::Curve(_) | StepInput::Word(_) => return None,
        };
        Some(acc.tensor(&r))
    })
}

fn torus_knot_rank(sys: &StandardCurveSystem) -> Result<u64> {
    let g = sys.genus() as i64;
    let delta = alexander_polynomial::<i64>(&sys.phi(0)?);
    let stairs = staircase_from_alexander(&delta)?;
    Ok(lspace_profile(&stairs).rank(1 - g))
}

fn seidel() -> Citation {
    cite(
        "seidel-triangle",
        "HF(t_c(a), b) -> HF(a, b) -> HF(c, a) ⊗ HF(b, c) is exact for simple closed curves a, b, c",
    )
}

fn hfk_triangle() -> Citation {
    cite(
        "hfk-surgery-triangle",
        "HFK(Y, K; 1-g) -> HFK(Y', K'; 1-g) -> HF(γ, ψ(γ)) is exact when (Y', K') is (-1)-surgery on γ in the fibre",
    )
}

fn rank_iota() -> Citation {
    cite("hf-rank-intersection", "rk HF(a, b) = i(a, b) for non-isotopic essential a, b")
}

fn base_steps(b: &mut Builder) -> Result<usize> {
    let g = b.sys.genus();
    let bg = format!("b{g}");
    let psi_bg = format!("psi(b{g})");
    let s1 = b.curve_rank(
        &bg,
        &psi_bg,
        1,
        cite(
            "psi-beta-g",
            "ψ(β_g) = t_{β_{g-1}} t_{α_g}(β_g) meets β_g once, so rk HF = 1",
        ),
    )?;
    let r = torus_knot_rank(b.sys)?;
    if r != 1 {
        return Err(Error::AnchorViolation {
            fact: format!("rk HFK(S3, K0; {})", 1 - g as i64),
            expected: "1".into(),
            computed: r.to_string(),
        });
    }
    let s2 = b.push(
        StepKind::RankFact,
        Rule::TorusKnotRank,
        format!("rk HFK(S3, K0; {})", 1 - g as i64),
        vec![StepInput::Word("phi[0]".into())],
        StepOutput::interval(RankInterval::exact(r)),
        cite(
            "torus-knot-staircase",
            "K0 = T(2,2g+1) is an L-space knot; its staircase has rank one in every grading |j| <= g",
        ),
    );
    Ok(b.triangle(
        format!("rk HFK(Y, K; {})", 1 - g as i64),
        s2,
        s1,
        hfk_triangle(),
    ))
}

/// The three steps bounding `rk HFK(Y, K; 1-g)` by `[0, 2]`, where `(Y, K)`
/// is the open book with monodromy `ψ`.
pub fn derive_base_bound(genus: u32) -> Result<Vec<DerivationStep>> {
    let sys = StandardCurveSystem::new(genus)?;
    let mut b = Builder {
        sys: &sys,
        steps: Vec::new(),
    };
    base_steps(&mut b)?;
    Ok(b.steps)
}

pub fn certify(genus: u32, n: i64) -> Result<Certificate> {
    certify_with(&StandardCurveSystem::new(genus)?, n)
}

/// Runs the derivation on an arbitrary curve system. The system's anchors
/// are checked first, so a corrupted system fails with `AnchorViolation`.
pub fn certify_with(sys: &StandardCurveSystem, n: i64) -> Result<Certificate> {
    if n < 0 {
        return Err(Error::NegativePower(n));
    }
    sys.validate()?;
    let g = sys.genus();
    let mut b = Builder {
        sys,
        steps: Vec::new(),
    };
    let bb = format!("B[{g},{n}]");
    let (ag, ag1) = (format!("a{g}"), format!("a{}", g - 1));
    let n4 = 4 * n as u64;

    let s_ab = b.curve_rank(
        &ag1,
        &bb,
        n4,
        cite("four-n-points", "β_{g,n} = t_c^n(β_g) meets α_{g-1} in 4n points, minimally"),
    )?;
    let s_bag = b.curve_rank(
        &bb,
        &ag,
        1,
        cite("singleton", "α_g is disjoint from c and meets β_g once, so it meets β_{g,n} once"),
    )?;
    let s_bb = b.curve_rank(&bb, &bb, 2, cite("hf-rank-self", "rk HF(a, a) = 2"))?;
    let s_aa = b.curve_rank(&ag, &ag1, 0, rank_iota())?;
    // B misses every b_i with i < g, and every a_i with i < g - 1; the
    // latter twists in psi fix B outright.
    let misses_b: Vec<usize> = (1..g)
        .rev()
        .map(|i| b.curve_rank(&bb, &format!("b{i}"), 0, rank_iota()))
        .collect::<Result<_>>()?;
    for i in 1..g.saturating_sub(1) {
        b.curve_rank(
            &bb,
            &format!("a{i}"),
            0,
            cite("disjoint-support", "a twist about a curve disjoint from x fixes x"),
        )?;
    }

    // HF(t_{a_{g-1}} B, a_g) from the triangle for (B, a_g, a_{g-1}).
    let t5 = b.tensor(
        format!("rk HF({ag1}, {bb}) ⊗ HF({ag}, {ag1})"),
        vec![StepInput::Step(s_ab), StepInput::Step(s_aa)],
    );
    let s6 = b.triangle(format!("rk HF(T({ag1})({bb}), {ag})"), s_bag, t5, seidel());

    // Triangle for (B, B, a_{g-1}).
    let t7 = b.tensor(
        format!("rk HF({ag1}, {bb}) ⊗ HF({bb}, {ag1})"),
        vec![StepInput::Step(s_ab), StepInput::Step(s_ab)],
    );
    let s8 = b.triangle(format!("rk HF(T({ag1})({bb}), {bb})"), s_bb, t7, seidel());
    let d9 = b.difference(format!("rk HF(T({ag1})({bb}), {bb})"), t7, s_bb);

    // Triangle for (t_{a_{g-1}} B, B, a_g).
    let t10 = b.tensor(
        format!("rk HF({ag}, T({ag1})({bb})) ⊗ HF({bb}, {ag})"),
        vec![StepInput::Step(s6), StepInput::Step(s_bag)],
    );
    let mut image = format!("T({ag})(T({ag1})({bb}))");
    let mut tri = b.triangle(format!("rk HF({image}, {bb})"), s8, t10, seidel());
    let mut low = b.difference(format!("rk HF({image}, {bb})"), d9, t10);

    // Then b_1, ..., b_{g-1}: each triangle for (x, B, b_i) has a vanishing
    // lower corner because b_i misses B.
    for (i, fact) in (1..g).zip(misses_b.iter().rev()) {
        let next = if i + 1 == g {
            format!("psi({bb})")
        } else {
            format!("T(b{i})({image})")
        };
        let t = b.tensor(
            format!("rk HF(b{i}, {image}) ⊗ HF({bb}, b{i})"),
            vec![
                StepInput::Unbounded(format!("rk HF(b{i}, {image})")),
                StepInput::Step(*fact),
            ],
        );
        tri = b.triangle(format!("rk HF({next}, {bb})"), tri, t, seidel());
        low = b.difference(format!("rk HF({next}, {bb})"), low, t);
        image = next;
    }
    let (s14, d15) = (tri, low);

    let base = base_steps(&mut b)?;
    let knot = format!("rk HFK(S3, K_{n}; {})", 1 - g as i64);
    b.triangle(knot.clone(), base, s14, hfk_triangle());
    let d20 = b.difference(knot.clone(), d15, base);
    let final_bound = b.out(d20).lower().unwrap();
    let verdict = lspace_obstruction(final_bound, 1 - g as i64, g as i64);
    b.push(
        StepKind::Conclusion,
        Rule::LSpaceCriterion,
        format!("K_{n} is an L-space knot"),
        vec![StepInput::Step(d20)],
        StepOutput::Verdict { verdict },
        cite(
            "l-space-staircase",
            "an L-space knot has knot Floer rank at most 1 in each Alexander grading",
        ),
    );
    Ok(Certificate {
        schema_version: SCHEMA_VERSION,
        genus: g,
        n,
        steps: b.steps,
        final_bound,
        verdict,
    })
}

impl Certificate {
    /// Upper bound of the `rk HFK(Y, K; 1-g)` step.
    pub fn base_bound(&self) -> Option<i64> {
        self.steps
            .iter()
            .find(|s| s.subject.starts_with("rk HFK(Y, K;"))
            .and_then(|s| s.output.upper())
    }

    /// The signed lower bound on `rk HF(psi(B), B)`.
    pub fn hf_lower_bound(&self) -> Option<i64> {
        self.steps
            .iter()
            .rev()
            .find(|s| s.rule == Rule::LowerDifference && s.subject.starts_with("rk HF(psi("))
            .and_then(|s| s.output.lower())
    }

    /// Pretty JSON with a fixed key order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::Serialization(e.to_string()))
    }

    /// One line per step, then the conclusion.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "certificate for K_{} of genus {}", self.n, self.genus);
        for st in &self.steps {
            let inputs: Vec<String> = st
                .inputs
                .iter()
                .map(|x| match x {
                    StepInput::Step(i) => format!("#{i}"),
                    StepInput::Curve(e) | StepInput::Word(e) => e.clone(),
                    StepInput::Unbounded(e) => format!("?{e}"),
                })
                .collect();
            if st.kind == StepKind::Conclusion {
                continue;
            }
            let _ = writeln!(
                s,
                "#{:<2} {:<20} {} {}   via {:?} [{}]  ({})",
                st.index,
                format!("{:?}", st.kind),
                st.subject,
                st.output,
                st.rule,
                inputs.join(", "),
                st.citation.anchor
            );
        }
        let relation = if self.final_bound > 1 { ">" } else { "<=" };
        let tail = match self.verdict {
            Verdict::ObstructionFound => "so K_n is not an L-space knot: obstruction_found",
            Verdict::Inconclusive => "so the staircase criterion is inconclusive",
        };
        let _ = writeln!(
            s,
            "rk HFK(S3, K_n; -g+1) >= 16n^2-5 = {} {relation} 1, {tail}",
            self.final_bound
        );
        s
    }
}

/// Recomputes every step from its inputs and checks it against the
/// recorded value. Returns the rebuilt certificate.
pub fn replay(cert: &Certificate) -> Result<Certificate> {
    let sys = StandardCurveSystem::new(cert.genus)?;
    let mismatch = |step: usize, reason: String| Error::ReplayMismatch { step, reason };
    let mut outputs: Vec<StepOutput> = Vec::new();
    for (i, st) in cert.steps.iter().enumerate() {
        if st.index != i {
            return Err(mismatch(i, format!("index recorded as {}", st.index)));
        }
        let step_ref = |k: usize| -> Result<StepOutput> {
            outputs
                .get(k)
                .copied()
                .ok_or_else(|| mismatch(i, format!("refers to later step #{k}")))
        };
        let bad_inputs = || mismatch(i, "malformed inputs".into());
        let out = match (st.kind, st.rule, st.inputs.as_slice()) {
            (StepKind::RankFact, Rule::CurveRank, [StepInput::Curve(l), StepInput::Curve(r)]) => {
                let a = eval_expression(l, &sys)?;
                let b = eval_expression(r, &sys)?;
                StepOutput::interval(RankInterval::exact(hf_rank(&a, &b)?))
            }
            (StepKind::RankFact, Rule::TorusKnotRank, [StepInput::Word(_)]) => {
                StepOutput::interval(RankInterval::exact(torus_knot_rank(&sys)?))
            }
            (StepKind::TrianglePropagation, Rule::ExactTriangle, [StepInput::Step(a), StepInput::Step(c)]) => {
                let a = step_ref(*a)?.as_interval().ok_or_else(bad_inputs)?;
                let c = step_ref(*c)?.as_interval().ok_or_else(bad_inputs)?;
                StepOutput::interval(triangle_propagate(a, c))
            }
            (StepKind::ArithmeticBound, Rule::Tensor, inputs) => {
                let mut err = None;
                let r = tensor_of(inputs, |k| match step_ref(k) {
                    Ok(o) => o.as_interval(),
                    Err(e) => {
                        err = Some(e);
                        None
                    }
                });
                if let Some(e) = err {
                    return Err(e);
                }
                StepOutput::interval(r.ok_or_else(bad_inputs)?)
            }
            (StepKind::ArithmeticBound, Rule::LowerDifference, [StepInput::Step(a), StepInput::Step(c)]) => {
                let lo = step_ref(*a)?.lower().ok_or_else(bad_inputs)?;
                let hi = step_ref(*c)?.upper().ok_or_else(bad_inputs)?;
                StepOutput::Range { lo: lo - hi, hi: None }
            }
            (StepKind::Conclusion, Rule::LSpaceCriterion, [StepInput::Step(a)]) => {
                let lo = step_ref(*a)?.lower().ok_or_else(bad_inputs)?;
                let g = cert.genus as i64;
                StepOutput::Verdict {
                    verdict: lspace_obstruction(lo, 1 - g, g),
                }
            }
            _ => return Err(bad_inputs()),
        };
        if out != st.output {
            return Err(mismatch(i, format!("recorded {}, recomputed {}", st.output, out)));
        }
        outputs.push(out);
    }
    let concl = cert.steps.last().filter(|s| s.kind == StepKind::Conclusion);
    let Some(concl) = concl else {
        return Err(mismatch(cert.steps.len(), "no conclusion step".into()));
    };
    let StepOutput::Verdict { verdict } = concl.output else {
        return Err(mismatch(concl.index, "conclusion without verdict".into()));
    };
    let bound = match concl.inputs.as_slice() {
        [StepInput::Step(k)] => outputs[*k].lower(),
        _ => None,
    };
    if bound != Some(cert.final_bound) || verdict != cert.verdict {
        return Err(mismatch(concl.index, "final bound or verdict disagrees with the steps".into()));
    }
    Ok(cert.clone())
}

/// Direct measurement of `ι(B, ψ(B))` next to the engine's lower bound.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CrossValidation {
    pub genus: u32,
    pub n: i64,
    /// `None` when skipped (`n = 0`).
    pub direct: Option<u64>,
    pub bound: i64,
    pub slack: Option<i64>,
    /// Word lengths of `B` and `ψ(B)`.
    pub lengths: (usize, usize),
}

/// Default cap on `|B| · |ψ(B)|`, the work of one intersection scan.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

pub fn cross_validate(genus: u32, n: i64, budget: u64) -> Result<CrossValidation> {
    let sys = StandardCurveSystem::new(genus)?;
    let bound = certify_with(&sys, n)?
        .hf_lower_bound()
        .expect("every certificate bounds rk HF(psi(B), B)");
    if n == 0 {
        return Ok(CrossValidation {
            genus,
            n,
            direct: None,
            bound,
            slack: None,
            lengths: (0, 0),
        });
    }
    let b = sys.beta_gn(n)?;
    // ψ(B) has length at most 5|B| + 4 or so; refuse early on a rough estimate.
    let estimate = (b.len() as u64).saturating_mul(6 * b.len() as u64);
    if estimate > budget {
        return Err(Error::BudgetExceeded(format!(
            "estimated work {estimate} exceeds budget {budget}"
        )));
    }
    let pb = sys.psi().apply(&b)?;
    if pb.is_isotopic(&b)? {
        return Err(Error::CrossValidationFailed {
            direct: 2,
            bound,
        });
    }
    let direct = b.intersection_number(&pb)? as i64;
    if direct < bound {
        return Err(Error::CrossValidationFailed { direct, bound });
    }
    Ok(CrossValidation {
        genus,
        n,
        direct: Some(direct as u64),
        bound,
        slack: Some(direct - bound),
        lengths: (b.len(), pb.len()),
    })
}
