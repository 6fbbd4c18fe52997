mod common;

use twistcert::certificate::{
    certify_with, derive_base_bound, Rule, StepInput, StepKind, StepOutput, DEFAULT_BUDGET,
};
use twistcert::expr::eval_expression;
use twistcert::floer::hf_rank;
use twistcert::mapping_class::StandardCurveSystem;
use twistcert::standard;
use twistcert::surface::parse_word;
use twistcert::{certify, cross_validate, replay, Certificate, Error, Verdict};

fn upper(o: &StepOutput) -> Option<i64> {
    match o {
        StepOutput::Range { hi, .. } => *hi,
        StepOutput::Verdict { .. } => None,
    }
}

#[test]
fn base_bound_is_two() {
    for g in [2, 3, 5] {
        let steps = derive_base_bound(g).unwrap();
        assert_eq!(steps.len(), 3);
        assert_eq!(steps[0].kind, StepKind::RankFact);
        assert_eq!(steps[0].output, StepOutput::Range { lo: 1, hi: Some(1) });
        assert_eq!(steps[1].rule, Rule::TorusKnotRank);
        assert_eq!(steps[1].output, StepOutput::Range { lo: 1, hi: Some(1) });
        assert_eq!(steps[2].kind, StepKind::TrianglePropagation);
        assert_eq!(steps[2].output, StepOutput::Range { lo: 0, hi: Some(2) });
    }
    assert_eq!(derive_base_bound(1).unwrap_err(), Error::GenusTooSmall(1));
}

#[test]
fn certify_examples() {
    let c = certify(2, 1).unwrap();
    assert_eq!((c.final_bound, c.verdict), (11, Verdict::ObstructionFound));
    let c = certify(3, 0).unwrap();
    assert_eq!((c.final_bound, c.verdict), (-5, Verdict::Inconclusive));
    let c = certify(2, 4).unwrap();
    assert_eq!((c.final_bound, c.verdict), (251, Verdict::ObstructionFound));
    assert_eq!(certify(3, 2).unwrap().final_bound, 59);
    assert_eq!(certify(1, 1).unwrap_err(), Error::GenusTooSmall(1));
    assert_eq!(certify(2, -1).unwrap_err(), Error::NegativePower(-1));
}

#[test]
fn embedded_bounds() {
    for g in 2..=4 {
        for n in 0..=6i64 {
            let c = certify(g, n).unwrap();
            assert_eq!(c.base_bound(), Some(2));
            assert_eq!(c.hf_lower_bound(), Some(16 * n * n - 3));
            assert_eq!(c.final_bound, 16 * n * n - 5);
        }
    }
}

#[test]
fn rank_facts_recompute_from_scratch() {
    for g in 2..=4 {
        let sys = StandardCurveSystem::new(g).unwrap();
        for n in [0, 1, 3] {
            let c = certify(g, n).unwrap();
            let mut facts = 0;
            for s in c.steps.iter().filter(|s| s.rule == Rule::CurveRank) {
                let [StepInput::Curve(l), StepInput::Curve(r)] = s.inputs.as_slice() else {
                    panic!("step {} has inputs {:?}", s.index, s.inputs)
                };
                let a = eval_expression(l, &sys).unwrap();
                let b = eval_expression(r, &sys).unwrap();
                let r = hf_rank(&a, &b).unwrap() as i64;
                assert_eq!(s.output, StepOutput::Range { lo: r, hi: Some(r) }, "{}", s.subject);
                facts += 1;
            }
            assert!(facts >= 5);
        }
    }
}

#[test]
fn json_round_trip_replays() {
    for (g, n) in [(2, 0), (2, 1), (3, 2), (4, 5)] {
        let c = certify(g, n).unwrap();
        let json = c.to_json();
        assert_eq!(json, certify(g, n).unwrap().to_json(), "emission is deterministic");
        let back = Certificate::from_json(&json).unwrap();
        assert_eq!(back, c);
        let again = replay(&back).unwrap();
        assert_eq!(again.verdict, c.verdict);
        assert_eq!(again.to_json(), json);
    }
    assert_eq!(Certificate::from_json("{").unwrap_err().name(), "Serialization");
}

#[test]
fn replay_catches_tampering() {
    let c = certify(2, 2).unwrap();
    let mut bumped = c.clone();
    bumped.final_bound += 1;
    assert_eq!(replay(&bumped).unwrap_err().name(), "ReplayMismatch");

    let mut wrong_fact = c.clone();
    wrong_fact.steps[0].output = StepOutput::Range { lo: 9, hi: Some(9) };
    assert!(matches!(replay(&wrong_fact), Err(Error::ReplayMismatch { step: 0, .. })));

    let mut forward = c.clone();
    let tri = forward.steps.iter().position(|s| s.kind == StepKind::TrianglePropagation).unwrap();
    forward.steps[tri].inputs[0] = StepInput::Step(tri + 1);
    assert_eq!(replay(&forward).unwrap_err().name(), "ReplayMismatch");

    let mut verdict = c.clone();
    verdict.verdict = Verdict::Inconclusive;
    assert_eq!(replay(&verdict).unwrap_err().name(), "ReplayMismatch");

    let mut truncated = c;
    truncated.steps.pop();
    assert_eq!(replay(&truncated).unwrap_err().name(), "ReplayMismatch");
}

#[test]
fn monotone_in_n_and_independent_of_g() {
    for n in 0..=8 {
        let here: Vec<i64> = (2..=5).map(|g| certify(g, n).unwrap().final_bound).collect();
        assert!(here.windows(2).all(|w| w[0] == w[1]));
        assert!(certify(2, n + 1).unwrap().final_bound > here[0]);
    }
}

#[test]
fn verdict_boundary() {
    for g in 2..=3 {
        for n in 0..=5 {
            let c = certify(g, n).unwrap();
            assert_eq!(c.verdict == Verdict::ObstructionFound, n >= 1);
            assert_eq!(c.verdict == Verdict::ObstructionFound, c.final_bound > 1);
        }
    }
}

#[test]
fn triangle_steps_match_propagation_and_base_step_bounds() {
    let c = certify(3, 2).unwrap();
    for s in &c.steps {
        if s.kind == StepKind::TrianglePropagation {
            assert_eq!(s.rule, Rule::ExactTriangle);
            assert_eq!(s.inputs.len(), 2);
        }
    }
    let base = c.steps.iter().find(|s| s.subject.starts_with("rk HFK(Y, K;")).unwrap();
    assert_eq!(upper(&base.output), Some(2));
    assert_eq!(c.steps.last().unwrap().kind, StepKind::Conclusion);
}

#[test]
fn text_output() {
    let t = certify(2, 1).unwrap().to_text();
    assert!(t.lines().last().unwrap().contains("16n^2-5 = 11 > 1"), "{t}");
    let t = certify(2, 0).unwrap().to_text();
    assert!(t.contains("inconclusive"), "{t}");
}

#[test]
fn cross_validation() {
    let r = cross_validate(2, 1, DEFAULT_BUDGET).unwrap();
    assert_eq!(r.bound, 13);
    assert!(r.direct.unwrap() >= 13);
    let r = cross_validate(2, 2, DEFAULT_BUDGET).unwrap();
    assert_eq!(r.bound, 61);
    assert!(r.direct.unwrap() >= 61);
    assert_eq!(r.slack, Some(r.direct.unwrap() as i64 - 61));
    let r = cross_validate(2, 0, DEFAULT_BUDGET).unwrap();
    assert_eq!(r.direct, None);
    assert_eq!(cross_validate(2, 3, 100).unwrap_err().name(), "BudgetExceeded");
    assert_eq!(cross_validate(2, -1, DEFAULT_BUDGET).unwrap_err().name(), "NegativePower");
}

#[test]
fn corrupted_system_trips_anchor() {
    // Drop the last letter pair of c: still a simple curve, but no longer
    // the one the anchors describe.
    let g = 2;
    let surface = common::surface(g);
    let chain = standard::chain_words(g);
    let alphas: Vec<_> = chain.iter().step_by(2).cloned().collect();
    let betas: Vec<_> = chain.iter().skip(1).step_by(2).cloned().collect();
    let bad_c = parse_word("e2+ e1+").unwrap();
    let sys = StandardCurveSystem::from_words(surface.clone(), &alphas, &betas, &bad_c).unwrap();
    let e = certify_with(&sys, 1).unwrap_err();
    assert_eq!(e.name(), "AnchorViolation", "{e}");
    // The untouched words certify fine through the same entry point.
    let good = StandardCurveSystem::from_words(surface, &alphas, &betas, &standard::c_word(g)).unwrap();
    assert_eq!(certify_with(&good, 1).unwrap().final_bound, 11);
}
