//! Laws that ship an assertion file must reach the same verdict through the DSL as
//! through their native implementation, on the same seed.

use trunclat::dsl::{parse_assertion_file, run_assertion_file};
use trunclat::engine::{run_one, Bounds, LawRegistry};
use trunclat::unitization::Unitization;
use trunclat::{Space, TruncationRegistry};

const CONTEXTS: &[(&str, &str)] = &[
    ("sparse_seq", "meet_with_one"),
    ("finite_pointwise(3)", "meet_with_unit"),
    ("lex_plane", "lex_meet_zero_one"),
    ("identity_line", "identity"),
    ("sparse_seq", "fixture_halving"),
    ("sparse_seq", "fixture_zero"),
    ("finite_pointwise(2)", "fixture_halving"),
];

#[test]
fn dsl_and_native_verdicts_agree() {
    let registry = TruncationRegistry::with_fixtures();
    let laws = LawRegistry::standard();
    let twins: Vec<_> = laws
        .laws()
        .filter_map(|l| l.dsl().map(|src| (l, parse_assertion_file(src).unwrap())))
        .collect();
    assert_eq!(twins.len(), 7);
    let mut refuted = 0;
    for &(space, trunc) in CONTEXTS {
        let space = Space::parse_arg(space).unwrap();
        let t = registry.parse_arg(space, trunc).unwrap();
        let ctx = Unitization::new(t.clone());
        for (law, file) in &twins {
            assert_eq!(file.law_id(), law.id());
            let eval_ctx = file.context(t.clone(), &registry).unwrap();
            for seed in 0..100 {
                let native = run_one(*law, &ctx, seed, 20, Bounds::default());
                let dsl = run_assertion_file(file, &eval_ctx, seed, 20, Bounds::default()).unwrap();
                assert_eq!(
                    native.verdict.label(),
                    dsl.verdict.label(),
                    "{} on {space}/{trunc}, seed {seed}\nnative: {native}\ndsl: {dsl}",
                    law.id()
                );
                refuted += native.verdict.is_refuted() as usize;
            }
        }
    }
    assert!(refuted > 0, "the fixtures should refute some twins");
}
