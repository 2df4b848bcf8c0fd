//! Acceptance gate. Prints one line per criterion; every comparison is exact (rational
//! equality, no tolerance) unless the line says otherwise.

use std::collections::BTreeMap;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use sha2::{Digest, Sha256};
use trunclat::chain::{check_chain_sup_additivity, decompose_chain, is_increasing};
use trunclat::dsl::{parse, parse_assertion_file, run_assertion_file, Term};
use trunclat::engine::{
    archimedean_check, band_component, harmonic_candidates, lemma54_bound, project_band_unitized,
    repro_example43, run_one, ArchimedeanDecision, Bounds, CoordBand, LawRegistry, Refutation,
    SampleGen, UnitizedBand,
};
use trunclat::rational::q;
use trunclat::truncation::{check_tau3, LexMeetZeroOne, MeetWithOne, MeetWithUnit, Tau3Verdict};
use trunclat::unitization::{
    check_ideal, check_thm11_fixedset, orthogonal_complement_witness, ComplementWitness,
    Unitization, UnitizedElement,
};
use trunclat::{Element, Rational, Space, Truncation, TruncationRegistry};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ctx_for(space: &str, trunc: &str) -> Unitization {
    let space = Space::parse_arg(space).unwrap();
    Unitization::new(
        TruncationRegistry::catalog()
            .parse_arg(space, trunc)
            .unwrap(),
    )
}

const PAIRS: [(&str, &str); 4] = [
    ("sparse_seq", "meet_with_one"),
    ("finite_pointwise(3)", "meet_with_unit"),
    ("lex_plane", "lex_meet_zero_one"),
    ("identity_line", "identity"),
];

fn law_suite() -> Outcome {
    let laws = LawRegistry::standard();
    let start = Instant::now();
    let mut runs = 0;
    for (space, trunc) in PAIRS {
        let ctx = ctx_for(space, trunc);
        for id in ["tau1", "tau2", "prop21", "prop22"] {
            let r = run_one(laws.get(id).unwrap(), &ctx, 42, 1000, Bounds::default());
            ensure(r.is_pass() && r.trials == 1000, || {
                format!("{space}/{trunc}: {r}")
            })?;
            runs += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{runs} law runs x 1000 trials pass in {:.2}s (limit 10s)",
        elapsed.as_secs_f64()
    ))
}

/// Lexicographic order written out directly.
fn lex_leq(a: &(Rational, Rational), b: &(Rational, Rational)) -> bool {
    a.0 < b.0 || (a.0 == b.0 && a.1 <= b.1)
}

/// Sup norm of `a_n − c` with `c = (v, λ)` read as the function `k ↦ v_k + λ`.
fn sup_distance(n: u64, c: &UnitizedElement) -> Rational {
    let Element::Sparse(v) = &c.e else {
        unreachable!()
    };
    let top = v.keys().next_back().copied().unwrap_or(0).max(n) + 1;
    let mut d = c.lambda.abs();
    for k in 1..=top {
        let a = if k <= n {
            q(1, k as i64)
        } else {
            Rational::zero()
        };
        let ck = v.get(&k).cloned().unwrap_or_else(Rational::zero) + c.lambda.clone();
        d = d.max((a - ck).abs());
    }
    d
}

fn counterexamples() -> Outcome {
    let mut gen = SampleGen::for_stream(2, "acceptance", Space::LexPlane, Bounds::default());
    let tau3 = check_tau3(&LexMeetZeroOne, &gen.positives(200), 64).map_err(|e| e.to_string())?;
    ensure(tau3 == Tau3Verdict::SymbolicPass, || {
        format!("lex tau3: {tau3:?}")
    })?;
    let pairs = gen.positive_pairs(200);
    let (x, y) = match archimedean_check(Space::LexPlane, &pairs, 64).map_err(|e| e.to_string())? {
        ArchimedeanDecision::SymbolicDecision {
            archimedean: false,
            witness: Some(w),
        } => w,
        other => return Err(format!("lex archimedean: {other:?}")),
    };
    ensure(
        x == Element::lex(q(0, 1), q(1, 1)) && y == Element::lex(q(1, 1), q(0, 1)),
        || format!("witness ({x}, {y})"),
    )?;
    let (ox, oy) = ((q(0, 1), q(1, 1)), (q(1, 1), q(0, 1)));
    for n in 1..=10_000i64 {
        let nx = (&ox.0 * &Rational::from(n), &ox.1 * &Rational::from(n));
        ensure(lex_leq(&nx, &oy), || format!("n = {n}"))?;
    }

    let identity: Arc<dyn Truncation> = TruncationRegistry::catalog()
        .parse_arg(Space::IdentityLine, "identity")
        .unwrap();
    let mut gen = SampleGen::for_stream(2, "acceptance", Space::IdentityLine, Bounds::default());
    match check_tau3(identity.as_ref(), &gen.positives(200), 64).map_err(|e| e.to_string())? {
        Tau3Verdict::SymbolicViolation(a) if !a.is_zero() && a.is_positive() => {}
        other => return Err(format!("identity tau3: {other:?}")),
    }

    let eps = [q(1, 10), q(1, 100)];
    let candidates = harmonic_candidates();
    ensure(candidates.len() >= 20, || {
        "candidate family too small".into()
    })?;
    let out = repro_example43(&eps, 50, &candidates).map_err(|e| e.to_string())?;
    for (e, lo, ok) in &out.cauchy {
        // |a_n − a_m| for m < n has coordinates 1/k, k in m+1..=n, so its 1-uniform size is 1/(m+1)
        ensure(*ok && q(1, *lo as i64 + 1) <= *e, || {
            format!("cauchy window at eps {e}")
        })?;
    }
    for (c, r) in &out.refutations {
        let (e, window) = match r {
            Some(Refutation::ScalarPart { eps, window, .. })
            | Some(Refutation::Coordinate { eps, window, .. }) => (eps, window),
            None => return Err(format!("candidate {c} not refuted")),
        };
        for n in window.0..=window.1 {
            ensure(sup_distance(n, c) > *e, || {
                format!("oracle distance of a_{n} to {c} is within {e}")
            })?;
        }
    }
    Ok(format!(
        "lex witness ((0,1),(1,0)) replayed to n=10000; identity tau3 symbolic violation; harmonic: {} windows Cauchy, {}/{} candidates refuted",
        out.cauchy.len(),
        out.refutations.len(),
        candidates.len()
    ))
}

/// `(e, λ)` as the function `k ↦ e_k + λ`: values on the support plus the tail value.
#[derive(Debug, Clone, PartialEq)]
struct Func {
    values: BTreeMap<u64, Rational>,
    tail: Rational,
}

impl Func {
    fn of(x: &UnitizedElement) -> Func {
        let Element::Sparse(m) = &x.e else {
            unreachable!()
        };
        Func {
            values: m.iter().map(|(k, v)| (*k, v + &x.lambda)).collect(),
            tail: x.lambda.clone(),
        }
    }
    fn at(&self, k: u64) -> Rational {
        self.values
            .get(&k)
            .cloned()
            .unwrap_or_else(|| self.tail.clone())
    }
    fn zip(&self, o: &Func, f: impl Fn(Rational, Rational) -> Rational) -> Func {
        let keys: Vec<u64> = self.values.keys().chain(o.values.keys()).copied().collect();
        Func {
            values: keys
                .into_iter()
                .map(|k| (k, f(self.at(k), o.at(k))))
                .collect(),
            tail: f(self.tail.clone(), o.tail.clone()),
        }
    }
    fn nonneg(&self) -> bool {
        !self.tail.is_negative() && self.values.values().all(|v| !v.is_negative())
    }
    fn leq(&self, o: &Func) -> bool {
        o.zip(self, |a, b| a - b).nonneg()
    }
    fn back(&self) -> UnitizedElement {
        UnitizedElement::new(
            Element::sparse(self.values.iter().map(|(k, v)| (*k, v - &self.tail))),
            self.tail.clone(),
        )
    }
}

fn unitization_oracle() -> Outcome {
    let ctx = Unitization::new(Arc::new(MeetWithOne));
    let mut gen = SampleGen::for_stream(3, "acceptance", Space::SparseSeq, Bounds::default());
    let zero = Func {
        values: BTreeMap::new(),
        tail: Rational::zero(),
    };
    for i in 0..1000 {
        let (a, b) = (gen.unitized(), gen.unitized());
        let (fa, fb) = (Func::of(&a), Func::of(&b));
        let err = |what: &str| format!("sample {i}: {what} differs at a = {a}, b = {b}");
        ensure(ctx.is_positive(&a).unwrap() == fa.nonneg(), || {
            err("is_positive")
        })?;
        ensure(
            ctx.abs(&a).unwrap() == fa.zip(&zero, |x, _| x.abs()).back(),
            || err("abs"),
        )?;
        ensure(
            ctx.join(&a, &b).unwrap() == fa.zip(&fb, Rational::max).back(),
            || err("join"),
        )?;
        ensure(
            ctx.meet(&a, &b).unwrap() == fa.zip(&fb, Rational::min).back(),
            || err("meet"),
        )?;
    }
    let mut bounds_checked = 0;
    for i in 0..1000 {
        let a = gen.unitized();
        let abs = ctx.abs(&a).unwrap();
        let (fa, fabs) = (Func::of(&a), Func::of(&abs));
        let fneg = zero.zip(&fa, |z, x| z - x);
        ensure(fa.leq(&fabs) && fneg.leq(&fabs), || {
            format!("sample {i}: |a| is not an upper bound")
        })?;
        let mut zs = vec![
            abs.add(&gen.positive_unitized(ctx.truncation())).unwrap(),
            gen.unitized(),
        ];
        zs.push(ctx.join(&a, &gen.unitized()).unwrap().add(&abs).unwrap());
        for z in zs {
            let fz = Func::of(&z);
            if fa.leq(&fz) && fneg.leq(&fz) {
                bounds_checked += 1;
                ensure(fabs.leq(&fz), || {
                    format!("sample {i}: |a| above the upper bound {z}")
                })?;
            }
        }
    }
    Ok(format!("is_positive/abs/join/meet agree with the pointwise oracle on 1000 samples; abs least upper bound on 1000 samples ({bounds_checked} upper bounds)"))
}

fn embedding() -> Outcome {
    let sparse = Unitization::new(Arc::new(MeetWithOne));
    let mut gen = SampleGen::for_stream(4, "acceptance", Space::SparseSeq, Bounds::default());
    let r = check_thm11_fixedset(&sparse, &gen.elements(1000)).map_err(|e| e.to_string())?;
    ensure(r.is_pass() && r.trials == 1000, || format!("{r}"))?;
    let pairs: Vec<(Element, UnitizedElement)> = (0..1000)
        .map(|_| {
            let a = gen.element();
            let b = if gen.chance(1, 2) {
                UnitizedElement::embed(a.abs().meet(&gen.positive()).unwrap())
            } else {
                gen.unitized()
            };
            (a, b)
        })
        .collect();
    let ideal = check_ideal(&sparse, &pairs).map_err(|e| e.to_string())?;
    ensure(ideal.is_pass(), || format!("{ideal}"))?;

    let unit = Element::dense(vec![Rational::one(); 3]);
    let unital = Unitization::new(Arc::new(MeetWithUnit::new(unit.clone()).unwrap()));
    let mut gen = SampleGen::for_stream(
        4,
        "acceptance",
        Space::FinitePointwise(3),
        Bounds::default(),
    );
    let xs = gen.elements(200);
    let (w, r) = orthogonal_complement_witness(&unital, &xs, &[Rational::one()], &[])
        .map_err(|e| e.to_string())?;
    let expected_w = UnitizedElement::new(unit.negate(), Rational::one());
    ensure(
        w == ComplementWitness::UnitalSpan {
            w: expected_w.clone(),
        } && r.is_pass()
            && r.trials == 200,
        || format!("{w:?} {r}"),
    )?;
    // oracle: in product coordinates (e + λu, λ), w = (0, 0, 0, 1) and x = (x, 0)
    for x in &xs {
        ensure(
            unital
                .meet(
                    &unital.abs(&expected_w).unwrap(),
                    &UnitizedElement::embed(x.abs()),
                )
                .unwrap()
                .is_zero(),
            || format!("(−u,1) meets {x}"),
        )?;
    }

    let mut gen = SampleGen::for_stream(4, "acceptance-z", Space::SparseSeq, Bounds::default());
    let z = UnitizedElement::scalar(Space::SparseSeq, Rational::one());
    let (w, r) =
        orthogonal_complement_witness(&sparse, &gen.elements(50), &[], std::slice::from_ref(&z))
            .map_err(|e| e.to_string())?;
    let ComplementWitness::NonUnitalZero { table } = w else {
        return Err("expected non-unital".into());
    };
    ensure(r.is_pass() && table.len() == 1 && table[0].0 == z, || {
        format!("{r}")
    })?;
    let x = &table[0].1;
    ensure(
        !sparse
            .meet(&z, &UnitizedElement::embed(x.abs()))
            .unwrap()
            .is_zero(),
        || format!("{x}"),
    )?;
    Ok(format!("fixed set on 1000 samples; ideal ({}); (−u,1) disjoint from 200 elements; ({{}},1) refuted by x = {x}", ideal.note.unwrap_or_default()))
}

fn dense_of(x: &Element) -> Vec<Rational> {
    match x {
        Element::Dense(v) => v.clone(),
        _ => unreachable!(),
    }
}

/// Coordinatewise max over the grid `{0, x/3, 2x/3, x}` on the band's coordinates: every
/// grid point lies in `B⁺ ∩ [0, x]`, and the grid contains the supremum.
fn interval_sup(coords: &[usize], x: &[Rational]) -> Vec<Rational> {
    let fracs = [q(0, 1), q(1, 3), q(2, 3), q(1, 1)];
    let mut best = vec![Rational::zero(); x.len()];
    let mut idx = vec![0usize; coords.len()];
    loop {
        let mut y = vec![Rational::zero(); x.len()];
        for (j, &k) in coords.iter().enumerate() {
            y[k - 1] = &x[k - 1] * &fracs[idx[j]];
        }
        for (b, v) in best.iter_mut().zip(y) {
            *b = b.clone().max(v);
        }
        let mut j = 0;
        while j < idx.len() && idx[j] == fracs.len() - 1 {
            idx[j] = 0;
            j += 1;
        }
        if j == idx.len() {
            return best;
        }
        idx[j] += 1;
    }
}

fn bands() -> Outcome {
    for i in 0..500usize {
        let dim = 1 + i % 4;
        let mut gen = SampleGen::for_stream(
            i as u64,
            "acceptance-band",
            Space::FinitePointwise(dim),
            Bounds::default(),
        );
        let coords: Vec<usize> = (1..=dim).filter(|_| gen.chance(1, 2)).collect();
        let band = CoordBand::new(dim, coords.clone()).unwrap();
        let x = gen.positive();
        let c = band_component(&band, &x).map_err(|e| e.to_string())?;
        ensure(dense_of(&c) == interval_sup(&coords, &dense_of(&x)), || {
            format!("instance {i}: {c} for {x}")
        })?;
    }
    for i in 0..500usize {
        let dim = 1 + i % 4;
        let u = Element::dense(vec![Rational::one(); dim]);
        let ctx = Unitization::new(Arc::new(MeetWithUnit::new(u.clone()).unwrap()));
        let mut gen = SampleGen::for_stream(
            i as u64,
            "acceptance-proj",
            Space::FinitePointwise(dim),
            Bounds::default(),
        );
        let coords: Vec<usize> = (1..=dim).filter(|_| gen.chance(1, 2)).collect();
        let band = UnitizedBand {
            base: CoordBand::new(dim, coords).unwrap(),
            include_dual: gen.chance(1, 2),
        };
        let x = gen.unitized();
        let (p, r) = project_band_unitized(&ctx, &band, &x).map_err(|e| e.to_string())?;
        ensure(p.add(&r).unwrap() == x, || {
            format!("instance {i}: parts do not sum to {x}")
        })?;
        // oracle: in product coordinates the order is coordinatewise, so disjoint means
        // no coordinate is nonzero in both
        let prod = |y: &UnitizedElement| {
            let mut v = dense_of(&y.e.add(&u.scale(&y.lambda)).unwrap());
            v.push(y.lambda.clone());
            v
        };
        let (pp, pr) = (prod(&p), prod(&r));
        ensure(
            pp.iter().zip(&pr).all(|(a, b)| a.is_zero() || b.is_zero()),
            || format!("instance {i}: parts of {x} not disjoint"),
        )?;
    }
    Ok("band_component = interval-sup oracle on 500 instances (n <= 4); 500 projections disjoint and summing to x".into())
}

fn chains() -> Outcome {
    let mut gen = SampleGen::for_stream(
        6,
        "acceptance",
        Space::FinitePointwise(3),
        Bounds::default(),
    );
    let chain_of = |gen: &mut SampleGen, cap: Option<&Element>| -> Vec<Element> {
        let len = 1 + gen.below(6) as usize;
        let mut x = Element::zero(gen.space());
        (0..len)
            .map(|_| {
                x = x.add(&gen.positive()).unwrap();
                if let Some(c) = cap {
                    x = x.meet(c).unwrap();
                }
                x.clone()
            })
            .collect()
    };
    for i in 0..500 {
        let (u, v) = (gen.element(), gen.element());
        let cap = u.abs().add(&v.abs()).unwrap();
        let chain = chain_of(&mut gen, Some(&cap));
        let s = decompose_chain(&chain, &u, &v).map_err(|e| e.to_string())?;
        let zero = Element::zero(gen.space());
        let mut ok = is_increasing(&s.u_chain).unwrap() && is_increasing(&s.v_chain).unwrap();
        for ((x, a), b) in chain.iter().zip(&s.u_chain).zip(&s.v_chain) {
            ok &= a.add(b).unwrap() == *x;
            ok &= zero.leq(a).unwrap() && a.leq(&u.abs()).unwrap();
            ok &= zero.leq(b).unwrap() && b.leq(&v.abs()).unwrap();
        }
        ensure(ok, || format!("chain {i}: split postconditions fail"))?;
    }
    for i in 0..500 {
        let xs = chain_of(&mut gen, None);
        let mut ys = chain_of(&mut gen, None);
        ys.resize(xs.len(), ys.last().unwrap().clone());
        let ok = check_chain_sup_additivity(&xs, &ys).map_err(|e| e.to_string())?;
        let expected = xs.last().unwrap().add(ys.last().unwrap()).unwrap();
        let direct = xs
            .iter()
            .zip(&ys)
            .fold(Element::zero(gen.space()), |m, (x, y)| {
                m.join(&x.add(y).unwrap()).unwrap()
            });
        ensure(ok && direct == expected, || format!("chain pair {i}"))?;
    }
    let ctx = Unitization::new(Arc::new(MeetWithOne));
    let mut gen = SampleGen::for_stream(6, "acceptance", Space::SparseSeq, Bounds::default());
    let mut total = 0;
    for i in 0..100 {
        let n = 1 + gen.below(4) as usize;
        let set = gen.elements(n);
        let a0 = Element::sup_finite(&set).unwrap();
        let bounds: Vec<UnitizedElement> = (0..100)
            .map(|j| {
                let mu = if j % 3 == 0 {
                    Rational::zero()
                } else {
                    gen.positive_rational()
                };
                let (p, y) = (gen.positive(), gen.positive());
                lemma54_bound(&ctx, &a0, &p, &y, &mu).unwrap()
            })
            .collect();
        let fa0 = Func::of(&UnitizedElement::embed(a0.clone()));
        for z in &bounds {
            let fz = Func::of(z);
            for a in &set {
                ensure(
                    Func::of(&UnitizedElement::embed(a.clone())).leq(&fz),
                    || format!("set {i}: {z} is not an upper bound"),
                )?;
            }
            ensure(fa0.leq(&fz), || {
                format!("set {i}: oracle puts sup above {z}")
            })?;
        }
        let r = trunclat::engine::check_lemma54(&ctx, &set, &bounds).map_err(|e| e.to_string())?;
        ensure(r.is_pass() && r.trials == 100, || format!("set {i}: {r}"))?;
        total += r.trials;
    }
    Ok(format!(
        "500 chain splits, 500 chain-sup additivity pairs, {total} upper bounds over 100 sets"
    ))
}

const CHECK_ARGS: [&str; 8] = [
    "check",
    "--space",
    "sparse_seq",
    "--seed",
    "7",
    "--trials",
    "200",
    "--format",
];

/// sha256 of `trunclat check --space sparse_seq --seed 7 --trials 200 --format json`.
const CHECK_JSON_SHA256: &str = "8cafb174202b38093b8ffaabb79a7f1f6a4a91650d3036b26e09d5ade23f8f72";

fn determinism() -> Outcome {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_trunclat"))
            .args(CHECK_ARGS)
            .arg("json")
            .env_remove("TRUNCLAT_SEED")
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    let (a, b) = (run(), run());
    ensure(a == b, || "two runs differ".into())?;
    let digest = format!("{:x}", Sha256::digest(&a));
    ensure(digest == CHECK_JSON_SHA256, || {
        format!("output checksum {digest} differs from the pinned one")
    })?;
    let lines = String::from_utf8(a).unwrap().lines().count();
    Ok(format!(
        "two runs byte-identical ({lines} JSON lines) and match the pinned sha256 on {}-{}; no second platform available to run here",
        std::env::consts::OS,
        std::env::consts::ARCH
    ))
}

fn random_term(gen: &mut SampleGen, depth: u32) -> Term {
    let names = ["x", "y", "z", "a1", "b_2"];
    if depth == 0 || gen.chance(1, 4) {
        return match gen.below(3) {
            0 => Term::var(names[gen.below(names.len() as u64) as usize]),
            1 => Term::Lit(gen.rational()),
            _ => Term::One,
        };
    }
    let sub = |gen: &mut SampleGen| Box::new(random_term(gen, depth - 1));
    match gen.below(9) {
        0 => Term::Add(sub(gen), sub(gen)),
        1 => Term::Sub(sub(gen), sub(gen)),
        2 => Term::Join(sub(gen), sub(gen)),
        3 => Term::Meet(sub(gen), sub(gen)),
        4 => Term::Scale(gen.rational(), sub(gen)),
        5 => Term::Abs(sub(gen)),
        6 => Term::Pos(sub(gen)),
        7 => Term::Neg(sub(gen)),
        _ => Term::Trunc(sub(gen)),
    }
}

fn dsl() -> Outcome {
    let mut gen = SampleGen::for_stream(8, "acceptance", Space::SparseSeq, Bounds::default());
    for i in 0..1000 {
        let t = random_term(&mut gen, 5);
        let back = parse(&t.render()).map_err(|e| format!("ast {i}: {e}"))?;
        ensure(back == t, || {
            format!("ast {i}: {} re-renders as {}", t.render(), back.render())
        })?;
    }
    let registry = TruncationRegistry::catalog();
    let laws = LawRegistry::standard();
    let mut runs = 0;
    for (space, trunc) in PAIRS {
        let t = registry
            .parse_arg(Space::parse_arg(space).unwrap(), trunc)
            .unwrap();
        let ctx = Unitization::new(t.clone());
        for law in laws.laws() {
            let Some(src) = law.dsl() else { continue };
            let file = parse_assertion_file(src).map_err(|e| e.to_string())?;
            let eval_ctx = file
                .context(t.clone(), &registry)
                .map_err(|e| e.to_string())?;
            for seed in 0..100 {
                let native = run_one(law, &ctx, seed, 10, Bounds::default());
                let via_dsl = run_assertion_file(&file, &eval_ctx, seed, 10, Bounds::default())
                    .map_err(|e| e.to_string())?;
                ensure(native.verdict.label() == via_dsl.verdict.label(), || {
                    format!(
                        "{} on {space}, seed {seed}: {native} vs {via_dsl}",
                        law.id()
                    )
                })?;
                runs += 1;
            }
        }
    }
    Ok(format!(
        "parse(render(t)) = t on 1000 ASTs; {runs} native/DSL runs agree over 100 seeds"
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("law suite on the four cataloged pairs", law_suite),
        ("counterexample pack", counterexamples),
        ("unitization vs pointwise oracle", unitization_oracle),
        ("E inside its unitization", embedding),
        ("band components and projections", bands),
        ("chain decomposition, additivity, sup transfer", chains),
        ("determinism of check output", determinism),
        ("DSL round trip and native agreement", dsl),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!(
                "criterion {} PASS [{name}] {detail} ({secs:.2}s, exact)",
                i + 1
            ),
            Err(why) => {
                println!(
                    "criterion {} FAIL [{name}] {why} ({secs:.2}s, exact)",
                    i + 1
                );
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
