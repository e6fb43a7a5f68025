//! The claims harness: every check re-derives a desk-scale shadow of one of
//! the ordering-theoretic statements and returns a structured [`Report`].
//!
//! Checks never weaken themselves to pass: `fail` always carries a
//! machine-checkable witness, `inconclusive` marks an exhausted search
//! (never a violation), and `not-applicable` marks parameters violating a
//! hypothesis of the statement (the Klein case). Randomized parts draw from
//! a seeded generator recorded in the report, so reports are deterministic
//! given (parameters, config, seed).

use std::cmp::Ordering;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use ordcore::enumerate::{
    ball, factorize_in_cone, fingerprint, sigma_negative_words, sigma_positive_words, Ball,
    BallError, DEFAULT_BALL_CAP,
};
use ordcore::group::{invert, multiply, normal_form, power, s2_power_of, NormalForm};
use ordcore::orders::{compare, minimal_positive_probe, sign, sign_d, OrderSpec, Sign};
use ordcore::tree::{apply_normal_form, compare_ends, End, Side};
use ordcore::words::{parse_word, Alphabet, Word};
use ordcore::GroupParams;

use crate::report::{report, Report, Verdict};

/// Shared knobs: the RNG seed recorded in every report and the ball
/// cardinality cap.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub seed: u64,
    pub ball_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            ball_cap: DEFAULT_BALL_CAP,
        }
    }
}

fn nf(text: &str, params: &GroupParams) -> NormalForm {
    normal_form(
        &ordcore::words::parse_word_any(text).expect("builtin word"),
        params,
    )
}

/// Ball construction with the cap turned into an `inconclusive` report
/// rather than a panic.
fn ball_or_report(
    check: &str,
    alphabet: Alphabet,
    radius: u32,
    params: &GroupParams,
    opts: &VerifyOptions,
    config: &Value,
    started: Instant,
) -> Result<Ball, Report> {
    match ball(alphabet, radius, params, opts.ball_cap) {
        Ok(b) => Ok(b),
        Err(BallError::CapExceeded { cap }) => Err(report(
            check,
            params,
            config.clone(),
            opts.seed,
            Verdict::Inconclusive,
            vec![json!({"error": format!("ball exceeds the element cap {cap}")})],
            0,
            started.elapsed().as_millis() as u64,
        )),
    }
}

/// True when the non-degeneracy hypothesis on the twisted generators holds:
/// neither `b a b = a` nor `a b a = b`. It fails exactly in the Klein case,
/// where `b a b = a`.
fn twisted_hypothesis_holds(params: &GroupParams) -> Option<&'static str> {
    if nf("b a b", params) == nf("a", params) {
        return Some("b a b = a");
    }
    if nf("a b a", params) == nf("b", params) {
        return Some("a b a = b");
    }
    None
}

// ---------------------------------------------------------------------------
// property A
// ---------------------------------------------------------------------------

/// No sigma-positive word and no nonempty positive `{a, b}`-word represents
/// the identity.
pub fn check_property_a(
    params: &GroupParams,
    sigma_len: usize,
    cone_len: usize,
    opts: &VerifyOptions,
) -> Report {
    let started = Instant::now();
    let config = json!({"sigma_len": sigma_len, "cone_len": cone_len});
    let mut witnesses = Vec::new();
    let mut items = 0u64;

    for i in [1u8, 2] {
        for w in sigma_positive_words(i, sigma_len) {
            items += 1;
            if normal_form(&w, params).is_identity() {
                witnesses.push(json!({"word": w.to_string(), "class": format!("{i}-positive")}));
            }
        }
    }

    // positive {a, b}-words, generated incrementally
    let gens = [nf("a", params), nf("b", params)];
    let names = ["a", "b"];
    let mut frontier: Vec<(String, NormalForm)> = vec![(String::new(), NormalForm::identity())];
    for _ in 0..cone_len {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for (text, u) in &frontier {
            for (g, name) in gens.iter().zip(names) {
                let v = multiply(u, g, params);
                let t = if text.is_empty() {
                    name.to_string()
                } else {
                    format!("{text} {name}")
                };
                items += 1;
                if v.is_identity() {
                    witnesses.push(json!({"word": t, "class": "cone-positive"}));
                }
                next.push((t, v));
            }
        }
        frontier = next;
    }

    let verdict = if witnesses.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    report(
        "property_a",
        params,
        config,
        opts.seed,
        verdict,
        witnesses,
        items,
        started.elapsed().as_millis() as u64,
    )
}

// ---------------------------------------------------------------------------
// property C (consistency plus coverage, never a completeness claim)
// ---------------------------------------------------------------------------

pub fn check_property_c_coverage(
    params: &GroupParams,
    radius: u32,
    search_len: usize,
    opts: &VerifyOptions,
) -> Report {
    let started = Instant::now();
    let config = json!({"radius": radius, "search_len": search_len});
    let b = match ball_or_report(
        "property_c",
        Alphabet::S,
        radius,
        params,
        opts,
        &config,
        started,
    ) {
        Ok(b) => b,
        Err(r) => return r,
    };

    let mut witnesses = Vec::new();
    let mut items = 0u64;
    // canonical text -> (sign implied by the word class, sample word)
    let mut reps: std::collections::BTreeMap<String, (Sign, String)> =
        std::collections::BTreeMap::new();
    for i in [1u8, 2] {
        for (words, class) in [
            (sigma_positive_words(i, search_len), Sign::Positive),
            (sigma_negative_words(i, search_len), Sign::Negative),
        ] {
            for w in words {
                items += 1;
                let u = normal_form(&w, params);
                let actual = sign_d(&u, params);
                if actual != class {
                    witnesses.push(json!({
                        "word": w.to_string(),
                        "claimed": class.symbol(),
                        "sign_d": actual.symbol(),
                    }));
                }
                reps.entry(u.canonical_text())
                    .or_insert_with(|| (class, w.to_string()));
            }
        }
    }

    if !witnesses.is_empty() {
        return report(
            "property_c",
            params,
            config,
            opts.seed,
            Verdict::Fail,
            witnesses,
            items,
            started.elapsed().as_millis() as u64,
        );
    }

    let mut covered = 0usize;
    let mut missed = Vec::new();
    let mut total = 0usize;
    for entry in b.iter() {
        if entry.nf.is_identity() {
            continue;
        }
        total += 1;
        if reps.contains_key(&entry.nf.canonical_text()) {
            covered += 1;
        } else {
            missed.push(entry.word.to_string());
        }
    }
    let mut witnesses = vec![json!({"covered": covered, "total": total})];
    let verdict = if covered == total {
        Verdict::Pass
    } else {
        witnesses.push(json!({"missed": missed}));
        Verdict::Inconclusive
    };
    report(
        "property_c",
        params,
        config,
        opts.seed,
        verdict,
        witnesses,
        items,
        started.elapsed().as_millis() as u64,
    )
}

// ---------------------------------------------------------------------------
// property F
// ---------------------------------------------------------------------------

/// Conjugates `a b^-r a^-1` and `a^-1 b^-r a` land in the positive cone but
/// outside the subgroup generated by `s2`. The four sign variants of the
/// conjugation lemma are evaluated and recorded.
pub fn check_property_f(params: &GroupParams, max_r: u32, opts: &VerifyOptions) -> Report {
    let started = Instant::now();
    let config = json!({"max_r": max_r});
    if let Some(relation) = twisted_hypothesis_holds(params) {
        return report(
            "property_f",
            params,
            config,
            opts.seed,
            Verdict::NotApplicable,
            vec![json!({"hypothesis": "b a b != a and a b a != b", "violated_by": relation})],
            0,
            started.elapsed().as_millis() as u64,
        );
    }

    let (a, b) = (nf("a", params), nf("b", params));
    let a_inv = invert(&a, params);
    let mut witnesses = Vec::new();
    let mut items = 0u64;
    let mut failed = false;

    for r in 1..=max_r {
        let b_neg = power(&b, -i64::from(r), params);
        for (tag, w) in [
            ("a b^-r a^-1", multiply(&multiply(&a, &b_neg, params), &a_inv, params)),
            ("a^-1 b^-r a", multiply(&multiply(&a_inv, &b_neg, params), &a, params)),
        ] {
            items += 1;
            let s = sign(&OrderSpec::Isolated, &w, params);
            let off_center = s2_power_of(&w, params).is_none();
            if s != Sign::Positive || !off_center {
                failed = true;
                witnesses.push(json!({
                    "form": tag, "r": r,
                    "sign_a": s.symbol(),
                    "s2_power": !off_center,
                }));
            }
        }
    }

    // the four sign variants of the conjugation statement, recorded for the
    // record (the two with inverted middle sign hold, the others do not)
    let b_inv = invert(&b, params);
    for (name, w) in [
        ("p q^-1 p^-1", multiply(&multiply(&a, &b_inv, params), &a_inv, params)),
        ("p^-1 q^-1 p", multiply(&multiply(&a_inv, &b_inv, params), &a, params)),
        ("p q p^-1", multiply(&multiply(&a, &b, params), &a_inv, params)),
        ("p^-1 q p", multiply(&multiply(&a_inv, &b, params), &a, params)),
    ] {
        items += 1;
        let holds = sign(&OrderSpec::Isolated, &w, params) == Sign::Positive
            && s2_power_of(&w, params).is_none();
        witnesses.push(json!({"variant": name, "in_cone_off_center": holds}));
    }

    report(
        "property_f",
        params,
        config,
        opts.seed,
        if failed { Verdict::Fail } else { Verdict::Pass },
        witnesses,
        items,
        started.elapsed().as_millis() as u64,
    )
}

// ---------------------------------------------------------------------------
// order axioms
// ---------------------------------------------------------------------------

pub fn check_order_axioms(
    params: &GroupParams,
    spec: &OrderSpec,
    radius: u32,
    samples: u32,
    opts: &VerifyOptions,
) -> Report {
    let started = Instant::now();
    let config = json!({"spec": spec.label(), "radius": radius, "samples": samples});
    let b = match ball_or_report(
        "order_axioms",
        spec.natural_alphabet(),
        radius,
        params,
        opts,
        &config,
        started,
    ) {
        Ok(b) => b,
        Err(r) => return r,
    };
    let entries: Vec<_> = b.iter().collect();
    let mut witnesses = Vec::new();
    let mut items = 0u64;

    let mut positives = Vec::new();
    for e in &entries {
        items += 1;
        let s = sign(spec, &e.nf, params);
        if (s == Sign::Zero) != e.nf.is_identity() {
            witnesses.push(json!({"axiom": "trichotomy", "g": e.word.to_string(), "sign": s.symbol()}));
        }
        if sign(spec, &invert(&e.nf, params), params) != s.negated() {
            witnesses.push(json!({"axiom": "inverse", "g": e.word.to_string()}));
        }
        if s == Sign::Positive {
            positives.push(e);
        }
    }

    for u in &positives {
        for v in &positives {
            items += 1;
            if sign(spec, &multiply(&u.nf, &v.nf, params), params) != Sign::Positive {
                witnesses.push(json!({
                    "axiom": "cone-closure",
                    "g": u.word.to_string(),
                    "h": v.word.to_string(),
                }));
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let pick = |rng: &mut ChaCha8Rng| rng.random_range(0..entries.len());
    for _ in 0..samples {
        items += 1;
        let (f, g, h) = (entries[pick(&mut rng)], entries[pick(&mut rng)], entries[pick(&mut rng)]);
        let plain = compare(spec, &g.nf, &h.nf, params);
        let shifted = compare(
            spec,
            &multiply(&f.nf, &g.nf, params),
            &multiply(&f.nf, &h.nf, params),
            params,
        );
        if plain != shifted {
            witnesses.push(json!({
                "axiom": "left-invariance",
                "f": f.word.to_string(), "g": g.word.to_string(), "h": h.word.to_string(),
            }));
        }
    }
    for _ in 0..samples {
        items += 1;
        let (g, h, k) = (entries[pick(&mut rng)], entries[pick(&mut rng)], entries[pick(&mut rng)]);
        if compare(spec, &g.nf, &h.nf, params) == Ordering::Less
            && compare(spec, &h.nf, &k.nf, params) == Ordering::Less
            && compare(spec, &g.nf, &k.nf, params) != Ordering::Less
        {
            witnesses.push(json!({
                "axiom": "transitivity",
                "g": g.word.to_string(), "h": h.word.to_string(), "k": k.word.to_string(),
            }));
        }
    }

    report(
        "order_axioms",
        params,
        config,
        opts.seed,
        if witnesses.is_empty() { Verdict::Pass } else { Verdict::Fail },
        witnesses,
        items,
        started.elapsed().as_millis() as u64,
    )
}

// ---------------------------------------------------------------------------
// monotone action
// ---------------------------------------------------------------------------

/// A deterministically seeded random valid end.
pub fn sample_end(rng: &mut ChaCha8Rng, params: &GroupParams) -> End {
    let m1 = params.m() - 1;
    let n1 = params.n() - 1;
    let both = m1.min(n1);
    let level = rng.random_range(-2i64..=2);
    let side = if rng.random_bool(0.5) { Side::Plus } else { Side::Minus };
    let pre_len = rng.random_range(0usize..=4);
    let mut pre = Vec::with_capacity(pre_len);
    for j in 0..pre_len {
        let x_pos = (j % 2 == 0) == (side == Side::Plus);
        let max = if x_pos { m1 } else { n1 };
        pre.push(rng.random_range(1..=max));
    }
    let period = if rng.random_bool(0.5) {
        vec![rng.random_range(1..=both)]
    } else {
        let x_pos = (pre_len % 2 == 0) == (side == Side::Plus);
        let (max0, max1) = if x_pos { (m1, n1) } else { (n1, m1) };
        vec![rng.random_range(1..=max0), rng.random_range(1..=max1)]
    };
    End::new(level, side, pre, period, params).expect("sampled end is valid")
}

/// Every ball element acts strictly monotonically on sampled end pairs.
pub fn check_monotone_action(
    params: &GroupParams,
    radius: u32,
    end_samples: u32,
    opts: &VerifyOptions,
) -> Report {
    let started = Instant::now();
    let config = json!({"radius": radius, "end_samples": end_samples});
    let b = match ball_or_report(
        "monotone_action",
        Alphabet::Xy,
        radius,
        params,
        opts,
        &config,
        started,
    ) {
        Ok(b) => b,
        Err(r) => return r,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut pairs = Vec::new();
    let mut attempts = 0;
    while pairs.len() < end_samples as usize && attempts < 100 * end_samples {
        attempts += 1;
        let e1 = sample_end(&mut rng, params);
        let e2 = sample_end(&mut rng, params);
        match compare_ends(&e1, &e2) {
            Ordering::Less => pairs.push((e1, e2)),
            Ordering::Greater => pairs.push((e2, e1)),
            Ordering::Equal => {}
        }
    }

    let mut witnesses = Vec::new();
    let mut items = 0u64;
    for entry in b.iter() {
        for (lo, hi) in &pairs {
            items += 1;
            let glo = apply_normal_form(&entry.nf, lo, params);
            let ghi = apply_normal_form(&entry.nf, hi, params);
            if compare_ends(&glo, &ghi) != Ordering::Less {
                witnesses.push(json!({
                    "g": entry.word.to_string(),
                    "e1": lo.to_string(), "e2": hi.to_string(),
                    "g_e1": glo.to_string(), "g_e2": ghi.to_string(),
                }));
            }
        }
    }

    report(
        "monotone_action",
        params,
        config,
        opts.seed,
        if witnesses.is_empty() { Verdict::Pass } else { Verdict::Fail },
        witnesses,
        items,
        started.elapsed().as_millis() as u64,
    )
}

// ---------------------------------------------------------------------------
// subword
// ---------------------------------------------------------------------------

/// Checks `g < w g` for every ball element `g` and every listed letter `w`;
/// fails with the first witness in (word length, word) order.
pub fn check_subword(
    params: &GroupParams,
    spec: &OrderSpec,
    letters: &[Word],
    radius: u32,
    opts: &VerifyOptions,
) -> Report {
    let started = Instant::now();
    let letter_texts: Vec<String> = letters.iter().map(|w| w.to_string()).collect();
    let config = json!({"spec": spec.label(), "letters": letter_texts, "radius": radius});
    let alphabet = letters.first().map_or(Alphabet::S, |w| w.alphabet());
    let b = match ball_or_report("subword", alphabet, radius, params, opts, &config, started) {
        Ok(b) => b,
        Err(r) => return r,
    };
    let mut items = 0u64;
    for w in letters {
        let w_nf = normal_form(w, params);
        for entry in b.iter_by_length() {
            items += 1;
            if compare(spec, &entry.nf, &multiply(&w_nf, &entry.nf, params), params)
                != Ordering::Less
            {
                return report(
                    "subword",
                    params,
                    config,
                    opts.seed,
                    Verdict::Fail,
                    vec![json!({"letter": w.to_string(), "g": entry.word.to_string()})],
                    items,
                    started.elapsed().as_millis() as u64,
                );
            }
        }
    }
    report(
        "subword",
        params,
        config,
        opts.seed,
        Verdict::Pass,
        Vec::new(),
        items,
        started.elapsed().as_millis() as u64,
    )
}

// ---------------------------------------------------------------------------
// Conradian failure witnesses
// ---------------------------------------------------------------------------

/// Searches `k <= kmax` for positive `f, g` with `f g^2 <= g`, the standard
/// witness families for each ordering.
pub fn check_conradian_witness(
    params: &GroupParams,
    spec: &OrderSpec,
    kmax: u32,
    opts: &VerifyOptions,
) -> Report {
    let started = Instant::now();
    let config = json!({"spec": spec.label(), "kmax": kmax});
    if let Some(relation) = twisted_hypothesis_holds(params) {
        return report(
            "conradian",
            params,
            config,
            opts.seed,
            Verdict::NotApplicable,
            vec![json!({"hypothesis": "b a b != a and a b a != b", "violated_by": relation})],
            0,
            started.elapsed().as_millis() as u64,
        );
    }
    let (a, b) = (nf("a", params), nf("b", params));
    let mut items = 0u64;

    let found: Option<(u32, Value)> = match spec {
        OrderSpec::Isolated => (0..=kmax).find_map(|k| {
            items += 1;
            // N = (b^k a)^-1 b (b^k a)^2 ; f = b, g = b^k a
            let g = multiply(&power(&b, i64::from(k), params), &a, params);
            let n = multiply(
                &multiply(&invert(&g, params), &b, params),
                &power(&g, 2, params),
                params,
            );
            if compare(spec, &n, &NormalForm::identity(), params) != Ordering::Greater {
                let fg = json!({
                    "k": k,
                    "f": "b",
                    "g": format!("b^{k} a"),
                    "f_sign": sign(spec, &b, params).symbol(),
                    "g_sign": sign(spec, &g, params).symbol(),
                    "g^-1 f g^2": n.canonical_text(),
                });
                Some((k, fg))
            } else {
                None
            }
        }),
        OrderSpec::DehornoyLike => (0..=kmax).find_map(|k| {
            items += 1;
            // f = a b^(k+2), g = a b^(k+1) a b^(k+1)
            let bk1 = power(&b, i64::from(k) + 1, params);
            let f = multiply(&a, &multiply(&bk1, &b, params), params);
            let g = multiply(&multiply(&a, &bk1, params), &multiply(&a, &bk1, params), params);
            let n = multiply(
                &multiply(&invert(&g, params), &f, params),
                &power(&g, 2, params),
                params,
            );
            if sign(spec, &n, params) == Sign::Negative {
                let fg = json!({
                    "k": k,
                    "f": format!("a b^{}", k + 2),
                    "g": format!("a b^{} a b^{}", k + 1, k + 1),
                    "f_sign": sign(spec, &f, params).symbol(),
                    "g_sign": sign(spec, &g, params).symbol(),
                    "g^-1 f g^2": n.canonical_text(),
                });
                Some((k, fg))
            } else {
                None
            }
        }),
        OrderSpec::Shifted { .. } => {
            return report(
                "conradian",
                params,
                config,
                opts.seed,
                Verdict::Inconclusive,
                vec![json!({"note": "witness families are defined for the D and A orderings"})],
                0,
                started.elapsed().as_millis() as u64,
            );
        }
    };

    match found {
        Some((_, witness)) => report(
            "conradian",
            params,
            config,
            opts.seed,
            Verdict::Pass,
            vec![witness],
            items,
            started.elapsed().as_millis() as u64,
        ),
        None => report(
            "conradian",
            params,
            config,
            opts.seed,
            Verdict::Fail,
            vec![json!({"searched_up_to": kmax})],
            items,
            started.elapsed().as_millis() as u64,
        ),
    }
}

// ---------------------------------------------------------------------------
// convergence of the conjugate orderings
// ---------------------------------------------------------------------------

/// Fingerprints of `D.shift(b^k a)` against `D`: stabilization on the given
/// ball together with a per-`k` distinguishing element of the witness ball.
pub fn check_convergence(
    params: &GroupParams,
    radius: u32,
    kmax: u32,
    witness_radius: u32,
    opts: &VerifyOptions,
) -> Report {
    let started = Instant::now();
    let config = json!({"radius": radius, "kmax": kmax, "witness_radius": witness_radius});
    if radius == 0 {
        return report(
            "convergence",
            params,
            config,
            opts.seed,
            Verdict::Pass,
            vec![json!({"note": "radius 0: the ball is trivial, nothing to distinguish"})],
            0,
            started.elapsed().as_millis() as u64,
        );
    }
    let (a, b) = (nf("a", params), nf("b", params));
    let shift_of = |k: u32| -> OrderSpec {
        OrderSpec::DehornoyLike.shifted(multiply(&power(&b, i64::from(k), params), &a, params))
    };

    let mut items = 0u64;
    let fp_d = match fingerprint(&OrderSpec::DehornoyLike, Alphabet::A, radius, params, opts.ball_cap)
    {
        Ok(fp) => fp,
        Err(e) => {
            return report(
                "convergence",
                params,
                config,
                opts.seed,
                Verdict::Inconclusive,
                vec![json!({"error": e.to_string()})],
                0,
                started.elapsed().as_millis() as u64,
            )
        }
    };
    let mut equal_from: Vec<bool> = Vec::with_capacity(kmax as usize);
    for k in 1..=kmax {
        let fp_k = fingerprint(&shift_of(k), Alphabet::A, radius, params, opts.ball_cap)
            .expect("radius already enumerated");
        items += fp_k.signs.len() as u64;
        equal_from.push(fp_k.same_signs(&fp_d));
    }
    let stabilized_at =
        (1..=kmax as usize).find(|&k| equal_from[k - 1..].iter().all(|&x| x));

    let wb = match ball_or_report(
        "convergence",
        Alphabet::A,
        witness_radius,
        params,
        opts,
        &config,
        started,
    ) {
        Ok(b) => b,
        Err(r) => return r,
    };
    let base_signs: Vec<Sign> = wb.iter().map(|e| sign_d(&e.nf, params)).collect();
    let mut witnesses = vec![json!({"stabilized_at": stabilized_at})];
    let mut all_distinguished = true;
    for k in 1..=kmax {
        let spec = shift_of(k);
        let mut found: Option<String> = None;
        for (entry, base) in wb.iter().zip(&base_signs) {
            items += 1;
            if sign(&spec, &entry.nf, params) != *base {
                found = Some(entry.word.to_string());
                break;
            }
        }
        if found.is_none() {
            all_distinguished = false;
        }
        witnesses.push(json!({"k": k, "distinguishing": found}));
    }

    let verdict = if stabilized_at.is_some() && all_distinguished {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    report(
        "convergence",
        params,
        config,
        opts.seed,
        verdict,
        witnesses,
        items,
        started.elapsed().as_millis() as u64,
    )
}

// ---------------------------------------------------------------------------
// commutator inequality
// ---------------------------------------------------------------------------

/// `1 <= g s2^k g^-1 s2^-k < g` for every 1-positive `g` in the ball.
pub fn check_commutator_inequality(
    params: &GroupParams,
    radius: u32,
    kmax: u32,
    opts: &VerifyOptions,
) -> Report {
    let started = Instant::now();
    let config = json!({"radius": radius, "kmax": kmax});
    let b = match ball_or_report(
        "commutator",
        Alphabet::S,
        radius,
        params,
        opts,
        &config,
        started,
    ) {
        Ok(b) => b,
        Err(r) => return r,
    };
    let s2 = nf("s2", params);
    let mut witnesses = Vec::new();
    let mut items = 0u64;
    for entry in b.iter() {
        if sign_d(&entry.nf, params) != Sign::Positive
            || s2_power_of(&entry.nf, params).is_some()
        {
            continue;
        }
        for k in 1..=kmax {
            items += 1;
            let c = multiply(
                &multiply(
                    &multiply(&entry.nf, &power(&s2, i64::from(k), params), params),
                    &invert(&entry.nf, params),
                    params,
                ),
                &power(&s2, -i64::from(k), params),
                params,
            );
            let nonneg = sign_d(&c, params) != Sign::Negative;
            let below =
                compare(&OrderSpec::DehornoyLike, &c, &entry.nf, params) == Ordering::Less;
            if !nonneg || !below {
                witnesses.push(json!({
                    "g": entry.word.to_string(), "k": k,
                    "commutator": c.canonical_text(),
                    "nonnegative": nonneg, "below_g": below,
                }));
            }
        }
    }
    report(
        "commutator",
        params,
        config,
        opts.seed,
        if witnesses.is_empty() { Verdict::Pass } else { Verdict::Fail },
        witnesses,
        items,
        started.elapsed().as_millis() as u64,
    )
}

// ---------------------------------------------------------------------------
// cone generation
// ---------------------------------------------------------------------------

/// Every positive element of the ball should factor into cone generators;
/// misses are inconclusive, sign contradictions are failures.
pub fn check_cone_generation(
    params: &GroupParams,
    radius: u32,
    cap: usize,
    opts: &VerifyOptions,
) -> Report {
    let started = Instant::now();
    let config = json!({"radius": radius, "cap": cap});
    let b = match ball_or_report(
        "cone_generation",
        Alphabet::A,
        radius,
        params,
        opts,
        &config,
        started,
    ) {
        Ok(b) => b,
        Err(r) => return r,
    };
    let mut witnesses = Vec::new();
    let mut missed = Vec::new();
    let mut factored = 0usize;
    let mut positives = 0usize;
    let mut items = 0u64;
    for entry in b.iter() {
        items += 1;
        let s = sign(&OrderSpec::Isolated, &entry.nf, params);
        let factorization = factorize_in_cone(&entry.nf, cap, params);
        match (s, factorization) {
            (Sign::Positive, Some(w)) => {
                positives += 1;
                if normal_form(&w, params) != entry.nf {
                    witnesses.push(json!({
                        "error": "factorization does not multiply back",
                        "g": entry.word.to_string(), "factorization": w.to_string(),
                    }));
                } else {
                    factored += 1;
                }
            }
            (Sign::Positive, None) => {
                positives += 1;
                missed.push(entry.word.to_string());
            }
            (Sign::Negative | Sign::Zero, Some(w)) => {
                witnesses.push(json!({
                    "error": "non-positive element factors positively",
                    "g": entry.word.to_string(), "factorization": w.to_string(),
                }));
            }
            _ => {}
        }
    }
    let verdict = if !witnesses.is_empty() {
        Verdict::Fail
    } else if missed.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    };
    witnesses.insert(0, json!({"factored": factored, "positives": positives}));
    if !missed.is_empty() {
        witnesses.push(json!({"unfactored": missed}));
    }
    report(
        "cone_generation",
        params,
        config,
        opts.seed,
        verdict,
        witnesses,
        items,
        started.elapsed().as_millis() as u64,
    )
}

// ---------------------------------------------------------------------------
// minimal positive elements
// ---------------------------------------------------------------------------

/// Probes the least positive ball element and verifies nothing lies strictly
/// between it and the identity. For `D` and `A` the expected minima are `s2`
/// and `b`; shifted orderings record whatever the probe finds.
pub fn check_minimal_positive(
    params: &GroupParams,
    spec: &OrderSpec,
    radius: u32,
    opts: &VerifyOptions,
) -> Report {
    let started = Instant::now();
    let config = json!({"spec": spec.label(), "radius": radius});
    let alphabet = spec.natural_alphabet();
    let probed = match minimal_positive_probe(spec, alphabet, radius, params) {
        Ok(p) => p,
        Err(e) => {
            return report(
                "minimal_positive",
                params,
                config,
                opts.seed,
                Verdict::Fail,
                vec![json!({"error": e.to_string()})],
                0,
                started.elapsed().as_millis() as u64,
            )
        }
    };
    let expected = match spec {
        OrderSpec::DehornoyLike => Some(nf("s2", params)),
        OrderSpec::Isolated => Some(nf("b", params)),
        OrderSpec::Shifted { .. } => None,
    };
    let mut witnesses = vec![json!({"minimal": probed.canonical_text()})];
    let mut ok = true;
    if let Some(expected) = expected {
        if probed != expected {
            ok = false;
            witnesses.push(json!({"expected": expected.canonical_text()}));
        }
    }
    // independent betweenness sweep
    let b = match ball_or_report(
        "minimal_positive",
        alphabet,
        radius,
        params,
        opts,
        &config,
        started,
    ) {
        Ok(b) => b,
        Err(r) => return r,
    };
    let mut items = 0u64;
    for entry in b.iter() {
        items += 1;
        if sign(spec, &entry.nf, params) == Sign::Positive
            && compare(spec, &entry.nf, &probed, params) == Ordering::Less
        {
            ok = false;
            witnesses.push(json!({"between": entry.word.to_string()}));
        }
    }
    report(
        "minimal_positive",
        params,
        config,
        opts.seed,
        if ok { Verdict::Pass } else { Verdict::Fail },
        witnesses,
        items,
        started.elapsed().as_millis() as u64,
    )
}

// ---------------------------------------------------------------------------
// the default suite
// ---------------------------------------------------------------------------

/// Runs every check at its default configuration. The suite is the
/// repository's regression gate: it passes (no `fail` verdict) for all
/// reference parameter pairs.
pub fn default_suite(params: &GroupParams, opts: &VerifyOptions) -> Vec<Report> {
    let shifted = OrderSpec::DehornoyLike
        .shifted(nf("b a", params));
    let s2_word = parse_word("s2", Alphabet::S).expect("builtin word");
    vec![
        check_property_a(params, 8, 10, opts),
        check_property_c_coverage(params, 2, 8, opts),
        check_property_f(params, 5, opts),
        check_order_axioms(params, &OrderSpec::DehornoyLike, 3, 500, opts),
        check_order_axioms(params, &OrderSpec::Isolated, 3, 500, opts),
        check_order_axioms(params, &shifted, 2, 200, opts),
        check_monotone_action(params, 4, 100, opts),
        check_subword(params, &OrderSpec::DehornoyLike, &[s2_word], 5, opts),
        check_conradian_witness(params, &OrderSpec::DehornoyLike, 10, opts),
        check_conradian_witness(params, &OrderSpec::Isolated, 10, opts),
        check_convergence(params, 3, 4, 6, opts),
        check_commutator_inequality(params, 3, 4, opts),
        check_cone_generation(params, 3, 16, opts),
        check_minimal_positive(params, &OrderSpec::DehornoyLike, 4, opts),
        check_minimal_positive(params, &OrderSpec::Isolated, 4, opts),
    ]
}

/// True when no report in the slice failed.
pub fn suite_passed(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.verdict != Verdict::Fail)
}
