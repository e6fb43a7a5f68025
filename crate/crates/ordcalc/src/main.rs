//! `ordcalc`: calculator and verification suite for the orderings of
//! `<x, y | x^m = y^n>`.

use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ordcalc::report::{fingerprint_json, report, Report, Verdict};
use ordcalc::verify::{self, VerifyOptions};
use ordcore::enumerate::fingerprint;
use ordcore::group::{normal_form, NormalForm};
use ordcore::orders::{compare, minimal_positive_probe, sign, OrderSpec, DEFAULT_SHIFT_DEPTH};
use ordcore::tree::{apply_normal_form, End};
use ordcore::words::{detwist_set, parse_word, parse_word_any, translate, twist_set, Alphabet, Word};
use ordcore::GroupParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlphabetArg {
    Xy,
    S,
    A,
}

impl From<AlphabetArg> for Alphabet {
    fn from(a: AlphabetArg) -> Alphabet {
        match a {
            AlphabetArg::Xy => Alphabet::Xy,
            AlphabetArg::S => Alphabet::S,
            AlphabetArg::A => Alphabet::A,
        }
    }
}

/// Exact calculator for the Dehornoy-like and isolated orderings of the
/// groups <x,y | x^m = y^n>, with a verification suite for their
/// order-theoretic properties.
#[derive(Parser, Debug)]
#[command(name = "ordcalc", version, about)]
struct Cli {
    /// Exponent of x (m >= n >= 2)
    #[arg(long, global = true, default_value_t = 3)]
    m: u32,
    /// Exponent of y
    #[arg(long, global = true, default_value_t = 2)]
    n: u32,
    /// Force an input alphabet instead of inferring it from the letters
    #[arg(long, global = true, value_enum)]
    alphabet: Option<AlphabetArg>,
    /// Ordering: D, A, or shifts like "D.shift(b a)"
    #[arg(long, global = true, default_value = "D")]
    order: String,
    /// Seed for all randomized sampling
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Emit a JSON report instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Cap on enumerated ball cardinality
    #[arg(long, global = true, default_value_t = 2_000_000)]
    max_ball: usize,
    /// Cap on search word length where a check searches for words
    #[arg(long, global = true)]
    max_len: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Canonical normal form of a word
    Nf { word: String },
    /// Compare two words under the selected ordering (prints LT, EQ or GT)
    Cmp { left: String, right: String },
    /// Sign of a word under the selected ordering (prints +, 0 or -)
    Sign { word: String },
    /// Apply a word to the base ends E and F, or to a given end
    Act {
        word: String,
        /// An end in the text form "(N; +l1 l2 [ p1 p2 ])"
        #[arg(long)]
        end: Option<String>,
    },
    /// Rewrite a word over another alphabet
    Translate {
        word: String,
        #[arg(long, value_enum)]
        to: AlphabetArg,
    },
    /// Twisted generating set of the given words (or detwisted with --detwist)
    Twist {
        #[arg(required = true)]
        words: Vec<String>,
        #[arg(long)]
        detwist: bool,
    },
    /// Run a verification check, or the whole suite with `all`
    Verify {
        /// all, property_a, property_c, property_f, order_axioms,
        /// monotone_action, subword, conradian, convergence, commutator,
        /// cone_generation, minimal_positive
        #[arg(default_value = "all")]
        check: String,
        #[arg(long)]
        radius: Option<u32>,
        #[arg(long)]
        kmax: Option<u32>,
        #[arg(long)]
        witness_radius: Option<u32>,
        #[arg(long)]
        samples: Option<u32>,
        #[arg(long)]
        max_r: Option<u32>,
        #[arg(long)]
        cap: Option<usize>,
        /// Comma-separated words for the subword check
        #[arg(long)]
        letters: Option<String>,
    },
    /// Exploration experiments
    Explore {
        #[command(subcommand)]
        what: ExploreCmd,
    },
}

#[derive(Subcommand, Debug)]
enum ExploreCmd {
    /// Fingerprints of the shifted orderings D.shift(b^k a) against D
    Convergence {
        #[arg(long, default_value_t = 3)]
        radius: u32,
        #[arg(long, default_value_t = 10)]
        kmax: u32,
        #[arg(long, default_value_t = 6)]
        witness_radius: u32,
    },
    /// Sign of every ball element under the selected ordering
    Fingerprint {
        #[arg(long, default_value_t = 2)]
        radius: u32,
    },
    /// Least positive ball element under the selected ordering
    Minimal {
        #[arg(long, default_value_t = 4)]
        radius: u32,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

struct Ctx {
    params: GroupParams,
    alphabet: Option<Alphabet>,
    order: OrderSpec,
    opts: VerifyOptions,
    json: bool,
    max_len: Option<usize>,
}

impl Ctx {
    fn parse_word(&self, text: &str) -> Result<Word, String> {
        match self.alphabet {
            Some(a) => parse_word(text, a).map_err(|e| e.to_string()),
            None => parse_word_any(text).map_err(|e| e.to_string()),
        }
    }

    fn nf(&self, text: &str) -> Result<NormalForm, String> {
        Ok(normal_form(&self.parse_word(text)?, &self.params))
    }

    /// Wraps a command result in the report schema for --json mode.
    fn emit(&self, check: &str, config: Value, result: Vec<Value>, text: String, started: Instant) {
        if self.json {
            let r = report(
                check,
                &self.params,
                config,
                self.opts.seed,
                Verdict::Pass,
                result,
                1,
                started.elapsed().as_millis() as u64,
            );
            println!("{}", serde_json::to_string_pretty(&r.to_json()).unwrap());
        } else {
            println!("{text}");
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let params = GroupParams::new(cli.m, cli.n).map_err(|e| e.to_string())?;
    let order = OrderSpec::parse(&cli.order, &params, DEFAULT_SHIFT_DEPTH)
        .map_err(|e| e.to_string())?;
    let ctx = Ctx {
        params,
        alphabet: cli.alphabet.map(Into::into),
        order,
        opts: VerifyOptions {
            seed: cli.seed,
            ball_cap: cli.max_ball,
        },
        json: cli.json,
        max_len: cli.max_len,
    };

    match cli.cmd {
        Cmd::Nf { word } => {
            let started = Instant::now();
            let nf = ctx.nf(&word)?;
            let text = nf.canonical_text();
            ctx.emit(
                "nf",
                json!({"word": word}),
                vec![json!({"normal_form": text})],
                text.clone(),
                started,
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Cmp { left, right } => {
            let started = Instant::now();
            let (g, h) = (ctx.nf(&left)?, ctx.nf(&right)?);
            let result = match compare(&ctx.order, &g, &h, &ctx.params) {
                std::cmp::Ordering::Less => "LT",
                std::cmp::Ordering::Equal => "EQ",
                std::cmp::Ordering::Greater => "GT",
            };
            ctx.emit(
                "cmp",
                json!({"order": ctx.order.label(), "left": left, "right": right}),
                vec![json!({"comparison": result})],
                result.to_string(),
                started,
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Sign { word } => {
            let started = Instant::now();
            let g = ctx.nf(&word)?;
            let s = sign(&ctx.order, &g, &ctx.params);
            ctx.emit(
                "sign",
                json!({"order": ctx.order.label(), "word": word}),
                vec![json!({"sign": s.symbol()})],
                s.symbol().to_string(),
                started,
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Act { word, end } => {
            let started = Instant::now();
            let g = ctx.nf(&word)?;
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            let mut act_on = |label: &str, e: &End| {
                let image = apply_normal_form(&g, e, &ctx.params);
                rows.push(json!({"end": e.to_string(), "image": image.to_string()}));
                lines.push(format!("g({label}) = {image}"));
            };
            match end {
                Some(text) => {
                    let e = End::parse(&text, &ctx.params).map_err(|e| e.to_string())?;
                    let label = e.to_string();
                    act_on(&label, &e);
                }
                None => {
                    act_on("E", &End::standard_e());
                    act_on("F", &End::standard_f());
                }
            }
            ctx.emit(
                "act",
                json!({"word": word}),
                rows,
                lines.join("\n"),
                started,
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Translate { word, to } => {
            let started = Instant::now();
            let w = ctx.parse_word(&word)?;
            let out = translate(&w, to.into(), &ctx.params);
            ctx.emit(
                "translate",
                json!({"word": word, "to": Alphabet::from(to).name()}),
                vec![json!({"translated": out.to_string()})],
                out.to_string(),
                started,
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Twist { words, detwist } => {
            let started = Instant::now();
            let parsed: Result<Vec<Word>, String> =
                words.iter().map(|w| ctx.parse_word(w)).collect();
            let parsed = parsed?;
            if let Some(first) = parsed.first() {
                if parsed.iter().any(|w| w.alphabet() != first.alphabet()) {
                    return Err("twist arguments must share one alphabet".to_string());
                }
            }
            let out = if detwist {
                detwist_set(&parsed)
            } else {
                twist_set(&parsed)
            };
            let texts: Vec<String> = out.iter().map(|w| w.to_string()).collect();
            ctx.emit(
                "twist",
                json!({"words": words, "detwist": detwist}),
                vec![json!({"result": texts})],
                texts.join("\n"),
                started,
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            check,
            radius,
            kmax,
            witness_radius,
            samples,
            max_r,
            cap,
            letters,
        } => {
            let reports = run_verify(
                &ctx,
                &check,
                radius,
                kmax,
                witness_radius,
                samples,
                max_r,
                cap,
                letters,
            )?;
            if ctx.json {
                let arr: Vec<Value> = reports.iter().map(Report::to_json).collect();
                println!("{}", serde_json::to_string_pretty(&Value::Array(arr)).unwrap());
            } else {
                for r in &reports {
                    println!("{}", r.summary_line());
                }
            }
            if verify::suite_passed(&reports) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Explore { what } => run_explore(&ctx, what),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    ctx: &Ctx,
    check: &str,
    radius: Option<u32>,
    kmax: Option<u32>,
    witness_radius: Option<u32>,
    samples: Option<u32>,
    max_r: Option<u32>,
    cap: Option<usize>,
    letters: Option<String>,
) -> Result<Vec<Report>, String> {
    let p = &ctx.params;
    let o = &ctx.opts;
    let reports = match check {
        "all" => verify::default_suite(p, o),
        "property_a" => {
            let len = ctx.max_len.unwrap_or(8);
            vec![verify::check_property_a(p, len, len + 2, o)]
        }
        "property_c" => vec![verify::check_property_c_coverage(
            p,
            radius.unwrap_or(2),
            ctx.max_len.unwrap_or(8),
            o,
        )],
        "property_f" => vec![verify::check_property_f(p, max_r.unwrap_or(5), o)],
        "order_axioms" => vec![verify::check_order_axioms(
            p,
            &ctx.order,
            radius.unwrap_or(3),
            samples.unwrap_or(500),
            o,
        )],
        "monotone_action" => vec![verify::check_monotone_action(
            p,
            radius.unwrap_or(4),
            samples.unwrap_or(100),
            o,
        )],
        "subword" => {
            let texts = letters.unwrap_or_else(|| "s2".to_string());
            let words: Result<Vec<Word>, String> = texts
                .split(',')
                .map(|t| ctx.parse_word(t.trim()))
                .collect();
            vec![verify::check_subword(
                p,
                &ctx.order,
                &words?,
                radius.unwrap_or(5),
                o,
            )]
        }
        "conradian" => vec![verify::check_conradian_witness(
            p,
            &ctx.order,
            kmax.unwrap_or(10),
            o,
        )],
        "convergence" => vec![verify::check_convergence(
            p,
            radius.unwrap_or(3),
            kmax.unwrap_or(4),
            witness_radius.unwrap_or(6),
            o,
        )],
        "commutator" => vec![verify::check_commutator_inequality(
            p,
            radius.unwrap_or(3),
            kmax.unwrap_or(4),
            o,
        )],
        "cone_generation" => vec![verify::check_cone_generation(
            p,
            radius.unwrap_or(3),
            cap.unwrap_or(16),
            o,
        )],
        "minimal_positive" => vec![verify::check_minimal_positive(
            p,
            &ctx.order,
            radius.unwrap_or(4),
            o,
        )],
        other => return Err(format!("unknown check `{other}`; see --help for the list")),
    };
    Ok(reports)
}

fn run_explore(ctx: &Ctx, what: ExploreCmd) -> Result<ExitCode, String> {
    match what {
        ExploreCmd::Convergence {
            radius,
            kmax,
            witness_radius,
        } => {
            let r = verify::check_convergence(&ctx.params, radius, kmax, witness_radius, &ctx.opts);
            if ctx.json {
                println!("{}", serde_json::to_string_pretty(&r.to_json()).unwrap());
            } else {
                println!("{}", r.summary_line());
                for w in &r.witnesses {
                    println!("  {w}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        ExploreCmd::Fingerprint { radius } => {
            let started = Instant::now();
            let fp = fingerprint(
                &ctx.order,
                ctx.order.natural_alphabet(),
                radius,
                &ctx.params,
                ctx.opts.ball_cap,
            )
            .map_err(|e| e.to_string())?;
            if ctx.json {
                let r = report(
                    "fingerprint",
                    &ctx.params,
                    json!({"order": ctx.order.label(), "radius": radius}),
                    ctx.opts.seed,
                    Verdict::Pass,
                    vec![fingerprint_json(&fp)],
                    fp.signs.len() as u64,
                    started.elapsed().as_millis() as u64,
                );
                println!("{}", serde_json::to_string_pretty(&r.to_json()).unwrap());
            } else {
                for (text, s) in &fp.signs {
                    println!("{text}: {s}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        ExploreCmd::Minimal { radius } => {
            let started = Instant::now();
            let least = minimal_positive_probe(
                &ctx.order,
                ctx.order.natural_alphabet(),
                radius,
                &ctx.params,
            )
            .map_err(|e| e.to_string())?;
            let text = least.canonical_text();
            ctx.emit(
                "minimal",
                json!({"order": ctx.order.label(), "radius": radius}),
                vec![json!({"minimal_positive": text})],
                text.clone(),
                started,
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}
