use std::fs;
use std::path::Path;

use fences::gl_symmetric::{
    gl_fact, gl_jump_at, gl_multiplicity, min_ktype_pi_ell, speh_check, speh_hypotheses, speh_seed,
    EpsConvention,
};
use fences::patterns::fence_walk_via_extremal;
use fences::translation::stability_transport;
use fences::unitary_ds::{
    ggp_transport, holo_seed, split, u21_audit, u21_limit_query, u21_query, validate_hc,
    ShuffleWord,
};
use fences::upq_symmetric::{disc_upq_sym_enumerate, upq_sym_multiplicity, UpqSymContext};
use fences::weyl::{branch_oracle, weyl_dim, weyl_fact, weyl_mult};
use fences::{
    classify, enumerate_strict, fence_walk, fences, parse_vector, render_vector, Error, FactStore,
    GroupPair, InterleavingPattern, ParamPoint, Rational, Verdict, VerdictValue,
};
use serde_json::{json, Value};

use crate::args::{
    Cli, Command, DsCmd, EpsArg, FactsCmd, GlCmd, PatternsCmd, SpehCmd, U21Cmd, UpqCmd, WeylCmd,
};
use crate::report::{tags_field, to_json, verdict_report, verdict_text, Report};
use crate::CliError;

type Res = Result<Report, CliError>;

fn rationals(s: &str) -> Result<Vec<Rational>, CliError> {
    Ok(parse_vector(s)?)
}

fn integers(name: &str, s: &str) -> Result<Vec<i64>, CliError> {
    rationals(s)?
        .into_iter()
        .map(|v| {
            v.to_integer()
                .ok_or_else(|| Error::Parse(format!("--{name}: {v} is not an integer")).into())
        })
        .collect()
}

fn scalar(name: &str, s: &str) -> Result<Rational, CliError> {
    match rationals(s)?.as_slice() {
        [v] => Ok(*v),
        _ => Err(Error::Parse(format!("--{name} expects one value, got {s:?}")).into()),
    }
}

fn pattern(s: &str) -> Result<InterleavingPattern, CliError> {
    Ok(s.parse()?)
}

/// Accepts `x>y`-style words by numbering bare labels in order of appearance.
fn case_pattern(s: &str) -> Result<InterleavingPattern, CliError> {
    if let Ok(d) = s.parse() {
        return Ok(d);
    }
    let (mut xs, mut ys) = (0, 0);
    let mut out = String::new();
    let chars: Vec<char> = s.chars().collect();
    for (k, &c) in chars.iter().enumerate() {
        out.push(c);
        let bare = chars.get(k + 1).is_none_or(|n| !n.is_ascii_digit());
        match c {
            'x' if bare => {
                xs += 1;
                out.push_str(&xs.to_string());
            }
            'y' if bare => {
                ys += 1;
                out.push_str(&ys.to_string());
            }
            _ => {}
        }
    }
    pattern(&out)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_store(path: &Path) -> Result<FactStore, CliError> {
    Ok(FactStore::from_jsonl(&read(path)?)?)
}

fn store_of(cli: &Cli) -> Result<FactStore, CliError> {
    cli.facts
        .as_deref()
        .map_or_else(|| Ok(FactStore::new()), load_store)
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn dispatch(cli: &Cli) -> Res {
    match &cli.command {
        Command::Patterns(c) => patterns(c),
        Command::Walk(a) => {
            let d = pattern(&a.pattern)?;
            let (nu, xi, lambda) = (rationals(&a.nu)?, rationals(&a.xi)?, rationals(&a.lambda)?);
            let steps = if a.via_extremal {
                fence_walk_via_extremal(&d, &nu, &xi, &lambda)?
            } else {
                fence_walk(&d, &nu, &xi, &lambda)?
            };
            let text: Vec<String> = steps.iter().map(ToString::to_string).collect();
            Ok(Report::of(
                &steps,
                format!("{} steps: {}", steps.len(), text.join(" ")),
            )?)
        }
        Command::Weyl(c) => weyl(cli, c),
        Command::U21(c) => u21(cli, c),
        Command::Gl(c) => gl(cli, c),
        Command::Speh(c) => speh(c),
        Command::Ds(c) => ds(cli, c),
        Command::Upq(c) => upq(c),
        Command::Facts(c) => facts(cli, c),
        Command::Transport(a) => {
            let store = store_of(cli)?;
            let (nu, lambda) = (rationals(&a.nu)?, rationals(&a.lambda)?);
            let pair: Option<GroupPair> = a.pair.as_deref().map(str::parse).transpose()?;
            let target = classify(&ParamPoint::new(lambda.clone(), nu.clone()))?;
            let seeds = store.find(|f| {
                f.nu == nu
                    && f.pattern == target
                    && f.verdict != VerdictValue::Unknown
                    && pair.is_none_or(|p| f.group_pair == p)
            });
            let mut best = Verdict::unknown();
            for seed in seeds {
                let v = stability_transport(seed, &lambda)?;
                best = Verdict::new(
                    best.value.join(v.value)?,
                    if best.value == VerdictValue::Unknown {
                        v.provenance
                    } else {
                        best.provenance
                    },
                );
            }
            verdict_report(
                &best,
                json!({ "lambda": lambda, "nu": nu, "pattern": target }),
            )
        }
    }
}

fn patterns(c: &PatternsCmd) -> Res {
    match c {
        PatternsCmd::Enumerate { n, m, count } => {
            let all = enumerate_strict(*n, *m);
            if *count {
                return Ok(Report::new(json!(all.len()), all.len().to_string())
                    .with_csv(vec![vec!["count".into()], vec![all.len().to_string()]]));
            }
            let lines: Vec<String> = all.iter().map(ToString::to_string).collect();
            let mut rows = vec![vec!["pattern".to_string()]];
            rows.extend(lines.iter().map(|l| vec![l.clone()]));
            Ok(Report::of(&all, lines.join("\n"))?.with_csv(rows))
        }
        PatternsCmd::Classify { x, y } => {
            let d = classify(&ParamPoint::new(rationals(x)?, rationals(y)?))?;
            Report::of(&d, d.to_string())
        }
        PatternsCmd::Fences { pattern: p } => {
            let fs = fences(&pattern(p)?)?;
            let text: Vec<String> = fs
                .iter()
                .map(|f| format!("x{} = y{}", f.x_index, f.y_index))
                .collect();
            Report::of(&fs, format!("{} fences\n{}", fs.len(), text.join("\n")))
        }
        PatternsCmd::Parse { pattern: p } => {
            let d = pattern(p)?;
            let json = json!({ "pattern": d, "n": d.n(), "m": d.m(), "strict": d.is_strict() });
            Ok(Report::new(
                json,
                format!(
                    "{d}\nn = {}, m = {}, strict = {}",
                    d.n(),
                    d.m(),
                    d.is_strict()
                ),
            ))
        }
    }
}

fn weyl(cli: &Cli, c: &WeylCmd) -> Res {
    match c {
        WeylCmd::Mult { x, y } => {
            let fact = weyl_fact(&integers("x", x)?, &integers("y", y)?)?;
            let m = weyl_mult(&integers("x", x)?, &integers("y", y)?)?;
            let mut r = verdict_report(
                &fact.verdict(),
                json!({ "x": x, "y": y, "pattern": fact.pattern }),
            )?;
            r.json["multiplicity"] = json!(m);
            Ok(r)
        }
        WeylCmd::Oracle { x } => {
            let map = branch_oracle(&integers("x", x)?)?;
            let entries: Vec<Value> = map
                .iter()
                .map(|(y, m)| json!({ "y": y, "multiplicity": m }))
                .collect();
            let mut rows = vec![vec!["y".to_string(), "multiplicity".to_string()]];
            let mut text = Vec::new();
            for (y, m) in &map {
                let ys: Vec<String> = y.iter().map(ToString::to_string).collect();
                rows.push(vec![ys.join(","), m.to_string()]);
                text.push(format!("({}) x{m}", ys.join(",")));
            }
            Ok(Report::new(Value::Array(entries), text.join("\n")).with_csv(rows))
        }
        WeylCmd::Dim { x } => {
            let d = weyl_dim(&integers("x", x)?)?;
            Ok(Report::new(json!(d), d.to_string()))
        }
        WeylCmd::Fact { x, y } => {
            let fact = weyl_fact(&integers("x", x)?, &integers("y", y)?)?;
            if let Some(path) = &cli.facts {
                let mut store = if path.exists() {
                    load_store(path)?
                } else {
                    FactStore::new()
                };
                store.insert(fact.clone())?;
                write(path, &store.to_jsonl())?;
            }
            let line = serde_json::to_string(&fact).map_err(|e| Error::Internal(e.to_string()))?;
            Ok(Report::new(to_json(&fact)?, line))
        }
    }
}

fn u21(cli: &Cli, c: &U21Cmd) -> Res {
    match c {
        U21Cmd::Query { x, y, xi, eta } => {
            let xs = rationals(x)?;
            let [x1, x2] = xs[..] else {
                return Err(Error::Parse(format!("--x expects two values, got {x:?}")).into());
            };
            let (y, xi, eta) = (scalar("y", y)?, scalar("xi", xi)?, scalar("eta", eta)?);
            let v = u21_query(x1, x2, y, xi, eta, cli.assume_he_complete)?;
            verdict_report(&v, json!({ "x": [x1, x2], "y": y, "xi": xi, "eta": eta }))
        }
        U21Cmd::Limit { pattern: p } => {
            let word = p.parse()?;
            let v = u21_limit_query(&word)?;
            verdict_report(&v, json!({ "pattern": word }))
        }
        U21Cmd::Audit => {
            let rows = u21_audit(cli.assume_he_complete)?;
            let mut csv = vec![[
                "chamber",
                "deltaPrime",
                "pattern",
                "word",
                "verdict",
                "provenance",
            ]
            .map(String::from)
            .to_vec()];
            let mut text = Vec::new();
            for r in &rows {
                csv.push(vec![
                    r.chamber.to_string(),
                    r.delta_prime.to_string(),
                    r.pattern.to_string(),
                    r.word.to_string(),
                    r.verdict.value.to_string(),
                    tags_field(&r.verdict.tags()),
                ]);
                text.push(format!(
                    "{} {} {:<28} {}",
                    r.chamber,
                    r.delta_prime,
                    r.word.to_string(),
                    r.verdict.value
                ));
            }
            Ok(Report::of(&rows, text.join("\n"))?.with_csv(csv))
        }
    }
}

fn gl(cli: &Cli, c: &GlCmd) -> Res {
    match c {
        GlCmd::Mult { n, ell, lambda, nu } => {
            let (l, v) = (integers("lambda", lambda)?, integers("nu", nu)?);
            let verdict = gl_multiplicity(*n, *ell, &l, &v)?;
            verdict_report(
                &verdict,
                json!({ "n": n, "ell": ell, "lambda": l, "nu": v }),
            )
        }
        GlCmd::Ktype { n, ell, lambda } => {
            let kt = min_ktype_pi_ell(*n, *ell, &integers("lambda", lambda)?)?;
            let so: Vec<String> = kt
                .so_highest_weights
                .iter()
                .map(|w| format!("{w:?}"))
                .collect();
            let text = format!(
                "{}\nsplits under SO({n}): {}\n{}",
                kt.label,
                kt.splits,
                so.join("\n")
            );
            Report::of(&kt, text)
        }
        GlCmd::Jump {
            n,
            ell,
            k,
            lambda,
            nu,
        } => {
            let (l, v) = (integers("lambda", lambda)?, integers("nu", nu)?);
            let store = store_of(cli)?;
            let verdict = gl_jump_at(*n, *ell, *k, &l, &v, &store)?;
            // Echo the pattern the target point realizes.
            let target = gl_fact(*n, *ell, *k, &l, &v, Verdict::unknown())?.pattern;
            verdict_report(
                &verdict,
                json!({ "n": n, "ell": ell, "k": k, "lambda": l, "nu": v, "pattern": target }),
            )
        }
    }
}

fn speh(c: &SpehCmd) -> Res {
    let SpehCmd::Check {
        lambda,
        eps_convention,
    } = c;
    let convention = match eps_convention {
        EpsArg::Half => EpsConvention::Half,
        EpsArg::Integral => EpsConvention::Integral,
    };
    let params = speh_seed(&rationals(lambda)?, convention)?;
    let verdict = speh_check(&params)?;
    let hyps: Vec<Value> = speh_hypotheses(&params)?
        .iter()
        .map(|(h, ok)| json!({ "hypothesis": h, "holds": ok }))
        .collect();
    let mut r = verdict_report(&verdict, json!({ "lambda": params.lambda }))?;
    r.json["params"] = to_json(&params)?;
    r.json["hypotheses"] = Value::Array(hyps);
    r.text = format!(
        "{}\nnu' = ({}), nu_m = {}, nu'' = ({}), kappa = {}",
        verdict_text(&verdict),
        render_vector(&params.nu_prime),
        params.nu_m,
        render_vector(&params.nu_second),
        params.kappa
    );
    Ok(r)
}

fn ds(cli: &Cli, c: &DsCmd) -> Res {
    match c {
        DsCmd::Split { p, q, lambda } => {
            let label = split(&validate_hc(*p, *q, &rationals(lambda)?)?);
            let text = format!(
                "lambda+ = ({})\nw = {}",
                render_vector(&label.lambda_plus),
                label.w
            );
            Report::of(&label, text)
        }
        DsCmd::Holo { p, q, nu } => {
            let seed = holo_seed(&rationals(nu)?, *p, *q)?;
            let text = format!(
                "lambda = ({})\npattern = {}",
                render_vector(&seed.lambda),
                seed.pattern
            );
            Report::of(&seed, text)
        }
        DsCmd::Ggp {
            p,
            q,
            w,
            w2,
            lambda_plus,
            nu_plus,
        } => {
            let (w, w2): (ShuffleWord, ShuffleWord) = (w.parse()?, w2.parse()?);
            let (lp, np) = (rationals(lambda_plus)?, rationals(nu_plus)?);
            let d = classify(&ParamPoint::new(lp.clone(), np.clone()))?;
            let v = ggp_transport(*p, *q, &w, &w2, &d, &store_of(cli)?, &lp, &np)?;
            verdict_report(
                &v,
                json!({ "w": w, "w2": w2, "lambdaPlus": lp, "nuPlus": np, "pattern": d }),
            )
        }
    }
}

fn upq(c: &UpqCmd) -> Res {
    match c {
        UpqCmd::Ds { p, q, r, s, bound } => {
            let entries = disc_upq_sym_enumerate(*p, *q, *r, *s, scalar("bound", bound)?)?;
            let mut csv = vec![["pattern", "lambda", "goodRange", "mayVanish"]
                .map(String::from)
                .to_vec()];
            let mut text = vec![format!("{} parameters", entries.len())];
            for e in &entries {
                csv.push(vec![
                    e.pattern.to_string(),
                    render_vector(&e.lambda),
                    e.good_range.to_string(),
                    e.may_vanish.to_string(),
                ]);
                let flag = if e.good_range { "good" } else { "may vanish" };
                text.push(format!(
                    "{:<24} ({}) {flag}",
                    e.pattern.to_string(),
                    render_vector(&e.lambda)
                ));
            }
            Ok(Report::of(&entries, text.join("\n"))?.with_csv(csv))
        }
        UpqCmd::Mult {
            p,
            q,
            r,
            s,
            case,
            case2,
            lambda,
            nu,
        } => {
            let d = case_pattern(case)?;
            let d2 = case2
                .as_deref()
                .map_or_else(|| Ok(d.clone()), case_pattern)?;
            if *p == 0 {
                return Err(Error::Domain("U(p-1,q) needs p >= 1".into()).into());
            }
            let ctx = UpqSymContext::new(*p, *q, *r, *s, d.clone())?;
            let ctx2 = UpqSymContext::new(p - 1, *q, *r, *s, d2.clone())?;
            let (l, n) = (rationals(lambda)?, rationals(nu)?);
            let v = upq_sym_multiplicity(&ctx, &ctx2, &l, &n)?;
            verdict_report(
                &v,
                json!({ "p": p, "q": q, "r": r, "s": s, "case": d, "case2": d2, "lambda": l, "nu": n }),
            )
        }
    }
}

fn facts(cli: &Cli, c: &FactsCmd) -> Res {
    match c {
        FactsCmd::Merge { a, b, out } => {
            let merged = load_store(a)?.merge(&load_store(b)?)?;
            let text = merged.to_jsonl();
            let json = to_json(merged.facts())?;
            match out {
                Some(path) => {
                    write(path, &text)?;
                    Ok(Report::new(
                        json,
                        format!("{} facts written to {}", merged.len(), path.display()),
                    ))
                }
                None => Ok(Report::new(json, text)),
            }
        }
        FactsCmd::Show { path } => {
            let path = path
                .as_deref()
                .or(cli.facts.as_deref())
                .ok_or_else(|| CliError::Usage("facts show needs a path or --facts".into()))?;
            let store = load_store(path)?;
            let lines: Vec<String> = store
                .facts()
                .iter()
                .map(|f| {
                    format!(
                        "{} {} ({}; {}) {}",
                        f.group_pair,
                        f.pattern,
                        render_vector(&f.lambda),
                        render_vector(&f.nu),
                        f.verdict
                    )
                })
                .collect();
            Ok(Report::new(to_json(store.facts())?, lines.join("\n")))
        }
    }
}
