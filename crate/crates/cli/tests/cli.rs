use std::fs;

use fences::gl_symmetric::{min_ktype_pi_ell, MinKType, SpehParams};
use fences::unitary_ds::{
    holo_seed, split, u21_audit, validate_hc, DSLabel, HoloSeed, U21AuditRow,
};
use fences::upq_symmetric::{disc_upq_sym_enumerate, DiscEntry};
use fences::weyl::weyl_fact;
use fences::{
    enumerate_strict, parse_vector, Fact, Fence, InterleavingPattern, Rational, Step, Verdict,
    VerdictValue,
};
use fences_cli::{run, Outcome};
use serde::de::DeserializeOwned;
use serde_json::Value;

fn fences(args: &str) -> Outcome {
    run(std::iter::once("fences".to_string()).chain(shell_words(args)))
}

/// Splits on spaces, keeping double-quoted segments together.
fn shell_words(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    for c in s.chars() {
        match c {
            '"' => quoted = !quoted,
            ' ' if !quoted => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            _ => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn ok(args: &str) -> String {
    let out = fences(args);
    assert_eq!(out.code, 0, "{args}: {}", out.stderr);
    out.stdout
}

fn json<T: DeserializeOwned>(args: &str) -> T {
    serde_json::from_str(&ok(&format!("--format json {args}"))).unwrap()
}

fn v(s: &str) -> Vec<Rational> {
    parse_vector(s).unwrap()
}

#[test]
fn pattern_count() {
    assert_eq!(ok("patterns enumerate --n 4 --m 3 --count"), "35\n");
    let all: Vec<InterleavingPattern> = json("patterns enumerate --n 3 --m 2");
    assert_eq!(all, enumerate_strict(3, 2));
}

#[test]
fn weyl_verdicts_round_trip() {
    let out = ok("weyl mult --x 1,1,0 --y 0,0");
    assert!(out.starts_with("Zero"));
    let verdict: Verdict = json("weyl mult --x 1,1,0 --y 0,0");
    assert_eq!(verdict, weyl_fact(&[1, 1, 0], &[0, 0]).unwrap().verdict());
    let raw: Value = json("weyl mult --x 1,0,0 --y 0,0");
    assert_eq!(raw["value"], "One");
    assert_eq!(raw["multiplicity"], 1);
    assert!(raw["provenance"][0]["citation"].is_string());
    assert_eq!(ok("weyl dim --x 2,1,0"), "8\n");
    let oracle: Value = json("weyl oracle --x 1,0,0");
    assert_eq!(oracle.as_array().unwrap().len(), 2);
}

#[test]
fn audit_csv() {
    let out = ok("--format csv u21 audit");
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    let verdicts: Vec<String> = reader
        .records()
        .map(|r| r.unwrap()[4].to_string())
        .collect();
    assert_eq!(verdicts.len(), 60);
    let count = |s: &str| verdicts.iter().filter(|v| *v == s).count();
    assert_eq!(
        (count("NonZero"), count("Zero"), count("Unknown")),
        (6, 24, 30)
    );
    let rows: Vec<U21AuditRow> = json("u21 audit");
    assert_eq!(rows, u21_audit(false).unwrap());
    let assumed = ok("--format csv --assume-he-complete u21 audit");
    assert_eq!(assumed.matches(",Zero,").count(), 54);
}

#[test]
fn json_outputs_reparse() {
    let d: InterleavingPattern = json("patterns classify --x 5,2 --y 3");
    assert_eq!(d.to_string(), "x1 > y1 > x2");
    let fs: Vec<Fence> = json("patterns fences --pattern \"x1 > y1 > x2 > y2 > x3 > y3 > x4\"");
    assert_eq!(fs.len(), 6);
    let steps: Vec<Step> = json("walk --pattern \"x1 > y1 > x2\" --nu 0 --xi 2,-1 --lambda 5,-3");
    assert_eq!(steps.len(), 5);
    let via: Vec<Step> =
        json("walk --pattern \"x1 > y1 > x2\" --nu 0 --xi 2,-1 --lambda 5,-3 --via-extremal");
    assert!(via.len() >= 5);
    let kt: MinKType = json("gl ktype --n 4 --ell 2 --lambda 3,1");
    assert_eq!(kt, min_ktype_pi_ell(4, 2, &[3, 1]).unwrap());
    let label: DSLabel = json("ds split --p 2 --q 1 --lambda 2,0,1");
    assert_eq!(label, split(&validate_hc(2, 1, &v("2,0,1")).unwrap()));
    let seed: HoloSeed = json("ds holo --p 1 --q 1 --nu 3");
    assert_eq!(seed, holo_seed(&v("3"), 1, 1).unwrap());
    let entries: Vec<DiscEntry> = json("upq ds --p 3 --q 2 --r 1 --s 1 --bound 3");
    assert_eq!(
        entries,
        disc_upq_sym_enumerate(3, 2, 1, 1, Rational::int(3)).unwrap()
    );
    let speh: Value = json("speh check --lambda 7/2,3/2,-3/2,-7/2");
    let params: SpehParams = serde_json::from_value(speh["params"].clone()).unwrap();
    assert_eq!(params.nu_m, Rational::ZERO);
    assert_eq!(speh["value"], "One");
    let parsed: Value = json("patterns parse --pattern \"x1 = y1 > x2\"");
    assert_eq!(parsed["strict"], false);
    let back: InterleavingPattern = serde_json::from_value(parsed["pattern"].clone()).unwrap();
    assert_eq!(back.to_string(), "x1 = y1 > x2");
}

#[test]
fn verdict_commands() {
    assert!(ok("u21 query --x 5,2 --y 1 --xi 7/2 --eta -1/2").starts_with("NonZero"));
    assert!(ok("u21 limit --pattern \"eta > xi > x1 = y > x2\"").starts_with("NonZero"));
    assert!(ok("gl mult --n 7 --ell 2 --lambda 7,5 --nu 9,3").starts_with("One"));
    assert!(ok("gl mult --n 7 --ell 2 --lambda 7,1 --nu 9,3").starts_with("Unknown"));
    let one: Verdict =
        json("upq mult --p 3 --q 2 --r 1 --s 1 --case x>y --lambda 5,2 --nu 7/2,5/2");
    assert_eq!(one.value, VerdictValue::One);
    let two: Verdict =
        json("upq mult --p 3 --q 2 --r 1 --s 1 --case \"y>x\" --lambda 3,6 --nu 5/2,13/2");
    assert_eq!(two.value, VerdictValue::One);
    let mixed: Verdict =
        json("upq mult --p 3 --q 2 --r 1 --s 1 --case x>y --case2 y>x --lambda 5,2 --nu 5/2,7/2");
    assert_eq!(mixed.value, VerdictValue::Unknown);
}

#[test]
fn exit_codes() {
    assert_eq!(fences("bogus").code, 64);
    assert_eq!(fences("weyl mult --x 1,0,0").code, 2);
    assert_eq!(fences("weyl mult --x 1,2 --y 0").code, 2);
    assert_eq!(fences("weyl mult --x 1,x --y 0").code, 65);
    assert_eq!(fences("--format csv weyl dim --x 1").code, 64);
    assert_eq!(
        fences("u21 query --x 2,2 --y 1 --xi 1/2 --eta -1/2").code,
        2
    );
    let help = fences("--help");
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("patterns"));
    let err = fences("gl mult --n 4 --ell 2 --lambda 3,1 --nu 3,1");
    assert_eq!(err.code, 2);
    assert!(err.stderr.contains("2l < n"));
}

#[test]
fn fact_store_workflow() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    let a_s = a.display().to_string();
    let b_s = b.display().to_string();
    ok(&format!("--facts {a_s} weyl fact --x 1,0,0 --y 0,0"));
    ok(&format!("--facts {a_s} weyl fact --x 1,1,0 --y 0,0"));
    ok(&format!("--facts {b_s} weyl fact --x 1,0,0 --y 0,0"));
    let store: Vec<Fact> = json(&format!("facts show {a_s}"));
    assert_eq!(store.len(), 2);

    // identical and overlapping stores merge idempotently
    let merged = ok(&format!("facts merge {a_s} {a_s}"));
    assert_eq!(merged, fs::read_to_string(&a).unwrap());
    let out = dir.path().join("m.jsonl");
    ok(&format!("facts merge {a_s} {b_s} --out {}", out.display()));
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 2);

    // stability transport from the stored seed
    let v: Verdict = json(&format!(
        "--facts {a_s} transport --pair U(3)>U(2) --nu 1/2,-1/2 --lambda 5,0,-1"
    ));
    assert_eq!(v.value, VerdictValue::One);
    // (4,3,0) shares the pattern of the stored (1,1,0) and inherits its Zero
    let zero: Verdict = json(&format!(
        "--facts {a_s} transport --nu 1/2,-1/2 --lambda 5,3,-1"
    ));
    assert_eq!(zero.value, VerdictValue::Zero);
    let none: Verdict = json(&format!(
        "--facts {a_s} transport --nu 1/2,-1/2 --lambda 5,-1,-2"
    ));
    assert_eq!(none.value, VerdictValue::Unknown);

    // a contradictory store
    let text = fs::read_to_string(&b)
        .unwrap()
        .replace("\"One\"", "\"Zero\"");
    fs::write(&b, text).unwrap();
    let clash = fences(&format!("facts merge {a_s} {b_s}"));
    assert_eq!(clash.code, 3, "{}", clash.stderr);
    assert!(clash.stderr.contains("line"));

    fs::write(&b, "not json\n").unwrap();
    assert_eq!(fences(&format!("facts show {b_s}")).code, 65);
    assert_eq!(
        fences(&format!(
            "facts show {}",
            dir.path().join("missing").display()
        ))
        .code,
        74
    );
}

#[test]
fn gl_jump_from_store() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gl.jsonl");
    let fact = fences::gl_symmetric::gl_fact(
        7,
        2,
        2,
        &[7, 5],
        &[5, 3],
        Verdict::nonzero(fences::translation::ProvenanceStep::new(
            fences::TheoremTag::SeedPeriod,
            "seed",
        )),
    )
    .unwrap();
    let mut store = fences::FactStore::new();
    store.insert(fact).unwrap();
    fs::write(&path, store.to_jsonl()).unwrap();
    let v: Verdict = json(&format!(
        "--facts {} gl jump --n 7 --ell 2 --k 2 --lambda 13,9 --nu 5,3",
        path.display()
    ));
    assert_eq!(v.value, VerdictValue::NonZero);
}

#[test]
fn rationals_render_canonically() {
    let out = ok("ds split --p 1 --q 1 --lambda 6/4,-2/4");
    assert!(out.contains("lambda+ = (3/2,-1/2)"), "{out}");
    let again = ok("ds split --p 1 --q 1 --lambda 6/4,-2/4");
    assert_eq!(out, again);
}
