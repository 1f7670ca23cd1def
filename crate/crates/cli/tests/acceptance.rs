//! Acceptance report: one PASS/FAIL line per criterion. Criteria in
//! KNOWN_RED fail for a documented reason (see the README) and do not fail
//! the run; any other failure does.

#[path = "../../core/tests/common/props.rs"]
#[allow(dead_code)]
mod props;

use std::process::Command;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use serde_json::Value;

use hpcad::corpus;
use hpcad::lifting::{hp_two, open_cad, LiftOptions};
use hpcad::parse::parse_poly;
use hpcad::poly::{MultiPoly, UniPoly, VarOrder};
use hpcad::projection::{bp_chain, bp_single, hp};
use hpcad::realroots::{isolate, sturm_count, Strategy};

/// B(1) and F(5) are different polynomials: adjacent pairs carry -2 in one
/// and 0 in the other.
const KNOWN_RED: &[usize] = &[6];

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

type Outcome = Result<String, String>;

fn hpcad(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hpcad"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8"),
    )
}

fn embed(text: &str, order: &VarOrder) -> MultiPoly {
    let (p, own) = parse_poly::<&str>(text, None).unwrap();
    let map: Vec<Option<usize>> = own.names().iter().map(|n| order.index_of(n)).collect();
    p.remap(order.len(), &map).canonical()
}

fn check(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn corpus_text(args: &[&str]) -> Result<String, String> {
    let (code, out) = hpcad(args);
    check(code == 0, format!("`{}` failed", args.join(" ")))?;
    Ok(out.trim().to_string())
}

fn psd_json(poly: &str) -> Result<(i32, Value, Duration), String> {
    let t = Instant::now();
    let (code, out) = hpcad(&["psd", poly, "--json"]);
    let v: Value = serde_json::from_str(&out).map_err(|e| format!("bad json ({e}): {out}"))?;
    Ok((code, v, t.elapsed()))
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let (f, order) = corpus::ex1();
    let e = |s: &str| embed(s, &order);
    check(
        bp_single(&f, Z).map_err(err)?
            == e("(x^4 - 2*x^2*y^2 + y^4 + 2*x^2 + 2*y^2 - 4)*(3*x^2 - y^2 - 4)^2"),
        "Brown projection in z",
    )?;
    check(
        bp_chain(&f, &[Z, Y]).map_err(err)?
            == e("(3*x^2 - 4)*(x^4 + 2*x^2 - 4)*(4*x^2 - 5)^2*(x - 1)^8*(x + 1)^8"),
        "chain z then y",
    )?;
    check(
        bp_chain(&f, &[Y, Z]).map_err(err)?
            == e("(3*x^2 - 4)^2*(x^4 + 2*x^2 - 4)*(4*x^2 - 5)*(6*x^2 - 7)^8"),
        "chain y then z",
    )?;
    check(
        hp(&f, &[Z, Y]).map_err(err)? == e("(3*x^2 - 4)*(x^4 + 2*x^2 - 4)*(4*x^2 - 5)"),
        "hp over {z, y}",
    )?;
    let t = t.elapsed();
    check(t < Duration::from_secs(5), format!("took {t:.2?}"))?;
    Ok(format!("four projections exact in {t:.2?}"))
}

fn criterion_2() -> Outcome {
    let (f, _) = corpus::ex1();
    let chain = UniPoly::from_multi(&bp_chain(&f, &[Z, Y]).map_err(err)?, X);
    let gcd = UniPoly::from_multi(&hp(&f, &[Z, Y]).map_err(err)?, X);
    let counts = [
        isolate(&chain).map_err(err)?.len(),
        sturm_count(&chain, None, None),
        isolate(&gcd).map_err(err)?.len(),
        sturm_count(&gcd, None, None),
    ];
    check(
        counts == [8, 8, 6, 6],
        format!("isolate/Sturm counts {counts:?}"),
    )?;
    Ok("chain has 8 real roots, hp has 6 (isolation agrees with Sturm)".into())
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let (f, _) = corpus::ex1();
    for strategy in [Strategy::Simplest, Strategy::Midpoint] {
        let opts = LiftOptions::new(strategy);
        let a = open_cad(&f, &opts).map_err(err)?;
        let b = hp_two(&f, &opts).map_err(err)?;
        check(
            a.counts == [9, 27, 113] && b.counts == [7, 21, 87],
            format!("{strategy}: {:?} / {:?}", a.counts, b.counts),
        )?;
    }
    let (code, out) = hpcad(&["compare", corpus::EX1, "--order", "z,y,x"]);
    check(
        code == 0 && out.contains("opencad: 113") && out.contains("hptwo: 87"),
        format!("cli: {out}"),
    )?;
    let t = t.elapsed();
    check(t < Duration::from_secs(30), format!("took {t:.2?}"))?;
    Ok(format!(
        "open CAD 113, HpTwo 87 under both strategies and via the CLI, {t:.2?}"
    ))
}

fn criterion_4() -> Outcome {
    let f5 = corpus_text(&["corpus", "F", "--n", "5"])?;
    let (code, v, t) = psd_json(&f5)?;
    check(
        code == 0 && v["verdict"] == "psd",
        format!("verdict {} exit {code}", v["verdict"]),
    )?;
    check(t < Duration::from_secs(300), format!("took {t:.2?}"))?;
    Ok(format!("F(5) psd in {t:.2?}"))
}

fn criterion_5() -> Outcome {
    let g5 = corpus_text(&["corpus", "G", "--n", "5"])?;
    let (code, v, t) = psd_json(&g5)?;
    check(
        code == 1 && v["verdict"] == "not_psd",
        format!("verdict {} exit {code}", v["verdict"]),
    )?;
    let (g, order) = parse_poly::<&str>(&g5, None).map_err(err)?;
    let names: Vec<Value> = order
        .names()
        .iter()
        .map(|n| Value::from(n.as_str()))
        .collect();
    check(v["variables"] == Value::Array(names), "witness variables")?;
    let w = v["witness"]
        .as_array()
        .ok_or("no witness")?
        .iter()
        .map(|s| {
            s.as_str()
                .unwrap_or("?")
                .parse::<BigRational>()
                .map_err(err)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let value = g.eval(&w);
    check(g.sign_at(&w) < 0, format!("G(5) at the witness is {value}"))?;
    check(t < Duration::from_secs(300), format!("took {t:.2?}"))?;
    Ok(format!(
        "G(5) not psd in {t:.2?}, exact value {value} at the witness"
    ))
}

fn criterion_6() -> Outcome {
    let b = corpus_text(&["corpus", "B", "--m", "1"])?;
    let f = corpus_text(&["corpus", "F", "--n", "5"])?;
    let (_, vb, _) = psd_json(&b)?;
    let (_, vf, _) = psd_json(&f)?;
    let same_poly = b == f;
    let same_verdict = vb["verdict"] == vf["verdict"];
    check(
        same_poly && same_verdict,
        format!(
            "polynomials {}, verdicts {} ({} / {})",
            if same_poly { "equal" } else { "differ" },
            if same_verdict { "equal" } else { "differ" },
            vb["verdict"],
            vf["verdict"]
        ),
    )?;
    Ok("identical polynomials and verdicts".into())
}

fn criterion_7() -> Outcome {
    let t = Instant::now();
    let suites: [(&str, fn(u32) -> Result<(), String>, u32); 6] = [
        ("resultant vs Sylvester", props::resultant_vs_sylvester, 200),
        ("isolation vs Sturm", props::isolate_vs_sturm, 500),
        ("hp divides every chain", props::hp_divides_chains, 100),
        ("grid sign coverage", props::sign_coverage, 100),
        ("recursion vs sampling", props::psd_recursion_vs_sample, 50),
        ("square factors", props::psd_square_factor, 50),
    ];
    for (name, suite, cases) in suites {
        suite(cases).map_err(|e| format!("{name}: {e}"))?;
    }
    let t = t.elapsed();
    check(t < Duration::from_secs(15 * 60), format!("took {t:.2?}"))?;
    Ok(format!("6 suites, 1000 cases in {t:.2?}"))
}

fn without_ms(doc: &str) -> Result<Value, String> {
    fn walk(v: &mut Value) {
        match v {
            Value::Object(m) => {
                m.remove("ms");
                m.values_mut().for_each(walk);
            }
            Value::Array(a) => a.iter_mut().for_each(walk),
            _ => {}
        }
    }
    let mut v: Value = serde_json::from_str(doc).map_err(|e| format!("bad json ({e}): {doc}"))?;
    walk(&mut v);
    Ok(v)
}

fn criterion_8() -> Outcome {
    let g4 = corpus_text(&["corpus", "G", "--n", "4"])?;
    let b1 = corpus_text(&["corpus", "B", "--m", "1"])?;
    let ex1 = corpus::EX1;
    let runs: [&[&str]; 6] = [
        &["sample", ex1, "--order", "z,y,x", "--method", "opencad"],
        &["sample", ex1, "--order", "z,y,x", "--strategy", "midpoint"],
        &["sample", ex1, "--order", "z,y,x", "--method", "reduced:2"],
        &["compare", ex1, "--order", "z,y,x"],
        &["psd", &g4],
        &["psd", &b1, "--method", "sample"],
    ];
    for args in runs {
        let mut seen = Vec::new();
        for threads in ["1", "4"] {
            let mut a = args.to_vec();
            a.extend(["--json", "--threads", threads]);
            let (code, out) = hpcad(&a);
            seen.push((code, without_ms(&out)?));
        }
        check(
            seen[0] == seen[1],
            format!("`{} ...` differs between 1 and 4 threads", args[0]),
        )?;
    }
    Ok(format!(
        "{} commands identical with 1 and 4 threads (timings aside)",
        runs.len()
    ))
}

fn main() {
    let criteria: [(usize, &str, fn() -> Outcome); 8] = [
        (1, "projection chain of the running example", criterion_1),
        (2, "real root counts of the projections", criterion_2),
        (3, "open sample sizes 113 and 87", criterion_3),
        (4, "F(5) is psd", criterion_4),
        (5, "G(5) is not psd", criterion_5),
        (6, "B(1) coincides with F(5)", criterion_6),
        (7, "property suites", criterion_7),
        (8, "thread-count determinism", criterion_8),
    ];
    let mut unexpected = Vec::new();
    for (k, name, run) in criteria {
        match run() {
            Ok(detail) => println!("criterion {k}: PASS - {name}: {detail}"),
            Err(why) if KNOWN_RED.contains(&k) => {
                println!("criterion {k}: FAIL - {name}: {why} [known, see README]")
            }
            Err(why) => {
                println!("criterion {k}: FAIL - {name}: {why}");
                unexpected.push(k);
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
