//! Acceptance gate: one pass/fail line per criterion, each under its time
//! budget. Runs without the libtest harness so the lines print in order.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde_json::Value;

use rootcond_cli::catalog::{resolve_context, sweep_groups};
use rootcond_cli::verify::{run_suite, s3_power_chain, RANDOM_SUMS};
use rootcond_core::character::character_table;
use rootcond_core::clifford::construct_large_degree;
use rootcond_core::conductor::{
    artin_conductor, bound_induced_case, root_conductor, verify_conductor_discriminant, BoundInputs,
};
use rootcond_core::character::ClassFunction;
use rootcond_core::scalar::Rational;

type Outcome = Result<(), String>;

fn cli(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_rootcond"))
        .args(args)
        .output()
        .map_err(|e| format!("could not run rootcond: {e}"))?;
    if !out.status.success() {
        return Err(format!(
            "rootcond {} exited with {:?}: {}",
            args.join(" "),
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    serde_json::from_slice(&out.stdout).map_err(|e| format!("bad JSON from rootcond: {e}"))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn quintic_reproduction() -> Outcome {
    let v = cli(&["conduct", "--context", "quintic11", "--all", "--format", "json"])?;
    let chars = v["characters"].as_array().ok_or("no characters")?;
    ensure(chars.len() == 5, || format!("{} characters", chars.len()))?;
    ensure(chars[0]["norm"] == "1", || format!("trivial norm {}", chars[0]["norm"]))?;
    for c in &chars[1..] {
        ensure(c["norm"] == "11", || format!("{} has norm {}", c["character"], c["norm"]))?;
        ensure(c["exponents"]["11"] == 1, || format!("{} exponents {}", c["character"], c["exponents"]))?;
    }
    let product: BigUint = chars[1..].iter().map(|c| c["norm"].as_str().unwrap().parse::<BigUint>().unwrap()).product();
    ensure(product == BigUint::from(11u32).pow(4), || format!("product of norms {product}"))?;
    ensure(v["product"] == "14641", || format!("reported product {}", v["product"]))?;
    ensure(v["conductor_discriminant"] == true, || "conductor-discriminant check failed".into())
}

fn martinet_constant() -> Outcome {
    let v = cli(&["bound", "--dataset", "martinet-constants", "--format", "json"])?;
    let expected = BigUint::from(11u32).pow(4) * BigUint::from(2u32).pow(15) * BigUint::from(23u32);
    let c = &v["global_constant"];
    ensure(c["value"] == expected.to_string().as_str(), || format!("C = {}", c["value"]))?;
    ensure(c["value"] == "11034394624", || format!("C = {}", c["value"]))?;
    ensure(c["factorization"] == "2^15 * 11^4 * 23", || format!("factorization {}", c["factorization"]))
}

fn induced_equality() -> Outcome {
    // through the CLI
    let v = cli(&["conduct", "--context", "quintic11", "--induced", "trivial", "--format", "json"])?;
    let root = &v["characters"][0]["root_conductor"];
    let formula = &v["induced"]["formula"];
    ensure(root["exact"] == "11^(4/5)", || format!("root conductor {}", root["exact"]))?;
    ensure(formula["exact"] == "11^(4/5)", || format!("formula {}", formula["exact"]))?;
    ensure(root["decimal"] == formula["decimal"], || format!("{} vs {}", root["decimal"], formula["decimal"]))?;
    ensure(v["induced"]["exact_equal"] == true && v["induced"]["decimal_equal"] == true, || "CLI equality flags".into())?;

    // and directly from the raw filtration
    let ctx = resolve_context("quintic11", 24).map_err(|e| e.to_string())?;
    let reg = ClassFunction::regular(ctx.group());
    let f = artin_conductor(&reg, &ctx).map_err(|e| e.to_string())?;
    let root = root_conductor(&f, 5);
    let b = BoundInputs::new(14641u32.into(), 5, 1, 1u32.into(), Rational::from_integer(1.into())).map_err(|e| e.to_string())?;
    let bound = bound_induced_case(&b);
    ensure(root == bound, || format!("{root} != {bound}"))?;
    let (a, d) = (root.decimal(12), bound.decimal(12));
    ensure(a == d, || format!("decimals {a} vs {d}"))?;
    let float = 11f64.powf(0.8);
    let parsed: f64 = a.parse().map_err(|_| format!("bad decimal {a}"))?;
    ensure(((parsed - float) / float).abs() < 1e-11, || format!("{a} vs float {float}"))
}

fn suites(names: &[&str]) -> Outcome {
    for s in names {
        let r = run_suite(s, 24).map_err(|e| e.to_string())?;
        ensure(r.summary.total > 0, || format!("suite {s} ran no checks"))?;
        ensure(r.passed(), || r.render_text())?;
    }
    Ok(())
}

fn clifford_suite() -> Outcome {
    suites(&["clifford", "dichotomy", "classification", "gallagher"])
}

fn degree_growth() -> Outcome {
    for n in 1..=3usize {
        let chain = s3_power_chain(n).map_err(|e| e.to_string())?;
        let built = construct_large_degree(&chain).map_err(|e| e.to_string())?;
        let table = character_table(chain.group()).map_err(|e| e.to_string())?;
        let want = 1u64 << n;
        ensure(built.degree() >= want, || format!("S3^{n}: degree {}", built.degree()))?;
        ensure(table.max_degree() == want, || format!("S3^{n}: table max degree {}", table.max_degree()))?;
        ensure(built.character.is_irreducible(), || format!("S3^{n}: reducible result"))?;
    }
    Ok(())
}

fn conductor_oracles() -> Outcome {
    for (name, disc) in [("quintic11", 14641u32), ("gauss", 4), ("quad-m23", 23)] {
        let ctx = resolve_context(name, 24).map_err(|e| e.to_string())?;
        let table = character_table(ctx.group()).map_err(|e| e.to_string())?;
        let ok = verify_conductor_discriminant(&ctx, &table, &disc.into()).map_err(|e| e.to_string())?;
        ensure(ok, || format!("{name}: conductor-discriminant product is not {disc}"))?;
    }
    let r = run_suite("conductor", 24).map_err(|e| e.to_string())?;
    ensure(r.passed(), || r.render_text())?;
    for name in ["quintic11", "gauss", "quad-m23"] {
        for identity in ["f(phi + psi) = f(phi) + f(psi)", "trailing trivial groups change nothing"] {
            let n = r.checks.iter().filter(|c| c.identity == identity && c.inputs.starts_with(&format!("{name}, "))).count();
            ensure(n == RANDOM_SUMS, || format!("{name}: {n} checks of {identity:?}"))?;
        }
    }
    Ok(())
}

fn table_suite() -> Outcome {
    let r = run_suite("tables", 24).map_err(|e| e.to_string())?;
    ensure(r.passed(), || r.render_text())?;
    let groups = sweep_groups(24).len();
    let covered = r.checks.iter().filter(|c| c.identity == "sum of squared degrees = |G|").count();
    ensure(covered == groups, || format!("{covered} of {groups} groups checked"))?;
    let frob = r.checks.iter().filter(|c| c.identity == "Frobenius reciprocity").count();
    ensure(frob >= 2 * groups, || format!("only {frob} Frobenius checks"))
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 7] = [
        ("1 quintic conductors, product 14641", Duration::from_secs(1), quintic_reproduction),
        ("2 global constant C = 11034394624", Duration::from_secs(1), martinet_constant),
        ("3 induced root conductor = 11^(4/5)", Duration::from_secs(1), induced_equality),
        ("4 Clifford suite to order 24", Duration::from_secs(120), clifford_suite),
        ("5 degree growth on S3 chains", Duration::from_secs(60), degree_growth),
        ("6 conductor oracle suite", Duration::from_secs(10), conductor_oracles),
        ("7 character-table suite to order 24", Duration::from_secs(120), table_suite),
    ];
    let mut failed = 0;
    for (name, budget, f) in criteria {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let verdict = match (&result, took <= budget) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (took {took:.2?}, budget {budget:?})"),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("[{}] criterion {name} in {took:.2?}: {verdict}", if verdict.starts_with("PASS") { "PASS" } else { "FAIL" });
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 7 acceptance criteria passed");
}
