use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;
use serde_json::{json, Value};

use rootcond_core::character::{character_table, induce, ClassFunction};
use rootcond_core::clifford::{CaseKind, NormalPair};
use rootcond_core::conductor::{
    artin_conductor, bound_induced_case, bound_restricted_case, conductor_discriminant_product, factorization_string,
    global_constant, root_conductor, BoundInputs, FactoredConductor, GaloisContext, Radical,
};
use rootcond_core::group::is_normal;
use rootcond_core::scalar::{parse_rational, Rational};
use rootcond_core::Error;

use crate::catalog::{base_names, bound_dataset, bound_dataset_names, context_names, resolve_context, resolve_group};
use crate::selector::{select_normal, select_subgroup};
use crate::verify::run_suite;
use crate::{BoundArgs, CatalogAction, Cli, Command, Format, GlobalOpts};

/// A failed command with its exit code: 2 for bad input, 3 for internal
/// contradictions and failed checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::InternalContradiction(_)) { 3 } else { 2 };
        CliError { code, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> CliError {
    CliError { code: 2, message: message.into() }
}

/// What a successful invocation prints, and its exit code (nonzero when a
/// verification inside it failed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, code: 0 }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let opts = &cli.global;
    if opts.precision == 0 {
        return Err(input_error("--precision must be at least 1"));
    }
    match &cli.command {
        Command::Table { group } => table(opts, group),
        Command::Classify { group, normal } => classify(opts, group, normal),
        Command::Conduct { context, all, char_index, induced, theta } => {
            conduct(opts, context, *all, *char_index, induced.as_deref(), *theta)
        }
        Command::Bound(args) => bound(opts, args),
        Command::Verify { suite } => verify(opts, suite),
        Command::Catalog { action: CatalogAction::List } => catalog(opts),
    }
}

fn table(opts: &GlobalOpts, group: &str) -> Result<Outcome, CliError> {
    let g = resolve_group(group, opts.max_order)?;
    let t = character_table(&g)?;
    Ok(Outcome::ok(match opts.format {
        Format::Text => t.render_text(),
        Format::Json => pretty(&serde_json::to_value(t.to_json()).expect("table serializes")),
    }))
}

fn classify(opts: &GlobalOpts, group: &str, normal: &str) -> Result<Outcome, CliError> {
    let g = resolve_group(group, opts.max_order)?;
    let h = select_normal(&g, normal)?;
    let pair = NormalPair::new(&h)?;
    let mut rows = Vec::new();
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{} over a normal subgroup of order {} (index {})",
        g.name().unwrap_or("group"),
        h.order(),
        h.index()
    );
    let (mut restricted, mut induced) = (0, 0);
    for (i, chi) in pair.table().rows().iter().enumerate() {
        let c = pair.classify(chi.class_function())?;
        let kind = match c.kind {
            CaseKind::Restricted => {
                restricted += 1;
                "restricted"
            }
            CaseKind::Induced => {
                induced += 1;
                "induced"
            }
        };
        let orbit: Vec<String> = c.orbit.iter().map(|j| format!("X.{j}")).collect();
        let _ = writeln!(
            text,
            "X.{i}  degree {}  {kind:<10}  theta X.{} (degree {})  e {}  t {}  orbit {}",
            chi.degree(),
            c.theta_index,
            c.theta.degree_u64(),
            c.e,
            c.t,
            orbit.join(", ")
        );
        rows.push(json!({
            "character": i,
            "degree": chi.degree(),
            "case": kind,
            "theta": c.theta_index,
            "theta_degree": c.theta.degree_u64(),
            "e": c.e,
            "t": c.t,
            "orbit": c.orbit,
            "restriction_is_theta": c.restricted_holds,
            "induced_from_theta": c.induced_holds,
        }));
    }
    let _ = writeln!(text, "restricted: {restricted}, induced: {induced}");
    Ok(Outcome::ok(match opts.format {
        Format::Text => text,
        Format::Json => pretty(&json!({
            "group": g.name(),
            "order": g.order(),
            "subgroup": h.elements(),
            "index": h.index(),
            "characters": rows,
            "restricted": restricted,
            "induced": induced,
        })),
    }))
}

struct Rendered {
    exact: String,
    decimal: String,
}

fn render(r: &Radical, precision: usize) -> Rendered {
    Rendered { exact: r.to_string(), decimal: r.decimal(precision) }
}

fn conductor_string(f: &FactoredConductor) -> String {
    if f.exponents.is_empty() {
        return "1".into();
    }
    f.exponents.iter().map(|(p, e)| format!("p{p}^{e}")).collect::<Vec<_>>().join(" * ")
}

fn conductor_json(label: &str, degree: u64, f: &FactoredConductor, root: &Rendered) -> Value {
    let exps: serde_json::Map<String, Value> = f.exponents.iter().map(|(p, e)| (p.to_string(), json!(e))).collect();
    json!({
        "character": label,
        "degree": degree,
        "exponents": exps,
        "norm": f.norm.to_string(),
        "root_conductor": { "exact": root.exact, "decimal": root.decimal },
    })
}

fn conduct(
    opts: &GlobalOpts,
    context: &str,
    all: bool,
    char_index: Option<usize>,
    induced: Option<&str>,
    theta: usize,
) -> Result<Outcome, CliError> {
    let ctx = resolve_context(context, opts.max_order)?;
    let g = ctx.group();
    let table = character_table(g)?;
    let mut text = String::new();
    let mut code = 0;
    let _ = writeln!(text, "context {} (group {}, order {})", ctx.name(), g.name().unwrap_or("group"), g.order());
    for f in ctx.filtrations() {
        let shape: Vec<String> = f.groups().iter().map(|s| s.order().to_string()).collect();
        let kind = if !f.is_ramified() {
            "unramified"
        } else if f.is_tame() {
            "tame"
        } else {
            "wild"
        };
        let _ = writeln!(
            text,
            "prime {}: residue norm {}, {kind}, |G_j| = [{}]",
            f.prime(),
            f.residue_norm(),
            shape.join(", ")
        );
    }

    let mut entries = Vec::new();
    let mut extra = serde_json::Map::new();
    if let Some(selector) = induced {
        let (entry, info, ok) = conduct_induced(opts, &ctx, selector, theta, &mut text)?;
        entries.push(entry);
        extra.insert("induced".into(), info);
        if !ok {
            code = 3;
        }
    } else {
        let selected: Vec<usize> = match (all, char_index) {
            (_, Some(i)) if i >= table.len() => {
                return Err(input_error(format!("character {i} out of range: the table has {} rows", table.len())))
            }
            (_, Some(i)) => vec![i],
            _ => (0..table.len()).collect(),
        };
        for i in selected {
            let chi = &table.rows()[i];
            let f = artin_conductor(chi.class_function(), &ctx)?;
            let root = render(&root_conductor(&f, chi.degree()), opts.precision);
            let _ = writeln!(
                text,
                "X.{i}  degree {}  conductor {}  norm {}  root conductor {} ~ {}",
                chi.degree(),
                conductor_string(&f),
                f.norm,
                root.exact,
                root.decimal
            );
            entries.push(conductor_json(&format!("X.{i}"), chi.degree(), &f, &root));
        }
    }

    let product = conductor_discriminant_product(&ctx, &table)?;
    let _ = writeln!(text, "product of N(f_chi)^chi(1) over Irr(G): {product} = {}", factorization_string(&product));
    let mut out = json!({
        "context": ctx.name(),
        "group": g.name(),
        "order": g.order(),
        "characters": entries,
        "product": product.to_string(),
    });
    if let Some(disc) = ctx.disc() {
        let ok = &product == disc;
        let _ = writeln!(text, "conductor-discriminant check against disc {disc}: {}", if ok { "pass" } else { "FAIL" });
        out["disc"] = json!(disc.to_string());
        out["conductor_discriminant"] = json!(ok);
        if !ok {
            code = 3;
        }
    }
    for (k, v) in extra {
        out[k] = v;
    }
    let stdout = match opts.format {
        Format::Text => text,
        Format::Json => pretty(&out),
    };
    Ok(Outcome { stdout, code })
}

/// Conductor of `Ind theta` from the raw filtrations, compared with the
/// induced-case formula when the subgroup is normal of prime index.
fn conduct_induced(
    opts: &GlobalOpts,
    ctx: &GaloisContext,
    selector: &str,
    theta: usize,
    text: &mut String,
) -> Result<(Value, Value, bool), CliError> {
    let g = ctx.group();
    let h = select_subgroup(g, selector)?;
    let sub_table = character_table(h.group())?;
    let th: &ClassFunction = sub_table
        .rows()
        .get(theta)
        .ok_or_else(|| input_error(format!("theta {theta} out of range: the subgroup has {} characters", sub_table.len())))?
        .class_function();
    let ind = induce(th, &h)?;
    let degree = ind.degree_u64();
    let f = artin_conductor(&ind, ctx)?;
    let root_exact = root_conductor(&f, degree);
    let root = render(&root_exact, opts.precision);
    let label = format!("Ind X.{theta}");
    let _ = writeln!(
        text,
        "{label} from a subgroup of order {}  degree {degree}  conductor {}  norm {}  root conductor {} ~ {}",
        h.order(),
        conductor_string(&f),
        f.norm,
        root.exact,
        root.decimal
    );
    let entry = conductor_json(&label, degree, &f, &root);

    let q = h.index() as u64;
    let applicable = is_normal(g, &h) && rootcond_core::scalar::poly::prime_divisors(q) == [q];
    if !applicable {
        let _ = writeln!(text, "induced-case formula: not applicable (subgroup must be normal of prime index)");
        return Ok((entry, json!({ "applicable": false }), true));
    }
    let sub_ctx = match ctx.restrict_to(&h) {
        Ok(c) => c,
        Err(e @ Error::InvalidInput(_)) => {
            let _ = writeln!(text, "induced-case formula: not applicable ({e})");
            return Ok((entry, json!({ "applicable": false, "reason": e.to_string() }), true));
        }
        Err(e) => return Err(e.into()),
    };
    let disc_k = ctx.fixed_field_discriminant(&h)?;
    let f_theta = artin_conductor(th, &sub_ctx)?;
    let b = BoundInputs::new(disc_k.clone(), q, th.degree_u64(), f_theta.norm.clone(), Rational::one())?;
    let bound = bound_induced_case(&b);
    let bound_r = render(&bound, opts.precision);
    let exact_ok = bound == root_exact;
    let decimal_ok = bound_r.decimal == root.decimal;
    let _ = writeln!(
        text,
        "induced-case formula: disc(k) {disc_k}, q {q}, theta(1) {}, N(f_theta) {} gives {} ~ {}",
        th.degree_u64(),
        f_theta.norm,
        bound_r.exact,
        bound_r.decimal
    );
    let _ = writeln!(
        text,
        "root conductor equals the formula: exact {}, decimal {}",
        if exact_ok { "yes" } else { "NO" },
        if decimal_ok { "yes" } else { "NO" }
    );
    let info = json!({
        "applicable": true,
        "fixed_field_disc": disc_k.to_string(),
        "q": q,
        "theta_degree": th.degree_u64(),
        "norm_f_theta": f_theta.norm.to_string(),
        "formula": { "exact": bound_r.exact, "decimal": bound_r.decimal },
        "exact_equal": exact_ok,
        "decimal_equal": decimal_ok,
    });
    Ok((entry, info, exact_ok && decimal_ok))
}

fn parse_positive(name: &str, s: &str) -> Result<BigUint, CliError> {
    let n: BigUint = s.trim().parse().map_err(|_| input_error(format!("--{name} {s:?} is not a nonnegative integer")))?;
    if n == BigUint::ZERO {
        return Err(input_error(format!("--{name} must be positive")));
    }
    Ok(n)
}

fn bound(opts: &GlobalOpts, args: &BoundArgs) -> Result<Outcome, CliError> {
    let (name, inputs, primes) = match &args.dataset {
        Some(d) => {
            let data = bound_dataset(d)?;
            (data.name.clone(), data.inputs()?, data.ramified_primes.clone())
        }
        None => {
            let disc = parse_positive("disc", args.disc.as_deref().ok_or_else(|| input_error("--disc is required"))?)?;
            let q = args.q.ok_or_else(|| input_error("--q is required"))?;
            let norm = match &args.norm_ftheta {
                Some(s) => parse_positive("norm-ftheta", s)?,
                None => BigUint::one(),
            };
            let t = match &args.t {
                Some(s) => parse_rational(s)?,
                None => Rational::one(),
            };
            ("flags".to_string(), BoundInputs::new(disc, q, args.theta_degree, norm, t)?, Vec::new())
        }
    };
    let p = opts.precision;
    let restricted = bound_restricted_case(&inputs);
    let induced = bound_induced_case(&inputs);
    let c = global_constant(&inputs.disc, &inputs.t);
    let c_rad = Radical::from_rational(&c);
    let c_factored = if c.is_integer() {
        factorization_string(&c.to_integer().to_biguint().expect("positive"))
    } else {
        c_rad.to_string()
    };
    let (cert, stated, ind, cdec) =
        (render(&restricted.certified, p), render(&restricted.stated, p), render(&induced, p), c_rad.decimal(p));

    let stdout = match opts.format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "dataset {name}");
            let _ = writeln!(
                s,
                "inputs: disc {} = {}, q {}, theta(1) {}, N(f_theta) {} = {}, T {}",
                inputs.disc,
                factorization_string(&inputs.disc),
                inputs.q,
                inputs.theta_degree,
                inputs.norm_f_theta,
                factorization_string(&inputs.norm_f_theta),
                inputs.t
            );
            if !primes.is_empty() {
                let ps: Vec<String> = primes.iter().map(u64::to_string).collect();
                let _ = writeln!(s, "ramified primes: {}", ps.join(", "));
            }
            let _ = writeln!(s, "restricted case, certified: {} ~ {}", cert.exact, cert.decimal);
            let _ = writeln!(s, "restricted case, stated (not certified): {} ~ {}", stated.exact, stated.decimal);
            let _ = writeln!(s, "induced case: {} ~ {}", ind.exact, ind.decimal);
            let _ = writeln!(s, "C = disc * T = {c} = {c_factored} ~ {cdec}");
            s
        }
        Format::Json => pretty(&json!({
            "dataset": name,
            "inputs": {
                "disc": inputs.disc.to_string(),
                "q": inputs.q,
                "theta_degree": inputs.theta_degree,
                "norm_f_theta": inputs.norm_f_theta.to_string(),
                "t": inputs.t.to_string(),
            },
            "ramified_primes": primes,
            "restricted": {
                "certified": { "exact": cert.exact, "decimal": cert.decimal },
                "stated": { "exact": stated.exact, "decimal": stated.decimal },
            },
            "induced": { "exact": ind.exact, "decimal": ind.decimal },
            "global_constant": { "value": c.to_string(), "factorization": c_factored, "decimal": cdec },
        })),
    };
    Ok(Outcome::ok(stdout))
}

fn verify(opts: &GlobalOpts, suite: &str) -> Result<Outcome, CliError> {
    let report = run_suite(suite, opts.max_order)?;
    let stdout = match opts.format {
        Format::Text => report.render_text(),
        Format::Json => pretty(&serde_json::to_value(&report).expect("report serializes")),
    };
    Ok(Outcome { stdout, code: if report.passed() { 0 } else { 3 } })
}

fn catalog(opts: &GlobalOpts) -> Result<Outcome, CliError> {
    let groups: Vec<(String, usize)> = base_names()
        .into_iter()
        .map(|n| {
            let order = resolve_group(&n, opts.max_order).map(|g| g.order()).unwrap_or(0);
            (n, order)
        })
        .collect();
    let contexts: Vec<(String, String)> = context_names()
        .into_iter()
        .map(|n| {
            let d = resolve_context(n, opts.max_order).ok().and_then(|c| c.disc().map(ToString::to_string));
            (n.to_string(), d.unwrap_or_default())
        })
        .collect();
    let datasets = bound_dataset_names();
    let stdout = match opts.format {
        Format::Text => {
            let mut s = String::from("groups:\n");
            for (n, o) in &groups {
                let _ = writeln!(s, "  {n:<4} order {o}");
            }
            let _ = writeln!(s, "  products: join names with x, e.g. S3xS3 or C2xC2xC3 (order at most 216)");
            let _ = writeln!(s, "contexts:");
            for (n, d) in &contexts {
                let _ = writeln!(s, "  {n:<10} disc {d}");
            }
            let _ = writeln!(s, "bound datasets:");
            for n in &datasets {
                let _ = writeln!(s, "  {n}");
            }
            s
        }
        Format::Json => pretty(&json!({
            "groups": groups.iter().map(|(n, o)| json!({ "name": n, "order": o })).collect::<Vec<_>>(),
            "contexts": contexts.iter().map(|(n, d)| json!({ "name": n, "disc": d })).collect::<Vec<_>>(),
            "bound_datasets": datasets,
        })),
    };
    Ok(Outcome::ok(stdout))
}
