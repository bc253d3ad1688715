//! Exhaustive verification sweeps over the catalog and bundled contexts.

use std::collections::BTreeMap;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use rootcond_core::character::{
    character_table, induce, inner_product, restrict, CharacterTable, ClassFunction,
};
use rootcond_core::clifford::{construct_large_degree, CaseKind, InertiaKind, NormalChain, NormalPair};
use rootcond_core::conductor::{
    artin_conductor, bound_induced_case, conductor_exponent, induced_conductor_norm, root_conductor,
    unramified_triviality, verify_conductor_discriminant, BoundInputs, GaloisContext,
};
use rootcond_core::group::{direct_product, normal_subgroups, FiniteGroup, Subgroup};
use rootcond_core::scalar::{Cyclotomic, Rational};
use rootcond_core::Error;

use crate::catalog::{context_names, resolve_context, resolve_group, sweep_groups, PRODUCT_CAP};
use crate::report::{Recorder, VerificationReport};

pub const SUITES: &[&str] = &["clifford", "gallagher", "dichotomy", "classification", "degrees", "conductor", "tables"];

/// Random character sums per context in the conductor suite.
pub const RANDOM_SUMS: usize = 100;

pub fn run_suite(suite: &str, max_order: usize) -> Result<VerificationReport, Error> {
    let checks = match suite {
        "clifford" => per_pair(max_order, clifford_pair),
        "gallagher" => per_pair(max_order, gallagher_pair),
        "dichotomy" => per_pair(max_order, dichotomy_pair),
        "classification" => per_pair(max_order, classification_pair),
        "degrees" => degrees(max_order),
        "conductor" => conductor(max_order),
        "tables" => tables(max_order),
        "all" => {
            let reports: Vec<VerificationReport> =
                SUITES.iter().map(|s| run_suite(s, max_order)).collect::<Result<_, _>>()?;
            reports
                .into_iter()
                .flat_map(|r| {
                    let suite = r.suite;
                    r.checks.into_iter().map(move |mut c| {
                        c.identity = format!("{suite}: {}", c.identity);
                        c
                    })
                })
                .collect()
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown suite {other:?}; expected one of {} or all",
                SUITES.join(", ")
            )))
        }
    };
    Ok(VerificationReport::new(suite, checks))
}

fn name(g: &FiniteGroup) -> &str {
    g.name().unwrap_or("group")
}

fn pair_label(g: &FiniteGroup, h: &Subgroup) -> String {
    format!("{} > H{:?}", name(g), h.elements())
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Runs `f` on every normal subgroup of prime index of every sweep group.
fn per_pair(max_order: usize, f: fn(&NormalPair, &mut Recorder)) -> Vec<crate::report::CheckRecord> {
    let groups = sweep_groups(max_order);
    let chunks: Vec<Vec<crate::report::CheckRecord>> = groups
        .par_iter()
        .map(|g| {
            let mut rec = Recorder::default();
            let Some(table) = rec.attempt("character table", name(g), character_table(g)) else {
                return rec.checks;
            };
            for h in normal_subgroups(g).into_iter().filter(|h| is_prime(h.index())) {
                let label = pair_label(g, &h);
                if let Some(pair) = rec.attempt("normal pair", &label, NormalPair::with_table(&h, table.clone())) {
                    f(&pair, &mut rec);
                }
            }
            rec.checks
        })
        .collect();
    chunks.into_iter().flatten().collect()
}

fn clifford_pair(pair: &NormalPair, rec: &mut Recorder) {
    let g = pair.group();
    let label = pair_label(g, pair.subgroup());
    let h = pair.subgroup();
    for (i, chi) in pair.table().rows().iter().enumerate() {
        let inputs = format!("{label}, chi = X.{i}");
        let Some(d) = rec.attempt("decomposition", &inputs, pair.decomposition(chi.class_function())) else {
            continue;
        };
        let theta = pair.sub_table().rows()[d.theta_index].class_function();
        let t = d.t() as u64;
        rec.check("Res chi = e * sum of the conjugates of theta", &inputs, d.restriction_matches, || {
            format!("e = {}, orbit {:?}", d.e, d.orbit)
        });
        rec.check("orbit length t = [G : I_G(theta)]", &inputs, d.t() * d.inertia_order == g.order(), || {
            format!("t = {}, |I| = {}, |G| = {}", d.t(), d.inertia_order, g.order())
        });
        let orbit_ok = d.orbit.iter().all(|&j| {
            let other = pair.sub_table().rows()[j].class_function();
            g.elements().any(|x| pair.conjugate(theta, x) == *other)
        });
        rec.check("orbit members are G-conjugates of theta", &inputs, orbit_ok, || format!("{:?}", d.orbit));
        rec.check("chi(1) = e t theta(1)", &inputs, chi.degree() == d.e * t * theta.degree_u64(), || {
            format!("{} vs {} * {} * {}", chi.degree(), d.e, t, theta.degree_u64())
        });
        if let Ok(res) = restrict(chi.class_function(), h) {
            let norm = inner_product(&res, &res).ok();
            let expected = Cyclotomic::from_int((d.e * d.e * t) as i64);
            rec.check("<Res chi, Res chi> = e^2 t", &inputs, norm.as_ref() == Some(&expected), || {
                format!("{norm:?} vs {expected}")
            });
        }
        rec.check("e^2 <= [I_G(theta) : H]", &inputs, (d.e * d.e) as usize <= d.inertia_order / h.order(), || {
            format!("e = {}, [I:H] = {}", d.e, d.inertia_order / h.order())
        });
        rec.check("e^2 t <= [G : H]", &inputs, (d.e * d.e * t) as usize <= h.index(), || {
            format!("e = {}, t = {t}", d.e)
        });
        if let Ok(ind) = induce(theta, h) {
            let m = inner_product(&ind, chi.class_function()).ok();
            rec.check("<Ind theta, chi> = e", &inputs, m == Some(Cyclotomic::from_int(d.e as i64)), || {
                format!("{m:?}")
            });
        }
    }
    for (j, theta) in pair.sub_table().rows().iter().enumerate() {
        let inputs = format!("{label}, theta = X.{j}");
        let covered = pair.table().rows().iter().any(|chi| {
            restrict(chi.class_function(), h)
                .and_then(|r| inner_product(&r, theta.class_function()))
                .is_ok_and(|m| !m.is_zero())
        });
        rec.check("theta lies under some chi", &inputs, covered, String::new);
    }
}

fn dichotomy_pair(pair: &NormalPair, rec: &mut Recorder) {
    let g = pair.group();
    let label = pair_label(g, pair.subgroup());
    for (j, theta) in pair.sub_table().rows().iter().enumerate() {
        let inputs = format!("{label}, theta = X.{j}");
        let Some(kind) = rec.attempt("inertia dichotomy", &inputs, pair.inertia_dichotomy(theta.class_function()))
        else {
            continue;
        };
        // brute-force stabiliser
        let stab = g.elements().filter(|&x| pair.conjugate(theta.class_function(), x) == *theta.class_function()).count();
        let expected = if stab == g.order() {
            Some(InertiaKind::WholeGroup)
        } else if stab == pair.subgroup().order() {
            Some(InertiaKind::Subgroup)
        } else {
            None
        };
        rec.check("I_G(theta) is G or H", &inputs, expected == Some(kind), || {
            format!("stabiliser of order {stab}, reported {kind:?}")
        });
    }
}

fn classification_pair(pair: &NormalPair, rec: &mut Recorder) {
    let g = pair.group();
    let label = pair_label(g, pair.subgroup());
    let q = pair.index();
    for (i, chi) in pair.table().rows().iter().enumerate() {
        let inputs = format!("{label}, chi = X.{i}");
        let Some(c) = rec.attempt("classification is total", &inputs, pair.classify(chi.class_function())) else {
            continue;
        };
        rec.check("exactly one case holds", &inputs, c.restricted_holds != c.induced_holds, || {
            format!("restricted {}, induced {}", c.restricted_holds, c.induced_holds)
        });
        let consistent = match c.kind {
            CaseKind::Restricted => c.t == 1 && c.e == 1 && c.extension.as_ref() == Some(chi.class_function()),
            CaseKind::Induced => c.t == q && c.e == 1 && chi.degree() == q as u64 * c.theta.degree_u64(),
        };
        rec.check("case data matches the case", &inputs, consistent, || {
            format!("{:?} with e = {}, t = {}", c.kind, c.e, c.t)
        });
    }
}

fn gallagher_pair(pair: &NormalPair, rec: &mut Recorder) {
    let g = pair.group();
    let label = pair_label(g, pair.subgroup());
    let q = pair.index();
    for (j, theta) in pair.sub_table().rows().iter().enumerate() {
        let inputs = format!("{label}, theta = X.{j}");
        let invariant = g.elements().all(|x| pair.conjugate(theta.class_function(), x) == *theta.class_function());
        match pair.find_extension(theta.class_function()) {
            Ok(ext) => {
                rec.check("invariant theta extends", &inputs, invariant, || "extension of a non-invariant theta".into());
                let restricts = restrict(ext.character.class_function(), pair.subgroup())
                    .is_ok_and(|r| r == *theta.class_function());
                rec.check("Res of the extension is theta", &inputs, restricts, String::new);
                rec.check("theta has exactly q extensions", &inputs, ext.all.len() == q, || {
                    format!("{} extensions, q = {q}", ext.all.len())
                });
            }
            Err(Error::NotInvariant) => {
                rec.check("non-invariant theta is rejected", &inputs, !invariant, || "invariant theta rejected".into());
            }
            Err(e) => rec.check("invariant theta extends", &inputs, false, || e.to_string()),
        }
    }
}

/// Chains `1 < S3 < S3^2 < ...` inside `S3^n`.
pub fn s3_power_chain(n: usize) -> Result<NormalChain, Error> {
    let s3 = resolve_group("S3", PRODUCT_CAP)?;
    let mut g = s3.clone();
    for _ in 1..n {
        g = direct_product(&g, &s3, PRODUCT_CAP)?;
    }
    let g = g.named(vec!["S3"; n].join("x"));
    // S3^k x 1 inside S3^n: elements whose trailing n - k coordinates are the identity
    let mut subs = vec![Subgroup::trivial(&g)];
    for k in 1..n {
        let tail = 6usize.pow((n - k) as u32);
        subs.push(Subgroup::new(&g, g.elements().filter(|x| x % tail == 0))?);
    }
    subs.push(Subgroup::whole(&g));
    NormalChain::new(&g, subs)
}

fn degrees(max_order: usize) -> Vec<crate::report::CheckRecord> {
    let mut rec = Recorder::default();
    let results: Vec<_> = (1..=3usize)
        .into_par_iter()
        .map(|n| {
            let chain = s3_power_chain(n);
            let built = chain.as_ref().map_err(Clone::clone).and_then(construct_large_degree);
            let table = chain.as_ref().map_err(Clone::clone).and_then(|c| character_table(c.group()));
            (n, built, table)
        })
        .collect();
    for (n, built, table) in results {
        let inputs = format!("S3^{n} chain of length {n}");
        let (Some(built), Some(table)) = (
            rec.attempt("chain construction", &inputs, built),
            rec.attempt("character table", &inputs, table),
        ) else {
            continue;
        };
        let d = built.degree();
        rec.check("constructed degree >= 2^n", &inputs, d >= 1 << n, || format!("degree {d}"));
        rec.check("constructed character is irreducible", &inputs, built.character.is_irreducible(), String::new);
        rec.check("constructed character is a table row", &inputs, table.index_of(built.character.class_function()).is_some(), String::new);
        rec.check("maximum table degree is 2^n", &inputs, table.max_degree() == 1 << n, || {
            format!("max degree {}", table.max_degree())
        });
        rec.check("constructed degree <= maximum table degree", &inputs, d <= table.max_degree(), || {
            format!("{d} > {}", table.max_degree())
        });
    }
    // promotion over prime-index normal subgroups
    rec.checks.extend(per_pair(max_order, promotion_pair));
    rec.checks
}

fn promotion_pair(pair: &NormalPair, rec: &mut Recorder) {
    let label = pair_label(pair.group(), pair.subgroup());
    for (j, theta) in pair.sub_table().rows().iter().enumerate() {
        let inputs = format!("{label}, theta = X.{j}");
        let Some(chi) = rec.attempt("promotion", &inputs, pair.promote_degree(theta.class_function())) else {
            continue;
        };
        rec.check("promoted degree >= theta(1)", &inputs, chi.degree() >= theta.degree(), || {
            format!("{} < {}", chi.degree(), theta.degree())
        });
        let under = induce(theta.class_function(), pair.subgroup())
            .and_then(|ind| inner_product(&ind, chi.class_function()))
            .is_ok_and(|m| !m.is_zero());
        rec.check("promoted character lies over theta", &inputs, under, String::new);
    }
}

fn tables(max_order: usize) -> Vec<crate::report::CheckRecord> {
    let chunks: Vec<_> = sweep_groups(max_order)
        .par_iter()
        .map(|g| {
            let mut rec = Recorder::default();
            let label = name(g).to_string();
            let Some(table) = rec.attempt("character table", &label, character_table(g)) else {
                return rec.checks;
            };
            table_checks(&table, &mut rec);
            rec.checks
        })
        .collect();
    chunks.into_iter().flatten().collect()
}

fn table_checks(table: &CharacterTable, rec: &mut Recorder) {
    let g = table.group();
    let label = name(g).to_string();
    rec.check("one row per class", &label, table.len() == g.classes().len(), || format!("{} rows", table.len()));
    rec.check("row orthonormality", &label, table.rows_orthonormal(), String::new);
    rec.check("column orthogonality", &label, table.columns_orthogonal(), String::new);
    let sum: u64 = table.degrees().iter().map(|d| d * d).sum();
    rec.check("sum of squared degrees = |G|", &label, sum == g.order() as u64, || format!("{sum}"));
    rec.check("trivial character first", &label, table.rows()[0].class_function() == &ClassFunction::trivial(g), String::new);
    for h in normal_subgroups(g) {
        let inputs = pair_label(g, &h);
        let Some(sub) = rec.attempt("character table", &inputs, character_table(h.group())) else {
            continue;
        };
        let inductions: Vec<_> = sub.rows().iter().map(|t| induce(t.class_function(), &h)).collect();
        let mut ok = true;
        let mut detail = String::new();
        for (i, chi) in table.rows().iter().enumerate() {
            let res = restrict(chi.class_function(), &h);
            for (j, (theta, ind)) in sub.rows().iter().zip(&inductions).enumerate() {
                let lhs = res.as_ref().ok().and_then(|r| inner_product(r, theta.class_function()).ok());
                let rhs = ind.as_ref().ok().and_then(|f| inner_product(chi.class_function(), f).ok());
                if lhs.is_none() || lhs != rhs {
                    ok = false;
                    detail = format!("X.{i} vs theta X.{j}: {lhs:?} != {rhs:?}");
                }
            }
        }
        rec.check("Frobenius reciprocity", &inputs, ok, || detail);
    }
}

fn conductor(max_order: usize) -> Vec<crate::report::CheckRecord> {
    let chunks: Vec<_> = context_names()
        .into_par_iter()
        .map(|n| {
            let mut rec = Recorder::default();
            if let Some(ctx) = rec.attempt("context loads", n, resolve_context(n, max_order)) {
                context_checks(&ctx, &mut rec);
            }
            rec.checks
        })
        .collect();
    chunks.into_iter().flatten().collect()
}

fn exponent_map(chi: &ClassFunction, ctx: &GaloisContext) -> Result<BTreeMap<u64, u64>, Error> {
    let mut out = BTreeMap::new();
    for f in ctx.filtrations() {
        out.insert(f.prime(), conductor_exponent(chi, f)?);
    }
    Ok(out)
}

/// Deterministic seed per context name.
fn seed(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3))
}

pub fn context_checks(ctx: &GaloisContext, rec: &mut Recorder) {
    let g = ctx.group();
    let label = ctx.name().to_string();
    let Some(table) = rec.attempt("character table", &label, character_table(g)) else {
        return;
    };

    if let Some(disc) = ctx.disc() {
        let ok = verify_conductor_discriminant(ctx, &table, disc);
        rec.check("conductor-discriminant formula", &format!("{label}, disc {disc}"), ok == Ok(true), || {
            format!("{ok:?}")
        });
    }

    // integrality of chi(G_j)
    for (i, chi) in table.rows().iter().enumerate() {
        for f in ctx.filtrations() {
            for (j, gj) in f.groups().iter().enumerate() {
                let inputs = format!("{label}, X.{i}, G_{j} at {}", f.prime());
                let sum = chi.class_function().sum_over(gj.elements());
                let fixed = restrict(chi.class_function(), gj)
                    .and_then(|r| inner_product(&r, &ClassFunction::trivial(gj.group())));
                let ok = fixed.is_ok_and(|m| sum == &m * &Cyclotomic::from_int(gj.order() as i64)) && sum.to_integer().is_some();
                rec.check("chi(G_j) = |G_j| <Res chi, 1>", &inputs, ok, || sum.to_string());
            }
        }
        let inputs = format!("{label}, X.{i}");
        let e = exponent_map(chi.class_function(), ctx);
        rec.check("irreducible exponents are integral", &inputs, e.is_ok(), || format!("{e:?}"));
        // conjugation invariance
        let invariant = ctx.filtrations().iter().all(|f| {
            let base = conductor_exponent(chi.class_function(), f);
            g.elements().all(|x| conductor_exponent(chi.class_function(), &f.conjugate_by(x)) == base)
        });
        rec.check("exponent invariant under conjugating the filtration", &inputs, invariant, String::new);
    }

    // additivity and truncation on random sums of rows
    let padded = ctx.padded(3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed(ctx.name()));
    let rows: Vec<&ClassFunction> = table.rows().iter().map(|r| r.class_function()).collect();
    let random_sum = |rng: &mut ChaCha8Rng| -> (Vec<u32>, ClassFunction) {
        loop {
            let coeffs: Vec<u32> = rows.iter().map(|_| rng.gen_range(0..4)).collect();
            if coeffs.iter().any(|&c| c > 0) {
                let f = rows
                    .iter()
                    .zip(&coeffs)
                    .filter(|(_, &c)| c > 0)
                    .map(|(r, &c)| r.scale(i64::from(c)))
                    .reduce(|a, b| &a + &b)
                    .expect("nonzero sum");
                return (coeffs, f);
            }
        }
    };
    for _ in 0..RANDOM_SUMS {
        let (ca, phi) = random_sum(&mut rng);
        let (cb, psi) = random_sum(&mut rng);
        let inputs = format!("{label}, {ca:?} + {cb:?}");
        let (ea, eb, es) = (exponent_map(&phi, ctx), exponent_map(&psi, ctx), exponent_map(&(&phi + &psi), ctx));
        let additive = match (&ea, &eb, &es) {
            (Ok(a), Ok(b), Ok(s)) => s.iter().all(|(p, v)| *v == a[p] + b[p]),
            _ => false,
        };
        rec.check("f(phi + psi) = f(phi) + f(psi)", &inputs, additive, || format!("{ea:?} {eb:?} {es:?}"));
        let truncation = exponent_map(&phi, &padded) == ea && exponent_map(&psi, &padded) == eb;
        rec.check("trailing trivial groups change nothing", &inputs, truncation, String::new);
    }

    // unramified triviality
    let bare = GaloisContext::new(g, Vec::new()).expect("empty context");
    let all_trivial = rows.iter().all(|r| artin_conductor(r, &bare).is_ok_and(|f| f.norm.is_one()));
    rec.check("no ramification gives trivial conductors", &label, unramified_triviality(&bare) && all_trivial, String::new);
    let ramified = ctx.filtrations().iter().any(|f| f.is_ramified());
    rec.check("unramified test matches the data", &label, unramified_triviality(ctx) != ramified, String::new);

    // induced conductors and the induced-case bound over prime-index normal subgroups
    for h in normal_subgroups(g).into_iter().filter(|h| is_prime(h.index())) {
        let inputs = pair_label(g, &h);
        let sub_ctx = match ctx.restrict_to(&h) {
            Ok(c) => c,
            Err(Error::InvalidInput(_)) => continue,
            Err(e) => {
                rec.check("restricted context", &inputs, false, || e.to_string());
                continue;
            }
        };
        let Some(disc_k) = rec.attempt("fixed field discriminant", &inputs, ctx.fixed_field_discriminant(&h)) else {
            continue;
        };
        let Some(sub_table) = rec.attempt("character table", &inputs, character_table(h.group())) else {
            continue;
        };
        let q = h.index() as u64;
        for (j, theta) in sub_table.rows().iter().enumerate() {
            let inputs = format!("{inputs}, theta = X.{j}");
            let f_theta = artin_conductor(theta.class_function(), &sub_ctx);
            let f_ind = induce(theta.class_function(), &h).and_then(|ind| artin_conductor(&ind, ctx));
            let (Some(f_theta), Some(f_ind)) = (
                rec.attempt("conductor of theta", &inputs, f_theta),
                rec.attempt("conductor of Ind theta", &inputs, f_ind),
            ) else {
                continue;
            };
            let expected = induced_conductor_norm(theta.degree(), &f_theta.norm, &disc_k);
            rec.check("N(f_Ind theta) = disc^theta(1) N(f_theta)", &inputs, f_ind.norm == expected, || {
                format!("{} vs {expected}", f_ind.norm)
            });
            let b = BoundInputs::new(disc_k.clone(), q, theta.degree(), f_theta.norm.clone(), Rational::one());
            let Some(b) = rec.attempt("bound inputs", &inputs, b) else {
                continue;
            };
            let root = root_conductor(&f_ind, q * theta.degree());
            let bound = bound_induced_case(&b);
            rec.check("root conductor of Ind theta = induced-case bound", &inputs, root == bound, || {
                format!("{root} vs {bound}")
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for suite in SUITES {
            let r = run_suite(suite, 8).unwrap();
            assert!(r.passed(), "{}", r.render_text());
            assert!(r.summary.total > 0, "{suite}");
        }
        assert!(run_suite("bogus", 8).is_err());
    }

    #[test]
    fn chains_have_expected_shape() {
        for n in 1..=3 {
            let c = s3_power_chain(n).unwrap();
            assert_eq!(c.length(), n);
            assert_eq!(c.group().order(), 6usize.pow(n as u32));
        }
    }
}
