//! `hyperrigid`: JSON front-end for hypergeometric parameter analysis,
//! numeric monodromy and rigidity of matrix tuples.
//!
//! Indices in reports are 1-based. Exit status is 0 when every check
//! passed, 1 when a verification failed and 2 on bad input.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hyperrigid::exact::GaussianRational;
use hyperrigid::extension::{ext_dimension, parameter_counts};
use hyperrigid::hypergeometric::{
    canonical_shift_class, exponents, factor_reducible, partition, reducibility_witness, HGParams,
};
use hyperrigid::monodromy::{
    build_monodromy, check_pseudo_reflection_numeric, exp_2pi_i, local_spectra, rigidity_check_numeric,
    spectrum_deviation, FloatMatrix,
};
use hyperrigid::rigidity::{
    algebra_span_dimension, common_frame, common_spectrum_certificate, find_stabilized_subspace,
    is_irreducible_pair, levelt_normal_form, pseudo_reflection_pairs, MatrixTuple, Side,
};
use hyperrigid::sweep::{contiguity_sweep, Execution};

#[derive(Parser)]
#[command(name = "hyperrigid", version, about = "Hypergeometric operators and rigid matrix tuples")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Pretty-print the JSON report.
    #[arg(long, global = true, conflicts_with = "json")]
    pretty: bool,
    /// Compact single-line JSON (the default).
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args)]
struct InputArg {
    /// JSON input file; standard input when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Exponents, reducibility, shift class and factorization of `{"alpha": [...], "beta": [...]}`.
    Analyze(InputArg),
    /// Numeric monodromy triple for real rational parameters.
    Monodromy {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Seed of the random conjugation in the rigidity round-trip.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Frame, invariant subspaces or normal form, and irreducibility of `{"n": .., "matrices": [...]}`.
    Rigidity(InputArg),
    /// Simultaneous companion form of a tuple sharing n − 1 columns.
    NormalForm(InputArg),
    /// Checks every contiguity identity on seeded random parameters.
    VerifyIdentities {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Parameter counts of Fuchsian equations against monodromy representations.
    Counts {
        /// Largest order; the table covers 1..=n.
        #[arg(long, default_value_t = 10)]
        n: i64,
        /// Largest number of singular points; the table covers 1..=s.
        #[arg(long, default_value_t = 10)]
        s: i64,
    },
}

/// A report and whether all its checks passed.
struct Report {
    value: Value,
    ok: bool,
}

fn read_input(arg: &InputArg) -> anyhow::Result<String> {
    match &arg.input {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display())),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

fn one_based(pairs: &[(usize, usize)]) -> Value {
    json!(pairs.iter().map(|&(i, j)| [i + 1, j + 1]).collect::<Vec<_>>())
}

fn analyze(p: &HGParams) -> anyhow::Result<Report> {
    let e = exponents(p);
    let part = partition(p);
    let witness = reducibility_witness(p);
    let shift = match canonical_shift_class(p) {
        Ok(c) => json!({ "params": c }),
        Err(err) => json!({ "undefined": err.to_string() }),
    };
    let factorization = if witness.is_none() {
        Value::Null
    } else {
        match factor_reducible(p) {
            Ok(f) => json!({
                "pairs": f.pairs.iter().map(|x| json!({
                    "alpha": x.alpha_index + 1,
                    "beta": x.beta_index + 1,
                    "steps": x.steps,
                })).collect::<Vec<_>>(),
                "linear_factors": f.linear_factors().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "factors": f.factors,
                "reduced": { "alpha": f.reduced_alpha, "beta": f.reduced_beta },
                "operator": f.product().to_string(),
            }),
            Err(err) => json!({ "error": err.to_string() }),
        }
    };
    Ok(Report {
        value: json!({
            "params": p,
            "exponents": e,
            "fuchs_total": e.total(),
            "reducible": witness.is_some(),
            "witness": witness.map(|(i, j)| [i + 1, j + 1]),
            "partition": { "e0": one_based(&part.e0), "eplus": one_based(&part.eplus), "eminus": one_based(&part.eminus) },
            "canonical_shift_class": shift,
            "factorization": factorization,
        }),
        ok: true,
    })
}

fn monodromy(p: &HGParams, tol: f64, seed: u64) -> anyhow::Result<Report> {
    let spectra = local_spectra(p)?;
    let t = build_monodromy(p, tol)?;
    let check_tol = tol.max(1e-8);
    let residual = t.product().max_abs_diff(&FloatMatrix::identity(p.n()));
    let spectrum = spectrum_deviation(&t.minf, &spectra.at_infinity);
    let pseudo = check_pseudo_reflection_numeric(&t.m1, check_tol);
    let sum = p.beta().iter().sum::<GaussianRational>() - p.alpha().iter().sum::<GaussianRational>();
    let det_error = (t.m1.determinant() - exp_2pi_i(&sum)?).norm();
    let rigidity = rigidity_check_numeric(&t, check_tol, seed)?;
    let ok = residual <= tol && spectrum <= check_tol && pseudo && det_error <= check_tol && rigidity.recovered;
    Ok(Report {
        value: json!({
            "m0": t.m0,
            "m1": t.m1,
            "minf": t.minf,
            "residual": residual,
            "checks": {
                "tolerance": check_tol,
                "minf_spectrum_deviation": spectrum,
                "m1_pseudo_reflection": pseudo,
                "m1_determinant_error": det_error,
                "rigidity": rigidity,
            },
            "passed": ok,
        }),
        ok,
    })
}

fn rigidity(t: &MatrixTuple) -> anyhow::Result<Report> {
    let pairs = pseudo_reflection_pairs(t)?;
    let table: Vec<Value> = pairs
        .iter()
        .map(|&((i, j), pr)| json!({ "i": i + 1, "j": j + 1, "pseudo_reflection": pr }))
        .collect();
    let dim = algebra_span_dimension(t);
    let n = t.n();
    let mut out = BTreeMap::new();
    out.insert("pairs", json!(table));
    out.insert("algebra_dimension", json!(dim));
    out.insert("irreducible", json!(dim == n * n));
    if t.len() == 2 && pairs[0].1 {
        let [a, b] = [&t.matrices()[0], &t.matrices()[1]];
        out.insert("beukers_irreducible", json!(is_irreducible_pair(a, b)?));
    }
    let gcd = t.spectrum_gcd();
    out.insert("spectrum_gcd", json!(gcd.display_in("X")));
    match common_frame(t) {
        Err(err) => {
            out.insert("frame", json!({ "error": err.to_string() }));
        }
        Ok(frame) => {
            out.insert("frame", frame_json(&frame));
            if gcd.is_constant() {
                let nf = match frame.side {
                    Side::Columns => match levelt_normal_form(t, &frame) {
                        Ok(f) => json!({ "u": f.u, "canon": f.canon }),
                        Err(err) => json!({ "error": err.to_string() }),
                    },
                    Side::Rows => json!({ "error": hyperrigid::Error::RowFrame.to_string() }),
                };
                out.insert("normal_form", nf);
            } else {
                let roots = gcd.rational_roots().unwrap_or_default();
                let cert = match roots.first() {
                    None => json!({ "gcd": gcd.display_in("X"), "eigenvalue": null }),
                    Some(lambda) => {
                        let sub = find_stabilized_subspace(t, &frame, lambda)?;
                        let c = common_spectrum_certificate(t, &frame, sub.subspace())?;
                        json!({
                            "eigenvalue": lambda,
                            "invariant": { "kind": sub.kind(), "basis": sub.subspace().basis() },
                            "branch": c.branch,
                            "factor": c.factor.display_in("X"),
                            "gcd": c.gcd.display_in("X"),
                        })
                    }
                };
                out.insert("certificate", cert);
            }
        }
    }
    Ok(Report { value: json!(out), ok: true })
}

fn frame_json(f: &hyperrigid::rigidity::CommonFrame) -> Value {
    json!({
        "basis_change": f.basis_change,
        "side": f.side,
        "shared": f.shared_indices.iter().map(|k| k + 1).collect::<Vec<_>>(),
    })
}

fn normal_form(t: &MatrixTuple) -> anyhow::Result<Report> {
    let frame = common_frame(t)?;
    let f = levelt_normal_form(t, &frame)?;
    Ok(Report { value: json!({ "frame": frame_json(&frame), "u": f.u, "canon": f.canon }), ok: true })
}

fn verify_identities(seed: u64, count: u64) -> anyhow::Result<Report> {
    let out = contiguity_sweep(Execution::Parallel, seed, count as usize, 2, 5)?;
    let mut kinds: BTreeMap<&str, (u64, u64)> = BTreeMap::new();
    let mut failures = Vec::new();
    for o in &out {
        for &(name, ok) in &o.checks {
            let e = kinds.entry(name).or_default();
            if ok {
                e.0 += 1;
            } else {
                e.1 += 1;
                failures.push(json!({ "instance": o.index + 1, "identity": name, "params": o.params }));
            }
        }
    }
    let ok = failures.is_empty();
    Ok(Report {
        value: json!({
            "seed": seed,
            "count": count,
            "identities": kinds.iter().map(|(k, (p, f))| (k.to_string(), json!({ "passed": p, "failed": f }))).collect::<BTreeMap<_, _>>(),
            "failures": failures,
            "passed": ok,
        }),
        ok,
    })
}

fn counts(max_n: i64, max_s: i64) -> anyhow::Result<Report> {
    if max_n < 1 || max_s < 1 {
        bail!("--n and --s must be at least 1");
    }
    let mut rows = Vec::new();
    for n in 1..=max_n {
        for s in 1..=max_s {
            let c = parameter_counts(n, s)?;
            rows.push(json!({ "n": n, "s": s, "equation": c.equation_count, "monodromy": c.monodromy_count, "rigid": c.rigid }));
        }
    }
    Ok(Report {
        value: json!({ "table": rows, "ext_dimension_2_3_0_0": ext_dimension(2, 3, 0, 0)? }),
        ok: true,
    })
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    match &cli.command {
        Command::Analyze(input) => {
            let p: HGParams = serde_json::from_str(&read_input(input)?).context("parsing parameters")?;
            analyze(&p)
        }
        Command::Monodromy { input, tol, seed } => {
            let p: HGParams = serde_json::from_str(&read_input(input)?).context("parsing parameters")?;
            monodromy(&p, *tol, *seed)
        }
        Command::Rigidity(input) => {
            let t: MatrixTuple = serde_json::from_str(&read_input(input)?).context("parsing matrix tuple")?;
            rigidity(&t)
        }
        Command::NormalForm(input) => {
            let t: MatrixTuple = serde_json::from_str(&read_input(input)?).context("parsing matrix tuple")?;
            normal_form(&t)
        }
        Command::VerifyIdentities { seed, count } => verify_identities(*seed, *count),
        Command::Counts { n, s } => counts(*n, *s),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let text = if cli.pretty {
                serde_json::to_string_pretty(&report.value)
            } else {
                serde_json::to_string(&report.value)
            };
            let mut stdout = std::io::stdout().lock();
            if let Err(err) = writeln!(stdout, "{}", text.expect("JSON values always serialize")) {
                if err.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: writing report: {err}");
                    return ExitCode::from(2);
                }
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
