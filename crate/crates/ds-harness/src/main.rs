//! distspec: distance spectra, class membership, distance-equitable
//! partitions, parameterized family construction, and exhaustive
//! verification campaigns over graph6 input or the internal enumerator.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use ds_classify::{
    build_family, classify_spectral, classify_structural, expected_spectrum, FamilySpec, TFactor,
};
use ds_exact::{char_poly, real_roots, IntMatrix, IntPoly};
use ds_graph::{parse_graph6, to_graph6, Graph};
use ds_harness::{
    campaign_appendix_a, campaign_dds, campaign_partitions, campaign_theorem_3_14,
    campaign_theorem_4_2, describe_verdict, AppendixGrid, CampaignOptions, GraphSource,
    VerificationReport,
};
use ds_partition::{
    divisor_matrix, is_distance_equitable, orbit_partition, refine_distance_equitable,
    verify_commutation, verify_divisibility, verify_radius, Partition,
};
use ds_spectra::distance_spectrum;
use num_bigint::Sign;
use num_traits::{One, Zero};
use serde_json::json;
use std::io::BufRead;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "distspec",
    version,
    about = "Distance spectra, class membership, equitable partitions and exhaustive verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the distance spectrum of a graph ('-' reads graph6 lines from stdin)
    Spectrum {
        /// graph6 string, or '-' for stdin
        input: String,
        /// Also print the exact characteristic polynomial and certified roots
        #[arg(long)]
        exact: bool,
        /// Emit JSON (one object per input graph)
        #[arg(long)]
        json: bool,
    },
    /// Structural and spectral class verdicts with witnesses
    Classify {
        /// graph6 string, or '-' for stdin
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Coarsest distance-equitable refinement (or orbit partition) and divisor-matrix checks
    Partition {
        /// graph6 string, or '-' for stdin
        input: String,
        /// Use the automorphism orbit partition instead of the coarsest refinement
        #[arg(long)]
        orbit: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build a parameterized family member (tags: s M N | f K | kr R FACTOR | tj FACTOR FACTOR | t FACTOR;
    /// FACTOR is t1 | t2 | t3 | t4 M N)
    Family {
        tag: String,
        params: Vec<String>,
        /// Print only the graph6 string
        #[arg(long, conflicts_with_all = ["spectrum", "check"])]
        g6: bool,
        /// Print only the computed distance spectrum
        #[arg(long, conflicts_with = "check")]
        spectrum: bool,
        /// Verify the closed-form spectrum against the computed one
        #[arg(long)]
        check: bool,
    },
    /// Run a verification campaign: 3.14 | 4.2 | appendixA | partitions
    Verify {
        campaign: String,
        /// Internal enumeration order (or grid bound for appendixA)
        #[arg(long = "enum", value_name = "N")]
        enumerate: Option<usize>,
        /// graph6 file as the graph source
        #[arg(long, value_name = "FILE")]
        g6: Option<PathBuf>,
        /// Reduce to one representative per isomorphism class first
        #[arg(long)]
        dedup: bool,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON report here ('-' for stdout)
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
        /// Skip malformed graph6 lines instead of aborting
        #[arg(long)]
        skip_bad: bool,
    },
    /// Search a universe for distance-cospectral mates of one target graph
    Dds {
        /// Target as a family description: TAG PARAMS…
        #[arg(long, num_args = 1.., value_name = "TAG [PARAMS]", conflicts_with = "g6_target")]
        family: Option<Vec<String>>,
        /// Target as a graph6 string
        #[arg(long, value_name = "G6")]
        g6_target: Option<String>,
        /// Universe: internal enumeration order
        #[arg(long = "enum", value_name = "N")]
        enumerate: Option<usize>,
        /// Universe: graph6 file
        #[arg(long, value_name = "FILE")]
        g6: Option<PathBuf>,
        /// Reduce the universe to isomorphism-class representatives first
        #[arg(long)]
        dedup: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON report here ('-' for stdout)
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
        #[arg(long)]
        skip_bad: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Command::Spectrum { input, exact, json } => {
            for_each_input(&input, |g| cmd_spectrum(g, exact, json))
        }
        Command::Classify { input, json } => for_each_input(&input, |g| cmd_classify(g, json)),
        Command::Partition { input, orbit, json } => {
            for_each_input(&input, |g| cmd_partition(g, orbit, json))
        }
        Command::Family { tag, params, g6, spectrum, check } => {
            cmd_family(&tag, &params, g6, spectrum, check)
        }
        Command::Verify { campaign, enumerate, g6, dedup, jobs, json, skip_bad } => {
            let opts = CampaignOptions { jobs, dedup };
            let report = match campaign.as_str() {
                c if c.eq_ignore_ascii_case("appendixA") => {
                    if g6.is_some() {
                        bail!("appendixA sweeps a parameter grid; bound it with --enum N, not --g6");
                    }
                    let bound = enumerate
                        .ok_or_else(|| anyhow!("appendixA needs --enum N as the grid bound"))?;
                    campaign_appendix_a(&AppendixGrid { r_max: bound, mn_max: bound }, &opts)?
                }
                "3.14" => campaign_theorem_3_14(&graph_source(enumerate, g6, skip_bad)?, &opts)?,
                "4.2" => campaign_theorem_4_2(&graph_source(enumerate, g6, skip_bad)?, &opts)?,
                "partitions" => {
                    campaign_partitions(&graph_source(enumerate, g6, skip_bad)?, &opts)?
                }
                other => {
                    bail!("unknown campaign '{other}' (expected 3.14, 4.2, appendixA or partitions)")
                }
            };
            emit_report(&report, json.as_deref())
        }
        Command::Dds { family, g6_target, enumerate, g6, dedup, jobs, json, skip_bad } => {
            let target = match (family, g6_target) {
                (Some(words), None) => {
                    let (tag, params) =
                        words.split_first().ok_or_else(|| anyhow!("--family needs a tag"))?;
                    GraphSource::Family { spec: parse_family_spec(tag, params)? }
                }
                (None, Some(s)) => GraphSource::Single { graph6: s },
                _ => bail!("give the target as either --family TAG PARAMS or --g6-target G6"),
            };
            let universe = graph_source(enumerate, g6, skip_bad)?;
            let opts = CampaignOptions { jobs, dedup };
            let report = campaign_dds(&target, &universe, &opts)?;
            emit_report(&report, json.as_deref())
        }
    }
}

/// Exactly one of --enum / --g6 picks the graph source.
fn graph_source(
    enumerate: Option<usize>,
    g6: Option<PathBuf>,
    skip_bad: bool,
) -> Result<GraphSource> {
    match (enumerate, g6) {
        (Some(n), None) => Ok(GraphSource::Internal { n }),
        (None, Some(path)) => Ok(GraphSource::File { path, skip_bad }),
        _ => bail!("give exactly one graph source: --enum N or --g6 FILE"),
    }
}

fn emit_report(report: &VerificationReport, json_out: Option<&std::path::Path>) -> Result<bool> {
    match json_out {
        Some(p) if p.as_os_str() == "-" => println!("{}", report.to_json()),
        Some(p) => {
            std::fs::write(p, report.to_json() + "\n")
                .with_context(|| format!("writing {}", p.display()))?;
            println!("{report}");
        }
        None => println!("{report}"),
    }
    Ok(report.passed())
}

/// Apply a per-graph command to the argument, or to every graph6 line of
/// stdin when the argument is '-'. Returns whether every graph passed.
fn for_each_input(input: &str, mut f: impl FnMut(&Graph) -> Result<bool>) -> Result<bool> {
    let mut all = true;
    if input == "-" {
        for (idx, line) in std::io::stdin().lock().lines().enumerate() {
            let line = line?;
            let s = line.trim_end();
            if s.is_empty() {
                continue;
            }
            let g = parse_graph6(s).with_context(|| format!("stdin line {}", idx + 1))?;
            all &= f(&g)?;
        }
    } else {
        let g = parse_graph6(input).with_context(|| format!("graph6 string {input:?}"))?;
        all &= f(&g)?;
    }
    Ok(all)
}

fn distance_char_poly(g: &Graph) -> Result<IntPoly> {
    Ok(char_poly(&IntMatrix::from_distance_shifted(&g.distance_matrix()?, 0)))
}

/// Human-readable polynomial in x from exact coefficients.
fn fmt_poly(p: &IntPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for k in (0..=p.degree().expect("nonzero")).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.sign() == Sign::Minus {
                out.push('-');
            }
        } else {
            out.push_str(if c.sign() == Sign::Minus { " - " } else { " + " });
        }
        let mag = c.magnitude();
        if k == 0 || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        if k >= 1 {
            out.push('x');
        }
        if k >= 2 {
            out.push_str(&format!("^{k}"));
        }
    }
    out
}

fn cmd_spectrum(g: &Graph, exact: bool, json: bool) -> Result<bool> {
    let s = distance_spectrum(g)?;
    let exact_part = if exact {
        let cp = distance_char_poly(g)?;
        let mut roots = real_roots(&cp, 1e-12)?;
        roots.reverse();
        Some((cp, roots))
    } else {
        None
    };
    if json {
        let mut obj = json!({
            "graph6": to_graph6(g),
            "order": g.n(),
            "spectrum": s.entries().iter()
                .map(|e| json!({"value": e.value, "multiplicity": e.multiplicity, "exact": e.exact}))
                .collect::<Vec<_>>(),
            "display": s.to_string(),
        });
        if let Some((cp, roots)) = &exact_part {
            obj["char_poly"] = json!(fmt_poly(cp));
            obj["roots"] = json!(roots
                .iter()
                .map(|(v, m)| json!({"value": v, "multiplicity": m}))
                .collect::<Vec<_>>());
        }
        println!("{obj}");
    } else {
        println!("{}: {}", to_graph6(g), s);
        if let Some((cp, roots)) = &exact_part {
            println!("  char_poly: {}", fmt_poly(cp));
            let list = roots
                .iter()
                .map(|(v, m)| {
                    if *m == 1 {
                        format!("{v:.10}")
                    } else {
                        format!("{v:.10} (x{m})")
                    }
                })
                .collect::<Vec<_>>()
                .join(", ");
            println!("  roots: {list}");
        }
    }
    Ok(true)
}

fn cmd_classify(g: &Graph, json: bool) -> Result<bool> {
    match (classify_structural(g), classify_spectral(g)) {
        (Ok(st), Ok(sp)) => {
            let agree = st.in_class == sp.in_class;
            if json {
                println!(
                    "{}",
                    json!({
                        "graph6": to_graph6(g),
                        "structural": {"member": st.in_class, "detail": describe_verdict(&st)},
                        "spectral": {"member": sp.in_class, "detail": describe_verdict(&sp)},
                        "agree": agree,
                    })
                );
            } else {
                println!(
                    "{}: structural: {}; spectral: {}",
                    to_graph6(g),
                    describe_verdict(&st),
                    describe_verdict(&sp)
                );
            }
            Ok(agree)
        }
        // The class is defined over connected non-complete graphs of
        // order ≥ 4; anything else gets a scope answer, not an error.
        (Err(e), _) | (_, Err(e)) => {
            if json {
                println!("{}", json!({"graph6": to_graph6(g), "out_of_scope": e.to_string()}));
            } else {
                println!("{}: out of scope ({e})", to_graph6(g));
            }
            Ok(true)
        }
    }
}

fn cmd_partition(g: &Graph, orbit: bool, json: bool) -> Result<bool> {
    let (kind, p) = if orbit {
        ("orbit", orbit_partition(g)?)
    } else {
        ("refinement", refine_distance_equitable(g, &Partition::unit(g.n()))?)
    };
    let b = divisor_matrix(g, &p)?;
    let checks = [
        ("distance equitable", is_distance_equitable(g, &p)?),
        ("DC = CB*", verify_commutation(g, &p)?),
        ("char-poly divides", verify_divisibility(g, &p)?),
        ("spectral radius agrees", verify_radius(g, &p)?),
    ];
    let ok = checks.iter().all(|&(_, pass)| pass);
    if json {
        println!(
            "{}",
            json!({
                "graph6": to_graph6(g),
                "kind": kind,
                "cells": p.cells(),
                "divisor": b.rows(),
                "divisor_char_poly": fmt_poly(&b.char_poly()),
                "checks": {
                    "equitable": checks[0].1,
                    "commutation": checks[1].1,
                    "divisibility": checks[2].1,
                    "radius": checks[3].1,
                },
            })
        );
    } else {
        let cells = p
            .cells()
            .iter()
            .map(|c| {
                let inner =
                    c.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
                format!("{{{inner}}}")
            })
            .collect::<Vec<_>>()
            .join(" ");
        println!("{}: {} partition, {} cells: {}", to_graph6(g), kind, p.cell_count(), cells);
        println!("divisor matrix (char poly {}):", fmt_poly(&b.char_poly()));
        println!("{b}");
        let verdicts = checks
            .iter()
            .map(|&(name, pass)| format!("{name}: {}", if pass { "yes" } else { "NO" }))
            .collect::<Vec<_>>()
            .join("; ");
        println!("{verdicts}");
    }
    Ok(ok)
}

fn take_num(it: &mut std::slice::Iter<String>, what: &str) -> Result<usize> {
    let word = it.next().ok_or_else(|| anyhow!("missing parameter {what}"))?;
    word.parse().with_context(|| format!("parameter {what} must be a number, got {word:?}"))
}

fn take_factor(it: &mut std::slice::Iter<String>) -> Result<TFactor> {
    let word = it.next().ok_or_else(|| anyhow!("missing factor (t1 | t2 | t3 | t4 M N)"))?;
    Ok(match word.to_ascii_lowercase().as_str() {
        "t1" => TFactor::T1,
        "t2" => TFactor::T2,
        "t3" => TFactor::T3,
        "t4" => TFactor::T4 { m: take_num(it, "m")?, n: take_num(it, "n")? },
        other => bail!("unknown factor {other:?} (expected t1, t2, t3 or t4 M N)"),
    })
}

fn parse_family_spec(tag: &str, params: &[String]) -> Result<FamilySpec> {
    let mut it = params.iter();
    let spec = match tag.to_ascii_lowercase().as_str() {
        "s" => FamilySpec::S { m: take_num(&mut it, "m")?, n: take_num(&mut it, "n")? },
        "f" => FamilySpec::Friendship { k: take_num(&mut it, "k")? },
        "kr" => {
            FamilySpec::KrJoin { r: take_num(&mut it, "r")?, rhs: take_factor(&mut it)? }
        }
        "tj" => FamilySpec::TJoin { lhs: take_factor(&mut it)?, rhs: take_factor(&mut it)? },
        "t" => FamilySpec::T(take_factor(&mut it)?),
        other => bail!("unknown family tag {other:?} (expected s, f, kr, tj or t)"),
    };
    if let Some(extra) = it.next() {
        bail!("unexpected extra parameter {extra:?} for family tag {tag:?}");
    }
    spec.validate()?;
    Ok(spec)
}

fn cmd_family(tag: &str, params: &[String], g6: bool, spectrum: bool, check: bool) -> Result<bool> {
    let spec = parse_family_spec(tag, params)?;
    let g = build_family(&spec)?;
    if g6 {
        println!("{}", to_graph6(&g));
        return Ok(true);
    }
    if spectrum {
        println!("{}", distance_spectrum(&g)?);
        return Ok(true);
    }
    if check {
        let closed = expected_spectrum(&spec)?;
        let computed = distance_spectrum(&g)?;
        let pass = closed.matches(&computed, 1e-8)?;
        println!(
            "{spec}: closed form vs computed spectrum {computed}: {}",
            if pass { "PASS" } else { "FAIL" }
        );
        return Ok(pass);
    }
    println!("{spec}: order {}, graph6 {}", g.n(), to_graph6(&g));
    match expected_spectrum(&spec) {
        Ok(closed) => {
            // Describe the closed form exactly: polynomial factor plus the
            // fixed eigenvalues with multiplicities.
            let mut parts = Vec::new();
            let poly = closed.poly();
            if poly.degree().unwrap_or(0) >= 1 {
                parts.push(format!("roots of {}", fmt_poly(poly)));
            }
            for &(v, m) in closed.fixed() {
                parts.push(if m == 1 { format!("{v}") } else { format!("({v})^{m}") });
            }
            println!("closed-form spectrum: {}", parts.join(", "));
            println!("computed spectrum: {}", distance_spectrum(&g)?);
        }
        Err(_) => println!("(disconnected union; no distance spectrum)"),
    }
    Ok(true)
}
