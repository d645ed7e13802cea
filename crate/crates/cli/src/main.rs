use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use slicework_core::detection::detection_report;
use slicework_core::fgl::{hazewinkel_images, mo_generators, rbar_generators, t_functions};
use slicework_core::repsphere::{bredon_cohomology, bredon_homology, gap_check, parse_group, Coeff, GradedGroups, RepDescriptor};
use slicework_core::slicess::{e2_region_basis, inverted_ss_run, refine_orbits, vanishing_range, RegionBasis};
use slicework_core::verify::verify_all;

#[derive(Parser)]
#[command(name = "slicework", version, about = "Exact computations for representation spheres, slice charts and formal A-modules")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Worker threads for commands that fan out.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FglKind {
    H,
    Rbar,
    Haz,
    Tfun,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffArg {
    Z,
    Z2,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bredon homology (or cohomology) of a representation sphere.
    SphereHomology {
        #[arg(long)]
        group: String,
        #[arg(long)]
        rep: String,
        #[arg(long)]
        cohomology: bool,
        /// Order of the subgroup whose invariants are taken; defaults to the whole group.
        #[arg(long)]
        level: Option<u64>,
        #[arg(long, value_enum, default_value_t = CoeffArg::Z)]
        coeff: CoeffArg,
    },
    /// Check H^i(S^{mρ}) = 0 for 0 < i < 4.
    Gap {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 2)]
        mmax: u32,
    },
    /// Vanishing range of an n-slice, optionally with an E₂ basis query.
    SliceRegion {
        #[arg(long)]
        g: u64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, requires = "d", allow_negative_numbers = true)]
        s: Option<i64>,
        #[arg(long, requires = "s", allow_negative_numbers = true)]
        d: Option<i64>,
        #[arg(long, default_value_t = 0)]
        k: i64,
    },
    /// Orbit refinement of monomials of degree 2d.
    Refine {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        d: u64,
    },
    /// The a-inverted slice spectral sequence through a stem bound.
    SsRun {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        bound: usize,
    },
    /// Generator tables.
    Fgl {
        #[arg(value_enum)]
        kind: FglKind,
        #[arg(long, default_value_t = 8)]
        prec: usize,
    },
    /// Detection report.
    Detect {
        #[arg(long, default_value_t = 10)]
        jmax: u32,
        /// Same as --format json.
        #[arg(long)]
        json: bool,
    },
    /// Run every acceptance check.
    VerifyAll,
}

struct Output {
    text: String,
    ok: bool,
}

fn ok(text: String) -> Output {
    Output { text, ok: true }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn groups_table(g: &GradedGroups, label: &str, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Tsv => {
            for (d, grp) in &g.0 {
                let _ = writeln!(out, "{d}\t{grp}");
            }
        }
        _ => {
            let _ = writeln!(out, "{:>6}  group", label);
            for (d, grp) in &g.0 {
                if !grp.is_zero() {
                    let _ = writeln!(out, "{d:>6}  {grp}");
                }
            }
        }
    }
    out
}

fn run(cli: &Cli) -> Result<Output, String> {
    let format = cli.format;
    let e = |e: slicework_core::Error| e.to_string();
    match &cli.cmd {
        Cmd::SphereHomology { group, rep, cohomology, level, coeff } => {
            let n = parse_group(group).map_err(e)?;
            let v = RepDescriptor::parse(rep, n).map_err(e)?;
            let h = level.unwrap_or(1 << n);
            let c = match coeff {
                CoeffArg::Z => Coeff::Z,
                CoeffArg::Z2 => Coeff::Z2,
            };
            let g = if *cohomology { bredon_cohomology(&v, h, c) } else { bredon_homology(&v, h, c) }.map_err(e)?;
            let key = if *cohomology { "cohomology" } else { "homology" };
            Ok(ok(match format {
                Format::Json => pretty(&json!({ "group": format!("C{}", 1u64 << n), "rep": v.to_string(), "level": h, key: g })),
                _ => groups_table(&g, if *cohomology { "H^s" } else { "H_s" }, format),
            }))
        }
        Cmd::Gap { group, mmax } => {
            let n = parse_group(group).map_err(e)?;
            let r = gap_check(n, *mmax).map_err(e)?;
            let text = match format {
                Format::Json => pretty(&serde_json::to_value(&r).expect("serializable")),
                _ => {
                    let mut s = String::new();
                    for en in &r.entries {
                        let sep = if format == Format::Tsv { "\t" } else { "  " };
                        let _ = writeln!(s, "m={}{sep}H^{}{sep}{}{sep}{}", en.m, en.degree, en.group, if en.pass { "ok" } else { "FAIL" });
                    }
                    s
                }
            };
            Ok(Output { text, ok: r.all_pass() })
        }
        Cmd::SliceRegion { g, n, s, d, k } => {
            let (lo, hi) = vanishing_range(*n, *g).map_err(e)?;
            let basis = match (s, d) {
                (Some(s), Some(d)) => Some((*s, *d, e2_region_basis(*g, *k, *s, *d).map_err(e)?)),
                _ => None,
            };
            Ok(ok(match format {
                Format::Json => {
                    let mut v = json!({ "g": g, "n": n, "range": [lo, hi] });
                    if let Some((s, d, b)) = &basis {
                        v["e2"] = json!({ "s": s, "t_minus_s": d, "k": k, "basis": b });
                    }
                    pretty(&v)
                }
                _ => {
                    let mut out = format!("pi_k of a {n}-slice can be nonzero only for {lo} <= k <= {hi}\n");
                    if let Some((s, d, b)) = basis {
                        match b {
                            RegionBasis::OutsideRegion => {
                                let _ = writeln!(out, "E2({s},{d}) is outside the region for k = {k}");
                            }
                            RegionBasis::Inside(v) => {
                                let names: Vec<String> = v.iter().map(|e| e.monomial.clone()).collect();
                                let _ = writeln!(out, "E2({s},{d}): {{{}}}", names.join(", "));
                            }
                        }
                    }
                    out
                }
            }))
        }
        Cmd::Refine { g, d } => {
            let r = refine_orbits(*g, *d).map_err(e)?;
            let list: Vec<Value> = r
                .cells
                .iter()
                .map(|(c, mult)| json!({ "subgroup": format!("C{}", c.h), "m": c.m, "multiplicity": mult }))
                .collect();
            Ok(ok(match format {
                Format::Json => pretty(&json!({ "g": g, "degree": r.degree, "rank": r.rank, "cells": list })),
                Format::Tsv => {
                    let mut s = String::new();
                    for (c, mult) in &r.cells {
                        let _ = writeln!(s, "C{}\t{}\t{}", c.h, c.m, mult);
                    }
                    s
                }
                Format::Table => {
                    let mut s = format!("degree {}: rank {}, {} orbits\n", r.degree, r.rank, r.orbits.len());
                    for (c, mult) in &r.cells {
                        let _ = writeln!(s, "  {mult} x {c}");
                    }
                    s
                }
            }))
        }
        Cmd::SsRun { g, bound } => {
            let run = inverted_ss_run(*g, *bound).map_err(e)?;
            Ok(ok(match format {
                Format::Json => pretty(&serde_json::to_value(&run).expect("serializable")),
                Format::Tsv => {
                    let mut s = String::new();
                    for (fs, stem, names) in run.chart_rows() {
                        let _ = writeln!(s, "{fs}\t{stem}\t{}", names.join(" "));
                    }
                    s
                }
                Format::Table => {
                    let mut s = String::new();
                    for p in &run.pages {
                        let total: usize = p.ranks.iter().sum();
                        let _ = writeln!(s, "d_{:<4} rank {total}", p.r);
                    }
                    let _ = writeln!(s, "stem  E∞ rank  basis");
                    for (n, b) in run.e_infinity.iter().enumerate() {
                        let _ = writeln!(s, "{n:>4}  {:>7}  {}", b.len(), b.join(" "));
                    }
                    s
                }
            }))
        }
        Cmd::Fgl { kind, prec } => fgl(*kind, *prec, format).map_err(e),
        Cmd::Detect { jmax, json } => {
            let r = detection_report(*jmax).map_err(e)?;
            let text = if *json || format == Format::Json {
                pretty(&serde_json::to_value(&r).expect("serializable"))
            } else {
                let mut s = String::from("s-values\n");
                for en in &r.s_table {
                    let _ = writeln!(s, "  s_{{{},{}}} = {}   v_pi = {}{}", en.subgroup, en.i, en.value, en.pi_valuation, if en.unit { "  unit" } else { "" });
                }
                let _ = writeln!(s, "Bockstein");
                for b in &r.bockstein {
                    let _ = writeln!(s, "  j={:<3} target {}  witness {}  {}", b.j, b.target_group, b.witness, if b.nonzero { "nonzero" } else { "zero" });
                }
                let min = r.beta_bounds.iter().map(|b| b.value.clone()).next();
                let _ = writeln!(s, "beta bounds: {} checked, first {}", r.beta_bounds.len(), min.unwrap_or_else(|| "-".into()));
                let _ = writeln!(s, "alpha bounds: {} checked", r.alpha_bounds.len());
                let _ = writeln!(s, "verdict: {}", r.verdict);
                s
            };
            Ok(Output { text, ok: r.passed() })
        }
        Cmd::VerifyAll => {
            let results = verify_all(cli.jobs);
            let all = results.iter().all(|r| r.ok());
            let text = if format == Format::Json {
                pretty(&serde_json::to_value(&results).expect("serializable"))
            } else {
                let mut s = String::new();
                for r in &results {
                    let _ = writeln!(s, "[{}] {:>2} {}: {}", if r.ok() { "PASS" } else { "FAIL" }, r.id, r.title, r.detail);
                }
                s
            };
            for r in &results {
                eprintln!("criterion {:>2}: {:?} (limit {:?})", r.id, r.elapsed, r.limit);
            }
            Ok(Output { text, ok: all })
        }
    }
}

fn fgl(kind: FglKind, prec: usize, format: Format) -> slicework_core::Result<Output> {
    let rows: Vec<(String, String, Value)> = match kind {
        FglKind::H => {
            let h = mo_generators(prec)?;
            (1..=prec).map(|j| (format!("h{j}"), h.get(j).to_string(), json!(h.get(j).to_string()))).collect()
        }
        FglKind::Rbar => {
            let r = rbar_generators(prec)?;
            (1..=prec).map(|k| (format!("rbar{k}"), r.get(k).to_string(), json!(r.get(k).to_string()))).collect()
        }
        FglKind::Haz => hazewinkel_images(prec.min(4) as u32)?
            .into_iter()
            .map(|v| (format!("v{}", v.n), format!("{}  (v_pi = {})", v.value, v.pi_valuation), serde_json::to_value(&v.value).expect("serializable")))
            .collect(),
        FglKind::Tfun => {
            let n_max = prec as u32;
            let series_prec = (1usize << n_max.min(4)).max(2);
            let t = t_functions(n_max, series_prec)?;
            t.entries
                .iter()
                .filter(|e| e.n > 0)
                .map(|e| (format!("t{}(zeta^{})", e.n, e.root), e.value.to_string(), serde_json::to_value(&e.value).expect("serializable")))
                .collect()
        }
    };
    let text = match format {
        Format::Json => pretty(&Value::Array(rows.iter().map(|(k, _, v)| json!({ "name": k, "value": v })).collect())),
        Format::Tsv => rows.iter().map(|(k, v, _)| format!("{k}\t{v}\n")).collect(),
        Format::Table => rows.iter().map(|(k, v, _)| format!("{k:>12} = {v}\n")).collect(),
    };
    Ok(ok(text))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("assertion failed; see output above");
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
