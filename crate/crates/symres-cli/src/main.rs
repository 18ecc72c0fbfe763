use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use symres::bar::{classify_simplex, enumerate_essential, word_perm, BarSimplex, Classification, QRewriter};
use symres::cocycles::{build_cocycle, verify_cocycle, CocycleKind};
use symres::homology::{cohomology, homology, write_csv, HomologyResult};
use symres::module::CoefficientModule;
use symres::resolution::FreeComplex;
use symres::rewrite::{enumerate_normal_forms, normal_form_word};
use symres::{boundary_p, enumerate_p_cells, PCell, RingSpec, Word};
use symres_snf::AbelianGroupInfo;

/// Default bound on n for anything touching degree 4.
const BOUND_DIM4: usize = 6;
/// Default bound on n otherwise.
const BOUND: usize = 8;

#[derive(Parser)]
#[command(name = "symres", version, about = "Free resolutions and low-degree homology of symmetric groups")]
struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for batch verifications.
    #[arg(long, global = true, env = "SYMRES_JOBS")]
    jobs: Option<usize>,
    /// Lift the default bounds on n.
    #[arg(long = "unsafe-large", global = true)]
    unsafe_large: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexKind {
    P,
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    D2,
    Exactness,
    ChainMaps,
    QBoundaries,
    Cocycles,
}

#[derive(Subcommand)]
enum Cmd {
    /// Normal form of a word in the Coxeter generators.
    Nf {
        word: String,
        #[arg(long)]
        n: usize,
    },
    /// All normal forms for S_n.
    EnumerateNf {
        #[arg(long)]
        n: usize,
    },
    /// Generators of P_dim or Q_dim.
    Cells {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value = "p")]
        complex: ComplexKind,
    },
    /// Boundary of a generator, e.g. `c35(2)` or `[s1|s2|s1]`.
    Boundary {
        cell: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "p")]
        complex: ComplexKind,
    },
    /// Batch verification.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(long)]
        n: usize,
    },
    /// H_deg(S_n; M).
    Homology(GroupArgs),
    /// H^deg(S_n; M).
    Cohomology(GroupArgs),
    /// H_3(S_n; Z) from the collapsed bar complex.
    H3 {
        #[arg(long)]
        n: usize,
        /// Also run the chain-level certificates (n >= 6).
        #[arg(long)]
        certificates: bool,
        /// Also compute the normalized bar resolution oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Cocycle table, χ(c) and H_3 of the dihedral group of order 8.
    D8Suite,
    /// Transfer of the order-4 class to S_n.
    Transfer {
        #[arg(long)]
        n: usize,
    },
    /// Writes generators and boundaries as JSON.
    ExportComplex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "p")]
        complex: ComplexKind,
        #[arg(long, default_value_t = 3)]
        top: usize,
    },
}

#[derive(clap::Args)]
struct GroupArgs {
    #[arg(long)]
    n: usize,
    /// `trivial` or `perm:K`.
    #[arg(long, default_value = "trivial")]
    module: String,
    /// `z`, `z2`, `z4`, or `zM`.
    #[arg(long, default_value = "z")]
    ring: String,
    #[arg(long)]
    deg: usize,
    /// Include representative cycles or cocycles.
    #[arg(long)]
    reps: bool,
    /// Emit CSV.
    #[arg(long, conflicts_with = "json")]
    csv: bool,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] symres::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use symres::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(
                E::Param(_)
                | E::Parse(_)
                | E::BoundExceeded { .. }
                | E::IndexOutOfRange { .. }
                | E::InvalidCell(_)
                | E::NotAPermutation(_)
                | E::NotEssential(_),
            ) => 2,
            _ => 1,
        }
    }
}

type Res<T> = std::result::Result<T, CliError>;

/// Command result: JSON value, human text, and whether every check passed.
struct Outcome {
    value: Value,
    text: String,
    ok: bool,
}

impl Outcome {
    fn new(value: impl Serialize, text: String, ok: bool) -> Res<Outcome> {
        let value = serde_json::to_value(value).map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(Outcome { value, text, ok })
    }
}

fn bound(n: usize, limit: usize, flag: &str, unsafe_large: bool) -> Res<()> {
    if n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {n}")));
    }
    if n > limit && !unsafe_large {
        return Err(CliError::Usage(format!("{flag} {n} exceeds the default bound {limit}; pass --unsafe-large to override")));
    }
    Ok(())
}

fn parse_ring(s: &str) -> Res<RingSpec> {
    let t = s.to_ascii_lowercase().replace('/', "");
    match t.as_str() {
        "z" => Ok(RingSpec::Z),
        _ => match t.strip_prefix('z').and_then(|m| m.parse::<u64>().ok()) {
            Some(m) if m >= 2 => Ok(RingSpec::zmod(m)),
            _ => Err(CliError::Usage(format!("--ring: expected z, z2, z4 or zM, got {s:?}"))),
        },
    }
}

fn parse_module(s: &str, n: usize, ring: RingSpec) -> Res<CoefficientModule> {
    if s == "trivial" {
        return Ok(CoefficientModule::trivial(n, ring));
    }
    let k = s
        .strip_prefix("perm:")
        .and_then(|k| k.parse::<usize>().ok())
        .ok_or_else(|| CliError::Usage(format!("--module: expected trivial or perm:K, got {s:?}")))?;
    if k > n {
        return Err(CliError::Usage(format!("--module: perm:{k} needs k <= n = {n}")));
    }
    Ok(CoefficientModule::permutation(n, k, ring)?)
}

fn group_text(info: &AbelianGroupInfo) -> String {
    let f: Vec<String> = info.torsion.iter().map(|d| d.to_string()).collect();
    format!("free_rank {}, factors ({})", info.free_rank, f.join(","))
}

fn parse_bar(s: &str, n: usize) -> Res<BarSimplex> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| CliError::Usage(format!("bar cell must look like [s1|s2 s1], got {s:?}")))?;
    let mut entries = Vec::new();
    for part in inner.split('|') {
        let w: Word = part.parse()?;
        w.check_range(n)?;
        let idx = w.indices().ok_or_else(|| CliError::Usage(format!("inverse letters are not allowed in {part:?}")))?;
        entries.push(word_perm(n, &idx));
    }
    BarSimplex::new(entries).ok_or_else(|| CliError::Usage(format!("{s} has an identity entry")))
}

fn run_nf(word: &str, n: usize) -> Res<Outcome> {
    let w: Word = word.parse()?;
    w.check_range(n)?;
    let nf = normal_form_word(&w);
    let perm = nf.perm(n)?;
    let text = nf.word().to_string();
    Outcome::new(json!({ "input": w.to_string(), "n": n, "normal_form": text, "perm": perm.images() }), text, true)
}

fn run_enumerate(n: usize, unsafe_large: bool) -> Res<Outcome> {
    bound(n, BOUND, "--n", unsafe_large)?;
    let forms = enumerate_normal_forms(n, if unsafe_large { symres::perm::MAX_N } else { BOUND })?;
    let mut rows = Vec::with_capacity(forms.len());
    let mut text = String::new();
    for f in &forms {
        let p = f.perm(n)?;
        text.push_str(&format!("{}\t{}\n", f.word(), p));
        rows.push(json!({ "normal_form": f.word().to_string(), "perm": p.images() }));
    }
    text.push_str(&format!("{} normal forms", forms.len()));
    Outcome::new(json!({ "n": n, "count": forms.len(), "forms": rows }), text, true)
}

fn run_cells(n: usize, dim: usize, complex: ComplexKind, unsafe_large: bool) -> Res<Outcome> {
    let labels: Vec<String> = match complex {
        ComplexKind::P => {
            bound(n, BOUND, "--n", unsafe_large)?;
            if dim > 3 {
                return Err(CliError::Usage(format!("--dim: P_* has generators in degrees 0..3 only, got {dim}")));
            }
            enumerate_p_cells(n, dim).iter().map(|c| c.to_string()).collect()
        }
        ComplexKind::Q => {
            bound(n, if dim >= 4 { BOUND_DIM4 } else { BOUND }, "--n", unsafe_large)?;
            enumerate_essential(n, dim).iter().map(|c| c.to_string()).collect()
        }
    };
    let text = format!("{}\n{} cells", labels.join("\n"), labels.len());
    Outcome::new(json!({ "n": n, "dim": dim, "count": labels.len(), "cells": labels }), text, true)
}

fn run_boundary(cell: &str, n: usize, complex: ComplexKind, unsafe_large: bool) -> Res<Outcome> {
    bound(n, BOUND, "--n", unsafe_large)?;
    let (name, b) = match complex {
        ComplexKind::P => {
            let c: PCell = cell.parse()?;
            (c.to_string(), boundary_p(c, n)?.to_string())
        }
        ComplexKind::Q => {
            let s = parse_bar(cell, n)?;
            if s.dim() >= 4 {
                bound(n, BOUND_DIM4, "--n", unsafe_large)?;
            }
            if classify_simplex(&s) != Classification::Essential {
                return Err(symres::Error::NotEssential(s.to_string()).into());
            }
            let mut q = QRewriter::new(n);
            (s.to_string(), q.boundary_q(&s).to_string())
        }
    };
    let text = format!("d {name} = {b}");
    Outcome::new(json!({ "n": n, "cell": name, "boundary": b }), text, true)
}

#[derive(Serialize)]
struct CocycleRow {
    cocycle: String,
    ring: String,
    k: usize,
    r: i64,
    is_cocycle: bool,
}

#[derive(Serialize)]
struct PairingRow {
    k: usize,
    ring: String,
    degree: usize,
    nondegenerate: bool,
    rank: usize,
    group_rank: usize,
}

fn cocycle_suite(n: usize) -> Res<Outcome> {
    let cx = FreeComplex::p_complex(n, 3)?;
    let mut jobs = Vec::new();
    for m in [2u64, 4] {
        for kind in CocycleKind::ALL {
            let ks: Vec<usize> = if kind.twisted() { (kind.min_k()..=4).filter(|k| 2 * k <= n).collect() } else { vec![1] };
            let rs: Vec<i64> = if kind.needs_two_torsion() { vec![m as i64 / 2] } else { (1..m as i64).collect() };
            for &k in &ks {
                for &r in &rs {
                    jobs.push((RingSpec::zmod(m), kind, k, r));
                }
            }
        }
    }
    let rows: Vec<CocycleRow> = jobs
        .par_iter()
        .map(|&(ring, kind, k, r)| {
            let f = build_cocycle(&cx, kind, r, k, ring)?;
            Ok(CocycleRow { cocycle: kind.to_string(), ring: ring.name(), k, r, is_cocycle: verify_cocycle(&cx, &f)? })
        })
        .collect::<symres::Result<_>>()?;
    let mut pjobs = Vec::new();
    for k in (1..=4).filter(|k| 2 * k <= n) {
        for m in [2u64, 4] {
            for deg in 1..=2 {
                pjobs.push((k, RingSpec::zmod(m), deg));
            }
        }
    }
    let pairings: Vec<PairingRow> = pjobs
        .par_iter()
        .map(|&(k, ring, deg)| {
            let p = symres::twisted::mk_pairing(&cx, k, ring, deg, false)?;
            Ok(PairingRow { k, ring: p.ring.clone(), degree: deg, nondegenerate: p.nondegenerate(), rank: p.rank, group_rank: p.group_rank })
        })
        .collect::<symres::Result<_>>()?;
    let bad_c = rows.iter().filter(|r| !r.is_cocycle).count();
    let bad_p = pairings.iter().filter(|p| !p.nondegenerate).count();
    let mut text = format!("cocycles: {} checked, {} failures\npairings: {} checked, {} degenerate", rows.len(), bad_c, pairings.len(), bad_p);
    for r in rows.iter().filter(|r| !r.is_cocycle) {
        text.push_str(&format!("\n  not a cocycle: {} k={} r={} over {}", r.cocycle, r.k, r.r, r.ring));
    }
    for p in pairings.iter().filter(|p| !p.nondegenerate) {
        text.push_str(&format!("\n  degenerate: k={} deg={} over {} (rank {} of {})", p.k, p.degree, p.ring, p.rank, p.group_rank));
    }
    let ok = bad_c == 0 && bad_p == 0;
    Outcome::new(json!({ "n": n, "cocycles": rows, "pairings": pairings, "ok": ok }), text, ok)
}

fn run_verify(check: Check, n: usize, unsafe_large: bool) -> Res<Outcome> {
    bound(n, BOUND, "--n", unsafe_large)?;
    match check {
        Check::D2 => {
            let failures = symres::exactness::d_squared_failures(n)?;
            let cells: usize = (2..=3).map(|d| enumerate_p_cells(n, d).len()).sum();
            let mut text = format!("d^2 = 0 on {} generators of degree 2..3: {}", cells, if failures.is_empty() { "ok" } else { "FAILED" });
            for f in &failures {
                text.push_str(&format!("\n  {f}"));
            }
            let ok = failures.is_empty();
            Outcome::new(json!({ "n": n, "generators": cells, "failures": failures, "ok": ok }), text, ok)
        }
        Check::Exactness => {
            let r = symres::exactness::verify_p_exactness(n, unsafe_large)?;
            let h: Vec<String> = r.homology_deg_0_1_2.iter().map(group_text).collect();
            let text = format!(
                "d^2 = 0: {}\nreduced H_0 = {}\nH_1 = {}\nH_2 = {}\nexact: {}",
                r.d2_zero,
                h[0],
                h[1],
                h[2],
                r.exact()
            );
            let ok = r.exact();
            Outcome::new(json!({ "report": r, "ok": ok }), text, ok)
        }
        Check::ChainMaps => {
            let r = symres::chain_maps::verify_chain_maps(n)?;
            let mut text = format!(
                "psi checked on {} cells, phi on {} cells: {} failures",
                r.psi_cells_checked,
                r.phi_cells_checked,
                r.failures.len()
            );
            for f in &r.failures {
                text.push_str(&format!("\n  {} {}: {}", f.check, f.cell, f.residual));
            }
            let ok = r.ok();
            Outcome::new(json!({ "report": r, "ok": ok }), text, ok)
        }
        Check::QBoundaries => {
            let r = symres::qformulas::crosscheck_boundary_formulas(n)?;
            let mut text = String::from("class  cells  as-printed  corrected");
            for c in &r.classes {
                text.push_str(&format!("\n{:<6} {:>5}  {:>10}  {:>9}", c.class, c.cells, c.printed_matches, c.corrected_matches));
            }
            text.push_str(&format!(
                "\nclasses matching as printed: {}/9\nall cells match corrected tables: {}",
                r.classes_matching_printed(),
                r.all_match_corrected()
            ));
            let ok = r.all_match_corrected();
            let summary = json!({
                "n": r.n,
                "classes": r.classes,
                "classes_matching_printed": r.classes_matching_printed(),
                "all_match_corrected": ok,
                "mismatches": r.cells.iter().filter(|c| !c.matches_printed).collect::<Vec<_>>(),
            });
            Outcome::new(summary, text, ok)
        }
        Check::Cocycles => cocycle_suite(n),
    }
}

fn run_group(a: &GroupArgs, cohom: bool, unsafe_large: bool) -> Res<(Outcome, Option<HomologyResult>)> {
    let ring = parse_ring(&a.ring)?;
    let m = parse_module(&a.module, a.n, ring)?;
    let cx = match a.deg {
        0..=2 => {
            bound(a.n, BOUND, "--n", unsafe_large)?;
            FreeComplex::p_complex(a.n, a.deg + 1)?
        }
        3 => {
            bound(a.n, BOUND_DIM4, "--n", unsafe_large)?;
            FreeComplex::q_complex(a.n, 4, &mut QRewriter::new(a.n))?
        }
        d => return Err(CliError::Usage(format!("--deg: degrees 0..3 are supported, got {d}"))),
    };
    let r = if cohom { cohomology(&cx, &m, a.deg, a.reps)? } else { homology(&cx, &m, a.deg, a.reps)? };
    let mut text = format!(
        "{}{}({}; {}) = {}",
        if cohom { "H^" } else { "H_" },
        a.deg,
        r.group,
        r.module,
        group_text(&r.info())
    );
    for rep in r.representatives.iter().flatten() {
        text.push_str(&format!("\n  order {}: {}", rep.order, rep.chain));
    }
    Ok((Outcome::new(&r, text, true)?, Some(r)))
}

fn run_h3(n: usize, certificates: bool, oracle: bool, unsafe_large: bool) -> Res<Outcome> {
    bound(n, BOUND_DIM4, "--n", unsafe_large)?;
    let h = symres::h3::h3_via_q(n, unsafe_large)?;
    let mut text = format!("H_3(S_{n}; Z) = {}", group_text(&h));
    let mut value = json!({ "n": n, "h3": h });
    let mut ok = true;
    if oracle {
        let o = symres::h3::h3_bar_oracle(n, unsafe_large)?;
        text.push_str(&format!("\nbar oracle: {} ({})", group_text(&o), if o == h { "agrees" } else { "DIFFERS" }));
        ok &= o == h;
        value["oracle"] = serde_json::to_value(&o).map_err(|e| CliError::Usage(e.to_string()))?;
    }
    if certificates {
        let c = symres::h3::h3_certificates(n)?;
        text.push_str(&format!(
            "\ncertificates: {} witnesses, {} identities, X-homology span {}/{} (saturated {}), {} subscript steps, prism checked {} pairs: {}",
            c.witnesses.len(),
            c.identities.len(),
            c.xhomology.span_rank,
            c.xhomology.kernel_rank,
            c.xhomology.saturated,
            c.subscripts.steps,
            c.prism.checked,
            if c.ok() { "ok" } else { "FAILED" }
        ));
        ok &= c.ok();
        value["certificates_ok"] = json!(c.ok());
        value["certificates"] = serde_json::to_value(&c).map_err(|e| CliError::Usage(e.to_string()))?;
    }
    value["ok"] = json!(ok);
    Ok(Outcome { value, text, ok })
}

fn run_export(n: usize, out: &PathBuf, complex: ComplexKind, top: usize, unsafe_large: bool) -> Res<Outcome> {
    let cx = match complex {
        ComplexKind::P => {
            bound(n, BOUND, "--n", unsafe_large)?;
            if top > 3 {
                return Err(CliError::Usage(format!("--top: P_* stops in degree 3, got {top}")));
            }
            FreeComplex::p_complex(n, top)?
        }
        ComplexKind::Q => {
            bound(n, if top >= 4 { BOUND_DIM4 } else { BOUND }, "--n", unsafe_large)?;
            FreeComplex::q_complex(n, top, &mut QRewriter::new(n))?
        }
    };
    let ex = cx.export();
    let body = serde_json::to_string_pretty(&ex).map_err(|e| CliError::Usage(e.to_string()))?;
    std::fs::write(out, body + "\n")?;
    let ranks: Vec<usize> = (0..=top).map(|k| cx.rank(k)).collect();
    let text = format!("wrote {} with ranks {:?}", out.display(), ranks);
    Outcome::new(json!({ "n": n, "out": out, "ranks": ranks }), text, true)
}

fn dispatch(cli: &Cli) -> Res<Outcome> {
    let u = cli.unsafe_large;
    match &cli.cmd {
        Cmd::Nf { word, n } => run_nf(word, *n),
        Cmd::EnumerateNf { n } => run_enumerate(*n, u),
        Cmd::Cells { n, dim, complex } => run_cells(*n, *dim, *complex, u),
        Cmd::Boundary { cell, n, complex } => run_boundary(cell, *n, *complex, u),
        Cmd::Verify { check, n } => run_verify(*check, *n, u),
        Cmd::Homology(a) | Cmd::Cohomology(a) => {
            let (o, r) = run_group(a, matches!(cli.cmd, Cmd::Cohomology(_)), u)?;
            if a.csv {
                let mut buf = Vec::new();
                write_csv(&mut buf, &r.into_iter().collect::<Vec<_>>())?;
                let text = String::from_utf8_lossy(&buf).trim_end().to_string();
                return Ok(Outcome { text, ..o });
            }
            Ok(o)
        }
        Cmd::H3 { n, certificates, oracle } => run_h3(*n, *certificates, *oracle, u),
        Cmd::D8Suite => {
            let r = symres::d8::d8_suite()?;
            let text = format!(
                "table rows: {} ({} nonzero)\ncocycle tuples: {} ({} failures)\nc is a cycle: {}\nchi(c) = {} (terms {:?})\nH_3(D8; Z) = {}\nok: {}",
                r.table_rows,
                r.table_rows_nonzero,
                r.tuples,
                r.cocycle_failures,
                r.c_is_cycle,
                r.chi_on_c,
                r.chi_terms,
                group_text(&r.h3),
                r.ok()
            );
            let ok = r.ok();
            Outcome::new(json!({ "report": r, "ok": ok }), text, ok)
        }
        Cmd::Transfer { n } => {
            let r = symres::d8::transfer_check(*n)?;
            let mut text = format!("n = {}: {} cosets, chi(transfer) = {} mod 4", r.n, r.cosets, r.value);
            for o in &r.orbits {
                text.push_str(&format!("\n  orbit of size {}: contribution {}", o.size, o.contribution));
            }
            let ok = r.is_unit();
            Outcome::new(json!({ "report": r, "unit": ok }), text, ok)
        }
        Cmd::ExportComplex { n, out, complex, top } => run_export(*n, out, *complex, *top, u),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    match dispatch(&cli) {
        Ok(o) => {
            let mut out = std::io::stdout().lock();
            let body = if cli.json { serde_json::to_string_pretty(&o.value).unwrap_or_default() } else { o.text };
            let _ = writeln!(out, "{body}");
            ExitCode::from(if o.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
