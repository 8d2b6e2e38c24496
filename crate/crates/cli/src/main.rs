//! Command-line front end for the sum calculus: braid certificates, sums
//! with samedef verification, plumbing lattices, surface invariants, and
//! the randomized verification suites.
//!
//! Exit codes: 0 success, 1 validation error, 2 verification failure.

mod files;
mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use obook_core::braid::{bennequin_surface, is_homogeneous, parse_braid, stallings_open_book};
use obook_core::cobordism::{stiffen, verify_samedef, CylindricalCobordism};
use obook_core::embedded::{
    alexander, chord_diagram_for_sum, embedded_sum, fiberedness_necessary, order_invariant,
    seifert_matrix_bennequin, seifert_matrix_primitive, SumOrder,
};
use obook_core::openbook::{open_book_sum, primitive_open_book};
use obook_core::patching::{abstract_sum, SumSpec};
use obook_core::plumbgraph::{e8_graph, intersection_matrix, lattice_report, milnor_graph, parse_graph};
use obook_core::surface::{
    boundary_count, component_count, euler_characteristic, genus_and_boundary, is_connected,
    orientability, RibbonSurface,
};

use report::Report;

#[derive(Parser)]
#[command(name = "obook", version, about = "Sum calculus for Seifert surfaces and open books")]
struct Cli {
    /// Emit the report as a JSON object instead of key-value lines
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    LeftFirst,
    RightFirst,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariants and fiberedness certificate of a braid closure
    Braid {
        #[arg(long)]
        strands: usize,
        /// Space-separated letters; negative integers are inverse generators
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Cross-check the Stallings open book against the Seifert matrix
        #[arg(long)]
        certify: bool,
    },
    /// Sum two surfaces according to a sum specification file
    Sum {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "left-first")]
        order: OrderArg,
        /// Compare the embedded and cobordism pipelines on this sum
        #[arg(long)]
        verify_samedef: bool,
    },
    /// Intersection lattice of a plumbing graph
    Plumb {
        /// milnor | e8 | e8-neg
        #[arg(long)]
        builtin: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Invariants of a surface file
    Surface {
        #[arg(long)]
        file: PathBuf,
    },
    /// Run the randomized verification suites (seed from OBK_SEED)
    Verify {
        /// all | roundtrip | samedef | stallings | morse | algebraic
        #[arg(long, default_value = "all")]
        suite: String,
        /// Override the instance count of the selected suites
        #[arg(long)]
        count: Option<usize>,
        /// Worker threads for the suites
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn main() -> ExitCode {
    // usage errors are validation errors: exit 1, never the verification
    // failure code (--help/--version still exit 0)
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.exit_code() == 0 => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.cmd {
        Cmd::Braid { strands, word, certify } => cmd_braid(*strands, word, *certify, cli.json),
        Cmd::Sum { spec, order, verify_samedef } => {
            cmd_sum(spec, *order, *verify_samedef, cli.json)
        }
        Cmd::Plumb { builtin, file } => cmd_plumb(builtin.as_deref(), file.as_deref(), cli.json),
        Cmd::Surface { file } => cmd_surface(file, cli.json),
        Cmd::Verify { suite, count, jobs } => cmd_verify(suite, *count, *jobs, cli.json),
    }
}

fn emit(report: &Report, json: bool, code: u8) -> Result<ExitCode> {
    print!("{}", report.render(json));
    Ok(ExitCode::from(code))
}

fn surface_invariants(report: &mut Report, s: &Arc<RibbonSurface>) {
    report.push("disks", s.disks().len());
    report.push("bands", s.bands().len());
    report.push("euler", euler_characteristic(s));
    report.push("components", component_count(s));
    let (orient, _) = orientability(s);
    report.push("orientable", orient);
    report.push("boundary", boundary_count(s));
    if orient && is_connected(s) {
        let (g, _) = genus_and_boundary(s).expect("connected orientable");
        report.push("genus", g);
    }
}

fn cmd_braid(strands: usize, word: &str, certify: bool, json: bool) -> Result<ExitCode> {
    let beta = parse_braid(strands, word)?;
    let mut report = Report::new("braid");
    report.digest("word", word.as_bytes());
    report.record_op("parse_braid");
    report.push("strands", beta.strands);
    report.push("length", beta.length());
    report.push("homogeneous", is_homogeneous(&beta));
    report.push("closure_components", beta.closure_components());
    let page = Arc::new(bennequin_surface(&beta));
    report.record_op("bennequin_surface");
    surface_invariants(&mut report, &page);
    let mut code = 0u8;
    match seifert_matrix_bennequin(&beta) {
        Ok(d) => {
            report.record_op("seifert_matrix_bennequin");
            let delta = alexander(&d);
            report.push("alexander", delta.coeff_string());
            report.push("fibered_necessary", fiberedness_necessary(&d));
            if certify {
                let book = stallings_open_book(&beta)?;
                report.record_op("stallings_open_book");
                let charpoly = book.char_poly().normalize_units();
                report.push("charpoly", charpoly.coeff_string());
                let agree = charpoly.eq_up_to_units(&delta);
                report.push("agree", agree);
                if !agree {
                    code = 2;
                }
            }
        }
        Err(e) => {
            if certify {
                return Err(e.into());
            }
            report.push("note", format!("seifert data unavailable: {e}"));
        }
    }
    emit(&report, json, code)
}

/// Recognize a primitive s-surface: two disks joined by n >= 2 bands, all
/// with the same single full twist, the two cyclic band orders agreeing up
/// to rotation.
fn detect_primitive(s: &RibbonSurface) -> Option<(usize, i64)> {
    if s.disks().len() != 2 || s.bands().len() < 2 {
        return None;
    }
    let n = s.bands().len();
    let ht = s.bands()[0].half_twists;
    if ht.abs() != 2 {
        return None;
    }
    for b in s.bands() {
        if b.half_twists != ht || b.ends[0].0 == b.ends[1].0 {
            return None;
        }
    }
    let seq = |disk: usize| -> Vec<usize> {
        s.disks()[disk].slots.iter().map(|e| e.band).collect()
    };
    let (a, b) = (seq(0), seq(1));
    if a.len() != n || b.len() != n {
        return None;
    }
    // b must be a rotation of a
    let rotation = (0..n).any(|shift| (0..n).all(|i| b[(i + shift) % n] == a[i]));
    if !rotation {
        return None;
    }
    Some((n, ht / 2))
}

fn cmd_sum(spec_path: &std::path::Path, order: OrderArg, samedef: bool, json: bool) -> Result<ExitCode> {
    let (spec, loaded) = files::load_sumspec(spec_path)?;
    let mut report = Report::new("sum");
    for f in &loaded {
        let name = f.path.file_name().map(|n| n.to_string_lossy().to_string()).unwrap_or_default();
        report.digest(&name, &f.bytes);
    }
    let (sum, _) = abstract_sum(&spec)?;
    report.record_op("abstract_sum");
    surface_invariants(&mut report, &sum);
    report.push(
        "order",
        match order {
            OrderArg::LeftFirst => "left-first",
            OrderArg::RightFirst => "right-first",
        },
    );

    let left_type = detect_primitive(spec.left.host());
    let right_type = detect_primitive(spec.right.host());
    let mut code = 0u8;
    match (left_type, right_type) {
        (Some((n1, e1)), Some((n2, e2))) => {
            report.push("left_type", format!("({n1},{e1:+})"));
            report.push("right_type", format!("({n2},{e2:+})"));
            // canonical realization of the same sum
            let d1 = seifert_matrix_primitive(n1, e1);
            let d2 = seifert_matrix_primitive(n2, e2);
            let full = |surf: &Arc<RibbonSurface>| {
                let arcs: Vec<usize> =
                    (0..surf.disks()[0].slots.len()).map(|i| 2 * i).collect();
                obook_core::patching::make_patch(surf, "D1", &arcs).unwrap()
            };
            let cspec = SumSpec {
                left: full(d1.surface()),
                right: full(d2.surface()),
                interleaving: spec.interleaving.clone(),
            };
            let chords = chord_diagram_for_sum(&cspec, d1.basis(), d2.basis())?;
            let sum_order = match order {
                OrderArg::LeftFirst => SumOrder::LeftFirst,
                OrderArg::RightFirst => SumOrder::RightFirst,
            };
            let emb = embedded_sum(&d1, &d2, &cspec, &chords, sum_order)?;
            report.record_op("embedded_sum");
            report.push("alexander", alexander(&emb).coeff_string());
            report.push("fibered_necessary", fiberedness_necessary(&emb));
            if let Ok(bit) = order_invariant(&d1, &d2, &cspec, &chords, sum_order) {
                report.push("order_invariant", bit);
            }
            let ob1 = primitive_open_book(n1, e1);
            let ob2 = primitive_open_book(n2, e2);
            let ospec = SumSpec {
                left: full(ob1.page()),
                right: full(ob2.page()),
                interleaving: spec.interleaving.clone(),
            };
            let book = open_book_sum(&ob1, &ob2, &ospec)?;
            report.record_op("open_book_sum");
            report.push("charpoly", book.char_poly().normalize_units().coeff_string());
            if samedef {
                let w1 = CylindricalCobordism::from_monodromy(ob1.monodromy().clone());
                let w2 = CylindricalCobordism::from_monodromy(ob2.monodromy().clone());
                let s1 = stiffen(&w1, Ratio::new(2, 3), Ratio::new(3, 4))?;
                let s2 = stiffen(&w2, Ratio::new(1, 4), Ratio::new(1, 3))?;
                match verify_samedef(&s1, &s2, &ospec, &emb) {
                    Ok(_) => {
                        report.record_op("verify_samedef");
                        report.push("samedef", "pass");
                    }
                    Err(e) => {
                        report.push("samedef", format!("fail: {e}"));
                        code = 2;
                    }
                }
            }
        }
        _ => {
            report.push(
                "note",
                "summands are not primitive s-surfaces; embedded data unavailable",
            );
            if samedef {
                bail!("--verify-samedef requires primitive s-surface summands");
            }
        }
    }
    emit(&report, json, code)
}

fn cmd_plumb(builtin: Option<&str>, file: Option<&std::path::Path>, json: bool) -> Result<ExitCode> {
    let mut report = Report::new("plumb");
    let graph = match (builtin, file) {
        (Some(name), None) => {
            report.push("builtin", name);
            match name {
                "milnor" => milnor_graph(),
                "e8" => e8_graph(true),
                "e8-neg" => e8_graph(false),
                other => bail!("unknown builtin `{other}` (expected milnor, e8, e8-neg)"),
            }
        }
        (None, Some(path)) => {
            let f = files::read(path)?;
            report.digest(
                &path.file_name().map(|n| n.to_string_lossy().to_string()).unwrap_or_default(),
                &f.bytes,
            );
            parse_graph(std::str::from_utf8(&f.bytes)?)?
        }
        _ => bail!("exactly one of --builtin or --file is required"),
    };
    report.record_op("intersection_matrix");
    report.push("vertices", graph.vertices().len());
    report.push("edges", graph.edges().len());
    report.push("connected", graph.is_connected());
    let m = intersection_matrix(&graph);
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m[(i, j)].to_string()).collect();
        report.push(&format!("row{i}"), row.join(" "));
    }
    let (det, divisors) = lattice_report(&graph);
    report.record_op("lattice_report");
    report.push("det", det);
    report.push(
        "torsion",
        divisors.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "),
    );
    emit(&report, json, 0)
}

fn cmd_surface(path: &std::path::Path, json: bool) -> Result<ExitCode> {
    let (s, f) = files::load_surface(path)?;
    let mut report = Report::new("surface");
    report.digest(
        &path.file_name().map(|n| n.to_string_lossy().to_string()).unwrap_or_default(),
        &f.bytes,
    );
    report.record_op("build_surface");
    surface_invariants(&mut report, &s);
    emit(&report, json, 0)
}

fn cmd_verify(suite: &str, count: Option<usize>, jobs: Option<usize>, json: bool) -> Result<ExitCode> {
    if let Some(j) = jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global().ok();
    }
    let seed: u64 = match std::env::var("OBK_SEED") {
        Ok(v) => v.parse().map_err(|_| anyhow!("OBK_SEED must be an unsigned integer"))?,
        Err(_) => 1,
    };
    let mut counts = suites::SuiteCounts::default();
    if let Some(c) = count {
        counts = suites::SuiteCounts {
            roundtrip: c,
            samedef: c,
            stallings: c,
            morse: c,
            algebraic: c,
        };
    }
    let results = match suite {
        "all" => suites::all_suites(seed, &counts),
        "roundtrip" => vec![suites::roundtrip(seed, counts.roundtrip)],
        "samedef" => vec![suites::samedef(seed, counts.samedef)],
        "stallings" => vec![suites::stallings(seed, counts.stallings)],
        "morse" => vec![suites::morse(seed, counts.morse)],
        "algebraic" => vec![suites::algebraic(seed, counts.algebraic)],
        other => bail!("unknown suite `{other}`"),
    };
    let mut report = Report::new("verify");
    report.push("seed", seed);
    let mut code = 0u8;
    for r in &results {
        report.record_op(r.name);
        report.push(r.name, format!("{}/{} {}", r.passed, r.total, if r.ok() { "pass" } else { "fail" }));
        for f in r.failures.iter().take(3) {
            report.push(&format!("{}_failure", r.name), f);
        }
        if !r.ok() {
            code = 2;
        }
    }
    emit(&report, json, code)
}
