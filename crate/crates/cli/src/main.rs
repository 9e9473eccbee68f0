use clap::{Args, Parser, Subcommand, ValueEnum};
use pathconn::constructions::{lemma34_graph, lemma34_witness, verify_family, Lemma34Witness};
use pathconn::graph::{
    generate, k_connectivity_cut, k_subsets, parse_graph, serialize_graph, Family,
};
use pathconn::harness::{
    run_all, suite_construction, suite_formulas, suite_inequalities, suite_linegraph, RunConfig,
    RunReport, SuiteReport,
};
use pathconn::steiner::{global_connectivity, local_connectivity, SolverOptions, Status, Variant};
use pathconn::transforms::{cartesian_product, line_graph};
use pathconn::{Error, Graph, Result, VertexSet};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        writeln!($out, $($arg)*).expect("writing to a string cannot fail")
    }};
}

/// Path connectivity and Steiner packing parameters of small graphs.
#[derive(Parser)]
#[command(name = "pathconn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated or transformed graph in edge-list form.
    Gen(GenArgs),
    /// Compute a connectivity parameter with a certificate.
    Compute(ComputeArgs),
    /// Build the disjoint path family in K_2p x K_(2q-2p+2) for a triple.
    Witness(WitnessArgs),
    /// Run verification suites and report every check.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GenArgs {
    /// complete, bipartite, star, path, cycle, h1, line-of or product.
    #[arg(long)]
    family: String,
    #[arg(long, value_delimiter = ',')]
    params: Vec<usize>,
    /// Input graph for line-of and product.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Second factor for product.
    #[arg(long)]
    input2: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Param {
    Pi,
    Omega,
    Kappa,
    Lambda,
    KappaCut,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    param: Param,
    /// Terminal count; implied by --set.
    #[arg(long)]
    k: Option<usize>,
    /// Terminal set for the local parameter.
    #[arg(long, value_delimiter = ',')]
    set: Option<Vec<usize>>,
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Branch-and-bound node limit per search.
    #[arg(long)]
    node_limit: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    /// Three product vertices.
    #[arg(long, value_delimiter = ',')]
    set: Option<Vec<usize>>,
    /// Check every triple and report the first failure.
    #[arg(long)]
    all: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    Formulas,
    Inequalities,
    Line,
    Construction,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteName,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    max_n: Option<usize>,
    /// Random graphs in the inequality suite.
    #[arg(long)]
    count: Option<usize>,
    /// Wall-clock limit per solver call; makes reports machine dependent.
    #[arg(long)]
    budget_ms: Option<u64>,
    #[arg(long)]
    json: bool,
    /// Write the JSON report here.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn write_or_print(out: &mut String, output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, format!("{text}\n"))
            .map_err(|e| Error::Input(format!("{}: {e}", p.display()))),
        None => {
            say!(out, "{text}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn gen(out: &mut String, a: &GenArgs) -> Result<u8> {
    let need = |p: Option<&Path>, what: &str| -> Result<Graph> {
        read_graph(p.ok_or_else(|| Error::Input(format!("{} needs --{what}", a.family)))?)
    };
    let text = match a.family.as_str() {
        "line-of" => line_graph(&need(a.input.as_deref(), "input")?)?.to_text(),
        "product" => {
            let g = need(a.input.as_deref(), "input")?;
            let h = need(a.input2.as_deref(), "input2")?;
            cartesian_product(&g, &h)?.to_text()
        }
        name => serialize_graph(&generate(Family::from_name(name, &a.params)?)?),
    };
    write_or_print(out, a.output.as_deref(), text.trim_end())?;
    Ok(0)
}

fn compute(out: &mut String, a: &ComputeArgs) -> Result<u8> {
    let g = read_graph(&a.input)?;
    let k = match (&a.set, a.k) {
        (Some(s), Some(k)) if s.len() != k => {
            return Err(Error::Input(format!(
                "--k {k} disagrees with a set of {} vertices",
                s.len()
            )))
        }
        (Some(s), _) => s.len(),
        (None, Some(k)) => k,
        (None, None) => return Err(Error::Input("give --k or --set".into())),
    };
    let variant = match a.param {
        Param::Pi => Variant::Pi,
        Param::Omega => Variant::Omega,
        Param::Kappa => Variant::Kappa,
        Param::Lambda => Variant::Lambda,
        Param::KappaCut => {
            if a.set.is_some() {
                return Err(Error::Input(
                    "kappa-cut is a global parameter; drop --set".into(),
                ));
            }
            let value = k_connectivity_cut(&g, k)?;
            if a.json {
                say!(
                    out,
                    "{}",
                    to_json(
                        &serde_json::json!({"param": "kappa-cut", "k": k, "value": value, "status": "exact"})
                    )
                );
            } else {
                say!(out, "kappa'_{k} = {value}");
            }
            return Ok(0);
        }
    };
    let mut opts = SolverOptions::default();
    if let Some(ms) = a.budget_ms {
        opts = opts.with_budget(Duration::from_millis(ms));
    }
    if let Some(n) = a.node_limit {
        opts = opts.with_node_limit(n);
    }
    let cert = match &a.set {
        Some(s) => local_connectivity(&g, &VertexSet::new(&g, s.iter().copied())?, variant, &opts)?,
        None => global_connectivity(&g, k, variant, &opts)?.certificate,
    };
    let rec = cert.record(k);
    if a.json {
        say!(out, "{}", to_json(&rec));
    } else {
        let status = serde_json::to_value(rec.status).expect("status serializes");
        say!(
            out,
            "{}_{k} = {} ({})",
            rec.param,
            rec.value,
            status.as_str().unwrap_or_default()
        );
        say!(out, "witness set: {:?}", rec.witness_set);
        for w in &rec.family {
            say!(
                out,
                "  {}",
                serde_json::to_string(w).expect("witness serializes")
            );
        }
    }
    Ok(if cert.status == Status::LowerBound {
        2
    } else {
        0
    })
}

fn witness_json(w: &Lemma34Witness, valid: bool, reason: &str) -> serde_json::Value {
    serde_json::json!({
        "case": w.case,
        "terminals": w.xyz,
        "family": w.family,
        "valid": valid,
        "reason": reason,
    })
}

fn witness(out: &mut String, a: &WitnessArgs) -> Result<u8> {
    let (lg, _) = lemma34_graph(a.p, a.q)?;
    let g = &lg.graph;
    let check = |t: &[usize]| -> Result<(Lemma34Witness, bool, String)> {
        let w = lemma34_witness(a.p, a.q, t)?;
        let s = VertexSet::new(g, t.iter().copied())?;
        let v = verify_family(g, &s, &w.family, Variant::Pi);
        let valid = v.valid && w.family.len() == a.q;
        Ok((w, valid, v.reason))
    };
    match (&a.set, a.all) {
        (Some(t), false) => {
            let (w, valid, reason) = check(t)?;
            if a.json {
                say!(out, "{}", to_json(&witness_json(&w, valid, &reason)));
            } else {
                say!(out, "{} terminals {:?}", w.case, w.xyz);
                for path in &w.family {
                    say!(out, "  {path:?}");
                }
                say!(
                    out,
                    "verifier: {}",
                    if valid { "valid".to_string() } else { reason }
                );
            }
            Ok(if valid { 0 } else { 1 })
        }
        (None, true) => {
            let all = k_subsets(g.n(), 3);
            let mut failure = None;
            let mut cases = std::collections::BTreeMap::new();
            for t in &all {
                let r = check(t);
                match r {
                    Ok((w, true, _)) => *cases.entry(w.case.label()).or_insert(0usize) += 1,
                    Ok((_, false, reason)) => failure = Some((t.clone(), reason)),
                    Err(e) => failure = Some((t.clone(), e.to_string())),
                }
                if failure.is_some() {
                    break;
                }
            }
            if a.json {
                let fail = failure
                    .as_ref()
                    .map(|(t, r)| serde_json::json!({"terminals": t, "reason": r}));
                say!(
                    out,
                    "{}",
                    to_json(
                        &serde_json::json!({"triples": all.len(), "cases": cases, "failure": fail})
                    )
                );
            } else if let Some((t, reason)) = &failure {
                say!(out, "failure at {t:?}: {reason}");
            } else {
                say!(out, "all {} triples verified", all.len());
                for (case, n) in &cases {
                    say!(out, "  case {case}: {n}");
                }
            }
            Ok(if failure.is_some() { 1 } else { 0 })
        }
        _ => Err(Error::Input("give exactly one of --set and --all".into())),
    }
}

fn verify(out: &mut String, err: &mut String, a: &VerifyArgs) -> Result<u8> {
    let mut c = RunConfig::new(a.seed);
    if let Some(n) = a.max_n {
        c.max_n = n;
    }
    if let Some(n) = a.count {
        c.count = n;
    }
    if let Some(ms) = a.budget_ms {
        c.opts = c.opts.with_budget(Duration::from_millis(ms));
    }
    let start = Instant::now();
    let one = |f: &dyn Fn() -> Result<SuiteReport>| -> Result<RunReport> {
        Ok(RunReport::new(c.seed, vec![f()?]))
    };
    let report = match a.suite {
        SuiteName::All => run_all(&c)?,
        SuiteName::Formulas => one(&|| Ok(suite_formulas(c.max_n, c.max_k, &c.opts)))?,
        SuiteName::Inequalities => {
            one(&|| suite_inequalities(&c.inequality_spec, c.count, &c.opts))?
        }
        SuiteName::Line => one(&|| {
            suite_linegraph(
                &c.line_spec,
                c.line_count,
                &c.deep_spec,
                c.deep_count,
                &c.opts,
            )
        })?,
        SuiteName::Construction => one(&|| suite_construction(c.p_max, c.q_max, c.seed, &c.opts))?,
    };
    let json = to_json(&report);
    if let Some(p) = &a.output {
        write_or_print(out, Some(p), &json)?;
    }
    if a.json {
        say!(out, "{json}");
    } else {
        for s in &report.suites {
            say!(
                out,
                "{}: {} instances, {} checks, {} passed, {} failed, {} inconclusive",
                s.suite,
                s.instances,
                s.total,
                s.passed,
                s.failed,
                s.inconclusive
            );
            for f in s.failures() {
                let set = f
                    .instance
                    .terminals
                    .as_ref()
                    .map(|t| format!(" S={t:?}"))
                    .unwrap_or_default();
                say!(
                    out,
                    "  FAIL {} on {}{set}: expected {}; observed {}",
                    f.claim_id,
                    f.instance.label,
                    f.expected_relation,
                    f.observed
                );
            }
        }
        say!(
            out,
            "total: {} checks, {} passed, {} failed, {} inconclusive",
            report.total,
            report.passed,
            report.failed,
            report.inconclusive
        );
    }
    say!(err, "runtime {:.1}s", start.elapsed().as_secs_f64());
    Ok(report.exit_code() as u8)
}

/// Parses `args` and runs the command, appending its standard output to
/// `out`. Returns the process exit code.
fn run<I, T>(args: I, out: &mut String, err: &mut String) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                err.push_str(&text);
                3
            } else {
                out.push_str(&text);
                0
            };
        }
    };
    let result = match &cli.command {
        Command::Gen(a) => gen(out, a),
        Command::Compute(a) => compute(out, a),
        Command::Witness(a) => witness(out, a),
        Command::Verify(a) => verify(out, err, a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            say!(err, "error: {e}");
            3
        }
    }
}

fn main() -> ExitCode {
    let (mut out, mut err) = (String::new(), String::new());
    let code = run(std::env::args_os(), &mut out, &mut err);
    print!("{out}");
    eprint!("{err}");
    ExitCode::from(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Run {
        code: u8,
        out: String,
    }

    fn exec(args: &[&str]) -> Run {
        let (mut out, mut err) = (String::new(), String::new());
        let code = run(
            std::iter::once("pathconn").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        Run { code, out }
    }

    fn write(dir: &Path, name: &str, text: &str) -> String {
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }

    #[test]
    fn gen_writes_canonical_text() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("c4.txt");
        let o = exec(&[
            "gen",
            "--family",
            "cycle",
            "--params",
            "4",
            "-o",
            out.to_str().unwrap(),
        ]);
        assert!(o.code == 0);
        assert_eq!(
            std::fs::read_to_string(out).unwrap(),
            "n 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n"
        );
    }

    #[test]
    fn gen_line_graph_and_product_carry_labels() {
        let dir = tempfile::tempdir().unwrap();
        let k3 = write(dir.path(), "k3.txt", "n 3\ne 0 1\ne 0 2\ne 1 2\n");
        let p2 = write(dir.path(), "p2.txt", "n 2\ne 0 1\n");
        let line = exec(&["gen", "--family", "line-of", "--input", &k3]).out;
        assert!(line.contains("# label 0 edge:0-1"));
        assert!(line.contains("n 3\n"));
        let prod = exec(&[
            "gen", "--family", "product", "--input", &k3, "--input2", &p2,
        ])
        .out;
        assert!(prod.contains("# label 5 pair:2,1"));
        assert!(prod.contains("n 6\n"));
        assert_eq!(
            prod.lines().filter(|l| l.starts_with("e ")).count(),
            3 * 2 + 3
        );
    }

    #[test]
    fn compute_reports_certificate() {
        let dir = tempfile::tempdir().unwrap();
        let k5 = exec(&["gen", "--family", "complete", "--params", "5"]).out;
        let f = write(dir.path(), "k5.txt", &k5);
        let o = exec(&[
            "compute", "--input", &f, "--param", "pi", "--k", "3", "--json",
        ]);
        assert!(o.code == 0);
        let v: serde_json::Value = serde_json::from_str(&o.out.clone()).unwrap();
        assert_eq!(v["param"], "pi");
        assert_eq!(v["value"], 2);
        assert_eq!(v["status"], "exact");
        assert_eq!(v["family"].as_array().unwrap().len(), 2);
        assert_eq!(v["witness_set"].as_array().unwrap().len(), 3);

        let o = exec(&[
            "compute", "--input", &f, "--param", "lambda", "--set", "0,1,2", "--json",
        ]);
        let v: serde_json::Value = serde_json::from_str(&o.out.clone()).unwrap();
        assert_eq!(v["value"], 3);
    }

    #[test]
    fn compute_cut_connectivity_of_h1() {
        let dir = tempfile::tempdir().unwrap();
        let h1 = exec(&["gen", "--family", "h1"]).out;
        let f = write(dir.path(), "h1.txt", &h1);
        let o = exec(&["compute", "--input", &f, "--param", "kappa-cut", "--k", "3"]);
        assert_eq!(o.out.clone().trim(), "kappa'_3 = 2");
        let o = exec(&["compute", "--input", &f, "--param", "kappa", "--k", "3"]);
        assert!(o.out.clone().starts_with("kappa_3 = 1 (exact)"));
    }

    #[test]
    fn compute_exits_2_when_cut_short() {
        let dir = tempfile::tempdir().unwrap();
        let g = exec(&["gen", "--family", "complete", "--params", "9"]).out;
        let f = write(dir.path(), "k9.txt", &g);
        let o = exec(&[
            "compute",
            "--input",
            &f,
            "--param",
            "omega",
            "--set",
            "0,1,2,3",
            "--node-limit",
            "1",
        ]);
        assert_eq!(o.code, 2, "{}", o.out.clone());
        assert!(o.out.clone().contains("lower-bound"));
    }

    #[test]
    fn input_errors_exit_3() {
        let dir = tempfile::tempdir().unwrap();
        let bad = write(dir.path(), "bad.txt", "n 3\ne 0 5\n");
        assert_eq!(
            exec(&["compute", "--input", &bad, "--param", "pi", "--k", "3"]).code,
            3
        );
        assert_eq!(
            exec(&[
                "compute",
                "--input",
                "/nonexistent",
                "--param",
                "pi",
                "--k",
                "3"
            ])
            .code,
            3
        );
        assert_eq!(exec(&["gen", "--family", "wheel", "--params", "5"]).code, 3);
        assert_eq!(exec(&["verify", "--suite", "bogus"]).code, 3);
        assert_eq!(
            exec(&["witness", "--p", "3", "--q", "4", "--set", "0,1,2"]).code,
            3
        );
    }

    #[test]
    fn witness_single_and_all() {
        let o = exec(&[
            "witness", "--p", "2", "--q", "3", "--set", "0,1,2", "--json",
        ]);
        assert!(o.code == 0);
        let v: serde_json::Value = serde_json::from_str(&o.out.clone()).unwrap();
        assert_eq!(v["valid"], true);
        assert_eq!(v["case"], "1");
        assert_eq!(v["family"].as_array().unwrap().len(), 3);

        let o = exec(&["witness", "--p", "2", "--q", "3", "--all", "--json"]);
        assert!(o.code == 0);
        let v: serde_json::Value = serde_json::from_str(&o.out.clone()).unwrap();
        assert_eq!(v["triples"], 560);
        assert!(v["failure"].is_null());
    }

    #[test]
    fn verify_writes_identical_reports() {
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("a.json");
        let b = dir.path().join("b.json");
        for p in [&a, &b] {
            let o = exec(&[
                "verify",
                "--suite",
                "inequalities",
                "--seed",
                "4",
                "--count",
                "10",
                "-o",
                p.to_str().unwrap(),
            ]);
            assert!(o.code <= 2);
        }
        let (ra, rb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
        assert_eq!(ra, rb);
        let v: serde_json::Value = serde_json::from_slice(&ra).unwrap();
        let s = &v["suites"][0];
        assert_eq!(s["suite"], "inequalities");
        assert_eq!(s["seed"], 4);
        let total = s["total"].as_u64().unwrap();
        let sum = ["passed", "failed", "inconclusive"]
            .iter()
            .map(|k| s[k].as_u64().unwrap())
            .sum::<u64>();
        assert_eq!(total, sum);
        let rec = &s["records"][0];
        for key in [
            "suite",
            "claim_id",
            "instance",
            "expected_relation",
            "observed",
            "verdict",
        ] {
            assert!(rec.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn verify_exit_code_follows_failures() {
        let o = exec(&["verify", "--suite", "formulas", "--max-n", "5", "--json"]);
        let v: serde_json::Value = serde_json::from_str(&o.out.clone()).unwrap();
        let expected = if v["failed"].as_u64().unwrap() > 0 {
            1
        } else if v["inconclusive"].as_u64().unwrap() > 0 {
            2
        } else {
            0
        };
        assert_eq!(o.code, expected);
    }
}
