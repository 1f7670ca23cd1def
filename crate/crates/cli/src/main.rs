//! `hpcad`: open sample points and semi-definiteness from the command line.

mod doc;

use std::fmt;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::sync::atomic::AtomicBool;
use std::sync::mpsc;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hpcad::lifting::{hp_two, open_cad, reduced_sample, LiftOptions, OpenSample};
use hpcad::parse::parse_poly;
use hpcad::poly::{MultiPoly, VarOrder};
use hpcad::psd::{PsdSolver, PsdVerdict};
use hpcad::realroots::Strategy;

use doc::{point, Counts, ResultDocument};

#[derive(Parser)]
#[command(
    name = "hpcad",
    version,
    about = "Open CAD sample points and polynomial semi-definiteness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct an open sample of a polynomial.
    Sample {
        #[command(flatten)]
        input: Input,
        /// opencad, hptwo or reduced:j
        #[arg(long, default_value = "hptwo")]
        method: SampleMethod,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Decide whether a polynomial is positive semi-definite.
    Psd {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = PsdMethod::Hptwo)]
        method: PsdMethod,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Sample with both open CAD and HpTwo and report the counts.
    Compare {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Print a built-in example polynomial.
    Corpus {
        #[arg(value_enum)]
        family: Family,
        /// Number of variables (F, G).
        #[arg(long)]
        n: Option<usize>,
        /// Size parameter (B): 3m + 2 variables.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Parse a polynomial and print its canonical form.
    Parse {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Input {
    /// Polynomial text; read from --file or stdin when absent.
    poly: Option<String>,
    #[arg(long, conflicts_with = "poly")]
    file: Option<PathBuf>,
    /// Variables outermost first, e.g. z,y,x.
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<String>>,
}

#[derive(Args)]
struct RunFlags {
    #[arg(long, default_value_t = Strategy::Simplest)]
    strategy: Strategy,
    /// Worker threads (default: all cores).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
    /// Abort after this many seconds.
    #[arg(long)]
    timeout: Option<f64>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SampleMethod {
    OpenCad,
    HpTwo,
    Reduced(usize),
}

impl FromStr for SampleMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "opencad" => Ok(SampleMethod::OpenCad),
            "hptwo" => Ok(SampleMethod::HpTwo),
            _ => s
                .strip_prefix("reduced:")
                .and_then(|j| j.parse().ok())
                .map(SampleMethod::Reduced)
                .ok_or_else(|| {
                    format!("unknown method '{s}' (expected opencad, hptwo or reduced:j)")
                }),
        }
    }
}

impl fmt::Display for SampleMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SampleMethod::OpenCad => f.write_str("opencad"),
            SampleMethod::HpTwo => f.write_str("hptwo"),
            SampleMethod::Reduced(j) => write!(f, "reduced:{j}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PsdMethod {
    /// Recursive test over reduced samples.
    Hptwo,
    /// Evaluate over a full open sample.
    Sample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Ex1,
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
    #[value(name = "B")]
    B,
}

/// Failure with exit status 2.
struct Failure(String);

impl<E: fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Sample { input, method, run } => {
            let (f, order) = read_poly(&input)?;
            nonconstant(&f)?;
            let doc = with_limits(&run, move |opts| {
                let t = Instant::now();
                let s = sample(&f, method, opts)?;
                Ok(sample_doc(&order, &method.to_string(), &s, t))
            })?;
            emit(&[doc], run.json);
            Ok(0)
        }
        Command::Psd { input, method, run } => {
            let (f, order) = read_poly(&input)?;
            let strategy = run.strategy;
            let doc = with_limits(&run, move |opts| {
                let t = Instant::now();
                let solver = PsdSolver::new(opts.clone());
                let v = match method {
                    PsdMethod::Hptwo => solver.psd_hp_two(&f)?,
                    PsdMethod::Sample => solver.psd_by_sample(&f)?,
                };
                Ok(psd_doc(&order, method, strategy, &v, t))
            })?;
            let code = if doc.verdict.as_deref() == Some("psd") {
                0
            } else {
                1
            };
            emit(&[doc], run.json);
            Ok(code)
        }
        Command::Compare { input, run } => {
            let (f, order) = read_poly(&input)?;
            nonconstant(&f)?;
            let docs = with_limits(&run, move |opts| {
                let mut docs = Vec::new();
                for m in [SampleMethod::OpenCad, SampleMethod::HpTwo] {
                    let t = Instant::now();
                    let s = sample(&f, m, opts)?;
                    docs.push(sample_doc(&order, &m.to_string(), &s, t));
                }
                Ok(docs)
            })?;
            if run.json {
                emit(&docs, true);
            } else {
                for d in &docs {
                    println!("{}: {} {:?}", d.method, d.counts.total, d.counts.levels);
                }
                let (o, h) = (docs[0].counts.total, docs[1].counts.total);
                println!("hptwo/opencad: {h}/{o}");
            }
            Ok(0)
        }
        Command::Corpus { family, n, m, json } => {
            let (f, order) = corpus(family, n, m)?;
            print_poly(&f, &order, json);
            Ok(0)
        }
        Command::Parse { input, json } => {
            let (f, order) = read_poly(&input)?;
            print_poly(&f, &order, json);
            Ok(0)
        }
    }
}

fn read_poly(input: &Input) -> Result<(MultiPoly, VarOrder), Failure> {
    let text = match (&input.poly, &input.file) {
        (Some(t), _) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure(format!("{}: {e}", path.display())))?,
        (None, None) => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(parse_poly(text.trim(), input.order.as_deref())?)
}

fn nonconstant(f: &MultiPoly) -> Result<(), Failure> {
    if f.is_constant() {
        return Err(Failure("sampling needs a nonconstant polynomial".into()));
    }
    Ok(())
}

fn corpus(
    family: Family,
    n: Option<usize>,
    m: Option<usize>,
) -> Result<(MultiPoly, VarOrder), Failure> {
    let indexed = |f: Option<MultiPoly>, what: &str| {
        f.map(|f| {
            let k = f.nvars();
            (f, VarOrder::indexed(k))
        })
        .ok_or_else(|| Failure(format!("invalid size: {what}")))
    };
    match family {
        Family::Ex1 => Ok(hpcad::corpus::ex1()),
        Family::F => indexed(
            n.and_then(hpcad::corpus::f_family),
            "--n must be at least 2",
        ),
        Family::G => indexed(
            n.and_then(hpcad::corpus::g_family),
            "--n must be at least 2",
        ),
        Family::B => indexed(
            m.and_then(hpcad::corpus::b_family),
            "--m must be at least 1",
        ),
    }
}

fn print_poly(f: &MultiPoly, order: &VarOrder, json: bool) {
    let text = f.display_with(order.names()).to_string();
    if json {
        let v = serde_json::json!({
            "polynomial": text,
            "variables": order.names(),
            "order": order.precedence(),
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&v).expect("serializable")
        );
    } else {
        println!("{text}");
    }
}

fn sample(f: &MultiPoly, method: SampleMethod, opts: &LiftOptions) -> Result<OpenSample, Failure> {
    Ok(match method {
        SampleMethod::OpenCad => open_cad(f, opts)?,
        SampleMethod::HpTwo => hp_two(f, opts)?,
        SampleMethod::Reduced(j) => reduced_sample(f, j, opts)?,
    })
}

fn elapsed_ms(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

fn sample_doc(order: &VarOrder, method: &str, s: &OpenSample, t: Instant) -> ResultDocument {
    ResultDocument {
        variables: order.names().to_vec(),
        order: order.precedence(),
        method: method.to_string(),
        strategy: s.strategy.to_string(),
        counts: Counts {
            levels: s.counts.clone(),
            total: s.len(),
        },
        samples: s.points.iter().map(|p| point(p)).collect(),
        verdict: None,
        witness: None,
        ms: elapsed_ms(t),
    }
}

fn psd_doc(
    order: &VarOrder,
    method: PsdMethod,
    strategy: Strategy,
    v: &PsdVerdict,
    t: Instant,
) -> ResultDocument {
    let method = match method {
        PsdMethod::Hptwo => "psd-hptwo",
        PsdMethod::Sample => "psd-sample",
    };
    ResultDocument {
        variables: order.names().to_vec(),
        order: order.precedence(),
        method: method.to_string(),
        strategy: strategy.to_string(),
        counts: Counts {
            levels: Vec::new(),
            total: 0,
        },
        samples: Vec::new(),
        verdict: Some(v.verdict.to_string()),
        witness: v.witness.as_ref().map(|w| point(w)),
        ms: elapsed_ms(t),
    }
}

fn emit(docs: &[ResultDocument], json: bool) {
    if json {
        let text = if docs.len() == 1 {
            serde_json::to_string_pretty(&docs[0])
        } else {
            serde_json::to_string_pretty(docs)
        };
        println!("{}", text.expect("serializable"));
        return;
    }
    for d in docs {
        println!("order: {}", d.order.join(" > "));
        println!("method: {}  strategy: {}", d.method, d.strategy);
        if let Some(v) = &d.verdict {
            println!("verdict: {v}");
            if let Some(w) = &d.witness {
                println!("witness: ({})", w.join(", "));
            }
            continue;
        }
        let levels: Vec<String> = d.counts.levels.iter().map(|c| c.to_string()).collect();
        println!("counts: [{}]  total: {}", levels.join(", "), d.counts.total);
        for p in &d.samples {
            println!("({})", p.join(", "));
        }
    }
}

/// Runs `job` on a worker thread inside a pool of the requested size,
/// enforcing the timeout with a partial-progress report.
fn with_limits<T, F>(flags: &RunFlags, job: F) -> Result<T, Failure>
where
    T: Send + 'static,
    F: FnOnce(&LiftOptions) -> Result<T, Failure> + Send + 'static,
{
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = flags.threads {
        builder = builder.num_threads(n as usize);
    }
    let pool = builder.build()?;
    let progress: Arc<Mutex<Vec<(usize, usize)>>> = Arc::default();
    let cancel = Arc::new(AtomicBool::new(false));
    let sink = Arc::clone(&progress);
    let opts = LiftOptions::new(flags.strategy)
        .with_progress(Arc::new(move |level, count| {
            sink.lock().expect("progress lock").push((level, count))
        }))
        .with_cancel(Arc::clone(&cancel));
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let out = pool.install(|| job(&opts));
        let _ = tx.send(out);
    });
    let out = match flags.timeout {
        None => rx
            .recv()
            .map_err(|_| Failure("worker thread died".into()))?,
        Some(secs) => match rx.recv_timeout(Duration::from_secs_f64(secs.max(0.0))) {
            Ok(out) => out,
            Err(_) => {
                cancel.store(true, std::sync::atomic::Ordering::Relaxed);
                let done = progress.lock().expect("progress lock").clone();
                report_timeout(secs, &done, flags.json);
                return Err(Failure(format!("timed out after {secs} s")));
            }
        },
    };
    out
}

fn report_timeout(secs: f64, done: &[(usize, usize)], json: bool) {
    if json {
        let levels: Vec<serde_json::Value> = done
            .iter()
            .map(|(l, c)| serde_json::json!({"level": l, "count": c}))
            .collect();
        let v =
            serde_json::json!({"error": "timeout", "seconds": secs, "completed_levels": levels});
        println!(
            "{}",
            serde_json::to_string_pretty(&v).expect("serializable")
        );
    } else {
        eprintln!("timeout after {secs} s; completed lifting levels:");
        for (l, c) in done {
            eprintln!("  level {l}: {c} points");
        }
    }
}
