use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use modsym::branching::{induce_chain_to_rouquier_with, restrict_chain_to_principal, DEFAULT_DEPTH_CAP};
use modsym::complexity::complexity_of_with;
use modsym::sweeps::{self, Check};
use modsym::weight_two::route_of;
use modsym::{block_of, label_of, p_core, p_weight, ElemAbelianModule, Error, Partition, Prime};

mod records;
use records::*;

const EXIT_DOMAIN: u8 = 1;
const EXIT_UNDECIDED: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(name = "modsym", version, about = "Block combinatorics and complexity of simple modules of symmetric groups")]
struct Cli {
    /// The prime characteristic.
    #[arg(short = 'p', long = "prime", global = true, default_value_t = 5)]
    p: u64,

    /// Bound on the length of chain searches.
    #[arg(long, global = true, default_value_t = DEFAULT_DEPTH_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    depth_cap: u64,

    /// Print one JSON record per line.
    #[arg(long, global = true)]
    json: bool,

    /// Include the full decision trace where available.
    #[arg(long, global = true)]
    trace: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Rouquier,
    Principal,
}

#[derive(Subcommand)]
enum Command {
    /// p-core, p-weight and p-regularity of a partition.
    Core { partition: Partition },
    /// The [a,b] label of a weight-two partition.
    Label { partition: Partition },
    /// A semisimple chain of [w:k]-pairs.
    Chain {
        #[arg(long = "to", value_enum, default_value = "rouquier")]
        to: Target,
        partition: Partition,
    },
    /// Complexity of the simple module labelled by a p-regular partition.
    Complexity { partition: Partition },
    /// Rational points of the rank variety of a module given as a matrix file (`-` for stdin).
    Rankvar { file: PathBuf },
    /// Check the Jordan-block closed forms against explicit matrices.
    Verify {
        #[arg(long, value_delimiter = ',', default_value = "5,7,11")]
        primes: Vec<u64>,
    },
}

struct Out {
    json: bool,
}

impl Out {
    fn emit<T: Serialize>(&self, record: &T, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string(record).expect("records serialize"));
        } else {
            println!("{}", text());
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            if std::env::args().any(|a| a == "--json") {
                let message = e.to_string();
                let message = message.lines().next().unwrap_or_default().trim_start_matches("error: ");
                let record = ErrorRecord { schema: ERROR.into(), kind: "parse".into(), message: message.into() };
                println!("{}", serde_json::to_string(&record).expect("records serialize"));
            } else {
                let _ = e.print();
            }
            return ExitCode::from(EXIT_DOMAIN);
        }
    };
    let out = Out { json: cli.json };
    match run(&cli, &out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let record = ErrorRecord::new(&e);
            if out.json {
                println!("{}", serde_json::to_string(&record).expect("records serialize"));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(if matches!(e, Error::Undecided { .. }) { EXIT_UNDECIDED } else { EXIT_DOMAIN })
        }
    }
}

fn run(cli: &Cli, out: &Out) -> Result<u8, Error> {
    let p = Prime::new(cli.p)?;
    let cap = cli.depth_cap as usize;
    match &cli.command {
        Command::Core { partition } => {
            let r = CoreRecord {
                schema: CORE.into(),
                partition: partition.to_string(),
                p: cli.p,
                core: p_core(partition, p).to_string(),
                weight: p_weight(partition, p),
                regular: partition.is_p_regular(p),
            };
            out.emit(&r, || format!("core {}  weight {}  regular {}", r.core, r.weight, r.regular));
        }
        Command::Label { partition } => {
            let l = label_of(partition, p)?;
            let regular = partition.is_p_regular(p);
            let route = if regular { Some(format!("{:?}", route_of(partition, p)?)) } else { None };
            let r = LabelRecord {
                schema: LABEL.into(),
                partition: partition.to_string(),
                p: cli.p,
                block_core: l.block.core.to_string(),
                a: l.a,
                b: l.b,
                eps: l.eps,
                p_regular: regular,
                route,
            };
            out.emit(&r, || {
                let route = r.route.as_deref().unwrap_or("none (p-singular)");
                format!("[{},{}]  eps {}  core {}  route {route}", r.a, r.b, r.eps, r.block_core)
            });
        }
        Command::Chain { to, partition } => {
            let (chain, direction) = match to {
                Target::Rouquier => (induce_chain_to_rouquier_with(partition, p, cap)?, "induce"),
                Target::Principal => (restrict_chain_to_principal(partition, p)?, "restrict"),
            };
            let start = block_of(partition, p);
            let r = ChainRecord {
                schema: CHAIN.into(),
                partition: partition.to_string(),
                p: cli.p,
                direction: direction.into(),
                found: chain.is_some(),
                start: BlockRecord::from(&start),
                end: chain.as_ref().map(|c| BlockRecord::from(c.end().0)),
                steps: chain.as_ref().map(steps).unwrap_or_default(),
            };
            out.emit(&r, || match &r.end {
                None => "no semisimple chain".to_string(),
                Some(end) => {
                    let mut s = format!("{} steps, ending in core {} (n = {})", r.steps.len(), end.core, end.n);
                    for st in &r.steps {
                        s.push_str(&format!(
                            "\n  n={} core {} k={} r={} -> {}",
                            st.n, st.core, st.k, st.residue, st.image_partition
                        ));
                    }
                    s
                }
            });
        }
        Command::Complexity { partition } => {
            let result = complexity_of_with(partition, p, cap)?;
            let r = ComplexityRecord::new(&result, cli.trace);
            out.emit(&r, || {
                let mut s = format!("complexity {}  ({})", r.value, r.justification);
                for t in r.trace.iter().flatten() {
                    let mark = if t.applied { "applies" } else { "skip" };
                    s.push_str(&format!("\n  {:<20} {:<8} {}", t.rule, mark, t.note));
                }
                s
            });
        }
        Command::Rankvar { file } => {
            let mut text = String::new();
            if file.as_os_str() == "-" {
                std::io::stdin().read_to_string(&mut text)
            } else {
                std::fs::File::open(file).and_then(|mut f| f.read_to_string(&mut text))
            }
            .map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
            let m: ElemAbelianModule = text.parse()?;
            let points = m.rational_points()?;
            let r = RankvarRecord {
                schema: RANKVAR.into(),
                p: m.prime().get() as u64,
                rank: m.rank(),
                dim: m.dim(),
                points,
            };
            out.emit(&r, || {
                let pts: Vec<String> = r
                    .points
                    .iter()
                    .map(|v| format!("({})", v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
                    .collect();
                format!("{} rational points: {}", pts.len(), pts.join(" "))
            });
        }
        Command::Verify { primes } => {
            let primes = primes.iter().map(|&q| Prime::new(q)).collect::<Result<Vec<_>, _>>()?;
            let jobs: Vec<(Check, Prime)> =
                primes.iter().flat_map(|&q| Check::ALL.into_iter().map(move |c| (c, q))).collect();
            let reports: Vec<_> = jobs.par_iter().map(|&(c, q)| sweeps::run(c, q)).collect();
            let mut ok = true;
            for rep in &reports {
                ok &= rep.passed();
                let r = VerifyRecord::from(rep);
                out.emit(&r, || {
                    let status = if r.pass { "pass" } else { "FAIL" };
                    format!("{:<18} p={:<3} {:>5} cases  {status}", r.check, r.p, r.cases)
                });
            }
            if !ok {
                return Ok(EXIT_VERIFY);
            }
        }
    }
    Ok(0)
}
