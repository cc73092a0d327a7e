//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a checked property fails (a set that is
//! not independent, a fuzz violation, a solver invariant breach), 2 for
//! usage and input errors.

pub mod fuzz;
pub mod io;

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::augment::{solve_general, SolveError};
use crate::bounds::{bounds_report, ceil_div, degree_sum_check};
use crate::extremal::FamilySpec;
use crate::graph::{Graph, Vertex};
use crate::greedy::greedy_expand;
use crate::oracle::{alpha_exact, is_maximal_independent};

pub use fuzz::{FuzzConfig, FuzzFailure};
pub use io::{detect_format, parse_graph, serialize_graph, GraphFormat, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "indbound",
    version,
    about = "Independence-number bounds, certificates and extremal graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Star chain attaining the upper bound (needs --n, --k)
    #[value(name = "U")]
    Upper,
    /// Clique chain attaining the refined lower bound (needs --n, --k)
    #[value(name = "L")]
    Lower,
    /// Circulant with a small maximal independent set (needs --m)
    Circulant,
    Complete,
    Cycle,
    Path,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Greedy picks only; certifies ⌈(n−1)/Δ⌉ per component
    Greedy,
    /// Full construction; certifies ⌈n/Δ⌉ where it applies
    Auto,
    /// Exact maximum independent set
    Exact,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph family member
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::EdgeList)]
        format: GraphFormat,
    },
    /// Print lower and upper bounds for a graph file (`-` for stdin)
    Bound {
        file: PathBuf,
        /// Input format; detected from the content when omitted
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
    },
    /// Produce an independent set with its guarantee
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
    },
    /// Check a vertex set for independence, maximality and the degree-sum
    /// inequality
    Verify {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<Vertex>,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
    },
    /// Cross-check bounds and certificates against the exact oracle on
    /// random graphs
    Fuzz {
        #[arg(long)]
        count: usize,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long = "min-n", default_value_t = 2)]
        min_n: usize,
        #[arg(long)]
        seed: u64,
        /// Plain random graphs, possibly disconnected
        #[arg(long)]
        disconnected: bool,
    },
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut buffer = Vec::new();
    let result = dispatch(cli.command, &mut buffer);
    let _ = out.write_all(&buffer);
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_graph(path: &Path, format: Option<GraphFormat>) -> Result<Graph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("reading {}: {e}", path.display())))?
    };
    let format = format.unwrap_or_else(|| detect_format(&text));
    parse_graph(&text, format).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn join(set: &[Vertex]) -> String {
    set.iter().map(Vertex::to_string).collect::<Vec<_>>().join(",")
}

fn dispatch(command: Command, out: &mut Vec<u8>) -> Result<i32, Failure> {
    match command {
        Command::Gen {
            family,
            n,
            k,
            m,
            format,
        } => {
            let need = |value: Option<usize>, flag: &str| {
                value.ok_or_else(|| Failure::usage(format!("--family {family:?} needs --{flag}")))
            };
            let spec = match family {
                Family::Upper => FamilySpec::UpperExtremal {
                    n: need(n, "n")?,
                    k: need(k, "k")?,
                },
                Family::Lower => FamilySpec::LowerExtremal {
                    n: need(n, "n")?,
                    k: need(k, "k")?,
                },
                Family::Circulant => FamilySpec::CirculantExample { m: need(m, "m")? },
                Family::Complete => FamilySpec::Complete { n: need(n, "n")? },
                Family::Cycle => FamilySpec::Cycle { n: need(n, "n")? },
                Family::Path => FamilySpec::Path { n: need(n, "n")? },
            };
            let g = spec.generate().map_err(|e| Failure::usage(e.to_string()))?;
            out.extend_from_slice(serialize_graph(&g, format).as_bytes());
            Ok(EXIT_OK)
        }
        Command::Bound { file, format } => {
            let g = read_graph(&file, format)?;
            write_bounds(&g, out);
            Ok(EXIT_OK)
        }
        Command::Solve {
            file,
            method,
            format,
        } => {
            let g = read_graph(&file, format)?;
            solve(&g, method, out)
        }
        Command::Verify { file, set, format } => {
            let g = read_graph(&file, format)?;
            if let Some(&v) = set.iter().find(|&&v| !g.contains(v)) {
                return Err(Failure::usage(format!(
                    "vertex {v} is outside 1..={}",
                    g.order()
                )));
            }
            let independent = g.is_independent_set(&set);
            let text = &mut String::new();
            use std::fmt::Write as _;
            writeln!(text, "independent={independent}").unwrap();
            writeln!(text, "maximal={}", is_maximal_independent(&g, &set)).unwrap();
            match degree_sum_check(&g, &set) {
                Ok(check) => {
                    write!(
                        text,
                        "degree_sum={} edges={} degree_bound={}",
                        check.sum, check.edges, check.ok
                    )
                    .unwrap();
                    if let Some(ok) = check.connected_ok {
                        write!(text, " connected_bound={ok}").unwrap();
                    }
                    writeln!(text).unwrap();
                }
                Err(_) => writeln!(text, "degree_bound=not-applicable").unwrap(),
            }
            out.extend_from_slice(text.as_bytes());
            Ok(if independent { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Fuzz {
            count,
            max_n,
            min_n,
            seed,
            disconnected,
        } => {
            if max_n < min_n.max(1) {
                return Err(Failure::usage("--max-n must be at least --min-n"));
            }
            if max_n > crate::oracle::DEFAULT_LIMIT {
                return Err(Failure::usage(format!(
                    "--max-n is capped at the oracle limit {}",
                    crate::oracle::DEFAULT_LIMIT
                )));
            }
            let config = FuzzConfig {
                count,
                min_n,
                max_n,
                seed,
                disconnected,
            };
            match fuzz::run_fuzz(&config) {
                Ok(validated) => {
                    writeln!(out, "validated={validated} seed={seed} max_n={max_n}").unwrap();
                    Ok(EXIT_OK)
                }
                Err(failure) => {
                    writeln!(
                        out,
                        "violation at instance {}: {}",
                        failure.index, failure.reason
                    )
                    .unwrap();
                    out.extend_from_slice(
                        serialize_graph(&failure.graph, GraphFormat::EdgeList).as_bytes(),
                    );
                    Err(Failure {
                        code: EXIT_VIOLATION,
                        message: format!("fuzz violation at instance {}", failure.index),
                    })
                }
            }
        }
    }
}

fn write_bounds(g: &Graph, out: &mut Vec<u8>) {
    let report = bounds_report(g);
    let _ = writeln!(
        out,
        "graph: {} vertices, {} edges, {} non-singleton components, {} singletons",
        report.order,
        g.size(),
        report.components.len(),
        report.singleton_count
    );
    for (i, c) in report.components.iter().enumerate() {
        let _ = write!(
            out,
            "component {}: {} vertices, max degree {}, {}; alpha in [{}, {}]",
            i + 1,
            c.order,
            c.max_degree,
            c.class,
            c.lower,
            c.upper
        );
        if let Some(refined) = c.refined {
            let _ = write!(out, ", refined lower {refined}");
        }
        let _ = writeln!(out, "; vertices {}", join(&c.vertices));
    }
    let (p, q) = (report.caro_wei.numer(), report.caro_wei.denom());
    let _ = writeln!(out, "Caro-Wei: {p}/{q} (ceiling {})", report.caro_wei_ceil);
    let _ = writeln!(
        out,
        "aggregate: alpha in [{}, {}]",
        report.aggregate_lower, report.aggregate_upper
    );
    let _ = writeln!(
        out,
        "lower={} upper={} carowei={p}/{q}",
        report.aggregate_lower, report.aggregate_upper
    );
}

fn solve(g: &Graph, method: Method, out: &mut Vec<u8>) -> Result<i32, Failure> {
    let (set, guarantee, tier, branch) = match method {
        Method::Auto => match solve_general(g) {
            Ok(cert) => (
                cert.set,
                cert.guarantee,
                cert.tier.to_string(),
                cert.branch.to_string(),
            ),
            Err(e @ SolveError::InvariantBreach(_)) => {
                return Err(Failure {
                    code: EXIT_VIOLATION,
                    message: e.to_string(),
                })
            }
            Err(e) => return Err(Failure::usage(e.to_string())),
        },
        Method::Greedy => {
            let mut set = Vec::new();
            let mut guarantee = 0;
            for part in &g.components().parts {
                if part.len() == 1 {
                    set.push(part[0]);
                    guarantee += 1;
                    continue;
                }
                let sub = g
                    .induced_subgraph(part)
                    .map_err(|e| Failure::usage(e.to_string()))?;
                let trace = greedy_expand(&sub.graph).map_err(|e| Failure::usage(e.to_string()))?;
                set.extend(sub.lift(&trace.chosen));
                guarantee += ceil_div(sub.graph.order() - 1, sub.graph.max_degree());
            }
            set.sort_unstable();
            (set, guarantee, "baseline".into(), "greedy".into())
        }
        Method::Exact => {
            let result = alpha_exact(g).map_err(|e| Failure::usage(e.to_string()))?;
            (result.witness, result.alpha, "exact".into(), "oracle".into())
        }
    };
    let _ = writeln!(out, "set={}", join(&set));
    let _ = writeln!(out, "size={}", set.len());
    let _ = writeln!(out, "guarantee={guarantee}");
    let _ = writeln!(out, "tier={tier}");
    let _ = writeln!(out, "branch={branch}");
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("indbound").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn gen_clique_chain() {
        let (code, out, _) = run_capture(&["gen", "--family", "L", "--n", "7", "--k", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "7 8\n1 2\n1 3\n2 3\n3 4\n4 5\n4 6\n5 6\n6 7\n");
    }

    #[test]
    fn gen_errors_are_usage_errors() {
        let (code, _, err) = run_capture(&["gen", "--family", "L", "--n", "7"]);
        assert_eq!(code, 2);
        assert!(err.contains("--k"));
        let (code, _, _) = run_capture(&["gen", "--family", "L", "--n", "7", "--k", "1"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_capture(&["nonsense"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn small_fuzz_run() {
        let (code, out, _) = run_capture(&["fuzz", "--count", "30", "--max-n", "12", "--seed", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "validated=30 seed=1 max_n=12\n");
    }

    #[test]
    fn missing_file() {
        let (code, _, err) = run_capture(&["bound", "/nonexistent/graph.txt"]);
        assert_eq!(code, 2);
        assert!(err.contains("reading"));
    }
}
