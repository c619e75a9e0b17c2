use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use adcurve::diagrams::{full_diagram, gamma_plus, Diagram};
use adcurve::orbits::{enumerate, TwistPolicy};
use adcurve::{apply_seq, parse_sequence, AdaParameter, Error};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

mod verify;

#[derive(Parser)]
#[command(name = "adcurve", version, about = "Fourier-Laplace calculus on Argyres-Douglas curve parameters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Twists {
    None,
    C0,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Dualities,
    Orbit,
    Pipeline,
    Diagrams,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a comma-separated operation sequence, e.g. "F-,F+@-1,T@i".
    Transform {
        /// Parameter JSON: a file path, `-` for stdin, or inline JSON.
        #[arg(long)]
        param: String,
        #[arg(long, allow_hyphen_values = true)]
        ops: String,
    },
    /// Enumerate the orbit window with wild-slope denominator at most R.
    Orbit {
        #[arg(long)]
        param: String,
        #[arg(long, value_name = "R")]
        max_denominator: usize,
        #[arg(long, value_enum, default_value = "none")]
        twists: Twists,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Nonabelian Hodge diagram of the parameter, or of its Γ₊ partner.
    Diagram {
        #[arg(long)]
        param: String,
        #[arg(long)]
        plus: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Γ₊ diagram of a standard parameter together with its theory label.
    Mirror {
        #[arg(long)]
        param: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Theory label D_p^b(sl_N, [Y]) of a standard parameter.
    Label {
        #[arg(long)]
        param: String,
        /// Drop b when b = N.
        #[arg(long)]
        short: bool,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        param: String,
        /// Number of added column blocks for the first duality.
        #[arg(long, default_value_t = 1)]
        l: usize,
        /// Orbit window for the orbit and diagrams suites (default max(r, 12)).
        #[arg(long, value_name = "R")]
        max_denominator: Option<usize>,
    },
}

/// Failure reported as `{kind, message}` on stderr with exit code 1.
struct Failure {
    kind: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            kind: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

fn failure(kind: &str, message: impl Into<String>) -> Failure {
    Failure {
        kind: kind.into(),
        message: message.into(),
    }
}

fn read_param(source: &str) -> Result<AdaParameter, Failure> {
    let text = if source == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| failure("Io", format!("stdin: {e}")))?;
        buf
    } else if source.trim_start().starts_with('{') && !Path::new(source).exists() {
        source.to_string()
    } else {
        fs::read_to_string(source).map_err(|e| failure("Io", format!("{source}: {e}")))?
    };
    let t: AdaParameter =
        serde_json::from_str(&text).map_err(|e| failure("Parse", format!("{source}: {e}")))?;
    t.validate()?;
    Ok(t)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn diagram_report(t: &AdaParameter, g: &Diagram) -> serde_json::Value {
    json!({
        "parameter": t,
        "diagram": g,
        "cartan_pairing": g.cartan_pairing(),
        "dimension": g.wcv_dimension(),
        "nonnegative": g.is_nonnegative(),
    })
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Transform { param, ops } => {
            let t = read_param(&param)?;
            let ops = parse_sequence(&ops)?;
            Ok(to_json(&apply_seq(&ops, &t)?))
        }
        Command::Orbit {
            param,
            max_denominator,
            twists,
            format,
        } => {
            let t = read_param(&param)?;
            let policy = match twists {
                Twists::None => TwistPolicy::None,
                Twists::C0 => TwistPolicy::EigenvaluesOfC0,
            };
            let g = enumerate(&t, max_denominator, policy)?;
            Ok(match format {
                Format::Json => to_json(&g),
                Format::Dot => g.to_dot(),
            })
        }
        Command::Diagram { param, plus, format } => {
            let t = read_param(&param)?;
            let (t, g) = if plus {
                gamma_plus(&t)?
            } else {
                let g = full_diagram(&t);
                (t, g)
            };
            Ok(match format {
                Format::Json => to_json(&diagram_report(&t, &g)),
                Format::Dot => g.to_dot(),
            })
        }
        Command::Mirror { param, format } => {
            let t = read_param(&param)?;
            let label = t.to_physics_label()?;
            let (plus, g) = gamma_plus(&t)?;
            Ok(match format {
                Format::Json => {
                    let mut report = diagram_report(&plus, &g);
                    report["label"] = json!(label.to_string());
                    report["short_label"] = json!(label.short_form());
                    to_json(&report)
                }
                Format::Dot => format!("// {label}\n{}", g.to_dot()),
            })
        }
        Command::Label { param, short } => {
            let label = read_param(&param)?.to_physics_label()?;
            Ok(if short {
                format!("{}\n", label.short_form())
            } else {
                format!("{label}\n")
            })
        }
        Command::Verify {
            suite,
            param,
            l,
            max_denominator,
        } => {
            let t = read_param(&param)?;
            let r_max = max_denominator.unwrap_or(t.slope.r().max(12));
            let report = match suite {
                Suite::Dualities => verify::dualities(&t, l),
                Suite::Orbit => verify::orbit(&t, r_max)?,
                Suite::Pipeline => verify::pipeline(&t),
                Suite::Diagrams => verify::diagrams(&t, r_max),
            };
            let out = to_json(&report);
            if report.passed {
                Ok(out)
            } else {
                print!("{out}");
                Err(failure("VerificationFailed", format!("suite {} has failing checks", report.suite)))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", json!({ "kind": f.kind, "message": f.message }));
            ExitCode::from(1)
        }
    }
}
