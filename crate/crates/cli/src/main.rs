//! `pathsum` command-line front end.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::panic;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pathsum::bits::parse_bits;
use pathsum::solver::{count, element, full_matrix};
use pathsum::{buchberger, compile, dsl, Circuit, Error, Limits, Method, Poly, PolySystem, TermOrder, VarRegistry};

#[derive(Parser)]
#[command(name = "pathsum", version, about = "Sum-over-paths simulation of Hadamard/Toffoli circuits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a circuit file parses and every column is well formed.
    Validate { file: PathBuf },
    /// Print the output polynomial of each row and the phase polynomial.
    Compile { file: PathBuf },
    /// Print the root counts N0 and N1 for one matrix element.
    Count {
        file: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Print the exact amplitude <b|U|a>.
    Element {
        file: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Print the full matrix, rows indexed by a and columns by b.
    Matrix {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Print reduced Gröbner bases of F0 and F1, one generator per line.
    Gb {
        file: PathBuf,
        /// Parameter values, e.g. `a=000,b=100`; either side may be omitted.
        #[arg(long)]
        bind: Option<String>,
        #[arg(long, value_enum, default_value_t = OrderArg::Elim)]
        order: OrderArg,
    },
    /// Print the polynomial system for a computer algebra system.
    Export {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(clap::Args)]
struct SolveArgs {
    #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
    method: MethodArg,
    /// Largest number of Hadamard gates accepted by enumeration.
    #[arg(long, default_value_t = Limits::default().max_paths)]
    max_paths: usize,
    /// Largest number of qubits accepted for a full matrix.
    #[arg(long, default_value_t = Limits::default().max_qubits)]
    max_qubits: usize,
}

impl SolveArgs {
    fn method(&self) -> Method {
        match self.method {
            MethodArg::Brute => Method::Brute,
            MethodArg::Gb => Method::Groebner,
        }
    }

    fn limits(&self) -> Limits {
        Limits {
            max_paths: self.max_paths,
            max_qubits: self.max_qubits,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Gb,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Elim,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Maple,
    Mathematica,
}

/// Failure of a command, with the exit status it maps to.
enum Failure {
    Input(String),
    Cap(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Cap(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Cap(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    panic::set_hook(Box::new(|info| eprintln!("internal error: {info}")));
    let result = panic::catch_unwind(|| run(cli.command))
        .unwrap_or_else(|_| Err(Failure::Internal("aborted after an internal error".into())));
    match result {
        Ok(out) => {
            print!("{out}");
            let _ = std::io::stdout().flush();
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn load(path: &Path) -> Result<Circuit, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    dsl::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn bits(text: &str) -> Result<Vec<bool>, Failure> {
    Ok(parse_bits(text)?)
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Validate { file } => {
            load(&file)?;
            Ok("ok\n".into())
        }
        Command::Compile { file } => {
            let ps = compile(&load(&file)?)?;
            Ok(render_compiled(&ps))
        }
        Command::Count { file, a, b, solve } => {
            let ps = compile(&load(&file)?)?;
            let counts = count(&ps, &bits(&a)?, &bits(&b)?, solve.method(), &solve.limits())?;
            Ok(format!("{counts}\n"))
        }
        Command::Element { file, a, b, solve } => {
            let amp = element(&load(&file)?, &bits(&a)?, &bits(&b)?, solve.method(), &solve.limits())?;
            Ok(format!("{amp}\n"))
        }
        Command::Matrix { file, json, solve } => {
            let circuit = load(&file)?;
            let matrix = full_matrix(&circuit, solve.method(), &solve.limits())?;
            if circuit.qubits() <= 6 && !matrix.is_orthogonal() {
                return Err(Failure::Internal("computed matrix is not orthogonal".into()));
            }
            Ok(if json {
                format!("{}\n", matrix.to_json())
            } else {
                matrix.to_table()
            })
        }
        Command::Gb { file, bind, order } => {
            let ps = compile(&load(&file)?)?;
            groebner_bases(&ps, bind.as_deref(), order)
        }
        Command::Export { file, format } => {
            let ps = compile(&load(&file)?)?;
            Ok(export(&ps, format))
        }
    }
}

fn render_compiled(ps: &PolySystem) -> String {
    let r = ps.registry();
    let mut out = String::new();
    for (i, p) in ps.row_polys().iter().enumerate() {
        let _ = writeln!(out, "f{} = {}", i + 1, r.display(p));
    }
    let _ = writeln!(out, "phi = {}", r.display(ps.phase()));
    out
}

type Bindings = (Option<Vec<bool>>, Option<Vec<bool>>);

fn parse_bind(text: &str) -> Result<Bindings, Failure> {
    let (mut a, mut b) = (None, None);
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Failure::Input(format!("binding `{part}` is not of the form a=BITS or b=BITS")))?;
        let slot = match key.trim() {
            "a" => &mut a,
            "b" => &mut b,
            other => return Err(Failure::Input(format!("unknown parameter `{other}` in binding"))),
        };
        if slot.is_some() {
            return Err(Failure::Input(format!("parameter `{}` bound twice", key.trim())));
        }
        *slot = Some(bits(value.trim())?);
    }
    Ok((a, b))
}

fn groebner_bases(ps: &PolySystem, bind: Option<&str>, order: OrderArg) -> Outcome {
    let (a, b) = match bind {
        Some(text) => parse_bind(text)?,
        None => (None, None),
    };
    let (f0, f1) = ps.assemble_systems(a.as_deref(), b.as_deref())?;
    let order = match order {
        OrderArg::Lex => TermOrder::lex(),
        OrderArg::Elim => TermOrder::block_elim(),
    };
    let mut out = String::new();
    for (name, system) in [("F0", &f0), ("F1", &f1)] {
        let gb = buchberger(system, &order, ps.registry())?;
        if gb.criterion_violations() != 0 {
            return Err(Failure::Internal(format!("basis of {name} fails the Buchberger criterion")));
        }
        let _ = writeln!(out, "{name}:");
        for g in gb.generators() {
            let _ = writeln!(out, "{}", ps.registry().display(g).ordered(gb.order_map()));
        }
    }
    Ok(out)
}

fn export(ps: &PolySystem, format: Format) -> String {
    let r = ps.registry();
    let (f0, f1) = ps
        .assemble_systems(None, None)
        .expect("symbolic assembly binds nothing");
    let names: Vec<String> = r.vars().iter().map(ToString::to_string).collect();
    match format {
        Format::Plain => export_plain(ps, &names),
        Format::Maple => export_cas(r, &names, &f0, &f1, CasSyntax::MAPLE),
        Format::Mathematica => export_cas(r, &names, &f0, &f1, CasSyntax::MATHEMATICA),
    }
}

fn export_plain(ps: &PolySystem, names: &[String]) -> String {
    let mut out = format!("# polynomials over GF(2)\n# variables: {}\n", names.join(" "));
    out.push_str(&render_compiled(ps));
    out
}

struct CasSyntax {
    comment: &'static str,
    assign: &'static str,
    terminator: &'static str,
    open: &'static str,
    close: &'static str,
}

impl CasSyntax {
    const MAPLE: CasSyntax = CasSyntax {
        comment: "#",
        assign: ":=",
        terminator: ":",
        open: "[",
        close: "]",
    };
    const MATHEMATICA: CasSyntax = CasSyntax {
        comment: "(*",
        assign: "=",
        terminator: ";",
        open: "{",
        close: "}",
    };

    fn comment(&self, text: &str) -> String {
        if self.comment == "(*" {
            format!("(* {text} *)\n")
        } else {
            format!("# {text}\n")
        }
    }

    fn list<I: IntoIterator<Item = String>>(&self, items: I) -> String {
        format!("{}{}{}", self.open, items.into_iter().collect::<Vec<_>>().join(", "), self.close)
    }

    fn assign(&self, name: &str, value: &str) -> String {
        format!("{name} {} {value}{}\n", self.assign, self.terminator)
    }
}

fn export_cas(r: &VarRegistry, names: &[String], f0: &[Poly], f1: &[Poly], syntax: CasSyntax) -> String {
    let polys = |system: &[Poly]| syntax.list(system.iter().map(|p| r.display(p).to_string()));
    let field = syntax.list(names.iter().map(|v| format!("{v}^2 + {v}")));
    let mut out = syntax.comment("polynomials over GF(2): reduce modulo 2 together with fieldEqs");
    out.push_str(&syntax.assign("vars", &syntax.list(names.iter().cloned())));
    out.push_str(&syntax.assign("fieldEqs", &field));
    out.push_str(&syntax.assign("F0", &polys(f0)));
    out.push_str(&syntax.assign("F1", &polys(f1)));
    out
}
