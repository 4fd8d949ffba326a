//! The `simrect` command line.
//!
//! ```text
//! simrect decide <R> | --poly c0,c1,...
//! simrect construct <R> [-o FILE] [--cf]
//! simrect verify <FILE>
//! simrect resistance <FILE> [--network]
//! simrect certificate <FILE>
//! simrect svg <FILE> [--px N] [-o FILE]
//! ```
//!
//! `FILE` may be `-` for standard input. `--approx` adds 15-digit decimal
//! approximations next to exact numbers.
//!
//! Exit codes: 0 success (or tiling possible), 1 tiling impossible, 2 usage
//! or parse error, 3 the input is not a valid similar tiling.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::circuit::{certificate, network_from_dissection, solve, CircuitError};
use crate::construct::{cf_tiling, decide, find_cf, tiling_for, DecideInput, Decision, Witness};
use crate::dissection::{read_dissection, to_svg, write_dissection, Dissection};
use crate::exactnum::{parse_number, QuadExt};
use crate::polystab::IntPoly;

const APPROX_DIGITS: usize = 15;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IMPOSSIBLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "simrect", version, about = "Tile a square with similar rectangles, exactly")]
struct Cli {
    /// Print decimal approximations alongside exact values
    #[arg(long, global = true)]
    approx: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a square can be cut into rectangles of ratio R
    Decide {
        /// Ratio such as 3/2 or 2+1*sqrt(2)
        #[arg(allow_hyphen_values = true, required_unless_present = "poly")]
        ratio: Option<String>,
        /// Integer polynomial of R, coefficients lowest degree first
        #[arg(long, allow_hyphen_values = true, conflicts_with = "ratio")]
        poly: Option<String>,
    },
    /// Build a tiling for ratio R
    Construct {
        #[arg(allow_hyphen_values = true)]
        ratio: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// Use the alternating-cut construction
        #[arg(long)]
        cf: bool,
    },
    /// Check that a tiling file is a tiling by similar rectangles
    Verify { file: PathBuf },
    /// Resistance of the tiling's network
    Resistance {
        file: PathBuf,
        /// Also dump the network
        #[arg(long)]
        network: bool,
    },
    /// Integer polynomial vanishing at the tiling's ratio
    Certificate { file: PathBuf },
    /// Render a tiling as SVG
    Svg {
        file: PathBuf,
        #[arg(long, default_value_t = 400)]
        px: u32,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Output {
        Output { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: impl std::fmt::Display) -> Output {
        Output { code, stdout: String::new(), stderr: format!("error: {stderr}\n") }
    }
}

struct Ctx<'a> {
    approx: bool,
    stdin: &'a mut dyn Read,
}

impl Ctx<'_> {
    fn number(&self, x: &QuadExt) -> String {
        if self.approx {
            format!("{x} approx={}", x.approx(APPROX_DIGITS))
        } else {
            x.to_string()
        }
    }

    fn read_text(&mut self, path: &Path) -> Result<String, Output> {
        if path == Path::new("-") {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Output::fail(EXIT_USAGE, format!("stdin: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| Output::fail(EXIT_USAGE, format!("{}: {e}", path.display())))
        }
    }

    fn read_tiling(&mut self, path: &Path) -> Result<Dissection, Output> {
        let text = self.read_text(path)?;
        read_dissection(&text).map_err(|e| Output::fail(EXIT_USAGE, format!("{}: {e}", path.display())))
    }
}

fn write_or_print(output: Option<&Path>, text: String, summary: String) -> Output {
    match output {
        None => Output::ok(text),
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => Output::ok(summary),
            Err(e) => Output::fail(EXIT_USAGE, format!("{}: {e}", path.display())),
        },
    }
}

fn parse_ratio(s: &str) -> Result<QuadExt, Output> {
    parse_number(s).map_err(|e| Output::fail(EXIT_USAGE, format!("{s:?}: {e}")))
}

fn cmd_decide(ctx: &Ctx<'_>, ratio: Option<String>, poly: Option<String>) -> Output {
    let input = match (ratio, poly) {
        (Some(r), None) => match parse_ratio(&r) {
            Ok(x) => DecideInput::Number(x),
            Err(o) => return o,
        },
        (None, Some(p)) => match p.parse::<IntPoly>() {
            Ok(p) => DecideInput::Polynomial(p),
            Err(e) => return Output::fail(EXIT_USAGE, e),
        },
        _ => return Output::fail(EXIT_USAGE, "give exactly one of <R> and --poly"),
    };
    let decision = match decide(&input) {
        Ok(d) => d,
        Err(e) => return Output::fail(EXIT_USAGE, e),
    };
    report_decision(ctx, &decision)
}

fn report_decision(ctx: &Ctx<'_>, decision: &Decision) -> Output {
    match decision {
        Decision::Possible(d) => {
            let ratio = d.similarity().map(|r| r.ratio).expect("constructed tilings are similar");
            Output::ok(format!("{decision}\nratio={}\n", ctx.number(&ratio)))
        }
        Decision::Impossible(Witness::NonPositive(w)) => Output {
            code: EXIT_IMPOSSIBLE,
            stdout: format!("IMPOSSIBLE witness={}\n", ctx.number(w)),
            stderr: String::new(),
        },
        Decision::Impossible(_) => {
            Output { code: EXIT_IMPOSSIBLE, stdout: format!("{decision}\n"), stderr: String::new() }
        }
        Decision::Undecided { .. } => Output::ok(format!("{decision}\n")),
    }
}

fn cmd_construct(ctx: &Ctx<'_>, ratio: &str, output: Option<&Path>, cf: bool) -> Output {
    let x = match parse_ratio(ratio) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let decision = match decide(&DecideInput::Number(x.clone())) {
        Ok(d) => d,
        Err(e) => return Output::fail(EXIT_USAGE, e),
    };
    if !matches!(decision, Decision::Possible(_)) {
        return report_decision(ctx, &decision);
    }
    let built = if cf {
        find_cf(&x).and_then(|e| cf_tiling(&x, &e))
    } else {
        tiling_for(&x)
    };
    let tiling = match built {
        Ok(t) => t,
        Err(e) => return Output::fail(EXIT_USAGE, e),
    };
    let summary = format!("POSSIBLE {}\n", tiling.parts().len());
    write_or_print(output, write_dissection(&tiling), summary)
}

fn checked_tiling(ctx: &mut Ctx<'_>, file: &Path) -> Result<(Dissection, QuadExt), Output> {
    let d = ctx.read_tiling(file)?;
    if let Err(v) = d.validate() {
        return Err(Output { code: EXIT_INVALID, stdout: format!("INVALID {v}\n"), stderr: String::new() });
    }
    match d.similarity() {
        Ok(rep) => Ok((d, rep.ratio)),
        Err(e) => Err(Output { code: EXIT_INVALID, stdout: format!("NOT-SIMILAR {e}\n"), stderr: String::new() }),
    }
}

fn cmd_verify(ctx: &mut Ctx<'_>, file: &Path) -> Output {
    match checked_tiling(ctx, file) {
        Ok((d, ratio)) => Output::ok(format!("OK ratio={} parts={}\n", ctx.number(&ratio), d.parts().len())),
        Err(o) => o,
    }
}

fn cmd_resistance(ctx: &mut Ctx<'_>, file: &Path, dump: bool) -> Output {
    let d = match ctx.read_tiling(file) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let net = match network_from_dissection(&d) {
        Ok(n) => n,
        Err(CircuitError::Invalid(v)) => {
            return Output { code: EXIT_INVALID, stdout: format!("INVALID {v}\n"), stderr: String::new() }
        }
        Err(e) => return Output::fail(EXIT_INVALID, e),
    };
    let sol = match solve(&net) {
        Ok(s) => s,
        Err(e) => return Output::fail(EXIT_INVALID, e),
    };
    let mut out = if dump { net.to_string() } else { String::new() };
    out.push_str(&format!("resistance={}\n", ctx.number(&sol.resistance)));
    Output::ok(out)
}

fn cmd_certificate(ctx: &mut Ctx<'_>, file: &Path) -> Output {
    let (d, _) = match checked_tiling(ctx, file) {
        Ok(v) => v,
        Err(o) => return o,
    };
    match certificate(&d) {
        Ok(p) => Output::ok(format!("certificate={p}\ncoefficients={}\n", p.to_coeff_list())),
        Err(e) => Output::fail(EXIT_INVALID, e),
    }
}

fn cmd_svg(ctx: &mut Ctx<'_>, file: &Path, px: u32, output: Option<&Path>) -> Output {
    if px == 0 {
        return Output::fail(EXIT_USAGE, "--px must be positive");
    }
    let d = match ctx.read_tiling(file) {
        Ok(d) => d,
        Err(o) => return o,
    };
    if let Err(v) = d.validate() {
        return Output { code: EXIT_INVALID, stdout: format!("INVALID {v}\n"), stderr: String::new() };
    }
    let summary = format!("wrote {} rects\n", d.parts().len());
    write_or_print(output, to_svg(&d, px), summary)
}

/// Runs one command. `argv[0]` is the program name.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output::ok(text)
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut ctx = Ctx { approx: cli.approx, stdin };
    match cli.command {
        Command::Decide { ratio, poly } => cmd_decide(&ctx, ratio, poly),
        Command::Construct { ratio, output, cf } => cmd_construct(&ctx, &ratio, output.as_deref(), cf),
        Command::Verify { file } => cmd_verify(&mut ctx, &file),
        Command::Resistance { file, network } => cmd_resistance(&mut ctx, &file, network),
        Command::Certificate { file } => cmd_certificate(&mut ctx, &file),
        Command::Svg { file, px, output } => cmd_svg(&mut ctx, &file, px, output.as_deref()),
    }
}
