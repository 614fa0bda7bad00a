//! Command layer shared by the `surreal` binary and its REPL. Every command
//! parses its inputs, calls one library operation and prints the result.

use std::io::{BufRead, Write};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{Signed, Zero};

use crate::algebraic::{hensel_lift, odd_root_with_residual, sqrt_with_residual};
use crate::error::Error;
use crate::lattice::{abs, join, meet, prec_compare};
use crate::series::{divide_with_residual, inverse_with_residual, DoublureStream};
use crate::textio::{
    parse_number_with, parse_polynomial_with, print_number, print_polynomial_as, Env, Format,
    ParseError,
};
use crate::{Rational, RationalPolynomial, Surreal, SurrealPoly};

#[derive(Parser, Debug, Clone)]
#[command(
    name = "surreal",
    version,
    about = "Exact arithmetic on surreal normal forms",
    args_override_self = true
)]
pub struct Cli {
    /// Truncation order for series operations.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    pub order: u64,
    /// Isolation precision for real roots, as p/q.
    #[arg(long, global = true, default_value = "1/1000000", value_parser = parse_precision)]
    pub precision: Rational,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Canonical)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Canonical,
    Structured,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Canonical => Format::Canonical,
            OutputFormat::Structured => Format::Structured,
        }
    }
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Evaluate an expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Compare two numbers: LT, EQ or GT.
    Cmp {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Truncated inverse.
    Inv {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Truncated quotient a/b.
    Div {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Truncated square root.
    Sqrt {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Absolute value in the cone order.
    Abs {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Coefficient-wise maximum.
    Join {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Coefficient-wise minimum.
    Meet {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Cone comparison: succ, prec, equal or incomparable.
    Precmp {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Liminal rank.
    Rank {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Number of terms.
    Height {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Classification flags.
    Classify {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Lift the factorization Q·R of the real part of F.
    Hensel {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(allow_hyphen_values = true)]
        r: String,
    },
    /// Root of a monic odd-degree polynomial in x.
    Oddroot {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// First `order` sums of the given negative generators, decreasing.
    /// Options must come before the generators.
    Doublure {
        #[arg(required = true, allow_hyphen_values = true)]
        generators: Vec<String>,
    },
    /// Read commands from standard input.
    Repl,
}

fn parse_precision(s: &str) -> Result<Rational, String> {
    let p = Rational::from_str(s.trim()).map_err(|e| format!("invalid rational {s:?}: {e}"))?;
    if p.is_positive() {
        Ok(p)
    } else {
        Err("precision must be positive".to_string())
    }
}

/// A failed command: parse errors exit with 1, domain errors with 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Domain(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Domain(d) => CliError::Domain(d.to_string()),
            other => CliError::Parse(format!("parse error: {other}")),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// Options every command sees.
#[derive(Debug, Clone)]
pub struct Options {
    pub order: usize,
    pub precision: Rational,
    pub format: Format,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            order: 8,
            precision: parse_precision("1/1000000").expect("valid default"),
            format: Format::Canonical,
        }
    }
}

impl From<&Cli> for Options {
    fn from(cli: &Cli) -> Self {
        Options {
            order: usize::try_from(cli.order).unwrap_or(usize::MAX),
            precision: cli.precision.clone(),
            format: cli.format.into(),
        }
    }
}

fn residual_line(exponent: Option<&Surreal>, format: Format) -> String {
    let shown = exponent.map_or_else(|| "none".to_string(), |e| print_number(e, format));
    format!("# residual-leading-exponent: {shown}")
}

fn rational_poly(p: &SurrealPoly, text: &str) -> Result<RationalPolynomial, CliError> {
    let mut coeffs = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        if !c.classify().is_real {
            return Err(CliError::Parse(format!(
                "parse error: {text:?} must have rational coefficients"
            )));
        }
        coeffs.push(c.coefficient_at(&Surreal::zero()));
    }
    Ok(RationalPolynomial::new(coeffs))
}

/// Runs one non-interactive command and returns its output lines.
pub fn run(
    command: &Command,
    opts: &Options,
    env: &Env<Rational>,
) -> Result<Vec<String>, CliError> {
    let num = |s: &str| parse_number_with::<Rational>(s, env).map_err(CliError::from);
    let poly = |s: &str| parse_polynomial_with::<Rational>(s, "x", env).map_err(CliError::from);
    let show = |a: &Surreal| print_number(a, opts.format);
    let out = match command {
        Command::Eval { expr } => vec![show(&num(expr)?)],
        Command::Cmp { a, b } => {
            let (a, b) = (num(a)?, num(b)?);
            vec![match a.compare(&b) {
                std::cmp::Ordering::Less => "LT",
                std::cmp::Ordering::Equal => "EQ",
                std::cmp::Ordering::Greater => "GT",
            }
            .to_string()]
        }
        Command::Inv { a } => {
            let t = inverse_with_residual(&num(a)?, opts.order)?;
            vec![
                show(&t.value),
                residual_line(t.residual.leading_exponent(), opts.format),
            ]
        }
        Command::Div { a, b } => {
            let t = divide_with_residual(&num(a)?, &num(b)?, opts.order)?;
            vec![
                show(&t.value),
                residual_line(t.residual.leading_exponent(), opts.format),
            ]
        }
        Command::Sqrt { a } => {
            let t = sqrt_with_residual(&num(a)?, opts.order)?;
            vec![
                show(&t.value),
                residual_line(t.residual.leading_exponent(), opts.format),
            ]
        }
        Command::Abs { a } => vec![show(&abs(&num(a)?))],
        Command::Join { a, b } => vec![show(&join(&num(a)?, &num(b)?))],
        Command::Meet { a, b } => vec![show(&meet(&num(a)?, &num(b)?))],
        Command::Precmp { a, b } => vec![prec_compare(&num(a)?, &num(b)?).as_str().to_string()],
        Command::Rank { a } => vec![num(a)?.liminal_rank().to_string()],
        Command::Height { a } => vec![num(a)?.height().to_string()],
        Command::Classify { a } => {
            let c = num(a)?.classify();
            vec![format!(
                "is_zero={} is_real={} is_ordinal={} is_infinitesimal={} is_purely_infinite={}",
                c.is_zero, c.is_real, c.is_ordinal, c.is_infinitesimal, c.is_purely_infinite
            )]
        }
        Command::Hensel { f, q, r } => {
            let fp = poly(f)?;
            let qp = rational_poly(&poly(q)?, q)?;
            let rp = rational_poly(&poly(r)?, r)?;
            let lift = hensel_lift(&fp, &qp, &rp, opts.order)?;
            vec![
                print_polynomial_as(&lift.g, opts.format),
                print_polynomial_as(&lift.h, opts.format),
                residual_line(lift.residual.leading_exponent().as_ref(), opts.format),
            ]
        }
        Command::Oddroot { f } => {
            let r = odd_root_with_residual(&poly(f)?, opts.order, &opts.precision)?;
            vec![
                show(&r.root),
                residual_line(r.residual.leading_exponent(), opts.format),
            ]
        }
        Command::Doublure { generators } => {
            let gens = generators
                .iter()
                .map(|g| num(g))
                .collect::<Result<Vec<_>, _>>()?;
            DoublureStream::new(gens)?
                .take(opts.order)
                .map(|e| show(&e))
                .collect()
        }
        Command::Repl => {
            return Err(CliError::Domain("repl cannot be nested".to_string()));
        }
    };
    Ok(out)
}

/// Splits a REPL command line into words; double quotes group, `\"` and
/// `\\` escape inside quotes.
pub fn split_words(line: &str) -> Result<Vec<String>, String> {
    let mut words = Vec::new();
    let mut cur = String::new();
    let mut in_word = false;
    let mut chars = line.chars();
    while let Some(c) = chars.next() {
        match c {
            '"' => {
                in_word = true;
                loop {
                    match chars.next() {
                        Some('"') => break,
                        Some('\\') => match chars.next() {
                            Some(e) => cur.push(e),
                            None => return Err("unterminated quote".to_string()),
                        },
                        Some(ch) => cur.push(ch),
                        None => return Err("unterminated quote".to_string()),
                    }
                }
            }
            c if c.is_whitespace() => {
                if in_word {
                    words.push(std::mem::take(&mut cur));
                    in_word = false;
                }
            }
            c => {
                in_word = true;
                cur.push(c);
            }
        }
    }
    if in_word {
        words.push(cur);
    }
    Ok(words)
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && s != "w"
}

/// Line-oriented interpreter state.
pub struct Session {
    pub env: Env<Rational>,
    pub opts: Options,
}

/// What a single REPL line produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineOutcome {
    Output(Vec<String>),
    Error(String),
    Quit,
}

impl Session {
    pub fn new(opts: Options) -> Self {
        Session {
            env: Env::new(),
            opts,
        }
    }

    pub fn eval_line(&mut self, line: &str) -> LineOutcome {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            return LineOutcome::Output(Vec::new());
        }
        if line == ":quit" {
            return LineOutcome::Quit;
        }
        if let Some(rest) = line.strip_prefix(':') {
            return self.command(rest);
        }
        if let Some(rest) = line.strip_prefix("let ").map(str::trim_start) {
            let Some((name, expr)) = rest.split_once('=') else {
                return LineOutcome::Error("expected 'let <name> = <expr>'".to_string());
            };
            let name = name.trim();
            if !is_identifier(name) {
                return LineOutcome::Error(format!("invalid variable name {name:?}"));
            }
            return match parse_number_with(expr, &self.env) {
                Ok(v) => {
                    self.env.insert(name.to_string(), v);
                    LineOutcome::Output(Vec::new())
                }
                Err(e) => LineOutcome::Error(CliError::from(e).message().to_string()),
            };
        }
        match parse_number_with(line, &self.env) {
            Ok(v) => LineOutcome::Output(vec![print_number(&v, self.opts.format)]),
            Err(e) => LineOutcome::Error(CliError::from(e).message().to_string()),
        }
    }

    fn command(&self, rest: &str) -> LineOutcome {
        let words = match split_words(rest) {
            Ok(w) => w,
            Err(e) => return LineOutcome::Error(e),
        };
        let fmt = match self.opts.format {
            Format::Canonical => "canonical",
            Format::Structured => "structured",
        };
        let mut argv: Vec<String> = vec![
            "surreal".into(),
            "--order".into(),
            self.opts.order.to_string(),
            "--precision".into(),
            self.opts.precision.to_string(),
            "--format".into(),
            fmt.into(),
        ];
        argv.extend(words);
        let cli = match Cli::try_parse_from(argv) {
            Ok(c) => c,
            Err(e) => {
                let text = e.to_string();
                let first = text.lines().next().unwrap_or("invalid command");
                return LineOutcome::Error(first.trim_start_matches("error: ").to_string());
            }
        };
        match run(&cli.command, &Options::from(&cli), &self.env) {
            Ok(lines) => LineOutcome::Output(lines),
            Err(e) => LineOutcome::Error(e.message().to_string()),
        }
    }

    /// Processes `input` until end of stream or `:quit`. Errors go to
    /// `err` prefixed with `error: ` and never stop the loop.
    pub fn run_loop(
        &mut self,
        input: impl BufRead,
        out: &mut impl Write,
        err: &mut impl Write,
    ) -> std::io::Result<()> {
        for line in input.lines() {
            match self.eval_line(&line?) {
                LineOutcome::Output(lines) => {
                    for l in lines {
                        writeln!(out, "{l}")?;
                    }
                }
                LineOutcome::Error(m) => writeln!(err, "error: {m}")?,
                LineOutcome::Quit => break,
            }
        }
        out.flush()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Vec<String>, CliError> {
        let mut argv = vec!["surreal"];
        argv.extend_from_slice(args);
        let cli = Cli::try_parse_from(argv).unwrap();
        run(&cli.command, &Options::from(&cli), &Env::new())
    }

    #[test]
    fn spec_examples() {
        assert_eq!(run_args(&["eval", "(w+1)*(w-1)"]).unwrap(), ["w^{2} - 1"]);
        assert_eq!(
            run_args(&["inv", "1 - w^{-1}", "--order", "4"]).unwrap(),
            [
                "1 + w^{-1} + w^{-2} + w^{-3} + w^{-4}",
                "# residual-leading-exponent: -5"
            ]
        );
        assert_eq!(run_args(&["abs", "w - 1"]).unwrap(), ["w + 1"]);
    }

    #[test]
    fn error_classes() {
        assert_eq!(run_args(&["inv", "0"]).unwrap_err().exit_code(), 2);
        assert_eq!(run_args(&["sqrt", "-1"]).unwrap_err().exit_code(), 2);
        assert_eq!(run_args(&["eval", "w^{1"]).unwrap_err().exit_code(), 1);
        assert_eq!(run_args(&["eval", "1/0"]).unwrap_err().exit_code(), 1);
        assert_eq!(
            run_args(&["oddroot", "x^3 - 2"]).unwrap_err().exit_code(),
            2
        );
    }

    #[test]
    fn options_validated() {
        assert!(Cli::try_parse_from(["surreal", "inv", "1", "--order", "0"]).is_err());
        assert!(Cli::try_parse_from(["surreal", "--precision", "0", "inv", "1"]).is_err());
        assert!(Cli::try_parse_from(["surreal", "--precision", "-1/2", "inv", "1"]).is_err());
        let cli =
            Cli::try_parse_from(["surreal", "inv", "1", "--order", "3", "--order", "5"]).unwrap();
        assert_eq!(cli.order, 5);
        let cli = Cli::try_parse_from(["surreal", "sqrt", "-w", "--order", "2"]).unwrap();
        assert_eq!(cli.order, 2);
        assert!(matches!(cli.command, Command::Sqrt { ref a } if a == "-w"));
    }

    #[test]
    fn repl_examples() {
        let mut s = Session::new(Options::default());
        assert_eq!(s.eval_line("let a = w - 1"), LineOutcome::Output(vec![]));
        assert_eq!(s.eval_line("a + 1"), LineOutcome::Output(vec!["w".into()]));
        assert_eq!(
            s.eval_line(r#":cmp "w^{-1}" "1""#),
            LineOutcome::Output(vec!["LT".into()])
        );
        assert_eq!(
            s.eval_line(r#":rank "w^{w}""#),
            LineOutcome::Output(vec!["3".into()])
        );
        assert_eq!(
            s.eval_line(r#":abs "a""#),
            LineOutcome::Output(vec!["w + 1".into()])
        );
        assert!(matches!(s.eval_line("b + 1"), LineOutcome::Error(_)));
        assert!(matches!(s.eval_line(":inv 0"), LineOutcome::Error(_)));
        assert!(matches!(s.eval_line(":nope"), LineOutcome::Error(_)));
        assert!(matches!(s.eval_line("let w = 1"), LineOutcome::Error(_)));
        assert_eq!(s.eval_line(":quit"), LineOutcome::Quit);
    }

    #[test]
    fn repl_loop_continues_after_errors() {
        let input = "let a = w\n1/0\na*a\n:quit\n2\n";
        let (mut out, mut err) = (Vec::new(), Vec::new());
        Session::new(Options::default())
            .run_loop(input.as_bytes(), &mut out, &mut err)
            .unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "w^{2}\n");
        assert_eq!(String::from_utf8(err).unwrap().lines().count(), 1);
    }

    #[test]
    fn word_splitting() {
        assert_eq!(
            split_words(r#"cmp "w - 1"  3 "a\"b""#).unwrap(),
            ["cmp", "w - 1", "3", "a\"b"]
        );
        assert_eq!(split_words(r#"eval """#).unwrap(), ["eval", ""]);
        assert!(split_words(r#"eval "w"#).is_err());
    }
}
