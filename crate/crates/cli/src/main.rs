//! `qcprod`: quasi-cyclic product code constructions from the command line.
//!
//! Exit codes: 0 success, 1 usage, 2 input parse, 3 precondition or failed
//! verification, 4 golden mismatch. Errors go to stderr as one JSON object.

mod commands;
mod golden;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "qcprod",
    version,
    about = "Quasi-cyclic product codes over finite fields"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, short, value_enum, default_value_t = Format::Pretty, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// q-cyclotomic cosets modulo m.
    Cosets { q: u64, m: u64 },
    /// Factor X^m - 1 over GF(q) into minimal polynomials.
    Factor {
        q: u64,
        m: u64,
        /// Modulus of GF(q) over its prime field, e.g. "X^2+X+1".
        #[arg(long)]
        modulus: Option<String>,
    },
    /// Minimal polynomial m_i of X^m - 1 over GF(q).
    Minpoly {
        q: u64,
        m: u64,
        i: u64,
        #[arg(long)]
        modulus: Option<String>,
    },
    /// Reduce a generating matrix to its RGB/POT basis.
    Reduce { basis: String },
    /// Product of a quasi-cyclic row code and a cyclic column code.
    Product {
        /// Basis document of the row code.
        a: String,
        /// Cyclic code document of the column code.
        b: String,
        /// Bezout coefficient a (defaults to the canonical pair; needs --bezout-b).
        #[arg(long, requires = "bezout_b", allow_hyphen_values = true)]
        bezout_a: Option<i64>,
        #[arg(long, requires = "bezout_a", allow_hyphen_values = true)]
        bezout_b: Option<i64>,
    },
    /// Table of the serialization map f(i, j).
    Maps {
        ell_a: usize,
        m_a: usize,
        m_b: usize,
        #[arg(long, requires = "bezout_b", allow_hyphen_values = true)]
        bezout_a: Option<i64>,
        #[arg(long, requires = "bezout_a", allow_hyphen_values = true)]
        bezout_b: Option<i64>,
    },
    /// Exact minimum distance by enumeration.
    Mindist {
        /// Basis document or cyclic code document.
        code: String,
        /// Largest number of messages to enumerate.
        #[arg(long, default_value_t = qcprod::oracle::DEFAULT_GUARD)]
        guard: u128,
        /// Worker threads (defaults to available parallelism).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Check RGB/POT conditions and quasi-cyclicity of a basis.
    Verify { basis: String },
    /// Rebuild the worked 2-quasi-cyclic example and compare with stored values.
    #[command(name = "example", visible_alias = "example-sec4")]
    Example,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => commands::EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.code)
        }
    }
}
