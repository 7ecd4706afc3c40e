//! `gbchar`: Groebner bases, W-characteristic sets and normal decompositions
//! from the command line.

mod commands;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gbchar::parse::{parse_system, FieldSpec};
use serde_json::json;

use commands::{Command, Output, Settings};

#[derive(Parser, Debug)]
#[command(name = "gbchar", version, about = "Groebner bases and W-characteristic sets over exact fields")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Include certificates (cofactors, pseudo-remainder and resultant data).
    #[arg(long, global = true)]
    certificates: bool,

    /// Seed for sampled ideal elements.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Coefficient field, `q` or `fp:P`; overrides the file.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldSpec>,

    /// Node budget for decompositions.
    #[arg(long, global = true, default_value_t = 1000)]
    max_nodes: usize,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Reduced Groebner basis.
    Gb { file: PathBuf },
    /// W-characteristic set of the reduced basis.
    Wchar { file: PathBuf },
    /// Ascending, regular and normal classification of the W-characteristic set.
    Classify { file: PathBuf },
    /// Ritt characteristic set, or the irregularity report.
    Ritt { file: PathBuf },
    /// Decomposition into ideals with normal W-characteristic sets.
    Decompose {
        file: PathBuf,
        /// Keep splitting until every leaf basis equals its saturation.
        #[arg(long)]
        strong: bool,
    },
    /// Run every check end to end.
    Verify { file: PathBuf },
}

fn parse_field(text: &str) -> Result<FieldSpec, String> {
    FieldSpec::parse(text).map_err(|e| e.to_string())
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("gbchar: {msg}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, file) = match &cli.command {
        Cmd::Gb { file } => (Command::Gb, file),
        Cmd::Wchar { file } => (Command::Wchar, file),
        Cmd::Classify { file } => (Command::Classify, file),
        Cmd::Ritt { file } => (Command::Ritt, file),
        Cmd::Decompose { file, strong } => (Command::Decompose { strong: *strong }, file),
        Cmd::Verify { file } => (Command::Verify, file),
    };
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return fail(2, format_args!("{}: {e}", file.display())),
    };
    let system = match parse_system(&text) {
        Ok(s) => s,
        Err(e) => return fail(2, format_args!("{}: {e}", file.display())),
    };
    let settings = Settings { certificates: cli.certificates, seed: cli.seed, max_nodes: cli.max_nodes };
    let field = cli.field.unwrap_or(system.field);
    let output = match field.modulus() {
        None => commands::run(command, &system.generators, &settings),
        Some(Err(e)) => return fail(2, e),
        Some(Ok(m)) => match system.generators_mod(m) {
            Ok(gens) => commands::run(command, &gens, &settings),
            Err(e) => return fail(2, e),
        },
    };
    match output {
        Ok(out) => emit(&cli, &system.order.names().join(" < "), field, out),
        Err(e) => fail(1, e),
    }
}

fn emit(cli: &Cli, order: &str, field: FieldSpec, out: Output) -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    if cli.json {
        let mut doc = json!({ "order": order, "field": field.to_string() });
        if let (Some(target), serde_json::Value::Object(body)) = (doc.as_object_mut(), out.json) {
            target.extend(body);
        }
        let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&doc).expect("JSON values serialize"));
    } else {
        let _ = write!(stdout, "{}", out.text);
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
