use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::Parser;
use ffcalc_cli::{process_batch, run, Command, ErrorBody, Request, Response};
use serde_json::Value;

/// Exact slope calculus on the Fargues-Fontaine curve.
///
/// With no COMMAND, reads one JSON request per line on stdin and writes one
/// JSON response per line on stdout. With a COMMAND, evaluates the single
/// request given by COMMAND and PAYLOAD.
#[derive(Parser, Debug)]
#[command(name = "ffcalc", version)]
struct Cli {
    /// Command name, e.g. `h0` or `bunp-dim`.
    command: Option<String>,
    /// Payload as a JSON document; defaults to `{}`.
    payload: Option<String>,
    /// Random seed for `selftest`.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of cases per suite for `selftest`.
    #[arg(long)]
    budget: Option<u64>,
    /// Indent JSON output.
    #[arg(long)]
    pretty: bool,
}

fn single(cli: &Cli, name: &str) -> Response {
    let command = match name.parse::<Command>() {
        Ok(c) => c,
        Err(e) => return Response::failure(ErrorBody::parse(e, Some("command".into()))),
    };
    let mut payload = match cli.payload.as_deref().map(serde_json::from_str::<Value>) {
        None => Value::Null,
        Some(Ok(v)) => v,
        Some(Err(e)) => return Response::failure(ErrorBody::parse(e.to_string(), Some("payload".into()))),
    };
    if cli.seed.is_some() || cli.budget.is_some() {
        if command != Command::Selftest {
            let msg = "--seed and --budget apply only to selftest".to_string();
            return Response::failure(ErrorBody::parse(msg, None));
        }
        if payload.is_null() {
            payload = Value::Object(Default::default());
        }
        let Some(obj) = payload.as_object_mut() else {
            return Response::failure(ErrorBody::parse("payload must be an object".into(), Some("payload".into())));
        };
        if let Some(seed) = cli.seed {
            obj.insert("seed".into(), seed.into());
        }
        if let Some(budget) = cli.budget {
            obj.insert("budget".into(), budget.into());
        }
    }
    run(&Request::new(command, payload))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, code) = match &cli.command {
        Some(name) => {
            let r = single(&cli, name);
            (r.to_json(cli.pretty) + "\n", r.exit_code())
        }
        None if cli.seed.is_some() || cli.budget.is_some() => {
            let msg = "--seed and --budget apply only to selftest".to_string();
            let r = Response::failure(ErrorBody::parse(msg, None));
            (r.to_json(cli.pretty) + "\n", r.exit_code())
        }
        None => {
            let mut input = Vec::new();
            if let Err(e) = io::stdin().read_to_end(&mut input) {
                eprintln!("ffcalc: reading stdin: {e}");
                return ExitCode::from(2);
            }
            process_batch(&input, cli.pretty)
        }
    };
    let mut stdout = io::stdout().lock();
    if stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
