//! Newline-delimited JSON batch processing.

use rayon::prelude::*;

use crate::dispatch::run;
use crate::request::{ErrorBody, Request, Response};

/// One nonempty input line: its 1-based number and the parsed request, or a
/// parse error already tagged with the line number.
pub type Parsed = (usize, Result<Request, ErrorBody>);

/// Splits `input` on `\n` (tolerating `\r\n`) and parses every line that is
/// not blank. Malformed lines, including invalid UTF-8, become errors; the
/// remaining lines are still parsed.
pub fn read_requests(input: &[u8]) -> Vec<Parsed> {
    input
        .split(|&b| b == b'\n')
        .enumerate()
        .filter(|(_, raw)| !raw.iter().all(u8::is_ascii_whitespace))
        .map(|(i, raw)| {
            let line = i + 1;
            let parsed = std::str::from_utf8(raw)
                .map_err(|e| ErrorBody::parse(format!("invalid UTF-8: {e}"), None))
                .and_then(|text| Request::from_json(text.trim_end_matches('\r')))
                .map_err(|e| e.at_line(line));
            (line, parsed)
        })
        .collect()
}

/// Evaluates a batch concurrently, keeping input order. Errors carry their
/// line number.
pub fn respond(parsed: Vec<Parsed>) -> Vec<Response> {
    parsed
        .into_par_iter()
        .map(|(line, p)| match p {
            Ok(request) => {
                let mut r = run(&request);
                r.error = r.error.map(|e| e.at_line(line));
                r
            }
            Err(e) => Response::failure(e),
        })
        .collect()
}

/// Output text (one response per line) and the process exit code, the
/// largest code of any response.
pub fn process_batch(input: &[u8], pretty: bool) -> (String, u8) {
    let responses = respond(read_requests(input));
    let code = responses.iter().map(Response::exit_code).max().unwrap_or(0);
    let mut out = String::new();
    for r in &responses {
        out.push_str(&r.to_json(pretty));
        out.push('\n');
    }
    (out, code)
}
