use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

macro_rules! commands {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Every request kind understood by [`crate::run`].
        #[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
        pub enum Command {
            $($variant),*
        }

        impl Command {
            pub const ALL: &'static [Command] = &[$(Command::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Command::$variant => $name),*
                }
            }
        }

        impl FromStr for Command {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                match s {
                    $($name => Ok(Command::$variant),)*
                    other => Err(format!("unknown command {other:?}")),
                }
            }
        }
    };
}

commands! {
    BundleInfo => "bundle-info",
    H0 => "h0",
    H1 => "h1",
    ComplexDims => "complex-dims",
    Picard => "picard",
    SmoothCheck => "smooth-check",
    Torsion => "torsion",
    BunpDim => "bunp-dim",
    LaumonDim => "laumon-dim",
    BungDim => "bung-dim",
    RelposDim => "relpos-dim",
    WeylReps => "weyl-reps",
    WeylBruhat => "weyl-bruhat",
    WeylMatrix => "weyl-matrix",
    PolygonDominates => "polygon-dominates",
    Selftest => "selftest",
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Request {
    pub command: Command,
    pub payload: Value,
}

impl Request {
    pub fn new(command: Command, payload: Value) -> Self {
        Request { command, payload }
    }

    /// Parses `{"command": …, "payload": …}`. A missing payload is `null`.
    pub fn from_json(text: &str) -> Result<Request, ErrorBody> {
        let value: Value = serde_json::from_str(text).map_err(|e| ErrorBody::parse(e.to_string(), None))?;
        let Value::Object(mut obj) = value else {
            return Err(ErrorBody::parse("request must be a JSON object".into(), None));
        };
        let command = match obj.remove("command") {
            Some(Value::String(s)) => s
                .parse::<Command>()
                .map_err(|e| ErrorBody::parse(e, Some("command".into())))?,
            Some(_) => return Err(ErrorBody::parse("command must be a string".into(), Some("command".into()))),
            None => return Err(ErrorBody::parse("missing field `command`".into(), None)),
        };
        let payload = obj.remove("payload").unwrap_or(Value::Null);
        if let Some(extra) = obj.keys().next() {
            return Err(ErrorBody::parse(format!("unknown field `{extra}`"), None));
        }
        Ok(Request { command, payload })
    }
}

/// Error codes double as process exit codes.
pub const DOMAIN_ERROR: u8 = 1;
pub const PARSE_ERROR: u8 = 2;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ErrorBody {
    pub code: u8,
    pub location: Option<String>,
    pub message: String,
}

impl ErrorBody {
    pub fn parse(message: String, location: Option<String>) -> Self {
        ErrorBody { code: PARSE_ERROR, location, message }
    }

    pub fn domain(message: String, location: Option<String>) -> Self {
        ErrorBody { code: DOMAIN_ERROR, location, message }
    }

    pub fn at_line(mut self, line: usize) -> Self {
        self.location = Some(match self.location {
            Some(loc) => format!("line {line}: {loc}"),
            None => format!("line {line}"),
        });
        self
    }
}

/// `{"ok":true,"result":…}` or `{"ok":false,"error":{…}}`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Response {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorBody>,
}

impl Response {
    pub fn success(result: Value) -> Self {
        Response { ok: true, result: Some(result), error: None }
    }

    pub fn failure(error: ErrorBody) -> Self {
        Response { ok: false, result: None, error: Some(error) }
    }

    pub fn exit_code(&self) -> u8 {
        self.error.as_ref().map_or(0, |e| e.code)
    }

    pub fn to_json(&self, pretty: bool) -> String {
        let out = if pretty { serde_json::to_string_pretty(self) } else { serde_json::to_string(self) };
        out.expect("responses contain only JSON-representable values")
    }
}
