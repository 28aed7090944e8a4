//! JSON front end for `ffcalc-core`: request decoding, dispatch, NDJSON batch
//! processing and the built-in cross-check suites.

pub mod batch;
pub mod dispatch;
pub mod limits;
pub mod request;
pub mod sample;
pub mod selftest;

pub use batch::{process_batch, read_requests};
pub use dispatch::run;
pub use request::{Command, ErrorBody, Request, Response};
pub use selftest::selftest;
