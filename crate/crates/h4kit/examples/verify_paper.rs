//! Replay every numeric claim of the paper against the exact solver and
//! print one line per check.  `PASS*` marks claims that only match under a
//! diagnosed misprint; the note under the line explains the diff.
//!
//! Run with `cargo run --release --example verify_paper`.

use h4kit::verify;

fn main() {
    let checks = verify::run_all();
    print!("{}", verify::render(&checks));
    if !verify::all_passed(&checks) {
        std::process::exit(1);
    }
}
