//! One line per acceptance criterion. Criteria listed in `KNOWN_RED` are
//! run and reported but do not fail the target.

use diracsea::selftest::{run_criterion, Options, KNOWN_RED};

fn main() {
    let opts = Options::default();
    let mut unexpected = Vec::new();
    for id in 1..=10 {
        let o = run_criterion(id, &opts);
        let known = !o.passed && KNOWN_RED.contains(&id);
        println!("{}{}", o.line(), if known { "  [known red]" } else { "" });
        if !o.passed && !known {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("failed criteria: {unexpected:?}");
        std::process::exit(1);
    }
}
