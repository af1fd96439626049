//! Run acceptance criteria by number, e.g. `selftest 1 2 9`.

use diracsea::selftest::{run, Options, DESK_CRITERIA};

fn main() {
    let ids: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids = if ids.is_empty() { DESK_CRITERIA.to_vec() } else { ids };
    for o in run(&ids, &Options::default()) {
        println!("{}", o.line());
    }
}
