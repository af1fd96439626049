//! Vacuum polarization by direct summation against the Uehling result.
//! Pass `paper` for the fine grid (slower). The sum also carries O(α³)
//! pieces that the Uehling density lacks; `rel_o3` removes them.

use diracsea::figures::o3_shift;
use diracsea::report::vpsum_table;
use diracsea::seasum::{run_vp, VPConfig};

fn main() -> diracsea::Result<()> {
    let mut cfg = match std::env::args().nth(1).as_deref() {
        Some("paper") => VPConfig::paper(),
        _ => VPConfig::desk(),
    };
    if cfg.r_list.len() > 1 {
        cfg.r_list = vec![0.05, 0.2, 1.0];
    }
    let rows = run_vp(&cfg)?;
    for row in &rows {
        println!(
            "r = {:5.2}  v_sum = {:+.8e}  uehling = {:+.8e}  rel = {:+.2e}  rel_o3 = {:+.2e}  err = {:.1e}",
            row.r,
            row.v_sum,
            row.v_uehling,
            row.rel_diff,
            (row.v_sum + o3_shift(row.r, cfg.alpha) - row.v_uehling) / row.v_uehling.abs(),
            row.err_est
        );
    }
    vpsum_table(&rows, false).write_csv(std::io::stdout())
}
