//! Write the data of all ten figures as CSV files.

use std::path::PathBuf;

use diracsea::figures::all_figures;
use diracsea::seasum::VPConfig;

fn main() -> diracsea::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("diracsea-figures"));
    let mut cfg = VPConfig::desk();
    cfg.r_list = vec![0.02, 0.05, 0.1, 0.2, 0.5, 1.0];
    for t in all_figures(&cfg, 0.5)? {
        let path = t.save(&dir)?;
        println!("{:<6} {:>5} rows  {}", t.name, t.rows.len(), path.display());
    }
    Ok(())
}
