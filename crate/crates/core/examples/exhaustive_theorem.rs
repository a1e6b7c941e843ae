// Solve and verify every rotation-reduced family for s = 1..=max.
//
// cargo run --release --example exhaustive_theorem -- 6

use std::error::Error;

use rainbow_cycle::document::ScanReportDocument;
use rainbow_cycle::oracle::exhaustive_theorem_check;

pub fn run_up_to(max_s: usize) -> Result<(), Box<dyn Error>> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    for s in 1..=max_s {
        let report = exhaustive_theorem_check(s, workers)?;
        println!(
            "{}",
            serde_json::to_string(&ScanReportDocument::from(&report))?
        );
        if !report.is_clean() {
            return Err(format!("s = {s}: {} failures", report.failures.len()).into());
        }
    }
    Ok(())
}

pub fn run() -> Result<(), Box<dyn Error>> {
    let max_s = std::env::args().nth(1).map_or(Ok(4), |a| a.parse())?;
    run_up_to(max_s)
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
