// Brute-force evidence that s independent s-sets of C_t always admit a
// rainbow independent s-set when 2s < t.
//
// cargo run --release --example conjecture_scan -- 11 4

use std::error::Error;

use rainbow_cycle::oracle::conjecture_scan;

pub fn run_pairs(pairs: &[(usize, usize)]) -> Result<(), Box<dyn Error>> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    for &(t, s) in pairs {
        let report = conjecture_scan(t, s, workers)?;
        println!(
            "C_{t}, s = {s}: {} families, {} without a rainbow set ({:.2?})",
            report.families,
            report.failures.len(),
            report.elapsed
        );
        for failure in &report.failures {
            println!("  counterexample: {:?}", failure.sets);
        }
    }
    Ok(())
}

pub fn run() -> Result<(), Box<dyn Error>> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    match args[..] {
        [t, s] => run_pairs(&[(t, s)]),
        _ => run_pairs(&[(7, 2), (7, 3), (9, 3), (9, 4), (11, 5)]),
    }
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
