// Solve one instance and print the certificate with its derivation trace.
//
// cargo run --example solve_instance

use std::error::Error;

use rainbow_cycle::document::CertificateDocument;
use rainbow_cycle::{solve, verify_certificate, Instance};

pub fn run() -> Result<(), Box<dyn Error>> {
    // Four independent 4-sets of C_9.
    let inst = Instance::from_labels(9, &[[2, 4, 6, 8], [1, 3, 5, 7], [3, 5, 7, 9], [1, 4, 6, 8]])?;
    let cert = solve(&inst)?;

    for (set, vertex) in inst.family().iter().zip(&cert.assignment) {
        println!("{set:>12} -> {vertex}");
    }
    let trace = &cert.trace;
    println!(
        "rotation {}, k = {}, case {}, r = {}, window starts at {}",
        trace.rotation,
        trace.k,
        trace.case.number(),
        trace.r,
        trace.window_start
    );
    verify_certificate(&inst, &cert).map_err(|r| r.to_string())?;
    println!(
        "{}",
        serde_json::to_string(&CertificateDocument::from(&cert))?
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
