// Check certificates from scratch, including hand-written bad ones.
//
// cargo run --example verify_certificate

use std::error::Error;

use rainbow_cycle::document::CertificateDocument;
use rainbow_cycle::{solve, verify_assignment, Instance};

pub fn run() -> Result<(), Box<dyn Error>> {
    let inst = Instance::from_labels(5, &[[1, 3], [1, 4]])?;
    let good = CertificateDocument::from(&solve(&inst)?);

    let candidates = [
        ("solver output", good.assignment.clone()),
        ("repeated vertex", vec![(1, 1), (2, 1)]),
        ("adjacent pair", vec![(1, 3), (2, 4)]),
        ("wrong set", vec![(1, 4), (2, 1)]),
        ("missing set", vec![(1, 1)]),
    ];
    for (name, assignment) in candidates {
        let doc = CertificateDocument {
            assignment,
            trace: None,
        };
        let verdict = doc
            .pairs(&inst)
            .and_then(|pairs| verify_assignment(&inst, &pairs));
        match verdict {
            Ok(()) => println!("{name:>16}: accepted"),
            Err(rejection) => println!("{name:>16}: rejected ({}) {rejection}", rejection.code()),
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
