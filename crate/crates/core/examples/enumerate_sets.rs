// List the independent m-sets of C_t and group them by rotation.
//
// cargo run --example enumerate_sets -- 9 3

use std::collections::BTreeMap;
use std::error::Error;

use rainbow_cycle::oracle::{canonical_rotation, enumerate_independent_sets};
use rainbow_cycle::CycleContext;

pub fn run_for(t: usize, m: usize) -> Result<(), Box<dyn Error>> {
    let sets = enumerate_independent_sets(CycleContext::new(t)?, m)?;
    let mut orbits: BTreeMap<Vec<usize>, Vec<String>> = BTreeMap::new();
    for set in &sets {
        orbits
            .entry(canonical_rotation(set).labels())
            .or_default()
            .push(set.to_string());
    }
    println!(
        "{} independent {m}-sets in C_{t}, {} rotation classes",
        sets.len(),
        orbits.len()
    );
    for (rep, members) in orbits {
        println!("{rep:?}: {}", members.join(" "));
    }
    Ok(())
}

pub fn run() -> Result<(), Box<dyn Error>> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    match args[..] {
        [t, m] => run_for(t, m),
        _ => run_for(9, 3),
    }
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
