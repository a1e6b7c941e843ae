// Cross-check the constructive solver against backtracking search on random families.
//
// cargo run --example brute_force_oracle

use std::error::Error;

use rainbow_cycle::oracle::{brute_force_rainbow, enumerate_independent_sets};
use rainbow_cycle::{solve, verify_assignment, verify_certificate, CycleContext, Instance};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn run() -> Result<(), Box<dyn Error>> {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..10 {
        let s = rng.gen_range(2..=6);
        let ctx = CycleContext::odd(s)?;
        let sets = enumerate_independent_sets(ctx, s)?;
        let family = (0..s)
            .map(|_| sets[rng.gen_range(0..sets.len())].clone())
            .collect();
        let inst = Instance::new(ctx, family)?;

        let cert = solve(&inst)?;
        verify_certificate(&inst, &cert).map_err(|r| r.to_string())?;
        let searched = brute_force_rainbow(inst.family(), s).ok_or("no rainbow set found")?;
        verify_assignment(&inst, &searched).map_err(|r| r.to_string())?;

        let labels = |vs: Vec<usize>| format!("{vs:?}");
        println!(
            "s={s}: solver {} / search {}",
            labels(cert.assignment.iter().map(|v| v.label()).collect()),
            labels(searched.iter().map(|(_, v)| v.label()).collect())
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
