// Walk one family through normalization and every admissible shift, showing
// which case each shift falls in and the window it produces.
//
// cargo run --example shift_cases

use std::error::Error;

use rainbow_cycle::{
    admissible_shifts, choose_k, classify_shift, construct_assignment, normalize, Arc, CycleContext,
};

pub fn run() -> Result<(), Box<dyn Error>> {
    let s = 4;
    let ctx = CycleContext::odd(s)?;
    let arcs = [7, 3, 9, 4]
        .iter()
        .map(|&a| Arc::new(ctx, ctx.vertex_from_label(a)?, s))
        .collect::<Result<Vec<_>, _>>()?;

    let norm = normalize(&arcs)?;
    println!(
        "starts {:?} rotated by {} and sorted: {:?} (family order {:?})",
        arcs.iter().map(|a| a.start().label()).collect::<Vec<_>>(),
        norm.rotation,
        norm.starts,
        norm.permutation.iter().map(|p| p + 1).collect::<Vec<_>>()
    );
    println!("forbidden residues: {:?}", norm.forbidden_residues());
    println!("smallest shift: {:?}", choose_k(&norm)?);
    for k in admissible_shifts(&norm) {
        let choice = classify_shift(&norm, k)?;
        let window = construct_assignment(&norm, &choice)?;
        println!(
            "k = {k}: case {}, r = {}, vertices {:?}",
            choice.case.number(),
            choice.r,
            window.iter().map(|v| v.label()).collect::<Vec<_>>()
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
