// The map j -> 2j - 1 on C_{2s+1} turns arcs of s consecutive vertices into
// independent s-sets, and every independent s-set arises this way.
//
// cargo run --example doubling_map -- 4

use std::error::Error;

use rainbow_cycle::oracle::enumerate_independent_sets;
use rainbow_cycle::{Arc, CycleContext, DoublingMap};

pub fn run_for(s: usize) -> Result<(), Box<dyn Error>> {
    let ctx = CycleContext::odd(s)?;
    let f = DoublingMap::new(ctx)?;
    println!("C_{}: doubling map", ctx.order());
    for j in ctx.vertices() {
        print!(" {}->{}", j, f.apply(j));
    }
    println!();
    for start in ctx.vertices() {
        let arc = Arc::new(ctx, start, s)?;
        let set = f.arc_to_independent_set(&arc)?;
        let back = f.independent_set_to_arc(&set)?;
        assert_eq!(back, arc);
        println!("arc from {start:>2}: {} -> {set}", arc.members());
    }
    let total = enumerate_independent_sets(ctx, s)?.len();
    println!("independent {s}-sets in C_{}: {total}", ctx.order());
    Ok(())
}

pub fn run() -> Result<(), Box<dyn Error>> {
    let s = std::env::args().nth(1).map_or(Ok(3), |a| a.parse())?;
    run_for(s)
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
