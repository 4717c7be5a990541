//! Removes unmatched XZ couplings by Hadamard-conjugating one side of a two-colouring.
use aqc_codes::codes::{self, verify_code};
use aqc_codes::graphs::{self, BipartitionResult};
use aqc_codes::{build_6k2k2, Result};

fn main() -> Result<()> {
    let code = build_6k2k2(1)?;
    let g = graphs::code_operator_graph(&code, true);
    println!("weight-two operator graph: {} vertices, types {:?}", g.num_vertices(), g.interaction_types());
    let BipartitionResult::Bipartite(sides) = g.bipartition() else {
        println!("odd cycle, no transform");
        return Ok(());
    };
    println!("sides {:?} | {:?}", sides.side_a, sides.side_b);

    let t = aqc_codes::cli::transform(&code)?;
    for (before, after) in code.generators.iter().zip(&t.generators) {
        println!("  {before} -> {after}");
    }
    let d = codes::distance(&t, 3, codes::DEFAULT_ENUMERATION_BUDGET)?;
    println!("transformed: checks pass {}, distance {:?}", verify_code(&t).all_passed, d.distance);
    println!("interaction types after: {:?}", graphs::code_operator_graph(&t, true).interaction_types());
    println!("applying twice restores the code: {}", graphs::hadamard_transform(&t, &sides)? == code);
    Ok(())
}
