//! Encodes a random 4×4 grid problem and compares interaction degrees before and after.
use aqc_codes::graphs::{encoded_interaction_graph, interaction_graph};
use aqc_codes::hamiltonians::{commutation_audit, encode_hamiltonian, grid_problem};
use aqc_codes::{build_6k2k2, Result};

fn main() -> Result<()> {
    let problem = grid_problem(4, 4, 1)?;
    let code = build_6k2k2(8)?;
    let encoded = encode_hamiltonian(&problem, &code)?;
    let audit = commutation_audit(&encoded, &code)?;
    println!("{} logical terms -> {} physical terms on {} qubits", problem.len(), encoded.len(), encoded.num_qubits());
    println!("every encoded term commutes with every generator: {}", audit.passed);
    println!("max encoded term weight: {}", encoded.max_weight());

    let before = interaction_graph(&problem)?;
    let after = encoded_interaction_graph(&encoded, &code, false)?;
    let with_penalty = encoded_interaction_graph(&encoded, &code, true)?;
    println!("max degree: logical {}, encoded {}", before.max_degree(), after.max_degree());
    println!("planar: logical {}, encoded {}, with penalty edges {}", before.is_planar(), after.is_planar(), with_penalty.is_planar());
    for t in encoded.terms().iter().take(6) {
        println!("  {:+.4} {}", t.coeff, t.pauli);
    }
    Ok(())
}
