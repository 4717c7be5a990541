//! Build, encode, check graph properties, prepare the initial state and anneal
//! to an encoded two-qubit problem at k=1.
use aqc_codes::graphs::encoded_interaction_graph;
use aqc_codes::hamiltonians::{encode_hamiltonian, grid_problem, initial_hamiltonian, penalty_hamiltonian, AnnealSchedule};
use aqc_codes::sim::{self, Spectrum};
use aqc_codes::{build_6k2k2, Result};

fn main() -> Result<()> {
    let code = build_6k2k2(1)?;
    let problem = grid_problem(1, 2, 7)?;
    let penalty = penalty_hamiltonian(&code, 1.0)?;
    let target = encode_hamiltonian(&problem, &code)?.sum(&penalty)?;
    let start = initial_hamiltonian(1)?.sum(&penalty)?;
    let g = encoded_interaction_graph(&target, &code, true)?;
    println!("encoded graph: max degree {}, planar {}", g.max_degree(), g.is_planar());

    let psi0 = sim::build_initial_state(1)?;
    println!("initial energy {:.6}", psi0.energy(&start)?);
    let final_spectrum = Spectrum::of_hamiltonian(&target)?;
    for total_time in [5.0, 20.0, 80.0] {
        let schedule = AnnealSchedule::linear(total_time, start.clone(), target.clone())?;
        let trace = sim::anneal(&psi0, &schedule, (total_time * 20.0) as usize)?;
        println!(
            "T={total_time:<4} final energy {:.6}  ground energy {:.6}  ground overlap {:.5}",
            trace.state.energy(&target)?,
            final_spectrum.ground_energy(),
            final_spectrum.ground_overlap(&trace.state)
        );
    }
    Ok(())
}
