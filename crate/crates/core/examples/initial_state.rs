//! Initial state of the k=1 code: analytic construction, stabilizer checks, and the
//! same state assembled from adiabatically prepared cat and Bell factors.
use aqc_codes::hamiltonians::{initial_hamiltonian, CatBasis};
use aqc_codes::sim::{self, states};
use aqc_codes::{build_6k2k2, Result};

fn main() -> Result<()> {
    let k = 1;
    let code = build_6k2k2(k)?;
    let psi = sim::build_initial_state(k)?;
    for op in states::initial_state_stabilizers(k)? {
        println!("{op}  deviation {:.1e}", states::stabilizer_deviation(&psi, &op)?);
    }
    let spectrum = states::codespace_spectrum(&initial_hamiltonian(k)?, &code)?;
    println!("codespace energies {:?}", spectrum.energies);
    println!("ground multiplicity {}, gap {:?}", spectrum.ground_multiplicity, spectrum.gap);

    let prepare = |m, basis| sim::prepare_cat_converged(m, basis, 1.0, 20.0, 0.999, 12).map(|r| r.last().unwrap().state.clone());
    let annealed = states::assemble_initial_state(k, prepare(2, CatBasis::X)?, prepare(2, CatBasis::Z)?, prepare(2, CatBasis::Z)?)?;
    println!("annealed vs analytic overlap {:.6}", annealed.overlap(&psi)?);
    Ok(())
}
