//! Adiabatic cat-state preparation, doubling the anneal time until converged.
use aqc_codes::hamiltonians::CatBasis;
use aqc_codes::sim::prepare_cat_converged;
use aqc_codes::Result;

fn main() -> Result<()> {
    for basis in [CatBasis::Z, CatBasis::X] {
        println!("m=4 {basis:?} basis");
        for run in prepare_cat_converged(4, basis, 1.0, 20.0, 0.99, 12)? {
            println!(
                "  T={:<5} steps={:<4} overlap {:.5}  parity drift {:.1e}",
                run.total_time, run.steps, run.target_overlap, run.max_drift
            );
        }
    }
    Ok(())
}
