//! Infidelity of finite-width decoupling pulses versus pulse duration and count.
use aqc_codes::cli::{dd_experiment, DEFAULT_NDS, DEFAULT_TAUS};
use aqc_codes::Result;

fn main() -> Result<()> {
    let ex = dd_experiment(1, &DEFAULT_TAUS, &DEFAULT_NDS, 3)?;
    println!("‖H‖ = {:.4}", ex.norm);
    println!("{:>9} {:>4} {:>12} {:>12}", "tau", "N_D", "infidelity", "bound²");
    for r in &ex.records {
        println!("{:>9} {:>4} {:>12.3e} {:>12.3e}", r.tau, r.n_d, r.infidelity, r.bound * r.bound);
    }
    for (n_d, f) in &ex.tau_fits {
        println!("N_D={n_d:<3} slope in tau {:.3} (r² {:.5})", f.slope, f.r2);
    }
    for (tau, f) in &ex.nd_fits {
        println!("tau={tau:<8} slope in N_D {:.3} (r² {:.5})", f.slope, f.r2);
    }
    println!("largest infidelity / bound² = {:.3}", ex.max_bound_ratio);
    Ok(())
}
