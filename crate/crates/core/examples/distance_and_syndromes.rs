//! Distance by enumeration, plus syndromes of a few single- and two-qubit errors.
use aqc_codes::codes::{self, qubit, Role};
use aqc_codes::{build_6k2k2, PauliString, Result};

fn main() -> Result<()> {
    let code = build_6k2k2(2)?;
    let report = codes::distance(&code, 3, codes::DEFAULT_ENUMERATION_BUDGET)?;
    println!(
        "distance {:?} after {} operators, witness {}",
        report.distance,
        report.operators_checked,
        report.witness.map(|w| w.to_string()).unwrap_or_default()
    );
    println!("every weight-one error detected: {}", codes::detects_all_weight_one(&code));

    let errors = [
        PauliString::x_on(code.n, &[qubit(1, Role::X)]),
        PauliString::z_on(code.n, &[qubit(3, Role::Zero)]),
        "IIIIYIIIIIII".parse()?,
        PauliString::x_on(code.n, &[qubit(1, Role::Zero), qubit(2, Role::Zero)]),
    ];
    for e in &errors {
        let s = codes::syndrome(&code, e)?;
        let kind = if !s.is_trivial() {
            "detected"
        } else if code.in_stabilizer_group(e)? {
            "harmless"
        } else {
            "logical"
        };
        println!("{e}  syndrome {s}  {kind}");
    }
    Ok(())
}
