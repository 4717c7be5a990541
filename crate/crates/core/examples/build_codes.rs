//! Builds both code families and prints their generators and logical operators.
use aqc_codes::codes::verify_code;
use aqc_codes::{build_6k2k2, build_gottesman, Result};

fn main() -> Result<()> {
    for code in [build_6k2k2(1)?, build_6k2k2(2)?, build_gottesman(2)?] {
        println!("[[{}, {}]] css={}", code.n, code.k, code.css);
        for g in &code.generators {
            println!("  S  {g}");
        }
        for (x, z) in code.logical_x.iter().zip(&code.logical_z) {
            println!("  X̄ {x}   Z̄ {z}");
        }
        println!("  all checks pass: {}", verify_code(&code).all_passed);
    }
    println!("{}", build_6k2k2(1)?.to_json_string()?);
    Ok(())
}
