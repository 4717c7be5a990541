//! Reduces products of logical operators to their lightest representatives.
use aqc_codes::codes::reduce_logical;
use aqc_codes::{build_6k2k2, Result};

fn main() -> Result<()> {
    let code = build_6k2k2(2)?;
    for i in 0..code.k {
        for j in i + 1..code.k {
            for (name, ops) in [("X", &code.logical_x), ("Z", &code.logical_z)] {
                let product = ops[i].multiply(&ops[j])?;
                let light = reduce_logical(&code, &product)?;
                let quotient = light.multiply(&product)?;
                let factors = code.stabilizer_decomposition(&quotient)?.unwrap_or_default();
                println!(
                    "{name}̄{}{name}̄{}  {product} (w{}) -> {light} (w{})  via generators {factors:?}",
                    i + 1,
                    j + 1,
                    product.weight(),
                    light.weight()
                );
            }
        }
    }
    Ok(())
}
