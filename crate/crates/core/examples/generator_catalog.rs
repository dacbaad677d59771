//! Generators of the ideal in degrees 2, 3 and 4, listed as tabloids.

use tangential::graphs::generators_catalog;

fn main() -> tangential::Result<()> {
    for d in [vec![1, 1, 1], vec![2, 1], vec![3], vec![1, 1, 1, 1]] {
        for degree in 2..=4 {
            let cat = generators_catalog(&d, degree)?;
            if cat.entries.is_empty() {
                continue;
            }
            println!("d={d:?} degree {degree}: {} generators", cat.generator_count());
            for entry in &cat.entries {
                let fillings: Vec<String> = entry.fillings.iter().map(|f| f.to_string()).collect();
                println!("  {} [{}] {}", entry.shape, entry.family, fillings.join(", "));
            }
        }
    }
    Ok(())
}
