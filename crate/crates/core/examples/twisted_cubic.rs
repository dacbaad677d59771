//! The tangent developable of the twisted cubic is a quartic surface in P3.
//! Ideals of higher degree are multiples of it, and nothing new appears.

use tangential::exactalg::fmt_rat;
use tangential::tangent::{generated_in_degree, ideal_dimension, tangent_point, TangentPointInput, TensorSpaceSpec};
use tangential::exactalg::rat;

fn main() -> tangential::Result<()> {
    let spec = TensorSpaceSpec::new(vec![3], vec![2])?;

    // e = (1, 2), f = (3, -1): the point e³ + e²f in divided powers
    let p = TangentPointInput { e: vec![vec![rat(1, 1), rat(2, 1)]], f: vec![vec![rat(3, 1), rat(-1, 1)]] };
    let z = tangent_point(&p, &spec)?;
    let coords: Vec<String> = z.iter().map(fmt_rat).collect();
    println!("tangent point: [{}]", coords.join(", "));

    let quartic = ideal_dimension(&spec, 4)?;
    println!("quartic generator:");
    for (m, c) in quartic.kernel[0].named(&quartic.basis).0 {
        println!("  {:>4} {m}", fmt_rat(&c));
    }
    println!("value at the tangent point: {}", fmt_rat(&quartic.kernel[0].evaluate(&z)));

    let report = generated_in_degree(&spec, 5)?;
    println!("\n r  ideal  from lower  new");
    for row in &report.rows {
        println!("{:>2} {:>6} {:>11} {:>4}", row.r, row.ideal_dim, row.from_lower, row.new_generators);
    }
    println!("generators in degrees {:?}", report.generator_degrees());
    Ok(())
}
