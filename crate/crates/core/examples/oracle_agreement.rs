//! Two independent routes to the degree-r ideal: the kernel of the
//! specialization maps, and polynomials vanishing at random tangent points.
//! A certificate records both and can be replayed from its seed.

use tangential::tangent::{certify, ideal_dimension, oracle_kernel, same_span, TensorSpaceSpec};

fn main() -> tangential::Result<()> {
    let seed = 5;
    for (d, m, r) in [(vec![2], vec![2], 3), (vec![4], vec![2], 2), (vec![2, 1], vec![2, 2], 3), (vec![1, 1, 1], vec![2, 2, 2], 4)] {
        let spec = TensorSpaceSpec::new(d, m)?;
        let ideal = ideal_dimension(&spec, r)?;
        let oracle = oracle_kernel(&spec, r, seed)?;
        let agree = same_span(&ideal.basis, &ideal.kernel, &oracle.kernel)?;
        println!("{spec} r={r}: kernel {}, oracle {} from {} points, same span {agree}", ideal.dim(), oracle.dim(), oracle.samples);
    }

    let spec = TensorSpaceSpec::new(vec![3], vec![2])?;
    let cert = certify(&spec, 4, seed)?;
    println!("\n{}", serde_json::to_string_pretty(&cert).expect("serializable"));
    println!("passed: {}", cert.passed());
    Ok(())
}
