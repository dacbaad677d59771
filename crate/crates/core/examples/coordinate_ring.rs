//! Degree by degree, the coordinate ring of the tangential variety splits into
//! families S_λ. Their dimensions and the ideal add up to the symmetric power.
//!
//! ```text
//! cargo run --release --example coordinate_ring
//! ```

use tangential::tangent::{coordinate_dim, coordinate_families, family_classes, ideal_dimension, TensorSpaceSpec};

fn main() -> tangential::Result<()> {
    let spec = TensorSpaceSpec::new(vec![1, 1, 1], vec![2, 2, 2])?;
    println!("{spec}, ambient dimension {}", spec.ambient_dim());
    for r in 1..=4 {
        let families = coordinate_families(&spec, r);
        let ideal = ideal_dimension(&spec, r)?.dim();
        let ring = coordinate_dim(&spec, r);
        println!("\nr={r}: Sym^r {}, ideal {ideal}, ring {ring}", spec.sym_dim(r));
        for c in family_classes(&spec, &families) {
            println!("  {:?} x{}  dim {}", c.lambda, c.members, c.dim);
        }
        assert_eq!(ring + ideal as u128, spec.sym_dim(r));
    }

    // rational normal quartic
    let quartic = TensorSpaceSpec::new(vec![4], vec![2])?;
    for r in 1..=4 {
        let fams: Vec<_> = coordinate_families(&quartic, r).into_iter().map(|f| f.lambda[0].clone()).collect();
        println!("{quartic} r={r}: ideal {}, families {fams:?}", ideal_dimension(&quartic, r)?.dim());
    }
    Ok(())
}
