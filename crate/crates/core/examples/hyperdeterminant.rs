//! The 2x2x2 hyperdeterminant is the only quartic vanishing on the tangential
//! variety of P1xP1xP1. It shows up three ways here: as the kernel of the
//! specialization maps, as a graph covariant, and by Cayley's formula.

use tangential::exactalg::{fmt_rat, int};
use tangential::generic::{FormalSum, TabloidFilling};
use tangential::graphs::ColoredGraph;
use tangential::tangent::{graph_covariant_concrete, ideal_dimension, vanishes_on_samples, ConcretePolynomial, TensorSpaceSpec};

// Terms of Cayley's formula, variables written by their indices.
const CAYLEY: [(i64, [&str; 4]); 12] = [
    (1, ["111", "111", "222", "222"]),
    (1, ["112", "112", "221", "221"]),
    (1, ["121", "121", "212", "212"]),
    (1, ["211", "211", "122", "122"]),
    (-2, ["111", "112", "221", "222"]),
    (-2, ["111", "121", "212", "222"]),
    (-2, ["111", "211", "122", "222"]),
    (-2, ["112", "121", "212", "221"]),
    (-2, ["112", "211", "122", "221"]),
    (-2, ["121", "211", "122", "212"]),
    (4, ["111", "122", "212", "221"]),
    (4, ["112", "121", "211", "222"]),
];

fn cayley(spec: &TensorSpaceSpec) -> ConcretePolynomial {
    let vars = spec.variables();
    let index = |s: &str| {
        let v: Vec<Vec<u8>> = s.bytes().map(|b| vec![b - b'1']).collect();
        vars.iter().position(|x| *x == v).unwrap() as u32
    };
    let mut terms = FormalSum::zero();
    for (c, m) in CAYLEY {
        let mut m: Vec<u32> = m.iter().map(|s| index(s)).collect();
        m.sort_unstable();
        terms.add_term(m, int(c));
    }
    ConcretePolynomial { r: 4, terms }
}

fn main() -> tangential::Result<()> {
    let spec = TensorSpaceSpec::new(vec![1, 1, 1], vec![2, 2, 2])?;
    let ideal = ideal_dimension(&spec, 4)?;
    println!("quartic equations: {}", ideal.dim());

    let t = TabloidFilling::parse(&[1, 1, 1], 4, "12/34 x 12/34 x 13/24")?;
    let g = ColoredGraph::from_tabloid(&t)?;
    let from_graph = graph_covariant_concrete(&g, &spec)?;
    let det = cayley(&spec);

    let ratio = from_graph.terms.ratio_to(&det.terms).expect("proportional");
    println!("graph covariant = {} * Cayley", fmt_rat(&ratio));
    let k = ideal.kernel[0].terms.ratio_to(&from_graph.terms).expect("same line");
    println!("kernel vector = {} * graph covariant", fmt_rat(&k));
    println!("Cayley vanishes on 200 tangent points: {}", vanishes_on_samples(&spec, &[det.clone()], 200, 11));

    println!("leading terms:");
    for (name, c) in det.named(&ideal.basis).0.iter().take(4) {
        println!("  {:>3} {name}", fmt_rat(c));
    }
    Ok(())
}
