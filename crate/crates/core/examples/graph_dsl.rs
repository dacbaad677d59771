//! Colored multigraphs in the edge-list text format, their classification,
//! and the polynomial each one defines.

use tangential::graphs::{admissible_graphs, parse_graph, to_dsl};
use tangential::tangent::{graph_covariant_concrete, TensorSpaceSpec};

fn main() -> tangential::Result<()> {
    let d = [1, 1, 1];
    let spec = TensorSpaceSpec::new(d.to_vec(), vec![2, 2, 2])?;
    let texts = [
        "r=3; 1-2:c1; 2-3:c2; 3-1:c3;",
        "r=4; 1-2:c1; 3-4:c1; 1-2:c2; 3-4:c2; 1-3:c3; 2-4:c3;",
        "r=2; 1-2:c1; 1-2:c2;",
    ];
    for text in texts {
        let g = parse_graph(text, &d)?;
        let c = g.classify();
        let poly = graph_covariant_concrete(&g, &spec)?;
        println!("{}", to_dsl(&g));
        println!("  shape {}, rich {}, triangle {}, mcb {:?}, {} terms", g.shape(), c.rich, c.has_triangle, c.mcb, poly.terms.len());
    }

    match parse_graph("r=2; 1-2:c1; 1-3:c2;", &d) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(err) => println!("\nrejected: {err}"),
    }

    for r in 2..=4 {
        let all = admissible_graphs(r, &d, true);
        let rich = all.iter().filter(|g| g.classify().rich).count();
        println!("r={r}: {} graphs up to isomorphism, {rich} rich", all.len());
    }
    Ok(())
}
