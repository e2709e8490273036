//! Graded dimensions of the lower central series Lie algebras.

use raag_paut::lie::{eliminate_linear, graded_dims, lie_presentation, LieVariant};
use raag_paut::series::pbw_hilbert;
use raag_paut::Graph;

fn main() -> raag_paut::Result<()> {
    let degree = 4;
    let graphs = [
        ("discrete 3", Graph::discrete(3)),
        ("path 4", Graph::path(4)),
        ("star 3", Graph::star_graph(3)),
        ("discrete 4", Graph::discrete(4)),
    ];
    println!("{:<12} {:<8} dims / PBW series", "graph", "variant");
    for (label, g) in &graphs {
        for (name, variant) in [("paut", LieVariant::PAut), ("pout", LieVariant::POut), ("raag", LieVariant::Raag)] {
            let l = eliminate_linear(&lie_presentation(g, &variant)?)?;
            let d = graded_dims(&l, degree)?;
            println!("{label:<12} {name:<8} {d} / {}", pbw_hilbert(&d, degree)?);
        }
    }
    Ok(())
}
