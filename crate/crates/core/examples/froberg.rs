//! The RAAG enveloping algebra against the inverse clique polynomial.

use raag_paut::quad::froberg_check;
use raag_paut::Graph;

fn main() -> raag_paut::Result<()> {
    let graphs = [
        ("path 3", Graph::path(3)),
        ("4-cycle", Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?),
        ("complete 3", Graph::complete(3)),
        ("discrete 2", Graph::discrete(2)),
    ];
    for (label, g) in &graphs {
        let c = froberg_check(g, 6)?;
        println!("{label:<10} clique {:?}  U series {}  match {}", g.clique_polynomial(), c.lhs, c.pass);
    }
    Ok(())
}
