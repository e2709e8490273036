//! Decomposition of POut(A_Γ) into a subnormal series.

use raag_paut::day_wade::{decompose_pout, series_summary};
use raag_paut::Graph;

fn main() -> raag_paut::Result<()> {
    let graphs = [("discrete 3", Graph::discrete(3)), ("star 3", Graph::star_graph(3)), ("path 4", Graph::path(4))];
    for (label, g) in &graphs {
        let root = decompose_pout(g)?;
        println!("== {label}");
        print!("{}", root.render_text());
        print!("{}", series_summary(&root).render_text());
    }
    Ok(())
}
