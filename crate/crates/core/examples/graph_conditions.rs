//! SIL-pairs, component classes and condition (*) on a few small graphs.
//!
//! Run with `cargo run --example graph_conditions [graph-file]`.

use raag_paut::graph::{parse_graph, ComponentClass};
use raag_paut::Graph;

fn report(label: &str, g: &Graph) {
    println!("{label}: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    println!("  clique polynomial {:?}", g.clique_polynomial());
    for p in g.find_sil_pairs() {
        let shared: Vec<String> = p.shared.iter().map(|&s| g.format_set(s)).collect();
        println!("  SIL-pair ({}, {}) sharing {}", g.name(p.v), g.name(p.w), shared.join(" "));
    }
    let sc = g.check_star_condition();
    match sc.witness {
        None => println!("  condition (*) holds"),
        Some(w) => println!("  condition (*) fails at {}", w.map(|v| g.name(v).to_string()).join(",")),
    }
}

fn main() -> raag_paut::Result<()> {
    if let Some(path) = std::env::args().nth(1) {
        let src = std::fs::read_to_string(&path).map_err(|e| raag_paut::Error::Input(format!("{path}: {e}")))?;
        report(&path, &parse_graph(&src, None)?);
        return Ok(());
    }
    let path = Graph::from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c")])?;
    report("path a-b-c", &path);
    let c = path.classify_components(0, 2)?;
    for (comp, class) in &c.v_side {
        let tag = match class {
            ComponentClass::Dominant { .. } => "dominant",
            ComponentClass::Subordinate => "subordinate",
            ComponentClass::Shared => "shared",
        };
        println!("  component {} of Γ∖st(a) is {tag}", path.format_set(*comp));
    }
    report("discrete 4", &Graph::discrete(4));
    report("star with 3 leaves", &Graph::star_graph(3));
    report("4-cycle", &Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?);
    Ok(())
}
