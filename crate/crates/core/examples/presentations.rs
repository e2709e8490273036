//! Finite presentations of PAut and POut by partial conjugations.

use raag_paut::presentation::{is_raag_shaped, paut_like_presentation, pout_presentation, OmegaPartition};
use raag_paut::Graph;

fn main() -> raag_paut::Result<()> {
    let g = Graph::discrete(3);
    let omega = OmegaPartition::standard(&g);
    let paut = paut_like_presentation(&g, &omega)?;
    print!("{}", paut.to_text());
    println!("RAAG-shaped: {}\n", is_raag_shaped(&paut));

    let path = Graph::from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c")])?;
    let pout = pout_presentation(&path, &OmegaPartition::standard(&path))?;
    println!("{}", serde_json::to_string_pretty(&pout.to_json()).expect("json"));
    Ok(())
}
