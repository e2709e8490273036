//! Koszulness of gr(PAut) decided by condition (*), with the Hilbert series cross-check.

use raag_paut::cli::koszul_report;
use raag_paut::linalg::ComputeOptions;
use raag_paut::Graph;

fn main() -> raag_paut::Result<()> {
    let opts = ComputeOptions::default();
    for n in 2..=4 {
        let g = Graph::discrete(n);
        let r = koszul_report(&g, Some(3), &opts)?;
        let check = r.numeric_check.as_ref().expect("requested");
        println!(
            "PAut(F_{n}): koszul {}  series {}  dual {}  identity through degree {}: {}",
            r.koszul,
            check.hilbert,
            check.dual_hilbert,
            check.degree,
            if check.pass { "holds" } else { "fails" }
        );
    }
    let path = Graph::path(5);
    let r = koszul_report(&path, Some(4), &opts)?;
    println!("path on 5 vertices: koszul {}", r.koszul);
    Ok(())
}
