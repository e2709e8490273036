//! Numerical facts about the McCool groups PAut(F_n).

use raag_paut::cli::mccool_stats;

fn main() -> raag_paut::Result<()> {
    println!("{:>3} {:>4} {:>12} {:>7}", "n", "cd", "chi", "koszul");
    for n in 2..=8 {
        let s = mccool_stats(n)?;
        println!("{n:>3} {:>4} {:>12} {:>7}", s.cd, s.chi, s.koszul);
    }
    Ok(())
}
