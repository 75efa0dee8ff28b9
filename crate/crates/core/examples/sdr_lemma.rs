//! Systems of distinct representatives, and the exhaustive union-bound check
//! for families of five sets over the pairs of a 5-set.

use berge_turan::sdr::{find_sdr, SdrOutcome, SetFamily};
use berge_turan::verify_sdr_lemma;

fn main() -> berge_turan::Result<()> {
    let family = SetFamily::new(vec![vec!['a', 'b'], vec!['a'], vec!['a', 'b'], vec!['c']])?;
    match find_sdr(&family) {
        SdrOutcome::Representatives(reps) => println!("representatives {reps:?}"),
        SdrOutcome::Violator(v) => println!("sets {:?} cover only {} elements", v.indices, v.union_size),
    }

    let m: usize = std::env::args().nth(1).map_or(5, |a| a.parse().expect("m in 5..=7"));
    let report = verify_sdr_lemma(m)?;
    println!("m = {m}, bound {}", report.bound);
    if let Some(literal) = &report.literal {
        println!(
            "independent sets:  {} families, {} without SDR, max union {}, holds {}",
            literal.families_checked, literal.no_sdr_families, literal.max_union_without_sdr, literal.holds()
        );
        if let Some(bad) = &literal.first_bound_violation {
            println!("  first family over the bound: {bad:?}");
        }
    }
    let s = &report.edge_consistent;
    println!(
        "apex links:        {} families, {} without SDR, max union {}, holds {}",
        s.families_checked, s.no_sdr_families, s.max_union_without_sdr, s.holds()
    );
    Ok(())
}
