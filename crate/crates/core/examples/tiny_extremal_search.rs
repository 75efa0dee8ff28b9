//! Exact ex_3(N, Berge-K_n) for tiny N, compared with the partite lower bound.

use berge_turan::extremal::canonical_form;
use berge_turan::{brute_force_ex, turan_count, SearchBudget, SearchOptions};

fn main() -> berge_turan::Result<()> {
    let budget = SearchBudget { max_nodes: Some(50_000_000), max_time: None };
    let folded = SearchOptions { fold_isomorphism: true, ..SearchOptions::default() };
    for (vertices, order) in [(5, 5), (6, 4), (6, 5), (6, 6)] {
        let labeled = brute_force_ex(vertices, order, 3, budget, SearchOptions::default())?;
        let classes = brute_force_ex(vertices, order, 3, budget, folded)?;
        println!(
            "N={vertices} n={order}: ex = {:>2}, t = {:>2}, {} labeled / {} up to isomorphism, {} nodes",
            labeled.max_edges,
            turan_count(vertices, order - 1, 3)?,
            labeled.extremal_count,
            classes.extremal_count,
            labeled.nodes
        );
        for sample in &classes.samples {
            println!("    {:?}", canonical_form(sample));
        }
    }
    Ok(())
}
