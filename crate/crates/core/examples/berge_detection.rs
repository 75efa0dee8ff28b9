//! Finds a Berge-K_n in K_n^3, shows the witness, and checks that the
//! balanced (n-1)-partite graph has none.

use berge_turan::{build_complete, build_turan_partite, contains_berge_clique, incidence_graph, verify_witness};

fn main() -> berge_turan::Result<()> {
    let n = 6;
    let k = build_complete(n, 3)?;
    let b = incidence_graph(&k, &(0..n).collect::<Vec<_>>())?;
    println!("B(K_{n}^3): {} pairs, {} edges, pair degree {}", b.pairs.len(), b.edges.len(), b.pair_degree(0));

    let witness = contains_berge_clique(&k, n)?.expect("K_n^3 holds a Berge-K_n for n >= 5");
    println!("core {:?}", witness.core);
    for a in &witness.assignment {
        println!("  {:?} -> {:?}", a.pair, a.edge);
    }
    println!("verified: {}", verify_witness(&k, &witness));
    println!("{}", serde_json::to_string(&witness).unwrap());

    for vertices in 6..=9 {
        let (t, _) = build_turan_partite(vertices, n - 1, 3)?;
        let found = contains_berge_clique(&t, n)?;
        println!("T_3({vertices},{}) contains Berge-K_{n}: {}", n - 1, found.is_some());
    }
    Ok(())
}
