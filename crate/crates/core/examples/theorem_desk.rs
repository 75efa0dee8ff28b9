use berge_turan::verify_theorem_desk;

fn main() -> berge_turan::Result<()> {
    let n = std::env::args().nth(1).map_or(13, |a| a.parse().expect("clique order"));
    let report = verify_theorem_desk(n, n + 3)?;
    for row in &report.instances {
        println!(
            "N={:>2}  edges {:>4}  free {}  saturated {} ({} non-edges)  parts {:?}",
            row.vertex_count, row.edges, row.free, row.saturated, row.non_edges_checked, row.part_sizes
        );
    }
    println!("{}", if report.passed { "all instances pass" } else { "FAILED" });
    println!("{}", report.scope);
    Ok(())
}
