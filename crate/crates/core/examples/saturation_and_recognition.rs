//! Saturation of T_3(N, n-1) and recovery of its parts from the edge set alone.

use berge_turan::extremal::classify_partite;
use berge_turan::{build_turan_partite, saturation_check};

fn main() -> berge_turan::Result<()> {
    let (t, parts) = build_turan_partite(9, 6, 3)?;
    let report = saturation_check(&t, 7)?;
    println!("saturated: {} ({} non-edges all create a Berge-K_7)", report.saturated, report.creating.len());

    let shuffled = t.relabel(&[4, 8, 0, 6, 2, 7, 1, 5, 3])?;
    println!("{}", serde_json::to_string(&classify_partite(&shuffled)).unwrap());
    println!("original parts {:?}", parts.parts);

    let dented = t.filter_edges(|e| e != [0, 2, 4]);
    println!("{}", serde_json::to_string(&classify_partite(&dented)).unwrap());
    let report = saturation_check(&dented, 7)?;
    println!("after removing an edge, additions that stay free: {:?}", report.non_creating);
    Ok(())
}
