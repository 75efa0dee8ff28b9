//! Prints t_r(N, k) next to the edge count of the constructed T_r(N, k).
//!
//!     cargo run --example turan_counts -- 16 12 3

use berge_turan::{build_turan_partite, turan_count};

fn main() -> berge_turan::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("numeric argument")).collect();
    let (max_n, k, r) = match args[..] {
        [n, k, r] => (n, k, r),
        _ => (16, 12, 3),
    };
    println!("{:>4} {:>12} {:>12}  parts", "N", "t_r(N,k)", "|T_r(N,k)|");
    for n in k..=max_n {
        let (t, parts) = build_turan_partite(n, k, r)?;
        println!("{n:>4} {:>12} {:>12}  {:?}", turan_count(n, k, r)?, t.edge_count(), parts.part_sizes());
    }
    Ok(())
}
