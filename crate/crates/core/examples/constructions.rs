//! The three generators, with a few structural facts about each.

use berge_turan::{build_complete, build_expansion, build_turan_partite, VertexSet};

fn main() -> berge_turan::Result<()> {
    let (t, parts) = build_turan_partite(13, 12, 3)?;
    println!("T_3(13,12): {} edges, parts {:?}", t.edge_count(), parts.parts);
    println!("  degrees of the doubled part: {} {}", t.degree(0)?, t.degree(1)?);
    println!("  deleting vertex 0 gives K_12^3: {}", t.delete_vertex(0)? == build_complete(12, 3)?);
    let cross = t.cross(&VertexSet::new([0, 1])?, &VertexSet::range(2, 13))?;
    println!("  edges meeting both {{0,1}} and the rest: {}", cross.edge_count());

    let k6 = build_complete(6, 3)?;
    println!("K_6^3: {} edges, complement has {}", k6.edge_count(), k6.complement().edge_count());

    // Every pair of core vertices gets its own edge through r - 2 fresh vertices.
    let expansion = build_expansion(4, 4)?;
    println!("expansion of K_4 into a 4-graph: {} vertices", expansion.vertex_count());
    for e in expansion.edges() {
        println!("  {e:?}");
    }
    Ok(())
}
