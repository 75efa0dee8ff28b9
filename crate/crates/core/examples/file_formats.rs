use berge_turan::{build_turan_partite, format};

fn main() -> berge_turan::Result<()> {
    let (t, parts) = build_turan_partite(5, 3, 3)?;
    let text = format::to_text(&t);
    let json = format::to_json(&t);
    print!("{text}");
    println!("{json}");
    println!("{}", format::partition_to_json(&parts));
    assert_eq!(format::parse_any(&text)?, format::parse_any(&json)?);

    match format::parse_text("4 3 1\n0 1 1\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
