//! Reads and writes the line-based text documents used by the command line
//! tool: hypergraphs, blow-ups with labels, set systems and covers.

use turancover::generators::complete;
use turancover::io::{format_blowup, format_cover, format_setsystem, parse_documents, Document, ParseOptions};
use turancover::rounding::fallback_threshold_cover;
use turancover::{blow_up, Limits, LpMode, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    let b = blow_up(&complete(4, 3, &limits)?, 2)?;
    let text = format_blowup(&b);
    print!("{text}");
    let cover = fallback_threshold_cover(b.hyper(), LpMode::Exact, &limits)?;
    print!("{}", format_cover(&cover));
    print!("{}", format_setsystem(&b.hyper().dual()));

    let docs = parse_documents(&text, ParseOptions::default())?;
    assert_eq!(docs, vec![Document::BlowUp(b)]);
    println!("round trip ok");

    // Duplicate edges are rejected unless deduplication is requested.
    let dup = "HG 3 4 2\n0 1 2\n2 1 0\n";
    println!("strict: {}", parse_documents(dup, ParseOptions::default()).unwrap_err());
    let docs = parse_documents(dup, ParseOptions { dedup: true })?;
    println!("dedup: {} document(s)", docs.len());
    Ok(())
}
