//! Spec files: serialize a built-in algebra, reload it, and drive the
//! command-line entry point from code.

use hopftrace::cli::{load_spec_str, run};
use hopftrace::hopfcore::{build_taft, HopfSpec};

fn main() -> hopftrace::Result<()> {
    let h = build_taft(2);
    let json = h.to_json();
    let back = HopfSpec::from_json(&json)?;
    assert_eq!(back, h);
    println!("Taft r=2 spec: {} bytes, round trip ok", json.len());
    let loaded = load_spec_str(r#"{"builder": "borel", "r": 2, "grades": [["ζ4", 0], [1, 1]]}"#, None)?;
    println!("loaded {} with grades {:?}", loaded.name(), loaded.grades().iter().map(|g| g.to_string()).collect::<Vec<_>>());

    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(["hopftrace", "trace-table", "--builder", "taft", "--r", "3", "--format", "tsv"], &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit code {code}");
    Ok(())
}
