// Run a few claim suites, print the table and round-trip the machine report.
//
//     cargo run --example verification_report

use eigenlab::lie::SpaceKind;
use eigenlab::verify::{emit, run as verify, Format, RunConfig, Target, VerificationReport};

pub fn run() -> eigenlab::Result<()> {
    let cfg = RunConfig {
        samples: 20,
        seed: 7,
        ..RunConfig::only(vec![
            Target::Space(SpaceKind::QuaternionicGrassmannian),
            Target::Space(SpaceKind::SuSp),
            Target::Sphere,
        ])
    };
    let report = verify(&cfg)?;
    emit(&report, Format::HumanTable, &mut std::io::stdout().lock())?;

    let mut buf = Vec::new();
    emit(&report, Format::JsonLines, &mut buf)?;
    let text = String::from_utf8(buf).expect("json is utf-8");
    let back = VerificationReport::from_json_lines(&text)?;
    assert_eq!(back.claims, report.claims);
    println!("\njson-lines: {} lines, round trip exact", text.lines().count());
    if let Some(sign) = report.claim("su-sp.n2.lambda-sign") {
        println!("{}: {}", sign.id, sign.note.as_deref().unwrap_or(""));
    }
    assert!(report.all_pass());
    Ok(())
}

#[allow(dead_code)]
fn main() -> eigenlab::Result<()> {
    run()
}
