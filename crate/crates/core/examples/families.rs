//! Generated families and their JSON files.
//!
//! `cargo run --example families -- out/` writes one file per complex.

use pdetlab::families::{Family, Structure};

fn main() -> pdetlab::Result<()> {
    let out = std::env::args().nth(1);
    for name in ["polygon6", "simplex4", "simplex6-skel2", "trapezohedron5", "pyramid-polygon5", "pyramid-pyramid-polygon3"] {
        let family: Family = name.parse()?;
        let s = family.build()?;
        let kind = match &s {
            Structure::SelfDual(sd) => format!("self-dual {}-ball", sd.ball_dim()),
            Structure::Plain(_) => "plain".to_string(),
        };
        println!("{name}: f-vector {:?}, {kind}", s.complex().f_vector());
        if let Some(dir) = &out {
            std::fs::create_dir_all(dir)?;
            std::fs::write(format!("{dir}/{name}.json"), s.to_file().to_json())?;
        }
    }
    Ok(())
}
