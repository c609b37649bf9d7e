//! Building a cell complex by hand, reading and writing it as JSON, and
//! computing homology.

use pdetlab::complex::{CellComplex, ComplexFile, Subcomplex};

fn main() -> pdetlab::Result<()> {
    // the real projective plane: one cell in each dimension, ∂₂ = 2·e
    let rp2 = CellComplex::builder()
        .cell("v", 0, &[])
        .cell("e", 1, &[("v", 1), ("v", -1)])
        .cell("f", 2, &[("e", 2)])
        .build()?;
    for i in 0..=2 {
        let h = rp2.reduced_homology(i);
        println!("H̃{i}(RP²): rank {}, torsion {:?}", h.free_rank, h.torsion);
    }

    let json = ComplexFile::from_complex(&rp2).to_json();
    println!("{json}");
    let back = ComplexFile::parse(&json)?.to_complex()?;
    assert_eq!(back.f_vector(), rp2.f_vector());

    // malformed input is reported, not panicked on
    let broken = CellComplex::builder().cell("e", 1, &[("missing", 1)]).build();
    println!("broken complex: {}", broken.unwrap_err());

    let one_skeleton = Subcomplex::skeleton(&rp2, 1);
    println!("1-skeleton cells: {:?}", one_skeleton.ids());
    Ok(())
}
