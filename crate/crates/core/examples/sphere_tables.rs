//! Bredon homology and cohomology of `S^{mρ₈}` for `m = 1, 2`, with timings.

use std::time::Instant;

use slicework_core::repsphere::{bredon_cohomology, bredon_homology, Coeff, RepDescriptor};

fn main() -> slicework_core::Result<()> {
    for m in [1u32, 2] {
        let v = RepDescriptor::regular(3).scaled(m);
        let t = Instant::now();
        let h = bredon_homology(&v, 8, Coeff::Z)?;
        println!("H_*  {v}  ({:?})\n{h}", t.elapsed());
        let t = Instant::now();
        let c = bredon_cohomology(&v, 8, Coeff::Z)?;
        println!("H^*  {v}  ({:?})\n{c}", t.elapsed());
    }
    Ok(())
}
