//! Small simple modules of a few simple groups, and every simple module of
//! dimension 19.

use epiverify::repdim::{
    build_root_system, enumerate_irreps_below, is_self_dual, scan_dimension, RootType,
};

fn main() -> epiverify::Result<()> {
    for (t, rank, bound) in [
        (RootType::A, 5, 21),
        (RootType::D, 5, 50),
        (RootType::E, 6, 80),
        (RootType::G, 2, 30),
    ] {
        let rs = build_root_system(t, rank)?;
        println!(
            "{rs} (dim {}), modules of dim < {bound}:",
            rs.group_dimension()
        );
        for (lambda, dim) in enumerate_irreps_below(&rs, bound)? {
            let dual = if is_self_dual(&rs, &lambda) {
                "self-dual"
            } else {
                ""
            };
            println!("    {dim:>3}  {lambda:<10} {dual}");
        }
    }
    println!("dimension 19:");
    for hit in scan_dimension(19, 18)? {
        println!(
            "    {hit}  self-dual: {}  group dim {}",
            hit.self_dual, hit.group_dimension
        );
    }
    Ok(())
}
