//! Vertex counts and cell censuses of the fifteen uniform W(H4) orbit
//! polytopes of §3 and §5: for each seed, the orbit size and the complete
//! list of cell types with their counts, obtained from parabolic subgroup
//! orbits in exact arithmetic.
//!
//! Run with `cargo run --release --example orbit_census` (a few seconds:
//! the 14400-element group is generated once).

use h4kit::coxeter::SystemName;
use h4kit::orbit::{cell_census, WeightVector};

const SEEDS: [[i64; 4]; 15] = [
    [0, 0, 0, 1],
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [1, 0, 0, 1],
    [0, 1, 0, 1],
    [0, 0, 1, 1],
    [0, 1, 1, 0],
    [1, 0, 1, 0],
    [1, 1, 0, 0],
    [1, 1, 1, 0],
    [1, 1, 0, 1],
    [1, 0, 1, 1],
    [0, 1, 1, 1],
    [1, 1, 1, 1],
];

fn main() {
    for seed in SEEDS {
        let w = WeightVector::from_ints(SystemName::H4, &seed).unwrap();
        let census = cell_census(&w).unwrap();
        println!(
            "W(H4){seed:?}: {} vertices, {} cells",
            census.orbit_size,
            census.total_cells()
        );
        for f in &census.families {
            println!(
                "    node {} ({}): {} {}s ({} vertices each, {} per polytope vertex)",
                f.deleted_node,
                f.subsystem,
                f.cell_count,
                f.label,
                f.cell_vertex_count,
                f.cells_per_vertex
            );
        }
    }
}
