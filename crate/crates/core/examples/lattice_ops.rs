//! Prints t-norms and residua of each structure, plain and truncated at ε.

use fuzzred::Lattice;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let eps = 0.2;
    let pairs = [(0.3, 0.6), (0.5, 0.5), (0.9, 0.4), (0.1, 0.15)];
    let mut lattices = Lattice::all().to_vec();
    lattices.push(Lattice::hamacher(2.0)?);
    for lat in lattices {
        println!("{lat}");
        for (x, y) in pairs {
            println!(
                "  x={x:<4} y={y:<4}  x*y={:.4}  x->y={:.4}  x*y|eps={:.4}  x->y|eps={:.4}",
                lat.tnorm(x, y),
                lat.residuum(x, y),
                lat.tnorm_eps(x, y, eps),
                lat.residuum_eps(x, y, eps),
            );
        }
    }
    Ok(())
}
