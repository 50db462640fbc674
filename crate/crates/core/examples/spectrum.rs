use tropeig::charpoly::algebraic_eigenvalues;
use tropeig::geneig::{construct, verify};
use tropeig::{Result, TropMatrix};

fn main() -> Result<()> {
    let a = TropMatrix::from_csv_str("3,1,3,5\n2,0,0,0\n3,0,0,2\n4,1,3,5\n")?;
    let spectrum = algebraic_eigenvalues(&a)?;
    for lambda in spectrum.eigenvalues() {
        let pair = construct(&a, &lambda)?;
        assert!(verify(&a, &pair)?);
        println!("{}: {} via {}", pair.lambda, pair.vector, pair.trace.case);
    }
    Ok(())
}
