//! Young tabloids as covariants: symmetrize a filling, check the straightening
//! identities, and push a witness through the specialization map.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tangential::exactalg::fmt_rat;
use tangential::generic::{pi_on_tabloid, straighten_check, symmetrize, target_covariant, Relation, TabloidFilling, TargetFilling};
use tangential::graphs::witness_tabloid;
use tangential::symfun::NPartition;

fn main() -> tangential::Result<()> {
    let d = [1, 1, 1];
    let t = TabloidFilling::parse(&d, 4, "12/34 x 12/34 x 13/24")?;
    let c = symmetrize(&t)?;
    println!("{t}: shape {}, {} terms after symmetrizing", t.shape(), c.terms.len());

    // swapping a column negates, a triangle vanishes
    let swapped = TabloidFilling::parse(&d, 4, "32/14 x 12/34 x 13/24")?;
    println!("column swap gives the negative: {}", symmetrize(&swapped)? == c.neg());
    let triangle = TabloidFilling::parse(&d, 3, "1/2 x 2/3 x 3/1")?;
    println!("triangle {triangle} is zero: {}", symmetrize(&triangle)?.is_zero());

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let shape = NPartition::from_parts(&[&[4, 2]])?;
    for (kind, name) in ["column swap", "truncated Plücker", "full Plücker", "repeated entry"].iter().enumerate() {
        let rel = Relation::random(kind as u8, &[2], 3, &shape, &mut rng)?;
        let (lhs, rhs) = rel.sides()?;
        println!("{name:>18}: {lhs} = {} terms, holds {}", rhs.len(), straighten_check(&rel)?);
    }

    // a witness tabloid whose image is a nonzero multiple of the target
    let lam = NPartition::from_parts(&[&[6, 2], &[12, 4], &[7, 1]])?;
    let (w, a) = witness_tabloid(&lam, 8, &[1, 2, 1])?;
    let image = pi_on_tabloid(&w, &a)?;
    let target = target_covariant(&TargetFilling::ones_then_twos(&w.shape(), &a)?)?;
    let ratio = image.ratio_to(&target).expect("proportional");
    println!("\nwitness {w}\n  a = {a:?}, image = {} * target", fmt_rat(&ratio));
    Ok(())
}
