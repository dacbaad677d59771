//! Symmetric group characters and multiplicities of S_λ inside Sym^r of a
//! Segre-Veronese product, computed two independent ways.
//!
//! Set TANGENT_CACHE_DIR to keep the character tables between runs.

use tangential::symfun::{character, m_tau, mult_in_sym, mult_in_sym_characters, partitions, NPartition, Partition, TableCache};

fn main() -> tangential::Result<()> {
    let cache = TableCache::resolve(None);
    let table = cache.character_table(4);
    let classes = partitions(4, 4);
    print!("{:>10}", "");
    for mu in &classes {
        print!("{:>10}", mu.to_string());
    }
    println!();
    for lam in partitions(4, 4) {
        print!("{:>10}", lam.to_string());
        for mu in &classes {
            print!("{:>10}", table.value(&lam, mu).unwrap());
        }
        println!();
    }

    let hook = Partition::new(vec![2, 1])?;
    let row: Vec<i64> = partitions(3, 3).iter().map(|mu| character(&hook, mu)).collect::<Result<_, _>>()?;
    println!("\nchi_(2,1) on classes {:?}: {row:?}", partitions(3, 3).iter().map(|p| p.to_string()).collect::<Vec<_>>());

    let cases: [(&[&[usize]], usize, &[usize]); 5] = [
        (&[&[2, 1], &[2, 1], &[2, 1], &[2, 1]], 3, &[1, 1, 1, 1]),
        (&[&[4, 2], &[4, 2]], 3, &[2, 2]),
        (&[&[4, 4]], 2, &[4]),
        (&[&[6, 2]], 2, &[4]),
        (&[&[3, 3], &[2, 1]], 3, &[2, 1]),
    ];
    for (parts, r, d) in cases {
        let lam = NPartition::from_parts(parts)?;
        let w = mult_in_sym(&lam, r, d)?;
        let c = mult_in_sym_characters(&lam, r, d)?;
        println!("{lam} in Sym^{r}, d={d:?}: weights {w}, characters {c}, coordinate ring {}", m_tau(&lam, r, d));
    }
    Ok(())
}
