//! Writes a random Siegel eigenvalue table, its quadratic twist mod 8 and an
//! unrelated table to a directory, for trying out the CLI.
//!
//! ```text
//! cargo run -p hecketwist --example synthetic_pair -- data 200
//! ```

use std::path::PathBuf;

use hecketwist::characters::{enumerate_chars, DirichletChar};
use hecketwist::exactfield::arith::primes;
use hecketwist::heckedata::synthetic::{quadratic_twist, random_siegel_form};
use hecketwist::heckedata::Form;
use hecketwist::CycNum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "data".into()));
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(100);
    std::fs::create_dir_all(&dir)?;

    let ps: Vec<u64> = primes().skip(1).take(n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let trivial = DirichletChar::trivial(1)?;
    let f = random_siegel_form(&mut rng, (3, 3), 1, trivial.clone(), &ps)?;
    let g = random_siegel_form(&mut rng, (4, 4), 1, trivial, &ps)?;
    let minus = CycNum::from(-1);
    let chi = enumerate_chars(8, 2)?
        .into_iter()
        .find(|c| c.eval(3).ok() == Some(minus.clone()) && c.eval(5).ok() == Some(minus.clone()))
        .expect("a primitive quadratic character mod 8");
    let twist = quadratic_twist(&f, &chi)?;

    for (name, form) in [("f.json", f), ("f_twist.json", twist), ("g.json", g)] {
        let path = dir.join(name);
        std::fs::write(&path, Form::Siegel(form).to_json())?;
        println!("{}", path.display());
    }
    Ok(())
}
