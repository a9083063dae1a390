// Cutting Q-families at height d + 1 gives the P-families, and back.

use std::fmt::Write as _;

use schubert_mult::paths::{cut_q_to_p, enumerate_families, extend_p_to_q, q_spec};
use schubert_mult::{validate, Error, Guard};

fn show(fam: &schubert_mult::PathFamily) -> String {
    fam.paths()
        .iter()
        .map(|p| format!("{}:{}", p.start, p.step_string()))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run_example() -> Result<String, Error> {
    let datum = validate(5, 2, &[3, 5], &[1, 2])?;
    let mut s = String::new();
    let _ = writeln!(s, "{datum}");
    for (_, q) in enumerate_families(&q_spec(&datum), Guard::DEFAULT)? {
        let p = cut_q_to_p(&datum, &q)?;
        let back = extend_p_to_q(&datum, &p)?;
        let _ = writeln!(
            s,
            "Q {}  ->  P {}  round trip {}",
            show(&q),
            show(&p),
            back == q
        );
    }
    Ok(s)
}

fn main() -> Result<(), Error> {
    print!("{}", run_example()?);
    Ok(())
}
