// Path-count determinants against signed enumeration of nonintersecting
// families, for the Q, P and R models of one datum.

use std::fmt::Write as _;

use schubert_mult::paths::{enumerate_nonintersecting, lgv_matrix, p_spec, q_spec, r_spec};
use schubert_mult::{determinant, validate, Error, Guard};

pub fn run_example() -> Result<String, Error> {
    let datum = validate(8, 3, &[3, 5, 8], &[1, 2, 3])?;
    let mut s = String::new();
    let _ = writeln!(s, "{datum}");
    for spec in [q_spec(&datum), p_spec(&datum)?, r_spec(&datum)] {
        let m = lgv_matrix(&spec);
        let signed = enumerate_nonintersecting(&spec, Guard::DEFAULT)?;
        let _ = writeln!(s, "model {}: path counts {:?}", spec.model, m.to_rows());
        let _ = writeln!(
            s,
            "  det = {}, signed total = {}",
            determinant(&m),
            signed.total
        );
        for (perm, count) in &signed.by_permutation {
            let _ = writeln!(s, "  permutation {perm:?}: {count} families");
        }
    }
    Ok(s)
}

fn main() -> Result<(), Error> {
    print!("{}", run_example()?);
    Ok(())
}
