// Multiplicity of a Schubert datum by every applicable method.

use std::fmt::Write as _;

use schubert_mult::multiplicity::evaluate_methods;
use schubert_mult::schubert::{frobenius, partition_from_i, s_vector};
use schubert_mult::{multiplicity, validate, Error, Guard, Method, Selection};

pub fn run_example() -> Result<String, Error> {
    let mut s = String::new();
    let cone = validate(4, 2, &[2, 4], &[1, 2])?;
    let _ = writeln!(s, "{cone}");
    for (method, outcome) in evaluate_methods(&cone, &Method::ALL, Guard::DEFAULT)? {
        let _ = writeln!(s, "  {:<14} {outcome:?}", method.name());
    }
    let _ = writeln!(
        s,
        "  agreed: {}",
        multiplicity(&cone, Selection::All, Guard::DEFAULT)?
    );

    let d7 = validate(17, 7, &[3, 5, 9, 10, 14, 15, 17], &[1, 2, 3, 4, 5, 6, 7])?;
    let lambda = partition_from_i(&d7);
    let _ = writeln!(s, "{d7}");
    let _ = writeln!(s, "  s = {:?}", s_vector(&d7).0);
    let _ = writeln!(
        s,
        "  lambda = {:?}, frobenius = {}",
        lambda.parts(),
        frobenius(&lambda)
    );
    for m in [Method::Rz, Method::Thm5, Method::Lw] {
        let _ = writeln!(
            s,
            "  {:<14} {}",
            m.name(),
            multiplicity(&d7, Selection::One(m), Guard::DEFAULT)?
        );
    }

    let d9 = validate(
        21,
        9,
        &[4, 6, 7, 13, 14, 17, 19, 20, 21],
        &[1, 2, 4, 7, 10, 12, 13, 15, 16],
    )?;
    let _ = writeln!(s, "{d9}");
    let _ = writeln!(s, "  s = {:?}", s_vector(&d9).0);
    let _ = writeln!(
        s,
        "  multiplicity = {}",
        multiplicity(&d9, Selection::One(Method::Rz), Guard::DEFAULT)?
    );
    Ok(s)
}

fn main() -> Result<(), Error> {
    print!("{}", run_example()?);
    Ok(())
}
