// Labeling horizontal steps of R-families produces the arrays of unusual
// shape, and the labels determine the family.

use std::fmt::Write as _;

use schubert_mult::render::ascii_array;
use schubert_mult::tableaux::{array_to_r_family, r_family_to_array, shape_of, validate_array};
use schubert_mult::{validate, Error, UnusualArray};

pub fn run_example() -> Result<String, Error> {
    let datum = validate(
        21,
        9,
        &[4, 6, 7, 13, 14, 17, 19, 20, 21],
        &[1, 2, 4, 7, 10, 12, 13, 15, 16],
    )?;
    let shape = shape_of(&datum)?;
    let array = UnusualArray::new(vec![
        vec![1],
        vec![1, 2],
        vec![1, 2, 4],
        vec![1, 3],
        vec![4, 5, 6],
        vec![6],
        vec![6],
        vec![9, 11],
    ]);
    let mut s = String::new();
    let _ = writeln!(s, "{datum}");
    let _ = writeln!(s, "heights {:?}, caps {:?}", shape.heights, shape.caps);
    s.push_str(&ascii_array(&shape, &array));
    let _ = writeln!(s, "valid: {:?}", validate_array(&shape, &array));
    let family = array_to_r_family(&datum, &array)?;
    for (l, p) in family.paths().iter().enumerate() {
        let _ = writeln!(s, "R_{} from {}: {}", l + 1, p.start, p.step_string());
    }
    let _ = writeln!(
        s,
        "labels recovered: {}",
        r_family_to_array(&datum, &family)? == array
    );

    let mut broken = array.clone();
    broken.columns[7][1] = 12;
    let _ = writeln!(
        s,
        "with 12 in place of 11: {:?}",
        validate_array(&shape, &broken)
    );
    Ok(s)
}

fn main() -> Result<(), Error> {
    print!("{}", run_example()?);
    Ok(())
}
