// Draws the first Q-family of the d = 7 datum, as ASCII and as SVG.

use schubert_mult::paths::{for_each_nonintersecting, q_spec};
use schubert_mult::render::{ascii_family, svg_family};
use schubert_mult::{validate, Error, Guard, PathFamily};

pub fn run_example() -> Result<String, Error> {
    let datum = validate(17, 7, &[3, 5, 9, 10, 14, 15, 17], &[1, 2, 3, 4, 5, 6, 7])?;
    let spec = q_spec(&datum);
    let mut first: Option<PathFamily> = None;
    // the worst-case bound is far above the real work for this datum
    for_each_nonintersecting(&spec, Guard(u64::MAX), |_, fam| {
        first.get_or_insert_with(|| fam.clone());
    })?;
    let family = first.expect("the datum has Q-families");
    let svg = svg_family(&spec, &family);
    let mut s = ascii_family(&spec, &family);
    s.push_str(&format!(
        "svg: {} bytes, {} lines\n",
        svg.len(),
        svg.lines().count()
    ));
    Ok(s)
}

fn main() -> Result<(), Error> {
    print!("{}", run_example()?);
    Ok(())
}
