// A small cross-verification sweep, then the same sweep with the
// printed-index determinant swapped in.

use schubert_mult::verify::{run, Fault, VerifyConfig};

pub fn run_example() -> String {
    let config = VerifyConfig {
        random_count: 20,
        random_max_n: 8,
        random_max_d: 4,
        exhaustive_max_n: 5,
        exhaustive_max_d: 3,
        ..VerifyConfig::default()
    };
    let mut s = run(&config).to_table();
    let faulty = run(&VerifyConfig {
        fault: Some(Fault::Thm5Printed),
        ..config
    });
    s.push_str(&format!(
        "with injected fault: passed = {}\n",
        faulty.passed()
    ));
    s
}

fn main() {
    print!("{}", run_example());
}
