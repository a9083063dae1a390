//! Each runnable example, run in-process.

macro_rules! example {
    ($name:ident, $path:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!($path);
        }
    };
}

example!(compute_multiplicity, "../examples/compute_multiplicity.rs");
example!(lgv_identity, "../examples/lgv_identity.rs");
example!(cut_bijection, "../examples/cut_bijection.rs");
example!(tableaux_labeling, "../examples/tableaux_labeling.rs");
example!(render_family, "../examples/render_family.rs");
example!(verify_sweep, "../examples/verify_sweep.rs");

#[test]
fn compute_multiplicity_runs() {
    let out = compute_multiplicity::run_example().unwrap();
    assert!(out.contains("agreed: 2"));
    assert!(out.contains("624288"));
    assert!(out.contains("multiplicity = 37649"));
    assert!(out.contains("(9,7,6,2,1 | 6,5,3,1,0)"));
}

#[test]
fn lgv_identity_runs() {
    let out = lgv_identity::run_example().unwrap();
    assert_eq!(out.matches("det = 15, signed total = 15").count(), 3);
}

#[test]
fn cut_bijection_runs() {
    let out = cut_bijection::run_example().unwrap();
    assert_eq!(out.matches("round trip true").count(), 2);
}

#[test]
fn tableaux_labeling_runs() {
    let out = tableaux_labeling::run_example().unwrap();
    assert!(out.contains("valid: Ok(())"));
    assert!(out.contains("R_1 from (-8,22): SSSSSSSSESE"));
    assert!(out.contains("labels recovered: true"));
    assert!(out.contains("Err(Augmented"));
}

#[test]
fn render_family_runs() {
    let out = render_family::run_example().unwrap();
    assert!(out.starts_with("17 |"));
    assert!(out.contains("svg: "));
}

#[test]
fn verify_sweep_runs() {
    let out = verify_sweep::run_example();
    assert!(out.contains("overall: PASS"));
    assert!(out.contains("with injected fault: passed = false"));
}
