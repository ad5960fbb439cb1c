mod construct_example1 {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/construct_example1.rs"));
}

mod invariants {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/invariants.rs"));
}

mod fibre_analysis {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fibre_analysis.rs"));
}

mod trigonal_locus {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/trigonal_locus.rs"));
}

mod verify_slope {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_slope.rs"));
}

mod scroll_families {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/scroll_families.rs"));
}

mod groebner_basics {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/groebner_basics.rs"));
}

mod smith_form {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/smith_form.rs"));
}

mod syzygies {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/syzygies.rs"));
}

#[test]
fn construct_example1_example_runs() {
    construct_example1::run_example().expect("construct_example1 example should run");
}

#[test]
fn invariants_example_runs() {
    invariants::run_example().expect("invariants example should run");
}

#[test]
fn fibre_analysis_example_runs() {
    fibre_analysis::run_example().expect("fibre_analysis example should run");
}

#[test]
fn trigonal_locus_example_runs() {
    trigonal_locus::run_example().expect("trigonal_locus example should run");
}

#[test]
fn verify_slope_example_runs() {
    verify_slope::run_example().expect("verify_slope example should run");
}

#[test]
fn scroll_families_example_runs() {
    scroll_families::run_example().expect("scroll_families example should run");
}

#[test]
fn groebner_basics_example_runs() {
    groebner_basics::run_example().expect("groebner_basics example should run");
}

#[test]
fn smith_form_example_runs() {
    smith_form::run_example().expect("smith_form example should run");
}

#[test]
fn syzygies_example_runs() {
    syzygies::run_example().expect("syzygies example should run");
}
