//! Every example runs to completion.

#[path = "../examples/banded_spectrum.rs"]
mod banded_spectrum;
#[path = "../examples/chebyshev.rs"]
mod chebyshev;
#[path = "../examples/extremal_bounds.rs"]
mod extremal_bounds;
#[path = "../examples/figure1.rs"]
mod figure1;
#[path = "../examples/interior_bounds.rs"]
mod interior_bounds;
#[path = "../examples/lanczos_sweep.rs"]
mod lanczos_sweep;
#[path = "../examples/mu_ratio.rs"]
mod mu_ratio;
#[path = "../examples/optimize_shift.rs"]
mod optimize_shift;
#[path = "../examples/rayleigh.rs"]
mod rayleigh;
#[path = "../examples/run_config.rs"]
mod run_config;

#[test]
fn banded_spectrum() {
    banded_spectrum::run_example().unwrap();
}

#[test]
fn chebyshev() {
    chebyshev::run_example().unwrap();
}

#[test]
fn extremal_bounds() {
    extremal_bounds::run_example().unwrap();
}

#[test]
fn figure1() {
    figure1::run_example().unwrap();
}

#[test]
fn interior_bounds() {
    interior_bounds::run_example().unwrap();
}

#[test]
fn lanczos_sweep() {
    lanczos_sweep::run_example().unwrap();
}

#[test]
fn mu_ratio() {
    mu_ratio::run_example().unwrap();
}

#[test]
fn optimize_shift() {
    optimize_shift::run_example().unwrap();
}

#[test]
fn rayleigh() {
    rayleigh::run_example().unwrap();
}

#[test]
fn run_config() {
    run_config::run_example().unwrap();
}
