use ellsurf::qseries::{eval_upper_half, fricke_fixed_point, level11_form, theta_qf};
use ellsurf::report::{acceptance_criteria, Status};

/// Criteria whose failure has been analysed and recorded as unattainable.
const KNOWN_RED: &[(u32, &str)] = &[(11, "|theta(i/sqrt 11)| < 1e-4")];

fn acceptance() -> Vec<String> {
    let criteria = acceptance_criteria();
    assert_eq!(criteria.len(), 13);
    let mut unexpected = Vec::new();
    for c in &criteria {
        let st = if c.passed() { "PASS" } else { "FAIL" };
        println!("{st} criterion {:>2}: {}", c.id, c.name);
        for claim in c.report.claims.iter().filter(|cl| cl.status == Status::Fail) {
            println!("       failing claim: {} (computed {}, expected {})", claim.label, claim.computed, claim.expected);
            if !KNOWN_RED.contains(&(c.id, claim.label.as_str())) {
                unexpected.push(format!("{}: {}", c.id, claim.label));
            }
        }
    }
    unexpected
}

/// The zero clause fails because θ is real and at least 1 on the imaginary
/// axis: every coefficient is non-negative and the constant term is 1.
fn known_red_is_the_analysed_failure() {
    let th = theta_qf(&level11_form(), 60);
    assert!(th.int_coeffs().unwrap().iter().all(|c| *c >= 0));
    let ev = eval_upper_half(&th, fricke_fixed_point()).unwrap();
    assert!(ev.im.abs() < 1e-12);
    assert!(ev.re >= 1.0);
    assert!((ev.abs - 1.3157).abs() < 1e-3);
    let c11 = &acceptance_criteria()[10];
    let zero = c11.report.claims.iter().find(|c| c.label.starts_with("theta zero")).unwrap();
    assert_eq!(zero.status, Status::Pass);
}

fn main() {
    let unexpected = acceptance();
    known_red_is_the_analysed_failure();
    println!("known-red clause verified: theta >= 1 on the imaginary axis, zero found at (1 + i/sqrt 11)/2");
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
