//! Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

fn main() {
    let criteria = qw22_verify::criteria();
    let mut passed = 0;
    for c in &criteria {
        let (ok, line) = qw22_verify::evaluate(c);
        println!("{line}");
        passed += usize::from(ok);
    }
    println!("{passed} of {} criteria passed", criteria.len());
    if passed < criteria.len() {
        std::process::exit(1);
    }
}
