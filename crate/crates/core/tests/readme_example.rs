//! The README usage example, kept compiling verbatim.

use cubechaos_core::rational::parse_decimal;
use cubechaos_core::{
    encode_point, orbit, sensitivity_witness, shift, verify_separation, Dimension, VerifyLimits,
};

#[test]
fn readme_example() -> cubechaos_core::Result<()> {
    // Encode a point of the square to a depth-20 subdivision code.
    let x = vec![parse_decimal("0.2")?, parse_decimal("0.7")?];
    let code = encode_point(&x, 20)?;

    // The shift drops the leading digit: one application per time step.
    let shifted = shift(&code)?;
    assert_eq!(shifted.order(), 19);

    // Exact orbit of the decoded representatives.
    let record = orbit(&code, 5)?;
    for step in record.steps() {
        println!("t={} x={:?}", step.index, step.point);
    }

    // A perturbation agreeing to order 3 that is guaranteed to separate.
    let pair = sensitivity_witness(&code, 3)?;
    println!("separates at step {}", pair.separation_step);

    // Exhaustive first-order separation check, with structured report.
    let report = verify_separation(Dimension::new(2)?, &VerifyLimits::default())?;
    assert!(report.pass);
    Ok(())
}
