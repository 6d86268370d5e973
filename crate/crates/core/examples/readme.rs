use zcp_core::evaluation::eval_zernike;
use zcp_core::{EvalPoint, NollIndex, QuadratureConfig};

fn main() -> zcp_core::Result<()> {
    let j = NollIndex::new(11)?;
    let spec = zcp_core::coefficients::zernike_spec(j)?;
    println!(
        "Z_11 = sqrt({}) R_{}^{}",
        spec.norm().radicand(),
        spec.radial().n(),
        spec.idx().m()
    );
    println!(
        "coefficients {:?} powers {:?}",
        spec.radial().coeffs(),
        spec.radial().powers()
    );

    let pt = EvalPoint::new(0.5, 0.0)?;
    println!("Z_11(0.5, 0) = {}", eval_zernike(&spec, pt, true));

    let config = QuadratureConfig::new(64, 256)?;
    let ip = zcp_core::evaluation::inner_product(j, j, &config)?;
    println!("<Z_11, Z_11> = {ip}");
    Ok(())
}
