//! A few values of the special functions behind the wavefunctions and the
//! Uehling density.

use diracsea::specfun::{
    bessel_k, bickley_ki1, kummer_1f1, laguerre_gen, ln_gamma, ln_gamma_complex, struve_l, BesselKOrder, Complex,
    StruveOrder,
};

fn main() -> diracsea::Result<()> {
    println!("ln Γ(0.5)        = {:.15}", ln_gamma(0.5)?);
    let lg = ln_gamma_complex(Complex::new(1.2, 3.4))?;
    println!("ln Γ(1.2 + 3.4i) = {:.12} {:+.12}i", lg.re, lg.im);
    println!("K0(1)            = {:.15}", bessel_k(BesselKOrder::Zero, 1.0)?);
    println!("K1(1)            = {:.15}", bessel_k(BesselKOrder::One, 1.0)?);
    println!("Ki1(0.5)         = {:.15}", bickley_ki1(0.5)?);
    println!("L0(2)            = {:.15}", struve_l(StruveOrder::Zero, 2.0)?);
    println!("L_3^(1.5)(0.7)   = {:.15}", laguerre_gen(3, 1.5, 0.7));
    let m = kummer_1f1(Complex::new(1.0, 0.5), Complex::new(2.5, 0.0), Complex::new(0.0, 20.0))?;
    println!("1F1(1+0.5i; 2.5; 20i) = {:.12} {:+.12}i  (rel err {:.1e})", m.value.re, m.value.im, m.rel_err);
    Ok(())
}
