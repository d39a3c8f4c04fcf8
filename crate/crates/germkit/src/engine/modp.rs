//! Non-certified fast pre-checks over the prime field Z/(2^61 - 1).
//!
//! Reducing coefficients mod a large prime avoids rational blow-up; results
//! agree with the characteristic-zero computation for all but finitely many
//! primes, so they are useful as quick predictions but are never used on the
//! certified path.

use crate::dimension::Dim;
use crate::engine::buchberger::{standard_basis, EngineLimits};
use crate::engine::dim::staircase_dim;
use crate::engine::scalar::Fp;
use crate::engine::vector::{ETerm, EVec};
use crate::error::Result;
use crate::order::{ModuleOrder, RingOrder};
use crate::poly::Poly;

fn evec_modp(p: &Poly, ord: &ModuleOrder) -> EVec<Fp> {
    // Denominators invert mod p; the prime is far beyond desk-scale inputs.
    let terms = p
        .terms()
        .map(|(m, c)| ETerm {
            mono: m.clone(),
            comp: 0,
            coef: Fp::from_bigint(c.numer()).mul(&Fp::from_bigint(c.denom()).inv()),
        })
        .filter(|t| t.coef.0 != 0)
        .collect();
    let mut v = EVec { terms };
    v.sort(ord);
    v
}

/// Lead monomials of a mod-p standard basis; a cheap prediction of the
/// characteristic-zero staircase.
pub fn staircase_dim_modp(gens: &[Poly], nvars: usize, local: bool, lim: &EngineLimits) -> Result<Dim> {
    let ring_ord = if local { RingOrder::local(nvars) } else { RingOrder::Grevlex };
    let ord = ModuleOrder::top(ring_ord);
    let vecs: Vec<EVec<Fp>> = gens.iter().map(|p| evec_modp(p, &ord)).collect();
    let basis = standard_basis(&vecs, &ord, lim)?;
    Ok(staircase_dim(&basis, 1, nvars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::Ring;

    #[test]
    fn modp_matches_rational_staircase_on_small_ideals() {
        let r = Ring::new(vec!["x", "y"]).unwrap();
        let lim = EngineLimits::default();
        for gens in [
            vec!["x^2 + y", "y^3"],
            vec!["x*y - 1/2*x", "y^2 - y"],
            vec!["x^3 - y^2", "x*y^2"],
        ] {
            let polys: Vec<Poly> = gens.iter().map(|s| parse_poly(s, &r).unwrap()).collect();
            let dp = staircase_dim_modp(&polys, 2, true, &lim).unwrap();
            let dq = crate::engine::dim::local_quotient_dim(&polys, 2, &lim).unwrap();
            assert_eq!(dp, dq);
        }
    }
}
