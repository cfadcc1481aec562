use std::collections::HashMap;

use num_traits::Zero;

use super::context::{Estimate, PrecisionContext};
use super::nested::mzv_eval;
use crate::algebra::{to_f64, TPoly};
use crate::compositions::Composition;
use crate::error::Result;
use crate::regularization::{RegPoly, ZetaExpr};

/// Memoized MZV values for repeated symbolic evaluation.
#[derive(Clone, Debug)]
pub struct MzvCache {
    ctx: PrecisionContext,
    values: HashMap<Composition, Estimate>,
}

impl MzvCache {
    pub fn new(ctx: PrecisionContext) -> Self {
        MzvCache { ctx, values: HashMap::new() }
    }

    pub fn context(&self) -> &PrecisionContext {
        &self.ctx
    }

    pub fn get(&mut self, s: &Composition) -> Result<Estimate> {
        if let Some(e) = self.values.get(s) {
            return Ok(*e);
        }
        let e = mzv_eval(s, &self.ctx)?;
        self.values.insert(s.clone(), e);
        Ok(e)
    }
}

/// Numeric value of a polynomial in MZV symbols. The error combines the
/// bounds of the individual symbols to first order in each product.
pub fn zeta_expr_eval(e: &ZetaExpr, cache: &mut MzvCache) -> Result<Estimate> {
    let mut total = Estimate::exact(0.0);
    for (symbols, c) in e.iter() {
        let c = to_f64(c);
        let mut value = c;
        let mut magnitude = c.abs();
        let mut widened = c.abs();
        for sym in symbols {
            let z = cache.get(sym.index())?;
            value *= z.value;
            magnitude *= z.value.abs();
            widened *= z.value.abs() + z.error;
        }
        total.value += value;
        total.error += widened - magnitude;
    }
    Ok(total)
}

/// Replaces every MZV symbol by its numeric value.
pub fn regpoly_eval(p: &RegPoly, cache: &mut MzvCache) -> Result<TPoly<f64>> {
    let mut out = TPoly::zero();
    for (k, e) in p.iter() {
        out.add_term(k, zeta_expr_eval(e, cache)?.value);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::regularization::MzvSymbol;

    #[test]
    fn symbol_values() {
        let mut cache = MzvCache::new(PrecisionContext::default());
        let z2 = ZetaExpr::symbol(MzvSymbol::new(Composition::from([2])).unwrap());
        let v = zeta_expr_eval(&z2, &mut cache).unwrap();
        assert!((v.value - 1.6449340668).abs() < 1e-10);
        let sq = zeta_expr_eval(&(z2.clone() * z2.clone()), &mut cache).unwrap();
        assert!((sq.value - 2.7058080843).abs() < 1e-9);
        let p = RegPoly::from_coeffs([(2, ZetaExpr::rational(rat(1, 2))), (0, ZetaExpr::rational(rat(-1, 2)) * z2)]);
        let at0 = regpoly_eval(&p, &mut cache).unwrap().eval(&0.0);
        assert!((at0 + 0.8224670334).abs() < 1e-10);
    }
}
