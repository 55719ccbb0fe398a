//! Evaluation of symbol words in `U(sl2)^⊗n`.
//!
//! The homomorphism sends `P_ab ↦ T^(a,b)` and `F_ijk ↦ -T^(i,j,k)`; words
//! map to ordered products. Symbol images are memoized per ambient `n`.

use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

use crate::error::Result;
use crate::tensor::{polarized_trace, TensorElement};

use super::expr::RacahExpr;
use super::symbol::{RacahSymbol, SymbolKind};

type ImageCache = DashMap<(usize, RacahSymbol), Arc<TensorElement>>;

fn cache() -> &'static ImageCache {
    static CACHE: OnceLock<ImageCache> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

fn symbol_image(symbol: &RacahSymbol, n: usize) -> Result<Arc<TensorElement>> {
    if let Some(hit) = cache().get(&(n, symbol.clone())) {
        return Ok(hit.clone());
    }
    let image = match symbol.kind() {
        SymbolKind::P => polarized_trace(symbol.indices(), n)?,
        SymbolKind::F => -&polarized_trace(symbol.indices(), n)?,
    };
    let image = Arc::new(image);
    cache().insert((n, symbol.clone()), image.clone());
    Ok(image)
}

/// Homomorphic image of `expr` in `U(sl2)^⊗n`.
pub fn eval_in_tensor(expr: &RacahExpr, n: usize) -> Result<TensorElement> {
    let mut result = TensorElement::zero(n);
    for (word, coeff) in expr.terms() {
        let mut product = TensorElement::one(n);
        for symbol in word {
            symbol.check_bound(n)?;
            product = product.multiply(symbol_image(symbol, n)?.as_ref())?;
        }
        result = &result + &product.scale(coeff);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::racah::elements::build_q;
    use crate::rational::int;
    use crate::tensor::{casimir, is_central};

    #[test]
    fn p_ii_maps_to_twice_casimir() {
        let expr = RacahExpr::p(2, 1, 1).unwrap();
        let image = eval_in_tensor(&expr, 2).unwrap();
        assert_eq!(image, casimir(1, 2).unwrap().scale(&int(2)));
    }

    #[test]
    fn defining_quadratic_relation_evaluates_to_zero() {
        // [P_12, P_23] - 2 F_123 -> 0
        let p12 = RacahExpr::p(3, 1, 2).unwrap();
        let p23 = RacahExpr::p(3, 2, 3).unwrap();
        let f123 = RacahExpr::f(3, 1, 2, 3).unwrap();
        let lhs = &p12.commutator(&p23) - &f123.scale(&int(2));
        assert!(eval_in_tensor(&lhs, 3).unwrap().is_zero());
    }

    #[test]
    fn zero_expression_maps_to_zero() {
        assert!(eval_in_tensor(&RacahExpr::zero(4), 4).unwrap().is_zero());
    }

    #[test]
    fn q_image_is_central() {
        let q = build_q(3).unwrap();
        assert!(is_central(&eval_in_tensor(&q, 3).unwrap()));
    }

    #[test]
    fn ambient_bound_is_enforced() {
        let p = RacahExpr::p(5, 4, 5).unwrap();
        assert!(eval_in_tensor(&p, 3).is_err());
    }
}
