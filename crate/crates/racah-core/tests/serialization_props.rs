//! Property tests for the serialization formats and symbol normalization.

use proptest::prelude::*;

use racah_core::racah::RacahExpr;
use racah_core::rational::{format_rational, parse_rational, rat};
use racah_core::tensor::{FactorMonomial, TensorElement, TensorMonomial};

fn arb_factor() -> impl Strategy<Value = FactorMonomial> {
    (0u32..4, 0u32..4, 0u32..4).prop_map(|(a, b, c)| FactorMonomial::new(a, b, c))
}

fn arb_element(n: usize) -> impl Strategy<Value = TensorElement> {
    prop::collection::vec(
        (
            prop::collection::vec(arb_factor(), n),
            -20i64..=20,
            1i64..=6,
        ),
        0..5,
    )
    .prop_map(move |terms| {
        let mut out = TensorElement::zero(n);
        for (factors, numer, denom) in terms {
            let term =
                TensorElement::from_monomial(TensorMonomial::new(factors), rat(numer, denom));
            out = &out + &term;
        }
        out
    })
}

proptest! {
    #[test]
    fn tensor_json_round_trip(element in (1usize..=3).prop_flat_map(|n| (Just(n), arb_element(n)))) {
        let (n, element) = element;
        let back = TensorElement::from_json(n, &element.to_json()).unwrap();
        prop_assert_eq!(back, element);
    }

    #[test]
    fn rational_text_round_trip(numer in -1000i64..1000, denom in 1i64..200) {
        let value = rat(numer, denom);
        prop_assert_eq!(parse_rational(&format_rational(&value)).unwrap(), value);
    }

    #[test]
    fn f_normalization_is_consistent(i in 1usize..=5, j in 1usize..=5, k in 1usize..=5) {
        let n = 5;
        let forward = RacahExpr::f(n, i, j, k).unwrap();
        let swapped = RacahExpr::f(n, j, i, k).unwrap();
        let cycled = RacahExpr::f(n, j, k, i).unwrap();
        // F_ijk = -F_jik = F_jki; repeated indices normalize to zero
        prop_assert_eq!(&forward + &swapped, RacahExpr::zero(n));
        prop_assert_eq!(forward.clone(), cycled);
        if i == j || j == k || i == k {
            prop_assert!(forward.is_zero());
        } else {
            prop_assert_eq!(forward.num_terms(), 1);
        }
    }

    #[test]
    fn monomial_order_is_total_and_degree_first(
        a in prop::collection::vec(arb_factor(), 2),
        b in prop::collection::vec(arb_factor(), 2),
    ) {
        let ma = TensorMonomial::new(a);
        let mb = TensorMonomial::new(b);
        if ma.degree() < mb.degree() {
            prop_assert!(ma < mb);
        }
        prop_assert_eq!(ma.cmp(&mb), mb.cmp(&ma).reverse());
    }
}
