//! Spot checks of the deeper identities, one instance each. The acceptance
//! suite runs the exhaustive versions; these catch regressions fast.

use racah_core::racah::{
    build_w, build_w_expanded, build_x, build_x_expanded, eval_in_tensor, sym_det,
    verify_relation, RacahExpr, RelationId, RelationTag, SymbolMatrix,
};
use racah_core::rational::int;

fn verify(tag: RelationTag, indices: Vec<usize>, n: usize) {
    let id = RelationId::new(tag, indices);
    let report = verify_relation(&id, n).unwrap();
    assert!(
        report.residual_zero,
        "{id} left a residual with {} terms at n={n}",
        report.residual_terms
    );
}

#[test]
fn x_vanishes_at_n4() {
    verify(RelationTag::Srn8X, vec![1, 2, 3, 4], 4);
}

#[test]
fn srn5_alternative_rhs_holds() {
    verify(RelationTag::Srn5, vec![1, 2, 3, 4], 4);
}

#[test]
fn rn5_holds() {
    verify(RelationTag::Rn5, vec![1, 2, 3, 4], 4);
}

#[test]
fn degree8_determinant_identity_holds() {
    verify(RelationTag::Det8N4, vec![], 4);
}

#[test]
fn y_vanishes_at_n5() {
    verify(RelationTag::ConsY, vec![1, 2, 3, 4, 5], 5);
}

#[test]
fn z_vanishes_at_n6() {
    verify(RelationTag::ConsZ, vec![1, 2, 3, 4, 5, 6], 6);
}

#[test]
fn rn6_holds_at_n5() {
    verify(RelationTag::Rn6, vec![1, 2, 3, 4, 5], 5);
}

#[test]
fn w_and_x_centrality_instances() {
    verify(RelationTag::WCentral, vec![1, 2, 3, 3, 4], 4);
    verify(RelationTag::XCentral, vec![1, 2, 3, 4, 2, 3], 4);
}

#[test]
fn symmetrized_and_row_determinants_differ_but_w_forms_agree() {
    // The doubly-symmetrized 3x3 determinant and the plain row-permutation
    // sum are NOT equal in the image (their difference is a genuine degree-5
    // element); only the two complete forms of w agree. Guard both facts.
    let n = 3;
    let matrix = SymbolMatrix::p_matrix(n, &[1, 2, 3], &[1, 2, 3]).unwrap();
    let sym = eval_in_tensor(&sym_det(&matrix), n).unwrap();

    let perms: [([usize; 3], i64); 6] = [
        ([1, 2, 3], 1),
        ([1, 3, 2], -1),
        ([2, 1, 3], -1),
        ([2, 3, 1], 1),
        ([3, 1, 2], 1),
        ([3, 2, 1], -1),
    ];
    let mut row_det = RacahExpr::zero(n);
    for (perm, sign) in perms {
        let mut product = RacahExpr::constant(n, int(sign));
        for (col, &row) in perm.iter().enumerate() {
            product = &product * &RacahExpr::p(n, row, col + 1).unwrap();
        }
        row_det = &row_det + &product;
    }
    let row = eval_in_tensor(&row_det, n).unwrap();
    let diff = &sym - &row;
    assert!(!diff.is_zero());
    assert_eq!(diff.degree(), Some(5));
}

#[test]
fn expanded_forms_agree_with_definitions() {
    let n = 4;
    let w = eval_in_tensor(&build_w(n, 1, 2, 3).unwrap(), n).unwrap();
    let w_exp = eval_in_tensor(&build_w_expanded(n, 1, 2, 3).unwrap(), n).unwrap();
    assert_eq!(w, w_exp, "w and its expanded form must have equal images");

    let x = eval_in_tensor(&build_x(n, 1, 2, 3, 4).unwrap(), n).unwrap();
    let x_exp = eval_in_tensor(&build_x_expanded(n, 1, 2, 3, 4).unwrap(), n).unwrap();
    assert_eq!(x, x_exp, "x and its expanded form must have equal images");
}
