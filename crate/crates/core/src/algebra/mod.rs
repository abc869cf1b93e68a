//! The group algebra of `S_n` with integer coefficients, Jucys-Murphy
//! elements, the transitivity operator `T_n` and class-sum decompositions.

mod checks;
mod classes;
mod element;
mod evaluate;
mod expr;
mod linear;
mod symmetric;

pub use checks::{
    check_elementary_identity, check_fixed_point_free, check_transitive_power_expression, elementary_class_expansion,
    non_homomorphism_witness, span_experiment, well_definedness_experiment, ExpressionRow, KernelWitness, SpanReport,
    TransitivePowerCheck, WellDefinednessReport,
};
pub use classes::{class_sum, class_table, decompose, is_central, ClassSumDecomposition, ClassTable};
pub use element::{jm_element, AlgebraElement};
pub use evaluate::{
    evaluate, evaluate_monomial, expand_monomial, transitive_evaluate, transitive_evaluate_by_tuples,
    transitive_monomial, transitive_power, transitive_word, TranspositionTuple,
};
pub use expr::Expr;
pub use symmetric::{complete, elementary, power_sum, Basis, BasisTerm, Exponents, Polynomial, SymmetricFunctionExpr};
