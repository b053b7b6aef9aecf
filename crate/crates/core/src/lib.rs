//! Low-degree modular representations of symmetric groups.
//!
//! The crate builds rim-hook chains `A(λ, m)` and the alternating-sum
//! expressions of irreducible modules `D^λ` in terms of Specht modules
//! `S^λ`, lifts them to dimension polynomials in `n` that depend on the
//! residue of `n` modulo the characteristic, and checks them against an
//! independent oracle: the rank over `F_p` of the Gram matrix of the
//! invariant form on an explicitly constructed Specht module.
//!
//! Heavy loops (Gram entries, verification grids, residue tables) run on
//! rayon when the `parallel` feature is enabled; see [`Execution`].

pub mod decomposition;
pub mod dimension;
pub mod error;
pub mod exec;
pub mod harness;
pub mod oracle;
pub mod parameters;
pub mod partition;
pub mod polynomial;

pub use decomposition::{
    a_set, decompose_irreducible, decompose_standard, irreducible_dimension_formula,
    irreducible_dimension_table, AChain, ClassLabel, GrothendieckVector,
    PiecewiseCongruencePolynomial,
};
pub use dimension::{specht_dimension, specht_dimension_polynomial, PaddedShape};
pub use error::{Error, Result};
pub use exec::Execution;
pub use harness::{run_verification, VerificationRecord, VerificationReport};
pub use oracle::{gram_matrix, gram_rank_mod_p, GramMatrix, OracleConfig};
pub use parameters::{divisor_prime_census, prime_parameter_sequence, IntegerPolynomial, ParameterPair};
pub use partition::{dominance_compare, Cell, Dominance, Partition};
pub use polynomial::RationalPolynomial;

/// Fails with [`Error::NotPrime`] unless `p` is prime.
pub(crate) fn check_prime(p: u64) -> Result<()> {
    if num_prime::nt_funcs::is_prime64(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}
