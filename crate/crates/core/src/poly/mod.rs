//! Exact sparse multivariate polynomials over the rationals.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;
pub mod univariate;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub(crate) use polynomial::fmt_rational;
pub use polynomial::Polynomial;
pub use ring::Ring;

/// Arbitrary-precision rational number in lowest terms.
pub type Rational = num_rational::BigRational;

/// Parse a rational literal such as `-3/4`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if num_traits::Zero::is_zero(&d) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => text
            .parse::<num_bigint::BigInt>()
            .ok()
            .map(Rational::from_integer),
    }
}

pub fn format_rational(c: &Rational) -> String {
    fmt_rational(c)
}
