//! Exact scalars: rationals and cyclotomic fields ℚ(ζ_N).

mod cyclo;
mod field;

pub use cyclo::Cyclo;
pub use field::euler_phi;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?} as a cyclotomic number")]
    Parse(String),
}

/// ζ_N^k.
pub fn root_of_unity(n: u32, k: i64) -> Cyclo {
    Cyclo::root_of_unity(n, k)
}

/// Gaussian binomial [n k]_q evaluated at `q` with the Pascal recurrence
/// [n k] = [n−1 k−1] + q^k [n−1 k], so no q-integer is ever divided by.
pub fn q_binomial(n: usize, k: usize, q: &Cyclo) -> Cyclo {
    if k > n {
        return Cyclo::zero();
    }
    let mut qpow = Vec::with_capacity(k + 1);
    qpow.push(Cyclo::one());
    for i in 1..=k {
        qpow.push(&qpow[i - 1] * q);
    }
    // row[j] = [m j]_q for the current m
    let mut row = vec![Cyclo::zero(); k + 1];
    row[0] = Cyclo::one();
    for m in 1..=n {
        for j in (1..=k.min(m)).rev() {
            let t = &qpow[j] * &row[j];
            row[j] = &row[j - 1] + &t;
        }
    }
    row[k].clone()
}
