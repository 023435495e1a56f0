use crate::number::Rational;
use crate::polynomial::Polynomial;

/// High-water mark of coefficient size across the intermediates of a computation.
///
/// Algorithms that accept a `&mut BitTrace` report every polynomial or vector
/// they produce along the way; the bench harness reads `max_bits` afterwards.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BitTrace {
    max_bits: u64,
}

impl BitTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn max_bits(&self) -> u64 {
        self.max_bits
    }

    pub fn observe_coeffs(&mut self, coeffs: &[Rational]) {
        if let Some(bits) = coeffs.iter().map(Rational::height_bits).max() {
            self.max_bits = self.max_bits.max(bits);
        }
    }

    pub fn observe_bits(&mut self, bits: u64) {
        self.max_bits = self.max_bits.max(bits);
    }

    pub fn observe(&mut self, p: &Polynomial) {
        self.observe_coeffs(p.coeffs());
    }
}
