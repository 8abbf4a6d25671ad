//! Arithmetic-event counting for the cost comparison between the pencil
//! construction and the sub-determinant route. One count per scalar
//! multiply/add/subtract/divide over the rationals; bignum cost is not
//! modelled and canonicalization (gcd work) is not counted.

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct FlopCounter {
    pub adds: u64,
    pub muls: u64,
    pub divs: u64,
}

impl FlopCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, n: u64) {
        self.adds += n;
    }

    pub fn mul(&mut self, n: u64) {
        self.muls += n;
    }

    pub fn div(&mut self, n: u64) {
        self.divs += n;
    }

    pub fn total(&self) -> u64 {
        self.adds + self.muls + self.divs
    }
}

/// Operation counts for the two five-point conic routes.
#[derive(Debug, Clone, Copy)]
pub struct FlopReport {
    pub pencil: FlopCounter,
    pub det: FlopCounter,
}

impl FlopReport {
    /// pencil/determinant cost ratio.
    pub fn ratio(&self) -> f64 {
        self.pencil.total() as f64 / self.det.total() as f64
    }
}
