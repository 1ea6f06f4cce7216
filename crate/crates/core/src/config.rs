/// Enumeration limits shared by every brute-force routine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest representation or parameter space, as log2 of the point count.
    pub max_space_log2: u32,
    /// Largest group that may be enumerated element by element.
    pub max_group: u64,
    /// Largest residue endomorphism ring enumerated by the locality test.
    pub max_end: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_space_log2: 24,
            max_group: 100_000,
            max_end: 1 << 20,
        }
    }
}

impl Caps {
    pub fn space_ok(&self, size: f64) -> bool {
        size <= 2f64.powi(self.max_space_log2 as i32)
    }
}
