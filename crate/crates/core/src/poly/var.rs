//! The fixed variable registry.
//!
//! Every indeterminate used anywhere in the crate is registered here once,
//! with a stable index. The mapping between indices and names is bijective
//! for the lifetime of the process, so polynomials can be serialized and
//! re-parsed without any side tables.

use std::fmt;

/// Names in index order. Index 0 binds strongest in the graded-lex term order.
const NAMES: &[&str] = &[
    "x1", "x2", // diagonal traceless x
    "x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32", // generic traceless x
    "y11", "y12", "y13", "y21", "y22", "y23", "y31", "y32", // generic traceless y
    "z11", "z12", "z13", "z21", "z22", "z23", "z31", "z32", "z33", // fully generic z
    "t", // auxiliary
];

/// Handle to a registered variable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId(pub(crate) u8);

impl VarId {
    /// Number of registered variables.
    pub const COUNT: usize = NAMES.len();

    pub const X1: VarId = VarId(0);
    pub const X2: VarId = VarId(1);
    pub const T: VarId = VarId(27);

    /// Variable with the given registry index. Panics if out of range.
    pub fn from_index(index: usize) -> VarId {
        assert!(index < NAMES.len(), "variable index {index} out of range");
        VarId(index as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> &'static str {
        NAMES[self.0 as usize]
    }

    /// Looks a variable up by name.
    pub fn from_name(name: &str) -> Option<VarId> {
        NAMES
            .iter()
            .position(|n| *n == name)
            .map(|i| VarId(i as u8))
    }

    /// The eight free entries of the generic traceless `x`, in row order.
    pub fn generic_x_vars() -> [VarId; 8] {
        [
            VarId(2),
            VarId(3),
            VarId(4),
            VarId(5),
            VarId(6),
            VarId(7),
            VarId(8),
            VarId(9),
        ]
    }

    /// The eight free entries of the generic traceless `y`, in row order
    /// (`y11, y12, y13, y21, y22, y23, y31, y32`).
    pub fn y_vars() -> [VarId; 8] {
        [
            VarId(10),
            VarId(11),
            VarId(12),
            VarId(13),
            VarId(14),
            VarId(15),
            VarId(16),
            VarId(17),
        ]
    }

    /// The nine entries of the fully generic 3×3 matrix, in row order.
    pub fn z_vars() -> [VarId; 9] {
        [
            VarId(18),
            VarId(19),
            VarId(20),
            VarId(21),
            VarId(22),
            VarId(23),
            VarId(24),
            VarId(25),
            VarId(26),
        ]
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
