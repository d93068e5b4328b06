//! Checked-in example codes in the generator-matrix file format.

use crate::code::{parse_code, Code};

pub const HEXACODE: &str = include_str!("../data/codes/hexacode.code");
pub const HAMMING74: &str = include_str!("../data/codes/hamming74.code");
pub const GOLAY3: &str = include_str!("../data/codes/golay3.code");
pub const C6: &str = include_str!("../data/codes/c6.code");
pub const C8: &str = include_str!("../data/codes/c8.code");
pub const P5: &str = include_str!("../data/codes/p5.code");
pub const P4: &str = include_str!("../data/codes/p4.code");
pub const MDS_3_2: &str = include_str!("../data/codes/mds_3_2.code");
pub const MDS_4_2: &str = include_str!("../data/codes/mds_4_2.code");
pub const MDS_5_3: &str = include_str!("../data/codes/mds_5_3.code");

pub const ALL: [(&str, &str); 10] = [
    ("hexacode", HEXACODE),
    ("hamming74", HAMMING74),
    ("golay3", GOLAY3),
    ("c6", C6),
    ("c8", C8),
    ("p5", P5),
    ("p4", P4),
    ("mds_3_2", MDS_3_2),
    ("mds_4_2", MDS_4_2),
    ("mds_5_3", MDS_5_3),
];

/// Parses a checked-in code by name.
pub fn load(name: &str) -> Option<Code> {
    let (_, text) = ALL.iter().find(|(n, _)| *n == name)?;
    Some(parse_code(text, false).expect("checked-in codes are valid"))
}
