use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{invalid, Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    Symmetric,
    Alternating,
}

impl Group {
    pub fn letter(self) -> &'static str {
        match self {
            Group::Symmetric => "S",
            Group::Alternating => "A",
        }
    }

    /// Bound from the proved diameter remark: 8 for S_n, 10 for A_n.
    pub fn proved_diameter_bound(self) -> u32 {
        match self {
            Group::Symmetric => 8,
            Group::Alternating => 10,
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "S" | "s" | "sym" | "symmetric" => Ok(Group::Symmetric),
            "A" | "a" | "alt" | "alternating" => Ok(Group::Alternating),
            _ => Err(invalid(format!("unknown group {s:?}; expected S or A"))),
        }
    }
}

impl Serialize for Group {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.letter())
    }
}
