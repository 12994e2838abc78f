//! Bundled data files: embedded at compile time or read from a directory.

use std::path::PathBuf;

use crate::error::{Error, Result};

/// Environment variable naming a directory that replaces the embedded data.
pub const DATA_DIR_VAR: &str = "PTD_DATA_DIR";

const EMBEDDED: &[(&str, &str)] = &[
    ("alt7_gl42.mat", include_str!("../data/alt7_gl42.mat")),
    ("binary_golay.code", include_str!("../data/binary_golay.code")),
    ("hs_176.grp", include_str!("../data/hs_176.grp")),
    ("m11_11.grp", include_str!("../data/m11_11.grp")),
    ("m11_12.grp", include_str!("../data/m11_12.grp")),
    ("m24.grp", include_str!("../data/m24.grp")),
    ("psl27_8.grp", include_str!("../data/psl27_8.grp")),
    ("ternary_golay.code", include_str!("../data/ternary_golay.code")),
];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum DataSource {
    #[default]
    Embedded,
    Dir(PathBuf),
}

impl DataSource {
    /// `Dir` when [`DATA_DIR_VAR`] is set, otherwise `Embedded`.
    pub fn from_env() -> Self {
        match std::env::var_os(DATA_DIR_VAR) {
            Some(dir) => DataSource::Dir(PathBuf::from(dir)),
            None => DataSource::Embedded,
        }
    }

    pub fn read(&self, name: &str) -> Result<String> {
        self.try_read(name)?
            .ok_or_else(|| Error::MissingData(name.to_string()))
    }

    /// `Ok(None)` when the file is absent.
    pub fn try_read(&self, name: &str) -> Result<Option<String>> {
        match self {
            DataSource::Embedded => Ok(EMBEDDED
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, text)| text.to_string())),
            DataSource::Dir(dir) => {
                let path = dir.join(name);
                match std::fs::read_to_string(&path) {
                    Ok(text) => Ok(Some(text)),
                    Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
                    Err(e) => Err(e.into()),
                }
            }
        }
    }

    pub fn names() -> impl Iterator<Item = &'static str> {
        EMBEDDED.iter().map(|(n, _)| *n)
    }
}
