//! Self-describing code files: a field record next to a generator matrix
//! in canonical element indices.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::{Field, FieldRecord};
use crate::linear_code::LinearCode;

/// `{"field": {...}, "generator": [[...], ...]}`. Extra keys are ignored,
/// so a construction report is also a valid code file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub field: FieldRecord,
    pub generator: Vec<Vec<u32>>,
}

impl CodeFile {
    pub fn from_code(code: &LinearCode) -> Self {
        CodeFile { field: code.field().record(), generator: code.generator().to_indices() }
    }

    pub fn to_code(&self) -> Result<LinearCode> {
        let field = Field::from_record(&self.field)?;
        LinearCode::from_indices(&field, &self.generator)
    }
}
