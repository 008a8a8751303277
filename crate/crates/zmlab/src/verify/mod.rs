//! Cross-validation harness comparing independent computational routes.
