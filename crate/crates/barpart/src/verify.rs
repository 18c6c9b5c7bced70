//! Corpus verifier (to be filled in).
