//! Browser bindings (under construction).
