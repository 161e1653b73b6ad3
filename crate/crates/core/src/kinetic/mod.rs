//! Phase-space solvers (stub).
