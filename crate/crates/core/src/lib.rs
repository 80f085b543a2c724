//! Legendrian links in the 1-jet space `J¹(S¹)` of the circle.
//!
//! Fronts are event words on the annulus ([`front`]); Legendrian Reidemeister
//! moves, stabilisation and isotopy search live in [`moves`] and [`search`].
//! The classification of helix and cable links is exposed as decision
//! procedures in [`classify`], backed by the convex-torus slope arithmetic in
//! [`slope`] and the dictionary to `S³` in [`translate`].

pub mod front;
pub mod moves;
pub mod search;
pub mod slope;
pub mod classify;
pub mod translate;
pub mod format;
pub mod svg;
