//! Axes, eigenspace decompositions, Miyamoto involutions and axets.

mod axet;
mod check;
mod miyamoto;

pub use axet::{classify_2gen_axet, close_axes, miyamoto_group, Axet, AxetShape, Caps, MiyamotoGroup};
pub use check::{check_axis, eigenspace, eigenspaces, projection, AxisReport, FusionViolation, Projector};
pub use miyamoto::{miyamoto, MiyamotoMap};
