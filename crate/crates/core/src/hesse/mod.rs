//! Hesse-form elliptic curves `μ·XYZ = ν·(X³+Y³+Z³)`.
//!
//! The group law has identity `O = [1:−1:0]` and negation `[X:Y:Z] ↦ [Y:X:Z]`.
//! Since `O` is a flex, `P + Q` is the negation of the third point on the
//! chord `PQ`.

mod curve;
mod dual;
mod group;
mod torsion;

pub use curve::{HesseCurve, ProjPoint};
pub use dual::Dual;
pub use group::{minus2p, pencil_tangent};
pub use torsion::{find_torsion, order_certificate, point_order, TorsionOptions, TorsionPoint};
