//! Curves on the 6-punctured sphere, half-twist actions, Dehn coordinates and
//! the classification of rational 3-tangles generated by three half twists.

pub mod curve;

pub use curve::{Curve, CurveError, EquatorialCode, Generator, Hemisphere, TwistLetter, TwistWord};
pub mod dehn;
pub mod oracle;
pub mod classifier;
pub mod certificate;
