//! Bilinear saddle-point test problems and their structural constants.

pub mod bilinear;
pub mod haar;
pub mod spectral;

pub use bilinear::{
    gen_bilinear, gen_bilinear_with, regenerate, BilinearInstance, BilinearParams,
    InstanceDescriptor, ProblemError, RotationKind,
};
pub use haar::haar_rotation;
pub use spectral::spectral_norm;

pub type BilinearInstance64 = BilinearInstance<f64>;
