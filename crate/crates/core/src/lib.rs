pub mod circulation;
pub mod distcurl;
pub mod error;
pub mod hydro;
pub mod jet;
pub mod numerics;
pub mod scalar;
pub mod spectral;
pub mod specfun;
pub mod states;
pub mod vec3;
pub mod weakforms;

pub use error::{Error, Result};
pub use jet::Jet;
pub use scalar::{Primitive, Real};

/// Double-precision aliases for the generic types.
pub type Constants = states::PhysicalConstants<f64>;
pub type Wave = states::WaveFunction<f64>;
pub type Flow = states::FlowFields<f64>;
pub type Curve = circulation::CurveSpec<f64>;
pub type Grid = numerics::grid::GridSpec<f64>;
pub type Test = numerics::testfn::TestFunction<f64>;
pub type VecTest = numerics::testfn::VectorTest<f64>;
pub type SpaceTimeTest = weakforms::SpaceTimeTest<f64>;
