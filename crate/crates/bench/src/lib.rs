//! Shared fixtures for the kernel benchmarks.

use superwitt::pmod::{PModule, WeightLine};
use superwitt::scalar::frac;
use superwitt::tensor::TensorModule;
use superwitt::weyl::AlgebraShape;

/// A representative tensor module: `(m,n) = (2,2)`, mixed weight lines,
/// generic `lambda`.
pub fn fixture_tensor_module() -> TensorModule {
    let shape = AlgebraShape::plus(2, 2).unwrap();
    let p = PModule::new(
        shape,
        vec![WeightLine::PolyLine, WeightLine::ShiftedLaurent(frac(1, 2))],
    )
    .unwrap();
    TensorModule::full(p, vec![frac(1, 2), frac(1, 3)]).unwrap()
}

/// The same module restricted to the simple span with `r = m`.
pub fn fixture_l_module() -> TensorModule {
    let shape = AlgebraShape::plus(2, 2).unwrap();
    let p = PModule::new(
        shape,
        vec![WeightLine::PolyLine, WeightLine::ShiftedLaurent(frac(1, 2))],
    )
    .unwrap();
    TensorModule::l_restricted(p, 2, vec![frac(1, 2), frac(1, 3)]).unwrap()
}
