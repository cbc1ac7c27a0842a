use super::{d_lambda, enumerate_subdata, Instance, SubData};
use crate::algebra::rational::to_i64;

/// A sub-data and degree whose parabolic slope equals that of the instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub sub: SubData,
    pub degree: i64,
}

/// First sub-data `L` (in enumeration order) admitting an integer `e` with
/// `(e + alpha(L)) / n(L) = (d + alpha(R)) / n(R)`.
pub fn semistability_witness(instance: &Instance) -> Option<Witness> {
    let lambda = instance.lambda();
    enumerate_subdata(&instance.data).into_iter().find_map(|sub| {
        let e = d_lambda(&sub, &lambda);
        to_i64(&e).map(|degree| Witness { sub, degree })
    })
}

/// True when no proper sub-object can have the same parabolic slope.
pub fn ss_equals_stable(instance: &Instance) -> bool {
    semistability_witness(instance).is_none()
}
