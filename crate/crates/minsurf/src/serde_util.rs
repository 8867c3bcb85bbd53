//! Serde helpers: complex numbers serialize as `[re, im]` pairs.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(z: &Complex64, ser: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&[z.re, z.im], ser)
}

pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Complex64, D::Error> {
    let [re, im] = <[f64; 2]>::deserialize(de)?;
    if !re.is_finite() || !im.is_finite() {
        return Err(D::Error::custom("non-finite complex component"));
    }
    Ok(Complex64::new(re, im))
}

pub mod opt {
    use super::*;

    pub fn serialize<S: Serializer>(z: &Option<Complex64>, ser: S) -> Result<S::Ok, S::Error> {
        match z {
            Some(z) => super::serialize(z, ser),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> Result<Option<Complex64>, D::Error> {
        let v = Option::<[f64; 2]>::deserialize(de)?;
        Ok(v.map(|[re, im]| Complex64::new(re, im)))
    }
}
