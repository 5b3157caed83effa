//! Bundled example presentations.

use super::quiver::{Presentation, Quiver};
use crate::error::{Error, Result};
use crate::linalg::Field;

pub const FIXTURE_NAMES: [&str; 7] = [
    "FX-A2", "FX-A3", "FX-KRON", "FX-41", "FX-42", "FX-43", "FX-CAN222",
];

pub fn fixture(name: &str, field: Field) -> Result<Presentation> {
    let q = |v: &[&str], a: &[(&str, &str, &str)]| Quiver::new(v, a);
    let p = match name {
        "FX-A2" => Presentation::new(field, q(&["1", "2"], &[("a", "1", "2")])?),
        "FX-A3" => Presentation::new(
            field,
            q(&["1", "2", "3"], &[("alpha", "2", "1"), ("beta", "3", "2")])?,
        ),
        "FX-KRON" => Presentation::new(field, q(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")])?),
        "FX-41" => Presentation::new(
            field,
            q(
                &["1", "2", "3"],
                &[
                    ("alpha", "2", "1"),
                    ("beta", "1", "2"),
                    ("gamma", "3", "2"),
                    ("delta", "2", "3"),
                ],
            )?,
        )
        .relation(&[(1, &["gamma", "alpha"])])?
        .relation(&[(1, &["beta", "delta"])])?
        .relation(&[(1, &["alpha", "beta"]), (-1, &["delta", "gamma"])])?
        .relation(&[(1, &["gamma", "delta"])])?,
        "FX-42" => Presentation::new(
            field,
            q(&["1", "2"], &[("alpha", "2", "1"), ("beta", "1", "2")])?,
        )
        .relation(&[(1, &["alpha", "beta", "alpha"])])?,
        "FX-43" => Presentation::new(
            field,
            q(&["1", "2"], &[("alpha", "2", "1"), ("beta", "1", "2")])?,
        )
        .relation(&[(1, &["beta", "alpha"])])?,
        "FX-CAN222" => Presentation::new(
            field,
            q(
                &["1", "2", "3", "4", "5"],
                &[
                    ("a1", "1", "2"),
                    ("a2", "1", "3"),
                    ("a3", "1", "4"),
                    ("b1", "2", "5"),
                    ("b2", "3", "5"),
                    ("b3", "4", "5"),
                ],
            )?,
        )
        .relation(&[(1, &["a1", "b1"]), (-1, &["a2", "b2"]), (1, &["a3", "b3"])])?,
        _ => return Err(Error::Input(format!("unknown fixture '{name}'"))),
    };
    Ok(p.named(name))
}

/// `k[x]/(x^2)` as a one-loop quiver.
pub fn dual_numbers(field: Field) -> Presentation {
    Presentation::new(field, Quiver::new(&["1"], &[("x", "1", "1")]).expect("loop quiver"))
        .relation(&[(1, &["x", "x"])])
        .expect("loop relation")
        .named("k[x]/x^2")
}
