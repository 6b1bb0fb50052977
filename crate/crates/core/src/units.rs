//! SI ↔ geometric (c = 1, lengths in metres) conversions.
//!
//! Angular velocities are taken in rad/s and map to 1/m; times in seconds
//! map to metres of light travel.

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

pub fn omega_to_geometric(omega_rad_per_s: f64) -> f64 {
    omega_rad_per_s / SPEED_OF_LIGHT
}

pub fn omega_to_si(omega_per_m: f64) -> f64 {
    omega_per_m * SPEED_OF_LIGHT
}

pub fn seconds_to_length(t: f64) -> f64 {
    t * SPEED_OF_LIGHT
}

pub fn length_to_seconds(l: f64) -> f64 {
    l / SPEED_OF_LIGHT
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ten_hertz() {
        assert!((omega_to_geometric(10.0) - 3.3356409519815204e-8).abs() < 1e-22);
    }

    proptest! {
        #[test]
        fn round_trips(x in -1e12_f64..1e12) {
            let tol = 1e-14 * x.abs();
            prop_assert!((omega_to_si(omega_to_geometric(x)) - x).abs() <= tol);
            prop_assert!((length_to_seconds(seconds_to_length(x)) - x).abs() <= tol);
        }
    }
}
