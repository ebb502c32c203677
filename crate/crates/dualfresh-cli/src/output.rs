//! Numeric formatting and the metric vocabulary shared by the subcommands.

use clap::ValueEnum;

/// Round to 12 significant digits so printed numbers round-trip exactly in
/// regression comparisons.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap()
}

/// Decimal rendering of a rounded value; NaN becomes the empty field.
pub fn fmt(x: f64) -> String {
    let r = sig12(x);
    if r.is_nan() {
        String::new()
    } else {
        format!("{r}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Metric {
    #[value(name = "avg_aoi")]
    AvgAoi,
    #[value(name = "avg_paoi")]
    AvgPaoi,
    #[value(name = "effective_rate")]
    EffectiveRate,
    #[value(name = "obsolete_ratio")]
    ObsoleteRatio,
}

impl Metric {
    pub const ALL: [Metric; 4] = [
        Metric::AvgAoi,
        Metric::AvgPaoi,
        Metric::EffectiveRate,
        Metric::ObsoleteRatio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::AvgAoi => "avg_aoi",
            Metric::AvgPaoi => "avg_paoi",
            Metric::EffectiveRate => "effective_rate",
            Metric::ObsoleteRatio => "obsolete_ratio",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(sig12(1.25), 1.25);
        assert_eq!(sig12(4.0 / 3.0), 1.33333333333);
        assert_eq!(sig12(0.0), 0.0);
        assert_eq!(fmt(4.0 / 3.0), "1.33333333333");
        assert_eq!(fmt(f64::NAN), "");
    }
}
