use tai::textio::{ingest_csv, parse_theory};
use tai::{AttributeSet, Theory};

pub const WEATHER_CSV: &str = include_str!("../../../../data/weather.csv");
pub const SUBSET_SUM: &str = include_str!("../../../../data/subsetsum.tai");
pub const WORKED_PROOF: &str = include_str!("../../../../data/subsetsum31.prf");
pub const COMPLETION: &str = include_str!("../../../../data/completion.tai");
pub const WEATHER_BASIS: &str = include_str!("../../../../data/weather_basis.tai");

/// The eleven rules listed for the weather data at support 5.
pub const WEATHER_LISTED: &str = "\
{Wm@0} => {Tc@4}
{Wl@0} => {Tc@3}
{Wl@0} => {Wm@1}
{Wl@0} => {Wm@1, Tc@3}
{Wl@0, Wm@1} => {Tc@3}
{Rn@0, Wl@2} => {Tc@3}
{Rn@0, Rn@3} => {Tc@3}
{Tc@0, Rn@5} => {Tc@5}
{Tc@0, Tc@3, Rn@5} => {Tc@5}
{Rn@0, Tc@0, Rn@3} => {Tc@3}
{Rn@0, Tc@0, Wm@2} => {Tc@3}
";

pub fn weather() -> AttributeSet {
    ingest_csv(WEATHER_CSV).unwrap().to_timed_set()
}

pub fn theory(text: &str) -> Theory {
    parse_theory(text).unwrap().theory
}
