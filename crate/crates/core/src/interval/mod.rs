pub mod general;
pub mod path;
pub mod proper;
pub mod repr;

pub use general::{interval_colouring, interval_colouring_traced, IntervalStep, IntervalTrace};
pub use path::{build_star_path, first_path_neighbours, StarPath};
pub use proper::proper_interval_colouring;
pub use repr::{Interval, IntervalRepresentation, Rational};
