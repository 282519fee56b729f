pub mod exel;
pub mod groupoid;
pub mod groups;
pub mod homology;
pub mod linalg;
pub mod zcase;
