pub mod braid;
pub mod catalogue;
pub mod checkerboard;
pub mod diagram;
pub mod error;
pub mod matrix;
pub mod poly;
pub mod quadform;
pub mod theoremlab;
