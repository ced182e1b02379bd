pub mod family;
pub mod io;
pub mod recipe;
pub mod report;
pub mod verify;
