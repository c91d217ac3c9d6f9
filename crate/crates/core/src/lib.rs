pub mod algebra;
pub mod cli;
pub mod dessins;
pub mod families;
pub mod monodromy;
pub mod verify;
