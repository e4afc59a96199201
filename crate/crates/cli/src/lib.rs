pub mod commands;
pub mod descriptor;
pub mod examples;
