pub mod cupmap;
pub mod exactla;
pub mod higgs;
pub mod liebranch;
pub mod polyring;
