pub mod glue;
pub mod graph;
pub mod orb;
pub mod order;
pub mod sl2z;
pub mod sym;
pub mod twist;
pub mod verify;
