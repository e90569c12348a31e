//! Generalized Schur algebras over heredity data: exact linear algebra,
//! combinatorics of colored tableaux, the algebra `T^A_a(n,d)`, standard
//! modules, characters and tensor product filtrations.

pub mod combinatorics;
pub mod exactlin;
pub mod superalg;
pub mod symfunc;
pub mod cli;
pub mod schurcore;
pub mod modfilt;
