//! Cyclic codes over the ring `R = Z4 + uZ4` with `u^2 = 0`, their Z4-module
//! structure and their binary Gray images.
//!
//! ```
//! use ru4::{CyclicCode, Factorization, PolyR};
//!
//! let fact = Factorization::new(7).unwrap();
//! assert_eq!(fact.z4_lifts[1].to_string(), "3,1,2,1");
//!
//! let code = CyclicCode::from_generators(7, vec!["0:2".parse::<PolyR>().unwrap()]).unwrap();
//! assert_eq!(code.log2_size(), 7);
//! assert_eq!(code.min_lee_weight(26).unwrap(), Some(4));
//! ```

pub mod cyclic;
pub mod error;
pub mod factor;
pub mod gray;
pub mod image;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod ring;

pub use cyclic::{enumerate_all, CanonicalGens, CrtProfile, CyclicCode, Z4CyclicCode, MAX_LENGTH};
pub use error::{Error, ParseError, Result};
pub use factor::Factorization;
pub use gray::BinaryWord;
pub use image::{params, search_best, BinaryCodeSet, BinaryParams, Caps, CodeSummary, SearchReport};
pub use linalg::{standard_form, MatZ4, PackedZ4, StandardForm};
pub use poly::{PolyF2, PolyR, PolyZ4, F2};
pub use ring::{IdealLabel, RElem, Z4};
