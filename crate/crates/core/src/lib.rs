//! Exact character tables of the `(k, n)`-injection association scheme and
//! Delsarte linear programming bounds on injection codes.

pub mod bounds;
pub mod characters;
pub mod error;
pub mod injection;
pub mod partition;
pub mod rsk;
pub mod scheme;
pub mod tableau;

pub use error::{Error, Result};
pub use injection::{classify_pair, enumerate_classes, hamming_distance, CyclePathType, Injection};
pub use partition::{enumerate_partitions, is_horizontal_strip, strip_pairs, syt_count, Partition, SkewShape};
pub use rsk::{rsk, rsk_inverse, RskPair};
pub use scheme::{character_table, CharacterTable, DualTable, IrrepLabel};
pub use tableau::{enumerate_syt, StandardYoungTableau, Tabloid};
