//! File formats and benchmark generators.

mod circuit_file;
mod gen;
mod spec;

pub use circuit_file::{parse_circuit, serialize_circuit};
pub use gen::{gen_hwb, gen_random_perm, Rotation};
pub use spec::{parse_spec, serialize_spec};

use crate::perm::Permutation;

/// `i,f(i),f(i)-i` rows with a header, for plotting.
pub fn diff_csv(p: &Permutation) -> String {
    let mut s = String::from("i,f,diff\n");
    for (i, &v) in p.table().iter().enumerate() {
        s.push_str(&format!("{i},{v},{}\n", v as i64 - i as i64));
    }
    s
}
