//! Walks the whole catalog: every Bianchi entry with its parameter domain,
//! Thurston geometry and position in the classification scheme, followed by
//! a histogram of the classes that actually occur.

use std::collections::BTreeMap;

use acbm3::report::{catalog_entries, render_catalog_text};

fn main() {
    let entries = catalog_entries();
    print!("{}", render_catalog_text(&entries));

    let mut by_class: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for e in &entries {
        by_class.entry(&e.class).or_default().push(&e.label);
    }
    println!();
    println!("classes hit by the catalog ({} distinct):", by_class.len());
    for (class, labels) in by_class {
        println!("  {class}");
        println!("    {}", labels.join(", "));
    }
}
