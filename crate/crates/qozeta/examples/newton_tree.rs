//! The decorated tree of the Newton process, as text and as JSON.
//!
//! ```bash
//! cargo run -p qozeta --example newton_tree
//! ```

use qozeta::mpoly::{parse, FormExponents, QOPair};
use qozeta::zeta::newton_tree;

fn main() -> qozeta::Result<()> {
    let p = QOPair::from_poly(&parse("(z^2-x^3)^2+x^7", &["x", "z"])?, FormExponents::ones(1))?;
    let tree = newton_tree(&p, 64)?;
    print!("{tree}");
    println!("depth {}, {} nodes", tree.depth(), tree.size());
    println!("{}", serde_json::to_string(&tree.branches[0].child.arrows).expect("serializable"));
    Ok(())
}
