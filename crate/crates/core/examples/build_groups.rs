//! Build groups from generators, a raw table, and a direct product.

use fitting::corpus::catalog::{dicyclic, symmetric};
use fitting::{build_group, direct_product, GroupSpec, GroupTable, Result};

fn main() -> Result<()> {
    let s4 = build_group(&symmetric(4), 360)?;
    println!(
        "{}: order {}, primes {:?}",
        s4.name(),
        s4.order(),
        s4.primes()
    );

    let counts = (1..=s4.order()).filter_map(|k| {
        let c = (0..s4.order()).filter(|&x| s4.elt_order(x) == k).count();
        (c > 0).then_some((k, c))
    });
    println!("  element orders: {:?}", counts.collect::<Vec<_>>());

    let c3 = GroupSpec::from_cycles("C3", 3, &["(0 1 2)"]);
    let c3 = build_group(&c3, 360)?;
    let q8 = build_group(&dicyclic("Q8", 2), 360)?;
    let p = direct_product(&q8, &c3, 360)?;
    println!(
        "{}: order {}, factors of order {} and {}",
        p.table.name(),
        p.table.order(),
        p.left.order(),
        p.right.order()
    );

    // Klein four-group from its multiplication table; 0 is the identity.
    let mul = vec![0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0];
    let v4 = GroupTable::from_multiplication("V4", 4, mul)?;
    v4.validate()?;
    println!("V4 from a table: center has order {}", v4.center().order());

    match build_group(&symmetric(6), 360) {
        Err(e) => println!("S6 under cap 360: {e}"),
        Ok(g) => println!("S6 unexpectedly built with order {}", g.order()),
    }
    Ok(())
}
