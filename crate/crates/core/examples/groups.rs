//! Finite groups from the catalog: tables, subgroups, automorphisms and
//! holomorphs.
//!
//! ```bash
//! cargo run --example groups
//! ```

use skewbrace::group::catalog::{groups_of_order, make_group, GroupKind};
use skewbrace::group::morphism::{group_automorphisms, group_isomorphism, holomorph};
use skewbrace::ElementSet;

fn main() -> skewbrace::Result<()> {
    for n in [8, 12] {
        println!("groups of order {n}:");
        for entry in groups_of_order(n)? {
            let g = &entry.group;
            let auts = group_automorphisms(g, 10_000)?.len();
            println!(
                "  {:<10} abelian={:<5} |Z|={:<2} |G'|={:<2} |Aut|={}",
                entry.name,
                g.is_abelian(),
                g.center().len(),
                g.derived_subgroup().len(),
                auts
            );
        }
    }

    let s4 = make_group(&GroupKind::parse("S4")?)?;
    let subgroups = s4.all_subgroups(1 << 12)?;
    let normal = subgroups.iter().filter(|h| s4.is_normal(h).unwrap_or(false)).count();
    println!("S4 has {} subgroups, {normal} of them normal", subgroups.len());

    // the holomorph of the Klein four-group is S4
    let klein = make_group(&GroupKind::parse("C2xC2")?)?;
    let hol = holomorph(&klein, 1 << 10)?;
    println!("Hol(C2xC2) has order {}", hol.group.order());
    println!("Hol(C2xC2) ≅ S4: {}", group_isomorphism(&hol.group, &s4).is_some());

    let g = make_group(&GroupKind::parse("D12")?)?;
    let r = ElementSet::new(12, [1]);
    println!("<1> in D12 has {} elements", g.subgroup_closure(&r).len());
    Ok(())
}
