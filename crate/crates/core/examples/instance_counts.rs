use std::collections::BTreeMap;
fn main() {
    let mut by_tag: BTreeMap<String, Vec<(u8, usize)>> = BTreeMap::new();
    for n in [2u8, 3, 4, 5] {
        let mut counts: BTreeMap<String, usize> = BTreeMap::new();
        for it in qgb_core::suites::straightening_instances(n)
            .into_iter()
            .chain(qgb_core::suites::appendix_instances(n))
        {
            *counts.entry(it.tag).or_default() += 1;
        }
        for it in qgb_core::suites::power_instances(n, 1) {
            *counts.entry(it.tag).or_default() += 1;
        }
        for (tag, c) in counts {
            by_tag.entry(tag).or_default().push((n, c));
        }
    }
    for (tag, counts) in &by_tag {
        println!("{tag}: {:?}", counts);
    }
    // tags that never fire
    let expected: Vec<String> = (1..=4).map(|i| format!("3.1.{i}"))
        .chain((1..=4).map(|i| format!("3.2.{i}")))
        .chain((1..=9).map(|i| format!("3.3.{i}")))
        .chain((1..=8).map(|i| format!("3.4.{i}")))
        .chain((1..=6).map(|i| format!("3.5.{i}")))
        .chain((1..=8).map(|i| format!("3.6.{i}")))
        .chain((1..=8).map(|i| format!("3.7.{i}")))
        .chain((1..=8).map(|i| format!("3.9.{i}")))
        .chain((1..=6).map(|i| format!("3.10.{i}")))
        .chain((1..=6).map(|i| format!("3.12.{i}")))
        .chain((1..=6).map(|i| format!("3.13.{i}")))
        .collect();
    for tag in expected {
        if !by_tag.contains_key(&tag) && tag != "3.10.4" {
            println!("NEVER INSTANTIATED: {tag}");
        }
    }
}
