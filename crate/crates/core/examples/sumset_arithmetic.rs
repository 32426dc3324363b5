// Sum sets, integral multiples, difference sets and compatibility classes.
//
// ```bash
// cargo run --example sumset_arithmetic
// ```

use std::error::Error;

use iasi::intset::{compatibility_table, difference_set, integral_multiple, sumset};
use iasi::IntegerSet;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = IntegerSet::new([1, 2, 4])?;
    let b = IntegerSet::new([3, 5])?;

    let s = sumset(&a, &b)?;
    println!("{a} + {b} = {s}");
    assert_eq!(s, IntegerSet::new([4, 5, 6, 7, 9])?);

    let t = integral_multiple(3, &a)?;
    println!("3{a} = {t}");
    assert_eq!(t, IntegerSet::new([3, 6, 12])?);

    // |A + B| sits between |A| + |B| - 1 and |A||B|
    assert!(s.len() >= a.len() + b.len() - 1 && s.len() <= a.len() * b.len());

    let table = compatibility_table(&a, &b);
    println!("index {} neglecting number {}", table.index, table.neglecting_number);
    for (sum, pairs) in &table.classes {
        println!("  class {sum}: {pairs:?}");
    }
    assert_eq!(table.index, s.len());
    assert_eq!(table.neglecting_number, a.len() * b.len() - s.len());
    assert_eq!(table.class(7), Some(&[(2, 5), (4, 3)][..]));

    let da = difference_set(&a);
    let db = difference_set(&b);
    println!("D{a} = {:?}, D{b} = {:?}", da.elements(), db.elements());
    // shared difference 2 is what makes the sum 7 appear twice
    assert_eq!(da.first_common(&db), Some(2));

    let c = IntegerSet::new([0, 10])?;
    assert!(difference_set(&a).is_disjoint(&difference_set(&c)));
    assert_eq!(sumset(&a, &c)?.len(), a.len() * c.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
