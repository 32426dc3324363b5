// Drive the command-line interface in-process.

use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let calls: [&[&str]; 4] = [
        &["classify", "--graph", "A_", "--labels", "[[1],[2]]", "--format", "text"],
        &["minsize", "--graph", "Bw", "--format", "text"],
        &["construct", "--graph", "Cr", "--method", "two-uniform", "--format", "dot"],
        &["uniform", "--graph", "Bw", "--k", "2", "--element-bound", "5", "--size-bound", "2", "--format", "text"],
    ];
    let expected = [0, 0, 0, 1];
    for (args, want) in calls.iter().zip(expected) {
        let mut argv = vec!["iasi".to_string()];
        argv.extend(args.iter().map(|s| s.to_string()));
        let mut out = Vec::new();
        let code = iasi::cli::run(&argv, &mut out);
        println!("$ iasi {}\n{}exit {code}\n", args.join(" "), String::from_utf8(out)?);
        assert_eq!(code, want);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
