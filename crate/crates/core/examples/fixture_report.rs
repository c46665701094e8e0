//! Parses a fixture file, runs every check and prints the report.

use grouplab::harness::{parse_fixture, parse_selection, run_fixture, RunOptions};

const FIXTURE: &str = "\
# quaternion group of order 8
group Q8
backend pc
prime 2
ngens 3
pow 1 = 3
pow 2 = 3
comm 2 1 = 3
end

group S3
backend perm
degree 3
gen a = (1 2 3)
gen b = (1 2)
end

check word_law on Q8 word=(pow x0 4)
check fitting on S3 expect=2
";

fn main() -> grouplab::Result<()> {
    let file = parse_fixture(FIXTURE)?;
    let report = run_fixture(&file, &parse_selection("all")?, &RunOptions::default())?;
    print!("{}", report.to_table());
    println!();
    print!("{}", report.fitting_table_text());
    if let Some(row) = report.row("Q8", "np_series") {
        println!("\n{}", serde_json::to_string_pretty(row).unwrap());
    }
    Ok(())
}
