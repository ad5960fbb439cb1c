// Builds Example 1 and prints its generators and JSON model.

use pencil5::fibration::build_example1;

pub fn run_example() -> pencil5::Result<()> {
    let model = build_example1(7);
    let json = model.to_json();
    for (k, g) in json.generators.iter().enumerate() {
        println!("Pf{} = {}", k + 1, g);
    }
    println!("{}", serde_json::to_string_pretty(&json)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> pencil5::Result<()> {
    run_example()
}
