mod audit;
mod checks;
mod corpus;
mod format;

fn main() {
    println!("placeholder");
}
