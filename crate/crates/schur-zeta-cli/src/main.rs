fn main() { println!("schurz"); }
