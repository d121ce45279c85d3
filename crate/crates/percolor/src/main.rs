fn main() {
    println!("percolor");
}
