fn main() {
    println!("zmlab");
}
