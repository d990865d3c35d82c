fn main() {
    println!("twoscale");
}
