fn main() {
    println!("lsft");
}
