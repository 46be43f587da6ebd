fn main() {
    let (p, v) = qmf::probe();
    println!("{p} {v}");
}
