fn main() {
    std::process::exit(pairwise_designs::harness::run());
}
