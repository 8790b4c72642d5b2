//! Every runnable example under `examples/` is also run as a test.

macro_rules! example_test {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(exact_arithmetic, "exact_arithmetic.rs");
example_test!(poincare_sphere, "poincare_sphere.rs");
example_test!(tensor_product, "tensor_product.rs");
example_test!(connected_sums_gamma, "connected_sums_gamma.rs");
example_test!(oracle_crosscheck, "oracle_crosscheck.rs");
example_test!(file_validation, "file_validation.rs");
example_test!(character_variety, "character_variety.rs");
example_test!(certify_report, "certify_report.rs");
