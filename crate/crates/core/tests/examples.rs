macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run().expect(concat!($file, " should run"));
        }
    };
}

example!(cofinite, "cofinite.rs");
example!(membership, "membership.rs");
example!(completeness, "completeness.rs");
example!(rewriting, "rewriting.rs");
example!(nfa_reduction, "nfa_reduction.rs");
example!(gadget_reduction, "gadget_reduction.rs");
example!(hard_families, "hard_families.rs");
example!(oracle_check, "oracle_check.rs");
example!(subset_dot, "subset_dot.rs");
example!(embedded_cli, "embedded_cli.rs");
