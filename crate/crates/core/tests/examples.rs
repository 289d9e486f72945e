// Each example runs to completion as part of the test suite.

mod generator_identities {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/generator_identities.rs"));

    #[test]
    fn runs() {
        run().unwrap();
    }
}

mod cartan_embedding {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cartan_embedding.rs"));

    #[test]
    fn runs() {
        run().unwrap();
    }
}

mod eigenfunction_catalog {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/eigenfunction_catalog.rs"));

    #[test]
    fn runs() {
        run().unwrap();
    }
}

mod quaternionic_grassmannian {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quaternionic_grassmannian.rs"));

    #[test]
    fn runs() {
        run().unwrap();
    }
}

mod parameter_matrices {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/parameter_matrices.rs"));

    #[test]
    fn runs() {
        run().unwrap();
    }
}

mod derived_families {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/derived_families.rs"));

    #[test]
    fn runs() {
        run().unwrap();
    }
}

mod sphere_and_projective {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sphere_and_projective.rs"));

    #[test]
    fn runs() {
        run().unwrap();
    }
}

mod verification_report {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verification_report.rs"));

    #[test]
    fn runs() {
        run().unwrap();
    }
}
