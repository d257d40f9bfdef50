//! Regenerates the checked-in `.lsab` fixture documents from the library
//! fixtures. Run from anywhere: `cargo run -p lsab-cli --example
//! regen_fixtures`.

use lsab_cli::doc::{emit_document, parse_document, Document, ObjectValue};
use lsab_core::algebra::{Algebra, AlgebraKind};
use lsab_core::bialgebra::{check_lsa_bialgebra, BialgebraPair};
use lsab_core::fixtures;
use lsab_core::scalar::Scalar;
use lsab_core::tensor::Tensor2;

fn write(doc: &Document, name: &str) {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    std::fs::create_dir_all(&dir).expect("fixtures dir");
    let text = emit_document(doc);
    // every shipped fixture must reparse to itself
    assert_eq!(&parse_document(&text, false).unwrap(), doc, "{name}");
    std::fs::write(dir.join(name), text + "\n").expect("write fixture");
    println!("wrote fixtures/{name}");
}

fn main() {
    // e1.lsab: the field algebra with its canonical solution data and two
    // bialgebra pairs (zero dual and unital dual)
    {
        let mut doc = Document::default();
        doc.push("e1", ObjectValue::Algebra(fixtures::e1().rename("e1")));
        let mut r = Tensor2::zeros(1, 1);
        r.set(0, 0, Scalar::one());
        doc.push("rEE", ObjectValue::Tensor2(r));
        doc.push(
            "trace",
            ObjectValue::Form(lsab_core::form::BilinearForm::from_int_entries(1, &[(0, 0, 1)])),
        );
        doc.push(
            "e1dual",
            ObjectValue::Algebra(Algebra::from_int_entries(
                "e1dual",
                AlgebraKind::LeftSymmetric,
                1,
                &[(0, 0, 0, 1)],
            )),
        );
        doc.push(
            "zero1",
            ObjectValue::Algebra(Algebra::zero("zero1", AlgebraKind::LeftSymmetric, 1)),
        );
        doc.push(
            "P",
            ObjectValue::Pair {
                algebra: "e1".to_owned(),
                dual: "e1dual".to_owned(),
            },
        );
        doc.push(
            "P0",
            ObjectValue::Pair {
                algebra: "e1".to_owned(),
                dual: "zero1".to_owned(),
            },
        );
        write(&doc, "e1.lsab");
    }

    // a2.lsab: A2 with companions for the semidirect and tensor commands
    {
        let mut doc = Document::default();
        let a2 = fixtures::a2().rename("a2");
        doc.push("a2", ObjectValue::Algebra(a2.clone()));
        doc.push(
            "lstar",
            ObjectValue::Rep {
                algebra: "a2".to_owned(),
                rep: a2.left_rep().dual(),
            },
        );
        doc.push(
            "zero-action",
            ObjectValue::Rep {
                algebra: "a2".to_owned(),
                rep: lsab_core::rep::Representation::zero(2, 2),
            },
        );
        doc.push("rI", ObjectValue::Tensor2(fixtures::identity_tensor(2)));
        doc.push(
            "identity-form",
            ObjectValue::Form(lsab_core::form::BilinearForm::identity(2)),
        );
        doc.push(
            "zero2",
            ObjectValue::Algebra(Algebra::zero("zero2", AlgebraKind::LeftSymmetric, 2)),
        );
        doc.push(
            "Pa",
            ObjectValue::Pair {
                algebra: "a2".to_owned(),
                dual: "zero2".to_owned(),
            },
        );
        write(&doc, "a2.lsab");
    }

    // fixtures.lsab: the six base left-symmetric algebras
    {
        let mut doc = Document::default();
        for a in fixtures::lsa_fixtures() {
            let name = a.name().to_lowercase();
            doc.push(name.clone(), ObjectValue::Algebra(a.rename(name)));
        }
        write(&doc, "fixtures.lsab");
    }

    // aff1.lsab: the non-abelian 2-dimensional Lie algebra and its
    // symplectic form
    {
        let mut doc = Document::default();
        doc.push("aff1", ObjectValue::Algebra(fixtures::aff1()));
        doc.push("omega", ObjectValue::Form(fixtures::omega_aff1()));
        write(&doc, "aff1.lsab");
    }

    // g4.lsab: the 2-step nilpotent symplectic fixture
    {
        let mut doc = Document::default();
        doc.push("g4", ObjectValue::Algebra(fixtures::g4_nilpotent()));
        doc.push("omega", ObjectValue::Form(fixtures::omega_g4()));
        write(&doc, "g4.lsab");
    }

    // bad.lsab: a pair that fails the bialgebra conditions
    {
        let pair = BialgebraPair::new(fixtures::s2(), fixtures::n2()).unwrap();
        assert!(
            !check_lsa_bialgebra(&pair).passes(),
            "bad.lsab must stay a failing pair"
        );
        let mut doc = Document::default();
        doc.push("s2", ObjectValue::Algebra(fixtures::s2().rename("s2")));
        doc.push("n2", ObjectValue::Algebra(fixtures::n2().rename("n2")));
        doc.push(
            "P",
            ObjectValue::Pair {
                algebra: "s2".to_owned(),
                dual: "n2".to_owned(),
            },
        );
        write(&doc, "bad.lsab");
    }

    // ooperator.lsab: T = id with the regular representation of A2
    {
        let a2 = fixtures::a2();
        let mut doc = Document::default();
        doc.push(
            "ga2",
            ObjectValue::Algebra(a2.sub_adjacent_lie().unwrap().rename("ga2")),
        );
        doc.push(
            "regular",
            ObjectValue::Rep {
                algebra: "ga2".to_owned(),
                rep: a2.left_rep(),
            },
        );
        doc.push("tid", ObjectValue::Tensor2(fixtures::identity_tensor(2)));
        doc.push(
            "od",
            ObjectValue::OOperator {
                lie: "ga2".to_owned(),
                rep: "regular".to_owned(),
                map: "tid".to_owned(),
            },
        );
        write(&doc, "ooperator.lsab");
    }

    // malformed.lsab: rejected in strict mode (unreduced rational)
    {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
        let text = r#"{
  "version": 1,
  "objects": [
    {
      "type": "algebra",
      "name": "e1",
      "kind": "left-symmetric",
      "dim": 1,
      "entries": [
        { "i": 0, "j": 0, "k": 0, "c": "2/4" }
      ]
    }
  ]
}
"#;
        assert!(parse_document(text, false).is_err());
        assert!(parse_document(text, true).is_ok());
        std::fs::write(dir.join("malformed.lsab"), text).expect("write fixture");
        println!("wrote fixtures/malformed.lsab");
    }
}

