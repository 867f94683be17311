//! Small worked values, one group per module, checked through the public API.

use num_bigint::BigInt;
use schurlie::bracketing::bracketing_function;
use schurlie::derivation::Derivation;
use schurlie::error::Error;
use schurlie::free_group::{EndoOnFree, GroupWord};
use schurlie::lie::{lyndon_basis, specht_wever, BracketShape, LieElement};
use schurlie::magnus::{classify_pair, johnson_image, magnus, PairClass};
use schurlie::parse::{parse_lie, parse_tensor};
use schurlie::permutation::Permutation;
use schurlie::schur::{EndoMatrix, SchurElement};
use schurlie::tensor::TensorElement;
use schurlie::transfer::{coset_transversal, operad_compose, operad_unit, star, transfer, Composition};
use schurlie::word::{stabilizer_orbit_key, Word};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn t(s: &str, n: usize) -> TensorElement {
    parse_tensor(s, n).unwrap()
}

fn lie(s: &str, n: usize) -> LieElement {
    parse_lie(s, n).unwrap()
}

fn perm(s: &str, q: usize) -> Permutation {
    Permutation::parse(s, Some(q)).unwrap()
}

#[test]
fn place_permutations() {
    assert_eq!(w("1.2").act(&perm("(1 2)", 2)).unwrap(), w("2.1"));
    assert_eq!(w("1.2.3").act(&Permutation::identity(3)).unwrap(), w("1.2.3"));
    assert_eq!(w("1.2.3").act(&perm("(1 2 3)", 3)).unwrap(), w("3.1.2"));
    assert!(matches!(w("1.2").act(&Permutation::identity(3)), Err(Error::Dimension(_))));
    assert_eq!(w("1.1").orbit().len(), 1);
    assert_eq!(w("1.1.2").orbit().len(), 3);
    assert_eq!(w("3.1.3").sorted_rep(), w("1.3.3"));
    assert_eq!(stabilizer_orbit_key(&w("1.1"), &w("2.1")).unwrap(), w("1.2"));
    assert_eq!(stabilizer_orbit_key(&w("1.2"), &w("2.1")).unwrap(), w("2.1"));
    assert_eq!(stabilizer_orbit_key(&w("1.1.2"), &w("3.1.2")).unwrap(), w("1.3.2"));
    assert!(matches!(stabilizer_orbit_key(&w("2.1"), &w("1.2")), Err(Error::Argument(_))));
    assert_eq!(w("1.2.1").multidegree(2).0, vec![2, 1]);
}

#[test]
fn lyndon_and_embedding() {
    let names = |n, p| lyndon_basis(n, p).iter().map(ToString::to_string).collect::<Vec<_>>();
    assert_eq!(names(2, 1), ["x1", "x2"]);
    assert_eq!(names(2, 2), ["[x1,x2]"]);
    assert_eq!(names(2, 3), ["[x1,[x1,x2]]", "[[x1,x2],x2]"]);
    assert_eq!(lie("[x1,x2]", 2).embed(), t("x1.x2 - x2.x1", 2));
    assert_eq!(lie("[[x1,x2],x3]", 3).embed(), t("x1.x2.x3 - x2.x1.x3 - x3.x1.x2 + x3.x2.x1", 3));
    assert!(lie("[x1,x1]", 2).is_zero());
    assert_eq!(lie("[x2,x1]", 2), lie("[x1,x2]", 2).neg());
    assert!(lie("[[x1,x2],x1] + [[x2,x1],x1]", 2).is_zero());
    assert_eq!(specht_wever(2, &w("1.2")).unwrap(), lie("[x1,x2]", 2));
    assert_eq!(specht_wever(2, &w("2")).unwrap(), lie("x2", 2));
    assert!(matches!(specht_wever(2, &Word::empty()), Err(Error::Argument(_))));
}

#[test]
fn bracketing_functions() {
    let br = |s: &str| bracketing_function(&s.parse::<BracketShape>().unwrap()).to_string();
    assert_eq!(br("[[,],]"), "1 - (1 2) - (1 2 3) + (1 3)");
    assert_eq!(br("[,[,]]"), "1 - (2 3) - (1 3 2) + (1 3)");
    assert_eq!(br(""), "1");
}

#[test]
fn schur_elements() {
    let f = SchurElement::from_orbit_data(2, 2, [(w("1.1"), w("1.2"), BigInt::from(1))]).unwrap();
    assert_eq!(f.apply_to_word(&w("1.1")).unwrap(), t("x1.x2 + x2.x1", 2));
    for v in ["1.2", "2.1", "2.2"] {
        assert!(f.apply_to_word(&w(v)).unwrap().is_zero());
    }
    assert!(f.to_matrix().is_equivariant().unwrap());
    let id = SchurElement::identity(2, 2);
    assert_eq!(id.compose(&f).unwrap(), f);
    assert!(f.compose(&SchurElement::zero(2, 2)).unwrap().is_zero());
    assert_eq!(id.apply_to_lie(&lie("[x1,x2]", 2)).unwrap(), lie("[x1,x2]", 2));
    assert!(SchurElement::from_orbit_data(2, 2, [(w("2.1"), w("1.2"), BigInt::from(1))]).is_err());
    assert!(SchurElement::from_orbit_data(2, 2, [(w("1.1"), w("2.1"), BigInt::from(1))]).is_err());

    let swap = EndoMatrix::from_fn(2, 2, |v| TensorElement::from_word(v.act(&perm("(1 2)", 2)).unwrap()));
    assert!(swap.is_equivariant().unwrap());
    let lopsided = EndoMatrix::from_fn(2, 2, |v| if *v == w("1.2") { TensorElement::from_word(w("1.2")) } else { TensorElement::zero(2) });
    assert!(!lopsided.is_equivariant().unwrap());

    assert_eq!(SchurElement::letter_substitution(2, 3, &Permutation::identity(2)).unwrap(), SchurElement::identity(2, 3));
    let zeta = SchurElement::letter_substitution(2, 2, &perm("(1 2)", 2)).unwrap();
    assert_eq!(zeta.apply_to_word(&w("1.1")).unwrap(), t("x2.x2", 2));
}

#[test]
fn transfer_and_operad() {
    let lambda: Composition = "(1,1)".parse().unwrap();
    let reps: Vec<String> = coset_transversal(&lambda).iter().map(ToString::to_string).collect();
    assert_eq!(reps, ["()", "(1 2)"]);
    assert_eq!(coset_transversal(&"(3)".parse().unwrap()).len(), 1);
    let id1 = SchurElement::identity(2, 1);
    assert_eq!(transfer(&lambda, &[id1.clone(), id1.clone()]).unwrap(), SchurElement::identity(2, 2).scale(&BigInt::from(2)));
    let f = SchurElement::from_orbit_data(2, 2, [(w("1.1"), w("1.2"), BigInt::from(3))]).unwrap();
    assert_eq!(transfer(&"(2)".parse().unwrap(), std::slice::from_ref(&f)).unwrap(), f);
    assert!(transfer(&lambda, std::slice::from_ref(&f)).is_err());
    assert_eq!(star(&SchurElement::scalar(2, BigInt::from(5)), &f).unwrap(), f.scale(&BigInt::from(5)));
    let unit = operad_unit(2);
    assert_eq!(operad_compose(&f, &[unit.clone(), unit.clone(), unit.clone()]).unwrap(), f);
    assert_eq!(operad_compose(&unit, std::slice::from_ref(&f)).unwrap(), f);
    assert!(matches!(operad_compose(&f, &[unit]), Err(Error::Argument(_))));
}

#[test]
fn derivations() {
    let chi = Derivation::chi_tilde(3, 1, 2).unwrap();
    assert_eq!(chi.to_string(), "x1=[x1,x2]; x2=0; x3=0");
    assert!(Derivation::chi_tilde(3, 2, 1).unwrap().apply(&lie("x1", 3)).unwrap().is_zero());
    assert_eq!(Derivation::theta_tilde(3, 3, 1, 2).unwrap().to_string(), "x1=0; x2=0; x3=[x1,x2]");
    assert!(Derivation::theta_tilde(3, 1, 2, 3).unwrap().apply(&lie("x2", 3)).unwrap().is_zero());
    assert_eq!(chi.apply(&lie("[x1,x3]", 3)).unwrap(), lie("[[x1,x2],x3]", 3));
    assert!(chi.bracket(&chi).unwrap().is_zero());
    assert_eq!(chi.schur_act(&SchurElement::identity(3, 2)).unwrap(), chi);
    assert!(matches!(Derivation::chi_tilde(3, 2, 2), Err(Error::Argument(_))));
}

#[test]
fn free_groups_and_johnson() {
    let chi = EndoOnFree::chi(3, 1, 2).unwrap();
    assert_eq!(chi.image(1).to_string(), "x2^-1 x1 x2");
    assert_eq!(chi.image(2).to_string(), "x2");
    assert_eq!(EndoOnFree::theta(3, 1, 2, 3).unwrap().image(1).to_string(), "x1 x2^-1 x3^-1 x2 x3");
    let x1x1: GroupWord = "x1 x1".parse().unwrap();
    assert_eq!(chi.apply(&x1x1).unwrap().to_string(), "x2^-1 x1 x1 x2");
    assert_eq!(magnus(&"x1".parse().unwrap(), 2).to_string(), "1 + X1");
    assert_eq!(magnus(&"x1^-1".parse().unwrap(), 2).to_string(), "1 - X1 + X1.X1");
    let c = GroupWord::commutator(&GroupWord::generator(1), &GroupWord::generator(2));
    assert_eq!(magnus(&c, 2).homogeneous_part(2), t("x1.x2 - x2.x1", 2));
    assert_eq!(johnson_image(&chi, 1).unwrap(), Derivation::chi_tilde(3, 1, 2).unwrap());
    assert!(matches!(johnson_image(&chi, 2), Err(Error::NotInFiltration(_))));

    let disjoint = classify_pair(4, (1, 2), (3, 4), 3).unwrap();
    assert_eq!(disjoint.classification, PairClass::FreeAbelian);
    assert!(disjoint.commutator_trivial);
    assert_eq!(classify_pair(3, (1, 3), (2, 3), 3).unwrap().classification, PairClass::FreeAbelian);
    let nielsen = classify_pair(3, (1, 2), (2, 1), 3).unwrap();
    assert_eq!(nielsen.classification, PairClass::FreeEvidence);
    let labels: Vec<&str> = nielsen.certificate.iter().map(|c| c.commutator.as_str()).collect();
    assert_eq!(labels, ["[a,b]", "[[a,b],a]", "[[a,b],b]"]);
    assert!(nielsen.certificate.iter().all(|c| c.nonzero && c.matches_bracket));
}
