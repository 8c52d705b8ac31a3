//! The derivations the external observers perform at the border.

use super::{apply_rule, use_axiom, AxiomId, DerivationTree, Formula, LogicError, ObserverProfile, Rule, Sequent, Uses};
use super::{RuleKind, BASE_ATOM};
use crate::qubit::Basis;

/// `A` for the first basis state, `A^` for the second.
pub fn literal(outcome: Basis) -> Formula {
    let a = Formula::atom(BASE_ATOM);
    match outcome {
        Basis::Zero => a,
        Basis::One => a.orth(),
    }
}

/// `⊢ A` (or `⊢ A^`) by cutting the superposition axiom against `&L` over
/// the identity on the target literal. Consumes one use of the axiom.
pub fn derive_cut(profile: &mut ObserverProfile, target: Basis) -> Result<DerivationTree, LogicError> {
    let lit = literal(target);
    let axiom = use_axiom(profile, AxiomId::Superposition)?;
    let id = apply_rule(profile, Rule::Identity(lit.clone()), vec![])?;
    let weakened = match target {
        Basis::Zero => apply_rule(profile, Rule::AndLeft1(lit.orth()), vec![id])?,
        Basis::One => apply_rule(profile, Rule::AndLeft2(lit.orth()), vec![id])?,
    };
    apply_rule(profile, Rule::Cut, vec![axiom, weakened])
}

/// G's derivation of `⊢ A` from what P handed over.
pub fn derive_cut_scenario(profile: &mut ObserverProfile) -> Result<DerivationTree, LogicError> {
    derive_cut(profile, Basis::Zero)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CloningReport {
    pub allow_cloning: bool,
    /// G's cut derivations, in order.
    pub cuts: Vec<DerivationTree>,
    /// `⊢ A & A^` rebuilt from the two cuts.
    pub conjunction: Option<DerivationTree>,
    /// Why G stopped, if she did.
    pub halted: Option<LogicError>,
    /// A's derivation of `⊢ _|_` from G's judgements.
    pub collapse: Option<DerivationTree>,
}

impl CloningReport {
    pub fn reaches_falsum(&self) -> bool {
        self.collapse.is_some()
    }
}

/// G tries to derive both `⊢ A` and `⊢ A^`. Without cloning the second cut
/// finds the superposition axiom spent. With cloning it succeeds, G forms
/// the contradiction, and A turns the two judgements into `⊢ _|_`.
pub fn cloning_paradox_demo(allow_cloning: bool) -> CloningReport {
    let mut g = ObserverProfile::quantum_logician();
    let uses = if allow_cloning { Uses::Unlimited } else { Uses::Finite(1) };
    g.ledger.grant(AxiomId::Superposition, uses);

    let mut report = CloningReport {
        allow_cloning,
        cuts: Vec::new(),
        conjunction: None,
        halted: None,
        collapse: None,
    };
    for target in [Basis::Zero, Basis::One] {
        match derive_cut(&mut g, target) {
            Ok(t) => report.cuts.push(t),
            Err(e) => {
                report.halted = Some(e);
                return report;
            }
        }
    }
    match apply_rule(&g, Rule::AndFormation, report.cuts.clone()) {
        Ok(t) => report.conjunction = Some(t),
        Err(e) => {
            report.halted = Some(e);
            return report;
        }
    }
    let received = report
        .cuts
        .iter()
        .map(|t| DerivationTree::assume(t.conclusion().clone()))
        .collect();
    match classical_collapse(&ObserverProfile::classical(), received) {
        Ok(t) => report.collapse = Some(t),
        Err(e) => report.halted = Some(e),
    }
    report
}

/// Rewrites `⊢ A^` as `⊢ A -> _|_` and applies modus ponens with `⊢ A`.
/// The premises may come in either order.
pub fn classical_collapse(
    profile: &ObserverProfile,
    premises: Vec<DerivationTree>,
) -> Result<DerivationTree, LogicError> {
    for rule in [RuleKind::FalsumDef, RuleKind::ModusPonens] {
        if !profile.has_rule(rule) {
            return Err(LogicError::RuleNotAvailable {
                observer: profile.observer,
                rule,
            });
        }
    }
    let missing = |reason: &str| LogicError::PatternMismatch {
        rule: RuleKind::ModusPonens,
        reason: reason.to_string(),
    };
    let [first, second]: [DerivationTree; 2] = premises
        .try_into()
        .map_err(|_| missing("needs exactly the judgements `|- F` and `|- F^`"))?;
    let is_orth_of = |neg: &DerivationTree, pos: &DerivationTree| match (
        &neg.conclusion().succedent,
        &pos.conclusion().succedent,
    ) {
        (Some(Formula::Orth(n)), Some(p)) => **n == *p,
        _ => false,
    };
    let (pos, neg) = if is_orth_of(&second, &first) {
        (first, second)
    } else if is_orth_of(&first, &second) {
        (second, first)
    } else {
        return Err(missing("premises are not a formula and its orthocomplement"));
    };
    let implication = apply_rule(profile, Rule::FalsumDef, vec![neg])?;
    apply_rule(profile, Rule::ModusPonens, vec![pos, implication])
}

/// What G concludes after a projective measurement of `A`: an instance of
/// the excluded middle and one of non-contradiction.
pub fn post_measurement_judgements(outcome: Basis) -> Vec<Sequent> {
    let x = literal(outcome);
    let y = x.clone().orth();
    vec![
        Sequent::asserts(x.clone().disj(y.clone())),
        Sequent::refutes(x.conj(y)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::search::{bounded_search, DEFAULT_DEPTH};
    use crate::logic::Observer;
    use proptest::prelude::*;

    fn s(text: &str) -> Sequent {
        text.parse().unwrap()
    }

    const GOLDEN: &str = "\
|- A    [cut]
  |- A & A^    [axiom superposition: mirror measurement of the superposed state]
  A & A^ |- A    [&L1]
    A |- A    [id]
";

    #[test]
    fn cut_matches_golden_transcript() {
        let mut g = ObserverProfile::quantum_external();
        let t = derive_cut_scenario(&mut g).unwrap();
        assert_eq!(t.render(), GOLDEN);
        t.validate().unwrap();
        assert_eq!(
            derive_cut_scenario(&mut g),
            Err(LogicError::AxiomExhausted {
                axiom: AxiomId::Superposition
            })
        );
    }

    #[test]
    fn symmetric_cut() {
        let mut g = ObserverProfile::quantum_external();
        let t = derive_cut(&mut g, Basis::One).unwrap();
        assert_eq!(t.conclusion(), &s("|- A^"));
        assert_eq!(t.children()[1].conclusion(), &s("A & A^ |- A^"));
        assert_eq!(t.children()[1].children()[0].conclusion(), &s("A^ |- A^"));
    }

    #[test]
    fn cloning_demo_both_ways() {
        let r = cloning_paradox_demo(false);
        assert_eq!(r.cuts.len(), 1);
        assert_eq!(r.cuts[0].conclusion(), &s("|- A"));
        assert!(matches!(r.halted, Some(LogicError::AxiomExhausted { .. })));
        assert!(!r.reaches_falsum());

        let r = cloning_paradox_demo(true);
        assert!(r.halted.is_none());
        let conj = r.conjunction.as_ref().unwrap();
        assert_eq!(conj.conclusion(), &s("|- A & A^"));
        assert_eq!(conj.axiom_uses()[&AxiomId::Superposition], 2);
        let bot = r.collapse.unwrap();
        assert_eq!(bot.conclusion(), &s("|- _|_"));
        bot.validate().unwrap();
    }

    #[test]
    fn collapse_needs_classical_rules_and_both_premises() {
        let given = || vec![DerivationTree::assume(s("|- A^")), DerivationTree::assume(s("|- A"))];
        let t = classical_collapse(&ObserverProfile::classical(), given()).unwrap();
        assert_eq!(t.conclusion(), &s("|- _|_"));
        assert_eq!(t.children()[1].conclusion(), &s("|- A -> _|_"));

        let err = classical_collapse(&ObserverProfile::quantum_external(), given()).unwrap_err();
        assert!(matches!(err, LogicError::RuleNotAvailable { observer: Observer::G, .. }));

        let err = classical_collapse(&ObserverProfile::classical(), vec![DerivationTree::assume(s("|- A"))]);
        assert!(matches!(err, Err(LogicError::PatternMismatch { .. })));
    }

    #[test]
    fn empirical_judgements() {
        assert_eq!(post_measurement_judgements(Basis::Zero), vec![s("|- A (+) A^"), s("A & A^ |-")]);
        assert_eq!(post_measurement_judgements(Basis::One), vec![s("|- A^ (+) A"), s("A^ & A |-")]);
        let p = bounded_search(&ObserverProfile::insider(), &[], DEFAULT_DEPTH);
        for b in [Basis::Zero, Basis::One] {
            for j in post_measurement_judgements(b) {
                assert!(!p.derivable(&j), "P derives {j}");
            }
        }
    }

    #[test]
    fn profile_separation() {
        let p = bounded_search(&ObserverProfile::insider(), &[], DEFAULT_DEPTH);
        assert!(p.derivable(&s("|- A & A^")));
        assert!(!p.derivable(&s("|- A")));
        assert!(!p.derivable(&s("|- A^")));
        assert!(p.sequents().iter().all(|q| !q.contains_falsum()));

        let g = bounded_search(&ObserverProfile::quantum_external(), &[], DEFAULT_DEPTH);
        assert!(g.derivable(&s("|- A")));
        assert!(!g.derivable(&s("|- _|_")));
        assert!(g.sequents().iter().all(|q| !q.contains_falsum()));

        let a = bounded_search(&ObserverProfile::classical(), &[s("|- A"), s("|- A^")], DEFAULT_DEPTH);
        assert!(a.derivable(&s("|- _|_")));
    }

    #[test]
    fn symmetry_transform() {
        assert_eq!(AxiomId::Superposition.sequent().mirror(), AxiomId::Liar.sequent());
        assert_eq!(AxiomId::Mirror.sequent().mirror(), s("A^ (+) A |- A^ (+) A"));
    }

    proptest! {
        #[test]
        fn cut_conclusion_tracks_target(zero in any::<bool>()) {
            let b = if zero { Basis::Zero } else { Basis::One };
            let mut g = ObserverProfile::quantum_external();
            let t = derive_cut(&mut g, b).unwrap();
            prop_assert_eq!(t.conclusion(), &Sequent::asserts(literal(b)));
            prop_assert!(t.check_rules(&g).is_ok());
            prop_assert!(derive_cut(&mut g, b.flip()).is_err());
        }
    }
}
