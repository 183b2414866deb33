use ellsurf::basechange::{rh_genus, transition, ya_config, ya_profile};
use ellsurf::exactalg::{q, qi, Rational};
use ellsurf::kodaira::{surface_invariants, KodairaType};
use ellsurf::nslattice::shioda_tate_rho;
use ellsurf::reduction::{reduction_trace, ContractionOrder};
use ellsurf::trisection::{genus_table, tangency_parameters};

#[test]
fn ya_family_is_elliptic_elliptic() {
    let tangent = tangency_parameters();
    for a in [qi(2), qi(3), qi(4), qi(7), q(9, 2), q(-1, 3), qi(-5)] {
        let cfg = ya_config(&a).unwrap();
        let inv = surface_invariants(&cfg).unwrap();
        assert_eq!((inv.chi_top, inv.deg_l, inv.h11), (12, 1, 12), "a = {a}");
        assert_eq!(rh_genus(&ya_profile(&a).unwrap(), 0), Ok(1));
        let rho = shioda_tate_rho(&cfg, 1).unwrap();
        let want: (&str, u32) = if tangent.contains(&a) { ("2I3 + I6", 12) } else { ("4I3", 11) };
        assert_eq!((cfg.summary().as_str(), rho), want, "a = {a}");
    }
}

#[test]
fn genus_chain_is_uniform() {
    for a in [qi(2), qi(4), q(7, 3)] {
        let g = genus_table(&a);
        assert_eq!((g.p_a, g.genus), (4, 1));
    }
}

#[test]
fn graph_reduction_agrees_with_monodromy_table() {
    for d in [1, 2, 3] {
        let t = reduction_trace(d, ContractionOrder::HighestLabel).unwrap();
        assert_eq!(Ok(t.terminal), transition(KodairaType::IVStar, d));
    }
}

#[test]
fn excluded_parameters() {
    for a in [Rational::from_integer(0.into()), qi(1)] {
        assert!(ya_profile(&a).is_err());
    }
}
