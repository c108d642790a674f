use branching_core::fock::Sector;
use branching_core::operators::conformal_suite;
use branching_core::scalars::int;

#[test]
fn conformal_suite_holds_to_depth_two() {
    for sector in [Sector::NS, Sector::Ramond] {
        let reports = conformal_suite(sector, &int(2));
        assert_eq!(reports.len(), 3 * 25 + 25 + 30);
        for r in &reports {
            assert!(r.passed(), "{r:?}");
        }
    }
}
