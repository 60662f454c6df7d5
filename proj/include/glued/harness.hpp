#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glued/report.hpp"

namespace glued {

inline constexpr int kDefaultWritheSamples = 200;
inline constexpr int kDefaultClassificationSamples = 500;
inline constexpr int kDefaultGeometryPairs = 1000;
inline constexpr int kDefaultSkeinSamples = 25;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// |writhe| <= (m-1)^2 and per-pair writhe ranges on sampled configurations.
VerifyReport verify_writhe_bound(int m, int samples, std::uint64_t seed);
/// Crossing count parity equals m-1 on sampled configurations.
VerifyReport verify_parity(int m, int samples, std::uint64_t seed);
/// m <= 3: identification within the expected outcome set, pierce-case tally,
/// and (m = 3) the bundled trefoil and figure-eight witnesses.
VerifyReport verify_classification(int m, int samples, std::uint64_t seed);
/// Near edge-on projections of an unpierced glued ellipse give non-alternating diagrams.
VerifyReport verify_nonalternating_projection(int samples, std::uint64_t seed);
/// Pierce patterns of random disjoint and glued pairs, and interior
/// disjointness checked against a dense sampling oracle.
VerifyReport verify_geometry_lemmas(int pairs, std::uint64_t seed);
/// Writhe, Jones, tricoloring and crossing targets of the four families.
VerifyReport verify_families();
/// Conway and bracket expansion identities on random configurations (m = 2, 3)
/// and on gen_max_writhe(3).
VerifyReport verify_skein(int samples_per_m, std::uint64_t seed);
/// Conway degree witnesses for rigid links (m = 2 and m = 3).
VerifyReport verify_degree(int samples, std::uint64_t seed);
/// Internal consistency of the invariant engine on the bundled knot table.
VerifyReport verify_invariant_engine();

std::vector<std::string> suite_names();
/// Also accepts the parameterized forms writhe_bound_mN, parity_mN and
/// classification_mN for other N.
bool is_suite_name(const std::string& name);
/// Throws InvalidArgument for unknown names.
VerifyReport run_suite(const std::string& name, std::uint64_t seed);

/// Runs the named suites (all when empty), writing reports/<suite>.txt and
/// witnesses/<suite>/<index>.cfg under `results_dir`. Returns 0 iff all pass.
int run_all(const std::string& results_dir, std::uint64_t seed, const std::vector<std::string>& suites = {});

}  // namespace glued
