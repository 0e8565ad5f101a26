#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercomp/groth_ring.hpp"
#include "hypercomp/iso_engine.hpp"
#include "hypercomp/quadrics.hpp"
#include "report.hpp"

namespace hypercomp::cli {

inline const char* kTopicQuadricCounts = "Quadric point counts";
inline const char* kTopicQuadricSeparation = "Separation of quadric normal forms";
inline const char* kTopicFamilies = "Cylinder isomorphism families";
inline const char* kTopicStabilization = "Stabilization";
inline const char* kTopicInvolution = "Degree-8 involution";
inline const char* kTopicMultiplicity = "Multiplicity certificates";
inline const char* kTopicCubics = "Non-normal cubic surfaces";
inline const char* kTopicEuler = "Euler characteristics";
inline const char* kTopicGa = "Additive group actions";
inline const char* kTopicMutation = "Mutation robustness";

void add_named(Report& r, const std::string& topic, const std::vector<NamedCheck>& checks,
               const std::string& prefix = "");

// Brute force against closed forms, one verdict per form. Returns the observed
// counts for the separation check.
std::vector<QuadricCountCheck> check_quadric_counts(Report& r, unsigned nmax, const std::vector<std::uint64_t>& qs,
                                                    bool include_y0, const CountOptions& opts);
void check_quadric_separation(Report& r, const std::vector<QuadricCountCheck>& counts);

struct FamilyRun {
  std::optional<FamilyResult> result;
  std::size_t mutants = 0, caught = 0;
};

FamilyRun check_family(Report& r, const DanielewskiData& data, CertRoute route, unsigned mutations, std::uint64_t seed,
                       std::optional<std::size_t> stabilize_to, std::optional<std::uint32_t> eval_prime,
                       std::uint64_t eval_cap);
void check_open_question(Report& r, unsigned variant);
std::optional<IsoCertificate> check_involution(Report& r, CertRoute route, std::optional<std::uint32_t> eval_prime,
                                               std::uint64_t eval_cap);
void check_multiplicities(Report& r, const std::vector<std::uint32_t>& primes, const CountOptions& opts);
void check_nonnormal_cubics(Report& r, const std::vector<std::uint64_t>& qs, const CountOptions& opts);
void check_euler(Report& r, const std::vector<std::uint64_t>& qs, const CountOptions& opts);
void check_ga_actions(Report& r, const std::optional<std::string>& only);

std::string join(const std::vector<std::uint64_t>& v, const char* sep = ",");

}  // namespace hypercomp::cli
