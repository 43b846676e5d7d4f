#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rfml/tgda/profile.hpp"

namespace rfml::tgda {

// Sum of per-feature log-likelihoods of x (length 50) under one profile.
double profile_log_likelihood(const ClassProfile& profile, std::span<const double> x, const ScoringOptions& options);

struct Classification {
    std::size_t index = 0;  // argmax profile index (lowest index on ties)
    std::string label;
    std::vector<double> loglik;  // one entry per profile, in set order
};

Classification classify(const ProfileSet& profiles, std::span<const double> x);

struct JointClassification {
    std::size_t index = 0;
    std::string label;
    Attributes attrs;
    double loglik = 0.0;
    std::vector<double> all;
};

// Argmax over (label, attrs) pairs. Every profile must carry the same
// non-empty set of attribute keys.
JointClassification joint_classify(const ProfileSet& profiles, std::span<const double> x);

// Throws InvalidArgument unless all profiles share one non-empty key set.
void require_homogeneous_attrs(const ProfileSet& profiles);

// Scores a row-major rows x 50 matrix. Returns the argmax profile index per
// row; when `scores` is non-null it receives rows x profiles log-likelihoods.
std::vector<std::size_t> classify_batch(const ProfileSet& profiles, std::span<const double> features, std::size_t rows,
                                        std::vector<double>* scores = nullptr);

namespace reference {
std::vector<std::size_t> classify_batch(const ProfileSet& profiles, std::span<const double> features, std::size_t rows,
                                        std::vector<double>* scores = nullptr);
}

}  // namespace rfml::tgda
