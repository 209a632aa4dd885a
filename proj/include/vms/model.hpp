#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vms/error.hpp"

namespace vms {

/// Frozen posterior samples of the screening model. Each of the S Gibbs
/// samples holds a link matrix (K x F) mapping fingerprints to latent space
/// and per-protein latent vectors (P x K). The model is read-only after
/// construction and safe to share across threads.
struct ScreeningModel {
    std::uint32_t n_samples = 0;   // S
    std::uint32_t latent_dim = 0;  // K
    std::uint32_t n_features = 0;  // F
    std::uint32_t n_proteins = 0;  // P

    // link[s][k][f] flattened s-major: s*(K*F) + k*F + f
    std::vector<double> link;
    // protein_latents[s][p][k] flattened s-major: s*(P*K) + p*K + k
    std::vector<double> protein_latents;

    double link_at(std::uint32_t s, std::uint32_t k, std::uint32_t f) const {
        return link[static_cast<std::size_t>(s) * latent_dim * n_features +
                    static_cast<std::size_t>(k) * n_features + f];
    }
    double protein_at(std::uint32_t s, std::uint32_t p, std::uint32_t k) const {
        return protein_latents[static_cast<std::size_t>(s) * n_proteins * latent_dim +
                               static_cast<std::size_t>(p) * latent_dim + k];
    }

    std::size_t link_size() const {
        return static_cast<std::size_t>(n_samples) * latent_dim * n_features;
    }
    std::size_t protein_size() const {
        return static_cast<std::size_t>(n_samples) * n_proteins * latent_dim;
    }

    /// Checks dims >= 1, matrix sizes, and that every entry is finite.
    void validate() const;
};

/// Sparse binary chemical fingerprint: the set of active feature indices,
/// strictly ascending, each < n_features of the model it is screened against.
struct Fingerprint {
    std::string molecule_id;
    std::vector<std::uint32_t> active;

    /// Checks strict ascending order and index bounds.
    void validate(std::uint32_t n_features) const;
};

/// One prediction: mean and sample standard deviation over the S per-sample
/// scores for a (molecule, protein) pair. std uses the (S-1) denominator and
/// is exactly 0 when S == 1.
struct Prediction {
    std::string molecule_id;
    std::uint32_t protein_idx = 0;
    double mean = 0.0;
    double std = 0.0;
};

using LatentVector = std::vector<double>;

/// Latent map for one Gibbs sample: u[k] = sum of link columns selected by
/// the fingerprint, summed in ascending feature order (deterministic).
LatentVector compute_latent(const ScreeningModel& model, std::uint32_t sample,
                            const Fingerprint& fp);

/// Mean and confidence over all S samples for one (molecule, protein) pair.
Prediction predict_one(const ScreeningModel& model, const Fingerprint& fp,
                       std::uint32_t protein);

/// Batch screen: result is row-major (fps.size() x proteins.size()), element
/// (i, j) identical to predict_one(model, fps[i], proteins[j]).
/// Molecules may be processed in parallel; output order is input order.
std::vector<Prediction> screen(const ScreeningModel& model,
                               const std::vector<Fingerprint>& fps,
                               const std::vector<std::uint32_t>& proteins,
                               unsigned threads = 1);

/// Deterministic synthetic model + fingerprints for tests and the CLI.
/// Entries are i.i.d. Gaussian with stddev 1/sqrt(K) so scores stay O(1);
/// each fingerprint activates ceil(density * F) distinct features.
/// The generator is pinned to mt19937_64 plus an explicit Box-Muller
/// transform, so a given seed reproduces the same model bit-for-bit.
struct SyntheticData {
    ScreeningModel model;
    std::vector<Fingerprint> fingerprints;
};
SyntheticData generate_synthetic(std::uint64_t seed, std::uint32_t n_samples,
                                 std::uint32_t latent_dim, std::uint32_t n_features,
                                 std::uint32_t n_proteins, std::uint32_t n_molecules,
                                 double density);

/// Root-mean-square difference of two equal-length, non-empty vectors.
double rmse(const std::vector<double>& a, const std::vector<double>& b);

} // namespace vms
