#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "hcast/decompose.hpp"
#include "hcast/linear_models.hpp"
#include "hcast/normalize.hpp"
#include "hcast/rng.hpp"
#include "hcast/table.hpp"
#include "hcast/windows.hpp"

namespace hcast {

// One split's series in every representation the model variants consume,
// plus the window start offsets. Windows are gathered on demand so large
// splits never materialize their full sample set.
struct WindowDataset {
    Eigen::MatrixXd raw;       // N x C, normalized target channels
    Eigen::MatrixXd trend;     // N x C
    Eigen::MatrixXd seasonal;  // N x C
    Eigen::MatrixXd embedded;  // N x d (empty when no embedding was built)
    std::vector<ChannelInfo> channel_map;
    std::vector<std::string> target_columns;
    Eigen::Index lookback = 0;
    Eigen::Index horizon = 0;
    std::vector<Eigen::Index> starts;

    Eigen::Index count() const { return static_cast<Eigen::Index>(starts.size()); }
    Eigen::Index channels() const { return raw.cols(); }
    Eigen::Index embed_width() const { return embedded.cols(); }
    bool has_decomposition() const { return trend.size() > 0; }
    bool has_embedding() const { return embedded.size() > 0; }
};

// Decomposes the split's target channels, embeds the full table per `spec`,
// and records window offsets. `targets` empty means every numeric column.
WindowDataset build_window_dataset(const TimeTable& normalized_split, const EmbeddingSpec& spec,
                                   const std::vector<std::string>& targets, Eigen::Index lookback,
                                   Eigen::Index horizon, Eigen::Index stride = 1);

// Assembles the batch for `kind` from the given sample indices. When
// noise_dim > 0 the noise rows are standard-normal draws from `noise_rng`,
// or zero when it is null (the deterministic evaluation path).
VariantBatch gather(const WindowDataset& ds, VariantKind kind,
                    const std::vector<Eigen::Index>& sample_ids, Eigen::Index noise_dim = 0,
                    Rng* noise_rng = nullptr);

// Per-sample flattened model input, noise excluded: the conditioning vector
// a discriminator sees. Linear/NLinear: S*C; DLinear: 2*S*C (seasonal then
// trend); DELinear: S*d. Row order is time-major.
Eigen::Index condition_length(const WindowDataset& ds, VariantKind kind);
Eigen::MatrixXd flatten_condition(const WindowDataset& ds, VariantKind kind,
                                  const std::vector<Eigen::Index>& sample_ids);

// Reshapes a batched prediction/target into per-sample columns of length
// T*C (time-major), and back.
Eigen::MatrixXd flatten_candidate(const Eigen::MatrixXd& values, VariantKind kind,
                                  Eigen::Index horizon, Eigen::Index channels,
                                  Eigen::Index batch);
Eigen::MatrixXd unflatten_candidate(const Eigen::MatrixXd& flat, VariantKind kind,
                                    Eigen::Index horizon, Eigen::Index channels,
                                    Eigen::Index batch);

}  // namespace hcast
