#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "hcast/table.hpp"

namespace hcast {

enum class NormMode { minmax, zscore };

std::string to_string(NormMode mode);
NormMode norm_mode_from_string(const std::string& text);

struct ColumnStats {
    std::string name;
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double stddev = 0.0;
};

// Per-column scaling parameters. Fit on the training split and applied to
// every split so no statistic of the future leaks into the past.
struct NormalizationParams {
    NormMode mode = NormMode::minmax;
    std::vector<ColumnStats> columns;

    const ColumnStats& stats_for(const std::string& name) const;
    // Multiplier that maps a normalized-space error to original units
    // (max - min for minmax, stddev for zscore).
    double scale_for(const std::string& name) const;
};

NormalizationParams fit_normalization(const TimeTable& t, NormMode mode = NormMode::minmax);

// v -> (v - min) / (max - min), or (v - mean) / stddev. A constant column
// maps to all zeros and denormalizes back to the constant.
TimeTable apply_normalization(const TimeTable& t, const NormalizationParams& params);

// Fit-and-apply on the same table.
std::pair<TimeTable, NormalizationParams> normalize(const TimeTable& t,
                                                    NormMode mode = NormMode::minmax);

TimeTable denormalize(const TimeTable& t, const NormalizationParams& params);

// Denormalizes a matrix whose columns correspond to `names`.
Eigen::MatrixXd denormalize_matrix(const Eigen::MatrixXd& values,
                                   const std::vector<std::string>& names,
                                   const NormalizationParams& params);

}  // namespace hcast
