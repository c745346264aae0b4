#include "hcast/normalize.hpp"

#include <cmath>
#include <stdexcept>

namespace hcast {

std::string to_string(NormMode mode) { return mode == NormMode::minmax ? "minmax" : "zscore"; }

NormMode norm_mode_from_string(const std::string& text) {
    if (text == "minmax") return NormMode::minmax;
    if (text == "zscore") return NormMode::zscore;
    throw std::invalid_argument("unknown normalization mode '" + text + "'");
}

const ColumnStats& NormalizationParams::stats_for(const std::string& name) const {
    for (const ColumnStats& c : columns)
        if (c.name == name) return c;
    throw std::invalid_argument("NormalizationParams: no stats for column '" + name + "'");
}

double NormalizationParams::scale_for(const std::string& name) const {
    const ColumnStats& s = stats_for(name);
    const double scale = mode == NormMode::minmax ? s.max - s.min : s.stddev;
    return scale > 0.0 ? scale : 1.0;
}

NormalizationParams fit_normalization(const TimeTable& t, NormMode mode) {
    NormalizationParams params;
    params.mode = mode;
    for (const std::size_t j : t.numeric_indices()) {
        const Column& c = t.columns()[j];
        for (auto m : c.missing)
            if (m)
                throw std::invalid_argument("fit_normalization: column '" + c.name +
                                            "' has missing values; impute first");
        ColumnStats s;
        s.name = c.name;
        s.min = c.values.minCoeff();
        s.max = c.values.maxCoeff();
        s.mean = c.values.mean();
        s.stddev = std::sqrt((c.values.array() - s.mean).square().mean());
        params.columns.push_back(std::move(s));
    }
    return params;
}

namespace {

double forward_one(double v, const ColumnStats& s, NormMode mode) {
    if (mode == NormMode::minmax) {
        const double range = s.max - s.min;
        return range > 0.0 ? (v - s.min) / range : 0.0;
    }
    return s.stddev > 0.0 ? (v - s.mean) / s.stddev : 0.0;
}

double inverse_one(double v, const ColumnStats& s, NormMode mode) {
    if (mode == NormMode::minmax) return v * (s.max - s.min) + s.min;
    return v * s.stddev + s.mean;
}

}  // namespace

TimeTable apply_normalization(const TimeTable& t, const NormalizationParams& params) {
    std::vector<Column> cols = t.columns();
    for (Column& c : cols) {
        if (c.kind != ColumnKind::numeric) continue;
        const ColumnStats& s = params.stats_for(c.name);
        for (Eigen::Index i = 0; i < c.values.size(); ++i)
            c.values[i] = forward_one(c.values[i], s, params.mode);
    }
    return TimeTable(std::move(cols));
}

std::pair<TimeTable, NormalizationParams> normalize(const TimeTable& t, NormMode mode) {
    NormalizationParams params = fit_normalization(t, mode);
    return {apply_normalization(t, params), std::move(params)};
}

TimeTable denormalize(const TimeTable& t, const NormalizationParams& params) {
    std::vector<Column> cols = t.columns();
    for (Column& c : cols) {
        if (c.kind != ColumnKind::numeric) continue;
        const ColumnStats& s = params.stats_for(c.name);
        for (Eigen::Index i = 0; i < c.values.size(); ++i)
            c.values[i] = inverse_one(c.values[i], s, params.mode);
    }
    return TimeTable(std::move(cols));
}

Eigen::MatrixXd denormalize_matrix(const Eigen::MatrixXd& values,
                                   const std::vector<std::string>& names,
                                   const NormalizationParams& params) {
    if (values.cols() != static_cast<Eigen::Index>(names.size()))
        throw std::invalid_argument("denormalize_matrix: column count mismatch");
    Eigen::MatrixXd out(values.rows(), values.cols());
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
        const ColumnStats& s = params.stats_for(names[static_cast<std::size_t>(j)]);
        for (Eigen::Index i = 0; i < values.rows(); ++i)
            out(i, j) = inverse_one(values(i, j), s, params.mode);
    }
    return out;
}

}  // namespace hcast
