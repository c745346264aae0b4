#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "hcast/table.hpp"

namespace hcast {

// Centered moving average of width `kernel` (odd) with edge replication, so
// the output keeps the input length. kernel = 1 returns the input.
Eigen::VectorXd extract_trend(const Eigen::Ref<const Eigen::VectorXd>& x, int kernel);
Eigen::MatrixXd extract_trend(const Eigen::Ref<const Eigen::MatrixXd>& x, int kernel);

Eigen::VectorXd extract_seasonality(const Eigen::Ref<const Eigen::VectorXd>& x,
                                    const Eigen::Ref<const Eigen::VectorXd>& trend);

struct DecomposedSeries {
    Eigen::MatrixXd trend;     // N x f
    Eigen::MatrixXd seasonal;  // N x f
    int kernel = 25;
};

// trend + seasonal reconstructs the input exactly.
DecomposedSeries decompose(const Eigen::Ref<const Eigen::MatrixXd>& x, int kernel);

// Six per-timestep calendar channels scaled into [0,1]:
// day-of-week/6, day-of-month/31, month/12, hour/23, minute/59, quarter/4.
Eigen::MatrixXd extract_temporal(const std::vector<Timestamp>& stamps);
Eigen::RowVectorXd temporal_features_at(Timestamp ts);
inline constexpr int kTemporalChannels = 6;

enum class EncodingMode { one_hot, ordinal };
inline constexpr std::size_t kOneHotMaxVocab = 10;

struct CategoricalEncoding {
    std::vector<std::string> vocabulary;  // ordered distinct training values
    EncodingMode mode = EncodingMode::one_hot;
    Eigen::MatrixXd encoded;  // N x width
};

// Distinct values in first-seen order.
std::vector<std::string> build_vocabulary(const std::vector<std::string>& values);

// One-hot when |vocab| <= 10, otherwise a single ordinal channel with value
// index/(|vocab|-1). Unseen values: all-zero one-hot row / ordinal 1.0.
CategoricalEncoding encode_categoricals(const std::vector<std::string>& values,
                                        const std::vector<std::string>& vocabulary);
Eigen::RowVectorXd encode_one(const std::string& value, const std::vector<std::string>& vocabulary);

enum class ChannelRole { trend, seasonal, cat, temporal };

std::string to_string(ChannelRole role);
ChannelRole channel_role_from_string(const std::string& text);

struct ChannelInfo {
    std::string source;  // column that produced this channel
    ChannelRole role;
};

// Captures everything needed to embed a table the same way the training
// split was embedded: kernel, column order, and categorical vocabularies.
struct EmbeddingSpec {
    int kernel = 25;
    std::vector<std::string> numeric_columns;
    std::vector<std::pair<std::string, std::vector<std::string>>> vocabularies;
};

EmbeddingSpec make_embedding_spec(const TimeTable& train, int kernel);

// Per-timestep vectors: trend channels, seasonal channels, encoded
// categoricals, temporal features, concatenated in declared column order.
struct DecomposedEmbedding {
    Eigen::MatrixXd values;  // N x d
    std::vector<ChannelInfo> channels;
    Eigen::Index numeric_count = 0;  // f

    Eigen::Index width() const { return values.cols(); }
};

DecomposedEmbedding build_embedding(const TimeTable& t, const EmbeddingSpec& spec);
DecomposedEmbedding build_embedding(const TimeTable& t, int kernel);

// One line per channel: `<index>:<source-column>:<role>`.
std::string serialize_channel_map(const std::vector<ChannelInfo>& channels);
std::vector<ChannelInfo> parse_channel_map(const std::string& text);

}  // namespace hcast
