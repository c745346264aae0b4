#include "hcast/decompose.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hcast {

Eigen::VectorXd extract_trend(const Eigen::Ref<const Eigen::VectorXd>& x, int kernel) {
    if (kernel < 1) throw std::invalid_argument("extract_trend: kernel must be >= 1");
    if (kernel % 2 == 0) throw std::invalid_argument("extract_trend: kernel must be odd");
    const Eigen::Index n = x.size();
    if (n < 1) throw std::invalid_argument("extract_trend: empty series");
    if (kernel == 1) return x;

    const Eigen::Index half = (kernel - 1) / 2;

    // prefix sums; the replicated edges contribute multiples of x[0] / x[n-1]
    Eigen::VectorXd prefix(n + 1);
    prefix[0] = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + x[i];

    Eigen::VectorXd out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index lo = i - half;
        const Eigen::Index hi = i + half;  // inclusive
        const Eigen::Index lo_clamped = std::max<Eigen::Index>(lo, 0);
        const Eigen::Index hi_clamped = std::min<Eigen::Index>(hi, n - 1);
        double sum = prefix[hi_clamped + 1] - prefix[lo_clamped];
        sum += static_cast<double>(lo_clamped - lo) * x[0];
        sum += static_cast<double>(hi - hi_clamped) * x[n - 1];
        out[i] = sum / static_cast<double>(kernel);
    }
    return out;
}

Eigen::MatrixXd extract_trend(const Eigen::Ref<const Eigen::MatrixXd>& x, int kernel) {
    Eigen::MatrixXd out(x.rows(), x.cols());
    for (Eigen::Index j = 0; j < x.cols(); ++j) out.col(j) = extract_trend(x.col(j), kernel);
    return out;
}

Eigen::VectorXd extract_seasonality(const Eigen::Ref<const Eigen::VectorXd>& x,
                                    const Eigen::Ref<const Eigen::VectorXd>& trend) {
    if (x.size() != trend.size())
        throw std::invalid_argument("extract_seasonality: length mismatch (" +
                                    std::to_string(x.size()) + " vs " +
                                    std::to_string(trend.size()) + ")");
    return x - trend;
}

DecomposedSeries decompose(const Eigen::Ref<const Eigen::MatrixXd>& x, int kernel) {
    DecomposedSeries d;
    d.kernel = kernel;
    d.trend = extract_trend(x, kernel);
    d.seasonal = x - d.trend;
    return d;
}

Eigen::RowVectorXd temporal_features_at(Timestamp ts) {
    const CivilTime c = civil_from_timestamp(ts);
    Eigen::RowVectorXd f(kTemporalChannels);
    f[0] = static_cast<double>(day_of_week(ts)) / 6.0;
    f[1] = static_cast<double>(c.day) / 31.0;
    f[2] = static_cast<double>(c.month) / 12.0;
    f[3] = static_cast<double>(c.hour) / 23.0;
    f[4] = static_cast<double>(c.minute) / 59.0;
    f[5] = static_cast<double>((c.month - 1) / 3 + 1) / 4.0;
    return f;
}

Eigen::MatrixXd extract_temporal(const std::vector<Timestamp>& stamps) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(stamps.size()), kTemporalChannels);
    for (std::size_t i = 0; i < stamps.size(); ++i)
        out.row(static_cast<Eigen::Index>(i)) = temporal_features_at(stamps[i]);
    return out;
}

std::vector<std::string> build_vocabulary(const std::vector<std::string>& values) {
    std::vector<std::string> vocab;
    for (const std::string& v : values)
        if (std::find(vocab.begin(), vocab.end(), v) == vocab.end()) vocab.push_back(v);
    return vocab;
}

Eigen::RowVectorXd encode_one(const std::string& value, const std::vector<std::string>& vocabulary) {
    if (vocabulary.empty()) throw std::invalid_argument("encode_one: empty vocabulary");
    const auto it = std::find(vocabulary.begin(), vocabulary.end(), value);
    if (vocabulary.size() <= kOneHotMaxVocab) {
        Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(static_cast<Eigen::Index>(vocabulary.size()));
        if (it != vocabulary.end()) row[it - vocabulary.begin()] = 1.0;
        return row;  // unseen value keeps the all-zero row
    }
    Eigen::RowVectorXd row(1);
    const double denom = static_cast<double>(vocabulary.size() - 1);
    // unseen ordinal values clip to 1.0
    row[0] = it == vocabulary.end() ? 1.0 : static_cast<double>(it - vocabulary.begin()) / denom;
    return row;
}

CategoricalEncoding encode_categoricals(const std::vector<std::string>& values,
                                        const std::vector<std::string>& vocabulary) {
    if (vocabulary.empty()) throw std::invalid_argument("encode_categoricals: empty vocabulary");
    CategoricalEncoding enc;
    enc.vocabulary = vocabulary;
    enc.mode = vocabulary.size() <= kOneHotMaxVocab ? EncodingMode::one_hot : EncodingMode::ordinal;
    const Eigen::Index width =
        enc.mode == EncodingMode::one_hot ? static_cast<Eigen::Index>(vocabulary.size()) : 1;
    enc.encoded.resize(static_cast<Eigen::Index>(values.size()), width);
    for (std::size_t i = 0; i < values.size(); ++i)
        enc.encoded.row(static_cast<Eigen::Index>(i)) = encode_one(values[i], vocabulary);
    return enc;
}

std::string to_string(ChannelRole role) {
    switch (role) {
        case ChannelRole::trend: return "trend";
        case ChannelRole::seasonal: return "seasonal";
        case ChannelRole::cat: return "cat";
        case ChannelRole::temporal: return "temporal";
    }
    return "trend";
}

ChannelRole channel_role_from_string(const std::string& text) {
    if (text == "trend") return ChannelRole::trend;
    if (text == "seasonal") return ChannelRole::seasonal;
    if (text == "cat") return ChannelRole::cat;
    if (text == "temporal") return ChannelRole::temporal;
    throw std::invalid_argument("unknown channel role '" + text + "'");
}

EmbeddingSpec make_embedding_spec(const TimeTable& train, int kernel) {
    EmbeddingSpec spec;
    spec.kernel = kernel;
    for (const std::size_t j : train.numeric_indices())
        spec.numeric_columns.push_back(train.columns()[j].name);
    for (const std::size_t j : train.categorical_indices()) {
        const Column& c = train.columns()[j];
        spec.vocabularies.emplace_back(c.name, build_vocabulary(c.categories));
    }
    return spec;
}

DecomposedEmbedding build_embedding(const TimeTable& t, const EmbeddingSpec& spec) {
    const Eigen::Index n = t.rows();
    const Eigen::Index f = static_cast<Eigen::Index>(spec.numeric_columns.size());

    std::vector<CategoricalEncoding> encodings;
    Eigen::Index cat_width = 0;
    for (const auto& [name, vocab] : spec.vocabularies) {
        const Column& c = t.column(name);
        if (c.kind != ColumnKind::categorical)
            throw std::invalid_argument("build_embedding: column '" + name + "' is not categorical");
        encodings.push_back(encode_categoricals(c.categories, vocab));
        cat_width += encodings.back().encoded.cols();
    }

    const Eigen::Index d = 2 * f + cat_width + kTemporalChannels;
    DecomposedEmbedding emb;
    emb.numeric_count = f;
    emb.values.resize(n, d);
    emb.channels.reserve(static_cast<std::size_t>(d));

    Eigen::Index col = 0;
    const Eigen::MatrixXd numeric = t.numeric_matrix(spec.numeric_columns);
    const DecomposedSeries parts = decompose(numeric, spec.kernel);
    for (Eigen::Index j = 0; j < f; ++j) {
        emb.values.col(col++) = parts.trend.col(j);
        emb.channels.push_back({spec.numeric_columns[static_cast<std::size_t>(j)], ChannelRole::trend});
    }
    for (Eigen::Index j = 0; j < f; ++j) {
        emb.values.col(col++) = parts.seasonal.col(j);
        emb.channels.push_back(
            {spec.numeric_columns[static_cast<std::size_t>(j)], ChannelRole::seasonal});
    }
    for (std::size_t k = 0; k < encodings.size(); ++k) {
        const auto& enc = encodings[k];
        for (Eigen::Index j = 0; j < enc.encoded.cols(); ++j) {
            emb.values.col(col++) = enc.encoded.col(j);
            emb.channels.push_back({spec.vocabularies[k].first, ChannelRole::cat});
        }
    }
    const Eigen::MatrixXd temporal = extract_temporal(t.timestamps());
    const std::string& dt_name = t.columns()[t.datetime_index()].name;
    for (Eigen::Index j = 0; j < kTemporalChannels; ++j) {
        emb.values.col(col++) = temporal.col(j);
        emb.channels.push_back({dt_name, ChannelRole::temporal});
    }
    return emb;
}

DecomposedEmbedding build_embedding(const TimeTable& t, int kernel) {
    return build_embedding(t, make_embedding_spec(t, kernel));
}

std::string serialize_channel_map(const std::vector<ChannelInfo>& channels) {
    std::ostringstream out;
    for (std::size_t i = 0; i < channels.size(); ++i)
        out << i << ":" << channels[i].source << ":" << to_string(channels[i].role) << "\n";
    return out.str();
}

std::vector<ChannelInfo> parse_channel_map(const std::string& text) {
    std::vector<ChannelInfo> channels;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t p1 = line.find(':');
        const std::size_t p2 = line.rfind(':');
        if (p1 == std::string::npos || p2 == p1)
            throw std::invalid_argument("parse_channel_map: bad line '" + line + "'");
        const std::size_t index = std::stoul(line.substr(0, p1));
        if (index != channels.size())
            throw std::invalid_argument("parse_channel_map: non-sequential index in '" + line + "'");
        channels.push_back({line.substr(p1 + 1, p2 - p1 - 1),
                            channel_role_from_string(line.substr(p2 + 1))});
    }
    return channels;
}

}  // namespace hcast
