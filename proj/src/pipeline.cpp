#include "hcast/pipeline.hpp"

#include <stdexcept>

namespace hcast {

WindowDataset build_window_dataset(const TimeTable& normalized_split, const EmbeddingSpec& spec,
                                   const std::vector<std::string>& targets, Eigen::Index lookback,
                                   Eigen::Index horizon, Eigen::Index stride) {
    WindowDataset ds;
    ds.target_columns = targets.empty() ? spec.numeric_columns : targets;
    ds.raw = normalized_split.numeric_matrix(ds.target_columns);

    const DecomposedSeries parts = decompose(ds.raw, spec.kernel);
    ds.trend = parts.trend;
    ds.seasonal = parts.seasonal;

    DecomposedEmbedding emb = build_embedding(normalized_split, spec);
    ds.embedded = std::move(emb.values);
    ds.channel_map = std::move(emb.channels);

    ds.lookback = lookback;
    ds.horizon = horizon;
    ds.starts = window_starts(ds.raw.rows(), lookback, horizon, stride);
    return ds;
}

namespace {

void fill_noise(Eigen::MatrixXd& block, Rng* rng) {
    if (rng == nullptr) {
        block.setZero();
        return;
    }
    for (Eigen::Index j = 0; j < block.cols(); ++j)
        for (Eigen::Index i = 0; i < block.rows(); ++i) block(i, j) = rng->normal();
}

// Channel-independent input: columns are (sample, channel) pairs,
// sample-major; one shared noise vector per sample.
Eigen::MatrixXd gather_channelwise(const Eigen::MatrixXd& series,
                                   const std::vector<Eigen::Index>& ids, Eigen::Index offset,
                                   Eigen::Index len, Eigen::Index noise_dim,
                                   const Eigen::MatrixXd* noise) {
    const Eigen::Index channels = series.cols();
    Eigen::MatrixXd out(len + noise_dim, static_cast<Eigen::Index>(ids.size()) * channels);
    for (std::size_t b = 0; b < ids.size(); ++b) {
        const Eigen::Index start = ids[b] + offset;
        for (Eigen::Index c = 0; c < channels; ++c) {
            Eigen::Index col = static_cast<Eigen::Index>(b) * channels + c;
            out.col(col).head(len) = series.col(c).segment(start, len);
            if (noise_dim > 0) out.col(col).tail(noise_dim) = noise->col(static_cast<Eigen::Index>(b));
        }
    }
    return out;
}

}  // namespace

VariantBatch gather(const WindowDataset& ds, VariantKind kind,
                    const std::vector<Eigen::Index>& sample_ids, Eigen::Index noise_dim,
                    Rng* noise_rng) {
    if (sample_ids.empty()) throw std::invalid_argument("gather: empty sample set");
    for (const Eigen::Index id : sample_ids)
        if (id < 0 || id >= ds.count())
            throw std::out_of_range("gather: sample index " + std::to_string(id) +
                                    " out of range");
    if ((kind == VariantKind::DLinear) && !ds.has_decomposition())
        throw std::invalid_argument("gather: DLinear requires decomposed inputs");
    if ((kind == VariantKind::DELinear) && !ds.has_embedding())
        throw std::invalid_argument("gather: DELinear requires an embedded representation");

    const Eigen::Index B = static_cast<Eigen::Index>(sample_ids.size());
    const Eigen::Index S = ds.lookback;
    const Eigen::Index T = ds.horizon;
    const Eigen::Index C = ds.channels();

    Eigen::MatrixXd noise;
    if (noise_dim > 0) {
        noise.resize(noise_dim, B);
        fill_noise(noise, noise_rng);
    }

    VariantBatch batch;
    batch.batch = B;

    if (kind == VariantKind::DELinear) {
        const Eigen::Index d = ds.embed_width();
        batch.x.resize(S * d + noise_dim, B);
        batch.y.resize(T * C, B);
        for (Eigen::Index b = 0; b < B; ++b) {
            const Eigen::Index k = ds.starts[static_cast<std::size_t>(sample_ids[static_cast<std::size_t>(b)])];
            for (Eigen::Index t = 0; t < S; ++t)
                batch.x.col(b).segment(t * d, d) = ds.embedded.row(k + t).transpose();
            if (noise_dim > 0) batch.x.col(b).tail(noise_dim) = noise.col(b);
            for (Eigen::Index t = 0; t < T; ++t)
                batch.y.col(b).segment(t * C, C) = ds.raw.row(k + S + t).transpose();
        }
        return batch;
    }

    std::vector<Eigen::Index> starts(sample_ids.size());
    for (std::size_t b = 0; b < sample_ids.size(); ++b)
        starts[b] = ds.starts[static_cast<std::size_t>(sample_ids[b])];

    const Eigen::MatrixXd* noise_ptr = noise_dim > 0 ? &noise : nullptr;
    switch (kind) {
        case VariantKind::Linear:
        case VariantKind::NLinear:
            batch.x = gather_channelwise(ds.raw, starts, 0, S, noise_dim, noise_ptr);
            break;
        case VariantKind::DLinear:
            batch.x = gather_channelwise(ds.seasonal, starts, 0, S, noise_dim, noise_ptr);
            batch.x_trend = gather_channelwise(ds.trend, starts, 0, S, noise_dim, noise_ptr);
            break;
        default: break;
    }
    batch.y = gather_channelwise(ds.raw, starts, S, T, 0, nullptr);
    return batch;
}

Eigen::Index condition_length(const WindowDataset& ds, VariantKind kind) {
    switch (kind) {
        case VariantKind::Linear:
        case VariantKind::NLinear: return ds.lookback * ds.channels();
        case VariantKind::DLinear: return 2 * ds.lookback * ds.channels();
        case VariantKind::DELinear: return ds.lookback * ds.embed_width();
    }
    return 0;
}

namespace {

void flatten_window(const Eigen::MatrixXd& series, Eigen::Index start, Eigen::Index len,
                    Eigen::Ref<Eigen::VectorXd> out) {
    const Eigen::Index c = series.cols();
    for (Eigen::Index t = 0; t < len; ++t)
        out.segment(t * c, c) = series.row(start + t).transpose();
}

}  // namespace

Eigen::MatrixXd flatten_condition(const WindowDataset& ds, VariantKind kind,
                                  const std::vector<Eigen::Index>& sample_ids) {
    const Eigen::Index B = static_cast<Eigen::Index>(sample_ids.size());
    const Eigen::Index S = ds.lookback;
    Eigen::MatrixXd cond(condition_length(ds, kind), B);
    for (Eigen::Index b = 0; b < B; ++b) {
        const Eigen::Index k = ds.starts[static_cast<std::size_t>(sample_ids[static_cast<std::size_t>(b)])];
        switch (kind) {
            case VariantKind::Linear:
            case VariantKind::NLinear:
                flatten_window(ds.raw, k, S, cond.col(b));
                break;
            case VariantKind::DLinear: {
                const Eigen::Index half = S * ds.channels();
                flatten_window(ds.seasonal, k, S, cond.col(b).head(half));
                flatten_window(ds.trend, k, S, cond.col(b).tail(half));
                break;
            }
            case VariantKind::DELinear:
                flatten_window(ds.embedded, k, S, cond.col(b));
                break;
        }
    }
    return cond;
}

Eigen::MatrixXd flatten_candidate(const Eigen::MatrixXd& values, VariantKind kind,
                                  Eigen::Index horizon, Eigen::Index channels,
                                  Eigen::Index batch) {
    if (kind == VariantKind::DELinear) return values;  // already (T*C) x B
    if (values.rows() != horizon || values.cols() != batch * channels)
        throw std::invalid_argument("flatten_candidate: unexpected shape");
    Eigen::MatrixXd flat(horizon * channels, batch);
    for (Eigen::Index b = 0; b < batch; ++b)
        for (Eigen::Index t = 0; t < horizon; ++t)
            for (Eigen::Index c = 0; c < channels; ++c)
                flat(t * channels + c, b) = values(t, b * channels + c);
    return flat;
}

Eigen::MatrixXd unflatten_candidate(const Eigen::MatrixXd& flat, VariantKind kind,
                                    Eigen::Index horizon, Eigen::Index channels,
                                    Eigen::Index batch) {
    if (kind == VariantKind::DELinear) return flat;
    if (flat.rows() != horizon * channels || flat.cols() != batch)
        throw std::invalid_argument("unflatten_candidate: unexpected shape");
    Eigen::MatrixXd values(horizon, batch * channels);
    for (Eigen::Index b = 0; b < batch; ++b)
        for (Eigen::Index t = 0; t < horizon; ++t)
            for (Eigen::Index c = 0; c < channels; ++c)
                values(t, b * channels + c) = flat(t * channels + c, b);
    return values;
}

}  // namespace hcast
