#include "hcast/linear_models.hpp"

#include <cmath>
#include <stdexcept>

namespace hcast {

std::string to_string(VariantKind kind) {
    switch (kind) {
        case VariantKind::Linear: return "Linear";
        case VariantKind::NLinear: return "NLinear";
        case VariantKind::DLinear: return "DLinear";
        case VariantKind::DELinear: return "DELinear";
    }
    return "Linear";
}

VariantKind variant_kind_from_string(const std::string& text) {
    if (text == "Linear") return VariantKind::Linear;
    if (text == "NLinear") return VariantKind::NLinear;
    if (text == "DLinear") return VariantKind::DLinear;
    if (text == "DELinear") return VariantKind::DELinear;
    throw std::invalid_argument("unknown model variant '" + text + "'");
}

namespace {

LinearWeights init_weights(Eigen::Index out_dim, Eigen::Index in_dim, bool bias, Rng& rng) {
    LinearWeights w;
    w.W.resize(out_dim, in_dim);
    const double bound = 1.0 / std::sqrt(static_cast<double>(in_dim));
    for (Eigen::Index i = 0; i < out_dim; ++i)
        for (Eigen::Index j = 0; j < in_dim; ++j) w.W(i, j) = rng.uniform(-bound, bound);
    if (bias) {
        w.b.resize(out_dim);
        for (Eigen::Index i = 0; i < out_dim; ++i) w.b[i] = rng.uniform(-bound, bound);
    }
    return w;
}

void check_in_dim(const LinearWeights& w, Eigen::Index got, const char* op) {
    if (w.W.cols() != got)
        throw std::invalid_argument(std::string(op) + ": input length " + std::to_string(got) +
                                    " does not match weight columns " + std::to_string(w.W.cols()));
}

}  // namespace

ModelVariant make_variant(VariantKind kind, Eigen::Index lookback, Eigen::Index horizon,
                          Eigen::Index in_channels, Eigen::Index out_channels, bool bias, Rng& rng,
                          std::vector<ChannelInfo> channel_map) {
    if (lookback < 1 || horizon < 1)
        throw std::invalid_argument("make_variant: lookback and horizon must be positive");
    if (in_channels < 1 || out_channels < 1)
        throw std::invalid_argument("make_variant: channel counts must be positive");
    if (kind == VariantKind::DELinear && channel_map.empty())
        throw std::invalid_argument("make_variant: DELinear requires an embedding channel map");

    ModelVariant m;
    m.kind = kind;
    m.lookback = lookback;
    m.horizon = horizon;
    m.in_channels = in_channels;
    m.out_channels = out_channels;
    m.channel_map = std::move(channel_map);

    const Eigen::Index in_dim = kind == VariantKind::DELinear ? lookback * in_channels : lookback;
    const Eigen::Index out_dim =
        kind == VariantKind::DELinear ? horizon * out_channels : horizon;
    m.main = init_weights(out_dim, in_dim, bias, rng);
    if (kind == VariantKind::DLinear) m.trend_w = init_weights(out_dim, in_dim, bias, rng);
    return m;
}

void widen_for_noise(ModelVariant& model, Eigen::Index noise_dim) {
    if (noise_dim < 0) throw std::invalid_argument("widen_for_noise: noise_dim must be >= 0");
    if (noise_dim == 0) return;
    auto widen = [&](LinearWeights& w) {
        if (w.W.size() == 0) return;
        Eigen::MatrixXd wide = Eigen::MatrixXd::Zero(w.W.rows(), w.W.cols() + noise_dim);
        wide.leftCols(w.W.cols()) = w.W;
        w.W = std::move(wide);
    };
    widen(model.main);
    widen(model.trend_w);
    model.noise_dim += noise_dim;
}

Eigen::VectorXd forward_linear(const LinearWeights& w, const Eigen::VectorXd& x) {
    check_in_dim(w, x.size(), "forward_linear");
    Eigen::VectorXd y = w.W * x;
    if (w.has_bias()) y += w.b;
    return y;
}

Eigen::VectorXd forward_nlinear(const LinearWeights& w, const Eigen::VectorXd& x) {
    check_in_dim(w, x.size(), "forward_nlinear");
    const double x_last = x[x.size() - 1];
    Eigen::VectorXd y = w.W * (x.array() - x_last).matrix();
    if (w.has_bias()) y += w.b;
    y.array() += x_last;
    return y;
}

Eigen::VectorXd forward_dlinear(const LinearWeights& ws, const LinearWeights& wtr,
                                const Eigen::VectorXd& xs, const Eigen::VectorXd& xtr) {
    if (xs.size() != xtr.size())
        throw std::invalid_argument("forward_dlinear: seasonal/trend length mismatch");
    check_in_dim(ws, xs.size(), "forward_dlinear");
    check_in_dim(wtr, xtr.size(), "forward_dlinear");
    Eigen::VectorXd y = ws.W * xs + wtr.W * xtr;
    if (ws.has_bias()) y += ws.b;
    if (wtr.has_bias()) y += wtr.b;
    return y;
}

Eigen::MatrixXd forward_delinear(const ModelVariant& m, const Eigen::MatrixXd& window) {
    if (m.kind != VariantKind::DELinear)
        throw std::invalid_argument("forward_delinear: wrong variant kind");
    if (m.channel_map.empty())
        throw std::invalid_argument("forward_delinear: embedding channel map missing");
    if (window.rows() != m.lookback || window.cols() != m.in_channels)
        throw std::invalid_argument("forward_delinear: window is " + std::to_string(window.rows()) +
                                    "x" + std::to_string(window.cols()) + ", expected " +
                                    std::to_string(m.lookback) + "x" +
                                    std::to_string(m.in_channels));
    // time-major flattening: element (t, c) lands at t*d + c
    Eigen::VectorXd flat(m.lookback * m.in_channels + m.noise_dim);
    for (Eigen::Index t = 0; t < m.lookback; ++t)
        flat.segment(t * m.in_channels, m.in_channels) = window.row(t).transpose();
    flat.tail(m.noise_dim).setZero();
    const Eigen::VectorXd y = forward_linear(m.main, flat);
    Eigen::MatrixXd out(m.horizon, m.out_channels);
    for (Eigen::Index t = 0; t < m.horizon; ++t)
        out.row(t) = y.segment(t * m.out_channels, m.out_channels).transpose();
    return out;
}

Eigen::MatrixXd forward(const ModelVariant& m, const VariantBatch& batch) {
    const Eigen::MatrixXd& x = batch.x;
    if (x.rows() != m.input_len())
        throw std::invalid_argument("forward: input rows " + std::to_string(x.rows()) +
                                    " do not match model input length " +
                                    std::to_string(m.input_len()));
    switch (m.kind) {
        case VariantKind::Linear:
        case VariantKind::DELinear: {
            Eigen::MatrixXd y = m.main.W * x;
            if (m.main.has_bias()) y.colwise() += m.main.b;
            return y;
        }
        case VariantKind::NLinear: {
            // subtract the last raw value per column; noise rows stay as-is
            const Eigen::RowVectorXd x_last = x.row(m.lookback - 1);
            Eigen::MatrixXd centered = x;
            centered.topRows(m.lookback).rowwise() -= x_last;
            Eigen::MatrixXd y = m.main.W * centered;
            if (m.main.has_bias()) y.colwise() += m.main.b;
            y.rowwise() += x_last;
            return y;
        }
        case VariantKind::DLinear: {
            if (batch.x_trend.rows() != x.rows() || batch.x_trend.cols() != x.cols())
                throw std::invalid_argument("forward: DLinear trend input shape mismatch");
            Eigen::MatrixXd y = m.main.W * x + m.trend_w.W * batch.x_trend;
            if (m.main.has_bias()) y.colwise() += m.main.b;
            if (m.trend_w.has_bias()) y.colwise() += m.trend_w.b;
            return y;
        }
    }
    throw std::logic_error("forward: unreachable");
}

VariantGrads backward(const ModelVariant& m, const VariantBatch& batch,
                      const Eigen::MatrixXd& upstream) {
    if (upstream.cols() != batch.x.cols())
        throw std::invalid_argument("backward: upstream column count mismatch");
    VariantGrads g;
    switch (m.kind) {
        case VariantKind::Linear:
        case VariantKind::DELinear:
            g.dW_main = upstream * batch.x.transpose();
            if (m.main.has_bias()) g.db_main = upstream.rowwise().sum();
            break;
        case VariantKind::NLinear: {
            const Eigen::RowVectorXd x_last = batch.x.row(m.lookback - 1);
            Eigen::MatrixXd centered = batch.x;
            centered.topRows(m.lookback).rowwise() -= x_last;
            g.dW_main = upstream * centered.transpose();
            if (m.main.has_bias()) g.db_main = upstream.rowwise().sum();
            break;
        }
        case VariantKind::DLinear:
            g.dW_main = upstream * batch.x.transpose();
            g.dW_trend = upstream * batch.x_trend.transpose();
            if (m.main.has_bias()) g.db_main = upstream.rowwise().sum();
            if (m.trend_w.has_bias()) g.db_trend = upstream.rowwise().sum();
            break;
    }
    return g;
}

VariantGrads backward_mse(const ModelVariant& m, const VariantBatch& sample,
                          const Eigen::MatrixXd& prediction) {
    return backward(m, sample, mse_upstream(prediction, sample.y));
}

double mse_loss(const Eigen::MatrixXd& prediction, const Eigen::MatrixXd& target) {
    if (prediction.rows() != target.rows() || prediction.cols() != target.cols())
        throw std::invalid_argument("mse_loss: shape mismatch");
    return (prediction - target).array().square().mean();
}

Eigen::MatrixXd mse_upstream(const Eigen::MatrixXd& prediction, const Eigen::MatrixXd& target) {
    if (prediction.rows() != target.rows() || prediction.cols() != target.cols())
        throw std::invalid_argument("mse_upstream: shape mismatch");
    return 2.0 * (prediction - target) / static_cast<double>(prediction.size());
}

}  // namespace hcast
