#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "hcast/decompose.hpp"
#include "hcast/rng.hpp"

namespace hcast {

enum class VariantKind { Linear, NLinear, DLinear, DELinear };

std::string to_string(VariantKind kind);
VariantKind variant_kind_from_string(const std::string& text);

struct LinearWeights {
    Eigen::MatrixXd W;  // out_dim x in_dim
    Eigen::VectorXd b;  // out_dim, or empty when bias is disabled

    bool has_bias() const { return b.size() > 0; }
};

// One of the four linear forecasters.
//
// Linear / NLinear / DLinear apply a T x S weight matrix independently to
// each target channel (one shared matrix across channels); DLinear keeps
// separate matrices for the seasonal (`main`) and trend (`trend_w`) parts.
// DELinear is the only cross-channel variant: it maps the flattened embedded
// window (S*d values, time-major) to the flattened forecast (T*C values).
struct ModelVariant {
    VariantKind kind = VariantKind::Linear;
    LinearWeights main;
    LinearWeights trend_w;  // DLinear only
    Eigen::Index lookback = 0;      // S
    Eigen::Index horizon = 0;       // T
    Eigen::Index in_channels = 0;   // C for channel-independent kinds, d for DELinear
    Eigen::Index out_channels = 0;  // forecast channels C
    Eigen::Index noise_dim = 0;
    std::vector<ChannelInfo> channel_map;  // required for DELinear

    // Flattened per-forward input length, noise columns included.
    Eigen::Index input_len() const {
        const Eigen::Index base = kind == VariantKind::DELinear ? lookback * in_channels : lookback;
        return base + noise_dim;
    }
    bool channel_independent() const { return kind != VariantKind::DELinear; }
};

// Weights drawn uniformly from [-1/sqrt(L), 1/sqrt(L)], L = flattened input
// length; biases likewise (the usual linear-layer convention).
ModelVariant make_variant(VariantKind kind, Eigen::Index lookback, Eigen::Index horizon,
                          Eigen::Index in_channels, Eigen::Index out_channels, bool bias,
                          Rng& rng, std::vector<ChannelInfo> channel_map = {});

// Appends `noise_dim` zero-initialized input columns to every weight matrix,
// so the widened model reproduces the original mapping when the noise is 0.
void widen_for_noise(ModelVariant& model, Eigen::Index noise_dim);

// --- single-sample forwards ---------------------------------------------

// y = W x + b
Eigen::VectorXd forward_linear(const LinearWeights& w, const Eigen::VectorXd& x);

// y = W (x - x_last) + b + x_last, x_last broadcast from the final element.
Eigen::VectorXd forward_nlinear(const LinearWeights& w, const Eigen::VectorXd& x);

// y = W_s x_s + W_tr x_tr (+ biases)
Eigen::VectorXd forward_dlinear(const LinearWeights& ws, const LinearWeights& wtr,
                                const Eigen::VectorXd& xs, const Eigen::VectorXd& xtr);

// window is S x d; the result is T x out_channels.
Eigen::MatrixXd forward_delinear(const ModelVariant& m, const Eigen::MatrixXd& window);

// --- batched interface ----------------------------------------------------
//
// Channel-independent kinds: x is L x (B*C) with one column per (sample,
// channel) pair, sample-major; targets are T x (B*C). DELinear: x is
// (S*d + noise) x B and targets (T*C) x B, rows time-major (t*C + c).
struct VariantBatch {
    Eigen::MatrixXd x;
    Eigen::MatrixXd x_trend;  // DLinear only
    Eigen::MatrixXd y;
    Eigen::Index batch = 0;
};

Eigen::MatrixXd forward(const ModelVariant& m, const VariantBatch& batch);

struct VariantGrads {
    Eigen::MatrixXd dW_main;
    Eigen::VectorXd db_main;
    Eigen::MatrixXd dW_trend;
    Eigen::VectorXd db_trend;
};

// Parameter gradients given dLoss/dPrediction (same shape as forward()).
VariantGrads backward(const ModelVariant& m, const VariantBatch& batch,
                      const Eigen::MatrixXd& upstream);

// Gradients of the per-sample MSE loss; x/prediction/target shaped like one
// batch entry of the batched interface.
VariantGrads backward_mse(const ModelVariant& m, const VariantBatch& sample,
                          const Eigen::MatrixXd& prediction);

// mean((pred - y)^2) over every entry; equals the batch mean of per-sample
// MSE for both batch layouts.
double mse_loss(const Eigen::MatrixXd& prediction, const Eigen::MatrixXd& target);
Eigen::MatrixXd mse_upstream(const Eigen::MatrixXd& prediction, const Eigen::MatrixXd& target);

}  // namespace hcast
